# Test package marker (helps reliable imports across tools/runners).






