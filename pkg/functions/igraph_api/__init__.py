"""i-graph API (Cloud Functions HTTP)."""
