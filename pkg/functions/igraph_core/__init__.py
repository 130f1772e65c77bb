"""i-graph library: seed graphs, i-set enumeration, token-slide reconfiguration graphs."""
