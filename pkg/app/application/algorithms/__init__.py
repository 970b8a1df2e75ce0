"""Algorithmes de résolution : plan coupant, branch-and-cut, glouton et énumération."""
