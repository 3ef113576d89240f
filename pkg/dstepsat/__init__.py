#!/usr/bin/env python3
"""
d-step SAT toolkit

Refutes geodesic facet paths in matroid polytopes:
- enumeration of candidate path complexes (pivot sequences with revisits)
- chirotope-axiom CNF encodings with path and shortcut constraints
- lazy (cutting plane) and eager SAT proofs of the diameter bounds
- propagation of the known Delta(d, n) bounds
"""

__version__ = "1.0.0"
