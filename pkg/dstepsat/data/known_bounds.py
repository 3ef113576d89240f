#!/usr/bin/env python3
"""Known values of Delta(d, n) used to seed bound propagation"""

# Values taken from the literature. "lo"/"hi" of None means no bound on that side.
LITERATURE_BOUNDS = [
    {"d": 4, "n": 8, "lo": 4, "hi": 4, "source": "known value: Delta(4,8) = 4"},
    {"d": 4, "n": 9, "lo": 5, "hi": 5, "source": "known value: Delta(4,9) = 5"},
    {"d": 4, "n": 10, "lo": 5, "hi": 5, "source": "Goodey: Delta(4,10) = 5"},
    {"d": 5, "n": 10, "lo": 5, "hi": 5, "source": "known value: Delta(5,10) = 5"},
    {"d": 5, "n": 11, "lo": 6, "hi": 6, "source": "Goodey: Delta(5,11) = 6"},
    {"d": 6, "n": 13, "lo": None, "hi": 9, "source": "Goodey: Delta(6,13) <= 9"},
    {"d": 7, "n": 14, "lo": None, "hi": 10, "source": "Goodey: Delta(7,14) <= 10"},
    {"d": 4, "n": 11, "lo": 6, "hi": None, "source": "known lower bound: Delta(4,11) >= 6"},
    {"d": 5, "n": 12, "lo": 7, "hi": None, "source": "known lower bound: Delta(5,12) >= 7"},
    {"d": 6, "n": 13, "lo": 7, "hi": None, "source": "known lower bound: Delta(6,13) >= 7"},
]

# Results established by the SAT refutations of this toolkit.
COMPUTED_BOUNDS = [
    {"d": 6, "n": 12, "lo": None, "hi": 6, "source": "computed: no geodesic 7-path in a (6,12) matroid polytope"},
    {"d": 4, "n": 11, "lo": None, "hi": 6, "source": "computed: no geodesic 7-path in a (4,11) matroid polytope"},
]
