#!/usr/bin/env python3
"""Published candidate sets, kept as fixtures for enumeration checks"""

# The ten single-revisit pivot sequences of length 7 in the (6,12) case.
D6_N12_SINGLE_REVISIT = [
    "(1,7) (2,8) (7,9) (3,10) (4,7) (5,11) (6,12)",
    "(1,7) (2,8) (7,9) (3,10) (4,11) (5,7) (6,12)",
    "(1,7) (2,8) (7,9) (3,10) (4,11) (5,12) (6,7)",
    "(1,7) (2,8) (3,9) (7,10) (4,11) (5,7) (6,12)",
    "(1,7) (2,8) (3,9) (7,10) (4,11) (5,12) (6,7)",
    "(1,7) (2,8) (3,9) (8,10) (4,11) (5,8) (6,12)",
    "(1,7) (2,8) (3,9) (8,10) (4,11) (5,12) (6,8)",
    "(1,7) (2,8) (3,9) (4,10) (7,11) (5,12) (6,7)",
    "(1,7) (2,8) (3,9) (4,10) (8,11) (5,12) (6,8)",
    "(1,7) (2,8) (3,9) (4,10) (9,11) (5,12) (6,9)",
]

# Candidate counts per revisit class for (d, n, length) = (4, 11, 7).
# "published" is the count reported with the original computation, "preset" what
# FilterFlags.published() generates and "enumerated" the default FilterFlags()
# count. The single-revisit preset count is one above the published one.
D4_N11_COUNTS = {
    0: {"published": 35, "preset": 35, "enumerated": 35},
    1: {"published": 185, "preset": 186, "enumerated": 125},
    2: {"published": 354, "preset": 354, "enumerated": 124},
    3: {"published": 96, "preset": 96, "enumerated": 11},
}
