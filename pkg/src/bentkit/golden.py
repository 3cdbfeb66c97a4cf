"""Frozen reference values: the complete distribution of normalized Rayleigh
quotients and distances-to-dual for Desarguesian partial-spread bent
functions, n = 4..14.  The library must reproduce these exactly; the
verification suite and the golden-file tests diff against them.
"""

# n -> (nf_values ascending, dist_values ascending)
REFERENCE_DISTRIBUTION: dict[int, tuple[tuple[int, ...], tuple[int, ...]]] = {
    4: (
        (-8, 4, 16),
        (0, 6, 12),
    ),
    6: (
        (-48, -20, 8, 36, 64),
        (0, 14, 28, 42, 56),
    ),
    8: (
        (-224, -164, -104, -44, 16, 76, 136, 196, 256),
        (0, 30, 60, 90, 120, 150, 180, 210, 240),
    ),
    10: (
        (-960, -836, -712, -588, -464, -340, -216, -92, 32, 156, 280, 404,
         528, 652, 776, 900, 1024),
        (0, 62, 124, 186, 248, 310, 372, 434, 496, 558, 620, 682, 744, 806,
         868, 930, 992),
    ),
    12: (
        (-3968, -3716, -3464, -3212, -2960, -2708, -2456, -2204, -1952,
         -1700, -1448, -1196, -944, -692, -440, -188, 64, 316, 568, 820,
         1072, 1324, 1576, 1828, 2080, 2332, 2584, 2836, 3088, 3340, 3592,
         3844, 4096),
        (0, 126, 252, 378, 504, 630, 756, 882, 1008, 1134, 1260, 1386, 1512,
         1638, 1764, 1890, 2016, 2142, 2268, 2394, 2520, 2646, 2772, 2898,
         3024, 3150, 3276, 3402, 3528, 3654, 3780, 3906, 4032),
    ),
    14: (
        (-16128, -15620, -15112, -14604, -14096, -13588, -13080, -12572,
         -12064, -11556, -11048, -10540, -10032, -9524, -9016, -8508, -8000,
         -7492, -6984, -6476, -5968, -5460, -4952, -4444, -3936, -3428,
         -2920, -2412, -1904, -1396, -888, -380, 128, 636, 1144, 1652, 2160,
         2668, 3176, 3684, 4192, 4700, 5208, 5716, 6224, 6732, 7240, 7748,
         8256, 8764, 9272, 9780, 10288, 10796, 11304, 11812, 12320, 12828,
         13336, 13844, 14352, 14860, 15368, 15876, 16384),
        (0, 254, 508, 762, 1016, 1270, 1524, 1778, 2032, 2286, 2540, 2794,
         3048, 3302, 3556, 3810, 4064, 4318, 4572, 4826, 5080, 5334, 5588,
         5842, 6096, 6350, 6604, 6858, 7112, 7366, 7620, 7874, 8128, 8382,
         8636, 8890, 9144, 9398, 9652, 9906, 10160, 10414, 10668, 10922,
         11176, 11430, 11684, 11938, 12192, 12446, 12700, 12954, 13208,
         13462, 13716, 13970, 14224, 14478, 14732, 14986, 15240, 15494,
         15748, 16002, 16256),
    ),
}

# Exhaustive census facts at desk scale: (total selections, self-dual count,
# realized distance classes with their sizes).
REFERENCE_CENSUS: dict[int, tuple[int, int, dict[int, int]]] = {
    2: (10, 2, {0: 2, 6: 4, 12: 4}),
    3: (126, 6, {0: 6, 14: 24, 28: 48, 42: 32, 56: 16}),
}
