"""Published design tables, transcribed with this catalog's group ids.

``ROWS``: (row, [(group_id, subgroup_id), ...], (v, b, r, k, lambda), design_no).
The first listed action is the one the catalog uses for the design record.
"""

from math import comb

FULL_ROWS = []  # designs 1..21: A_n on n points, all k-subsets
_n = 1
for n, ks in ((5, [3]), (6, [3, 4]), (7, [3, 5, 4]), (8, [3, 6, 4, 5]), (9, [3, 7, 4, 6, 5]),
              (10, [3, 8, 4, 7, 5, 6])):
    for k in ks:
        FULL_ROWS.append((_n, n, k))
        _n += 1

_A7L = ("A7", "L2(7)")
_A8L = ("A8", "2^3:L3(2)")
_M10 = [("M10", "3^2:Q8"), ("PGL2_9", "3^2:8"), ("PGammaL2_9", "3^2:[2^4]")]
_A9S7 = [("A9", "S7"), ("S9", "S7x2")]
_A10S8 = [("A10", "S8"), ("S10", "S8x2")]
_A10W = [("A10", "(A5xA5):4"), ("S10", "(S5xS5):2")]

ROWS = [
    (1, [("A5", "D10")], (6, 10, 5, 3, 2), 22),
    (2, [("S5", "5:4")], (6, 20, 10, 3, 4), 2),
    (3, [("S5", "5:4")], (6, 15, 10, 4, 6), 3),
    (4, [("S5", "D12"), ("A6", "F36"), ("S6", "3^2:D8")], (10, 15, 6, 4, 2), 23),
    (5, [("A6", "F36"), ("S6", "3^2:D8")], (10, 15, 9, 6, 5), 24),
    (6, [("A6", "F36"), ("S6", "3^2:D8")], (10, 60, 18, 3, 4), 25),
    (7, [("A6", "F36"), ("M10", "3^2:Q8")], (10, 36, 18, 5, 8), 26),
    (8, [("A6", "S4"), ("S6", "S4x2"), _A7L, _A8L], (15, 15, 8, 8, 4), 27),
    (9, [("S6", "3^2:D8"), ("PGL2_9", "3^2:8"), ("PGammaL2_9", "3^2:[2^4]")], (10, 72, 36, 5, 16), 28),
    (10, _M10, (10, 30, 12, 4, 4), 29),
    (11, _M10, (10, 30, 18, 6, 10), 30),
    (12, _M10, (10, 120, 36, 3, 8), 16),
    (13, _M10, (10, 45, 36, 8, 28), 17),
    (14, _M10, (10, 180, 72, 4, 24), 31),
    (15, [("PGammaL2_9", "10:4")], (36, 180, 40, 8, 8), 32),
    (16, [_A7L, _A8L], (15, 35, 7, 3, 1), 33),
    (17, [_A7L, _A8L], (15, 15, 7, 7, 3), 34),
    (18, [_A7L, _A8L], (15, 105, 28, 4, 6), 35),
    (19, [_A7L, _A8L], (15, 35, 28, 12, 22), 36),
    (20, [_A7L, _A8L], (15, 105, 42, 6, 15), 37),
    (21, [_A7L, _A8L], (15, 120, 56, 7, 24), 38),
    (22, [_A7L, _A8L], (15, 420, 84, 3, 12), 39),
    (23, [_A7L, _A8L], (15, 420, 168, 6, 60), 40),
    (24, [_A7L], (15, 42, 14, 5, 4), 41),
    (25, [_A7L], (15, 70, 28, 6, 10), 42),
    (26, [_A7L], (15, 42, 28, 10, 18), 43),
    (27, [_A7L], (15, 126, 42, 5, 12), 44),
    (28, [_A7L], (15, 70, 42, 9, 24), 45),
    (29, [_A7L], (15, 210, 56, 4, 12), 46),
    (30, [_A7L], (15, 210, 84, 6, 30), 47),
    (31, [_A7L], (15, 126, 84, 10, 54), 48),
    (32, [_A7L], (15, 630, 168, 4, 36), 49),
    (33, [("A7", "S5"), ("S7", "S5x2")], (21, 70, 30, 9, 12), 50),
    (34, [("A7", "S5"), ("S7", "S5x2")], (21, 252, 60, 5, 12), 51),
    (35, [("A7", "(A4xS3):2"), ("S7", "S4xS3"), ("A8", "2^4:(S3xS3)"), ("S8", "(S4xS4):2")],
     (35, 35, 18, 18, 9), 52),
    (36, [_A8L], (15, 168, 56, 5, 16), 53),
    (37, [_A8L], (15, 280, 112, 6, 40), 54),
    (38, [_A8L], (15, 168, 112, 10, 72), 55),
    (39, [_A8L], (15, 280, 168, 9, 96), 56),
    (40, [_A8L], (15, 840, 224, 4, 48), 57),
    (41, [("A8", "(A5x3):2")], (56, 840, 180, 12, 36), 58),
    (42, [("A8", "(A5x3):2")], (56, 840, 180, 12, 36), 59),
    (43, [("S8", "S5xS3")], (56, 1680, 360, 12, 72), 60),
    (44, [("S8", "S5xS3")], (56, 1680, 360, 12, 72), 61),
    (45, _A9S7, (36, 840, 140, 6, 20), 62),
    (46, _A9S7, (36, 315, 140, 16, 60), 63),
    (47, _A9S7, (36, 5040, 840, 6, 120), 64),
    (48, _A9S7, (36, 5040, 840, 6, 120), 65),
    (49, [("A9", "L2(8):3")], (120, 3360, 504, 18, 72), 66),
    (50, [("A9", "L2(8):3")], (120, 10080, 1512, 18, 216), 67),
    (51, [("A9", "L2(8):3")], (120, 10080, 1512, 18, 216), 68),
    (52, [("S9", "3^3:(2xS4)")], (280, 11340, 1296, 32, 144), 69),
    (53, _A10S8, (45, 1575, 420, 12, 105), 70),
    (54, _A10S8, (45, 37800, 10080, 12, 2520), 71),
    (55, _A10S8, (45, 75600, 20160, 12, 5040), 72),
    (56, [("A10", "(A7x3):2"), ("S10", "S7xS3")], (120, 33600, 5040, 18, 720), 73),
    (57, [("A10", "(A7x3):2")], (120, 100800, 15120, 18, 2160), 74),
    (58, _A10W, (126, 4725, 225, 6, 9), 75),
    (59, _A10W, (126, 2100, 600, 36, 168), 76),
    (60, _A10W, (126, 18900, 900, 6, 36), 77),
    (61, _A10W, (126, 37800, 1800, 6, 72), 78),
    (62, _A10W, (126, 14175, 1800, 16, 216), 79),
    (63, _A10W, (126, 75600, 3600, 6, 144), 80),
    (64, _A10W, (126, 151200, 7200, 6, 288), 81),
    (65, _A10W, (126, 56700, 7200, 16, 864), 82),
    (66, _A10W, (126, 25200, 7200, 36, 2016), 83),
    (67, _A10W, (126, 25200, 7200, 36, 2016), 84),
    (68, _A10W, (126, 113400, 14400, 16, 1728), 85),
    (69, [("S10", "S7xS3")], (120, 201600, 30240, 18, 4320), 86),
    (70, [("S10", "(S5xS5):2")], (126, 604800, 28800, 6, 1152), 87),
]

# order-32 subgroup classes of S9 on the 280 cosets of 3^3:(2xS4): orbit lengths
# (length, |O^G|) with |O^G| recorded only for length-32 orbits, and the step
# that eliminates the class ("ii", "iii", or "design")
TABLE5 = [
    (1, {8: 9, 16: 7}, [2835] * 3, {"ii"}),
    (2, {4: 6, 8: 10, 16: 5}, [5670] * 3, {"ii"}),
    (3, {8: 9, 16: 7}, [5670] * 3, {"ii"}),
    (4, {8: 5, 16: 5}, [2835] + [5670] * 4, {"ii"}),
    (5, {4: 10, 8: 6, 16: 8}, [2835] * 2, {"ii"}),
    (6, {4: 2, 8: 10, 16: 4}, [5670] * 4, {"ii"}),
    (7, {8: 9, 16: 3}, [2835] * 5, {"ii"}),
    (8, {8: 5, 16: 5}, [5670] * 5, {"ii"}),
    (9, {4: 2, 8: 6, 16: 6}, [5670] * 4, {"ii"}),
    (10, {8: 1, 16: 7}, [2835] * 2 + [5670] + [11340] * 2, {"ii", "iii"}),
    (11, {2: 2, 4: 7, 8: 9, 16: 7}, [11340] * 2, {"iii"}),
    (12, {4: 4, 8: 7, 16: 7}, [5670] + [11340] * 2, {"ii", "iii"}),
    (13, {8: 3, 16: 8}, [2835, 5670] + [11340] * 2, {"ii", "design"}),
    (14, {4: 2, 8: 6, 16: 6}, [5670] * 2 + [11340] * 2, {"ii", "iii"}),
    (15, {4: 2, 8: 6, 16: 8}, [5670] + [11340] * 2, {"ii", "iii"}),
    (16, {8: 3, 16: 8}, [2835, 5670] + [11340] * 2, {"ii", "iii"}),
    (17, {4: 4, 8: 5, 16: 8}, [5670] + [11340] * 2, {"ii", "iii"}),
]

assert all(comb(n, k) for _, n, k in FULL_ROWS) and len(FULL_ROWS) == 21
