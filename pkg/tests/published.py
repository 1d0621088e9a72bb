"""Published values, transcribed for the tests.

Group ids follow the catalog: the tuple-count row printed as PSL2(9) is PGL2_9.
"""

# first table: design number -> (v, b, r, k, lambda); all k-subsets of n points
TABLE1 = {
    1: (5, 10, 6, 3, 3),
    2: (6, 20, 10, 3, 4),
    3: (6, 15, 10, 4, 6),
    4: (7, 35, 15, 3, 5),
    5: (7, 21, 15, 5, 10),
    6: (7, 35, 20, 4, 10),
    7: (8, 56, 21, 3, 6),
    8: (8, 28, 21, 6, 15),
    9: (8, 70, 35, 4, 15),
    10: (8, 56, 35, 5, 20),
    11: (9, 84, 28, 3, 7),
    12: (9, 36, 28, 7, 21),
    13: (9, 126, 56, 4, 21),
    14: (9, 84, 56, 6, 35),
    15: (9, 126, 70, 5, 35),
    16: (10, 120, 36, 3, 8),
    17: (10, 45, 36, 8, 28),
    18: (10, 210, 84, 4, 28),
    19: (10, 120, 84, 7, 56),
    20: (10, 252, 126, 5, 56),
    21: (10, 210, 126, 6, 70),
}

# second table: row -> ((v, b, r, k, lambda), design number, [(group, point stabilizer), ...])
TABLE2 = {
    1: ((6, 10, 5, 3, 2), 22, [('A5', 'D10')]),
    2: ((6, 20, 10, 3, 4), 2, [('S5', '5:4')]),
    3: ((6, 15, 10, 4, 6), 3, [('S5', '5:4')]),
    4: ((10, 15, 6, 4, 2), 23, [('S5', 'D12'), ('A6', 'F36'), ('S6', '3^2:D8')]),
    5: ((10, 15, 9, 6, 5), 24, [('A6', 'F36'), ('S6', '3^2:D8')]),
    6: ((10, 60, 18, 3, 4), 25, [('A6', 'F36'), ('S6', '3^2:D8')]),
    7: ((10, 36, 18, 5, 8), 26, [('A6', 'F36'), ('M10', '3^2:Q8')]),
    8: ((15, 15, 8, 8, 4), 27, [('A6', 'S4'), ('S6', 'S4x2'), ('A7', 'L2(7)'), ('A8', '2^3:L3(2)')]),
    9: ((10, 72, 36, 5, 16), 28, [('S6', '3^2:D8'), ('PGL2_9', '3^2:8'), ('PGammaL2_9', '3^2:[2^4]')]),
    10: ((10, 30, 12, 4, 4), 29, [('M10', '3^2:Q8'), ('PGL2_9', '3^2:8'), ('PGammaL2_9', '3^2:[2^4]')]),
    11: ((10, 30, 18, 6, 10), 30, [('M10', '3^2:Q8'), ('PGL2_9', '3^2:8'), ('PGammaL2_9', '3^2:[2^4]')]),
    12: ((10, 120, 36, 3, 8), 16, [('M10', '3^2:Q8'), ('PGL2_9', '3^2:8'), ('PGammaL2_9', '3^2:[2^4]')]),
    13: ((10, 45, 36, 8, 28), 17, [('M10', '3^2:Q8'), ('PGL2_9', '3^2:8'), ('PGammaL2_9', '3^2:[2^4]')]),
    14: ((10, 180, 72, 4, 24), 31, [('M10', '3^2:Q8'), ('PGL2_9', '3^2:8'), ('PGammaL2_9', '3^2:[2^4]')]),
    15: ((36, 180, 40, 8, 8), 32, [('PGammaL2_9', '10:4')]),
    16: ((15, 35, 7, 3, 1), 33, [('A7', 'L2(7)'), ('A8', '2^3:L3(2)')]),
    17: ((15, 15, 7, 7, 3), 34, [('A7', 'L2(7)'), ('A8', '2^3:L3(2)')]),
    18: ((15, 105, 28, 4, 6), 35, [('A7', 'L2(7)'), ('A8', '2^3:L3(2)')]),
    19: ((15, 35, 28, 12, 22), 36, [('A7', 'L2(7)'), ('A8', '2^3:L3(2)')]),
    20: ((15, 105, 42, 6, 15), 37, [('A7', 'L2(7)'), ('A8', '2^3:L3(2)')]),
    21: ((15, 120, 56, 7, 24), 38, [('A7', 'L2(7)'), ('A8', '2^3:L3(2)')]),
    22: ((15, 420, 84, 3, 12), 39, [('A7', 'L2(7)'), ('A8', '2^3:L3(2)')]),
    23: ((15, 420, 168, 6, 60), 40, [('A7', 'L2(7)'), ('A8', '2^3:L3(2)')]),
    24: ((15, 42, 14, 5, 4), 41, [('A7', 'L2(7)')]),
    25: ((15, 70, 28, 6, 10), 42, [('A7', 'L2(7)')]),
    26: ((15, 42, 28, 10, 18), 43, [('A7', 'L2(7)')]),
    27: ((15, 126, 42, 5, 12), 44, [('A7', 'L2(7)')]),
    28: ((15, 70, 42, 9, 24), 45, [('A7', 'L2(7)')]),
    29: ((15, 210, 56, 4, 12), 46, [('A7', 'L2(7)')]),
    30: ((15, 210, 84, 6, 30), 47, [('A7', 'L2(7)')]),
    31: ((15, 126, 84, 10, 54), 48, [('A7', 'L2(7)')]),
    32: ((15, 630, 168, 4, 36), 49, [('A7', 'L2(7)')]),
    33: ((21, 70, 30, 9, 12), 50, [('A7', 'S5'), ('S7', 'S5x2')]),
    34: ((21, 252, 60, 5, 12), 51, [('A7', 'S5'), ('S7', 'S5x2')]),
    35: ((35, 35, 18, 18, 9), 52, [('A7', '(A4xS3):2'), ('S7', 'S4xS3'), ('A8', '2^4:(S3xS3)'), ('S8', '(S4xS4):2')]),
    36: ((15, 168, 56, 5, 16), 53, [('A8', '2^3:L3(2)')]),
    37: ((15, 280, 112, 6, 40), 54, [('A8', '2^3:L3(2)')]),
    38: ((15, 168, 112, 10, 72), 55, [('A8', '2^3:L3(2)')]),
    39: ((15, 280, 168, 9, 96), 56, [('A8', '2^3:L3(2)')]),
    40: ((15, 840, 224, 4, 48), 57, [('A8', '2^3:L3(2)')]),
    41: ((56, 840, 180, 12, 36), 58, [('A8', '(A5x3):2')]),
    42: ((56, 840, 180, 12, 36), 59, [('A8', '(A5x3):2')]),
    43: ((56, 1680, 360, 12, 72), 60, [('S8', 'S5xS3')]),
    44: ((56, 1680, 360, 12, 72), 61, [('S8', 'S5xS3')]),
    45: ((36, 840, 140, 6, 20), 62, [('A9', 'S7'), ('S9', 'S7x2')]),
    46: ((36, 315, 140, 16, 60), 63, [('A9', 'S7'), ('S9', 'S7x2')]),
    47: ((36, 5040, 840, 6, 120), 64, [('A9', 'S7'), ('S9', 'S7x2')]),
    48: ((36, 5040, 840, 6, 120), 65, [('A9', 'S7'), ('S9', 'S7x2')]),
    49: ((120, 3360, 504, 18, 72), 66, [('A9', 'L2(8):3')]),
    50: ((120, 10080, 1512, 18, 216), 67, [('A9', 'L2(8):3')]),
    51: ((120, 10080, 1512, 18, 216), 68, [('A9', 'L2(8):3')]),
    52: ((280, 11340, 1296, 32, 144), 69, [('S9', '3^3:(2xS4)')]),
    53: ((45, 1575, 420, 12, 105), 70, [('A10', 'S8'), ('S10', 'S8x2')]),
    54: ((45, 37800, 10080, 12, 2520), 71, [('A10', 'S8'), ('S10', 'S8x2')]),
    55: ((45, 75600, 20160, 12, 5040), 72, [('A10', 'S8'), ('S10', 'S8x2')]),
    56: ((120, 33600, 5040, 18, 720), 73, [('A10', '(A7x3):2'), ('S10', 'S7xS3')]),
    57: ((120, 100800, 15120, 18, 2160), 74, [('A10', '(A7x3):2')]),
    58: ((126, 4725, 225, 6, 9), 75, [('A10', '(A5xA5):4'), ('S10', '(S5xS5):2')]),
    59: ((126, 2100, 600, 36, 168), 76, [('A10', '(A5xA5):4'), ('S10', '(S5xS5):2')]),
    60: ((126, 18900, 900, 6, 36), 77, [('A10', '(A5xA5):4'), ('S10', '(S5xS5):2')]),
    61: ((126, 37800, 1800, 6, 72), 78, [('A10', '(A5xA5):4'), ('S10', '(S5xS5):2')]),
    62: ((126, 14175, 1800, 16, 216), 79, [('A10', '(A5xA5):4'), ('S10', '(S5xS5):2')]),
    63: ((126, 75600, 3600, 6, 144), 80, [('A10', '(A5xA5):4'), ('S10', '(S5xS5):2')]),
    64: ((126, 151200, 7200, 6, 288), 81, [('A10', '(A5xA5):4'), ('S10', '(S5xS5):2')]),
    65: ((126, 56700, 7200, 16, 864), 82, [('A10', '(A5xA5):4'), ('S10', '(S5xS5):2')]),
    66: ((126, 25200, 7200, 36, 2016), 83, [('A10', '(A5xA5):4'), ('S10', '(S5xS5):2')]),
    67: ((126, 25200, 7200, 36, 2016), 84, [('A10', '(A5xA5):4'), ('S10', '(S5xS5):2')]),
    68: ((126, 113400, 14400, 16, 1728), 85, [('A10', '(A5xA5):4'), ('S10', '(S5xS5):2')]),
    69: ((120, 201600, 30240, 18, 4320), 86, [('S10', 'S7xS3')]),
    70: ((126, 604800, 28800, 6, 1152), 87, [('S10', '(S5xS5):2')]),
}

TUPLE_COUNTS = {
    "A5": 5, "S5": 6, "A6": 19, "S6": 25, "M10": 22, "PGL2_9": 22, "PGammaL2_9": 26, "A7": 120,
    "S7": 101, "A8": 157, "S8": 100, "A9": 395, "S9": 447, "A10": 297, "S10": 349,
}
TUPLE_TOTAL = 2091

# mutually complementary (v, k, lambda) pairs
COMPLEMENT_PAIRS = [
    ((6, 3, 2), (6, 3, 2)), ((6, 3, 4), (6, 3, 4)), ((7, 3, 5), (7, 4, 10)), ((8, 3, 6), (8, 5, 20)),
    ((8, 4, 15), (8, 4, 15)), ((9, 3, 7), (9, 6, 35)), ((9, 4, 21), (9, 5, 35)), ((10, 3, 8), (10, 7, 56)),
    ((10, 4, 2), (10, 6, 5)), ((10, 4, 4), (10, 6, 10)), ((10, 4, 28), (10, 6, 70)), ((10, 5, 8), (10, 5, 8)),
    ((10, 5, 16), (10, 5, 16)), ((10, 5, 56), (10, 5, 56)), ((15, 3, 1), (15, 12, 22)), ((15, 5, 4), (15, 10, 18)),
    ((15, 5, 12), (15, 10, 54)), ((15, 5, 16), (15, 10, 72)), ((15, 6, 10), (15, 9, 24)),
    ((15, 6, 40), (15, 9, 96)), ((15, 8, 4), (15, 7, 3)),
]

SYMMETRIC = [(15, 7, 3), (15, 8, 4), (35, 18, 9)]

# order-32 classes for S9 on 280 points (b = 11340, k = 32): class -> (orbit lengths other than 32,
# set-orbit sizes of the 32-orbits, outcome labels)
TABLE5 = {
    1: ({8: 9, 16: 7}, [2835, 2835, 2835], ['Step(ii)']),
    2: ({4: 6, 8: 10, 16: 5}, [5670, 5670, 5670], ['Step(ii)']),
    3: ({8: 9, 16: 7}, [5670, 5670, 5670], ['Step(ii)']),
    4: ({8: 5, 16: 5}, [2835, 5670, 5670, 5670, 5670], ['Step(ii)']),
    5: ({4: 10, 8: 6, 16: 8}, [2835, 2835], ['Step(ii)']),
    6: ({4: 2, 8: 10, 16: 4}, [5670, 5670, 5670, 5670], ['Step(ii)']),
    7: ({8: 9, 16: 3}, [2835, 2835, 2835, 2835, 2835], ['Step(ii)']),
    8: ({8: 5, 16: 5}, [5670, 5670, 5670, 5670, 5670], ['Step(ii)']),
    9: ({4: 2, 8: 6, 16: 6}, [5670, 5670, 5670, 5670], ['Step(ii)']),
    10: ({8: 1, 16: 7}, [2835, 2835, 5670, 11340, 11340], ['Step(ii)', 'Step(iii)']),
    11: ({2: 2, 4: 7, 8: 9, 16: 7}, [11340, 11340], ['Step(iii)']),
    12: ({4: 4, 8: 7, 16: 7}, [5670, 11340, 11340], ['Step(ii)', 'Step(iii)']),
    13: ({8: 3, 16: 8}, [2835, 5670, 11340, 11340], ['D69', 'Step(ii)']),
    14: ({4: 2, 8: 6, 16: 6}, [5670, 5670, 11340, 11340], ['Step(ii)', 'Step(iii)']),
    15: ({4: 2, 8: 6, 16: 8}, [5670, 11340, 11340], ['Step(ii)', 'Step(iii)']),
    16: ({8: 3, 16: 8}, [2835, 5670, 11340, 11340], ['Step(ii)', 'Step(iii)']),
    17: ({4: 4, 8: 5, 16: 8}, [5670, 11340, 11340], ['Step(ii)', 'Step(iii)']),
}
