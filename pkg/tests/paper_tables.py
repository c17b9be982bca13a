"""Values transcribed from the source tables, including their misprints.

Misprints are kept verbatim so the tests can show exactly where the printed
tables and the formulas disagree.
"""

# Natural Matrix, rows x = 0..18, columns y = 0..10.
# Row 13, column 10 is printed as 27627; (2*13 + 1) * 2**10 - 1 = 27647.
MATRIX = [
    [0, 1, 3, 7, 15, 31, 63, 127, 255, 511, 1023],
    [2, 5, 11, 23, 47, 95, 191, 383, 767, 1535, 3071],
    [4, 9, 19, 39, 79, 159, 319, 639, 1279, 2559, 5119],
    [6, 13, 27, 55, 111, 223, 447, 895, 1791, 3583, 7167],
    [8, 17, 35, 71, 143, 287, 575, 1151, 2303, 4607, 9215],
    [10, 21, 43, 87, 175, 351, 703, 1407, 2815, 5631, 11263],
    [12, 25, 51, 103, 207, 415, 831, 1663, 3327, 6655, 13311],
    [14, 29, 59, 119, 239, 479, 959, 1919, 3839, 7679, 15359],
    [16, 33, 67, 135, 271, 543, 1087, 2175, 4351, 8703, 17407],
    [18, 37, 75, 151, 303, 607, 1215, 2431, 4863, 9727, 19455],
    [20, 41, 83, 167, 335, 671, 1343, 2687, 5375, 10751, 21503],
    [22, 45, 91, 183, 367, 735, 1471, 2943, 5887, 11775, 23551],
    [24, 49, 99, 199, 399, 799, 1599, 3199, 6399, 12799, 25599],
    [26, 53, 107, 215, 431, 863, 1727, 3455, 6911, 13823, 27627],
    [28, 57, 115, 231, 463, 927, 1855, 3711, 7423, 14847, 29695],
    [30, 61, 123, 247, 495, 991, 1983, 3967, 7935, 15871, 31743],
    [32, 65, 131, 263, 527, 1055, 2111, 4223, 8447, 16895, 33791],
    [34, 69, 139, 279, 559, 1119, 2239, 4479, 8959, 17919, 35839],
    [36, 73, 147, 295, 591, 1183, 2367, 4735, 9471, 18943, 37887],
]
MATRIX_MISPRINTS = {(13, 10): 27627}

# Mersenne trees: root -> (odd nodes that are not Dyck numbers, following Dyck
# nodes, OEIS id). Root 8 is A052996 with its first two terms (1, 3) removed.
TREES = {
    0: ([], [1, 3, 7, 15, 31, 63, 127, 255, 511], 'A000225'),
    2: ([], [5, 11, 23, 47, 95, 191, 383, 767], 'A153893'),
    4: ([9], [19, 39, 79, 159, 319, 639, 1279], 'A153894'),
    6: ([], [13, 27, 55, 111, 223, 447, 895], 'A086224'),
    8: ([17, 35], [71, 143, 287, 575, 1151, 2303], 'A052996'),
    10: ([], [21, 43, 87, 175, 351, 703, 1407], 'A086225'),
    12: ([25], [51, 103, 207, 415, 831, 1663], 'A198274'),
    14: ([], [29, 59, 119, 239, 479, 959, 1919], 'A196305'),
    16: ([33, 67, 135], [271, 543, 1087, 2175, 4351], 'A198275'),
    18: ([37], [75, 151, 303, 607, 1215, 2431], 'A198276'),
    20: ([41], [83, 167, 335, 671, 1343, 2687], 'A171389'),
    22: ([], [45, 91, 183, 367, 735, 1471, 2943], 'A291557'),
    24: ([49, 99], [199, 399, 799, 1599, 3199, 6399], ''),
    26: ([], [53, 107, 215, 431, 863, 1727], ''),
    28: ([57], [115, 231, 463, 927, 1855, 3711], ''),
    30: ([], [61, 123, 247, 495, 991, 1983], ''),
    32: ([65, 131, 263, 527], [1055, 2111, 4223, 8447, 16895], ''),
}

# Segment census rows: (y, d_y, primes, size, printed percent).
CENSUS = [
    (1, 4, 1, 2, '50.000'),
    (2, 8, 3, 4, '75.000'),
    (3, 16, 4, 8, '50.000'),
    (4, 32, 7, 16, '43.750'),
    (5, 64, 11, 32, '34.375'),
    (6, 128, 13, 64, '20.312'),
    (7, 256, 24, 128, '18.750'),
    (8, 512, 52, 256, '20.312'),
    (9, 1024, 95, 512, '18.554'),
    (10, 2048, 145, 1024, '14.174'),
    (11, 4096, 275, 2048, '13.434'),
    (12, 8192, 503, 4096, '12.283'),
    (13, 16384, 921, 8192, '11.244'),
    (14, 32768, 1717, 16384, '10.480'),
    (15, 65536, 3151, 32768, '9.616'),
    (16, 131072, 5960, 65536, '9.094'),
    (17, 262144, 11188, 131072, '8.536'),
    (18, 524288, 21171, 262144, '8.076'),
    (19, 1048576, 40342, 524288, '7.694'),
    (20, 2097152, 76511, 1048576, '7.296'),
    (21, 4194304, 145706, 2097152, '6.948'),
    (22, 8388608, 277822, 4194304, '6.624'),
]

# Least-prime positions as printed: (y label, x). The label 101 appears
# twice; the second occurrence sits where 102 belongs.
LEAST_PRIME = [
    (1, 1), (2, 0), (3, 0), (4, 1), (5, 0), (6, 1), (7, 0), (8, 2),
    (9, 3), (10, 2), (11, 1), (12, 2), (13, 0), (14, 2), (15, 4), (16, 8),
    (17, 0), (18, 1), (19, 0), (20, 8), (21, 3), (22, 16), (23, 6), (24, 19),
    (25, 28), (26, 5), (27, 10), (28, 13), (29, 3), (30, 106), (31, 0), (32, 2),
    (33, 15), (34, 1), (35, 12), (36, 8), (37, 10), (38, 1), (39, 12), (40, 53),
    (41, 7), (42, 16), (43, 1), (44, 17), (45, 3), (46, 11), (47, 15), (48, 2),
    (49, 9), (50, 5), (51, 10), (52, 32), (53, 73), (54, 2), (55, 1), (56, 16),
    (57, 25), (58, 38), (59, 22), (60, 8), (61, 0), (62, 26), (63, 4), (64, 1),
    (65, 33), (66, 31), (67, 21), (68, 31), (69, 25), (70, 13), (71, 36), (72, 2),
    (73, 7), (74, 10), (75, 12), (76, 1), (77, 27), (78, 32), (79, 34), (80, 7),
    (81, 24), (82, 7), (83, 45), (84, 44), (85, 22), (86, 127), (87, 96), (88, 64),
    (89, 0), (90, 53), (91, 16), (92, 37), (93, 22), (94, 1), (95, 24), (96, 8),
    (97, 25), (98, 31), (99, 4), (100, 38), (101, 40), (101, 16), (103, 1), (104, 86),
    (105, 12), (106, 16), (107, 0), (108, 61), (109, 4), (110, 125), (111, 37), (112, 98),
    (113, 42), (114, 17), (115, 15), (116, 7), (117, 22), (118, 115), (119, 22), (120, 76),
]
