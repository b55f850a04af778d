"""Printed reference values, transcribed as data.

A decomposition is a tuple of (generator, order) pairs in the printed
orientation.  Comparisons elsewhere are made up to reversal.  Values that
disagree with recomputation are kept exactly as printed; the table
reproductions report them as diffs.
"""

# primes below 300 with no strong 3AP decomposition
NONEXISTENCE_BELOW_300 = (71, 127, 139, 223, 277)

# xi -> largest number of strong 3AP decompositions over n <= 1000
D_TABLE = {1: 10, 2: 18, 4: 96, 6: 182, 8: 288, 10: 262, 12: 496,
           16: 384, 18: 276, 20: 204, 24: 540, 36: 2088}

U273_STRONG = 108
U819_LIFTS = 648

# small worked examples
INTRO_EXAMPLES = {
    61: [((9, 5), (11, 4), (13, 3))],
    911: [((196, 13), (550, 10), (904, 7))],
    455: [((92, 4), (93, 12), (94, 6))],
    91: [((9, 3), (18, 12), (27, 2)), ((87, 6), (83, 4), (79, 3))],
    65: [((61, 3), (57, 4), (53, 4))],
    703: [((700, 9), (701, 36), (702, 2))],
    31: [((30, 2), (2, 5), (5, 3)), ((25, 3), (30, 2), (4, 5))],
    275: [((136, 5), (274, 2), (137, 20))],
    775: [((386, 15), (774, 2), (387, 20))],
    211: [((15, 6), (107, 5), (199, 7)), ((58, 7), (134, 15), (210, 2)),
          ((196, 3), (203, 35), (210, 2))],
    547: [((40, 3), (172, 26), (304, 7)), ((40, 3), (544, 7), (501, 26)),
          ((520, 7), (40, 3), (107, 26))],
    191: [((39, 5), (190, 2), (150, 19)), ((184, 5), (190, 2), (5, 19))],
}

# -- prime n, orders {2, 3, (n-1)/6} -------------------------------------------

THM_2_1 = {
    31: ((25, 3), (30, 2), (4, 5)),
    43: ((6, 3), (42, 2), (35, 7)),
    79: ((55, 3), (78, 2), (22, 13)),
    211: ((196, 3), (210, 2), (13, 35)),
    463: ((21, 3), (462, 2), (440, 77)),
    571: ((109, 3), (570, 2), (460, 95)),
    751: ((678, 3), (750, 2), (71, 125)),
    907: ((522, 3), (906, 2), (383, 151)),
}

THM_2_2 = {
    67: ((59, 11), (29, 3), (66, 2)),
    103: ((10, 17), (46, 3), (102, 2)),
    151: ((86, 25), (118, 3), (150, 2)),
    367: ((200, 61), (283, 3), (366, 2)),
    439: ((343, 73), (171, 3), (438, 2)),
    499: ((279, 83), (139, 3), (498, 2)),
    619: ((505, 103), (252, 3), (618, 2)),
    643: ((355, 107), (177, 3), (642, 2)),
    727: ((563, 121), (281, 3), (726, 2)),
    787: ((28, 131), (407, 3), (786, 2)),
    967: ((682, 162), (824, 3), (966, 2)),  # printed order 162
}

# n -> (decomposition, which root z is)
THM_2_3 = {
    31: (((5, 3), (2, 5), (30, 2)), "x1"),
    67: (((29, 3), (14, 11), (66, 2)), "x2"),
    103: (((56, 3), (79, 17), (102, 2)), "x1"),
    151: (((32, 3), (91, 25), (150, 2)), "x1"),
    211: (((196, 3), (203, 35), (210, 2)), "x2"),
    283: (((44, 3), (163, 47), (282, 2)), "x2"),
    691: (((437, 3), (218, 115), (690, 2)), "x2"),
    787: (((407, 3), (203, 131), (786, 2)), "x2"),
    823: (((648, 3), (735, 137), (822, 2)), "x1"),
    907: (((522, 3), (714, 151), (906, 2)), "x2"),
}

NOTE_2_1_EXCLUDED = (139, 223, 331, 547, 607, 859)
NOTE_2_1_547_ROOTS = (505, 39)

PROBLEM_3 = {"limit": 10**5, "class_size": 1614, "2.1": 494, "2.2": 476, "2.3": 476}

# -- prime n, orders {3, 4, (n-1)/12}: n -> (decompositions, ord(x)) -------------

THM_2_5 = {
    61: ([((13, 3), (11, 4), (9, 5))], 15),
    349: ([((122, 3), (213, 4), (304, 29))], 58),
    661: ([((364, 3), (106, 4), (509, 55)), ((364, 3), (555, 4), (85, 55))], 66),
}

THM_2_6 = {
    157: ([((153, 13), (12, 3), (28, 4))], 39),
    229: ([((161, 19), (134, 3), (107, 4))], 228),
    349: ([((31, 29), (122, 3), (213, 4))], 58),
    373: ([((91, 31), (284, 3), (104, 4))], 93),
    997: ([((226, 83), (692, 3), (161, 4))], 498),
}

THM_2_5_6_UNCOVERED = (277, 421, 709, 733, 853, 877)

# -- prime n, orders {2, 5, (n-1)/10} ------------------------------------------

TYPE_2_3 = {
    "a": {
        31: [((4, 5), (30, 2), (25, 3))],
        191: [((39, 5), (190, 2), (150, 19)), ((184, 5), (190, 2), (5, 19))],
        271: [((10, 5), (270, 2), (259, 27)), ((244, 5), (270, 2), (25, 27))],
        431: [((405, 5), (430, 2), (24, 43))],
        691: [((89, 5), (690, 2), (600, 69))],
        991: [((799, 5), (990, 2), (190, 99))],
    },
    "b": {
        31: [((5, 3), (2, 5), (30, 2))],
        131: [((107, 13), (53, 5), (130, 2))],
        311: [((13, 31), (6, 5), (310, 2)), ((105, 31), (52, 5), (310, 2))],
        491: [((203, 49), (101, 5), (490, 2))],
        811: [((330, 81), (570, 5), (810, 2))],
        991: [((395, 99), (197, 5), (990, 2))],
    },
    "c": {
        271: [((10, 5), (140, 27), (270, 2))],
        691: [((132, 5), (411, 69), (690, 2))],
        971: [((803, 5), (401, 97), (970, 2))],
        991: [((197, 5), (98, 99), (990, 2))],
    },
}

NOTE_2_2_NONE = (71, 211, 331, 571, 631, 911)

# -- pairs of decompositions sharing two generators -----------------------------

DOUBLE_BARRELLED = {
    1: {
        67: (((29, 3), (14, 11), (66, 2)), ((59, 11), (29, 3), (66, 2))),
        211: (((210, 2), (203, 35), (196, 3)), ((13, 35), (210, 2), (196, 3))),
        271: (((270, 2), (140, 27), (10, 5)), ((259, 27), (270, 2), (10, 5))),
        331: (((167, 11), (83, 15), (330, 2)), ((4, 15), (167, 11), (330, 2))),
        379: (((378, 2), (119, 7), (239, 27)), ((138, 7), (378, 2), (239, 27))),
        661: (((364, 3), (391, 20), (418, 11)), ((310, 20), (364, 3), (418, 11))),
        787: (((407, 3), (203, 131), (786, 2)), ((28, 131), (407, 3), (786, 2))),
        907: (((906, 2), (714, 151), (522, 3)), ((383, 151), (906, 2), (522, 3))),
    },
    2: {
        349: (((31, 29), (122, 3), (213, 4)), ((122, 3), (213, 4), (304, 29))),
        599: (((578, 23), (598, 2), (19, 13)), ((598, 2), (19, 13), (39, 23))),
    },
}

# -- lifting --------------------------------------------------------------------

LIFT_EXAMPLES = {
    # (source n, source decomposition, p) -> printed lifts
    "u31_to_961": (31, ((25, 3), (30, 2), (4, 5)), 31, [
        ((521, 3), (960, 2), (438, 155)),
        ((521, 3), (526, 62), (531, 5)),
        ((428, 93), (960, 2), (531, 5)),
    ]),
    "u35_to_245": (35, ((11, 3), (34, 2), (22, 4)), 7, [
        ((116, 3), (244, 2), (127, 28)),
        ((116, 3), (34, 14), (197, 4)),
        ((46, 21), (244, 2), (197, 4)),
    ]),
    "u35_to_175": (35, ((11, 3), (34, 2), (22, 4)), 5, [
        ((151, 3), (174, 2), (22, 20)),
        ((151, 3), (104, 10), (57, 4)),
        ((116, 15), (174, 2), (57, 4)),
    ]),
    "u7_to_49": (7, ((4, 3), (6, 2), (1, 1)), 7, [
        ((18, 3), (48, 2), (29, 7)),
        ((18, 3), (34, 14), (1, 1)),
        ((46, 21), (48, 2), (1, 1)),
    ]),
    "u55_to_275": (55, ((54, 2), (1, 1), (3, 20)), 5, [
        ((274, 2), (166, 5), (58, 20)),
        ((274, 2), (56, 5), (113, 20)),
        ((274, 2), (221, 5), (168, 20)),
        ((274, 2), (111, 5), (223, 20)),
    ]),
    "u31_to_155": (31, ((25, 3), (30, 2), (4, 5)), 5, [
        ((56, 3), (154, 2), (97, 20)),
        ((87, 12), (154, 2), (66, 5)),
    ]),
}
U343 = ((18, 3), (342, 2), (323, 49))
U55_TO_275_WEAK = 4
U55_SECOND = ((52, 20), (54, 2), (1, 1))     # also gives four strong lifts to 275
U605_SPECIAL_LIFTS = {52: 602, 54: 604, 1: 1, 3: 3}
U155_SPURIOUS = (25, 30, 35)

UNPRODUCTIVE_PRIMES_BELOW_1000 = {
    379: ((239, 27), (378, 2), (138, 7)),
    11: ((10, 2), (1, 1), (3, 5)),
    461: ((1, 1), (48, 4), (95, 115)),
}
U379_SPECIAL_LIFTS = (8956, 143640, 134683)

# -- composite n ------------------------------------------------------------------

# n -> (lambda, progression, progression)
QUARTETS = {
    105: (12, (38, 71, 104, 32), (17, 29, 41, 53)),
    165: (20, (113, 56, 164, 107), (47, 89, 131, 8)),
    285: (36, (98, 191, 284, 92), (212, 134, 56, 263)),
    357: (48, (122, 239, 356, 116), (269, 50, 188, 326)),
    465: (60, (158, 311, 464, 152), (437, 404, 371, 338)),
    231: (30, (80, 155, 230, 74), (179, 188, 197, 206)),
    483: (66, (164, 323, 482, 158), (95, 461, 344, 227)),
}
QUARTET_315 = (12, ((8, 4), (131, 6), (254, 6), (62, 4)))

# n -> (p, q, decomposition)
THM_4_4 = {
    35: (7, 5, ((11, 3), (34, 2), (22, 4))),
    77: (7, 11, ((67, 3), (76, 2), (8, 10))),
    95: (19, 5, ((16, 9), (94, 2), (77, 4))),
    119: (7, 17, ((18, 3), (118, 2), (99, 16))),
    155: (31, 5, ((121, 15), (154, 2), (32, 4))),
    161: (7, 23, ((116, 3), (160, 2), (43, 22))),
    203: (7, 29, ((88, 3), (202, 2), (113, 28))),
    209: (19, 11, ((111, 9), (208, 2), (96, 10))),
    215: (43, 5, ((126, 21), (214, 2), (87, 4))),
}
THM_4_4_FAILURE = (287, 7, 41, 8)   # n, p, q, ord_q(-3)
THM_4_4_BAD_Q_BELOW_300 = (41,)
THM_4_4_BAD_P_BELOW_300 = (67, 103, 151, 271)

TABLE_1 = {
    91: [((33, 12), (16, 3), (90, 2)), ((58, 12), (74, 3), (90, 2))],
    133: [((61, 18), (30, 3), (132, 2)), ((72, 18), (102, 3), (132, 2))],
    217: [((135, 30), (67, 3), (216, 2)), ((82, 30), (149, 3), (216, 2))],
    247: [((137, 36), (68, 3), (246, 2)), ((110, 36), (178, 3), (246, 2)),
          ((175, 36), (87, 3), (246, 2)), ((72, 36), (159, 3), (246, 2))],
    301: [((271, 42), (135, 3), (300, 2)), ((30, 42), (165, 3), (300, 2))],
    403: [((228, 60), (315, 3), (402, 2)), ((175, 60), (87, 3), (402, 2))],
    469: [((142, 66), (305, 3), (468, 2)), ((327, 66), (163, 3), (468, 2))],
    553: [((205, 78), (102, 3), (552, 2)), ((348, 78), (450, 3), (552, 2))],
    559: [((202, 84), (380, 3), (558, 2)), ((357, 84), (178, 3), (558, 2))],
    589: [((547, 90), (273, 3), (588, 2)), ((42, 90), (315, 3), (588, 2))],
    679: [((26, 96), (352, 3), (678, 2)), ((653, 96), (326, 3), (678, 2))],
    721: [((422, 102), (571, 3), (720, 2)), ((299, 102), (149, 3), (720, 2))],
    763: [((236, 108), (499, 3), (762, 2)), ((527, 108), (263, 3), (762, 2)),
          ((345, 108), (172, 3), (762, 2)), ((418, 108), (590, 3), (762, 2))],
    817: [((357, 126), (178, 3), (816, 2)), ((460, 126), (638, 3), (816, 2))],
    871: [((59, 132), (29, 3), (870, 2)), ((812, 132), (841, 3), (870, 2)),
          ((410, 132), (640, 3), (870, 2)), ((461, 132), (230, 3), (870, 2))],
    889: [((674, 126), (781, 3), (888, 2)), ((215, 126), (107, 3), (888, 2))],
}
TABLE_1_UNCOVERED = (259, 427, 511, 973)

# rows: (n, p, q, decomposition, starred position, type)
TABLE_2 = [
    (65, 5, 13, ((27, 4), (44, 4), (61, 3)), 0, "A"),
    (65, 5, 13, ((53, 4), (57, 4), (61, 3)), 0, "A"),
    (65, 5, 13, ((53, 4), (16, 3), (44, 4)), 0, "C"),
    (145, 5, 29, ((88, 4), (12, 4), (81, 7)), 0, "A"),
    (145, 5, 29, ((117, 4), (99, 4), (81, 7)), 0, "A"),
    (185, 5, 37, ((43, 4), (112, 4), (181, 9)), 1, "B"),
    (185, 5, 37, ((38, 4), (16, 9), (179, 4)), 0, "C"),
    (265, 5, 53, ((213, 4), (201, 13), (189, 4)), 0, "C"),
    (305, 5, 61, ((123, 4), (56, 15), (294, 4)), 0, "C"),
    (305, 5, 61, ((62, 4), (24, 20), (291, 3)), 0, "-"),
    (305, 5, 61, ((273, 12), (62, 4), (156, 5)), 1, "-"),
    (377, 13, 29, ((262, 12), (99, 4), (313, 7)), 0, "A"),
    (377, 29, 13, ((287, 28), (57, 4), (203, 3)), 0, "A"),
    (377, 29, 13, ((14, 28), (146, 3), (278, 4)), 0, "C"),
    (377, 29, 13, ((222, 28), (146, 3), (70, 4)), 0, "C"),
    (377, 29, 13, ((235, 28), (146, 3), (57, 4)), 0, "C"),
    (505, 5, 101, ((102, 4), (394, 4), (181, 25)), 0, "A"),
    (505, 5, 101, ((102, 4), (414, 4), (221, 25)), 0, "A"),
    (505, 5, 101, ((203, 4), (192, 4), (181, 25)), 0, "A"),
    (505, 5, 101, ((203, 4), (212, 4), (221, 25)), 0, "A"),
    (505, 5, 101, ((203, 4), (56, 25), (414, 4)), 0, "C"),
    (545, 5, 109, ((33, 4), (437, 4), (296, 27)), 1, "B"),
    (545, 5, 109, ((403, 4), (437, 4), (471, 27)), 1, "B"),
    (689, 13, 53, ((319, 12), (625, 13), (242, 4)), 0, "C"),
    (689, 53, 13, ((209, 52), (317, 4), (425, 3)), 0, "A"),
    (689, 53, 13, ((469, 52), (447, 4), (425, 3)), 0, "A"),
    (689, 53, 13, ((456, 52), (107, 3), (447, 4)), 0, "C"),
    (689, 53, 13, ((586, 52), (107, 3), (317, 4)), 0, "C"),
    (745, 5, 149, ((193, 4), (597, 4), (256, 37)), 1, "B"),
    (745, 5, 149, ((403, 4), (597, 4), (46, 37)), 1, "B"),
    (785, 5, 157, ((158, 4), (757, 4), (571, 39)), 0, "A"),
    (785, 5, 157, ((472, 4), (129, 4), (571, 39)), 0, "A"),
    (785, 5, 157, ((443, 4), (472, 4), (501, 39)), 1, "B"),
    (785, 5, 157, ((158, 4), (207, 12), (256, 13)), 0, "-"),
    (785, 5, 157, ((158, 4), (326, 3), (494, 52)), 0, "-"),
    (865, 5, 173, ((693, 4), (566, 43), (439, 4)), 0, "-"),   # printed type
    (905, 5, 181, ((363, 4), (316, 5), (269, 36)), 0, "-"),
    (985, 5, 197, ((183, 4), (592, 4), (16, 49)), 1, "B"),
]

# n -> (#3APDs, from strong, from weak, other, star on strong, star on weak)
TABLE_3 = {
    175: (6, 3, 3, 0, False, False),
    245: (6, 3, 3, 0, False, False),
    275: (68, 0, 8, 60, False, False),
    325: (20, 12, 8, 0, False, False),
    425: (8, 0, 8, 0, False, False),
    475: (6, 3, 3, 0, False, False),
    539: (12, 9, 3, 0, False, False),
    575: (2, 0, 2, 0, False, False),
    605: (0, 0, 0, 0, False, True),
    637: (126, 108, 18, 0, False, False),
    725: (30, 18, 12, 0, False, False),
    775: (188, 32, 24, 132, False, False),
    845: (20, 12, 8, 0, False, False),
    847: (0, 0, 0, 0, True, True),
    925: (10, 6, 4, 0, False, False),
    931: (182, 156, 26, 0, False, False),
}
U875_COUNT = 6
TABLE_3_NON_LIFTS = {
    275: [((16, 5), (24, 10), (32, 4)), ((181, 5), (244, 10), (32, 4))],
    775: [((32, 4), (54, 10), (76, 15))],
}

# weak decompositions with orders {1, 6, p}, prime n < 300
SECTION_5 = {
    43: [((1, 1), (4, 7), (7, 6))],
    67: [((1, 1), (30, 6), (59, 11))],
    79: [((1, 1), (52, 13), (24, 6))],
    103: [((1, 1), (47, 6), (93, 17))],
    139: [((97, 6), (1, 1), (44, 23))],
    223: [((1, 1), (132, 37), (40, 6)), ((184, 6), (1, 1), (41, 37))],
    283: [((45, 6), (1, 1), (240, 47))],
}

# -- finite fields ----------------------------------------------------------------

# (p, k) -> [(log, order), ...] per decomposition
GF = {
    (11, 2): [((72, 5), (15, 8), (80, 3))],
    (11, 3): [((570, 7), (532, 5), (595, 38)), ((665, 2), (1008, 95), (570, 7))],
    (19, 2): [((144, 5), (320, 9), (135, 8))],
    (19, 3): [((3429, 2), (2970, 127), (5588, 27))],
    (23, 2): [((176, 3), (192, 11), (429, 16))],
    (29, 2): [((280, 3), (720, 7), (609, 40)), ((120, 7), (504, 5), (385, 24))],
}
GF_IMPOSSIBLE = ((11, 3), (2, 5, 133))

# -- four-term progressions ---------------------------------------------------------

FOUR_AP = {
    104: [((31, 4), (81, 3), (27, 2), (77, 2)), ((77, 2), (79, 2), (81, 3), (83, 4))],
}
FOUR_AP_WEAK_PRIME = (3613, ((3528, 4), (1148, 129), (2381, 7), (1, 1)))
FOUR_AP_PRIME_LIMIT = 10_000
