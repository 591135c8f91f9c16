"""Golden reference values for regression testing.

Class rows are coefficients over [P^0], ..., [P^(mn-1)].  Cycle rows are
coefficients of h1^a h2^b with a+b = mn, listed by descending h1 exponent
(h1^(mn-1) h2, ..., h1 h2^(mn-1)).  One reference cell (csm (4,4,1) at
[P^14]) is stored as the value forced by the surrounding tables and the
additivity of the classes over strata; see the repository notes.
"""

CM = {
    (3, 3, 0): (9, 36, 84, 126, 126, 84, 36, 9, 1),
    (3, 3, 1): (18, 54, 102, 126, 102, 54, 18, 3, 0),
    (3, 3, 2): (9, 18, 24, 18, 6, 0, 0, 0, 0),
    (4, 3, 0): (12, 66, 220, 495, 792, 924, 792, 495, 220, 66, 12, 1),
    (4, 3, 1): (24, 96, 248, 444, 564, 514, 336, 153, 44, 6, 0, 0),
    (4, 3, 2): (12, 30, 52, 57, 36, 10, 0, 0, 0, 0, 0, 0),
    (4, 4, 1): (48, 288, 1128, 3168, 6672, 10816, 13716, 13716,
                10816, 6672, 3168, 1128, 288, 48, 4, 0),
    (4, 4, 2): (48, 216, 672, 1524, 2592, 3368, 3376, 2602,
                1504, 616, 160, 20, 0, 0, 0, 0),
    (4, 4, 3): (16, 48, 104, 152, 144, 80, 20, 0,
                0, 0, 0, 0, 0, 0, 0, 0),
}

CSM = {
    (3, 3, 0): (9, 36, 84, 126, 126, 84, 36, 9, 1),
    (3, 3, 1): (9, 36, 78, 108, 96, 54, 18, 3, 0),
    (3, 3, 2): (9, 18, 24, 18, 6, 0, 0, 0, 0),
    (4, 4, 0): (16, 120, 560, 1820, 4368, 8008, 11440, 12870,
                11440, 8008, 4368, 1820, 560, 120, 16, 1),
    (4, 4, 1): (16, 120, 560, 1796, 4224, 7528, 10360, 11114,
                9312, 6056, 3008, 1108, 288, 48, 4, 0),
    (4, 4, 2): (16, 120, 464, 1220, 2304, 3208, 3336, 2602,
                1504, 616, 160, 20, 0, 0, 0, 0),
    (4, 4, 3): (16, 48, 104, 152, 144, 80, 20, 0,
                0, 0, 0, 0, 0, 0, 0, 0),
}

CSM_OPEN = {
    (3, 3, 0): (0, 0, 6, 18, 30, 30, 18, 6, 1),
    (3, 3, 1): (0, 18, 54, 90, 90, 54, 18, 3, 0),
    (3, 3, 2): (9, 18, 24, 18, 6, 0, 0, 0, 0),
    (4, 4, 0): (0, 0, 0, 24, 144, 480, 1080, 1756,
                2128, 1952, 1360, 712, 272, 72, 12, 1),
    (4, 4, 1): (0, 0, 96, 576, 1920, 4320, 7024, 8512,
                7808, 5440, 2848, 1088, 288, 48, 4, 0),
    (4, 4, 2): (0, 72, 360, 1068, 2160, 3128, 3316, 2602,
                1504, 616, 160, 20, 0, 0, 0, 0),
    (4, 4, 3): (16, 48, 104, 152, 144, 80, 20, 0,
                0, 0, 0, 0, 0, 0, 0, 0),
}

CON = {
    (4, 4, 1): (0, 0, 0, 0, 0, 0, 0, 0, 20, 60, 84, 68, 36, 12, 4),
    (4, 4, 2): (0, 0, 0, 20, 80, 176, 256, 286, 256, 176, 80, 20, 0, 0, 0),
    (4, 4, 3): (4, 12, 36, 68, 84, 60, 20, 0, 0, 0, 0, 0, 0, 0, 0),
    (5, 4, 1): (0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 35, 120, 190, 176, 105, 40, 10, 0),
    (5, 4, 2): (0, 0, 0, 0, 0, 50, 240, 595, 960, 1116, 960, 595, 240, 50, 0, 0, 0, 0, 0),
    (5, 4, 3): (0, 10, 40, 105, 176, 190, 120, 35, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0),
}

CH = {
    (4, 4, 1): (4, 12, 36, 88, 164, 236, 276, 286, 276, 236, 164, 88, 36, 12, 4),
    (4, 4, 2): (-8, -24, -72, -156, -248, -296, -296, -286,
                -256, -176, -80, -20, 0, 0, 0),
    (4, 4, 3): (4, 12, 36, 68, 84, 60, 20, 0, 0, 0, 0, 0, 0, 0, 0),
    (4, 3, 1): (0, 6, 16, 27, 24, 0, -24, -27, -16, -6, 0),
    (4, 3, 2): (0, -6, -16, -27, -24, -10, 0, 0, 0, 0, 0),
}

CH_OPEN = {
    (4, 4, 1): (12, 36, 108, 244, 412, 532, 572, 572, 532, 412, 244, 108, 36, 12, 4),
    (4, 4, 2): (-12, -36, -108, -224, -332, -356, -316, -286,
                -256, -176, -80, -20, 0, 0, 0),
    (4, 3, 1): (0, 12, 32, 54, 48, 10, -24, -27, -16, -6, 0),
}

# Generic Euclidean distance degrees, rows (m, n, k, value); the square
# corank-1 and corank-(n-1) families coincide (dual varieties).
GED = (
    (2, 2, 1, 6), (3, 3, 1, 39), (4, 4, 1, 284), (5, 5, 1, 2205),
    (6, 6, 1, 17730), (7, 7, 1, 145635), (8, 8, 1, 1213560), (9, 9, 1, 10218105),
    (3, 2, 1, 10), (4, 3, 1, 83), (5, 4, 1, 676), (6, 5, 1, 5557),
    (7, 6, 1, 46222), (8, 7, 1, 388327), (9, 8, 1, 3288712), (10, 9, 1, 28031657),
    (2, 2, 1, 6), (3, 3, 2, 39), (4, 4, 3, 284), (5, 5, 4, 2205),
    (6, 6, 5, 17730), (7, 7, 6, 145635), (8, 8, 7, 1213560), (9, 9, 8, 10218105),
)

# Chern-Fulton class of the 3x3 determinant hypersurface, over [P^l]:
# 3H + 18H^2 + 54H^3 + 90H^4 + 108H^5 + 54H^6 + 90H^7 - 162H^8.
FULTON = {
    3: (-162, 90, 54, 108, 90, 54, 18, 3, 0),
}

# Milnor class 6H^4 + 24H^6 - 54H^7 + 171H^8 over [P^l].
MILNOR = {
    3: (171, -54, 24, 0, 6, 0, 0, 0, 0),
}

A_MATRICES = {
    (3, 3, 1): (
        (3, 9, 3, 0, 0, 0, 0),
        (0, -9, -9, 0, 0, 0, 0),
        (0, 0, 6, 0, 0, 0, 0),
        (0, 0, 0, 0, 0, 0, 0),
        (0, 0, 0, 0, 0, 0, 0),
        (0, 0, 0, 0, 0, 0, 0),
        (0, 0, 0, 0, 0, 0, 0),
    ),
    (4, 3, 2): (
        (3, 12, 10, 0, 0),
        (0, -12, -16, 0, 0),
        (0, 0, 6, 0, 0),
        (0, 0, 0, 0, 0),
        (0, 0, 0, 0, 0),
    ),
}
