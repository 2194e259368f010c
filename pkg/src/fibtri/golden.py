"""Published reference values, embedded so that nothing is fetched at run time."""

EVEN_ROWS = (
    (1,),
    (1,),
    (1, 2),
    (1, 3),
    (1, 4, 7),
    (1, 5, 12),
    (1, 6, 18, 29),
    (1, 7, 25, 53),
    (1, 8, 33, 85, 130),
    (1, 9, 42, 126, 247),
    (1, 10, 52, 177, 414, 611),
    (1, 11, 63, 239, 642, 1192),
    (1, 12, 75, 313, 943, 2062, 2965),
)

ODD_ROWS = (
    (1,),
    (1,),
    (1, 1),
    (1, 2, 1),
    (1, 3, 4, 1),
    (1, 4, 8, 5, 1),
    (1, 5, 13, 17, 6, 1),
    (1, 6, 19, 35, 24, 7, 1),
    (1, 7, 26, 60, 77, 32, 8, 1),
    (1, 8, 34, 93, 162, 117, 41, 9, 1),
)

# entries (i, t) -> d'_i(t) of the partially drawn odd rows 10..12
ODD_PARTIAL = {
    **{(i, 10): v for i, v in enumerate((1, 9, 43, 135, 288, 364, 167, 51, 10, 1))},
    **{(i, 11): v for i, v in enumerate((53, 187, 465, 778, 581, 228, 62, 11), start=2)},
    **{(i, 12): v for i, v in enumerate((64, 250, 704, 1420, 1773, 870, 301, 74, 12), start=2)},
}

# south-east differences of the odd triangle, rows t = 0..12, trailing zero dropped
SE_DIFFERENCE_ROWS = (
    (1,),
    (1,),
    (1,),
    (1, 1),
    (1, 2, 2),
    (1, 3, 5, 1),
    (1, 4, 9, 9, 1),
    (1, 5, 14, 22, 7, 1),
    (1, 6, 20, 41, 42, 8, 1),
    (1, 7, 27, 67, 102, 40, 9, 1),
    (1, 8, 35, 101, 195, 202, 50, 10, 1),
    (1, 9, 44, 144, 330, 490, 217, 61, 11, 1),
    (1, 10, 54, 197, 517, 955, 995, 289, 73, 12, 1),
)

PYLON = (1, 2, 7, 29, 130, 611)
HIRSCHHORN = (1, 3, 12, 53, 247, 1192)
CENTRAL_DELANNOY = (1, 3, 13, 63, 321)

# printed diagonal polynomials: (kind, family, i) -> (binomial coefficients, (numerator
# coefficients of 1, t, t^2, ...), denominator)
PRINTED_POLYNOMIALS = {
    ("even", "d", 0): ((1,), (1,), 1),
    ("even", "d", 1): ((0, 1), (0, 1), 1),
    ("even", "d", 2): ((-3, 0, 1), (-6, -1, 1), 2),
    ("even", "d", 3): ((-3, -3, 2, 1), (-18, -22, 3, 1), 6),
    ("odd", "d'", 0): ((1,), (1,), 1),
    ("odd", "d'", 1): ((-1, 1), (-1, 1), 1),
    ("odd", "d'", 2): ((-2, 0, 1), (-4, -1, 1), 2),
    ("odd", "d'", 3): ((0, -3, 1, 1), (0, -19, 0, 1), 6),
    ("odd", "d''", 0): ((1,), (1,), 1),
    ("odd", "d''", 1): ((0, 1), (0, 1), 1),
    ("odd", "d''", 2): ((-4, 1, 1), (-8, 1, 1), 2),
    ("odd", "d''", 3): ((-3, -4, 2, 1), (-18, -28, 3, 1), 6),
}

# the one printed polynomial that disagrees with the triangle, and its fitted replacement
D2_PRINTED = (-3, 0, 1)
D2_FITTED = (-3, 1, 1)
