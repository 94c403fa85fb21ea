"""Reference squares and spectra shared across the test suite.

The grids are small published-style examples of orthogonal (Sudoku) Latin
squares; the spectra are the known closed-form eigenvalue multisets of
their cell graphs.  Everything here is frozen input data for tests.
"""

import numpy as np

from mosls import LatinSquare, MoslsFamily, SudokuShape

# orthogonal Sudoku pair of order 4, type (2,2)
FOUR_A = LatinSquare(
    [[1, 2, 4, 3], [3, 4, 2, 1], [4, 3, 1, 2], [2, 1, 3, 4]], SudokuShape(2, 2)
)
FOUR_B = LatinSquare(
    [[1, 4, 3, 2], [3, 2, 1, 4], [4, 1, 2, 3], [2, 3, 4, 1]], SudokuShape(2, 2)
)
FOUR_FAMILY = MoslsFamily(SudokuShape(2, 2), (FOUR_A, FOUR_B))

# printed adjacency of the two-square order-4 MOSLS graph, in block-major
# vertex order: blocks (1,1),(1,2),(2,1),(2,2), cells row-major inside
FOUR_PRINTED_ADJACENCY = np.array(
    [
        [0, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 0, 0, 1],
        [1, 0, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 0, 1, 1, 0],
        [1, 1, 0, 1, 1, 1, 1, 1, 1, 1, 1, 1, 0, 1, 1, 0],
        [1, 1, 1, 0, 1, 1, 1, 1, 1, 1, 1, 1, 1, 0, 0, 1],
        [1, 1, 1, 1, 0, 1, 1, 1, 1, 0, 0, 1, 1, 1, 1, 1],
        [1, 1, 1, 1, 1, 0, 1, 1, 0, 1, 1, 0, 1, 1, 1, 1],
        [1, 1, 1, 1, 1, 1, 0, 1, 0, 1, 1, 0, 1, 1, 1, 1],
        [1, 1, 1, 1, 1, 1, 1, 0, 1, 0, 0, 1, 1, 1, 1, 1],
        [1, 1, 1, 1, 1, 0, 0, 1, 0, 1, 1, 1, 1, 1, 1, 1],
        [1, 1, 1, 1, 0, 1, 1, 0, 1, 0, 1, 1, 1, 1, 1, 1],
        [1, 1, 1, 1, 0, 1, 1, 0, 1, 1, 0, 1, 1, 1, 1, 1],
        [1, 1, 1, 1, 1, 0, 0, 1, 1, 1, 1, 0, 1, 1, 1, 1],
        [1, 0, 0, 1, 1, 1, 1, 1, 1, 1, 1, 1, 0, 1, 1, 1],
        [0, 1, 1, 0, 1, 1, 1, 1, 1, 1, 1, 1, 1, 0, 1, 1],
        [0, 1, 1, 0, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 0, 1],
        [1, 0, 0, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 0],
    ],
    dtype=np.int64,
)

# switching pair of order 4, type (2,2): SWITCH4_B arises from SWITCH4_A
# by swapping rows 2 and 4 along the cycle through columns 3,4
SWITCH4_A = LatinSquare(
    [[1, 2, 3, 4], [3, 4, 1, 2], [2, 1, 4, 3], [4, 3, 2, 1]], SudokuShape(2, 2)
)
SWITCH4_B = LatinSquare(
    [[1, 2, 3, 4], [3, 4, 2, 1], [2, 1, 4, 3], [4, 3, 1, 2]], SudokuShape(2, 2)
)
# swapping rows 2 and 3 of SWITCH4_A along the {1,4}-symbol cycle instead
# yields a Latin square that is not Sudoku
REMARK4 = LatinSquare(
    [[1, 2, 3, 4], [3, 1, 4, 2], [2, 4, 1, 3], [4, 3, 2, 1]], SudokuShape(2, 2)
)

# Sudoku square of order 6, type (2,3), and its symbol switch: symbols 1,4
# exchanged inside the first row band
SIX = LatinSquare(
    [
        [1, 2, 3, 4, 5, 6],
        [4, 5, 6, 1, 2, 3],
        [2, 3, 1, 5, 6, 4],
        [5, 6, 4, 2, 3, 1],
        [3, 1, 2, 6, 4, 5],
        [6, 4, 5, 3, 1, 2],
    ],
    SudokuShape(2, 3),
)
SIX_SWITCHED = LatinSquare(
    [
        [4, 2, 3, 1, 5, 6],
        [1, 5, 6, 4, 2, 3],
        [2, 3, 1, 5, 6, 4],
        [5, 6, 4, 2, 3, 1],
        [3, 1, 2, 6, 4, 5],
        [6, 4, 5, 3, 1, 2],
    ],
    SudokuShape(2, 3),
)

# Sudoku square of order 9, type (3,3), and its symbol switch: symbols 1,2
# exchanged inside column band 3
NINE = LatinSquare(
    [
        [5, 6, 4, 8, 9, 7, 2, 3, 1],
        [9, 7, 8, 3, 1, 2, 6, 4, 5],
        [1, 2, 3, 4, 5, 6, 7, 8, 9],
        [3, 1, 2, 6, 4, 5, 9, 7, 8],
        [4, 5, 6, 7, 8, 9, 1, 2, 3],
        [8, 9, 7, 2, 3, 1, 5, 6, 4],
        [7, 8, 9, 1, 2, 3, 4, 5, 6],
        [2, 3, 1, 5, 6, 4, 8, 9, 7],
        [6, 4, 5, 9, 7, 8, 3, 1, 2],
    ],
    SudokuShape(3, 3),
)
NINE_SWITCHED = LatinSquare(
    [
        [5, 6, 4, 8, 9, 7, 1, 3, 2],
        [9, 7, 8, 3, 1, 2, 6, 4, 5],
        [1, 2, 3, 4, 5, 6, 7, 8, 9],
        [3, 1, 2, 6, 4, 5, 9, 7, 8],
        [4, 5, 6, 7, 8, 9, 2, 1, 3],
        [8, 9, 7, 2, 3, 1, 5, 6, 4],
        [7, 8, 9, 1, 2, 3, 4, 5, 6],
        [2, 3, 1, 5, 6, 4, 8, 9, 7],
        [6, 4, 5, 9, 7, 8, 3, 2, 1],
    ],
    SudokuShape(3, 3),
)

# closed-form eigenvalue multisets of the MOSLS cell graphs
SPECTRUM_FOUR_F2 = {13: 1, 1: 4, -1: 8, -3: 3}
SPECTRUM_SIX_F1 = {17: 1, 5: 3, 4: 2, 2: 6, 1: 4, -1: 2, -2: 10, -4: 6, -5: 2}
SPECTRUM_NINE_F1 = {28: 1, 10: 4, 7: 4, 4: 16, 1: 4, -2: 32, -5: 20}
SPECTRUM_SWITCH4_A = {10: 1, 2: 3, 0: 6, -2: 4, -4: 2}
# integer part of the switched order-4 spectrum; the two surds -1±sqrt(5)
# (each twice) enter through the factor (t^2 + 2t - 4)^2
SPECTRUM_SWITCH4_B_INT = {10: 1, 2: 2, 0: 5, -2: 3, -4: 1}


def single(square: LatinSquare) -> MoslsFamily:
    return MoslsFamily(square.shape, (square,))


def cyclic_square(n: int, shape: SudokuShape | None = None) -> LatinSquare:
    """Cyclic Latin square L(i, j) = ((i + j - 2) mod n) + 1."""
    ent = [[(i + j) % n + 1 for j in range(n)] for i in range(n)]
    return LatinSquare(ent, shape or SudokuShape(1, n))
