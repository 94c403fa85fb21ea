"""Latin squares with Sudoku block structure.

A square of shape (q, r) has order n = q*r over symbols 1..n and is tiled
by blocks of q rows by r columns.  Block-rows are indexed 1..r (each spans
q consecutive rows) and block-columns 1..q (each spans r consecutive
columns).  Validation is explicit rather than enforced at construction, so
invalid squares can be loaded from files and diagnosed.

The module also defines the plain-text family format used by the CLI:

    mosls v1
    order <n> type <q> <r> count <f>
    <f> squares, each n lines of n space-separated integers,
    consecutive squares separated by a single blank line
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


class FormatError(ValueError):
    """Malformed family file; messages carry 1-based line numbers."""


@dataclass(frozen=True)
class SudokuShape:
    """Block geometry (q, r): blocks have q rows and r columns."""

    q: int
    r: int

    def __post_init__(self):
        if self.q < 1 or self.r < 1:
            raise ValueError(f"shape parameters must be positive, got ({self.q}, {self.r})")

    @property
    def order(self) -> int:
        return self.q * self.r


@dataclass(frozen=True)
class Block:
    """One q-by-r block, addressed by block-row i and block-column j."""

    block_row: int
    block_col: int
    cells: np.ndarray

    def __eq__(self, other):
        return (
            isinstance(other, Block)
            and self.block_row == other.block_row
            and self.block_col == other.block_col
            and np.array_equal(self.cells, other.cells)
        )


class LatinSquare:
    """An n-by-n array over symbols 1..n with a shape annotation.

    The entries are stored read-only; operations return new squares.
    """

    __slots__ = ("shape", "entries")

    def __init__(self, entries, shape: SudokuShape):
        arr = np.array(entries, dtype=np.int64)
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
            raise ValueError(f"entries must be square, got shape {arr.shape}")
        if arr.shape[0] != shape.order:
            raise ValueError(
                f"entry array is {arr.shape[0]}x{arr.shape[0]} but shape "
                f"({shape.q}, {shape.r}) implies order {shape.order}"
            )
        arr.setflags(write=False)
        object.__setattr__(self, "entries", arr)
        object.__setattr__(self, "shape", shape)

    def __setattr__(self, name, value):
        raise AttributeError("LatinSquare is immutable")

    @property
    def order(self) -> int:
        return self.shape.order

    def __eq__(self, other):
        return (
            isinstance(other, LatinSquare)
            and self.shape == other.shape
            and np.array_equal(self.entries, other.entries)
        )

    def __repr__(self):
        return f"LatinSquare(order={self.order}, type=({self.shape.q}, {self.shape.r}))"


@dataclass(frozen=True)
class MoslsFamily:
    """An ordered tuple of squares sharing one shape."""

    shape: SudokuShape
    squares: tuple[LatinSquare, ...]

    def __post_init__(self):
        for k, sq in enumerate(self.squares, start=1):
            if sq.shape != self.shape:
                raise ValueError(f"square {k} has shape {sq.shape}, family has {self.shape}")

    def __len__(self) -> int:
        return len(self.squares)

    def __iter__(self):
        return iter(self.squares)


# ---------------------------------------------------------------------------
# validation predicates


def _check_symbol_range(L: LatinSquare) -> None:
    n = L.order
    bad = (L.entries < 1) | (L.entries > n)
    if bad.any():
        i, j = np.argwhere(bad)[0]
        raise ValueError(
            f"symbol {L.entries[i, j]} at row {i + 1}, column {j + 1} outside 1..{n}"
        )


def is_latin(L: LatinSquare) -> bool:
    """True iff every row and every column is a permutation of 1..n."""
    _check_symbol_range(L)
    n = L.order
    want = np.arange(1, n + 1)
    rows_ok = bool((np.sort(L.entries, axis=1) == want).all())
    cols_ok = bool((np.sort(L.entries, axis=0) == want[:, None]).all())
    return rows_ok and cols_ok


def is_sudoku(L: LatinSquare) -> bool:
    """True iff Latin and every q-by-r block contains each symbol once."""
    if not is_latin(L):
        raise ValueError("is_sudoku requires a Latin square")
    q, r = L.shape.q, L.shape.r
    want = np.arange(1, L.order + 1)
    for i in range(1, r + 1):
        for j in range(1, q + 1):
            cells = block(L, i, j).cells
            if not (np.sort(cells.ravel()) == want).all():
                return False
    return True


def are_orthogonal(a: LatinSquare, b: LatinSquare) -> bool:
    """True iff superimposing the squares yields all n**2 ordered pairs."""
    n = a.order
    if b.order != n:
        raise ValueError(f"order mismatch: {n} vs {b.order}")
    pairs = (a.entries.astype(np.int64) - 1) * n + (b.entries - 1)
    return np.unique(pairs).size == n * n


def block(L: LatinSquare, i: int, j: int) -> Block:
    """Block in block-row i (1..r) and block-column j (1..q)."""
    q, r = L.shape.q, L.shape.r
    if not 1 <= i <= r:
        raise ValueError(f"block-row {i} outside 1..{r}")
    if not 1 <= j <= q:
        raise ValueError(f"block-column {j} outside 1..{q}")
    cells = L.entries[(i - 1) * q : i * q, (j - 1) * r : j * r].copy()
    cells.setflags(write=False)
    return Block(i, j, cells)


def block_map_factorization(M: Block, M2: Block):
    """Row/column permutations turning one block into another.

    Returns (sigma, tau) with M.cells[a, b] == M2.cells[sigma[a], tau[b]]
    (0-based tuples), or None when no such pair exists.  Both blocks must
    hold the same symbols with no repeats.
    """
    A, B = M.cells, M2.cells
    if A.shape != B.shape:
        raise ValueError(f"block shape mismatch: {A.shape} vs {B.shape}")
    q, r = A.shape
    syms_a = sorted(A.ravel().tolist())
    syms_b = sorted(B.ravel().tolist())
    if len(set(syms_a)) != q * r or len(set(syms_b)) != q * r:
        raise ValueError("blocks must have all-distinct entries")
    if syms_a != syms_b:
        raise ValueError("blocks must use the same symbol set")
    where = {int(B[a, b]): (a, b) for a in range(q) for b in range(r)}
    sigma = [None] * q
    tau = [None] * r
    for a in range(q):
        for b in range(r):
            a2, b2 = where[int(A[a, b])]
            if sigma[a] is None:
                sigma[a] = a2
            elif sigma[a] != a2:
                return None
            if tau[b] is None:
                tau[b] = b2
            elif tau[b] != b2:
                return None
    # distinct symbols force sigma and tau to be bijections at this point
    assert sorted(sigma) == list(range(q)) and sorted(tau) == list(range(r))
    return tuple(sigma), tuple(tau)


def is_block_permutational(L: LatinSquare) -> bool:
    """True iff every block is a row/column permutation of the first block."""
    if not is_sudoku(L):
        raise ValueError("is_block_permutational requires a Sudoku square")
    base = block(L, 1, 1)
    for i in range(1, L.shape.r + 1):
        for j in range(1, L.shape.q + 1):
            if block_map_factorization(base, block(L, i, j)) is None:
                return False
    return True


def transpose(L: LatinSquare) -> LatinSquare:
    """Transpose the array; the shape flips from (q, r) to (r, q)."""
    return LatinSquare(L.entries.T.copy(), SudokuShape(L.shape.r, L.shape.q))


def family_pairwise_orthogonal(fam: MoslsFamily) -> bool:
    return all(
        are_orthogonal(fam.squares[i], fam.squares[j])
        for i in range(len(fam))
        for j in range(i + 1, len(fam))
    )


# ---------------------------------------------------------------------------
# text format


def format_family(fam: MoslsFamily) -> str:
    shape = fam.shape
    lines = [
        "mosls v1",
        f"order {shape.order} type {shape.q} {shape.r} count {len(fam)}",
    ]
    for k, sq in enumerate(fam.squares):
        if k:
            lines.append("")
        for row in sq.entries:
            lines.append(" ".join(str(int(v)) for v in row))
    return "\n".join(lines) + "\n"


def parse_family(text: str) -> MoslsFamily:
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()

    def fail(ln: int, msg: str):
        raise FormatError(f"line {ln}: {msg}")

    if not lines or lines[0].strip() != "mosls v1":
        fail(1, "expected header 'mosls v1'")
    if len(lines) < 2:
        fail(2, "missing size header")
    tokens = lines[1].split()
    if (
        len(tokens) != 7
        or tokens[0] != "order"
        or tokens[2] != "type"
        or tokens[5] != "count"
    ):
        fail(2, "expected 'order <n> type <q> <r> count <f>'")
    try:
        n, q, r, f = int(tokens[1]), int(tokens[3]), int(tokens[4]), int(tokens[6])
    except ValueError:
        fail(2, "size header fields must be integers")
    if q < 1 or r < 1 or q * r != n:
        fail(2, f"type ({q}, {r}) does not match order {n}")
    if f < 1:
        fail(2, f"count must be positive, got {f}")

    squares = []
    ln = 2  # 1-based index of the last consumed line
    for k in range(f):
        if k:
            ln += 1
            if ln > len(lines) or lines[ln - 1].strip() != "":
                fail(ln, f"expected blank line before square {k + 1}")
        rows = []
        for i in range(n):
            ln += 1
            if ln > len(lines):
                fail(ln, f"unexpected end of file inside square {k + 1}")
            parts = lines[ln - 1].split()
            if len(parts) != n:
                fail(ln, f"expected {n} integers, got {len(parts)}")
            try:
                row = [int(tok) for tok in parts]
            except ValueError:
                fail(ln, "entries must be integers")
            for v in row:
                if not 1 <= v <= n:
                    fail(ln, f"symbol {v} outside 1..{n}")
            rows.append(row)
        squares.append(LatinSquare(rows, SudokuShape(q, r)))
    if ln != len(lines):
        fail(ln + 1, "trailing content after last square")
    return MoslsFamily(SudokuShape(q, r), tuple(squares))


def save_family(fam: MoslsFamily, path) -> None:
    with open(path, "w") as fh:
        fh.write(format_family(fam))


def load_family(path) -> MoslsFamily:
    with open(path) as fh:
        return parse_family(fh.read())
