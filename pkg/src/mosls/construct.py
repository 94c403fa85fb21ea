"""Construction of mutually orthogonal Sudoku Latin square families.

Field families: for a prime power q*r = p**(m+n) with q = p**m, r = p**n
(m, n >= 1), index rows and columns of a square by the elements of
GF(p**(m+n)) grouped into additive cosets, and fill cell (x, y) of the
square attached to a field element a with the symbol x - a*y.  Choosing a
with degree exactly m makes every square Sudoku of type (q, r), and the
max(q, r)*(p-1) squares obtained this way (transposing when r > q) are
mutually orthogonal and block-permutational.

Composite orders: a product construction combines one family per prime
factor into a family of type (prod q_i, prod r_i) whose size is the
minimum of the factor family sizes.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from itertools import product as iproduct

from . import gf
from .designs import LatinSquare, MoslsFamily, SudokuShape, transpose

DEFAULT_ORDER_CAP = 16


class OrderCapError(ValueError):
    """Requested order exceeds the configured cap."""


@dataclass(frozen=True)
class FieldConstructionSpec:
    """Parameters (p, m, n) of a field family: type (p**m, p**n)."""

    p: int
    m: int
    n: int

    def __post_init__(self):
        if not gf.is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")
        if self.m < 0 or self.n < 0 or self.m + self.n < 1:
            raise ValueError(f"invalid exponents ({self.m}, {self.n})")

    @property
    def q(self) -> int:
        return self.p ** self.m

    @property
    def r(self) -> int:
        return self.p ** self.n

    @property
    def order(self) -> int:
        return self.q * self.r


@dataclass(frozen=True)
class CosetPartition:
    """Additive cosets splitting GF(p**(m+n)) two ways.

    row_cosets: r lists of q elements each; concatenated they give the row
    order of a field square.  col_cosets: q lists of r elements giving the
    column order.  Each coset maps to one block-row (resp. block-column).
    """

    row_cosets: tuple[tuple[gf.FieldElement, ...], ...]
    col_cosets: tuple[tuple[gf.FieldElement, ...], ...]


def _span(ctx: gf.FieldCtx, degrees: range) -> list[gf.FieldElement]:
    """Elements supported on the given degree range, in canonical order."""
    out = []
    for digits in iproduct(*[range(ctx.p)] * len(degrees)):
        coeffs = [0] * ctx.d
        for pos, c in zip(degrees, digits):
            coeffs[pos] = c
        out.append(gf.FieldElement(tuple(coeffs), ctx))
    out.sort(key=gf.to_int)
    return out


def coset_partition(spec: FieldConstructionSpec, ctx: gf.FieldCtx) -> CosetPartition:
    """Canonical coset split of GF(p**(m+n)) for a type (p**m, p**n) family.

    Row cosets are offsets supported on degrees m..m+n-1 plus the span of
    degrees below m; column cosets swap the two roles.  Cosets and their
    members are ordered by canonical element index.
    """
    if spec.m < 1 or spec.n < 1:
        raise ValueError("coset partition needs m >= 1 and n >= 1")
    if ctx.p != spec.p or ctx.d != spec.m + spec.n:
        raise ValueError(f"context GF({ctx.p}**{ctx.d}) does not match spec {spec}")
    m, n = spec.m, spec.n
    row_base = _span(ctx, range(0, m))
    row_offs = _span(ctx, range(m, m + n))
    col_base = _span(ctx, range(0, n))
    col_offs = _span(ctx, range(n, m + n))
    rows = tuple(tuple(gf.add(o, b, ctx) for b in row_base) for o in row_offs)
    cols = tuple(tuple(gf.add(o, b, ctx) for b in col_base) for o in col_offs)
    return CosetPartition(rows, cols)


def field_square(
    a: gf.FieldElement,
    spec: FieldConstructionSpec,
    ctx: gf.FieldCtx,
    partition: CosetPartition,
) -> LatinSquare:
    """Square with entries x - a*y over the coset-ordered rows and columns.

    The symbol written at (x, y) is the 1-based canonical index of x - a*y.
    """
    if a.is_zero():
        raise ValueError("multiplier a must be nonzero")
    rows = [x for coset in partition.row_cosets for x in coset]
    cols = [y for coset in partition.col_cosets for y in coset]
    ent = [
        [1 + gf.to_int(gf.sub(x, gf.mul(a, y, ctx), ctx)) for y in cols]
        for x in rows
    ]
    return LatinSquare(ent, SudokuShape(spec.q, spec.r))


def _field_family_direct(spec: FieldConstructionSpec) -> MoslsFamily:
    ctx = gf.make_field(spec.p, spec.m + spec.n)
    part = coset_partition(spec, ctx)
    squares = [
        field_square(a, spec, ctx, part)
        for a in gf.enumerate_elements(ctx)
        if a.degree() == spec.m
    ]
    return MoslsFamily(SudokuShape(spec.q, spec.r), tuple(squares))


def mosls_count(p: int, m: int, n: int) -> int:
    """Size of the family produced for (p, m, n)."""
    spec = FieldConstructionSpec(p, m, n)
    if m >= 1 and n >= 1:
        return max(spec.q, spec.r) * (p - 1)
    return p ** (m + n) - 1


def field_mosls(spec: FieldConstructionSpec, order_cap: int = DEFAULT_ORDER_CAP) -> MoslsFamily:
    """Full field family of type (q, r), size max(q, r)*(p-1).

    When r > q the family is built with the roles of m and n swapped and
    every square transposed, which realises the larger count.
    """
    if spec.m < 1 or spec.n < 1:
        raise ValueError("field_mosls needs m >= 1 and n >= 1; use plain_mols for flat types")
    if spec.order > order_cap:
        raise OrderCapError(f"order {spec.order} exceeds cap {order_cap}")
    if spec.m >= spec.n:
        return _field_family_direct(spec)
    swapped = FieldConstructionSpec(spec.p, spec.n, spec.m)
    fam = _field_family_direct(swapped)
    return MoslsFamily(
        SudokuShape(spec.q, spec.r), tuple(transpose(sq) for sq in fam.squares)
    )


def plain_mols(p: int, k: int, order_cap: int = DEFAULT_ORDER_CAP) -> MoslsFamily:
    """The p**k - 1 field squares x - a*y of type (1, p**k).

    Rows and columns follow the canonical element order; squares follow the
    canonical order of the nonzero multipliers a.
    """
    if k < 1:
        raise ValueError("plain_mols needs k >= 1")
    if p ** k > order_cap:
        raise OrderCapError(f"order {p ** k} exceeds cap {order_cap}")
    ctx = gf.make_field(p, k)
    elems = gf.enumerate_elements(ctx)
    shape = SudokuShape(1, p ** k)
    squares = []
    for a in elems:
        if a.is_zero():
            continue
        ent = [
            [1 + gf.to_int(gf.sub(x, gf.mul(a, y, ctx), ctx)) for y in elems]
            for x in elems
        ]
        squares.append(LatinSquare(ent, shape))
    return MoslsFamily(shape, tuple(squares))


def per_prime_family(
    p: int, m: int, n: int, order_cap: int = DEFAULT_ORDER_CAP
) -> MoslsFamily:
    """Family for one prime-power factor: field family when m, n >= 1,
    otherwise the plain MOLS family oriented to type (p**m, p**n)."""
    FieldConstructionSpec(p, m, n)  # validates
    if m >= 1 and n >= 1:
        return field_mosls(FieldConstructionSpec(p, m, n), order_cap)
    if m == 0:
        return plain_mols(p, n, order_cap)
    fam = plain_mols(p, m, order_cap)
    return MoslsFamily(
        SudokuShape(p ** m, 1), tuple(transpose(sq) for sq in fam.squares)
    )


def product(f1: MoslsFamily, f2: MoslsFamily) -> MoslsFamily:
    """Pairwise product family of type (q1*q2, r1*r2), size min(f1, f2).

    Rows of a product square are ordered by block-row pair (i1, i2)
    lexicographically, then by row offset pair; columns likewise with
    block-columns.  The symbol is the pairing 1 + (s1-1)*n2 + (s2-1).
    """
    if len(f1) == 0 or len(f2) == 0:
        raise ValueError("product requires non-empty families")
    q1, r1 = f1.shape.q, f1.shape.r
    q2, r2 = f2.shape.q, f2.shape.r
    n1, n2 = f1.shape.order, f2.shape.order
    shape = SudokuShape(q1 * q2, r1 * r2)

    row_pairs = [
        (i1 * q1 + a1, i2 * q2 + a2)
        for i1 in range(r1)
        for i2 in range(r2)
        for a1 in range(q1)
        for a2 in range(q2)
    ]
    col_pairs = [
        (j1 * r1 + b1, j2 * r2 + b2)
        for j1 in range(q1)
        for j2 in range(q2)
        for b1 in range(r1)
        for b2 in range(r2)
    ]

    squares = []
    for sq1, sq2 in zip(f1.squares, f2.squares):
        e1, e2 = sq1.entries, sq2.entries
        ent = [
            [
                1 + (int(e1[x1, y1]) - 1) * n2 + (int(e2[x2, y2]) - 1)
                for (y1, y2) in col_pairs
            ]
            for (x1, x2) in row_pairs
        ]
        squares.append(LatinSquare(ent, shape))
    return MoslsFamily(shape, tuple(squares))


def composite_count(factors) -> int:
    """Family size for a product over the given (p, m, n) factors."""
    specs = [FieldConstructionSpec(p, m, n) for p, m, n in factors]
    if len({s.p for s in specs}) != len(specs):
        raise ValueError("factor primes must be distinct")
    return min(mosls_count(s.p, s.m, s.n) for s in specs)


def composite_mosls(factors, order_cap: int = DEFAULT_ORDER_CAP) -> MoslsFamily:
    """Iterated product family over distinct-prime factors (p, m, n).

    Factors are combined in ascending order of p; the result has type
    (prod p**m, prod p**n) and composite_count(factors) squares.
    """
    specs = sorted(
        (FieldConstructionSpec(p, m, n) for p, m, n in factors), key=lambda s: s.p
    )
    if not specs:
        raise ValueError("at least one factor is required")
    if len({s.p for s in specs}) != len(specs):
        raise ValueError("factor primes must be distinct")
    total = 1
    for s in specs:
        total *= s.order
    if total > order_cap:
        raise OrderCapError(f"order {total} exceeds cap {order_cap}")
    families = [per_prime_family(s.p, s.m, s.n, order_cap) for s in specs]
    return reduce(product, families)
