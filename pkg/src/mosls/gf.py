"""Deterministic finite-field arithmetic for GF(p**d).

Elements are coefficient vectors over Z_p in ascending powers of t, reduced
modulo a canonical irreducible polynomial.  The modulus is always the
lexicographically smallest monic irreducible of the requested degree, so
equal parameters produce identical fields and everything built on top of
them is reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass


class FieldError(ValueError):
    """Bad field parameters or arithmetic across different contexts."""


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class FieldCtx:
    """Context for GF(p**d) represented as Z_p[t]/(modulus).

    modulus holds ascending coefficients, length d + 1, leading coefficient 1.
    """

    p: int
    d: int
    modulus: tuple[int, ...]

    @property
    def size(self) -> int:
        return self.p ** self.d


@dataclass(frozen=True)
class FieldElement:
    """Coefficients of 1, t, ..., t**(d-1), each reduced mod p."""

    coeffs: tuple[int, ...]
    ctx: FieldCtx

    def degree(self) -> int:
        """Largest power with a nonzero coefficient; -1 for the zero element."""
        for i in range(len(self.coeffs) - 1, -1, -1):
            if self.coeffs[i]:
                return i
        return -1

    def is_zero(self) -> bool:
        return self.degree() == -1


def _poly_degree(poly) -> int:
    for i in range(len(poly) - 1, -1, -1):
        if poly[i]:
            return i
    return -1


def _poly_rem(num, den, p: int):
    """Remainder of num modulo the monic polynomial den, over Z_p."""
    dd = _poly_degree(den)
    work = [c % p for c in num]
    if len(work) < dd:
        work.extend([0] * (dd - len(work)))
    for i in range(len(work) - 1, dd - 1, -1):
        c = work[i]
        if c:
            for j in range(dd + 1):
                work[i - dd + j] = (work[i - dd + j] - c * den[j]) % p
    return work[:dd]


def _monic_candidates(p: int, deg: int):
    """All monic degree-deg polynomials over Z_p, lexicographically by the
    base-p value of the lower coefficients."""
    for val in range(p ** deg):
        coeffs = [(val // p ** i) % p for i in range(deg)]
        coeffs.append(1)
        yield coeffs


def is_irreducible(p: int, poly) -> bool:
    """Exhaustive trial division by every monic divisor of degree
    1..deg(poly)//2 over Z_p."""
    if not is_prime(p):
        raise FieldError(f"{p} is not prime")
    deg = _poly_degree(poly)
    if deg < 1:
        raise FieldError("polynomial degree must be at least 1")
    if poly[deg] != 1:
        raise FieldError("polynomial must be monic")
    for ddeg in range(1, deg // 2 + 1):
        for den in _monic_candidates(p, ddeg):
            if _poly_degree(_poly_rem(poly, den, p)) == -1:
                return False
    return True


def make_field(p: int, d: int) -> FieldCtx:
    """Build GF(p**d) with the lex-smallest monic irreducible modulus."""
    if not is_prime(p):
        raise FieldError(f"{p} is not prime")
    if d < 1:
        raise FieldError("degree must be at least 1")
    for cand in _monic_candidates(p, d):
        if is_irreducible(p, cand):
            return FieldCtx(p, d, tuple(cand))
    raise FieldError(f"no irreducible polynomial of degree {d} over Z_{p}")  # unreachable


def _check_ctx(x: FieldElement, ctx: FieldCtx) -> None:
    if x.ctx != ctx:
        raise FieldError("element does not belong to this field context")


def zero(ctx: FieldCtx) -> FieldElement:
    return FieldElement((0,) * ctx.d, ctx)


def one(ctx: FieldCtx) -> FieldElement:
    return FieldElement((1,) + (0,) * (ctx.d - 1), ctx)


def from_int(ctx: FieldCtx, value: int) -> FieldElement:
    """Element whose coefficient tuple has base-p value `value`."""
    if not 0 <= value < ctx.size:
        raise FieldError(f"value {value} outside [0, {ctx.size})")
    return FieldElement(tuple((value // ctx.p ** i) % ctx.p for i in range(ctx.d)), ctx)


def to_int(x: FieldElement) -> int:
    """Base-p value of the coefficient tuple; the canonical element index."""
    return sum(c * x.ctx.p ** i for i, c in enumerate(x.coeffs))


def enumerate_elements(ctx: FieldCtx) -> list[FieldElement]:
    """All p**d elements in canonical (base-p value) order."""
    return [from_int(ctx, v) for v in range(ctx.size)]


def add(a: FieldElement, b: FieldElement, ctx: FieldCtx) -> FieldElement:
    _check_ctx(a, ctx)
    _check_ctx(b, ctx)
    return FieldElement(tuple((x + y) % ctx.p for x, y in zip(a.coeffs, b.coeffs)), ctx)


def sub(a: FieldElement, b: FieldElement, ctx: FieldCtx) -> FieldElement:
    _check_ctx(a, ctx)
    _check_ctx(b, ctx)
    return FieldElement(tuple((x - y) % ctx.p for x, y in zip(a.coeffs, b.coeffs)), ctx)


def neg(a: FieldElement, ctx: FieldCtx) -> FieldElement:
    _check_ctx(a, ctx)
    return FieldElement(tuple((-x) % ctx.p for x in a.coeffs), ctx)


def mul(a: FieldElement, b: FieldElement, ctx: FieldCtx) -> FieldElement:
    _check_ctx(a, ctx)
    _check_ctx(b, ctx)
    d = ctx.d
    prod = [0] * (2 * d - 1)
    for i, x in enumerate(a.coeffs):
        if x:
            for j, y in enumerate(b.coeffs):
                prod[i + j] += x * y
    rem = _poly_rem(prod, ctx.modulus, ctx.p)
    rem.extend([0] * (d - len(rem)))
    return FieldElement(tuple(rem), ctx)
