"""Exact and numeric spectra of integer symmetric matrices, plus the
closed-form spectra predicted for MOLS/MOSLS cell graphs.

Characteristic polynomials are computed exactly over the integers: the
matrix is reduced to Hessenberg form modulo a battery of word-sized primes,
the charpoly recurrence is evaluated mod each prime, and the integer
coefficients are recovered by Chinese remaindering against an a-priori
coefficient bound.  Reduction mod p commutes with taking det(tI - M), so
no prime is "unlucky" and the reconstruction is exact.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

EXACT_SIZE_CAP = 150


class SrgParameterError(ValueError):
    """Multiplicity formulas gave a negative or non-integer value."""


class ClosedFormRangeError(ValueError):
    """A closed-form multiplicity is negative for these parameters."""


# ---------------------------------------------------------------------------
# integer polynomials


@dataclass(frozen=True)
class IntPolynomial:
    """Integer polynomial, ascending coefficients, arbitrary precision."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        if len(self.coeffs) == 0:
            raise ValueError("polynomial needs at least one coefficient")
        if len(self.coeffs) > 1 and self.coeffs[-1] == 0:
            raise ValueError("leading coefficient must be nonzero")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def decimal_strings(self) -> list[str]:
        return [str(c) for c in self.coeffs]


def poly_mul(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    out = [0] * (a.degree + b.degree + 1)
    for i, x in enumerate(a.coeffs):
        if x:
            for j, y in enumerate(b.coeffs):
                out[i + j] += x * y
    return IntPolynomial(tuple(out))


def poly_divmod(num: IntPolynomial, den: IntPolynomial) -> tuple[IntPolynomial, IntPolynomial]:
    """Division by a monic divisor; exact integer arithmetic throughout."""
    if den.coeffs[-1] != 1:
        raise ValueError("divisor must be monic")
    work = list(num.coeffs)
    dd = den.degree
    if num.degree < dd:
        return IntPolynomial((0,)), num
    quot = [0] * (num.degree - dd + 1)
    for i in range(num.degree, dd - 1, -1):
        c = work[i]
        if c:
            quot[i - dd] = c
            for j in range(dd + 1):
                work[i - dd + j] -= c * den.coeffs[j]
    rem = work[:dd] if dd else [0]
    while len(rem) > 1 and rem[-1] == 0:
        rem.pop()
    return IntPolynomial(tuple(quot)), IntPolynomial(tuple(rem))


def poly_divexact(num: IntPolynomial, den: IntPolynomial) -> IntPolynomial:
    quot, rem = poly_divmod(num, den)
    if rem.coeffs != (0,):
        raise ValueError("division is not exact")
    return quot


def poly_from_roots(roots) -> IntPolynomial:
    acc = IntPolynomial((1,))
    for root in roots:
        acc = poly_mul(acc, IntPolynomial((-root, 1)))
    return acc


# ---------------------------------------------------------------------------
# exact characteristic polynomial

_PRIME_POOL: list[int] = []


def _more_primes(count: int) -> list[int]:
    """Primes just below 2**26, largest first; products of two residues and
    row sums of up to 150 of them stay inside int64."""
    cand = _PRIME_POOL[-1] - 1 if _PRIME_POOL else (1 << 26) - 1
    while len(_PRIME_POOL) < count:
        is_p = cand >= 2
        d = 2
        while d * d <= cand:
            if cand % d == 0:
                is_p = False
                break
            d += 1
        if is_p:
            _PRIME_POOL.append(cand)
        cand -= 1
    return _PRIME_POOL[:count]


def _hessenberg_charpoly_mod(M: np.ndarray, p: int) -> list[int]:
    """Charpoly of M over Z_p via Hessenberg reduction, ascending coeffs."""
    H = np.mod(M, p).astype(np.int64)
    n = H.shape[0]
    for k in range(n - 2):
        col = H[k + 1 :, k]
        nz = np.nonzero(col)[0]
        if nz.size == 0:
            continue
        piv = k + 1 + int(nz[0])
        if piv != k + 1:
            H[[k + 1, piv]] = H[[piv, k + 1]]
            H[:, [k + 1, piv]] = H[:, [piv, k + 1]]
        inv = pow(int(H[k + 1, k]), p - 2, p)
        factors = (H[k + 2 :, k] * inv) % p
        H[k + 2 :] = (H[k + 2 :] - factors[:, None] * H[k + 1]) % p
        H[:, k + 1] = (H[:, k + 1] + H[:, k + 2 :] @ factors) % p

    # P[k] holds coeffs of det(tI - H[:k,:k]); expand along last columns
    P = np.zeros((n + 1, n + 1), dtype=np.int64)
    P[0, 0] = 1
    prods = np.zeros(n, dtype=np.int64)  # prods[i] = H[i+1,i]*...*H[k-1,k-2]
    for k in range(1, n + 1):
        if k >= 2:
            sub = int(H[k - 1, k - 2])
            prods[: k - 2] = (prods[: k - 2] * sub) % p
            prods[k - 2] = sub
        P[k, 1 : k + 1] = P[k - 1, :k]
        P[k, :k] -= (int(H[k - 1, k - 1]) * P[k - 1, :k]) % p
        if k >= 2:
            w = (H[: k - 1, k - 1] * prods[: k - 1]) % p
            # dot products stay below 150 * 2**52, inside int64
            P[k, :k] -= (w @ P[: k - 1, :k]) % p
        P[k] %= p
    return [int(c) for c in P[n]]


def charpoly_exact(M, size_cap: int = EXACT_SIZE_CAP) -> IntPolynomial:
    """det(tI - M) with exact integer coefficients.

    M must be a square integer matrix with at most size_cap rows; the cap
    keeps the modular reconstruction comfortably fast.
    """
    A = np.array(M, dtype=np.int64)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise ValueError(f"matrix must be square, got shape {A.shape}")
    n = A.shape[0]
    if n > size_cap:
        raise ValueError(f"matrix size {n} exceeds exact cap {size_cap}")
    if n == 0:
        return IntPolynomial((1,))

    # every |coefficient| is at most (1 + max row sum)**n
    rho = int(np.abs(A).sum(axis=1).max())
    bound = 2 * (1 + rho) ** n

    primes: list[int] = []
    residues: list[list[int]] = []
    prod = 1
    idx = 0
    while prod <= bound:
        p = _more_primes(idx + 1)[idx]
        primes.append(p)
        residues.append(_hessenberg_charpoly_mod(A, p))
        prod *= p
        idx += 1

    coeffs = []
    for k in range(n + 1):
        x, mod = 0, 1
        for p, res in zip(primes, residues):
            delta = (res[k] - x) * pow(mod % p, p - 2, p) % p
            x += mod * delta
            mod *= p
        if x > mod // 2:
            x -= mod
        coeffs.append(x)
    return IntPolynomial(tuple(coeffs))


# ---------------------------------------------------------------------------
# numeric spectrum (cyclic Jacobi)


def jacobi_eigenvalues(M, tol: float = 1e-12, max_sweeps: int = 100) -> np.ndarray:
    """Eigenvalues of a symmetric matrix by cyclic Jacobi rotations.

    Sweeps run until the off-diagonal Frobenius norm falls below
    tol * ||M||_F.  Returns eigenvalues in descending order.
    """
    A = np.array(M, dtype=np.float64)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise ValueError(f"matrix must be square, got shape {A.shape}")
    if not np.array_equal(A, A.T):
        raise ValueError("matrix must be symmetric")
    n = A.shape[0]
    if n == 1:
        return A.diagonal().copy()
    target = tol * max(np.linalg.norm(A), 1e-300)

    def offnorm():
        return math.sqrt(max(np.sum(A * A) - np.sum(A.diagonal() ** 2), 0.0))

    for _ in range(max_sweeps):
        if offnorm() <= target:
            break
        for i in range(n - 1):
            for j in range(i + 1, n):
                aij = A[i, j]
                if abs(aij) < 1e-300:
                    continue
                theta = (A[j, j] - A[i, i]) / (2.0 * aij)
                t = math.copysign(1.0, theta) / (abs(theta) + math.hypot(theta, 1.0))
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                rot = np.array([[c, s], [-s, c]])
                A[[i, j], :] = rot.T @ A[[i, j], :]
                A[:, [i, j]] = A[:, [i, j]] @ rot
                A[i, j] = A[j, i] = 0.0
    return np.sort(A.diagonal())[::-1]


@dataclass
class SpectrumReport:
    """Exact charpoly (when available) with grouped numeric eigenvalues."""

    charpoly: IntPolynomial | None
    numeric: list[tuple[float, int]]
    residual: float

    def to_json_dict(self) -> dict:
        out = {}
        if self.charpoly is not None:
            out["charpoly"] = self.charpoly.decimal_strings()
        out["numeric"] = [{"value": v, "mult": m} for v, m in self.numeric]
        if self.charpoly is not None:
            out["residual"] = self.residual
        return out


def _group_values(values: np.ndarray, group_tol: float) -> list[tuple[float, int]]:
    groups: list[list[float]] = []
    for v in values:  # descending
        if groups and abs(groups[-1][-1] - v) <= group_tol:
            groups[-1].append(float(v))
        else:
            groups.append([float(v)])
    return [(sum(g) / len(g), len(g)) for g in groups]


def _relative_residual(poly: IntPolynomial, points) -> float:
    """max |p(x)| / sum |c_k x^k|, evaluated in exact rational arithmetic."""
    from fractions import Fraction

    worst = 0.0
    for x in points:
        fx = Fraction(x).limit_denominator(10**15)
        num = Fraction(0)
        den = Fraction(0)
        power = Fraction(1)
        for c in poly.coeffs:
            num += c * power
            den += abs(c) * abs(power)
            power *= fx
        if den == 0:
            continue
        worst = max(worst, abs(float(num / den)))
    return worst


def numeric_spectrum(
    M,
    tol: float = 1e-12,
    group_tol: float = 1e-6,
    with_charpoly: bool = True,
) -> SpectrumReport:
    """Jacobi eigenvalues grouped into multiplicities, with the exact
    charpoly and a relative evaluation residual when requested."""
    values = jacobi_eigenvalues(M, tol=tol)
    numeric = _group_values(values, group_tol)
    if not with_charpoly:
        return SpectrumReport(None, numeric, 0.0)
    poly = charpoly_exact(M)
    residual = _relative_residual(poly, [v for v, _ in numeric])
    return SpectrumReport(poly, numeric, residual)


# ---------------------------------------------------------------------------
# closed-form spectra


@dataclass(frozen=True)
class Surd:
    """The real number (a + b*sqrt(d)) / den with integers throughout."""

    a: int
    b: int
    d: int
    den: int = 1

    def __post_init__(self):
        if self.d <= 0 or self.den <= 0:
            raise ValueError("need positive discriminant and denominator")

    def conjugate(self) -> "Surd":
        return Surd(self.a, -self.b, self.d, self.den)

    def value(self) -> float:
        return (self.a + self.b * math.sqrt(self.d)) / self.den


def _normalize_surd(a: int, b: int, d: int, den: int):
    """Pull square factors of d into b; collapse to an int when possible."""
    if d < 0:
        raise ValueError("discriminant must be non-negative")
    root = math.isqrt(d)
    if root * root == d:
        num = a + b * root
        if num % den == 0:
            return num // den
        raise ValueError(f"non-integer rational eigenvalue {num}/{den}")
    f = 1
    k = 2
    rem = d
    while k * k <= rem:
        while rem % (k * k) == 0:
            rem //= k * k
            f *= k
        k += 1
    return Surd(a, b * f, rem, den)


@dataclass(frozen=True)
class ClosedSpectrum:
    """Eigenvalues (ints or quadratic surds) with multiplicities."""

    entries: tuple[tuple[object, int], ...]

    def total_multiplicity(self) -> int:
        return sum(m for _, m in self.entries)

    def as_pairs(self) -> list[tuple[float, int]]:
        out = [
            (e.value() if isinstance(e, Surd) else float(e), m)
            for e, m in self.entries
        ]
        return sorted(out, key=lambda t: -t[0])


def _merge_entries(pairs) -> ClosedSpectrum:
    merged: dict[object, int] = {}
    order: list[object] = []
    for value, mult in pairs:
        if mult < 0:
            raise ClosedFormRangeError(f"negative multiplicity {mult} for eigenvalue {value}")
        if mult == 0:
            continue
        if value not in merged:
            merged[value] = 0
            order.append(value)
        merged[value] += mult
    return ClosedSpectrum(tuple((v, merged[v]) for v in order))


def srg_spectrum(n: int, k: int, lam: int, mu: int) -> ClosedSpectrum:
    """Spectrum of a strongly regular graph with parameters (n, k, lam, mu).

    Raises SrgParameterError when the multiplicity formulas do not give
    non-negative integers.
    """
    disc = (lam - mu) ** 2 + 4 * (k - mu)
    if disc <= 0:
        raise SrgParameterError(f"non-positive discriminant {disc}")
    numer = 2 * k + (n - 1) * (lam - mu)
    root = math.isqrt(disc)
    if root * root == disc:
        if numer % root:
            raise SrgParameterError(f"multiplicity split {numer}/{root} is not integral")
        half = n - 1 - numer // root
        if half % 2:
            raise SrgParameterError("multiplicities are not integers")
        s = half // 2
        t = n - 1 - s
        if s < 0 or t < 0:
            raise SrgParameterError(f"negative multiplicities s={s}, t={t}")
        theta = _normalize_surd(lam - mu, 1, root * root, 2)
        tau = _normalize_surd(lam - mu, -1, root * root, 2)
        return _merge_entries([(k, 1), (theta, s), (tau, t)])
    if numer != 0 or (n - 1) % 2:
        raise SrgParameterError(
            f"irrational eigenvalues need 2k + (n-1)(lam-mu) = 0, got {numer}"
        )
    s = t = (n - 1) // 2
    return _merge_entries(
        [(k, 1), (_normalize_surd(lam - mu, 1, disc, 2), s), (_normalize_surd(lam - mu, -1, disc, 2), t)]
    )


def quotient_spectrum(q: int, r: int, f: int) -> ClosedSpectrum:
    """Spectrum of the block quotient of a MOSLS cell graph."""
    return _merge_entries(
        [
            (3 * q * r - q - r - 1 + f * (q * r - 1), 1),
            (2 * q * r - q - r - 1 - f, q + r - 2),
            (q * r - q - r - 1 - f, (q - 1) * (r - 1)),
        ]
    )


def mosls_graph_spectrum(q: int, r: int, f: int) -> ClosedSpectrum:
    """Closed-form spectrum of the MOSLS cell graph on f squares of type
    (q, r), valid when the Latin adjacency commutes with the block
    adjacency (true for block-permutational families)."""
    if f < 1:
        raise ValueError("need at least one square")
    e = (q - 1) * (r - 1)
    lines = [
        (e + (q * r - 1) * (f + 2), 1),
        (e + q * r - 2 - f, q + r - 2),
        (e - 2 - f, (q - 1) * (r - 1)),
        (q * r - 1 - f, f * (q - 1) * (r - 1)),
        (q * r - q - 1 - f, (r - 1) * (q + f)),
        (q * r - r - 1 - f, (q - 1) * (r + f)),
        (-1 - f, (q - 1) * (r - 1) * (q * r - f)),
        (-q - 1 - f, (r - 1) * (q * r - q - f)),
        (-r - 1 - f, (q - 1) * (q * r - r - f)),
    ]
    spectrum = _merge_entries(lines)
    assert spectrum.total_multiplicity() == (q * r) ** 2
    return spectrum


def closed_to_poly(spectrum: ClosedSpectrum) -> IntPolynomial:
    """Expand a closed spectrum into its monic integer polynomial.

    Integer eigenvalues contribute linear factors; surds must occur in
    conjugate pairs with equal multiplicity and contribute the quadratic
    t**2 - 2*(a/den)*t + (a**2 - b**2 d)/den**2, which must be integral.
    """
    acc = IntPolynomial((1,))
    surd_mults: dict[Surd, int] = {}
    for value, mult in spectrum.entries:
        if isinstance(value, Surd):
            surd_mults[value] = mult
            continue
        factor = IntPolynomial((-int(value), 1))
        for _ in range(mult):
            acc = poly_mul(acc, factor)
    seen = set()
    for surd, mult in surd_mults.items():
        if surd in seen:
            continue
        conj = surd.conjugate()
        if conj not in surd_mults or surd_mults[conj] != mult:
            raise ValueError(f"unpaired surd eigenvalue {surd}")
        seen.add(surd)
        seen.add(conj)
        if (2 * surd.a) % surd.den or (surd.a**2 - surd.b**2 * surd.d) % surd.den**2:
            raise ValueError(f"surd pair {surd} does not give an integer factor")
        quad = IntPolynomial(
            (
                (surd.a**2 - surd.b**2 * surd.d) // surd.den**2,
                -2 * surd.a // surd.den,
                1,
            )
        )
        for _ in range(mult):
            acc = poly_mul(acc, quad)
    return acc


def cospectral(a: IntPolynomial, b: IntPolynomial) -> bool:
    """Equality test for charpolys of equal degree."""
    if a.degree != b.degree:
        raise ValueError(f"degree mismatch: {a.degree} vs {b.degree}")
    return a.coeffs == b.coeffs
