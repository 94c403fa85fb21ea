import numpy as np
import pytest

from mosls import (
    ClosedFormRangeError,
    ClosedSpectrum,
    IntPolynomial,
    SrgParameterError,
    Surd,
    build_mosls_graph,
    charpoly_exact,
    closed_to_poly,
    cospectral,
    jacobi_eigenvalues,
    mosls_graph_spectrum,
    numeric_spectrum,
    quotient_matrix,
    quotient_spectrum,
    srg_spectrum,
)
from mosls.spectra import (
    poly_divexact,
    poly_divmod,
    poly_from_roots,
    poly_mul,
)
from fixtures import (
    FOUR_FAMILY,
    SIX,
    SPECTRUM_FOUR_F2,
    SPECTRUM_NINE_F1,
    SPECTRUM_SIX_F1,
    single,
)


def spectrum_dict(closed) -> dict:
    return {v: m for v, m in closed.entries}


# ---------------------------------------------------------------------------
# polynomial arithmetic


def test_int_polynomial_basics():
    p = IntPolynomial((-1, 0, 1))  # t^2 - 1
    assert p.degree == 2
    assert p(3) == 8 and p(-1) == 0
    assert p.decimal_strings() == ["-1", "0", "1"]
    with pytest.raises(ValueError):
        IntPolynomial((1, 0))
    with pytest.raises(ValueError):
        IntPolynomial(())


def test_poly_mul():
    a = IntPolynomial((1, 1))
    b = IntPolynomial((-1, 1))
    assert poly_mul(a, b).coeffs == (-1, 0, 1)


def test_poly_divmod():
    num = IntPolynomial((1, 0, 1))  # t^2 + 1
    den = IntPolynomial((-1, 1))  # t - 1
    quot, rem = poly_divmod(num, den)
    assert quot.coeffs == (1, 1) and rem.coeffs == (2,)
    with pytest.raises(ValueError, match="monic"):
        poly_divmod(num, IntPolynomial((1, 2)))


def test_poly_divexact():
    num = IntPolynomial((-1, 0, 1))
    assert poly_divexact(num, IntPolynomial((-1, 1))).coeffs == (1, 1)
    with pytest.raises(ValueError, match="not exact"):
        poly_divexact(IntPolynomial((1, 0, 1)), IntPolynomial((-1, 1)))


def test_poly_from_roots():
    assert poly_from_roots([1, -1]).coeffs == (-1, 0, 1)
    assert poly_from_roots([]).coeffs == (1,)
    assert poly_from_roots([2, 2]).coeffs == (4, -4, 1)


# ---------------------------------------------------------------------------
# exact characteristic polynomial


def test_charpoly_small_cases():
    path3 = [[0, 1, 0], [1, 0, 1], [0, 1, 0]]
    assert charpoly_exact(path3).coeffs == (0, -2, 0, 1)
    assert charpoly_exact(np.zeros((4, 4))).coeffs == (0, 0, 0, 0, 1)
    assert charpoly_exact([[0, 1], [1, 0]]).coeffs == (-1, 0, 1)
    assert charpoly_exact(np.eye(3)).coeffs == (-1, 3, -3, 1)
    assert charpoly_exact(np.zeros((0, 0))).coeffs == (1,)


def test_charpoly_four_cycle():
    c4 = [[0, 1, 0, 1], [1, 0, 1, 0], [0, 1, 0, 1], [1, 0, 1, 0]]
    assert charpoly_exact(c4).coeffs == (0, 0, -4, 0, 1)


def test_charpoly_pivot_swap_path():
    # zero in the pivot position forces a row/column exchange
    m = [[0, 0, 1], [0, 0, 1], [1, 1, 0]]
    assert charpoly_exact(m).coeffs == (0, -2, 0, 1)


def test_charpoly_multi_prime_reconstruction():
    # coefficients beyond one word force several CRT primes
    big = 10**6
    m = [[big, 2], [2, -big]]
    assert charpoly_exact(m).coeffs == (-(big * big + 4), 0, 1)


def test_charpoly_nonsymmetric():
    m = [[0, 1], [0, 0]]
    assert charpoly_exact(m).coeffs == (0, 0, 1)
    assert charpoly_exact([[1, 2], [3, 4]]).coeffs == (-2, -5, 1)


def test_charpoly_matches_numpy_on_random_matrices():
    rng = np.random.default_rng(20240817)
    for n in (5, 8, 12):
        m = rng.integers(-3, 4, size=(n, n))
        got = charpoly_exact(m)
        ref = np.poly(m.astype(np.float64))[::-1]  # ascending
        assert np.allclose([float(c) for c in got.coeffs], ref, atol=1e-6)


def test_charpoly_input_validation():
    with pytest.raises(ValueError, match="square"):
        charpoly_exact(np.zeros((2, 3)))
    with pytest.raises(ValueError, match="cap"):
        charpoly_exact(np.zeros((5, 5)), size_cap=4)


# ---------------------------------------------------------------------------
# numeric spectrum


def test_jacobi_small():
    assert np.allclose(jacobi_eigenvalues([[0, 1], [1, 0]]), [1, -1])
    assert np.allclose(jacobi_eigenvalues([[5]]), [5])
    assert np.allclose(jacobi_eigenvalues(np.diag([1, 3, 2])), [3, 2, 1])


def test_jacobi_requires_symmetry():
    with pytest.raises(ValueError, match="symmetric"):
        jacobi_eigenvalues([[0, 1], [0, 0]])


def test_jacobi_matches_numpy():
    rng = np.random.default_rng(7)
    for n in (4, 9, 16):
        m = rng.integers(-2, 3, size=(n, n))
        m = m + m.T
        got = jacobi_eigenvalues(m)
        ref = np.sort(np.linalg.eigvalsh(m.astype(np.float64)))[::-1]
        assert np.allclose(got, ref, atol=1e-9)


def test_numeric_spectrum_grouping_and_residual():
    c4 = [[0, 1, 0, 1], [1, 0, 1, 0], [0, 1, 0, 1], [1, 0, 1, 0]]
    rep = numeric_spectrum(c4)
    assert [(round(v), m) for v, m in rep.numeric] == [(2, 1), (0, 2), (-2, 1)]
    assert rep.charpoly.coeffs == (0, 0, -4, 0, 1)
    assert rep.residual < 1e-9
    d = rep.to_json_dict()
    assert d["charpoly"] == ["0", "0", "-4", "0", "1"]
    assert d["numeric"][0]["mult"] == 1


def test_numeric_spectrum_without_charpoly():
    rep = numeric_spectrum([[2, 1], [1, 2]], with_charpoly=False)
    assert rep.charpoly is None
    assert [(round(v), m) for v, m in rep.numeric] == [(3, 1), (1, 1)]
    d = rep.to_json_dict()
    assert "charpoly" not in d and "residual" not in d


# ---------------------------------------------------------------------------
# closed forms


def test_srg_spectrum_mols_f1():
    got = spectrum_dict(srg_spectrum(16, 9, 4, 6))
    assert got == {9: 1, 1: 9, -3: 6}


def test_srg_spectrum_mols_f2():
    got = spectrum_dict(srg_spectrum(16, 12, 8, 12))
    assert got == {12: 1, 0: 12, -4: 3}


def test_srg_spectrum_petersen():
    assert spectrum_dict(srg_spectrum(10, 3, 0, 1)) == {3: 1, 1: 5, -2: 4}


def test_srg_spectrum_conference():
    got = srg_spectrum(5, 2, 0, 1)
    surds = {e for e, _ in got.entries if isinstance(e, Surd)}
    assert surds == {Surd(-1, 1, 5, 2), Surd(-1, -1, 5, 2)}
    assert all(m == 2 for e, m in got.entries if isinstance(e, Surd))
    assert closed_to_poly(got).coeffs == poly_mul(
        IntPolynomial((-2, 1)), poly_mul(IntPolynomial((-1, 1, 1)), IntPolynomial((-1, 1, 1)))
    ).coeffs


def test_srg_spectrum_rejects_bad_parameters():
    with pytest.raises(SrgParameterError):
        srg_spectrum(16, 9, 4, 7)
    with pytest.raises(SrgParameterError):
        srg_spectrum(6, 3, 0, 1)


def test_quotient_spectrum_values():
    assert spectrum_dict(quotient_spectrum(2, 2, 2)) == {13: 1, 1: 2, -3: 1}
    assert spectrum_dict(quotient_spectrum(2, 3, 1)) == {17: 1, 5: 3, -1: 2}
    assert spectrum_dict(quotient_spectrum(3, 3, 1)) == {28: 1, 10: 4, 1: 4}
    assert spectrum_dict(quotient_spectrum(1, 4, 2)) == {12: 1, 0: 3}
    assert quotient_spectrum(2, 3, 1).total_multiplicity() == 6


def test_quotient_matrix_charpoly_matches_closed_form():
    quo4 = quotient_matrix(build_mosls_graph(FOUR_FAMILY))
    assert charpoly_exact(quo4.entries).coeffs == closed_to_poly(
        quotient_spectrum(2, 2, 2)
    ).coeffs
    quo6 = quotient_matrix(build_mosls_graph(single(SIX)))
    assert charpoly_exact(quo6.entries).coeffs == closed_to_poly(
        quotient_spectrum(2, 3, 1)
    ).coeffs


def test_mosls_graph_spectrum_instances():
    assert spectrum_dict(mosls_graph_spectrum(2, 2, 2)) == SPECTRUM_FOUR_F2
    assert spectrum_dict(mosls_graph_spectrum(2, 3, 1)) == SPECTRUM_SIX_F1
    assert spectrum_dict(mosls_graph_spectrum(3, 3, 1)) == SPECTRUM_NINE_F1
    assert mosls_graph_spectrum(3, 3, 1).total_multiplicity() == 81


def test_mosls_graph_spectrum_rejects_out_of_range():
    with pytest.raises(ClosedFormRangeError):
        mosls_graph_spectrum(2, 2, 3)
    with pytest.raises(ValueError):
        mosls_graph_spectrum(2, 2, 0)


def test_closed_to_poly_integers():
    spec = ClosedSpectrum(((1, 1), (-1, 1)))
    assert closed_to_poly(spec).coeffs == (-1, 0, 1)


def test_closed_to_poly_surd_pairs():
    pair = ClosedSpectrum(
        ((Surd(-1, 1, 5), 2), (Surd(-1, -1, 5), 2))
    )
    # (t^2 + 2t - 4)^2
    assert closed_to_poly(pair).coeffs == (16, -16, -4, 4, 1)


def test_closed_to_poly_rejects_unpaired_surds():
    with pytest.raises(ValueError, match="unpaired"):
        closed_to_poly(ClosedSpectrum(((Surd(-1, 1, 5), 2),)))
    with pytest.raises(ValueError, match="unpaired"):
        closed_to_poly(
            ClosedSpectrum(((Surd(-1, 1, 5), 2), (Surd(-1, -1, 5), 1)))
        )


def test_closed_to_poly_half_integer_surds():
    # golden-ratio pair (1 +- sqrt 5)/2 gives the integer quadratic t^2-t-1
    pair = ClosedSpectrum(((Surd(1, 1, 5, 2), 1), (Surd(1, -1, 5, 2), 1)))
    assert closed_to_poly(pair).coeffs == (-1, -1, 1)


def test_closed_to_poly_rejects_non_integral_quadratic():
    bad = ClosedSpectrum(((Surd(1, 1, 5, 3), 1), (Surd(1, -1, 5, 3), 1)))
    with pytest.raises(ValueError, match="integer factor"):
        closed_to_poly(bad)


def test_surd_helpers():
    s = Surd(-1, 1, 5)
    assert s.conjugate() == Surd(-1, -1, 5)
    assert abs(s.value() - (np.sqrt(5) - 1)) < 1e-12
    with pytest.raises(ValueError):
        Surd(1, 1, -5)


def test_cospectral():
    a = IntPolynomial((0, -2, 0, 1))
    b = IntPolynomial((0, -2, 0, 1))
    c = IntPolynomial((0, -1, 0, 1))
    assert cospectral(a, b)
    assert not cospectral(a, c)
    with pytest.raises(ValueError, match="degree"):
        cospectral(a, IntPolynomial((0, 1)))


def test_graph_charpoly_matches_closed_form_order4():
    g = build_mosls_graph(FOUR_FAMILY)
    assert charpoly_exact(g.adjacency).coeffs == closed_to_poly(
        mosls_graph_spectrum(2, 2, 2)
    ).coeffs


def test_graph_numeric_matches_closed_form_order6():
    g = build_mosls_graph(single(SIX))
    rep = numeric_spectrum(g.adjacency)
    want = sorted(SPECTRUM_SIX_F1.items(), key=lambda t: -t[0])
    assert [(round(v), m) for v, m in rep.numeric] == want
    assert rep.residual < 1e-4
    assert sum(m for _, m in rep.numeric) == 36
    assert rep.charpoly.coeffs == closed_to_poly(mosls_graph_spectrum(2, 3, 1)).coeffs
