import random
from fractions import Fraction

import pytest
from conftest import mu_triples, random_spinor

from diracdunkl.birep import k1_eigenvalue
from diracdunkl.ck import ck_extend_x2, monogenic_basis
from diracdunkl.closedform import (
    UnivariatePoly,
    closed_basis_element,
    homogenized_jacobi,
    inner_product,
    jacobi,
    moment,
    monogenic_lift,
    normalized_wavefunction,
    overlap_matrix,
    planar_monogenic,
    squared_norm_factor,
    wavefunctions,
)
from diracdunkl.exact import GRational, HALF, Params, factorial, pochhammer
from diracdunkl.operators import (
    bi_generator,
    involution,
    scalar_op,
    spherical_dirac,
)
from diracdunkl.poly import ScalarPoly, SpinorPoly, pauli

P = Params(Fraction(1, 2), Fraction(1, 3), Fraction(2, 5))
CHI_PLUS = SpinorPoly.unit(1)
CHI_MINUS = SpinorPoly.unit(-1)


def up(exps, coef=1):
    return SpinorPoly.monomial(exps, 1, coef)


# --------------------------------------------------------------------------
# Jacobi polynomials.

def test_jacobi_examples():
    assert jacobi(0, Fraction(2, 7), Fraction(-1, 3)) == UnivariatePoly.constant(1)
    alpha, beta = Fraction(1, 2), Fraction(1, 3)
    expected = UnivariatePoly(
        [alpha + 1 - (alpha + beta + 2) * HALF, (alpha + beta + 2) * HALF]
    )
    assert jacobi(1, alpha, beta) == expected
    assert jacobi(1, 0, 0) == UnivariatePoly.x()


def test_jacobi_against_three_term_recurrence():
    rng = random.Random(3)
    for _ in range(4):
        alpha = Fraction(rng.randint(0, 8), rng.randint(1, 5))
        beta = Fraction(rng.randint(0, 8), rng.randint(1, 5))
        polys = [jacobi(n, alpha, beta) for n in range(7)]
        x = UnivariatePoly.x()
        for n in range(2, 7):
            a = 2 * n * (n + alpha + beta) * (2 * n + alpha + beta - 2)
            b_const = (2 * n + alpha + beta - 1) * (alpha**2 - beta**2)
            b_lin = (
                (2 * n + alpha + beta - 1)
                * (2 * n + alpha + beta)
                * (2 * n + alpha + beta - 2)
            )
            c = 2 * (n + alpha - 1) * (n + beta - 1) * (2 * n + alpha + beta)
            lhs = polys[n].scale(a)
            rhs = (x.scale(b_lin) + UnivariatePoly.constant(b_const)) * polys[n - 1]
            rhs = rhs - polys[n - 2].scale(c)
            assert lhs == rhs, (n, alpha, beta)


def test_homogenization_identity():
    # Three independent routes to the same two-variable polynomial:
    # series substitution, coefficient substitution, and the terminating
    # hypergeometric form in powers of the first variable.
    rng = random.Random(5)
    x = ScalarPoly.variable(1)
    y = ScalarPoly.variable(2)
    for m in range(5):
        for _ in range(3):
            alpha = Fraction(rng.randint(0, 9), rng.randint(1, 4))
            beta = Fraction(rng.randint(0, 9), rng.randint(1, 4))
            route_a = homogenized_jacobi(m, alpha, beta, x, y)

            coeffs = jacobi(m, alpha, beta).coeffs
            route_b = ScalarPoly.zero()
            for i, c in enumerate(coeffs):
                route_b = route_b + ((x - y) ** i * (x + y) ** (m - i)).scale(c)

            route_c = ScalarPoly.zero()
            for j in range(m + 1):
                c = (
                    pochhammer(alpha + 1, m)
                    * pochhammer(Fraction(-m), j)
                    * pochhammer(Fraction(-m) - beta, j)
                    * Fraction(-1) ** j
                    / (factorial(m) * factorial(j) * pochhammer(alpha + 1, j))
                )
                if c:
                    route_c = route_c + ((y**j) * (x ** (m - j))).scale(c)

            assert route_a == route_b == route_c, (m, alpha, beta)


# --------------------------------------------------------------------------
# Closed-form basis factors.

def test_planar_monogenic_small_cases():
    assert planar_monogenic(0, P)(CHI_PLUS) == CHI_PLUS
    result = planar_monogenic(1, P)(CHI_PLUS)
    ratio = (P.mu1 + HALF) / (P.mu2 + HALF)
    expected = up((1, 0, 0)) + pauli(
        pauli(SpinorPoly.monomial((0, 1, 0), 1, -ratio), 1), 2
    )
    assert result == expected


def test_planar_monogenic_matches_extension():
    for params in mu_triples(2, seed=55):
        for k in range(6):
            for sign in (1, -1):
                closed = planar_monogenic(k, params)(SpinorPoly.unit(sign))
                tower = ck_extend_x2(SpinorPoly.monomial((k, 0, 0), sign), params)
                assert closed == tower, (k, sign)


def test_lift_small_cases():
    rng = random.Random(57)
    f = random_spinor(rng, 2)
    assert monogenic_lift(3, 3, P)(f) == f  # equal degrees: identity factor
    lifted = monogenic_lift(1, 0, P)(CHI_PLUS)
    ratio = (P.mu1 + P.mu2 + 1) / (P.mu3 + HALF)
    expected = (
        pauli(SpinorPoly.monomial((1, 0, 0), 1), 1)
        + pauli(SpinorPoly.monomial((0, 1, 0), 1), 2)
        + pauli(SpinorPoly.monomial((0, 0, 1), 1, -ratio), 3)
    )
    assert lifted == expected


def test_closed_form_equals_tower():
    for params in mu_triples(2, seed=59):
        for N in range(6):
            basis = monogenic_basis(N, params)
            for el in basis.elements:
                closed = closed_basis_element(N, el.k, el.sign, params)
                assert closed == el.poly, (N, el.k, el.sign)


def test_lift_parameter_variant_is_inconsistent():
    # The even-branch leading Jacobi parameter admits two published variants
    # differing by one; only the one used here reproduces the extension
    # tower, the other is rejected by the same cross-check.
    basis = monogenic_basis(2, P)
    el = basis.elements[0]  # k = 0, sign +, N - k even
    good = closed_basis_element(2, el.k, el.sign, P, even_parameter_shift=0)
    bad = closed_basis_element(2, el.k, el.sign, P, even_parameter_shift=1)
    assert good == el.poly
    assert bad != el.poly


# --------------------------------------------------------------------------
# Moments and the scalar product.

def test_moment_examples():
    assert moment(P, 0, 0, 0) == 1
    assert moment(Params(0, 0, 0), 1, 0, 0) == Fraction(1, 3)
    half = Fraction(1, 2)
    assert moment(Params(half, half, half), 1, 1, 0) == Fraction(1, 12)


def test_odd_moments_vanish():
    for e1, e2 in (((1, 0, 0), (0, 0, 0)), ((1, 2, 0), (0, 0, 1)), ((3, 0, 1), (0, 1, 0))):
        f = up(e1)
        g = up(e2)
        assert inner_product(f, g, P) == GRational(0)


def test_inner_product_basics():
    assert inner_product(CHI_PLUS, CHI_PLUS, P) == GRational(1)
    assert inner_product(CHI_PLUS, CHI_MINUS, P) == GRational(0)
    f = up((1, 0, 0), GRational(0, 1))
    g = up((1, 0, 0))
    # conjugate-linear in the first argument
    assert inner_product(f, g, P) == GRational(0, -1) * inner_product(g, g, P)
    assert inner_product(g, f, P) == inner_product(f, g, P).conjugate()


def test_first_degree_monogenics_are_orthogonal():
    for params in mu_triples(3, seed=61):
        basis = monogenic_basis(1, params)
        plus_elements = [el.poly for el in basis.elements if el.sign == 1]
        assert inner_product(plus_elements[0], plus_elements[1], params) == GRational(0)


def test_self_adjointness():
    rng = random.Random(63)
    gamma = spherical_dirac(P)
    gens = [bi_generator(P, i) for i in (1, 2, 3)]
    for _ in range(3):
        f = random_spinor(rng, 3)
        g = random_spinor(rng, 3)
        for op in [gamma] + gens:
            assert inner_product(op(f), g, P) == inner_product(f, op(g), P)


# --------------------------------------------------------------------------
# Normalized wavefunctions.

def test_normalized_wavefunction_base_case():
    w = normalized_wavefunction(0, 0, 1, P)
    assert w.poly == CHI_PLUS
    assert w.squared_norm_factor == 1
    assert inner_product(w.poly, w.poly, P) * w.squared_norm_factor == GRational(1)


def test_wavefunctions_share_one_diagonal_constant():
    for params in mu_triples(2, seed=65):
        values = set()
        for N in range(4):
            for w in wavefunctions(N, params, "psi"):
                assert w.squared_norm_factor > 0
                gram = inner_product(w.poly, w.poly, params)
                assert gram.im == 0 and gram.re > 0
                values.add(gram * w.squared_norm_factor)
        assert values == {GRational(1)}


def test_first_degree_diagonal_matches_classical_pair():
    params = Params(0, 0, 0)
    w10 = normalized_wavefunction(1, 0, 1, params)
    w11 = normalized_wavefunction(1, 1, 1, params)
    g10 = inner_product(w10.poly, w10.poly, params) * w10.squared_norm_factor
    g11 = inner_product(w11.poly, w11.poly, params) * w11.squared_norm_factor
    assert g10 == g11


def test_gram_matrix_is_diagonal_across_degrees():
    waves = []
    for N in range(4):
        waves.extend(wavefunctions(N, P, "psi"))
    for i, a in enumerate(waves):
        for b in waves[i + 1:]:
            assert inner_product(a.poly, b.poly, P) == GRational(0), (
                (a.N, a.k, a.sign), (b.N, b.k, b.sign)
            )


def test_squared_norm_factor_formula_spot_check():
    # N = 1, k = 1: the factor reduces to gamma3 (mu2+1/2) over
    # (mu1+mu2+1)(mu1+1/2).
    expected = (
        P.gamma3 * (P.mu2 + HALF) / ((P.mu1 + P.mu2 + 1) * (P.mu1 + HALF))
    )
    assert squared_norm_factor(1, 1, P) == expected


# --------------------------------------------------------------------------
# The cycled family.

def test_upsilon_base_case():
    waves = wavefunctions(0, P, "upsilon")
    assert [w.poly for w in waves] == [CHI_PLUS, CHI_MINUS]
    k1 = bi_generator(P, 1)
    for w in waves:
        assert k1(w.poly) == w.poly.scale(P.mu2 + P.mu3 + HALF)


def test_upsilon_eigenvalue_equations():
    scas = spherical_dirac(P) + scalar_op(1)
    k1 = bi_generator(P, 1)
    z3 = involution(3)
    for N in range(3):
        for w in wavefunctions(N, P, "upsilon"):
            assert scas(w.poly) == w.poly.scale(N + P.mu_sum + 1)
            assert k1(w.poly) == w.poly.scale(k1_eigenvalue(w.k, P))
            assert z3(w.poly) == w.poly.scale(Fraction(w.sign * (-1) ** (N - w.k)))
            gram = inner_product(w.poly, w.poly, P)
            assert gram * w.squared_norm_factor == GRational(1)


def test_upsilon_classical_first_degree_spectrum():
    params = Params(0, 0, 0)
    k1 = bi_generator(params, 1)
    seen = set()
    for w in wavefunctions(1, params, "upsilon"):
        image = k1(w.poly)
        eig = k1_eigenvalue(w.k, params)
        assert image == w.poly.scale(eig)
        seen.add(eig)
    assert seen == {HALF, Fraction(-3, 2)}


# --------------------------------------------------------------------------
# Overlaps.

def test_overlap_base_case():
    data = overlap_matrix(0, P)
    for i in range(2):
        for j in range(2):
            expected = GRational(1) if i == j else GRational(0)
            assert data.overlaps[i][j] == expected


def test_overlap_sector_decoupling():
    for N in (1, 2):
        data = overlap_matrix(N, P)
        for i, (s, q) in enumerate(data.upsilon_labels):
            for j, (k, r) in enumerate(data.psi_labels):
                if q * (-1) ** (N - s) != r * (-1) ** (N - k):
                    assert data.overlaps[i][j] == GRational(0), (N, s, q, k, r)


def test_overlap_sum_rule():
    for params in (Params(0, 0, 0), P):
        for N in (1, 2):
            data = overlap_matrix(N, params)
            for sector in (1, -1):
                rows = [
                    i for i, (s, q) in enumerate(data.upsilon_labels)
                    if q * (-1) ** (N - s) == sector
                ]
                cols = [
                    j for j, (k, r) in enumerate(data.psi_labels)
                    if r * (-1) ** (N - k) == sector
                ]
                for j1 in cols:
                    for j2 in cols:
                        total = GRational(0)
                        for i in rows:
                            total = total + (
                                data.overlaps[i][j1].conjugate()
                                * data.overlaps[i][j2]
                                / data.gram_upsilon[i]
                            )
                        expected = (
                            data.gram_psi[j1] if j1 == j2 else GRational(0)
                        )
                        assert total == expected, (N, sector, j1, j2)


def test_wavefunctions_reject_bad_family():
    with pytest.raises(ValueError):
        wavefunctions(1, P, "other")
