"""The h/h-tilde/gamma pipeline, the Charney-Davis quantity, and every
identity verifier.

``test_link_sum_constant_derivation`` is the build-time oracle for the
factor relating the two sides of the even-sphere identity: it recomputes
both sides from raw face counts (binomial-transform h, plain arithmetic,
no library polynomial code) and pins the constant at 1/2."""

from fractions import Fraction
from math import comb

import pytest

from flagsphere.complexes import SimplicialComplex
from flagsphere.errors import EmptyComplex, NotASphere, NotPalindromic, WrongParity
from flagsphere.generators import (
    cross_polytope_boundary,
    cycle,
    icosahedron,
    random_graph,
    simplex_boundary,
    two_points,
)
from flagsphere.invariants import (
    LINK_SUM_CONSTANT,
    analyze,
    charney_davis_value,
    dehn_sommerville_check,
    gamma_vector,
    h_polynomial,
    h_tilde,
    join_multiplicativity_check,
    link_derivative_identity,
    orbifold_euler,
    theorem_identity,
)
from flagsphere.polynomial import IntPolynomial


def h_coeffs_oracle(L):
    """h-coefficients straight from the binomial transform of the face
    counts; independent of the polynomial-arithmetic implementation."""
    counts = (1,) + L.f_vector()
    m = L.dim + 1
    return [
        sum((-1) ** (j - i) * comb(m - i, j - i) * counts[i] for i in range(j + 1))
        for j in range(m + 1)
    ]


def h_at_minus_one_oracle(L):
    if L.vertex_count == 0:
        return 1
    return sum((-1) ** j * c for j, c in enumerate(h_coeffs_oracle(L)))


# -- h-polynomial ---------------------------------------------------------------


def test_h_polynomial_examples():
    assert h_polynomial(icosahedron()) == IntPolynomial([1, 9, 9, 1])
    assert h_polynomial(cycle(10)) == IntPolynomial([1, 8, 1])
    assert h_polynomial(cross_polytope_boundary(3)) == IntPolynomial([1, 3, 3, 1])
    assert h_polynomial(two_points()) == IntPolynomial([1, 1])


def test_h_polynomial_matches_binomial_transform_oracle():
    suite = [
        icosahedron(),
        cycle(6),
        simplex_boundary(4),
        cross_polytope_boundary(4),
        cycle(5).join(cycle(6)),
        simplex_boundary(3).barycentric_subdivision(),
    ]
    for L in suite:
        assert list(h_polynomial(L).coeffs) == h_coeffs_oracle(L)


def test_h_reversal_relation():
    # t^m f(1/t) == (1+t)^m h(1/(1+t)), checked at a rational point
    for L in [icosahedron(), cycle(7), simplex_boundary(4)]:
        m = L.dim + 1
        t = Fraction(3, 7)
        lhs = t**m * L.f_polynomial()(1 / t)
        rhs = (1 + t) ** m * h_polynomial(L)(1 / (1 + t))
        assert lhs == rhs


# -- h-tilde ----------------------------------------------------------------------


def test_h_tilde_examples():
    assert h_tilde(icosahedron()) == IntPolynomial([1, 8, 1])
    assert h_tilde(icosahedron()) == h_polynomial(cycle(10))
    assert h_tilde(cycle(10).suspension()) == IntPolynomial([1, 8, 1])
    sd = simplex_boundary(3).barycentric_subdivision()
    assert h_tilde(sd) == IntPolynomial([1, 10, 1])


def test_h_tilde_parity_error():
    with pytest.raises(WrongParity):
        h_tilde(cycle(5))


def test_suspension_h_tilde_equals_base_h():
    # forward direction: for S = susp(K), h_S = (1+t) h_K, so h-tilde of S is h_K
    for K in [cycle(4), cycle(7), cycle(10), cycle(4).join(cycle(6))]:
        assert h_tilde(K.suspension()) == h_polynomial(K)


# -- Charney-Davis value ------------------------------------------------------------


def test_cd_examples():
    assert charney_davis_value(cycle(5)) == 1
    for m in range(3, 12):
        assert charney_davis_value(cycle(m)) == m - 4
    # h = (1+t)^n vanishes at -1 for every odd-dimensional cross-polytope boundary
    assert charney_davis_value(cross_polytope_boundary(2)) == 0
    assert charney_davis_value(cross_polytope_boundary(4)) == 0


def test_cd_parity_error():
    with pytest.raises(WrongParity):
        charney_davis_value(icosahedron())


def test_cd_of_join_is_product():
    for m in (4, 5, 6):
        for k in (4, 5, 6):
            J = cycle(m).join(cycle(k))
            assert charney_davis_value(J) == (m - 4) * (k - 4)


# -- the even-sphere link identity ----------------------------------------------------


def test_link_sum_constant_derivation():
    """Recompute both sides from raw face counts on three even spheres and
    solve for the constant; it must be 1/2 under this h-convention."""
    witnesses = [
        icosahedron(),
        cycle(10).suspension(),
        simplex_boundary(3).barycentric_subdivision(),
    ]
    for L in witnesses:
        d = L.dim // 2
        sign = (-1) ** d
        h = h_coeffs_oracle(L)
        # divide by (1+t) coefficientwise: q_i = h_{i+1} - q_{i+1}
        q = [0] * (len(h) - 1)
        acc = 0
        for i in range(len(h) - 2, -1, -1):
            acc = h[i + 1] - acc
            q[i] = acc
        assert h[0] == q[0]  # exact division
        lhs = sign * sum((-1) ** i * c for i, c in enumerate(q))
        link_sum = sign * sum(
            h_at_minus_one_oracle(L.link(v)) for v in range(L.vertex_count)
        )
        assert link_sum != 0
        assert Fraction(lhs, link_sum) == LINK_SUM_CONSTANT


def test_theorem_identity_examples():
    w = theorem_identity(icosahedron())
    assert (w.lhs, w.rhs, w.equal) == (6, 6, True)
    w = theorem_identity(cycle(10).suspension())
    assert (w.lhs, w.rhs, w.equal) == (6, 6, True)
    w = theorem_identity(simplex_boundary(3).barycentric_subdivision())
    assert (w.lhs, w.rhs, w.equal) == (8, 8, True)


def test_theorem_identity_on_s0():
    # degenerate case d = 0: vertex links are empty complexes with h = 1
    w = theorem_identity(two_points())
    assert (w.lhs, w.rhs, w.equal) == (1, 1, True)


def test_theorem_identity_errors():
    with pytest.raises(WrongParity):
        theorem_identity(cycle(5))
    solid = SimplicialComplex.from_facets(3, [[0, 1, 2]])
    with pytest.raises(NotASphere):
        theorem_identity(solid)


def test_theorem_identity_holds_on_non_flag_spheres_too():
    w = theorem_identity(simplex_boundary(3))
    assert w.equal and w.lhs == -2  # negative: the complex is not flag


# -- link-derivative identity -----------------------------------------------------------


def test_link_derivative_examples():
    assert link_derivative_identity(icosahedron())
    edge = SimplicialComplex.from_facets(2, [[0, 1]])
    assert link_derivative_identity(edge)
    assert edge.f_polynomial().derivative() == IntPolynomial([2, 2])


def test_link_derivative_on_200_seeded_clique_complexes():
    for seed in range(200):
        K = random_graph(8, Fraction(1, 2), 5000 + seed).clique_complex()
        assert link_derivative_identity(K)


def test_link_derivative_holds_on_non_spheres():
    solid = SimplicialComplex.from_facets(3, [[0, 1, 2]])
    assert link_derivative_identity(solid)
    pendant = SimplicialComplex.from_facets(4, [[0, 1, 2], [0, 3]])
    assert link_derivative_identity(pendant)


# -- Dehn-Sommerville ----------------------------------------------------------------


def test_dehn_sommerville_examples():
    assert dehn_sommerville_check(icosahedron())
    assert orbifold_euler(icosahedron()) == 0
    assert dehn_sommerville_check(cycle(5))
    assert orbifold_euler(cycle(5)) == Fraction(-1, 4)  # m even, no vanishing
    solid = SimplicialComplex.from_facets(3, [[0, 1, 2]])
    assert not dehn_sommerville_check(solid)


def test_f_at_minus_half_vanishes_for_even_spheres():
    for L in [icosahedron(), cycle(8).suspension(), simplex_boundary(3)]:
        assert L.dim % 2 == 0
        assert orbifold_euler(L) == 0


def test_orbifold_euler_relation_to_h():
    suite = [cycle(4), cycle(5), icosahedron(), simplex_boundary(3), two_points()]
    for L in suite:
        m = L.dim + 1
        assert orbifold_euler(L) == Fraction(h_polynomial(L)(-1), 2**m)


# -- join multiplicativity ----------------------------------------------------------


def test_join_multiplicativity_examples():
    assert join_multiplicativity_check(two_points(), cycle(10))
    assert h_polynomial(two_points().join(cycle(10))) == IntPolynomial([1, 1]) * IntPolynomial([1, 8, 1])
    assert join_multiplicativity_check(cycle(5), cycle(5))
    assert join_multiplicativity_check(two_points(), two_points())
    assert h_polynomial(cross_polytope_boundary(2)) == IntPolynomial([1, 2, 1])


# -- gamma vector ---------------------------------------------------------------------


def test_gamma_vector_examples():
    assert gamma_vector(icosahedron()).gammas == (1, 6)
    assert gamma_vector(cross_polytope_boundary(3)).gammas == (1, 0)
    sd = simplex_boundary(3).barycentric_subdivision()
    assert gamma_vector(sd).gammas == (1, 8)


def test_gamma_top_equals_signed_h_tilde_value():
    for L in [icosahedron(), cycle(6).suspension(), simplex_boundary(3).barycentric_subdivision()]:
        d = L.dim // 2
        assert gamma_vector(L).gammas[d] == (-1) ** d * h_tilde(L)(-1)


def test_gamma_vector_rejects_non_palindromic():
    solid = SimplicialComplex.from_facets(3, [[0, 1, 2]])
    with pytest.raises(NotPalindromic):
        gamma_vector(solid)


# -- analyze -------------------------------------------------------------------------


def test_analyze_icosahedron():
    inv = analyze(icosahedron())
    assert inv.dim == 2 and inv.m == 3
    assert inv.f_poly == IntPolynomial([1, 12, 30, 20])
    assert inv.h_poly == IntPolynomial([1, 9, 9, 1])
    assert inv.h_tilde == IntPolynomial([1, 8, 1])
    assert inv.gamma.gammas == (1, 6)
    assert inv.cd_value is None
    assert inv.theorem_lhs == inv.theorem_rhs == 6


def test_analyze_pentagon():
    inv = analyze(cycle(5))
    assert inv.dim == 1
    assert inv.cd_value == 1
    assert inv.h_tilde is None
    assert inv.theorem_lhs is None


def test_analyze_s0():
    inv = analyze(two_points())
    assert inv.dim == 0
    assert inv.h_poly == IntPolynomial([1, 1])


def test_analyze_empty_complex_errors():
    with pytest.raises(EmptyComplex):
        analyze(SimplicialComplex.from_facets(0, []))
