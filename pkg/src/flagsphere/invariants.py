"""Face-enumeration invariants and the identities the library verifies.

Conventions (fixed once, used everywhere):

* ``f(t) = 1 + sum f_i t^(i+1)`` with constant term 1 for the empty face.
* ``h(t) = sum_{i=0..m} f_{i-1} t^i (1-t)^(m-i)`` with ``m = dim + 1`` and
  ``f_{-1} = 1``; equivalently ``t^m f(1/t) = (1+t)^m h(1/(1+t))``.

Under this normalization ``f(-1/2) = h(-1) / 2^m``, the sum of link
f-polynomials equals ``f'`` with no constant, and the even-sphere link
identity holds with factor 1/2:

    (-1)^d * h_tilde(-1)  ==  1/2 * sum_v (-1)^d * h_link(v)(-1)

for every generalized homology sphere of even dimension 2d.  The 1/2 is
forced by the convention (see the derivation test in the test suite,
which re-computes both sides from raw face counts).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from .complexes import SimplicialComplex
from .errors import EmptyComplex, NotASphere, WrongParity
from .homology import is_generalized_homology_sphere, is_homology_sphere
from .polynomial import ONE, ONE_MINUS_T, GammaVector, IntPolynomial

LINK_SUM_CONSTANT = Fraction(1, 2)


def h_polynomial(L: SimplicialComplex) -> IntPolynomial:
    """h(t) of a nonempty complex; degree at most m = dim + 1."""
    if L.is_empty():
        raise EmptyComplex("h-polynomial of the empty complex")
    counts = (1,) + L.f_vector()
    m = L.dim + 1
    total = IntPolynomial()
    for i, f_prev in enumerate(counts):
        total = total + (ONE_MINUS_T ** (m - i)).shift(i) * f_prev
    return total


def _h_allow_empty(L: SimplicialComplex) -> IntPolynomial:
    # links of facets are the empty complex, whose h-polynomial is 1
    return ONE if L.is_empty() else h_polynomial(L)


def _f_allow_empty(L: SimplicialComplex) -> IntPolynomial:
    return ONE if L.is_empty() else L.f_polynomial()


def h_tilde(L: SimplicialComplex) -> IntPolynomial:
    """Exact quotient h / (1+t), defined for even-dimensional spheres
    (m odd, so palindromicity forces h(-1) = 0)."""
    if L.is_empty() or L.dim % 2 != 0:
        raise WrongParity(f"h-tilde needs even dimension, got dim {L.dim}")
    return h_polynomial(L).divide_out_one_plus_t()


def charney_davis_value(L: SimplicialComplex) -> int:
    """(-1)^d * h(-1) for a (2d-1)-dimensional complex, exactly."""
    if L.is_empty() or L.dim % 2 != 1:
        raise WrongParity(f"Charney-Davis value needs odd dimension, got dim {L.dim}")
    d = (L.dim + 1) // 2
    return (-1) ** d * h_polynomial(L)(-1)


class TheoremWitness(NamedTuple):
    lhs: Fraction
    rhs: Fraction
    equal: bool


def theorem_identity(L: SimplicialComplex) -> TheoremWitness:
    """Both sides of the even-sphere link identity, exactly.

    lhs = (-1)^d * h_tilde(-1), rhs = 1/2 * sum over vertices of
    (-1)^d * h_link(-1).  Requires a generalized homology sphere of even
    dimension 2d; raises WrongParity or NotASphere otherwise.
    """
    if L.is_empty() or L.dim % 2 != 0:
        raise WrongParity(f"theorem identity needs even dimension, got dim {L.dim}")
    if not is_generalized_homology_sphere(L):
        raise NotASphere("theorem identity needs a generalized homology sphere")
    sign = (-1) ** (L.dim // 2)
    lhs = Fraction(sign * h_tilde(L)(-1))
    link_sum = sum(_h_allow_empty(L.link(v))(-1) for v in range(L.vertex_count))
    rhs = LINK_SUM_CONSTANT * sign * link_sum
    return TheoremWitness(lhs, rhs, lhs == rhs)


def link_derivative_identity(L: SimplicialComplex) -> bool:
    """True iff the sum of link f-polynomials equals f', as polynomials.

    Holds for every complex, sphere or not.
    """
    if L.is_empty():
        return True
    total = IntPolynomial()
    for v in range(L.vertex_count):
        total = total + _f_allow_empty(L.link(v))
    return total == L.f_polynomial().derivative()


def dehn_sommerville_check(L: SimplicialComplex) -> bool:
    """h_i == h_{m-i} for all i; when m is odd this forces f(-1/2) = 0,
    which is checked as well."""
    if L.is_empty():
        raise EmptyComplex("Dehn-Sommerville check of the empty complex")
    m = L.dim + 1
    h = h_polynomial(L)
    if not h.is_palindromic(m):
        return False
    if m % 2 == 1 and L.f_polynomial()(Fraction(-1, 2)) != 0:
        return False
    return True


def orbifold_euler(L: SimplicialComplex) -> Fraction:
    """f(-1/2) exactly; relates to h by f(-1/2) = h(-1) / 2^m."""
    if L.is_empty():
        raise EmptyComplex("orbifold Euler number of the empty complex")
    return L.f_polynomial()(Fraction(-1, 2))


def join_multiplicativity_check(K: SimplicialComplex, L: SimplicialComplex) -> bool:
    """True iff h of the join equals the product of the h-polynomials."""
    return h_polynomial(K.join(L)) == h_polynomial(K) * h_polynomial(L)


def gamma_vector(L: SimplicialComplex) -> GammaVector:
    """Gamma expansion of h with parameter m; needs h palindromic (raises
    NotPalindromic otherwise)."""
    if L.is_empty():
        raise EmptyComplex("gamma vector of the empty complex")
    return h_polynomial(L).gamma_expand(L.dim + 1)


@dataclass(frozen=True)
class SphereInvariants:
    """All applicable invariants of one complex; parity- or certification-
    dependent fields are None rather than defaulted."""

    dim: int
    m: int
    f_poly: IntPolynomial
    h_poly: IntPolynomial
    h_tilde: IntPolynomial | None
    gamma: GammaVector | None
    cd_value: int | None
    theorem_lhs: Fraction | None
    theorem_rhs: Fraction | None


def analyze(L: SimplicialComplex) -> SphereInvariants:
    """Aggregate record: f, h always; h-tilde when m is odd and h(-1) = 0;
    gamma when h is palindromic; cd_value when dim is odd; theorem sides
    when the complex is an even-dimensional generalized homology sphere."""
    if L.is_empty():
        raise EmptyComplex("analyze of the empty complex")
    dim = L.dim
    m = dim + 1
    h = h_polynomial(L)
    ht = h.divide_out_one_plus_t() if m % 2 == 1 and h(-1) == 0 else None
    gamma = h.gamma_expand(m) if h.is_palindromic(m) else None
    cd = charney_davis_value(L) if dim % 2 == 1 else None
    lhs = rhs = None
    if dim % 2 == 0 and is_generalized_homology_sphere(L):
        witness = theorem_identity(L)
        lhs, rhs = witness.lhs, witness.rhs
    return SphereInvariants(
        dim=dim,
        m=m,
        f_poly=L.f_polynomial(),
        h_poly=h,
        h_tilde=ht,
        gamma=gamma,
        cd_value=cd,
        theorem_lhs=lhs,
        theorem_rhs=rhs,
    )
