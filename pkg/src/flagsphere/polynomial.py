"""Exact univariate polynomial arithmetic over arbitrary-precision integers.

Coefficients are plain Python ints (so face counts never overflow) and
evaluation points are exact rationals (``fractions.Fraction``), never
floats.  The zero polynomial is the empty coefficient tuple and has
degree -1.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Union

from .errors import NotDivisible, NotPalindromic

Scalar = Union[int, Fraction]


class IntPolynomial:
    """Dense integer polynomial in one variable ``t``.

    Immutable; trailing zero coefficients are trimmed on construction, so
    the last stored coefficient is nonzero unless the polynomial is zero.

    >>> IntPolynomial([1, 9, 9, 1]).degree
    3
    >>> str(IntPolynomial([1, 8, 1]))
    '1 + 8t + t^2'
    """

    __slots__ = ("_coeffs", "_hash")

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = list(coeffs)
        for c in cs:
            if not isinstance(c, int):
                raise TypeError(f"integer coefficient expected, got {type(c).__name__}")
        while cs and cs[-1] == 0:
            cs.pop()
        self._coeffs = tuple(cs)
        self._hash = hash(self._coeffs)

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self._coeffs

    @property
    def degree(self) -> int:
        return len(self._coeffs) - 1

    def is_zero(self) -> bool:
        return not self._coeffs

    def coefficient(self, i: int) -> int:
        """Coefficient of t^i, 0 beyond the stored degree."""
        if 0 <= i < len(self._coeffs):
            return self._coeffs[i]
        return 0

    def __eq__(self, other: object) -> bool:
        return isinstance(other, IntPolynomial) and self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"IntPolynomial({list(self._coeffs)!r})"

    def __str__(self) -> str:
        if not self._coeffs:
            return "0"
        parts = []
        for i, c in enumerate(self._coeffs):
            if c == 0:
                continue
            mag = abs(c)
            if i == 0:
                term = str(mag)
            else:
                var = "t" if i == 1 else f"t^{i}"
                term = var if mag == 1 else f"{mag}{var}"
            if not parts:
                parts.append(term if c > 0 else f"-{term}")
            else:
                parts.append(f"+ {term}" if c > 0 else f"- {term}")
        return " ".join(parts)

    def __neg__(self) -> IntPolynomial:
        return IntPolynomial(-c for c in self._coeffs)

    def __add__(self, other: IntPolynomial) -> IntPolynomial:
        a, b = self._coeffs, other._coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPolynomial(out)

    def __sub__(self, other: IntPolynomial) -> IntPolynomial:
        return self + (-other)

    def __mul__(self, other: Union[IntPolynomial, int]) -> IntPolynomial:
        if isinstance(other, int):
            return IntPolynomial(c * other for c in self._coeffs)
        a, b = self._coeffs, other._coeffs
        if not a or not b:
            return ZERO
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    out[i + j] += ca * cb
        return IntPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> IntPolynomial:
        if n < 0:
            raise ValueError("negative polynomial power")
        result = ONE
        for _ in range(n):
            result = result * self
        return result

    def shift(self, k: int) -> IntPolynomial:
        """Multiply by t^k."""
        if self.is_zero() or k == 0:
            return self if k >= 0 else self
        return IntPolynomial((0,) * k + self._coeffs)

    def derivative(self) -> IntPolynomial:
        return IntPolynomial(i * c for i, c in enumerate(self._coeffs) if i > 0)

    def __call__(self, x: Scalar) -> Scalar:
        """Exact Horner evaluation; Fraction in, Fraction out."""
        result = x * 0
        for c in reversed(self._coeffs):
            result = result * x + c
        return result

    def divide_out_one_plus_t(self) -> IntPolynomial:
        """Exact quotient q with (1+t)*q == self.

        Raises NotDivisible unless self(-1) == 0.
        """
        if self(-1) != 0:
            raise NotDivisible(f"({self}) does not vanish at t=-1")
        n = self.degree
        if n <= 0:
            return ZERO
        q = [0] * n
        acc = 0
        for i in range(n - 1, -1, -1):
            acc = self.coefficient(i + 1) - acc
            q[i] = acc
        return IntPolynomial(q)

    def is_palindromic(self, m: int) -> bool:
        """True iff coefficient(i) == coefficient(m - i) for 0 <= i <= m.

        Coefficients beyond the stored degree read as zero; a polynomial
        of degree > m is never palindromic with parameter m.
        """
        if m < 0 or self.degree > m:
            return False
        return all(self.coefficient(i) == self.coefficient(m - i) for i in range(m // 2 + 1))

    def gamma_expand(self, m: int) -> "GammaVector":
        """Coefficients g_0..g_{m//2} with self == sum g_i t^i (1+t)^(m-2i).

        Peels from low degree upward: g_i is the t^i coefficient of the
        residue left after subtracting the earlier terms.  Exact for
        palindromic input; raises NotPalindromic otherwise.
        """
        if not self.is_palindromic(m):
            raise NotPalindromic(f"({self}) is not palindromic with parameter m={m}")
        residue = self
        gammas = []
        for i in range(m // 2 + 1):
            g = residue.coefficient(i)
            gammas.append(g)
            if g:
                residue = residue - (ONE_PLUS_T ** (m - 2 * i)).shift(i) * g
        # palindromic input is an exact integer combination of the basis
        assert residue.is_zero()
        return GammaVector(tuple(gammas))


@dataclass(frozen=True)
class GammaVector:
    """Coefficients of the expansion of a palindromic polynomial in the
    basis t^i (1+t)^(m-2i)."""

    gammas: tuple[int, ...]

    def to_polynomial(self, m: int) -> IntPolynomial:
        """Reassemble sum g_i t^i (1+t)^(m-2i); inverse of gamma_expand."""
        total = ZERO
        for i, g in enumerate(self.gammas):
            if g:
                total = total + (ONE_PLUS_T ** (m - 2 * i)).shift(i) * g
        return total

    def __iter__(self):
        return iter(self.gammas)


ZERO = IntPolynomial()
ONE = IntPolynomial([1])
T = IntPolynomial([0, 1])
ONE_PLUS_T = IntPolynomial([1, 1])
ONE_MINUS_T = IntPolynomial([1, -1])
