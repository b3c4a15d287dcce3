"""Deterministic constructors for the complexes used in tests, reports and
the census.  Repeated calls with equal arguments yield canonically
identical complexes."""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations, product

from .complexes import Graph, SimplicialComplex
from .errors import BadProbability, TooSmall


def cycle(m: int) -> SimplicialComplex:
    """The m-gon as a 1-dimensional complex; flag iff m >= 4."""
    if m < 3:
        raise TooSmall(f"cycle needs at least 3 vertices, got {m}")
    return SimplicialComplex.from_facets(m, [[i, (i + 1) % m] for i in range(m)])


def two_points() -> SimplicialComplex:
    """Two isolated vertices (the 0-sphere, the join unit for suspensions)."""
    return SimplicialComplex.from_facets(2, [[0], [1]])


def cross_polytope_boundary(n: int) -> SimplicialComplex:
    """Boundary of the n-dimensional cross-polytope: 2n vertices in
    antipodal pairs (2i, 2i+1), faces all sets with no antipodal pair.
    Equals the n-fold join of two_points()."""
    if n < 1:
        raise TooSmall(f"cross-polytope needs n >= 1, got {n}")
    facets = [list(choice) for choice in product(*[(2 * i, 2 * i + 1) for i in range(n)])]
    return SimplicialComplex.from_facets(2 * n, facets)


def simplex_boundary(n: int) -> SimplicialComplex:
    """Boundary of the n-simplex on n+1 vertices; not flag for n >= 2."""
    if n < 1:
        raise TooSmall(f"simplex boundary needs n >= 1, got {n}")
    return SimplicialComplex.from_facets(n + 1, [list(f) for f in combinations(range(n + 1), n)])


# Apex 0, upper pentagon 1..5, lower pentagon 6..10, apex 11.
_ICOSAHEDRON_FACETS = (
    (0, 1, 2), (0, 2, 3), (0, 3, 4), (0, 4, 5), (0, 1, 5),
    (1, 2, 6), (2, 6, 7), (2, 3, 7), (3, 7, 8), (3, 4, 8),
    (4, 8, 9), (4, 5, 9), (5, 9, 10), (1, 5, 10), (1, 6, 10),
    (6, 7, 11), (7, 8, 11), (8, 9, 11), (9, 10, 11), (6, 10, 11),
)


def icosahedron() -> SimplicialComplex:
    """The 20-facet flag triangulation of the 2-sphere; every vertex link
    is a pentagon."""
    return SimplicialComplex.from_facets(12, [list(f) for f in _ICOSAHEDRON_FACETS])


class _SplitMix64:
    """splitmix64: tiny portable 64-bit generator, seed is the whole state.

    Chosen so golden fixtures reproduce bit-for-bit in any language.
    """

    MASK = (1 << 64) - 1

    def __init__(self, seed: int):
        self.state = seed & self.MASK

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & self.MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & self.MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & self.MASK
        return z ^ (z >> 31)


def random_graph(n: int, p: Fraction, seed: int) -> Graph:
    """Erdos-Renyi G(n, p) from a seeded splitmix64 stream.

    Each pair (i, j), i < j in lexicographic order, consumes one 64-bit
    draw; the edge is present iff draw/2^64 < p, compared exactly in
    integers, so identical (n, p, seed) always give the identical graph.
    """
    p = Fraction(p)
    if p < 0 or p > 1:
        raise BadProbability(f"edge probability {p} outside [0, 1]")
    if n < 0:
        raise ValueError(f"negative vertex count {n}")
    rng = _SplitMix64(seed)
    edges = []
    for i in range(n):
        for j in range(i + 1, n):
            if rng.next_u64() * p.denominator < p.numerator << 64:
                edges.append((i, j))
    return Graph(n, edges)
