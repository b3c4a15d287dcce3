"""Immutable finite abstract simplicial complexes with canonical storage.

A complex stores, for each dimension, the sorted tuple of its faces; a
face is a strictly increasing tuple of vertex indices.  The empty face
is implicit.  Two complexes are equal iff their vertex counts and
canonical face storage coincide, so equality is cheap and deterministic.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, Iterator, Sequence

from .errors import EmptyComplex, EmptyInput, InvalidVertex, NotAVertex
from .polynomial import ONE, IntPolynomial

Face = tuple[int, ...]


class SimplicialComplex:
    """Finite abstract simplicial complex on vertices 0..vertex_count-1.

    Construct through :meth:`from_facets` (downward closure of a facet
    list) or the module generators; the raw constructor expects a face
    set that is already downward closed.
    """

    __slots__ = ("vertex_count", "faces", "_face_set", "_hash")

    def __init__(self, vertex_count: int, faces: Iterable[Face]):
        buckets: dict[int, set[Face]] = {}
        for face in faces:
            face = tuple(face)
            buckets.setdefault(len(face) - 1, set()).add(face)
        dim = max(buckets) if buckets else -1
        self.vertex_count = vertex_count
        self.faces = tuple(tuple(sorted(buckets.get(i, ()))) for i in range(dim + 1))
        self._face_set = frozenset().union(*self.faces) if self.faces else frozenset()
        self._hash = hash((vertex_count, self.faces))

    @classmethod
    def from_facets(cls, vertex_count: int, facets: Sequence[Sequence[int]]) -> SimplicialComplex:
        """Downward closure of the given facets, canonically stored.

        Raises InvalidVertex for out-of-range indices or declared vertices
        covered by no facet, EmptyInput for an empty facet or an empty
        facet list with vertex_count > 0.
        """
        if vertex_count < 0:
            raise InvalidVertex(f"negative vertex count {vertex_count}")
        if vertex_count > 0 and not facets:
            raise EmptyInput(f"no facets given for {vertex_count} vertices")
        faces: set[Face] = set()
        covered: set[int] = set()
        for facet in facets:
            distinct = sorted(set(facet))
            if not distinct:
                raise EmptyInput("empty facet")
            if distinct[0] < 0 or distinct[-1] >= vertex_count:
                raise InvalidVertex(f"facet {list(facet)} out of range 0..{vertex_count - 1}")
            covered.update(distinct)
            for k in range(1, len(distinct) + 1):
                faces.update(combinations(distinct, k))
        missing = set(range(vertex_count)) - covered
        if missing:
            raise InvalidVertex(f"vertices {sorted(missing)} appear in no facet")
        return cls(vertex_count, faces)

    # -- basic queries ---------------------------------------------------

    @property
    def dim(self) -> int:
        return len(self.faces) - 1

    def is_empty(self) -> bool:
        """True for the complex holding only the empty face."""
        return self.vertex_count == 0

    def faces_of_dim(self, i: int) -> tuple[Face, ...]:
        if 0 <= i <= self.dim:
            return self.faces[i]
        return ()

    def all_faces(self) -> Iterator[Face]:
        for bucket in self.faces:
            yield from bucket

    def has_face(self, face: Sequence[int]) -> bool:
        return tuple(face) in self._face_set

    def facets(self) -> list[Face]:
        """Maximal faces, in canonical order."""
        out = []
        for i, bucket in enumerate(self.faces):
            for face in bucket:
                members = set(face)
                if not any(
                    tuple(sorted(members | {w})) in self._face_set
                    for w in range(self.vertex_count)
                    if w not in members
                ):
                    out.append(face)
        return out

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, SimplicialComplex)
            and self.vertex_count == other.vertex_count
            and self.faces == other.faces
        )

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        counts = tuple(len(b) for b in self.faces)
        return f"<SimplicialComplex vertices={self.vertex_count} f={counts}>"

    # -- enumeration invariants -------------------------------------------

    def f_vector(self) -> tuple[int, ...]:
        """(f_0, ..., f_dim): face counts by dimension."""
        if self.is_empty():
            raise EmptyComplex("f-vector of the empty complex")
        return tuple(len(b) for b in self.faces)

    def f_polynomial(self) -> IntPolynomial:
        """f(t) = 1 + sum f_i t^(i+1), constant term 1 for the empty face."""
        if self.is_empty():
            raise EmptyComplex("f-polynomial of the empty complex")
        return IntPolynomial((1,) + self.f_vector())

    def euler_characteristic(self) -> int:
        return sum(len(b) if i % 2 == 0 else -len(b) for i, b in enumerate(self.faces))

    # -- constructions -----------------------------------------------------

    def _link_faces(self, v: int) -> list[Face]:
        out = []
        for bucket in self.faces:
            for face in bucket:
                if v in face:
                    rest = tuple(w for w in face if w != v)
                    if rest:
                        out.append(rest)
        return out

    def _link_with_map(self, v: int) -> tuple[SimplicialComplex, tuple[int, ...]]:
        if not self.has_face((v,)):
            raise NotAVertex(f"{v} is not a vertex")
        raw = self._link_faces(v)
        old = tuple(sorted({face[0] for face in raw if len(face) == 1}))
        relabel = {w: i for i, w in enumerate(old)}
        link = SimplicialComplex(len(old), (tuple(relabel[w] for w in face) for face in raw))
        return link, old

    def link(self, v: int) -> SimplicialComplex:
        """Link of vertex v, relabeled densely (order preserving)."""
        return self._link_with_map(v)[0]

    def link_map(self, v: int) -> tuple[int, ...]:
        """Original labels of the link's vertices; position = new label."""
        return self._link_with_map(v)[1]

    def link_of_face(self, face: Sequence[int]) -> SimplicialComplex:
        """Link of an arbitrary nonempty face, via iterated vertex links."""
        lk = self
        remaining = sorted(face)
        while remaining:
            v, remaining = remaining[0], remaining[1:]
            lk, old = lk._link_with_map(v)
            position = {w: i for i, w in enumerate(old)}
            remaining = [position[w] for w in remaining]
        return lk

    def join(self, other: SimplicialComplex) -> SimplicialComplex:
        """Join on the disjoint vertex union; faces are all unions of a
        face of each factor (either possibly empty)."""
        if self.is_empty() or other.is_empty():
            raise EmptyComplex("join factors must be nonempty")
        shift = self.vertex_count
        faces: list[Face] = list(self.all_faces())
        shifted = [tuple(w + shift for w in face) for face in other.all_faces()]
        faces.extend(shifted)
        for sigma in self.all_faces():
            for tau in shifted:
                faces.append(sigma + tau)
        return SimplicialComplex(shift + other.vertex_count, faces)

    def suspension(self) -> SimplicialComplex:
        """Join with two fresh apex points (labels 0 and 1)."""
        two_points = SimplicialComplex(2, [(0,), (1,)])
        return two_points.join(self)

    def one_skeleton(self) -> Graph:
        edges = self.faces[1] if self.dim >= 1 else ()
        return Graph(self.vertex_count, edges)

    def is_flag(self) -> bool:
        """True iff the complex equals the clique complex of its graph."""
        if self.is_empty():
            raise EmptyComplex("flagness of the empty complex")
        return self == self.one_skeleton().clique_complex()

    def relabel(self, mapping: Sequence[int]) -> SimplicialComplex:
        """Apply a vertex permutation (mapping[old] = new)."""
        if sorted(mapping) != list(range(self.vertex_count)):
            raise InvalidVertex("relabeling must be a permutation of the vertices")
        return SimplicialComplex(
            self.vertex_count,
            (tuple(sorted(mapping[v] for v in face)) for face in self.all_faces()),
        )

    def barycentric_subdivision(self) -> SimplicialComplex:
        """Vertices are the nonempty faces, faces are the inclusion chains.

        Vertex order is the canonical face order of this complex, so the
        construction is deterministic.
        """
        if self.is_empty():
            raise EmptyComplex("subdivision of the empty complex")
        order = list(self.all_faces())
        sets = [set(face) for face in order]
        n = len(order)
        successors: list[list[int]] = [[] for _ in range(n)]
        for i in range(n):
            si = sets[i]
            for j in range(n):
                if len(sets[j]) > len(si) and si < sets[j]:
                    successors[i].append(j)
        chains: list[Face] = []

        def grow(chain: tuple[int, ...]) -> None:
            chains.append(chain)
            for j in successors[chain[-1]]:
                grow(chain + (j,))

        for i in range(n):
            grow((i,))
        return SimplicialComplex(n, chains)


class Graph:
    """Simple undirected graph on vertices 0..vertex_count-1."""

    __slots__ = ("vertex_count", "edges")

    def __init__(self, vertex_count: int, edges: Iterable[Sequence[int]] = ()):
        self.vertex_count = vertex_count
        canon = set()
        for u, v in edges:
            if u == v:
                raise InvalidVertex(f"loop at vertex {u}")
            if not (0 <= u < vertex_count and 0 <= v < vertex_count):
                raise InvalidVertex(f"edge ({u}, {v}) out of range")
            canon.add((u, v) if u < v else (v, u))
        self.edges = frozenset(canon)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Graph)
            and self.vertex_count == other.vertex_count
            and self.edges == other.edges
        )

    def __hash__(self) -> int:
        return hash((self.vertex_count, self.edges))

    def __repr__(self) -> str:
        return f"<Graph vertices={self.vertex_count} edges={len(self.edges)}>"

    def adjacency(self) -> list[set[int]]:
        adj: list[set[int]] = [set() for _ in range(self.vertex_count)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return adj

    def degree_sequence(self) -> tuple[int, ...]:
        adj = self.adjacency()
        return tuple(sorted(len(nbrs) for nbrs in adj))

    def clique_complex(self) -> SimplicialComplex:
        """Complex whose faces are exactly the cliques, enumerated by
        vertex-ordered backtracking."""
        adj = self.adjacency()
        faces: list[Face] = []

        def extend(clique: tuple[int, ...], candidates: list[int]) -> None:
            for idx, v in enumerate(candidates):
                face = clique + (v,)
                faces.append(face)
                extend(face, [w for w in candidates[idx + 1 :] if w in adj[v]])

        extend((), list(range(self.vertex_count)))
        return SimplicialComplex(self.vertex_count, faces)
