"""The on-disk complex format: a JSON document with two fields,

    {"vertex_count": N, "facets": [[0, 1, 2], ...]}

Vertices are 0-based integers.  Parsing is whitespace-insensitive (JSON);
the canonical serialization sorts each facet and the facet list
lexicographically, so equal complexes always serialize identically.
"""

from __future__ import annotations

import json
from pathlib import Path

from .complexes import SimplicialComplex
from .errors import ParseError


def dumps_complex(L: SimplicialComplex) -> str:
    facets = sorted(list(f) for f in L.facets())
    body = ",\n".join("    " + json.dumps(f) for f in facets)
    if facets:
        facet_block = "[\n" + body + "\n  ]"
    else:
        facet_block = "[]"
    return (
        "{\n"
        f'  "vertex_count": {L.vertex_count},\n'
        f'  "facets": {facet_block}\n'
        "}\n"
    )


def dump_complex(L: SimplicialComplex, path: str | Path) -> None:
    Path(path).write_text(dumps_complex(L))


def loads_complex(text: str) -> SimplicialComplex:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno, exc.colno) from exc
    if not isinstance(doc, dict):
        raise ParseError("top-level value must be an object")
    if "vertex_count" not in doc or "facets" not in doc:
        raise ParseError("missing required field 'vertex_count' or 'facets'")
    vertex_count = doc["vertex_count"]
    facets = doc["facets"]
    if not isinstance(vertex_count, int) or isinstance(vertex_count, bool):
        raise ParseError("'vertex_count' must be an integer")
    if not isinstance(facets, list) or not all(
        isinstance(f, list) and all(isinstance(v, int) and not isinstance(v, bool) for v in f)
        for f in facets
    ):
        raise ParseError("'facets' must be a list of integer lists")
    return SimplicialComplex.from_facets(vertex_count, facets)


def load_complex(path: str | Path) -> SimplicialComplex:
    return loads_complex(Path(path).read_text())
