"""Exhaustive labeled-graph census over small vertex counts.

Every labeled graph on n <= max_vertices vertices is encoded by an edge
bitmask (pairs (i, j), i < j, in lexicographic order), its clique complex
is formed, and homology spheres among them are reported with their
invariants and identity witnesses.  Output order is (n, bitmask), so runs
are deterministic and restartable.
"""

from __future__ import annotations

import csv
import io
import json
import multiprocessing
import os
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator

from .complexes import Graph, SimplicialComplex
from .errors import CapExceeded
from .homology import is_generalized_homology_sphere, is_homology_sphere
from .invariants import (
    charney_davis_value,
    dehn_sommerville_check,
    h_polynomial,
    link_derivative_identity,
    theorem_identity,
)

MAX_VERTICES_CAP = 7
WORKERS_ENV_VAR = "FLAGSPHERE_WORKERS"
_CHUNK = 2048


@dataclass(frozen=True)
class CensusRecord:
    """Everything reported about one surviving complex; a deterministic
    function of (n, bitmask)."""

    n: int
    bitmask: int
    dim: int
    is_homology_sphere: bool
    is_ghs: bool
    f: tuple[int, ...]
    h: tuple[int, ...]
    h_tilde: tuple[int, ...] | None
    gamma: tuple[int, ...] | None
    cd_value: int | None
    theorem_lhs: Fraction | None
    theorem_rhs: Fraction | None
    theorem_pass: bool | None
    ds_pass: bool
    links_pass: bool
    sign_ok: bool | None
    finding: str | None


def edge_pairs(n: int) -> list[tuple[int, int]]:
    """Bit k of a bitmask refers to edge_pairs(n)[k]."""
    return [(i, j) for i in range(n) for j in range(i + 1, n)]


def graph_from_bitmask(n: int, bitmask: int) -> Graph:
    pairs = edge_pairs(n)
    return Graph(n, [pairs[k] for k in range(len(pairs)) if bitmask >> k & 1])


def _record_for(n: int, bitmask: int, dim_filter: int | None) -> CensusRecord | None:
    L = graph_from_bitmask(n, bitmask).clique_complex()
    dim = L.dim
    if dim_filter is not None and dim != dim_filter:
        return None
    # cheap gate: a homology sphere has the sphere's Euler characteristic
    if L.euler_characteristic() != 1 + (-1) ** dim:
        return None
    if not is_homology_sphere(L):
        return None
    ghs = is_generalized_homology_sphere(L)
    h = h_polynomial(L)
    m = dim + 1
    ht = h.divide_out_one_plus_t() if m % 2 == 1 and h(-1) == 0 else None
    gamma = tuple(h.gamma_expand(m)) if h.is_palindromic(m) else None
    cd = charney_davis_value(L) if dim % 2 == 1 else None
    lhs = rhs = theorem_pass = None
    if dim % 2 == 0 and ghs:
        witness = theorem_identity(L)
        lhs, rhs, theorem_pass = witness.lhs, witness.rhs, witness.equal
    sign_ok: bool | None = None
    finding = None
    if dim % 2 == 1:
        sign_ok = cd >= 0
        if not sign_ok:
            finding = "negative-charney-davis-value"
    elif lhs is not None:
        sign_ok = lhs >= 0
        if not sign_ok:
            finding = "negative-theorem-lhs"
    return CensusRecord(
        n=n,
        bitmask=bitmask,
        dim=dim,
        is_homology_sphere=True,
        is_ghs=ghs,
        f=L.f_vector(),
        h=h.coeffs,
        h_tilde=ht.coeffs if ht is not None else None,
        gamma=gamma,
        cd_value=cd,
        theorem_lhs=lhs,
        theorem_rhs=rhs,
        theorem_pass=theorem_pass,
        ds_pass=dehn_sommerville_check(L),
        links_pass=link_derivative_identity(L),
        sign_ok=sign_ok,
        finding=finding,
    )


def _chunk_records(args: tuple[int, int, int, int | None]) -> list[CensusRecord]:
    n, start, stop, dim_filter = args
    out = []
    for bitmask in range(start, stop):
        record = _record_for(n, bitmask, dim_filter)
        if record is not None:
            out.append(record)
    return out


def worker_count() -> int:
    """Worker processes for the census; FLAGSPHERE_WORKERS, default 1."""
    raw = os.environ.get(WORKERS_ENV_VAR, "1")
    try:
        count = int(raw)
    except ValueError:
        count = 1
    return max(1, count)


def run_census(
    max_vertices: int,
    dim_filter: int | None = None,
    force: bool = False,
    workers: int | None = None,
) -> Iterator[CensusRecord]:
    """Yield records for all surviving complexes on 1..max_vertices
    vertices, ordered by (n, bitmask)."""
    if max_vertices > MAX_VERTICES_CAP and not force:
        raise CapExceeded(
            f"max-vertices {max_vertices} exceeds the cap {MAX_VERTICES_CAP}; "
            "pass --force to override"
        )
    if workers is None:
        workers = worker_count()
    chunks = []
    for n in range(1, max_vertices + 1):
        total = 1 << (n * (n - 1) // 2)
        for start in range(0, total, _CHUNK):
            chunks.append((n, start, min(start + _CHUNK, total), dim_filter))
    if workers <= 1:
        for chunk in chunks:
            yield from _chunk_records(chunk)
    else:
        with multiprocessing.Pool(workers) as pool:
            for records in pool.imap(_chunk_records, chunks):
                yield from records


# -- serialization ----------------------------------------------------------


def _fraction_str(x: Fraction | None) -> str | None:
    return None if x is None else str(x)


def record_to_dict(record: CensusRecord) -> dict:
    return {
        "n": record.n,
        "bitmask": record.bitmask,
        "dim": record.dim,
        "is_homology_sphere": record.is_homology_sphere,
        "is_ghs": record.is_ghs,
        "f": list(record.f),
        "h": list(record.h),
        "h_tilde": list(record.h_tilde) if record.h_tilde is not None else None,
        "gamma": list(record.gamma) if record.gamma is not None else None,
        "cd_value": record.cd_value,
        "theorem_lhs": _fraction_str(record.theorem_lhs),
        "theorem_rhs": _fraction_str(record.theorem_rhs),
        "theorem_pass": record.theorem_pass,
        "ds_pass": record.ds_pass,
        "links_pass": record.links_pass,
        "sign_ok": record.sign_ok,
        "finding": record.finding,
    }


def dumps_json(dicts: Iterable[dict]) -> str:
    """Canonical JSON emission; loading and re-dumping is byte-identical."""
    return json.dumps({"records": list(dicts)}, indent=2) + "\n"


CSV_COLUMNS = (
    "n", "bitmask", "dim", "is_homology_sphere", "is_ghs", "f", "h",
    "h_tilde", "gamma", "cd_value", "theorem_lhs", "theorem_rhs",
    "theorem_pass", "ds_pass", "links_pass", "sign_ok", "finding",
)


def _csv_cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, list):
        return " ".join(str(v) for v in value)
    return str(value)


def dumps_csv(dicts: Iterable[dict]) -> str:
    """Canonical CSV emission; loading and re-dumping is byte-identical."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for d in dicts:
        writer.writerow(_csv_cell(d[col]) for col in CSV_COLUMNS)
    return buf.getvalue()


def loads_json(text: str) -> list[dict]:
    return json.loads(text)["records"]


def loads_csv(text: str) -> list[list[str]]:
    return list(csv.reader(io.StringIO(text)))


def dumps_csv_rows(rows: list[list[str]]) -> str:
    """Re-serialize rows parsed by loads_csv (header row included)."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerows(rows)
    return buf.getvalue()
