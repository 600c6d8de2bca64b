"""JSON case files: strict parsing, validation and serialization.

A case is one JSON object; a file may also hold a list of them. Integers
are JSON numbers and rationals are ``"p/q"`` strings; floats are refused
everywhere. See ``README.md`` for a complete example of each query.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any, Optional

from ._exact import format_fraction, gcd_all, to_fraction
from .errors import InputError
from .reduction import EmbeddingMap
from .swtopology import (
    CHAMBERS,
    NOT_APPLICABLE,
    PD_SIGMA,
    BlowUpSpec,
    InsertionData,
    ManifoldData,
    SpinCData,
    SurfaceData,
    resolve_d,
    wu_parity_check,
)

QUERIES = ("genus_bound", "max_insertion_degree", "blowup", "l_invariant", "complete_primitive")

_FIELDS = {
    "": {"query", "manifold", "surface", "spinc", "blowup", "vector"},
    "manifold": {"b1", "b2_plus", "chi", "tau"},
    "surface": {"genus", "self_intersection", "non_torsion", "embedding"},
    "spinc": {"name", "c1_square", "pairing_e", "d_s", "sw_nonvanishing", "chamber", "insertion"},
    "insertion": {"u_power", "surface_one_dim_count", "ambient_degree"},
    "blowup": {"r"},
}

_NEEDS = {
    "genus_bound": ("manifold", "surface", "spinc"),
    "max_insertion_degree": ("manifold", "surface", "spinc"),
    "blowup": ("manifold", "surface", "spinc", "blowup"),
    "l_invariant": ("manifold", "surface"),
    "complete_primitive": ("vector",),
}


class CaseError(InputError):
    """One or more field-level problems; ``errors`` holds ``{path, rule, message}`` dicts."""

    def __init__(self, errors: list[dict]):
        self.errors = errors
        super().__init__("; ".join(f"{e['path'] or '<root>'}: {e['rule']}: {e['message']}" for e in errors))


@dataclass(frozen=True)
class SpinCEntry:
    spinc: SpinCData
    d_s: Optional[int] = None
    insertion: Optional[InsertionData] = None


@dataclass(frozen=True)
class CaseFile:
    query: str
    manifold: Optional[ManifoldData] = None
    surface: Optional[SurfaceData] = None
    spinc: tuple[SpinCEntry, ...] = field(default=())
    blowup: Optional[BlowUpSpec] = None
    vector: Optional[tuple[int, ...]] = None

    def resolved_d(self, entry: SpinCEntry) -> int:
        return resolve_d(self.manifold, entry.spinc, entry.d_s)


class _Collector:
    def __init__(self, lenient: bool):
        self.lenient = lenient
        self.errors: list[dict] = []

    def add(self, path: str, rule: str, message: str) -> None:
        self.errors.append({"path": path, "rule": rule, "message": message})

    def check_fields(self, obj: Any, kind: str, path: str) -> bool:
        if not isinstance(obj, dict):
            self.add(path, "type", "expected an object")
            return False
        if not self.lenient:
            for key in sorted(set(obj) - _FIELDS[kind]):
                self.add(_join(path, key), "unknown_field", f"unknown field {key!r}")
        return True

    def integer(self, obj: dict, key: str, path: str, required: bool = True, minimum: int | None = None):
        p = _join(path, key)
        if key not in obj or obj[key] is None:
            if required:
                self.add(p, "missing_field", "required integer is missing")
            return None
        value = obj[key]
        if isinstance(value, bool) or not isinstance(value, int):
            self.add(p, "type", f"expected an integer, got {value!r}")
            return None
        if minimum is not None and value < minimum:
            self.add(p, "range", f"must be >= {minimum}, got {value}")
            return None
        return value

    def boolean(self, obj: dict, key: str, path: str, default: bool) -> bool:
        value = obj.get(key, default)
        if not isinstance(value, bool):
            self.add(_join(path, key), "type", f"expected true/false, got {value!r}")
            return default
        return value


def _join(path: str, key) -> str:
    if isinstance(key, int):
        return f"{path}[{key}]"
    return f"{path}.{key}" if path else key


def _parse_one(obj: Any, lenient: bool) -> CaseFile:
    c = _Collector(lenient)
    if not c.check_fields(obj, "", ""):
        raise CaseError(c.errors)
    query = obj.get("query")
    if query not in QUERIES:
        c.add("query", "bad_query", f"query must be one of {QUERIES}, got {query!r}")
        raise CaseError(c.errors)
    for block in _NEEDS[query]:
        if obj.get(block) is None:
            c.add(block, "missing_block", f"query {query!r} needs a {block!r} block")

    manifold = surface = blowup = vector = None
    entries: list[SpinCEntry] = []

    m = obj.get("manifold")
    if m is not None and c.check_fields(m, "manifold", "manifold"):
        b1 = c.integer(m, "b1", "manifold", minimum=0)
        b2p = c.integer(m, "b2_plus", "manifold", minimum=1)
        chi = c.integer(m, "chi", "manifold", required=False)
        tau = c.integer(m, "tau", "manifold", required=False)
        if b1 is not None and b2p is not None:
            manifold = ManifoldData(b1, b2p, chi, tau)

    s = obj.get("surface")
    if s is not None and c.check_fields(s, "surface", "surface"):
        genus = c.integer(s, "genus", "surface", minimum=1)
        n = c.integer(s, "self_intersection", "surface", required=query != "l_invariant")
        non_torsion = c.boolean(s, "non_torsion", "surface", True)
        embedding = None
        if s.get("embedding") is not None:
            embedding = _parse_embedding(c, s["embedding"], genus, manifold)
        elif query == "l_invariant":
            c.add("surface.embedding", "missing_field", "l_invariant needs an embedding matrix")
        if genus is not None:
            surface = SurfaceData(genus, 0 if n is None else n, non_torsion, embedding)

    sl = obj.get("spinc")
    if sl is not None:
        if not isinstance(sl, list) or (not sl and query in ("genus_bound", "max_insertion_degree", "blowup")):
            c.add("spinc", "type", "expected a non-empty list of Spin^c structures")
        else:
            for i, entry in enumerate(sl):
                parsed = _parse_spinc(c, entry, _join("spinc", i), manifold, surface)
                if parsed is not None:
                    entries.append(parsed)

    b = obj.get("blowup")
    if b is not None and c.check_fields(b, "blowup", "blowup"):
        r = c.integer(b, "r", "blowup", minimum=0)
        if r is not None:
            blowup = BlowUpSpec(r)

    v = obj.get("vector")
    if v is not None:
        if not isinstance(v, list) or not v or any(isinstance(x, bool) or not isinstance(x, int) for x in v):
            c.add("vector", "type", "expected a non-empty list of integers")
        elif gcd_all(v) != 1:
            c.add("vector", "not_primitive", f"coefficients must have gcd 1, got gcd {gcd_all(v)}")
        else:
            vector = tuple(v)

    if c.errors:
        raise CaseError(c.errors)
    return CaseFile(query, manifold, surface, tuple(entries), blowup, vector)


def _parse_embedding(c: _Collector, rows: Any, genus: Optional[int], manifold: Optional[ManifoldData]):
    path = "surface.embedding"
    if not isinstance(rows, list) or any(not isinstance(r, list) for r in rows):
        c.add(path, "type", "expected a list of rows")
        return None
    parsed = []
    for i, row in enumerate(rows):
        out = []
        for j, x in enumerate(row):
            try:
                out.append(to_fraction(x))
            except InputError as exc:
                c.add(f"{path}[{i}][{j}]", "not_exact", str(exc))
        parsed.append(tuple(out))
    if genus is None or manifold is None:
        return None
    if len(parsed) != manifold.b1 or any(len(r) != 2 * genus for r in parsed):
        c.add(path, "embedding_shape", f"expected {manifold.b1} rows of {2 * genus} entries")
        return None
    try:
        return EmbeddingMap(genus, manifold.b1, tuple(parsed))
    except InputError as exc:
        c.add(path, "embedding_shape", str(exc))
        return None


def _parse_spinc(c: _Collector, obj: Any, path: str, manifold, surface) -> Optional[SpinCEntry]:
    if not c.check_fields(obj, "spinc", path):
        return None
    name = obj.get("name", path)
    if not isinstance(name, str):
        c.add(_join(path, "name"), "type", "name must be a string")
        name = path
    e = c.integer(obj, "pairing_e", path)
    c1 = c.integer(obj, "c1_square", path, required=False)
    d_s = c.integer(obj, "d_s", path, required=False)
    sw = c.boolean(obj, "sw_nonvanishing", path, True)
    chamber = obj.get("chamber", NOT_APPLICABLE)
    if chamber not in CHAMBERS:
        c.add(_join(path, "chamber"), "bad_chamber", f"chamber must be one of {CHAMBERS}")
        chamber = NOT_APPLICABLE
    insertion = None
    ins = obj.get("insertion")
    if ins is not None and c.check_fields(ins, "insertion", _join(path, "insertion")):
        ipath = _join(path, "insertion")
        parts = [c.integer(ins, k, ipath, required=False, minimum=0) for k in ("u_power", "surface_one_dim_count", "ambient_degree")]
        insertion = InsertionData(*(p or 0 for p in parts))
    if e is None:
        return None

    if surface is not None and not wu_parity_check(e, surface.self_int):
        c.add(_join(path, "pairing_e"), "wu_parity", f"|e| + n = {abs(e) + surface.self_int} must be even")
    if manifold is not None and manifold.b2_plus == 1 and chamber != PD_SIGMA:
        c.add(_join(path, "chamber"), "chamber_required", "b2_plus = 1 requires chamber 'pd_sigma'")
    spinc = SpinCData(name, e, sw, chamber, c1)
    if manifold is not None:
        try:
            resolve_d(manifold, spinc, d_s)
        except InputError as exc:
            c.add(_join(path, "d_s"), "d_s_inconsistent", str(exc))
    return SpinCEntry(spinc, d_s, insertion)


def parse_case(text: str | bytes, lenient: bool = False) -> CaseFile | list[CaseFile]:
    """Parse one case or a list of cases from a JSON document."""
    try:
        data = json.loads(text, parse_float=_reject_float)
    except _FloatSeen as exc:
        raise CaseError([{"path": "", "rule": "not_exact", "message": f"floating point value {exc} is not allowed"}])
    except json.JSONDecodeError as exc:
        raise CaseError([{"path": "", "rule": "json", "message": str(exc)}]) from exc
    if isinstance(data, list):
        return [_parse_one(item, lenient) for item in data]
    return _parse_one(data, lenient)


class _FloatSeen(Exception):
    pass


def _reject_float(token: str):
    raise _FloatSeen(token)


def case_to_dict(case: CaseFile) -> dict:
    out: dict[str, Any] = {"query": case.query}
    if case.manifold is not None:
        m = case.manifold
        out["manifold"] = _drop_none({"b1": m.b1, "b2_plus": m.b2_plus, "chi": m.chi, "tau": m.tau})
    if case.surface is not None:
        s = case.surface
        sd: dict[str, Any] = {"genus": s.genus, "self_intersection": s.self_int, "non_torsion": s.non_torsion}
        if s.embedding is not None:
            sd["embedding"] = [[format_fraction(x) for x in row] for row in s.embedding.matrix]
        out["surface"] = sd
    if case.spinc:
        out["spinc"] = [_entry_to_dict(e) for e in case.spinc]
    if case.blowup is not None:
        out["blowup"] = {"r": case.blowup.r}
    if case.vector is not None:
        out["vector"] = list(case.vector)
    return out


def _entry_to_dict(entry: SpinCEntry) -> dict:
    sp = entry.spinc
    d = _drop_none({
        "name": sp.name,
        "c1_square": sp.c1_square,
        "pairing_e": sp.pairing_e,
        "d_s": entry.d_s,
        "sw_nonvanishing": sp.sw_nonvanishing,
        "chamber": sp.chamber,
    })
    if entry.insertion is not None:
        ins = entry.insertion
        d["insertion"] = {
            "u_power": ins.u_power,
            "surface_one_dim_count": ins.surface_one_dim_count,
            "ambient_degree": ins.ambient_degree,
        }
    return d


def _drop_none(d: dict) -> dict:
    return {k: v for k, v in d.items() if v is not None}


def dump_cases(cases: CaseFile | list[CaseFile]) -> str:
    if isinstance(cases, list):
        return json.dumps([case_to_dict(c) for c in cases], indent=2)
    return json.dumps(case_to_dict(cases), indent=2)
