"""JSON file formats: algebras, linear maps, and classification reports.

Structure constants are sparse with exact rational strings ("p" or
"p/q"); omitted entries are zero and an omitted twist is the identity.
Serialization is canonical (sorted entries, fixed key order, fixed
separators) so that export -> parse -> export is byte-identical and
reports can be golden-tested.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .linear import BilinearMap, LinearMap, TrilinearMap, Vector
from .report import CheckReport, PipelineReport, Witness

KIND_ALGEBRA = "algebra"
KIND_AKIVIS = "akivis"


class InputError(ValueError):
    """Malformed input document; message carries a field diagnostic."""


_RATIONAL_RE = re.compile(r"^[+-]?\d+(/\d+)?$")


def parse_rational(text: object, where: str) -> Fraction:
    if not isinstance(text, str) or not _RATIONAL_RE.match(text):
        raise InputError(f"{where}: expected rational string 'p' or 'p/q', got {text!r}")
    try:
        return Fraction(text)
    except ZeroDivisionError:
        raise InputError(f"{where}: zero denominator in {text!r}") from None


def format_rational(q: Fraction) -> str:
    return str(q)


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise InputError(message)


def _index(value: object, bound: int, where: str) -> int:
    _require(isinstance(value, int) and not isinstance(value, bool),
             f"{where}: expected integer index, got {value!r}")
    _require(0 <= value < bound, f"{where}: index {value} out of range [0, {bound})")
    return value


@dataclass(frozen=True)
class AlgebraDoc:
    """Parsed algebra file; for kind 'algebra' the ternary is None."""

    kind: str
    dim: int
    basis: tuple
    bilinear: BilinearMap
    ternary: Optional[TrilinearMap]
    twist: LinearMap


def parse_algebra_doc(text: str) -> AlgebraDoc:
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"invalid JSON: line {exc.lineno} column {exc.colno}: {exc.msg}")
    _require(isinstance(raw, dict), "top level: expected a JSON object")

    kind = raw.get("kind", KIND_ALGEBRA)
    _require(kind in (KIND_ALGEBRA, KIND_AKIVIS),
             f"kind: expected '{KIND_ALGEBRA}' or '{KIND_AKIVIS}', got {kind!r}")

    dim = raw.get("dimension")
    _require(isinstance(dim, int) and not isinstance(dim, bool) and dim > 0,
             f"dimension: expected positive integer, got {dim!r}")

    basis = raw.get("basis", [f"e{i + 1}" for i in range(dim)])
    _require(isinstance(basis, list) and len(basis) == dim
             and all(isinstance(b, str) for b in basis),
             f"basis: expected {dim} names")

    _require(isinstance(raw.get("bilinear"), list), "bilinear: expected an array")
    c = [[[Fraction(0)] * dim for _ in range(dim)] for _ in range(dim)]
    seen = set()
    for pos, entry in enumerate(raw["bilinear"]):
        where = f"bilinear[{pos}]"
        _require(isinstance(entry, dict), f"{where}: expected an object")
        i = _index(entry.get("i"), dim, f"{where}.i")
        j = _index(entry.get("j"), dim, f"{where}.j")
        k = _index(entry.get("k"), dim, f"{where}.k")
        _require((i, j, k) not in seen, f"{where}: duplicate entry ({i},{j},{k})")
        seen.add((i, j, k))
        c[i][j][k] = parse_rational(entry.get("c"), f"{where}.c")
    bilinear = BilinearMap(c)

    ternary = None
    if "ternary" in raw:
        _require(kind == KIND_AKIVIS, "ternary: only valid for kind 'akivis'")
        _require(isinstance(raw["ternary"], list), "ternary: expected an array")
        d = [[[[Fraction(0)] * dim for _ in range(dim)] for _ in range(dim)]
             for _ in range(dim)]
        seen4 = set()
        for pos, entry in enumerate(raw["ternary"]):
            where = f"ternary[{pos}]"
            _require(isinstance(entry, dict), f"{where}: expected an object")
            i = _index(entry.get("i"), dim, f"{where}.i")
            j = _index(entry.get("j"), dim, f"{where}.j")
            k = _index(entry.get("k"), dim, f"{where}.k")
            l = _index(entry.get("l"), dim, f"{where}.l")
            _require((i, j, k, l) not in seen4,
                     f"{where}: duplicate entry ({i},{j},{k},{l})")
            seen4.add((i, j, k, l))
            d[i][j][k][l] = parse_rational(entry.get("c"), f"{where}.c")
        ternary = TrilinearMap(d)
    elif kind == KIND_AKIVIS:
        ternary = TrilinearMap.zero(dim)

    if "twist" in raw:
        twist = _parse_matrix(raw["twist"], dim, "twist")
    else:
        twist = LinearMap.identity(dim)

    return AlgebraDoc(kind, dim, tuple(basis), bilinear, ternary, twist)


def _parse_matrix(rows: object, dim: int, where: str) -> LinearMap:
    _require(isinstance(rows, list) and len(rows) == dim,
             f"{where}: expected {dim} rows")
    parsed = []
    for r, row in enumerate(rows):
        _require(isinstance(row, list) and len(row) == dim,
                 f"{where}[{r}]: expected {dim} entries")
        parsed.append([parse_rational(x, f"{where}[{r}][{c}]")
                       for c, x in enumerate(row)])
    return LinearMap(parsed)


def parse_map_doc(text: str) -> LinearMap:
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"invalid JSON: line {exc.lineno} column {exc.colno}: {exc.msg}")
    _require(isinstance(raw, dict), "top level: expected a JSON object")
    dim = raw.get("dimension")
    _require(isinstance(dim, int) and not isinstance(dim, bool) and dim > 0,
             f"dimension: expected positive integer, got {dim!r}")
    return _parse_matrix(raw.get("matrix"), dim, "matrix")


def _dump(obj: object) -> str:
    return json.dumps(obj, indent=2, separators=(",", ": ")) + "\n"


def serialize_algebra_doc(kind: str, basis: Sequence[str], bilinear: BilinearMap,
                          ternary: Optional[TrilinearMap] = None,
                          twist: Optional[LinearMap] = None) -> str:
    """Canonical bytes: sorted sparse entries, identity twist omitted."""
    dim = bilinear.dim
    doc: dict = {"kind": kind, "dimension": dim, "basis": list(basis)}
    doc["bilinear"] = [
        {"i": i, "j": j, "k": k, "c": format_rational(x)}
        for i, j, k, x in bilinear.entries()
    ]
    if kind == KIND_AKIVIS:
        ternary = ternary if ternary is not None else TrilinearMap.zero(dim)
        doc["ternary"] = [
            {"i": i, "j": j, "k": k, "l": l, "c": format_rational(x)}
            for i, j, k, l, x in ternary.entries()
        ]
    if twist is not None and not twist.is_identity():
        doc["twist"] = [[format_rational(x) for x in row] for row in twist.rows]
    return _dump(doc)


def serialize_map_doc(matrix: LinearMap) -> str:
    return _dump({
        "dimension": matrix.dim,
        "matrix": [[format_rational(x) for x in row] for row in matrix.rows],
    })


def _vector_json(v: Vector) -> list:
    return [format_rational(x) for x in v.coords]


def witness_json(w: Witness, basis: Sequence[str]) -> dict:
    out: dict = {}
    if w.vectors is not None:
        out["vectors"] = [_vector_json(v) for v in w.vectors]
    else:
        out["indices"] = list(w.indices)
        out["names"] = [basis[i] for i in w.indices]
    out["lhs"] = _vector_json(w.lhs)
    out["rhs"] = _vector_json(w.rhs)
    return out


def report_json(rep: CheckReport | PipelineReport, basis: Sequence[str]) -> dict:
    out: dict = {"holds": rep.holds}
    if isinstance(rep, PipelineReport):
        out["stages"] = {name: report_json(sub, basis) for name, sub in rep.stages}
    elif rep.witness is not None:
        out["witness"] = witness_json(rep.witness, basis)
    return out


def serialize_report(properties: Sequence[tuple], basis: Sequence[str],
                     tool_version: str, input_digest: str) -> str:
    """ReportFile bytes: property name -> verdict json, plus provenance."""
    doc = {
        "properties": {name: report_json(rep, basis) for name, rep in properties},
        "provenance": {"tool": "homakivis", "version": tool_version,
                       "input_digest": input_digest},
    }
    return _dump(doc)
