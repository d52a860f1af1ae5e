"""JSON literals for matrices, relations, functions and Frobenius algebras.

* matrix: array of rows, each entry ``[re, im]``
* relation: ``{"src": m, "dst": n, "matrix": [[0, 1, ...], ...]}`` with rows
  indexing the codomain
* set: array of label strings; function: object mapping domain labels to
  codomain labels
* Frobenius algebra: ``{"dim", "unit", "mult", "counit"}`` with complex
  entries as ``[re, im]``
"""

from __future__ import annotations

import json
from pathlib import Path

import numpy as np

from . import rel
from .finset import FiniteSet, FunctionMorphism
from .tqft import FrobeniusAlgebra


class FormatError(ValueError):
    pass


def _complex(entry) -> complex:
    if (isinstance(entry, (list, tuple)) and len(entry) == 2
            and all(isinstance(x, (int, float)) for x in entry)):
        return complex(entry[0], entry[1])
    raise FormatError(f"complex entry must be [re, im], got {entry!r}")


def matrix_from_json(data) -> np.ndarray:
    if not isinstance(data, list) or not data or not all(isinstance(r, list) for r in data):
        raise FormatError("matrix must be a nonempty array of rows")
    width = len(data[0])
    if width == 0 or any(len(r) != width for r in data):
        raise FormatError("matrix rows must be nonempty and of equal length")
    m = np.array([[_complex(e) for e in row] for row in data], dtype=complex)
    if not np.all(np.isfinite(m)):
        raise FormatError("matrix entries must be finite")
    return m


def matrix_to_json(m) -> list:
    return [[[float(z.real), float(z.imag)] for z in row] for row in np.asarray(m)]


def vector_from_json(data) -> np.ndarray:
    if not isinstance(data, list):
        raise FormatError("vector must be an array of [re, im] entries")
    return np.array([_complex(e) for e in data], dtype=complex)


def relation_from_json(data) -> rel.BoolRelation:
    try:
        src, dst, rows = int(data["src"]), int(data["dst"]), data["matrix"]
    except (KeyError, TypeError, ValueError) as exc:
        raise FormatError(f"relation literal needs src, dst and matrix: {exc}") from None
    if len(rows) != dst or any(len(r) != src for r in rows):
        raise FormatError(f"relation matrix must be {dst} rows of {src} entries")
    if any(v not in (0, 1) for r in rows for v in r):
        raise FormatError("relation entries must be 0 or 1")
    return rel.BoolRelation(src, dst, np.array(rows, dtype=bool).reshape(dst, src))


def relation_to_json(r: rel.BoolRelation) -> dict:
    return {"src": r.src_size, "dst": r.dst_size,
            "matrix": r.matrix.astype(int).tolist()}


def set_from_json(data) -> FiniteSet:
    if not isinstance(data, list) or not all(isinstance(x, str) for x in data):
        raise FormatError("set literal must be an array of strings")
    try:
        return FiniteSet(data)
    except ValueError as exc:
        raise FormatError(str(exc)) from None


def function_from_json(data, domain: FiniteSet, codomain: FiniteSet,
                       key=str, value=str) -> FunctionMorphism:
    """Read a function literal; ``key``/``value`` turn set labels into strings."""
    if not isinstance(data, dict):
        raise FormatError("function literal must be an object")
    by_key = {key(x): x for x in domain}
    by_value = {value(y): y for y in codomain}
    if set(data) != set(by_key):
        raise FormatError(f"function keys {sorted(data)} != domain {sorted(by_key)}")
    try:
        table = {by_key[k]: by_value[v] for k, v in data.items()}
    except KeyError as exc:
        raise FormatError(f"image {exc.args[0]!r} is not in the codomain") from None
    return FunctionMorphism(domain, codomain, table)


def function_to_json(f: FunctionMorphism, key=str, value=str) -> dict:
    return {key(x): value(f(x)) for x in f.domain}


def frobenius_from_json(data) -> FrobeniusAlgebra:
    try:
        n = int(data["dim"])
        unit = vector_from_json(data["unit"])
        mult = matrix_from_json(data["mult"])
        counit = matrix_from_json(data["counit"])
    except (KeyError, TypeError) as exc:
        raise FormatError(f"Frobenius file needs dim, unit, mult, counit: {exc}") from None
    if unit.shape != (n,) or mult.shape != (n, n * n) or counit.shape != (1, n):
        raise FormatError(f"shapes do not match dim={n}")
    return FrobeniusAlgebra(unit, mult, counit)


def frobenius_to_json(a: FrobeniusAlgebra) -> dict:
    return {"dim": a.dim, "unit": [[float(z.real), float(z.imag)] for z in a.unit],
            "mult": matrix_to_json(a.mult), "counit": matrix_to_json(a.counit)}


def load_json(path) -> object:
    try:
        return json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise FormatError(f"cannot read {path}: {exc}") from None
