"""Interpretations of signatures in the four backends, and term evaluation."""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from math import prod

import numpy as np

from .. import cob2, finhilb, finset, formats, rel
from ..finset import FiniteSet, FunctionMorphism
from .check import typecheck
from .syntax import (CIRCLE, Compose, Dagger, Gen, Id, Signature, Tensor, Term, cob_signature,
                     parse_expr, show_object)


class EvaluationError(ValueError):
    pass


class NoDaggerError(EvaluationError):
    pass


class FinHilbBackend:
    name = "finhilb"

    def __init__(self, dims: dict):
        self.dims = dims

    def size(self, obj) -> int:
        return prod(self.dims[a] for a in obj)

    def identity(self, obj):
        return finhilb.identity(self.size(obj))

    def compose(self, g, f):
        return finhilb.compose(g, f)

    def tensor(self, f, g):
        return finhilb.kron(f, g)

    def dagger(self, f):
        return finhilb.adjoint(f)

    def fits(self, value, dom, cod) -> bool:
        return np.shape(value) == (self.size(cod), self.size(dom))

    def equal(self, f, g) -> bool:
        return finhilb.equal(f, g)

    def show(self, value) -> str:
        return json.dumps(formats.matrix_to_json(value))

    def load(self, literal, dom, cod):
        return formats.matrix_from_json(literal)


class RelBackend:
    name = "rel"

    def __init__(self, sizes: dict):
        self.sizes = sizes

    def size(self, obj) -> int:
        return prod(self.sizes[a] for a in obj)

    def identity(self, obj):
        return rel.identity(self.size(obj))

    def compose(self, g, f):
        return rel.compose(g, f)

    def tensor(self, f, g):
        return rel.tensor(f, g)

    def dagger(self, f):
        return rel.dagger(f)

    def fits(self, value, dom, cod) -> bool:
        return (value.src_size, value.dst_size) == (self.size(dom), self.size(cod))

    def equal(self, f, g) -> bool:
        return f == g

    def show(self, value) -> str:
        return json.dumps(formats.relation_to_json(value))

    def load(self, literal, dom, cod):
        return formats.relation_from_json(literal)


def _key(label: tuple) -> str:
    return ",".join(label)


class FinSetBackend:
    """Objects are flat products: a list of atoms denotes the set of tuples."""

    name = "finset"

    def __init__(self, sets: dict):
        self.sets = sets

    def carrier(self, obj) -> FiniteSet:
        return FiniteSet(itertools.product(*(self.sets[a].labels for a in obj)))

    def identity(self, obj):
        return finset.identity(self.carrier(obj))

    def compose(self, g, f):
        return finset.compose(g, f)

    def tensor(self, f, g):
        dom = FiniteSet(x + y for x in f.domain for y in g.domain)
        cod = FiniteSet(x + y for x in f.codomain for y in g.codomain)
        return FunctionMorphism(dom, cod, {x + y: f(x) + g(y)
                                           for x in f.domain for y in g.domain})

    def dagger(self, f):
        raise NoDaggerError("backend finset has no dagger: the map from the empty set "
                            "to a point cannot be reversed")

    def fits(self, value, dom, cod) -> bool:
        return value.domain == self.carrier(dom) and value.codomain == self.carrier(cod)

    def equal(self, f, g) -> bool:
        return f == g

    def show(self, value) -> str:
        return json.dumps(formats.function_to_json(value, key=_key, value=_key))

    def load(self, literal, dom, cod):
        return formats.function_from_json(literal, self.carrier(dom), self.carrier(cod),
                                          key=_key, value=_key)


class Cob2Backend:
    name = "cob2"

    def size(self, obj) -> int:
        if any(a != CIRCLE for a in obj):
            raise EvaluationError(f"cob2 objects are circle counts, got {show_object(obj)}")
        return len(obj)

    def identity(self, obj):
        return cob2.identity(self.size(obj))

    def compose(self, g, f):
        return cob2.compose(g, f)

    def tensor(self, f, g):
        return cob2.tensor(f, g)

    def dagger(self, f):
        return cob2.dagger(f)

    def fits(self, value, dom, cod) -> bool:
        return (value.dom, value.cod) == (self.size(dom), self.size(cod))

    def equal(self, f, g) -> bool:
        return f == g

    def show(self, value) -> str:
        return f"{value.dom} -> {value.cod}: {value}"

    def load(self, literal, dom, cod):
        if not isinstance(literal, str):
            raise formats.FormatError("cob2 generators are given as expressions")
        return evaluate(cob_interpretation(), typecheck(cob_signature(), parse_expr(literal)))


@dataclass
class Interpretation:
    backend: str
    generators: dict = field(default_factory=dict)
    objects: dict = field(default_factory=dict)

    def make_backend(self):
        if self.backend == "finhilb":
            return FinHilbBackend(self.objects)
        if self.backend == "rel":
            return RelBackend(self.objects)
        if self.backend == "finset":
            return FinSetBackend(self.objects)
        if self.backend == "cob2":
            return Cob2Backend()
        raise EvaluationError(f"unknown backend {self.backend!r}")

    @classmethod
    def from_json(cls, data, sig: Signature) -> "Interpretation":
        """Build and check an interpretation of ``sig`` from a parsed JSON file."""
        if not isinstance(data, dict) or "backend" not in data:
            raise formats.FormatError("interpretation needs a 'backend' field")
        tag = data["backend"]
        raw_objects = data.get("objects", {})
        if tag in ("finhilb", "rel"):
            objects = {a: int(n) for a, n in raw_objects.items()}
        elif tag == "finset":
            objects = {a: formats.set_from_json(s) for a, s in raw_objects.items()}
        else:
            objects = {}
        interp = cls(tag, {}, objects)
        backend = interp.make_backend()
        missing_atoms = sorted(a for a in sig.atoms if a not in objects)
        if tag != "cob2" and missing_atoms:
            raise EvaluationError(f"objects without interpretation: {missing_atoms}")
        if tag == "cob2":
            interp.generators.update(cob_interpretation().generators)
        literals = data.get("generators", {})
        for name, (dom, cod) in sig.generators.items():
            if name not in literals:
                if name in interp.generators:
                    continue
                raise EvaluationError(f"generator {name!r} has no interpretation")
            value = backend.load(literals[name], dom, cod)
            if not backend.fits(value, dom, cod):
                raise EvaluationError(f"generator {name!r} does not have type "
                                      f"{show_object(dom)} -> {show_object(cod)}")
            interp.generators[name] = value
        return interp


def cob_interpretation() -> Interpretation:
    return Interpretation("cob2", {name: make() for name, make in cob2.GENERATORS.items()})


def evaluate(interp: Interpretation, term: Term, backend=None):
    """Fold a type-checked term into a backend morphism."""
    if not term.annotated:
        raise EvaluationError("term must be type-checked before evaluation")
    b = backend or interp.make_backend()

    def go(t: Term):
        if isinstance(t, Gen):
            if t.name not in interp.generators:
                raise EvaluationError(f"generator {t.name!r} has no interpretation")
            return interp.generators[t.name]
        if isinstance(t, Id):
            return b.identity(t.obj)
        if isinstance(t, Compose):
            return b.compose(go(t.then), go(t.first))
        if isinstance(t, Tensor):
            return b.tensor(go(t.left), go(t.right))
        if isinstance(t, Dagger):
            return b.dagger(go(t.term))
        raise TypeError(f"not a term: {t!r}")

    return go(term)
