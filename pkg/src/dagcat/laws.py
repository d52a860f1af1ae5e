"""Category, dagger and monoidal law checking against pluggable backends.

A backend is described by a :class:`CategoryInstance`, a bundle of plain
callables.  The checkers sample composable chains by picking objects first
and then morphisms between them, so a chain is never rejected after the
fact.  Every sample draws from its own generator seeded by
``(seed, law, index)``; a failing sample can therefore be replayed in
isolation from the numbers stored in its :class:`Counterexample`.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Any, Callable, Iterator, Optional, Sequence

import numpy as np

PASS = "PASS"
FAIL = "FAIL"
INSUFFICIENT = "INSUFFICIENT"
NOT_APPLICABLE = "N/A"

# stable integer tags mixed into per-sample seeds
_LAW_TAGS = {
    "category": 1,
    "dagger": 2,
    "monoidal": 3,
    "pentagon-triangle": 4,
    "functoriality": 5,
    "dagger-preservation": 6,
    "associator-naturality": 7,
}


@dataclass(frozen=True)
class SampleSpec:
    """Seeded, size-bounded description of a sample stream.

    ``exhaustive_size``, when set, replaces random sampling by a complete
    enumeration of every object up to that size and every morphism tuple
    between them; ``samples`` is then ignored.
    """

    seed: int = 0
    samples: int = 100
    max_size: int = 4
    exhaustive_size: Optional[int] = None


@dataclass(frozen=True)
class Counterexample:
    law: str
    lhs: str
    rhs: str
    seed: int
    index: int
    note: str = ""

    def describe(self) -> str:
        text = f"{self.law} seed={self.seed} index={self.index}: {self.lhs} != {self.rhs}"
        if self.note:
            text += f" ({self.note})"
        return text


@dataclass(frozen=True)
class LawReport:
    law: str
    backend: str
    status: str
    samples: int
    counterexample: Optional[Counterexample] = None
    detail: str = ""

    @property
    def passed(self) -> bool:
        return self.status == PASS

    def to_lines(self) -> list[str]:
        line = f"{self.status} {self.backend}:{self.law} samples={self.samples}"
        if self.detail:
            line += f" {self.detail}"
        lines = [line]
        if self.counterexample is not None:
            lines.append("  counterexample " + self.counterexample.describe())
        return lines


@dataclass
class CategoryInstance:
    """Hooks describing one backend.

    Required hooks: ``dom``, ``cod``, ``identity``, ``compose(g, f)`` (f
    first), ``equal``, ``sample_object(rng, max_size)`` and
    ``sample_morphism(rng, dom, cod)``.  Everything else is optional and
    switches the corresponding checks on.
    """

    name: str
    dom: Callable[[Any], Any]
    cod: Callable[[Any], Any]
    identity: Callable[[Any], Any]
    compose: Callable[[Any, Any], Any]
    equal: Callable[[Any, Any], bool]
    sample_object: Callable[[np.random.Generator, int], Any]
    sample_morphism: Callable[[np.random.Generator, Any, Any], Any]
    show: Callable[[Any], str] = repr
    dagger: Optional[Callable[[Any], Any]] = None
    # reason a dagger cannot exist, reported instead of a pass
    dagger_obstruction: Optional[Callable[[], str]] = None
    # extra per-backend dagger laws: name -> check(rng, instance, max_size)
    # returning None on success or an (lhs, rhs) pair of strings
    dagger_extra: dict = field(default_factory=dict)
    tensor: Optional[Callable[[Any, Any], Any]] = None
    tensor_objects: Optional[Callable[[Any, Any], Any]] = None
    unit: Any = None
    associator: Optional[Callable[[Any, Any, Any], Any]] = None
    left_unitor: Optional[Callable[[Any], Any]] = None
    right_unitor: Optional[Callable[[Any], Any]] = None
    enumerate_objects: Optional[Callable[[int], Sequence[Any]]] = None
    enumerate_morphisms: Optional[Callable[[Any, Any], Sequence[Any]]] = None

    @property
    def strict_units(self) -> bool:
        return self.left_unitor is None and self.right_unitor is None


class _Failure(Exception):
    def __init__(self, law: str, lhs: str, rhs: str, note: str = ""):
        super().__init__(law)
        self.law, self.lhs, self.rhs, self.note = law, lhs, rhs, note


def sample_rng(seed: int, law: str, index: int) -> np.random.Generator:
    return np.random.default_rng([seed, _LAW_TAGS.get(law, 0), index])


def _expect(inst: CategoryInstance, law: str, lhs: Any, rhs: Any) -> None:
    if not inst.equal(lhs, rhs):
        raise _Failure(law, inst.show(lhs), inst.show(rhs))


def _expect_type(inst: CategoryInstance, law: str, f: Any, dom: Any, cod: Any) -> None:
    if inst.dom(f) != dom or inst.cod(f) != cod:
        raise _Failure(law, f"{inst.dom(f)!r} -> {inst.cod(f)!r}", f"{dom!r} -> {cod!r}")


def _chains(inst: CategoryInstance, spec: SampleSpec, law: str, length: int,
            count: int) -> Iterator[tuple[int, list[list[Any]]]]:
    """Yield ``(index, chains)`` where each chain is ``length`` composable morphisms.

    ``count`` independent chains are produced per sample.  Morphisms in a
    chain are listed in application order.
    """
    if spec.exhaustive_size is not None:
        if inst.enumerate_objects is None or inst.enumerate_morphisms is None:
            raise ValueError(f"backend {inst.name} cannot be enumerated")
        objs = list(inst.enumerate_objects(spec.exhaustive_size))
        homs: dict = {}

        def hom(a, b):
            key = (repr(a), repr(b))
            if key not in homs:
                homs[key] = list(inst.enumerate_morphisms(a, b))
            return homs[key]

        def all_chains():
            for path in itertools.product(objs, repeat=length + 1):
                yield from itertools.product(
                    *(hom(path[k], path[k + 1]) for k in range(length)))

        index = 0
        for combo in itertools.product(*(all_chains() for _ in range(count))) \
                if count > 1 else ((c,) for c in all_chains()):
            yield index, [list(c) for c in combo]
            index += 1
        return

    for index in range(spec.samples):
        rng = sample_rng(spec.seed, law, index)
        chains = []
        for _ in range(count):
            path = [inst.sample_object(rng, spec.max_size) for _ in range(length + 1)]
            chains.append([inst.sample_morphism(rng, path[k], path[k + 1])
                           for k in range(length)])
        yield index, chains


def _run(inst: CategoryInstance, spec: SampleSpec, law: str, length: int,
         count: int, body: Callable[[list[list[Any]]], None]) -> LawReport:
    tested = 0
    for index, chains in _chains(inst, spec, law, length, count):
        try:
            body(chains)
        except _Failure as exc:
            cx = Counterexample(exc.law, exc.lhs, exc.rhs, spec.seed, index, exc.note)
            return LawReport(law, inst.name, FAIL, tested + 1, cx)
        except Exception as exc:  # a crashing hook is a failed law, not a harness error
            cx = Counterexample(law, "<error>", "<error>", spec.seed, index,
                                f"{type(exc).__name__}: {exc}")
            return LawReport(law, inst.name, FAIL, tested + 1, cx)
        tested += 1
    if tested == 0:
        return LawReport(law, inst.name, INSUFFICIENT, 0,
                         detail="no composable samples within size bounds")
    return LawReport(law, inst.name, PASS, tested)


def check_category_laws(inst: CategoryInstance, spec: SampleSpec) -> LawReport:
    """Associativity and both unit laws on composable triples."""

    def body(chains):
        f, g, h = chains[0]
        _expect(inst, "associativity", inst.compose(h, inst.compose(g, f)),
                inst.compose(inst.compose(h, g), f))
        _expect(inst, "left-unit", inst.compose(inst.identity(inst.cod(f)), f), f)
        _expect(inst, "right-unit", inst.compose(f, inst.identity(inst.dom(f))), f)
        gf = inst.compose(g, f)
        _expect_type(inst, "typing", gf, inst.dom(f), inst.cod(g))

    return _run(inst, spec, "category", 3, 1, body)


def check_dagger_laws(inst: CategoryInstance, spec: SampleSpec) -> LawReport:
    """``1* = 1``, ``(gf)* = f* g*`` and ``f** = f``, plus backend extras."""
    if inst.dagger is None:
        detail = inst.dagger_obstruction() if inst.dagger_obstruction else "no dagger"
        return LawReport("dagger", inst.name, NOT_APPLICABLE, 0, detail=detail)
    dag = inst.dagger

    def body(chains):
        f, g = chains[0]
        for a in (inst.dom(f), inst.cod(f)):
            _expect(inst, "dagger-identity", dag(inst.identity(a)), inst.identity(a))
        _expect(inst, "contravariance", dag(inst.compose(g, f)),
                inst.compose(dag(f), dag(g)))
        _expect(inst, "involution", dag(dag(f)), f)
        _expect_type(inst, "dagger-typing", dag(f), inst.cod(f), inst.dom(f))

    report = _run(inst, spec, "dagger", 2, 1, body)
    if report.status != PASS or not inst.dagger_extra:
        return report
    for name, check in inst.dagger_extra.items():
        for index in range(max(spec.samples, 1)):
            rng = sample_rng(spec.seed, "dagger", 10_000 + index)
            bad = check(rng, inst, spec.max_size)
            if bad is not None:
                cx = Counterexample(name, bad[0], bad[1], spec.seed, 10_000 + index)
                return LawReport("dagger", inst.name, FAIL, report.samples + index + 1, cx)
    return report


def check_monoidal_laws(inst: CategoryInstance, spec: SampleSpec) -> LawReport:
    """Bifunctoriality of the tensor and the unit and associator squares."""
    if inst.tensor is None or inst.tensor_objects is None:
        return LawReport("monoidal", inst.name, NOT_APPLICABLE, 0, detail="no tensor")
    ten, tob = inst.tensor, inst.tensor_objects
    unit = inst.unit

    def body(chains):
        (f1, f2), (g1, g2) = chains
        # (f2 f1) (x) (g2 g1) = (f2 (x) g2)(f1 (x) g1)
        _expect(inst, "interchange", inst.compose(ten(f2, g2), ten(f1, g1)),
                ten(inst.compose(f2, f1), inst.compose(g2, g1)))
        a, b = inst.dom(f1), inst.dom(g1)
        _expect(inst, "identity-tensor", ten(inst.identity(a), inst.identity(b)),
                inst.identity(tob(a, b)))
        if unit is not None:
            idu = inst.identity(unit)
            if inst.strict_units:
                _expect(inst, "left-unit-strict", ten(idu, f1), f1)
                _expect(inst, "right-unit-strict", ten(f1, idu), f1)
            else:
                x, y = inst.dom(f1), inst.cod(f1)
                _expect(inst, "left-unitor-naturality",
                        inst.compose(inst.left_unitor(y), ten(idu, f1)),
                        inst.compose(f1, inst.left_unitor(x)))
                _expect(inst, "right-unitor-naturality",
                        inst.compose(inst.right_unitor(y), ten(f1, idu)),
                        inst.compose(f1, inst.right_unitor(x)))
        if inst.associator is not None:
            h = inst.compose(g2, g1)
            s, t, u = f1, g1, h
            lhs = inst.compose(inst.associator(inst.cod(s), inst.cod(t), inst.cod(u)),
                               ten(ten(s, t), u))
            rhs = inst.compose(ten(s, ten(t, u)),
                               inst.associator(inst.dom(s), inst.dom(t), inst.dom(u)))
            _expect(inst, "associator-naturality", lhs, rhs)

    return _run(inst, spec, "monoidal", 2, 2, body)


def check_associator_naturality(inst: CategoryInstance, spec: SampleSpec) -> LawReport:
    """``a o ((S (x) T) (x) U) = (S (x) (T (x) U)) o a`` on random triples."""
    if inst.associator is None or inst.tensor is None:
        return LawReport("associator-naturality", inst.name, NOT_APPLICABLE, 0,
                         detail="no associator")
    ten, assoc = inst.tensor, inst.associator

    def body(chains):
        (s,), (t,), (u,) = chains
        lhs = inst.compose(assoc(inst.cod(s), inst.cod(t), inst.cod(u)), ten(ten(s, t), u))
        rhs = inst.compose(ten(s, ten(t, u)), assoc(inst.dom(s), inst.dom(t), inst.dom(u)))
        _expect(inst, "associator-naturality", lhs, rhs)

    return _run(inst, spec, "associator-naturality", 1, 3, body)


def check_pentagon_triangle(inst: CategoryInstance, objects: Sequence[Any]) -> LawReport:
    """Compare both pentagon paths on ``A, B, C, D`` and both triangle paths on ``A, B``."""
    if (inst.associator is None or inst.tensor is None or inst.unit is None
            or inst.tensor_objects is None):
        return LawReport("pentagon-triangle", inst.name, NOT_APPLICABLE, 0,
                         detail="backend lacks structural morphisms")
    a_, b_, c_, d_ = objects
    ten, tob, assoc, ident = inst.tensor, inst.tensor_objects, inst.associator, inst.identity
    unit = inst.unit
    try:
        # ((AB)C)D -> (AB)(CD) -> A(B(CD))
        top = inst.compose(assoc(a_, b_, tob(c_, d_)), assoc(tob(a_, b_), c_, d_))
        # ((AB)C)D -> (A(BC))D -> A((BC)D) -> A(B(CD))
        bottom = inst.compose(
            ten(ident(a_), assoc(b_, c_, d_)),
            inst.compose(assoc(a_, tob(b_, c_), d_), ten(assoc(a_, b_, c_), ident(d_))))
        if not inst.equal(top, bottom):
            cx = Counterexample("pentagon", inst.show(top), inst.show(bottom), 0, 0)
            return LawReport("pentagon-triangle", inst.name, FAIL, 1, cx)
        if inst.strict_units:
            lam = rho = ident
        else:
            lam, rho = inst.left_unitor, inst.right_unitor
        tri_l = inst.compose(ten(ident(a_), lam(b_)), assoc(a_, unit, b_))
        tri_r = ten(rho(a_), ident(b_))
        if not inst.equal(tri_l, tri_r):
            cx = Counterexample("triangle", inst.show(tri_l), inst.show(tri_r), 0, 0)
            return LawReport("pentagon-triangle", inst.name, FAIL, 2, cx)
    except Exception as exc:
        cx = Counterexample("pentagon-triangle", "<error>", "<error>", 0, 0,
                            f"{type(exc).__name__}: {exc}")
        return LawReport("pentagon-triangle", inst.name, FAIL, 1, cx)
    return LawReport("pentagon-triangle", inst.name, PASS, 2)


def format_reports(reports: Sequence[LawReport]) -> str:
    return "\n".join(line for r in reports for line in r.to_lines()) + "\n"
