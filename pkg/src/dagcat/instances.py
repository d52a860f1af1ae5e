"""Law-harness instances for every shipped backend, plus seeded faults."""

from __future__ import annotations

import dataclasses
import functools

import numpy as np

from . import cob2, finhilb, finset, rel
from .finset import FiniteSet, FunctionMorphism
from .laws import CategoryInstance

BACKENDS = ("finhilb", "rel", "finset", "cob2")


def _adjointness(rng, inst, max_size):
    """``<T* psi, phi> = <psi, T phi>`` with the standard inner product."""
    rows, cols = (int(x) for x in rng.integers(1, max_size + 1, size=2))
    t = inst.sample_morphism(rng, cols, rows)
    psi, phi = finhilb.random_state(rng, rows), finhilb.random_state(rng, cols)
    lhs = finhilb.inner(inst.dagger(t) @ psi, phi)
    rhs = finhilb.inner(psi, t @ phi)
    if abs(lhs - rhs) > finhilb.MORPHISM_ATOL:
        return f"{lhs:.6g}", f"{rhs:.6g}"
    return None


def finhilb_instance(tol: float = finhilb.MORPHISM_ATOL) -> CategoryInstance:
    return CategoryInstance(
        name="finhilb",
        dom=lambda f: f.shape[1],
        cod=lambda f: f.shape[0],
        identity=finhilb.identity,
        compose=finhilb.compose,
        equal=lambda f, g: finhilb.equal(f, g, tol),
        sample_object=lambda rng, n: int(rng.integers(1, n + 1)),
        sample_morphism=lambda rng, a, b: finhilb.random_matrix(rng, b, a),
        show=lambda f: np.array2string(np.asarray(f), precision=4, separator=","),
        dagger=finhilb.adjoint,
        dagger_extra={"adjointness": _adjointness},
        tensor=finhilb.kron,
        tensor_objects=lambda a, b: a * b,
        unit=1,
        associator=lambda a, b, c: finhilb.associator(a, b, c),
    )


def rel_instance() -> CategoryInstance:
    # relations are immutable and hashable; exhaustive runs revisit the
    # same small products many times
    cached = functools.lru_cache(maxsize=1 << 16)
    return CategoryInstance(
        name="rel",
        dom=lambda r: r.src_size,
        cod=lambda r: r.dst_size,
        identity=rel.identity,
        compose=cached(rel.compose),
        equal=lambda r, s: r == s,
        sample_object=lambda rng, n: int(rng.integers(0, n + 1)),
        sample_morphism=lambda rng, a, b: rel.random_relation(rng, a, b),
        dagger=rel.dagger,
        tensor=cached(rel.tensor),
        tensor_objects=lambda a, b: a * b,
        unit=1,
        associator=lambda a, b, c: rel.identity(a * b * c),
        enumerate_objects=lambda n: list(range(n + 1)),
        enumerate_morphisms=lambda a, b: list(rel.all_relations(a, b)),
    )


def atoms(n: int, prefix: str = "x") -> FiniteSet:
    return FiniteSet(f"{prefix}{i}" for i in range(n))


def _random_function(rng, a: FiniteSet, b: FiniteSet) -> FunctionMorphism:
    images = [b.labels[int(i)] for i in rng.integers(0, len(b), size=len(a))] if len(b) else []
    return FunctionMorphism(a, b, dict(zip(a.labels, images)))


def finset_instance() -> CategoryInstance:
    witness = finset.no_dagger_witness()
    return CategoryInstance(
        name="finset",
        dom=lambda f: f.domain,
        cod=lambda f: f.codomain,
        identity=finset.identity,
        compose=finset.compose,
        equal=lambda f, g: f == g,
        # nonempty, so every sampled hom-set is inhabited
        sample_object=lambda rng, n: atoms(int(rng.integers(1, n + 1))),
        sample_morphism=_random_function,
        dagger_obstruction=witness.describe,
        tensor=finset.tensor,
        tensor_objects=finset.tensor_objects,
        unit=finset.UNIT,
        associator=finset.associator,
        left_unitor=finset.left_unitor,
        right_unitor=finset.right_unitor,
        enumerate_objects=lambda n: [atoms(k) for k in range(n + 1)],
        enumerate_morphisms=lambda a, b: list(finset.all_functions(a, b)),
    )


def cob2_instance(max_circles: int = 6) -> CategoryInstance:
    return CategoryInstance(
        name="cob2",
        dom=lambda m: m.dom,
        cod=lambda m: m.cod,
        identity=cob2.identity,
        compose=cob2.compose,
        equal=lambda m, n: m == n,
        sample_object=lambda rng, n: int(rng.integers(0, min(n, max_circles) + 1)),
        sample_morphism=lambda rng, a, b: cob2.random_cobordism(
            rng, a, b, depth=6, max_circles=max_circles),
        show=repr,
        dagger=cob2.dagger,
        tensor=cob2.tensor,
        tensor_objects=lambda a, b: a + b,
        unit=0,
        associator=lambda a, b, c: cob2.identity(a + b + c),
    )


def instance(name: str, **kwargs) -> CategoryInstance:
    factories = {"finhilb": finhilb_instance, "rel": rel_instance,
                 "finset": finset_instance, "cob2": cob2_instance}
    try:
        return factories[name](**kwargs)
    except KeyError:
        raise ValueError(f"unknown backend {name!r}; expected one of {BACKENDS}") from None


# --- fault injection --------------------------------------------------------

def _shifted_tensor(m, n):
    # off by one: output ports of the right factor shifted by dom instead of cod
    shifted = [cob2.Component(tuple(i + m.dom for i in c.ins),
                              tuple(o + m.dom for o in c.outs), c.genus)
               for c in n.components]
    return cob2.Cobordism(m.dom + n.dom, m.cod + n.cod, list(m.components) + shifted)


def _half_dagger(m):
    # swaps dom/cod but leaves ports in their old roles
    return cob2.Cobordism(m.cod, m.dom, m.components)


FAULTS = {
    "finhilb-swapped-compose": ("finhilb", lambda i: dataclasses.replace(
        i, compose=lambda g, f: finhilb.compose(f, g))),
    "finhilb-transpose-dagger": ("finhilb", lambda i: dataclasses.replace(
        i, dagger=lambda t: np.asarray(t).T)),
    "finhilb-conjugate-only-dagger": ("finhilb", lambda i: dataclasses.replace(
        i, dagger=lambda t: np.asarray(t).conj())),
    "rel-swapped-compose": ("rel", lambda i: dataclasses.replace(
        i, compose=lambda s, r: rel.compose(r, s))),
    "rel-identity-dagger": ("rel", lambda i: dataclasses.replace(i, dagger=lambda r: r)),
    "finset-swapped-compose": ("finset", lambda i: dataclasses.replace(
        i, compose=lambda g, f: finset.compose(f, g))),
    "cob2-off-by-one-tensor": ("cob2", lambda i: dataclasses.replace(i, tensor=_shifted_tensor)),
    "cob2-half-dagger": ("cob2", lambda i: dataclasses.replace(i, dagger=_half_dagger)),
}


def faulty_instance(fault: str) -> CategoryInstance:
    backend, inject = FAULTS[fault]
    inst = inject(instance(backend))
    return dataclasses.replace(inst, name=f"{inst.name}[{fault}]")
