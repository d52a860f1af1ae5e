"""2D TQFTs from commutative Frobenius algebras.

The algebra is given by its unit ``u`` (n-vector), multiplication ``m``
(``n x n**2``, row-major on the two inputs) and counit ``eps`` (``1 x n``).
The comultiplication is derived from the pairing ``g_ij = eps(e_i e_j)``:
``Delta(x) = sum_i (x e_i) (x) f^i`` where ``f^i`` is the basis dual to
``e_i`` under ``g``.

A connected cobordism with ``a`` inputs, ``b`` outputs and genus ``k``
evaluates to ``comult_fan(b) o h**k o mult_fan(a)`` with ``h = m o Delta``.
"""

from __future__ import annotations

import itertools
import string
from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np

from . import cob2, finhilb
from .cob2 import Cobordism
from .laws import (FAIL, NOT_APPLICABLE, PASS, Counterexample, LawReport, SampleSpec,
                   sample_rng)

ATOL = 1e-9


class FrobeniusError(ValueError):
    pass


@dataclass(frozen=True)
class LawResidual:
    law: str
    residual: float
    passed: bool


@dataclass(frozen=True)
class ValidationReport:
    laws: tuple[LawResidual, ...]

    @property
    def ok(self) -> bool:
        return all(r.passed for r in self.laws)

    def failures(self) -> list[str]:
        return [r.law for r in self.laws if not r.passed]

    def to_lines(self) -> list[str]:
        return [f"{'PASS' if r.passed else 'FAIL'} frobenius:{r.law} residual={r.residual:.3e}"
                for r in self.laws]


@dataclass(frozen=True, eq=False)
class FrobeniusAlgebra:
    unit: np.ndarray
    mult: np.ndarray
    counit: np.ndarray

    def __post_init__(self):
        u = np.asarray(self.unit, dtype=complex).reshape(-1)
        n = u.size
        m = np.asarray(self.mult, dtype=complex)
        e = np.asarray(self.counit, dtype=complex).reshape(1, -1)
        if m.shape != (n, n * n) or e.shape != (1, n):
            raise FrobeniusError(f"inconsistent shapes: unit {u.shape}, mult {m.shape}, "
                                 f"counit {e.shape}")
        object.__setattr__(self, "unit", u)
        object.__setattr__(self, "mult", m)
        object.__setattr__(self, "counit", e)

    @property
    def dim(self) -> int:
        return self.unit.size

    @property
    def pairing(self) -> np.ndarray:
        return (self.counit @ self.mult).reshape(self.dim, self.dim)

    @property
    def comult(self) -> np.ndarray:
        """``n**2 x n`` comultiplication built from the dual basis of the pairing."""
        n = self.dim
        ginv = np.linalg.inv(self.pairing)
        # Delta = (m (x) 1) o (1 (x) copairing), copairing = sum_i e_i (x) f^i
        copairing = np.zeros((n * n, 1), dtype=complex)
        for i in range(n):
            f_i = ginv[:, i]
            copairing += np.kron(np.eye(n)[:, [i]], f_i.reshape(-1, 1))
        return np.kron(self.mult, np.eye(n)) @ np.kron(np.eye(n), copairing)

    @property
    def handle(self) -> np.ndarray:
        return self.mult @ self.comult


def swap_matrix(n: int) -> np.ndarray:
    s = np.zeros((n * n, n * n))
    for i, j in itertools.product(range(n), repeat=2):
        s[j * n + i, i * n + j] = 1
    return s


def validate(a: FrobeniusAlgebra, atol: float = ATOL) -> ValidationReport:
    n = a.dim
    one = np.eye(n)
    u = a.unit.reshape(-1, 1)
    m = a.mult
    laws = []

    def add(name, residual, ok=None):
        laws.append(LawResidual(name, float(residual),
                                bool(residual <= atol if ok is None else ok)))

    add("associativity", np.max(np.abs(m @ np.kron(m, one) - m @ np.kron(one, m)), initial=0))
    add("left-unit", np.max(np.abs(m @ np.kron(u, one) - one)))
    add("right-unit", np.max(np.abs(m @ np.kron(one, u) - one)))
    add("commutativity", np.max(np.abs(m @ swap_matrix(n) - m), initial=0))
    det = abs(np.linalg.det(a.pairing))
    add("nondegeneracy", det, det > atol)
    if det > atol:
        d = a.comult
        e = a.counit
        add("left-counit", np.max(np.abs(np.kron(e, one) @ d - one)))
        add("right-counit", np.max(np.abs(np.kron(one, e) @ d - one)))
    else:
        add("left-counit", np.inf)
        add("right-counit", np.inf)
    return ValidationReport(tuple(laws))


def dagger_compatibility(a: FrobeniusAlgebra, atol: float = ATOL) -> bool:
    """``Delta = m*`` and ``eps = u*`` under the standard inner product."""
    return (finhilb.equal(a.comult, finhilb.adjoint(a.mult), atol)
            and finhilb.equal(a.counit, finhilb.adjoint(a.unit.reshape(-1, 1)), atol))


def z2_group_algebra(counit_scale: float = 2.0) -> FrobeniusAlgebra:
    """Group algebra of Z/2; the default counit is the trace of left multiplication."""
    mult = np.zeros((2, 4))
    for i, j in itertools.product(range(2), repeat=2):
        mult[(i + j) % 2, 2 * i + j] = 1
    return FrobeniusAlgebra([1, 0], mult, [counit_scale, 0])


def split_algebra(weights=(1.0, 1.0)) -> FrobeniusAlgebra:
    """``C x C`` with componentwise product and ``eps(x) = sum w_i x_i``."""
    mult = np.zeros((2, 4))
    mult[0, 0] = mult[1, 3] = 1
    return FrobeniusAlgebra([1, 1], mult, list(weights))


def mult_fan(a: FrobeniusAlgebra, k: int) -> np.ndarray:
    """``n x n**k`` left-nested multiplication of ``k`` inputs (unit for ``k = 0``)."""
    n = a.dim
    if k == 0:
        return a.unit.reshape(-1, 1)
    acc = np.eye(n, dtype=complex)
    for i in range(2, k + 1):
        acc = a.mult @ np.kron(acc, np.eye(n))
    return acc


def comult_fan(a: FrobeniusAlgebra, k: int) -> np.ndarray:
    """``n**k x n`` left-nested comultiplication into ``k`` outputs (counit for ``k = 0``)."""
    n = a.dim
    if k == 0:
        return a.counit
    acc = np.eye(n, dtype=complex)
    d = a.comult
    for i in range(2, k + 1):
        acc = np.kron(acc, np.eye(n)) @ d
    return acc


class TqftFunctor:
    """The functor ``Z: 2Cob -> FinHilb`` determined by a Frobenius algebra.

    Construction validates the algebra and raises ``FrobeniusError`` when any
    law fails.
    """

    def __init__(self, algebra: FrobeniusAlgebra, *, validate_algebra: bool = True):
        if validate_algebra:
            report = validate(algebra)
            if not report.ok:
                raise FrobeniusError("invalid Frobenius algebra: " + ", ".join(report.failures()))
        self.algebra = algebra
        self._handle = algebra.handle

    def object_dim(self, k: int) -> int:
        return self.algebra.dim ** k

    def component(self, ins: int, outs: int, genus: int) -> np.ndarray:
        a = self.algebra
        h = np.linalg.matrix_power(self._handle, genus)
        return comult_fan(a, outs) @ h @ mult_fan(a, ins)

    def __call__(self, m: Cobordism) -> np.ndarray:
        return evaluate(self, m)


def evaluate(z: TqftFunctor, m: Cobordism) -> np.ndarray:
    n = z.algebra.dim
    letters = iter(string.ascii_letters)
    out_axes = {o: next(letters) for o in range(1, m.cod + 1)}
    in_axes = {i: next(letters) for i in range(1, m.dom + 1)}
    scalar = 1 + 0j
    operands, subscripts = [], []
    for c in m.components:
        block = z.component(len(c.ins), len(c.outs), c.genus)
        if not c.boundary:
            scalar *= complex(block[0, 0])
            continue
        operands.append(block.reshape((n,) * c.boundary))
        subscripts.append("".join(out_axes[o] for o in c.outs)
                          + "".join(in_axes[i] for i in c.ins))
    target = "".join(out_axes.values()) + "".join(in_axes.values())
    if operands:
        tensor = np.einsum(",".join(subscripts) + "->" + target, *operands)
    else:
        tensor = np.ones(())
    return scalar * tensor.reshape(n ** m.cod, n ** m.dom)


def _random_pair(rng: np.random.Generator, max_circles: int, depth: int):
    dom = int(rng.integers(max_circles + 1))
    first = cob2.random_word(rng, dom, depth=depth, max_circles=max_circles)
    mid = cob2.word_cobordism(first, dom).cod
    second = cob2.random_word(rng, mid, depth=depth, max_circles=max_circles)
    return cob2.word_cobordism(first, dom), cob2.word_cobordism(second, mid)


def check_functoriality(z: TqftFunctor, spec: SampleSpec, atol: float = ATOL,
                        evaluator: Optional[Callable] = None) -> LawReport:
    """``Z(M'M) = Z(M') Z(M)`` and ``Z(M (x) N) = Z(M) (x) Z(N)`` on random pairs."""
    ev = evaluator or (lambda c: evaluate(z, c))
    for index in range(spec.samples):
        rng = sample_rng(spec.seed, "functoriality", index)
        m, mp = _random_pair(rng, min(spec.max_size, 3), 6)
        checks = [
            ("composition", ev(cob2.compose(mp, m)), finhilb.compose(ev(mp), ev(m))),
            ("identity", ev(cob2.identity(m.dom)), np.eye(z.object_dim(m.dom))),
            ("monoidality", ev(cob2.tensor(m, mp)), np.kron(ev(m), ev(mp))),
        ]
        for name, lhs, rhs in checks:
            if not finhilb.equal(lhs, rhs, atol):
                cx = Counterexample(name, repr(m), repr(mp), spec.seed, index,
                                    f"max residual {np.max(np.abs(lhs - rhs)):.3e}"
                                    if lhs.shape == rhs.shape else "shape mismatch")
                return LawReport("functoriality", "tqft", FAIL, index + 1, cx)
    return LawReport("functoriality", "tqft", PASS, spec.samples)


def check_dagger_preservation(z: TqftFunctor, spec: SampleSpec,
                              atol: float = ATOL) -> LawReport:
    """``Z(M*) = Z(M)*`` on random cobordisms, after the compatibility precheck."""
    if not dagger_compatibility(z.algebra, atol):
        return LawReport("dagger-preservation", "tqft", NOT_APPLICABLE, 0,
                         detail="algebra fails Delta = m* / eps = u*")
    for index in range(spec.samples):
        rng = sample_rng(spec.seed, "dagger-preservation", index)
        dom = int(rng.integers(min(spec.max_size, 3) + 1))
        m = cob2.word_cobordism(cob2.random_word(rng, dom, max_circles=3), dom)
        lhs, rhs = evaluate(z, cob2.dagger(m)), finhilb.adjoint(evaluate(z, m))
        if not finhilb.equal(lhs, rhs, atol):
            cx = Counterexample("dagger-preservation", repr(cob2.dagger(m)), repr(m),
                                spec.seed, index)
            return LawReport("dagger-preservation", "tqft", FAIL, index + 1, cx)
    return LawReport("dagger-preservation", "tqft", PASS, spec.samples)
