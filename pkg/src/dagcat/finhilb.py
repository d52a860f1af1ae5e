"""Finite-dimensional Hilbert spaces and linear maps as complex matrices.

A morphism ``H -> K`` is a ``dim K x dim H`` numpy array; composition is the
matrix product and the tensor product is the Kronecker product with row-major
index order, which is strictly associative on the nose.  State vectors are
1-d arrays of unit norm.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence, Union

import numpy as np

MORPHISM_ATOL = 1e-9
SCALAR_ATOL = 1e-12
RANK_TOL = 1e-9


class DimensionError(ValueError):
    """Shapes of two operands do not fit together."""


class UndefinedProbability(ZeroDivisionError):
    pass


def as_matrix(data) -> np.ndarray:
    """Coerce to a finite 2-d complex array."""
    m = np.asarray(data, dtype=complex)
    if m.ndim != 2:
        raise DimensionError(f"expected a matrix, got array of shape {m.shape}")
    if not np.all(np.isfinite(m)):
        raise ValueError("matrix entries must be finite")
    return m


def as_state(data, atol: float = MORPHISM_ATOL) -> np.ndarray:
    v = np.asarray(data, dtype=complex).reshape(-1)
    if abs(np.linalg.norm(v) - 1.0) > atol:
        raise ValueError(f"state vector must have unit norm, got {np.linalg.norm(v)}")
    return v


def identity(n: int) -> np.ndarray:
    return np.eye(n, dtype=complex)


def adjoint(t) -> np.ndarray:
    return as_matrix(t).conj().T


def compose(g, f) -> np.ndarray:
    """``g o f``: apply ``f`` first."""
    g, f = as_matrix(g), as_matrix(f)
    if f.shape[0] != g.shape[1]:
        raise DimensionError(f"cannot compose {g.shape} after {f.shape}")
    return g @ f


def kron(f, g) -> np.ndarray:
    return np.kron(as_matrix(f), as_matrix(g))


def equal(f, g, atol: float = MORPHISM_ATOL) -> bool:
    f, g = np.asarray(f), np.asarray(g)
    return f.shape == g.shape and bool(np.allclose(f, g, rtol=0.0, atol=atol))


def random_matrix(rng: np.random.Generator, rows: int, cols: int) -> np.ndarray:
    """Entries with real and imaginary parts uniform on [-1, 1]."""
    return rng.uniform(-1, 1, (rows, cols)) + 1j * rng.uniform(-1, 1, (rows, cols))


def random_state(rng: np.random.Generator, dim: int) -> np.ndarray:
    v = random_matrix(rng, dim, 1).reshape(-1)
    return v / np.linalg.norm(v)


# ObjectTree: an int is an atomic dimension, a 2-tuple a tensor node, () the unit.
ObjectTree = Union[int, tuple]
UNIT: tuple = ()


def tree_dim(tree: ObjectTree) -> int:
    if isinstance(tree, tuple):
        return int(np.prod([tree_dim(t) for t in tree], dtype=int)) if tree else 1
    return int(tree)


def associator(a: ObjectTree, b: ObjectTree, c: ObjectTree) -> np.ndarray:
    """``(A (x) B) (x) C -> A (x) (B (x) C)``; row-major flattening makes it an identity."""
    return identity(tree_dim(((a, b), c)))


def left_unitor(a: ObjectTree) -> np.ndarray:
    return identity(tree_dim(a))


def right_unitor(a: ObjectTree) -> np.ndarray:
    return identity(tree_dim(a))


def ket(v) -> np.ndarray:
    """The map ``C -> H`` sending 1 to ``v``."""
    return np.asarray(v, dtype=complex).reshape(-1, 1)


def inner(phi, psi) -> complex:
    """Inner product, conjugate-linear in the first slot."""
    return complex(np.vdot(phi, psi))


def inner_via_dagger(phi, psi) -> complex:
    phi, psi = np.asarray(phi), np.asarray(psi)
    if phi.shape != psi.shape:
        raise DimensionError(f"state dimensions differ: {phi.shape} vs {psi.shape}")
    return complex(compose(adjoint(ket(phi)), ket(psi))[0, 0])


def phase_equivalent(u, v, atol: float = MORPHISM_ATOL) -> bool:
    u, v = np.asarray(u), np.asarray(v)
    return u.shape == v.shape and abs(abs(np.vdot(u, v)) - 1.0) <= atol


def relative_probability(psi, t, i: int, j: int, basis: Sequence) -> float:
    """``|<b_i, T psi>|^2 / |<b_j, T psi>|^2`` for an orthonormal ``basis`` (0-based)."""
    b = np.array([np.asarray(e, dtype=complex).reshape(-1) for e in basis])
    if not np.allclose(b.conj() @ b.T, np.eye(len(b)), atol=MORPHISM_ATOL):
        raise ValueError("basis is not orthonormal")
    out = compose(t, ket(psi)).reshape(-1)
    den = abs(np.vdot(b[j], out))
    if den <= SCALAR_ATOL:
        raise UndefinedProbability(f"undefined relative probability: amplitude of outcome {j} is 0")
    return abs(np.vdot(b[i], out)) ** 2 / den ** 2


def is_unitary(t, tol: float = MORPHISM_ATOL) -> bool:
    t = as_matrix(t)
    r, c = t.shape
    return (equal(adjoint(t) @ t, identity(c), tol)
            and equal(t @ adjoint(t), identity(r), tol))


def _bipartite(v, dim_a: int, dim_b: int) -> np.ndarray:
    v = np.asarray(v, dtype=complex).reshape(-1)
    if v.size != dim_a * dim_b:
        raise DimensionError(f"state of dimension {v.size} is not {dim_a} x {dim_b}")
    return v.reshape(dim_a, dim_b)


def schmidt_coefficients(v, dim_a: int, dim_b: int) -> np.ndarray:
    return np.linalg.svd(_bipartite(v, dim_a, dim_b), compute_uv=False)


def schmidt_rank(v, dim_a: int, dim_b: int) -> int:
    return int(np.sum(schmidt_coefficients(v, dim_a, dim_b) > RANK_TOL))


def product_factors(v, dim_a: int, dim_b: int) -> tuple[np.ndarray, np.ndarray]:
    """Unit vectors ``a, b`` with ``kron(a, b)`` phase-equivalent to ``v``.

    Raises ``ValueError`` for entangled states.
    """
    u, s, vh = np.linalg.svd(_bipartite(v, dim_a, dim_b))
    if np.sum(s > RANK_TOL) != 1:
        raise ValueError("state is entangled")
    return u[:, 0], vh[0, :]


def cloning_system(dim: int, constraints: Sequence) -> np.ndarray:
    """Linear system on the row-major entries of ``D: dim -> dim**2`` encoding
    ``D T = (T (x) T) D`` for every constraint ``T``."""
    n = dim
    blocks = []
    for t in constraints:
        t = as_matrix(t)
        if t.shape != (n, n):
            raise DimensionError(f"constraint of shape {t.shape}, expected {(n, n)}")
        # row-major vec(A X B) = (A (x) B^T) vec(X)
        blocks.append(np.kron(np.eye(n * n), t.T) - np.kron(np.kron(t, t), np.eye(n)))
    if not blocks:
        return np.zeros((0, n ** 3), dtype=complex)
    return np.vstack(blocks)


def cloning_solution_dimension(dim: int, constraints: Sequence) -> int:
    system = cloning_system(dim, constraints)
    if system.shape[0] == 0:
        return dim ** 3
    s = np.linalg.svd(system, compute_uv=False)
    rank = int(np.sum(s > RANK_TOL * max(1.0, s[0])))
    return dim ** 3 - rank


@dataclass(frozen=True)
class ProductWitness:
    conclusive: bool
    tensor_dim: int
    product_dim: int
    message: str


def tensor_not_product_witness(dim_a: int, dim_b: int) -> ProductWitness:
    """Dimension count separating ``A (x) B`` from the direct sum ``A (+) B``.

    Products are unique up to isomorphism and in Hilb the product is the
    direct sum, so a tensor object of different dimension cannot be one.
    """
    t, p = dim_a * dim_b, dim_a + dim_b
    if t == p:
        return ProductWitness(False, t, p,
                              f"inconclusive by dimension count ({t} = {p}); "
                              "use the cloning naturality check")
    return ProductWitness(True, t, p, f"tensor dimension {t} != product dimension {p}")
