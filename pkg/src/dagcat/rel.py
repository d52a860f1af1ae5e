"""Sets and relations as boolean matrices.

Rows index the codomain and columns the domain, so ``matrix[y, x]`` is true
iff ``x R y`` and composition is ordinary left multiplication with
or/and in place of plus/times.
"""

from __future__ import annotations

import functools
import itertools
from typing import Iterable, Iterator, Sequence

import numpy as np


class SizeError(ValueError):
    pass


class BoolRelation:
    __slots__ = ("src_size", "dst_size", "matrix")

    def __init__(self, src_size: int, dst_size: int, matrix=None):
        if src_size < 0 or dst_size < 0:
            raise SizeError("set sizes must be nonnegative")
        if matrix is None:
            m = np.zeros((dst_size, src_size), dtype=bool)
        else:
            m = np.array(matrix, dtype=bool)
            if m.size != dst_size * src_size or (m.ndim == 2 and m.size
                                                 and m.shape != (dst_size, src_size)):
                raise SizeError(f"matrix of shape {m.shape} does not fit "
                                f"{src_size}->{dst_size}")
            m = m.reshape(dst_size, src_size)
        m.setflags(write=False)
        self.src_size, self.dst_size, self.matrix = src_size, dst_size, m

    @classmethod
    def _trusted(cls, src_size: int, dst_size: int, m: np.ndarray) -> "BoolRelation":
        # m is a fresh bool array of the right shape
        r = object.__new__(cls)
        m.setflags(write=False)
        r.src_size, r.dst_size, r.matrix = src_size, dst_size, m
        return r

    @classmethod
    def from_pairs(cls, src_size: int, dst_size: int,
                   pairs: Iterable[tuple[int, int]]) -> "BoolRelation":
        """Relation containing each ``(x, y)`` pair (0-based indices)."""
        m = np.zeros((dst_size, src_size), dtype=bool)
        for x, y in pairs:
            m[y, x] = True
        return cls(src_size, dst_size, m)

    def pairs(self) -> set[tuple[int, int]]:
        return {(int(x), int(y)) for y, x in zip(*np.nonzero(self.matrix))}

    def __eq__(self, other):
        return (isinstance(other, BoolRelation)
                and self.src_size == other.src_size and self.dst_size == other.dst_size
                and self.matrix.tobytes() == other.matrix.tobytes())

    def __hash__(self):
        return hash((self.src_size, self.dst_size, self.matrix.tobytes()))

    def __repr__(self):
        return f"BoolRelation({self.src_size}->{self.dst_size}, {sorted(self.pairs())})"


@functools.lru_cache(maxsize=64)
def identity(n: int) -> BoolRelation:
    return BoolRelation(n, n, np.eye(n, dtype=bool))


def compose(s: BoolRelation, r: BoolRelation) -> BoolRelation:
    """``S o R``: ``x`` relates to ``z`` iff some ``y`` has ``x R y`` and ``y S z``."""
    if r.dst_size != s.src_size:
        raise SizeError(f"cannot compose {s.src_size}->{s.dst_size} after "
                        f"{r.src_size}->{r.dst_size}")
    prod = s.matrix.astype(np.int64) @ r.matrix.astype(np.int64)
    return BoolRelation._trusted(r.src_size, s.dst_size, prod > 0)


def dagger(r: BoolRelation) -> BoolRelation:
    return BoolRelation._trusted(r.dst_size, r.src_size, r.matrix.T.copy())


def tensor(r: BoolRelation, s: BoolRelation) -> BoolRelation:
    """Relation on pairs, ``(x, x')`` to ``(y, y')`` iff ``x R y`` and ``x' S y'``.

    Pair ``(a, b)`` sits at index ``a * size_b + b``.
    """
    m = r.matrix[:, None, :, None] & s.matrix[None, :, None, :]
    return BoolRelation._trusted(r.src_size * s.src_size, r.dst_size * s.dst_size,
                                 m.reshape(r.dst_size * s.dst_size, r.src_size * s.src_size))


def from_function(table: Sequence[int], dst_size: int) -> BoolRelation:
    """Graph of the function ``x -> table[x]``."""
    return BoolRelation.from_pairs(len(table), dst_size, enumerate(table))


def is_function(r: BoolRelation) -> bool:
    return bool(np.all(r.matrix.sum(axis=0) == 1))


def all_relations(src_size: int, dst_size: int) -> Iterator[BoolRelation]:
    n = src_size * dst_size
    for bits in itertools.product((False, True), repeat=n):
        yield BoolRelation(src_size, dst_size, np.array(bits, dtype=bool))


def random_relation(rng: np.random.Generator, src_size: int, dst_size: int,
                    density: float = 0.5) -> BoolRelation:
    return BoolRelation(src_size, dst_size, rng.random((dst_size, src_size)) < density)
