"""Two-dimensional oriented cobordisms in combinatorial normal form.

An object is a number of circles.  A cobordism ``m -> n`` is recorded as a
list of connected components; each component knows which input circles and
which output circles it touches (1-based) and its genus.  By the
classification of compact oriented surfaces with boundary, this data
determines the cobordism up to diffeomorphism rel boundary, so structural
equality of sorted component lists decides equality of morphisms.

Gluing adds Euler characteristics (the circles glued along have
characteristic 0) and the genus of each glued cluster is recovered from
``chi = 2 - 2g - b``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

import numpy as np


class CobordismError(ValueError):
    pass


class InvariantError(RuntimeError):
    """Gluing produced an impossible genus; indicates a bug, never user error."""


@dataclass(frozen=True, order=True)
class Component:
    ins: tuple[int, ...]
    outs: tuple[int, ...]
    genus: int = 0

    def __post_init__(self):
        object.__setattr__(self, "ins", tuple(sorted(self.ins)))
        object.__setattr__(self, "outs", tuple(sorted(self.outs)))
        if self.genus < 0:
            raise CobordismError("genus must be nonnegative")

    @property
    def boundary(self) -> int:
        return len(self.ins) + len(self.outs)

    @property
    def euler(self) -> int:
        return 2 - 2 * self.genus - self.boundary

    def __str__(self):
        ins = ",".join(map(str, self.ins))
        outs = ",".join(map(str, self.outs))
        return f"(in={{{ins}}} out={{{outs}}} g={self.genus})"


class Cobordism:
    __slots__ = ("dom", "cod", "components")

    def __init__(self, dom: int, cod: int, components: Iterable[Component] = ()):
        if dom < 0 or cod < 0:
            raise CobordismError("circle counts must be nonnegative")
        comps = tuple(sorted(components))
        ins = [i for c in comps for i in c.ins]
        outs = [o for c in comps for o in c.outs]
        if sorted(ins) != list(range(1, dom + 1)):
            raise CobordismError(f"input ports {sorted(ins)} do not partition 1..{dom}")
        if sorted(outs) != list(range(1, cod + 1)):
            raise CobordismError(f"output ports {sorted(outs)} do not partition 1..{cod}")
        self.dom, self.cod, self.components = dom, cod, comps

    def __eq__(self, other):
        return (isinstance(other, Cobordism) and self.dom == other.dom
                and self.cod == other.cod and self.components == other.components)

    def __hash__(self):
        return hash((self.dom, self.cod, self.components))

    def __str__(self):
        if not self.components:
            return "()"
        return " ".join(str(c) for c in self.components)

    def __repr__(self):
        return f"Cobordism({self.dom}->{self.cod}: {self})"

    @property
    def euler(self) -> int:
        return sum(c.euler for c in self.components)

    @property
    def closed(self) -> tuple[Component, ...]:
        return tuple(c for c in self.components if not c.boundary)


def identity(k: int) -> Cobordism:
    return Cobordism(k, k, [Component((i,), (i,)) for i in range(1, k + 1)])


def permutation(k: int, sigma: Sequence[int]) -> Cobordism:
    """Cylinders from circle ``i`` to circle ``sigma[i-1]`` (1-based images)."""
    if sorted(sigma) != list(range(1, k + 1)):
        raise CobordismError(f"{list(sigma)} is not a permutation of 1..{k}")
    return Cobordism(k, k, [Component((i,), (s,)) for i, s in enumerate(sigma, 1)])


def cup() -> Cobordism:
    return Cobordism(0, 1, [Component((), (1,))])


def cap() -> Cobordism:
    return Cobordism(1, 0, [Component((1,), ())])


def pants() -> Cobordism:
    return Cobordism(2, 1, [Component((1, 2), (1,))])


def copants() -> Cobordism:
    return Cobordism(1, 2, [Component((1,), (1, 2))])


def swap() -> Cobordism:
    return permutation(2, (2, 1))


def closed_surface(genus: int) -> Cobordism:
    return Cobordism(0, 0, [Component((), (), genus)])


GENERATORS = {
    "cup": cup, "cap": cap, "pants": pants, "copants": copants, "swap": swap,
}


class _UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a: int, b: int) -> None:
        self.parent[self.find(a)] = self.find(b)


def compose(mp: Cobordism, m: Cobordism) -> Cobordism:
    """Glue ``m`` (first) to ``mp`` along the circles of ``m.cod``."""
    if m.cod != mp.dom:
        raise CobordismError(f"cannot glue {mp.dom}->{mp.cod} after {m.dom}->{m.cod}")
    nodes = list(m.components) + list(mp.components)
    split = len(m.components)
    uf = _UnionFind(len(nodes))
    out_owner = {o: i for i, c in enumerate(m.components) for o in c.outs}
    in_owner = {i: split + j for j, c in enumerate(mp.components) for i in c.ins}
    for circle in range(1, m.cod + 1):
        uf.union(out_owner[circle], in_owner[circle])

    clusters: dict[int, list[int]] = {}
    for i in range(len(nodes)):
        clusters.setdefault(uf.find(i), []).append(i)
    result = []
    for members in clusters.values():
        ins = [p for i in members if i < split for p in nodes[i].ins]
        outs = [p for i in members if i >= split for p in nodes[i].outs]
        chi = sum(nodes[i].euler for i in members)
        twice_genus = 2 - chi - len(ins) - len(outs)
        if twice_genus < 0 or twice_genus % 2:
            raise InvariantError(f"gluing produced chi={chi} with {len(ins) + len(outs)} "
                                 "boundary circles")
        result.append(Component(tuple(ins), tuple(outs), twice_genus // 2))
    return Cobordism(m.dom, mp.cod, result)


def tensor(m: Cobordism, n: Cobordism) -> Cobordism:
    """Disjoint union; ``n``'s circles are numbered after ``m``'s."""
    shifted = [Component(tuple(i + m.dom for i in c.ins),
                         tuple(o + m.cod for o in c.outs), c.genus)
               for c in n.components]
    return Cobordism(m.dom + n.dom, m.cod + n.cod, list(m.components) + shifted)


def dagger(m: Cobordism) -> Cobordism:
    """Swap the roles of incoming and outgoing boundary."""
    return Cobordism(m.cod, m.dom, [Component(c.outs, c.ins, c.genus) for c in m.components])


def is_permutation(m: Cobordism) -> bool:
    return m.dom == m.cod and all(len(c.ins) == 1 and len(c.outs) == 1 and c.genus == 0
                                  for c in m.components)


def is_unitary(m: Cobordism) -> bool:
    return (compose(dagger(m), m) == identity(m.dom)
            and compose(m, dagger(m)) == identity(m.cod))


# --- random and exhaustive generation -------------------------------------

# generator name -> (inputs, outputs)
ARITY = {"cup": (0, 1), "cap": (1, 0), "pants": (2, 1), "copants": (1, 2),
         "swap": (2, 2), "id": (1, 1)}


@dataclass(frozen=True)
class Layer:
    """One generator with ``left`` cylinders before it and ``right`` after it."""

    gen: str
    left: int
    right: int

    @property
    def dom(self) -> int:
        return self.left + ARITY[self.gen][0] + self.right

    @property
    def cod(self) -> int:
        return self.left + ARITY[self.gen][1] + self.right

    def cobordism(self) -> Cobordism:
        core = identity(1) if self.gen == "id" else GENERATORS[self.gen]()
        return tensor(tensor(identity(self.left), core), identity(self.right))

    def expr(self) -> str:
        parts = []
        if self.left:
            parts.append(f"id[{self.left}]")
        parts.append("id[1]" if self.gen == "id" else self.gen)
        if self.right:
            parts.append(f"id[{self.right}]")
        return " * ".join(parts)


def word_cobordism(word: Sequence[Layer], dom: int) -> Cobordism:
    m = identity(dom)
    for layer in word:
        m = compose(layer.cobordism(), m)
    return m


def word_expr(word: Sequence[Layer], dom: int) -> str:
    if not word:
        return f"id[{dom}]"
    return " ; ".join(layer.expr() for layer in word)


def _random_layer(rng: np.random.Generator, k: int, max_circles: int) -> Layer:
    options = [g for g, (a, b) in ARITY.items() if a <= k and k - a + b <= max_circles]
    gen = options[int(rng.integers(len(options)))]
    a = ARITY[gen][0]
    left = int(rng.integers(k - a + 1))
    return Layer(gen, left, k - a - left)


def random_word(rng: np.random.Generator, dom: int, cod: int | None = None,
                depth: int = 6, max_circles: int = 3) -> list[Layer]:
    """A random generator word starting at ``dom`` circles.

    With ``cod`` given, the word is extended with pants/caps or copants/cups
    until it ends at ``cod`` circles.
    """
    word, k = [], dom
    for _ in range(int(rng.integers(depth + 1))):
        layer = _random_layer(rng, k, max(max_circles, k))
        word.append(layer)
        k = layer.cod
    if cod is not None:
        while k > cod:
            gen = "pants" if k >= 2 else "cap"
            word.append(Layer(gen, 0, k - ARITY[gen][0]))
            k = word[-1].cod
        while k < cod:
            gen = "copants" if k >= 1 else "cup"
            word.append(Layer(gen, 0, k - ARITY[gen][0]))
            k = word[-1].cod
    return word


def random_cobordism(rng: np.random.Generator, dom: int, cod: int,
                     depth: int = 6, max_circles: int = 3) -> Cobordism:
    return word_cobordism(random_word(rng, dom, cod, depth, max_circles), dom)


def _set_partitions(items: list) -> Iterator[list[list]]:
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in _set_partitions(rest):
        for i in range(len(part)):
            yield part[:i] + [[first] + part[i]] + part[i + 1:]
        yield [[first]] + part


def normal_forms(dom: int, cod: int, min_euler: int, max_closed: int = 2) -> Iterator[Cobordism]:
    """Every normal form ``dom -> cod`` with Euler characteristic at least
    ``min_euler`` and at most ``max_closed`` closed components."""
    ports = [("i", i) for i in range(1, dom + 1)] + [("o", o) for o in range(1, cod + 1)]
    for blocks in _set_partitions(ports):
        base = [Component(tuple(p for s, p in b if s == "i"),
                          tuple(p for s, p in b if s == "o")) for b in blocks]
        budget = sum(c.euler for c in base) - min_euler
        if budget < 0:
            continue
        for n_closed in range(max_closed + 1):
            # each unit of genus costs 2; each closed component adds 2 before its genus
            slots = len(base) + n_closed
            top = (budget + 2 * n_closed) // 2
            for genera in itertools.product(range(top + 1), repeat=slots):
                comps = [Component(c.ins, c.outs, g) for c, g in zip(base, genera)]
                closed = sorted(genera[len(base):])
                if list(genera[len(base):]) != closed:
                    continue
                comps += [Component((), (), g) for g in closed]
                m = Cobordism(dom, cod, comps)
                if m.euler >= min_euler:
                    yield m


def projection(index: int) -> Cobordism:
    """The 2 -> 1 cobordism keeping circle ``index`` and capping the other."""
    return tensor(identity(1), cap()) if index == 1 else tensor(cap(), identity(1))


def diagonal_candidates(min_euler: int = -4) -> list[Cobordism]:
    """All ``D: 1 -> 2`` in the search range with ``p1 D = 1 = p2 D``."""
    one = identity(1)
    return [d for d in normal_forms(1, 2, min_euler)
            if compose(projection(1), d) == one and compose(projection(2), d) == one]


def unit_not_terminal() -> tuple[Cobordism, Cobordism]:
    """Two distinct morphisms from one circle to the empty manifold."""
    handle_cap = Cobordism(1, 0, [Component((1,), (), 1)])
    return cap(), handle_cap


def projection_naturality_failure() -> tuple[Cobordism, Cobordism]:
    """``p1 o (1 (x) h)`` versus ``p1`` for a handle ``h`` on the discarded circle."""
    handle = Cobordism(1, 1, [Component((1,), (1,), 1)])
    return compose(projection(1), tensor(identity(1), handle)), projection(1)
