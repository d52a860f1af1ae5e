"""Finite sets and functions, with genuine cartesian products.

Element labels are hashable terms: strings for atoms, ``frozenset`` for
Kuratowski pairs ``{{s}, {s, t}}`` and ``tuple`` for flat ordered pairs.
The Kuratowski pair ``(s, s)`` collapses to ``{{s}}``; labels are compared
structurally, so nothing special is needed for it.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Hashable, Iterable, Iterator, Mapping

Label = Hashable


class FunctionError(ValueError):
    pass


class ProductError(ValueError):
    """A candidate does not satisfy the universal property of the product."""


class FiniteSet:
    __slots__ = ("labels", "_members")

    def __init__(self, labels: Iterable[Label] = ()):
        labels = tuple(labels)
        members = frozenset(labels)
        if len(members) != len(labels):
            raise ValueError("set labels must be distinct")
        self.labels, self._members = labels, members

    def __iter__(self):
        return iter(self.labels)

    def __len__(self):
        return len(self.labels)

    def __contains__(self, x):
        return x in self._members

    def __eq__(self, other):
        return isinstance(other, FiniteSet) and self._members == other._members

    def __hash__(self):
        return hash(self._members)

    def __repr__(self):
        return "{" + ", ".join(show_label(x) for x in self.labels) + "}"


def show_label(x: Label) -> str:
    if isinstance(x, frozenset):
        return "{" + ",".join(sorted(show_label(y) for y in x)) + "}"
    if isinstance(x, tuple):
        return "(" + ",".join(show_label(y) for y in x) + ")"
    return str(x)


class FunctionMorphism:
    __slots__ = ("domain", "codomain", "table")

    def __init__(self, domain: FiniteSet, codomain: FiniteSet, table: Mapping[Label, Label]):
        if len(domain) and not len(codomain):
            raise FunctionError("no function from a nonempty set to the empty set")
        table = dict(table)
        if set(table) != set(domain.labels):
            raise FunctionError("table must be defined exactly on the domain")
        for x, y in table.items():
            if y not in codomain:
                raise FunctionError(f"image {show_label(y)} of {show_label(x)} "
                                    f"is not in the codomain")
        self.domain, self.codomain, self.table = domain, codomain, table

    @classmethod
    def _trusted(cls, domain: FiniteSet, codomain: FiniteSet, table: dict) -> "FunctionMorphism":
        # for results that are total and well-typed by construction
        f = object.__new__(cls)
        f.domain, f.codomain, f.table = domain, codomain, table
        return f

    def __call__(self, x: Label) -> Label:
        return self.table[x]

    def __eq__(self, other):
        return (isinstance(other, FunctionMorphism) and self.domain == other.domain
                and self.codomain == other.codomain and self.table == other.table)

    def __hash__(self):
        return hash((self.domain, self.codomain, frozenset(self.table.items())))

    def __repr__(self):
        body = ", ".join(f"{show_label(x)}->{show_label(self.table[x])}"
                         for x in self.domain)
        return f"<{body}>"


def identity(a: FiniteSet) -> FunctionMorphism:
    return FunctionMorphism._trusted(a, a, {x: x for x in a})


def compose(g: FunctionMorphism, f: FunctionMorphism) -> FunctionMorphism:
    if f.codomain != g.domain:
        raise FunctionError(f"cannot compose {g.domain!r} -> {g.codomain!r} "
                            f"after {f.domain!r} -> {f.codomain!r}")
    gt, ft = g.table, f.table
    return FunctionMorphism._trusted(f.domain, g.codomain, {x: gt[ft[x]] for x in ft})


def all_functions(a: FiniteSet, b: FiniteSet) -> Iterator[FunctionMorphism]:
    for images in itertools.product(b.labels, repeat=len(a)):
        yield FunctionMorphism(a, b, dict(zip(a.labels, images)))


def kpair(s: Label, t: Label) -> frozenset:
    return frozenset({frozenset({s}), frozenset({s, t})})


def kunpair(p: frozenset) -> tuple[Label, Label]:
    (s,) = min(p, key=len)
    if len(p) == 1:
        return s, s
    (t,) = max(p, key=len) - {s}
    return s, t


_ENCODERS = {"kuratowski": kpair, "flat": lambda s, t: (s, t)}


@dataclass(frozen=True)
class Product:
    """A product object ``obj`` of ``left`` and ``right`` with its projections."""

    obj: FiniteSet
    p1: FunctionMorphism
    p2: FunctionMorphism
    left: FiniteSet
    right: FiniteSet
    encoding: str = "kuratowski"

    def pair(self, s: Label, t: Label) -> Label:
        return _ENCODERS[self.encoding](s, t)


def cartesian_product(s: FiniteSet, t: FiniteSet, encoding: str = "kuratowski") -> Product:
    enc = _ENCODERS[encoding]
    pairs = [(x, y) for x in s for y in t]
    obj = FiniteSet(enc(x, y) for x, y in pairs)
    p1 = FunctionMorphism(obj, s, {enc(x, y): x for x, y in pairs})
    p2 = FunctionMorphism(obj, t, {enc(x, y): y for x, y in pairs})
    return Product(obj, p1, p2, s, t, encoding)


def is_product(obj: FiniteSet, p1: FunctionMorphism, p2: FunctionMorphism,
               s: FiniteSet, t: FiniteSet) -> bool:
    """Universal property for finite sets: ``(p1, p2)`` is a bijection onto ``S x T``."""
    if p1.domain != obj or p2.domain != obj or p1.codomain != s or p2.codomain != t:
        return False
    images = {(p1(z), p2(z)) for z in obj}
    return len(images) == len(obj) == len(s) * len(t)


def _check(p: Product) -> None:
    if not is_product(p.obj, p.p1, p.p2, p.left, p.right):
        raise ProductError(f"{p.obj!r} with the given projections is not a product "
                           f"of {p.left!r} and {p.right!r}")


def pairing(f1: FunctionMorphism, f2: FunctionMorphism, product: Product) -> FunctionMorphism:
    """The unique ``f`` with ``p1 f = f1`` and ``p2 f = f2``."""
    if f1.domain != f2.domain:
        raise FunctionError("pairing needs functions with a common domain")
    if f1.codomain != product.left or f2.codomain != product.right:
        raise FunctionError("codomains must be the factors of the product")
    _check(product)
    back = {(product.p1(z), product.p2(z)): z for z in product.obj}
    return FunctionMorphism(f1.domain, product.obj,
                            {x: back[f1(x), f2(x)] for x in f1.domain})


def diagonal(a: FiniteSet, product: Product | None = None) -> FunctionMorphism:
    if product is None:
        product = cartesian_product(a, a)
    ida = identity(a)
    return pairing(ida, ida, product)


def canonical_product_iso(p: Product, q: Product) -> FunctionMorphism:
    """The unique ``u: P -> Q`` with ``q1 u = p1`` and ``q2 u = p2``."""
    _check(p)
    _check(q)
    if p.left != q.left or p.right != q.right:
        raise ProductError("candidates are products of different factors")
    return pairing(p.p1, p.p2, q)


def tensor(f: FunctionMorphism, g: FunctionMorphism,
           encoding: str = "kuratowski") -> FunctionMorphism:
    """``f x g`` between the products of domains and codomains."""
    dom = cartesian_product(f.domain, g.domain, encoding)
    cod = cartesian_product(f.codomain, g.codomain, encoding)
    return FunctionMorphism(dom.obj, cod.obj,
                            {dom.pair(x, y): cod.pair(f(x), g(y))
                             for x in f.domain for y in g.domain})


UNIT = FiniteSet(["*"])


def tensor_objects(a: FiniteSet, b: FiniteSet, encoding: str = "kuratowski") -> FiniteSet:
    return cartesian_product(a, b, encoding).obj


def associator(a: FiniteSet, b: FiniteSet, c: FiniteSet,
               encoding: str = "kuratowski") -> FunctionMorphism:
    """``((x, y), z) -> (x, (y, z))``."""
    enc = _ENCODERS[encoding]
    dom = tensor_objects(tensor_objects(a, b, encoding), c, encoding)
    cod = tensor_objects(a, tensor_objects(b, c, encoding), encoding)
    return FunctionMorphism(dom, cod, {enc(enc(x, y), z): enc(x, enc(y, z))
                                       for x in a for y in b for z in c})


def left_unitor(a: FiniteSet, encoding: str = "kuratowski") -> FunctionMorphism:
    enc = _ENCODERS[encoding]
    return FunctionMorphism(tensor_objects(UNIT, a, encoding), a,
                            {enc("*", x): x for x in a})


def right_unitor(a: FiniteSet, encoding: str = "kuratowski") -> FunctionMorphism:
    enc = _ENCODERS[encoding]
    return FunctionMorphism(tensor_objects(a, UNIT, encoding), a,
                            {enc(x, "*"): x for x in a})


def to_terminal(a: FiniteSet) -> FunctionMorphism:
    return FunctionMorphism(a, UNIT, {x: "*" for x in a})


def terminal_and_elements(a: FiniteSet) -> tuple[FiniteSet, list[FunctionMorphism]]:
    """The one-point set and every element ``1 -> A`` of ``A``."""
    return UNIT, list(all_functions(UNIT, a))


@dataclass(frozen=True)
class NoDaggerWitness:
    hom_empty_to_one: int
    hom_one_to_empty: int
    hom_empty_to_empty: int

    @property
    def obstructed(self) -> bool:
        return self.hom_empty_to_one > 0 and self.hom_one_to_empty == 0

    def describe(self) -> str:
        return (f"no dagger: |hom(0,1)|={self.hom_empty_to_one}, "
                f"|hom(1,0)|={self.hom_one_to_empty}, so the map 0->1 has no reverse")


def no_dagger_witness() -> NoDaggerWitness:
    empty = FiniteSet()
    return NoDaggerWitness(
        len(list(all_functions(empty, UNIT))),
        len(list(all_functions(UNIT, empty))),
        len(list(all_functions(empty, empty))),
    )
