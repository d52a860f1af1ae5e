"""Type checking and dagger push-down for morphism terms."""

from __future__ import annotations

from dataclasses import replace

from .syntax import (CIRCLE, Compose, Dagger, Gen, Id, Signature, Span, Tensor, Term,
                     show_object)


class DslTypeError(TypeError):
    def __init__(self, message: str, span: Span | None = None):
        self.span = span
        where = f"line {span.line}, column {span.col}: " if span else ""
        super().__init__(where + message)


def push_dagger(term: Term) -> Term:
    """Rewrite so that ``Dagger`` only wraps generators and identities.

    Uses ``(f ; g)* = g* ; f*``, ``(f * g)* = f* * g*`` and ``f** = f``.
    """
    if isinstance(term, Compose):
        return replace(term, first=push_dagger(term.first), then=push_dagger(term.then))
    if isinstance(term, Tensor):
        return replace(term, left=push_dagger(term.left), right=push_dagger(term.right))
    if not isinstance(term, Dagger):
        return term
    inner = term.term
    if isinstance(inner, Dagger):
        return push_dagger(inner.term)
    if isinstance(inner, Compose):
        return Compose(push_dagger(Dagger(inner.then, span=term.span)),
                       push_dagger(Dagger(inner.first, span=term.span)), span=term.span)
    if isinstance(inner, Tensor):
        return Tensor(push_dagger(Dagger(inner.left, span=term.span)),
                      push_dagger(Dagger(inner.right, span=term.span)), span=term.span)
    return term


def _show_pair(a, b) -> tuple[str, str]:
    # the empty object reads as 0 circles next to a circle count
    circles = all(x == CIRCLE for x in a + b)
    return tuple("0" if circles and not o else show_object(o) for o in (a, b))


def _annotate(sig: Signature, term: Term) -> Term:
    if isinstance(term, Gen):
        if term.name not in sig.generators:
            raise DslTypeError(f"unknown generator {term.name!r}", term.span)
        dom, cod = sig.generators[term.name]
        return replace(term, dom=dom, cod=cod)
    if isinstance(term, Id):
        for a in term.obj:
            if a != CIRCLE and a not in sig.atoms:
                raise DslTypeError(f"undeclared object {a!r}", term.span)
        return replace(term, dom=term.obj, cod=term.obj)
    if isinstance(term, Compose):
        first, then = _annotate(sig, term.first), _annotate(sig, term.then)
        if first.cod != then.dom:
            cod, dom = _show_pair(first.cod, then.dom)
            raise DslTypeError(f"cannot compose: codomain {cod} of the first factor "
                               f"!= domain {dom} of the second", term.span)
        return replace(term, first=first, then=then, dom=first.dom, cod=then.cod)
    if isinstance(term, Tensor):
        left, right = _annotate(sig, term.left), _annotate(sig, term.right)
        return replace(term, left=left, right=right,
                       dom=left.dom + right.dom, cod=left.cod + right.cod)
    if isinstance(term, Dagger):
        inner = _annotate(sig, term.term)
        return replace(term, term=inner, dom=inner.cod, cod=inner.dom)
    raise TypeError(f"not a term: {term!r}")


def typecheck(sig: Signature, term: Term, pushdown: bool = True) -> Term:
    """Annotate every node with ``(dom, cod)``; optionally push daggers to the leaves."""
    annotated = _annotate(sig, term)
    return _annotate(sig, push_dagger(term)) if pushdown else annotated
