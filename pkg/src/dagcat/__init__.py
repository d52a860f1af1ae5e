"""FinHilb, Rel, FinSet and 2Cob behind one morphism language, with law checks."""

__version__ = "0.1.0"
