import itertools

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from dagcat import finset, rel, rel_tables
from dagcat.instances import atoms
from dagcat.rel import BoolRelation, SizeError


def by_triples(s, r):
    """Oracle: (x, z) related iff some y has x R y and y S z."""
    return {(x, z) for (x, y) in r.pairs() for (y2, z) in s.pairs() if y == y2}


def test_compose_example():
    # elements 1, 2 stored at indices 0, 1
    r = BoolRelation.from_pairs(2, 2, [(0, 0), (0, 1), (1, 1)])
    s = BoolRelation.from_pairs(2, 2, [(0, 1), (1, 0)])
    assert rel.compose(s, r).pairs() == {(0, 0), (0, 1), (1, 0)}
    assert rel.compose(s, r).pairs() == by_triples(s, r)


def test_compose_identity():
    r = BoolRelation.from_pairs(3, 2, [(0, 1), (2, 0)])
    assert rel.compose(rel.identity(2), r) == r
    assert rel.compose(r, rel.identity(3)) == r


def test_compose_size_mismatch():
    with pytest.raises(SizeError):
        rel.compose(rel.identity(2), rel.identity(3))


@given(st.integers(0, 2**32 - 1))
def test_compose_matches_triple_enumeration(seed):
    rng = np.random.default_rng(seed)
    a, b, c = (int(x) for x in rng.integers(0, 5, size=3))
    r, s = rel.random_relation(rng, a, b), rel.random_relation(rng, b, c)
    assert rel.compose(s, r).pairs() == by_triples(s, r)


def test_dagger_examples():
    assert rel.dagger(BoolRelation.from_pairs(2, 2, [(0, 1)])).pairs() == {(1, 0)}
    empty = BoolRelation(3, 2)
    assert rel.dagger(empty) == BoolRelation(2, 3)


def test_dagger_involution_all_512_relations():
    hom = list(rel.all_relations(3, 3))
    assert len(hom) == 512 and len(set(hom)) == 512
    assert all(rel.dagger(rel.dagger(r)) == r for r in hom)


def test_tensor_examples():
    assert rel.tensor(rel.identity(2), rel.identity(2)) == rel.identity(4)
    full = BoolRelation(2, 2, np.ones((2, 2)))
    assert rel.tensor(full, BoolRelation(2, 2)) == BoolRelation(4, 4)


def test_tensor_pair_indexing():
    r = BoolRelation.from_pairs(2, 3, [(1, 2)])
    s = BoolRelation.from_pairs(2, 2, [(0, 1)])
    # (1, 0) -> (2, 1) with pair (a, b) at index a * size_b + b
    assert rel.tensor(r, s).pairs() == {(1 * 2 + 0, 2 * 2 + 1)}


def test_interchange_exhaustive_on_2x2():
    hom = list(rel.all_relations(2, 2))
    tensors = {(f, g): rel.tensor(f, g) for f in hom for g in hom}
    composites = {(f2, f1): rel.compose(f2, f1) for f1 in hom for f2 in hom}
    checked = 0
    for f1, f2 in itertools.product(hom, repeat=2):
        for g1, g2 in itertools.product(hom, repeat=2):
            lhs = rel.compose(tensors[f2, g2], tensors[f1, g1])
            assert lhs == rel.tensor(composites[f2, f1], composites[g2, g1])
            checked += 1
    assert checked == 16 ** 4


def test_associativity_exhaustive_size_2_by_loops():
    objs = range(3)
    homs = {(a, b): list(rel.all_relations(a, b)) for a in objs for b in objs}
    for a, b, c, d in itertools.product(objs, repeat=4):
        for f in homs[a, b]:
            for g in homs[b, c]:
                gf = rel.compose(g, f)
                for h in homs[c, d]:
                    assert rel.compose(h, gf) == rel.compose(rel.compose(h, g), f)


def test_table_laws_exhaustive_size_3():
    tables = rel_tables.Tables(3)
    assert tables.calls == 349_691
    cat = rel_tables.check_category_exhaustive(tables)
    dag = rel_tables.check_dagger_exhaustive(tables)
    assert cat.passed and cat.samples > 1.8e8
    assert dag.passed


def test_table_numbering_matches_enumeration():
    for a, b in itertools.product(range(3), repeat=2):
        for i, r in enumerate(rel.all_relations(a, b)):
            assert rel_tables.relation_index(r) == i
            assert rel_tables.relation_at(a, b, i) == r


def test_table_checks_catch_faults():
    def swapped(s, r):
        return rel.compose(r, s) if r.src_size == s.dst_size else rel.compose(s, r)

    assert not rel_tables.check_category_exhaustive(rel_tables.Tables(2, compose=swapped)).passed
    assert not rel_tables.check_dagger_exhaustive(rel_tables.Tables(2, dagger=lambda r: r)).passed

    def row_flip(r):
        return BoolRelation(r.dst_size, r.src_size, r.matrix.T[::-1].copy())

    report = rel_tables.check_dagger_exhaustive(rel_tables.Tables(2, dagger=row_flip))
    assert report.status == "FAIL" and report.counterexample is not None


def test_functions_embed_functorially():
    for n in range(4):
        assert rel.from_function(list(range(n)), n) == rel.identity(n)
    for a, b, c in itertools.product(range(4), repeat=3):
        sa, sb, sc = atoms(a), atoms(b), atoms(c)
        for f in finset.all_functions(sa, sb):
            ft = [int(f(x)[1:]) for x in sa]
            rf = rel.from_function(ft, b)
            assert rel.is_function(rf)
            for g in finset.all_functions(sb, sc):
                gf = finset.compose(g, f)
                gft = [int(g(y)[1:]) for y in sb]
                expected = rel.from_function([int(gf(x)[1:]) for x in sa], c)
                assert rel.compose(rel.from_function(gft, c), rf) == expected


def test_every_relation_has_a_dagger():
    # hom(1, 0) is empty in FinSet but not in Rel
    assert len(list(rel.all_relations(0, 1))) == len(list(rel.all_relations(1, 0))) == 1
    assert not rel.is_function(BoolRelation(1, 0))


def test_constructor_validation():
    with pytest.raises(SizeError):
        BoolRelation(2, 2, np.ones((3, 2)))
    with pytest.raises(SizeError):
        BoolRelation(-1, 2)
    assert BoolRelation(0, 3).matrix.shape == (3, 0)
    r = rel.identity(2)
    with pytest.raises(ValueError):
        r.matrix[0, 1] = True
