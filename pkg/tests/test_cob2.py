import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dagcat import cob2
from dagcat.cob2 import Cobordism, CobordismError, Component, InvariantError

seeds = st.integers(0, 2**32 - 1)


def random_pair(seed, max_circles=4):
    rng = np.random.default_rng(seed)
    a, b, c = (int(x) for x in rng.integers(0, max_circles + 1, size=3))
    return (cob2.random_cobordism(rng, a, b, max_circles=max_circles),
            cob2.random_cobordism(rng, b, c, max_circles=max_circles))


def test_identity():
    assert cob2.identity(1).components == (Component((1,), (1,)),)
    assert cob2.identity(0).components == ()
    assert str(cob2.identity(0)) == "()"


def test_gluing_examples():
    m = cob2.compose(cob2.copants(), cob2.pants())
    assert m == Cobordism(2, 2, [Component((1, 2), (1, 2), 0)])
    assert m.euler == -2
    handle = cob2.compose(cob2.pants(), cob2.copants())
    assert handle == Cobordism(1, 1, [Component((1,), (1,), 1)])
    sphere = cob2.compose(cob2.cap(), cob2.cup())
    assert sphere == cob2.closed_surface(0) and sphere.euler == 2


def test_normal_form_printing():
    assert str(cob2.pants()) == "(in={1,2} out={1} g=0)"
    assert repr(cob2.cap()) == "Cobordism(1->0: (in={1} out={} g=0))"


def test_self_gluing_raises_genus():
    # copants then pants twice: each loop through two circles adds a handle
    m = cob2.identity(1)
    for _ in range(3):
        m = cob2.compose(cob2.pants(), cob2.compose(cob2.copants(), m))
    assert m == Cobordism(1, 1, [Component((1,), (1,), 3)])


def test_torus_from_generators():
    torus = cob2.compose(cob2.cap(), cob2.compose(cob2.pants(),
                         cob2.compose(cob2.copants(), cob2.cup())))
    assert torus == cob2.closed_surface(1) and torus.euler == 0


def test_boundary_mismatch():
    with pytest.raises(CobordismError):
        cob2.compose(cob2.pants(), cob2.identity(1))


def test_invalid_port_sets():
    with pytest.raises(CobordismError):
        Cobordism(2, 1, [Component((1,), (1,))])
    with pytest.raises(CobordismError):
        Cobordism(1, 1, [Component((1,), (1,)), Component((1,), ())])
    with pytest.raises(CobordismError):
        Component((1,), (), -1)


def test_impossible_genus_is_internal_error():
    class Broken(Component):
        @property
        def euler(self):
            return 3  # a disk with one boundary circle has chi 1

    bad = Cobordism(0, 1, [Broken((), (1,))])
    with pytest.raises(InvariantError):
        cob2.compose(cob2.cap(), bad)


def test_tensor_examples():
    t = cob2.tensor(cob2.pants(), cob2.identity(1))
    assert (t.dom, t.cod, len(t.components)) == (3, 2, 2)
    assert Component((3,), (2,)) in t.components
    empty = cob2.identity(0)
    assert cob2.tensor(cob2.pants(), empty) == cob2.pants()
    assert cob2.tensor(empty, cob2.pants()) == cob2.pants()


@settings(max_examples=50)
@given(seeds)
def test_tensor_strictly_associative(seed):
    rng = np.random.default_rng(seed)
    m, n, p = (cob2.random_cobordism(rng, *(int(x) for x in rng.integers(0, 3, size=2)))
               for _ in range(3))
    assert cob2.tensor(cob2.tensor(m, n), p) == cob2.tensor(m, cob2.tensor(n, p))


def test_dagger_examples():
    assert cob2.dagger(cob2.pants()) == cob2.copants()
    assert cob2.dagger(cob2.cup()) == cob2.cap()
    for k in range(4):
        assert cob2.dagger(cob2.identity(k)) == cob2.identity(k)


@settings(max_examples=100)
@given(seeds)
def test_dagger_contravariant_and_involutive(seed):
    m, mp = random_pair(seed)
    assert cob2.dagger(cob2.compose(mp, m)) == cob2.compose(cob2.dagger(m), cob2.dagger(mp))
    assert cob2.dagger(cob2.dagger(m)) == m


@settings(max_examples=100)
@given(seeds)
def test_euler_additive(seed):
    m, mp = random_pair(seed)
    assert cob2.compose(mp, m).euler == m.euler + mp.euler


@settings(max_examples=100)
@given(seeds)
def test_identity_laws(seed):
    m, _ = random_pair(seed)
    assert cob2.compose(cob2.identity(m.cod), m) == m
    assert cob2.compose(m, cob2.identity(m.dom)) == m


def test_permutations():
    assert cob2.permutation(3, (1, 2, 3)) == cob2.identity(3)
    assert cob2.compose(cob2.swap(), cob2.swap()) == cob2.identity(2)
    with pytest.raises(CobordismError):
        cob2.permutation(3, (1, 1, 2))


@pytest.mark.parametrize("k", [0, 1, 2, 3])
def test_permutations_compose_as_permutations(k):
    perms = list(itertools.permutations(range(1, k + 1)))
    for sigma, tau in itertools.product(perms, repeat=2):
        composite = cob2.compose(cob2.permutation(k, tau), cob2.permutation(k, sigma))
        tau_sigma = tuple(tau[s - 1] for s in sigma)
        assert composite == cob2.permutation(k, tau_sigma)


def test_is_unitary_examples():
    assert cob2.is_unitary(cob2.permutation(3, (3, 1, 2)))
    assert cob2.is_unitary(cob2.identity(2))
    assert cob2.is_unitary(cob2.identity(0))
    assert not cob2.is_unitary(cob2.pants())
    assert cob2.compose(cob2.copants(), cob2.pants()) != cob2.identity(2)
    assert not cob2.is_unitary(Cobordism(1, 1, [Component((1,), (1,), 1)]))
    # a closed component spoils unitarity too
    assert not cob2.is_unitary(cob2.tensor(cob2.identity(1), cob2.closed_surface(0)))


def test_unitary_iff_permutation_on_all_small_normal_forms():
    for dom, cod in itertools.product(range(3), repeat=2):
        for m in cob2.normal_forms(dom, cod, min_euler=-4, max_closed=1):
            assert cob2.is_unitary(m) == cob2.is_permutation(m), m


def test_random_words_reach_the_requested_codomain():
    rng = np.random.default_rng(4)
    for dom, cod in itertools.product(range(4), repeat=2):
        word = cob2.random_word(rng, dom, cod, depth=5)
        m = cob2.word_cobordism(word, dom)
        assert (m.dom, m.cod) == (dom, cod)
    assert cob2.word_expr([], 3) == "id[3]"


def test_normal_form_enumeration_has_no_duplicates():
    forms = list(cob2.normal_forms(1, 2, min_euler=-4))
    assert len(forms) == len(set(forms))
    assert all(m.euler >= -4 for m in forms)
    assert cob2.copants() in forms


def test_diagonal_search():
    # copants followed by either capped leg is the cylinder, so a
    # projection-equation diagonal does exist in 2Cob
    found = cob2.diagonal_candidates(-4)
    assert found == [cob2.copants()]


def test_tensor_is_not_cartesian():
    cap, handle_cap = cob2.unit_not_terminal()
    assert cap != handle_cap and (cap.dom, cap.cod) == (handle_cap.dom, handle_cap.cod) == (1, 0)
    lhs, rhs = cob2.projection_naturality_failure()
    assert lhs != rhs and lhs.euler == rhs.euler - 2
