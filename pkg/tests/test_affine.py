import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qschub.affine import AffineRoot, AffineWeylElement, AffineWeylGroup, act_affine
from qschub.errors import BoundExceeded
from qschub.rootsystem import RootSystem


def group(t):
    return AffineWeylGroup.of(t)


def neg_theta(rs):
    return tuple(-c for c in rs.theta_coroot)


def test_simple_reflections():
    G = group("A2")
    rs = G.rs
    assert G.s(0) == AffineWeylElement(rs.word(1, 2, 1), neg_theta(rs))
    assert G.s(1) == AffineWeylElement(rs.s(1), (0, 0))
    B = group("B3")
    assert B.s(0) == AffineWeylElement(B.rs.word(2, 3, 2, 1, 2, 3, 2), (-1, -2, -1))
    with pytest.raises(ValueError):
        G.s(3)


@pytest.mark.parametrize("t", ["A2", "B2", "G2", "A3", "C3"])
def test_simple_reflections_are_involutions(t):
    G = group(t)
    for i in range(G.rs.rank + 1):
        assert (G.s(i) * G.s(i)).is_identity()
        assert G.s(i).length() == 1


def test_action_examples():
    G = group("A2")
    rs = G.rs
    a0 = AffineRoot(tuple(-c for c in rs.theta), 1)
    assert G.s(0).act(a0) == AffineRoot(rs.theta, -1) == -a0
    r = AffineRoot((1, 0), 3)
    assert act_affine(G.identity, r) == r
    t = G.translation((2, -1))
    assert t.act(AffineRoot((1, 0), 0)) == AffineRoot((1, 0), -rs.pairing((2, -1), (1, 0)))


def test_action_is_a_group_action():
    G = group("B2")
    rng = random.Random(1)
    els = G.elements_up_to(4)
    roots = [AffineRoot(b, m) for b in G.rs.roots for m in (-1, 0, 2)]
    for _ in range(60):
        x, y = rng.choice(els), rng.choice(els)
        r = rng.choice(roots)
        assert (x * y).act(r) == x.act(y.act(r))


def test_multiply_inverse_and_translations():
    G = group("A2")
    rs = G.rs
    rng = random.Random(7)
    els = G.elements_up_to(6)
    for _ in range(100):
        x = rng.choice(els)
        assert (x * x.inverse()).is_identity()
    assert G.translation((1, 2)) * G.translation((-3, 1)) == G.translation((-2, 3))
    assert AffineWeylElement(rs.word(1, 2, 1), (0, 0)) * G.translation(neg_theta(rs)) == G.s(0)


def test_lengths_and_words():
    G = group("A2")
    rs = G.rs
    assert G.translation(neg_theta(rs)).length() == 4
    x = AffineWeylElement(rs.word(1, 2), neg_theta(rs))
    assert x.length() == 2 and x.reduced_word() == (2, 0)
    assert G.identity.length() == 0 and G.identity.reduced_word() == ()


@pytest.mark.parametrize("t", ["A2", "B2", "G2"])
def test_length_formula_matches_descent_count(t):
    G = group(t)
    for x in G.elements_up_to(7):
        w = x.reduced_word()
        assert len(w) == x.length()
        assert G.from_word(w) == x
        assert G.is_reduced(w)


@pytest.mark.parametrize("t", ["A2", "B2", "A3"])
def test_translation_length_is_minus_two_rho(t):
    rs = RootSystem.of(t)
    G = group(t)
    for lam in [neg_theta(rs), tuple(-2 * c for c in rs.theta_coroot), (-1,) + (0,) * (rs.rank - 1)]:
        if rs.is_antidominant(lam):
            assert G.translation(lam).length() == -rs.pair_rho2(lam)


def test_a2_length_counts():
    G = group("A2")
    counts = {}
    for x in G.elements_up_to(6):
        counts[x.length()] = counts.get(x.length(), 0) + 1
    assert [counts[k] for k in range(7)] == [1, 3, 6, 9, 12, 15, 18]


def test_min_coset_rep_examples():
    G = group("A2")
    rs = G.rs
    assert G.translation(neg_theta(rs)).is_min_coset_rep()
    assert G.s(0).is_min_coset_rep()
    assert not G.s(1).is_min_coset_rep()
    assert G.identity.is_min_coset_rep()


@pytest.mark.parametrize("t", ["A2", "B2", "G2"])
def test_min_coset_reps_are_coset_minima(t):
    G = group(t)
    W = G.rs.enumerate_weyl()
    for x in G.elements_up_to(6):
        m = G.coset_min(x)
        assert m.is_min_coset_rep()
        assert m.coset_key() == x.coset_key()
        for w in W:
            y = x * AffineWeylElement(w, (0,) * G.rs.rank)
            assert y.coset_key() == x.coset_key()
            assert m.length() <= y.length()
        assert x.is_min_coset_rep() == (x == m)


def test_coset_min_of_translation_times_w():
    G = group("B2")
    lam = (-2, -1)
    for w in G.rs.enumerate_weyl():
        x = G.translation(lam) * AffineWeylElement(w, (0, 0))
        assert G.coset_min(x) == G.coset_min(G.translation(lam))
        assert G.coset_translation(x) == G.translation(lam)


def test_b3_coset_min_from_table():
    G = group("B3")
    rs = G.rs
    u, v = rs.word(1, 2, 3, 1, 2), rs.word(3, 1, 2, 3, 1, 2)
    key = tuple(a + b for a, b in zip(u.act_coroot(neg_theta(rs)), v.act_coroot(neg_theta(rs))))
    m = G.coset_min_of_key(key)
    assert m.reduced_word() == (0, 2, 3, 2, 0)
    assert m == AffineWeylElement(rs.word(1, 2, 3, 2, 1), (-2, -2, -1))


def test_coset_key_regular():
    G = group("A2")
    rs = G.rs
    lam = (-2, -3)
    assert rs.is_antidominant(lam)
    for w in rs.enumerate_weyl():
        assert AffineWeylElement(w, lam).coset_key() == w.act_coroot(lam)


def test_bruhat_examples():
    G = group("A2")
    rs = G.rs
    assert G.bruhat_leq(G.s(0), G.from_word([2, 0]))
    assert G.bruhat_leq(G.translation(neg_theta(rs)), G.translation((-2, -2)))
    assert not G.bruhat_leq(G.from_word([1, 2, 0]), G.from_word([0, 2, 1, 0, 1]))


@pytest.mark.parametrize("t", ["A2", "B2"])
def test_bruhat_matches_subword_cone(t):
    G = group(t)
    els = G.elements_up_to(5)
    rng = random.Random(3)
    for x in rng.sample(els, 25):
        cone = G.lower_cone(x)
        for y in els:
            assert G.bruhat_leq(y, x) == (y in cone)


def test_lower_cone_bound():
    G = group("A2")
    with pytest.raises(BoundExceeded):
        G.lower_cone(G.translation((-5, -5)), bound=10)


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(0, 2), max_size=10), st.lists(st.integers(0, 2), max_size=10))
def test_length_subadditive(w1, w2):
    G = group("A2")
    x, y = G.from_word(w1), G.from_word(w2)
    assert (x * y).length() <= x.length() + y.length()
    assert (x * y).length() % 2 == (len(w1) + len(w2)) % 2
