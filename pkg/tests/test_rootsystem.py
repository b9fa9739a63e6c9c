from fractions import Fraction

import pytest

from qschub.errors import BoundExceeded, InadmissibleType
from qschub.rootsystem import LieType, RootSystem, build_root_system

ALL_TYPES = ["A1", "A2", "A3", "A4", "B2", "B3", "B4", "C3", "C4", "D4", "D5", "G2", "F4", "E6", "E7", "E8"]
WEYL_ORDERS = {"A1": 2, "A2": 6, "A3": 24, "B2": 8, "B3": 48, "C3": 48, "D4": 192, "G2": 12, "F4": 1152}


def test_a2_roots():
    rs = RootSystem.of("A2")
    assert set(rs.positive_roots) == {(1, 0), (0, 1), (1, 1)}
    assert rs.theta == (1, 1)


def test_a1_roots():
    rs = RootSystem.of("A1")
    assert rs.positive_roots == ((1,),)
    assert rs.theta == (1,)


def test_b3_theta_and_coroot():
    rs = RootSystem.of("B3")
    assert rs.theta == (1, 2, 2)
    assert rs.theta_coroot == (1, 2, 1)
    assert len(rs.positive_roots) == 9


@pytest.mark.parametrize("t", ALL_TYPES)
def test_cartan_diagonal_and_root_counts(t):
    rs = RootSystem.of(t)
    n = rs.rank
    assert all(rs.pairing(rs.simple_roots[i], rs.simple_roots[i]) == 2 for i in range(n))
    assert len(rs.roots) == 2 * len(rs.positive_roots)
    assert all(rs.is_root(tuple(-x for x in b)) for b in rs.positive_roots)
    # theta is the unique root of maximal height and dominant
    assert all(rs.pairing(a, rs.theta) >= 0 for a in rs.simple_roots)


@pytest.mark.parametrize("t", ALL_TYPES)
def test_coroot_pairs_to_two(t):
    rs = RootSystem.of(t)
    for b in rs.positive_roots:
        assert rs.pairing(rs.coroot_of(b), b) == 2


def test_pairing_examples():
    a2 = RootSystem.of("A2")
    assert a2.pair_rho2(a2.theta_coroot) == 4
    b3 = RootSystem.of("B3")
    assert b3.pairing(b3.theta_coroot, (0, 1, 0)) == 1


def test_coroot_of_examples():
    a2 = RootSystem.of("A2")
    assert a2.coroot_of((1, 1)) == (1, 1)
    b3 = RootSystem.of("B3")
    for a in b3.simple_roots:
        assert b3.coroot_of(a) == a
    with pytest.raises(ValueError):
        a2.coroot_of((2, 1))


def test_pairing_dimension_mismatch():
    with pytest.raises(ValueError):
        RootSystem.of("A2").pairing((1, 0, 0), (1, 0))


@pytest.mark.parametrize("text", ["A0", "B1", "C1", "D2", "E5", "F3", "G3", "Q2", "A"])
def test_inadmissible_types(text):
    with pytest.raises(InadmissibleType):
        LieType.parse(text)


@pytest.mark.parametrize("t,order", sorted(WEYL_ORDERS.items()))
def test_weyl_order_matches_enumeration(t, order):
    rs = RootSystem.of(t)
    W = rs.enumerate_weyl()
    assert len(W) == order == rs.weyl_order()
    assert rs.longest_element().length() == len(rs.positive_roots)
    lengths = [w.length() for w in W]
    assert lengths == sorted(lengths)


def test_low_rank_isomorphic_types():
    c2, d3 = RootSystem.of("C2"), RootSystem.of("D3")
    assert c2.weyl_order() == len(c2.enumerate_weyl()) == 8
    assert d3.weyl_order() == len(d3.enumerate_weyl()) == 24
    assert len(d3.positive_roots) == 6


def test_enumeration_bound():
    with pytest.raises(BoundExceeded):
        RootSystem.of("E8").enumerate_weyl()


def test_a2_longest_is_sigma_theta():
    rs = RootSystem.of("A2")
    w0 = rs.word(1, 2, 1)
    assert w0 == rs.longest_element() == rs.reflection(rs.theta)
    assert rs.word() == rs.identity and rs.identity.length() == 0


def test_b3_sigma_theta_word():
    rs = RootSystem.of("B3")
    assert rs.reflection(rs.theta) == rs.word(2, 3, 2, 1, 2, 3, 2)
    assert rs.reflection(rs.theta).length() == 7


@pytest.mark.parametrize("t", ["A3", "B3", "G2", "C3"])
def test_group_axioms(t):
    rs = RootSystem.of(t)
    W = rs.enumerate_weyl()
    for w in W[::3]:
        assert w * w.inverse() == rs.identity
        assert rs.word(*w.reduced_word()) == w
        assert len(w.reduced_word()) == w.length()


def test_antidominant_conjugate():
    rs = RootSystem.of("A2")
    lam, w = rs.antidominant_conjugate((-1, -1))
    assert lam == (-1, -1) and w == rs.identity
    lam, w = rs.antidominant_conjugate(rs.theta_coroot)
    assert lam == (-1, -1) and w == rs.longest_element()
    # the Weyl orbit of alpha_1^vee meets the antidominant cone only in -theta^vee
    lam, w = rs.antidominant_conjugate((1, 0))
    orbit = {u.act_coroot((1, 0)) for u in rs.enumerate_weyl()}
    anti = [m for m in orbit if rs.is_antidominant(m)]
    assert anti == [lam] == [(-1, -1)]
    assert w.act_coroot((1, 0)) == lam


def test_fundamental_weights():
    for t in ("A2", "B3", "G2", "F4"):
        rs = RootSystem.of(t)
        for i, wi in enumerate(rs.fundamental_weights):
            for j, a in enumerate(rs.simple_roots):
                assert sum(Fraction(x) for x in [rs.pairing(a, wi)]) == (1 if i == j else 0)
        for i, wv in enumerate(rs.fundamental_coweights):
            for j, a in enumerate(rs.simple_roots):
                assert rs.pairing(wv, a) == (1 if i == j else 0)


def test_act_weight_a2():
    rs = RootSystem.of("A2")
    w1 = rs.fundamental_weights[0]
    assert tuple(a - b for a, b in zip(w1, rs.s(1).act_weight(w1))) == (1, 0)


def test_build_alias_is_cached():
    assert build_root_system("B3") is RootSystem.of("B3")


def test_elements_of_different_types_differ():
    a2, b2 = RootSystem.of("A2"), RootSystem.of("B2")
    assert a2.identity != b2.identity
    assert a2.s(1) != b2.s(1)
