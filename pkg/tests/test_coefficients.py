import pytest

from qschub.affine import AffineWeylElement, AffineWeylGroup
from qschub.coefficients import (
    c_all,
    c_bracket,
    c_coeff,
    c_naive,
    c_naive_row,
    d_bracket,
    d_coeff,
    d_diag,
    d_naive,
    d_naive_row,
    d_row,
    d_simple,
    d_via_c,
    nvars_of,
    positive_root_product,
    verify_inverse,
)
from qschub.errors import BoundExceeded
from qschub.rootsystem import RootSystem
from qschub.selftest import inv, lin, theta
from qschub.symbolic import LinearForm, Polynomial, RationalForm


def A2():
    return AffineWeylGroup.of("A2")


def test_a2_c_values():
    G = A2()
    rs = G.rs
    s0 = G.s(0)
    x = G.from_word([2, 0])
    assert c_coeff(s0, s0) == inv(rs, -1, rs.theta)
    assert c_coeff(x, s0) == inv(rs, 1, (0, 1), rs.theta)
    assert c_coeff(x, x) == inv(rs, -1, (1, 0), (0, 1))


def test_a2_d_values():
    G = A2()
    rs = G.rs
    th, a1, a2 = theta(rs), lin(rs, 1, 0), lin(rs, 0, 1)
    m = [0, 2, 1, 2, 0]
    assert d_bracket(G.from_word([2, 1, 0]), m) == -(a1 * th * th)
    assert d_bracket(G.from_word([1, 2, 0]), m) == -(a2 * th * th)
    assert d_coeff(G.identity, m) == Polynomial.constant(nvars_of(rs), 1)


def test_b3_values():
    G = AffineWeylGroup.of("B3")
    rs = G.rs
    x = G.from_word([3, 2, 0])
    assert c_bracket(x, (1, 2, 1)) == inv(rs, -2, (0, 1, 0), rs.theta, (0, 1, 2))
    assert c_bracket(x, (1, 1, 1)) == inv(rs, 1, (0, 1, 0), (0, 0, 1), (1, 1, 2))
    a2, a3, th = lin(rs, 0, 1, 0), lin(rs, 0, 0, 1), theta(rs)
    z = G.from_word([1, 2, 3, 2, 0])
    assert d_bracket(z, [0, 2, 3, 2, 1, 2, 3, 2, 0]) == -(a2 * th * th * (a2 + a3) * (a2 + a3 * 2))


def test_coset_without_members_is_zero():
    G = A2()
    assert c_bracket(G.from_word([2, 0]), (5, 5)).is_zero()


@pytest.mark.parametrize("t", ["A2", "B2", "G2"])
def test_diagonal_c_is_inverse_of_diagonal_d(t):
    G = AffineWeylGroup.of(t)
    for x in G.elements_up_to(5):
        c = c_coeff(x, x, evaluated=False)
        d = d_coeff(x, x)
        assert c * RationalForm(d) == RationalForm.one(nvars_of(G.rs))


@pytest.mark.parametrize("t", ["A2", "B2"])
def test_c_and_d_do_not_depend_on_the_reduced_word(t):
    G = AffineWeylGroup.of(t)
    for x in G.elements_up_to(5):
        words = _all_reduced_words(G, x)
        base = c_all(x, evaluated=False).c_values
        drow = d_row(x.reduced_word(), G.rs, evaluated=False)
        for w in words:
            assert c_all(x, evaluated=False, word=w).c_values == base
            assert d_row(w, G.rs, evaluated=False) == drow


def _all_reduced_words(G, x):
    if x.is_identity():
        return [()]
    out = []
    for i in range(G.rs.rank + 1):
        if x.is_descent(i):
            out += [w + (i,) for w in _all_reduced_words(G, x * G.s(i))]
    return out


def test_naive_agrees_with_dp_below_example_element():
    G = A2()
    rs = G.rs
    word = (0, 2, 1, 2, 0)
    x = G.from_word(word)
    cone = G.lower_cone(x)
    crow = c_all(x, evaluated=False).c_values
    drow = d_row(word, rs, evaluated=False)
    for y in cone:
        assert c_naive(word, y) == crow.get(y, RationalForm.zero(nvars_of(rs)))
        assert d_naive(y, word) == drow.get(y, Polynomial(nvars_of(rs)))
    outside = next(y for y in G.elements_up_to(4) if y not in cone)
    assert c_naive(word, outside).is_zero()
    assert d_naive(G.from_word([2, 0]), word) == d_coeff(G.from_word([2, 0]), word)


@pytest.mark.parametrize("t,length", [("A2", 8), ("B2", 8), ("G2", 7), ("A3", 6)])
def test_naive_rows_agree_with_dp(t, length):
    G = AffineWeylGroup.of(t)
    x = max(G.elements_up_to(length), key=lambda e: (e.length(), e.reduced_word()))
    word = x.reduced_word()
    for ev in (False, True):
        assert c_naive_row(word, G.rs, ev) == c_all(x, ev).c_values
        assert d_naive_row(word, G.rs, ev) == d_row(word, G.rs, ev)


def test_d_coeff_prefix_pruning_matches_row():
    G = AffineWeylGroup.of("B2")
    for x in G.elements_up_to(6)[-10:]:
        row = d_row(x.reduced_word(), G.rs, evaluated=False)
        for y in G.lower_cone(x):
            assert d_coeff(y, x) == row.get(y, Polynomial(nvars_of(G.rs)))


def test_naive_limit():
    G = A2()
    with pytest.raises(BoundExceeded):
        d_naive(G.identity, (0, 1, 2) * 5)


def test_closed_forms():
    rs = RootSystem.of("A2")
    assert d_diag(rs.longest_element()) == positive_root_product(rs)
    assert d_simple(1, rs.identity).is_zero()
    assert d_simple(1, rs.s(1)) == LinearForm((1, 0, 0))


@pytest.mark.parametrize("t", ["A2", "B2", "G2"])
def test_d_via_c_matches_dp(t):
    rs = RootSystem.of(t)
    W = rs.enumerate_weyl()
    zero = (0,) * rs.rank
    for v in W:
        for u in W:
            want = d_coeff(AffineWeylElement(v, zero), AffineWeylElement(u, zero))
            assert d_via_c(v, u) == want


def test_inverse_small():
    rep = verify_inverse("A2", 4)
    assert rep.ok and rep.checked > 0


def test_c_bound():
    G = A2()
    with pytest.raises(BoundExceeded):
        c_all(G.translation((-4, -4)), bound=8)
