import random
from fractions import Fraction

import pytest

from qschub.affine import AffineWeylElement
from qschub.coefficients import nvars_of
from qschub.quantum import (
    QuantumSum,
    TranslationChoice,
    choose_translations,
    equivariant_qconstants,
    equivariant_quantum_chevalley,
    fallback_translation,
    gamma_sets,
    gromov_witten,
    quantum_product,
    regular_seed,
)
from qschub.rootsystem import RootSystem
from qschub.selftest import alternative_choice, lin


def one(rs):
    from qschub.symbolic import Polynomial
    return Polynomial.constant(nvars_of(rs), 1)


def test_gamma_sets():
    rs = RootSystem.of("A2")
    g1, g2 = gamma_sets(rs.identity)
    assert set(g1) == {(1, 0), (0, 1)} and g2 == ()
    g1, g2 = gamma_sets(rs.longest_element())
    assert g1 == () and rs.theta in g2


def test_chevalley_examples():
    rs = RootSystem.of("A2")
    s1 = rs.s(1)
    assert equivariant_quantum_chevalley(1, rs.identity) == {(s1, (0, 0)): one(rs)}
    got = equivariant_quantum_chevalley(1, s1)
    assert got == {(s1, (0, 0)): lin(rs, 1, 0), (rs.word(2, 1), (0, 0)): one(rs), (rs.identity, (1, 0)): one(rs)}
    assert str(got.at_zero()) == "sigma[2 1] + q1*sigma[id]"


def test_choose_translations_examples():
    a2 = RootSystem.of("A2")
    ch = choose_translations(a2.word(1, 2), a2.word(1, 2, 1))
    assert ch.eta == ch.kappa == (-1, -1)
    b3 = RootSystem.of("B3")
    ch = choose_translations(b3.word(1, 2, 3, 1, 2), b3.word(3, 1, 2, 3, 1, 2))
    assert ch.eta == ch.kappa == (-1, -2, -1)
    ch = choose_translations(a2.identity, a2.identity)
    assert ch.eta == ch.kappa == (0, 0)
    assert choose_translations(a2.word(1, 2), a2.word(1, 2, 1), strategy="uniform").eta == (-1, -1)


@pytest.mark.parametrize("t", ["A2", "B2", "G2", "A3", "B3", "C3", "D4", "F4", "E6"])
def test_minimal_translations_are_valid(t):
    rs = RootSystem.of(t)
    seed = regular_seed(rs)
    assert all(rs.pairing(seed, a) < 0 for a in rs.simple_roots)
    u = rs.longest_element()
    ch = choose_translations(u, rs.s(1))
    assert AffineWeylElement(u, ch.eta).is_min_coset_rep()
    assert AffineWeylElement(rs.s(1), ch.kappa).is_min_coset_rep()


def test_fallback_translation_is_valid():
    rs = RootSystem.of("A2")
    A = fallback_translation(rs)
    assert A == (-72, -72)
    for w in rs.enumerate_weyl():
        assert AffineWeylElement(w, A).is_min_coset_rep()


def test_a2_equivariant_example():
    rs = RootSystem.of("A2")
    q = equivariant_qconstants(rs.word(1, 2), rs.word(1, 2, 1))
    assert q[(rs.s(2), (1, 1))] == one(rs)
    assert q[(rs.s(1), (1, 1))] == 0


def test_gromov_witten_examples():
    a2 = RootSystem.of("A2")
    u = a2.word(1, 2, 1)
    assert gromov_witten(u, u, a2.word(1, 2), (1, 1)) == 1
    assert gromov_witten(u, u, a2.word(1, 2), (1, 0)) == 0
    assert gromov_witten(u, u, a2.word(1, 2), (2, 2)) == 0
    b3 = RootSystem.of("B3")
    assert gromov_witten(b3.word(1, 2, 3, 1, 2), b3.word(3, 1, 2, 3, 1, 2), b3.word(1, 2, 3, 2, 1), (0, 2, 1)) == 1


def test_headline_products():
    a2 = RootSystem.of("A2")
    assert quantum_product(a2.word(1, 2), a2.word(1, 2, 1)) == {(a2.s(2), (1, 1)): one(a2)}
    b3 = RootSystem.of("B3")
    got = quantum_product(b3.word(1, 2, 3, 1, 2), b3.word(3, 1, 2, 3, 1, 2))
    assert str(got) == "q2^2*q3*sigma[1 2 3 2 1] + q1*q2^2*q3*sigma[2 3 2] + q1*q2^2*q3*sigma[3 1 2]"


@pytest.mark.parametrize("t", ["A2", "B2"])
def test_unit(t):
    rs = RootSystem.of(t)
    for v in rs.enumerate_weyl():
        assert quantum_product(rs.identity, v) == {(v, (0,) * rs.rank): one(rs)}


def _mul_sums(a: QuantumSum, b_of, rs) -> dict:
    """Expand sum_k c_k q^lam_k (sigma^{w_k} * Y) given b_of(w) = sigma^w * Y."""
    out = {}
    for (w, lam), c in a.terms.items():
        for (w2, mu), c2 in b_of(w).terms.items():
            key = (w2, tuple(x + y for x, y in zip(lam, mu)))
            out[key] = out[key] + c * c2 if key in out else c * c2
    return {k: v for k, v in out.items() if not v.is_zero()}


@pytest.mark.parametrize("t", ["A2", "B2"])
def test_chevalley_associativity(t):
    rs = RootSystem.of(t)
    W = rs.enumerate_weyl()
    rng = random.Random(11)
    for _ in range(6):
        i = rng.randint(1, rs.rank)
        u, v = rng.choice(W), rng.choice(W)
        left = _mul_sums(equivariant_quantum_chevalley(i, u), lambda w: equivariant_qconstants(w, v), rs)
        right = _mul_sums(equivariant_qconstants(u, v), lambda w: equivariant_quantum_chevalley(i, w), rs)
        assert left == right, (i, u, v)


@pytest.mark.parametrize("t", ["A2", "B2"])
def test_choice_invariance(t):
    rs = RootSystem.of(t)
    W = rs.enumerate_weyl()
    rng = random.Random(2)
    for _ in range(6):
        u, v = rng.choice(W), rng.choice(W)
        base = equivariant_qconstants(u, v)
        assert equivariant_qconstants(u, v, strategy="uniform") == base
        assert equivariant_qconstants(u, v, choice=alternative_choice(u, v)) == base


def test_non_equivariant_coefficients_are_nonnegative_integers():
    rs = RootSystem.of("B2")
    for u in rs.enumerate_weyl():
        for v in rs.enumerate_weyl():
            for (_, lam), c in quantum_product(u, v).terms.items():
                val = Fraction(c.at_zero())
                assert val.denominator == 1 and val > 0
                assert all(x >= 0 for x in lam)


def test_json_round_trip():
    rs = RootSystem.of("A2")
    q = equivariant_qconstants(rs.word(1, 2), rs.word(2, 1))
    back = QuantumSum.from_json(q.to_json())
    assert back == q and back.choice == q.choice
    assert back.to_json() == q.to_json()
    ch = TranslationChoice((-1, -1), (0, 0), (-1, -1))
    assert TranslationChoice.from_json(ch.to_json()) == ch
