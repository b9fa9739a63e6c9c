"""Acceptance suite: worked examples, identities and oracle comparisons.

``run(profile)`` executes every criterion and reports one line each.  The
``quick`` profile samples the property suites; ``full`` runs them
exhaustively and adds A3 to the Chevalley oracle.
"""

from __future__ import annotations

import random
import sys
import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .affine import AffineWeylElement, AffineWeylGroup
from .coefficients import (
    c_all,
    c_bracket,
    c_coeff,
    c_naive_row,
    d_bracket,
    d_naive_row,
    d_row,
    nvars_of,
    verify_inverse,
)
from .oracles import ClassicalOracle
from .pontryagin import (
    chevalley_pontryagin_check,
    coset_pair_sums,
    pontryagin_constants,
    translation_product_check,
)
from .quantum import (
    TranslationChoice,
    choose_translations,
    classical_constants,
    equivariant_qconstants,
    equivariant_quantum_chevalley,
    gromov_witten,
    quantum_product,
    regular_seed,
)
from .rootsystem import RootSystem
from .symbolic import LinearForm, Polynomial, RationalForm, common_denominator, numerator_over

PROFILES = ("quick", "full")


@dataclass
class CriterionResult:
    number: int
    title: str
    ok: bool
    detail: str
    seconds: float
    limit: float

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        return (f"{status} criterion {self.number}: {self.title} "
                f"[{self.seconds:.2f}s / limit {self.limit:.0f}s] {self.detail}")


class _Checks:
    def __init__(self):
        self.failures: list[str] = []
        self.errata: list[str] = []
        self.count = 0

    def expect(self, cond: bool, label: str) -> None:
        self.count += 1
        if not cond:
            self.failures.append(label)

    def detail(self) -> str:
        if not self.failures:
            note = f" ({len(self.errata)} tabulated values corrected: {', '.join(self.errata)})" if self.errata else ""
            return f"{self.count} checks{note}"
        shown = "; ".join(self.failures[:5])
        return f"{len(self.failures)}/{self.count} failed: {shown}"


# fixtures helpers

def lin(rs: RootSystem, *coeffs) -> Polynomial:
    """sum c_i alpha_i as a polynomial (no delta)."""
    return LinearForm(list(coeffs) + [0]).to_polynomial()


def theta(rs: RootSystem) -> Polynomial:
    return lin(rs, *rs.theta)


def inv(rs: RootSystem, scalar, *forms) -> RationalForm:
    """scalar / prod(forms) for root-coordinate tuples."""
    return RationalForm.inverse_of([LinearForm(list(f) + [0]) for f in forms], nvars_of(rs), scalar)


def one(rs: RootSystem) -> Polynomial:
    return Polynomial.constant(nvars_of(rs), 1)


# criterion 1

def criterion_a2_example(profile: str) -> _Checks:
    ck = _Checks()
    rs = RootSystem.of("A2")
    G = AffineWeylGroup.of(rs)
    th = theta(rs)
    a1, a2 = lin(rs, 1, 0), lin(rs, 0, 1)
    u, v = rs.word(1, 2), rs.word(1, 2, 1)
    got = quantum_product(u, v)
    ck.expect(got == {(rs.word(2), (1, 1)): one(rs)}, f"product {got}")

    s0 = G.s(0)
    ck.expect(c_coeff(s0, s0) == inv(rs, -1, rs.theta), "c'_{s0,s0}")
    x = G.from_word([2, 0])
    ck.expect(c_coeff(x, s0) == inv(rs, 1, (0, 1), rs.theta), "c'_{s2s0,s0}")
    ck.expect(c_coeff(x, x) == inv(rs, -1, (1, 0), (0, 1)), "c'_{s2s0,s2s0}")
    z1, z2 = G.from_word([2, 1, 0]), G.from_word([1, 2, 0])
    ck.expect(d_bracket(z1, [0, 2, 1, 2, 0]) == -(a1 * th * th), "d_{s2s1s0,[s0s2s1s2s0]}")
    ck.expect(d_bracket(z1, [0, 2, 1, 0, 1]) == -(a1 * a1 * th), "d_{s2s1s0,[s0s2s1s0s1]}")
    ck.expect(d_bracket(z2, [0, 2, 1, 2, 0]) == -(a2 * th * th), "d_{s1s2s0,[s0s2s1s2s0]}")
    ck.expect(d_bracket(z2, [0, 2, 1, 0, 1]).is_zero(), "d_{s1s2s0,[s0s2s1s0s1]}")

    neg = tuple(-c for c in rs.theta_coroot)
    ck.expect(AffineWeylElement(u, neg) == x, "u t_{-theta} = s2s0")
    y = AffineWeylElement(v, neg)
    ck.expect(y == s0, "v t_{-theta} = s0")
    b = pontryagin_constants(x, y)
    ck.expect(b[z1] == 0, f"C1 = {b[z1]}")
    ck.expect(b[z2] == one(rs), f"C2 = {b[z2]}")
    return ck


# criterion 2

def criterion_a2_longest_example(profile: str) -> _Checks:
    ck = _Checks()
    rs = RootSystem.of("A2")
    G = AffineWeylGroup.of(rs)
    u = rs.word(1, 2, 1)
    ck.expect(gromov_witten(u, u, rs.word(1, 2), rs.theta_coroot) == 1, "N^{s1s2,theta}")
    ck.expect(gromov_witten(u, u, rs.word(2, 1), rs.theta_coroot) == 1, "N^{s2s1,theta}")
    s0 = G.s(0)
    ck.expect(c_bracket(s0, rs.theta_coroot) == inv(rs, -1, rs.theta), "c_{s0,[s0]} = -1/theta")
    z = AffineWeylElement(rs.word(1, 2), tuple(-c for c in rs.theta_coroot))
    m = G.coset_min_of_key(tuple(2 * c for c in rs.theta_coroot))
    th = theta(rs)
    ck.expect(d_bracket(z, m) == th * th, "d_{z,[t_{2 theta}]} = theta^2")
    got = quantum_product(u, u)
    want = {(rs.word(1, 2), (1, 1)): one(rs), (rs.word(2, 1), (1, 1)): one(rs)}
    ck.expect(got == want, f"product {got}")
    return ck


# criterion 3

B3_U = (1, 2, 3, 1, 2)
B3_V = (3, 1, 2, 3, 1, 2)


def b3_fixtures(rs: RootSystem) -> dict:
    a = [None] + [lin(rs, *(1 if k == j else 0 for k in range(3))) for j in range(3)]
    a1, a2, a3 = a[1], a[2], a[3]
    th = theta(rs)
    c = {
        ("x", (1, 2, 1)): inv(rs, -2, (0, 1, 0), rs.theta, (0, 1, 2)),
        ("x", (1, 1, 1)): inv(rs, 1, (0, 1, 0), (0, 0, 1), (1, 1, 2)),
        ("x", (1, 1, 0)): inv(rs, -1, (0, 0, 1), (0, 1, 2), (1, 1, 0)),
        ("y", (1, 2, 1)): inv(rs, 1, (0, 1, 0), rs.theta),
        ("y", (1, 1, 1)): inv(rs, -1, (0, 1, 0), (1, 1, 2)),
    }
    p12 = a1 + a2
    p123 = a1 + a2 + a3
    p1223 = a1 + a2 + a3 * 2
    d = {
        (1, 2, 3, 2, 0): {
            (2, 4, 2): -(a2 * th * th * (a2 + a3) * (a2 + a3 * 2)),
            (2, 3, 2): 0,
            (2, 2, 2): a2 * a3 * (a2 + a3 * 2) * p1223 * p1223,
            (2, 3, 1): 0,
            (2, 2, 1): 0,
        },
        (2, 3, 1, 2, 0): {
            (2, 4, 2): -(th ** 3 * (a2 + a3) * p123 * 2),
            (2, 3, 2): -(th * (a2 + a3) * p123 * p1223 * p1223),
            (2, 2, 2): -(a3 * p1223 * p1223 * (a1 * a1 * 2 + a1 * a2 * 2 + a2 * a2 + a1 * a3 * 6
                                                + a2 * a3 * 4 + a3 * a3 * 4)),
            (2, 3, 1): -(a2 * th * p12 * p12 * p123),
            (2, 2, 1): 0,
        },
        (0, 2, 3, 2, 0): {
            (2, 4, 2): -(th ** 3 * (a1 * a1 + a1 * a2 * 3 + a2 * a2 * 3 + a1 * a3 * 3 + a2 * a3 * 6
                                    + a3 * a3 * 2)),
            (2, 3, 2): -(th * th * p123 * p1223 * p1223),
            (2, 2, 2): -(p1223 * p1223 * (a1 * a1 + a1 * a2 * 2 + a1 * a3 * 3 + a2 * a3 + a3 * a3 * 2)),
            (2, 3, 1): -(th * th * p12 * p12 * p123),
            (2, 2, 1): -(a1 * th * p12 * p123 * p1223),
        },
    }
    return {"c": c, "d": d}


def b3_errata(rs: RootSystem) -> dict:
    """Corrections for two tabulated d-values of the B3 example.

    The tabulated d_{s2s3s1s2s0,[t_{theta + v(-theta)}]} carries (a2 + a3) where
    (a2 + 2 a3) belongs, and the tabulated d_{s0s2s3s2s0,[t_{v(-2 theta)}]} has the
    square of (a1 + a2 + 2 a3) where the cube belongs (degree 4, not 5).  With the
    tabulated values the coefficient sums do not reduce to 1.
    """
    a1, a2, a3 = lin(rs, 1, 0, 0), lin(rs, 0, 1, 0), lin(rs, 0, 0, 1)
    th = theta(rs)
    p123 = a1 + a2 + a3
    p1223 = a1 + a2 + a3 * 2
    return {
        ((2, 3, 1, 2, 0), (2, 3, 2)): -(th * (a2 + a3 * 2) * p123 * p1223 * p1223),
        ((0, 2, 3, 2, 0), (2, 2, 2)): -(p1223 ** 3 * (a1 * a1 + a1 * a2 * 2 + a1 * a3 * 3 + a2 * a3 + a3 * a3 * 2)),
    }


def _b_from_row(grouped: dict, row: dict):
    """sum over keys of (sum c c) * d for the given d-values, as a RationalForm."""
    lcd = common_denominator(grouped.values())
    nv = next(iter(grouped.values())).nvars
    num = Polynomial(nv)
    for key, d in row.items():
        if key in grouped and d != 0:
            num = num + numerator_over(grouped[key], lcd) * d
    return RationalForm(num, lcd)


def criterion_b3_example(profile: str) -> _Checks:
    ck = _Checks()
    rs = RootSystem.of("B3")
    G = AffineWeylGroup.of(rs)
    u, v = rs.word(*B3_U), rs.word(*B3_V)
    neg = tuple(-c for c in rs.theta_coroot)
    choice = choose_translations(u, v)
    ck.expect(choice.eta == neg and choice.kappa == neg, f"translation choice {choice}")
    x, y = AffineWeylElement(u, neg), AffineWeylElement(v, neg)
    ck.expect(x.reduced_word() == (3, 2, 0), f"x = {x!r}")
    ck.expect(y.reduced_word() == (2, 0), f"y = {y!r}")
    fx = b3_fixtures(rs)
    for (which, key), want in fx["c"].items():
        got = c_bracket(x if which == "x" else y, key)
        ck.expect(got == want, f"c_{which},{key} = {got}")
    # the identity coset is present too; its terms meet no z of length 5
    ck.expect(set(c_all(x).by_coset) == {(0, 0, 0), (1, 2, 1), (1, 1, 1), (1, 1, 0)}, "cosets of x")
    ck.expect(set(c_all(y).by_coset) == {(0, 0, 0), (1, 2, 1), (1, 1, 1)}, "cosets of y")

    grouped = coset_pair_sums(x, y)
    errata = b3_errata(rs)
    for zword, row in fx["d"].items():
        z = G.from_word(zword)
        computed = {}
        for key, listed in row.items():
            m = G.coset_min_of_key(key)
            got = d_bracket(z, m)
            computed[key] = got
            if got == listed:
                ck.expect(True, "")
                continue
            fix = errata.get((zword, key))
            label = f"d_{{{zword},{key}}} = {got}"
            if fix is None or got != fix:
                ck.expect(False, label)
                continue
            # an erratum stands only if the tabulated value is refuted independently
            deg = listed.homogeneous_degree() if isinstance(listed, Polynomial) else None
            patched = dict(row)
            patched[key] = listed
            refuted = deg != m.length() - z.length() or _b_from_row(grouped, patched).as_constant() != 1
            naive = d_naive_row(m.reduced_word(), rs, True).get(z, 0)
            ck.expect(refuted and naive == got, f"erratum {label}")
            ck.errata.append(f"{zword},{key}")
        ck.expect(_b_from_row(grouped, computed).as_constant() == 1, f"b^{zword} from listed keys")

    got = quantum_product(u, v)
    want = {
        (rs.word(2, 3, 2), (1, 2, 1)): one(rs),
        (rs.word(3, 1, 2), (1, 2, 1)): one(rs),
        (rs.word(1, 2, 3, 2, 1), (0, 2, 1)): one(rs),
    }
    ck.expect(got == want, f"product {got}")
    ck.expect(gromov_witten(u, v, rs.word(1, 2, 3, 2, 1), (0, 2, 1)) == 1, "GW invariant")
    return ck


# criterion 4

def criterion_inverse(profile: str) -> _Checks:
    ck = _Checks()
    for t, bound in (("A2", 6), ("B2", 5)):
        rep = verify_inverse(t, bound)
        ck.count += rep.checked - 1
        ck.expect(rep.ok, f"{t}: {rep.violations[:3]}")
    return ck


# criterion 5

def criterion_chevalley(profile: str) -> _Checks:
    ck = _Checks()
    types = ["A2", "B2"] + (["A3"] if profile == "full" else [])
    for t in types:
        rs = RootSystem.of(t)
        for u in rs.enumerate_weyl():
            for i in range(1, rs.rank + 1):
                got = equivariant_qconstants(rs.s(i), u)
                want = equivariant_quantum_chevalley(i, u)
                ck.expect(got == want, f"{t} s{i} * {u!r}")
    return ck


# criterion 6

def criterion_product_identities(profile: str) -> _Checks:
    ck = _Checks()
    for t in ("A2", "B2"):
        rs = RootSystem.of(t)
        neg = tuple(-c for c in rs.theta_coroot)
        tr = AffineWeylElement(rs.identity, neg)
        admissible = [AffineWeylElement(w, neg) for w in rs.enumerate_weyl()]
        admissible = [x for x in admissible if x.is_min_coset_rep()]
        for x in admissible:
            ck.expect(translation_product_check(x, tr), f"{t} translation {x!r}")
        for x in admissible:
            if x.w.length() != 1:
                continue
            for y in admissible:
                ck.expect(chevalley_pontryagin_check(x, y), f"{t} Chevalley {x!r} {y!r}")
    return ck


# criterion 7

def criterion_classical(profile: str) -> _Checks:
    ck = _Checks()
    rs = RootSystem.of("A2")
    oracle = ClassicalOracle(rs)
    W = rs.enumerate_weyl()
    for u in W:
        for v in W:
            q = equivariant_qconstants(u, v)
            block = q.classical_block()
            ref = classical_constants(u, v)
            ck.expect(ref == block, f"lam = 0 block {u!r} {v!r}")
            at0 = {w: p.at_zero() for w, p in block.items() if p.at_zero()}
            want = {w: c for w, c in oracle.product(u, v).items() if c}
            ck.expect(at0 == want, f"alpha = 0 {u!r} {v!r}: {at0} vs {want}")
    return ck


# criterion 8

def _pairs(rs: RootSystem, profile: str, rng: random.Random, k: int) -> list:
    W = rs.enumerate_weyl()
    pairs = [(u, v) for u in W for v in W]
    if profile == "full" or len(pairs) <= k:
        return pairs
    return rng.sample(pairs, k)


def alternative_choice(u, v) -> TranslationChoice:
    """A third valid choice: the minimal one with eta shifted by a regular antidominant vector."""
    base = choose_translations(u, v)
    seed = regular_seed(u.rs)
    eta = tuple(a + b for a, b in zip(base.eta, seed))
    return TranslationChoice(eta, base.kappa, tuple(a + b for a, b in zip(eta, base.kappa)))


def criterion_structural(profile: str) -> _Checks:
    ck = _Checks()
    rng = random.Random(20240611)
    for t, k in (("A2", 36), ("B2", 16)):
        rs = RootSystem.of(t)
        for v in rs.enumerate_weyl():
            got = equivariant_qconstants(rs.identity, v)
            ck.expect(got == {(v, (0,) * rs.rank): one(rs)}, f"{t} unit {v!r}")
        for u, v in _pairs(rs, profile, rng, k):
            q = equivariant_qconstants(u, v)
            ck.expect(q == equivariant_qconstants(v, u), f"{t} commutativity {u!r} {v!r}")
            for (w, lam), p in q.terms.items():
                deg = u.length() + v.length() - w.length() - rs.pair_rho2(lam)
                ck.expect(deg >= 0 and p.homogeneous_degree() == deg, f"{t} degree {u!r} {v!r} {w!r} {lam}")
                ck.expect(all(c >= 0 for c in lam), f"{t} lam >= 0 {lam}")
                mu = tuple(a + b + c for a, b, c in zip(q.choice.eta, q.choice.kappa, lam))
                ck.expect(AffineWeylElement(w, mu).is_min_coset_rep(), f"{t} vanishing {w!r} {lam}")
            uni = equivariant_qconstants(u, v, strategy="uniform")
            ck.expect(uni == q, f"{t} uniform choice {u!r} {v!r}")
            alt = equivariant_qconstants(u, v, choice=alternative_choice(u, v))
            ck.expect(alt == q, f"{t} shifted choice {u!r} {v!r}")
    return ck


# criterion 9

def _example_pairs() -> list:
    out = []
    a2 = RootSystem.of("A2")
    neg = tuple(-c for c in a2.theta_coroot)
    out.append((AffineWeylElement(a2.word(1, 2), neg), AffineWeylElement(a2.word(1, 2, 1), neg)))
    u = a2.word(1, 2, 1)
    ch = choose_translations(u, u)
    out.append((AffineWeylElement(u, ch.eta), AffineWeylElement(u, ch.kappa)))
    b3 = RootSystem.of("B3")
    neg = tuple(-c for c in b3.theta_coroot)
    out.append((AffineWeylElement(b3.word(*B3_U), neg), AffineWeylElement(b3.word(*B3_V), neg)))
    return out


def criterion_naive(profile: str, max_word: int = 12) -> _Checks:
    ck = _Checks()
    for x, y in _example_pairs():
        rs = x.rs
        G = AffineWeylGroup.of(rs)
        for e in (x, y):
            word = e.reduced_word()
            for evaluated in (False, True):
                dp = c_all(e, evaluated).c_values
                ck.expect(dp == c_naive_row(word, rs, evaluated), f"c row {e!r} evaluated={evaluated}")
        words = {G.coset_min_of_key(k).reduced_word() for k in coset_pair_sums(x, y)}
        words |= {x.reduced_word(), y.reduced_word()}
        for word in sorted(words):
            if len(word) > max_word:
                continue
            for evaluated in (False, True):
                ck.expect(d_row(word, rs, evaluated) == d_naive_row(word, rs, evaluated),
                          f"d row {word} evaluated={evaluated}")
    return ck


CRITERIA: dict[int, tuple[str, float, Callable[[str], _Checks]]] = {
    1: ("A2 worked example", 10, criterion_a2_example),
    2: ("A2 longest-element example", 10, criterion_a2_longest_example),
    3: ("B3 worked example", 300, criterion_b3_example),
    4: ("inverse identity", 120, criterion_inverse),
    5: ("Chevalley oracle", 300, criterion_chevalley),
    6: ("product identities", 300, criterion_product_identities),
    7: ("classical limit", 120, criterion_classical),
    8: ("structural properties", 300, criterion_structural),
    9: ("oracle equivalence", 120, criterion_naive),
}


def run_criterion(number: int, profile: str = "quick") -> CriterionResult:
    if profile not in PROFILES:
        raise ValueError(f"unknown profile {profile!r}")
    title, limit, fn = CRITERIA[number]
    start = time.perf_counter()
    try:
        ck = fn(profile)
        ok, detail = not ck.failures, ck.detail()
    except Exception as exc:  # reported as a failure line
        ok, detail = False, f"{type(exc).__name__}: {exc}"
    elapsed = time.perf_counter() - start
    if elapsed > limit:
        ok = False
        detail += f"; exceeded {limit:.0f}s"
    return CriterionResult(number, title, ok, detail, elapsed, limit)


def run(profile: str = "quick", numbers=None, stream=None) -> bool:
    stream = stream or sys.stdout
    ok = True
    for n in numbers or sorted(CRITERIA):
        res = run_criterion(n, profile)
        print(res.line(), file=stream, flush=True)
        ok = ok and res.ok
    return ok
