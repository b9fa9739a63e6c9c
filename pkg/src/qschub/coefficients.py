"""The coefficients c_{x,y} and d_{y,x} attached to a reduced word of x.

For a reduced word x = s_{b_1} ... s_{b_m}:

* ``c_{x,y} = (-1)^m sum_eps prod_k 1 / (s^{e_1} ... s^{e_k})(b_k)`` over all
  0/1 vectors eps whose product s^{e_1} ... s^{e_m} equals y;
* ``d_{y,x} = sum prod_j gamma_{i_j}`` over reduced subwords multiplying to y,
  with ``gamma_k = s_{b_1} ... s_{b_{k-1}}(b_k)``.

Both are computed by dynamic programming over word positions, with the
partial product as state.  The exponential enumerations are kept as oracles.
``evaluated=True`` means delta -> 0 (that is, alpha_0 -> -theta) is applied
to every root form on the fly, which is a ring map on everything in sight
because real roots never vanish there.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import product as iproduct
from typing import Sequence

from .affine import DEFAULT_LENGTH_BOUND, AffineRoot, AffineWeylElement, AffineWeylGroup
from .rootsystem import BoundExceeded, FiniteWeylElement, RootSystem
from .symbolic import (
    LinearForm,
    Polynomial,
    RationalForm,
    act_form,
    common_denominator,
    numerator_over,
    product_of_forms,
)

NAIVE_MAX_WORD = 14


def nvars_of(rs: RootSystem) -> int:
    return rs.rank + 1


def simple_affine_root(rs: RootSystem, i: int) -> AffineRoot:
    if i == 0:
        return AffineRoot(tuple(-t for t in rs.theta), 1)
    return AffineRoot(rs.simple_roots[i - 1], 0)


def _form(r: AffineRoot, evaluated: bool) -> LinearForm:
    return LinearForm(tuple(r.gamma) + ((0 if evaluated else r.m),))


def _word_of(x: "AffineWeylElement | Sequence[int]", G: AffineWeylGroup) -> tuple[int, ...]:
    if isinstance(x, AffineWeylElement):
        return x.reduced_word()
    word = tuple(x)
    if not G.is_reduced(word):
        raise ValueError(f"word {word} is not reduced")
    return word


@dataclass
class CoefficientTable:
    """The row ``{y: c_{x,y}}`` of one base element, bucketed by coset."""

    base: AffineWeylElement
    word: tuple
    evaluated: bool
    c_values: dict = field(default_factory=dict)
    by_coset: dict = field(default_factory=dict)

    def c(self, y: AffineWeylElement) -> RationalForm:
        r = self.c_values.get(y)
        return r if r is not None else RationalForm.zero(nvars_of(self.base.rs))

    def c_bracket(self, key: Sequence[int]) -> RationalForm:
        r = self.by_coset.get(tuple(key))
        return r if r is not None else RationalForm.zero(nvars_of(self.base.rs))


def c_all(x: AffineWeylElement, evaluated: bool = True, word: Sequence[int] | None = None,
          bound: int = DEFAULT_LENGTH_BOUND) -> CoefficientTable:
    """All c_{x,y}; ``word`` selects the reduced word used (default: the canonical one)."""
    if x.length() > bound:
        raise BoundExceeded(f"length {x.length()} exceeds bound {bound}")
    if word is None:
        return _c_all_cached(x, evaluated)
    return _c_all(x, tuple(word), evaluated)


@lru_cache(maxsize=4096)
def _c_all_cached(x: AffineWeylElement, evaluated: bool) -> CoefficientTable:
    return _c_all(x, x.reduced_word(), evaluated)


def _c_all(x: AffineWeylElement, word: tuple, evaluated: bool) -> CoefficientTable:
    rs = x.rs
    G = AffineWeylGroup.of(rs)
    if G.from_word(word) != x or len(word) != x.length():
        raise ValueError(f"{word} is not a reduced word of {x!r}")
    nv = nvars_of(rs)
    states: dict = {G.identity: RationalForm.one(nv)}
    for i in word:
        beta = simple_affine_root(rs, i)
        s = G.s(i)
        new: dict = {}
        for p, coef in states.items():
            f = _form(p.act(beta), evaluated)
            t = coef.divide_by_form(f)
            new[p] = new[p] + t if p in new else t
            q = p * s
            new[q] = new[q] - t if q in new else -t
        states = new
    sign = -1 if len(word) % 2 else 1
    table = CoefficientTable(x, word, evaluated)
    for y, r in states.items():
        if r.is_zero():
            continue
        table.c_values[y] = r * sign if sign < 0 else r
    for y, r in table.c_values.items():
        if not evaluated:
            r = r.eval_delta_zero()
        key = y.coset_key()
        table.by_coset[key] = table.by_coset[key] + r if key in table.by_coset else r
    table.by_coset = {k: v for k, v in table.by_coset.items() if not v.is_zero()}
    return table


def c_coeff(x: AffineWeylElement, y: AffineWeylElement, evaluated: bool = True) -> RationalForm:
    return c_all(x, evaluated).c(y)


def c_bracket(x: AffineWeylElement, key: Sequence[int]) -> RationalForm:
    """c_{x,[t_key]}: the delta-evaluated c_{x,z} summed over the coset t_key W."""
    return c_all(x, True).c_bracket(key)


def gammas(rs: RootSystem, word: Sequence[int], evaluated: bool) -> list[LinearForm]:
    G = AffineWeylGroup.of(rs)
    out = []
    prefix = G.identity
    for i in word:
        out.append(_form(prefix.act(simple_affine_root(rs, i)), evaluated))
        prefix = prefix * G.s(i)
    return out


def d_row(word: Sequence[int], rs: RootSystem, evaluated: bool = True, min_length: int = 0,
          max_length: int | None = None) -> dict:
    """``{y: d_{y,x}}`` for x the product of the reduced ``word``.

    Only y with ``min_length <= l(y) <= max_length`` are produced; states that
    can no longer reach ``min_length`` are pruned early.
    """
    return _d_row(tuple(word), rs, evaluated, min_length, max_length)


@lru_cache(maxsize=4096)
def _d_row(word: tuple, rs: RootSystem, evaluated: bool, min_length: int, max_length) -> dict:
    G = AffineWeylGroup.of(rs)
    if not G.is_reduced(word):
        raise ValueError(f"word {word} is not reduced")
    nv = nvars_of(rs)
    gs = gammas(rs, word, evaluated)
    m = len(word)
    states: dict = {G.identity: Polynomial.constant(nv, 1)}
    for k, i in enumerate(word):
        remaining = m - k - 1
        g = gs[k].to_polynomial()
        s = G.s(i)
        new: dict = {}
        for p, val in states.items():
            lp = p.length()
            if lp + remaining >= min_length:
                new[p] = new[p] + val if p in new else val
            if not p.is_descent(i) and (max_length is None or lp < max_length):
                q = p * s
                if lp + 1 + remaining >= min_length:
                    t = val * g
                    new[q] = new[q] + t if q in new else t
        states = {p: v for p, v in new.items() if not v.is_zero()}
    return {p: v for p, v in states.items() if p.length() >= min_length}


def d_coeff(y: AffineWeylElement, word: "Sequence[int] | AffineWeylElement", evaluated: bool = False) -> Polynomial:
    """d_{y,x} for x given by a reduced word; only prefixes of y are tracked."""
    rs = y.rs
    G = AffineWeylGroup.of(rs)
    word = _word_of(word, G)
    nv = nvars_of(rs)
    ly = y.length()
    if ly > len(word):
        return Polynomial(nv)
    gs = gammas(rs, word, evaluated)
    m = len(word)
    states: dict = {G.identity: Polynomial.constant(nv, 1)}
    for k, i in enumerate(word):
        remaining = m - k - 1
        g = gs[k].to_polynomial()
        s = G.s(i)
        new: dict = {}
        for p, val in states.items():
            lp = p.length()
            if lp + remaining >= ly:
                new[p] = new[p] + val if p in new else val
            if lp < ly and not p.is_descent(i):
                q = p * s
                if (q.inverse() * y).length() == ly - lp - 1:
                    t = val * g
                    new[q] = new[q] + t if q in new else t
        states = new
    return states.get(y, Polynomial(nv))


def d_bracket(y: AffineWeylElement, word: "Sequence[int] | AffineWeylElement") -> Polynomial:
    """d_{y,[x]} = d_{y,x} at delta = 0."""
    return d_coeff(y, word, evaluated=True)


# exponential oracles

def c_naive(word: Sequence[int], y: AffineWeylElement, evaluated: bool = False) -> RationalForm:
    """Literal sum over all 2^m choices of eps."""
    rs = y.rs
    G = AffineWeylGroup.of(rs)
    word = tuple(word)
    if len(word) > NAIVE_MAX_WORD:
        raise BoundExceeded(f"naive enumeration limited to words of length {NAIVE_MAX_WORD}")
    nv = nvars_of(rs)
    total = RationalForm.zero(nv)
    sign = (-1) ** len(word)
    for eps in iproduct((0, 1), repeat=len(word)):
        p = G.identity
        forms = []
        for e, i in zip(eps, word):
            if e:
                p = p * G.s(i)
            forms.append(_form(p.act(simple_affine_root(rs, i)), evaluated))
        if p == y:
            total = total + RationalForm.inverse_of(forms, nv, sign)
    return total


def d_naive(y: AffineWeylElement, word: Sequence[int], evaluated: bool = False) -> Polynomial:
    """Literal sum over all subsets of positions forming a reduced word of y."""
    rs = y.rs
    G = AffineWeylGroup.of(rs)
    word = tuple(word)
    if len(word) > NAIVE_MAX_WORD:
        raise BoundExceeded(f"naive enumeration limited to words of length {NAIVE_MAX_WORD}")
    nv = nvars_of(rs)
    gs = gammas(rs, word, evaluated)
    total = Polynomial(nv)
    ly = y.length()
    for pick in iproduct((0, 1), repeat=len(word)):
        if sum(pick) != ly:
            continue
        p = G.from_word([i for e, i in zip(pick, word) if e])
        if p == y and p.length() == ly:
            total = total + product_of_forms([g for e, g in zip(pick, gs) if e], nv)
    return total


def c_naive_row(word: Sequence[int], rs: RootSystem, evaluated: bool = False) -> dict:
    """``{y: c_{x,y}}`` by the literal 2^m sum, grouped by the product y."""
    G = AffineWeylGroup.of(rs)
    word = tuple(word)
    if len(word) > NAIVE_MAX_WORD:
        raise BoundExceeded(f"naive enumeration limited to words of length {NAIVE_MAX_WORD}")
    nv = nvars_of(rs)
    sign = (-1) ** len(word)
    out: dict = {}
    for eps in iproduct((0, 1), repeat=len(word)):
        p = G.identity
        forms = []
        for e, i in zip(eps, word):
            if e:
                p = p * G.s(i)
            forms.append(_form(p.act(simple_affine_root(rs, i)), evaluated))
        t = RationalForm.inverse_of(forms, nv, sign)
        out[p] = out[p] + t if p in out else t
    return {y: r for y, r in out.items() if not r.is_zero()}


def d_naive_row(word: Sequence[int], rs: RootSystem, evaluated: bool = False) -> dict:
    """``{y: d_{y,x}}`` by the literal sum over reduced subwords."""
    G = AffineWeylGroup.of(rs)
    word = tuple(word)
    if len(word) > NAIVE_MAX_WORD:
        raise BoundExceeded(f"naive enumeration limited to words of length {NAIVE_MAX_WORD}")
    nv = nvars_of(rs)
    gs = gammas(rs, word, evaluated)
    out: dict = {}
    for pick in iproduct((0, 1), repeat=len(word)):
        sub = [i for e, i in zip(pick, word) if e]
        p = G.from_word(sub)
        if p.length() != len(sub):
            continue
        t = product_of_forms([g for e, g in zip(pick, gs) if e], nv)
        out[p] = out[p] + t if p in out else t
    return {y: v for y, v in out.items() if not v.is_zero()}


# closed forms on the finite Weyl group

def _finite_affine(u: FiniteWeylElement) -> AffineWeylElement:
    return AffineWeylElement(u, (0,) * u.rs.rank)


def positive_root_product(rs: RootSystem) -> Polynomial:
    return product_of_forms((LinearForm.from_root(b) for b in rs.positive_roots), nvars_of(rs))


def d_diag(v: FiniteWeylElement) -> Polynomial:
    """prod of gamma in R^+ with v^{-1}(gamma) < 0."""
    rs = v.rs
    vi = v.inverse()
    forms = [LinearForm.from_root(b) for b in rs.positive_roots if sum(vi.act_root(b)) < 0]
    return product_of_forms(forms, nvars_of(rs))


def weight_difference(i: int, u: FiniteWeylElement) -> LinearForm:
    """w_i - u(w_i) as a linear form in the simple roots."""
    rs = u.rs
    wi = rs.fundamental_weights[i - 1]
    uw = u.act_weight(wi)
    return LinearForm(tuple(a - b for a, b in zip(wi, uw)) + (0,))


d_simple = weight_difference


def d_via_c(v: FiniteWeylElement, u: FiniteWeylElement) -> Polynomial:
    """(prod_{R^+} beta) * u(c_{v^{-1} w0, u^{-1} w0})."""
    rs = v.rs
    w0 = rs.longest_element()
    x = _finite_affine(v.inverse() * w0)
    y = _finite_affine(u.inverse() * w0)
    c = c_all(x, evaluated=False).c(y)
    r = act_form(_finite_affine(u), c) * positive_root_product(rs)
    p = r.is_polynomial()
    if p is None:
        raise ArithmeticError("closed form for d did not reduce to a polynomial")
    return p


# the inverse-matrix identity

@dataclass
class InverseReport:
    lie_type: str
    bound: int
    elements: int
    checked: int = 0
    violations: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def verify_inverse(rs: "RootSystem | str", bound: int) -> InverseReport:
    """Check sum_z c_{x,z} d_{y,z} = delta_{x,y} and sum_z c_{z,x} d_{z,y} = delta_{x,y}.

    Works in the un-evaluated model.  Each sum is put over one common
    denominator so the check is a polynomial identity.
    """
    if isinstance(rs, str):
        rs = RootSystem.of(rs)
    G = AffineWeylGroup.of(rs)
    els = G.elements_up_to(bound)
    report = InverseReport(str(rs.lie_type), bound, len(els))
    crow = {x: c_all(x, evaluated=False).c_values for x in els}
    drow = {z: d_row(z.reduced_word(), rs, evaluated=False) for z in els}
    elset = set(els)

    def check(acc: dict, lcd: dict, diag, label: str, fixed) -> None:
        target = product_of_forms((f for f, k in lcd.items() for _ in range(k)), nvars_of(rs))
        for other in elset:
            val = acc.get(other)
            want = target if other == diag else None
            report.checked += 1
            if want is None:
                if val is not None and not val.is_zero():
                    report.violations.append((label, fixed, other))
            elif val != want:
                report.violations.append((label, fixed, other))

    for x in els:
        row = crow[x]
        lcd = common_denominator(row.values())
        acc: dict = {}
        for z, c in row.items():
            nz = numerator_over(c, lcd)
            for y, d in drow[z].items():
                t = nz * d
                acc[y] = acc[y] + t if y in acc else t
        check(acc, lcd, x, "sum_z c[x,z] d[y,z]", x)

    for y in els:
        col = drow[y]
        lcd = common_denominator(c for z in col for c in crow[z].values())
        acc = {}
        for z, d in col.items():
            for x, c in crow[z].items():
                t = numerator_over(c, lcd) * d
                acc[x] = acc[x] + t if x in acc else t
        check(acc, lcd, y, "sum_z c[z,x] d[z,y]", y)
    return report
