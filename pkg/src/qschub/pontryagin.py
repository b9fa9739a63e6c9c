"""Structure constants of the Pontryagin product on H_*^T(Omega K), and the
equivariant cohomology structure constants of Omega K and G/B.

The Pontryagin constants are

    b_{x,y}^z = sum_{t1, t2} c_{x,[t1]} c_{y,[t2]} d_{z,[t1 t2]},

summed over translations.  Only cosets that meet the lower Bruhat cone of x
(resp. y) have nonzero c, so the sum is finite; d_{z,[t1 t2]} is read off a
reduced word of the minimal representative of the coset t1 t2 W.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Iterator, Sequence

from .affine import DEFAULT_LENGTH_BOUND, AffineWeylElement, AffineWeylGroup
from .coefficients import c_all, d_bracket, d_coeff, d_row, nvars_of, weight_difference
from .errors import BoundExceeded, InconsistencyError
from .rootsystem import FiniteWeylElement, RootSystem
from .symbolic import Polynomial, RationalForm, common_denominator, numerator_over


@dataclass
class FormalSum:
    """A finite sum ``sum coef * S_key`` with polynomial coefficients."""

    terms: dict = field(default_factory=dict)

    def __getitem__(self, key) -> Polynomial | int:
        return self.terms.get(key, 0)

    def __contains__(self, key):
        return key in self.terms

    def __len__(self):
        return len(self.terms)

    def __iter__(self) -> Iterator:
        return iter(self.sorted_keys())

    def items(self):
        return [(k, self.terms[k]) for k in self.sorted_keys()]

    def sorted_keys(self) -> list:
        def order(k):
            if isinstance(k, AffineWeylElement):
                return (k.length(), k.reduced_word())
            return (k.length(), k.reduced_word())
        return sorted(self.terms, key=order)

    def __eq__(self, other):
        if isinstance(other, FormalSum):
            other = other.terms
        if not isinstance(other, dict):
            return NotImplemented
        keys = set(self.terms) | set(other)
        return all(_poly_eq(self.terms.get(k, 0), other.get(k, 0)) for k in keys)

    def to_json(self) -> list:
        out = []
        for k, v in self.items():
            out.append({"z": element_to_json(k), "coef": v.to_json()})
        return out


def _poly_eq(a, b) -> bool:
    if isinstance(a, Polynomial):
        return a == b
    if isinstance(b, Polynomial):
        return b == a
    return a == b


def element_to_json(x) -> dict:
    if isinstance(x, AffineWeylElement):
        return {"word": list(x.reduced_word()), "w": list(x.w.reduced_word()), "lambda": list(x.lam)}
    return {"w": list(x.reduced_word())}


def _require_min(x: AffineWeylElement, name: str) -> None:
    if not x.is_min_coset_rep():
        raise ValueError(f"{name} = {x!r} is not a minimal coset representative")


def _finalize(acc: dict, lcd: dict, base_len: int) -> FormalSum:
    out = {}
    for z, num in acc.items():
        if num.is_zero():
            continue
        r = RationalForm(num, lcd)
        p = r.is_polynomial()
        if p is None:
            raise InconsistencyError(f"non-polynomial coefficient at {z!r}: {r}")
        if p.is_zero():
            continue
        deg = p.homogeneous_degree()
        if deg != z.length() - base_len:
            raise InconsistencyError(f"coefficient at {z!r} has degree {deg}, expected {z.length() - base_len}")
        out[z] = p
    return FormalSum(out)


def coset_pair_sums(x: AffineWeylElement, y: AffineWeylElement, same_v1: bool = False) -> dict:
    """``{key: sum c_{x,[t1]} c_{y,[t2]}}`` grouped by ``t1 t2 = t_key``.

    With ``same_v1`` only pairs [v1 t_l1], [v1 t_l2] sharing the Weyl part v1
    of their minimal representatives are kept.
    """
    tx = c_all(x).by_coset
    ty = c_all(y).by_coset
    G = AffineWeylGroup.of(x.rs)
    grouped: dict = {}
    for k1, c1 in tx.items():
        for k2, c2 in ty.items():
            if same_v1 and G.coset_min_of_key(k1).w != G.coset_min_of_key(k2).w:
                continue
            key = tuple(a + b for a, b in zip(k1, k2))
            t = c1 * c2
            grouped[key] = grouped[key] + t if key in grouped else t
    return {k: v for k, v in grouped.items() if not v.is_zero()}


def pontryagin_constants(x: AffineWeylElement, y: AffineWeylElement, *, bound: int = DEFAULT_LENGTH_BOUND,
                         max_degree: int | None = None, threads: int = 1,
                         same_v1: bool = False) -> FormalSum:
    """All b_{x,y}^z, z in W_af^-; ``max_degree`` caps l(z) - l(x) - l(y)."""
    _require_min(x, "x")
    _require_min(y, "y")
    for e in (x, y):
        if e.length() > bound:
            raise BoundExceeded(f"length {e.length()} exceeds bound {bound}")
    rs = x.rs
    G = AffineWeylGroup.of(rs)
    base = x.length() + y.length()
    top = None if max_degree is None else base + max_degree
    grouped = coset_pair_sums(x, y, same_v1)
    keys = sorted(grouped)
    words = {}
    for key in keys:
        m = G.coset_min_of_key(key)
        if m.length() > 2 * bound:
            raise BoundExceeded(f"coset representative of length {m.length()} exceeds bound {2 * bound}")
        words[key] = m.reduced_word()

    def row(key):
        return d_row(words[key], rs, True, base, top)

    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            rows = dict(zip(keys, pool.map(row, keys)))
    else:
        rows = {k: row(k) for k in keys}

    lcd = common_denominator(grouped.values())
    acc: dict = {}
    for key in keys:
        n = numerator_over(grouped[key], lcd)
        for z, d in rows[key].items():
            if not z.is_min_coset_rep():
                continue
            t = n * d
            acc[z] = acc[z] + t if z in acc else t
    return _finalize(acc, lcd, base)


def translation_product_check(x: AffineWeylElement, t: AffineWeylElement) -> bool:
    """S_{w t_l} S_{t_m} = S_{w t_{l+m}}."""
    if not t.w.is_identity():
        raise ValueError("second factor must be a translation")
    got = pontryagin_constants(x, t)
    target = AffineWeylElement(x.w, tuple(a + b for a, b in zip(x.lam, t.lam)))
    return got == {target: Polynomial.constant(nvars_of(x.rs), 1)}


def chevalley_pontryagin_rhs(i: int, lam: Sequence[int], u: FiniteWeylElement,
                             mu: Sequence[int]) -> tuple[dict, list]:
    """Right-hand side of the Chevalley-type rule for S_{s_i t_lam} S_{u t_mu}.

    Returns the terms indexed in W_af^- and the list of (index, coefficient)
    pairs whose index falls outside W_af^- (these must all vanish).
    """
    from .quantum import gamma_sets

    rs = u.rs
    nv = nvars_of(rs)
    lm = tuple(a + b for a, b in zip(lam, mu))
    terms: dict = {}

    def put(idx, coef):
        terms[idx] = terms[idx] + coef if idx in terms else coef

    put(AffineWeylElement(u, lm), -weight_difference(i, u).to_polynomial())
    g1, g2 = gamma_sets(u)
    for g in g1:
        c = rs.coroot_of(g)[i - 1]
        if c:
            put(AffineWeylElement(u * rs.reflection(g), lm), Polynomial.constant(nv, c))
    for g in g2:
        gv = rs.coroot_of(g)
        c = gv[i - 1]
        if c:
            put(AffineWeylElement(u * rs.reflection(g), tuple(a + b for a, b in zip(lm, gv))),
                Polynomial.constant(nv, c))
    inside = {}
    outside = []
    for k, v in terms.items():
        if v.is_zero():
            continue
        if k.is_min_coset_rep():
            inside[k] = v
        else:
            outside.append((k, v))
    return inside, outside


def chevalley_pontryagin_check(x: AffineWeylElement, y: AffineWeylElement) -> bool:
    """Compare S_{s_i t_lam} S_{u t_mu} with the Chevalley-type closed form."""
    rs = x.rs
    word = x.w.reduced_word()
    if len(word) != 1:
        raise ValueError("first factor must be s_i t_lam")
    inside, outside = chevalley_pontryagin_rhs(word[0], x.lam, y.w, y.lam)
    if outside:
        return False
    return pontryagin_constants(x, y) == inside


def loop_cohomology_constants(x: AffineWeylElement, y: AffineWeylElement,
                              bound: int | None = None) -> FormalSum:
    """p~_{x,y}^z = sum_{v in W_af^-} d_{x,[v]} d_{y,[v]} c_{z,[v]} for l(z) <= l(x) + l(y).

    ``bound`` lowers the window further if given.
    """
    _require_min(x, "x")
    _require_min(y, "y")
    rs = x.rs
    G = AffineWeylGroup.of(rs)
    top = x.length() + y.length()
    if bound is not None:
        top = min(top, bound)
    nv = nvars_of(rs)
    out = {}
    for z in G.min_coset_reps_up_to(top):
        table = c_all(z).by_coset
        lcd = common_denominator(table.values())
        num = Polynomial(nv)
        for key, c in table.items():
            v = G.coset_min_of_key(key)
            dx = d_bracket(x, v)
            if dx.is_zero():
                continue
            dy = d_bracket(y, v)
            if dy.is_zero():
                continue
            num = num + numerator_over(c, lcd) * dx * dy
        if num.is_zero():
            continue
        r = RationalForm(num, lcd)
        p = r.is_polynomial()
        if p is None:
            raise InconsistencyError(f"non-polynomial cohomology constant at {z!r}")
        out[z] = p
    return FormalSum(out)


def gb_equivariant_constants(u: FiniteWeylElement, v: FiniteWeylElement) -> FormalSum:
    """p_{u,v}^w = sum_{v1 in W} d_{u,v1} d_{v,v1} c_{w,v1} for every w in W."""
    rs = u.rs
    nv = nvars_of(rs)
    zero = (0,) * rs.rank
    ua = AffineWeylElement(u, zero)
    va = AffineWeylElement(v, zero)
    out = {}
    for w in rs.enumerate_weyl():
        if w.length() < max(u.length(), v.length()):
            continue
        wa = AffineWeylElement(w, zero)
        row = c_all(wa, evaluated=False).c_values
        lcd = common_denominator(row.values())
        num = Polynomial(nv)
        for v1, c in row.items():
            du = d_coeff(ua, v1)
            if du.is_zero():
                continue
            dv = d_coeff(va, v1)
            if dv.is_zero():
                continue
            num = num + numerator_over(c, lcd) * du * dv
        if num.is_zero():
            continue
        p = RationalForm(num, lcd).is_polynomial()
        if p is None:
            raise InconsistencyError(f"non-polynomial classical constant at {w!r}")
        deg = p.homogeneous_degree()
        if deg != u.length() + v.length() - w.length():
            raise InconsistencyError(f"classical constant at {w!r} has degree {deg}")
        out[w] = p
    return FormalSum(out)
