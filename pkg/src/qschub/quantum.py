"""(Equivariant) quantum Schubert structure constants of G/B.

For u, v in W pick antidominant eta, kappa with x = u t_eta and y = v t_kappa
minimal in their cosets x W, y W.  Then for every z = w t_mu in W_af^- the
signed Pontryagin constant ``(-1)^{l(z)-l(x)-l(y)} b_{x,y}^z`` is the
coefficient of ``q_lam sigma^w`` in ``sigma^u * sigma^v`` with
``lam = mu - eta - kappa``.  Products whose index w t_mu is not minimal in
its coset contribute nothing.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .affine import DEFAULT_LENGTH_BOUND, AffineWeylElement, AffineWeylGroup
from .coefficients import d_bracket, d_row, nvars_of, weight_difference
from .errors import InconsistencyError
from .pontryagin import FormalSum, coset_pair_sums, gb_equivariant_constants, pontryagin_constants
from .rootsystem import FiniteWeylElement, RootSystem
from .symbolic import Polynomial, RationalForm, common_denominator, numerator_over



def gamma_sets(u: FiniteWeylElement) -> tuple[tuple, tuple]:
    """(Gamma_1(u), Gamma_2(u)) as tuples of positive roots."""
    rs = u.rs
    lu = u.length()
    g1, g2 = [], []
    for g in rs.positive_roots:
        l = (u * rs.reflection(g)).length()
        if l == lu + 1:
            g1.append(g)
        if l == lu + 1 - rs.pair_rho2(rs.coroot_of(g)):
            g2.append(g)
    return tuple(g1), tuple(g2)


def _sort_key(item):
    (w, lam), _ = item
    return (2 * sum(lam), lam, w.reduced_word())


@dataclass
class QuantumSum:
    """``sum coef * q_lam * sigma^w`` keyed by ``(w, lam)``."""

    rs: RootSystem
    terms: dict = field(default_factory=dict)
    choice: "TranslationChoice | None" = None

    def __getitem__(self, key):
        w, lam = key
        return self.terms.get((w, tuple(lam)), 0)

    def __len__(self):
        return len(self.terms)

    def items(self):
        return sorted(self.terms.items(), key=_sort_key)

    def __eq__(self, other):
        if isinstance(other, QuantumSum):
            other = other.terms
        if not isinstance(other, dict):
            return NotImplemented
        keys = set(self.terms) | set(other)
        for k in keys:
            a, b = self.terms.get(k, 0), other.get(k, 0)
            if isinstance(a, Polynomial):
                if a != b:
                    return False
            elif isinstance(b, Polynomial):
                if b != a:
                    return False
            elif a != b:
                return False
        return True

    def classical_block(self) -> dict:
        zero = (0,) * self.rs.rank
        return {w: c for (w, lam), c in self.terms.items() if lam == zero}

    def at_zero(self) -> "QuantumSum":
        """Specialize alpha_1 = ... = alpha_n = 0."""
        nv = nvars_of(self.rs)
        out = {}
        for k, p in self.terms.items():
            c = p.at_zero() if isinstance(p, Polynomial) else p
            if c:
                out[k] = Polynomial.constant(nv, c)
        return QuantumSum(self.rs, out, self.choice)

    def rows(self) -> list[tuple[tuple, tuple, object]]:
        """(q exponents, w word, coefficient) triples in display order."""
        return [(lam, w.reduced_word(), c) for (w, lam), c in self.items()]

    def to_json(self) -> dict:
        rows = []
        for (w, lam), c in self.items():
            coef = c.to_json() if isinstance(c, Polynomial) else str(Fraction(c))
            rows.append({"q": list(lam), "w": list(w.reduced_word()), "coef": coef})
        out = {"type": str(self.rs.lie_type), "terms": rows}
        if self.choice is not None:
            out["choice"] = self.choice.to_json()
        return out

    @classmethod
    def from_json(cls, data: dict) -> "QuantumSum":
        rs = RootSystem.of(data["type"])
        nv = nvars_of(rs)
        terms = {}
        for row in data["terms"]:
            c = row["coef"]
            p = Polynomial.from_json(nv, c) if isinstance(c, list) else Polynomial.constant(nv, Fraction(c))
            terms[(rs.word(tuple(row["w"])), tuple(row["q"]))] = p
        choice = TranslationChoice.from_json(data["choice"]) if "choice" in data else None
        return cls(rs, terms, choice)

    def __str__(self):
        return format_quantum(self)


def format_quantum(qs: QuantumSum) -> str:
    if not qs.terms:
        return "0"
    parts = []
    for (w, lam), c in qs.items():
        q = "*".join(f"q{i + 1}" if e == 1 else f"q{i + 1}^{e}" for i, e in enumerate(lam) if e)
        sigma = "sigma[" + (" ".join(map(str, w.reduced_word())) or "id") + "]"
        const = c.homogeneous_degree() == 0 if isinstance(c, Polynomial) else True
        cs = str(c)
        if const and cs == "1":
            body = "*".join(filter(None, [q, sigma]))
        elif const and cs == "-1":
            body = "-" + "*".join(filter(None, [q, sigma]))
        else:
            body = "*".join(filter(None, [f"({cs})" if not const else cs, q, sigma]))
        parts.append(body)
    return " + ".join(parts).replace("+ -", "- ")


def equivariant_quantum_chevalley(i: int, u: FiniteWeylElement) -> QuantumSum:
    """(w_i - u(w_i)) sigma^u + sum_{Gamma_1} <g^vee, w_i> sigma^{u s_g}
    + sum_{Gamma_2} <g^vee, w_i> q_{g^vee} sigma^{u s_g}."""
    rs = u.rs
    nv = nvars_of(rs)
    zero = (0,) * rs.rank
    terms: dict = {}

    def put(key, p):
        p = terms[key] + p if key in terms else p
        if p.is_zero():
            terms.pop(key, None)
        else:
            terms[key] = p

    put((u, zero), weight_difference(i, u).to_polynomial())
    g1, g2 = gamma_sets(u)
    for g in g1:
        c = rs.coroot_of(g)[i - 1]
        if c:
            put((u * rs.reflection(g), zero), Polynomial.constant(nv, c))
    for g in g2:
        gv = rs.coroot_of(g)
        if gv[i - 1]:
            put((u * rs.reflection(g), gv), Polynomial.constant(nv, gv[i - 1]))
    return QuantumSum(rs, terms)


# choice of auxiliary translations

@dataclass(frozen=True)
class TranslationChoice:
    eta: tuple
    kappa: tuple
    mu: tuple

    def to_json(self) -> dict:
        return {"eta": list(self.eta), "kappa": list(self.kappa), "mu": list(self.mu)}

    @classmethod
    def from_json(cls, data: dict) -> "TranslationChoice":
        return cls(tuple(data["eta"]), tuple(data["kappa"]), tuple(data["mu"]))


def _valid(u: FiniteWeylElement, lam: Sequence[int]) -> bool:
    return AffineWeylElement(u, tuple(lam)).is_min_coset_rep()


def regular_seed(rs: RootSystem) -> tuple:
    """The shortest coroot-lattice vector with every pairing negative."""
    return _minimal_for(rs, set(range(1, rs.rank + 1)))


def _minimal_for(rs: RootSystem, strict: set) -> tuple | None:
    """Shortest antidominant lam in Q^vee with <lam, alpha_j> < 0 for j in ``strict``.

    Writing lam = sum_j p_j w_j^vee with p_j <= 0, l(t_lam) = sum_j -p_j c_j with
    c_j = <w_j^vee, 2 rho> > 0, and lam lies in Q^vee iff its class in the
    finite group P^vee / Q^vee vanishes.  Dijkstra over that group gives the
    optimal cost; the optimal vectors are then enumerated and the
    lexicographically smallest lam is returned.
    """
    import heapq

    n = rs.rank
    cw = rs.fundamental_coweights
    cost = [int(2 * sum(row)) for row in cw]

    def cls(vec):
        return tuple(x - (x.numerator // x.denominator) for x in vec)

    def add(a, j, k=1):
        return cls([a[t] - k * cw[j][t] for t in range(n)])

    start = cls([Fraction(0)] * n)
    base = 0
    for j in strict:
        start = add(start, j - 1)
        base += cost[j - 1]
    zero = cls([Fraction(0)] * n)
    dist = {start: 0}
    heap = [(0, 0, start)]
    tick = 1
    while heap:
        d, _, a = heapq.heappop(heap)
        if d > dist.get(a, d):
            continue
        if a == zero:
            break
        for j in range(n):
            b = add(a, j)
            nd = d + cost[j]
            if nd < dist.get(b, nd + 1):
                dist[b] = nd
                heapq.heappush(heap, (nd, tick, b))
                tick += 1
    if zero not in dist:
        return None
    budget = dist[zero]
    best = None

    def walk(j, left, extra):
        nonlocal best
        if j == n:
            if left:
                return
            p = [-(extra[k] + (1 if k + 1 in strict else 0)) for k in range(n)]
            lam = [sum(p[k] * cw[k][t] for k in range(n)) for t in range(n)]
            if any(x.denominator != 1 for x in lam):
                return
            lam = tuple(int(x) for x in lam)
            if best is None or lam < best:
                best = lam
            return
        k = 0
        while k * cost[j] <= left:
            walk(j + 1, left - k * cost[j], extra + [k])
            k += 1

    walk(0, budget, [])
    return best


def fallback_translation(rs: RootSystem) -> tuple:
    """A = -12 n (n+1) sum_i w_i^vee, valid for every Weyl element."""
    n = rs.rank
    s = [sum(row[k] for row in rs.fundamental_coweights) for k in range(n)]
    return tuple(int(-12 * n * (n + 1) * x) for x in s)


def _minimal_translation(u: FiniteWeylElement) -> tuple | None:
    rs = u.rs
    neg_theta = tuple(-x for x in rs.theta_coroot)
    strict = {i for i in range(1, rs.rank + 1) if u.is_descent(i)}
    best = _minimal_for(rs, strict)
    if best is None:
        return None
    # prefer -theta^vee when it is valid and no longer than the search result
    if _valid(u, neg_theta) and -sum(neg_theta) <= -sum(best):
        return neg_theta
    return best


def choose_translations(u: FiniteWeylElement, v: FiniteWeylElement, lam: Sequence[int] | None = None,
                        strategy: str = "minimal") -> TranslationChoice:
    """Auxiliary translations with u t_eta, v t_kappa in W_af^-.

    ``uniform`` takes eta = kappa from the ladder 0, -theta^vee, k * sigma
    (sigma the shortest regular antidominant vector), then the universal bound
    A.  ``minimal`` picks the shortest valid eta and kappa independently.
    """
    rs = u.rs
    lam = (0,) * rs.rank if lam is None else tuple(lam)
    if strategy == "minimal":
        eta = _minimal_translation(u)
        kappa = _minimal_translation(v)
        if eta is not None and kappa is not None:
            return TranslationChoice(eta, kappa, tuple(a + b + c for a, b, c in zip(eta, kappa, lam)))
        strategy = "uniform"
    if strategy != "uniform":
        raise ValueError(f"unknown translation strategy {strategy!r}")
    ladder = [(0,) * rs.rank, tuple(-x for x in rs.theta_coroot)]
    seed = regular_seed(rs)
    if seed is not None:
        ladder.append(seed)
    ladder.append(fallback_translation(rs))
    for e in ladder:
        if _valid(u, e) and _valid(v, e):
            return TranslationChoice(e, e, tuple(2 * a + c for a, c in zip(e, lam)))
    raise InconsistencyError("the universal translation bound failed")


def _lam_nonneg(lam) -> bool:
    return all(x >= 0 for x in lam)


def equivariant_qconstants(u: FiniteWeylElement, v: FiniteWeylElement, *, choice: TranslationChoice | None = None,
                           strategy: str = "minimal", max_degree: int | None = None, threads: int = 1,
                           bound: int = DEFAULT_LENGTH_BOUND) -> QuantumSum:
    """Every N~_{u,v}^{w,lam}, as a QuantumSum."""
    rs = u.rs
    if choice is None:
        choice = choose_translations(u, v, strategy=strategy)
    if max_degree is None:
        max_degree = u.length() + v.length()
    x = AffineWeylElement(u, choice.eta)
    y = AffineWeylElement(v, choice.kappa)
    b = pontryagin_constants(x, y, bound=bound, max_degree=max_degree, threads=threads)
    base = x.length() + y.length()
    terms = {}
    for z, p in b.terms.items():
        lam = tuple(m - e - k for m, e, k in zip(z.lam, choice.eta, choice.kappa))
        if not _lam_nonneg(lam):
            raise InconsistencyError(f"quantum parameter {lam} is not >= 0 at {z!r}")
        terms[(z.w, lam)] = -p if (z.length() - base) % 2 else p
    return QuantumSum(rs, terms, choice)


def quantum_product(u: FiniteWeylElement, v: FiniteWeylElement, *, choice: TranslationChoice | None = None,
                    strategy: str = "minimal", threads: int = 1,
                    bound: int = DEFAULT_LENGTH_BOUND) -> QuantumSum:
    """sigma^u * sigma^v in non-equivariant quantum cohomology."""
    full = equivariant_qconstants(u, v, choice=choice, strategy=strategy, max_degree=0,
                                  threads=threads, bound=bound)
    return full.at_zero()


def gromov_witten(u: FiniteWeylElement, v: FiniteWeylElement, w: FiniteWeylElement, lam: Sequence[int],
                  *, choice: TranslationChoice | None = None, strategy: str = "minimal") -> Fraction:
    """N_{u,v}^{w,lam}, the 3-point genus-zero invariant attached to (u, v, w0 w, lam)."""
    rs = u.rs
    lam = tuple(lam)
    if not _lam_nonneg(lam) or rs.pair_rho2(lam) != u.length() + v.length() - w.length():
        return Fraction(0)
    if choice is None:
        choice = choose_translations(u, v, lam, strategy=strategy)
    mu = tuple(a + b + c for a, b, c in zip(choice.eta, choice.kappa, lam))
    z = AffineWeylElement(w, mu)
    if not z.is_min_coset_rep():
        return Fraction(0)
    x = AffineWeylElement(u, choice.eta)
    y = AffineWeylElement(v, choice.kappa)
    G = AffineWeylGroup.of(rs)
    grouped = coset_pair_sums(x, y)
    lcd = common_denominator(grouped.values())
    num = Polynomial(nvars_of(rs))
    for key, c in grouped.items():
        d = d_bracket(z, G.coset_min_of_key(key))
        if not d.is_zero():
            num = num + numerator_over(c, lcd) * d
    value = RationalForm(num, lcd).as_constant()
    if value is None:
        raise InconsistencyError(f"N_{{u,v}}^{{w,lam}} did not reduce to a constant")
    return value


def classical_constants(u: FiniteWeylElement, v: FiniteWeylElement) -> FormalSum:
    """The lam = 0 oracle: equivariant structure constants of H_T^*(G/B)."""
    return gb_equivariant_constants(u, v)
