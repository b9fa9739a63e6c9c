"""Finite root data and Weyl groups for the simple Lie types A_n through G_2.

Roots live in simple-root coordinates, coroots in simple-coroot coordinates.
With ``cartan[i][j] = <alpha_i^vee, alpha_j>`` the pairing of a coroot vector
``mu`` with a root vector ``beta`` is ``sum_ij mu_i cartan[i][j] beta_j``.

Weyl group elements are stored by the images of the simple roots (and, for
convenience, of the simple coroots); words are only a derived view.

>>> rs = RootSystem.of("A2")
>>> rs.positive_roots
((1, 0), (0, 1), (1, 1))
>>> rs.word(1, 2, 1) == rs.longest_element()
True
"""

from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from .errors import BoundExceeded, InadmissibleType

Vec = tuple  # tuple of ints (roots / coroots) or Fractions (weights)

DEFAULT_WEYL_BOUND = 60_000


_RANKS = {
    "A": lambda n: n >= 1,
    "B": lambda n: n >= 2,
    "C": lambda n: n >= 2,
    "D": lambda n: n >= 3,
    "E": lambda n: n in (6, 7, 8),
    "F": lambda n: n == 4,
    "G": lambda n: n == 2,
}


@dataclass(frozen=True)
class LieType:
    family: str
    rank: int

    def __post_init__(self):
        if self.family not in _RANKS or not _RANKS[self.family](self.rank):
            raise InadmissibleType(f"no simple Lie type {self.family}{self.rank}")

    @classmethod
    def parse(cls, text: str) -> "LieType":
        m = re.fullmatch(r"\s*([A-Ga-g])\s*(\d+)\s*", text)
        if not m:
            raise InadmissibleType(f"cannot parse Lie type {text!r}")
        return cls(m.group(1).upper(), int(m.group(2)))

    def __str__(self):
        return f"{self.family}{self.rank}"


def _gram(t: LieType) -> list[list[int]]:
    """Symmetric Gram matrix of the simple roots, scaled to integers."""
    n = t.rank
    norms = [2] * n
    edges: dict[tuple[int, int], int] = {}
    f = t.family
    if f in "ADE":
        if f == "A":
            chain = [(i, i + 1) for i in range(n - 1)]
        elif f == "D":
            chain = [(i, i + 1) for i in range(n - 2)] + [(n - 3, n - 1)]
        else:
            chain = [(0, 2), (2, 3), (3, 4), (1, 3)] + [(k, k + 1) for k in range(4, n - 1)]
        for e in chain:
            edges[e] = -1
    elif f == "B":
        norms = [4] * (n - 1) + [2]
        for i in range(n - 1):
            edges[(i, i + 1)] = -2
    elif f == "C":
        norms = [2] * (n - 1) + [4]
        for i in range(n - 2):
            edges[(i, i + 1)] = -1
        edges[(n - 2, n - 1)] = -2
    elif f == "F":
        norms = [4, 4, 2, 2]
        edges = {(0, 1): -2, (1, 2): -2, (2, 3): -1}
    elif f == "G":
        norms = [2, 6]
        edges = {(0, 1): -3}
    g = [[0] * n for _ in range(n)]
    for i in range(n):
        g[i][i] = norms[i]
    for (i, j), v in edges.items():
        g[i][j] = g[j][i] = v
    return g


def _inverse(m: Sequence[Sequence[int]]) -> list[list[Fraction]]:
    n = len(m)
    a = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(m)]
    for col in range(n):
        piv = next(r for r in range(col, n) if a[r][col] != 0)
        a[col], a[piv] = a[piv], a[col]
        p = a[col][col]
        a[col] = [x / p for x in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return [row[n:] for row in a]


def is_positive_root(beta: Vec) -> bool:
    return sum(beta) > 0


class FiniteWeylElement:
    """An element of W, identified by ``images[j] = w(alpha_j)``."""

    __slots__ = ("rs", "images", "coimages", "_hash", "_inv", "_len", "_word")

    def __init__(self, rs: "RootSystem", images, coimages):
        self.rs = rs
        self.images = images
        self.coimages = coimages
        self._hash = hash((rs.lie_type, images))
        self._inv = None
        self._len = None
        self._word = None

    def __eq__(self, other):
        return (isinstance(other, FiniteWeylElement) and self.images == other.images
                and (self.rs is other.rs or self.rs.lie_type == other.rs.lie_type))

    def __hash__(self):
        return self._hash

    def __repr__(self):
        w = "".join(f"s{i}" for i in self.reduced_word()) or "id"
        return f"<{w}>"

    def __mul__(self, other: "FiniteWeylElement") -> "FiniteWeylElement":
        return self.rs._mul(self, other)

    def act_root(self, beta: Vec) -> Vec:
        n = len(beta)
        out = [0] * n
        for b, img in zip(beta, self.images):
            if b:
                for k in range(n):
                    out[k] += b * img[k]
        return tuple(out)

    act_weight = act_root

    def act_coroot(self, lam: Vec) -> Vec:
        n = len(lam)
        out = [0] * n
        for b, img in zip(lam, self.coimages):
            if b:
                for k in range(n):
                    out[k] += b * img[k]
        return tuple(out)

    def inverse(self) -> "FiniteWeylElement":
        if self._inv is None:
            rs = self.rs
            pre = {self.act_root(b): b for b in rs.roots}
            imgs = tuple(pre[a] for a in rs.simple_roots)
            inv = FiniteWeylElement(rs, imgs, tuple(rs.coroot_of(b) for b in imgs))
            inv._inv = self
            self._inv = inv
        return self._inv

    def is_descent(self, i: int) -> bool:
        """True when s_i (1-based) is a right descent, i.e. w(alpha_i) < 0."""
        return not is_positive_root(self.images[i - 1])

    def length(self) -> int:
        if self._len is None:
            self._len = sum(1 for b in self.rs.positive_roots
                            if not is_positive_root(self.act_root(b)))
        return self._len

    def reduced_word(self) -> tuple[int, ...]:
        """Reduced word over 1..n, peeling the smallest right descent each step."""
        if self._word is None:
            letters = []
            w = self
            rs = self.rs
            while not w.is_identity():
                i = next(k for k in range(1, rs.rank + 1) if w.is_descent(k))
                letters.append(i)
                w = w * rs.s(i)
            self._word = tuple(reversed(letters))
        return self._word

    def is_identity(self) -> bool:
        return self.images == self.rs._id_images


class RootSystem:
    """Root data of a finite simple type; immutable after construction."""

    def __init__(self, lie_type: LieType, weyl_bound: int = DEFAULT_WEYL_BOUND):
        self.lie_type = lie_type
        self.rank = n = lie_type.rank
        self.weyl_bound = weyl_bound
        g = _gram(lie_type)
        self.cartan = tuple(tuple(2 * g[i][j] // g[i][i] for j in range(n)) for i in range(n))
        self.simple_roots = tuple(tuple(int(i == j) for j in range(n)) for i in range(n))
        self.simple_coroots = self.simple_roots
        self._id_images = self.simple_roots

        self._coroot = self._close_roots()
        self.roots = tuple(self._coroot)
        pos = [b for b in self.roots if is_positive_root(b)]
        pos.sort(key=lambda b: (sum(b), tuple(-x for x in b)))
        self.positive_roots = tuple(pos)
        self.theta = max(pos, key=sum)
        self.theta_coroot = self.coroot_of(self.theta)
        self.rho2 = tuple(sum(b[k] for b in pos) for k in range(n))

        cinv = _inverse(self.cartan)
        # <alpha_j^vee, w_i> = delta_ij  =>  w_i = column i of C^{-1}
        self.fundamental_weights = tuple(tuple(cinv[k][i] for k in range(n)) for i in range(n))
        # <w_i^vee, alpha_j> = delta_ij  =>  w_i^vee = row i of C^{-1}
        self.fundamental_coweights = tuple(tuple(cinv[i][k] for k in range(n)) for i in range(n))

        self.identity = FiniteWeylElement(self, self.simple_roots, self.simple_coroots)
        self._simple = tuple(self._reflection_elt(a) for a in self.simple_roots)
        self._mul_cache: dict = {}

    @classmethod
    def of(cls, t: "str | LieType") -> "RootSystem":
        if isinstance(t, str):
            t = LieType.parse(t)
        return _cached_root_system(t)

    def __repr__(self):
        return f"RootSystem({self.lie_type})"

    # pairings and reflections

    def pairing(self, mu: Sequence, beta: Sequence):
        n = self.rank
        if len(mu) != n or len(beta) != n:
            raise ValueError("dimension mismatch")
        c = self.cartan
        return sum(mu[i] * c[i][j] * beta[j] for i in range(n) if mu[i] for j in range(n) if beta[j])

    def _reflect_root(self, i: int, beta: Vec) -> Vec:
        # s_i(beta) = beta - <alpha_i^vee, beta> alpha_i   (i 0-based)
        p = sum(self.cartan[i][j] * beta[j] for j in range(self.rank))
        out = list(beta)
        out[i] -= p
        return tuple(out)

    def _reflect_coroot(self, i: int, lam: Vec) -> Vec:
        # s_i(lam) = lam - <lam, alpha_i> alpha_i^vee
        p = sum(lam[j] * self.cartan[j][i] for j in range(self.rank))
        out = list(lam)
        out[i] -= p
        return tuple(out)

    def _close_roots(self) -> dict:
        coroot = {a: a for a in self.simple_roots}
        queue = deque(self.simple_roots)
        while queue:
            b = queue.popleft()
            bv = coroot[b]
            for i in range(self.rank):
                nb = self._reflect_root(i, b)
                nbv = self._reflect_coroot(i, bv)
                if nb in coroot:
                    if coroot[nb] != nbv:
                        raise AssertionError("coroot assignment is not well defined")
                    continue
                coroot[nb] = nbv
                queue.append(nb)
        return coroot

    def coroot_of(self, gamma: Sequence[int]) -> Vec:
        try:
            return self._coroot[tuple(gamma)]
        except KeyError:
            raise ValueError(f"{tuple(gamma)} is not a root") from None

    def is_root(self, gamma: Sequence[int]) -> bool:
        return tuple(gamma) in self._coroot

    def is_antidominant(self, lam: Sequence[int]) -> bool:
        return all(self.pairing(lam, a) <= 0 for a in self.simple_roots)

    def height(self, lam: Sequence[int]) -> int:
        return sum(lam)

    def pair_rho2(self, lam: Sequence[int]) -> int:
        """<lam, 2 rho> for a coroot vector (each simple coroot pairs to 2)."""
        return 2 * sum(lam)

    # Weyl group

    def _reflection_elt(self, gamma: Vec) -> FiniteWeylElement:
        gv = self.coroot_of(gamma)
        imgs = []
        coimgs = []
        for a in self.simple_roots:
            p = self.pairing(gv, a)
            imgs.append(tuple(x - p * y for x, y in zip(a, gamma)))
            q = self.pairing(a, gamma)
            coimgs.append(tuple(x - q * y for x, y in zip(a, gv)))
        return FiniteWeylElement(self, tuple(imgs), tuple(coimgs))

    def reflection(self, gamma: Sequence[int]) -> FiniteWeylElement:
        """sigma_gamma for a root gamma."""
        return self._reflection_elt(tuple(gamma))

    def s(self, i: int) -> FiniteWeylElement:
        if not 1 <= i <= self.rank:
            raise ValueError(f"simple reflection index {i} out of range 1..{self.rank}")
        return self._simple[i - 1]

    def word(self, *letters: int) -> FiniteWeylElement:
        if len(letters) == 1 and not isinstance(letters[0], int):
            letters = tuple(letters[0])
        w = self.identity
        for i in letters:
            w = w * self.s(i)
        return w

    finite_weyl = word

    def _mul(self, a: FiniteWeylElement, b: FiniteWeylElement) -> FiniteWeylElement:
        key = (a.images, b.images)
        hit = self._mul_cache.get(key)
        if hit is not None:
            return hit
        imgs = tuple(a.act_root(x) for x in b.images)
        coimgs = tuple(a.act_coroot(x) for x in b.coimages)
        out = FiniteWeylElement(self, imgs, coimgs)
        if len(self._mul_cache) < 500_000:
            self._mul_cache[key] = out
        return out

    def weyl_order(self) -> int:
        from math import factorial
        t = self.lie_type
        n = t.rank
        return {
            "A": lambda: factorial(n + 1),
            "B": lambda: 2 ** n * factorial(n),
            "C": lambda: 2 ** n * factorial(n),
            "D": lambda: 2 ** (n - 1) * factorial(n),
            "E": lambda: {6: 51840, 7: 2903040, 8: 696729600}[n],
            "F": lambda: 1152,
            "G": lambda: 12,
        }[t.family]()

    def enumerate_weyl(self) -> list[FiniteWeylElement]:
        """All of W in breadth-first (hence length-graded) order."""
        if self.weyl_order() > self.weyl_bound:
            raise BoundExceeded(f"|W| = {self.weyl_order()} exceeds bound {self.weyl_bound}")
        seen = {self.identity}
        order = [self.identity]
        frontier = [self.identity]
        while frontier:
            nxt = []
            for w in frontier:
                for i in range(1, self.rank + 1):
                    if not w.is_descent(i):
                        v = w * self.s(i)
                        if v not in seen:
                            seen.add(v)
                            nxt.append(v)
            order.extend(nxt)
            frontier = nxt
        return order

    def longest_element(self) -> FiniteWeylElement:
        w = self.identity
        while True:
            i = next((k for k in range(1, self.rank + 1) if not w.is_descent(k)), None)
            if i is None:
                return w
            w = w * self.s(i)

    def antidominant_conjugate(self, lam: Sequence[int]) -> tuple[Vec, FiniteWeylElement]:
        """Return ``(lam', w)`` with ``lam' = w(lam)`` antidominant."""
        lam = tuple(lam)
        w = self.identity
        while True:
            i = next((k for k in range(self.rank)
                      if self.pairing(lam, self.simple_roots[k]) > 0), None)
            if i is None:
                return lam, w
            lam = self._reflect_coroot(i, lam)
            w = self._simple[i] * w

    def weight_to_root_coords(self, pairings: Iterable) -> Vec:
        """The weight with ``<alpha_i^vee, .> = pairings[i]``, in root coordinates."""
        out = [Fraction(0)] * self.rank
        for p, wi in zip(pairings, self.fundamental_weights):
            for k in range(self.rank):
                out[k] += p * wi[k]
        return tuple(out)


@lru_cache(maxsize=None)
def _cached_root_system(t: LieType) -> RootSystem:
    return RootSystem(t)


def build_root_system(t: "str | LieType") -> RootSystem:
    return RootSystem.of(t)
