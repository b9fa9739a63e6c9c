"""The affine Weyl group W_af = W x| Q^vee.

An element ``AffineWeylElement(w, lam)`` stands for ``w t_lam``.  Products follow
``(w t_l)(w' t_l') = (w w') t_{w'^-1(l) + l'}`` and the group acts on real
affine roots ``gamma + m delta`` by ``w t_l . (gamma + m delta) =
w(gamma) + (m - <l, gamma>) delta``.  The affine simple reflection is
``s_0 = sigma_theta t_{-theta^vee}``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .rootsystem import BoundExceeded, FiniteWeylElement, RootSystem, is_positive_root

DEFAULT_LENGTH_BOUND = 24


@dataclass(frozen=True)
class AffineRoot:
    gamma: tuple
    m: int

    def is_positive(self) -> bool:
        return self.m > 0 or (self.m == 0 and is_positive_root(self.gamma))

    def __neg__(self) -> "AffineRoot":
        return AffineRoot(tuple(-g for g in self.gamma), -self.m)


class AffineWeylElement:
    __slots__ = ("w", "lam", "_hash", "_len", "_word", "_inv")

    def __init__(self, w: FiniteWeylElement, lam: Sequence[int]):
        self.w = w
        self.lam = tuple(lam)
        self._hash = hash((w._hash, self.lam))
        self._len = None
        self._word = None
        self._inv = None

    @property
    def rs(self) -> RootSystem:
        return self.w.rs

    def __eq__(self, other):
        return isinstance(other, AffineWeylElement) and self.lam == other.lam and self.w == other.w

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return "<" + ("".join(f"s{i}" for i in self.reduced_word()) or "id") + ">"

    def __mul__(self, other: "AffineWeylElement") -> "AffineWeylElement":
        lam = other.w.inverse().act_coroot(self.lam)
        return AffineWeylElement(self.w * other.w, tuple(a + b for a, b in zip(lam, other.lam)))

    def inverse(self) -> "AffineWeylElement":
        if self._inv is None:
            wi = self.w.inverse()
            self._inv = AffineWeylElement(wi, tuple(-x for x in self.w.act_coroot(self.lam)))
            self._inv._inv = self
        return self._inv

    def act(self, r: AffineRoot) -> AffineRoot:
        return AffineRoot(self.w.act_root(r.gamma), r.m - self.rs.pairing(self.lam, r.gamma))

    def is_descent(self, i: int) -> bool:
        """True when ``l(x s_i) < l(x)``, i.e. x sends alpha_i to a negative root."""
        rs = self.rs
        if i == 0:
            theta = rs.theta
            m = 1 + rs.pairing(self.lam, theta)
            if m != 0:
                return m < 0
            return is_positive_root(self.w.act_root(theta))
        m = -rs.pairing(self.lam, rs.simple_roots[i - 1])
        if m != 0:
            return m < 0
        return self.w.is_descent(i)

    def length(self) -> int:
        """Number of positive real roots made negative, summed root by root.

        For beta in R^+ the roots beta + k delta and -beta + k delta contribute
        ``|<lam, beta> + [w(beta) < 0]|`` inversions in total.
        """
        if self._len is None:
            rs = self.rs
            total = 0
            for b in rs.positive_roots:
                p = rs.pairing(self.lam, b)
                if not is_positive_root(self.w.act_root(b)):
                    p += 1
                total += abs(p)
            self._len = total
        return self._len

    def reduced_word(self) -> tuple[int, ...]:
        """Greedy descent: peel the smallest right descent until the identity."""
        if self._word is None:
            group = AffineWeylGroup.of(self.rs)
            letters = []
            x = self
            n = self.rs.rank
            while not x.is_identity():
                i = next(k for k in range(n + 1) if x.is_descent(k))
                letters.append(i)
                x = x * group.s(i)
            self._word = tuple(reversed(letters))
        return self._word

    def is_identity(self) -> bool:
        return self.w.is_identity() and not any(self.lam)

    def is_min_coset_rep(self) -> bool:
        """Membership in W_af^-: antidominant lam, and w(alpha_i) > 0 where <lam, alpha_i> = 0."""
        rs = self.rs
        for i, a in enumerate(rs.simple_roots, start=1):
            p = rs.pairing(self.lam, a)
            if p > 0 or (p == 0 and self.w.is_descent(i)):
                return False
        return True

    def coset_key(self) -> tuple:
        """The coroot mu with x W = t_mu W."""
        return self.w.act_coroot(self.lam)


class AffineWeylGroup:
    """Per-root-system helpers and memo tables for W_af."""

    _instances: dict = {}

    def __init__(self, rs: RootSystem):
        self.rs = rs
        n = rs.rank
        zero = (0,) * n
        self.identity = AffineWeylElement(rs.identity, zero)
        s0 = AffineWeylElement(rs.reflection(rs.theta), tuple(-x for x in rs.theta_coroot))
        self._simple = (s0,) + tuple(AffineWeylElement(rs.s(i), zero) for i in range(1, n + 1))
        self._leq: dict = {}
        self._coset_min: dict = {}

    @classmethod
    def of(cls, rs: "RootSystem | str") -> "AffineWeylGroup":
        if isinstance(rs, str):
            rs = RootSystem.of(rs)
        g = cls._instances.get(rs)
        if g is None:
            g = cls._instances[rs] = cls(rs)
        return g

    def s(self, i: int) -> AffineWeylElement:
        if not 0 <= i <= self.rs.rank:
            raise ValueError(f"simple reflection index {i} out of range 0..{self.rs.rank}")
        return self._simple[i]

    simple_reflection = s

    def element(self, w: "FiniteWeylElement | Sequence[int]" = (), lam: Sequence[int] | None = None):
        if not isinstance(w, FiniteWeylElement):
            w = self.rs.word(tuple(w))
        if lam is None:
            lam = (0,) * self.rs.rank
        if len(lam) != self.rs.rank:
            raise ValueError("dimension mismatch")
        return AffineWeylElement(w, lam)

    def translation(self, lam: Sequence[int]) -> AffineWeylElement:
        return AffineWeylElement(self.rs.identity, lam)

    def from_word(self, word: Iterable[int]) -> AffineWeylElement:
        x = self.identity
        for i in word:
            x = x * self.s(i)
        return x

    def is_reduced(self, word: Sequence[int]) -> bool:
        x = self.identity
        for i in word:
            if x.is_descent(i):
                return False
            x = x * self.s(i)
        return True

    # cosets x W

    def coset_min(self, x: AffineWeylElement) -> AffineWeylElement:
        key = x.coset_key()
        hit = self._coset_min.get(key)
        if hit is None:
            y = x
            n = self.rs.rank
            while True:
                i = next((k for k in range(1, n + 1) if y.is_descent(k)), None)
                if i is None:
                    break
                y = y * self._simple[i]
            hit = self._coset_min[key] = y
        return hit

    def coset_min_of_key(self, key: Sequence[int]) -> AffineWeylElement:
        return self.coset_min(self.translation(key))

    def coset_translation(self, x: AffineWeylElement) -> AffineWeylElement:
        return self.translation(x.coset_key())

    # Bruhat order

    def bruhat_leq(self, x: AffineWeylElement, y: AffineWeylElement) -> bool:
        """x <= y, decided by descending along right descents of y."""
        memo = self._leq
        stack = []
        result = None
        while True:
            key = (x, y)
            if key in memo:
                result = memo[key]
                break
            lx, ly = x.length(), y.length()
            if lx > ly:
                result = False
                break
            if lx == ly:
                result = x == y
                break
            if x.is_identity():
                result = True
                break
            stack.append(key)
            i = next(k for k in range(self.rs.rank + 1) if y.is_descent(k))
            s = self._simple[i]
            if x.is_descent(i):
                x = x * s
            y = y * s
        memo[key] = result
        for k in stack:
            memo[k] = result
        return result

    def lower_cone(self, x: AffineWeylElement, bound: int = DEFAULT_LENGTH_BOUND) -> set:
        """Every y <= x, as the set of subword products of one reduced word."""
        if x.length() > bound:
            raise BoundExceeded(f"length {x.length()} exceeds bound {bound}")
        cone = {self.identity}
        for i in x.reduced_word():
            s = self._simple[i]
            cone |= {y * s for y in cone}
        return cone

    bruhat_lower_cone = lower_cone

    def elements_up_to(self, length: int) -> list[AffineWeylElement]:
        """All elements of length <= ``length``, graded by length."""
        out = [self.identity]
        frontier = [self.identity]
        for _ in range(length):
            nxt = {}
            for x in frontier:
                for i in range(self.rs.rank + 1):
                    if not x.is_descent(i):
                        y = x * self._simple[i]
                        nxt.setdefault(y, None)
            frontier = list(nxt)
            out.extend(frontier)
        return out

    def min_coset_reps_up_to(self, length: int) -> list[AffineWeylElement]:
        return [x for x in self.elements_up_to(length) if x.is_min_coset_rep()]


def act_affine(x: AffineWeylElement, r: AffineRoot) -> AffineRoot:
    return x.act(r)
