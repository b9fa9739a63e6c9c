"""Independent brute-force oracle for classical Schubert structure constants.

Rational cohomology of G/B is generated in degree two, so the operator
``M_v = (. sigma^v)`` is pinned down degree by degree by
``M_v(sigma^{s_i} sigma^u) = sigma^{s_i} M_v(sigma^u)`` together with the
classical Chevalley rule.  Each degree is an exact linear solve.
"""

from __future__ import annotations

from fractions import Fraction

from .rootsystem import FiniteWeylElement, RootSystem


def _gamma1(u: FiniteWeylElement) -> list:
    rs = u.rs
    lu = u.length()
    return [g for g in rs.positive_roots if (u * rs.reflection(g)).length() == lu + 1]


def classical_chevalley(i: int, u: FiniteWeylElement) -> dict:
    """sigma^{s_i} sigma^u = sum_{Gamma_1(u)} <g^vee, w_i> sigma^{u s_g}."""
    rs = u.rs
    out: dict = {}
    for g in _gamma1(u):
        c = rs.coroot_of(g)[i - 1]
        if c:
            w = u * rs.reflection(g)
            out[w] = out.get(w, 0) + c
    return out


def _mul_divisor(i: int, vec: dict) -> dict:
    out: dict = {}
    for w, c in vec.items():
        for w2, k in classical_chevalley(i, w).items():
            out[w2] = out.get(w2, 0) + c * k
    return {w: c for w, c in out.items() if c}


def _solve(rows: list, rhs: list, ncols: int) -> list:
    """Exact least solution of an overdetermined, consistent system (vector-valued rhs)."""
    A = [[Fraction(x) for x in r] for r in rows]
    B = [dict(b) for b in rhs]
    pivots = []
    r = 0
    for c in range(ncols):
        p = next((k for k in range(r, len(A)) if A[k][c] != 0), None)
        if p is None:
            raise ArithmeticError("degree-two classes do not span this degree")
        A[r], A[p] = A[p], A[r]
        B[r], B[p] = B[p], B[r]
        piv = A[r][c]
        A[r] = [x / piv for x in A[r]]
        B[r] = {k: v / piv for k, v in B[r].items()}
        for k in range(len(A)):
            if k != r and A[k][c] != 0:
                f = A[k][c]
                A[k] = [a - f * b for a, b in zip(A[k], A[r])]
                nb = dict(B[k])
                for key, v in B[r].items():
                    nb[key] = nb.get(key, 0) - f * v
                B[k] = {key: v for key, v in nb.items() if v}
        pivots.append(c)
        r += 1
    for k in range(r, len(A)):
        if B[k]:
            raise ArithmeticError("inconsistent Chevalley system")
    return B[:ncols]


class ClassicalOracle:
    """Cup-product constants of H^*(G/B; Q) by Chevalley iteration."""

    def __init__(self, rs: RootSystem):
        self.rs = rs
        self.by_length: dict = {}
        for w in rs.enumerate_weyl():
            self.by_length.setdefault(w.length(), []).append(w)
        self._tables: dict = {}

    def products_with(self, v: FiniteWeylElement) -> dict:
        """``{u: {w: c}}`` with sigma^u sigma^v = sum c sigma^w."""
        if v in self._tables:
            return self._tables[v]
        rs = self.rs
        table = {rs.identity: {v: Fraction(1)}}
        for k in range(1, max(self.by_length) + 1):
            cols = self.by_length[k]
            index = {w: j for j, w in enumerate(cols)}
            rows, rhs = [], []
            for u in self.by_length[k - 1]:
                for i in range(1, rs.rank + 1):
                    row = [0] * len(cols)
                    for w, c in classical_chevalley(i, u).items():
                        row[index[w]] += c
                    rows.append(row)
                    rhs.append(_mul_divisor(i, table[u]))
            for w, val in zip(cols, _solve(rows, rhs, len(cols))):
                table[w] = val
        self._tables[v] = table
        return table

    def product(self, u: FiniteWeylElement, v: FiniteWeylElement) -> dict:
        return self.products_with(v)[u]
