"""Exact scalars: polynomials over Q in alpha_1..alpha_n and delta, linear
forms, and rational forms whose denominators are products of linear forms.

Every denominator met in Schubert calculus on W_af is a product of real
roots, so cancellation only ever needs exact trial division by a linear
form; no multivariate gcd is required.

Variables are indexed ``0..n-1`` for alpha_1..alpha_n and ``n`` for delta.
Monomials are packed into one integer, ``BITS`` bits per exponent, which
makes monomial multiplication a single integer addition.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Sequence

BITS = 16
MASK = (1 << BITS) - 1


class ZeroDenominator(ArithmeticError):
    pass


def _pack(exps: Sequence[int]) -> int:
    key = 0
    for k, e in enumerate(exps):
        if not 0 <= e <= MASK:
            raise OverflowError("exponent out of range")
        key |= e << (BITS * k)
    return key


def _unpack(key: int, nvars: int) -> tuple[int, ...]:
    return tuple((key >> (BITS * k)) & MASK for k in range(nvars))


def _frac(c) -> Fraction | int:
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


def _mul_terms(a: Mapping, b: Mapping) -> dict:
    out: dict = {}
    get = out.get
    for ka, ca in a.items():
        for kb, cb in b.items():
            k = ka + kb
            out[k] = get(k, 0) + ca * cb
    return {k: v for k, v in out.items() if v}


def _add_into(acc: dict, terms: Mapping, scale=1) -> None:
    get = acc.get
    for k, c in terms.items():
        v = get(k, 0) + scale * c
        if v:
            acc[k] = v
        else:
            acc.pop(k, None)


class Polynomial:
    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Mapping[int, object] | None = None):
        self.nvars = nvars
        self.terms = {} if terms is None else {k: _frac(v) for k, v in terms.items() if v}

    @classmethod
    def _raw(cls, nvars: int, terms: dict) -> "Polynomial":
        p = cls.__new__(cls)
        p.nvars = nvars
        p.terms = terms
        return p

    @classmethod
    def constant(cls, nvars: int, c) -> "Polynomial":
        return cls(nvars, {0: c})

    @classmethod
    def variable(cls, nvars: int, k: int) -> "Polynomial":
        return cls._raw(nvars, {1 << (BITS * k): 1})

    @classmethod
    def from_exponents(cls, nvars: int, items: Iterable[tuple[Sequence[int], object]]) -> "Polynomial":
        terms: dict = {}
        for exps, c in items:
            _add_into(terms, {_pack(exps): Fraction(c)})
        return cls(nvars, terms)

    # structure

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def items(self):
        """(exponent tuple, coefficient) pairs in display order."""
        keys = sorted(self.terms, key=self._order_key, reverse=True)
        return [(_unpack(k, self.nvars), self.terms[k]) for k in keys]

    def _order_key(self, key: int):
        e = _unpack(key, self.nvars)
        return (sum(e),) + tuple(reversed(e))

    def degrees(self) -> set[int]:
        return {sum(_unpack(k, self.nvars)) for k in self.terms}

    def degree(self) -> int:
        return max(self.degrees(), default=-1)

    def homogeneous_degree(self) -> int | None:
        """The common degree of all terms, or None if inhomogeneous or zero."""
        d = self.degrees()
        return d.pop() if len(d) == 1 else None

    def constant_term(self):
        return self.terms.get(0, 0)

    def involves_delta(self) -> bool:
        shift = BITS * (self.nvars - 1)
        return any((k >> shift) & MASK for k in self.terms)

    # arithmetic

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            return other
        if isinstance(other, LinearForm):
            return other.to_polynomial()
        if isinstance(other, (int, Fraction)):
            return Polynomial.constant(self.nvars, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self.terms)
        _add_into(out, other.terms)
        return Polynomial._raw(self.nvars, out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw(self.nvars, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self.terms)
        _add_into(out, other.terms, -1)
        return Polynomial._raw(self.nvars, out)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return Polynomial._raw(self.nvars, {})
            return Polynomial._raw(self.nvars, {k: _frac(v * other) for k, v in self.terms.items()})
        if isinstance(other, RationalForm):
            return NotImplemented
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return Polynomial._raw(self.nvars, _mul_terms(self.terms, other.terms))

    __rmul__ = __mul__

    def __pow__(self, e: int):
        out = Polynomial.constant(self.nvars, 1)
        for _ in range(e):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(self.nvars, other)
        if isinstance(other, RationalForm):
            return other == self
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def divide_linear(self, f: "LinearForm") -> "Polynomial | None":
        """Exact quotient by a normalized linear form, or None if it does not divide.

        Writing f = x_v + r with x_v its leading variable, synthetic division
        in x_v gives ``Q_{d-1} = P_d - r Q_d``; the remainder ``P_0 - r Q_0``
        must vanish.
        """
        if not self.terms:
            return self
        v = f.lead
        shift = BITS * v
        groups: dict[int, dict] = {}
        for k, c in self.terms.items():
            e = (k >> shift) & MASK
            groups.setdefault(e, {})[k - (e << shift)] = c
        top = max(groups)
        if top == 0:
            return None
        rest = f.tail_terms()
        quotient: dict = {}
        cur = groups[top]
        for d in range(top, 0, -1):
            lift = (d - 1) << shift
            for k, c in cur.items():
                quotient[k + lift] = c
            nxt = dict(groups.get(d - 1, ()))
            _add_into(nxt, _mul_terms(rest, cur), -1)
            cur = nxt
        if cur:
            return None
        return Polynomial._raw(self.nvars, quotient)

    # evaluation and substitution

    def eval_delta_zero(self) -> "Polynomial":
        shift = BITS * (self.nvars - 1)
        return Polynomial._raw(self.nvars, {k: c for k, c in self.terms.items() if not (k >> shift) & MASK})

    def at_zero(self):
        """Specialize every variable to 0."""
        return self.constant_term()

    def evaluate(self, point: Sequence) -> Fraction:
        total = Fraction(0)
        for exps, c in self.items():
            term = Fraction(c)
            for x, e in zip(point, exps):
                if e:
                    term *= Fraction(x) ** e
            total += term
        return total

    def substitute(self, images: Sequence["LinearForm"]) -> "Polynomial":
        """Replace variable k by the linear form ``images[k]``."""
        powers: list[list[dict]] = [[{0: 1}] for _ in range(self.nvars)]
        out: dict = {}
        for key, c in self.terms.items():
            exps = _unpack(key, self.nvars)
            term = {0: c}
            for k, e in enumerate(exps):
                if e:
                    pk = powers[k]
                    while len(pk) <= e:
                        pk.append(_mul_terms(pk[-1], images[k].terms_dict()))
                    term = _mul_terms(term, pk[e])
            _add_into(out, term)
        return Polynomial._raw(self.nvars, out)

    # display and serialization

    def __repr__(self):
        return f"Polynomial({self})"

    def __str__(self):
        return format_poly(self)

    def to_json(self) -> list:
        return [{"exp": list(e), "coef": str(Fraction(c))} for e, c in self.items()]

    @classmethod
    def from_json(cls, nvars: int, data: list) -> "Polynomial":
        return cls.from_exponents(nvars, ((d["exp"], Fraction(d["coef"])) for d in data))


def var_names(nvars: int) -> list[str]:
    return [f"a{k + 1}" for k in range(nvars - 1)] + ["d"]


def _fmt_coef(c) -> str:
    return str(Fraction(c))


def format_poly(p: Polynomial) -> str:
    if p.is_zero():
        return "0"
    names = var_names(p.nvars)
    parts = []
    for exps, c in p.items():
        mono = "*".join(n if e == 1 else f"{n}^{e}" for n, e in zip(names, exps) if e)
        c = Fraction(c)
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if not mono:
            body = _fmt_coef(a)
        elif a == 1:
            body = mono
        else:
            body = f"{_fmt_coef(a)}*{mono}"
        parts.append((sign, body))
    first_sign, first = parts[0]
    s = ("-" if first_sign == "-" else "") + first
    for sign, body in parts[1:]:
        s += f" {sign} {body}"
    return s


class LinearForm:
    """A linear form sum c_k x_k over (alpha_1, ..., alpha_n, delta)."""

    __slots__ = ("coeffs", "_hash", "_poly")

    def __init__(self, coeffs: Sequence):
        self.coeffs = tuple(_frac(Fraction(c)) for c in coeffs)
        self._hash = hash(self.coeffs)
        self._poly = None

    @classmethod
    def from_root(cls, gamma: Sequence[int], m: int = 0) -> "LinearForm":
        return cls(tuple(gamma) + (m,))

    @classmethod
    def from_affine_root(cls, r) -> "LinearForm":
        return cls(tuple(r.gamma) + (r.m,))

    @property
    def nvars(self) -> int:
        return len(self.coeffs)

    def __eq__(self, other):
        return isinstance(other, LinearForm) and self.coeffs == other.coeffs

    def __hash__(self):
        return self._hash

    def __neg__(self):
        return LinearForm(tuple(-c for c in self.coeffs))

    def __add__(self, other: "LinearForm"):
        return LinearForm(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "LinearForm"):
        return LinearForm(tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def scale(self, c) -> "LinearForm":
        return LinearForm(tuple(c * x for x in self.coeffs))

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    @property
    def lead(self) -> int:
        return next(k for k, c in enumerate(self.coeffs) if c)

    def normalized(self) -> tuple[Fraction, "LinearForm"]:
        """``(c, g)`` with ``self = c * g`` and the first nonzero coefficient of g equal to 1."""
        if self.is_zero():
            raise ZeroDenominator("zero linear form")
        c = self.coeffs[self.lead]
        if c == 1:
            return Fraction(1), self
        return Fraction(c), LinearForm(tuple(Fraction(x) / c for x in self.coeffs))

    def eval_delta_zero(self) -> "LinearForm":
        return LinearForm(self.coeffs[:-1] + (0,))

    def terms_dict(self) -> dict:
        return {1 << (BITS * k): c for k, c in enumerate(self.coeffs) if c}

    def tail_terms(self) -> dict:
        v = self.lead
        return {1 << (BITS * k): c for k, c in enumerate(self.coeffs) if c and k != v}

    def to_polynomial(self) -> Polynomial:
        if self._poly is None:
            self._poly = Polynomial._raw(self.nvars, self.terms_dict())
        return self._poly

    def __repr__(self):
        return f"LinearForm({self.to_polynomial()})"

    def __str__(self):
        return str(self.to_polynomial())


class RationalForm:
    """``num / prod(den)`` with den a multiset of normalized linear forms.

    Instances are kept reduced: the numerator is not divisible by any
    denominator form.  Reduced representations are unique, so equality is
    structural.
    """

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num: Polynomial, den: Mapping[LinearForm, int] | None = None, *, reduce: bool = True):
        self.num = num
        self.den = dict(den) if den else {}
        self._hash = None
        if reduce and self.den:
            self._cancel()

    @classmethod
    def from_poly(cls, p: Polynomial) -> "RationalForm":
        return cls(p)

    @classmethod
    def constant(cls, nvars: int, c) -> "RationalForm":
        return cls(Polynomial.constant(nvars, c))

    @classmethod
    def one(cls, nvars: int) -> "RationalForm":
        return cls.constant(nvars, 1)

    @classmethod
    def zero(cls, nvars: int) -> "RationalForm":
        return cls(Polynomial(nvars))

    @classmethod
    def inverse_of(cls, forms: Iterable[LinearForm], nvars: int, scalar=1) -> "RationalForm":
        """``scalar / prod(forms)``; no cancellation is possible."""
        c = Fraction(scalar)
        den: dict = {}
        for f in forms:
            a, g = f.normalized()
            c /= a
            den[g] = den.get(g, 0) + 1
        return cls(Polynomial.constant(nvars, c), den, reduce=False)

    @property
    def nvars(self) -> int:
        return self.num.nvars

    def _cancel(self) -> None:
        num = self.num
        if num.is_zero():
            self.den = {}
            return
        den = self.den
        for f in list(den):
            k = den[f]
            while k:
                q = num.divide_linear(f)
                if q is None:
                    break
                num = q
                k -= 1
            if k:
                den[f] = k
            else:
                del den[f]
        self.num = num

    # queries

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __bool__(self):
        return not self.is_zero()

    def den_size(self) -> int:
        return sum(self.den.values())

    def is_polynomial(self) -> Polynomial | None:
        return None if self.den else self.num

    def as_constant(self):
        if self.den:
            return None
        d = self.num.degrees()
        if not d:
            return Fraction(0)
        if d != {0}:
            return None
        return Fraction(self.num.constant_term())

    def homogeneous_degree(self) -> int | None:
        d = self.num.homogeneous_degree()
        return None if d is None else d - self.den_size()

    def den_polynomial(self) -> Polynomial:
        p = Polynomial.constant(self.nvars, 1)
        for f, k in self.den.items():
            for _ in range(k):
                p = p * f.to_polynomial()
        return p

    @property
    def scalar(self) -> Fraction:
        """Leading coefficient of the numerator in display order."""
        items = self.num.items()
        return Fraction(items[0][1]) if items else Fraction(0)

    # arithmetic

    def _coerce(self, other):
        if isinstance(other, RationalForm):
            return other
        if isinstance(other, Polynomial):
            return RationalForm(other)
        if isinstance(other, LinearForm):
            return RationalForm(other.to_polynomial())
        if isinstance(other, (int, Fraction)):
            return RationalForm.constant(self.nvars, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if other.is_zero():
            return self
        if self.is_zero():
            return other
        if self.den == other.den:
            return RationalForm(self.num + other.num, self.den)
        lcd = dict(self.den)
        for f, k in other.den.items():
            if lcd.get(f, 0) < k:
                lcd[f] = k
        num = _scale_to(self, lcd) + _scale_to(other, lcd)
        return RationalForm(num, lcd)

    __radd__ = __add__

    def __neg__(self):
        return RationalForm(-self.num, self.den, reduce=False)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return RationalForm.zero(self.nvars)
        den = dict(self.den)
        for f, k in other.den.items():
            den[f] = den.get(f, 0) + k
        return RationalForm(self.num * other.num, den)

    __rmul__ = __mul__

    def divide_by_form(self, f: LinearForm) -> "RationalForm":
        a, g = f.normalized()
        den = dict(self.den)
        den[g] = den.get(g, 0) + 1
        return RationalForm(self.num * (1 / a), den)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return RationalForm(self.num * (1 / Fraction(other)), self.den, reduce=False)
        if isinstance(other, LinearForm):
            return self.divide_by_form(other)
        return NotImplemented

    def __eq__(self, other):
        if isinstance(other, (Polynomial, LinearForm, int, Fraction)):
            other = self._coerce(other)
        if not isinstance(other, RationalForm):
            return NotImplemented
        return self.den == other.den and self.num == other.num

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.num, frozenset(self.den.items())))
        return self._hash

    def eval_delta_zero(self) -> "RationalForm":
        c = Fraction(1)
        den: dict = {}
        for f, k in self.den.items():
            g = f.eval_delta_zero()
            if g.is_zero():
                raise ZeroDenominator(f"denominator form {f} vanishes at delta = 0")
            a, g = g.normalized()
            c /= a ** k
            den[g] = den.get(g, 0) + k
        return RationalForm(self.num.eval_delta_zero() * c, den)

    def substitute(self, images: Sequence[LinearForm]) -> "RationalForm":
        num = self.num.substitute(images)
        c = Fraction(1)
        den: dict = {}
        for f, k in self.den.items():
            g = LinearForm(_apply_linear(f, images))
            a, g = g.normalized()
            c /= a ** k
            den[g] = den.get(g, 0) + k
        return RationalForm(num * c, den)

    def __repr__(self):
        return f"RationalForm({self})"

    def __str__(self):
        if not self.den:
            return str(self.num)
        dens = []
        for f, k in sorted(self.den.items(), key=lambda fk: fk[0].coeffs):
            s = f"({f})"
            dens.append(s if k == 1 else f"{s}^{k}")
        return f"({self.num}) / ({'*'.join(dens)})"

    def to_json(self) -> dict:
        den = []
        for f, k in sorted(self.den.items(), key=lambda fk: fk[0].coeffs):
            den.extend([[str(Fraction(c)) for c in f.coeffs]] * k)
        sc = self.scalar or Fraction(1)
        return {"num": (self.num * (1 / sc)).to_json(), "den": den, "scalar": str(sc)}

    @classmethod
    def from_json(cls, nvars: int, data: dict) -> "RationalForm":
        num = Polynomial.from_json(nvars, data["num"]) * Fraction(data.get("scalar", "1"))
        den: dict = {}
        c = Fraction(1)
        for v in data.get("den", []):
            a, g = LinearForm([Fraction(x) for x in v]).normalized()
            c /= a
            den[g] = den.get(g, 0) + 1
        return cls(num * c, den)


def _scale_to(r: RationalForm, lcd: Mapping[LinearForm, int]) -> Polynomial:
    terms = r.num.terms
    for f, k in lcd.items():
        extra = k - r.den.get(f, 0)
        if extra:
            ft = f.terms_dict()
            for _ in range(extra):
                terms = _mul_terms(terms, ft)
    return Polynomial._raw(r.nvars, terms)


def _apply_linear(f: LinearForm, images: Sequence[LinearForm]) -> tuple:
    n = len(images)
    out = [Fraction(0)] * n
    for c, img in zip(f.coeffs, images):
        if c:
            for k in range(n):
                out[k] += c * img.coeffs[k]
    return tuple(out)


def common_denominator(values: Iterable[RationalForm]) -> dict:
    """The least common multiple (multiset max) of the denominators."""
    lcd: dict = {}
    for r in values:
        for f, k in r.den.items():
            if lcd.get(f, 0) < k:
                lcd[f] = k
    return lcd


def numerator_over(r: RationalForm, lcd: Mapping[LinearForm, int]) -> Polynomial:
    """The polynomial N with ``r = N / prod(lcd)``."""
    return _scale_to(r, lcd)


# the W_af action on forms

def affine_images(x, nvars: int | None = None) -> list[LinearForm]:
    """Images of alpha_1..alpha_n, delta under ``x = w t_lam``."""
    rs = x.rs
    n = rs.rank
    out = []
    for i, a in enumerate(rs.simple_roots):
        out.append(LinearForm(x.w.images[i] + (-rs.pairing(x.lam, a),)))
    out.append(LinearForm((0,) * n + (1,)))
    return out


def act_form(x, f):
    """Apply an affine (or finite) Weyl element to a LinearForm, Polynomial or RationalForm."""
    if not hasattr(x, "lam"):
        from .affine import AffineWeylElement
        x = AffineWeylElement(x, (0,) * x.rs.rank)
    images = affine_images(x)
    if isinstance(f, LinearForm):
        return LinearForm(_apply_linear(f, images))
    return f.substitute(images)


def root_form(gamma: Sequence[int], m: int = 0) -> LinearForm:
    return LinearForm.from_root(gamma, m)


def root_poly(gamma: Sequence[int], m: int = 0) -> Polynomial:
    return LinearForm.from_root(gamma, m).to_polynomial()


def product_of_forms(forms: Iterable[LinearForm], nvars: int) -> Polynomial:
    p = Polynomial.constant(nvars, 1)
    for f in forms:
        p = p * f.to_polynomial()
    return p
