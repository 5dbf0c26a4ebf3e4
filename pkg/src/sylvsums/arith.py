"""Exact scalar and polynomial arithmetic over the rationals.

Scalars are :class:`fractions.Fraction` values (aliased ``Rat``).  Two
polynomial types are provided:

* :class:`UniPoly` -- dense univariate polynomial in ``x``, ascending
  coefficients, no trailing zeros.
* :class:`BiPoly` -- polynomial in ``x`` and ``T`` stored as a list of
  :class:`UniPoly` coefficients of ``T^0, T^1, ...``.

Both are immutable and canonical, so ``==`` is structural equality.
"""
from __future__ import annotations

import math
import re
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Sequence

from .errors import DomainError, NonMonicError

Rat = Fraction

#: Degree of the zero polynomial; compares below every integer.
ZERO_DEGREE = -math.inf

_RAT_RE = re.compile(r"^(-?\d+)(?:/(\d+))?$")

_ZERO = Fraction(0)
_ONE = Fraction(1)


def parse_rat(text: str) -> Fraction:
    """Parse ``-3/4``, ``7`` and the like.  Anything else raises ``ValueError``."""
    s = text.strip().replace("−", "-")
    match = _RAT_RE.match(s)
    if match is None:
        raise ValueError(f"malformed rational literal: {text!r}")
    num = int(match.group(1))
    den = int(match.group(2)) if match.group(2) is not None else 1
    if den == 0:
        raise ValueError(f"malformed rational literal (zero denominator): {text!r}")
    return Fraction(num, den)


def as_rat(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, Rational)):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rat(value)
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


def binomial(n: int, k: int) -> int:
    """C(n, k), with C(n, k) = 0 whenever k < 0 or k > n."""
    if n < 0:
        raise DomainError(f"binomial: n must be non-negative, got {n}")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def sign_pow(e: int) -> Fraction:
    """(-1)**e for any integer e."""
    return _ONE if e % 2 == 0 else -_ONE


def _fmt_coeff_term(c: Fraction, mono: str) -> str:
    if not mono:
        return str(c)
    if c == 1:
        return mono
    return f"{c}*{mono}"


def _join_terms(terms: list[tuple[Fraction, str]]) -> str:
    if not terms:
        return "0"
    out = []
    for idx, (c, mono) in enumerate(terms):
        body = _fmt_coeff_term(abs(c), mono)
        if idx == 0:
            out.append(("-" if c < 0 else "") + body)
        else:
            out.append((" - " if c < 0 else " + ") + body)
    return "".join(out)


def _x_mono(i: int) -> str:
    if i == 0:
        return ""
    return "x" if i == 1 else f"x^{i}"


class UniPoly:
    """Univariate polynomial in ``x`` with rational coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [as_rat(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)

    @classmethod
    def _make(cls, cs: list) -> "UniPoly":
        # cs must already hold Fractions; only trailing zeros are stripped
        while cs and not cs[-1]:
            cs.pop()
        obj = cls.__new__(cls)
        obj.coeffs = tuple(cs)
        return obj

    @classmethod
    def constant(cls, c) -> "UniPoly":
        return cls((c,))

    @classmethod
    def x(cls) -> "UniPoly":
        return cls((0, 1))

    @classmethod
    def monomial(cls, i: int, c=1) -> "UniPoly":
        return cls([0] * i + [c])

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else ZERO_DEGREE

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def coeff(self, i: int) -> Fraction:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return _ZERO

    @property
    def lc(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else _ZERO

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def __call__(self, v) -> Fraction:
        v = as_rat(v)
        acc = _ZERO
        for c in reversed(self.coeffs):
            acc = acc * v + c
        return acc

    eval = __call__

    def _coerce(self, other) -> "UniPoly | None":
        if isinstance(other, UniPoly):
            return other
        if isinstance(other, (int, Rational)):
            return UniPoly((other,))
        return None

    def __add__(self, other):
        if isinstance(other, BiPoly):
            return NotImplemented
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if len(a) < len(b):
            a, b = b, a
        cs = list(a)
        for i, c in enumerate(b):
            cs[i] += c
        return UniPoly._make(cs)

    __radd__ = __add__

    def __neg__(self) -> "UniPoly":
        return UniPoly._make([-c for c in self.coeffs])

    def __sub__(self, other):
        if isinstance(other, BiPoly):
            return NotImplemented
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def scale(self, c) -> "UniPoly":
        c = as_rat(c)
        if not c:
            return UniPoly()
        return UniPoly._make([c * a for a in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, BiPoly):
            return NotImplemented
        if isinstance(other, (int, Rational)):
            return self.scale(other)
        if not isinstance(other, UniPoly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return UniPoly()
        cs = [_ZERO] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if not ai:
                continue
            for j, bj in enumerate(b):
                cs[i + j] += ai * bj
        return UniPoly._make(cs)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "UniPoly":
        if e < 0:
            raise DomainError("negative polynomial power")
        out = UniPoly((1,))
        for _ in range(e):
            out = out * self
        return out

    def shift(self, i: int) -> "UniPoly":
        """Multiply by ``x**i``."""
        if not self.coeffs:
            return self
        return UniPoly._make([_ZERO] * i + list(self.coeffs))

    def __eq__(self, other) -> bool:
        if isinstance(other, UniPoly):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(("UniPoly", self.coeffs))

    def __repr__(self) -> str:
        return f"UniPoly([{', '.join(str(c) for c in self.coeffs)}])"

    def __str__(self) -> str:
        terms = [(c, _x_mono(i)) for i, c in reversed(list(enumerate(self.coeffs))) if c]
        return _join_terms(terms)


def _as_uni(c) -> UniPoly:
    if isinstance(c, UniPoly):
        return c
    if isinstance(c, (int, Rational, str)):
        return UniPoly((c,))
    return UniPoly(c)


class BiPoly:
    """Polynomial in ``x`` and ``T``; ``t_coeffs[j]`` is the coefficient of ``T**j``."""

    __slots__ = ("t_coeffs",)

    def __init__(self, t_coeffs: Iterable = ()):
        cs = [_as_uni(c) for c in t_coeffs]
        while cs and cs[-1].is_zero():
            cs.pop()
        self.t_coeffs: tuple[UniPoly, ...] = tuple(cs)

    @classmethod
    def _make(cls, cs: list) -> "BiPoly":
        while cs and not cs[-1].coeffs:
            cs.pop()
        obj = cls.__new__(cls)
        obj.t_coeffs = tuple(cs)
        return obj

    @classmethod
    def coerce(cls, value) -> "BiPoly":
        if isinstance(value, BiPoly):
            return value
        if isinstance(value, UniPoly):
            return cls._make([value])
        if isinstance(value, (int, Rational)):
            return cls._make([UniPoly((value,))])
        raise TypeError(f"cannot interpret {value!r} as a BiPoly")

    @classmethod
    def x(cls) -> "BiPoly":
        return cls._make([UniPoly.x()])

    @classmethod
    def T(cls) -> "BiPoly":
        return cls._make([UniPoly(), UniPoly((1,))])

    @classmethod
    def from_terms(cls, terms: dict) -> "BiPoly":
        """Build from ``{(x_exp, t_exp): coeff}``."""
        if not terms:
            return cls()
        dt = max(j for _, j in terms) + 1
        rows: list[list[Fraction]] = [[] for _ in range(dt)]
        for (i, j), c in terms.items():
            row = rows[j]
            if len(row) <= i:
                row.extend([_ZERO] * (i + 1 - len(row)))
            row[i] += as_rat(c)
        return cls._make([UniPoly._make(r) for r in rows])

    def terms(self) -> dict:
        """``{(x_exp, t_exp): coeff}`` for every nonzero coefficient."""
        return {
            (i, j): c
            for j, u in enumerate(self.t_coeffs)
            for i, c in enumerate(u.coeffs)
            if c
        }

    @property
    def degree_t(self):
        return len(self.t_coeffs) - 1 if self.t_coeffs else ZERO_DEGREE

    @property
    def degree_x(self):
        if not self.t_coeffs:
            return ZERO_DEGREE
        return max(u.degree for u in self.t_coeffs)

    def is_zero(self) -> bool:
        return not self.t_coeffs

    def __bool__(self) -> bool:
        return bool(self.t_coeffs)

    def is_constant(self) -> bool:
        return len(self.t_coeffs) <= 1 and (not self.t_coeffs or len(self.t_coeffs[0].coeffs) <= 1)

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise DomainError(f"{self} is not a constant")
        return self.t_coeffs[0].coeffs[0] if self.t_coeffs else _ZERO

    def coeff_of_T(self, j: int) -> UniPoly:
        if j < 0:
            raise DomainError("T-exponent must be non-negative")
        return self.t_coeffs[j] if j < len(self.t_coeffs) else UniPoly()

    def coeff_of_x(self, i: int) -> "BiPoly":
        """Coefficient of ``x**i`` as a polynomial in ``T`` alone."""
        return BiPoly._make([UniPoly._make([u.coeff(i)]) for u in self.t_coeffs])

    def eval_T(self, t) -> UniPoly:
        t = as_rat(t)
        acc = UniPoly()
        for u in reversed(self.t_coeffs):
            acc = acc.scale(t) + u
        return acc

    def eval_x(self, v) -> "BiPoly":
        """Substitute ``x = v``; the result only depends on ``T``."""
        v = as_rat(v)
        return BiPoly._make([UniPoly._make([u(v)]) for u in self.t_coeffs])

    def __add__(self, other):
        try:
            o = BiPoly.coerce(other)
        except TypeError:
            return NotImplemented
        a, b = self.t_coeffs, o.t_coeffs
        if len(a) < len(b):
            a, b = b, a
        cs = list(a)
        for j, u in enumerate(b):
            cs[j] = cs[j] + u
        return BiPoly._make(cs)

    __radd__ = __add__

    def __neg__(self) -> "BiPoly":
        return BiPoly._make([-u for u in self.t_coeffs])

    def __sub__(self, other):
        try:
            o = BiPoly.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        try:
            o = BiPoly.coerce(other)
        except TypeError:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        if isinstance(other, (int, Rational)):
            c = as_rat(other)
            if not c:
                return BiPoly()
            return BiPoly._make([u.scale(c) for u in self.t_coeffs])
        try:
            o = BiPoly.coerce(other)
        except TypeError:
            return NotImplemented
        a, b = self.t_coeffs, o.t_coeffs
        if not a or not b:
            return BiPoly()
        cs = [UniPoly()] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if not ai.coeffs:
                continue
            for j, bj in enumerate(b):
                if bj.coeffs:
                    cs[i + j] = cs[i + j] + ai * bj
        return BiPoly._make(cs)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "BiPoly":
        if e < 0:
            raise DomainError("negative polynomial power")
        out = BiPoly.coerce(1)
        for _ in range(e):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        if isinstance(other, BiPoly):
            return self.t_coeffs == other.t_coeffs
        if isinstance(other, UniPoly):
            return self.t_coeffs == BiPoly.coerce(other).t_coeffs
        return NotImplemented

    def __hash__(self) -> int:
        # consistent with equality against a T-free UniPoly
        if len(self.t_coeffs) == 1:
            return hash(self.t_coeffs[0])
        if not self.t_coeffs:
            return hash(UniPoly())
        return hash(("BiPoly", self.t_coeffs))

    def __repr__(self) -> str:
        return f"BiPoly([{', '.join(repr(u) for u in self.t_coeffs)}])"

    def __str__(self) -> str:
        terms = []
        for j in range(len(self.t_coeffs) - 1, -1, -1):
            u = self.t_coeffs[j]
            t_mono = "" if j == 0 else ("T" if j == 1 else f"T^{j}")
            for i in range(len(u.coeffs) - 1, -1, -1):
                c = u.coeffs[i]
                if c:
                    mono = "*".join(s for s in (_x_mono(i), t_mono) if s)
                    terms.append((c, mono))
        return _join_terms(terms)


def poly_from_roots(roots: Iterable) -> UniPoly:
    """The monic polynomial ``prod (x - r)`` over ``roots``."""
    cs = [_ONE]
    for r in roots:
        r = as_rat(r)
        nxt = [_ZERO] * (len(cs) + 1)
        for i, c in enumerate(cs):
            nxt[i + 1] += c
            nxt[i] -= r * c
        cs = nxt
    return UniPoly._make(cs)


def eval_poly(p: UniPoly, v) -> Fraction:
    return p(v)


def eval_T(p: BiPoly, t) -> UniPoly:
    return p.eval_T(t)


def coeff_of_T(p: BiPoly, j: int) -> UniPoly:
    return p.coeff_of_T(j)


def monic_from_coeffs(coeffs: Sequence) -> UniPoly:
    """Ascending coefficient list to a :class:`UniPoly`, rejecting non-monic input."""
    p = UniPoly(coeffs)
    if p.is_zero() or p.lc != 1:
        raise NonMonicError(f"polynomial {p} is not monic (leading coefficient {p.lc})")
    return p
