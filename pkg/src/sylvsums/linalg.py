"""Exact matrices over Q[x, T], determinants, and Vandermonde-type blocks."""
from __future__ import annotations

import enum
import math
from fractions import Fraction
from functools import reduce
from typing import Iterable, Sequence

from .arith import BiPoly, UniPoly, as_rat
from .errors import CorruptInputError, DuplicateRootError, ShapeError

#: Matrices up to this size use Laplace expansion in :func:`det`.
LAPLACE_MAX = 4


class RootList(tuple):
    """An ordered tuple of pairwise-distinct rationals."""

    def __new__(cls, values: Iterable = ()):
        vals = tuple(as_rat(v) for v in values)
        if len(set(vals)) != len(vals):
            seen = set()
            dups = [v for v in vals if v in seen or seen.add(v)]
            raise DuplicateRootError(f"duplicate root(s) in list: {', '.join(map(str, dups))}")
        return super().__new__(cls, vals)

    def __repr__(self) -> str:
        return f"RootList([{', '.join(str(v) for v in self)}])"


class PolyMatrix:
    """Rectangular matrix with :class:`BiPoly` entries, stored row-major."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries: Sequence):
        if rows < 0 or cols < 0 or len(entries) != rows * cols:
            raise ShapeError(f"{len(entries)} entries do not fill a {rows}x{cols} matrix")
        self.rows = rows
        self.cols = cols
        self.entries: tuple[BiPoly, ...] = tuple(BiPoly.coerce(e) for e in entries)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], cols: int | None = None) -> "PolyMatrix":
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        if any(len(r) != cols for r in rows):
            raise ShapeError("ragged rows")
        return cls(len(rows), cols, [e for r in rows for e in r])

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "PolyMatrix":
        return cls(rows, cols, [BiPoly()] * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> "PolyMatrix":
        return cls(n, n, [1 if i == j else 0 for i in range(n) for j in range(n)])

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def __getitem__(self, ij: tuple[int, int]) -> BiPoly:
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[BiPoly, ...]:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def to_rows(self) -> list[list[BiPoly]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def hstack(self, other: "PolyMatrix") -> "PolyMatrix":
        if self.rows != other.rows:
            raise ShapeError(f"hstack of {self.shape} and {other.shape}")
        return PolyMatrix.from_rows(
            [self.row(i) + other.row(i) for i in range(self.rows)], self.cols + other.cols
        )

    def vstack(self, other: "PolyMatrix") -> "PolyMatrix":
        if self.cols != other.cols:
            raise ShapeError(f"vstack of {self.shape} and {other.shape}")
        return PolyMatrix(self.rows + other.rows, self.cols, self.entries + other.entries)

    def __matmul__(self, other: "PolyMatrix") -> "PolyMatrix":
        if self.cols != other.rows:
            raise ShapeError(f"cannot multiply {self.shape} by {other.shape}")
        out = []
        for i in range(self.rows):
            r = self.row(i)
            for j in range(other.cols):
                acc = BiPoly()
                for t in range(self.cols):
                    a = r[t]
                    if a:
                        b = other.entries[t * other.cols + j]
                        if b:
                            acc = acc + a * b
                out.append(acc)
        return PolyMatrix(self.rows, other.cols, out)

    def swap_rows(self, i: int, j: int) -> "PolyMatrix":
        rows = self.to_rows()
        rows[i], rows[j] = rows[j], rows[i]
        return PolyMatrix.from_rows(rows, self.cols)

    def __eq__(self, other) -> bool:
        if not isinstance(other, PolyMatrix):
            return NotImplemented
        return self.shape == other.shape and self.entries == other.entries

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, self.entries))

    def __repr__(self) -> str:
        body = "; ".join(", ".join(str(e) for e in self.row(i)) for i in range(self.rows))
        return f"PolyMatrix({self.rows}x{self.cols}: [{body}])"


class Kernel(enum.Enum):
    """The fixed choices of ``h(t)`` for :func:`block`; any :class:`UniPoly` is also accepted."""

    ONE = "1"
    T = "T"
    X_MINUS_T = "x-t"


def block(h, gamma: Sequence, v: int) -> PolyMatrix:
    """The ``v x len(gamma)`` matrix with entry ``(i, j) = gamma_j**i * h(gamma_j)``.

    ``h`` is a :class:`Kernel` member or a :class:`UniPoly` ``g`` (meaning
    ``h(t) = g(t)``).  Rows are indexed from power 0.
    """
    if v < 0:
        raise ShapeError(f"block row count must be non-negative, got {v}")
    gamma = [as_rat(g) for g in gamma]
    x = BiPoly.x()
    T = BiPoly.T()
    entries = []
    for i in range(v):
        for g in gamma:
            pw = g ** i
            if h is Kernel.ONE:
                entries.append(BiPoly.coerce(pw))
            elif h is Kernel.T:
                entries.append(T * pw)
            elif h is Kernel.X_MINUS_T:
                entries.append(x * pw - pw * g)
            elif isinstance(h, UniPoly):
                entries.append(BiPoly.coerce(pw * h(g)))
            else:
                raise TypeError(f"unsupported block kernel {h!r}")
    return PolyMatrix(v, len(gamma), entries)


# ---------------------------------------------------------------------------
# determinants

def det(M: PolyMatrix) -> BiPoly:
    """Exact determinant: Laplace expansion for small sizes, Bareiss above."""
    if M.rows != M.cols:
        raise ShapeError(f"determinant of non-square {M.rows}x{M.cols} matrix")
    if M.rows <= LAPLACE_MAX:
        return det_laplace(M)
    return det_bareiss(M)


def det_laplace(M: PolyMatrix) -> BiPoly:
    """Cofactor expansion along successive rows, memoised on the surviving column set."""
    if M.rows != M.cols:
        raise ShapeError(f"determinant of non-square {M.rows}x{M.cols} matrix")
    n = M.rows
    memo: dict[tuple[int, ...], BiPoly] = {}

    def minor(r: int, cols: tuple[int, ...]) -> BiPoly:
        # determinant of rows r.. and the given columns
        if r == n:
            return BiPoly.coerce(1)
        hit = memo.get(cols)
        if hit is not None:
            return hit
        acc = BiPoly()
        for pos, c in enumerate(cols):
            a = M[r, c]
            if not a:
                continue
            sub = minor(r + 1, cols[:pos] + cols[pos + 1:])
            if not sub:
                continue
            term = a * sub
            acc = acc - term if pos % 2 else acc + term
        memo[cols] = acc
        return acc

    return minor(0, tuple(range(n)))


# Bareiss runs over Z[x, T]: each row is scaled to integer coefficients, the
# elimination uses exact integer-polynomial division, and the row scalings are
# divided out at the end.  Integer polynomials are dicts {(t_exp, x_exp): int}.

def _row_to_int(row: Sequence[BiPoly]) -> tuple[list[dict], int]:
    dens = [c.denominator for e in row for u in e.t_coeffs for c in u.coeffs]
    scale = reduce(math.lcm, dens, 1)
    out = []
    for e in row:
        p = {}
        for j, u in enumerate(e.t_coeffs):
            for i, c in enumerate(u.coeffs):
                if c:
                    p[(j, i)] = c.numerator * (scale // c.denominator)
        out.append(p)
    return out, scale


def _int_to_bipoly(p: dict, scale: int) -> BiPoly:
    return BiPoly.from_terms({(i, j): Fraction(c, scale) for (j, i), c in p.items()})


def _imul(a: dict, b: dict) -> dict:
    if not a or not b:
        return {}
    out: dict = {}
    get = out.get
    for (ja, ia), ca in a.items():
        for (jb, ib), cb in b.items():
            key = (ja + jb, ia + ib)
            out[key] = get(key, 0) + ca * cb
    return {k: v for k, v in out.items() if v}


def _isub(a: dict, b: dict) -> dict:
    out = dict(a)
    for k, v in b.items():
        w = out.get(k, 0) - v
        if w:
            out[k] = w
        else:
            out.pop(k, None)
    return out


def _iexquo(a: dict, b: dict) -> dict:
    """Exact quotient ``a / b`` in Z[x, T]; raises if the division is not exact."""
    if not a:
        return {}
    if len(b) == 1:
        (bj, bi), bc = next(iter(b.items()))
        out = {}
        for (j, i), c in a.items():
            q, r = divmod(c, bc)
            if r or j < bj or i < bi:
                raise CorruptInputError("inexact polynomial division in Bareiss elimination")
            out[(j - bj, i - bi)] = q
        return out
    lead = max(b)
    lj, li = lead
    lc = b[lead]
    rem = dict(a)
    quo = {}
    while rem:
        top = max(rem)
        c = rem[top]
        tj, ti = top
        q, r = divmod(c, lc)
        if r or tj < lj or ti < li:
            raise CorruptInputError("inexact polynomial division in Bareiss elimination")
        dj, di = tj - lj, ti - li
        quo[(dj, di)] = q
        for (bj, bi), bc in b.items():
            key = (bj + dj, bi + di)
            w = rem.get(key, 0) - q * bc
            if w:
                rem[key] = w
            else:
                rem.pop(key, None)
    return quo


def det_bareiss(M: PolyMatrix) -> BiPoly:
    """Fraction-free (Bareiss) elimination with row pivoting on zero pivots."""
    if M.rows != M.cols:
        raise ShapeError(f"determinant of non-square {M.rows}x{M.cols} matrix")
    n = M.rows
    if n == 0:
        return BiPoly.coerce(1)
    rows = []
    total_scale = 1
    for i in range(n):
        r, s = _row_to_int(M.row(i))
        rows.append(r)
        total_scale *= s
    sign = 1
    prev: dict = {(0, 0): 1}
    for k in range(n - 1):
        if not rows[k][k]:
            for i in range(k + 1, n):
                if rows[i][k]:
                    rows[k], rows[i] = rows[i], rows[k]
                    sign = -sign
                    break
            else:
                return BiPoly()
        pivot = rows[k][k]
        rk = rows[k]
        for i in range(k + 1, n):
            ri = rows[i]
            lead = ri[k]
            for j in range(k + 1, n):
                val = _imul(pivot, ri[j])
                if lead and rk[j]:
                    val = _isub(val, _imul(lead, rk[j]))
                ri[j] = _iexquo(val, prev)
            ri[k] = {}
        prev = pivot
    result = rows[n - 1][n - 1]
    if sign < 0:
        result = {k: -v for k, v in result.items()}
    return _int_to_bipoly(result, total_scale)


# ---------------------------------------------------------------------------
# Vandermonde and root-difference products

def vandermonde(gamma: Sequence) -> Fraction:
    """``prod_{i<j} (gamma_j - gamma_i)``, which equals ``det <1, gamma>_{|gamma|}``."""
    gamma = [as_rat(g) for g in gamma]
    acc = Fraction(1)
    for j in range(len(gamma)):
        for i in range(j):
            acc *= gamma[j] - gamma[i]
    return acc


def r_product(Y: Sequence, Z: Sequence) -> Fraction:
    """``prod_{y in Y, z in Z} (y - z)``; 1 if either list is empty."""
    acc = Fraction(1)
    zs = [as_rat(z) for z in Z]
    for y in Y:
        y = as_rat(y)
        for z in zs:
            acc *= y - z
    return acc
