"""Subresultants, their cofactors, scalar subresultants and the resultant.

Everything is defined through the classical determinant whose first
``n-k`` rows carry the shifted coefficients of ``f`` and whose last
``m-k`` rows carry those of ``g``; the final column holds
``x^{n-k-1} f, ..., f, x^{m-k-1} g, ..., g``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .arith import BiPoly, UniPoly, poly_from_roots, sign_pow
from .errors import DomainError, NonMonicError
from .linalg import Kernel, PolyMatrix, block, det, vandermonde


@dataclass(frozen=True)
class CofactorPair:
    """``F_k`` and ``G_k`` with ``Sres_k = F_k f + G_k g``."""

    f_cof: UniPoly
    g_cof: UniPoly


def _check_monic(f: UniPoly, g: UniPoly) -> tuple[int, int]:
    for name, p in (("f", f), ("g", g)):
        if p.is_zero() or p.lc != 1:
            raise NonMonicError(f"{name} = {p} is not monic")
        if p.degree < 1:
            raise DomainError(f"{name} must have degree >= 1, got {p.degree}")
    return f.degree, g.degree


def _check_k(m: int, n: int, k: int) -> None:
    if not (0 <= k <= m < n or 0 <= k < m == n):
        raise DomainError(
            f"subresultant index k={k} outside 0 <= k <= m < n or 0 <= k < m = n (m={m}, n={n})"
        )


def _scalar_block(f: UniPoly, g: UniPoly, k: int) -> list[list[Fraction]]:
    """The ``(m+n-2k) x (m+n-2k-1)`` scalar part of the defining matrix."""
    m, n = f.degree, g.degree
    width = m + n - 2 * k - 1
    rows = []
    for i in range(n - k):
        rows.append([f.coeff(m - j + i) for j in range(width)])
    for i in range(m - k):
        rows.append([g.coeff(n - j + i) for j in range(width)])
    return rows


def _last_column(f: UniPoly, g: UniPoly, k: int) -> list[UniPoly]:
    m, n = f.degree, g.degree
    return [f.shift(n - k - 1 - i) for i in range(n - k)] + [g.shift(m - k - 1 - i) for i in range(m - k)]


def sres_matrix(f: UniPoly, g: UniPoly, k: int) -> PolyMatrix:
    """The square matrix whose determinant is ``Sres_k(f, g)``."""
    m, n = _check_monic(f, g)
    _check_k(m, n, k)
    scal = _scalar_block(f, g, k)
    col = _last_column(f, g, k)
    return PolyMatrix.from_rows([r + [c] for r, c in zip(scal, col)], m + n - 2 * k)


def _minors(f: UniPoly, g: UniPoly, k: int) -> list[Fraction]:
    """Signed cofactors of the last column, one per row."""
    scal = _scalar_block(f, g, k)
    size = len(scal)
    out = []
    for i in range(size):
        sub = PolyMatrix.from_rows(scal[:i] + scal[i + 1:], size - 1)
        out.append(sign_pow(i + size - 1) * det(sub).constant_value())
    return out


def cofactors(f: UniPoly, g: UniPoly, k: int) -> CofactorPair:
    """``F_k`` and ``G_k`` read off by expanding the defining determinant along its last column."""
    m, n = _check_monic(f, g)
    _check_k(m, n, k)
    cof = _minors(f, g, k)
    F = UniPoly()
    for i in range(n - k):
        F = F + UniPoly.monomial(n - k - 1 - i, cof[i])
    G = UniPoly()
    for i in range(m - k):
        G = G + UniPoly.monomial(m - k - 1 - i, cof[n - k + i])
    return CofactorPair(F, G)


def sres(f: UniPoly, g: UniPoly, k: int) -> UniPoly:
    """The ``k``-th subresultant.  For ``k = m < n`` this is ``f`` itself."""
    m, n = _check_monic(f, g)
    _check_k(m, n, k)
    if k == m:
        return f
    cp = cofactors(f, g, k)
    return cp.f_cof * f + cp.g_cof * g


def scalar_subresultant(f: UniPoly, g: UniPoly, k: int) -> Fraction:
    """Coefficient of ``x^k`` in ``Sres_k``; by convention 1 when ``k = m = n``."""
    m, n = _check_monic(f, g)
    if k == m == n:
        return Fraction(1)
    _check_k(m, n, k)
    return sres(f, g, k).coeff(k)


def resultant(f: UniPoly, g: UniPoly) -> Fraction:
    """``Res(f, g) = Sres_0(f, g)``; for ``deg f > deg g`` uses ``Res(f, g) = (-1)^{mn} Res(g, f)``."""
    m, n = _check_monic(f, g)
    if m > n:
        return sign_pow(m * n) * resultant(g, f)
    s = sres(f, g, 0)
    if s.degree > 0:
        raise AssertionError(f"Sres_0 is not constant: {s}")
    return s.coeff(0)


def dhks_delta_check(A: Sequence, g: UniPoly, k: int) -> bool:
    """Check ``Delta_k(f, g) V(A) = det [<1, A>_k ; <g(t), A>_{m-k}]`` with ``f`` built from ``A``."""
    m = len(A)
    if not 0 <= k <= m:
        raise DomainError(f"k={k} outside [0, {m}]")
    f = poly_from_roots(A)
    lhs = scalar_subresultant(f, g, k) * vandermonde(A)
    M = block(Kernel.ONE, A, k).vstack(block(g, A, m - k))
    return BiPoly.coerce(lhs) == det(M)
