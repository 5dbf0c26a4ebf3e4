"""The matrix ``U_d(x, T)``, its determinant and the closed forms around it.

``U_d`` is the ``(m+n)``-square matrix::

    [ <1, B>_{d'}    | <T, A>_{d'}   ]   d' = m + n - d rows
    [ <x-t, B>_d     | <x-t, A>_d    ]   d rows

and ``u_d = det U_d = u_{d,0} T^m + ... + u_{d,m}``.  Every ``u_{d,p}`` is a
signed multiple of a Sylvester double sum; the functions here build the
factorisations and closed forms that pin ``u_d`` down for each range of ``d``.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Optional

from .arith import BiPoly, UniPoly, poly_from_roots, sign_pow
from .doublesum import sylvester_double_sum
from .errors import DomainError, NotApplicableError
from .linalg import Kernel, PolyMatrix, RootList, block, det, vandermonde
from .subres import cofactors, resultant, scalar_subresultant, sres


class Branch(enum.Enum):
    """The five ranges of ``d = p + q`` that the closed forms distinguish."""

    SRES = "SresBranch"        # 0 <= d < m, or d = m < n
    ZERO = "ZeroBranch"        # m < d < n - 1
    F = "FBranch"              # m < d = n - 1
    COFACTOR = "CofactorBranch"  # n <= d <= m + n - 1
    RES = "ResBranch"          # d = m + n

    def __str__(self) -> str:
        return self.value


def branch_of(m: int, n: int, d: int) -> Branch:
    if not 1 <= m <= n:
        raise DomainError(f"need 1 <= m <= n, got m={m}, n={n}")
    if not 0 <= d <= m + n:
        raise DomainError(f"d={d} outside [0, {m + n}]")
    if d == m + n:
        return Branch.RES
    if d >= n:
        return Branch.COFACTOR
    if d < m or d == m:
        return Branch.SRES
    if d < n - 1:
        return Branch.ZERO
    return Branch.F


@dataclass(frozen=True)
class UdContext:
    A: RootList
    B: RootList
    d: int

    def __post_init__(self):
        object.__setattr__(self, "A", RootList(self.A))
        object.__setattr__(self, "B", RootList(self.B))
        m, n = len(self.A), len(self.B)
        if not 1 <= m <= n:
            raise DomainError(f"need 1 <= |A| <= |B|, got |A|={m}, |B|={n}")
        if not 0 <= self.d <= m + n:
            raise DomainError(f"d={self.d} outside [0, {m + n}]")

    @property
    def m(self) -> int:
        return len(self.A)

    @property
    def n(self) -> int:
        return len(self.B)

    @property
    def d_prime(self) -> int:
        return self.m + self.n - self.d

    @cached_property
    def f(self) -> UniPoly:
        return poly_from_roots(self.A)

    @cached_property
    def g(self) -> UniPoly:
        return poly_from_roots(self.B)

    @property
    def branch(self) -> Branch:
        return branch_of(self.m, self.n, self.d)

    @cached_property
    def vv(self):
        """``V(A) V(B)``."""
        return vandermonde(self.A) * vandermonde(self.B)


@dataclass(frozen=True)
class PQPair:
    """The polynomials ``P`` and ``Q`` completing ``U_d`` to a square factorisation.

    For ``0 <= d <= m`` the true ``Q`` has a ``1/T`` term; it is stored
    multiplied by ``T**q_t_shift`` so that it stays a polynomial.  ``Q`` is
    ``None`` when ``d' = 0``.  ``k`` is the nominal degree of ``P`` and
    ``P_k`` its ``x^k`` coefficient (a polynomial in ``T``).
    """

    P: BiPoly
    Q: Optional[BiPoly]
    k: int
    P_k: BiPoly
    q_t_shift: int = 0


_T = BiPoly.T()
_ONE = BiPoly.coerce(1)
_T_MINUS_1 = _T - 1


def build_ud(ctx: UdContext) -> PolyMatrix:
    dp, d = ctx.d_prime, ctx.d
    top = block(Kernel.ONE, ctx.B, dp).hstack(block(Kernel.T, ctx.A, dp))
    bottom = block(Kernel.X_MINUS_T, ctx.B, d).hstack(block(Kernel.X_MINUS_T, ctx.A, d))
    return top.vstack(bottom)


@lru_cache(maxsize=4096)
def ud_det(ctx: UdContext) -> BiPoly:
    """``u_d(x, T) = det U_d(x, T)``."""
    return det(build_ud(ctx))


def ud_coeff(ctx: UdContext, p: int) -> UniPoly:
    """``u_{d,p}``, the coefficient of ``T^{m-p}`` in ``u_d``."""
    if not 0 <= p <= ctx.m:
        raise DomainError(f"p={p} outside [0, {ctx.m}]")
    return ud_det(ctx).coeff_of_T(ctx.m - p)


def scaling_relation_check(ctx: UdContext, p: int) -> bool:
    """``u_{d,p} = (-1)^{q(m-p)} V(A) V(B) Sylv^{p,q}`` when ``0 <= q <= n``, else ``u_{d,p} = 0``."""
    q = ctx.d - p
    lhs = ud_coeff(ctx, p)
    if 0 <= q <= ctx.n:
        rhs = sylvester_double_sum(ctx.A, ctx.B, p, q).scale(sign_pow(q * (ctx.m - p)) * ctx.vv)
        return lhs == rhs
    return lhs.is_zero()


# ---------------------------------------------------------------------------
# rectangular factorisation of U_d

def factor1_left(ctx: UdContext) -> PolyMatrix:
    """``(m+n) x (m+n+1)``: identity on the first ``d'`` rows, then rows ``(.., x, -1, ..)``."""
    size, dp = ctx.m + ctx.n, ctx.d_prime
    rows = []
    for i in range(size):
        row = [0] * (size + 1)
        if i < dp:
            row[i] = 1
        else:
            row[i] = BiPoly.x()
            row[i + 1] = -1
        rows.append(row)
    return PolyMatrix.from_rows(rows, size + 1)


def factor1_right(ctx: UdContext) -> PolyMatrix:
    """``(m+n+1) x (m+n)``: ``<1,B>_{d'} | <T,A>_{d'}`` over ``<1,B>_{d+1} | <1,A>_{d+1}``."""
    dp, d = ctx.d_prime, ctx.d
    top = block(Kernel.ONE, ctx.B, dp).hstack(block(Kernel.T, ctx.A, dp))
    bottom = block(Kernel.ONE, ctx.B, d + 1).hstack(block(Kernel.ONE, ctx.A, d + 1))
    return top.vstack(bottom)


def factor1_check(ctx: UdContext) -> bool:
    return factor1_left(ctx) @ factor1_right(ctx) == build_ud(ctx)


# ---------------------------------------------------------------------------
# P, Q and the square factorisation

def pq_polys(ctx: UdContext) -> PQPair:
    """``P`` and ``Q`` for every ``d`` outside the gap ``m < d < n - 1``."""
    br = ctx.branch
    f, g, d = ctx.f, ctx.g, ctx.d
    if br is Branch.ZERO:
        raise NotApplicableError(f"no P, Q exist for m < d < n - 1 (m={ctx.m}, d={d}, n={ctx.n})")
    if br is Branch.SRES:
        cp = cofactors(f, g, d)
        ff, gg = BiPoly.coerce(cp.f_cof * f), BiPoly.coerce(cp.g_cof * g)
        P = ff + gg
        # T * Q = -T F_d f - G_d g
        return PQPair(P, -(_T * ff) - gg, d, P.coeff_of_x(d), q_t_shift=1)
    if br is Branch.F:
        P = BiPoly.coerce(f)
        return PQPair(P, -P, ctx.m, P.coeff_of_x(ctx.m))
    if br is Branch.COFACTOR:
        cp = cofactors(f, g, ctx.d_prime - 1)
        ff, gg = BiPoly.coerce(cp.f_cof * f), BiPoly.coerce(cp.g_cof * g)
        P = ff + _T * gg
        return PQPair(P, -(ff + gg), d, P.coeff_of_x(d))
    P = BiPoly.coerce(f * g)
    return PQPair(P, None, d, P.coeff_of_x(d))


def leading_data_expected(ctx: UdContext) -> tuple[int, BiPoly]:
    """``(deg_x P, P_k)`` as tabulated for each branch."""
    br = ctx.branch
    if br is Branch.SRES:
        return ctx.d, BiPoly.coerce(scalar_subresultant(ctx.f, ctx.g, ctx.d))
    if br is Branch.F:
        return ctx.m, _ONE
    if br is Branch.COFACTOR:
        delta = scalar_subresultant(ctx.f, ctx.g, ctx.d_prime)
        return ctx.d, _T_MINUS_1 * (sign_pow(ctx.d - ctx.n) * delta)
    if br is Branch.RES:
        return ctx.d, _ONE
    raise NotApplicableError(f"no P exists for m < d < n - 1 (d={ctx.d})")


def leading_data_check(ctx: UdContext, pq: PQPair) -> bool:
    k, pk = leading_data_expected(ctx)
    return pq.P.degree_x == k and pq.k == k and pq.P_k == pk


def condition_check(ctx: UdContext, pq: PQPair) -> bool:
    """``Q(b) + P(b) = 0`` on ``B`` and ``T Q(a) + P(a) = 0`` on ``A``, after clearing ``1/T``."""
    scale = _T ** pq.q_t_shift
    Q = pq.Q if pq.Q is not None else BiPoly()
    for b in ctx.B:
        if Q.eval_x(b) + scale * pq.P.eval_x(b):
            return False
    for a in ctx.A:
        if _T * Q.eval_x(a) + scale * pq.P.eval_x(a):
            return False
    return True


def companion_matrix(ctx: UdContext, pq: PQPair) -> PolyMatrix:
    """``factor1_left`` with the extra bottom row ``(Q_0 .. Q_{d'-1}, P_0 .. P_d)``.

    With ``q_t_shift = 1`` the bottom row is multiplied by ``T``.
    """
    scale = _T ** pq.q_t_shift
    Q = pq.Q if pq.Q is not None else BiPoly()
    last = [Q.coeff_of_x(i) for i in range(ctx.d_prime)]
    last += [scale * pq.P.coeff_of_x(i) for i in range(ctx.d + 1)]
    return factor1_left(ctx).vstack(PolyMatrix(1, len(last), last))


def companion_det_check(pq: PQPair, ctx: UdContext) -> bool:
    return det(companion_matrix(ctx, pq)) == (_T ** pq.q_t_shift) * pq.P


def md_matrix(ctx: UdContext, k: int) -> PolyMatrix:
    """``factor1_right`` bordered by the column ``(0, .., 0, e_k)``."""
    dp, d = ctx.d_prime, ctx.d
    if not 0 <= k <= d:
        raise DomainError(f"border position k={k} outside [0, {d}]")
    col = [0] * dp + [1 if i == k else 0 for i in range(d + 1)]
    return factor1_right(ctx).hstack(PolyMatrix(len(col), 1, col))


def factor2_check(ctx: UdContext, pq: PQPair) -> bool:
    """The square product reproduces ``U_d``, a zero bottom row and ``P_k`` in the corner.

    The last column above the corner is not constrained.
    """
    prod = companion_matrix(ctx, pq) @ md_matrix(ctx, pq.k)
    size = ctx.m + ctx.n
    top_left = PolyMatrix.from_rows([prod.row(i)[:size] for i in range(size)], size)
    if top_left != build_ud(ctx):
        return False
    if any(prod[size, j] for j in range(size)):
        return False
    return prod[size, size] == (_T ** pq.q_t_shift) * pq.P_k


def md_det(ctx: UdContext) -> BiPoly:
    """``det M_d`` with the border at ``k`` from :func:`pq_polys`."""
    return det(md_matrix(ctx, pq_polys(ctx).k))


def md_closed_form(ctx: UdContext) -> BiPoly:
    """Closed form of ``det M_d`` for each branch outside the gap."""
    br, m, n, d, dp = ctx.branch, ctx.m, ctx.n, ctx.d, ctx.d_prime
    vv = ctx.vv
    if br is Branch.SRES:
        delta = scalar_subresultant(ctx.f, ctx.g, d)
        return (_T ** (m - d)) * (_T_MINUS_1 ** d) * (sign_pow(d * m) * vv * delta)
    if br is Branch.F:
        return (_T_MINUS_1 ** m) * (sign_pow(m * (d - 1) + d) * vv)
    if br is Branch.COFACTOR:
        delta = scalar_subresultant(ctx.f, ctx.g, dp)
        return (_T_MINUS_1 ** dp) * (sign_pow(dp * n) * vv * delta)
    if br is Branch.RES:
        return BiPoly.coerce(vv * resultant(ctx.f, ctx.g))
    raise NotApplicableError(f"M_d has no closed form for m < d < n - 1 (d={d})")


def md_check(ctx: UdContext) -> bool:
    return md_det(ctx) == md_closed_form(ctx)


def ud_closed_form(ctx: UdContext) -> BiPoly:
    """Closed form of ``u_d(x, T)`` for every ``0 <= d <= m + n``."""
    br, m, n, d, dp = ctx.branch, ctx.m, ctx.n, ctx.d, ctx.d_prime
    f, g, vv = ctx.f, ctx.g, ctx.vv
    sigma = (dp - 1) * n + d
    if br is Branch.SRES:
        s = BiPoly.coerce(sres(f, g, d))
        return s * (_T ** (m - d)) * (_T_MINUS_1 ** d) * (sign_pow(d * m) * vv)
    if br is Branch.ZERO:
        return BiPoly()
    if br is Branch.F:
        return BiPoly.coerce(f) * (_T_MINUS_1 ** m) * (sign_pow(sigma) * vv)
    if br is Branch.COFACTOR:
        cp = cofactors(f, g, dp - 1)
        P = BiPoly.coerce(cp.f_cof * f) + _T * BiPoly.coerce(cp.g_cof * g)
        return P * (_T_MINUS_1 ** (dp - 1)) * (sign_pow(sigma) * vv)
    return BiPoly.coerce(f * g) * (vv * resultant(f, g))


def pivotal_check(ctx: UdContext, pq: PQPair) -> bool:
    """``u_d * P_k = P * det M_d``."""
    return ud_det(ctx) * pq.P_k == pq.P * det(md_matrix(ctx, pq.k))
