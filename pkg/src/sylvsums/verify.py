"""Closed-form evaluation of ``Sylv^{p,q}`` and randomized verification suites."""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from .arith import UniPoly, binomial, poly_from_roots, sign_pow
from .doublesum import sylvester_double_sum
from .errors import DomainError
from .linalg import RootList
from .subres import cofactors, resultant, sres
from .sylvmatrix import (
    Branch,
    UdContext,
    branch_of,
    companion_det_check,
    condition_check,
    factor1_check,
    factor2_check,
    leading_data_check,
    md_closed_form,
    md_det,
    pivotal_check,
    pq_polys,
    scaling_relation_check,
    ud_closed_form,
    ud_det,
)

NUM_RANGE = (-99, 99)
DEN_RANGE = (1, 20)


@dataclass(frozen=True)
class MainCase:
    tag: Branch
    m: int
    n: int
    p: int
    q: int
    d: int
    k: int
    sigma: int


def classify(m: int, n: int, p: int, q: int) -> MainCase:
    if not 1 <= m <= n:
        raise DomainError(f"need 1 <= m <= n, got m={m}, n={n}")
    if not (0 <= p <= m and 0 <= q <= n):
        raise DomainError(f"(p, q) = ({p}, {q}) outside [0, {m}] x [0, {n}]")
    d = p + q
    k = m + n - d - 1
    sigma = q * (m - p) + n * (d - m) + d + n - q - 1
    return MainCase(branch_of(m, n, d), m, n, p, q, d, k, sigma)


def main_theorem_rhs(A: Sequence, B: Sequence, p: int, q: int) -> UniPoly:
    """The closed-form value of ``Sylv^{p,q}(A, B; x)`` for ``|A| <= |B|``."""
    A, B = RootList(A), RootList(B)
    case = classify(len(A), len(B), p, q)
    m, n, d, k = case.m, case.n, case.d, case.k
    f, g = poly_from_roots(A), poly_from_roots(B)
    if case.tag is Branch.SRES:
        return sres(f, g, d).scale(sign_pow(p * (m - d)) * binomial(d, p))
    if case.tag is Branch.ZERO:
        return UniPoly()
    if case.tag is Branch.F:
        return f.scale(sign_pow((m + q) * (p + 1)) * binomial(m, p))
    if case.tag is Branch.COFACTOR:
        cp = cofactors(f, g, k)
        val = (cp.f_cof * f).scale(binomial(k, m - p)) - (cp.g_cof * g).scale(binomial(k, n - q))
        return val.scale(sign_pow(case.sigma))
    return (f * g).scale(resultant(f, g))


# ---------------------------------------------------------------------------
# reports

@dataclass
class CheckRecord:
    name: str
    case: str
    passed: bool
    witness: Optional[tuple[str, str]] = None

    def to_json(self) -> dict:
        out = {"name": self.name, "case": self.case, "pass": self.passed}
        if self.witness is not None:
            out["witness"] = list(self.witness)
        return out


@dataclass
class VerificationReport:
    m: int
    n: int
    seed: Optional[int]
    A: RootList
    B: RootList
    checks: list[CheckRecord] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list[CheckRecord]:
        return [c for c in self.checks if not c.passed]

    def add(self, name: str, case, passed: bool, lhs=None, rhs=None) -> None:
        witness = None if passed or lhs is None else (str(lhs), str(rhs))
        self.checks.append(CheckRecord(name, str(case), bool(passed), witness))

    def extend(self, other: "VerificationReport") -> None:
        self.checks.extend(other.checks)

    def to_json(self) -> dict:
        return {
            "m": self.m,
            "n": self.n,
            "seed": self.seed,
            "checks": [c.to_json() for c in self.checks],
            "pass": self.passed,
        }


def _require_m_le_n(A, B):
    A, B = RootList(A), RootList(B)
    if not 1 <= len(A) <= len(B):
        raise DomainError(f"need 1 <= |A| <= |B|, got |A|={len(A)}, |B|={len(B)}")
    return A, B


def verify_main_theorem(A: Sequence, B: Sequence, seed: Optional[int] = None) -> VerificationReport:
    """Compare the double sum with its closed form for every ``(p, q)``."""
    A, B = _require_m_le_n(A, B)
    m, n = len(A), len(B)
    rep = VerificationReport(m, n, seed, A, B)
    for p in range(m + 1):
        for q in range(n + 1):
            lhs = sylvester_double_sum(A, B, p, q)
            rhs = main_theorem_rhs(A, B, p, q)
            rep.add(f"main[p={p},q={q}]", classify(m, n, p, q).tag, lhs == rhs, lhs, rhs)
    return rep


def verify_matrix_suite(A: Sequence, B: Sequence, seed: Optional[int] = None) -> VerificationReport:
    """Run every ``U_d`` identity for all ``0 <= d <= m + n``."""
    A, B = _require_m_le_n(A, B)
    m, n = len(A), len(B)
    rep = VerificationReport(m, n, seed, A, B)
    for d in range(m + n + 1):
        ctx = UdContext(A, B, d)
        br = ctx.branch
        rep.add(f"factor1[d={d}]", br, factor1_check(ctx))
        u, closed = ud_det(ctx), ud_closed_form(ctx)
        rep.add(f"ud_closed_form[d={d}]", br, u == closed, u, closed)
        for p in range(m + 1):
            rep.add(f"scaling[d={d},p={p}]", br, scaling_relation_check(ctx, p))
        if br is Branch.ZERO:
            rep.add(f"vanishing[d={d}]", br, u.is_zero(), u, 0)
            continue
        pq = pq_polys(ctx)
        rep.add(f"condition[d={d}]", br, condition_check(ctx, pq))
        rep.add(f"leading_data[d={d}]", br, leading_data_check(ctx, pq), pq.P_k, pq.P)
        rep.add(f"companion_det[d={d}]", br, companion_det_check(pq, ctx))
        rep.add(f"factor2[d={d}]", br, factor2_check(ctx, pq))
        md, md_closed = md_det(ctx), md_closed_form(ctx)
        rep.add(f"md_closed_form[d={d}]", br, md == md_closed, md, md_closed)
        rep.add(f"pivotal[d={d}]", br, pivotal_check(ctx, pq))
    return rep


def random_instance(m: int, n: int, seed: int) -> tuple[RootList, RootList]:
    """Reproducible root lists with all ``m + n`` values pairwise distinct."""
    if not 1 <= m <= n:
        raise DomainError(f"need 1 <= m <= n, got m={m}, n={n}")
    rng = random.Random(seed)
    vals: list[Fraction] = []
    seen: set[Fraction] = set()
    while len(vals) < m + n:
        v = Fraction(rng.randint(*NUM_RANGE), rng.randint(*DEN_RANGE))
        if v not in seen:
            seen.add(v)
            vals.append(v)
    return RootList(vals[:m]), RootList(vals[m:])


def run_suites(m: int, n: int, seed: int, suite: str = "all") -> VerificationReport:
    """Generate one instance and run the selected suite(s) on it."""
    A, B = random_instance(m, n, seed)
    return run_suites_on(A, B, seed, suite)


def run_suites_on(A, B, seed: Optional[int], suite: str = "all") -> VerificationReport:
    if suite not in ("main", "matrix", "all"):
        raise DomainError(f"unknown suite {suite!r}")
    A, B = _require_m_le_n(A, B)
    rep = VerificationReport(len(A), len(B), seed, A, B)
    if suite in ("main", "all"):
        rep.extend(verify_main_theorem(A, B, seed))
    if suite in ("matrix", "all"):
        rep.extend(verify_matrix_suite(A, B, seed))
    return rep
