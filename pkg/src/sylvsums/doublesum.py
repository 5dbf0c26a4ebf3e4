"""Sylvester's double sum, computed term by term over all subset pairs."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, Sequence

from .arith import UniPoly, poly_from_roots
from .errors import CorruptInputError, DomainError
from .linalg import RootList, r_product


@dataclass(frozen=True)
class SubsetSelection:
    """A subset of a root list with its complement, both in parent order.

    ``sign`` is ``(-1)**j`` where ``j`` counts the transpositions taking the
    parent list to ``chosen + complement``.
    """

    chosen: tuple
    complement: tuple
    sign: int


def enumerate_subsets(L: Sequence, size: int) -> Iterator[SubsetSelection]:
    """All ``size``-subsets of ``L`` in lexicographic order of their index sets."""
    if not 0 <= size <= len(L):
        raise DomainError(f"subset size {size} outside [0, {len(L)}]")
    for idx in combinations(range(len(L)), size):
        inversions = sum(i - pos for pos, i in enumerate(idx))
        keep = set(idx)
        yield SubsetSelection(
            chosen=tuple(L[i] for i in idx),
            complement=tuple(L[i] for i in range(len(L)) if i not in keep),
            sign=-1 if inversions % 2 else 1,
        )


@dataclass(frozen=True)
class DoubleSumTerm:
    a_sel: SubsetSelection
    b_sel: SubsetSelection
    value: UniPoly


def double_sum_terms(A: Sequence, B: Sequence, p: int, q: int) -> Iterator[DoubleSumTerm]:
    """The individual summands of ``Sylv^{p,q}(A, B; x)``."""
    A, B = RootList(A), RootList(B)
    m, n = len(A), len(B)
    if m < 1 or n < 1:
        raise DomainError("both root lists must be non-empty")
    if not 0 <= p <= m:
        raise DomainError(f"p={p} outside [0, {m}]")
    if not 0 <= q <= n:
        raise DomainError(f"q={q} outside [0, {n}]")
    b_sels = list(enumerate_subsets(B, q))
    for a_sel in enumerate_subsets(A, p):
        fa = poly_from_roots(a_sel.chosen)
        den_a = r_product(a_sel.chosen, a_sel.complement)
        for b_sel in b_sels:
            den = den_a * r_product(b_sel.chosen, b_sel.complement)
            if den == 0:
                raise CorruptInputError("zero denominator in double sum (repeated root?)")
            num = r_product(a_sel.chosen, b_sel.chosen) * r_product(a_sel.complement, b_sel.complement)
            coef = num / den
            value = (fa * poly_from_roots(b_sel.chosen)).scale(coef) if coef else UniPoly()
            yield DoubleSumTerm(a_sel, b_sel, value)


def sylvester_double_sum(A: Sequence, B: Sequence, p: int, q: int) -> UniPoly:
    """``Sylv^{p,q}(A, B; x)`` by direct summation over all subset pairs."""
    acc = UniPoly()
    for term in double_sum_terms(A, B, p, q):
        acc = acc + term.value
    return acc
