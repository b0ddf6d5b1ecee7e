"""Majorization between diagonal parts.

``p`` is majorized by ``q`` exactly when the deterministic incoherent
transformation from the state with diagonal ``p`` to the one with diagonal
``q`` exists, so these comparisons are the deterministic convertibility
decisions.  Vectors of different dimension are compared after zero-padding
the shorter one.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from itertools import accumulate

from . import tolerances as tol
from .statevec import ProbVector, pad

__all__ = [
    "Comparison",
    "ComparisonOutcome",
    "prefix_sums",
    "majorized_by",
    "compare",
    "interconvertible",
]


class Comparison(Enum):
    EQUAL = "equal"
    FIRST_MAJORIZED = "first_majorized"
    SECOND_MAJORIZED = "second_majorized"
    INCOMPARABLE = "incomparable"


@dataclass(frozen=True)
class ComparisonOutcome:
    """Result of :func:`compare`.

    ``pq_violation`` is the first prefix length at which ``p``'s partial sum
    exceeds ``q``'s beyond tolerance (witnessing that p is not majorized by
    q); ``qp_violation`` is the same for the reverse direction.  Both are
    present exactly when the pair is incomparable.
    """

    tag: Comparison
    pq_violation: int | None = None
    qp_violation: int | None = None


def _common(p: ProbVector, q: ProbVector) -> tuple[ProbVector, ProbVector]:
    d = max(p.dim, q.dim)
    return pad(p, d), pad(q, d)


def prefix_sums(p: ProbVector) -> tuple[float, ...]:
    """Partial sums of the entries; the last one is 1 up to rounding."""
    return tuple(accumulate(p.entries))


def _first_violation(p: ProbVector, q: ProbVector) -> int | None:
    """Smallest prefix length l in [1, d-1] with sum(p[:l]) > sum(q[:l]) + TOL_CMP."""
    pp = prefix_sums(p)
    qq = prefix_sums(q)
    for length in range(1, p.dim):
        if pp[length - 1] > qq[length - 1] + tol.TOL_CMP:
            return length
    return None


def majorized_by(p: ProbVector, q: ProbVector) -> bool:
    """True iff every prefix sum of ``p`` is at most the matching one of ``q``."""
    p, q = _common(p, q)
    return _first_violation(p, q) is None


def interconvertible(p: ProbVector, q: ProbVector) -> bool:
    """Entrywise agreement within ``TOL_CMP`` after padding.

    Sorted-equal diagonals are reachable from each other by relabeling basis
    indices and adjusting phases, both free operations here.
    """
    p, q = _common(p, q)
    return all(abs(a - b) <= tol.TOL_CMP for a, b in zip(p.entries, q.entries))


def compare(p: ProbVector, q: ProbVector) -> ComparisonOutcome:
    """Classify the pair; equality is decided before the directional checks."""
    p, q = _common(p, q)
    if interconvertible(p, q):
        return ComparisonOutcome(Comparison.EQUAL)
    pq = _first_violation(p, q)
    qp = _first_violation(q, p)
    if pq is None and qp is not None:
        return ComparisonOutcome(Comparison.FIRST_MAJORIZED, qp_violation=qp)
    if qp is None and pq is not None:
        return ComparisonOutcome(Comparison.SECOND_MAJORIZED, pq_violation=pq)
    if pq is not None and qp is not None:
        return ComparisonOutcome(Comparison.INCOMPARABLE, pq_violation=pq, qp_violation=qp)
    # Knife edge: prefixes agree within tolerance in both directions while
    # some entry differs by slightly more.  Treat as first-majorized.
    return ComparisonOutcome(Comparison.FIRST_MAJORIZED)
