"""Explicit catalyst construction and bounded searches.

For 4-dimensional sources and targets a qubit catalyst ``(a, 1-a)`` works
exactly when ``a`` lies in a closed interval with endpoints given in closed
form.  Beyond that special case a lattice search over low-dimensional
catalysts, a tensor-power search for self-catalysis, and a
dimension-extension helper are provided.  Every candidate or endpoint is
confirmed by direct tensor majorization, never by the formulas alone.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from . import tolerances as tol
from .errors import DimensionBlowupError, EpsTooLargeError
from .majorize import Comparison, compare, majorized_by
from .statevec import ProbVector, pad, tensor

__all__ = [
    "CatalystInterval",
    "SelfCatalysisResult",
    "qubit_interval_d4",
    "grid_search_catalyst",
    "self_catalysis_order",
    "extend_catalyst_split",
]

# Refuse tensor-power searches beyond this many entries.
SIZE_CAP = 10**6


@dataclass(frozen=True)
class CatalystInterval:
    """Closed interval of qubit-catalyst weights ``a``; empty when no qubit works.

    When ``nonempty``, every ``a`` in ``[lower, upper]`` satisfies
    ``0.5 < a < 1`` and ``(a, 1-a)`` is a working catalyst.  ``reason``
    explains gate failures or an empty/invalid interval.
    """

    lower: float | None
    upper: float | None
    nonempty: bool
    reason: str | None = None


@dataclass(frozen=True)
class SelfCatalysisResult:
    """Smallest tensor power of the source that catalyzes the conversion, if any."""

    order: int | None
    searched_up_to: int


def _qubit(a: float) -> ProbVector:
    hi, lo = (a, 1.0 - a) if a >= 0.5 else (1.0 - a, a)
    return ProbVector((hi, lo))


def _qubit_works(p: ProbVector, q: ProbVector, a: float) -> bool:
    c = _qubit(a)
    return majorized_by(tensor(p, c), tensor(q, c))


def qubit_interval_d4(p: ProbVector, q: ProbVector) -> CatalystInterval:
    """Interval of workable qubit-catalyst weights for 4-dimensional pairs.

    Apart from outright comparability, a qubit catalyst can exist only when
    the prefix sums interleave as ``p1 <= q1``, ``p1+p2 > q1+q2`` and
    ``p1+p2+p3 <= q1+q2+q3``; those gates are checked first.  Bound terms
    whose denominator degenerates (``q3 = p3`` or ``p2 = q2``) are vacuous
    and omitted.  Both endpoints are re-validated by tensor majorization.
    """
    if max(p.dim, q.dim) > 4:
        raise ValueError("qubit interval is defined for dimension-4 pairs")
    p, q = pad(p, 4), pad(q, 4)
    p1, p2, p3, p4 = p.entries
    q1, q2, q3, q4 = q.entries

    if p1 > q1 + tol.TOL_CMP:
        return CatalystInterval(None, None, False, "gate failed: p1 <= q1")
    if (p1 + p2) - (q1 + q2) <= tol.TOL_CMP:
        return CatalystInterval(None, None, False, "gate failed: p1+p2 > q1+q2")
    if (p1 + p2 + p3) > (q1 + q2 + q3) + tol.TOL_CMP:
        return CatalystInterval(None, None, False, "gate failed: p1+p2+p3 <= q1+q2+q3")

    # q2 + q3 > 0 follows from the second gate; p1 + p2 > 0 always.
    lower_terms = [(p1 + p2 - q1) / (q2 + q3)]
    if abs(q3 - p3) > tol.TOL_CMP:
        lower_terms.append(1.0 - (p4 - q4) / (q3 - p3))
    upper_terms = [q1 / (p1 + p2)]
    if abs(p2 - q2) > tol.TOL_CMP:
        upper_terms.append((q1 - p1) / (p2 - q2))
    if p3 + p4 > 0.0:
        upper_terms.append(1.0 - q4 / (p3 + p4))
    elif q4 > tol.TOL_CMP:
        # Source rank below target rank: no catalyst can help.
        return CatalystInterval(None, None, False, "target support exceeds source support")

    lower = max(lower_terms)
    upper = min(upper_terms)
    if lower > upper + tol.TOL_CMP:
        return CatalystInterval(lower, upper, False, "interval is empty")
    if not (_qubit_works(p, q, lower) and _qubit_works(p, q, upper)):
        return CatalystInterval(lower, upper, False, "endpoint validation failed")
    return CatalystInterval(lower, upper, True)


def _partitions(total: int, parts: int, cap: int | None = None) -> Iterator[tuple[int, ...]]:
    """Non-increasing positive integer tuples summing to ``total``, ascending lex."""
    if cap is None:
        cap = total
    if parts == 1:
        if 1 <= total <= cap:
            yield (total,)
        return
    lo = -(-total // parts)
    hi = min(cap, total - (parts - 1))
    for first in range(lo, hi + 1):
        for rest in _partitions(total - first, parts - 1, first):
            yield (first, *rest)


def grid_search_catalyst(
    p: ProbVector, q: ProbVector, max_dim: int, resolution: int
) -> ProbVector | None:
    """First lattice catalyst (step ``1/resolution``) validated by tensor majorization.

    Candidates are enumerated by dimension from 2 up to ``max_dim`` and, per
    dimension, in ascending lexicographic order of the sorted lattice
    weights, so the result is reproducible.  Returns the trivial catalyst
    ``(1)`` when the pair is already comparable, and ``None`` when the
    lattice holds no witness.
    """
    if max_dim < 2:
        raise ValueError("max_dim must be at least 2")
    if resolution < 2:
        raise ValueError("resolution must be at least 2")
    d = max(p.dim, q.dim)
    p, q = pad(p, d), pad(q, d)
    if majorized_by(p, q):
        return ProbVector((1.0,))
    for m in range(2, max_dim + 1):
        for ks in _partitions(resolution, m):
            c = ProbVector(tuple(k / resolution for k in ks))
            if majorized_by(tensor(p, c), tensor(q, c)):
                return c
    return None


def self_catalysis_order(p: ProbVector, q: ProbVector, n_max: int) -> SelfCatalysisResult:
    """Smallest ``N <= n_max`` with ``p^(x)(N+1)`` majorized by ``q (x) p^(x)N``.

    Only incomparable pairs are meaningful here; comparable or equal pairs
    are rejected since the answer is decided without any catalyst.
    """
    if n_max < 1:
        raise ValueError("n_max must be at least 1")
    d = max(p.dim, q.dim)
    p, q = pad(p, d), pad(q, d)
    if compare(p, q).tag is not Comparison.INCOMPARABLE:
        raise ValueError("pair is not incomparable; self-catalysis is trivial")
    if d ** (n_max + 1) > SIZE_CAP:
        raise DimensionBlowupError(
            f"dim**{n_max + 1} = {d ** (n_max + 1)} exceeds the cap of {SIZE_CAP} entries"
        )
    source = p
    target = q
    for n in range(1, n_max + 1):
        source = tensor(source, p)
        target = tensor(target, p)
        if majorized_by(source, target):
            return SelfCatalysisResult(order=n, searched_up_to=n)
    return SelfCatalysisResult(order=None, searched_up_to=n_max)


def _split_last(p: ProbVector, eps: float) -> ProbVector:
    if eps == 0.0:
        return p
    if eps < 0.0:
        raise ValueError("split epsilon must be non-negative")
    last = p.entries[-1]
    if eps >= last:
        raise EpsTooLargeError(f"eps {eps!r} must stay below the last entry {last!r}")
    grown = sorted(p.entries[:-1] + (last - eps, eps), reverse=True)
    return ProbVector(tuple(grown))


def extend_catalyst_split(
    p: ProbVector,
    q: ProbVector,
    c: ProbVector,
    eps_p: float,
    eps_q: float,
) -> tuple[ProbVector, ProbVector, bool]:
    """Split the last component of each state and recheck the catalyst.

    The last entry ``x`` becomes the pair ``(x - eps, eps)``, raising the
    dimension by one; ``eps = 0`` leaves a state untouched.  ``c`` is assumed
    to catalyze the original pair; the returned flag reports whether it still
    catalyzes the split pair.
    """
    p2 = _split_last(p, eps_p)
    q2 = _split_last(q, eps_q)
    still = majorized_by(tensor(p2, c), tensor(q2, c))
    return p2, q2, still
