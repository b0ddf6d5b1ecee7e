"""Optimal stochastic conversion probabilities.

The tail sums ``C_l(p) = sum(p[l:])`` form a complete family of monotones
for incoherent transformations of pure states: the best achievable
probability of converting ``p`` into ``q`` is the minimum of the ratios
``C_l(p) / C_l(q)`` capped at 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import accumulate

from . import tolerances as tol
from .majorize import majorized_by
from .statevec import ProbVector, pad, tensor

__all__ = [
    "MonotoneProfile",
    "monotone_profile",
    "optimal_probability",
    "catalytic_probability",
    "enhancement_possible",
]


@dataclass(frozen=True)
class MonotoneProfile:
    """Tail sums ``values[l] = sum(entries[l:])``; non-increasing with values[0] ~= 1."""

    values: tuple[float, ...]


def monotone_profile(p: ProbVector) -> MonotoneProfile:
    tails = list(accumulate(reversed(p.entries)))
    tails.reverse()
    return MonotoneProfile(tuple(tails))


def _common(p: ProbVector, q: ProbVector) -> tuple[ProbVector, ProbVector]:
    d = max(p.dim, q.dim)
    return pad(p, d), pad(q, d)


def optimal_probability(p: ProbVector, q: ProbVector) -> float:
    """Best probability of an incoherent conversion taking ``p`` to ``q``.

    Returns exactly 1.0 whenever ``p`` is majorized by ``q``.  Indices where
    the target tail sum vanishes (trailing zeros of ``q``) impose no
    constraint and are skipped.
    """
    p, q = _common(p, q)
    if majorized_by(p, q):
        return 1.0
    cp = monotone_profile(p).values
    cq = monotone_profile(q).values
    best = 1.0
    for a, b in zip(cp, cq):
        if b <= 0.0:
            continue
        ratio = a / b
        if ratio < best:
            best = ratio
    return min(1.0, max(0.0, best))


def catalytic_probability(p: ProbVector, q: ProbVector, c: ProbVector) -> float:
    """Optimal probability for ``p (x) c -> q (x) c`` with the catalyst returned intact."""
    return optimal_probability(tensor(p, c), tensor(q, c))


def enhancement_possible(p: ProbVector, q: ProbVector) -> bool:
    """Whether some catalyst raises the conversion probability above the bare optimum.

    A catalyst helps iff ``optimal_probability(p, q) < min(p_min / q_min, 1)``
    where the minima are taken over the joint support (common trailing zeros
    are ignored).  When ``q``'s smallest entry vanishes while ``p``'s does
    not, the ratio is unbounded and the condition degenerates to P < 1.
    """
    p, q = _common(p, q)
    prob = optimal_probability(p, q)
    d = max(p.support, q.support)
    p_min = p.entries[d - 1]
    q_min = q.entries[d - 1]
    if q_min <= 0.0:
        bound = 1.0
    else:
        bound = min(p_min / q_min, 1.0)
    return prob < bound - tol.TOL_CMP
