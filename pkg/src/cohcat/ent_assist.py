"""Entanglement-assisted convertibility.

Sharing correlated ancillas between the parties relaxes catalytic
convertibility all the way down to two coarse monotones: the support size
must not grow and the Shannon entropy of the diagonal must strictly drop
(non-strictly, for the closure variant).  The classical mutual information
of the shared ancillas' joint diagonal bounds the coherence gained.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations_with_replacement
from typing import Iterator

import numpy as np

from . import tolerances as tol
from .errors import MarginalMismatchError
from .majorize import majorized_by
from .statevec import ProbVector, tensor

__all__ = [
    "EntAssistVerdict",
    "c_s",
    "c_r",
    "ent_assisted_feasible",
    "ent_assisted_closure",
    "coherence_gain_bound",
    "search_assisting_joint",
]


@dataclass(frozen=True)
class EntAssistVerdict:
    """Outcome of the assisted-conversion test; feasible = rank_ok and entropy_ok."""

    feasible: bool
    rank_ok: bool
    entropy_ok: bool
    entropy_gap: float


def c_s(p: ProbVector) -> int:
    """Support-size monotone (coherence rank of the pure state)."""
    return p.support


def c_r(p: ProbVector) -> float:
    """Shannon entropy of the diagonal in nats, with 0 ln 0 = 0."""
    return -math.fsum(x * math.log(x) for x in p.entries if x > 0.0)


def ent_assisted_feasible(p: ProbVector, q: ProbVector) -> EntAssistVerdict:
    """Convertibility with shared correlated ancillas returned intact.

    Feasible iff the target support does not exceed the source support and
    the Shannon entropy strictly decreases (beyond ``TOL_CMP``).
    """
    gap = c_r(p) - c_r(q)
    rank_ok = c_s(q) <= c_s(p)
    entropy_ok = gap > tol.TOL_CMP
    return EntAssistVerdict(rank_ok and entropy_ok, rank_ok, entropy_ok, gap)


def ent_assisted_closure(p: ProbVector, q: ProbVector) -> bool:
    """Closure variant: only a non-strict entropy decrease is required."""
    return c_r(q) <= c_r(p) + tol.TOL_CMP


def _entropy_of(values: np.ndarray) -> float:
    pos = values[values > 0.0]
    return float(-np.sum(pos * np.log(pos)))


def coherence_gain_bound(
    joint: np.ndarray | list, marginal_1: ProbVector, marginal_2: ProbVector
) -> float:
    """Classical mutual information of a two-party joint diagonal distribution.

    ``joint`` is the full grid (rows = first party), not a sorted vector,
    because the marginals depend on the grid layout.  The supplied marginals
    must match the computed row and column sums up to sorting; the returned
    value bounds the coherence gain obtainable from these correlations and
    is always non-negative.
    """
    grid = np.asarray(joint, dtype=float)
    if grid.ndim != 2:
        raise ValueError("joint must be a two-dimensional grid")
    if np.any(grid < 0.0) or abs(float(grid.sum()) - 1.0) > tol.TOL_SUM:
        raise ValueError("joint must be a probability distribution")
    rows = np.sort(grid.sum(axis=1))[::-1]
    cols = np.sort(grid.sum(axis=0))[::-1]
    for computed, supplied in ((rows, marginal_1), (cols, marginal_2)):
        if len(computed) != supplied.dim or any(
            abs(a - b) > tol.TOL_SUM for a, b in zip(computed, supplied.entries)
        ):
            raise MarginalMismatchError("supplied marginals disagree with the joint")
    info = _entropy_of(rows) + _entropy_of(cols) - _entropy_of(grid.ravel())
    return max(info, 0.0)


def _lattice_grids(shape: tuple[int, int], resolution: int) -> Iterator[np.ndarray]:
    cells = shape[0] * shape[1]
    for slots in combinations_with_replacement(range(cells), resolution):
        counts = [0] * cells
        for s in slots:
            counts[s] += 1
        yield np.asarray(counts, dtype=float).reshape(shape) / resolution


def search_assisting_joint(
    p: ProbVector,
    q: ProbVector,
    shape: tuple[int, int] = (2, 2),
    resolution: int = 6,
) -> np.ndarray | None:
    """Best-effort brute force for a correlated two-party ancilla witness.

    Scans lattice joints ``J`` on the given grid and returns the first one
    with ``p (x) sort(J)`` majorized by ``q (x) m1 (x) m2`` where ``m1, m2``
    are ``J``'s marginals, i.e. an explicit correlated resource enabling the
    conversion while both parties keep their reduced ancillas.  Tiny grids
    and coarse lattices only; a ``None`` result proves nothing.
    """
    for grid in _lattice_grids(shape, resolution):
        flat = np.sort(grid.ravel())[::-1]
        joint_vec = ProbVector(tuple(flat.tolist()))
        m1 = ProbVector(tuple(np.sort(grid.sum(axis=1))[::-1].tolist()))
        m2 = ProbVector(tuple(np.sort(grid.sum(axis=0))[::-1].tolist()))
        if majorized_by(tensor(p, joint_vec), tensor(q, tensor(m1, m2))):
            return grid
    return None
