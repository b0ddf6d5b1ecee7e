"""Canonical diagonal parts of pure states.

Everything downstream works with the squared amplitude moduli of a pure
state, stored as a probability vector sorted in non-increasing order.
Relative phases never influence convertibility, so they are dropped at
canonicalization time.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Any, Sequence

import numpy as np

from . import tolerances as tol
from .errors import AllZeroError, DimTooSmallError, EpsOutOfRangeError

__all__ = [
    "StateSpec",
    "ProbVector",
    "canonicalize",
    "tensor",
    "perturb",
    "pad",
    "uniform",
]


@dataclass(frozen=True)
class StateSpec:
    """Raw non-negative weights, as supplied by a user, before normalization."""

    weights: tuple[float, ...]
    labels: tuple[str, ...] | None = None

    def __post_init__(self) -> None:
        weights = tuple(float(w) for w in self.weights)
        object.__setattr__(self, "weights", weights)
        if not weights:
            raise ValueError("a state needs at least one weight")
        if any(w < 0.0 for w in weights):
            raise ValueError("weights must be non-negative")
        if any(not math.isfinite(w) for w in weights):
            raise ValueError("weights must be finite")
        if self.labels is not None:
            labels = tuple(str(x) for x in self.labels)
            object.__setattr__(self, "labels", labels)
            if len(labels) != len(weights):
                raise ValueError("labels length must match weights length")

    @classmethod
    def from_string(cls, text: str) -> "StateSpec":
        """Parse a comma-separated list of reals, e.g. ``"0.4,0.4,0.2"``."""
        parts = [s for s in (t.strip() for t in text.split(",")) if s]
        if not parts:
            raise ValueError("empty weight list")
        return cls(tuple(float(s) for s in parts))

    @classmethod
    def from_json_obj(cls, obj: Any) -> "StateSpec":
        """Parse ``{"weights": [..], "labels": [..]?}``."""
        if not isinstance(obj, dict) or "weights" not in obj:
            raise ValueError('expected an object with a "weights" array')
        labels = obj.get("labels")
        return cls(tuple(obj["weights"]), None if labels is None else tuple(labels))


@dataclass(frozen=True)
class ProbVector:
    """Probability vector sorted non-increasingly; the diagonal part of a pure state.

    Invariants enforced at construction: entries are non-negative, sorted in
    non-increasing order, and sum to 1 within ``TOL_SUM``.
    """

    entries: tuple[float, ...]

    def __post_init__(self) -> None:
        entries = tuple(float(x) for x in self.entries)
        object.__setattr__(self, "entries", entries)
        if not entries:
            raise ValueError("empty probability vector")
        if any(x < 0.0 for x in entries):
            raise ValueError("entries must be non-negative")
        if any(entries[i] < entries[i + 1] for i in range(len(entries) - 1)):
            raise ValueError("entries must be sorted non-increasingly")
        total = math.fsum(entries)
        if abs(total - 1.0) > tol.TOL_SUM:
            raise ValueError(f"entries sum to {total!r}, expected 1")

    @property
    def dim(self) -> int:
        return len(self.entries)

    @property
    def max_entry(self) -> float:
        return self.entries[0]

    @property
    def min_entry(self) -> float:
        return self.entries[-1]

    @property
    def support(self) -> int:
        """Number of strictly positive entries (the coherence rank)."""
        return sum(1 for x in self.entries if x > 0.0)

    @classmethod
    def from_weights(cls, weights: Sequence[float]) -> "ProbVector":
        return canonicalize(StateSpec(tuple(weights)))


def canonicalize(spec: StateSpec) -> ProbVector:
    """Normalize, sort non-increasingly, and clamp sub-``ZERO_CLAMP`` entries to 0."""
    total = math.fsum(spec.weights)
    if total <= 0.0:
        raise AllZeroError("all weights are zero")
    scaled = sorted((w / total for w in spec.weights), reverse=True)
    clamped = tuple(0.0 if x < tol.ZERO_CLAMP else x for x in scaled)
    return ProbVector(clamped)


def tensor(p: ProbVector, q: ProbVector) -> ProbVector:
    """All pairwise products of entries, re-sorted non-increasingly."""
    n = p.dim * q.dim
    if n <= 4096:
        prods = sorted((a * b for a in p.entries for b in q.entries), reverse=True)
        return ProbVector(tuple(prods))
    arr = np.multiply.outer(np.asarray(p.entries), np.asarray(q.entries)).ravel()
    arr = np.sort(arr)[::-1]
    return ProbVector(tuple(arr.tolist()))


def perturb(p: ProbVector, eps: float) -> ProbVector:
    """Full-support mixture ``(1 - eps) * p + eps * uniform`` of the same dimension."""
    if not 0.0 < eps < 1.0:
        raise EpsOutOfRangeError(f"eps must lie in (0, 1), got {eps!r}")
    d = p.dim
    mixed = tuple((1.0 - eps) * x + eps / d for x in p.entries)
    return ProbVector(mixed)


def pad(p: ProbVector, dim: int) -> ProbVector:
    """Append zero entries up to ``dim``."""
    if dim < p.dim:
        raise DimTooSmallError(f"cannot pad dimension {p.dim} down to {dim}")
    if dim == p.dim:
        return p
    return ProbVector(p.entries + (0.0,) * (dim - p.dim))


def uniform(dim: int) -> ProbVector:
    """The maximally coherent state's diagonal: 1/dim everywhere."""
    if dim < 1:
        raise ValueError("dimension must be positive")
    return ProbVector((1.0 / dim,) * dim)
