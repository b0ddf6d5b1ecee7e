"""Incoherent Kraus channels: verification, application, and synthesis.

A Kraus set is incoherent when every operator maps basis states to (scaled)
basis states, i.e. each column holds at most one nonzero entry.  Such
channels can never create coherence.  ``realize_deterministic`` builds an
explicit incoherent channel carrying one pure state to another whenever the
diagonal-majorization criterion allows it, by chaining two-outcome
operations along a sequence of two-level mixing steps.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Any

import numpy as np

from . import tolerances as tol
from .errors import DimensionMismatchError, InvalidChannelError, NotMajorizedError
from .majorize import majorized_by
from .statevec import ProbVector, pad

__all__ = [
    "PureState",
    "KrausSet",
    "ChannelReport",
    "verify",
    "apply",
    "compose",
    "realize_deterministic",
    "stochastic_subset_probability",
    "qutrit_ground_channel",
]

# Two normalized states count as the same outcome above this overlap.
COLLINEAR_OVERLAP = 1.0 - 1e-9


@dataclass(frozen=True)
class PureState:
    """State vector amplitudes; norm 1 within ``TOL_SUM``."""

    amplitudes: tuple[complex, ...]

    def __post_init__(self) -> None:
        amps = tuple(complex(a) for a in self.amplitudes)
        object.__setattr__(self, "amplitudes", amps)
        if not amps:
            raise ValueError("empty state vector")
        norm_sq = math.fsum(abs(a) ** 2 for a in amps)
        if abs(norm_sq - 1.0) > tol.TOL_SUM:
            raise ValueError(f"squared norm is {norm_sq!r}, expected 1")

    @property
    def dim(self) -> int:
        return len(self.amplitudes)

    @classmethod
    def from_diagonal(cls, p: ProbVector) -> "PureState":
        """Real-amplitude representative with the given diagonal part."""
        return cls(tuple(complex(math.sqrt(x)) for x in p.entries))

    def vector(self) -> np.ndarray:
        return np.asarray(self.amplitudes, dtype=complex)


@dataclass(frozen=True)
class KrausSet:
    """Finite collection of equally-shaped operators acting ``in_dim -> out_dim``."""

    operators: tuple[np.ndarray, ...]
    in_dim: int
    out_dim: int

    def __post_init__(self) -> None:
        if not self.operators:
            raise DimensionMismatchError("a Kraus set needs at least one operator")
        frozen = []
        for op in self.operators:
            arr = np.array(op, dtype=complex)
            if arr.shape != (self.out_dim, self.in_dim):
                raise DimensionMismatchError(
                    f"operator shape {arr.shape} does not match "
                    f"({self.out_dim}, {self.in_dim})"
                )
            arr.setflags(write=False)
            frozen.append(arr)
        object.__setattr__(self, "operators", tuple(frozen))

    @classmethod
    def square(cls, operators: list[np.ndarray] | tuple[np.ndarray, ...]) -> "KrausSet":
        if not operators:
            raise DimensionMismatchError("a Kraus set needs at least one operator")
        first = np.asarray(operators[0])
        return cls(tuple(operators), in_dim=first.shape[1], out_dim=first.shape[0])

    def to_json_dict(self) -> dict[str, Any]:
        """Row-major ``[re, im]`` pairs: the on-disk exchange format."""
        return {
            "in_dim": self.in_dim,
            "out_dim": self.out_dim,
            "operators": [
                [[[float(x.real), float(x.imag)] for x in row] for row in op]
                for op in self.operators
            ],
        }

    @classmethod
    def from_json_dict(cls, obj: dict[str, Any]) -> "KrausSet":
        try:
            in_dim = int(obj["in_dim"])
            out_dim = int(obj["out_dim"])
            raw_ops = obj["operators"]
        except (KeyError, TypeError) as exc:
            raise DimensionMismatchError(f"malformed Kraus JSON: {exc}") from exc
        ops = tuple(
            np.asarray([[complex(re, im) for re, im in row] for row in op])
            for op in raw_ops
        )
        return cls(ops, in_dim=in_dim, out_dim=out_dim)


@dataclass(frozen=True)
class ChannelReport:
    """Verification summary; ``valid`` iff the defect and violation list are clean."""

    valid: bool
    completeness_defect: float
    incoherence_violations: tuple[tuple[int, int], ...]


def verify(ks: KrausSet) -> ChannelReport:
    """Check completeness (sum K^dag K = I) and one-nonzero-per-column incoherence.

    The defect is the max-norm deviation from the identity; each
    ``(operator, column)`` pair holding more than one entry above
    ``TOL_CHAN`` in magnitude is listed as a violation.
    """
    gram = np.zeros((ks.in_dim, ks.in_dim), dtype=complex)
    for op in ks.operators:
        gram += op.conj().T @ op
    defect = float(np.max(np.abs(gram - np.eye(ks.in_dim))))
    violations = []
    for n, op in enumerate(ks.operators):
        for col in range(ks.in_dim):
            if int(np.count_nonzero(np.abs(op[:, col]) > tol.TOL_CHAN)) > 1:
                violations.append((n, col))
    valid = defect <= tol.TOL_CHAN and not violations
    return ChannelReport(valid, defect, tuple(violations))


def apply(ks: KrausSet, psi: PureState) -> list[tuple[float, PureState | None]]:
    """Branch probabilities and normalized post-measurement states.

    Branches with probability at most ``TOL_CHAN`` carry ``None`` instead of
    a state.  Probabilities sum to 1 by completeness.
    """
    report = verify(ks)
    if not report.valid:
        raise InvalidChannelError(
            f"defect {report.completeness_defect:g}, "
            f"{len(report.incoherence_violations)} incoherence violation(s)"
        )
    if psi.dim != ks.in_dim:
        raise DimensionMismatchError(f"state dim {psi.dim} != channel input {ks.in_dim}")
    vec = psi.vector()
    branches: list[tuple[float, PureState | None]] = []
    for op in ks.operators:
        out = op @ vec
        prob = float(np.vdot(out, out).real)
        if prob > tol.TOL_CHAN:
            branches.append((prob, PureState(tuple(out / math.sqrt(prob)))))
        else:
            branches.append((prob, None))
    return branches


def compose(outer: KrausSet, inner: KrausSet) -> KrausSet:
    """Channel applying ``inner`` first; operators are all pairwise products."""
    if inner.out_dim != outer.in_dim:
        raise DimensionMismatchError(
            f"inner output {inner.out_dim} != outer input {outer.in_dim}"
        )
    ops = []
    for a in outer.operators:
        for b in inner.operators:
            prod = a @ b
            if np.any(prod != 0.0):
                ops.append(prod)
    return KrausSet(tuple(ops), in_dim=inner.in_dim, out_dim=outer.out_dim)


def _t_transform_steps(
    start: tuple[float, ...], target: tuple[float, ...]
) -> list[tuple[int, int, float, float, float, float]]:
    """Two-level mixing steps carrying ``start`` onto ``target`` (start majorizes target).

    Each step records ``(i, j, t_i, t_j, s_i, s_j)``: the vector before the
    step holds ``(t_i, t_j)`` at positions ``(i, j)`` and the vector after
    holds ``(s_i, s_j)``.  The transfer always runs from the largest index
    still above target toward the first deficit beyond it, which keeps every
    intermediate vector sorted.
    """
    eps = 1e-13
    x = list(start)
    steps = []
    for _ in range(len(x) ** 2):
        i = max((k for k in range(len(x)) if x[k] - target[k] > eps), default=None)
        if i is None:
            break
        j = next((k for k in range(i + 1, len(x)) if target[k] - x[k] > eps), None)
        if j is None:
            break
        delta = min(x[i] - target[i], target[j] - x[j])
        t_i, t_j = x[i], x[j]
        x[i] -= delta
        x[j] += delta
        steps.append((i, j, t_i, t_j, x[i], x[j]))
    return steps


def _two_outcome_pair(
    d: int, i: int, j: int, t_i: float, t_j: float, s_i: float, s_j: float
) -> tuple[np.ndarray, np.ndarray]:
    """Incoherent pair mapping diagonal ``(.., s_i, .., s_j, ..)`` to ``(.., t_i, .., t_j, ..)``.

    With ``mu^2 = (s_i - t_j) / (t_i - t_j)`` both outcomes land exactly on
    the target state: one keeps the two levels in place, the other swaps
    them.  Off the two levels each operator is a multiple of the identity so
    that ``mu^2 + nu^2 = 1`` restores completeness.
    """
    mu_sq = (s_i - t_j) / (t_i - t_j)
    mu_sq = min(max(mu_sq, 0.0), 1.0)
    nu_sq = 1.0 - mu_sq
    mu, nu = math.sqrt(mu_sq), math.sqrt(nu_sq)
    keep = np.eye(d, dtype=complex) * mu
    keep[i, i] = mu * math.sqrt(t_i / s_i)
    keep[j, j] = mu * math.sqrt(t_j / s_j)
    swap = np.eye(d, dtype=complex) * nu
    swap[i, i] = 0.0
    swap[j, j] = 0.0
    swap[i, j] = nu * math.sqrt(t_i / s_j)
    swap[j, i] = nu * math.sqrt(t_j / s_i)
    return keep, swap


def realize_deterministic(p: ProbVector, q: ProbVector) -> KrausSet:
    """Incoherent channel sending the state with diagonal ``p`` to the one with ``q``.

    Exists iff ``p`` is majorized by ``q``.  The construction walks the
    two-level mixing chain from ``q`` down to ``p`` and composes one
    two-outcome incoherent operation per step, so the operator count is at
    most ``2**(d-1)``.
    """
    d = max(p.dim, q.dim)
    p, q = pad(p, d), pad(q, d)
    if not majorized_by(p, q):
        raise NotMajorizedError("source is not majorized by target")
    steps = _t_transform_steps(q.entries, p.entries)
    ops = [np.eye(d, dtype=complex)]
    for i, j, t_i, t_j, s_i, s_j in reversed(steps):
        keep, swap = _two_outcome_pair(d, i, j, t_i, t_j, s_i, s_j)
        new_ops = []
        for stage in (keep, swap):
            for op in ops:
                prod = stage @ op
                if np.any(prod != 0.0):
                    new_ops.append(prod)
        ops = new_ops
    return KrausSet(tuple(ops), in_dim=d, out_dim=d)


def stochastic_subset_probability(ks: KrausSet, psi: PureState, target: PureState) -> float:
    """Total probability of the branches collapsing onto ``target``.

    Branch states count as hits when their overlap with the normalized
    target exceeds ``1 - 1e-9`` in magnitude.
    """
    if target.dim != ks.out_dim:
        raise DimensionMismatchError(f"target dim {target.dim} != channel output {ks.out_dim}")
    tvec = target.vector()
    total = 0.0
    for prob, state in apply(ks, psi):
        if state is None:
            continue
        overlap = abs(complex(np.vdot(tvec, state.vector())))
        if overlap > COLLINEAR_OVERLAP:
            total += prob
    return total


def qutrit_ground_channel() -> KrausSet:
    """Eight-operator incoherent channel collapsing the uniform qutrit onto its ground state.

    The operators fall into three groups that are not related by permutations
    or phases, which makes this a useful verification fixture: two broadcast
    the first row, two flip one sign, and four mix the last two levels
    destructively.
    """
    a = 1.0 / (2.0 * math.sqrt(2.0))
    top = np.array([[a, a, a], [0, 0, 0], [0, 0, 0]], dtype=complex)
    flip = np.array([[-a, a, a], [0, 0, 0], [0, 0, 0]], dtype=complex)
    pair = np.array([[a, 0, 0], [0, a, -a], [0, 0, 0]], dtype=complex)
    return KrausSet((top, top, flip, flip, pair, pair, pair, pair), in_dim=3, out_dim=3)
