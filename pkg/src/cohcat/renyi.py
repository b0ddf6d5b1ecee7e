"""Renyi entropy families and catalytic convertibility criteria.

A catalyst-assisted deterministic conversion ``p -> q`` (with the catalyst
returned unchanged) exists under incoherent operations iff an infinite
family of entropy inequalities holds.  Writing ``S_a`` for the order-``a``
Renyi entropy with the sign convention

    S_a(p) = sign(a) * ln(sum_i p_i**a) / (1 - a)

and ``n(p, a) = (S_a(p) - ln d) / |a|`` for the normalized family, the
criterion is ``n(q, a) <= n(p, a)`` for every real ``a`` (strictly, for the
exact-catalyst version).  The deciders below evaluate

    delta(a) = n(q, a) - n(p, a)

on a finite grid plus the analytic limits at ``a = 0`` (mean log), ``a = 1``
(Shannon), and the closed-form asymptotic checks at ``a -> +/-inf``, which
reduce to comparing largest and smallest entries.  Natural logarithms are
used throughout; infinities follow IEEE extended-real semantics.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum

from . import tolerances as tol
from .errors import EpsOutOfRangeError, IdenticalStatesError, ZeroEntryInSourceError
from .majorize import interconvertible
from .statevec import ProbVector, pad

__all__ = [
    "AlphaGrid",
    "Decision",
    "FeasibilityVerdict",
    "renyi_entropy",
    "normalized_family",
    "power_mean",
    "delta_curve",
    "delta_curve_csv",
    "catalytic_feasible_strict",
    "catalytic_feasible_closure",
    "catalytic_feasible_nonneg",
    "shortcut_check",
]

INF = math.inf


def _default_points() -> tuple[float, ...]:
    mags = {2.0**k for k in range(-6, 7)} | {0.1, 0.25, 0.5, 0.75, 0.9, 1.1, 1.5}
    pts = {m for m in mags if m != 1.0} | {-m for m in mags}
    return tuple(sorted(pts))


@dataclass(frozen=True)
class AlphaGrid:
    """Finite evaluation orders plus flags for the analytic limits.

    Points must be finite, strictly increasing, and exclude 0 and 1; those
    two orders are always treated as limits with closed-form values.
    """

    points: tuple[float, ...] = field(default_factory=_default_points)
    include_zero: bool = True
    include_one: bool = True
    include_pos_inf: bool = True
    include_neg_inf: bool = True

    def __post_init__(self) -> None:
        pts = tuple(float(a) for a in self.points)
        object.__setattr__(self, "points", pts)
        if any(not math.isfinite(a) for a in pts):
            raise ValueError("grid points must be finite")
        if any(a in (0.0, 1.0) for a in pts):
            raise ValueError("orders 0 and 1 are analytic limits, not grid points")
        if any(pts[i] >= pts[i + 1] for i in range(len(pts) - 1)):
            raise ValueError("grid points must be strictly increasing")

    @classmethod
    def default(cls) -> "AlphaGrid":
        return cls()

    def nonneg(self) -> "AlphaGrid":
        """Restrict to orders >= 0 (drops the negative points and the -inf limit)."""
        return AlphaGrid(
            tuple(a for a in self.points if a > 0.0),
            include_zero=self.include_zero,
            include_one=self.include_one,
            include_pos_inf=self.include_pos_inf,
            include_neg_inf=False,
        )


class Decision(Enum):
    FEASIBLE = "feasible"
    INFEASIBLE = "infeasible"
    BOUNDARY = "boundary"


@dataclass(frozen=True)
class FeasibilityVerdict:
    """Decision plus diagnostics.

    ``witness_alpha`` is an order violating the required inequality when
    infeasible (``+inf``/``-inf`` stand for the asymptotic entry checks), or
    the order attaining the minimum slack on a boundary verdict.  ``margin``
    is the minimum slack ``-delta`` over the evaluated orders; negative when
    some inequality is violated.
    """

    decision: Decision
    witness_alpha: float | None
    margin: float


def _shannon(entries: tuple[float, ...]) -> float:
    return -math.fsum(x * math.log(x) for x in entries if x > 0.0)


def _mean_log(entries: tuple[float, ...]) -> float:
    if any(x <= 0.0 for x in entries):
        return -INF
    return math.fsum(math.log(x) for x in entries) / len(entries)


def _log_power_sum(entries: tuple[float, ...], alpha: float) -> float:
    """ln(sum_i p_i**alpha) over the support, in the log domain."""
    logs = [alpha * math.log(x) for x in entries if x > 0.0]
    m = max(logs)
    return m + math.log(math.fsum(math.exp(v - m) for v in logs))


def renyi_entropy(p: ProbVector, alpha: float) -> float:
    """Order-``alpha`` Renyi entropy, natural log, sign convention as in the module docs.

    Analytic limits: ``alpha=1`` gives Shannon, ``alpha=0`` gives ln(support),
    ``alpha=+inf`` gives ``-ln(max entry)`` and ``alpha=-inf`` gives
    ``ln(min entry)``.  For ``alpha < 0`` a zero entry makes the power sum
    diverge; the sign-adjusted value is ``-inf``.
    """
    entries = p.entries
    if alpha == 1.0:
        return _shannon(entries)
    if alpha == 0.0:
        return math.log(p.support)
    if alpha == INF:
        return -math.log(p.max_entry)
    if alpha == -INF:
        return math.log(p.min_entry) if p.min_entry > 0.0 else -INF
    if alpha < 0.0 and p.min_entry <= 0.0:
        return -INF
    sign = 1.0 if alpha > 0.0 else -1.0
    return sign * _log_power_sum(entries, alpha) / (1.0 - alpha)


def normalized_family(p: ProbVector, alpha: float) -> float:
    """``(S_alpha(p) - ln d) / |alpha|``, the normalized comparison family.

    Equals 0 for the uniform state at every order > 0 (at order 0 and at
    negative orders the convention shifts uniform below 0; differences
    between two states are unaffected since the shift depends only on the
    dimension).
    Limits: the mean log of the entries at ``alpha=0`` (``-inf`` when any
    entry vanishes), Shannon minus ``ln d`` at ``alpha=1``, and 0 at
    ``alpha=+/-inf`` (``-inf`` stays ``-inf`` at the negative limit when the
    state has a zero entry).
    """
    d = p.dim
    if alpha == 0.0:
        return _mean_log(p.entries)
    if alpha == 1.0:
        return _shannon(p.entries) - math.log(d)
    if alpha == INF:
        return 0.0
    if alpha == -INF:
        return 0.0 if p.min_entry > 0.0 else -INF
    s = renyi_entropy(p, alpha)
    if s == -INF:
        return -INF
    return (s - math.log(d)) / abs(alpha)


def power_mean(p: ProbVector, alpha: float) -> float:
    """``((1/d) * sum_i p_i**alpha) ** (1/alpha)``; geometric mean at ``alpha=0``.

    By convention the mean is 0 for ``alpha <= 0`` whenever an entry is 0.
    ``alpha=+inf`` and ``alpha=-inf`` give the largest and smallest entry.
    """
    if alpha == INF:
        return p.max_entry
    if alpha <= 0.0 and p.min_entry <= 0.0:
        return 0.0
    if alpha == -INF:
        return p.min_entry
    if alpha == 0.0:
        return math.exp(_mean_log(p.entries))
    d = p.dim
    return math.exp((_log_power_sum(p.entries, alpha) - math.log(d)) / alpha)


def _common(p: ProbVector, q: ProbVector) -> tuple[ProbVector, ProbVector]:
    d = max(p.dim, q.dim)
    return pad(p, d), pad(q, d)


def _delta(p: ProbVector, q: ProbVector, alpha: float) -> float:
    """``normalized_family(q, alpha) - normalized_family(p, alpha)`` with inf care."""
    lhs = normalized_family(q, alpha)
    rhs = normalized_family(p, alpha)
    if math.isinf(lhs) and math.isinf(rhs):
        return 0.0
    if lhs == -INF:
        return -INF
    if rhs == -INF:
        return INF
    return lhs - rhs


def delta_curve(
    p: ProbVector, q: ProbVector, grid: AlphaGrid | None = None
) -> list[tuple[float, float]]:
    """Evaluate ``delta`` over the grid and requested limits, ordered by alpha."""
    grid = grid or AlphaGrid.default()
    p, q = _common(p, q)
    alphas: list[float] = list(grid.points)
    if grid.include_zero:
        alphas.append(0.0)
    if grid.include_one:
        alphas.append(1.0)
    alphas.sort()
    if grid.include_neg_inf:
        alphas.insert(0, -INF)
    if grid.include_pos_inf:
        alphas.append(INF)
    return [(a, _delta(p, q, a)) for a in alphas]


def _alpha_label(alpha: float) -> str:
    if alpha == INF:
        return "+inf"
    if alpha == -INF:
        return "-inf"
    if alpha == 0.0:
        return "0"
    if alpha == 1.0:
        return "1"
    return repr(alpha)


def _value_label(value: float) -> str:
    if value == INF:
        return "+inf"
    if value == -INF:
        return "-inf"
    return repr(value)


def delta_curve_csv(points: list[tuple[float, float]]) -> str:
    """Serialize curve points as CSV with header ``alpha,delta``."""
    lines = ["alpha,delta"]
    lines.extend(f"{_alpha_label(a)},{_value_label(v)}" for a, v in points)
    return "\n".join(lines) + "\n"


def _decide(
    p: ProbVector,
    q: ProbVector,
    finite_points: tuple[float, ...],
    check_pos_inf: bool,
    check_neg_inf: bool,
    strict: bool,
) -> FeasibilityVerdict:
    """Shared decision core over ``delta`` evaluations plus asymptotic entry checks.

    The entry checks at the infinite orders (``max p <= max q`` and
    ``min p >= min q``) catch violations that only bite at orders beyond the
    grid; they are non-strict and contribute a witness, never a boundary
    margin.
    """
    alphas = sorted(set(finite_points) | {0.0, 1.0})
    slacks = [(a, -_delta(p, q, a)) for a in alphas]

    violations = [(a, -s) for a, s in slacks if -s > tol.TOL_CMP]
    if check_pos_inf and p.max_entry - q.max_entry > tol.TOL_CMP:
        violations.append((INF, p.max_entry - q.max_entry))
    if check_neg_inf and q.min_entry - p.min_entry > tol.TOL_CMP:
        violations.append((-INF, q.min_entry - p.min_entry))

    margin_alpha, margin = min(slacks, key=lambda item: item[1])
    if violations:
        witness = max(violations, key=lambda item: item[1])[0]
        return FeasibilityVerdict(Decision.INFEASIBLE, witness, margin)
    if strict and margin <= tol.TOL_CMP:
        return FeasibilityVerdict(Decision.BOUNDARY, margin_alpha, margin)
    return FeasibilityVerdict(Decision.FEASIBLE, None, margin)


def catalytic_feasible_strict(
    p: ProbVector, q: ProbVector, grid: AlphaGrid | None = None
) -> FeasibilityVerdict:
    """Exact-catalyst convertibility: ``delta < 0`` strictly at every order.

    Needs a full-support source distinct from the target.  Feasible means a
    finite-dimensional catalyst ``c`` exists with ``p (x) c`` majorized by
    ``q (x) c``; infeasible carries a violating order as witness; boundary
    means some inequality sits within tolerance of equality and the grid
    cannot certify strictness.
    """
    grid = grid or AlphaGrid.default()
    p, q = _common(p, q)
    if p.min_entry <= 0.0:
        raise ZeroEntryInSourceError("source must have full support; perturb it first")
    if interconvertible(p, q):
        raise IdenticalStatesError("states are equal up to relabeling")
    return _decide(p, q, grid.points, check_pos_inf=True, check_neg_inf=True, strict=True)


def catalytic_feasible_closure(
    p: ProbVector, q: ProbVector, grid: AlphaGrid | None = None
) -> FeasibilityVerdict:
    """Closure variant: ``delta <= 0`` non-strictly at every order.

    Feasible means conversion is possible from an arbitrarily small
    full-support perturbation of the source (equivalently, lies in the
    closure of the catalytically reachable set).  Identical states are
    feasible here.
    """
    grid = grid or AlphaGrid.default()
    p, q = _common(p, q)
    return _decide(p, q, grid.points, check_pos_inf=True, check_neg_inf=True, strict=False)


def catalytic_feasible_nonneg(
    p: ProbVector, q: ProbVector, grid: AlphaGrid | None = None
) -> FeasibilityVerdict:
    """Non-negative-order variant: ``delta <= 0`` for every order >= 0 only.

    The negative orders drop out when an ancilla qubit arbitrarily close to
    an incoherent state is allowed alongside the perturbed source, so only
    the ``a in [0, inf)`` family constrains the conversion.
    """
    grid = (grid or AlphaGrid.default()).nonneg()
    p, q = _common(p, q)
    return _decide(p, q, grid.points, check_pos_inf=True, check_neg_inf=False, strict=False)


def _trimmed_support(p: ProbVector, eps: float) -> int:
    """Support size after dropping the largest tail of smallest entries with mass < eps."""
    asc = sorted(p.entries)
    mass = 0.0
    dropped = 0
    for x in asc:
        if mass + x < eps:
            mass += x
            dropped += 1
        else:
            break
    return sum(1 for x in asc[dropped:] if x > 0.0)


def _capped_level(p: ProbVector, eps: float) -> float:
    """Water level lambda with ``sum_i max(p_i - lambda, 0) = eps``."""
    d = p.dim
    prefix = 0.0
    for k in range(1, d + 1):
        prefix += p.entries[k - 1]
        lam = (prefix - eps) / k
        nxt = p.entries[k] if k < d else -INF
        if lam >= nxt:
            return max(lam, 0.0)
    return max((prefix - eps) / d, 0.0)


def shortcut_check(p: ProbVector, q: ProbVector, eps: float) -> FeasibilityVerdict:
    """Sufficient smoothed-entropy test covering the whole order range >= 0.

    Three closed-form conditions are evaluated instead of a grid sweep:

    1. ``ln(support(q)) <= ln(support of p after trimming < eps tail mass)``
       (the smoothed order-0 condition, covering orders in (0, 1));
    2. ``-ln(level capping q's largest entries with eps trimmed mass) <=
       -ln(max p)`` (the smoothed order-inf condition, covering orders > 1);
    3. mean log of ``q`` at most mean log of ``p`` (the order-0 limit).

    Feasible here implies the full non-negative-order family holds, at the
    price of being conservative: the smoothing corrections are dropped on
    their favorable side, so many feasible pairs are reported as boundary or
    infeasible.  Witness orders: 0 for conditions 1 and 3, ``+inf`` for
    condition 2.
    """
    if not 0.0 < eps < 1.0:
        raise EpsOutOfRangeError(f"eps must lie in (0, 1), got {eps!r}")
    p, q = _common(p, q)

    slack_rank = math.log(_trimmed_support(p, eps)) - math.log(q.support)
    lam = _capped_level(q, eps)
    slack_cap = math.log(lam) - math.log(p.max_entry)
    ml_p = _mean_log(p.entries)
    ml_q = _mean_log(q.entries)
    if ml_p == -INF and ml_q == -INF:
        slack_mean = 0.0
    elif ml_q == -INF:
        slack_mean = INF
    elif ml_p == -INF:
        slack_mean = -INF
    else:
        slack_mean = ml_p - ml_q

    checks = [(0.0, slack_rank), (INF, slack_cap), (0.0, slack_mean)]
    violations = [(a, s) for a, s in checks if s < -tol.TOL_CMP]
    margin_alpha, margin = min(checks, key=lambda item: item[1])
    if violations:
        witness = min(violations, key=lambda item: item[1])[0]
        return FeasibilityVerdict(Decision.INFEASIBLE, witness, margin)
    if margin <= tol.TOL_CMP:
        return FeasibilityVerdict(Decision.BOUNDARY, margin_alpha, margin)
    return FeasibilityVerdict(Decision.FEASIBLE, None, margin)
