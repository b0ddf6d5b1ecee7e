"""Full conversion report: every verdict for a pair of states in one document.

The JSON encoding is deterministic (sorted keys, two-space indent, trailing
newline) and lossless: non-finite floats are written as the strings
``"+inf"``, ``"-inf"`` and ``"nan"`` and parsed back, so emit, parse and
re-emit produce identical bytes.
"""

from __future__ import annotations

import json
import math
import time
from dataclasses import asdict, dataclass
from typing import Any

from . import tolerances as tol
from .catalyst_search import grid_search_catalyst, qubit_interval_d4, self_catalysis_order
from .ent_assist import ent_assisted_closure, ent_assisted_feasible
from .errors import CohcatError
from .majorize import compare
from .renyi import (
    AlphaGrid,
    FeasibilityVerdict,
    catalytic_feasible_closure,
    catalytic_feasible_nonneg,
    catalytic_feasible_strict,
    shortcut_check,
)
from .statevec import ProbVector, StateSpec, canonicalize
from .stochastic import enhancement_possible, optimal_probability

__all__ = ["ConversionReport", "build_report"]

DEFAULT_EPS = 1e-3
DEFAULT_N_MAX = 3
DEFAULT_MAX_DIM = 2
DEFAULT_RESOLUTION = 200


def _encode(value: Any) -> Any:
    if isinstance(value, float):
        if math.isinf(value):
            return "+inf" if value > 0 else "-inf"
        if math.isnan(value):
            return "nan"
        return value
    if isinstance(value, dict):
        return {k: _encode(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_encode(v) for v in value]
    return value


def _decode(value: Any) -> Any:
    if value == "+inf":
        return math.inf
    if value == "-inf":
        return -math.inf
    if value == "nan":
        return math.nan
    if isinstance(value, dict):
        return {k: _decode(v) for k, v in value.items()}
    if isinstance(value, list):
        return [_decode(v) for v in value]
    return value


@dataclass(frozen=True)
class ConversionReport:
    """Aggregated verdicts for one source/target pair; see :func:`build_report`."""

    inputs: dict[str, Any]
    settings: dict[str, Any]
    deterministic: dict[str, Any]
    probability: float
    enhancement: bool
    catalytic: dict[str, Any]
    catalyst: dict[str, Any]
    self_catalysis: dict[str, Any]
    ent_assist: dict[str, Any]
    timings: dict[str, float]

    def to_json(self) -> str:
        return json.dumps(_encode(asdict(self)), indent=2, sort_keys=True) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "ConversionReport":
        obj = _decode(json.loads(text))
        return cls(**obj)


def _verdict_dict(verdict: FeasibilityVerdict) -> dict[str, Any]:
    return {
        "decision": verdict.decision.value,
        "witness_alpha": verdict.witness_alpha,
        "margin": verdict.margin,
    }


def _guarded(fn, *args) -> dict[str, Any]:
    """Run a verdict function, turning precondition failures into a record."""
    try:
        result = fn(*args)
    except (CohcatError, ValueError) as exc:
        return {"error": str(exc)}
    if isinstance(result, FeasibilityVerdict):
        return _verdict_dict(result)
    return result


def _echo(spec: StateSpec, canonical: ProbVector) -> dict[str, Any]:
    echoed: dict[str, Any] = {
        "weights": list(spec.weights),
        "canonical": list(canonical.entries),
    }
    if spec.labels is not None:
        echoed["labels"] = list(spec.labels)
    return echoed


def build_report(
    source: StateSpec,
    target: StateSpec,
    *,
    eps: float = DEFAULT_EPS,
    n_max: int = DEFAULT_N_MAX,
    max_dim: int = DEFAULT_MAX_DIM,
    resolution: int = DEFAULT_RESOLUTION,
    grid: AlphaGrid | None = None,
) -> ConversionReport:
    """Evaluate every decision procedure on the canonicalized pair.

    Procedures whose preconditions fail (zero entries, comparable pairs,
    dimension limits) contribute an ``{"error": ...}`` record instead of
    aborting the report.
    """
    grid = grid or AlphaGrid.default()
    p = canonicalize(source)
    q = canonicalize(target)
    timings: dict[str, float] = {}
    total_start = time.perf_counter()

    def timed(name: str, fn):
        start = time.perf_counter()
        result = fn()
        timings[name] = time.perf_counter() - start
        return result

    outcome = timed("deterministic", lambda: compare(p, q))
    probability = timed("probability", lambda: optimal_probability(p, q))
    enhancement = timed("enhancement", lambda: enhancement_possible(p, q))
    catalytic = timed(
        "catalytic",
        lambda: {
            "strict": _guarded(catalytic_feasible_strict, p, q, grid),
            "closure": _guarded(catalytic_feasible_closure, p, q, grid),
            "nonneg": _guarded(catalytic_feasible_nonneg, p, q, grid),
            "shortcut": _guarded(shortcut_check, p, q, eps),
        },
    )

    def catalyst_section() -> dict[str, Any]:
        interval = _guarded(qubit_interval_d4, p, q)
        if not isinstance(interval, dict):
            interval = {
                "lower": interval.lower,
                "upper": interval.upper,
                "nonempty": interval.nonempty,
                "reason": interval.reason,
            }
        witness = grid_search_catalyst(p, q, max_dim=max_dim, resolution=resolution)
        return {
            "interval": interval,
            "witness": None if witness is None else list(witness.entries),
        }

    catalyst = timed("catalyst", catalyst_section)

    def self_cat_section() -> dict[str, Any]:
        result = _guarded(self_catalysis_order, p, q, n_max)
        if isinstance(result, dict):
            return result
        return {"order": result.order, "searched_up_to": result.searched_up_to}

    self_cat = timed("self_catalysis", self_cat_section)

    def ent_section() -> dict[str, Any]:
        verdict = ent_assisted_feasible(p, q)
        return {
            "feasible": verdict.feasible,
            "rank_ok": verdict.rank_ok,
            "entropy_ok": verdict.entropy_ok,
            "entropy_gap": verdict.entropy_gap,
            "closure": ent_assisted_closure(p, q),
        }

    ent = timed("ent_assist", ent_section)
    timings["total"] = time.perf_counter() - total_start

    return ConversionReport(
        inputs={"source": _echo(source, p), "target": _echo(target, q)},
        settings={
            "eps": eps,
            "n_max": n_max,
            "max_dim": max_dim,
            "resolution": resolution,
            "alpha_grid": list(grid.points),
            "tol_cmp": tol.TOL_CMP,
        },
        deterministic={
            "tag": outcome.tag.value,
            "pq_violation": outcome.pq_violation,
            "qp_violation": outcome.qp_violation,
        },
        probability=probability,
        enhancement=enhancement,
        catalytic=catalytic,
        catalyst=catalyst,
        self_catalysis=self_cat,
        ent_assist=ent,
        timings=timings,
    )
