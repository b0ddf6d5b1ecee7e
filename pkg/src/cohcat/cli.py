"""Command-line front end.

Every subcommand evaluates the same library calls a script would make on
canonicalized inputs and exits with scriptable semantics: 0 for
feasible/true verdicts, 1 for infeasible/false ones, 2 for input errors.
States are passed as comma-separated weight lists or ``@file.json``
references holding ``{"weights": [...], "labels": [...]}``.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from typing import Sequence

from . import tolerances as tol
from .catalyst_search import grid_search_catalyst, qubit_interval_d4, self_catalysis_order
from .ent_assist import ent_assisted_closure, ent_assisted_feasible
from .errors import AllZeroError, CohcatError, NotMajorizedError
from .kraus import KrausSet, PureState, apply, realize_deterministic, stochastic_subset_probability, verify
from .majorize import Comparison, compare
from .renyi import (
    Decision,
    catalytic_feasible_closure,
    catalytic_feasible_nonneg,
    catalytic_feasible_strict,
    delta_curve,
    delta_curve_csv,
    shortcut_check,
)
from .report import DEFAULT_EPS, DEFAULT_MAX_DIM, DEFAULT_N_MAX, DEFAULT_RESOLUTION, build_report
from .statevec import ProbVector, StateSpec, canonicalize
from .stochastic import catalytic_probability, optimal_probability

__all__ = ["run", "main"]

_TAG_DISPLAY = {
    Comparison.EQUAL: "Equal",
    Comparison.FIRST_MAJORIZED: "Convertible",
    Comparison.SECOND_MAJORIZED: "ReverseConvertible",
    Comparison.INCOMPARABLE: "Incomparable",
}


def _load_spec(text: str) -> StateSpec:
    if text.startswith("@"):
        with open(text[1:], "r", encoding="utf-8") as fh:
            return StateSpec.from_json_obj(json.load(fh))
    return StateSpec.from_string(text)


def _load_state(text: str) -> ProbVector:
    return canonicalize(_load_spec(text))


def _amplitude_state(spec: StateSpec) -> PureState:
    """Real-amplitude state with the given diagonal weights, order preserved.

    Channels are basis-dependent, so unlike every majorization check the
    weights are normalized but never sorted here.
    """
    total = math.fsum(spec.weights)
    if total <= 0.0:
        raise AllZeroError("state weights sum to zero")
    return PureState(tuple(complex(math.sqrt(w / total)) for w in spec.weights))


def _fmt(value: float, precision: int) -> str:
    if value == math.inf:
        return "+inf"
    if value == -math.inf:
        return "-inf"
    return f"{value:.{precision}f}"


def _fmt_alpha(alpha: float | None, precision: int) -> str:
    return "none" if alpha is None else _fmt(alpha, precision)


def _cmd_check(args: argparse.Namespace) -> int:
    outcome = compare(_load_state(args.source), _load_state(args.target))
    details = []
    if outcome.pq_violation is not None:
        details.append(f"forward violated at prefix {outcome.pq_violation}")
    if outcome.qp_violation is not None:
        details.append(f"reverse violated at prefix {outcome.qp_violation}")
    suffix = f" ({'; '.join(details)})" if details else ""
    print(f"{_TAG_DISPLAY[outcome.tag]}{suffix}")
    return 0 if outcome.tag in (Comparison.EQUAL, Comparison.FIRST_MAJORIZED) else 1


def _cmd_prob(args: argparse.Namespace) -> int:
    p = _load_state(args.source)
    q = _load_state(args.target)
    if args.catalyst is not None:
        value = catalytic_probability(p, q, _load_state(args.catalyst))
    else:
        value = optimal_probability(p, q)
    print(_fmt(value, args.precision))
    return 0


def _cmd_catalytic(args: argparse.Namespace) -> int:
    p = _load_state(args.source)
    q = _load_state(args.target)
    if args.mode == "strict":
        verdict = catalytic_feasible_strict(p, q)
    elif args.mode == "closure":
        verdict = catalytic_feasible_closure(p, q)
    elif args.mode == "nonneg":
        verdict = catalytic_feasible_nonneg(p, q)
    else:
        verdict = shortcut_check(p, q, args.eps)
    witness = _fmt_alpha(verdict.witness_alpha, args.precision)
    margin = _fmt(verdict.margin, args.precision)
    print(f"{verdict.decision.value.capitalize()} (witness alpha = {witness}, margin = {margin})")
    return 0 if verdict.decision is Decision.FEASIBLE else 1


def _cmd_find_catalyst(args: argparse.Namespace) -> int:
    p = _load_state(args.source)
    q = _load_state(args.target)
    found = False
    if max(p.dim, q.dim) <= 4:
        interval = qubit_interval_d4(p, q)
        if interval.nonempty:
            found = True
            print(
                f"qubit interval: [{_fmt(interval.lower, args.precision)}, "
                f"{_fmt(interval.upper, args.precision)}]"
            )
        else:
            print(f"qubit interval: empty ({interval.reason})")
    witness = grid_search_catalyst(p, q, max_dim=args.max_dim, resolution=args.resolution)
    if witness is not None:
        found = True
        print("witness: " + ",".join(_fmt(x, args.precision) for x in witness.entries))
    else:
        print("witness: none")
    return 0 if found else 1


def _cmd_self_cat(args: argparse.Namespace) -> int:
    result = self_catalysis_order(_load_state(args.source), _load_state(args.target), args.n_max)
    if result.order is None:
        print(f"no self-catalysis up to order {result.searched_up_to}")
        return 1
    print(f"order = {result.order} (searched up to {result.searched_up_to})")
    return 0


def _cmd_ent_assist(args: argparse.Namespace) -> int:
    p = _load_state(args.source)
    q = _load_state(args.target)
    if args.closure:
        feasible = ent_assisted_closure(p, q)
        print("Feasible (closure)" if feasible else "Infeasible (closure)")
        return 0 if feasible else 1
    verdict = ent_assisted_feasible(p, q)
    gap = _fmt(verdict.entropy_gap, args.precision)
    if verdict.feasible:
        print(f"Feasible (entropy gap = {gap})")
        return 0
    print(f"Infeasible (rank_ok = {verdict.rank_ok}, entropy_ok = {verdict.entropy_ok}, gap = {gap})")
    return 1


def _cmd_kraus_verify(args: argparse.Namespace) -> int:
    with open(args.file, "r", encoding="utf-8") as fh:
        ks = KrausSet.from_json_dict(json.load(fh))
    rep = verify(ks)
    if rep.valid:
        print(f"valid channel ({len(ks.operators)} operators, defect = {rep.completeness_defect:.3e})")
    else:
        print(
            f"invalid channel (defect = {rep.completeness_defect:.3e}, "
            f"{len(rep.incoherence_violations)} incoherence violation(s))"
        )
        return 1
    if args.apply is not None:
        psi = _amplitude_state(_load_spec(args.apply))
        for n, (prob, state) in enumerate(apply(ks, psi)):
            tail = "collapsed" if state is None else "state " + ",".join(
                _fmt(abs(a), args.precision) for a in state.amplitudes
            )
            print(f"branch {n}: p = {_fmt(prob, args.precision)} ({tail})")
        if args.target is not None:
            target = _amplitude_state(_load_spec(args.target))
            total = stochastic_subset_probability(ks, psi, target)
            print(f"target probability: {_fmt(total, args.precision)}")
    return 0


def _cmd_kraus_build(args: argparse.Namespace) -> int:
    p = _load_state(args.source)
    q = _load_state(args.target)
    try:
        ks = realize_deterministic(p, q)
    except NotMajorizedError as exc:
        print(f"infeasible: {exc}", file=sys.stderr)
        return 1
    with open(args.out, "w", encoding="utf-8") as fh:
        json.dump(ks.to_json_dict(), fh, indent=2, sort_keys=True)
        fh.write("\n")
    print(f"wrote {len(ks.operators)} operators (dim {ks.in_dim}) to {args.out}")
    return 0


def _cmd_curve(args: argparse.Namespace) -> int:
    p = _load_state(args.source)
    q = _load_state(args.target)
    points = delta_curve(p, q)
    with open(args.out, "w", encoding="utf-8") as fh:
        fh.write(delta_curve_csv(points))
    print(f"wrote {len(points)} points to {args.out}")
    if args.plot is not None:
        from .plotting import save_delta_curve_figure

        save_delta_curve_figure(points, args.plot)
        print(f"wrote figure to {args.plot}")
    return 0


def _cmd_report(args: argparse.Namespace) -> int:
    source = _load_spec(args.source)
    target = _load_spec(args.target)
    rep = build_report(
        source,
        target,
        eps=args.eps,
        n_max=args.n_max,
        max_dim=args.max_dim,
        resolution=args.resolution,
    )
    with open(args.json, "w", encoding="utf-8") as fh:
        fh.write(rep.to_json())
    print(f"wrote report to {args.json}")
    if args.figures is not None:
        from .plotting import save_delta_curve_figure, save_majorization_figure

        os.makedirs(args.figures, exist_ok=True)
        p = canonicalize(source)
        q = canonicalize(target)
        curve_path = os.path.join(args.figures, "delta_curve.png")
        major_path = os.path.join(args.figures, "majorization.png")
        save_delta_curve_figure(delta_curve(p, q), curve_path)
        save_majorization_figure(p, q, major_path)
        print(f"wrote figures to {curve_path} and {major_path}")
    print(f"deterministic: {rep.deterministic['tag']}")
    print(f"probability: {_fmt(rep.probability, args.precision)}")
    strict = rep.catalytic["strict"]
    print(f"catalytic (strict): {strict.get('decision', 'error')}")
    print(f"ent-assist: {'feasible' if rep.ent_assist['feasible'] else 'infeasible'}")
    return 0


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--precision", type=int, default=4, help="printed decimal places")

    pair = argparse.ArgumentParser(add_help=False)
    pair.add_argument("--from", dest="source", required=True, metavar="W",
                      help="source weights: comma-separated list or @file.json")
    pair.add_argument("--to", dest="target", required=True, metavar="W",
                      help="target weights: comma-separated list or @file.json")

    parser = argparse.ArgumentParser(
        prog="cohcat",
        description="Decide coherence transformations between pure states "
        "from their diagonal weight vectors.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("check", parents=[common, pair],
                        help="deterministic convertibility by majorization")
    sp.set_defaults(handler=_cmd_check)

    sp = sub.add_parser("prob", parents=[common, pair],
                        help="optimal stochastic conversion probability")
    sp.add_argument("--catalyst", metavar="W", help="evaluate with this catalyst attached")
    sp.set_defaults(handler=_cmd_prob)

    sp = sub.add_parser("catalytic", parents=[common, pair],
                        help="catalytic convertibility via the entropy family")
    sp.add_argument("--mode", choices=["strict", "closure", "nonneg", "shortcut"],
                    default="strict")
    sp.add_argument("--eps", type=float, default=DEFAULT_EPS,
                    help="smoothing weight for shortcut mode")
    sp.set_defaults(handler=_cmd_catalytic)

    sp = sub.add_parser("find-catalyst", parents=[common, pair],
                        help="qubit interval (dim <= 4) and lattice search witness")
    sp.add_argument("--max-dim", type=int, default=DEFAULT_MAX_DIM)
    sp.add_argument("--resolution", type=int, default=DEFAULT_RESOLUTION)
    sp.set_defaults(handler=_cmd_find_catalyst)

    sp = sub.add_parser("self-cat", parents=[common, pair],
                        help="smallest tensor power of the source that catalyzes")
    sp.add_argument("--n-max", type=int, default=DEFAULT_N_MAX)
    sp.set_defaults(handler=_cmd_self_cat)

    sp = sub.add_parser("ent-assist", parents=[common, pair],
                        help="convertibility with correlated ancillas returned intact")
    group = sp.add_mutually_exclusive_group()
    group.add_argument("--strict", action="store_true", default=True)
    group.add_argument("--closure", action="store_true", default=False)
    sp.set_defaults(handler=_cmd_ent_assist)

    sp = sub.add_parser("kraus-verify", parents=[common],
                        help="check completeness and incoherence of a stored channel")
    sp.add_argument("--file", required=True, metavar="F")
    sp.add_argument("--apply", metavar="W", help="apply to this diagonal state")
    sp.add_argument("--target", metavar="W",
                    help="with --apply: total probability of landing on this state")
    sp.set_defaults(handler=_cmd_kraus_verify)

    sp = sub.add_parser("kraus-build", parents=[common, pair],
                        help="realize the deterministic conversion as a channel file")
    sp.add_argument("--out", required=True, metavar="F")
    sp.set_defaults(handler=_cmd_kraus_build)

    sp = sub.add_parser("curve", parents=[common, pair],
                        help="entropy-difference curve as CSV")
    sp.add_argument("--out", required=True, metavar="F.csv")
    sp.add_argument("--plot", metavar="F.png", help="also render the curve to a figure")
    sp.set_defaults(handler=_cmd_curve)

    sp = sub.add_parser("report", parents=[common, pair],
                        help="every verdict for the pair as a JSON document")
    sp.add_argument("--json", required=True, metavar="F")
    sp.add_argument("--figures", metavar="DIR",
                    help="also render curve and majorization figures into DIR")
    sp.add_argument("--eps", type=float, default=DEFAULT_EPS)
    sp.add_argument("--n-max", type=int, default=DEFAULT_N_MAX)
    sp.add_argument("--max-dim", type=int, default=DEFAULT_MAX_DIM)
    sp.add_argument("--resolution", type=int, default=DEFAULT_RESOLUTION)
    sp.set_defaults(handler=_cmd_report)

    return parser


def run(argv: Sequence[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.handler(args)
    except (CohcatError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
