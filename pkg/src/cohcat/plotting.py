"""Figure rendering for the CLI report and curve paths.

Everything here draws to files through the Agg backend so the command line
works on headless machines.  Figures are a side channel: the delimited and
JSON outputs stay the single source of truth.
"""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .majorize import prefix_sums
from .statevec import ProbVector, pad

__all__ = ["save_delta_curve_figure", "save_majorization_figure"]


def save_delta_curve_figure(
    samples: list[tuple[float, float]], path: str, title: str = "entropy difference"
) -> None:
    """Plot finite (alpha, delta) samples to ``path``.

    Non-finite rows (the order limits and infinite differences) are dropped;
    the zero line marks where the target stops dominating the source.
    """
    finite = [(a, d) for a, d in samples if abs(a) != float("inf") and abs(d) != float("inf")]
    fig, ax = plt.subplots(figsize=(6.0, 4.0))
    if finite:
        xs, ys = zip(*finite)
        ax.plot(xs, ys, marker=".", lw=1.0)
        ax.set_xscale("symlog", linthresh=1.0)
    ax.axhline(0.0, color="0.6", lw=0.8)
    ax.set_xlabel("alpha")
    ax.set_ylabel("delta")
    ax.set_title(title)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)


def save_majorization_figure(p: ProbVector, q: ProbVector, path: str) -> None:
    """Step plot of the cumulative sums of both vectors on a common dimension."""
    d = max(p.dim, q.dim)
    ks = list(range(1, d + 1))
    fig, ax = plt.subplots(figsize=(6.0, 4.0))
    ax.step(ks, prefix_sums(pad(p, d)), where="post", label="source", marker="o")
    ax.step(ks, prefix_sums(pad(q, d)), where="post", label="target", marker="s")
    ax.set_xlabel("prefix length")
    ax.set_ylabel("cumulative weight")
    ax.set_ylim(0.0, 1.05)
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
