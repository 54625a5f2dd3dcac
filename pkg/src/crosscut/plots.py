"""Matplotlib report figures rendered alongside the delimited output.

Plot coordinates are float conversions of the exact values, presentation
only.
"""

from __future__ import annotations

from typing import List

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402


def save_scan_plot(rows: List, path: str) -> None:
    """Bounds and empirical envelopes as functions of k."""
    ks = [float(r.k) for r in rows]
    fig, ax = plt.subplots(figsize=(7, 4.5))
    bounded = [r for r in rows if r.lower is not None]
    if bounded:
        ax.plot(
            [float(r.k) for r in bounded],
            [float(r.lower) for r in bounded],
            "o-", color="tab:blue", label="lower bound 1/((k+1)(k²+k+1))",
        )
        ax.plot(
            [float(r.k) for r in bounded],
            [float(r.upper) for r in bounded],
            "o-", color="tab:red", label="upper bound 1/(2k²+2k+1)",
        )
    ax.plot(
        ks, [float(r.empirical_min) for r in rows],
        "v", color="tab:blue", alpha=0.6, label="empirical min",
    )
    ax.plot(
        ks, [float(r.empirical_max) for r in rows],
        "^", color="tab:red", alpha=0.6, label="empirical max",
    )
    ax.set_xlabel("k")
    ax.set_ylabel("s / S")
    ax.set_title("Crosscut area ratio: bounds and sampled envelope")
    ax.legend(fontsize=8)
    ax.grid(True, alpha=0.3)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def save_exploration_plot(report, path: str) -> None:
    """Sampled ratios over (a, b) for one negative k (conjectural regime)."""
    done = [r for r in report.records if r.ratio is not None]
    fig, ax = plt.subplots(figsize=(6, 5))
    sc = ax.scatter(
        [float(r.a) for r in done],
        [float(r.b) for r in done],
        c=[float(r.ratio) for r in done],
        cmap="viridis", s=18,
    )
    fig.colorbar(sc, ax=ax, label="s / S")
    ax.set_xlabel("a")
    ax.set_ylabel("b")
    ax.set_title(f"Sampled ratio, k = {report.k} (CONJECTURAL)")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
