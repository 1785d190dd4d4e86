"""Figures written next to pipeline reports."""

from __future__ import annotations

import os
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .pipeline import PipelineReport  # noqa: E402


def plot_report(report: PipelineReport, path: str | os.PathLike) -> Path:
    """Bar chart of maximal and (+K) counts per stage, log scale."""
    labels = [r.label for r in report.rows]
    maximal = [r.maximal for r in report.rows]
    plusk = [r.plusk or 0 for r in report.rows]
    xs = range(len(labels))
    fig, ax = plt.subplots(figsize=(max(4.0, 1.1 * len(labels) + 2), 4.0))
    w = 0.4
    ax.bar([x - w / 2 for x in xs], [v + 1 for v in maximal], w, label="maximal")
    ax.bar([x + w / 2 for x in xs], [v + 1 for v in plusk], w, label="+K(q-1)")
    ax.set_yscale("log")
    ax.set_ylabel("count + 1")
    ax.set_xticks(list(xs))
    ax.set_xticklabels(labels, rotation=30, ha="right", fontsize=8)
    ax.set_title(report.name)
    ax.legend()
    fig.tight_layout()
    out = Path(path)
    fig.savefig(out, dpi=100)
    plt.close(fig)
    return out
