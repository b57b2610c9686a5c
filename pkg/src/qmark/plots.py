"""Figure rendering for sample tables and experiment reports.

Figures are written next to the delimited report files; everything goes
through the Agg backend so rendering works headless and deterministically.
"""

from __future__ import annotations

from fractions import Fraction

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .analysis import MeasureTable, SingularityReport

__all__ = ["plot_measure", "plot_singularity", "plot_staircase"]

_DPI = 150


def _save(fig, path: str) -> None:
    fig.savefig(path, dpi=_DPI)
    plt.close(fig)


def plot_staircase(
    xs: list[Fraction], ys: list[Fraction], partition: str, path: str
) -> None:
    """The graph of the question-mark function on a uniform grid."""
    fig, ax = plt.subplots(figsize=(6, 6))
    ax.plot([float(x) for x in xs], [float(y) for y in ys], lw=1.0, color="tab:blue")
    ax.plot([0, 1], [0, 1], lw=0.6, ls="--", color="gray", label="identity")
    ax.set_xlabel("x")
    ax.set_ylabel("?(x)")
    ax.set_title(f"Question-mark staircase, partition {partition}")
    ax.legend(loc="upper left")
    ax.set_xlim(0, 1)
    ax.set_ylim(0, 1)
    _save(fig, path)


def plot_measure(table: MeasureTable, path: str) -> None:
    """Distribution functions of the pushed-forward and Gauss measures."""
    ts = [float(t) for t in table.grid]
    qs = [float(q) for q in table.q_values]
    gs = [float(g) for g in table.gauss_values]
    fig, (ax1, ax2) = plt.subplots(
        2, 1, figsize=(6, 7), sharex=True, height_ratios=[3, 1]
    )
    ax1.plot(ts, qs, lw=1.2, color="tab:blue", label="?(t)")
    ax1.plot(ts, gs, lw=1.2, color="tab:orange", label="log2(1+t)")
    ax1.set_ylabel("distribution function")
    ax1.set_title(f"Pushed-forward vs Gauss measure, partition {table.partition}")
    ax1.legend(loc="upper left")
    ax2.plot(ts, [abs(q - g) for q, g in zip(qs, gs)], lw=1.0, color="tab:red")
    ax2.set_xlabel("t")
    ax2.set_ylabel("|gap|")
    _save(fig, path)


def plot_singularity(report: SingularityReport, path: str) -> None:
    """Median difference quotients and small-quotient fractions per h."""
    hs = [float(h) for h in report.h_values]
    meds = [float(m) for m in report.medians]
    fracs = [float(f) for f in report.small_fraction]
    fig, (ax1, ax2) = plt.subplots(2, 1, figsize=(6, 7), sharex=True)
    ax1.loglog(hs, meds, "o-", color="tab:blue")
    ax1.set_ylabel("median quotient")
    ax1.set_title(
        f"Symmetric difference quotients, partition {report.partition} "
        f"(n={report.sample_count})"
    )
    ax2.semilogx(hs, fracs, "o-", color="tab:green")
    ax2.set_xlabel("h")
    ax2.set_ylabel(f"fraction below {float(report.threshold)}")
    ax2.set_ylim(-0.02, 1.02)
    ax1.invert_xaxis()
    _save(fig, path)
