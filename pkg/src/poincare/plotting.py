"""Static figures for a computed table (written next to the JSON/text output)."""

from __future__ import annotations

import math
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402


def _style(ax, xlabel, ylabel):
    ax.set_xlabel(xlabel, fontsize=11)
    ax.set_ylabel(ylabel, fontsize=11)
    ax.tick_params(labelsize=9)
    for side in ("top", "right"):
        ax.spines[side].set_visible(False)


def plot_coefficient_growth(halves: dict[int, list[int]], path: str | Path) -> Path:
    """log10 |c_i| against i, one curve per n (zero coefficients skipped)."""
    fig, ax = plt.subplots(figsize=(7, 4.5))
    cmap = plt.get_cmap("viridis")
    ns = sorted(halves)
    for idx, n in enumerate(ns):
        pts = [(i, math.log10(abs(c))) for i, c in enumerate(halves[n]) if c]
        if len(pts) < 2:
            continue
        xs, ys = zip(*pts)
        ax.plot(xs, ys, ".-", ms=2.5, lw=0.8, color=cmap(idx / max(1, len(ns) - 1)), label=f"n={n}")
    _style(ax, "index i", r"$\log_{10}|c_i|$")
    ax.set_title("numerator half-table magnitudes", fontsize=11)
    ax.legend(fontsize=7, ncol=2, frameon=False)
    fig.tight_layout()
    path = Path(path)
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def plot_wall_times(times: dict[int, float], path: str | Path) -> Path:
    fig, ax = plt.subplots(figsize=(6, 4))
    ns = sorted(times)
    ax.semilogy(ns, [max(times[n], 1e-6) for n in ns], "o-", color="k", ms=4)
    _style(ax, "n", "wall time [s]")
    ax.set_title("compute time per degree", fontsize=11)
    fig.tight_layout()
    path = Path(path)
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def write_figures(halves: dict[int, list[int]], times: dict[int, float], directory: str | Path) -> list[Path]:
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    return [
        plot_coefficient_growth(halves, directory / "coefficient_growth.png"),
        plot_wall_times(times, directory / "wall_time.png"),
    ]
