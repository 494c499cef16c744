"""Figure builders over validated CSV data.

Each renderer returns a matplotlib Figure whose structure is introspectable
(bar container, labeled overlay line, one polyline per card, two scatter
collections per snapshot panel), so tests can machine-check the visual
structure instead of comparing pixels.  The only thing computed here is the
analytic quarter-circle overlay; all plotted data comes from the CSVs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import matplotlib

matplotlib.use("Agg")
# deterministic ids inside SVG output
matplotlib.rcParams["svg.hashsalt"] = "hookwalk-figures"

import matplotlib.pyplot as plt
import numpy as np

from .schema import read_frequency, read_snapshot, read_trajectories, SchemaError

OVERLAY_LABEL = "quarter-circle overlay"
ZERO_LINE_LABEL = "_height-zero"
RED = "red"  # +1 entries
BLUE = "blue"  # -1 entries


@dataclass(frozen=True)
class FigureSpec:
    """Plumbing for one rendered figure."""

    inputs: tuple[str, ...]
    out: str
    format: str  # "svg" | "png"
    xlabel: str | None = None
    ylabel: str | None = None
    overlay: bool = True

    def __post_init__(self):
        if self.format not in ("svg", "png"):
            raise ValueError(f"format must be svg or png, got {self.format!r}")
        if not self.inputs:
            raise ValueError("at least one input file is required")


def quarter_circle_overlay(n: int) -> tuple[np.ndarray, np.ndarray]:
    """Overlay curve at bin centers (r + 0.5)/n: per-letter limit mass."""
    x = (np.arange(n) + 0.5) / n
    return x, (4.0 / math.pi) * np.sqrt(1.0 - x * x) / n


def render_frequency(path, n: int | None = None, overlay: bool = True,
                     xlabel: str = "letter / n",
                     ylabel: str = "frequency") -> plt.Figure:
    """Normalized letter histogram, optionally with the limit-law overlay."""
    data = read_frequency(path)
    if n is not None and n != data.n:
        raise SchemaError(f"{path}: expected n = {n}, file has {data.n} letters")
    n = data.n
    fig, ax = plt.subplots(figsize=(8.0, 4.5))
    ax.bar(data.letters / n, data.normalized, width=1.0 / n, align="edge",
           color="#7da7d9", edgecolor="none", label="letter frequency")
    if overlay:
        x, y = quarter_circle_overlay(n)
        ax.plot(x, y, color="crimson", linewidth=2.0, label=OVERLAY_LABEL)
        ax.legend(frameon=False)
    ax.set_xlabel(xlabel)
    ax.set_ylabel(ylabel)
    ax.set_xlim(0.0, 1.0)
    return fig


def render_trajectories(path, xlabel: str = "step",
                        ylabel: str = "height") -> plt.Figure:
    """One polyline per card plus a reference line at height zero."""
    data = read_trajectories(path)
    fig, ax = plt.subplots(figsize=(8.0, 5.0))
    ax.axhline(0.0, color="0.3", linewidth=0.8, label=ZERO_LINE_LABEL)
    for card, series in zip(data.cards, data.heights):
        ax.plot(data.steps, series, linewidth=0.7, label=f"card {card}")
    if len(data.cards) <= 12:
        ax.legend(frameon=False, fontsize="small")
    ax.set_xlabel(xlabel)
    ax.set_ylabel(ylabel)
    return fig


def render_snapshots(paths, xlabel: str = "position",
                     ylabel: str = "card") -> plt.Figure:
    """Permutation-matrix panels in the given (time) order; +1 red, -1 blue."""
    snaps = [read_snapshot(p) for p in paths]
    sizes = {s.n for s in snaps}
    if len(sizes) != 1:
        raise SchemaError(f"snapshot sizes differ: {sorted(sizes)}")
    k = len(snaps)
    fig, axes = plt.subplots(1, k, figsize=(3.0 * k, 3.2), squeeze=False)
    for idx, (ax, snap, path) in enumerate(zip(axes[0], snaps, paths)):
        plus = snap.signs > 0
        ax.scatter(snap.positions[plus], snap.cards[plus], s=9, color=RED,
                   label="+1")
        ax.scatter(snap.positions[~plus], snap.cards[~plus], s=9, color=BLUE,
                   label="-1")
        ax.set_title(_panel_title(path), fontsize="small")
        ax.set_aspect("equal")
        ax.set_xlabel(xlabel)
        if idx == 0:
            ax.set_ylabel(ylabel)
    fig.tight_layout()
    return fig


def _panel_title(path) -> str:
    import os

    stem = os.path.splitext(os.path.basename(str(path)))[0]
    return stem


def save_figure(fig: plt.Figure, out, fmt: str) -> None:
    """Write SVG (date metadata stripped for byte-stable output) or PNG."""
    if fmt == "svg":
        fig.savefig(out, format="svg", metadata={"Date": None})
    elif fmt == "png":
        fig.savefig(out, format="png", dpi=150)
    else:
        raise ValueError(f"format must be svg or png, got {fmt!r}")
    plt.close(fig)
