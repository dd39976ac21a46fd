"""Matplotlib figures of sweep results, written next to the CSV output."""

from __future__ import annotations

import math
from pathlib import Path

from matplotlib.backends.backend_agg import FigureCanvasAgg
from matplotlib.figure import Figure

from .svg import AXIS_LABELS, _y_label


def make_figure(result, style="cartesian"):
    fig = Figure(figsize=(7.0, 5.0))
    FigureCanvasAgg(fig)
    x = [r[0] for r in result.rows]
    if style == "polar":
        ax = fig.add_subplot(projection="polar")
        ax.set_thetamin(0)
        ax.set_thetamax(180)
        for i, name in enumerate(result.data_columns, start=1):
            ax.plot(x, [r[i] for r in result.rows], label=name, lw=1.4)
        ax.set_xlabel(_y_label(result.data_columns))
    else:
        ax = fig.add_subplot()
        scale = math.pi if result.axis == "theta" else 1.0
        for i, name in enumerate(result.data_columns, start=1):
            ax.plot([v / scale for v in x], [r[i] for r in result.rows], label=name, lw=1.4)
        ax.axhline(0.0, color="0.6", lw=0.8, ls="--")
        ax.set_xlabel(AXIS_LABELS.get(result.axis, result.axis))
        ax.set_ylabel(_y_label(result.data_columns))
    title = result.metadata.get("title")
    if title:
        ax.set_title(title, fontsize=10)
    ax.legend(fontsize=8, loc="best")
    fig.tight_layout()
    return fig


def render_figure(result, style, destination, dpi=120):
    path = Path(destination)
    fig = make_figure(result, style)
    try:
        fig.savefig(path, dpi=dpi, metadata={"Software": None} if path.suffix == ".png" else None)
    except OSError as exc:
        raise OSError(f"cannot write {path}: {exc.strerror or exc}") from exc
