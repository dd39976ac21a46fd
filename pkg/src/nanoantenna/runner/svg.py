"""Self-contained SVG rendering of sweep results (polar and cartesian)."""

from __future__ import annotations

import math
from html import escape
from pathlib import Path

WIDTH, HEIGHT = 800, 600
COLORS = ("#1f77b4", "#2ca02c", "#d62728", "#000000", "#9467bd", "#ff7f0e", "#8c564b",
          "#e377c2", "#7f7f7f", "#17becf")

AXIS_LABELS = {
    "theta": "θ/π",
    "detuning_l": "Δ_L/Γ0",
    "delta": "Δ/Γ0",
    "separation": "r12/λ",
}


def _f(x):
    return f"{x:.2f}"


def _nice_ticks(lo, hi, n=6):
    span = hi - lo
    if span <= 0:
        return [lo]
    raw = span / n
    mag = 10 ** math.floor(math.log10(raw))
    step = next(m * mag for m in (1, 2, 2.5, 5, 10) if m * mag >= raw)
    first = math.ceil(lo / step - 1e-9)
    ticks = []
    k = first
    while k * step <= hi + 1e-9 * step:
        ticks.append(round(k * step, 12) + 0.0)
        k += 1
    return ticks


def _tick_label(v):
    return f"{v:.6g}"


def _y_label(columns):
    names = [c.split(" [")[0] for c in columns]
    if all(n.startswith("I") for n in names):
        return "I/(u Γ0)"
    if all(n.startswith("C_") for n in names):
        return "C"
    return "value"


class _Doc:
    def __init__(self, title):
        self.parts = [
            '<?xml version="1.0" encoding="UTF-8"?>\n',
            f'<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" '
            f'viewBox="0 0 {WIDTH} {HEIGHT}" font-family="sans-serif" font-size="12">\n',
            f'<rect x="0" y="0" width="{WIDTH}" height="{HEIGHT}" fill="white"/>\n',
        ]
        if title:
            self.text(WIDTH / 2, 22, title, anchor="middle", size=14)

    def line(self, x1, y1, x2, y2, stroke="#999999", cls=None, dash=None):
        extra = f' class="{cls}"' if cls else ""
        if dash:
            extra += f' stroke-dasharray="{dash}"'
        self.parts.append(f'<line x1="{_f(x1)}" y1="{_f(y1)}" x2="{_f(x2)}" y2="{_f(y2)}" '
                          f'stroke="{stroke}" stroke-width="1"{extra}/>\n')

    def text(self, x, y, s, anchor="start", size=12, rotate=None):
        tr = f' transform="rotate({rotate} {_f(x)} {_f(y)})"' if rotate is not None else ""
        self.parts.append(f'<text x="{_f(x)}" y="{_f(y)}" text-anchor="{anchor}" '
                          f'font-size="{size}"{tr}>{escape(s)}</text>\n')

    def polyline(self, points, color, label):
        pts = " ".join(f"{_f(x)},{_f(y)}" for x, y in points)
        self.parts.append(f'<polyline class="series" data-label="{escape(label)}" fill="none" '
                          f'stroke="{color}" stroke-width="1.5" points="{pts}"/>\n')

    def legend(self, labels, x, y):
        for i, label in enumerate(labels):
            yy = y + 16 * i
            color = COLORS[i % len(COLORS)]
            self.parts.append(f'<rect x="{_f(x)}" y="{_f(yy - 9)}" width="14" height="3" '
                              f'fill="{color}"/>\n')
            self.text(x + 20, yy - 4, label, size=11)

    def render(self):
        return "".join(self.parts) + "</svg>\n"


def _polar(result, doc):
    cx, cy, radius = WIDTH / 2, 500.0, 360.0
    thetas = [r[0] for r in result.rows]
    series = result.data_columns
    rmax = max((abs(r[i]) for r in result.rows for i in range(1, len(result.columns))), default=0.0)
    rmax = rmax if rmax > 0 else 1.0
    for frac in (0.25, 0.5, 0.75, 1.0):
        rr = radius * frac
        doc.parts.append(f'<path d="M {_f(cx + rr)} {_f(cy)} A {_f(rr)} {_f(rr)} 0 0 0 '
                         f'{_f(cx - rr)} {_f(cy)}" fill="none" stroke="#dddddd"/>\n')
        doc.text(cx + rr + 2, cy + 14, _tick_label(rmax * frac), size=10)
    for k in range(7):
        t = math.pi * k / 6
        x, y = cx + radius * math.cos(t), cy - radius * math.sin(t)
        doc.line(cx, cy, x, y, stroke="#dddddd")
        doc.text(cx + (radius + 14) * math.cos(t), cy - (radius + 14) * math.sin(t) + 4,
                 _tick_label(k / 6), anchor="middle", size=10)
    doc.line(cx - radius, cy, cx + radius, cy, stroke="#444444", cls="axis")
    doc.text(cx, cy + 36, f"{AXIS_LABELS['theta']} (angle from atomic axis); radius {_y_label(series)}",
             anchor="middle")
    for i, name in enumerate(series):
        pts = []
        for t, row in zip(thetas, result.rows):
            r = radius * max(row[i + 1], 0.0) / rmax
            pts.append((cx + r * math.cos(t), cy - r * math.sin(t)))
        doc.polyline(pts, COLORS[i % len(COLORS)], name)
    doc.legend(series, 20, 50)


def _cartesian(result, doc):
    left, right, top, bottom = 90.0, 760.0, 50.0, 530.0
    xs = [r[0] for r in result.rows]
    series = result.data_columns
    ys = [v for r in result.rows for v in r[1:]]
    xlo, xhi = min(xs), max(xs)
    ylo, yhi = min(ys), max(ys)
    if ylo == yhi:
        ylo, yhi = ylo - 1.0, yhi + 1.0
    pad = 0.05 * (yhi - ylo)
    ylo, yhi = ylo - pad, yhi + pad

    def px(x):
        return left + (x - xlo) / (xhi - xlo) * (right - left)

    def py(y):
        return bottom - (y - ylo) / (yhi - ylo) * (bottom - top)

    doc.parts.append(f'<rect x="{_f(left)}" y="{_f(top)}" width="{_f(right - left)}" '
                     f'height="{_f(bottom - top)}" fill="none" stroke="#444444"/>\n')
    scale = math.pi if result.axis == "theta" else 1.0
    for t in _nice_ticks(xlo / scale, xhi / scale):
        x = px(t * scale)
        doc.line(x, bottom, x, bottom + 5, stroke="#444444")
        doc.text(x, bottom + 18, _tick_label(t), anchor="middle", size=10)
    for t in _nice_ticks(ylo, yhi):
        y = py(t)
        doc.line(left - 5, y, left, y, stroke="#444444")
        doc.line(left, y, right, y, stroke="#eeeeee")
        doc.text(left - 8, y + 4, _tick_label(t), anchor="end", size=10)
    if ylo < 0.0 < yhi:
        doc.line(left, py(0.0), right, py(0.0), stroke="#666666", cls="zero-line", dash="4 3")
    doc.text((left + right) / 2, bottom + 40, AXIS_LABELS.get(result.axis, result.axis),
             anchor="middle")
    doc.text(30, (top + bottom) / 2, _y_label(series), anchor="middle", rotate=-90)
    for i, name in enumerate(series):
        pts = [(px(r[0]), py(r[i + 1])) for r in result.rows]
        doc.polyline(pts, COLORS[i % len(COLORS)], name)
    doc.legend(series, left + 10, top + 20)


def svg_string(result, style="cartesian"):
    if len(result.rows) < 2:
        raise ValueError("need at least two rows to render")
    if style not in ("polar", "cartesian"):
        raise ValueError(f"unknown style {style!r}")
    if style == "polar" and result.axis != "theta":
        raise ValueError("polar style needs a theta sweep")
    doc = _Doc(result.metadata.get("title", ""))
    (_polar if style == "polar" else _cartesian)(result, doc)
    return doc.render()


def render_svg(result, style, destination):
    """Write an 800x600 SVG plot; byte-identical output for identical input."""
    text = svg_string(result, style)
    path = Path(destination)
    try:
        path.write_text(text, encoding="utf-8")
    except OSError as exc:
        raise OSError(f"cannot write {path}: {exc.strerror or exc}") from exc
