"""Minimal SVG bar and line charts: axes, marks and labels, no styling."""

from __future__ import annotations

import math
from typing import Sequence
from xml.sax.saxutils import escape

WIDTH, HEIGHT = 720, 420
MARGIN_LEFT, MARGIN_RIGHT, MARGIN_TOP, MARGIN_BOTTOM = 70, 20, 40, 110
PALETTE = ("#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b")


def _num(x: float) -> str:
    return f"{x:.2f}".rstrip("0").rstrip(".")


def _frame(title: str, y_label: str, y_min: float, y_max: float, log: bool = False) -> list[str]:
    plot_h = HEIGHT - MARGIN_TOP - MARGIN_BOTTOM
    x0, y0 = MARGIN_LEFT, HEIGHT - MARGIN_BOTTOM
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" '
        f'viewBox="0 0 {WIDTH} {HEIGHT}">',
        f'<text x="{WIDTH // 2}" y="22" text-anchor="middle" font-size="15">{escape(title)}</text>',
        f'<line x1="{x0}" y1="{y0}" x2="{WIDTH - MARGIN_RIGHT}" y2="{y0}" stroke="black"/>',
        f'<line x1="{x0}" y1="{y0}" x2="{x0}" y2="{MARGIN_TOP}" stroke="black"/>',
        f'<text x="16" y="{MARGIN_TOP + plot_h // 2}" font-size="12" text-anchor="middle" '
        f'transform="rotate(-90 16 {MARGIN_TOP + plot_h // 2})">{escape(y_label)}</text>',
    ]
    for i in range(5):
        frac = i / 4
        y = y0 - frac * plot_h
        raw = y_min + frac * (y_max - y_min)
        value = 10 ** raw if log else raw
        out.append(f'<line x1="{x0 - 4}" y1="{_num(y)}" x2="{x0}" y2="{_num(y)}" stroke="black"/>')
        out.append(f'<text x="{x0 - 6}" y="{_num(y + 4)}" font-size="10" text-anchor="end">'
                   f'{escape(f"{value:.4g}")}</text>')
    return out


def bar_chart(title: str, labels: Sequence[str], values: Sequence[float], y_label: str) -> str:
    if len(labels) != len(values):
        raise ValueError("labels and values differ in length")
    if any(v < 0 for v in values):
        raise ValueError("bar values must be nonnegative")
    y_max = max(values, default=0) or 1.0
    out = _frame(title, y_label, 0.0, y_max)
    plot_w = WIDTH - MARGIN_LEFT - MARGIN_RIGHT
    plot_h = HEIGHT - MARGIN_TOP - MARGIN_BOTTOM
    slot = plot_w / max(len(values), 1)
    y0 = HEIGHT - MARGIN_BOTTOM
    for i, (label, value) in enumerate(zip(labels, values)):
        h = value / y_max * plot_h
        x = MARGIN_LEFT + i * slot + slot * 0.15
        cx = MARGIN_LEFT + (i + 0.5) * slot
        out.append(f'<rect x="{_num(x)}" y="{_num(y0 - h)}" width="{_num(slot * 0.7)}" '
                   f'height="{_num(h)}" fill="{PALETTE[0]}"/>')
        out.append(f'<text x="{_num(cx)}" y="{_num(y0 - h - 4)}" font-size="9" text-anchor="middle">'
                   f'{escape(f"{value:.4g}")}</text>')
        out.append(f'<text x="{_num(cx)}" y="{y0 + 12}" font-size="10" text-anchor="end" '
                   f'transform="rotate(-45 {_num(cx)} {y0 + 12})">{escape(label)}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def line_chart(
    title: str,
    x_labels: Sequence[str],
    series: dict[str, Sequence[float]],
    y_label: str,
    log_y: bool = True,
) -> str:
    """One polyline per series; ``log_y`` plots log10 of strictly positive values."""
    for name, ys in series.items():
        if len(ys) != len(x_labels):
            raise ValueError(f"series {name!r} has {len(ys)} points, expected {len(x_labels)}")
        if log_y and any(y <= 0 for y in ys):
            raise ValueError(f"series {name!r} has nonpositive values on a log axis")
    transform = (lambda v: math.log10(v)) if log_y else (lambda v: v)
    all_y = [transform(y) for ys in series.values() for y in ys]
    y_max = max(all_y, default=1.0) or 1.0
    y_min = min(0.0, min(all_y, default=0.0))
    span = (y_max - y_min) or 1.0
    out = _frame(title, y_label + (" (log scale)" if log_y else ""), y_min, y_min + span, log=log_y)
    plot_w = WIDTH - MARGIN_LEFT - MARGIN_RIGHT
    plot_h = HEIGHT - MARGIN_TOP - MARGIN_BOTTOM
    y0 = HEIGHT - MARGIN_BOTTOM
    step = plot_w / max(len(x_labels) - 1, 1)
    for i, label in enumerate(x_labels):
        x = MARGIN_LEFT + i * step
        out.append(f'<text x="{_num(x)}" y="{y0 + 14}" font-size="10" text-anchor="middle">{escape(label)}</text>')
    for k, (name, ys) in enumerate(series.items()):
        color = PALETTE[k % len(PALETTE)]
        pts = " ".join(
            f"{_num(MARGIN_LEFT + i * step)},{_num(y0 - (transform(y) - y_min) / span * plot_h)}"
            for i, y in enumerate(ys)
        )
        out.append(f'<polyline points="{pts}" fill="none" stroke="{color}"/>')
        ly = MARGIN_TOP + 14 * k
        out.append(f'<text x="{WIDTH - MARGIN_RIGHT - 60}" y="{ly}" font-size="11" fill="{color}">'
                   f'{escape(name)}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
