"""Minimal SVG output: one polyline per curve, circles for cusp markers."""

from __future__ import annotations

from xml.sax.saxutils import escape

import numpy as np

STYLES = [
    ("#1f77b4", None),
    ("#d62728", "6 3"),
    ("#2ca02c", None),
    ("#9467bd", "2 3"),
    ("#8c564b", None),
    ("#e377c2", "8 2 2 2"),
]


def render_svg(polylines, markers, width: int = 640) -> str:
    """Build an SVG document.

    ``polylines``: list of (label, Nx2 array); ``markers``: list of
    (x, y, kind).  The viewBox fits every element with a 5% margin.
    """
    pts = [np.asarray(p) for _, p in polylines if len(p)]
    if markers:
        pts.append(np.array([[m[0], m[1]] for m in markers]))
    if pts:
        allpts = np.vstack(pts)
        xmin, ymin = allpts.min(axis=0)
        xmax, ymax = allpts.max(axis=0)
    else:
        xmin = ymin = -1.0
        xmax = ymax = 1.0
    span = max(xmax - xmin, ymax - ymin, 1e-9)
    margin = 0.05 * span
    xmin -= margin
    ymin -= margin
    w = (xmax - xmin) + 2 * margin
    h = (ymax - ymin) + 2 * margin
    stroke = 0.004 * span
    marker_r = 0.012 * span

    lines = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" '
        f'height="{int(width * h / w)}" viewBox="{xmin:.6g} {-(ymin + h):.6g} '
        f'{w:.6g} {h:.6g}">',
        # flip y so the math orientation reads counterclockwise
        '<g transform="scale(1,-1)">',
    ]
    for i, (label, arr) in enumerate(polylines):
        color, dash = STYLES[i % len(STYLES)]
        arr = np.asarray(arr, dtype=float)
        coords = " ".join(f"{x:.8g},{y:.8g}" for x, y in arr)
        dash_attr = f' stroke-dasharray="{dash}"' if dash else ""
        lines.append(
            f'<polyline fill="none" stroke="{color}" stroke-width="{stroke:.6g}"'
            f'{dash_attr} data-label="{escape(str(label))}" points="{coords}"/>')
    for x, y, kind in markers:
        fill = "#000000" if kind == "cusp" else "#ff7f0e"
        lines.append(f'<circle cx="{x:.8g}" cy="{y:.8g}" r="{marker_r:.6g}" '
                     f'fill="{fill}" class="{escape(kind)}"/>')
    lines.append("</g>")
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
