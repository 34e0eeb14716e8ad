"""Static SVG rendering of dimension curves, no plotting library involved.

Only svg, g, polyline, line and text elements are emitted, with fixed
number formatting, so a given set of curves always yields the same bytes.
"""
from __future__ import annotations

import math
from xml.sax.saxutils import escape

__all__ = ["render_svg"]

PALETTE = ("#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd",
           "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf")


def _f(x):
    return f"{x:.2f}"


def _comment_safe(text):
    # "--" may not appear inside an XML comment
    text = str(text)
    while "--" in text:
        text = text.replace("--", "- -")
    return text


def render_svg(curves, labels=None, plateaus=None, *, width=720, height=440,
               y_range=(0.0, 4.0), title="Spectral dimension D_s versus cutoff",
               comments=()):
    """One polyline per curve on a log-x / linear-y frame.

    ``plateaus`` may hold one PlateauReport (or None) per curve; found
    plateaus are drawn as dashed segments at their mean level. Values above
    the y range are pinned to the top edge so every grid point keeps a
    vertex. ``comments`` become XML comments right after the declaration.
    """
    curves = list(curves)
    if not curves:
        raise ValueError("nothing to draw")
    if labels is None:
        labels = [c.spectrum_label for c in curves]
    if plateaus is None:
        plateaus = [None] * len(curves)

    left, right, top, bottom = 64.0, 170.0, 40.0, 52.0
    pw = width - left - right
    ph = height - top - bottom
    x_lo = min(math.log10(c.lambdas[0]) for c in curves)
    x_hi = max(math.log10(c.lambdas[-1]) for c in curves)
    d_lo = math.floor(x_lo)
    d_hi = math.ceil(x_hi)
    if d_hi == d_lo:
        d_hi += 1
    y_lo, y_hi = y_range

    def px(lam):
        return left + (math.log10(lam) - d_lo) / (d_hi - d_lo) * pw

    def py(d):
        d = min(max(d, y_lo), y_hi)
        return top + (y_hi - d) / (y_hi - y_lo) * ph

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        *(f"<!-- {_comment_safe(c)} -->" for c in comments),
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" '
        f'height="{height}" viewBox="0 0 {width} {height}">',
        f'<text x="{_f(left + pw / 2)}" y="{_f(top - 16)}" text-anchor="middle" '
        f'font-family="sans-serif" font-size="14">{escape(title)}</text>',
        '<g id="axes" stroke="#000" stroke-width="1">',
        f'<line x1="{_f(left)}" y1="{_f(top + ph)}" x2="{_f(left + pw)}" y2="{_f(top + ph)}"/>',
        f'<line x1="{_f(left)}" y1="{_f(top)}" x2="{_f(left)}" y2="{_f(top + ph)}"/>',
        "</g>",
        '<g id="xticks" font-family="sans-serif" font-size="11" text-anchor="middle">',
    ]
    for dec in range(d_lo, d_hi + 1):
        x = left + (dec - d_lo) / (d_hi - d_lo) * pw
        out.append(f'<line x1="{_f(x)}" y1="{_f(top + ph)}" x2="{_f(x)}" '
                   f'y2="{_f(top + ph + 5)}" stroke="#000"/>')
        out.append(f'<text x="{_f(x)}" y="{_f(top + ph + 18)}">1e{dec}</text>')
    out.append("</g>")
    out.append('<g id="yticks" font-family="sans-serif" font-size="11" text-anchor="end">')
    n_yticks = int(round((y_hi - y_lo) / 0.5))
    for i in range(n_yticks + 1):
        d = y_lo + i * (y_hi - y_lo) / n_yticks
        y = py(d)
        out.append(f'<line x1="{_f(left - 5)}" y1="{_f(y)}" x2="{_f(left)}" y2="{_f(y)}" stroke="#000"/>')
        out.append(f'<line x1="{_f(left)}" y1="{_f(y)}" x2="{_f(left + pw)}" y2="{_f(y)}" '
                   f'stroke="#ddd" stroke-width="0.5"/>')
        out.append(f'<text x="{_f(left - 8)}" y="{_f(y + 4)}">{d:.1f}</text>')
    out.append("</g>")
    out.append(f'<text x="{_f(left + pw / 2)}" y="{_f(height - 12)}" text-anchor="middle" '
               f'font-family="sans-serif" font-size="12">cutoff Lambda (log scale)</text>')
    out.append(f'<text x="16" y="{_f(top + ph / 2)}" text-anchor="middle" font-family="sans-serif" '
               f'font-size="12" transform="rotate(-90 16 {_f(top + ph / 2)})">D_s</text>')

    out.append('<g id="curves" fill="none" stroke-width="1.5">')
    for k, c in enumerate(curves):
        color = PALETTE[k % len(PALETTE)]
        pts = " ".join(f"{_f(px(l))},{_f(py(d))}" for l, d in zip(c.lambdas, c.dims))
        out.append(f'<polyline stroke="{color}" points="{pts}"/>')
    out.append("</g>")

    out.append('<g id="plateaus" stroke-width="1" stroke-dasharray="4,3">')
    for k, rep in enumerate(plateaus):
        if rep is None or not rep.found:
            continue
        color = PALETTE[k % len(PALETTE)]
        y = py(rep.mean_dim)
        out.append(f'<line x1="{_f(px(rep.lambda_lo))}" y1="{_f(y)}" x2="{_f(px(rep.lambda_hi))}" '
                   f'y2="{_f(y)}" stroke="{color}"/>')
    out.append("</g>")

    out.append('<g id="legend" font-family="sans-serif" font-size="11">')
    lx = left + pw + 14
    for k, label in enumerate(labels):
        color = PALETTE[k % len(PALETTE)]
        y = top + 10 + 18 * k
        out.append(f'<line x1="{_f(lx)}" y1="{_f(y)}" x2="{_f(lx + 22)}" y2="{_f(y)}" '
                   f'stroke="{color}" stroke-width="2"/>')
        out.append(f'<text x="{_f(lx + 28)}" y="{_f(y + 4)}">{escape(str(label))}</text>')
    out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"
