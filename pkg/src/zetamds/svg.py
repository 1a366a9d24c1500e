"""Dependency-free SVG figures: loci, component traces, parameter laws.

Everything is plain string assembly with fixed decimal formatting, so a
given input always produces byte-identical output. The 3-dim locus uses
a fixed orthographic (axonometric) projection with configurable azimuth
and elevation in degrees; points are colored by object order i through a
small viridis-like gradient with a vertical color bar.
"""

from __future__ import annotations

import math
from typing import List, Optional, Sequence, Tuple

import numpy as np

from .fits import LinearFit, PowerLawFit, SinusoidFit

# viridis anchors sampled uniformly on [0, 1]
_VIRIDIS = np.array([
    (0.267004, 0.004874, 0.329415),
    (0.282623, 0.140926, 0.457517),
    (0.253935, 0.265254, 0.529983),
    (0.206756, 0.371758, 0.553117),
    (0.163625, 0.471133, 0.558148),
    (0.127568, 0.566949, 0.550556),
    (0.134692, 0.658636, 0.517649),
    (0.266941, 0.748751, 0.440573),
    (0.477504, 0.821444, 0.318195),
    (0.741388, 0.873449, 0.149561),
    (0.993248, 0.906157, 0.143936),
])


def _color(t: float) -> str:
    """Hex color for t in [0, 1] along the order gradient."""
    t = min(1.0, max(0.0, t))
    x = t * (len(_VIRIDIS) - 1)
    lo = int(math.floor(x))
    hi = min(lo + 1, len(_VIRIDIS) - 1)
    frac = x - lo
    rgb = (1.0 - frac) * _VIRIDIS[lo] + frac * _VIRIDIS[hi]
    return "#{:02x}{:02x}{:02x}".format(*(int(round(255 * c)) for c in rgb))


def _f(x: float) -> str:
    return f"{x:.2f}"


def project_axonometric(coords: np.ndarray, azimuth: float, elevation: float) -> np.ndarray:
    """Orthographic screen coordinates (u, v) for N x k points, k <= 3.

    The camera looks from the direction given by azimuth (degrees around
    the vertical axis) and elevation (degrees above the horizontal plane);
    missing third (or second) coordinates are treated as zero.
    """
    pts = np.asarray(coords, dtype=np.float64)
    if pts.ndim != 2:
        raise ValueError(f"coordinates must be 2-D, got shape {pts.shape}")
    xyz = np.zeros((pts.shape[0], 3))
    xyz[:, : min(3, pts.shape[1])] = pts[:, :3]
    az = math.radians(azimuth)
    el = math.radians(elevation)
    u = -math.sin(az) * xyz[:, 0] + math.cos(az) * xyz[:, 1]
    v = (-math.sin(el) * math.cos(az) * xyz[:, 0]
         - math.sin(el) * math.sin(az) * xyz[:, 1]
         + math.cos(el) * xyz[:, 2])
    return np.column_stack((u, v))


class _Panel:
    """Maps a data rectangle onto a pixel rectangle and collects elements."""

    def __init__(self, x0, y0, width, height, xlim, ylim):
        self.x0, self.y0 = x0, y0
        self.width, self.height = width, height
        span_x = xlim[1] - xlim[0] or 1.0
        span_y = ylim[1] - ylim[0] or 1.0
        self.xlim = (xlim[0], xlim[0] + span_x)
        self.ylim = (ylim[0], ylim[0] + span_y)
        self.elements: List[str] = []

    def px(self, x, y):
        fx = (x - self.xlim[0]) / (self.xlim[1] - self.xlim[0])
        fy = (y - self.ylim[0]) / (self.ylim[1] - self.ylim[0])
        return self.x0 + fx * self.width, self.y0 + (1.0 - fy) * self.height

    def frame(self, label: Optional[str] = None):
        self.elements.append(
            f'<rect x="{_f(self.x0)}" y="{_f(self.y0)}" width="{_f(self.width)}" '
            f'height="{_f(self.height)}" fill="none" stroke="#888" stroke-width="1"/>'
        )
        if label:
            self.elements.append(
                f'<text x="{_f(self.x0 + 4)}" y="{_f(self.y0 + 13)}" '
                f'font-family="sans-serif" font-size="11" fill="#333">{label}</text>'
            )

    def dot(self, x, y, color, r=2.0):
        px, py = self.px(x, y)
        self.elements.append(f'<circle cx="{_f(px)}" cy="{_f(py)}" r="{_f(r)}" fill="{color}"/>')

    def polyline(self, xs, ys, color, width=1.0, dash=None):
        pts = " ".join(f"{_f(px)},{_f(py)}" for px, py in (self.px(x, y) for x, y in zip(xs, ys)))
        dash_attr = f' stroke-dasharray="{dash}"' if dash else ""
        self.elements.append(
            f'<polyline points="{pts}" fill="none" stroke="{color}" '
            f'stroke-width="{_f(width)}"{dash_attr}/>'
        )


def _document(width: int, height: int, body: Sequence[str]) -> str:
    head = (
        '<?xml version="1.0" encoding="UTF-8"?>\n'
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">\n'
        f'<rect width="{width}" height="{height}" fill="white"/>\n'
    )
    return head + "\n".join(body) + "\n</svg>\n"


def _text(x, y, s, size=12, anchor="start", color="#222"):
    return (f'<text x="{_f(x)}" y="{_f(y)}" font-family="sans-serif" font-size="{size}" '
            f'text-anchor="{anchor}" fill="{color}">{s}</text>')


def _limits(values: np.ndarray) -> Tuple[float, float]:
    lo = float(np.min(values))
    hi = float(np.max(values))
    pad = 0.05 * (hi - lo or 1.0)
    return lo - pad, hi + pad


def _colorbar(body, x, y, height, n_objects):
    steps = 64
    for k in range(steps):
        frac = k / (steps - 1)
        sy = y + (1.0 - frac) * height * (steps - 1) / steps
        body.append(
            f'<rect x="{_f(x)}" y="{_f(sy)}" width="12" height="{_f(height / steps + 1)}" '
            f'fill="{_color(frac)}"/>'
        )
    body.append(_text(x + 16, y + height, "1", size=10))
    body.append(_text(x + 16, y + 10, str(n_objects), size=10))
    body.append(_text(x + 16, y + height / 2, "i", size=10))


def locus_svg(coords: np.ndarray, title: str, azimuth: float = 30.0,
              elevation: float = 20.0, size: int = 640) -> str:
    """Scatter of the (projected) embedding locus, colored by object order."""
    uv = project_axonometric(coords, azimuth, elevation)
    n = uv.shape[0]
    margin = 48
    panel = _Panel(margin, margin, size - 2 * margin - 60, size - 2 * margin,
                   _limits(uv[:, 0]), _limits(uv[:, 1]))
    panel.frame()
    denom = max(n - 1, 1)
    for i in range(n):
        panel.dot(uv[i, 0], uv[i, 1], _color(i / denom))
    body = [_text(size / 2, 24, title, size=14, anchor="middle"),
            _text(size / 2, size - 10,
                  f"azimuth {azimuth:g}&#176;, elevation {elevation:g}&#176;",
                  size=10, anchor="middle", color="#666")]
    body.extend(panel.elements)
    _colorbar(body, size - margin - 40, margin, size - 2 * margin, n)
    return _document(size, size, body)


def components_svg(coordinates: np.ndarray, fits: Optional[Sequence[SinusoidFit]] = None,
                   p_max: Optional[int] = None, width: int = 900) -> str:
    """Stacked traces of embedding components versus object order."""
    coords = np.asarray(coordinates, dtype=np.float64)
    n_obj, n_dim = coords.shape
    p_max = n_dim if p_max is None else min(p_max, n_dim)
    panel_h, gap, margin = 86, 10, 46
    height = margin * 2 + p_max * (panel_h + gap)
    body = [_text(width / 2, 24, "embedding components versus object order i",
                  size=14, anchor="middle")]
    idx = np.arange(1, n_obj + 1, dtype=np.float64)
    fit_by_p = {f.p: f for f in fits} if fits else {}
    for p in range(1, p_max + 1):
        col = coords[:, p - 1]
        y0 = margin + (p - 1) * (panel_h + gap)
        panel = _Panel(margin, y0, width - 2 * margin, panel_h, (1.0, float(n_obj)), _limits(col))
        fit = fit_by_p.get(p)
        label = f"p={p}"
        if fit is not None:
            label += f"  A={fit.A:.3g}  &#969;={fit.omega:.4g}  r&#178;={fit.r2:.3f}"
        panel.frame(label)
        panel.polyline(idx, col, "#1f77b4", width=1.0)
        if fit is not None:
            panel.polyline(idx, fit.evaluate(idx), "#d62728", width=1.0, dash="4,3")
        body.extend(panel.elements)
    return _document(width, height, body)


def _law_panel(body, x0, y0, w, h, xs, ys, label, line_xs=None, line_ys=None):
    panel = _Panel(x0, y0, w, h, _limits(np.asarray(xs, float)), _limits(np.asarray(ys, float)))
    panel.frame(label)
    if line_xs is not None:
        panel.polyline(line_xs, line_ys, "#d62728", width=1.2)
    for x, y in zip(xs, ys):
        panel.dot(x, y, "#1f77b4", r=3.0)
    body.extend(panel.elements)


def parameters_svg(fits: Sequence[SinusoidFit], power: Optional[PowerLawFit] = None,
                   linear: Optional[LinearFit] = None, width: int = 960, height: int = 360) -> str:
    """Amplitude, frequency and phase of the component sinusoids versus p."""
    ps = np.array([f.p for f in fits], dtype=np.float64)
    body = [_text(width / 2, 24, "sinusoid parameters versus component index p",
                  size=14, anchor="middle")]
    margin, gap = 46, 34
    w = (width - 2 * margin - 2 * gap) / 3
    h = height - margin - 60

    amps = np.array([f.A for f in fits])
    label = "A(p)"
    line = None
    if power is not None:
        grid = np.linspace(ps.min(), ps.max(), 64)
        line = (grid, power.prefactor * grid ** power.exponent)
        label += f"  &#8764; p^{power.exponent:.3f}  r&#178;={power.r2:.3f}"
    _law_panel(body, margin, 46, w, h, ps, amps, label,
               *(line if line else (None, None)))

    omegas = np.array([f.omega for f in fits])
    label = "&#969;(p)"
    line = None
    if linear is not None:
        grid = np.array([ps.min(), ps.max()])
        line = (grid, linear.slope * grid + linear.intercept)
        label += f"  slope={linear.slope:.4g}  r&#178;={linear.r2:.3f}"
    _law_panel(body, margin + w + gap, 46, w, h, ps, omegas, label,
               *(line if line else (None, None)))

    phis = np.array([f.phi for f in fits])
    _law_panel(body, margin + 2 * (w + gap), 46, w, h, ps, phis, "&#966;(p)")
    return _document(width, int(height), body)


def panel_svg(loci: Sequence[Tuple[str, np.ndarray]], azimuth: float = 30.0,
              elevation: float = 20.0, cell: int = 300) -> str:
    """Grid of loci (one per metric), three panels per row."""
    cols = 3
    rows = max(1, (len(loci) + cols - 1) // cols)
    margin, gap = 24, 18
    width = margin * 2 + cols * cell + (cols - 1) * gap
    height = margin * 2 + rows * (cell + 24) + (rows - 1) * gap
    body = []
    for k, (label, coords) in enumerate(loci):
        uv = project_axonometric(coords, azimuth, elevation)
        r, c = divmod(k, cols)
        x0 = margin + c * (cell + gap)
        y0 = margin + r * (cell + 24 + gap)
        body.append(_text(x0 + cell / 2, y0 + 12, label, size=12, anchor="middle"))
        panel = _Panel(x0, y0 + 20, cell, cell, _limits(uv[:, 0]), _limits(uv[:, 1]))
        panel.frame()
        denom = max(uv.shape[0] - 1, 1)
        for i in range(uv.shape[0]):
            panel.dot(uv[i, 0], uv[i, 1], _color(i / denom), r=1.4)
        body.extend(panel.elements)
    return _document(width, height, body)
