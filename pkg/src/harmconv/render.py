"""SVG webbing plots: the unit disk's image under a convolved mapping,
drawn as concentric ring images and radial segment images.

Output is plain SVG 1.1 text, byte-identical for identical inputs.
"""
import math
from dataclasses import dataclass

import numpy as np

from .convolution import ConvolutionSpec, conv_value
from .errors import HarmconvError, ParameterError

_FMT = "%.6f"


@dataclass(frozen=True)
class FigureSpec:
    """Webbing density and viewport size."""
    rings: int = 10
    rays: int = 24
    samples_per_curve: int = 512
    max_radius: float = 0.99
    width_px: int = 640
    height_px: int = 640

    def __post_init__(self):
        if self.rings < 1:
            raise ParameterError("rings must be >= 1")
        if self.rays < 2:
            raise ParameterError("rays must be >= 2")
        if self.samples_per_curve < 64:
            raise ParameterError("samples_per_curve must be >= 64")
        if not 0 < self.max_radius <= 0.999:
            raise ParameterError("max_radius must lie in (0, 0.999]")


def _curves(spec: ConvolutionSpec, fig: FigureSpec):
    """Sample all webbing curves; returns (list of vertex arrays, dropped).

    A curve is a list of complex image points; samples that fail to
    evaluate are dropped and split the curve at the gap.
    """
    S = fig.samples_per_curve
    curves = []
    dropped = 0
    params = []
    for j in range(fig.rings):
        r = fig.max_radius * (j + 1) / fig.rings
        t = 2 * math.pi * np.arange(S + 1) / S  # closed loop
        params.append(r * np.exp(1j * t))
    for k in range(fig.rays):
        phi = 2 * math.pi * k / fig.rays
        s = fig.max_radius * np.arange(S) / (S - 1)
        params.append(s * np.exp(1j * phi))
    for zs in params:
        try:
            vals = conv_value(spec, zs)
            segs = [vals]
        except HarmconvError:
            # retry pointwise so one bad sample only splits the curve
            pts = []
            segs = []
            for z in zs:
                try:
                    pts.append(conv_value(spec, complex(z)))
                except HarmconvError:
                    dropped += 1
                    if len(pts) > 1:
                        segs.append(np.array(pts))
                    pts = []
            if len(pts) > 1:
                segs.append(np.array(pts))
        curves.extend(np.asarray(s) for s in segs if len(s) > 1)
    return curves, dropped


def render_webbing(spec: ConvolutionSpec, fig: FigureSpec,
                   stroke: str = "#1f3d7a", stroke_width: float = 1.0) -> str:
    """Render the disk image webbing as an SVG document string."""
    curves, dropped = _curves(spec, fig)
    xs = np.concatenate([c.real for c in curves])
    ys = np.concatenate([-c.imag for c in curves])  # SVG y points down
    x0, x1 = float(xs.min()), float(xs.max())
    y0, y1 = float(ys.min()), float(ys.max())
    margin = 0.05 * max(x1 - x0, y1 - y0)
    vb = (x0 - margin, y0 - margin,
          (x1 - x0) + 2 * margin, (y1 - y0) + 2 * margin)

    sw = stroke_width * vb[2] / fig.width_px  # pixels -> user units
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        '<svg xmlns="http://www.w3.org/2000/svg" '
        f'width="{fig.width_px}" height="{fig.height_px}" '
        f'viewBox="{_FMT % vb[0]} {_FMT % vb[1]} {_FMT % vb[2]} {_FMT % vb[3]}">',
        f"<!-- dropped samples: {dropped} -->",
        f'<g fill="none" stroke="{stroke}" stroke-width="{_FMT % sw}">',
    ]
    for c in curves:
        pts = " ".join(
            f"{_FMT % v.real},{_FMT % (-v.imag)}" for v in c)
        lines.append(f'<polyline points="{pts}"/>')
    lines.append("</g>")
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
