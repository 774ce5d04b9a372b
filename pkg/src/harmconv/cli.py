"""Command-line interface.

Angles are accepted as exact rational multiples of pi ("7pi/8", "-pi/4",
"pi", "0") or as plain radian floats.  Exit codes: 0 on success, 1 when a
tolerance check fails, 2 on usage errors.
"""
import csv
import json
import math
import re
import sys

import click
import numpy as np

from . import tables
from .analysis import default_grid, scan_dilatation, univalency_radius
from .convolution import ConvolutionSpec, conv_dilatation
from .errors import HarmconvError, ParameterError
from .mappings import make_mapping
from .render import FigureSpec, render_webbing
from .series import (hadamard, series_derivative, series_div, series_eval,
                     taylor_of_mapping)

_ANGLE_RE = re.compile(r"^([+-]?)(\d*)pi(?:/(\d+))?$")


def parse_angle(text: str) -> float:
    s = text.strip().lower().replace(" ", "")
    m = _ANGLE_RE.match(s)
    if m:
        sign = -1.0 if m.group(1) == "-" else 1.0
        num = int(m.group(2)) if m.group(2) else 1
        den = int(m.group(3)) if m.group(3) else 1
        return sign * math.pi * num / den
    try:
        return float(s)
    except ValueError:
        raise click.BadParameter(f"cannot parse angle {text!r}")


def _right_spec(family, n, theta):
    try:
        if family == "f0":
            return make_mapping("F0")
        if theta is None:
            raise click.BadParameter(f"--theta is required for family {family}")
        th = parse_angle(theta)
        if family == "f1":
            return make_mapping("F1", theta=th)
        if n is None:
            raise click.BadParameter("--n is required for family fn")
        return make_mapping("Fn", theta=th, n=n)
    except ParameterError as exc:
        raise click.BadParameter(str(exc))


def _conv_spec(family, n, theta, a):
    try:
        return ConvolutionSpec(a, _right_spec(family, n, theta))
    except ParameterError as exc:
        raise click.BadParameter(str(exc))


_family_options = [
    click.option("--family", type=click.Choice(["f0", "f1", "fn"]),
                 required=True, help="Right convolution factor."),
    click.option("--a", type=float, required=True,
                 help="Left factor parameter, in (-1, 1)."),
    click.option("--n", type=int, default=None, help="Order for family fn."),
    click.option("--theta", default=None,
                 help="Angle for f1/fn, e.g. 'pi', '-pi/4', '7pi/8'."),
]


def _with_family(fn):
    for opt in reversed(_family_options):
        fn = opt(fn)
    return fn


@click.group()
def main():
    """Half-plane harmonic mappings, their convolutions, and univalency
    diagnostics."""


@main.command()
@click.argument("which", type=click.IntRange(1, 2))
@click.option("--format", "fmt", type=click.Choice(["text", "csv", "json"]),
              default="text", show_default=True)
def table(which, fmt):
    """Recompute bundled reference table WHICH and report differences.

    Exits 1 if any row deviates by more than 1e-4.
    """
    rows = tables.compute_table(which)
    if fmt == "json":
        click.echo(json.dumps(rows, indent=2))
    elif fmt == "csv":
        w = csv.DictWriter(sys.stdout, fieldnames=list(rows[0].keys()))
        w.writeheader()
        w.writerows(rows)
    else:
        click.echo(f"{'n':>3} {'a':>5} {'theta':>8} {'z angle':>8} "
                   f"{'computed':>10} {'reference':>10} {'diff':>9}")
        for r in rows:
            click.echo(f"{r['n']:>3} {r['a']:>5} {r['theta']:>8} "
                       f"{r['z_angle']:>8} {r['computed']:>10.5f} "
                       f"{r['reference']:>10.5f} {r['diff']:>9.2e}")
    if any(r["diff"] > tables.TOLERANCE for r in rows):
        click.echo("FAIL: at least one row off by more than "
                   f"{tables.TOLERANCE:g}", err=True)
        sys.exit(1)


@main.command()
@_with_family
@click.option("--radii", type=int, default=60, show_default=True,
              help="Number of scan circles.")
@click.option("--angles", type=int, default=720, show_default=True,
              help="Nodes per circle.")
@click.option("--format", "fmt", type=click.Choice(["text", "json"]),
              default="text", show_default=True)
def check(family, a, n, theta, radii, angles, fmt):
    """Scan |dilatation| of the convolution over a disk grid.

    Set HARMCONV_THREADS to parallelize the scan.
    """
    spec = _conv_spec(family, n, theta, a)
    report = scan_dilatation(spec, default_grid(radii, angles))
    if fmt == "json":
        click.echo(report.to_json())
        return
    click.echo(f"max |dilatation|  {report.max_modulus:.6f}")
    click.echo(f"at z              {report.argmax:.6f}")
    click.echo(f"violations        {len(report.violations)}")
    click.echo(f"critical points   {len(report.critical_points)}")
    click.echo(f"skipped nodes     {report.skipped}")


@main.command()
@_with_family
@click.option("--tol", type=float, default=1e-6, show_default=True)
def radius(family, a, n, theta, tol):
    """Estimate the univalency radius of the convolution."""
    spec = _conv_spec(family, n, theta, a)
    try:
        r = univalency_radius(spec, tol)
    except ParameterError as exc:
        raise click.BadParameter(str(exc))
    click.echo(f"{r:.6f}")


@main.command()
@_with_family
@click.option("--out", type=click.Path(dir_okay=False, writable=True),
              required=True, help="Output SVG path.")
@click.option("--rings", type=int, default=10, show_default=True)
@click.option("--rays", type=int, default=24, show_default=True)
@click.option("--samples", type=int, default=512, show_default=True)
@click.option("--max-radius", type=float, default=0.99, show_default=True)
@click.option("--stroke", default="#1f3d7a", show_default=True)
@click.option("--stroke-width", type=float, default=1.0, show_default=True)
def render(family, a, n, theta, out, rings, rays, samples, max_radius,
           stroke, stroke_width):
    """Write the disk-image webbing of the convolution as SVG."""
    spec = _conv_spec(family, n, theta, a)
    try:
        fig = FigureSpec(rings=rings, rays=rays, samples_per_curve=samples,
                         max_radius=max_radius)
    except ParameterError as exc:
        raise click.BadParameter(str(exc))
    svg = render_webbing(spec, fig, stroke=stroke, stroke_width=stroke_width)
    with open(out, "w", encoding="utf-8") as fh:
        fh.write(svg)
    click.echo(out)


@main.command()
@_with_family
@click.option("--order", type=int, default=256, show_default=True,
              help="Series truncation order.")
@click.option("--samples", type=int, default=100, show_default=True)
@click.option("--seed", type=int, default=20240817, show_default=True)
def oracle(family, a, n, theta, order, samples, seed):
    """Compare the closed-form dilatation against the coefficientwise
    series route at random points with |z| <= 0.7; exits 1 above 1e-8."""
    spec = _conv_spec(family, n, theta, a)
    ha, ga = taylor_of_mapping(make_mapping("Fa", a=a), order)
    hr, gr = taylor_of_mapping(spec.right, order)
    quotient = series_div(series_derivative(hadamard(ga, gr)),
                          series_derivative(hadamard(ha, hr)))
    rng = np.random.default_rng(seed)
    r = 0.7 * np.sqrt(rng.uniform(size=samples))
    phi = rng.uniform(0, 2 * math.pi, size=samples)
    zs = r * np.exp(1j * phi)
    dev = 0.0
    for z in zs:
        dev = max(dev, abs(conv_dilatation(spec, complex(z))
                           - series_eval(quotient, complex(z))))
    click.echo(f"max deviation {dev:.3e} over {samples} samples")
    if dev > 1e-8:
        click.echo("FAIL: deviation above 1e-8", err=True)
        sys.exit(1)


if __name__ == "__main__":
    main()
