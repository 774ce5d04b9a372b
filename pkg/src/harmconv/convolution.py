"""Hadamard convolutions of the half-plane families.

The left factor is always the a-parameter family (h + g = (1+a)z/(1-z));
the right factor is F0, F1 or Fn.  The convolved analytic parts are named
H and G, their derivatives Hp and Gp, and the convolution's dilatation is
Gp/Hp.  Everything reduces to elementary evaluations of the right factor,
except values of the F1 convolution which have dilogarithm closed forms.
"""
import cmath
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from ._core import SINGULARITY_GUARD, finish, prepare, theta_is_pi
from .errors import (CriticalPointError, DomainError, ParameterError,
                     QuadratureError, SingularityError)
from .mappings import (MappingSpec, eval_g, eval_g_prime, eval_h,
                       eval_h_prime, make_mapping, singular_points)
from .series import taylor_of_mapping
from .special import li2

_SMALL_Z = 1e-4   # below this the odd-part difference quotients use series
_CRITICAL_TOL = 1e-14


@dataclass(frozen=True)
class ConvolutionSpec:
    """Pairing of the left a-family with a right factor mapping."""
    a: float
    right: MappingSpec

    def __post_init__(self):
        if not -1 < self.a < 1:
            raise ParameterError(f"a must lie in (-1, 1), got {self.a!r}")
        if self.right.family not in ("F0", "F1", "Fn"):
            raise ParameterError(
                f"right factor must be F0, F1 or Fn, got {self.right.family}")


def conv_dilatation_f0(a, z):
    """Dilatation of the convolution with the canonical map F0.

    Equals -z p(z)/p*(z) with p(z) = z^2 + (1+3a)/2 z + (1+a)/2 and p* its
    reciprocal conjugate; p* is zero-free on the closed disk, so the
    expression is analytic there.
    """
    if not -1 < a < 1:
        raise ParameterError(f"a must lie in (-1, 1), got {a!r}")
    arr, scalar = prepare(z)
    if np.any(np.abs(arr) >= 1):
        raise DomainError("conv_dilatation_f0 requires |z| < 1")
    b1 = (1 + 3 * a) / 2
    b0 = (1 + a) / 2
    p = arr * arr + b1 * arr + b0
    pstar = 1 + b1 * arr + b0 * arr * arr
    return finish(-arr * p / pstar, scalar)


def conv_parts_f1(a, theta, z):
    """Values (H, G) of the convolved analytic parts for a right F1 factor.

    Closed forms in the dilogarithm: with u = e^{i theta},
    S = Li2(z) - Li2(-z) + Li2(uz) - Li2(-uz) and L = log((1+z)/(1-z)),
        H = (1+a)/2 h1 + C (S + (1 + 1/u) L),
        G = (1+a)/2 g1 + C (S - (1 + u) L),   C = (1-a) u / (4 (1+u)^2).
    """
    if not -1 < a < 1:
        raise ParameterError(f"a must lie in (-1, 1), got {a!r}")
    if theta_is_pi(theta):
        raise ParameterError("conv_parts_f1 is undefined at theta = pi")
    spec = make_mapping("F1", theta=theta)
    arr, scalar = prepare(z)
    u = cmath.exp(1j * spec.theta)
    _guard_points(arr, np.array([1, -1, cmath.exp(-1j * spec.theta),
                                 -cmath.exp(-1j * spec.theta)]))
    h1 = eval_h(spec, arr)
    g1 = eval_g(spec, arr)
    S = li2(arr) - li2(-arr) + li2(u * arr) - li2(-u * arr)
    L = np.log(1 + arr) - np.log(1 - arr)
    C = (1 - a) * u / (4 * (1 + u) ** 2)
    H = (1 + a) / 2 * h1 + C * (S + (1 + 1 / u) * L)
    G = (1 + a) / 2 * g1 + C * (S - (1 + u) * L)
    if scalar:
        return complex(H), complex(G)
    return H, G


def _guard_points(arr, sing):
    if np.any(np.abs(arr) >= 1):
        raise DomainError("evaluation requires |z| < 1")
    d = np.abs(arr.reshape(-1)[:, None] - sing[None, :])
    mins = d.min(axis=1)
    if np.any(mins < SINGULARITY_GUARD):
        first = int(np.argmax(mins < SINGULARITY_GUARD))
        s = complex(sing[int(np.argmin(d[first]))])
        raise SingularityError(f"point too close to singularity {s:.6f}",
                               singularity=s)


@lru_cache(maxsize=128)
def _small_z_coeffs(right: MappingSpec):
    # leading Taylor data of the right factor, for tiny |z|: odd h and g
    # coefficients plus derivative coefficients, all through order 9
    h, g = taylor_of_mapping(right, 9)
    k = np.arange(1, 10)
    return (h.coeffs[1::2].copy(), g.coeffs[1::2].copy(),
            h.coeffs[1:] * k, g.coeffs[1:] * k)


def conv_derivatives(spec: ConvolutionSpec, z):
    """Derivatives (Hp, Gp) of the convolved analytic parts.

    Hp = (1-a)/4 (h_r(z) - h_r(-z))/z + (1+a)/2 h_r'(z) and Gp the same
    with g_r and a minus on the difference quotient.  The removable point
    z = 0 gives (1, 0); |z| below 1e-4 is routed through the right
    factor's odd Taylor coefficients to dodge cancellation.
    """
    a = spec.a
    right = spec.right
    arr, scalar = prepare(z)
    small = np.abs(arr) < _SMALL_Z
    out_h = np.empty(arr.shape, dtype=complex)
    out_g = np.empty(arr.shape, dtype=complex)

    if np.any(~small):
        w = np.where(small, 0.5, arr)  # placeholder keeps evaluators happy
        hd = (eval_h(right, w) - eval_h(right, -w)) / w
        gd = (eval_g(right, w) - eval_g(right, -w)) / w
        hp = eval_h_prime(right, w)
        gp = eval_g_prime(right, w)
        out_h = np.where(small, 0, (1 - a) / 4 * hd + (1 + a) / 2 * hp)
        out_g = np.where(small, 0, -(1 - a) / 4 * gd + (1 + a) / 2 * gp)
    if np.any(small):
        hodd, godd, dh, dg = _small_z_coeffs(right)
        zloc = np.where(small, arr, 0)
        # (h(z)-h(-z))/z = 2 sum_{odd k} c_k z^{k-1}; truncation error ~|z|^10
        hd = 2 * np.polynomial.polynomial.polyval(zloc ** 2, hodd)
        gd = 2 * np.polynomial.polynomial.polyval(zloc ** 2, godd)
        hp = np.polynomial.polynomial.polyval(zloc, dh)
        gp = np.polynomial.polynomial.polyval(zloc, dg)
        sh = (1 - a) / 4 * hd + (1 + a) / 2 * hp
        sg = -(1 - a) / 4 * gd + (1 + a) / 2 * gp
        out_h = np.where(small, sh, out_h)
        out_g = np.where(small, sg, out_g)
    if scalar:
        return complex(out_h[()]), complex(out_g[()])
    return out_h, out_g


def conv_dilatation(spec: ConvolutionSpec, z):
    """The convolution's dilatation Gp/Hp."""
    arr, scalar = prepare(z)
    Hp, Gp = conv_derivatives(spec, arr)
    mod = np.abs(np.atleast_1d(Hp))
    if np.any(mod <= _CRITICAL_TOL):
        where = np.atleast_1d(arr).reshape(-1)[int(np.argmax(mod.reshape(-1) <= _CRITICAL_TOL))]
        raise CriticalPointError(f"vanishing derivative at z = {complex(where):.6f}",
                                 point=complex(where))
    return finish(np.asarray(Gp) / np.asarray(Hp), scalar)


_GL_NODES, _GL_WEIGHTS = np.polynomial.legendre.leggauss(16)


def _adaptive_pair(spec, phase, lo, hi, tol, depth):
    def panel(p, q):
        mid = (p + q) / 2
        half = (q - p) / 2
        s = mid + half * _GL_NODES
        Hp, Gp = conv_derivatives(spec, s * phase)
        return (half * phase) * np.array([np.dot(_GL_WEIGHTS, Hp),
                                          np.dot(_GL_WEIGHTS, Gp)])

    whole = panel(lo, hi)
    mid = (lo + hi) / 2
    fine = panel(lo, mid) + panel(mid, hi)
    if np.max(np.abs(whole - fine)) < tol:
        return fine
    if depth >= 12:
        raise QuadratureError(
            f"radial integration did not reach tol {tol:g} at depth 12")
    return (_adaptive_pair(spec, phase, lo, mid, tol / 2, depth + 1)
            + _adaptive_pair(spec, phase, mid, hi, tol / 2, depth + 1))


def conv_value(spec: ConvolutionSpec, z):
    """Value of the convolved harmonic mapping, H(z) + conj(G(z)).

    The F1 right factor uses the dilogarithm closed forms; F0 and Fn
    integrate (Hp, Gp) adaptively along the radial segment [0, z] with
    16-point Gauss-Legendre panels to absolute tolerance 1e-9.
    """
    arr, scalar = prepare(z)
    if np.any(np.abs(arr) > 0.999):
        raise DomainError("conv_value requires |z| <= 0.999")
    if spec.right.family == "F1":
        H, G = conv_parts_f1(spec.a, spec.right.theta, arr)
        return finish(np.asarray(H) + np.conj(np.asarray(G)), scalar)
    _guard_points(np.atleast_1d(arr), singular_points(spec.right))
    flat = np.atleast_1d(arr).reshape(-1)
    out = np.empty(flat.shape, dtype=complex)
    for i, zi in enumerate(flat):
        if zi == 0:
            out[i] = 0
            continue
        phase = zi / abs(zi)
        H, G = _adaptive_pair(spec, phase, 0.0, abs(zi), 1e-9, 0)
        out[i] = H + G.conjugate()
    return finish(out.reshape(arr.shape), scalar)
