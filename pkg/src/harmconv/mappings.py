"""Closed-form harmonic half-plane mappings f = h + conj(g).

Four families are provided, each normalized so that h(0) = g(0) = 0 and
h'(0) = 1:

* ``F0``       -- the canonical half-plane map with dilatation -z;
* ``Fa``       -- the one-parameter family with dilatation (z+a)/(1+az),
                  -1 < a < 1;
* ``F1``       -- dilatation e^{i*theta} z, theta != pi (mod 2pi);
* ``Fn``       -- dilatation e^{i*theta} z^n; at theta = pi a dedicated
                  closed form is used, elsewhere the general one.

``Fn`` with n = 1 coincides with ``F0`` (theta = pi) or ``F1`` pointwise.
All evaluators accept scalars or numpy arrays of points in the open unit
disk and refuse points within 1e-9 of a singularity.
"""
import cmath
import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from ._core import SINGULARITY_GUARD, finish, norm_theta, prepare, theta_is_pi
from .errors import DomainError, ParameterError, SingularityError

FAMILIES = ("F0", "Fa", "F1", "Fn")


@dataclass(frozen=True)
class MappingSpec:
    """Validated descriptor of one mapping family; build via make_mapping."""
    family: str
    a: Optional[float] = None
    theta: Optional[float] = None
    n: Optional[int] = None


def make_mapping(family, a=None, theta=None, n=None) -> MappingSpec:
    """Validate parameters and construct a MappingSpec.

    Raises ParameterError for out-of-range parameters; F1 at theta = pi is
    rejected with a pointer to Fn(n=1, theta=pi), which covers that case.
    """
    if family not in FAMILIES:
        raise ParameterError(f"unknown family {family!r}, expected one of {FAMILIES}")
    if family == "F0":
        return MappingSpec("F0")
    if family == "Fa":
        if a is None or not -1 < a < 1:
            raise ParameterError(f"Fa requires a in (-1, 1), got {a!r}")
        return MappingSpec("Fa", a=float(a))
    if theta is None:
        raise ParameterError(f"{family} requires theta")
    th = norm_theta(theta)
    if family == "F1":
        if theta_is_pi(th):
            raise ParameterError(
                "F1 is undefined at theta = pi; use Fn with n=1, theta=pi instead")
        return MappingSpec("F1", theta=th)
    if n is None or int(n) != n or n < 1:
        raise ParameterError(f"Fn requires a positive integer n, got {n!r}")
    return MappingSpec("Fn", theta=th, n=int(n))


def singular_points(spec: MappingSpec) -> np.ndarray:
    """Unit-circle singularities of the closed forms for this family."""
    if spec.family == "F0":
        return np.array([1.0 + 0j])
    if spec.family == "Fa":
        return np.array([1.0 + 0j, -1.0 + 0j])
    if spec.family == "F1":
        return np.array([1.0 + 0j, -cmath.exp(-1j * spec.theta)])
    n = spec.n
    if theta_is_pi(spec.theta):
        k = np.arange(n)
        return np.exp(2j * math.pi * k / n)
    k = np.arange(n)
    phi = ((2 * k + 1) * math.pi - spec.theta) / n
    return np.concatenate(([1.0 + 0j], np.exp(1j * phi)))


def _guard(spec, arr):
    # inputs must stay in the open disk and clear of the circle singularities
    if np.any(np.abs(arr) >= 1):
        raise DomainError("evaluation requires |z| < 1")
    sing = singular_points(spec)
    d = np.abs(arr.reshape(-1)[:, None] - sing[None, :])
    mins = d.min(axis=1)
    if np.any(mins < SINGULARITY_GUARD):
        first = int(np.argmax(mins < SINGULARITY_GUARD))
        s = complex(sing[int(np.argmin(d[first]))])
        raise SingularityError(
            f"point within {SINGULARITY_GUARD:g} of singularity {s:.6f}",
            singularity=s)


def _geom(z):
    return z / (1 - z)


def _fn_log_sum_pi(n, z):
    # (1/4n) * sum csc^2(pi k/n) log(1 - z e^{-2pi i k/n}), empty for n = 1
    if n == 1:
        return np.zeros_like(z)
    k = np.arange(1, n)
    csc2 = 1.0 / np.sin(math.pi * k / n) ** 2
    roots = np.exp(-2j * math.pi * k / n)
    terms = csc2 * np.log(1 - z[..., None] * roots)
    return terms.sum(axis=-1) / (4 * n)


def _fn_log_sum_gen(n, theta, z):
    k = np.arange(n)
    phi = ((2 * k + 1) * math.pi - theta) / n
    csc2 = 1.0 / np.sin(phi / 2) ** 2
    roots = np.exp(-1j * phi)
    terms = csc2 * np.log(1 - z[..., None] * roots)
    return terms.sum(axis=-1) / (4 * n)


def _h(spec, z):
    fam = spec.family
    if fam == "F0":
        return (z - z * z / 2) / (1 - z) ** 2
    if fam == "Fa":
        a = spec.a
        L = np.log(1 + z) - np.log(1 - z)
        return (1 + a) / 2 * _geom(z) + (1 - a) / 4 * L
    if fam == "F1":
        u = cmath.exp(1j * spec.theta)
        M = np.log(1 + u * z) - np.log(1 - z)
        return _geom(z) / (1 + u) + u / (1 + u) ** 2 * M
    n = spec.n
    if theta_is_pi(spec.theta):
        out = (n - 1) / (2 * n) * _geom(z) + z * (2 - z) / (2 * n * (1 - z) ** 2)
        out = out - (n * n - 1) / (12 * n) * np.log(1 - z)
        return out + _fn_log_sum_pi(n, z)
    u = cmath.exp(1j * spec.theta)
    out = -n * u / (1 + u) ** 2 * np.log(1 - z) + _geom(z) / (1 + u)
    return out + _fn_log_sum_gen(n, spec.theta, z)


def _g(spec, z):
    fam = spec.family
    if fam == "F0":
        return (-z * z / 2) / (1 - z) ** 2
    if fam == "Fa":
        a = spec.a
        L = np.log(1 + z) - np.log(1 - z)
        return (1 + a) / 2 * _geom(z) - (1 - a) / 4 * L
    if fam == "F1":
        u = cmath.exp(1j * spec.theta)
        M = np.log(1 + u * z) - np.log(1 - z)
        return u * _geom(z) / (1 + u) - u / (1 + u) ** 2 * M
    # both Fn branches satisfy h + g = z/(1-z)
    return _geom(z) - _h(spec, z)


def _h_prime(spec, z):
    fam = spec.family
    if fam == "F0":
        return 1 / (1 - z) ** 3
    if fam == "Fa":
        return (1 + spec.a * z) / ((1 + z) * (1 - z) ** 2)
    if fam == "F1":
        u = cmath.exp(1j * spec.theta)
        return 1 / ((1 + u * z) * (1 - z) ** 2)
    u = -1.0 if theta_is_pi(spec.theta) else cmath.exp(1j * spec.theta)
    return 1 / ((1 + u * z ** spec.n) * (1 - z) ** 2)


def _g_prime(spec, z):
    fam = spec.family
    if fam == "F0":
        return -z / (1 - z) ** 3
    if fam == "Fa":
        return (z + spec.a) / ((1 + z) * (1 - z) ** 2)
    if fam == "F1":
        u = cmath.exp(1j * spec.theta)
        return u * z / ((1 + u * z) * (1 - z) ** 2)
    u = -1.0 if theta_is_pi(spec.theta) else cmath.exp(1j * spec.theta)
    return u * z ** spec.n / ((1 + u * z ** spec.n) * (1 - z) ** 2)


def _eval(fn, spec, z):
    arr, scalar = prepare(z)
    _guard(spec, arr)
    return finish(fn(spec, arr), scalar)


def eval_h(spec: MappingSpec, z):
    """Analytic part h of the mapping at z."""
    return _eval(_h, spec, z)


def eval_g(spec: MappingSpec, z):
    """Co-analytic part g of the mapping at z."""
    return _eval(_g, spec, z)


def eval_h_prime(spec: MappingSpec, z):
    return _eval(_h_prime, spec, z)


def eval_g_prime(spec: MappingSpec, z):
    return _eval(_g_prime, spec, z)


def eval_f(spec: MappingSpec, z):
    """The harmonic mapping value h(z) + conj(g(z))."""
    arr, scalar = prepare(z)
    _guard(spec, arr)
    return finish(_h(spec, arr) + np.conj(_g(spec, arr)), scalar)


def dilatation(spec: MappingSpec, z):
    """The second complex dilatation g'/h' in its closed form."""
    arr, scalar = prepare(z)
    if np.any(np.abs(arr) >= 1):
        raise DomainError("dilatation requires |z| < 1")
    fam = spec.family
    if fam == "F0":
        out = -arr
    elif fam == "Fa":
        out = (arr + spec.a) / (1 + spec.a * arr)
    elif fam == "F1":
        out = cmath.exp(1j * spec.theta) * arr
    else:
        u = -1.0 if theta_is_pi(spec.theta) else cmath.exp(1j * spec.theta)
        out = u * arr ** spec.n
    return finish(out, scalar)
