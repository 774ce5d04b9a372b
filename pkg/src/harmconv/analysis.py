"""Univalency decision machinery.

Contains the Schur-Cohn style zero counter used for the F0 convolution,
grid scans of convolution dilatations with violation reporting, the
auxiliary boundary function J with its piecewise boundary analysis, and a
numerical univalency-radius estimator.
"""
import cmath
import json
import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from typing import List, Optional, Tuple

import numpy as np

from ._core import SINGULARITY_GUARD, finish, norm_theta, prepare, theta_is_pi
from .convolution import ConvolutionSpec, conv_derivatives
from .errors import (BoundaryDegenerateError, CohnInapplicableError,
                     DomainError, HarmconvError, ParameterError)
from .mappings import (eval_g, eval_h, eval_h_prime, make_mapping,
                       singular_points)
from .series import taylor_of_mapping

_CRITICAL_TOL = 1e-14


# ---------------------------------------------------------------------------
# polynomial zero counting

@dataclass(frozen=True)
class Poly:
    """Polynomial with ascending coefficients; trailing zeros are trimmed."""
    coeffs: np.ndarray

    def __post_init__(self):
        c = np.asarray(self.coeffs, dtype=complex)
        if c.ndim != 1 or len(c) == 0:
            raise ParameterError("coeffs must be a non-empty 1-d sequence")
        last = len(c)
        while last > 1 and c[last - 1] == 0:
            last -= 1
        c = c[:last]
        if len(c) == 1 and c[0] == 0:
            raise ParameterError("the zero polynomial has no defined degree")
        object.__setattr__(self, "coeffs", c)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1


def cohn_reduce(p: Poly) -> Poly:
    """One reduction step: q1(z) = (conj(a_d) p(z) - a_0 p*(z)) / z.

    p* is the reciprocal conjugate z^d conj(p(1/conj z)).  Applicable only
    when |a_0| < |a_d|; then p has exactly one more zero in the open unit
    disk than q1.
    """
    if p.degree < 1:
        raise ParameterError("cohn_reduce needs degree >= 1")
    c = p.coeffs
    a0, ad = c[0], c[-1]
    if abs(ad) <= abs(a0):
        raise CohnInapplicableError(
            "reduction requires |a_0| < |a_d|")
    num = np.conj(ad) * c - a0 * np.conj(c[::-1])
    # constant term cancels exactly; the rest is q1
    return Poly(num[1:])


def zeros_in_unit_disk(p: Poly) -> int:
    """Number of zeros of p inside the open unit disk.

    Iterates Cohn reductions, flipping to the reversed polynomial when the
    end coefficients force it.  Inputs whose end coefficients have equal
    modulus (the inconclusive configuration, in particular any polynomial
    with unit-circle zeros) raise BoundaryDegenerateError.
    """
    d = p.degree
    if d == 0:
        return 0
    c = p.coeffs
    a0m, adm = abs(c[0]), abs(c[-1])
    if abs(a0m - adm) <= 1e-10 * float(np.max(np.abs(c))):
        raise BoundaryDegenerateError(
            "end coefficients have equal modulus; count is undecidable")
    if a0m < adm:
        return 1 + zeros_in_unit_disk(cohn_reduce(p))
    # reversal maps zeros to reciprocals, exchanging inside and outside
    return d - zeros_in_unit_disk(Poly(c[::-1].copy()))


# ---------------------------------------------------------------------------
# grid scanning

@dataclass(frozen=True)
class GridSpec:
    """Scan lattice: circles at the given radii, equispaced angles."""
    radii: Tuple[float, ...]
    angles_count: int

    def __post_init__(self):
        r = tuple(float(x) for x in self.radii)
        object.__setattr__(self, "radii", r)
        if len(r) == 0:
            raise ParameterError("at least one radius required")
        if any(x <= 0 for x in r) or r[-1] > 0.999 + 1e-12:
            raise ParameterError("radii must lie in (0, 0.999]")
        if any(b <= a for a, b in zip(r, r[1:])):
            raise ParameterError("radii must be strictly increasing")
        if self.angles_count < 1:
            raise ParameterError("angles_count must be >= 1")


def default_grid(radii_count: int = 60, angles_count: int = 720,
                 max_radius: float = 0.999) -> GridSpec:
    """Radii accumulate geometrically toward the outer edge, where the
    interesting behaviour lives."""
    gaps = np.geomspace(1 - 0.05, 1 - max_radius, radii_count)
    radii = 1.0 - gaps
    radii[-1] = max_radius
    return GridSpec(tuple(radii), angles_count)


def _cx(z):
    return None if z is None else {"re": float(z.real), "im": float(z.imag)}


def _uncx(d):
    return None if d is None else complex(d["re"], d["im"])


@dataclass
class UnivalencyReport:
    """Outcome of a dilatation grid scan."""
    max_modulus: float
    argmax: Optional[complex]
    violations: List[Tuple[complex, float]]
    grid: GridSpec
    critical_points: List[complex]
    skipped: int = 0

    def to_dict(self) -> dict:
        return {
            "max_modulus": self.max_modulus,
            "argmax": _cx(self.argmax),
            "violations": [{"z": _cx(z), "modulus": m} for z, m in self.violations],
            "grid": {"radii": list(self.grid.radii),
                     "angles_count": self.grid.angles_count},
            "critical_points": [_cx(z) for z in self.critical_points],
            "skipped": self.skipped,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)

    @classmethod
    def from_dict(cls, d: dict) -> "UnivalencyReport":
        return cls(
            max_modulus=d["max_modulus"],
            argmax=_uncx(d["argmax"]),
            violations=[(_uncx(v["z"]), v["modulus"]) for v in d["violations"]],
            grid=GridSpec(tuple(d["grid"]["radii"]), d["grid"]["angles_count"]),
            critical_points=[_uncx(z) for z in d["critical_points"]],
            skipped=d["skipped"],
        )

    @classmethod
    def from_json(cls, s: str) -> "UnivalencyReport":
        return cls.from_dict(json.loads(s))


def _scan_rows(spec, radii, ring, sing):
    """Moduli of the dilatation on each circle; nan marks a skipped or
    critical node."""
    rows = []
    skipped = 0
    criticals = []
    for r in radii:
        z = r * ring
        dist = np.min(np.abs(z[:, None] - sing[None, :]), axis=1)
        good = dist >= SINGULARITY_GUARD
        mod = np.full(len(ring), np.nan)
        if np.any(good):
            Hp, Gp = conv_derivatives(spec, z[good])
            crit = np.abs(Hp) <= _CRITICAL_TOL
            vals = np.full(Hp.shape, np.nan)
            vals[~crit] = np.abs(Gp[~crit] / Hp[~crit])
            mod[good] = vals
            if np.any(crit):
                criticals.extend(complex(w) for w in z[good][crit])
        skipped += int(np.sum(~good))
        rows.append(mod)
    return rows, skipped, criticals


def scan_dilatation(spec: ConvolutionSpec, grid: GridSpec) -> UnivalencyReport:
    """Evaluate |dilatation| at every grid node, row-major over radii then
    angles.

    Nodes inside the singularity guard are skipped and counted; nodes where
    the denominator vanishes are listed as critical points and excluded
    from the max/violation statistics.  Set HARMCONV_THREADS to spread the
    radii over a thread pool; the report is identical either way.
    """
    K = grid.angles_count
    ring = np.exp(2j * math.pi * np.arange(K) / K)
    sing = singular_points(spec.right)
    threads = max(1, int(os.environ.get("HARMCONV_THREADS", "1")))
    radii = list(grid.radii)
    if threads == 1 or len(radii) < 2:
        rows, skipped, criticals = _scan_rows(spec, radii, ring, sing)
    else:
        chunks = [radii[i::threads] for i in range(threads)]
        order = [list(range(len(radii)))[i::threads] for i in range(threads)]
        with ThreadPoolExecutor(max_workers=threads) as pool:
            parts = list(pool.map(
                lambda ch: _scan_rows(spec, ch, ring, sing), chunks))
        rows = [None] * len(radii)
        skipped = 0
        criticals = []
        for idxs, (rws, sk, cr) in zip(order, parts):
            for i, row in zip(idxs, rws):
                rows[i] = row
            skipped += sk
            criticals.extend(cr)
    M = np.concatenate(rows)
    valid = ~np.isnan(M)
    if np.any(valid):
        imax = int(np.nanargmax(M))
        max_modulus = float(M[imax])
        argmax = complex(grid.radii[imax // K] * ring[imax % K])
    else:
        max_modulus = float("nan")
        argmax = None
    vio_idx = np.nonzero(valid & (M >= 1))[0]
    violations = [(complex(grid.radii[i // K] * ring[i % K]), float(M[i]))
                  for i in vio_idx]
    return UnivalencyReport(max_modulus=max_modulus, argmax=argmax,
                            violations=violations, grid=grid,
                            critical_points=criticals, skipped=skipped)


# ---------------------------------------------------------------------------
# the auxiliary function J

@lru_cache(maxsize=64)
def _j_series_coeffs(theta):
    # odd Taylor coefficients of the right F1 factor, for tiny |z|
    h, g = taylor_of_mapping(make_mapping("F1", theta=theta), 24)
    return h.coeffs[1::2].copy(), g.coeffs[3::2].copy()


def eval_J(theta, z):
    """The analytic comparison function J on the open disk; J(0) = 2.

    J(z) = P (2 - Q D) with P = (1+uz)(1-z)/((1+u)z),
    Q = (1-z)(1-uz)/((1+u)z) and D the log term, u = e^{i theta}.  The
    simplified form loses ~|z|^{-2} digits of cancellation near the
    origin, so |z| < 0.01 is evaluated from the Taylor route instead.
    """
    th = norm_theta(theta)
    if theta_is_pi(th):
        raise ParameterError("J is undefined at theta = pi")
    arr, scalar = prepare(z)
    if np.any(np.abs(arr) >= 1):
        raise DomainError("eval_J requires |z| < 1")
    u = cmath.exp(1j * th)
    out = np.empty(arr.shape, dtype=complex)
    small = np.abs(arr) < 0.01

    if np.any(~small):
        w = np.where(small, 0.5, arr)
        D = (np.log(1 + u * w) - np.log(1 - w)
             - np.log(1 - u * w) + np.log(1 + w))
        P = (1 + u * w) * (1 - w) / ((1 + u) * w)
        Q = (1 - w) * (1 - u * w) / ((1 + u) * w)
        out = np.where(small, 0, P * (2 - Q * D))
    if np.any(small):
        hodd, godd = _j_series_coeffs(th)
        w = np.where(small, arr, 0)
        w2 = w * w
        # J = [2 sum c^h_{2j+1} z^{2j} + 2 e^{-i th} z sum c^g_{2j+3} z^{2j}] / h1'
        A = 2 * np.polynomial.polynomial.polyval(w2, hodd) \
            + 2 / u * w * np.polynomial.polynomial.polyval(w2, godd)
        h1p = 1 / ((1 + u * w) * (1 - w) ** 2)
        out = np.where(small, A / h1p, out)
    return finish(out, scalar)


def eval_B(theta, a, z):
    """The comparison quantity whose negativity underlies the dilatation
    bound; strictly negative away from 0 for every admissible theta, a."""
    if not -1 < a < 1:
        raise ParameterError(f"a must lie in (-1, 1), got {a!r}")
    spec = make_mapping("F1", theta=theta)
    arr, scalar = prepare(z)
    if np.any(arr == 0):
        raise DomainError("eval_B is undefined at z = 0")
    c = (1 - a) / (2 * (1 + a))
    h1p = eval_h_prime(spec, arr)
    hd = eval_h(spec, arr) - eval_h(spec, -arr)
    gd = eval_g(spec, arr) - eval_g(spec, -arr)
    B = (np.abs(c * gd / (arr * arr * h1p)) ** 2
         - np.abs(c * hd / (arr * h1p)) ** 2)
    if scalar:
        return float(B)
    return B


@dataclass(frozen=True)
class JBoundaryResult:
    """Boundary value or limit of J at e^{it}.

    ``re`` is the real part (math.inf at the pole), ``case`` names the
    piecewise branch, ``value`` is the full complex value when finite.
    """
    re: float
    case: str
    value: Optional[complex]


def J_boundary(theta, t) -> JBoundaryResult:
    """Re J(e^{it}) via the piecewise argument analysis, plus limits at the
    four exceptional angles."""
    th = norm_theta(theta)
    if theta_is_pi(th):
        raise ParameterError("J_boundary is undefined at theta = pi")
    tau = 2 * math.pi
    tt = float(t) % tau
    tol = 1e-12

    def near(x):
        d = (tt - x) % tau
        return d < tol or tau - d < tol

    if near(0.0):
        return JBoundaryResult(0.0, "limit-z=1", 0j)
    if near(math.pi):
        if abs(th) < tol:
            return JBoundaryResult(0.0, "limit-z=-1", 0j)
        return JBoundaryResult(math.inf, "limit-z=-1", None)
    if near(math.pi - th):
        return JBoundaryResult(0.0, "limit-conj-pole", 0j)
    if near(tau - th):
        v = 4j * math.tan(th / 2)
        return JBoundaryResult(0.0, "limit-4i-tan", v)

    st = math.sin(tt)
    su = math.sin(th + tt)
    if st > 0 and su > 0:
        ab, case = math.pi, "A-B=pi"
    elif st < 0 and su < 0:
        ab, case = -math.pi, "A-B=-pi"
    else:
        ab, case = 0.0, "A-B=0"
    re = 2 * math.sin(tt / 2) ** 2 * su / math.cos(th / 2) ** 2 * ab

    eit = cmath.exp(1j * tt)
    eis = cmath.exp(1j * (th + tt))
    # each log argument has non-negative real part; principal branch is safe
    D = (cmath.log(1 + eis) - cmath.log(1 - eit)
         - cmath.log(1 - eis) + cmath.log(1 + eit))
    pref = -2j * math.sin(tt / 2) * math.cos((th + tt) / 2) / math.cos(th / 2)
    inner = 2 + 2 * math.sin(tt / 2) * math.sin((th + tt) / 2) / math.cos(th / 2) * D
    return JBoundaryResult(re, case, pref * inner)


# ---------------------------------------------------------------------------
# univalency radius

def univalency_radius(spec: ConvolutionSpec, tol: float = 1e-6) -> float:
    """Largest radius below which the scanned dilatation stays under 1.

    Walks a radius ladder with 1440-point circles, bisects the first
    bracketing pair to ``tol``, then re-verifies every ladder circle below
    the answer.  Returns 1.0 when no violation is found up to 0.999.  The
    estimate assumes the violation region grows with the radius; the
    verification pass guards that assumption.
    """
    if tol < 1e-6:
        raise ParameterError("tol must be >= 1e-6")
    K = 1440
    ring = np.exp(2j * math.pi * np.arange(K) / K)

    def circle_max(r):
        Hp, Gp = conv_derivatives(spec, r * ring)
        crit = np.abs(Hp) <= _CRITICAL_TOL
        if np.any(crit):
            return math.inf
        return float(np.max(np.abs(Gp / Hp)))

    ladder = default_grid().radii
    prev = 0.0
    first_bad = None
    for r in ladder:
        if circle_max(r) >= 1:
            first_bad = r
            break
        prev = r
    if first_bad is None:
        return 1.0
    lo, hi = prev, first_bad
    while hi - lo > tol:
        mid = (lo + hi) / 2
        if circle_max(mid) < 1:
            lo = mid
        else:
            hi = mid
    for r in [x for x in ladder if x < lo] + [lo]:
        if r > 0 and circle_max(r) >= 1:
            raise HarmconvError(
                "violation below the bracketing radius; growth assumption failed")
    return lo
