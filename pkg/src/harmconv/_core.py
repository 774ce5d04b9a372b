"""Small shared helpers: scalar/array plumbing and angle normalization."""
import math

import numpy as np

# evaluators refuse points closer than this to a singularity
SINGULARITY_GUARD = 1e-9


def prepare(z):
    """Coerce to a complex array; report whether the input was scalar."""
    arr = np.asarray(z, dtype=complex)
    return arr, arr.ndim == 0


def finish(arr, scalar):
    return complex(arr[()]) if scalar else arr


def norm_theta(theta):
    """Reduce an angle to (-pi, pi]."""
    t = math.remainder(float(theta), 2 * math.pi)
    if t <= -math.pi:
        t = math.pi
    return t


def theta_is_pi(theta, tol=1e-12):
    return abs(abs(norm_theta(theta)) - math.pi) < tol
