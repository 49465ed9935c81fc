"""Quantum effective potential (QEP) and centrifugal term of the radial equation.

For mass ``mu(r)`` in ``D`` dimensions::

    V_qep  = -(mu'/mu**2) (D-1)/(4 r) + (D-1)(D-3)/(8 mu r**2)
    V_cent = l (l+D-2) / (2 mu r**2)
"""

from dataclasses import dataclass, field

import numpy as np

from .errors import DomainError

__all__ = [
    "PotentialSample",
    "QepClassification",
    "qep",
    "centrifugal",
    "sample",
    "classify_qep",
    "ZERO_TOL",
]

#: |V_qep| below this, relative to the term sizes (floor 1), counts as zero
ZERO_TOL = 1e-14


@dataclass(frozen=True)
class PotentialSample:
    r: float
    v_qep: float
    v_centrifugal: float


@dataclass(frozen=True)
class QepClassification:
    """``verdict`` is one of ``"Zero"``, ``"Attractive"``, ``"Repulsive"``,
    ``"Mixed"``."""

    verdict: str
    sign_change_radii: list = field(default_factory=list)


def _check(D, r):
    if D < 1 or int(D) != D:
        raise DomainError(f"dimension must be a positive integer, got {D}")
    if np.any(np.asarray(r) <= 0):
        raise DomainError("radius must be positive")


def _qep_terms(D, profile, r):
    _check(D, r)
    mu, dmu = profile(r)
    r = np.asarray(r, dtype=float)
    return -(dmu / mu**2) * (D - 1) / (4.0 * r), (D - 1) * (D - 3) / (8.0 * mu * r**2)


def qep(D, profile, r):
    """Quantum effective potential at ``r`` (scalar or array)."""
    gradient, reduction = _qep_terms(D, profile, r)
    out = gradient + reduction
    return float(out) if np.ndim(out) == 0 else out


def centrifugal(D, l, profile, r):
    """Centrifugal potential ``l(l+D-2)/(2 mu r^2)``; zero for s-waves."""
    _check(D, r)
    if l < 0:
        raise DomainError(f"angular quantum number must be >= 0, got {l}")
    mu, _ = profile(r)
    return l * (l + D - 2) / (2.0 * mu * np.asarray(r, dtype=float) ** 2)


def sample(D, l, profile, r):
    """Both potential terms on an array of radii, as a list of samples."""
    r = np.atleast_1d(np.asarray(r, dtype=float))
    vq = np.atleast_1d(qep(D, profile, r))
    vc = np.atleast_1d(centrifugal(D, l, profile, r))
    return [PotentialSample(float(a), float(b), float(c)) for a, b, c in zip(r, vq, vc)]


def _bisect_sign_change(f, a, b, tol=1e-8):
    fa = f(a)
    while b - a > tol:
        m = 0.5 * (a + b)
        fm = f(m)
        if fm == 0.0:
            return m
        if (fm < 0) == (fa < 0):
            a, fa = m, fm
        else:
            b = m
    return 0.5 * (a + b)


def classify_qep(D, profile, r_min, r_max, samples=64):
    """Classify the sign of the QEP on a geometric grid over ``[r_min, r_max]``.

    Sign changes between neighbouring samples are located by bisection to
    ``1e-8`` absolute.
    """
    if not 0 < r_min < r_max:
        raise DomainError("need 0 < r_min < r_max")
    if samples < 16:
        raise DomainError("at least 16 samples are required")
    r = np.geomspace(r_min, r_max, samples)
    gradient, reduction = _qep_terms(D, profile, r)
    v = gradient + reduction
    # exact cancellations leave rounding noise proportional to the terms
    zero = np.abs(v) <= ZERO_TOL * np.maximum(1.0, np.abs(gradient) + np.abs(reduction))
    v = np.where(zero, 0.0, v)
    if np.all(zero):
        return QepClassification("Zero")
    if np.all(v < 0):
        return QepClassification("Attractive")
    if np.all(v > 0):
        return QepClassification("Repulsive")

    def f(x):
        return float(qep(D, profile, x))

    roots = []
    for i in range(samples - 1):
        if v[i] == 0.0:
            roots.append(float(r[i]))
        elif v[i] * v[i + 1] < 0:
            roots.append(float(_bisect_sign_change(f, r[i], r[i + 1])))
    return QepClassification("Mixed", roots)
