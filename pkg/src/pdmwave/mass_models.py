"""Position-dependent mass profiles in units where m0 = hbar = 1."""

from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from .errors import DomainError, NonPositiveMassError, UnsupportedDimensionError

__all__ = [
    "MassProfile",
    "PowerLaw",
    "Constant",
    "Custom",
    "BoundRegime",
    "evaluate",
    "bound_regime",
    "alpha_of",
    "parse_mass_spec",
]


class MassProfile:
    """Base class: a positive mass function ``mu(r)`` with derivative.

    Subclasses implement :meth:`_values`; :meth:`__call__` adds domain and
    positivity checks.
    """

    domain_min = 0.0

    def _values(self, r):
        raise NotImplementedError

    def __call__(self, r):
        r_arr = np.asarray(r, dtype=float)
        if np.any(r_arr <= self.domain_min):
            raise DomainError(
                f"mass profile evaluated at r <= domain_min={self.domain_min}"
            )
        mu, dmu = self._values(r_arr)
        mu = np.asarray(mu, dtype=float)
        if np.any(mu <= 0):
            raise NonPositiveMassError("mass profile is not positive")
        dmu = np.broadcast_to(np.asarray(dmu, dtype=float), mu.shape)
        if r_arr.ndim == 0:
            return float(mu), float(dmu)
        return mu, np.array(dmu)


@dataclass(frozen=True)
class PowerLaw(MassProfile):
    """``mu(r) = r**alpha``; multiplicative constants live in m0."""

    alpha: float
    domain_min: float = 0.0

    def _values(self, r):
        a = self.alpha
        return r**a, a * r ** (a - 1.0)


@dataclass(frozen=True)
class Constant(MassProfile):
    mu0: float = 1.0
    domain_min: float = 0.0

    def __post_init__(self):
        if not self.mu0 > 0:
            raise NonPositiveMassError(f"constant mass must be positive, got {self.mu0}")

    def _values(self, r):
        return np.full_like(r, self.mu0), np.zeros_like(r)


@dataclass(frozen=True)
class Custom(MassProfile):
    """User-supplied ``mu(r)``.

    ``func`` returns either ``mu`` or a ``(mu, dmu)`` pair; without
    ``derivative`` and a pair, ``dmu`` comes from a central difference with
    ``h = 1e-6 * max(r, 1)``.  ``func`` must be pure.
    """

    func: Callable
    derivative: Optional[Callable] = None
    domain_min: float = 0.0

    def _values(self, r):
        out = self.func(r)
        if isinstance(out, tuple):
            return out
        if self.derivative is not None:
            return out, self.derivative(r)
        h = 1e-6 * np.maximum(r, 1.0)
        lo = np.maximum(r - h, self.domain_min + 0.5 * (r - self.domain_min))
        hi = r + h
        dmu = (np.asarray(self.func(hi)) - np.asarray(self.func(lo))) / (hi - lo)
        return out, dmu


def evaluate(profile, r):
    """Return ``(mu(r), mu'(r))``."""
    return profile(r)


@dataclass(frozen=True)
class BoundRegime:
    """Order of the Bessel reduction for ``mu = r**alpha`` and whether a
    normalisable s-wave exists."""

    dimension: int
    alpha: float
    nu: float
    admissible: bool


def bound_regime(dimension, alpha):
    """Bessel order and admissibility for power-law mass in 2D or 3D.

    2D: ``nu = alpha/(alpha+2)``, admissible iff ``alpha > -1/2``.
    3D: ``nu = (alpha-1)/(alpha+2)``, admissible iff ``alpha > 0``.
    """
    alpha = float(alpha)
    if dimension == 2:
        return BoundRegime(2, alpha, alpha / (alpha + 2.0), alpha > -0.5)
    if dimension == 3:
        return BoundRegime(3, alpha, (alpha - 1.0) / (alpha + 2.0), alpha > 0.0)
    raise UnsupportedDimensionError(
        f"closed-form s-waves exist only for dimension 2 or 3, got {dimension}"
    )


def alpha_of(dimension, nu):
    """Inverse of :func:`bound_regime`: the exponent giving order ``nu``."""
    nu = float(nu)
    if dimension == 2:
        return 2.0 * nu / (1.0 - nu)
    if dimension == 3:
        return (1.0 + 2.0 * nu) / (1.0 - nu)
    raise UnsupportedDimensionError(
        f"closed-form s-waves exist only for dimension 2 or 3, got {dimension}"
    )


def parse_mass_spec(spec):
    """Parse ``power:ALPHA`` or ``const:MU0``.

    >>> parse_mass_spec("power:1.5")
    PowerLaw(alpha=1.5, domain_min=0.0)
    """
    kind, sep, value = spec.partition(":")
    if not sep:
        raise ValueError(f"mass spec must look like KIND:VALUE, got {spec!r}")
    try:
        x = float(value)
    except ValueError:
        raise ValueError(f"bad number in mass spec {spec!r}") from None
    if kind == "power":
        return PowerLaw(x)
    if kind == "const":
        return Constant(x)
    raise ValueError(f"unknown mass kind {kind!r}; expected 'power' or 'const'")
