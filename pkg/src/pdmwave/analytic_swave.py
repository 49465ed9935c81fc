r"""Closed-form s-waves for power-law mass ``mu(r) = r**alpha`` in 2D and 3D.

With ``z = z_coefficient * r**r_exponent`` the radial equation becomes the
(modified) Bessel equation of order ``nu`` for ``xi(z) = z**-nu u``.  The
decaying branch ``u = c z**nu K_nu(z)`` is normalisable for every
``|E| > 0``:

* 2D: ``u = sqrt(2|E| (1-nu) S / pi) rho**(nu/(1-nu)) K_nu(z)`` and
  ``W = 2 pi rho u**2``;
* 3D: ``u = sqrt(8|E| (1-nu) S / 3) r**(3 nu/(2(1-nu))) K_nu(z)`` and
  ``W = r**2 u**2``,

where ``S = sin(nu pi)/(nu pi)`` (``S -> 1`` at ``nu = 0``).  The 3D density
therefore carries ``r**((2+nu)/(1-nu))``.  ``exponent="printed"`` swaps in
the alternative 3D exponents ``nu/(2(1-nu))`` and ``(2-nu)/(1-nu)``, kept
so their failure to normalise can be demonstrated.
"""

import math
from dataclasses import dataclass

import numpy as np

from . import specfun
from .errors import DomainError, InadmissibleAlphaError, SearchFailure
from .mass_models import alpha_of, bound_regime
from .quadrature import quadrature
from .search import bisect_root, golden_section_max

__all__ = [
    "SWaveTransform",
    "BoundStateSolution",
    "ScatteringCoefficients",
    "transform",
    "transform_from_nu",
    "bound_state",
    "bound_u",
    "bound_density",
    "density_maximum",
    "normalization_integral",
    "scattering_u",
    "scattering_cumulative",
    "wavefunction_value",
    "radial_R",
]


@dataclass(frozen=True)
class SWaveTransform:
    """Change of variables ``z = z_coefficient * r**r_exponent``."""

    dimension: int
    alpha: float
    nu: float
    abs_energy: float
    z_coefficient: float
    r_exponent: float

    def z(self, r):
        return self.z_coefficient * np.asarray(r, dtype=float) ** self.r_exponent

    def r_of_z(self, z):
        return (np.asarray(z, dtype=float) / self.z_coefficient) ** (1.0 / self.r_exponent)


def transform(dimension, alpha, abs_energy):
    """Bessel-equation variables for ``mu = r**alpha`` at energy ``-|E|``.

    Raises
    ------
    InadmissibleAlphaError
        ``alpha <= -1/2`` in 2D or ``alpha <= 0`` in 3D.
    """
    regime = bound_regime(dimension, alpha)
    if not regime.admissible:
        raise InadmissibleAlphaError(
            f"alpha={alpha} gives no bound s-wave in {dimension}D"
        )
    if not abs_energy > 0:
        raise DomainError(f"|E| must be positive, got {abs_energy}")
    nu = regime.nu
    if abs(nu) < specfun.NU_ZERO:
        nu = 0.0
    return SWaveTransform(
        dimension=dimension,
        alpha=float(alpha),
        nu=nu,
        abs_energy=float(abs_energy),
        z_coefficient=2.0 * math.sqrt(2.0 * abs_energy) / (alpha + 2.0),
        r_exponent=(alpha + 2.0) / 2.0,
    )


def transform_from_nu(dimension, nu, abs_energy):
    """Same as :func:`transform` but parametrised by the Bessel order."""
    if not -1.0 < nu < 1.0:
        raise InadmissibleAlphaError(f"nu={nu} outside (-1, 1)")
    return transform(dimension, alpha_of(dimension, nu), abs_energy)


_LN2 = math.log(2.0)
_EULER = 0.57721566490153286061
# below this z the leading small-argument form of K is exact in double precision
_LOG_Z_SMALL = math.log(1e-200)
# K_nu(z) underflows for larger z
_LOG_Z_UNDERFLOW = math.log(745.0)


def _sinc(nu):
    if abs(nu) < specfun.NU_ZERO:
        return 1.0
    x = math.pi * nu
    return math.sin(x) / x


@dataclass(frozen=True)
class BoundStateSolution:
    """Normalised bound s-wave.

    ``u(r) = norm_constant * r**u_exponent * K_nu(z(r))`` and
    ``W(r) = density_constant * r**density_exponent * K_nu(z(r))**2``.
    """

    transform: SWaveTransform
    norm_constant: float
    u_exponent: float
    density_constant: float
    density_exponent: float

    def _log_k(self, r):
        """``ln K_nu(z(r))`` for ``r > 0`` without under/overflow in ``z``."""
        t = self.transform
        with np.errstate(divide="ignore"):
            logz = math.log(t.z_coefficient) + t.r_exponent * np.log(r)
        out = np.full(r.shape, -np.inf)
        small = logz < _LOG_Z_SMALL
        mid = ~small & (logz < _LOG_Z_UNDERFLOW)
        if mid.any():
            with np.errstate(divide="ignore"):
                out[mid] = np.log(specfun.bessel_k(t.nu, np.exp(logz[mid])))
        if small.any():
            a = abs(t.nu)
            lz = logz[small]
            if a > 0:
                # K_a(z) ~ Gamma(a)/2 (2/z)**a
                out[small] = math.lgamma(a) - _LN2 + a * (_LN2 - lz)
            else:
                out[small] = np.log(_LN2 - lz - _EULER)
        return out

    def u(self, r):
        r = np.asarray(r, dtype=float)
        if np.any(r <= 0):
            raise DomainError("bound_u requires r > 0")
        log_u = self.u_exponent * np.log(r) + self._log_k(r)
        out = self.norm_constant * np.exp(log_u)
        return float(out) if out.ndim == 0 else out

    def density(self, r):
        r = np.asarray(r, dtype=float)
        if np.any(r < 0):
            raise DomainError("bound_density requires r >= 0")
        out = np.zeros(r.shape)
        pos = r > 0
        rp = r[pos]
        log_w = self.density_exponent * np.log(rp) + 2.0 * self._log_k(rp)
        out[pos] = self.density_constant * np.exp(log_w)
        return float(out) if out.ndim == 0 else out

    def R(self, r):
        """Reduced radial function ``R = r**((D-1)/2) u``."""
        return radial_R(self.transform.dimension, self.u(r), r)


def bound_state(t, exponent="derived"):
    """Build the normalised s-wave for transform ``t``.

    ``exponent="printed"`` (3D only) uses ``r**(nu/(2(1-nu)))`` in ``u`` and
    ``r**((2-nu)/(1-nu))`` in ``W``; these are not normalised.
    """
    nu = t.nu
    e = t.abs_energy
    s = _sinc(nu)
    if t.dimension == 2:
        c2 = 2.0 * e * (1.0 - nu) * s / math.pi
        u_exp = nu / (1.0 - nu)
        return BoundStateSolution(t, math.sqrt(c2), u_exp, 2.0 * math.pi * c2, 2.0 * u_exp + 1.0)
    c2 = 8.0 * e * (1.0 - nu) * s / 3.0
    if exponent == "derived":
        u_exp = 3.0 * nu / (2.0 * (1.0 - nu))
    elif exponent == "printed":
        u_exp = nu / (2.0 * (1.0 - nu))
    else:
        raise ValueError(f"exponent must be 'derived' or 'printed', got {exponent!r}")
    return BoundStateSolution(t, math.sqrt(c2), u_exp, c2, 2.0 * u_exp + 2.0)


def bound_u(t, r):
    """Normalised radial wavefunction ``u(r)``."""
    return bound_state(t).u(r)


def bound_density(t, r):
    """Radial probability density ``W(r)``; ``W(0) = 0``."""
    return bound_state(t).density(r)


def wavefunction_value(t, r):
    """``u(r)``, the radial factor of the full wavefunction."""
    return bound_u(t, r)


def radial_R(dimension, u, r):
    """``R = r**((D-1)/2) u``."""
    r = np.asarray(r, dtype=float)
    if np.any(r <= 0):
        raise DomainError("r must be positive")
    out = np.asarray(u, dtype=float) * r ** ((dimension - 1) / 2.0)
    return float(out) if out.ndim == 0 else out


def normalization_integral(solution, tol=1e-10):
    """``int_0^inf W(r) dr`` by adaptive quadrature.

    Breakpoints around the density peak keep very narrow peaks (``nu`` near
    1 in 3D) from slipping between the initial nodes.
    """
    try:
        r_peak, _ = density_maximum(solution.transform, solution)
    except SearchFailure:
        points = None
    else:
        points = [r_peak * f for f in (0.5, 0.9, 0.99, 0.999, 1.0, 1.001, 1.01, 1.1, 2.0)]
    return quadrature(solution.density, 0.0, math.inf, tol=tol, points=points)


def _outer_radius(solution, w_ref):
    """Radius beyond the maximum where ``W < 1e-12 * w_ref``."""
    r = 1.0
    while solution.density(r) >= 1e-12 * w_ref or r < 1.0:
        r *= 2.0
        if r > 1e8:
            raise SearchFailure("density does not decay")
    return r


def density_maximum(t, solution=None):
    """Location and value of the interior maximum of ``W``.

    Golden-section search on ``[1e-8, R]`` brackets the peak; the location is
    then refined to ~1e-13 relative by bisecting ``d ln W / dr``, which is
    available in closed form.

    Raises
    ------
    SearchFailure
        If ``W`` sampled on a log grid over the bracket is not unimodal.
    """
    sol = solution or bound_state(t)
    eps = 1e-8
    grid = np.geomspace(eps, 1e3, 400)
    w = sol.density(grid)
    R = _outer_radius(sol, float(w.max()))
    grid = np.geomspace(eps, R, 400)
    w = sol.density(grid)
    interior = (w[1:-1] > w[:-2]) & (w[1:-1] >= w[2:])
    if interior.sum() != 1:
        raise SearchFailure(f"W has {int(interior.sum())} sampled maxima on [{eps}, {R}]")
    i = int(np.argmax(w))
    lo, hi = grid[max(i - 1, 0)], grid[min(i + 1, len(grid) - 1)]
    a, b, best = golden_section_max(lambda x: sol.density(x), lo, hi, rel_tol=1e-9)

    nu = t.nu
    s = t.r_exponent
    q = sol.density_exponent

    def dlogw(r):
        z = float(t.z(r))
        ratio = specfun.bessel_k_derivative(nu, z) / specfun.bessel_k(nu, z)
        return q + 2.0 * s * z * ratio

    span = max(b - a, 1e-6 * best)
    root = bisect_root(dlogw, max(best - 4 * span, 0.5 * best), best + 4 * span)
    r_max = root if root is not None else best
    return r_max, float(sol.density(r_max))


@dataclass(frozen=True)
class ScatteringCoefficients:
    """Coefficients of ``J_nu`` and ``Y_nu`` in a positive-energy s-wave."""

    c_j: float
    c_y: float

    def __post_init__(self):
        if self.c_j == 0 and self.c_y == 0:
            raise ValueError("scattering coefficients must not both vanish")


def scattering_u(t, coeffs, r):
    """Unnormalised positive-energy s-wave ``z**nu (C J_nu + D Y_nu)``.

    ``t`` is built from ``|E|`` exactly as for the bound state.
    """
    r = np.asarray(r, dtype=float)
    if np.any(r <= 0):
        raise DomainError("scattering_u requires r > 0")
    z = t.z(r)
    xi = 0.0
    if coeffs.c_j:
        xi = xi + coeffs.c_j * specfun.bessel_j(t.nu, z)
    if coeffs.c_y:
        xi = xi + coeffs.c_y * specfun.bessel_y(t.nu, z)
    out = z**t.nu * xi
    return float(out) if np.ndim(out) == 0 else out


def scattering_cumulative(t, coeffs, R, tol=1e-8):
    """``int_0^R 2 pi rho u**2 d rho`` (2D) or ``int_0^R r**2 u**2 dr`` (3D).

    Evaluated in the ``z`` variable, where the integrand is a smooth
    oscillation of slowly varying amplitude.
    """
    d = t.dimension
    weight = 2.0 * math.pi if d == 2 else 1.0
    s = t.r_exponent

    def f(z):
        r = t.r_of_z(z)
        u = scattering_u(t, coeffs, r)
        # dr = r / (s z) dz
        return weight * r ** (d - 1) * u * u * r / (s * z)

    z_end = float(t.z(R))
    # split at multiples of pi so each piece holds about one oscillation
    edges = np.concatenate([[0.0], np.arange(math.pi, z_end, math.pi), [z_end]])
    return math.fsum(quadrature(f, lo, hi, tol=tol / len(edges)) for lo, hi in zip(edges[:-1], edges[1:]))
