"""Direct numerical integration of the D-dimensional radial equation.

The reduced function ``R = r**((D-1)/2) u`` satisfies::

    R'' = (mu'/mu) R' + 2 mu (V_cent + V_qep - E) R

which is integrated with an adaptive Dormand-Prince pair.  Bound states
(``E < 0``) are integrated inward from ``r_end``, seeded on the decaying
branch, so the growing branch is suppressed rather than amplified.  Positive
energies are integrated outward from ``r_start`` with the regular Frobenius
seed.

Nothing here uses the closed-form solutions, so this module serves as an
independent check on them.
"""

import math
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .errors import DomainError, EmptyOverlapError, SeedFailure
from .mass_models import Constant, MassProfile, PowerLaw
from .ode import dopri5
from .quadrature import quadrature

__all__ = [
    "RadialProblem",
    "SolverConfig",
    "NumericSolution",
    "integrate_radial",
    "default_r_end",
    "ode_residual",
    "quadrature",
    "wavefunction_radial_part",
    "compare_to_analytic",
]


@dataclass(frozen=True)
class RadialProblem:
    dimension: int
    l: int
    energy: float
    profile: MassProfile

    def __post_init__(self):
        if self.dimension < 1:
            raise DomainError(f"dimension must be >= 1, got {self.dimension}")
        if self.l < 0:
            raise DomainError(f"l must be >= 0, got {self.l}")

    @property
    def angular(self):
        """Eigenvalue ``l(l+D-2)`` of the squared angular momentum."""
        return self.l * (self.l + self.dimension - 2)


@dataclass(frozen=True)
class SolverConfig:
    """``r_end=None`` picks :func:`default_r_end`."""

    r_start: float = 1e-3
    r_end: Optional[float] = None
    rel_tol: float = 1e-10
    abs_tol: float = 1e-12
    max_steps: int = 10**6
    quad_tol: float = 1e-8

    def __post_init__(self):
        if not self.r_start > 0:
            raise DomainError("r_start must be positive")
        if self.r_end is not None and not self.r_end > self.r_start:
            raise DomainError("r_end must exceed r_start")
        if min(self.rel_tol, self.abs_tol, self.quad_tol) <= 0:
            raise DomainError("tolerances must be positive")


@dataclass(frozen=True)
class NumericSolution:
    grid: np.ndarray
    R_values: np.ndarray
    u_values: np.ndarray
    problem: RadialProblem
    config: SolverConfig
    seeding: str = ""
    meta: dict = field(default_factory=dict)


def wavefunction_radial_part(D, R, r):
    """``u = r**(-(D-1)/2) R``."""
    r = np.asarray(r, dtype=float)
    if np.any(r <= 0):
        raise DomainError("r must be positive")
    out = np.asarray(R, dtype=float) * r ** (-(D - 1) / 2.0)
    return float(out) if out.ndim == 0 else out


def _power_law_params(problem):
    """``(alpha, k)`` with ``2 mu |E| = k**2 r**alpha``, or ``None``."""
    p = problem.profile
    if isinstance(p, PowerLaw):
        return p.alpha, math.sqrt(2.0 * abs(problem.energy))
    if isinstance(p, Constant):
        return 0.0, math.sqrt(2.0 * p.mu0 * abs(problem.energy))
    return None


def _bessel_params(problem):
    """Order and power for the Bessel form of a power-law radial equation.

    ``u = r**p Z_nu(z)`` with ``z = (k/s) r**s``, ``s = (alpha+2)/2``.
    """
    alpha, k = _power_law_params(problem)
    D = problem.dimension
    s = (alpha + 2.0) / 2.0
    p = (2.0 - D + alpha) / 2.0
    nu = math.sqrt(p * p + problem.angular) / s
    return alpha, k, s, p, nu


def default_r_end(problem, z_target=30.0):
    """Smallest ``r`` at which the decaying solution is suppressed by
    ``exp(-z_target)``."""
    if problem.energy >= 0:
        raise DomainError("default_r_end applies to bound (E < 0) problems")
    if _power_law_params(problem) is not None:
        alpha, k, s, _, _ = _bessel_params(problem)
        if s <= 0:
            raise DomainError("power-law exponent must exceed -2")
        return (z_target * s / k) ** (1.0 / s)
    # WKB phase integral of sqrt(2 mu |E|)
    mu_e = 2.0 * abs(problem.energy)
    r, phase, h = max(problem.profile.domain_min, 0.0) + 1e-3, 0.0, 1e-2
    while phase < z_target:
        mu, _ = problem.profile(r + 0.5 * h)
        phase += math.sqrt(mu_e * mu) * h
        r += h
        h = min(h * 1.05, 0.1)
        if r > 1e6:
            raise SeedFailure("WKB phase does not reach the target; set r_end")
    return r


def _asymptotic_k_log(nu, z):
    """``(ln K_nu(z), d ln K_nu / dz)`` from the large-z expansion."""
    mu4 = 4.0 * nu * nu
    s, ds = 1.0, 0.0
    t = 1.0
    for k in range(1, 30):
        t_new = t * (mu4 - (2 * k - 1) ** 2) / (k * 8.0 * z)
        if abs(t_new) > abs(t):
            break
        t = t_new
        s += t
        ds += -k * t / z
        if abs(t) < 1e-17:
            break
    log_k = 0.5 * math.log(math.pi / (2.0 * z)) - z + math.log(s)
    dlog = -1.0 - 0.5 / z + ds / s
    return log_k, dlog


def _decaying_seed(problem, r):
    """``(R, R')`` on the decaying branch at ``r`` and a description."""
    D = problem.dimension
    half = (D - 1) / 2.0
    if _power_law_params(problem) is not None:
        alpha, k, s, p, nu = _bessel_params(problem)
        z = k / s * r**s
        log_k, dlog_k = _asymptotic_k_log(nu, z)
        log_u = p * math.log(r) + log_k
        dlog_u = p / r + dlog_k * s * z / r
        how = f"inward, asymptotic K_{nu:.6g}(z) seed at z={z:.6g}"
    else:
        mu, _ = problem.profile(r)
        kappa = math.sqrt(2.0 * mu * abs(problem.energy))
        # seed magnitude only sets the overall scale
        log_u = -kappa * r
        dlog_u = -kappa
        how = f"inward, WKB seed exp(-kappa r) with kappa={kappa:.6g}"
    log_R = log_u + half * math.log(r)
    if log_R < math.log(1e-290):
        raise SeedFailure(f"seed magnitude exp({log_R:.4g}) underflows; reduce r_end")
    dlog_R = dlog_u + half / r
    R = math.exp(log_R)
    return R, R * dlog_R, how


def _regular_seed(problem, r):
    """Leading Frobenius term ``u = r**s`` with the larger indicial root."""
    D = problem.dimension
    mu, dmu = problem.profile(r)
    a = (D - 1) - r * dmu / mu
    s = 0.5 * ((1.0 - a) + math.sqrt((1.0 - a) ** 2 + 4.0 * problem.angular))
    u = r**s
    du = s * r ** (s - 1.0)
    half = (D - 1) / 2.0
    R = u * r**half
    dR = du * r**half + half * u * r ** (half - 1.0)
    return R, dR, f"outward, regular Frobenius seed r^{s:.6g}"


def _rhs(problem):
    D = problem.dimension
    L = problem.angular
    E = problem.energy
    qep_const = (D - 1) * (D - 3) / 4.0
    if isinstance(problem.profile, (PowerLaw, Constant)):
        if isinstance(problem.profile, PowerLaw):
            alpha, m0 = problem.profile.alpha, 1.0
        else:
            alpha, m0 = 0.0, problem.profile.mu0
        c2 = L - alpha * (D - 1) / 2.0 + qep_const

        def f(r, y):
            R, dR = y
            return (dR, alpha / r * dR + (c2 / (r * r) - 2.0 * E * m0 * r**alpha) * R)

        return f
    prof = problem.profile

    def f(r, y):
        R, dR = y
        mu, dmu = prof(r)
        ratio = dmu / mu
        # 2 mu (V_cent + V_qep - E)
        pot = (L + qep_const) / (r * r) - ratio * (D - 1) / (2.0 * r) - 2.0 * mu * E
        return (dR, ratio * dR + pot * R)

    return f


def integrate_radial(problem, config=None):
    """Integrate the radial equation for ``problem``.

    Raises
    ------
    StepLimitExceeded, StiffnessError
        From the integrator.
    SeedFailure
        The decaying seed underflows at ``r_end``.
    """
    config = config or SolverConfig()
    r_end = config.r_end
    if r_end is None:
        r_end = max(default_r_end(problem), 2.0 * config.r_start)
    if config.r_start <= problem.profile.domain_min:
        raise DomainError("r_start must exceed the profile's domain_min")
    f = _rhs(problem)
    if problem.energy < 0:
        R0, dR0, how = _decaying_seed(problem, r_end)
        t0, t1 = r_end, config.r_start
    else:
        R0, dR0, how = _regular_seed(problem, config.r_start)
        t0, t1 = config.r_start, r_end
    # integrate the seed-normalised solution so rel_tol governs throughout
    ts, ys = dopri5(
        f, t0, [1.0, dR0 / R0], t1,
        rtol=config.rel_tol, atol=config.abs_tol, max_steps=config.max_steps,
    )
    grid = np.asarray(ts)
    R = np.asarray([y[0] for y in ys]) * R0
    if grid[0] > grid[-1]:
        grid, R = grid[::-1], R[::-1]
    u = wavefunction_radial_part(problem.dimension, R, grid)
    return NumericSolution(
        grid=grid,
        R_values=R,
        u_values=u,
        problem=problem,
        config=SolverConfig(
            r_start=config.r_start, r_end=r_end, rel_tol=config.rel_tol,
            abs_tol=config.abs_tol, max_steps=config.max_steps, quad_tol=config.quad_tol,
        ),
        seeding=how,
        meta={"steps": len(ts) - 1},
    )


def _derivatives(fn, r, h):
    """Five-point central first and second derivatives."""
    fm2, fm1, f0, fp1, fp2 = (float(fn(r + k * h)) for k in (-2, -1, 0, 1, 2))
    d1 = (fm2 - 8.0 * fm1 + 8.0 * fp1 - fp2) / (12.0 * h)
    d2 = (-fm2 + 16.0 * fm1 - 30.0 * f0 + 16.0 * fp1 - fp2) / (12.0 * h * h)
    return f0, d1, d2


def ode_residual(evaluator, problem, r, h=1e-4, form=None):
    """Normalised residual of the radial equation for a trial ``u(r)``.

    ``form="u"`` (default for D = 2, 3) checks
    ``u'' + ((D-1)/r - mu'/mu) u' + (2 mu E - l(l+D-2)/r**2) u = 0``;
    ``form="R"`` (default otherwise) applies the reduced equation to
    ``R = r**((D-1)/2) u``.  The absolute residual is divided by the largest
    of the individual terms.
    """
    D = problem.dimension
    if r - 2 * h <= problem.profile.domain_min:
        raise DomainError("finite-difference stencil leaves the domain")
    if form is None:
        form = "u" if D in (2, 3) else "R"
    mu, dmu = problem.profile(r)
    L = problem.angular
    E = problem.energy
    if form == "u":
        f0, d1, d2 = _derivatives(evaluator, r, h)
        terms = (d2, ((D - 1) / r - dmu / mu) * d1, (2.0 * mu * E - L / r**2) * f0)
    elif form == "R":
        half = (D - 1) / 2.0
        f0, d1, d2 = _derivatives(lambda x: x**half * evaluator(x), r, h)
        pot = (L + (D - 1) * (D - 3) / 4.0) / r**2 - dmu / mu * (D - 1) / (2.0 * r)
        terms = (d2, -dmu / mu * d1, -(pot - 2.0 * mu * E) * f0)
    else:
        raise ValueError(f"form must be 'u' or 'R', got {form!r}")
    scale = max(abs(t) for t in terms)
    if scale == 0.0:
        return 0.0
    return abs(math.fsum(terms)) / scale


def compare_to_analytic(numeric, analytic, r_lo, r_hi):
    """Least-squares scale between numeric ``u`` and ``analytic(r)``.

    Returns ``(scale, max_rel_err)`` where the error is
    ``max |u_num - scale*u_an| / |u_num|`` over grid points in
    ``[r_lo, r_hi]``.
    """
    mask = (numeric.grid >= r_lo) & (numeric.grid <= r_hi)
    if not mask.any():
        raise EmptyOverlapError(f"no grid points in [{r_lo}, {r_hi}]")
    r = numeric.grid[mask]
    un = numeric.u_values[mask]
    ua = np.asarray(analytic(r), dtype=float)
    scale = float(np.dot(un, ua) / np.dot(ua, ua))
    err = float(np.max(np.abs(un - scale * ua) / np.abs(un)))
    return scale, err
