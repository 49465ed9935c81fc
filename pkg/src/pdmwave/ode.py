"""Dormand-Prince 5(4) integrator with PI step-size control.

Works on plain lists of floats; the radial problems here are two-dimensional
systems for which numpy's per-call overhead dominates.
"""

import math

from .errors import StepLimitExceeded, StiffnessError

__all__ = ["dopri5"]

_C = (0.0, 1 / 5, 3 / 10, 4 / 5, 8 / 9, 1.0, 1.0)
_A = (
    (),
    (1 / 5,),
    (3 / 40, 9 / 40),
    (44 / 45, -56 / 15, 32 / 9),
    (19372 / 6561, -25360 / 2187, 64448 / 6561, -212 / 729),
    (9017 / 3168, -355 / 33, 46732 / 5247, 49 / 176, -5103 / 18656),
    (35 / 384, 0.0, 500 / 1113, 125 / 192, -2187 / 6784, 11 / 84),
)
_B5 = _A[6] + (0.0,)
_B4 = (5179 / 57600, 0.0, 7571 / 16695, 393 / 640, -92097 / 339200, 187 / 2100, 1 / 40)
_E = tuple(b5 - b4 for b5, b4 in zip(_B5, _B4))

_SAFETY = 0.9
_ALPHA = 0.17  # 1/5 - 0.75*beta
_BETA = 0.04
_MIN_FACTOR = 0.2
_MAX_FACTOR = 10.0


def _initial_step(f, t0, y0, f0, direction, rtol, atol):
    sc = [atol + rtol * abs(v) for v in y0]
    d0 = math.sqrt(sum((v / s) ** 2 for v, s in zip(y0, sc)) / len(y0))
    d1 = math.sqrt(sum((v / s) ** 2 for v, s in zip(f0, sc)) / len(y0))
    h0 = 1e-6 if d0 < 1e-5 or d1 < 1e-5 else 0.01 * d0 / d1
    y1 = [v + direction * h0 * dv for v, dv in zip(y0, f0)]
    f1 = f(t0 + direction * h0, y1)
    d2 = math.sqrt(sum(((a - b) / s) ** 2 for a, b, s in zip(f1, f0, sc)) / len(y0)) / h0
    if max(d1, d2) <= 1e-15:
        h1 = max(1e-6, h0 * 1e-3)
    else:
        h1 = (0.01 / max(d1, d2)) ** 0.2
    return min(100 * h0, h1)


def dopri5(f, t0, y0, t_end, rtol=1e-10, atol=1e-12, max_steps=10**6):
    """Integrate ``y' = f(t, y)`` from ``t0`` to ``t_end`` (either direction).

    Returns ``(ts, ys)``: the accepted step points, starting at ``t0`` and
    ending exactly at ``t_end``, and the state at each.

    Raises
    ------
    StepLimitExceeded
        More than ``max_steps`` accepted plus rejected steps.
    StiffnessError
        Step size below ``1e-14 * |t|``.
    """
    direction = 1.0 if t_end > t0 else -1.0
    n = len(y0)
    t = float(t0)
    y = [float(v) for v in y0]
    k1 = list(f(t, y))
    h = _initial_step(f, t, y, k1, direction, rtol, atol)
    ts = [t]
    ys = [list(y)]
    err_prev = 1e-4
    steps = 0
    while direction * (t_end - t) > 0:
        steps += 1
        if steps > max_steps:
            raise StepLimitExceeded(f"exceeded {max_steps} steps at t={t:g}")
        if h < 1e-14 * max(abs(t), 1e-300):
            raise StiffnessError(f"step size {h:.3g} collapsed at t={t:g}")
        last = False
        if h >= direction * (t_end - t):
            h = direction * (t_end - t)
            last = True
        hs = direction * h
        ks = [k1]
        for i in range(1, 7):
            a = _A[i]
            yi = [
                y[j] + hs * sum(a[m] * ks[m][j] for m in range(i)) for j in range(n)
            ]
            ks.append(list(f(t + _C[i] * hs, yi)))
        # stage 7 was evaluated at y5 (FSAL)
        y_new = yi
        err = 0.0
        for j in range(n):
            e = hs * sum(_E[m] * ks[m][j] for m in range(7))
            sc = atol + rtol * max(abs(y[j]), abs(y_new[j]))
            err += (e / sc) ** 2
        err = math.sqrt(err / n)
        if err <= 1.0:
            t = t_end if last else t + hs
            y = y_new
            k1 = ks[6]
            ts.append(t)
            ys.append(list(y))
            if err == 0.0:
                factor = _MAX_FACTOR
            else:
                factor = _SAFETY * err**-_ALPHA * err_prev**_BETA
                factor = min(_MAX_FACTOR, max(_MIN_FACTOR, factor))
            err_prev = max(err, 1e-4)
            h *= factor
        else:
            h *= max(_MIN_FACTOR, _SAFETY * err**-_ALPHA)
    return ts, ys
