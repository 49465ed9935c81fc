"""Globally adaptive Gauss-Kronrod (7, 15) quadrature.

Semi-infinite ranges ``[a, inf)`` are mapped onto ``[0, 1)`` with
``x = a + t/(1 - t)``.  The integrand must accept numpy arrays.
"""

import heapq
import math

import numpy as np

from .errors import ToleranceNotReached

__all__ = ["quadrature", "QuadResult"]

_XGK = np.array([
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144845693013,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
])
_WGK = np.array([
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
])
_WG = np.array([
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
])

# full symmetric node set on [-1, 1]
_NODES = np.concatenate([-_XGK[:-1], _XGK[::-1]])
_WK = np.concatenate([_WGK[:-1], _WGK[::-1]])
_WG_FULL = np.zeros(15)
_WG_FULL[1:7:2] = _WG[:3]
_WG_FULL[7] = _WG[3]
_WG_FULL[9:15:2] = _WG[:3][::-1]


class QuadResult(float):
    """A float carrying ``error`` and ``intervals`` attributes."""

    def __new__(cls, value, error, intervals):
        obj = super().__new__(cls, value)
        obj.error = error
        obj.intervals = intervals
        return obj


def _gk15(g, lo, hi):
    half = 0.5 * (hi - lo)
    x = 0.5 * (hi + lo) + half * _NODES
    y = np.asarray(g(x), dtype=float)
    k = half * np.dot(_WK, y)
    gs = half * np.dot(_WG_FULL, y)
    return k, abs(k - gs)


def quadrature(f, a, b, tol=1e-10, rel_tol=0.0, max_intervals=5000, points=None):
    """Integrate ``f`` over ``[a, b]``; ``b`` may be ``math.inf``.

    ``points`` are interior breakpoints (e.g. a narrow peak) that seed the
    initial subdivision.

    Bisects the interval with the largest Kronrod-minus-Gauss estimate until
    the summed estimate is at most ``max(tol, rel_tol*|I|)``.

    Returns
    -------
    QuadResult
        The integral, with ``.error`` (estimated absolute error).

    Raises
    ------
    ToleranceNotReached
        When ``max_intervals`` subintervals do not reach the tolerance.
    """
    a = float(a)
    b = float(b)
    if b == math.inf:
        def g(t):
            s = 1.0 - t
            return f(a + t / s) / (s * s)

        lo, hi = 0.0, 1.0
    else:
        g, lo, hi = f, a, b

    edges = [lo, hi]
    if points:
        inner = sorted(float(p) for p in points if a < p < b)
        if b == math.inf:
            inner = [(p - a) / (1.0 + p - a) for p in inner]
        edges = [lo] + inner + [hi]
    heap = []
    for x0, x1 in zip(edges[:-1], edges[1:]):
        v, e = _gk15(g, x0, x1)
        heap.append((-e, x0, x1, v))
    heapq.heapify(heap)
    total = math.fsum(item[3] for item in heap)
    total_err = math.fsum(-item[0] for item in heap)
    while total_err > max(tol, rel_tol * abs(total)):
        if len(heap) >= max_intervals:
            raise ToleranceNotReached(
                f"estimated error {total_err:.3g} after {len(heap)} intervals"
            )
        neg_err, x0, x1, v = heapq.heappop(heap)
        mid = 0.5 * (x0 + x1)
        if not x0 < mid < x1:
            raise ToleranceNotReached("interval width reached machine precision")
        v1, e1 = _gk15(g, x0, mid)
        v2, e2 = _gk15(g, mid, x1)
        heapq.heappush(heap, (-e1, x0, mid, v1))
        heapq.heappush(heap, (-e2, mid, x1, v2))
        total += v1 + v2 - v
        total_err += e1 + e2 + neg_err
        if total_err <= max(tol, rel_tol * abs(total)):
            # confirm with a drift-free sum before stopping
            total = math.fsum(item[3] for item in heap)
            total_err = math.fsum(-item[0] for item in heap)
    total = math.fsum(item[3] for item in heap)
    return QuadResult(total, total_err, len(heap))
