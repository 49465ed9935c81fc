"""Golden-section maximisation and bisection."""

import math

__all__ = ["golden_section_max", "bisect_root"]

_INVPHI = (math.sqrt(5.0) - 1.0) / 2.0


def golden_section_max(f, a, b, rel_tol=1e-10, max_iter=500):
    """Maximise a unimodal ``f`` on ``[a, b]``.

    Returns the final bracket ``(a, b)`` and the best point found.  Because
    ``f`` is flat at its maximum, function values alone cannot shrink the
    bracket much below ``sqrt(eps)`` relative; callers needing more refine
    with a derivative root.
    """
    c = b - _INVPHI * (b - a)
    d = a + _INVPHI * (b - a)
    fc, fd = f(c), f(d)
    for _ in range(max_iter):
        if b - a <= rel_tol * abs(0.5 * (a + b)):
            break
        if fc > fd:
            b, d, fd = d, c, fc
            c = b - _INVPHI * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + _INVPHI * (b - a)
            fd = f(d)
        if fc == fd and c == d:
            break
    best = c if fc > fd else d
    return a, b, best


def bisect_root(g, a, b, rel_tol=1e-14, max_iter=200):
    """Root of ``g`` in ``[a, b]`` given a sign change; ``None`` otherwise."""
    ga, gb = g(a), g(b)
    if ga == 0.0:
        return a
    if gb == 0.0:
        return b
    if (ga < 0) == (gb < 0):
        return None
    for _ in range(max_iter):
        m = 0.5 * (a + b)
        gm = g(m)
        if gm == 0.0 or b - a <= rel_tol * abs(m):
            return m
        if (gm < 0) == (ga < 0):
            a, ga = m, gm
        else:
            b = m
    return 0.5 * (a + b)
