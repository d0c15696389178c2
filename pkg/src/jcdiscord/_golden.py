"""Golden-section line search on a scalar function."""

from __future__ import annotations

import math

_INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0


def golden_min(f, lo: float, hi: float, tol: float = 1e-7) -> tuple[float, float]:
    """Minimise ``f`` on [lo, hi]; returns the best evaluated (x, f(x)).

    Deterministic; on ties the smaller abscissa wins.  The returned value is
    always an actually evaluated point, so for objectives bounded below by a
    true optimum the result can never overshoot that bound.
    """
    a, b = float(lo), float(hi)
    if not b > a:
        raise ValueError(f"empty search interval [{lo}, {hi}]")
    c = b - _INV_PHI * (b - a)
    d = a + _INV_PHI * (b - a)
    fc, fd = f(c), f(d)
    best_x, best_f = (c, fc) if (fc < fd or (fc == fd and c < d)) else (d, fd)
    for x0, f0 in ((a, f(a)), (b, f(b))):
        if f0 < best_f or (f0 == best_f and x0 < best_x):
            best_x, best_f = x0, f0
    while (b - a) > tol:
        if fc <= fd:
            b, d, fd = d, c, fc
            c = b - _INV_PHI * (b - a)
            fc = f(c)
            x0, f0 = c, fc
        else:
            a, c, fc = c, d, fd
            d = a + _INV_PHI * (b - a)
            fd = f(d)
            x0, f0 = d, fd
        if f0 < best_f or (f0 == best_f and x0 < best_x):
            best_x, best_f = x0, f0
    return best_x, best_f


def golden_max(f, lo: float, hi: float, tol: float = 1e-7) -> tuple[float, float]:
    """Maximise ``f`` on [lo, hi]; returns the best evaluated (x, f(x))."""
    x, neg = golden_min(lambda v: -f(v), lo, hi, tol=tol)
    return x, -neg
