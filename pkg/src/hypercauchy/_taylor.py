"""Recentered Taylor stepping for the hypergeometric ODE

    z(1-z) y'' + [c - (1+a+b) z] y' - ab y = 0.

Each step expands the solution about the current point and sums the series
at the step end; the step length never exceeds ``ratio`` times the distance
to the nearest singular point {0, 1}, so the local series converges at least
geometrically with that ratio.
"""

from __future__ import annotations

from collections.abc import Sequence

from .errors import StepFailure

_EPS = 2.0 ** -53
_MAX_ORDER = 600


def taylor_step(a: complex, b: complex, c: complex, z0: complex,
                y0: complex, dy0: complex, h: complex) -> tuple[complex, complex]:
    """Advance (y, y') from z0 to z0 + h."""
    if h == 0:
        return y0, dy0
    p0 = z0 * (1 - z0)
    if p0 == 0:
        raise StepFailure(f"cannot expand about singular point {z0}")
    p1 = 1 - 2 * z0
    q0 = c - (1 + a + b) * z0
    q1 = -(1 + a + b)
    r = -a * b
    # u_k = y_k h^k
    u_prev, u_cur = complex(y0), dy0 * h
    y = u_prev + u_cur
    dyh = u_cur  # h * y'(z0 + h)
    quiet = 0
    for k in range(_MAX_ORDER):
        u_next = -((p1 * k + q0) * (k + 1) * u_cur * h
                   + (-k * (k - 1) + q1 * k + r) * u_prev * h * h) / (p0 * (k + 2) * (k + 1))
        y += u_next
        dyh += (k + 2) * u_next
        size = abs(y) + abs(dyh)
        if abs(u_next) * (k + 3) <= _EPS * size:
            quiet += 1
            if quiet >= 3 and k >= 10:
                return y, dyh / h
        else:
            quiet = 0
        u_prev, u_cur = u_cur, u_next
    raise StepFailure(f"Taylor series did not converge for step {h} at {z0}")


def transport(a: complex, b: complex, c: complex, vertices: Sequence[complex],
              y0: complex, dy0: complex, *, margin: float = 1e-3,
              ratio: float = 0.5) -> tuple[complex, complex]:
    """Continue (y, y') along the polyline through ``vertices``."""
    z = complex(vertices[0])
    y, dy = complex(y0), complex(dy0)
    for end in vertices[1:]:
        end = complex(end)
        while True:
            remaining = end - z
            if abs(remaining) <= 1e-15 * max(1.0, abs(end)):
                break
            dist = min(abs(z), abs(z - 1))
            if dist < margin:
                raise StepFailure(f"path passes within {dist:.3g} of a singular point near {z}")
            hmax = ratio * dist
            if abs(remaining) <= hmax:
                h = remaining
            else:
                h = remaining / abs(remaining) * hmax
            y, dy = taylor_step(a, b, c, z, y, dy, h)
            z = end if h == remaining else z + h
    return y, dy
