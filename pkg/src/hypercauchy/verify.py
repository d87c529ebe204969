"""Residual oracle: apply L_gamma to any callable u(t, x) with derivatives taken
by trapezoidal contour integration (Cauchy's formula), independently of how
u was built.
"""

from __future__ import annotations

import cmath
import math
from collections.abc import Callable, Sequence
from dataclasses import dataclass

from .errors import SingularityTooClose
from .problem import ProblemSpec, char_map, eval_z, k2_roots_t, k2_roots_x

NODES = 32
AGREEMENT = 1e-8

Evaluatable = Callable[[complex, complex], complex]


def _circle_samples(f: Callable[[complex], complex], z0: complex, radius: float, nodes: int) -> list[complex]:
    return [complex(f(z0 + radius * cmath.exp(2j * math.pi * j / nodes))) for j in range(nodes)]


def _coefficient(samples: Sequence[complex], order: int, stride: int = 1) -> complex:
    pts = samples[::stride]
    n = len(pts)
    acc = 0j
    for j, v in enumerate(pts):
        acc += v * cmath.exp(-2j * math.pi * order * j / n)
    return acc / n


def contour_derivatives(f: Callable[[complex], complex], z0: complex, radius: float,
                        orders: Sequence[int] = (1, 2), nodes: int = NODES) -> dict[int, complex]:
    """Several derivatives of f at z0 from one set of samples on |z - z0| = radius.

    The estimate with ``nodes`` points is compared with the one from twice as
    many; on disagreement above 1e-8 the node count is doubled once more.
    """
    if not radius > 0:
        raise SingularityTooClose(f"contour radius must be positive, got {radius}")
    z0 = complex(z0)
    n = 2 * nodes
    samples = _circle_samples(f, z0, radius, n)
    for _ in range(3):
        fmax = max(abs(v) for v in samples)
        out = {}
        agree = True
        for k in orders:
            fact = math.factorial(k) / radius ** k
            fine = _coefficient(samples, k) * fact
            coarse = _coefficient(samples, k, stride=2) * fact
            floor = 1e-6 * fact * fmax
            if abs(fine - coarse) > AGREEMENT * max(abs(fine), floor):
                agree = False
            out[k] = fine
        if agree:
            return out
        n *= 2
        samples = _circle_samples(f, z0, radius, n)
    raise SingularityTooClose(f"contour derivatives at {z0} did not settle (radius {radius})")


def contour_derivative(f: Callable[[complex], complex], z0: complex, order: int,
                       radius: float, nodes: int = NODES) -> complex:
    """order-th derivative of f at z0 (f holomorphic on the closed disk)."""
    if order == 0:
        return complex(f(z0))
    return contour_derivatives(f, z0, radius, (order,), nodes)[order]


@dataclass(frozen=True)
class ResidualReport:
    point: tuple[complex, complex]
    residual: complex
    scale: float
    relative: float
    terms: tuple[complex, ...]


def _cut_distance(z: complex) -> float:
    if z.real >= 1:
        return abs(z.imag)
    return abs(z - 1)


def contour_radii(spec: ProblemSpec, t: complex, x: complex, *, cut_guard: bool = True) -> tuple[float, float]:
    """Radii for the t- and x-contours about (t, x).

    Each is at most 0.1, half the distance to t=0 (resp. x=0) and a quarter of
    the distance to K2 in that variable.  With ``cut_guard`` the radii are
    also halved until the z-image of each circle stays within half the
    distance from z(t, x) to the branch cut [1, inf).
    """
    t, x = complex(t), complex(x)
    rt = min([0.1, abs(t) / 2] + [abs(t - r) / 4 for r in k2_roots_t(spec, x)])
    rx = min([0.1, abs(x) / 2] + [abs(x - r) / 4 for r in k2_roots_x(spec, t)])
    if cut_guard:
        cm = char_map(spec)
        z0 = eval_z(cm, t, x)
        room = _cut_distance(z0) / 2
        if room == 0:
            raise SingularityTooClose(f"z(t, x) = {z0} lies on the branch cut")
        probes = [cmath.exp(2j * math.pi * j / 16) for j in range(16)]
        for which in ("t", "x"):
            for _ in range(60):
                r = rt if which == "t" else rx
                pts = [(t + r * e, x) if which == "t" else (t, x + r * e) for e in probes]
                if all(abs(eval_z(cm, tt, xx) - z0) < room for tt, xx in pts):
                    break
                if which == "t":
                    rt /= 2
                else:
                    rx /= 2
    if rt < 1e-12 or rx < 1e-12:
        raise SingularityTooClose(f"({t}, {x}) is too close to a singular set")
    return rt, rx


def residual(u: Evaluatable, spec: ProblemSpec, t: complex, x: complex, *,
             radius_t: float | None = None, radius_x: float | None = None,
             cut_guard: bool = True) -> ResidualReport:
    """L_gamma u at (t, x), with scale = largest magnitude among the five terms
    x^m u_tt, x^m (gamma/t) u_t, t^n x^p u_xx, A t^n x^(p-1) u_x, B t^n x^(p-2) u."""
    t, x = complex(t), complex(x)
    if t == 0 or x == 0:
        raise SingularityTooClose("residual needs t != 0 and x != 0")
    if radius_t is None or radius_x is None:
        rt, rx = contour_radii(spec, t, x, cut_guard=cut_guard)
        radius_t = rt if radius_t is None else radius_t
        radius_x = rx if radius_x is None else radius_x
    dt = contour_derivatives(lambda s: u(s, x), t, radius_t)
    dx = contour_derivatives(lambda s: u(t, s), x, radius_x)
    u0 = complex(u(t, x))
    xm = x ** spec.m
    tn = t ** spec.n
    xp2 = x ** (spec.p - 2)
    terms = (
        xm * dt[2],
        xm * spec.gamma / t * dt[1],
        -tn * xp2 * x * x * dx[2],
        -tn * xp2 * spec.A * x * dx[1],
        -tn * xp2 * spec.B * u0,
    )
    res = sum(terms)
    scale = max(abs(v) for v in terms)
    if scale == 0:
        scale = math.ulp(1.0)
    return ResidualReport(point=(t, x), residual=res, scale=scale, relative=abs(res) / scale, terms=terms)


def cauchy_data_check(u: Evaluatable, x_samples: Sequence[complex], l: int | None = None, *,
                      t_small: float = 1e-4, radius: float = 1e-3) -> float:
    """max over samples of |u(t_small, x) - x^l| and |u_t(0, x)|."""
    if l is None:
        l = getattr(u, "l")
    worst = 0.0
    for x in x_samples:
        x = complex(x)
        worst = max(worst, abs(complex(u(t_small, x)) - x ** l))
        dt = contour_derivative(lambda s: u(s, x), 0j, 1, radius)
        worst = max(worst, abs(dt))
    return worst
