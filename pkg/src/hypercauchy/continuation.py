"""Analytic continuation of U_l around the characteristic curves.

K2 (x^q = (q/(n+2))^2 t^(n+2)) maps to z = 1 and K1 (x = 0) to z = inf, so
loops around them are modelled by loops in the z-plane.  Closed-form
monodromy comes from the Kummer decompositions about z = 1 and z = inf; the
ODE integrator in ``continue_ode`` is an independent check.
"""

from __future__ import annotations

import cmath
import enum
import math
from collections.abc import Sequence
from dataclasses import dataclass

from . import _taylor
from .errors import BasepointInvalid, DegenerateParams
from .problem import DerivedParams
from .solution import MonomialSolution
from .specfun import (
    BranchContext,
    GhfParams,
    Loop,
    _inf_basis,
    _one_basis,
    _principal_z,
    connection_constants,
    ghf_derivative,
    ghf_eval,
    is_integer,
)
__all__ = [
    "BranchContext",
    "Loop",
    "LoopPath",
    "LoopTarget",
    "MonodromyResult",
    "continue_ode",
    "continue_ode_full",
    "continue_value",
    "loop_around_infinity",
    "loop_around_one",
    "loop_multiplier",
    "monodromy_K1",
    "monodromy_K2",
    "principal_split",
    "trivial_loop",
]

PATH_MARGIN = 1e-3


class LoopTarget(str, enum.Enum):
    K1 = "K1"
    K2 = "K2"
    trivial = "trivial"


@dataclass(frozen=True)
class LoopPath:
    basepoint_z: complex
    vertices: tuple[complex, ...]
    target: LoopTarget

    def __post_init__(self):
        verts = tuple(complex(v) for v in self.vertices)
        object.__setattr__(self, "vertices", verts)
        object.__setattr__(self, "basepoint_z", complex(self.basepoint_z))
        object.__setattr__(self, "target", LoopTarget(self.target))
        if len(verts) < 2 or verts[0] != verts[-1]:
            raise ValueError("a loop path must be closed (first vertex == last vertex)")
        if verts[0] != self.basepoint_z:
            raise ValueError("loop must start at its basepoint")
        for v0, v1 in zip(verts, verts[1:]):
            for s in (0j, 1 + 0j):
                if _segment_distance(s, v0, v1) < PATH_MARGIN:
                    raise ValueError(f"loop passes within {PATH_MARGIN} of z = {s.real:g}")


def _segment_distance(p: complex, a: complex, b: complex) -> float:
    d = b - a
    if d == 0:
        return abs(p - a)
    s = ((p - a) * d.conjugate()).real / abs(d) ** 2
    s = min(1.0, max(0.0, s))
    return abs(p - (a + s * d))


def _circle(center: complex, start: complex, turns: int, n: int) -> tuple[complex, ...]:
    r = start - center
    pts = [center + r * cmath.exp(2j * math.pi * turns * k / n) for k in range(1, n)]
    return (start,) + tuple(pts) + (start,)


def loop_around_one(z0: complex, positive: bool = True, n: int = 64) -> LoopPath:
    """Circle about z = 1 through z0 (counter-clockwise when positive).

    Requires |1 - z0| < |z0| so that the circle does not also enclose 0.
    """
    z0 = complex(z0)
    if not abs(1 - z0) < abs(z0):
        raise BasepointInvalid(f"circle about 1 through {z0} would enclose 0")
    return LoopPath(z0, _circle(1, z0, 1 if positive else -1, n), LoopTarget.K2)


def loop_around_infinity(z0: complex, positive: bool = True, n: int = 96) -> LoopPath:
    """Circle about z = 1 through z0 enclosing both 0 and 1.

    Positive orientation about infinity is clockwise in the z-plane.
    """
    z0 = complex(z0)
    if not abs(1 - z0) > 1:
        raise BasepointInvalid(f"circle about 1 through {z0} must enclose 0 (need |1-z0| > 1)")
    return LoopPath(z0, _circle(1, z0, -1 if positive else 1, n), LoopTarget.K1)


def trivial_loop(z0: complex, size: float | None = None) -> LoopPath:
    """A small triangle at z0 enclosing no singular point."""
    z0 = complex(z0)
    d = min(abs(z0), abs(z0 - 1))
    h = size if size is not None else 0.4 * d
    return LoopPath(z0, (z0, z0 + h, z0 + h * 1j, z0), LoopTarget.trivial)


def _params(dp: DerivedParams | GhfParams | Sequence[complex]) -> GhfParams:
    if isinstance(dp, DerivedParams):
        return dp.ghf
    if isinstance(dp, GhfParams):
        return dp
    return GhfParams(*dp)


def continue_ode(dp: DerivedParams | GhfParams | Sequence[complex], path: LoopPath,
                 w0: tuple[complex, complex] | None = None) -> complex:
    """Continue a solution of the hypergeometric ODE along ``path``.

    ``w0`` = (value, derivative) at the basepoint; defaults to the principal
    branch of F.  Returns the value at the end of the path.
    """
    return continue_ode_full(dp, path, w0)[0]


def continue_ode_full(dp: DerivedParams | GhfParams | Sequence[complex], path: LoopPath,
                      w0: tuple[complex, complex] | None = None) -> tuple[complex, complex]:
    p = _params(dp)
    if w0 is None:
        w0 = (ghf_eval(p, path.basepoint_z), ghf_derivative(p, path.basepoint_z))
    return _taylor.transport(p.a, p.b, p.c, path.vertices, w0[0], w0[1], margin=PATH_MARGIN)


@dataclass(frozen=True)
class MonodromyResult:
    """value_after = sum of multiplier * component over the local basis."""
    z: complex
    value_before: complex
    value_after: complex
    components: dict[str, complex]
    multipliers: dict[str, complex]
    oracle_value: complex | None = None

    @property
    def multiplier(self) -> complex | None:
        if self.value_before == 0:
            return None
        return self.value_after / self.value_before

    @property
    def oracle_discrepancy(self) -> float | None:
        if self.oracle_value is None:
            return None
        return abs(self.oracle_value - self.value_after) / max(abs(self.value_after), 1e-300)


def _point_z(u: MonomialSolution, t: complex, x: complex) -> complex:
    return _principal_z(u.z(t, x))


def monodromy_K2(u: MonomialSolution, t: complex, x: complex, oracle: bool = True) -> MonodromyResult:
    """Continue U_l once around K2 (z = 1, counter-clockwise) from P = (t, x).

    The basepoint must satisfy z(P) in (0, 1).  Decomposes U_l(P) into the A1
    and A2 Kummer terms about z = 1 and multiplies the second by
    exp(2 pi i (c-a-b)).
    """
    z = _point_z(u, t, x)
    if not (abs(z.imag) <= 1e-12 * abs(z) and 0 < z.real < 1):
        raise BasepointInvalid(f"K2 basepoint needs z(P) in (0, 1), got {z}")
    z = complex(z.real, 0.0)
    p = u.params
    xl = complex(x) ** u.l
    before = xl * ghf_eval(p, z)
    if p.terminating_degree() is not None:
        comps = {"U1": before, "U2": 0j}
        mult = {"U1": 1 + 0j, "U2": 1 + 0j}
        after = before
    else:
        s = p.c - p.a - p.b
        if is_integer(s):
            raise DegenerateParams(f"c-a-b = {s} is an integer")
        u1, u2 = principal_split(p, z, "one")
        comps = {"U1": xl * u1, "U2": xl * u2}
        mult = {"U1": 1 + 0j, "U2": cmath.exp(2j * math.pi * s)}
        after = comps["U1"] + mult["U2"] * comps["U2"]
    oracle_value = None
    if oracle:
        oracle_value = xl * continue_ode(p, loop_around_one(z) if z.real > 0.5 else _k2_loop_small(z))
    return MonodromyResult(z, before, after, comps, mult, oracle_value)


def _k2_loop_small(z0: complex) -> LoopPath:
    # go straight towards 1, circle it at radius 1/4, come back
    z0 = complex(z0)
    mid = 1 + 0.25 * (z0 - 1) / abs(z0 - 1)
    circle = _circle(1, mid, 1, 64)
    return LoopPath(z0, (z0,) + circle + (z0,), LoopTarget.K2)


def monodromy_K1(u: MonomialSolution, t: complex, x: complex, oracle: bool = True) -> MonodromyResult:
    """Continue U_l once around z = inf (the image of K1) from P = (t, x).

    The basepoint must satisfy |1 - z(P)| > 1.  Decomposes U_l(P) into the A3
    and A4 Kummer terms about z = inf and applies exp(2 pi i a), exp(2 pi i b).
    The x^l prefactor's own winding is not modelled.
    """
    z = _point_z(u, t, x)
    if not abs(1 - z) > 1:
        raise BasepointInvalid(f"K1 basepoint needs |1 - z(P)| > 1, got z = {z}")
    p = u.params
    xl = complex(x) ** u.l
    before = xl * ghf_eval(p, z)
    if p.terminating_degree() is not None:
        comps = {"U3": before, "U4": 0j}
        mult = {"U3": 1 + 0j, "U4": 1 + 0j}
        after = before
    else:
        if is_integer(p.a - p.b):
            raise DegenerateParams(f"a-b = {p.a - p.b} is an integer")
        u3, u4 = principal_split(p, z, "inf")
        m3 = cmath.exp(2j * math.pi * p.a)
        m4 = cmath.exp(2j * math.pi * p.b)
        comps = {"U3": xl * u3, "U4": xl * u4}
        mult = {"U3": m3, "U4": m4}
        after = m3 * comps["U3"] + m4 * comps["U4"]
    oracle_value = None
    if oracle:
        oracle_value = xl * continue_ode(p, loop_around_infinity(z))
    return MonodromyResult(z, before, after, comps, mult, oracle_value)


def continue_value(u: MonomialSolution, t: complex, x: complex, branch: BranchContext) -> complex:
    """U_l(t, x) on the branch reached by the loop word in ``branch``."""
    return u(t, x, branch)


def loop_multiplier(u: MonomialSolution, t: complex, x: complex, loop: Loop | str) -> complex:
    """Ratio of the continued value to the principal one after a single loop."""
    loop = Loop(loop)
    before = u(t, x)
    after = u(t, x, BranchContext((loop,)))
    return after / before


def principal_split(p: GhfParams, z: complex, centre: str) -> tuple[complex, complex]:
    """The two Kummer terms of F(a,b,c,z) about z = 1 ("one") or z = inf ("inf")."""
    names = ("A1", "A2") if centre == "one" else ("A3", "A4")
    k = connection_constants(p, names).require(*names)
    v = (_one_basis if centre == "one" else _inf_basis)(p, _principal_z(complex(z)))
    return k[0] * v[0], k[1] * v[1]
