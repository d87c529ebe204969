"""The singular operator

    L_gamma u = x^m (u_tt + (gamma/t) u_t) - t^n x^(p-2) (x^2 u_xx + A x u_x + B u)

and the reduction of L_gamma (x^l w(z)) = 0 to a hypergeometric equation in
z = (q/(n+2))^2 t^(n+2) / x^q, q = m - p + 2.
"""

from __future__ import annotations

import cmath
import enum
from dataclasses import dataclass, replace

from .errors import DivisionByZero
from .specfun import TAU_INT, GhfParams, is_integer, is_nonpos_integer


class Root(str, enum.Enum):
    plus = "plus"
    minus = "minus"


@dataclass(frozen=True)
class ProblemSpec:
    m: int
    n: int
    p: int
    gamma: complex
    A: complex
    B: complex

    def __post_init__(self):
        for name in ("m", "n", "p"):
            v = getattr(self, name)
            if isinstance(v, bool) or int(v) != v or v < 0:
                raise ValueError(f"{name} must be a non-negative integer, got {v!r}")
            object.__setattr__(self, name, int(v))
        for name in ("gamma", "A", "B"):
            v = complex(getattr(self, name))
            if not (cmath.isfinite(v)):
                raise ValueError(f"{name} must be finite")
            object.__setattr__(self, name, v)
        if self.q <= 0:
            raise ValueError(f"q = m - p + 2 must be positive, got {self.q}")

    @property
    def q(self) -> int:
        return self.m - self.p + 2

    def with_gamma(self, gamma: complex) -> ProblemSpec:
        return replace(self, gamma=complex(gamma))


@dataclass(frozen=True)
class DerivedParams:
    q: int
    alpha_plus: complex
    alpha_minus: complex
    a: complex
    b: complex
    c: complex
    l: int
    root_choice: Root

    @property
    def alpha(self) -> complex:
        return self.alpha_plus if self.root_choice is Root.plus else self.alpha_minus

    @property
    def ghf(self) -> GhfParams:
        return GhfParams(self.a, self.b, self.c)


@dataclass(frozen=True)
class DegeneracyFlags:
    gamma_negative_integer: bool
    c_integer: bool
    cab_integer: bool
    ab_integer: bool


@dataclass(frozen=True)
class CharMap:
    """z(t, x) = coefficient * t^t_exponent / x^x_exponent."""
    coefficient: float
    t_exponent: int
    x_exponent: int


def alpha_roots(A: complex, B: complex) -> tuple[complex, complex]:
    """Roots of rho^2 + (1-A) rho + B = 0, labelled by the sign of the square root.

    The root with the larger numerator is formed directly and the other from
    the product of the roots, which avoids cancellation.
    """
    A, B = complex(A), complex(B)
    s = A - 1
    d = cmath.sqrt(s * s - 4 * B)
    big_plus = abs(s + d) >= abs(s - d)
    big = (s + d) / 2 if big_plus else (s - d) / 2
    small = B / big if big != 0 else 0j
    return (big, small) if big_plus else (small, big)


def derive_params(spec: ProblemSpec, l: int, root: Root | str = Root.plus) -> DerivedParams:
    if l < 0 or int(l) != l:
        raise ValueError(f"l must be a non-negative integer, got {l!r}")
    l = int(l)
    root = Root(root)
    ap, am = alpha_roots(spec.A, spec.B)
    alpha = ap if root is Root.plus else am
    q = spec.q
    a = -(alpha + l) / q
    b = (1 + alpha - spec.A - l) / q
    c = (spec.n + spec.gamma + 1) / (spec.n + 2)
    return DerivedParams(q=q, alpha_plus=ap, alpha_minus=am, a=a, b=b, c=c, l=l, root_choice=root)


def char_map(spec: ProblemSpec) -> CharMap:
    return CharMap(coefficient=(spec.q / (spec.n + 2)) ** 2, t_exponent=spec.n + 2, x_exponent=spec.q)


def eval_z(cmap: CharMap, t: complex, x: complex) -> complex:
    x = complex(x)
    if abs(x) < 1e-300:
        raise DivisionByZero("z(t, x) is undefined at x = 0")
    return cmap.coefficient * complex(t) ** cmap.t_exponent / x ** cmap.x_exponent


def degeneracy_flags(spec: ProblemSpec, dp: DerivedParams) -> DegeneracyFlags:
    g = spec.gamma
    return DegeneracyFlags(
        gamma_negative_integer=gamma_in_negative_integers(g),
        c_integer=is_integer(dp.c),
        cab_integer=is_integer(dp.c - dp.a - dp.b),
        ab_integer=is_integer(dp.a - dp.b),
    )


def char_distance(spec: ProblemSpec, t: complex, x: complex) -> float:
    """|x^q - (q/(n+2))^2 t^(n+2)|; zero exactly on the characteristic K2."""
    cm = char_map(spec)
    return abs(complex(x) ** cm.x_exponent - cm.coefficient * complex(t) ** cm.t_exponent)


def k2_roots_t(spec: ProblemSpec, x: complex) -> list[complex]:
    """The n+2 values of t on K2 above a given x."""
    cm = char_map(spec)
    base = (complex(x) ** cm.x_exponent / cm.coefficient)
    k = cm.t_exponent
    r = base ** (1 / k) if base != 0 else 0j
    return [r * cmath.exp(2j * cmath.pi * j / k) for j in range(k)]


def k2_roots_x(spec: ProblemSpec, t: complex) -> list[complex]:
    """The q values of x on K2 above a given t."""
    cm = char_map(spec)
    base = cm.coefficient * complex(t) ** cm.t_exponent
    k = cm.x_exponent
    r = base ** (1 / k) if base != 0 else 0j
    return [r * cmath.exp(2j * cmath.pi * j / k) for j in range(k)]


def gamma_in_negative_integers(gamma: complex, tol: float = TAU_INT) -> bool:
    return is_integer(gamma, tol) and round(complex(gamma).real) <= -1


def c_is_pole(spec: ProblemSpec) -> bool:
    return is_nonpos_integer((spec.n + spec.gamma + 1) / (spec.n + 2))
