"""Solution objects for the characteristic Cauchy problem

    L_gamma u = 0,  u(0, x) = u0(x),  u_t(0, x) = 0.

For monomial data x^l the solution is U_l = x^l F(a, b, c, z(t, x)); analytic
data sum_l a_l x^l give the series sum_l a_l U_l.
"""

from __future__ import annotations

import cmath
import math
import warnings
from collections.abc import Sequence
from dataclasses import dataclass, field

from .errors import (
    DegenerateParams,
    DivisionByZero,
    NoConvergence,
    NotDegenerate,
    OutsideDomain,
    PreconditionViolation,
    UniquenessWarning,
)
from .problem import (
    CharMap,
    DegeneracyFlags,
    DerivedParams,
    ProblemSpec,
    Root,
    c_is_pole,
    char_distance,
    char_map,
    degeneracy_flags,
    derive_params,
    eval_z,
    gamma_in_negative_integers,
)
from .specfun import PRINCIPAL, BranchContext, GhfParams, gamma_ratio, ghf_eval

SERIES_TOL = 1e-10
SERIES_CAP = 500
_RATIO_WINDOW = 10


@dataclass(frozen=True)
class MonomialSolution:
    spec: ProblemSpec
    l: int
    dp: DerivedParams
    map: CharMap
    flags: DegeneracyFlags

    @property
    def params(self) -> GhfParams:
        return self.dp.ghf

    def z(self, t: complex, x: complex) -> complex:
        return eval_z(self.map, t, x)

    def __call__(self, t: complex, x: complex, branch: BranchContext = PRINCIPAL) -> complex:
        return eval_monomial(self, t, x, branch)


def build_monomial(spec: ProblemSpec, l: int, root: Root | str = Root.plus) -> MonomialSolution:
    """U_l for the given operator.  Warns (UniquenessWarning) when gamma is a
    negative integer; raises DegenerateParams when c lands on a pole of F."""
    if c_is_pole(spec):
        raise DegenerateParams(f"c = (n+gamma+1)/(n+2) is a non-positive integer for gamma = {spec.gamma}")
    dp = derive_params(spec, l, root)
    if gamma_in_negative_integers(spec.gamma):
        warnings.warn(f"gamma = {spec.gamma.real:g} is a negative integer: null solutions "
                      f"t^{1 - round(spec.gamma.real)} V exist and U_{l} is not unique",
                      UniquenessWarning, stacklevel=2)
    return MonomialSolution(spec=spec, l=dp.l, dp=dp, map=char_map(spec), flags=degeneracy_flags(spec, dp))


def eval_monomial(u: MonomialSolution, t: complex, x: complex, branch: BranchContext = PRINCIPAL) -> complex:
    x = complex(x)
    if x == 0:
        raise DivisionByZero("U_l is evaluated off x = 0")
    z = eval_z(u.map, t, x)
    return x ** u.l * ghf_eval(u.params, z, branch)


@dataclass(frozen=True)
class SeriesSolution:
    """sum_l a_l U_l; radius = math.inf marks entire (polynomial) data."""
    coefficients: tuple[complex, ...]
    radius: float
    spec: ProblemSpec
    truncation: int
    root: Root = Root.plus
    _terms: dict = field(default_factory=dict, compare=False, repr=False)

    def term(self, l: int) -> MonomialSolution:
        if l not in self._terms:
            with warnings.catch_warnings():
                warnings.simplefilter("ignore", UniquenessWarning)
                self._terms[l] = build_monomial(self.spec, l, self.root)
        return self._terms[l]

    def __call__(self, t: complex, x: complex) -> complex:
        return eval_series(self, t, x).value


def build_series(spec: ProblemSpec, coefficients: Sequence[complex], radius: float = math.inf,
                 truncation: int | None = None, root: Root | str = Root.plus) -> SeriesSolution:
    coefficients = tuple(complex(a) for a in coefficients)
    if not radius > 0:
        raise ValueError("radius must be positive")
    if truncation is None:
        truncation = min(len(coefficients), SERIES_CAP)
    if truncation < 1:
        raise ValueError("at least one coefficient is needed")
    return SeriesSolution(coefficients=coefficients, radius=float(radius), spec=spec,
                          truncation=int(truncation), root=Root(root))


@dataclass(frozen=True)
class SeriesValue:
    value: complex
    tail: float
    terms: int
    ratio: float | None


def in_convergence_domain(s: SeriesSolution, t: complex, x: complex) -> bool:
    """|x^q - (q/(n+2))^2 t^(n+2)| < R^q / 4; always true for entire data.

    This is the stated region, not a guarantee: U_l grows like
    |x| max|1 +- sqrt(z)|^(2/q) per degree, which can exceed R inside it.
    eval_series raises NoConvergence when that happens.
    """
    if math.isinf(s.radius):
        return True
    return char_distance(s.spec, t, x) < s.radius ** s.spec.q / 4


def _empirical_ratio(mags: Sequence[float]) -> float | None:
    window = [m for m in mags[-_RATIO_WINDOW:] if m > 0]
    if len(window) < 2:
        return None
    return (window[-1] / window[0]) ** (1 / (len(window) - 1))


def eval_series(s: SeriesSolution, t: complex, x: complex, tol: float = SERIES_TOL) -> SeriesValue:
    """Sum a_l U_l(t, x) up to the truncation, stopping early once the geometric
    tail estimated from the last ten term magnitudes drops below tol*|sum|."""
    if not in_convergence_domain(s, t, x):
        raise OutsideDomain(f"({t}, {x}) lies outside the convergence domain")
    total = 0j
    mags: list[float] = []
    n_terms = min(s.truncation, len(s.coefficients))
    exact = math.isinf(s.radius) or n_terms == len(s.coefficients) and n_terms < _RATIO_WINDOW
    ratio = None
    for l in range(n_terms):
        coef = s.coefficients[l]
        term = coef * s.term(l)(t, x) if coef != 0 else 0j
        total += term
        mags.append(abs(term))
        if exact or l + 1 < _RATIO_WINDOW:
            continue
        ratio = _empirical_ratio(mags)
        if ratio is None:
            continue
        if ratio < 1:
            tail = mags[-1] * ratio / (1 - ratio)
            if tail <= tol * abs(total):
                return SeriesValue(total, tail, l + 1, ratio)
    if exact:
        return SeriesValue(total, 0.0, n_terms, None)
    if ratio is None:
        return SeriesValue(total, 0.0, n_terms, None)
    if ratio >= 1:
        raise NoConvergence(f"series terms at ({t}, {x}) do not decay (ratio {ratio:.4g})")
    return SeriesValue(total, mags[-1] * ratio / (1 - ratio), n_terms, ratio)


@dataclass(frozen=True)
class NullSolution:
    """t^(1-gamma) V with V solving the companion equation L_(2-gamma) V = 0."""
    spec: ProblemSpec
    exponent: int
    v: MonomialSolution

    def __call__(self, t: complex, x: complex) -> complex:
        t = complex(t)
        return t ** self.exponent * self.v(t, x)


def build_null_solution(spec: ProblemSpec, l_v: int, root: Root | str = Root.plus) -> NullSolution:
    if not gamma_in_negative_integers(spec.gamma):
        raise NotDegenerate(f"gamma = {spec.gamma} is not a negative integer")
    g = round(spec.gamma.real)
    companion = spec.with_gamma(2 - g)
    return NullSolution(spec=spec, exponent=1 - g, v=build_monomial(companion, l_v, root))


def dalembert_closed_form(l: int, t: complex, x: complex) -> complex:
    t, x = complex(t), complex(x)
    return 0.5 * ((x + t) ** l + (x - t) ** l)


def majorant_bound_check(a: float, b: float, c: float, x: float, slack: float = 1e-12) -> bool:
    """Whether F(a,b,c,x) <= Gamma(c)Gamma(a+b-c)/(Gamma(a)Gamma(b)) (1-x)^(c-a-b)."""
    if not (a >= b > c > 0):
        raise PreconditionViolation(f"need a >= b > c > 0, got ({a}, {b}, {c})")
    if not 0 <= x < 1:
        raise PreconditionViolation(f"need 0 <= x < 1, got {x}")
    lhs = ghf_eval(GhfParams(a, b, c), x).real
    k = gamma_ratio((c, a + b - c), (a, b)).real
    rhs = k * (1 - x) ** (c - a - b)
    return lhs <= rhs * (1 + slack)


def majorant_coefficients_check(a: float, b: float, c: float, terms: int = 200) -> bool:
    """Coefficientwise form of the same majorant relation."""
    if not (a >= b > c > 0):
        raise PreconditionViolation(f"need a >= b > c > 0, got ({a}, {b}, {c})")
    k = gamma_ratio((c, a + b - c), (a, b)).real
    s = a + b - c
    lhs = rhs = 1.0
    for i in range(terms):
        if lhs > k * rhs * (1 + 1e-12):
            return False
        lhs *= (a + i) * (b + i) / ((c + i) * (i + 1))
        rhs *= (s + i) / (i + 1)
    return True


def growth_rate_estimate(spec: ProblemSpec, t: complex, x: complex, l_max: int,
                         root: Root | str = Root.plus) -> float:
    """max over l in [l_max/2, l_max] (l >= 1) of |U_l(t, x)|^(1/l)."""
    if l_max < 1:
        raise ValueError("l_max must be at least 1")
    best = 0.0
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", UniquenessWarning)
        for l in range(max(1, l_max // 2), l_max + 1):
            val = abs(build_monomial(spec, l, root)(t, x))
            if val > 0:
                best = max(best, math.exp(math.log(val) / l))
    return best


def growth_bound(spec: ProblemSpec, t: complex, x: complex) -> float:
    """2^(2/q) |x^q - (q/(n+2))^2 t^(n+2)|^(1/q), the stated limsup bound for
    |U_l|^(1/l).  It falls below the true rate where |1 + sqrt(z)|^2 > 4|1 - z|."""
    q = spec.q
    return 2 ** (2 / q) * char_distance(spec, t, x) ** (1 / q)


def principal_power(base: complex, exponent: complex) -> complex:
    base = complex(base)
    if base == 0:
        return 0j
    return cmath.exp(exponent * cmath.log(base))
