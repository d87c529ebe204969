"""Worked problems with published closed forms, and residual adjudication.

Each fixture carries a closed form as it was printed alongside the operator
it is claimed to solve.  ``adjudicate`` runs the residual oracle on both the
printed form and the hypergeometric solution U_l built from (a, b, c) and
records which of them actually satisfies L_gamma u = 0.
"""

from __future__ import annotations

import warnings
from collections.abc import Callable, Sequence
from dataclasses import dataclass

from .errors import UniquenessWarning
from .problem import ProblemSpec
from .solution import MonomialSolution, build_monomial
from .verify import residual

ACCEPT = 1e-10
REJECT = 1e-2

# points well inside |z| < 1 for every fixture below, off both characteristics
PANEL: tuple[tuple[complex, complex], ...] = (
    (0.3 + 0.1j, 1.0 + 0.2j),
    (0.5 + 0j, 1.3 + 0j),
    (0.2 - 0.3j, 0.9 + 0.4j),
    (0.6 + 0.2j, 1.5 - 0.3j),
    (0.1 + 0.4j, 1.1 + 0j),
)

Evaluatable = Callable[[complex, complex], complex]


@dataclass(frozen=True)
class Fixture:
    name: str
    spec: ProblemSpec
    l: int
    printed: Evaluatable
    printed_form: str
    claim: str

    def monomial(self, root: str = "plus") -> MonomialSolution:
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", UniquenessWarning)
            return build_monomial(self.spec, self.l, root)


@dataclass(frozen=True)
class Adjudication:
    name: str
    printed_form: str
    printed_residual: float
    derived_residual: float
    verdict: str

    def as_dict(self) -> dict:
        return {
            "name": self.name,
            "printed_form": self.printed_form,
            "printed_residual": self.printed_residual,
            "derived_residual": self.derived_residual,
            "verdict": self.verdict,
        }


def _cubic_plus(c: float) -> Evaluatable:
    return lambda t, x: x ** 3 + c * t ** 3


def _printed_ramified(t, x):
    z = 9 * t * t / (4 * x ** 3)
    return x * (1 - z / 2) * (1 - z) ** (-2 / 3)


def _printed_both(t, x):
    return (x ** 3 - t ** 3) ** (5 / 6) / x ** 0.5


HOLOMORPHIC = Fixture(
    "holomorphic_cubic", ProblemSpec(4, 1, 3, 1 / 3, -0.5, 0), 3,
    _cubic_plus(2 / 7), "x^3 + (2/7) t^3", "holomorphic")

SINGULAR_K1 = Fixture(
    "singular_on_K1", ProblemSpec(3, 1, 2, 0.5, 0.5, -1), 2,
    lambda t, x: x ** 2 + 2 * t ** 3 / (5 * x), "x^2 + 2 t^3 / (5x)", "singular on K1")

RAMIFIED_K2 = Fixture(
    "ramified_on_K2", ProblemSpec(3, 0, 2, -1 / 3, -1, 0), 1,
    _printed_ramified, "x (1 - z/2) (1 - z)^(-2/3), z = 9t^2/(4x^3)", "ramified around K2")

SINGULAR_BOTH = Fixture(
    "singular_on_both", ProblemSpec(3, 1, 2, -0.5, 3, -2.25), 2,
    _printed_both, "(x^3 - t^3)^(5/6) / sqrt(x)", "singular on K1 and K2")

NULL_SOLUTION = Fixture(
    "null_solution", ProblemSpec(4, 1, 3, -1, -1, 0), 1,
    lambda t, x: (x ** 3 - t ** 3) ** (1 / 3), "(x^3 - t^3)^(1/3) + lambda t^2",
    "non-unique: null solution t^2")

PUBLISHED = (HOLOMORPHIC, SINGULAR_K1, RAMIFIED_K2, SINGULAR_BOTH, NULL_SOLUTION)

# the wave equation u_tt = u_xx: U_l = ((x+t)^l + (x-t)^l) / 2
WAVE = ProblemSpec(2, 0, 2, 0, 0, 0)

# U_1 = x (1 - z)^(1/3), z = t^3/x^3: one loop around K2 multiplies by exp(2 pi i/3)
CUBE_ROOT = NULL_SOLUTION.spec
CUBE_ROOT_L = 1


def max_relative(u: Evaluatable, spec: ProblemSpec, points: Sequence[tuple[complex, complex]] = PANEL) -> float:
    return max(residual(u, spec, t, x).relative for t, x in points)


def adjudicate(fx: Fixture, points: Sequence[tuple[complex, complex]] = PANEL) -> Adjudication:
    printed = max_relative(fx.printed, fx.spec, points)
    derived = max(max_relative(fx.monomial(r), fx.spec, points) for r in ("plus", "minus"))
    ok_p, ok_d = printed <= ACCEPT, derived <= ACCEPT
    verdict = {(True, True): "both", (True, False): "printed",
               (False, True): "derived", (False, False): "neither"}[ok_p, ok_d]
    return Adjudication(fx.name, fx.printed_form, printed, derived, verdict)


def solve_coefficient(spec: ProblemSpec, base: Evaluatable, extra: Evaluatable,
                      point: tuple[complex, complex] = PANEL[0]) -> complex:
    """C with L(base + C extra) = 0 at ``point``; the residual is affine in C."""
    t, x = point
    r0 = residual(base, spec, t, x).residual
    r1 = residual(lambda s, y: base(s, y) + extra(s, y), spec, t, x).residual
    return -r0 / (r1 - r0)


@dataclass(frozen=True)
class ConstantChoice:
    candidates: dict[str, float]
    residuals: dict[str, float]
    selected: str | None
    solved: complex
    printed: str

    @property
    def discrepancy(self) -> float | None:
        if self.selected is None:
            return None
        return abs(self.candidates[self.selected] - self.candidates[self.printed])

    def as_dict(self) -> dict:
        return {
            "candidates": self.candidates,
            "residuals": self.residuals,
            "selected": self.selected,
            "solved_coefficient": [self.solved.real, self.solved.imag],
            "printed": self.printed,
            "discrepancy": self.discrepancy,
        }


def choose_constant(candidates: dict[str, float] | None = None, printed: str = "2/7",
                    points: Sequence[tuple[complex, complex]] = PANEL) -> ConstantChoice:
    """Decide the constant C in x^3 + C t^3 for the holomorphic fixture."""
    if candidates is None:
        candidates = {"2/7": 2 / 7, "9/14": 9 / 14}
    spec = HOLOMORPHIC.spec
    res = {k: max_relative(_cubic_plus(v), spec, points) for k, v in candidates.items()}
    passing = [k for k, r in res.items() if r <= ACCEPT]
    selected = passing[0] if len(passing) == 1 else None
    solved = solve_coefficient(spec, lambda t, x: x ** 3, lambda t, x: t ** 3, points[0])
    return ConstantChoice(dict(candidates), res, selected, solved, printed)


def null_solution_residual(points: Sequence[tuple[complex, complex]] = PANEL) -> float:
    """Largest |L_gamma t^2| (absolute) for the null-solution fixture."""
    return max(abs(residual(lambda t, x: t * t, NULL_SOLUTION.spec, t, x).residual) for t, x in points)


def fixture_report(points: Sequence[tuple[complex, complex]] = PANEL) -> dict:
    return {
        "constant": choose_constant(points=points).as_dict(),
        "adjudications": [adjudicate(fx, points).as_dict() for fx in PUBLISHED],
        "null_solution_residual": null_solution_residual(points),
    }
