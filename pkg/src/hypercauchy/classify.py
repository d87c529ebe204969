"""Holomorphy of U_l across K1 (x = 0) and K2 (z = 1) read off from (a, b, c).

N = {0, 1, 2, ...} and -N = {0, -1, -2, ...} throughout.  Cases are tried in
the order a, b, c-a, c-b, generic; the first that holds decides.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .errors import DegenerateParams, PreconditionViolation
from .solution import MonomialSolution
from .continuation import _k2_loop_small, continue_ode, loop_around_infinity, loop_around_one
from .specfun import ghf_eval, is_integer, is_nonpos_integer


class CaseTag(str, enum.Enum):
    a_nonpos_int = "a_nonpos_int"
    b_nonpos_int = "b_nonpos_int"
    ca_nonpos_int = "ca_nonpos_int"
    cb_nonpos_int = "cb_nonpos_int"
    generic = "generic"


@dataclass(frozen=True)
class ClassificationReport:
    case_tag: CaseTag
    holomorphic_K1: bool
    holomorphic_K2: bool
    k2_ramification_exponent: complex | None
    witness: str

    def as_dict(self) -> dict:
        e = self.k2_ramification_exponent
        return {
            "case_tag": self.case_tag.value,
            "holomorphic_K1": self.holomorphic_K1,
            "holomorphic_K2": self.holomorphic_K2,
            "k2_ramification_exponent": None if e is None else [e.real, e.imag],
            "witness": self.witness,
        }


def _in_N(v: complex) -> bool:
    return is_integer(v) and round(v.real) >= 0


def _fmt(v: complex) -> str:
    return f"{v.real:.6g}" if abs(v.imag) < 1e-12 else f"{v.real:.6g}{v.imag:+.6g}i"


def classify(u: MonomialSolution) -> ClassificationReport:
    a, b, c = u.dp.a, u.dp.b, u.dp.c
    l, q = u.l, u.dp.q
    s = c - a - b
    la, lb = l + a * q, l + b * q
    if is_nonpos_integer(a):
        return ClassificationReport(
            CaseTag.a_nonpos_int, _in_N(la), True, None,
            f"a = {_fmt(a)} in -N: F is a polynomial; l + aq = {_fmt(la)}")
    if is_nonpos_integer(b):
        return ClassificationReport(
            CaseTag.b_nonpos_int, _in_N(lb), True, None,
            f"b = {_fmt(b)} in -N: F is a polynomial; l + bq = {_fmt(lb)}")
    if is_integer(s) and (is_nonpos_integer(c - a) or is_nonpos_integer(c - b)):
        # F = (1-z)^(-b) * polynomial with integer exponent: a pole, not a branch point
        raise DegenerateParams(f"c-a-b = {_fmt(s)} is an integer: K2 verdict undefined")
    if is_nonpos_integer(c - a):
        return ClassificationReport(
            CaseTag.ca_nonpos_int, _in_N(lb), False, s,
            f"c-a = {_fmt(c - a)} in -N; l + bq = {_fmt(lb)}; (1-z)^(c-a-b), c-a-b = {_fmt(s)}")
    if is_nonpos_integer(c - b):
        return ClassificationReport(
            CaseTag.cb_nonpos_int, _in_N(la), False, s,
            f"c-b = {_fmt(c - b)} in -N; l + aq = {_fmt(la)}; (1-z)^(c-a-b), c-a-b = {_fmt(s)}")
    alpha = u.dp.alpha
    other = 1 + alpha - u.spec.A
    # integer c-a-b with a, b not in -N still leaves a log(1-z) term whose
    # coefficient carries 1/(Gamma(a) Gamma(b)) != 0
    kind = "logarithmic, " if is_integer(s) else ""
    return ClassificationReport(
        CaseTag.generic, _in_N(-alpha) and _in_N(other), False, s,
        f"generic: -alpha = {_fmt(-alpha)}, 1+alpha-A = {_fmt(other)}; {kind}c-a-b = {_fmt(s)}")


def pfaff_lastterm_exponents(u: MonomialSolution) -> tuple[complex, complex]:
    """(x exponent, K2 exponent) of the top term C t^(N(n+2)) x^(l+qb) [x^q - ...]^(c-a-b)
    in the Pfaff-transformed polynomial when c - a = -N."""
    a, b, c = u.dp.a, u.dp.b, u.dp.c
    if not is_nonpos_integer(c - a):
        raise PreconditionViolation(f"c - a = {_fmt(c - a)} is not in -N")
    return u.l + u.dp.q * b, c - a - b


def ramification_witness(u: MonomialSolution, curve: str = "K2", z0: complex | None = None) -> float:
    """Relative change of F(a, b, c, z) after one loop around the image of ``curve``,
    measured by integrating the ODE (valid in logarithmic cases too).

    K2 uses a loop about z = 1 only; by default the largest change over the
    basepoints 1/2 and -1+i is reported, since the branch term (1-z)^(c-a-b)
    can be tiny near z = 1 when Re(c-a-b) is large.  K1 uses a loop about
    z = inf (default basepoint -2); it ignores the winding of the x^l factor
    and of the q-th roots in z, so it is only indicative for K1.
    """
    if curve == "K2":
        bases = (0.5, -1 + 1j) if z0 is None else (complex(z0),)
        paths = [loop_around_one(b) if abs(1 - b) < abs(b) else _k2_loop_small(b) for b in bases]
    elif curve == "K1":
        paths = [loop_around_infinity(-2.0 if z0 is None else z0)]
    else:
        raise ValueError(f"curve must be 'K1' or 'K2', got {curve!r}")
    p = u.params
    worst = 0.0
    for path in paths:
        before = ghf_eval(p, path.basepoint_z)
        after = continue_ode(p, path)
        worst = max(worst, abs(after - before) / abs(before))
    return worst
