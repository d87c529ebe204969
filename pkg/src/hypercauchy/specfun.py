"""Complex gamma, Pochhammer symbols and the Gauss hypergeometric function.

The hypergeometric function is evaluated on its principal branch (the plane
cut along [1, +inf)) by dispatching between the defining series, the Pfaff
transformation and the two Kummer connection formulas about z = 1 and
z = inf.  Points where every expansion converges slowly (around
exp(+-i pi/3) and near z = 2) are reached by Taylor transport of the ODE from
the series disk.  Non-principal branches are described by a ``BranchContext``
(a word of loops around z = 1 and z = inf).
"""

from __future__ import annotations

import cmath
import enum
import math
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field

from . import _taylor
from .errors import BasepointInvalid, DegenerateParams, NoConvergence, PoleError, SingularPoint

TAU_INT = 1e-9
MAX_TERMS = 10_000

SERIES_RADIUS = 0.5
PFAFF_RADIUS = 0.5
# slowest convergence ratio accepted for any expansion before falling back to
# Taylor transport
ROUTE_LIMIT = 0.85

_LANCZOS_G = 7
_LANCZOS = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)
_HALF_LOG_2PI = 0.5 * math.log(2 * math.pi)


def is_integer(z: complex, tol: float = TAU_INT) -> bool:
    z = complex(z)
    return abs(z.imag) <= tol and abs(z.real - round(z.real)) <= tol


def is_nonpos_integer(z: complex, tol: float = TAU_INT) -> bool:
    """Membership in -N = {0, -1, -2, ...}."""
    return is_integer(z, tol) and round(complex(z).real) <= 0


def _clean(z: complex) -> complex | float:
    return z.real if z.imag == 0 else z


# ---------------------------------------------------------------------------
# gamma family


def _lanczos_sum(z: complex) -> tuple[complex, complex]:
    z = z - 1
    x = _LANCZOS[0]
    for i in range(1, len(_LANCZOS)):
        x += _LANCZOS[i] / (z + i)
    return x, z + _LANCZOS_G + 0.5


def gamma(z: complex) -> complex | float:
    """Complex gamma function (Lanczos, g=7, with reflection for Re z < 1/2).

    Raises PoleError at the non-positive integers.
    """
    z = complex(z)
    if is_nonpos_integer(z):
        raise PoleError(f"gamma has a pole at {z}")
    if z.real < 0.5:
        return _clean(math.pi / (cmath.sin(math.pi * z) * complex(gamma(1 - z))))
    if z.imag == 0 and z.real == round(z.real) and z.real <= 171:
        return float(math.factorial(int(z.real) - 1))
    x, t = _lanczos_sum(z)
    return _clean(cmath.sqrt(2 * math.pi) * cmath.exp((z - 0.5) * cmath.log(t) - t) * x)


def loggamma(z: complex) -> complex:
    """A logarithm of gamma(z); only exp(loggamma(z)) is meaningful (the imaginary
    part is not normalised to the principal branch)."""
    z = complex(z)
    if is_nonpos_integer(z):
        raise PoleError(f"gamma has a pole at {z}")
    if z.real < 0.5:
        return math.log(math.pi) - cmath.log(cmath.sin(math.pi * z)) - loggamma(1 - z)
    x, t = _lanczos_sum(z)
    return _HALF_LOG_2PI + (z - 0.5) * cmath.log(t) - t + cmath.log(x)


def rgamma(z: complex) -> complex:
    """1/gamma(z), exactly zero at the poles of gamma."""
    if is_nonpos_integer(z):
        return 0j
    return cmath.exp(-loggamma(z))


def pochhammer(lam: complex, i: int) -> complex | float:
    """Rising factorial lam (lam+1) ... (lam+i-1) by direct product."""
    if i < 0:
        raise ValueError("pochhammer index must be non-negative")
    out: complex | float = 1.0
    for k in range(i):
        out *= lam + k
    return out


def gamma_ratio(num: Iterable[complex], den: Iterable[complex]) -> complex:
    """prod gamma(num) / prod gamma(den); zero when a denominator sits on a pole."""
    num = list(num)
    den = list(den)
    for d in den:
        if is_nonpos_integer(d):
            return 0j
    for n_ in num:
        if is_nonpos_integer(n_):
            raise PoleError(f"gamma({complex(n_)}) in numerator is a pole")
    return cmath.exp(sum(loggamma(n_) for n_ in num) - sum(loggamma(d) for d in den))


# ---------------------------------------------------------------------------
# hypergeometric function


@dataclass(frozen=True)
class GhfParams:
    a: complex
    b: complex
    c: complex

    def __post_init__(self):
        for name in ("a", "b", "c"):
            object.__setattr__(self, name, complex(getattr(self, name)))
        if is_nonpos_integer(self.c):
            raise PoleError(f"F(a,b,c,z) is undefined for c = {self.c} in -N")

    def swapped(self) -> GhfParams:
        return GhfParams(self.b, self.a, self.c)

    def terminating_degree(self) -> int | None:
        """N when a or b equals -N (the smaller N when both do), else None."""
        degs = [-round(v.real) for v in (self.a, self.b) if is_nonpos_integer(v)]
        return min(degs) if degs else None


def _as_params(p: GhfParams | Sequence[complex]) -> GhfParams:
    return p if isinstance(p, GhfParams) else GhfParams(*p)


def _snap(v: complex) -> complex:
    return complex(round(v.real), 0.0) if is_integer(v) else v


def ghf_series(p: GhfParams | Sequence[complex], z: complex, tol: float = 2.0 ** -53) -> complex:
    """Partial sum of the hypergeometric series at z.

    Terminating series (a or b in -N) are summed exactly.  Otherwise summation
    stops once two consecutive terms are below tol*|sum| and the geometric tail
    bound from the exact term ratio is also below tol*|sum|.
    """
    p = _as_params(p)
    z = complex(z)
    a, b, c = p.a, p.b, p.c
    deg = p.terminating_degree()
    if deg is not None:
        a, b = (_snap(a), b) if is_nonpos_integer(a) and -round(a.real) == deg else (_snap(b), a)
        term = 1 + 0j
        total = term
        for i in range(deg):
            term *= (a + i) * (b + i) / ((c + i) * (i + 1)) * z
            total += term
        return total
    term = 1 + 0j
    total = term
    small = 0
    for i in range(MAX_TERMS):
        ratio = (a + i) * (b + i) / ((c + i) * (i + 1)) * z
        term *= ratio
        total += term
        scale = abs(total)
        if abs(term) <= tol * scale:
            small += 1
        else:
            small = 0
        if small >= 2:
            r_next = abs((a + i + 1) * (b + i + 1) / ((c + i + 1) * (i + 2)) * z)
            if r_next < 1 and abs(term) * r_next / (1 - r_next) <= tol * scale:
                return total
        if term == 0:
            return total
    raise NoConvergence(f"hypergeometric series at z={z} not converged in {MAX_TERMS} terms")


def ghf_derivative(p: GhfParams | Sequence[complex], z: complex) -> complex:
    """d/dz F(a,b,c,z) = (ab/c) F(a+1,b+1,c+1,z) on the principal branch."""
    p = _as_params(p)
    if p.a == 0 or p.b == 0:
        return 0j
    return p.a * p.b / p.c * ghf_eval(GhfParams(p.a + 1, p.b + 1, p.c + 1), z)


@dataclass(frozen=True)
class ConnectionConstants:
    """Kummer connection constants; None marks a constant that is infinite."""
    A1: complex | None
    A2: complex | None
    A3: complex | None
    A4: complex | None

    def require(self, *names: str) -> tuple[complex, ...]:
        out = []
        for name in names:
            v = getattr(self, name)
            if v is None:
                raise DegenerateParams(f"connection constant {name} is singular")
            out.append(v)
        return tuple(out)


_CONSTANT_FORMULAS = {
    # name: (numerator args, denominator args) as functions of (a, b, c)
    "A1": (lambda a, b, c: (c, c - a - b), lambda a, b, c: (c - a, c - b)),
    "A2": (lambda a, b, c: (c, a + b - c), lambda a, b, c: (a, b)),
    "A3": (lambda a, b, c: (c, b - a), lambda a, b, c: (b, c - a)),
    "A4": (lambda a, b, c: (c, a - b), lambda a, b, c: (a, c - b)),
}


def connection_constants(p: GhfParams | Sequence[complex],
                         names: Sequence[str] = ("A1", "A2", "A3", "A4"),
                         strict: bool = True) -> ConnectionConstants:
    """Constants A1..A4 of the connection formulas about z = 1 and z = inf.

    With ``strict`` any singular requested constant raises DegenerateParams
    naming it; otherwise it is stored as None.  Constants not requested are None.
    """
    p = _as_params(p)
    vals: dict[str, complex | None] = {k: None for k in _CONSTANT_FORMULAS}
    for name in names:
        num, den = _CONSTANT_FORMULAS[name]
        try:
            vals[name] = gamma_ratio(num(p.a, p.b, p.c), den(p.a, p.b, p.c))
        except PoleError as exc:
            if strict:
                raise DegenerateParams(f"connection constant {name} is singular: {exc}") from exc
    return ConnectionConstants(**vals)


def _one_minus(z: complex) -> complex:
    # keeps the sign of a zero imaginary part, so 1 - (x + 0j) lies below the
    # negative real axis for x > 1
    return complex(1 - z.real, -z.imag)


def _principal_z(z: complex) -> complex:
    # points on the cut take the limit from Im z > 0
    if z.imag == 0 and z.real > 1:
        return complex(z.real, 0.0)
    return z


def _one_basis(p: GhfParams, z: complex) -> tuple[complex, complex]:
    """Local solutions at z = 1: F(a,b,1+a+b-c,1-z) and (1-z)^s F(c-a,c-b,s+1,1-z)."""
    a, b, c = p.a, p.b, p.c
    s = c - a - b
    w = _one_minus(z)
    phi1 = ghf_eval(GhfParams(a, b, 1 - s), w)
    phi2 = cmath.exp(s * cmath.log(w)) * ghf_eval(GhfParams(c - a, c - b, s + 1), w)
    return phi1, phi2


def _one_basis_derivative(p: GhfParams, z: complex) -> tuple[complex, complex]:
    a, b, c = p.a, p.b, p.c
    s = c - a - b
    w = _one_minus(z)
    d1 = -ghf_derivative(GhfParams(a, b, 1 - s), w)
    g = GhfParams(c - a, c - b, s + 1)
    logw = cmath.log(w)
    d2 = -(s * cmath.exp((s - 1) * logw) * ghf_eval(g, w) + cmath.exp(s * logw) * ghf_derivative(g, w))
    return d1, d2


def _inf_basis(p: GhfParams, z: complex) -> tuple[complex, complex]:
    """Local solutions at z = inf: (1-z)^-a F(a,c-b,1+a-b,1/(1-z)) and the a<->b twin."""
    a, b, c = p.a, p.b, p.c
    w = _one_minus(z)
    v = 1 / w
    logw = cmath.log(w)
    psi3 = cmath.exp(-a * logw) * ghf_eval(GhfParams(a, c - b, 1 + a - b), v)
    psi4 = cmath.exp(-b * logw) * ghf_eval(GhfParams(b, c - a, 1 - a + b), v)
    return psi3, psi4


def _inf_basis_derivative(p: GhfParams, z: complex) -> tuple[complex, complex]:
    a, b, c = p.a, p.b, p.c
    w = _one_minus(z)
    v = 1 / w
    logw = cmath.log(w)
    out = []
    for e, g in ((a, GhfParams(a, c - b, 1 + a - b)), (b, GhfParams(b, c - a, 1 - a + b))):
        # d/dz [w^-e H(1/w)] = e w^(-e-1) H + w^(-e-2) H'
        out.append(e * cmath.exp((-e - 1) * logw) * ghf_eval(g, v)
                   + cmath.exp((-e - 2) * logw) * ghf_derivative(g, v))
    return out[0], out[1]


def _require_nondegenerate(value: complex, what: str) -> None:
    if is_integer(value):
        raise DegenerateParams(f"{what} = {value} is an integer (logarithmic case)")


def ghf_route(p: GhfParams | Sequence[complex], z: complex, route: str) -> complex:
    """Evaluate the principal branch by one named route.

    ``route`` is one of "series", "pfaff", "F1" (expansion about z=1), "F2"
    (expansion about z=inf) or "taylor".  No region checks are made beyond
    what each expansion needs to converge.
    """
    p = _as_params(p)
    z = _principal_z(complex(z))
    a, b, c = p.a, p.b, p.c
    if route == "series":
        return ghf_series(p, z)
    if route == "pfaff":
        w = z / (z - 1)
        logw = cmath.log(_one_minus(z))
        if is_nonpos_integer(a) and not is_nonpos_integer(c - a):
            return cmath.exp(-a * logw) * ghf_series(GhfParams(a, c - b, c), w)
        return cmath.exp(-b * logw) * ghf_series(GhfParams(c - a, b, c), w)
    if route == "F1":
        _require_nondegenerate(c - a - b, "c-a-b")
        A1, A2 = connection_constants(p, ("A1", "A2")).require("A1", "A2")
        s = c - a - b
        w = _one_minus(z)
        out = 0j
        if A1 != 0:
            out += A1 * ghf_series(GhfParams(a, b, 1 - s), w)
        if A2 != 0:
            out += A2 * cmath.exp(s * cmath.log(w)) * ghf_series(GhfParams(c - a, c - b, s + 1), w)
        return out
    if route == "F2":
        _require_nondegenerate(a - b, "a-b")
        A3, A4 = connection_constants(p, ("A3", "A4")).require("A3", "A4")
        w = _one_minus(z)
        v = 1 / w
        logw = cmath.log(w)
        out = 0j
        if A3 != 0:
            out += A3 * cmath.exp(-a * logw) * ghf_series(GhfParams(a, c - b, 1 + a - b), v)
        if A4 != 0:
            out += A4 * cmath.exp(-b * logw) * ghf_series(GhfParams(b, c - a, 1 - a + b), v)
        return out
    if route == "taylor":
        return _taylor_value(p, z)
    raise ValueError(f"unknown route {route!r}")


def _taylor_value(p: GhfParams, z: complex) -> complex:
    if abs(z) <= SERIES_RADIUS:
        return ghf_series(p, z)
    arg = cmath.phase(z)
    if abs(arg) >= math.pi / 6:
        path = [SERIES_RADIUS * z / abs(z), z]
    else:
        # go round z = 1 on the side that matches the principal branch
        s = -1.0 if z.imag < 0 else 1.0
        path = [SERIES_RADIUS * 1j * s, complex(z.real, s), z]
    z0 = path[0]
    y0 = ghf_series(p, z0)
    dy0 = 0j if (p.a == 0 or p.b == 0) else p.a * p.b / p.c * ghf_series(GhfParams(p.a + 1, p.b + 1, p.c + 1), z0)
    y, _ = _taylor.transport(p.a, p.b, p.c, path, y0, dy0, margin=1e-8)
    return y


def choose_route(p: GhfParams | Sequence[complex], z: complex) -> str:
    """Route used by ``ghf_eval`` on the principal branch."""
    p = _as_params(p)
    z = _principal_z(complex(z))
    if p.terminating_degree() is not None:
        return "series"
    rz = abs(z)
    if rz <= SERIES_RADIUS:
        return "series"
    rw = abs(z / (z - 1))
    if rw <= PFAFF_RADIUS:
        return "pfaff"
    r1 = abs(1 - z)
    route, arg = ("F1", r1) if r1 < 1 else ("F2", 1 / r1)
    degenerate = is_integer(p.c - p.a - p.b) if route == "F1" else is_integer(p.a - p.b)
    if arg <= ROUTE_LIMIT and not degenerate:
        return route
    best = min((rz, "series"), (rw, "pfaff"))
    if best[0] <= ROUTE_LIMIT:
        return best[1]
    return "taylor"


def _log_term_mass(p: GhfParams, z: complex) -> float:
    """log of sum |term_i| of a terminating series: its rounding-error scale."""
    a, b, c = p.a, p.b, p.c
    deg = p.terminating_degree()
    a, b = (_snap(a), b) if is_nonpos_integer(a) and -round(a.real) == deg else (_snap(b), a)
    log_term = 0.0
    log_total = 0.0
    log_z = math.log(abs(z)) if z != 0 else -math.inf
    for i in range(deg):
        ratio = abs((a + i) * (b + i) / ((c + i) * (i + 1)))
        if ratio == 0 or log_z == -math.inf:
            break
        log_term += math.log(ratio) + log_z
        hi, lo = max(log_total, log_term), min(log_total, log_term)
        log_total = hi + math.log1p(math.exp(lo - hi))
    return log_total


def _terminating_value(p: GhfParams, z: complex) -> complex:
    # of the polynomial in z and its Pfaff form in z/(z-1), sum the one whose
    # terms have the smaller total magnitude: cancellation costs accuracy in
    # proportion to that mass
    a, b, c = p.a, p.b, p.c
    if z == 1:
        return ghf_series(p, z)
    deg = p.terminating_degree()
    w = z / (z - 1)
    n_a = is_nonpos_integer(a) and -round(a.real) == deg
    pf = GhfParams(_snap(a), c - b, c) if n_a else GhfParams(c - a, _snap(b), c)
    direct = _log_term_mass(p, z)
    via_pfaff = deg * math.log(abs(1 - z)) + _log_term_mass(pf, w)
    if direct <= via_pfaff:
        return ghf_series(p, z)
    # (1-z)^N is an integer power: no branch question
    return (1 - z) ** deg * ghf_series(pf, w)


@enum.unique
class Loop(str, enum.Enum):
    """Generators of loops in the z-plane.

    ``around_1_pos`` encircles z = 1 counter-clockwise.  ``around_inf_pos``
    encircles z = inf positively as seen from infinity, i.e. a large clockwise
    circle in the z-plane; it multiplies (1-z)^(-a) by exp(2 pi i a).
    """
    around_1_pos = "around_1_pos"
    around_1_neg = "around_1_neg"
    around_inf_pos = "around_inf_pos"
    around_inf_neg = "around_inf_neg"

    @property
    def centre(self) -> str:
        return "one" if self.name.startswith("around_1") else "inf"

    @property
    def sign(self) -> int:
        return 1 if self.name.endswith("pos") else -1

    @property
    def inverse(self) -> Loop:
        return Loop(self.value[:-3] + ("neg" if self.sign > 0 else "pos"))


@dataclass(frozen=True)
class BranchContext:
    """Branch of a multivalued value, as a word of loops applied at the
    evaluation point.  The empty word is the principal branch.

    Loops about z = 1 are based in the slit plane C minus (-inf,0] and [1,inf);
    loops about z = inf in C minus [0,inf).  Both slit planes are simply
    connected, which fixes the homotopy class of each loop.  Words mixing the
    two generators therefore need a point off the real axis (points on
    (1, inf) count as lying just above it).
    """
    loop_word: tuple[Loop, ...] = field(default_factory=tuple)

    def __post_init__(self):
        object.__setattr__(self, "loop_word", tuple(Loop(w) for w in self.loop_word))

    @property
    def is_principal(self) -> bool:
        return not self.loop_word

    def then(self, *loops: Loop | str) -> BranchContext:
        return BranchContext(self.loop_word + tuple(Loop(w) for w in loops))

    def reduced(self) -> BranchContext:
        """Free reduction: cancels adjacent loop/inverse pairs."""
        out: list[Loop] = []
        for w in self.loop_word:
            if out and out[-1] == w.inverse:
                out.pop()
            else:
                out.append(w)
        return BranchContext(tuple(out))


PRINCIPAL = BranchContext()


def _in_one_region(z: complex) -> bool:
    if z.imag != 0:
        return True
    return 0 < z.real < 1 or z.real > 1


def _in_inf_region(z: complex) -> bool:
    if z.imag != 0:
        return True
    return z.real < 0 or z.real > 1


def _solve2(m: tuple[tuple[complex, complex], tuple[complex, complex]],
            rhs: tuple[complex, complex]) -> tuple[complex, complex]:
    (p, q), (r, s) = m
    det = p * s - q * r
    if det == 0:
        raise ArithmeticError("singular Wronskian")
    return (rhs[0] * s - q * rhs[1]) / det, (p * rhs[1] - r * rhs[0]) / det


def branch_components(p: GhfParams | Sequence[complex], z: complex, branch: BranchContext
                      ) -> tuple[str, tuple[complex, complex], tuple[complex, complex]]:
    """Coefficients of the branch in a local basis at z, plus the basis values.

    Returns (basis_name, coefficients, basis_values) where basis_name is "one"
    (Kummer solutions about z = 1) or "inf" (about z = inf).  The principal
    branch starts from the connection constants A1, A2 (resp. A3, A4).
    """
    p = _as_params(p)
    z = _principal_z(complex(z))
    word = branch.reduced().loop_word
    centres = [w.centre for w in word] or ["one" if _in_one_region(z) else "inf"]
    first = centres[0]
    for centre in set(centres):
        ok = _in_one_region(z) if centre == "one" else _in_inf_region(z)
        if not ok:
            raise BasepointInvalid(f"z = {z} is not a valid basepoint for loops about "
                                   f"{'z=1' if centre == 'one' else 'z=inf'}")
    s = p.c - p.a - p.b

    def start(centre: str) -> tuple[complex, complex]:
        if centre == "one":
            _require_nondegenerate(s, "c-a-b")
            return connection_constants(p, ("A1", "A2")).require("A1", "A2")
        _require_nondegenerate(p.a - p.b, "a-b")
        return connection_constants(p, ("A3", "A4")).require("A3", "A4")

    def wronskian(centre: str):
        if centre == "one":
            v, d = _one_basis(p, z), _one_basis_derivative(p, z)
        else:
            v, d = _inf_basis(p, z), _inf_basis_derivative(p, z)
        return (v, d)

    basis = first
    coef = start(first)
    for w in word:
        if w.centre != basis:
            (v0, d0) = wronskian(basis)
            if w.centre == "one":
                _require_nondegenerate(s, "c-a-b")
            else:
                _require_nondegenerate(p.a - p.b, "a-b")
            (v1, d1) = wronskian(w.centre)
            g = coef[0] * v0[0] + coef[1] * v0[1]
            dg = coef[0] * d0[0] + coef[1] * d0[1]
            coef = _solve2(((v1[0], v1[1]), (d1[0], d1[1])), (g, dg))
            basis = w.centre
        if basis == "one":
            coef = (coef[0], coef[1] * cmath.exp(2j * math.pi * w.sign * s))
        else:
            coef = (coef[0] * cmath.exp(2j * math.pi * w.sign * p.a),
                    coef[1] * cmath.exp(2j * math.pi * w.sign * p.b))
    values = _one_basis(p, z) if basis == "one" else _inf_basis(p, z)
    return basis, coef, values


def ghf_eval(p: GhfParams | Sequence[complex], z: complex, branch: BranchContext = PRINCIPAL) -> complex:
    """F(a, b, c, z) on the branch selected by ``branch`` (principal by default).

    On the cut z in (1, inf) the principal value is the limit from Im z > 0.
    Raises SingularPoint at z = 1 unless the series terminates.
    """
    p = _as_params(p)
    z = _principal_z(complex(z))
    deg = p.terminating_degree()
    if deg is not None:
        # polynomial: single-valued, every loop acts trivially
        return _terminating_value(p, z)
    if z == 1:
        raise SingularPoint("z = 1 is a singular point of F")
    if z == 0:
        if branch.reduced().is_principal:
            return 1 + 0j
        raise BasepointInvalid("loops cannot be based at z = 0")
    if not branch.reduced().is_principal:
        _, coef, values = branch_components(p, z, branch)
        return coef[0] * values[0] + coef[1] * values[1]
    return ghf_route(p, z, choose_route(p, z))


def dalembert_identity_check(a: complex, z: complex) -> float:
    """|F(a, a+1/2, 1/2, z^2) - ((1+z)^(-2a) + (1-z)^(-2a))/2| for |z| < 1."""
    a = complex(a)
    z = complex(z)
    lhs = ghf_eval(GhfParams(a, a + 0.5, 0.5), z * z)
    rhs = 0.5 * (cmath.exp(-2 * a * cmath.log(1 + z)) + cmath.exp(-2 * a * cmath.log(1 - z)))
    return abs(lhs - rhs)
