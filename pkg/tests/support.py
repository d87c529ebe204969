"""Shared generators for randomized suites (seeded, so runs are repeatable)."""

import cmath
import random

from hypercauchy.problem import ProblemSpec, derive_params

SEED = 20240611
GAP = 1e-3


def _near_integer(v, gap=GAP):
    return abs(v.imag) < gap and abs(v.real - round(v.real)) < gap


def _cplx(rng, r):
    rad = r * rng.random() ** 0.5
    return cmath.rect(rad, rng.uniform(-cmath.pi, cmath.pi))


def random_specs(count, seed=SEED, l_max=5):
    """Admissible specs: integer m, n, p <= 6 with q > 0, |gamma|, |A|, |B| <= 3,
    and every l <= l_max kept off the integer lattices for c, c-a-b, a-b."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        m, n, p = rng.randint(0, 6), rng.randint(0, 6), rng.randint(0, 6)
        if m - p + 2 <= 0:
            continue
        spec = ProblemSpec(m, n, p, _cplx(rng, 3), _cplx(rng, 3), _cplx(rng, 3))
        if _near_integer(spec.gamma):
            continue
        ok = True
        for l in range(l_max + 1):
            for root in ("plus", "minus"):
                dp = derive_params(spec, l, root)
                if any(_near_integer(v) for v in (dp.c, dp.c - dp.a - dp.b, dp.a - dp.b, dp.a, dp.b)):
                    ok = False
        if ok:
            out.append(spec)
    return out


# z-images of the standard panel: four points in |z| <= 0.4, one in the region of
# the z = 1 connection formula
PANEL_Z = (0.2 + 0j, 0.35j, -0.3 + 0j, 0.25 + 0.25j, 0.62 + 0.3j)


def point_for_z(spec, z, x=1 + 0j):
    """A (t, x) with z(t, x) = z; picks the principal (n+2)-th root."""
    coef = (spec.q / (spec.n + 2)) ** 2
    t = (z * x ** spec.q / coef) ** (1 / (spec.n + 2))
    return t, x


def panel(spec, x=cmath.exp(0.3j)):
    return [point_for_z(spec, z, x) for z in PANEL_Z]


def random_ghf_params(rng, gap=0.05, size=2.0):
    """(a, b, c) complex with c, c-a-b, a-b, a, b all at least ``gap`` from integers."""
    while True:
        a, b, c = (complex(rng.uniform(-size, size), rng.uniform(-size / 2, size / 2)) for _ in range(3))
        vals = (a, b, c, c - a - b, a - b, c - a, c - b)
        if not any(_near_integer(v, gap) for v in vals):
            return a, b, c

