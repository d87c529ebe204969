import cmath
import math
import random

import mpmath
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hypercauchy.errors import DegenerateParams, PoleError, SingularPoint
from hypercauchy.specfun import (
    PRINCIPAL,
    GhfParams,
    choose_route,
    connection_constants,
    dalembert_identity_check,
    gamma,
    gamma_ratio,
    ghf_derivative,
    ghf_eval,
    ghf_route,
    ghf_series,
    loggamma,
    pochhammer,
    rgamma,
)
from hypercauchy.verify import contour_derivative
from support import random_ghf_params


def rel(a, b):
    return abs(a - b) / max(abs(b), 1e-300)


def mp_ghf(a, b, c, z):
    # mpmath takes the limit from below on the cut; nudge real z > 1 upwards
    z = complex(z)
    if z.imag == 0 and z.real > 1:
        z = complex(z.real, 1e-13)
    return complex(mpmath.hyp2f1(a, b, c, z))


# gamma family


def test_gamma_known_values():
    assert gamma(1) == 1
    assert gamma(5) == 24
    assert rel(gamma(0.5), math.sqrt(math.pi)) < 1e-14
    assert rel(gamma(-0.5), -2 * math.sqrt(math.pi)) < 1e-13


def test_gamma_poles():
    for z in (0, -1, -7, -3 + 1e-12j):
        with pytest.raises(PoleError):
            gamma(z)
    assert rgamma(-4) == 0


def test_gamma_against_mpmath():
    rng = random.Random(1)
    for _ in range(200):
        z = complex(rng.uniform(-20, 30), rng.uniform(-20, 20))
        if abs(z) > 50 or min(abs(z - k) for k in range(-25, 1)) < 0.05:
            continue
        assert rel(complex(gamma(z)), complex(mpmath.gamma(z))) < 1e-12


@settings(max_examples=100, deadline=None)
@given(st.floats(-10, 10), st.floats(-3, 3))
def test_gamma_reflection(re, im):
    z = complex(re, im)
    if abs(z) > 10 or min(abs(z - k) for k in range(-11, 12)) < 0.1:
        return
    lhs = gamma(z) * gamma(1 - z)
    rhs = math.pi / cmath.sin(math.pi * z)
    assert rel(lhs, rhs) < 1e-10


def test_loggamma_real_part_matches():
    for z in (0.3 + 2j, 12.5 - 4j, -2.5 + 0.5j):
        assert abs(cmath.exp(loggamma(z)) - gamma(z)) < 1e-12 * abs(gamma(z))


def test_pochhammer():
    assert pochhammer(3.7 + 1j, 0) == 1
    assert pochhammer(1, 4) == 24
    assert pochhammer(-3, 5) == 0
    assert rel(pochhammer(0.5, 3), 0.5 * 1.5 * 2.5) < 1e-15


def test_gamma_ratio_zero_and_pole():
    assert gamma_ratio((1.5,), (-2,)) == 0
    with pytest.raises(PoleError):
        gamma_ratio((-1,), (2,))
    assert rel(gamma_ratio((2.5,), (1.5,)), 1.5) < 1e-14


# series and evaluation


def test_series_trivial_and_terminating():
    assert ghf_series((0.3, 0.7, 1.2), 0) == 1
    for z in (0.3, -5 + 2j, 40):
        assert rel(ghf_series((-1, -0.5, 7 / 9), z), 1 + 9 / 14 * z) < 1e-14


def test_series_binomial_case():
    assert abs(ghf_series((-1 / 3, 1 / 3, 1 / 3), 0.5) - 0.5 ** (1 / 3)) < 1e-14
    assert abs(0.5 ** (1 / 3) - 0.79370053) < 1e-8


def test_c_pole_rejected():
    with pytest.raises(PoleError):
        GhfParams(1, 2, -3)


def test_eval_at_zero_and_one():
    assert ghf_eval((0.2, 0.4, 1.3), 0) == 1
    with pytest.raises(SingularPoint):
        ghf_eval((0.2, 0.4, 1.3), 1)


def test_route_f1_matches_slow_series():
    p = GhfParams(-1 / 3, 1 / 3, 7 / 9)
    slow = ghf_series(p, 0.9, tol=1e-17)
    assert rel(ghf_route(p, 0.9, "F1"), slow) < 1e-8


def test_route_f2_matches_pfaff():
    p = GhfParams(-1 / 3, 1 / 3, 7 / 9)
    assert abs(-3 / (-3 - 1)) == 0.75
    assert rel(ghf_route(p, -3, "F2"), ghf_route(p, -3, "pfaff")) < 1e-8


def test_dispatch_regions():
    p = GhfParams(0.3, 0.4, 1.45)
    assert choose_route(p, 0.3) == "series"
    assert choose_route(p, -0.8) == "pfaff"
    assert choose_route(p, 0.8) == "F1"
    assert choose_route(p, -10 + 3j) == "F2"


def test_degenerate_connection_routes_raise():
    with pytest.raises(DegenerateParams):
        ghf_route((0.25, 0.75, 2), 0.9, "F1")
    with pytest.raises(DegenerateParams):
        ghf_route((0.25, 1.25, 0.6), -9, "F2")


def test_eval_against_mpmath_over_plane():
    rng = random.Random(7)
    worst = 0.0
    for _ in range(60):
        a, b, c = random_ghf_params(rng)
        for z in (0.3 + 0.1j, 0.9 - 0.2j, -4 + 1j, 3 + 2j, 0.5 + 0.85j, 2.0 - 0.1j, 30 + 0j, -0.7 + 0j):
            worst = max(worst, rel(ghf_eval((a, b, c), z), mp_ghf(a, b, c, z)))
    assert worst < 1e-8


def test_cut_is_limit_from_above():
    p = (0.3, 0.45, 1.2)
    on = ghf_eval(p, 2.5)
    above = ghf_eval(p, complex(2.5, 1e-12))
    below = ghf_eval(p, complex(2.5, -1e-12))
    assert rel(on, above) < 1e-9
    assert rel(on, below) > 1e-3


def test_eval_with_degenerate_connection_still_evaluates():
    # a = 1/2, b = 1: a - b is a half-integer, but c - a - b = 0 for c = 3/2
    p = (0.5, 1.0, 1.5)
    for z in (0.9, -3.0, 4 + 1j):
        assert rel(ghf_eval(p, z), mp_ghf(*p, z)) < 1e-9


def test_principal_branch_default():
    p = (0.2, 0.3, 0.9)
    assert ghf_eval(p, 0.4 + 0.4j) == ghf_eval(p, 0.4 + 0.4j, PRINCIPAL)


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 10**6))
def test_symmetry_in_a_b(seed):
    rng = random.Random(seed)
    a, b, c = random_ghf_params(rng)
    z = complex(rng.uniform(-3, 3), rng.uniform(-3, 3))
    if abs(z - 1) < 0.1:
        return
    assert rel(ghf_eval((a, b, c), z), ghf_eval((b, a, c), z)) < 1e-12


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**6))
def test_pfaff_consistency(seed):
    rng = random.Random(seed)
    a, b, c = random_ghf_params(rng)
    z = cmath.rect(0.4 * rng.random(), rng.uniform(-math.pi, math.pi))
    assert rel(ghf_route((a, b, c), z, "pfaff"), ghf_route((a, b, c), z, "series")) < 1e-10


def test_f1_consistency_on_real_interval():
    rng = random.Random(3)
    for _ in range(20):
        a, b, c = random_ghf_params(rng)
        z = rng.uniform(0.55, 0.95)
        slow = ghf_series((a, b, c), z, tol=1e-17)
        assert rel(ghf_route((a, b, c), z, "F1"), slow) < 1e-8


def test_derivative_relation():
    rng = random.Random(5)
    for _ in range(10):
        p = random_ghf_params(rng)
        z0 = complex(rng.uniform(-0.3, 0.3), rng.uniform(-0.3, 0.3))
        num = contour_derivative(lambda z: ghf_eval(p, z), z0, 1, 0.1)
        assert rel(num, ghf_derivative(p, z0)) < 1e-8


# connection constants


def test_connection_constant_values():
    k = connection_constants((-1, -0.5, 0.5), ("A3",))
    assert rel(k.A3, -1) < 1e-13
    k = connection_constants((-1 / 3, 1 / 3, 1 / 3), ("A1", "A2"))
    assert abs(k.A1) == 0
    assert rel(k.A2, 1) < 1e-13


def test_connection_constants_swap():
    p = (0.3 + 0.1j, -0.45, 1.15)
    k = connection_constants(p)
    ks = connection_constants((p[1], p[0], p[2]))
    assert rel(k.A3, ks.A4) < 1e-13 and rel(k.A4, ks.A3) < 1e-13


def test_connection_constant_singular_named():
    # c - a - b = 1 puts gamma(a + b - c) = gamma(-1) in A2
    with pytest.raises(DegenerateParams, match="A2"):
        connection_constants((0.25, 0.75, 2.0), ("A2",))
    k = connection_constants((0.25, 0.75, 2.0), strict=False)
    assert k.A2 is None and k.A1 is not None


# the doubling identity behind D'Alembert's formula


def test_dalembert_identity_examples():
    assert dalembert_identity_check(-1, 0.3) < 1e-15
    assert dalembert_identity_check(0.25, 0.5) < 1e-10
    assert dalembert_identity_check(-0.5, 0.7 + 0.1j) < 1e-15


@settings(max_examples=50, deadline=None)
@given(st.sampled_from([0.25, -0.25, 0.5, -0.5, 1.3]), st.floats(0, 0.8), st.floats(-math.pi, math.pi))
def test_dalembert_identity_property(a, r, th):
    assert dalembert_identity_check(a, cmath.rect(r, th)) < 1e-10
