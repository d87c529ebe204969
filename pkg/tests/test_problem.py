import cmath
import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hypercauchy.errors import DivisionByZero
from hypercauchy.problem import (
    ProblemSpec,
    Root,
    alpha_roots,
    c_is_pole,
    char_distance,
    char_map,
    degeneracy_flags,
    derive_params,
    eval_z,
    k2_roots_t,
    k2_roots_x,
)

RAMIFIED = ProblemSpec(3, 0, 2, -1 / 3, -1, 0)
CUBIC = ProblemSpec(4, 1, 3, 1 / 3, -0.5, 0)
NULL = ProblemSpec(4, 1, 3, -1, -1, 0)
WAVE = ProblemSpec(2, 0, 2, 0, 0, 0)

complexes = st.builds(complex, st.floats(-10, 10), st.floats(-10, 10))


def test_spec_validation():
    with pytest.raises(ValueError):
        ProblemSpec(1, 0, 4, 0, 0, 0)
    with pytest.raises(ValueError):
        ProblemSpec(1.5, 0, 1, 0, 0, 0)
    with pytest.raises(ValueError):
        ProblemSpec(1, -1, 1, 0, 0, 0)
    with pytest.raises(ValueError):
        ProblemSpec(1, 0, 1, float("nan"), 0, 0)
    assert CUBIC.q == 3


def test_derive_params_ramified_example():
    dp = derive_params(RAMIFIED, 1, Root.plus)
    assert dp.q == 3
    assert dp.alpha == 0
    assert (dp.a, dp.b) == pytest.approx((-1 / 3, 1 / 3))
    assert dp.c == pytest.approx(1 / 3)


@pytest.mark.parametrize("l", range(7))
@pytest.mark.parametrize("gamma", [0, 0.5, 2.3 + 1j])
def test_derive_params_epd(l, gamma):
    spec = ProblemSpec(2, 0, 2, gamma, 0, 0)
    dp = derive_params(spec, l)
    pair = {complex(dp.a), complex(dp.b)}
    assert min(abs(v - (-l / 2)) for v in pair) < 1e-15
    assert min(abs(v - (1 - l) / 2) for v in pair) < 1e-15
    assert abs(dp.c - (gamma + 1) / 2) < 1e-15


def test_alpha_roots_quadratic():
    ap, am = alpha_roots(3, -9 / 4)
    assert ap == pytest.approx(1 + math.sqrt(13) / 2)
    assert am == pytest.approx(1 - math.sqrt(13) / 2)
    for r in (ap, am):
        assert abs(r * (r - 3 + 1) - 9 / 4) < 1e-12


@settings(max_examples=300, deadline=None)
@given(complexes, complexes)
def test_alpha_root_residual(A, B):
    if abs(A) > 10 or abs(B) > 10:
        return
    for r in alpha_roots(A, B):
        assert abs(r * (r - A + 1) + B) <= 1e-10 * (1 + abs(B))


@settings(max_examples=100, deadline=None)
@given(complexes, complexes, st.integers(0, 8), st.integers(1, 5), st.integers(0, 4))
def test_root_independent_quantities(A, B, l, q, n):
    spec = ProblemSpec(q, n, 2, 0.3, A, B)
    plus = derive_params(spec, l, "plus")
    minus = derive_params(spec, l, "minus")
    assert abs((plus.a + plus.b) - (minus.a + minus.b)) < 1e-12 * (1 + abs(A) + l)
    assert abs((plus.a + plus.b) - (1 - A - 2 * l) / q) < 1e-12 * (1 + abs(A) + l)
    assert abs((1 + plus.a + plus.b) - (q + 1 - A - 2 * l) / q) < 1e-12 * (1 + abs(A) + l)
    assert plus.c == minus.c == derive_params(spec, l + 1).c
    # swapping the root swaps a and b
    assert abs(plus.a - minus.b) < 1e-9 * (1 + abs(plus.a))


def test_char_map():
    cm = char_map(CUBIC)
    assert (cm.coefficient, cm.t_exponent, cm.x_exponent) == (1, 3, 3)
    cm = char_map(RAMIFIED)
    assert cm.coefficient == 9 / 4 and cm.t_exponent == 2 and cm.x_exponent == 3
    cm = char_map(WAVE)
    assert (cm.coefficient, cm.t_exponent, cm.x_exponent) == (1, 2, 2)


def test_eval_z():
    assert eval_z(char_map(CUBIC), 0, 1.7) == 0
    assert eval_z(char_map(RAMIFIED), 2 / 3, 1) == pytest.approx(1)
    assert eval_z(char_map(CUBIC), 1, 2) == 1 / 8
    with pytest.raises(DivisionByZero):
        eval_z(char_map(CUBIC), 1, 0)


def test_degeneracy_flags():
    dp = derive_params(NULL, 1)
    assert degeneracy_flags(NULL, dp).gamma_negative_integer
    dp = derive_params(RAMIFIED, 1)
    f = degeneracy_flags(RAMIFIED, dp)
    assert not f.cab_integer and not f.ab_integer and not f.c_integer
    dp = derive_params(WAVE, 2)
    f = degeneracy_flags(WAVE, dp)
    assert f.cab_integer and not f.ab_integer


def test_char_distance():
    assert char_distance(RAMIFIED, 2 / 3, 1) == pytest.approx(0, abs=1e-15)
    assert char_distance(CUBIC, 0, 1.5j) == pytest.approx(1.5 ** 3)
    assert char_distance(CUBIC, 1, 2) == 7


def test_k2_roots_lie_on_k2():
    spec = ProblemSpec(5, 2, 1, 0.1, 0.2, 0.3)
    for r in k2_roots_t(spec, 0.7 + 0.2j):
        assert char_distance(spec, r, 0.7 + 0.2j) < 1e-12
    for r in k2_roots_x(spec, 0.4 - 0.1j):
        assert char_distance(spec, 0.4 - 0.1j, r) < 1e-12
    assert len(k2_roots_t(spec, 1)) == 4 and len(k2_roots_x(spec, 1)) == spec.q


def test_c_pole_detection():
    # c = (n + gamma + 1)/(n + 2) = 0 for gamma = -(n + 1)
    assert c_is_pole(ProblemSpec(2, 1, 2, -2, 0, 0))
    assert not c_is_pole(ProblemSpec(2, 1, 2, -1, 0, 0))
    assert cmath.isfinite(derive_params(ProblemSpec(2, 1, 2, -2, 0, 0), 1).c)
