"""Property-based invariants over randomized inputs."""

import cmath
import math

import pytest

try:
    from hypothesis import given, settings, strategies as st

    HAS_HYPOTHESIS = True
except ImportError:  # pragma: no cover
    HAS_HYPOTHESIS = False

from barnesg import (
    TerminantMethod,
    best_bound,
    c_of_phi,
    log_gamma,
    remainder_wide,
    sector_factor,
    terminant,
)

pytestmark = pytest.mark.skipif(not HAS_HYPOTHESIS, reason="hypothesis not installed")

PI = math.pi


@given(st.floats(min_value=-PI / 2, max_value=PI / 2))
@settings(max_examples=300, deadline=None)
def test_sector_factor_even_and_at_least_one(theta):
    f = sector_factor(theta)
    assert f >= 1.0
    assert f == sector_factor(-theta)


@given(st.floats(min_value=1e-3, max_value=2 * PI - 1e-3))
@settings(max_examples=300, deadline=None)
def test_c_of_phi_satisfies_defining_equation(phi):
    u = phi - PI
    c = c_of_phi(phi)
    residual = 0.5 * c * c - (1.0 + 1j * u - cmath.exp(1j * u))
    assert abs(residual) <= 1e-12 * max(1.0, abs(c) ** 2)


@given(
    st.floats(min_value=1.0, max_value=25.0),
    st.floats(min_value=-0.9 * PI, max_value=0.9 * PI),
)
@settings(max_examples=60, deadline=None)
def test_log_gamma_conjugate_reflection(r, theta):
    z = r * cmath.exp(1j * theta)
    assert abs(log_gamma(z.conjugate()) - log_gamma(z).conjugate()) <= 1e-12 * max(
        1.0, abs(log_gamma(z))
    )


@given(
    st.integers(min_value=1, max_value=12),
    st.floats(min_value=5.0, max_value=25.0),
    st.floats(min_value=-0.75 * PI, max_value=0.75 * PI),
)
@settings(max_examples=40, deadline=None)
def test_terminant_reflection(p, r, phase):
    w = r * cmath.exp(1j * phase)
    a = terminant(p, w.conjugate(), method=TerminantMethod.GAMMA_RECURRENCE)
    b = terminant(p, w, method=TerminantMethod.GAMMA_RECURRENCE)
    tol = max(1e-11, 10.0 * (a.est_error + b.est_error))
    assert abs(a.value + b.value.conjugate()) <= tol


@given(
    st.floats(min_value=2.0, max_value=10.0),
    st.floats(min_value=-0.8 * PI, max_value=0.8 * PI),
    st.integers(min_value=1, max_value=4),
)
@settings(max_examples=25, deadline=None)
def test_certified_bound_dominates_oracle(r, theta, n):
    z = r * cmath.exp(1j * theta)
    oracle = remainder_wide(z, n)
    bound = best_bound(z, n).bound
    assert abs(oracle.value) <= bound + oracle.est_error + 1e-10
