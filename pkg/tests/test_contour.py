import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from zetaline.contour import (
    DEFAULT_CONTOUR,
    ContourSpec,
    entire_e_axis,
    entire_e_line,
    line_integrand,
    residue_at,
    residue_partial_sum,
    zeta,
)
from zetaline.errors import ContractViolation, DomainError, PoleAtOne
from zetaline.oracle import zeta_euler_maclaurin
from zetaline.quadrature import QuadraturePlan

# reference values carried to 20 digits and rounded here once
ZETA_HALF = -1.4603545088095868129
ZETA_3 = 1.2020569031595942854
ZETA_HALF_3I = complex(0.53273667097423288392, -0.078896513425833382656)
ZETA_M15 = -0.02548520188983303595
ZETA_M15_2I = complex(0.12424726557777474701, -0.015707749528273202786)
E_HALF_3I = complex(-0.029678795209616293993, 1.6376582696356153431)
E_M15 = 0.063713004724582589874


def test_entire_e_at_one_and_zero():
    r = entire_e_line(1.0)
    assert r.converged
    assert abs(r.value - 1.0) <= 1e-12
    r = entire_e_line(0.0)
    assert abs(r.value - 0.5) <= 1e-12


def test_entire_e_reference_points():
    assert abs(entire_e_line(0.5 + 3.0j).value - E_HALF_3I) <= 1e-12
    assert abs(entire_e_line(-1.5).value - E_M15) <= 1e-13


def test_zeta_reference_points():
    assert abs(zeta(2.0).value - math.pi**2 / 6.0) <= 1e-13
    assert abs(zeta(3.0).value - ZETA_3) <= 1e-13
    assert abs(zeta(0.5).value - ZETA_HALF) <= 1e-12
    assert abs(zeta(0.5 + 3.0j).value - ZETA_HALF_3I) <= 1e-12
    assert abs(zeta(-1.5).value - ZETA_M15) <= 1e-13
    assert abs(zeta(-1.5 + 2.0j).value - ZETA_M15_2I) <= 1e-12
    assert abs(zeta(-1.0).value - (-1.0 / 12.0)) <= 1e-13


def test_zeta_error_estimate_covers_truth():
    for s in (2.0, 0.5, -1.5, 0.5 + 3.0j, 3.0):
        r = zeta(s)
        ref, ref_err = zeta_euler_maclaurin(s)
        assert abs(r.value - ref) <= 10.0 * (r.err_est + ref_err)


def test_pole_guard():
    with pytest.raises(PoleAtOne):
        zeta(1.0)
    with pytest.raises(PoleAtOne):
        zeta(1.0 + 1e-8j)
    # just outside the guard disk the evaluation stands
    r = zeta(1.0 + 1e-5j)
    assert math.isfinite(r.value.real)


def test_contract_box():
    with pytest.raises(ContractViolation):
        entire_e_line(0.5 + 61.0j)
    with pytest.raises(ContractViolation):
        entire_e_axis(-1.0 - 61.0j)


def test_spec_validation():
    with pytest.raises(DomainError):
        ContourSpec(sigma=0.0)
    with pytest.raises(DomainError):
        ContourSpec(sigma=1.0)
    with pytest.raises(DomainError):
        ContourSpec(sigma=-0.3)


def test_line_integrand_matches_reduced_form():
    """The sigma = 1/2 shortcut equals the generic kernel evaluated there."""
    import cmath

    for y in (0.0, 0.5, -1.7, 3.2):
        for s in (2.0 + 0.0j, 0.5 + 3.0j, -1.5 + 1.0j):
            z = complex(0.5, y)
            want = math.pi**2 * z ** (1.0 - s) / cmath.sin(math.pi * z) ** 2
            assert line_integrand(y, s) == pytest.approx(want, rel=1e-12)


def test_line_integrand_guards():
    with pytest.raises(DomainError):
        line_integrand(0.0, 2.0, sigma=1.5)
    with pytest.raises(DomainError):
        line_integrand(301.0, 2.0)


def test_contour_independence():
    """The integral does not depend on sigma within the strip."""
    for s in (2.0 + 0.0j, 0.5 + 3.0j, -1.5 + 0.0j):
        values = [
            entire_e_line(s, ContourSpec(sigma=sig)).value for sig in (0.3, 0.5, 0.7)
        ]
        for v in values[1:]:
            assert abs(v - values[0]) <= 1e-9


@given(
    x=st.floats(min_value=-3.0, max_value=5.0),
    y=st.floats(min_value=0.0, max_value=8.0),
)
@settings(max_examples=40, deadline=None)
def test_schwarz_reflection_bitwise(x, y):
    """E(conj s) == conj(E(s)) exactly: the folded quadrature preserves it."""
    s = complex(x, y)
    up = entire_e_line(s)
    down = entire_e_line(s.conjugate())
    assert down.value == up.value.conjugate()
    assert down.n_evals == up.n_evals


def test_residue_values():
    assert residue_at(1, 3.0) == -2.0
    assert residue_at(2, 3.0) == pytest.approx(-0.25, rel=1e-15)
    with pytest.raises(DomainError):
        residue_at(0, 3.0)


def test_residue_sum_approaches_line_value():
    for s in (2.5 + 0.0j, 3.0 + 2.0j, 4.0 - 1.0j):
        e = entire_e_line(s)
        for n in (10, 100, 1000):
            value, tail = residue_partial_sum(s, n)
            assert abs(e.value - value) <= tail + e.err_est + 1e-10


def test_residue_sum_tail_bound_monotone():
    _, t1 = residue_partial_sum(3.0, 10)
    _, t2 = residue_partial_sum(3.0, 100)
    assert t2 < t1


def test_residue_sum_guards():
    with pytest.raises(DomainError):
        residue_partial_sum(1.0, 10)
    with pytest.raises(DomainError):
        residue_partial_sum(3.0, 0)


def test_axis_agrees_with_line():
    for s in (-0.5 + 0.0j, -1.5 + 1.0j, -3.7 + 0.0j, -0.05 - 2.0j):
        a = entire_e_axis(s)
        b = entire_e_line(s)
        assert abs(a.value - b.value) <= 1e-9


def test_axis_exact_trivial_zeros():
    for s in (-2.0, -4.0, -10.0):
        r = entire_e_axis(s)
        assert r.value == 0.0  # prefactor sin(pi s/2) is exactly zero
        assert r.err_est == 0.0 and r.n_evals == 0


def test_axis_domain_guard():
    with pytest.raises(DomainError):
        entire_e_axis(0.5)
    with pytest.raises(DomainError):
        entire_e_axis(-0.04)


def test_axis_deep_origin_tail_is_finite():
    # Re s just inside the boundary pushes the substitution hundreds of units
    # left; the scaled integrand must survive that without under/overflow
    r = entire_e_axis(-0.05)
    assert math.isfinite(r.value.real)
    assert abs(r.value - entire_e_line(-0.05).value) <= 1e-9


def test_entire_across_the_dirichlet_boundary():
    """E is analytic at Re s = 1: one-sided quadratic extrapolations from
    either side of the line agree with the on-line value to O(h^3)."""
    h = 1e-2
    t = 2.0  # stay off the real axis so both zeta factors are generic
    mid = entire_e_line(complex(1.0, t)).value

    def extrap(sign: float) -> complex:
        e1 = entire_e_line(complex(1.0 + sign * h, t)).value
        e2 = entire_e_line(complex(1.0 + sign * 2 * h, t)).value
        e3 = entire_e_line(complex(1.0 + sign * 3 * h, t)).value
        return 3.0 * e1 - 3.0 * e2 + e3

    assert abs(extrap(+1.0) - mid) <= 5e-6
    assert abs(extrap(-1.0) - mid) <= 5e-6


def test_result_metadata():
    r = entire_e_line(2.0)
    assert r.method == "line"
    assert r.truncation_height >= 1.0
    assert r.n_evals > 0 and r.n_evals % 2 == 0  # folded pairs
    r = entire_e_axis(-1.5)
    assert r.method == "axis"


def test_looser_plan_converges_faster():
    tight = entire_e_line(0.5 + 3.0j, ContourSpec(plan=QuadraturePlan(target_tol=1e-12)))
    loose = entire_e_line(0.5 + 3.0j, ContourSpec(plan=QuadraturePlan(target_tol=1e-6)))
    assert loose.n_evals <= tight.n_evals
    assert abs(loose.value - tight.value) <= 1e-6
