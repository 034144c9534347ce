import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from domtsim.theory import (BurstyParams, cold_start_tax, critical_constants,
                            drought_threshold_ratio, extra_fp_budget,
                            fdp_inflation_term, regret_gap_bound)

# Frozen from an independent high-precision evaluation.
TAX_CASES = [
    (BurstyParams(pi=0.8, mu=5.0, rho=0.25), 1.8, (0.5, 0.9)),
    (BurstyParams(pi=0.8, mu=5.0, rho=0.5), 3.2142135623730951,
     (0.2928932188134524, 0.9414213562373095)),
]


@pytest.mark.parametrize("params,tax,constants", TAX_CASES)
def test_cold_start_tax_frozen_values(params, tax, constants):
    assert cold_start_tax(params) == pytest.approx(tax, rel=1e-12)
    c1, c2 = critical_constants(params)
    assert c1 == pytest.approx(constants[0], rel=1e-12)
    assert c2 == pytest.approx(constants[1], rel=1e-12)


@given(pi=st.floats(0.0, 0.95), mu=st.floats(1.0, 50.0),
       rho=st.floats(0.01, 0.99))
def test_tax_equals_the_ratio_of_critical_constants(pi, mu, rho):
    params = BurstyParams(pi=pi, mu=mu, rho=rho)
    c1, c2 = critical_constants(params)
    assert cold_start_tax(params) == pytest.approx(c2 / c1, rel=1e-9)


@given(pi=st.floats(0.0, 0.95), mu=st.floats(1.0, 50.0),
       rho1=st.floats(0.01, 0.49), gap=st.floats(0.01, 0.5))
def test_tax_grows_with_the_burst_delay(pi, mu, rho1, gap):
    lo = cold_start_tax(BurstyParams(pi=pi, mu=mu, rho=rho1))
    hi = cold_start_tax(BurstyParams(pi=pi, mu=mu, rho=rho1 + gap))
    assert hi > lo


def test_bursty_params_are_validated():
    with pytest.raises(ValueError):
        BurstyParams(pi=1.0, mu=5.0, rho=0.5)
    with pytest.raises(ValueError):
        BurstyParams(pi=0.5, mu=0.0, rho=0.5)
    with pytest.raises(ValueError):
        BurstyParams(pi=0.5, mu=5.0, rho=1.0)


def test_fdp_inflation_frozen_value():
    got = fdp_inflation_term(100, 3.0, 0.05, 0.05, 10)
    assert got == pytest.approx(1.3738734153404852, rel=1e-12)


def test_fdp_inflation_shrinks_with_more_rejections():
    a = fdp_inflation_term(1000, 3.0, 0.05, 0.1, 5)
    b = fdp_inflation_term(1000, 3.0, 0.05, 0.1, 50)
    assert b < a


def test_regret_gap_bound_frozen_value():
    assert regret_gap_bound(10000, 1.0, 3.0, 0.05) == pytest.approx(15.0, rel=1e-12)
    assert regret_gap_bound(5000, 1.0, 3.0, 0.05) == pytest.approx(
        0.15 * math.sqrt(5000), rel=1e-12)


def test_drought_threshold_ratio_frozen_value():
    assert drought_threshold_ratio(0.001, 10000, 3.0, 0.05) == pytest.approx(1.75, rel=1e-12)


def test_extra_fp_budget_frozen_value():
    assert extra_fp_budget(4096, 3.0, 0.05) == pytest.approx(9.6, rel=1e-12)
    assert extra_fp_budget(256, 3.0, 0.05) == pytest.approx(2.4, rel=1e-12)


def test_budget_scales_as_square_root_of_horizon():
    assert extra_fp_budget(40000, 3.0, 0.05) == pytest.approx(
        2 * extra_fp_budget(10000, 3.0, 0.05), rel=1e-12)


def test_calculators_validate_common_arguments():
    with pytest.raises(ValueError):
        fdp_inflation_term(0, 3.0, 0.05, 0.1, 5)
    with pytest.raises(ValueError):
        fdp_inflation_term(100, -1.0, 0.05, 0.1, 5)
    with pytest.raises(ValueError):
        fdp_inflation_term(100, 3.0, 0.05, 1.5, 5)
    with pytest.raises(ValueError):
        regret_gap_bound(100, 0.0, 3.0, 0.05)
    with pytest.raises(ValueError):
        drought_threshold_ratio(0.0, 100, 3.0, 0.05)
    with pytest.raises(ValueError):
        extra_fp_budget(0, 3.0, 0.05)
