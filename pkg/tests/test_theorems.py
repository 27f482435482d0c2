"""Executable checks for the divisibility and factorization statements."""

from fractions import Fraction

import pytest

from cmfields.errors import (
    EvenIndex,
    NotFundamentalDiscriminant,
    NotPrimePowerConductors,
    NotSubfield,
    NotV4CM,
    PreconditionViolated,
)
from cmfields.fields import cyclotomic_field, quadratic_field
from cmfields.theorems import (
    check_counterexample,
    check_masley,
    check_metsankyla,
    check_odd_degree,
    check_v4,
    derived_kuroda_q,
    fundamental_discriminants,
    sweep_counterexample_family1,
)


def test_masley_examples():
    assert check_masley(3, 3).verdict
    assert check_masley(4, 5).verdict
    rep = check_masley(23, 2)
    assert rep.verdict and rep.quantities["h_minus_small"] == 3
    # 46 normalizes to 23, so big equals small here
    assert rep.quantities["h_minus_big"] == 3


def test_odd_degree_examples():
    assert check_odd_degree(quadratic_field(-7), cyclotomic_field(7)).verdict
    rep = check_odd_degree(quadratic_field(-23), cyclotomic_field(23))
    assert rep.verdict and rep.quantities["h_minus_K"] == 3
    assert check_odd_degree(quadratic_field(-31), cyclotomic_field(31)).verdict


def test_odd_degree_preconditions():
    with pytest.raises(NotSubfield):
        check_odd_degree(quadratic_field(-3), cyclotomic_field(20))
    with pytest.raises(EvenIndex):
        check_odd_degree(quadratic_field(-4), cyclotomic_field(20))


def test_v4_examples():
    rep = check_v4(-4, -20)
    assert rep.verdict
    assert rep.quantities["h_minus_L"] == 1 and rep.quantities["rhs"] == 1
    assert check_v4(-4, -40).verdict
    assert check_v4(-3, -20).verdict
    assert check_v4(-3, -15).verdict


def test_v4_preconditions():
    with pytest.raises(NotFundamentalDiscriminant):
        check_v4(-5, -4)
    with pytest.raises(NotV4CM):
        check_v4(-4, 5)
    with pytest.raises(NotV4CM):
        check_v4(-4, -4)


def test_kuroda_q_examples():
    assert derived_kuroda_q(-4, 5) == 1
    assert derived_kuroda_q(-4, 40) == 1
    assert derived_kuroda_q(-4, 8) == 2  # L = Q(zeta_8)
    assert derived_kuroda_q(-4, -20) in (1, 2, 4)


def test_kuroda_q_needs_imaginary_subfields():
    with pytest.raises(NotV4CM):
        derived_kuroda_q(5, 8)


def test_metsankyla_examples():
    rep = check_metsankyla(cyclotomic_field(4), cyclotomic_field(5))
    assert rep.verdict
    assert rep.quantities["T1"] == 1 and rep.quantities["T2"] == 1
    assert rep.quantities["T1_character_sum"] == 1
    assert check_metsankyla(quadratic_field(-3), cyclotomic_field(5)).verdict
    assert check_metsankyla(cyclotomic_field(4), quadratic_field(-7)).verdict


def test_metsankyla_t1_is_a_fraction_of_h_values():
    rep = check_metsankyla(cyclotomic_field(4), cyclotomic_field(5))
    t1 = rep.quantities["T1"]
    assert isinstance(t1, Fraction) and t1.denominator == 1


def test_metsankyla_preconditions():
    with pytest.raises(NotPrimePowerConductors):
        check_metsankyla(cyclotomic_field(15), cyclotomic_field(4))
    with pytest.raises(NotPrimePowerConductors):
        check_metsankyla(cyclotomic_field(4), cyclotomic_field(8))


def test_counterexample_family1():
    rep = check_counterexample(1, d1=-4, d2=5)
    assert rep.verdict
    assert rep.quantities == {"d_K": -20, "h_minus_K": 2, "h_minus_L": 1}


def test_counterexample_family1_preconditions():
    with pytest.raises(PreconditionViolated):
        check_counterexample(1, d1=-20, d2=5)  # not a prime discriminant
    with pytest.raises(PreconditionViolated):
        check_counterexample(1, d1=-4, d2=-7)  # d2 must be real


def test_counterexample_family2():
    for m in (5, 13):
        rep = check_counterexample(2, m=m)
        assert rep.verdict and not rep.vacuous, m
    # 2m = 20 normalizes to Q(sqrt 5) where 2 is inert: the theorem's
    # hypothesis fails, though non-divisibility still holds numerically
    rep = check_counterexample(2, m=10)
    assert rep.verdict and rep.vacuous


def test_counterexample_family2_vacuous():
    # (2, sqrt 2) is principal in Q(sqrt 2)
    rep = check_counterexample(2, m=1)
    assert rep.vacuous and not rep.verdict
    with pytest.raises(PreconditionViolated):
        check_counterexample(2, m=2)  # 2m = 4 is a square
    with pytest.raises(PreconditionViolated):
        check_counterexample(2, m=0)


def test_unknown_family():
    with pytest.raises(ValueError):
        check_counterexample(3)


def test_fundamental_discriminant_range():
    ds = fundamental_discriminants(-30, 30)
    assert -4 in ds and 5 in ds and 0 not in ds and 1 not in ds


def test_family1_sweep_is_all_passes():
    reports = sweep_counterexample_family1(60)
    assert reports
    assert all(r.verdict for r in reports)


def test_summary_format():
    rep = check_masley(4, 5)
    text = rep.summary()
    assert text.startswith("[pass]") and "masley" in text
