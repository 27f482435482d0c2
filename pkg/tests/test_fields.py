"""Abelian fields as character groups: lattice ops and CM attributes."""

import math

import pytest

from cmfields.arith import euler_phi
from cmfields.characters import make_character, principal_character
from cmfields.errors import DegreeBoundExceeded, NotFundamentalDiscriminant
from cmfields.fields import (
    AbelianField,
    cyclotomic_field,
    field_from_generators,
    is_fundamental_discriminant,
    normalize_cyclotomic_modulus,
    quadratic_field,
    rational_field,
)


def test_field_from_generators_examples():
    assert field_from_generators([make_character(4, [1])]).degree == 2
    big = field_from_generators([make_character(4, [1]), make_character(5, [1])])
    assert big == cyclotomic_field(20)
    assert big.degree == 8
    assert field_from_generators([principal_character(1)]) == rational_field()


def test_degree_bound():
    with pytest.raises(DegreeBoundExceeded):
        field_from_generators([make_character(5, [1])], max_degree=3)
    with pytest.raises(DegreeBoundExceeded):
        cyclotomic_field(101, max_degree=64)


def test_cyclotomic_normalization():
    assert normalize_cyclotomic_modulus(6) == 3
    assert cyclotomic_field(6) == cyclotomic_field(3)
    assert cyclotomic_field(4).degree == 2


def test_quadratic_field_examples():
    neg = quadratic_field(-20)
    chi = [c for c in neg.chars if c.order == 2][0]
    assert chi.conductor() == 20 and chi.is_odd()
    pos = quadratic_field(40)
    chi = [c for c in pos.chars if c.order == 2][0]
    assert chi.conductor() == 40 and not chi.is_odd()
    with pytest.raises(NotFundamentalDiscriminant):
        quadratic_field(45)
    with pytest.raises(NotFundamentalDiscriminant):
        quadratic_field(-5)


def test_fundamental_discriminants():
    good = [-3, -4, -7, -8, -20, 5, 8, 12, 13, 40]
    bad = [0, 1, -1, 2, 3, -5, 9, 16, 18, 45]
    assert all(is_fundamental_discriminant(d) for d in good)
    assert not any(is_fundamental_discriminant(d) for d in bad)


def test_cm_and_real_subfield():
    z5 = cyclotomic_field(5)
    assert z5.is_cm()
    plus = z5.maximal_real_subfield()
    assert plus.degree == 2 and plus.conductor == 5 and not plus.is_cm()
    assert not quadratic_field(40).is_cm()
    assert not rational_field().is_cm()


def test_real_subfield_idempotent():
    for m in (5, 7, 16, 20, 40):
        plus = cyclotomic_field(m).maximal_real_subfield()
        assert plus.maximal_real_subfield() == plus
        assert not plus.odd_characters()


def test_odd_even_split_for_cm():
    for m in (4, 5, 7, 15, 16, 20, 40):
        K = cyclotomic_field(m)
        assert len(K.odd_characters()) == K.degree // 2


def test_roots_of_unity_examples():
    assert cyclotomic_field(12).roots_of_unity_order() == 12
    qi_s5 = quadratic_field(-4).compositum(quadratic_field(5))
    assert qi_s5.roots_of_unity_order() == 4
    assert quadratic_field(-3).roots_of_unity_order() == 6
    assert quadratic_field(-20).roots_of_unity_order() == 2
    assert quadratic_field(40).roots_of_unity_order() == 2


def test_roots_of_unity_cyclotomic_exhaustive():
    for m in range(1, 61):
        if m % 4 == 2:
            continue
        expected = 2 * m if m % 2 else m
        if m == 1:
            expected = 2
        assert cyclotomic_field(m).roots_of_unity_order() == expected


def test_compositum_and_intersection():
    qi = quadratic_field(-4)
    s5 = quadratic_field(5)
    L = qi.compositum(s5)
    assert L.degree == 4 and L.conductor == 20
    assert qi.compositum(qi) == qi
    meet = cyclotomic_field(8).intersection(cyclotomic_field(12))
    assert meet == quadratic_field(-4)
    assert cyclotomic_field(20).intersection(cyclotomic_field(5)) == cyclotomic_field(5)


def test_conductor_of_compositum_is_lcm():
    pairs = [(-4, 5), (-3, -20), (8, -7), (-8, 13)]
    for d1, d2 in pairs:
        K = quadratic_field(d1).compositum(quadratic_field(d2))
        assert K.conductor == math.lcm(abs(d1), abs(d2))


def test_subfield_relation():
    assert quadratic_field(-4).is_subfield_of(cyclotomic_field(20))
    assert quadratic_field(5).is_subfield_of(cyclotomic_field(5))
    assert not quadratic_field(-3).is_subfield_of(cyclotomic_field(20))


def test_prime_power_decomposition_examples():
    L = quadratic_field(-4).compositum(quadratic_field(5))
    comps = L.prime_power_decomposition()
    assert comps is not None
    assert sorted(c.conductor for c in comps) == [4, 5]
    assert quadratic_field(-20).prime_power_decomposition() is None
    comps = cyclotomic_field(15).prime_power_decomposition()
    assert comps is not None
    assert sorted((c.conductor, c.degree) for c in comps) == [(3, 2), (5, 4)]


def test_two_primary_subfield_examples():
    assert cyclotomic_field(7).two_primary_subfield() == quadratic_field(-7)
    assert cyclotomic_field(4).two_primary_subfield() == quadratic_field(-4)
    two13 = cyclotomic_field(13).two_primary_subfield()
    assert two13.degree == 4 and two13.conductor == 13


def test_two_primary_subfield_properties():
    for m in (5, 7, 9, 13, 15, 20, 21, 28, 33, 35, 40, 45, 60):
        K = cyclotomic_field(m)
        if not K.is_cm():
            continue
        two = K.two_primary_subfield()
        assert two.is_subfield_of(K)
        assert (K.degree // two.degree) % 2 == 1
        assert two.is_cm()


def test_quadratic_subfield_discriminants():
    L = quadratic_field(-4).compositum(quadratic_field(-20))
    assert sorted(L.quadratic_subfield_discriminants()) == [-20, -4, 5]
    assert cyclotomic_field(8).quadratic_subfield_discriminants() == [-4, 8, -8]


def test_equality_is_modulus_independent():
    lifted = AbelianField([c.lift(20) for c in quadratic_field(-4).chars])
    assert lifted == quadratic_field(-4)
    assert hash(lifted) == hash(quadratic_field(-4))


def test_degree_matches_phi_for_cyclotomic():
    for m in (1, 3, 4, 8, 9, 15, 16, 40):
        assert cyclotomic_field(m).degree == euler_phi(normalize_cyclotomic_modulus(m))
