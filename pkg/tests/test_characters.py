"""Dirichlet character construction, evaluation, conductor, orbits."""

import math

import pytest
from hypothesis import given, settings, strategies as st

from cmfields.arith import euler_phi, unit_group
from cmfields.characters import (
    all_characters,
    char_inv,
    char_mul,
    char_pow,
    decode_character,
    galois_orbits,
    make_character,
    principal_character,
)
from cmfields.cyclotomic import CycNumber, galois_apply
from cmfields.errors import LengthMismatch, NotClosed

CHI_M4 = make_character(4, [1])


def test_make_character_examples():
    assert CHI_M4(3) == -1
    assert principal_character(5).order == 1
    chi8 = make_character(8, [1, 0])
    assert chi8(7) == -1 and chi8(5) == 1 and chi8(3) == -1


def test_length_mismatch():
    with pytest.raises(LengthMismatch):
        make_character(8, [1])


def test_evaluate_examples():
    assert CHI_M4(2) == 0
    chi = make_character(5, [1])
    assert chi(2) == CycNumber.zeta(4, 1)  # 2 is the canonical generator mod 5
    assert chi(4) == -1


def test_conductor_examples():
    assert principal_character(12).conductor() == 1
    lifted = CHI_M4.lift(20)
    assert lifted.conductor() == 4
    assert make_character(5, [1]).conductor() == 5


def test_primitivize_round_trip():
    lifted = CHI_M4.lift(20)
    assert lifted.primitivize() == CHI_M4
    assert CHI_M4.primitivize() is CHI_M4
    assert lifted.primitive_key() == CHI_M4.primitive_key()


def test_parity_examples():
    assert principal_character(7).parity() == 1
    assert CHI_M4.parity() == -1
    assert make_character(5, [2]).parity() == 1  # Kronecker character of Q(sqrt 5)


def test_group_law_examples():
    assert char_mul(CHI_M4, CHI_M4).is_principal()
    assert char_mul(CHI_M4, char_inv(CHI_M4)).is_principal()
    chi8 = make_character(8, [1, 0])
    chi5 = make_character(5, [1])
    prod = char_mul(chi8, chi5)
    assert prod.modulus == 40 and prod.order == 4


def test_char_pow_order():
    chi = make_character(5, [1])
    assert char_pow(chi, 2).order == 2
    assert char_pow(chi, 4).is_principal()


def test_galois_orbits_examples():
    assert galois_orbits([CHI_M4]) == [[CHI_M4]]
    odd5 = [c for c in all_characters(5) if c.is_odd()]
    orbits = galois_orbits(odd5)
    assert [len(o) for o in orbits] == [2]
    odd7 = [c for c in all_characters(7) if c.is_odd()]
    sizes = sorted(len(o) for o in galois_orbits(odd7))
    assert sizes == [1, 2]


def test_galois_orbits_rejects_open_sets():
    chi = make_character(5, [1])  # order 4, conjugate chi^3 missing
    with pytest.raises(NotClosed):
        galois_orbits([chi])


def test_orbit_members_share_conductor_and_parity():
    for m in (5, 7, 16, 20):
        for orbit in galois_orbits(all_characters(m)):
            assert len({c.conductor() for c in orbit}) == 1
            assert len({c.parity() for c in orbit}) == 1
            assert len(orbit) == euler_phi(orbit[0].order)


def test_all_characters_count():
    for m in (1, 4, 8, 15, 24):
        assert len(all_characters(m)) == euler_phi(m)


modest_moduli = st.sampled_from([3, 4, 5, 7, 8, 9, 12, 16, 20, 21, 40])


@settings(max_examples=60)
@given(modest_moduli, st.data())
def test_multiplicativity_and_periodicity(m, data):
    ug = unit_group(m)
    exps = tuple(data.draw(st.integers(min_value=0, max_value=o - 1)) for o in ug.orders)
    chi = make_character(m, exps)
    a = data.draw(st.integers(min_value=1, max_value=3 * m))
    b = data.draw(st.integers(min_value=1, max_value=3 * m))
    assert chi(a * b) == chi(a) * chi(b)
    assert chi(a) == chi(a + m)


@settings(max_examples=60)
@given(modest_moduli, st.data())
def test_conjugation_equivariance(m, data):
    ug = unit_group(m)
    exps = tuple(data.draw(st.integers(min_value=0, max_value=o - 1)) for o in ug.orders)
    chi = make_character(m, exps)
    if chi.is_principal():
        return
    ks = [k for k in range(1, chi.order + 1) if math.gcd(k, chi.order) == 1]
    k = data.draw(st.sampled_from(ks))
    a = data.draw(st.integers(min_value=1, max_value=2 * m))
    val = chi(a)
    powed = char_pow(chi, k)
    if val == 0:
        assert powed(a) == 0
    else:
        assert galois_apply(k, val) == powed(a)


def test_odd_characters_are_half():
    for m in range(3, 201):
        chars = all_characters(m)
        odd = [c for c in chars if c.is_odd()]
        assert len(odd) * 2 == len(chars)


def test_encode_decode_round_trip():
    for m in (1, 4, 8, 20, 40):
        for chi in all_characters(m):
            assert decode_character(chi.encode()) == chi
    assert CHI_M4.encode() == "f=4:e=1"


def test_decode_rejects_garbage():
    with pytest.raises(ValueError):
        decode_character("f=4")
    with pytest.raises(ValueError):
        decode_character("e=1:f=4")
