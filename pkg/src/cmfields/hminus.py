"""The analytic class number formula engine.

h-(K) = Q(K) * w_K * prod over odd characters of (-B_chi / 2), where
B_chi = (1/f) sum chi(a) a over 1 <= a <= f coprime to f = conductor(chi).
Each Galois orbit of characters contributes one exact rational factor,
computed entirely inside Q(zeta_ord(chi)); integrality of the final
product is certified, never assumed.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .characters import DirichletCharacter, galois_orbits
from .cyclotomic import CycNumber, absolute_norm
from .errors import (
    EvenCharacter,
    NonIntegralResult,
    NotClosed,
    PrincipalCharacter,
)
from .fields import AbelianField, require_cm
from .unitindex import UnitIndexVerdict, hasse_unit_index


def bernoulli_b1(chi: DirichletCharacter) -> CycNumber:
    """Generalized Bernoulli number B_(1,chi) for an odd character, at
    level ord(chi).  The character is primitivized before summation: the
    sum runs over the conductor, not the defining modulus."""
    if chi.is_principal():
        raise PrincipalCharacter(chi.encode())
    if not chi.is_odd():
        raise EvenCharacter(chi.encode())
    chi = chi.primitivize()
    f = chi.modulus
    n = chi.order
    acc = [Fraction(0)] * n
    for a in range(1, f + 1):
        t = chi.value_exponent(a)
        if t is not None:
            acc[t] += a
    return CycNumber.from_power_coeffs(n, acc) / f


def orbit_factor(rep: DirichletCharacter) -> Fraction:
    """Product of (-B_(1,chi)/2) over the Galois orbit of rep, as the
    norm of the representative's factor from Q(zeta_ord) down to Q."""
    value = -bernoulli_b1(rep) / 2
    return absolute_norm(value)


@dataclass(frozen=True)
class MinusReport:
    field: AbelianField
    q: int
    w: int
    rule: str
    orbit_factors: tuple[tuple[str, Fraction], ...]  # (representative, norm)
    h_minus: int


def minus_class_number(
    K: AbelianField, q_override: Optional[int] = None
) -> MinusReport:
    """Exact h-(K) for a CM abelian field, with per-orbit factors."""
    require_cm(K)
    verdict: UnitIndexVerdict = hasse_unit_index(K, override=q_override)
    w = K.roots_of_unity_order()
    factors = []
    total = Fraction(verdict.q * w)
    for orbit in galois_orbits(K.odd_characters()):
        rep = min(orbit, key=lambda c: (c.order, c.primitive_key()))
        norm = orbit_factor(rep)
        factors.append((rep.primitivize().encode(), norm))
        total *= norm
    if total.denominator != 1 or total <= 0:
        raise NonIntegralResult(
            f"h-(K) = {total} is not a positive integer for {K!r}"
        )
    return MinusReport(
        field=K,
        q=verdict.q,
        w=w,
        rule=verdict.rule,
        orbit_factors=tuple(factors),
        h_minus=int(total),
    )


def minus_partial_product(chars) -> Fraction:
    """prod of (-B_(1,chi)/2) over a conjugation-closed set of odd
    characters, as an exact rational (empty product = 1)."""
    chars = list(chars)
    if not chars:
        return Fraction(1)
    if any(not c.is_odd() for c in chars):
        raise EvenCharacter("partial products take odd characters only")
    keys = {c.primitive_key() for c in chars}
    if len(keys) != len(chars):
        raise NotClosed("duplicate characters in partial-product input")
    total = Fraction(1)
    for orbit in galois_orbits(chars):
        total *= orbit_factor(orbit[0])
    return total
