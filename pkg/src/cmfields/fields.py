"""Abelian number fields represented extensionally by their finite
character groups, with the CM-specific attributes (maximal real subfield,
roots of unity, conductor, prime-power decomposability) the divisibility
checks consume.
"""

from __future__ import annotations

import math

from .arith import divisors, euler_phi, factorize, is_squarefree, kronecker, unit_group
from .characters import (
    DirichletCharacter,
    all_characters,
    char_mul,
    principal_character,
)
from .errors import DegreeBoundExceeded, NotCMField, NotFundamentalDiscriminant

DEFAULT_MAX_DEGREE = 256


def normalize_cyclotomic_modulus(m: int) -> int:
    """Q(zeta_2k) = Q(zeta_k) for odd k: canonical moduli are != 2 mod 4."""
    return m // 2 if m % 4 == 2 else m


class AbelianField:
    """A finite group of Dirichlet characters at a common modulus.

    Immutable; the constructor assumes the set is multiplicatively closed
    (use `field_from_generators` to close an arbitrary set).
    """

    __slots__ = ("chars", "modulus", "conductor", "degree", "_prim_keys")

    def __init__(self, chars):
        chars = tuple(sorted(set(chars), key=lambda c: c.exponents))
        if not chars:
            raise ValueError("empty character set")
        modulus = chars[0].modulus
        assert all(c.modulus == modulus for c in chars)
        self.chars = chars
        self.modulus = modulus
        self.conductor = math.lcm(1, *(c.conductor() for c in chars))
        self.degree = len(chars)
        self._prim_keys = frozenset(c.primitive_key() for c in chars)

    def __eq__(self, other):
        return isinstance(other, AbelianField) and self._prim_keys == other._prim_keys

    def __hash__(self):
        return hash(self._prim_keys)

    def __repr__(self):
        return f"AbelianField(conductor={self.conductor}, degree={self.degree})"

    def contains_character(self, chi: DirichletCharacter) -> bool:
        return chi.primitive_key() in self._prim_keys

    def is_subfield_of(self, other: "AbelianField") -> bool:
        return self._prim_keys <= other._prim_keys

    # -- CM structure ----------------------------------------------------

    def odd_characters(self) -> list[DirichletCharacter]:
        return [c for c in self.chars if c.is_odd()]

    def is_cm(self) -> bool:
        return bool(self.odd_characters())

    def is_totally_real(self) -> bool:
        return not self.is_cm()

    def maximal_real_subfield(self) -> "AbelianField":
        return AbelianField([c for c in self.chars if not c.is_odd()])

    def roots_of_unity_order(self) -> int:
        """w, the order of the group of roots of unity in the field."""
        best = 1
        for n in divisors(2 * self.conductor):
            if n % 4 == 2 or n <= best:
                continue
            if all(self.contains_character(chi) for chi in all_characters(n)):
                best = n
        return best if best % 2 == 0 else 2 * best

    # -- lattice ops -----------------------------------------------------

    def compositum(
        self, other: "AbelianField", max_degree: int = DEFAULT_MAX_DEGREE
    ) -> "AbelianField":
        return field_from_generators(
            list(self.chars) + list(other.chars), max_degree=max_degree
        )

    def intersection(self, other: "AbelianField") -> "AbelianField":
        shared = self._prim_keys & other._prim_keys
        chars = [c for c in self.chars if c.primitive_key() in shared]
        m = math.lcm(1, *(c.conductor() for c in chars))
        return AbelianField([c.primitivize().lift(m) for c in chars])

    def prime_power_decomposition(self):
        """Split into fields of prime-power conductor when the character
        group is the direct product of its prime-power projections;
        None when the field is non-decomposable."""
        trivial = principal_character(1).primitive_key()
        parts = {p: {trivial} for p, _ in factorize(self.conductor)}
        for chi in self.chars:
            for p, comp in _prime_power_components(chi):
                parts[p].add(comp.primitive_key())
        total = 1
        components = []
        for p in sorted(parts):
            keys = parts[p]
            m = math.lcm(1, *(k[0] for k in keys))
            comp_chars = [DirichletCharacter(f, e).lift(m) for f, e in keys]
            total *= len(comp_chars)
            components.append(AbelianField(comp_chars))
        if total != self.degree:
            return None
        return components

    def two_primary_subfield(self) -> "AbelianField":
        """Field of the 2-Sylow subgroup of the character group; has odd
        index in the field and stays CM whenever the field is."""
        sylow = [c for c in self.chars if (c.order & (c.order - 1)) == 0]
        return AbelianField(sylow)

    def quadratic_subfield_discriminants(self) -> list[int]:
        """Fundamental discriminants of the quadratic subfields."""
        out = []
        for c in self.chars:
            if c.order == 2:
                f = c.conductor()
                out.append(f if c.parity() == 1 else -f)
        return sorted(out, key=abs)


def _prime_power_components(chi: DirichletCharacter):
    """chi as a product of characters of prime-power modulus, one per
    prime dividing its conductor."""
    chi = chi.primitivize()
    m = chi.modulus
    if m == 1:
        return []
    ug = unit_group(m)
    out = []
    for q in sorted(set(ug.blocks)):
        exps = [e if b == q else 0 for e, b in zip(chi.exponents, ug.blocks)]
        comp = DirichletCharacter(m, exps).primitivize()
        p = factorize(q)[0][0]
        out.append((p, comp))
    return out


def field_from_generators(
    gens, max_degree: int = DEFAULT_MAX_DEGREE
) -> AbelianField:
    """Closure of a list of characters under the group law."""
    gens = list(gens)
    if not gens:
        raise ValueError("need at least one generator")
    m = normalize_cyclotomic_modulus(math.lcm(1, *(g.conductor() for g in gens)))
    gens = [g.primitivize().lift(m) for g in gens]
    group = {principal_character(m)}
    frontier = list(group)
    while frontier:
        nxt = []
        for g in gens:
            for c in frontier:
                prod = char_mul(g, c)
                if prod not in group:
                    group.add(prod)
                    nxt.append(prod)
                    if len(group) > max_degree:
                        raise DegreeBoundExceeded(
                            f"degree exceeds bound {max_degree}"
                        )
        frontier = nxt
    return AbelianField(group)


def cyclotomic_field(m: int, max_degree: int = DEFAULT_MAX_DEGREE) -> AbelianField:
    """Q(zeta_m) as the full character group mod m (m normalized != 2 mod 4)."""
    m = normalize_cyclotomic_modulus(m)
    if euler_phi(m) > max_degree:
        raise DegreeBoundExceeded(f"phi({m}) exceeds bound {max_degree}")
    return AbelianField(all_characters(m))


def rational_field() -> AbelianField:
    return AbelianField([principal_character(1)])


def is_fundamental_discriminant(d: int) -> bool:
    if d == 1 or d == 0:
        return False
    if d % 4 == 1:
        return is_squarefree(d)
    if d % 4 == 0:
        q = d // 4
        return q % 4 in (2, 3) and is_squarefree(q)
    return False


def quadratic_field(d: int) -> AbelianField:
    """Q(sqrt(d)) via the order-2 Kronecker character (d/.) of conductor |d|."""
    if not is_fundamental_discriminant(d):
        raise NotFundamentalDiscriminant(f"{d} is not a fundamental discriminant")
    m = abs(d)
    ug = unit_group(m)
    exps = []
    for g, o in zip(ug.generators, ug.orders):
        s = kronecker(d, g)
        assert s != 0
        if s == 1:
            exps.append(0)
        else:
            assert o % 2 == 0
            exps.append(o // 2)
    chi = DirichletCharacter(m, exps)
    assert chi.conductor() == m
    assert chi.parity() == (1 if d > 0 else -1)
    return AbelianField([principal_character(m), chi])


def require_cm(field: AbelianField) -> None:
    if not field.is_cm():
        raise NotCMField(f"{field!r} is not CM")
