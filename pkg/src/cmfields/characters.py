"""Dirichlet characters encoded by exponents on the canonical generators
of (Z/mZ)*.

The text encoding "f=<m>:e=<e1,...,ek>" (defining modulus, exponents in
canonical generator order) is stable across runs and versions.
"""

from __future__ import annotations

import math

from .arith import discrete_log_table, divisors, unit_group
from .cyclotomic import CycNumber
from .errors import LengthMismatch, NotClosed


class DirichletCharacter:
    """A character mod m, chi(g_i) = zeta_{order_i}^{exponents_i}.

    Hashable and compared by (modulus, exponents); use `primitive_key` to
    compare characters living at different moduli.
    """

    __slots__ = ("modulus", "exponents", "order", "_conductor")

    def __init__(self, modulus: int, exponents):
        ug = unit_group(modulus)
        exponents = tuple(e % o for e, o in zip(exponents, ug.orders))
        if len(exponents) != len(ug.generators):
            raise LengthMismatch(
                f"modulus {modulus} has {len(ug.generators)} generators, "
                f"got {len(exponents)} exponents"
            )
        self.modulus = modulus
        self.exponents = exponents
        self.order = math.lcm(
            1, *(o // math.gcd(o, e) for e, o in zip(exponents, ug.orders))
        )
        self._conductor = None

    # -- identity --------------------------------------------------------

    def __eq__(self, other):
        return (
            isinstance(other, DirichletCharacter)
            and self.modulus == other.modulus
            and self.exponents == other.exponents
        )

    def __hash__(self):
        return hash((self.modulus, self.exponents))

    def __repr__(self):
        return f"DirichletCharacter({self.encode()!r})"

    def encode(self) -> str:
        return f"f={self.modulus}:e={','.join(map(str, self.exponents))}"

    def is_principal(self) -> bool:
        return self.order == 1

    # -- evaluation ------------------------------------------------------

    def value_exponent(self, a: int):
        """t with chi(a) = zeta_order^t, or None when gcd(a, m) > 1."""
        m = self.modulus
        vec = discrete_log_table(m).get(a % m)
        if vec is None:
            return None
        n = self.order
        ug = unit_group(m)
        t = 0
        for e, ai, o in zip(self.exponents, vec, ug.orders):
            t += e * ai * n // o
        return t % n

    def __call__(self, a: int) -> CycNumber:
        """chi(a) as an exact element of Q(zeta_order); 0 off (Z/mZ)*."""
        t = self.value_exponent(a)
        if t is None:
            return CycNumber.from_rational(self.order, 0)
        return CycNumber.zeta(self.order, t)

    def parity(self) -> int:
        """chi(-1); -1 means odd."""
        t = self.value_exponent(self.modulus - 1 if self.modulus > 1 else 0)
        return 1 if t == 0 else -1

    def is_odd(self) -> bool:
        return self.parity() == -1

    # -- conductor and primitivization -----------------------------------

    def conductor(self) -> int:
        """Smallest f | m such that chi factors through (Z/fZ)*."""
        if self._conductor is None:
            m = self.modulus
            for f in divisors(m):
                if all(
                    self.value_exponent(a) == 0
                    for a in range(1, m + 1)
                    if a % f == 1 % f and math.gcd(a, m) == 1
                ):
                    self._conductor = f
                    break
        return self._conductor

    def primitivize(self) -> "DirichletCharacter":
        """The primitive character mod conductor inducing chi."""
        f = self.conductor()
        if f == self.modulus:
            return self
        return self.restrict(f)

    def restrict(self, f: int) -> "DirichletCharacter":
        """View chi at a modulus f the conductor divides (f | m)."""
        m = self.modulus
        if m % f:
            raise ValueError(f"{f} does not divide modulus {m}")
        if f % self.conductor():
            raise ValueError(f"conductor {self.conductor()} does not divide {f}")
        ug_f = unit_group(f)
        exps = []
        for g, o in zip(ug_f.generators, ug_f.orders):
            # pick a representative of g mod f that is coprime to m
            a = g
            while math.gcd(a, m) != 1:
                a += f
            t = self.value_exponent(a)
            exps.append(t * o // self.order)
        chi = DirichletCharacter(f, exps)
        assert chi.order == self.order
        return chi

    def lift(self, big_modulus: int) -> "DirichletCharacter":
        """The character mod M (m | M) induced by chi."""
        m = self.modulus
        if big_modulus % m:
            raise ValueError(f"{m} does not divide {big_modulus}")
        if big_modulus == m:
            return self
        ug = unit_group(big_modulus)
        exps = []
        for g, o in zip(ug.generators, ug.orders):
            t = self.value_exponent(g % m)
            exps.append(t * o // self.order)
        chi = DirichletCharacter(big_modulus, exps)
        return chi

    def primitive_key(self) -> tuple[int, tuple[int, ...]]:
        """Modulus-independent identity: (conductor, primitive exponents)."""
        chi = self.primitivize()
        return (chi.modulus, chi.exponents)


def make_character(modulus: int, exponents) -> DirichletCharacter:
    return DirichletCharacter(modulus, exponents)


def principal_character(modulus: int = 1) -> DirichletCharacter:
    return DirichletCharacter(modulus, [0] * len(unit_group(modulus).generators))


def char_mul(chi: DirichletCharacter, psi: DirichletCharacter) -> DirichletCharacter:
    m = math.lcm(chi.modulus, psi.modulus)
    a, b = chi.lift(m), psi.lift(m)
    return DirichletCharacter(m, [x + y for x, y in zip(a.exponents, b.exponents)])


def char_pow(chi: DirichletCharacter, k: int) -> DirichletCharacter:
    return DirichletCharacter(chi.modulus, [k * e for e in chi.exponents])


def char_inv(chi: DirichletCharacter) -> DirichletCharacter:
    return char_pow(chi, -1)


def all_characters(modulus: int) -> list[DirichletCharacter]:
    """The full character group mod m, in lexicographic exponent order."""
    ug = unit_group(modulus)
    chars = [principal_character(modulus)]
    for i, o in enumerate(ug.orders):
        base = list(chars)
        for k in range(1, o):
            for c in base:
                e = list(c.exponents)
                e[i] = k
                chars.append(DirichletCharacter(modulus, e))
    return chars


def galois_orbits(chars) -> list[list[DirichletCharacter]]:
    """Partition a conjugation-closed set under chi -> chi^k, gcd(k, ord)=1."""
    remaining = set(chars)
    universe = set(chars)
    orbits = []
    while remaining:
        rep = min(remaining, key=lambda c: (c.modulus, c.exponents))
        orbit = []
        for k in range(1, rep.order + 1):
            if math.gcd(k, max(rep.order, 1)) == 1:
                conj = char_pow(rep, k)
                if conj not in universe:
                    raise NotClosed(f"{conj.encode()} missing from the set")
                if conj not in remaining:
                    continue
                remaining.discard(conj)
                orbit.append(conj)
        orbits.append(orbit)
    return orbits


def decode_character(text: str) -> DirichletCharacter:
    """Inverse of DirichletCharacter.encode."""
    try:
        fpart, epart = text.split(":")
        assert fpart.startswith("f=") and epart.startswith("e=")
        modulus = int(fpart[2:])
        exps = [int(x) for x in epart[2:].split(",")] if epart[2:] else []
    except (ValueError, AssertionError) as exc:
        raise ValueError(f"bad character encoding {text!r}") from exc
    return DirichletCharacter(modulus, exps)
