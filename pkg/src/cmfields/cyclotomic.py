"""Exact arithmetic in cyclotomic fields Q(zeta_e).

Elements are stored on the power basis 1, z, ..., z^(phi(e)-1) modulo the
e-th cyclotomic polynomial, with Fraction coefficients.  Everything here is
exact; there is no floating point anywhere in this package.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

from .arith import Rational, divisors, euler_phi
from .errors import InternalInconsistency, NotCoprime


@lru_cache(maxsize=None)
def cyclotomic_polynomial(e: int) -> tuple[int, ...]:
    """Coefficients of Phi_e, low to high; monic of degree phi(e).

    Computed by exact division of x^e - 1 by Phi_d over the proper
    divisors d of e.
    """
    if e < 1:
        raise ValueError(f"need e >= 1, got {e}")
    if e == 1:
        return (-1, 1)
    poly = [-1] + [0] * (e - 1) + [1]  # x^e - 1
    for d in divisors(e)[:-1]:
        poly = _int_poly_div_exact(poly, cyclotomic_polynomial(d))
    assert len(poly) == euler_phi(e) + 1 and poly[-1] == 1
    return tuple(poly)


def _int_poly_div_exact(num: list[int], den: tuple[int, ...]) -> list[int]:
    """Exact division of integer polynomials; den must be monic and divide num."""
    num = list(num)
    dn = len(den) - 1
    quot = [0] * (len(num) - dn)
    for i in range(len(quot) - 1, -1, -1):
        c = num[i + dn]
        quot[i] = c
        if c:
            for j, dj in enumerate(den):
                num[i + j] -= c * dj
    if any(num):
        raise InternalInconsistency("polynomial division left a remainder")
    return quot


@lru_cache(maxsize=None)
def _zeta_power(e: int, j: int) -> tuple[int, ...]:
    """x^j mod Phi_e as an integer coefficient vector of length phi(e)."""
    j %= e
    n = euler_phi(e)
    if j < n:
        vec = [0] * n
        vec[j] = 1
        return tuple(vec)
    phi = cyclotomic_polynomial(e)
    # x^j = x * x^(j-1) reduced by the monic relation x^n = -(lower terms)
    prev = list(_zeta_power(e, j - 1))
    lead = prev[-1]
    vec = [0] + prev[:-1]
    if lead:
        for i in range(n):
            vec[i] -= lead * phi[i]
    return tuple(vec)


class CycNumber:
    """Element of Q(zeta_e) on the power basis mod Phi_e.

    Immutable.  Arithmetic requires equal levels; callers lift explicitly
    via `lift` when mixing levels (Q(zeta_e) embeds in Q(zeta_e') for e | e').
    """

    __slots__ = ("level", "coeffs")

    def __init__(self, level: int, coeffs):
        n = euler_phi(level)
        coeffs = tuple(Fraction(c) for c in coeffs)
        if len(coeffs) != n:
            raise ValueError(f"level {level} needs {n} coordinates, got {len(coeffs)}")
        object.__setattr__(self, "level", level)
        object.__setattr__(self, "coeffs", coeffs)

    def __setattr__(self, *a):  # pragma: no cover
        raise AttributeError("CycNumber is immutable")

    @classmethod
    def from_rational(cls, level: int, value) -> "CycNumber":
        vec = [Fraction(0)] * euler_phi(level)
        vec[0] = Fraction(value)
        return cls(level, vec)

    @classmethod
    def zeta(cls, level: int, power: int = 1) -> "CycNumber":
        return cls(level, [Fraction(c) for c in _zeta_power(level, power)])

    @classmethod
    def from_power_coeffs(cls, level: int, coeffs) -> "CycNumber":
        """Build sum_j coeffs[j] * zeta^j for an arbitrary-length coefficient
        list (exponents taken mod level)."""
        acc = [Fraction(0)] * euler_phi(level)
        for j, c in enumerate(coeffs):
            if c:
                for i, z in enumerate(_zeta_power(level, j)):
                    if z:
                        acc[i] += c * z
        return cls(level, acc)

    # -- predicates ------------------------------------------------------

    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coeffs[1:])

    def as_rational(self) -> Rational:
        if not self.is_rational():
            raise InternalInconsistency(f"not rational: {self!r}")
        return self.coeffs[0]

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    # -- arithmetic ------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, CycNumber):
            if other.level != self.level:
                raise ValueError(
                    f"level mismatch {self.level} vs {other.level}; lift first"
                )
            return other
        if isinstance(other, (int, Fraction)):
            return CycNumber.from_rational(self.level, other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return CycNumber(self.level, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return CycNumber(self.level, [-a for a in self.coeffs])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return CycNumber(self.level, [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return CycNumber(self.level, [a * other for a in self.coeffs])
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        n = len(self.coeffs)
        prod = [Fraction(0)] * (2 * n - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        prod[i + j] += a * b
        return CycNumber.from_power_coeffs(self.level, prod)

    __rmul__ = __mul__

    def inverse(self) -> "CycNumber":
        if self.is_zero():
            raise ZeroDivisionError("division by zero in Q(zeta)")
        phi = [Fraction(c) for c in cyclotomic_polynomial(self.level)]
        g, u = _poly_half_xgcd(list(self.coeffs), phi)
        # g is a nonzero constant since Phi_e is irreducible over Q
        if len(g) != 1 or g[0] == 0:
            raise InternalInconsistency("gcd with Phi_e not constant")
        inv = [c / g[0] for c in u]
        return CycNumber.from_power_coeffs(self.level, inv)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError
            return CycNumber(self.level, [a / other for a in self.coeffs])
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return CycNumber.from_rational(self.level, other) / self

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.coeffs[0] == other
        if isinstance(other, CycNumber):
            if other.level == self.level:
                return self.coeffs == other.coeffs
            lcm = math.lcm(self.level, other.level)
            return self.lift(lcm).coeffs == other.lift(lcm).coeffs
        return NotImplemented

    def __hash__(self):
        if self.is_rational():
            return hash(self.coeffs[0])
        return hash((self.level, self.coeffs))

    def __repr__(self):
        return f"CycNumber(level={self.level}, coeffs={[str(c) for c in self.coeffs]})"

    # -- structure maps --------------------------------------------------

    def lift(self, new_level: int) -> "CycNumber":
        """Image under the embedding Q(zeta_e) -> Q(zeta_e'), e | e'."""
        if new_level == self.level:
            return self
        if new_level % self.level:
            raise ValueError(f"{self.level} does not divide {new_level}")
        step = new_level // self.level
        acc = [Fraction(0)] * (euler_phi(self.level) * step - step + 1)
        for j, c in enumerate(self.coeffs):
            acc[j * step] = c
        return CycNumber.from_power_coeffs(new_level, acc)


def galois_apply(k: int, x: CycNumber) -> CycNumber:
    """The automorphism zeta -> zeta^k of Q(zeta_e), gcd(k, e) = 1."""
    e = x.level
    if math.gcd(k, e) != 1:
        raise NotCoprime(f"gcd({k}, {e}) != 1")
    acc = [Fraction(0)] * e
    for i, c in enumerate(x.coeffs):
        if c:
            acc[(i * k) % e] += c
    return CycNumber.from_power_coeffs(e, acc)


def absolute_norm(x: CycNumber) -> Rational:
    """Product of all Galois conjugates of x; certified rational."""
    e = x.level
    prod = CycNumber.from_rational(e, 1)
    for k in range(1, e + 1):
        if math.gcd(k, e) == 1:
            prod = prod * galois_apply(k, x)
    if not prod.is_rational():
        raise InternalInconsistency("norm did not land in Q")
    return prod.as_rational()


def pi_element(m: int) -> CycNumber:
    """2 + zeta + 1/zeta for the 2^m-th root of unity, at level 2^m.

    Totally real of norm 2 down its real tower; satisfies
    (pi_m - 2)^2 = pi_(m-1) after lifting levels.
    """
    if m < 2:
        raise ValueError(f"need m >= 2, got {m}")
    e = 2**m
    z = CycNumber.zeta(e)
    return z + CycNumber.zeta(e, e - 1) + 2


def _poly_half_xgcd(a: list[Fraction], b: list[Fraction]):
    """Return (g, u) with u*a = g mod b, g = gcd(a, b) over Q[x]."""
    r0, r1 = _poly_trim(a), _poly_trim(b)
    u0, u1 = [Fraction(1)], [Fraction(0)]
    while r1 != [Fraction(0)]:
        q, r = _poly_divmod(r0, r1)
        r0, r1 = r1, r
        u0, u1 = u1, _poly_sub(u0, _poly_mul(q, u1))
    return r0, u0


def _poly_trim(p):
    p = list(p)
    while len(p) > 1 and p[-1] == 0:
        p.pop()
    return p


def _poly_sub(a, b):
    n = max(len(a), len(b))
    a = a + [Fraction(0)] * (n - len(a))
    b = b + [Fraction(0)] * (n - len(b))
    return _poly_trim([x - y for x, y in zip(a, b)])


def _poly_mul(a, b):
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _poly_trim(out)


def _poly_divmod(a, b):
    a = list(a)
    db = len(b) - 1
    if db == 0:
        return [x / b[0] for x in a], [Fraction(0)]
    q = [Fraction(0)] * max(1, len(a) - db)
    while len(a) - 1 >= db and a != [Fraction(0)]:
        shift = len(a) - 1 - db
        c = a[-1] / b[-1]
        q[shift] = c
        for j, y in enumerate(b):
            a[shift + j] -= c * y
        a = _poly_trim(a)
    return _poly_trim(q), a
