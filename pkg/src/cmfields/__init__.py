"""Exact arithmetic for abelian CM-fields: minus class numbers, Hasse
unit indices, and executable divisibility checks."""

from .arith import Rational, factorize, unit_group
from .characters import (
    DirichletCharacter,
    char_mul,
    char_pow,
    galois_orbits,
    make_character,
)
from .cyclotomic import CycNumber, absolute_norm, cyclotomic_polynomial, galois_apply, pi_element
from .fields import (
    AbelianField,
    cyclotomic_field,
    field_from_generators,
    is_fundamental_discriminant,
    quadratic_field,
)
from .fieldspec import parse_field_spec
from .hminus import MinusReport, bernoulli_b1, minus_class_number, minus_partial_product
from .quadratic import (
    QuadForm,
    QuadIdeal,
    class_number,
    fundamental_unit_norm,
    ideal_sqrt_of_element,
    is_principal,
    split_prime,
)
from .unitindex import UnitIndexVerdict, hasse_unit_index, martinet_pair

__all__ = [
    "AbelianField",
    "CycNumber",
    "DirichletCharacter",
    "MinusReport",
    "QuadForm",
    "QuadIdeal",
    "Rational",
    "UnitIndexVerdict",
    "absolute_norm",
    "bernoulli_b1",
    "char_mul",
    "char_pow",
    "class_number",
    "cyclotomic_field",
    "cyclotomic_polynomial",
    "factorize",
    "field_from_generators",
    "fundamental_unit_norm",
    "galois_apply",
    "galois_orbits",
    "hasse_unit_index",
    "ideal_sqrt_of_element",
    "is_fundamental_discriminant",
    "is_principal",
    "make_character",
    "martinet_pair",
    "minus_class_number",
    "minus_partial_product",
    "parse_field_spec",
    "pi_element",
    "quadratic_field",
    "split_prime",
    "unit_group",
]
