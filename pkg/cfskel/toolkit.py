import re

from typing import Union
from fractions import Fraction
from sympy import isprime
from sympy import multiplicity

from .errors import InputError


TRational = Union[int, str, Fraction]

rational_pattern = re.compile(r"^-?\d+(/\d+)?$")


def parse_rational(text: str) -> Fraction:
    text = text.strip()
    if not rational_pattern.match(text):
        raise InputError(f"invalid rational occurred: '{text}'")
    if "/" in text:
        numerator, denominator = text.split("/")
        if int(denominator) == 0:
            raise InputError(f"zero denominator occurred: '{text}'")
        return Fraction(int(numerator), int(denominator))
    return Fraction(int(text))


def to_fraction(value: TRational) -> Fraction:
    # no floats
    if isinstance(value, bool):
        raise InputError(f"boolean is not a rational: {value}")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise InputError(f"unsupported rational type: {type(value).__name__}")


def format_rational(value: TRational) -> str:
    q = to_fraction(value)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def as_integer(value: TRational, what: str = "value") -> int:
    q = to_fraction(value)
    if q.denominator != 1:
        raise InputError(f"{what} should be an integer, but got {format_rational(q)}")
    return q.numerator


def require_prime(p: int, what: str = "p") -> int:
    if not isinstance(p, int) or not isprime(p):
        raise InputError(f"{what} should be a prime, but got {p}")
    return p


def require_positive(n: int, what: str) -> int:
    if not isinstance(n, int) or n < 1:
        raise InputError(f"{what} should be a positive integer, but got {n}")
    return n


def require_non_negative(n: int, what: str) -> int:
    if not isinstance(n, int) or n < 0:
        raise InputError(f"{what} should be a non-negative integer, but got {n}")
    return n


def p_adic_valuation(n: int, p: int) -> int:
    if n == 0:
        raise InputError("valuation of zero is infinite")
    return int(multiplicity(p, abs(n)))


__all__ = [
    "TRational",
    "parse_rational",
    "to_fraction",
    "format_rational",
    "as_integer",
    "require_prime",
    "require_positive",
    "require_non_negative",
    "p_adic_valuation",
]
