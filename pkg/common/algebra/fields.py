#!/usr/bin/env python3
"""
Coefficient Fields
The rationals and prime fields GF(p) with exact scalar arithmetic
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Union

import sympy

from common.errors import FieldError

Scalar = Union[Fraction, int]


@dataclass(frozen=True)
class FieldSpec:
    """Coefficient field: kind is "rational" or "prime" (with p)"""

    kind: str = "rational"
    p: int = 0

    def __post_init__(self):
        if self.kind not in ("rational", "prime"):
            raise FieldError(
                f"Unknown field kind '{self.kind}'. Please use 'rational' or 'prime'."
            )
        if self.kind == "prime" and not sympy.isprime(self.p):
            raise FieldError(f"GF({self.p}) is not a field. Please use a prime p.")

    @classmethod
    def rational(cls) -> "FieldSpec":
        return cls("rational", 0)

    @classmethod
    def prime(cls, p: int) -> "FieldSpec":
        return cls("prime", p)

    @classmethod
    def parse(cls, text: str) -> "FieldSpec":
        """Parse 'Q', 'rational', 'GF(2)', 'gf2' or a bare prime"""
        value = text.strip().lower()
        if value in ("q", "qq", "rational", "rationals"):
            return cls.rational()
        for prefix in ("gf(", "gf", "f"):
            if value.startswith(prefix):
                value = value[len(prefix):].rstrip(")")
                break
        try:
            return cls.prime(int(value))
        except ValueError:
            raise FieldError(
                f"Cannot parse field '{text}'. Please use Q or GF(p), e.g. GF(2)."
            )

    @property
    def is_rational(self) -> bool:
        return self.kind == "rational"

    @property
    def characteristic(self) -> int:
        return self.p

    @property
    def name(self) -> str:
        return "Q" if self.is_rational else f"GF({self.p})"

    def zero(self) -> Scalar:
        return Fraction(0) if self.is_rational else 0

    def one(self) -> Scalar:
        return Fraction(1) if self.is_rational else 1

    def coerce(self, value: Any) -> Scalar:
        if self.is_rational:
            return Fraction(value)
        if isinstance(value, Fraction):
            return (value.numerator * pow(value.denominator, -1, self.p)) % self.p
        return int(value) % self.p

    def add(self, a: Scalar, b: Scalar) -> Scalar:
        return a + b if self.is_rational else (a + b) % self.p

    def sub(self, a: Scalar, b: Scalar) -> Scalar:
        return a - b if self.is_rational else (a - b) % self.p

    def mul(self, a: Scalar, b: Scalar) -> Scalar:
        return a * b if self.is_rational else (a * b) % self.p

    def neg(self, a: Scalar) -> Scalar:
        return -a if self.is_rational else (-a) % self.p

    def inv(self, a: Scalar) -> Scalar:
        if self.is_zero(a):
            raise ZeroDivisionError("inverse of zero")
        return 1 / Fraction(a) if self.is_rational else pow(a, -1, self.p)

    def div(self, a: Scalar, b: Scalar) -> Scalar:
        return self.mul(a, self.inv(b))

    def is_zero(self, a: Scalar) -> bool:
        return a == 0

    def format(self, a: Scalar) -> str:
        """Exact decimal-free string: '3/2' or '1 mod 2'"""
        if self.is_rational:
            return str(Fraction(a))
        return f"{a % self.p} mod {self.p}"

    def parse_scalar(self, text: str) -> Scalar:
        value = str(text).strip()
        if " mod " in value:
            value = value.split(" mod ")[0]
        return self.coerce(Fraction(value))


RATIONALS = FieldSpec.rational()
GF2 = FieldSpec.prime(2)
