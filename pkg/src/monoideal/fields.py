"""Exact coefficient fields: arbitrary-precision rationals and prime fields.

Characteristic-0 elements are Python ints or ``Fraction``s (ints whenever the
value is integral); prime-field elements are ints reduced into ``[0, p)``.
No floating point appears anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

MAX_CHARACTERISTIC = 2**31


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    if n % 3 == 0:
        return n == 3
    f = 5
    while f * f <= n:
        if n % f == 0 or n % (f + 2) == 0:
            return False
        f += 6
    return True


@dataclass(frozen=True)
class FieldSpec:
    """A ground field: characteristic 0 means QQ, a prime p means GF(p)."""

    characteristic: int = 0

    def __post_init__(self):
        p = self.characteristic
        if p == 0:
            return
        if not (2 <= p < MAX_CHARACTERISTIC) or not is_prime(p):
            raise ValueError(
                f"characteristic must be 0 or a prime below 2^31, got {p}"
            )

    @property
    def kind(self) -> str:
        return "rationals" if self.characteristic == 0 else "prime_field"

    def __str__(self):
        return "QQ" if self.characteristic == 0 else f"ZZ/{self.characteristic}"

    # -- element construction ------------------------------------------------

    def of(self, numerator, denominator=1):
        """Image of numerator/denominator in the field.

        Raises ZeroDivisionError when the denominator vanishes in the field.
        """
        if isinstance(numerator, Fraction):
            numerator, denominator = (
                numerator.numerator,
                numerator.denominator * denominator,
            )
        p = self.characteristic
        if p == 0:
            v = Fraction(numerator, denominator)
            return v.numerator if v.denominator == 1 else v
        d = denominator % p
        if d == 0:
            raise ZeroDivisionError(f"denominator {denominator} vanishes mod {p}")
        return numerator % p * pow(d, -1, p) % p

    # -- arithmetic ----------------------------------------------------------

    def add(self, a, b):
        s = a + b
        return s if self.characteristic == 0 else s % self.characteristic

    def sub(self, a, b):
        s = a - b
        return s if self.characteristic == 0 else s % self.characteristic

    def mul(self, a, b):
        s = a * b
        return s if self.characteristic == 0 else s % self.characteristic

    def neg(self, a):
        return -a if self.characteristic == 0 else -a % self.characteristic

    def inv(self, a):
        if self.characteristic == 0:
            return self.of(1, a)
        return pow(a, -1, self.characteristic)

    def div(self, a, b):
        if self.characteristic == 0:
            return self.of(Fraction(a) / Fraction(b))
        return a * self.inv(b) % self.characteristic
