"""Arithmetic in GF(2^f) with a deterministic choice of modulus.

Elements are f-bit masks read as polynomials over GF(2); the modulus for each
degree is the lexicographically smallest irreducible polynomial (smallest mask
with the leading x^f bit set), so every run of the package works in the same
concrete field and golden files stay stable.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .arith import divisors

__all__ = [
    "FieldSpec",
    "FieldElement",
    "lexicographic_modulus",
    "multiplicative_order",
    "find_generator",
]


def _poly_rem(num: int, den: int) -> int:
    """Remainder of polynomial division over GF(2) (den != 0)."""
    dd = den.bit_length() - 1
    while num.bit_length() - 1 >= dd and num:
        num ^= den << (num.bit_length() - 1 - dd)
    return num


def _is_irreducible(poly: int, f: int) -> bool:
    # trial division by every polynomial of degree 1 .. f//2
    for d in range(1, f // 2 + 1):
        for cand in range(1 << d, 1 << (d + 1)):
            if _poly_rem(poly, cand) == 0:
                return False
    return True


@lru_cache(maxsize=None)
def lexicographic_modulus(f: int) -> int:
    """Smallest irreducible degree-f polynomial over GF(2), as a bitmask."""
    if f < 1:
        raise ValueError(f"degree must be >= 1, got {f}")
    for mask in range(1 << f, 1 << (f + 1)):
        if _is_irreducible(mask, f):
            return mask
    raise AssertionError(f"no irreducible polynomial of degree {f}")


@dataclass(frozen=True)
class FieldSpec:
    """GF(2^f) with a fixed irreducible modulus (bitmask includes the x^f term)."""

    f: int
    modulus: int

    @classmethod
    def for_degree(cls, f: int) -> FieldSpec:
        return cls(f, lexicographic_modulus(f))

    @property
    def order(self) -> int:
        """Number of field elements, 2^f."""
        return 1 << self.f

    def add(self, a: int, b: int) -> int:
        return a ^ b

    def mul(self, a: int, b: int) -> int:
        r = 0
        while b:
            if b & 1:
                r ^= a
            b >>= 1
            a <<= 1
            if a >> self.f:
                a ^= self.modulus
        return r

    def pow(self, a: int, k: int) -> int:
        if k < 0:
            a = self.inv(a)
            k = -k
        r = 1
        while k:
            if k & 1:
                r = self.mul(r, a)
            a = self.mul(a, a)
            k >>= 1
        return r

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inversion of zero in GF(2^f)")
        return self.pow(a, self.order - 2)

    def element(self, bits: int) -> FieldElement:
        return FieldElement(self, bits)

    @property
    def zero(self) -> FieldElement:
        return FieldElement(self, 0)

    @property
    def one(self) -> FieldElement:
        return FieldElement(self, 1)


@dataclass(frozen=True)
class FieldElement:
    """An element of a fixed FieldSpec; comparison and hashing are on the bits."""

    spec: FieldSpec
    bits: int

    def __post_init__(self) -> None:
        if not 0 <= self.bits < self.spec.order:
            raise ValueError(f"bits {self.bits} out of range for GF(2^{self.spec.f})")

    def _check(self, other: FieldElement) -> None:
        if self.spec != other.spec:
            raise ValueError("elements of different field specs")

    def __add__(self, other: FieldElement) -> FieldElement:
        self._check(other)
        return FieldElement(self.spec, self.bits ^ other.bits)

    def __mul__(self, other: FieldElement) -> FieldElement:
        self._check(other)
        return FieldElement(self.spec, self.spec.mul(self.bits, other.bits))

    def __pow__(self, k: int) -> FieldElement:
        return FieldElement(self.spec, self.spec.pow(self.bits, k))

    def inverse(self) -> FieldElement:
        return FieldElement(self.spec, self.spec.inv(self.bits))

    def __bool__(self) -> bool:
        return self.bits != 0


def multiplicative_order(elem: FieldElement) -> int:
    """Smallest k >= 1 with elem^k = 1 (error on zero)."""
    if elem.bits == 0:
        raise ZeroDivisionError("zero has no multiplicative order")
    spec = elem.spec
    for d in divisors(spec.order - 1):
        if spec.pow(elem.bits, d) == 1:
            return d
    raise AssertionError("order not found below group order")


def find_generator(spec: FieldSpec) -> FieldElement:
    """The generator of GF(2^f)^x with the smallest bits value (deterministic)."""
    target = spec.order - 1
    for bits in range(1, spec.order):
        if multiplicative_order(spec.element(bits)) == target:
            return spec.element(bits)
    raise AssertionError("no generator found")
