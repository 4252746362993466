"""Exact integer number theory used throughout the package.

Factorization (trial division backed by a sieve, then Pollard-Brent rho),
divisor machinery, the Euler and Dedekind multiplicative functions, exact
cyclotomic values including the twisted factors of Phi_6 and Phi_12, the
prime-power equation p^m = q^n + 1, and the divisibility predicates about
q^4(q^4-1)(q^2-1) that the characterization pipeline relies on.

All arithmetic is arbitrary precision; nothing here ever goes through floats.
Primality below 2^64 is deterministic Miller-Rabin; above it the test is
probabilistic (64 fixed-seed rounds) and documented as such.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache
from math import gcd, isqrt

__all__ = [
    "Factorization",
    "CatalanSolution",
    "DivisibilityCheck",
    "DivisibilityReport",
    "factorize",
    "divisors",
    "prime_divisors",
    "is_prime",
    "is_prime_power",
    "euler_phi",
    "dedekind_psi",
    "cyclotomic_eval",
    "twisted_cyclotomic_eval",
    "classify_catalan",
    "search_catalan",
    "divisibility_predicates",
    "power_of_two_exponent",
    "nth_root",
    "coprime_part",
]

_SIEVE_BOUND = 1_000_000
# Deterministic Miller-Rabin witnesses for n < 3.3 * 10^24 (covers 2^64).
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
_MR_EXTRA_ROUNDS = 64
_MR_SEED = 0x5CA1AB1E


@lru_cache(maxsize=1)
def _small_primes() -> tuple[int, ...]:
    """Primes below 10^6 (sieve of Eratosthenes), computed once."""
    n = _SIEVE_BOUND
    sieve = bytearray([1]) * n
    sieve[0] = sieve[1] = 0
    for p in range(2, isqrt(n) + 1):
        if sieve[p]:
            sieve[p * p :: p] = bytearray(len(range(p * p, n, p)))
    return tuple(i for i in range(n) if sieve[i])


def is_prime(n: int) -> bool:
    """Miller-Rabin primality: deterministic below 2^64, 64 seeded rounds above."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1

    def witness(a: int) -> bool:
        x = pow(a, d, n)
        if x in (1, n - 1):
            return False
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                return False
        return True

    bases = list(_MR_BASES)
    if n >= 1 << 64:
        rng = random.Random(_MR_SEED ^ n)
        bases += [rng.randrange(2, n - 1) for _ in range(_MR_EXTRA_ROUNDS)]
    return not any(witness(a) for a in bases)


def _pollard_brent(n: int) -> int:
    """A nontrivial factor of odd composite n (Brent's cycle variant)."""
    if n % 2 == 0:
        return 2
    rng = random.Random(n)
    while True:
        y = rng.randrange(1, n)
        c = rng.randrange(1, n)
        m = 128
        g = r = q = 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = gcd(q, n)
                k += m
            r <<= 1
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = gcd(abs(x - ys), n)
        if g != n:
            return g


@dataclass(frozen=True)
class Factorization:
    """Prime factorization as (prime, exponent) pairs, primes strictly increasing."""

    pairs: tuple[tuple[int, int], ...]

    @property
    def value(self) -> int:
        v = 1
        for p, e in self.pairs:
            v *= p**e
        return v

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.pairs)

    def __iter__(self):
        return iter(self.pairs)

    def __len__(self) -> int:
        return len(self.pairs)


@lru_cache(maxsize=65536)
def factorize(n: int) -> Factorization:
    """Full factorization of n >= 1; n = 1 gives the empty product."""
    if n < 1:
        raise ValueError(f"factorize requires n >= 1, got {n}")
    out: dict[int, int] = {}
    m = n
    exhausted_sieve = True
    for p in _small_primes():
        if p * p > m:
            exhausted_sieve = False
            break
        while m % p == 0:
            out[p] = out.get(p, 0) + 1
            m //= p
    if m > 1:
        if not exhausted_sieve:
            # trial division reached sqrt(m), so the cofactor is prime
            out[m] = out.get(m, 0) + 1
        else:
            stack = [m]
            while stack:
                v = stack.pop()
                if is_prime(v):
                    out[v] = out.get(v, 0) + 1
                else:
                    d = _pollard_brent(v)
                    stack.append(d)
                    stack.append(v // d)
    return Factorization(tuple(sorted(out.items())))


def divisors(n: int) -> list[int]:
    """All positive divisors of n, ascending."""
    divs = [1]
    for p, e in factorize(n):
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return sorted(divs)


def prime_divisors(n: int) -> list[int]:
    """The primes dividing n, ascending (pi(n))."""
    return list(factorize(n).primes)


def is_prime_power(n: int) -> tuple[int, int] | None:
    """(p, k) with n = p^k, or None when n is not a prime power (or n < 2)."""
    if n < 2:
        return None
    fac = factorize(n)
    if len(fac) != 1:
        return None
    return fac.pairs[0]


def euler_phi(n: int) -> int:
    """Euler totient via the product formula."""
    v = n
    for p in factorize(n).primes:
        v = v // p * (p - 1)
    return v


def dedekind_psi(n: int) -> int:
    """Dedekind psi: n * prod_{p | n} (1 + 1/p)."""
    v = n
    for p in factorize(n).primes:
        v = v // p * (p + 1)
    return v


@lru_cache(maxsize=None)
def cyclotomic_eval(n: int, x: int) -> int:
    """Phi_n(x) exactly, by dividing x^n - 1 by the proper-divisor cyclotomics."""
    if n < 1:
        raise ValueError(f"cyclotomic index must be >= 1, got {n}")
    if x < 2:
        raise ValueError(f"cyclotomic argument must be >= 2, got {x}")
    if n == 1:
        return x - 1
    value = x**n - 1
    for d in divisors(n)[:-1]:
        value, rem = divmod(value, cyclotomic_eval(d, x))
        if rem:
            raise ArithmeticError(f"inexact cyclotomic division at n={n}, x={x}")
    return value


def twisted_cyclotomic_eval(n: int, sign: int, x: int) -> int | None:
    """Twisted factor of Phi_6 or Phi_12 at x, or None when undefined.

    Phi_6^e(x)  = x + e*sqrt(3x) + 1, defined when 3x is a perfect square;
    Phi_12^e(x) = x^2 + e*x*sqrt(2x) + x + e*sqrt(2x) + 1, when 2x is a square.
    Whenever both signs are defined their product is the plain cyclotomic value.
    """
    if n not in (6, 12):
        raise ValueError(f"twisted cyclotomic defined for n in (6, 12), got {n}")
    if sign not in (1, -1):
        raise ValueError(f"sign must be +1 or -1, got {sign}")
    if x < 2:
        raise ValueError(f"argument must be >= 2, got {x}")
    if n == 6:
        s = isqrt(3 * x)
        if s * s != 3 * x:
            return None
        return x + sign * s + 1
    s = isqrt(2 * x)
    if s * s != 2 * x:
        return None
    return x * x + sign * x * s + x + sign * s + 1


CATALAN_EXCEPTIONAL = "Exceptional"
CATALAN_FERMAT = "Fermat"
CATALAN_MERSENNE = "Mersenne"


@dataclass(frozen=True)
class CatalanSolution:
    """A solution of p^m = q^n + 1 in primes p, q, with its classification."""

    p: int
    q: int
    m: int
    n: int
    kind: str

    @property
    def value(self) -> int:
        return self.p**self.m


def classify_catalan(p: int, q: int, m: int, n: int) -> CatalanSolution | None:
    """Classify a prime-power solution of p^m = q^n + 1, or None if it is not one.

    The three possible shapes: the single exceptional solution 3^2 = 2^3 + 1,
    a Fermat prime p = 2^n + 1 (n a power of 2), or a Mersenne prime
    q = 2^m - 1 (m prime).
    """
    if min(p, q, m, n) < 1:
        return None
    if not (is_prime(p) and is_prime(q)):
        return None
    if p**m != q**n + 1:
        return None
    if (p, q, m, n) == (3, 2, 2, 3):
        return CatalanSolution(p, q, m, n, CATALAN_EXCEPTIONAL)
    if q == 2 and m == 1 and n & (n - 1) == 0:
        return CatalanSolution(p, q, m, n, CATALAN_FERMAT)
    if p == 2 and n == 1 and is_prime(m):
        return CatalanSolution(p, q, m, n, CATALAN_MERSENNE)
    raise AssertionError(f"unclassifiable solution {p}^{m} = {q}^{n}+1")


def search_catalan(bound: int) -> list[CatalanSolution]:
    """All solutions p^m = q^n + 1 with p^m <= bound, classified."""
    if bound < 2:
        raise ValueError(f"bound must be >= 2, got {bound}")
    if bound > _SIEVE_BOUND:
        # every base q with q + 1 <= bound must come out of the sieve
        raise ValueError(f"search bound above {_SIEVE_BOUND} is unsupported")
    found: list[CatalanSolution] = []
    for q in _small_primes():
        if q + 1 > bound:
            break
        power = q
        n = 1
        while power + 1 <= bound:
            pk = is_prime_power(power + 1)
            if pk is not None:
                p, m = pk
                sol = classify_catalan(p, q, m, n)
                if sol is None:
                    raise AssertionError(f"search produced non-solution {p, q, m, n}")
                found.append(sol)
            power *= q
            n += 1
    return sorted(found, key=lambda s: (s.value, s.q, s.n))


@dataclass(frozen=True)
class DivisibilityCheck:
    """Outcome of one division: divisor | dividend, with quotient or remainder."""

    label: str
    divisor: int
    divides: bool
    quotient: int | None
    remainder: int


@dataclass(frozen=True)
class DivisibilityReport:
    """The five divisibility clauses about q^4(q^4-1)(q^2-1)."""

    q: int
    dividend: int
    checks: tuple[DivisibilityCheck, ...]

    def check(self, label: str) -> DivisibilityCheck:
        for c in self.checks:
            if c.label == label:
                return c
        raise KeyError(label)


def power_of_two_exponent(q: int) -> int | None:
    """f with q = 2^f, or None if q is not a power of two (q >= 1)."""
    if q < 1 or q & (q - 1):
        return None
    return q.bit_length() - 1


def divisibility_predicates(q: int) -> DivisibilityReport:
    """Divisibility of the five test values into q^4(q^4-1)(q^2-1), with witnesses.

    For q = 2^f > 2 the expected pattern: 2q^2+3 and q^4-9 never divide,
    2q^2+1 never divides, and q^2+2 and 3q^2+2 divide only at q = 4.
    """
    f = power_of_two_exponent(q)
    if f is None or q <= 2:
        raise ValueError(f"q must be a power of 2 greater than 2, got {q}")
    dividend = q**4 * (q**4 - 1) * (q**2 - 1)
    values = (
        ("i", 2 * q * q + 3),
        ("ii", q * q + 2),
        ("iii", 2 * q * q + 1),
        ("iv", 3 * q * q + 2),
        ("v", q**4 - 9),
    )
    checks = []
    for label, d in values:
        quot, rem = divmod(dividend, d)
        checks.append(
            DivisibilityCheck(label, d, rem == 0, quot if rem == 0 else None, rem)
        )
    return DivisibilityReport(q, dividend, tuple(checks))


def nth_root(n: int, k: int) -> int:
    """Floor of the k-th root of n >= 0 (exact integer arithmetic)."""
    if n < 0 or k < 1:
        raise ValueError(f"nth_root requires n >= 0, k >= 1, got {n}, {k}")
    if k == 1 or n < 2:
        return n
    hi = 1 << (n.bit_length() // k + 1)
    lo = 0
    while lo + 1 < hi:
        mid = (lo + hi) // 2
        if mid**k <= n:
            lo = mid
        else:
            hi = mid
    return lo


def coprime_part(n: int, k: int) -> int:
    """Largest divisor of n coprime to k."""
    if n < 1:
        raise ValueError(f"coprime_part requires n >= 1, got {n}")
    v = 1
    for p, e in factorize(n):
        if k % p:
            v *= p**e
    return v
