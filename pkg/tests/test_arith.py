import random
from math import gcd, isqrt

import pytest

from psp4nse.arith import (
    CATALAN_EXCEPTIONAL,
    CATALAN_FERMAT,
    CATALAN_MERSENNE,
    classify_catalan,
    coprime_part,
    cyclotomic_eval,
    dedekind_psi,
    divisors,
    euler_phi,
    factorize,
    is_prime,
    is_prime_power,
    nth_root,
    power_of_two_exponent,
    divisibility_predicates,
    search_catalan,
    twisted_cyclotomic_eval,
)


def test_factorize_basics():
    assert factorize(1).pairs == ()
    assert factorize(979200).pairs == ((2, 8), (3, 2), (5, 2), (17, 1))
    assert factorize(65).pairs == ((5, 1), (13, 1))
    with pytest.raises(ValueError):
        factorize(0)


def test_factorize_reconstructs():
    rng = random.Random(11)
    for _ in range(200):
        n = rng.randrange(1, 10**12)
        fac = factorize(n)
        assert fac.value == n
        assert all(is_prime(p) for p in fac.primes)
        assert list(fac.primes) == sorted(fac.primes)


def test_factorize_large_semiprime():
    # both factors above the trial-division sieve
    p, q = 1_000_003, 1_000_033
    assert factorize(p * q).pairs == ((p, 1), (q, 1))


def test_divisors():
    assert divisors(1) == [1]
    assert divisors(12) == [1, 2, 3, 4, 6, 12]
    assert divisors(17) == [1, 17]


def test_phi_psi_values():
    assert euler_phi(1) == 1 and dedekind_psi(1) == 1
    assert euler_phi(17) == 16 and dedekind_psi(17) == 18
    assert euler_phi(15) == 8
    assert dedekind_psi(6) == 12


def test_phi_psi_multiplicative():
    rng = random.Random(7)
    pairs = []
    while len(pairs) < 300:
        a, b = rng.randrange(1, 10**4), rng.randrange(1, 10**4)
        if gcd(a, b) == 1:
            pairs.append((a, b))
    for a, b in pairs:
        assert euler_phi(a * b) == euler_phi(a) * euler_phi(b)
        assert dedekind_psi(a * b) == dedekind_psi(a) * dedekind_psi(b)


def test_phi_divisor_sum_identity():
    for n in range(1, 10**4 + 1):
        assert sum(euler_phi(d) for d in divisors(n)) == n


def test_cyclotomic_values():
    assert cyclotomic_eval(1, 5) == 4
    assert cyclotomic_eval(12, 2) == 13
    assert cyclotomic_eval(9, 2) == 73


def test_cyclotomic_divides_power_minus_one():
    for n in range(1, 65):
        for x in (2, 3, 4, 5):
            assert (x**n - 1) % cyclotomic_eval(n, x) == 0


def test_cyclotomic_product_identity():
    for n in (6, 10, 12, 24, 36):
        for x in (2, 3, 5):
            prod = 1
            for d in divisors(n):
                prod *= cyclotomic_eval(d, x)
            assert prod == x**n - 1


def test_twisted_cyclotomic():
    assert twisted_cyclotomic_eval(6, 1, 3) == 7
    assert twisted_cyclotomic_eval(12, 1, 2) == 13
    assert twisted_cyclotomic_eval(12, -1, 2) == 1
    assert twisted_cyclotomic_eval(6, 1, 5) is None
    with pytest.raises(ValueError):
        twisted_cyclotomic_eval(5, 1, 2)


def test_twisted_product_identity():
    # whenever both signs are defined, the product is the plain cyclotomic value
    for t in range(1, 6):
        x = 3 ** (2 * t + 1)
        plus = twisted_cyclotomic_eval(6, 1, x)
        minus = twisted_cyclotomic_eval(6, -1, x)
        assert plus is not None and minus is not None
        assert plus * minus == cyclotomic_eval(6, x)
    for t in range(1, 6):
        x = 2 ** (2 * t + 1)
        plus = twisted_cyclotomic_eval(12, 1, x)
        minus = twisted_cyclotomic_eval(12, -1, x)
        assert plus * minus == cyclotomic_eval(12, x)


def test_classify_catalan():
    assert classify_catalan(3, 2, 2, 3).kind == CATALAN_EXCEPTIONAL
    assert classify_catalan(17, 2, 1, 4).kind == CATALAN_FERMAT
    assert classify_catalan(2, 7, 3, 1).kind == CATALAN_MERSENNE
    assert classify_catalan(5, 2, 1, 3) is None  # 5 != 9
    assert classify_catalan(4, 3, 1, 1) is None  # 4 not prime


def _brute_catalan(bound):
    """Independent double loop: q prime, q^n + 1 <= bound a prime power."""
    def prime_power(v):
        for p in range(2, isqrt(v) + 1):
            if v % p == 0:
                k = 0
                while v % p == 0:
                    v //= p
                    k += 1
                return (p, k) if v == 1 else None
        return (v, 1)

    def naive_prime(n):
        return n >= 2 and all(n % d for d in range(2, isqrt(n) + 1))

    sols = set()
    for q in range(2, bound):
        if not naive_prime(q):
            continue
        power, n = q, 1
        while power + 1 <= bound:
            pk = prime_power(power + 1)
            if pk is not None:
                sols.add((pk[0], q, pk[1], n))
            power *= q
            n += 1
    return sols


def test_search_catalan_small_vs_bruteforce():
    got = {(s.p, s.q, s.m, s.n) for s in search_catalan(10**4)}
    assert got == _brute_catalan(10**4)


def test_search_catalan_million():
    sols = search_catalan(10**6)
    got = {(s.p, s.q, s.m, s.n) for s in sols}
    # independent loop, restricted by parity: odd q forces v = q^n+1 even, so a
    # prime-power value must be a power of 2; q = 2 is scanned directly.
    expected = set()
    n = 1
    while 2**n + 1 <= 10**6:
        v = 2**n + 1
        root = isqrt(v)
        if root * root == v and is_prime(root):
            expected.add((root, 2, 2, n))
        elif is_prime(v):
            expected.add((v, 2, 1, n))
        n += 1
    m = 2
    while 2**m <= 10**6:
        q = 2**m - 1
        if is_prime(q):
            expected.add((2, q, m, 1))
        m += 1
    assert got == expected
    # each solution sits in exactly one clause
    for s in sols:
        flags = [
            (s.p, s.q, s.m, s.n) == (3, 2, 2, 3),
            s.q == 2 and s.m == 1 and s.n & (s.n - 1) == 0,
            s.p == 2 and s.n == 1 and is_prime(s.m),
        ]
        assert sum(flags) == 1, s


def test_divisibility_predicates_witnesses():
    rep4 = divisibility_predicates(4)
    assert rep4.check("iv").divides and rep4.check("iv").quotient == 19584
    assert not rep4.check("i").divides and rep4.check("i").remainder == 5
    rep8 = divisibility_predicates(8)
    assert not rep8.check("ii").divides
    with pytest.raises(ValueError):
        divisibility_predicates(2)
    with pytest.raises(ValueError):
        divisibility_predicates(12)


def test_divisibility_predicates_pattern():
    # q^2+2 and 3q^2+2 divide only at q = 4; the others never divide (q > 2)
    for f in range(2, 11):
        rep = divisibility_predicates(1 << f)
        assert not rep.check("i").divides
        assert rep.check("ii").divides == (f == 2)
        assert not rep.check("iii").divides
        assert rep.check("iv").divides == (f == 2)
        assert not rep.check("v").divides


def test_misc_helpers():
    assert power_of_two_exponent(64) == 6
    assert power_of_two_exponent(12) is None
    assert nth_root(10**18, 3) == 10**6
    assert nth_root(26, 3) == 2
    assert is_prime_power(81) == (3, 4)
    assert is_prime_power(12) is None
    assert coprime_part(979200, 10) == 9 * 17
