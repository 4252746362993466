import pytest

from psp4nse.arith import divisors, euler_phi
from psp4nse.gf2 import FieldSpec, find_generator, lexicographic_modulus, multiplicative_order


def test_lexicographic_moduli():
    # smallest irreducibles: x^2+x+1, x^3+x+1, x^4+x+1
    assert lexicographic_modulus(2) == 0b111
    assert lexicographic_modulus(3) == 0b1011
    assert lexicographic_modulus(4) == 0b10011


def test_gf4_basics():
    s = FieldSpec.for_degree(2)
    x = 2  # the polynomial x
    assert s.add(x, x) == 0
    assert s.mul(x, x) == 3  # x^2 = x + 1 under x^2+x+1
    assert multiplicative_order(s.element(x)) == 3
    assert multiplicative_order(s.element(1)) == 1
    with pytest.raises(ZeroDivisionError):
        s.inv(0)
    with pytest.raises(ZeroDivisionError):
        multiplicative_order(s.element(0))


@pytest.mark.parametrize("f", [2, 3, 4, 5])
def test_field_axioms_exhaustive(f):
    s = FieldSpec.for_degree(f)
    n = s.order
    elements = range(n)
    for a in elements:
        for b in elements:
            assert s.mul(a, b) == s.mul(b, a)
            for c in elements:
                assert s.mul(s.mul(a, b), c) == s.mul(a, s.mul(b, c))
                assert s.mul(a, s.add(b, c)) == s.add(s.mul(a, b), s.mul(a, c))


@pytest.mark.parametrize("f", [2, 3, 4, 5])
def test_multiplicative_group_structure(f):
    s = FieldSpec.for_degree(f)
    n = s.order
    for a in range(1, n):
        assert s.pow(a, n - 1) == 1
    by_order: dict[int, int] = {}
    for a in range(1, n):
        d = multiplicative_order(s.element(a))
        by_order[d] = by_order.get(d, 0) + 1
    for d in divisors(n - 1):
        assert by_order.get(d, 0) == euler_phi(d)


def test_inverse_roundtrip():
    for f in (2, 3, 4, 6, 8):
        s = FieldSpec.for_degree(f)
        for a in range(1, s.order):
            assert s.mul(a, s.inv(a)) == 1


def test_find_generator_deterministic():
    s = FieldSpec.for_degree(4)
    g = find_generator(s)
    assert multiplicative_order(g) == 15
    # no smaller bits value generates
    for bits in range(1, g.bits):
        assert multiplicative_order(s.element(bits)) < 15


def test_element_operators():
    s = FieldSpec.for_degree(3)
    a, b = s.element(3), s.element(5)
    assert (a + b).bits == 6
    assert (a * b).bits == s.mul(3, 5)
    assert (a * a.inverse()).bits == 1
    assert (a**7).bits == 1  # group order
    with pytest.raises(ValueError):
        _ = a + FieldSpec.for_degree(2).element(1)
