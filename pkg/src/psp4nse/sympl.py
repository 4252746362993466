"""Closed forms for PSp4(q) with q = 2^f > 2.

For even q the center of Sp4(q) is trivial, so PSp4(q) = Sp4(q) and the group
order is q^4(q^4-1)(q^2-1).  This module carries the parameterized conjugacy
class table (families A1..A42, B1..B5, C1..C4, D1..D4 in Enomoto's labeling),
the element-order spectrum, the exact same-order counts m_r, and their
serializations.  Everything is exact integer arithmetic; the fractional
coefficients in the count formulas are evaluated as rationals and asserted
integral.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd

from .arith import dedekind_psi, divisors, euler_phi, power_of_two_exponent

__all__ = [
    "ClassDescriptor",
    "NseTable",
    "CLASS_FAMILIES",
    "validate_q",
    "group_order",
    "spectrum",
    "class_table",
    "family_class_count",
    "m_of_order",
    "nse_table",
    "nse_set",
    "phi_divisibility_check",
    "nse_table_json",
    "class_table_csv",
]

CLASS_FAMILIES = (
    "A1", "A2", "A31", "A32", "A41", "A42",
    "B1", "B2", "B3", "B4", "B5",
    "C1", "C2", "C3", "C4",
    "D1", "D2", "D3", "D4",
)


def validate_q(q: int) -> int:
    """Return f for q = 2^f with f >= 2, else raise."""
    f = power_of_two_exponent(q)
    if f is None or f < 2:
        raise ValueError(f"q must be a power of 2 greater than 2, got {q}")
    return f


def group_order(q: int) -> int:
    """|PSp4(q)| = q^4 (q^4 - 1)(q^2 - 1)."""
    validate_q(q)
    return q**4 * (q**4 - 1) * (q**2 - 1)


@lru_cache(maxsize=None)
def spectrum(q: int) -> tuple[int, ...]:
    """Element orders of PSp4(q): every divisor of 4, 2(q-1), 2(q+1), q^2-1, q^2+1."""
    validate_q(q)
    out: set[int] = set()
    for n in (4, 2 * (q - 1), 2 * (q + 1), q * q - 1, q * q + 1):
        out.update(divisors(n))
    return tuple(sorted(out))


@dataclass(frozen=True)
class ClassDescriptor:
    """One conjugacy class: family label, parameters, representative order, size."""

    family: str
    i: int | None
    j: int | None
    rep_order: int
    class_length: int

    def label(self) -> str:
        if self.i is None:
            return self.family
        if self.j is None:
            return f"{self.family}({self.i})"
        return f"{self.family}({self.i},{self.j})"


def _orbit_reps_pairs(raw: list[tuple[int, int]], images) -> list[tuple[int, int]]:
    reps = {min(images(t)) for t in raw}
    return sorted(reps)


def _orbit_reps_single(raw: list[int], images) -> list[int]:
    reps = {min(images(i)) for i in raw}
    return sorted(reps)


def class_table(q: int) -> list[ClassDescriptor]:
    """All conjugacy classes of PSp4(q), parameters canonicalized per orbit.

    Parameter tuples are reduced modulo the identifications
    B1/B4: (i,j) ~ (+-i,+-j) ~ (+-j,+-i); B2/B5: i ~ +-i, +-qi; B3: (i,j) ~
    (+-i,+-j); C/D: i ~ -i, each orbit represented by its least member.
    """
    validate_q(q)
    qm, qp = q - 1, q + 1
    q2m, q2p = q * q - 1, q * q + 1
    o4 = q**4 - 1
    rows: list[ClassDescriptor] = []
    add = rows.append

    add(ClassDescriptor("A1", None, None, 1, 1))
    add(ClassDescriptor("A2", None, None, 2, o4))
    add(ClassDescriptor("A31", None, None, 2, o4))
    add(ClassDescriptor("A32", None, None, 2, (q * q - 1) * o4))
    half_len = q * q * (q * q - 1) * o4 // 2
    add(ClassDescriptor("A41", None, None, 4, half_len))
    add(ClassDescriptor("A42", None, None, 4, half_len))

    # B1: (i,j) mod q-1, both nonzero, i != +-j
    raw_s1 = [
        (i, j)
        for i in range(1, qm)
        for j in range(1, qm)
        if j != i and j != (qm - i) % qm
    ]

    def images_sym(m):
        def imgs(t):
            i, j = t
            for a in (i, m - i):
                for b in (j, m - j):
                    yield (a % m, b % m)
                    yield (b % m, a % m)
        return imgs

    for (i, j) in _orbit_reps_pairs(raw_s1, images_sym(qm)):
        add(ClassDescriptor("B1", i, j, qm // gcd(qm, i, j), q**4 * qp * qp * q2p))

    # B2: i mod q^2-1 with i != +-qi
    raw_r2 = [
        i
        for i in range(1, q2m)
        if (q * i) % q2m != i and (q2m - (q * i) % q2m) % q2m != i
    ]

    def images_q(m):
        def imgs(i):
            a = (q * i) % m
            return (i, m - i, a, (m - a) % m)
        return imgs

    for i in _orbit_reps_single(raw_r2, images_q(q2m)):
        add(ClassDescriptor("B2", i, None, q2m // gcd(q2m, i), q**4 * o4))

    # B3: (i,j) in T1 x T2 modulo simultaneous negation in each coordinate
    for i in range(1, (qm - 1) // 2 + 1):
        for j in range(1, q // 2 + 1):
            rep = q2m // (gcd(qm, i) * gcd(qp, j))
            add(ClassDescriptor("B3", i, j, rep, q**4 * o4))

    # B4: (i,j) mod q+1, both nonzero, i != +-j
    raw_s2 = [
        (i, j)
        for i in range(1, qp)
        for j in range(1, qp)
        if j != i and j != (qp - i) % qp
    ]
    for (i, j) in _orbit_reps_pairs(raw_s2, images_sym(qp)):
        add(ClassDescriptor("B4", i, j, qp // gcd(qp, i, j), q**4 * qm * qm * q2p))

    # B5: i mod q^2+1, nonzero
    raw_r3 = list(range(1, q2p))
    for i in _orbit_reps_single(raw_r3, images_q(q2p)):
        add(ClassDescriptor("B5", i, None, q2p // gcd(q2p, i), q**4 * (q * q - 1) ** 2))

    # C and D families: single parameter modulo negation
    t1_reps = range(1, (qm - 1) // 2 + 1)
    t2_reps = range(1, q // 2 + 1)
    len_c_minus = q**3 * qp * q2p
    len_c_plus = q**3 * qm * q2p
    len_d_minus = q**3 * qp * o4
    len_d_plus = q**3 * qm * o4
    for i in t1_reps:
        add(ClassDescriptor("C1", i, None, qm // gcd(qm, i), len_c_minus))
    for i in t1_reps:
        add(ClassDescriptor("C2", i, None, qm // gcd(qm, i), len_c_minus))
    for i in t2_reps:
        add(ClassDescriptor("C3", i, None, qp // gcd(qp, i), len_c_plus))
    for i in t2_reps:
        add(ClassDescriptor("C4", i, None, qp // gcd(qp, i), len_c_plus))
    for i in t1_reps:
        add(ClassDescriptor("D1", i, None, 2 * qm // gcd(qm, i), len_d_minus))
    for i in t1_reps:
        add(ClassDescriptor("D2", i, None, 2 * qm // gcd(qm, i), len_d_minus))
    for i in t2_reps:
        add(ClassDescriptor("D3", i, None, 2 * qp // gcd(qp, i), len_d_plus))
    for i in t2_reps:
        add(ClassDescriptor("D4", i, None, 2 * qp // gcd(qp, i), len_d_plus))

    return rows


def family_class_count(q: int, family: str) -> int:
    """Number of classes a family contributes, as a polynomial in q."""
    validate_q(q)
    counts = {
        "A1": 1, "A2": 1, "A31": 1, "A32": 1, "A41": 1, "A42": 1,
        "B1": (q - 2) * (q - 4) // 8,
        "B2": q * (q - 2) // 4,
        "B3": q * (q - 2) // 4,
        "B4": q * (q - 2) // 8,
        "B5": q * q // 4,
        "C1": (q - 2) // 2, "C2": (q - 2) // 2,
        "C3": q // 2, "C4": q // 2,
        "D1": (q - 2) // 2, "D2": (q - 2) // 2,
        "D3": q // 2, "D4": q // 2,
    }
    if family not in counts:
        raise KeyError(f"unknown class family {family!r}")
    return counts[family]


def _as_int(x: Fraction, context: str) -> int:
    if x.denominator != 1:
        raise ArithmeticError(f"non-integral count in {context}: {x}")
    return int(x)


def m_of_order(q: int, r: int) -> int:
    """Exact number of elements of order r in PSp4(q).

    Dispatch is by the unique way r sits against q: r in {1,2,4}; odd r
    dividing q^2+1; odd r dividing q^2-1 split coprimely across q-1 and q+1
    (gcd(q-1, q+1) = 1 for even q); or r = 2r' with r' dividing q-1 or q+1.
    """
    validate_q(q)
    if r not in set(spectrum(q)):
        raise ValueError(f"{r} is not an element order of PSp4({q})")
    if r == 1:
        return 1
    if r == 2:
        return (q * q + 1) * (q**4 - 1)
    if r == 4:
        return q * q * (q * q - 1) * (q**4 - 1)
    if r % 2 == 0:
        rr = r // 2
        if (q - 1) % rr == 0:
            return euler_phi(rr) * q**3 * (q + 1) * (q**4 - 1)
        return euler_phi(rr) * q**3 * (q - 1) * (q**4 - 1)
    if (q * q + 1) % r == 0:
        m = Fraction(euler_phi(r), 4) * q**4 * (q * q - 1) ** 2
        return _as_int(m, f"m_{r}, r | q^2+1")
    r_minus, r_plus = gcd(r, q - 1), gcd(r, q + 1)
    if r_plus == 1:
        bracket = 1 - Fraction(q * (q + 1), 2) + Fraction(q * (q + 1), 8) * dedekind_psi(r)
        m = euler_phi(r) * q**3 * (q * q + 1) * (q + 1) * bracket
        return _as_int(m, f"m_{r}, r | q-1")
    if r_minus == 1:
        bracket = 1 - Fraction(q * (q - 1), 2) + Fraction(q * (q - 1), 8) * dedekind_psi(r)
        m = euler_phi(r) * q**3 * (q * q + 1) * (q - 1) * bracket
        return _as_int(m, f"m_{r}, r | q+1")
    m = Fraction(euler_phi(r), 2) * q**4 * (q**4 - 1)
    return _as_int(m, f"m_{r}, mixed divisor of q^2-1")


@dataclass(frozen=True)
class NseTable:
    """Exact order -> count map for PSp4(q), keys ascending."""

    q: int
    order: int
    counts: dict[int, int]

    def value_set(self) -> frozenset[int]:
        return frozenset(self.counts.values())


def nse_table(q: int) -> NseTable:
    counts = {r: m_of_order(q, r) for r in spectrum(q)}
    return NseTable(q, group_order(q), counts)


def nse_set(q: int) -> frozenset[int]:
    """The set of same-order counts of PSp4(q) (the values of the nse table)."""
    return nse_table(q).value_set()


def phi_divisibility_check(q: int) -> bool:
    """True iff 4 | phi(r) for every divisor r != 1 of q^2+1."""
    validate_q(q)
    return all(euler_phi(r) % 4 == 0 for r in divisors(q * q + 1)[1:])


def nse_table_json(table: NseTable) -> dict:
    """JSON-ready form; all counts as decimal strings, keys ascending."""
    return {
        "q": table.q,
        "order": str(table.order),
        "counts": {str(r): str(c) for r, c in sorted(table.counts.items())},
    }


def class_table_csv(rows: list[ClassDescriptor]) -> str:
    """CSV text: name,i,j,rep_order,class_count_index,class_length."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["name", "i", "j", "rep_order", "class_count_index", "class_length"])
    index_within: dict[str, int] = {}
    for row in rows:
        k = index_within.get(row.family, 0)
        index_within[row.family] = k + 1
        writer.writerow([
            row.family,
            "" if row.i is None else row.i,
            "" if row.j is None else row.j,
            row.rep_order,
            k,
            str(row.class_length),
        ])
    return buf.getvalue()
