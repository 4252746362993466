"""Deciding that a group with a given order and nse set is PSp4(q).

The pipeline: match the order to a q = 2^f > 2, compare the nse set against
the closed forms, then walk the candidate simple sections K/H admitted by the
disconnected-prime-graph classification and kill each family by a decidable
numeric predicate on the odd order component q^2+1 and on order divisibility.
Every candidate family gets a trace entry carrying the numeric witness and the
mathematical fact it leans on; a case the implemented predicates cannot settle
is reported NeedsManualLemma rather than silently dropped.

The two confirming branches are PSL2(q^2) and PSp4(q) itself: both lead to a
group with the order components of PSp4(q), which identifies it by the cited
recognition theorem.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt

from . import families as fam
from .arith import (
    DivisibilityCheck,
    dedekind_psi,
    divisors,
    euler_phi,
    is_prime,
    is_prime_power,
    nth_root,
    power_of_two_exponent,
    prime_divisors,
    cyclotomic_eval,
    twisted_cyclotomic_eval,
)
from .primegraph import separation_check
from .sympl import group_order, nse_set, nse_table, validate_q

__all__ = [
    "AmcSets",
    "TraceEntry",
    "PrimeCountCheck",
    "EliminationTrace",
    "Verdict",
    "FAMILIES",
    "ELIMINATED",
    "CONFIRMING",
    "NEEDS_MANUAL_LEMMA",
    "OUTCOME_ISOMORPHIC",
    "OUTCOME_HYPOTHESES_NOT_MET",
    "OUTCOME_NOT_APPLICABLE",
    "build_A_sets",
    "match_order",
    "prime_count_membership",
    "frobenius_exclusion",
    "eliminate_family",
    "characterize",
    "verdict_json",
]

ELIMINATED = "Eliminated"
CONFIRMING = "Confirming"
NEEDS_MANUAL_LEMMA = "NeedsManualLemma"

OUTCOME_ISOMORPHIC = "IsomorphicToPSp4"
OUTCOME_HYPOTHESES_NOT_MET = "HypothesesNotMet"
OUTCOME_NOT_APPLICABLE = "NotApplicable"

FAMILIES = ("Alternating", "Sporadic", "Tits", "Exceptional", "PSL", "PSU", "PSp", "POmega")

# Anchors name the self-standing mathematical facts each elimination leans on.
AN_OC_TABLES = "odd-order-component tables for simple groups with disconnected prime graph (Kondrat'ev; Williams)"
AN_ORDER_DIV = "|K/H| must divide |G|"
AN_Q4M9 = "q^4-9 never divides q^4(q^4-1)(q^2-1) for q = 2^f"
AN_Q2P2 = "q^2+2 divides q^4(q^4-1)(q^2-1) only for q = 2 or 4"
AN_2Q2P1 = "2q^2+1 divides q^4(q^4-1)(q^2-1) only for q = 2"
AN_2Q2P3 = "2q^2+3 never divides q^4(q^4-1)(q^2-1)"
AN_3Q2P2 = "3q^2+2 divides q^4(q^4-1)(q^2-1) only for q = 4"
AN_SQUARE = "a square between consecutive squares cannot exist"
AN_POWER2 = "q is a power of 2"
AN_CRESCENZO = "Crescenzo's classification of prime solutions of p^m = q^n + 1"
AN_SYLOW = "a fixed-point-free Sylow action makes its order divide the same-order count"
AN_NILPOTENT = "a normal Sylow subgroup of the nilpotent kernel forces a same-order count to divide |H|"
AN_OC_RECOGNITION = "PSp4(q) is recognized among finite groups by its order components"


@dataclass(frozen=True)
class AmcSets:
    """The nine candidate-count sets indexed by the same-order count shapes."""

    a1: frozenset[int]
    a2: frozenset[int]
    a3: frozenset[int]
    a4: frozenset[int]
    a5: frozenset[int]
    a6: frozenset[int]
    a7: frozenset[int]
    a8: frozenset[int]
    a9: frozenset[int]

    def as_tuple(self) -> tuple[frozenset[int], ...]:
        return (self.a1, self.a2, self.a3, self.a4, self.a5, self.a6, self.a7, self.a8, self.a9)

    def union(self) -> frozenset[int]:
        out: frozenset[int] = frozenset()
        for s in self.as_tuple():
            out |= s
        return out


def _int(x: Fraction) -> int:
    if x.denominator != 1:
        raise ArithmeticError(f"non-integral candidate count {x}")
    return int(x)


def build_A_sets(q: int) -> AmcSets:
    """The candidate same-order-count sets, built clause by clause.

    Deliberately restates the count formulas instead of calling m_of_order, so
    the union test against nse_set(q) is a genuine cross-check of the
    dispatcher.
    """
    validate_q(q)
    q3, q4 = q**3, q**4
    o4 = q4 - 1
    qm_divs = divisors(q - 1)[1:]
    qp_divs = divisors(q + 1)[1:]
    a4 = frozenset(
        _int(
            euler_phi(r)
            * q3
            * (q * q + 1)
            * (q + 1)
            * (1 - Fraction(q * (q + 1), 2) + Fraction(q * (q + 1), 8) * dedekind_psi(r))
        )
        for r in qm_divs
    )
    a5 = frozenset(
        _int(
            euler_phi(r)
            * q3
            * (q * q + 1)
            * (q - 1)
            * (1 - Fraction(q * (q - 1), 2) + Fraction(q * (q - 1), 8) * dedekind_psi(r))
        )
        for r in qp_divs
    )
    return AmcSets(
        a1=frozenset({1}),
        a2=frozenset({(q * q + 1) * o4}),
        a3=frozenset({q * q * (q * q - 1) * o4}),
        a4=a4,
        a5=a5,
        a6=frozenset(euler_phi(r) * q3 * (q + 1) * o4 for r in qm_divs),
        a7=frozenset(euler_phi(r) * q3 * (q - 1) * o4 for r in qp_divs),
        a8=frozenset(
            _int(Fraction(euler_phi(r * s), 2) * q4 * o4) for r in qm_divs for s in qp_divs
        ),
        a9=frozenset(
            _int(Fraction(euler_phi(r), 4) * q4 * (q * q - 1) ** 2)
            for r in divisors(q * q + 1)[1:]
        ),
    )


def match_order(n: int) -> int | None:
    """The unique q = 2^f > 2 with n = q^4(q^4-1)(q^2-1), if any."""
    if n < 1:
        raise ValueError(f"order must be >= 1, got {n}")
    f = 2
    while True:
        v = group_order(1 << f)
        if v == n:
            return 1 << f
        if v > n:
            return None
        f += 1


def prime_count_membership(q: int, r: int, value: int) -> bool:
    """Whether a same-order count for prime r can occur: A2 for r = 2, A9 for
    r | q^2+1, A4 u A5 for r | q^2-1."""
    a = build_A_sets(q)
    if r == 2:
        return value in a.a2
    if not is_prime(r):
        raise ValueError(f"r must be prime, got {r}")
    if (q * q + 1) % r == 0:
        return value in a.a9
    if (q * q - 1) % r == 0:
        return value in (a.a4 | a.a5)
    raise ValueError(f"prime {r} divides neither q^2+1 nor q^2-1 for q={q}")


def frobenius_exclusion(q: int) -> tuple[bool, tuple[DivisibilityCheck, ...]]:
    """Rule out a Frobenius group with components {pi(q^2+1), pi(2(q^2-1))}.

    A Frobenius complement divides the kernel order minus one; both assignments
    of {q^2+1, q^4(q^2-1)^2} to (complement, kernel) must fail.
    """
    validate_q(q)
    kernel_big = q**4 * (q * q - 1) ** 2
    comp_small = q * q + 1
    quot1, rem1 = divmod(kernel_big - 1, comp_small)
    quot2, rem2 = divmod(comp_small - 1, kernel_big)
    checks = (
        DivisibilityCheck(
            "(q^2+1) | q^4(q^2-1)^2 - 1",
            comp_small,
            rem1 == 0,
            quot1 if rem1 == 0 else None,
            rem1,
        ),
        DivisibilityCheck(
            "q^4(q^2-1)^2 | q^2",
            kernel_big,
            rem2 == 0,
            quot2 if rem2 == 0 else None,
            rem2,
        ),
    )
    return (not checks[0].divides and not checks[1].divides, checks)


@dataclass(frozen=True)
class TraceEntry:
    family: str
    case: str
    status: str
    witness: str
    anchor: str


@dataclass(frozen=True)
class PrimeCountCheck:
    r: int
    value: int
    bucket: str
    ok: bool


@dataclass(frozen=True)
class EliminationTrace:
    a_sets: AmcSets
    prime_count_checks: tuple[PrimeCountCheck, ...]
    separation: bool
    frobenius_excluded: bool
    frobenius_witnesses: tuple[DivisibilityCheck, ...]
    entries: tuple[TraceEntry, ...]

    def by_status(self, status: str) -> tuple[TraceEntry, ...]:
        return tuple(e for e in self.entries if e.status == status)


@dataclass(frozen=True)
class Verdict:
    outcome: str
    q: int | None
    order: int
    reason: str | None
    trace: EliminationTrace | None


# ---------------------------------------------------------------------------
# search helpers

def _odd_primes():
    n = 3
    while True:
        if is_prime(n):
            yield n
        n += 2


def _bounded_params(params, order_fn, bound):
    """Prefix of a monotone parameter stream whose group order stays <= bound."""
    out = []
    for p in params:
        if order_fn(p) > bound:
            break
        out.append(p)
    return out


def _pp_candidates(bound, order_fn, start=2, keep=None):
    """Prime powers x >= start with order_fn(x) <= bound, optionally filtered."""
    out = []
    x = start
    while order_fn(x) <= bound:
        if is_prime_power(x) and (keep is None or keep(x)):
            out.append(x)
        x += 1
    return out


def _solve_increasing(fn, target, lo=2):
    """The integer x >= lo with fn(x) == target, for strictly increasing fn."""
    if fn(lo) > target:
        return None
    hi = lo
    while fn(hi) < target:
        hi *= 2
    lo = max(lo, hi // 2)
    while lo < hi:
        mid = (lo + hi) // 2
        if fn(mid) < target:
            lo = mid + 1
        else:
            hi = mid
    return lo if fn(lo) == target else None


def _odd_two_power_candidates(base, bound, order_fn):
    """base^(2t+1) for t >= 1 with order_fn <= bound (Suzuki/Ree parameter sets)."""
    out = []
    e = 3
    while order_fn(base**e) <= bound:
        out.append(base**e)
        e += 2
    return out


def _fmt_params(params) -> str:
    if not params:
        return "{}"
    if len(params) <= 8:
        return "{" + ", ".join(map(str, params)) + "}"
    return f"{{{params[0]}, ..., {params[-1]}}} ({len(params)} values)"


def _entry(family, case, status, witness, anchor) -> TraceEntry:
    return TraceEntry(family, case, status, witness, anchor)


def _order_kill(family, case, label, order_value, go, extra="") -> TraceEntry:
    if go % order_value:
        return _entry(
            family,
            case,
            ELIMINATED,
            f"|{label}| = {order_value} does not divide |G| = {go}{extra}",
            AN_ORDER_DIV,
        )
    return _entry(
        family,
        case,
        NEEDS_MANUAL_LEMMA,
        f"|{label}| = {order_value} divides |G|; no implemented predicate separates it{extra}",
        AN_ORDER_DIV,
    )


def _search_entry(family, case, anchor, candidates, values_fn, target, on_hit=None, go=None, order_fn=None, label=None):
    """One case entry: bounded candidate scan for values_fn(x) hitting target."""
    if not candidates:
        return _entry(
            family, case, ELIMINATED,
            "no candidate parameter: the family's minimal order already exceeds |G|",
            AN_ORDER_DIV,
        )
    hits = [x for x in candidates if target in tuple(v for v in values_fn(x) if v is not None)]
    if not hits:
        return _entry(
            family, case, ELIMINATED,
            f"no parameter in {_fmt_params(candidates)} yields odd component {target}",
            anchor,
        )
    if on_hit is None:
        parts = []
        status = ELIMINATED
        for x in hits:
            o = order_fn(x)
            if go % o:
                parts.append(f"q'={x}: |{label}({x})| = {o} does not divide |G|")
            else:
                status = NEEDS_MANUAL_LEMMA
                parts.append(f"q'={x}: |{label}({x})| divides |G|; unresolved")
        return _entry(family, case, status, "; ".join(parts), AN_ORDER_DIV)
    parts = []
    status = ELIMINATED
    for x in hits:
        st, msg = on_hit(x)
        if st != ELIMINATED:
            status = st
        parts.append(msg)
    return _entry(family, case, status, "; ".join(parts), anchor)


# ---------------------------------------------------------------------------
# family eliminators

def _eliminate_alternating(q: int) -> list[TraceEntry]:
    n2 = q * q + 1
    go = group_order(q)
    f = "Alternating"
    entries = []

    small = (3, 5, 15)
    if n2 in small:
        entries.append(_entry(f, "degree 5 or 6", NEEDS_MANUAL_LEMMA,
                              f"q^2+1 = {n2} matches a degree-5/6 odd component", AN_OC_TABLES))
    else:
        entries.append(_entry(f, "degree 5 or 6", ELIMINATED,
                              f"q^2+1 = {n2} is not one of {small}", AN_OC_TABLES))

    if not is_prime(n2):
        entries.append(_entry(f, "q^2+1 = p", ELIMINATED,
                              f"q^2+1 = {n2} is not prime", AN_OC_TABLES))
    else:
        d = q**4 - 9
        rem = go % d
        if rem:
            entries.append(_entry(f, "q^2+1 = p", ELIMINATED,
                                  f"would force q^4-9 = {d} to divide |G| = {go}; remainder {rem}",
                                  AN_Q4M9))
        else:
            entries.append(_entry(f, "q^2+1 = p", NEEDS_MANUAL_LEMMA,
                                  f"q^4-9 = {d} divides |G|", AN_Q4M9))

    p = n2 + 2
    if not is_prime(p):
        entries.append(_entry(f, "q^2+1 = p-2", ELIMINATED,
                              f"q^2+3 = {p} is not prime", AN_OC_TABLES))
    else:
        rem = go % p
        if rem:
            entries.append(_entry(f, "q^2+1 = p-2", ELIMINATED,
                                  f"q^2+3 = {p} does not divide |G| = {go} (remainder {rem})",
                                  AN_ORDER_DIV))
        else:
            entries.append(_entry(f, "q^2+1 = p-2", NEEDS_MANUAL_LEMMA,
                                  f"q^2+3 = {p} divides |G|", AN_ORDER_DIV))

    s = isqrt(n2 + 1)
    if s * s == n2 + 1:
        entries.append(_entry(f, "q^2+1 = p(p-2)", NEEDS_MANUAL_LEMMA,
                              f"q^2+2 = {n2 + 1} is a perfect square", AN_SQUARE))
    else:
        entries.append(_entry(f, "q^2+1 = p(p-2)", ELIMINATED,
                              f"q^2+1 = p(p-2) forces q^2+2 = (p-1)^2, but {n2 + 1} is not a perfect square",
                              AN_SQUARE))
    return entries


def _eliminate_sporadic(q: int) -> list[TraceEntry]:
    n2 = q * q + 1
    go = group_order(q)
    entries = []
    for grp in fam.SPORADIC_GROUPS:
        if n2 not in grp.odd_components:
            entries.append(_entry("Sporadic", grp.name, ELIMINATED,
                                  f"odd order components {grp.odd_components} exclude q^2+1 = {n2}",
                                  AN_OC_TABLES))
        else:
            entries.append(_order_kill("Sporadic", grp.name, grp.name, grp.order, go,
                                       extra=f" (component {n2} matches)"))
    return entries


def _eliminate_tits(q: int) -> list[TraceEntry]:
    n2 = q * q + 1
    go = group_order(q)
    grp = fam.TITS_GROUP
    if n2 not in grp.odd_components:
        return [_entry("Tits", grp.name, ELIMINATED,
                       f"odd order components {grp.odd_components} exclude q^2+1 = {n2}",
                       AN_OC_TABLES)]
    return [_order_kill("Tits", grp.name, grp.name, grp.order, go)]


def _suzuki_entry(q: int) -> TraceEntry:
    n2 = q * q + 1
    go = group_order(q)
    candidates = _odd_two_power_candidates(2, go, fam.order_2B2)
    if not candidates:
        return _entry("Exceptional", "2B2(q')", ELIMINATED,
                      "no candidate parameter: |2B2(8)| already exceeds |G|", AN_ORDER_DIV)

    def vals(x):
        rt = isqrt(2 * x)
        return (
            x - 1, x - rt + 1, x + rt + 1, x * x + 1,
            (x - 1) * (x - rt + 1), (x - 1) * (x + rt + 1), (x - 1) * (x * x + 1),
        )

    hits = [x for x in candidates if n2 in vals(x)]
    if not hits:
        return _entry("Exceptional", "2B2(q')", ELIMINATED,
                      f"no parameter in {_fmt_params(candidates)} yields odd component {n2}",
                      AN_OC_TABLES)
    parts = []
    status = ELIMINATED
    for x in hits:
        if x * x + 1 == n2:
            # q' = q: primes of q'-sqrt(2q')+1 and q'+sqrt(2q')+1 are non-adjacent,
            # so the larger factor must divide a count phi(r) q^4 (q^2-1)^2 / 4.
            rt = isqrt(2 * x)
            s_plus = x + rt + 1
            base = q**4 * (q * q - 1) ** 2 // 4
            surviving = [r for r in divisors(x - rt + 1)[1:]
                         if (euler_phi(r) * base) % s_plus == 0]
            if surviving:
                status = NEEDS_MANUAL_LEMMA
                parts.append(f"q'={x}: {s_plus} divides the candidate count for r in {surviving}")
            else:
                parts.append(
                    f"q'={x}: {s_plus} divides no candidate count phi(r)q^4(q^2-1)^2/4 with r | {x - rt + 1}"
                )
        else:
            o = fam.order_2B2(x)
            if go % o:
                parts.append(f"q'={x}: |2B2({x})| = {o} does not divide |G|")
            else:
                status = NEEDS_MANUAL_LEMMA
                parts.append(f"q'={x}: |2B2({x})| divides |G|; unresolved")
    return _entry("Exceptional", "2B2(q')", status, "; ".join(parts), AN_SYLOW)


def _e8_values(x: int) -> tuple[int, ...]:
    base = [cyclotomic_eval(k, x) for k in (15, 20, 24, 30)]
    out = []
    for mask in range(1, 16):
        v = 1
        for i in range(4):
            if mask >> i & 1:
                v *= base[i]
        out.append(v)
    return tuple(out)


def _eliminate_exceptional(q: int) -> list[TraceEntry]:
    n2 = q * q + 1
    go = group_order(q)
    f = "Exceptional"
    entries = [_suzuki_entry(q)]

    entries.append(_search_entry(
        f, "G2(q')", AN_OC_TABLES,
        _pp_candidates(go, fam.order_G2),
        lambda x: (cyclotomic_eval(3, x), cyclotomic_eval(6, x), cyclotomic_eval(3, x * x)),
        n2, go=go, order_fn=fam.order_G2, label="G2",
    ))
    entries.append(_search_entry(
        f, "3D4(q')", AN_OC_TABLES,
        _pp_candidates(go, fam.order_3D4),
        lambda x: (cyclotomic_eval(12, x),),
        n2, go=go, order_fn=fam.order_3D4, label="3D4",
    ))
    entries.append(_search_entry(
        f, "2G2(q')", AN_OC_TABLES,
        _odd_two_power_candidates(3, go, fam.order_2G2),
        lambda x: (
            twisted_cyclotomic_eval(6, 1, x),
            twisted_cyclotomic_eval(6, -1, x),
            cyclotomic_eval(6, x),
        ),
        n2, go=go, order_fn=fam.order_2G2, label="2G2",
    ))
    entries.append(_search_entry(
        f, "F4(q')", AN_OC_TABLES,
        _pp_candidates(go, fam.order_F4),
        lambda x: (x**4 + 1, x**4 - x * x + 1, x**8 - x**6 + 2 * x**4 - x * x + 1),
        n2, go=go, order_fn=fam.order_F4, label="F4",
    ))
    entries.append(_search_entry(
        f, "2F4(q')", AN_OC_TABLES,
        _odd_two_power_candidates(2, go, fam.order_2F4),
        lambda x: (
            twisted_cyclotomic_eval(12, 1, x),
            twisted_cyclotomic_eval(12, -1, x),
            cyclotomic_eval(12, x),
        ),
        n2, go=go, order_fn=fam.order_2F4, label="2F4",
    ))
    entries.append(_search_entry(
        f, "E6(q'), q' = 0,-1 (mod 3)", AN_OC_TABLES,
        _pp_candidates(go, fam.order_E6, keep=lambda x: x % 3 != 1),
        lambda x: (cyclotomic_eval(9, x),),
        n2, go=go, order_fn=fam.order_E6, label="E6",
    ))

    def e6_special_kill(x):
        t = 3 * q * q + 2
        rem = go % t
        if rem:
            return (ELIMINATED,
                    f"q'={x}: would force 3q^2+2 = {t} to divide |G|; remainder {rem}")
        return (NEEDS_MANUAL_LEMMA, f"q'={x}: 3q^2+2 = {t} divides |G|")

    entries.append(_search_entry(
        f, "E6(q'), q' = 1 (mod 3)", AN_3Q2P2,
        _pp_candidates(go, fam.order_E6, keep=lambda x: x % 3 == 1),
        lambda x: (x**6 + x**3,),
        3 * q * q + 2, on_hit=e6_special_kill,
    ))
    entries.append(_search_entry(
        f, "2E6(q'), q' = 0,1 (mod 3)", AN_OC_TABLES,
        _pp_candidates(go, fam.order_2E6, keep=lambda x: x % 3 != 2),
        lambda x: (cyclotomic_eval(18, x),),
        n2, go=go, order_fn=fam.order_2E6, label="2E6",
    ))
    entries.append(_search_entry(
        f, "2E6(q'), q' = -1 (mod 3)", AN_3Q2P2,
        _pp_candidates(go, fam.order_2E6, keep=lambda x: x % 3 == 2),
        lambda x: (x**6 - x**3,),
        3 * q * q + 2, on_hit=e6_special_kill,
    ))

    for name, order_value, vals in fam.E_GROUP_CASES:
        if n2 not in vals:
            entries.append(_entry(f, name, ELIMINATED,
                                  f"q^2+1 = {n2} is not among the components {vals}",
                                  AN_OC_TABLES))
        else:
            entries.append(_order_kill(f, name, name, order_value, go,
                                       extra=f" (component {n2} matches)"))

    entries.append(_search_entry(
        f, "E8(q')", AN_OC_TABLES,
        _pp_candidates(go, fam.order_E8),
        _e8_values,
        n2, go=go, order_fn=fam.order_E8, label="E8",
    ))
    return entries


def _eliminate_psl(q: int) -> list[TraceEntry]:
    n2 = q * q + 1
    go = group_order(q)
    f = "PSL"
    entries = []

    # n >= 5 prime: component (q'^n - 1) / ((q'-1)(n, q'-1)).  For each
    # dimension the cyclotomic quotient is strictly increasing in q', so the
    # unique candidate q' comes from bisection (once per value of the gcd).
    dims = _bounded_params((n for n in _odd_primes() if n >= 5),
                           lambda n: fam.psl_order(n, 2), go)
    if not dims:
        entries.append(_entry(f, "PSLn(q'), n >= 5 prime", ELIMINATED,
                              "no dimension: |PSL5(2)| already exceeds |G|", AN_ORDER_DIV))
    else:
        hits = []
        for n in dims:
            for d in (1, n):
                x = _solve_increasing(lambda x, n=n: (x**n - 1) // (x - 1), n2 * d)
                if x is not None and gcd(n, x - 1) == d and is_prime_power(x):
                    hits.append((n, x))
        if not hits:
            entries.append(_entry(f, "PSLn(q'), n >= 5 prime", ELIMINATED,
                                  f"no prime power q' solves the component equation for n in {_fmt_params(dims)}",
                                  AN_OC_TABLES))
        else:
            parts = []
            status = ELIMINATED
            for n, x in hits:
                o = fam.psl_order(n, x)
                if go % o:
                    parts.append(f"(n,q')=({n},{x}): |PSL{n}({x})| does not divide |G|")
                else:
                    status = NEEDS_MANUAL_LEMMA
                    parts.append(f"(n,q')=({n},{x}): unresolved")
            entries.append(_entry(f, "PSLn(q'), n >= 5 prime", status, "; ".join(parts), AN_ORDER_DIV))

    # n = p+1, p odd prime, q'-1 | p +- 1: component (q'^p - 1)/(q'-1)
    dims2 = _bounded_params(_odd_primes(), lambda p: fam.psl_order(p + 1, 2), go)
    if not dims2:
        entries.append(_entry(f, "PSL(p+1)(q')", ELIMINATED,
                              "no dimension: |PSL4(2)| already exceeds |G|", AN_ORDER_DIV))
    else:
        hits2 = []
        for p in dims2:
            x = _solve_increasing(lambda x, p=p: (x**p - 1) // (x - 1), n2)
            if (
                x is not None
                and is_prime_power(x)
                and ((p + 1) % (x - 1) == 0 or (p - 1) % (x - 1) == 0)
            ):
                hits2.append((p, x))
        if not hits2:
            entries.append(_entry(f, "PSL(p+1)(q')", ELIMINATED,
                                  f"no prime power q' solves the component equation for p in {_fmt_params(dims2)}",
                                  AN_OC_TABLES))
        else:
            parts = []
            status = ELIMINATED
            for p, x in hits2:
                o = fam.psl_order(p + 1, x)
                if go % o:
                    parts.append(f"(p,q')=({p},{x}): |PSL{p+1}({x})| does not divide |G|")
                else:
                    status = NEEDS_MANUAL_LEMMA
                    parts.append(f"(p,q')=({p},{x}): unresolved")
            entries.append(_entry(f, "PSL(p+1)(q')", status, "; ".join(parts), AN_ORDER_DIV))

    # n = 3, q' in {2, 4}: finite component list
    small_vals = (3, 5, 7, 15, 21, 35, 105)
    if n2 not in small_vals:
        entries.append(_entry(f, "PSL3(2), PSL3(4)", ELIMINATED,
                              f"q^2+1 = {n2} is not among {small_vals}", AN_OC_TABLES))
    else:
        o2, o4 = fam.psl_order(3, 2), fam.psl_order(3, 4)
        if go % o2 and go % o4:
            entries.append(_entry(f, "PSL3(2), PSL3(4)", ELIMINATED,
                                  f"neither |PSL3(2)| = {o2} nor |PSL3(4)| = {o4} divides |G|",
                                  AN_ORDER_DIV))
        else:
            entries.append(_entry(f, "PSL3(2), PSL3(4)", NEEDS_MANUAL_LEMMA,
                                  "a small PSL3 order divides |G|", AN_ORDER_DIV))

    # n = 3, q' >= 3: component (q'^2+q'+1)/(3, q'-1); solved by the quadratic
    # formula for each value of the gcd (q' in {2, 4} handled above)
    hits3 = []
    for d in (1, 3):
        disc = 4 * d * n2 - 3
        s = isqrt(disc)
        if s * s != disc or (s - 1) % 2:
            continue
        x = (s - 1) // 2
        if x >= 3 and x != 4 and is_prime_power(x) and gcd(3, x - 1) == d:
            hits3.append((d, x))
    if not hits3:
        entries.append(_entry(f, "PSL3(q'), q' >= 3", ELIMINATED,
                              f"no prime power q' >= 3 has component value {n2}", AN_3Q2P2))
    else:
        parts = []
        status = ELIMINATED
        for d, x in hits3:
            if d == 3:
                t = 3 * q * q + 2
                rem = go % t
                if rem:
                    parts.append(
                        f"q'={x}: q'(q'+1) = 3q^2+2 = {t} must divide |G|; remainder {rem}")
                else:
                    status = NEEDS_MANUAL_LEMMA
                    parts.append(f"q'={x}: 3q^2+2 divides |G|")
            else:
                status = NEEDS_MANUAL_LEMMA
                parts.append(
                    f"q'={x}: q'(q'+1) = q^2 holds numerically, contradicting coprimality")
        entries.append(_entry(f, "PSL3(q'), q' >= 3", status, "; ".join(parts), AN_3Q2P2))

    # n = 2, q' odd
    pp = is_prime_power(n2)
    if pp is None or pp[0] == 2:
        entries.append(_entry(f, "PSL2(q'), q' = q^2+1", ELIMINATED,
                              f"q^2+1 = {n2} is not an odd prime power", AN_OC_TABLES))
    else:
        rem = go % (n2 + 1)
        if rem:
            entries.append(_entry(f, "PSL2(q'), q' = q^2+1", ELIMINATED,
                                  f"q^2+2 = {n2 + 1} = q'+1 must divide |G|; remainder {rem}",
                                  AN_Q2P2))
        else:
            o = fam.psl_order(2, n2)
            if go % o:
                entries.append(_entry(f, "PSL2(q'), q' = q^2+1", ELIMINATED,
                                      f"|PSL2({n2})| = {o} does not divide |G|", AN_ORDER_DIV))
            else:
                hbound = go // o
                a = build_A_sets(q)
                amin = min(a.a4 | a.a5)
                if amin > hbound:
                    entries.append(_entry(f, "PSL2(q'), q' = q^2+1", ELIMINATED,
                                          f"min(A4 u A5) = {amin} > {hbound} >= |H|",
                                          AN_NILPOTENT))
                else:
                    entries.append(_entry(f, "PSL2(q'), q' = q^2+1", NEEDS_MANUAL_LEMMA,
                                          f"min(A4 u A5) = {amin} <= {hbound}", AN_NILPOTENT))

    for label, dv, anchor in (
        ("PSL2(q'), q' = 2q^2+3", 2 * q * q + 3, AN_2Q2P3),
        ("PSL2(q'), q' = 2q^2+1", 2 * q * q + 1, AN_2Q2P1),
    ):
        rem = go % dv
        if rem:
            entries.append(_entry(f, label, ELIMINATED,
                                  f"q' = {dv} must divide |G| = {go}; remainder {rem}", anchor))
        else:
            entries.append(_entry(f, label, NEEDS_MANUAL_LEMMA, f"q' = {dv} divides |G|", anchor))

    disc = 8 * q * q + 9
    s = isqrt(disc)
    if s * s != disc:
        entries.append(_entry(f, "PSL2(q'), q^2+1 = q'(q'-e)/2", ELIMINATED,
                              f"no integer q': discriminant 8q^2+9 = {disc} is not a perfect square",
                              AN_SQUARE))
    else:
        parts = []
        status = ELIMINATED
        for eps in (1, -1):
            if (eps + s) % 2:
                continue
            x = (eps + s) // 2
            ppx = is_prime_power(x)
            if x < 5 or ppx is None or ppx[0] == 2:
                parts.append(f"e={eps:+d}: root {x} is not an odd prime power >= 5")
                continue
            odd_factor = x - 2 * eps
            if odd_factor > 1 and (2 * q * q) % odd_factor == 0:
                status = NEEDS_MANUAL_LEMMA
                parts.append(f"e={eps:+d}: odd factor {odd_factor} divides 2q^2")
            else:
                parts.append(
                    f"e={eps:+d}: 2q^2 = ({odd_factor})({x + eps}) has odd factor {odd_factor} > 1 "
                    "which cannot divide a 2-power"
                )
        entries.append(_entry(f, "PSL2(q'), q^2+1 = q'(q'-e)/2", status,
                              "; ".join(parts) or "integer roots fail the parameter domain",
                              AN_POWER2))

    v = q * q + 2
    if power_of_two_exponent(v) is not None and v >= 4:
        entries.append(_entry(f, "PSL2(q'), q' = q^2+2 even", NEEDS_MANUAL_LEMMA,
                              f"q^2+2 = {v} is a power of 2", AN_POWER2))
    else:
        entries.append(_entry(f, "PSL2(q'), q' = q^2+2 even", ELIMINATED,
                              f"q^2+2 = {v} = 2 (mod 4) is not a 2-power >= 4", AN_POWER2))

    s2 = isqrt(v)
    if s2 * s2 == v:
        entries.append(_entry(f, "PSL2(q'), q'^2 = q^2+2", NEEDS_MANUAL_LEMMA,
                              f"q^2+2 = {v} is a perfect square", AN_SQUARE))
    else:
        entries.append(_entry(f, "PSL2(q'), q'^2 = q^2+2", ELIMINATED,
                              f"q^2+2 = {v} is not a perfect square", AN_SQUARE))

    entries.append(_entry(
        f, "PSL2(q^2)", CONFIRMING,
        f"q' = q^2 = {q * q}: component q'+1 = {n2} matches q^2+1 and the section "
        "forces oc(G) = oc(PSp4(q))",
        AN_OC_RECOGNITION,
    ))
    return entries


def _eliminate_psu(q: int) -> list[TraceEntry]:
    n2 = q * q + 1
    go = group_order(q)
    f = "PSU"
    entries = []

    vals = (5, 7, 11, 77)
    if n2 not in vals:
        entries.append(_entry(f, "PSU4(2), PSU6(2)", ELIMINATED,
                              f"q^2+1 = {n2} is not among {vals}", AN_OC_TABLES))
    else:
        o4, o6 = fam.psu_order(4, 2), fam.psu_order(6, 2)
        if go % o4 and go % o6:
            entries.append(_entry(f, "PSU4(2), PSU6(2)", ELIMINATED,
                                  f"neither |PSU4(2)| = {o4} nor |PSU6(2)| = {o6} divides |G|",
                                  AN_ORDER_DIV))
        else:
            entries.append(_entry(f, "PSU4(2), PSU6(2)", NEEDS_MANUAL_LEMMA,
                                  "a small PSU order divides |G|", AN_ORDER_DIV))

    # n = p with (q'+1, p) = 1, or n = p+1: component (q'^p + 1)/(q'+1).  The
    # alternating quotient is strictly increasing in q', so bisection finds the
    # unique candidate per dimension.
    hits = []
    shapes = []
    for p in _bounded_params(_odd_primes(), lambda p: fam.psu_order(p, 2), go):
        shapes.append(("n=p", p))
    for p in _bounded_params(_odd_primes(), lambda p: fam.psu_order(p + 1, 2), go):
        shapes.append(("n=p+1", p))
    for shape, p in shapes:
        x = _solve_increasing(lambda x, p=p: (x**p + 1) // (x + 1), n2)
        if x is None or not is_prime_power(x):
            continue
        if shape == "n=p" and gcd(x + 1, p) != 1:
            continue
        hits.append((shape, p, x))
    if not shapes:
        entries.append(_entry(f, "PSUn(q'), n = p or p+1", ELIMINATED,
                              "no dimension: |PSU3(2)| already exceeds |G|", AN_ORDER_DIV))
    elif not hits:
        dims_str = _fmt_params(sorted({p for _, p in shapes}))
        entries.append(_entry(f, "PSUn(q'), n = p or p+1", ELIMINATED,
                              f"no prime power q' solves the component equation for p in {dims_str}",
                              AN_OC_TABLES))
    else:
        parts = []
        status = ELIMINATED
        for shape, p, x in hits:
            n = p if shape == "n=p" else p + 1
            o = fam.psu_order(n, x)
            if go % o:
                parts.append(f"{shape}, (p,q')=({p},{x}): |PSU{n}({x})| does not divide |G|")
            else:
                status = NEEDS_MANUAL_LEMMA
                parts.append(f"{shape}, (p,q')=({p},{x}): unresolved")
        entries.append(_entry(f, "PSUn(q'), n = p or p+1", status, "; ".join(parts), AN_ORDER_DIV))

    # n = p with (q'+1, p) = p: component (q'^p + 1)/((q'+1) p)
    hits3 = []
    dims3 = _bounded_params(_odd_primes(), lambda p: fam.psu_order(p, 2), go)
    for p in dims3:
        x = _solve_increasing(lambda x, p=p: (x**p + 1) // (x + 1), n2 * p)
        if x is not None and is_prime_power(x) and gcd(x + 1, p) == p:
            hits3.append((p, x))
    if not dims3:
        entries.append(_entry(f, "PSUp(q'), p | q'+1", ELIMINATED,
                              "no dimension: |PSU3(2)| already exceeds |G|", AN_ORDER_DIV))
    elif not hits3:
        entries.append(_entry(f, "PSUp(q'), p | q'+1", ELIMINATED,
                              f"no prime power q' solves the component equation for p in {_fmt_params(dims3)}",
                              AN_OC_TABLES))
    else:
        parts = []
        status = ELIMINATED
        for p, x in hits3:
            if p == 3:
                t = 3 * q * q + 2
                rem = go % t
                if rem:
                    parts.append(f"(p,q')=({p},{x}): 3q^2+2 = {t} must divide |G|; remainder {rem}")
                else:
                    status = NEEDS_MANUAL_LEMMA
                    parts.append(f"(p,q')=({p},{x}): 3q^2+2 divides |G|")
            else:
                o = fam.psu_order(p, x)
                if go % o:
                    parts.append(f"(p,q')=({p},{x}): |PSU{p}({x})| does not divide |G|")
                else:
                    status = NEEDS_MANUAL_LEMMA
                    parts.append(f"(p,q')=({p},{x}): unresolved")
        entries.append(_entry(f, "PSUp(q'), p | q'+1", status, "; ".join(parts), AN_3Q2P2))
    return entries


def _eliminate_psp(q: int) -> list[TraceEntry]:
    n2 = q * q + 1
    go = group_order(q)
    f = "PSp"
    entries = []

    # n = p odd prime, q' in {2, 3}: component (q'^p - 1)/(2, q'-1)
    for qp in (2, 3):
        dims = _bounded_params(_odd_primes(), lambda p, qp=qp: fam.psp_order(p, qp), go)
        case = f"PSp2p({qp})"
        if not dims:
            entries.append(_entry(f, case, ELIMINATED,
                                  f"no dimension: |PSp6({qp})| already exceeds |G|", AN_ORDER_DIV))
            continue
        hits = [p for p in dims if (qp**p - 1) // gcd(2, qp - 1) == n2]
        if not hits:
            entries.append(_entry(f, case, ELIMINATED,
                                  f"no p in {_fmt_params(dims)} solves (q'^p-1)/({gcd(2, qp - 1)}) = {n2}",
                                  AN_OC_TABLES))
        else:
            parts = []
            status = ELIMINATED
            for p in hits:
                o = fam.psp_order(p, qp)
                if go % o:
                    parts.append(f"p={p}: |PSp{2*p}({qp})| does not divide |G|")
                else:
                    status = NEEDS_MANUAL_LEMMA
                    parts.append(f"p={p}: unresolved")
            entries.append(_entry(f, case, status, "; ".join(parts), AN_ORDER_DIV))

    # n = 2^m >= 2, q' even: q^2 = q'^n
    entries.append(_entry(
        f, "PSp4(q)", CONFIRMING,
        f"q' = q = {q}: |PSp4({q})| = |G| forces H = 1 and G = K",
        AN_OC_RECOGNITION,
    ))
    even_dims = []
    n = 4
    while fam.psp_order(n, 2) <= go:
        even_dims.append(n)
        n *= 2
    if not even_dims:
        entries.append(_entry(f, "PSp2n(q'), q' even, n = 2^m >= 4", ELIMINATED,
                              "no dimension: |PSp8(2)| already exceeds |G|", AN_ORDER_DIV))
    else:
        ftwo = power_of_two_exponent(q)
        parts = []
        status = ELIMINATED
        for n in even_dims:
            if (2 * ftwo) % n:
                parts.append(f"n={n}: q^2 = 2^{2 * ftwo} is not an n-th power")
                continue
            x = 1 << (2 * ftwo // n)
            o = fam.psp_order(n, x)
            if go % o:
                parts.append(f"n={n}, q'={x}: |PSp{2*n}({x})| = {o} does not divide |G|")
            else:
                status = NEEDS_MANUAL_LEMMA
                parts.append(f"n={n}, q'={x}: unresolved")
        entries.append(_entry(f, "PSp2n(q'), q' even, n = 2^m >= 4", status,
                              "; ".join(parts), AN_ORDER_DIV))

    # n = 2^m >= 2, q' odd: 2q^2+1 = q'^n
    target = 2 * q * q + 1
    odd_dims = []
    n = 2
    while fam.psp_order(n, 3) <= go and 3**n <= target:
        odd_dims.append(n)
        n *= 2
    if not odd_dims:
        entries.append(_entry(f, "PSp2n(q'), q' odd, n = 2^m", ELIMINATED,
                              "no dimension with |PSp2n(3)| <= |G| and 3^n <= 2q^2+1", AN_ORDER_DIV))
    else:
        parts = []
        status = ELIMINATED
        for n in odd_dims:
            root = nth_root(target, n)
            if root**n != target:
                parts.append(f"n={n}: 2q^2+1 = {target} is not a perfect n-th power")
                continue
            ppr = is_prime_power(root)
            if ppr is None or ppr[0] == 2:
                parts.append(f"n={n}: root {root} is not an odd prime power")
                continue
            rem = go % target
            if rem:
                parts.append(f"n={n}, q'={root}: 2q^2+1 = {target} must divide |G|; remainder {rem}")
            else:
                status = NEEDS_MANUAL_LEMMA
                parts.append(f"n={n}, q'={root}: 2q^2+1 divides |G|")
        entries.append(_entry(f, "PSp2n(q'), q' odd, n = 2^m", status,
                              "; ".join(parts), AN_CRESCENZO))
    return entries


def _root_hits(target: int, exponents, odd_only=True):
    """(exponent, root) pairs with root^exponent = target, root an odd prime power."""
    out = []
    for m in exponents:
        root = nth_root(target, m)
        if root**m != target:
            continue
        pp = is_prime_power(root)
        if pp is None or (odd_only and pp[0] == 2):
            continue
        out.append((m, root))
    return out


def _eliminate_pomega(q: int) -> list[TraceEntry]:
    n2 = q * q + 1
    go = group_order(q)
    f = "POmega"
    entries = []
    target = 2 * q * q + 1

    def two_powers_from(start):
        m = start
        while True:
            yield m
            m *= 2

    # (1) B_m(q'), m = 2^t >= 4, q' odd: 2q^2+1 = q'^m
    dims = _bounded_params(two_powers_from(4), lambda m: fam.omega_odd_order(m, 3), go)
    if not dims:
        entries.append(_entry(f, "B_m(q'), m = 2^t >= 4", ELIMINATED,
                              "no dimension: |B4(3)| already exceeds |G|", AN_ORDER_DIV))
    else:
        hits = _root_hits(target, dims)
        if not hits:
            entries.append(_entry(f, "B_m(q'), m = 2^t >= 4", ELIMINATED,
                                  f"2q^2+1 = {target} is not q'^m for m in {_fmt_params(dims)}",
                                  AN_CRESCENZO))
        else:
            parts = []
            status = ELIMINATED
            for m, root in hits:
                rem = go % target
                if rem:
                    parts.append(f"m={m}, q'={root}: 2q^2+1 must divide |G|; remainder {rem}")
                else:
                    status = NEEDS_MANUAL_LEMMA
                    parts.append(f"m={m}, q'={root}: unresolved")
            entries.append(_entry(f, "B_m(q'), m = 2^t >= 4", status, "; ".join(parts), AN_2Q2P1))

    # (2) B_m(3), m odd prime: (3^m - 1)/2
    dims = _bounded_params(_odd_primes(), lambda m: fam.omega_odd_order(m, 3), go)
    entries.append(_search_entry(
        f, "B_m(3), m odd prime", AN_POWER2, dims,
        lambda m: ((3**m - 1) // 2,), n2,
        on_hit=lambda m: (NEEDS_MANUAL_LEMMA, f"m={m}: 2q^2 = 3^m - 3 holds despite 3 not dividing 2q^2"),
    ))

    # (3) D+_m(q'), m >= 5 odd prime, q' in {2,3,5}: (q'^m - 1)/(q'-1)
    parts = []
    status = ELIMINATED
    any_dims = False
    for qp in (2, 3, 5):
        dims = _bounded_params((m for m in _odd_primes() if m >= 5),
                               lambda m, qp=qp: fam.pomega_plus_order(m, qp), go)
        if not dims:
            continue
        any_dims = True
        hits = [m for m in dims if (qp**m - 1) // (qp - 1) == n2]
        for m in hits:
            status = NEEDS_MANUAL_LEMMA
            parts.append(f"q'={qp}, m={m}: unresolved")
        if not hits:
            parts.append(f"q'={qp}: no m in {_fmt_params(dims)}")
    if not any_dims:
        entries.append(_entry(f, "D+_m(q'), m >= 5 prime", ELIMINATED,
                              "no dimension: |D+5(2)| already exceeds |G|", AN_ORDER_DIV))
    else:
        entries.append(_entry(f, "D+_m(q'), m >= 5 prime", status,
                              "; ".join(parts), AN_OC_TABLES))

    # (4) D+_{m+1}(3), m odd prime: (3^m - 1)/2
    dims = _bounded_params(_odd_primes(), lambda m: fam.pomega_plus_order(m + 1, 3), go)
    entries.append(_search_entry(
        f, "D+_{m+1}(3), m odd prime", AN_POWER2, dims,
        lambda m: ((3**m - 1) // 2,), n2,
        on_hit=lambda m: (NEEDS_MANUAL_LEMMA, f"m={m}: 2q^2 = 3^m - 3 holds despite 3 not dividing 2q^2"),
    ))

    # (5) D-_m(q'), m = 2^t >= 4
    dims = _bounded_params(two_powers_from(4), lambda m: fam.pomega_minus_order(m, 2), go)
    if not dims:
        entries.append(_entry(f, "D-_m(q'), m = 2^t >= 4", ELIMINATED,
                              "no dimension: |D-4(2)| already exceeds |G|", AN_ORDER_DIV))
    else:
        parts = []
        status = ELIMINATED
        ftwo = power_of_two_exponent(q)
        for m in dims:
            hits = _root_hits(target, [m])
            if hits:
                _, root = hits[0]
                rem = go % target
                if rem:
                    parts.append(f"m={m}, q'={root} odd: 2q^2+1 must divide |G|; remainder {rem}")
                else:
                    status = NEEDS_MANUAL_LEMMA
                    parts.append(f"m={m}, q'={root} odd: unresolved")
            else:
                parts.append(f"m={m}: 2q^2+1 = {target} is not an odd q'^m")
            if (2 * ftwo) % m == 0:
                x = 1 << (2 * ftwo // m)
                o = fam.pomega_minus_order(m, x)
                if go % o:
                    parts.append(f"m={m}, q'={x} even: |D-{m}({x})| does not divide |G|")
                else:
                    status = NEEDS_MANUAL_LEMMA
                    parts.append(f"m={m}, q'={x} even: unresolved")
            else:
                parts.append(f"m={m}: q^2 = 2^{2 * ftwo} is not an m-th power")
        entries.append(_entry(f, "D-_m(q'), m = 2^t >= 4", status, "; ".join(parts), AN_ORDER_DIV))

    # (6) D-_m(3), m >= 5 odd prime, m != 2^t+1: (3^m + 1)/4
    dims = _bounded_params(
        (m for m in _odd_primes() if m >= 5 and power_of_two_exponent(m - 1) is None),
        lambda m: fam.pomega_minus_order(m, 3), go)
    entries.append(_search_entry(
        f, "D-_m(3), m >= 5 prime, m != 2^t+1", AN_POWER2, dims,
        lambda m: ((3**m + 1) // 4,), n2,
        on_hit=lambda m: (NEEDS_MANUAL_LEMMA, f"m={m}: 4q^2 = 3^m - 3 holds despite 3 not dividing 4q^2"),
    ))

    def two_t_plus_one():
        t = 2
        while True:
            yield (1 << t) + 1
            t += 1

    # (7) D-_m(3), m = 2^t+1 >= 5 not prime: (3^{m-1} + 1)/2
    dims = _bounded_params((m for m in two_t_plus_one() if not is_prime(m)),
                           lambda m: fam.pomega_minus_order(m, 3), go)
    entries.append(_search_entry(
        f, "D-_m(3), m = 2^t+1 not prime", AN_CRESCENZO, dims,
        lambda m: ((3 ** (m - 1) + 1) // 2,), n2,
        on_hit=lambda m: (NEEDS_MANUAL_LEMMA, f"m={m}: 2q^2+1 = 3^(m-1) unresolved"),
    ))

    # (8) D-_m(3), m = 2^t+1 >= 5 prime: three candidate values
    dims = _bounded_params((m for m in two_t_plus_one() if is_prime(m)),
                           lambda m: fam.pomega_minus_order(m, 3), go)

    def case8_kill(m):
        v1 = (3 ** (m - 1) + 1) // 2
        if n2 == v1:
            rem = go % target
            if rem:
                return (ELIMINATED, f"m={m}: 2q^2+1 = 3^(m-1) must divide |G|; remainder {rem}")
            return (NEEDS_MANUAL_LEMMA, f"m={m}: 2q^2+1 divides |G|")
        return (NEEDS_MANUAL_LEMMA, f"m={m}: unresolved candidate value")

    entries.append(_search_entry(
        f, "D-_m(3), m = 2^t+1 prime", AN_2Q2P1, dims,
        lambda m: (
            (3 ** (m - 1) + 1) // 2,
            (3**m + 1) // 4,
            ((3 ** (m - 1) + 1) // 2) * ((3**m + 1) // 4),
        ),
        n2, on_hit=case8_kill,
    ))

    # (9) D-_{m+1}(2), m prime, m+1 != 2^t: 2^m - 1
    dims = _bounded_params(
        (m for m in _odd_primes() if power_of_two_exponent(m + 1) is None),
        lambda m: fam.pomega_minus_order(m + 1, 2), go)
    entries.append(_search_entry(
        f, "D-_{m+1}(2), m prime", AN_POWER2, dims,
        lambda m: (2**m - 1,), n2,
        on_hit=lambda m: (NEEDS_MANUAL_LEMMA, f"m={m}: q^2+2 = 2^m despite q^2+2 = 2 (mod 4)"),
    ))

    # (10) D-_m(2), m = p+1, p odd prime: 2^p+1, 2^{p+1}+1, or their product
    dims = _bounded_params(_odd_primes(), lambda p: fam.pomega_minus_order(p + 1, 2), go)

    def case10_kill(p):
        if n2 == 2**p + 1:
            return (NEEDS_MANUAL_LEMMA, f"p={p}: 2f = p despite p odd")
        if n2 == 2 ** (p + 1) + 1:
            o = fam.pomega_minus_order(p + 1, 2)
            if go % o:
                return (ELIMINATED, f"p={p}: |D-{p+1}(2)| = {o} does not divide |G|")
            return (NEEDS_MANUAL_LEMMA, f"p={p}: order divides |G|")
        return (NEEDS_MANUAL_LEMMA, f"p={p}: product case holds numerically")

    entries.append(_search_entry(
        f, "D-_{p+1}(2), p odd prime", AN_POWER2, dims,
        lambda p: (2**p + 1, 2 ** (p + 1) + 1, (2**p + 1) * (2 ** (p + 1) + 1)),
        n2, on_hit=case10_kill,
    ))
    return entries


_ELIMINATORS = {
    "Alternating": _eliminate_alternating,
    "Sporadic": _eliminate_sporadic,
    "Tits": _eliminate_tits,
    "Exceptional": _eliminate_exceptional,
    "PSL": _eliminate_psl,
    "PSU": _eliminate_psu,
    "PSp": _eliminate_psp,
    "POmega": _eliminate_pomega,
}


def eliminate_family(q: int, family: str) -> list[TraceEntry]:
    """Trace entries for one candidate family of simple sections."""
    validate_q(q)
    if family not in _ELIMINATORS:
        raise ValueError(f"unknown family {family!r}; expected one of {FAMILIES}")
    return _ELIMINATORS[family](q)


def characterize(order: int, nse: frozenset[int] | set[int]) -> Verdict:
    """Decide whether a group with this order and nse set is PSp4(q).

    NotApplicable when the order is no PSp4(2^f) order, HypothesesNotMet when
    the nse set differs from nse(PSp4(q)), and otherwise Isomorphic with a
    full machine-readable trace.
    """
    if order < 1:
        raise ValueError(f"order must be >= 1, got {order}")
    if not nse:
        raise ValueError("nse set must be nonempty")
    q = match_order(order)
    if q is None:
        return Verdict(OUTCOME_NOT_APPLICABLE, None, order,
                       f"{order} is not q^4(q^4-1)(q^2-1) for any q = 2^f > 2", None)
    expected = nse_set(q)
    if frozenset(nse) != expected:
        missing = sorted(expected - frozenset(nse))[:3]
        extra = sorted(frozenset(nse) - expected)[:3]
        return Verdict(
            OUTCOME_HYPOTHESES_NOT_MET, q, order,
            f"nse set differs from nse(PSp4({q})): missing {missing}, unexpected {extra}",
            None,
        )

    a_sets = build_A_sets(q)
    table = nse_table(q)
    checks = []
    checks.append(PrimeCountCheck(2, table.counts[2], "A2", prime_count_membership(q, 2, table.counts[2])))
    for r in prime_divisors(q * q + 1):
        checks.append(PrimeCountCheck(r, table.counts[r], "A9", prime_count_membership(q, r, table.counts[r])))
    for r in prime_divisors(q * q - 1):
        checks.append(PrimeCountCheck(r, table.counts[r], "A4|A5", prime_count_membership(q, r, table.counts[r])))
    separated = separation_check(q)
    excluded, frob_witnesses = frobenius_exclusion(q)
    entries: list[TraceEntry] = []
    for family in FAMILIES:
        entries.extend(eliminate_family(q, family))
    trace = EliminationTrace(
        a_sets, tuple(checks), separated, excluded, frob_witnesses, tuple(entries)
    )
    if not all(c.ok for c in checks) or not separated or not excluded:
        raise RuntimeError(f"internal consistency failure in the trace for q={q}")
    return Verdict(OUTCOME_ISOMORPHIC, q, order, None, trace)


def verdict_json(verdict: Verdict) -> dict:
    """JSON-ready verdict; all big integers as decimal strings."""
    out: dict = {
        "outcome": verdict.outcome,
        "q": verdict.q,
        "order": str(verdict.order),
        "reason": verdict.reason,
    }
    if verdict.trace is None:
        out["trace"] = None
        return out
    t = verdict.trace
    out["trace"] = {
        "a_sets": {
            f"A{i}": [str(v) for v in sorted(s)]
            for i, s in enumerate(t.a_sets.as_tuple(), start=1)
        },
        "prime_count_checks": [
            {"r": str(c.r), "value": str(c.value), "allowed": c.bucket, "ok": c.ok}
            for c in t.prime_count_checks
        ],
        "separation_check": t.separation,
        "frobenius_exclusion": {
            "excluded": t.frobenius_excluded,
            "checks": [
                {
                    "label": w.label,
                    "divisor": str(w.divisor),
                    "divides": w.divides,
                    "remainder": str(w.remainder),
                }
                for w in t.frobenius_witnesses
            ],
        },
        "families": [
            {
                "family": e.family,
                "case": e.case,
                "status": e.status,
                "witness": e.witness,
                "anchor": e.anchor,
            }
            for e in t.entries
        ],
    }
    return out
