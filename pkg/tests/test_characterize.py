import pytest

from psp4nse.arith import is_prime_power
from psp4nse.characterize import (
    CONFIRMING,
    ELIMINATED,
    FAMILIES,
    NEEDS_MANUAL_LEMMA,
    OUTCOME_HYPOTHESES_NOT_MET,
    OUTCOME_ISOMORPHIC,
    OUTCOME_NOT_APPLICABLE,
    build_A_sets,
    characterize,
    eliminate_family,
    frobenius_exclusion,
    match_order,
    prime_count_membership,
    verdict_json,
)
from psp4nse.families import E_GROUP_CASES, SPORADIC_GROUPS, TITS_GROUP, order_2E6, order_E7
from psp4nse.sympl import group_order, m_of_order, nse_set, nse_table


def test_build_a_sets_q4():
    a = build_A_sets(4)
    assert a.a1 == {1}
    assert a.a2 == {4335}
    assert a.a3 == {61200}
    assert a.a4 == {10880}
    assert a.a5 == {52224}
    assert a.a9 == {230400}
    assert a.union() == nse_set(4)


def test_build_a_sets_q8():
    a = build_A_sets(8)
    assert a.a4 == {66493440}  # single divisor r = 7 of q-1
    assert len(a.a4) == 1
    assert a.a9 == {16257024, 48771072, 195084288}
    assert a.union() == nse_set(8)


@pytest.mark.parametrize("q", [4, 8, 16, 32])
def test_a_sets_partition_nse(q):
    a = build_A_sets(q)
    assert a.union() == nse_set(q)
    assert len(a.a2) == 1 and len(a.a3) == 1
    # indexed construction reproduces the count formulas value-for-value
    table = nse_table(q)
    assert table.counts[2] in a.a2
    assert table.counts[4] in a.a3


def test_match_order():
    assert match_order(979200) == 4
    assert match_order(979201) is None
    assert match_order(1056706560) == 8
    assert match_order(group_order(1 << 12)) == 1 << 12
    assert match_order(84) is None
    with pytest.raises(ValueError):
        match_order(0)


def test_prime_count_membership():
    assert prime_count_membership(4, 2, 4335)
    assert prime_count_membership(4, 17, 230400)
    assert not prime_count_membership(4, 17, 4335)
    assert prime_count_membership(4, 5, 52224)
    assert prime_count_membership(4, 3, 10880)
    with pytest.raises(ValueError):
        prime_count_membership(4, 7, 1)  # 7 divides neither q^2-1 nor q^2+1
    with pytest.raises(ValueError):
        prime_count_membership(4, 15, 1)  # not prime


@pytest.mark.parametrize("q", [4, 8, 16])
def test_frobenius_exclusion(q):
    excluded, checks = frobenius_exclusion(q)
    assert excluded
    assert all(not c.divides for c in checks)
    if q == 4:
        assert checks[0].remainder == 3  # 57599 mod 17


def test_eliminate_alternating_q4():
    entries = eliminate_family(4, "Alternating")
    by_case = {e.case: e for e in entries}
    assert all(e.status == ELIMINATED for e in entries)
    # q^2+1 = 17 is prime, killed through q^4 - 9 = 247
    assert "247" in by_case["q^2+1 = p"].witness
    # q^2+3 = 19 is prime but does not divide |G|
    assert "19" in by_case["q^2+1 = p-2"].witness


def test_eliminate_sporadic_q4():
    entries = eliminate_family(4, "Sporadic")
    assert len(entries) == len(SPORADIC_GROUPS)
    assert all(e.status == ELIMINATED for e in entries)
    # the groups with 17 as an odd component survive membership and die by order
    matched = {e.case for e in entries if "does not divide" in e.witness}
    assert {"J3", "He", "Fi23", "Fi24'"} <= matched


def test_eliminate_tits():
    for q in (4, 8):
        (entry,) = eliminate_family(q, "Tits")
        assert entry.status == ELIMINATED


def test_eliminate_exceptional_2e6_membership():
    # q=4 hits the 17 in the 2E6(2) component list; order divisibility kills it
    entries = eliminate_family(4, "Exceptional")
    e = next(x for x in entries if x.case == "2E6(2)")
    assert e.status == ELIMINATED
    assert "does not divide" in e.witness


def test_eliminate_exceptional_suzuki_q8():
    # q'^2+1 = 65 hits at q' = q = 8; the Sylow count argument kills it
    entries = eliminate_family(8, "Exceptional")
    e = next(x for x in entries if x.case == "2B2(q')")
    assert e.status == ELIMINATED
    assert "q'=8" in e.witness


def test_eliminate_psl_q4():
    entries = eliminate_family(4, "PSL")
    by_case = {e.case: e for e in entries}
    psl217 = by_case["PSL2(q'), q' = q^2+1"]
    assert psl217.status == ELIMINATED
    assert "min(A4 u A5) = 10880 > 400" in psl217.witness
    confirming = [e for e in entries if e.status == CONFIRMING]
    assert [e.case for e in confirming] == ["PSL2(q^2)"]


def test_eliminate_psp_q4():
    entries = eliminate_family(4, "PSp")
    confirming = [e for e in entries if e.status == CONFIRMING]
    assert [e.case for e in confirming] == ["PSp4(q)"]
    assert "H = 1" in confirming[0].witness
    assert all(e.status in (ELIMINATED, CONFIRMING) for e in entries)


@pytest.mark.parametrize("family", FAMILIES)
@pytest.mark.parametrize("q", [4, 8])
def test_every_family_resolves(q, family):
    entries = eliminate_family(q, family)
    assert entries
    assert all(e.status != NEEDS_MANUAL_LEMMA for e in entries)
    assert all(e.witness for e in entries)
    assert all(e.anchor for e in entries)


def test_eliminate_family_rejects_unknown():
    with pytest.raises(ValueError):
        eliminate_family(4, "Dihedral")


@pytest.mark.parametrize("q", [4, 8, 16, 32])
def test_characterize_positive(q):
    verdict = characterize(group_order(q), nse_set(q))
    assert verdict.outcome == OUTCOME_ISOMORPHIC
    assert verdict.q == q
    trace = verdict.trace
    assert {e.family for e in trace.entries} == set(FAMILIES)
    assert not trace.by_status(NEEDS_MANUAL_LEMMA)
    assert {e.case for e in trace.by_status(CONFIRMING)} == {"PSL2(q^2)", "PSp4(q)"}
    assert trace.separation
    assert trace.frobenius_excluded
    assert all(c.ok for c in trace.prime_count_checks)


def test_characterize_not_applicable():
    verdict = characterize(84, {1, 2, 6, 12, 14, 28})
    assert verdict.outcome == OUTCOME_NOT_APPLICABLE
    assert verdict.trace is None


def test_characterize_wrong_nse():
    wrong = (nse_set(4) - {4335}) | {4336}
    verdict = characterize(979200, wrong)
    assert verdict.outcome == OUTCOME_HYPOTHESES_NOT_MET


@pytest.mark.parametrize("q", [4, 8])
def test_perturbation_soundness(q):
    table = nse_table(q)
    for r in table.counts:
        for delta in (1, -1):
            counts = dict(table.counts)
            counts[r] += delta
            verdict = characterize(group_order(q), set(counts.values()))
            assert verdict.outcome != OUTCOME_ISOMORPHIC, (r, delta)


def test_sporadic_data_validity():
    for grp in SPORADIC_GROUPS + (TITS_GROUP,):
        order = grp.order
        for comp in grp.odd_components:
            pk = is_prime_power(comp)
            assert pk is not None, (grp.name, comp)
            p, _ = pk
            assert p % 2 == 1
            assert order % comp == 0
            assert (order // comp) % p != 0  # full p-part of the order


def test_e_group_lists():
    cases = dict((name, vals) for name, _, vals in E_GROUP_CASES)
    assert set(cases["2E6(2)"]) == {13, 17, 19, 221, 247, 323, 4199}
    assert set(cases["E7(2)"]) == {73, 127, 9271}
    assert set(cases["E7(3)"]) == {757, 1093, 827401}
    # base primes divide the corresponding group orders
    assert order_2E6(2) % (13 * 17 * 19) == 0
    assert order_E7(2) % (73 * 127) == 0
    assert order_E7(3) % (757 * 1093) == 0


def test_verdict_json_shape():
    verdict = characterize(979200, nse_set(4))
    obj = verdict_json(verdict)
    assert obj["outcome"] == "IsomorphicToPSp4"
    assert obj["q"] == 4
    assert obj["order"] == "979200"
    trace = obj["trace"]
    assert trace["a_sets"]["A9"] == ["230400"]
    assert trace["separation_check"] is True
    assert trace["frobenius_exclusion"]["excluded"] is True
    families = {e["family"] for e in trace["families"]}
    assert families == set(FAMILIES)
    st = {e["status"] for e in trace["families"]}
    assert st == {"Eliminated", "Confirming"}


def test_verdict_json_negative():
    obj = verdict_json(characterize(84, {1, 2}))
    assert obj["outcome"] == "NotApplicable"
    assert obj["trace"] is None


def test_counts_match_m_of_order():
    # build_A_sets restates the formulas; they must agree with the dispatcher
    for q in (4, 8, 16):
        a = build_A_sets(q)
        assert m_of_order(q, 2) in a.a2
        assert m_of_order(q, 4) in a.a3
