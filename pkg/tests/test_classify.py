import pytest

from flagtrans.classify import (Coverage, ClassTrace, catalog_instances, run_pipeline, step1_candidates,
                                step2_orbit_filter, step3_lambda_check, trace_tuple, verify_record)
from flagtrans.designs import verify_2design
from flagtrans.group import PermGroup, trivial_group
from flagtrans.params import ParamTuple
from flagtrans.perm import parse_perm

from oracles import close_group

S9_ACTION = ("S9", "3^3:(2xS4)")
T52 = ParamTuple(280, 11340, 1296, 32, 144)


def test_step1_complete_and_empty(catalog):
    s1 = step1_candidates(catalog, *S9_ACTION, 2880)
    assert len(s1) == 0 and s1.coverage is Coverage.CATALOG and s1.eliminates


def test_step1_seventeen_classes(catalog):
    s1 = step1_candidates(catalog, *S9_ACTION, 11340)
    assert len(s1) == 17 and [c.class_no for c in s1] == list(range(1, 18))


def test_step1_unknown_when_catalog_is_silent(catalog):
    s1 = step1_candidates(catalog, "S10", "S9", 10**9)
    assert len(s1) == 0 and s1.coverage is Coverage.UNKNOWN and not s1.eliminates


def test_step1_a5_order_six_class_exists(catalog):
    # every subgroup of order 6 of A5 on 6 points, by brute force over the 60 elements
    G = catalog.resolve_action("A5", "D10").group
    elems = close_group([g.images for g in G.generators])
    invols = [e for e in elems if sum(e[i] != i + 1 for i in range(6)) and
              tuple(e[e[i] - 1] for i in range(6)) == tuple(range(1, 7))]
    threes = [e for e in elems if e not in invols and e != tuple(range(1, 7)) and
              tuple(e[e[e[i] - 1] - 1] for i in range(6)) == tuple(range(1, 7))]
    s3s = {frozenset(close_group([a, t])) for a in invols for t in threes}
    s3s = {s for s in s3s if len(s) == 6}
    assert s3s
    cands = step1_candidates(catalog, "A5", "D10", 10).candidates
    assert any(PermGroup(list(c.generators)).order() == 6 for c in cands)
    # every catalog candidate of order 6 is one of the subgroups found by brute force
    for c in cands:
        if PermGroup(list(c.generators)).order() == 6:
            assert frozenset(close_group([g.images for g in c.generators])) in s3s


def _cand(catalog, no):
    return next(c for c in step1_candidates(catalog, *S9_ACTION, 11340) if c.class_no == no)


def test_step2_class1_has_no_qualifying_orbit(catalog):
    G = catalog.resolve_action(*S9_ACTION).group
    assert step2_orbit_filter(G, _cand(catalog, 1), 32, 11340) == []


def test_step2_class13_has_two_qualifying_orbits(catalog):
    G = catalog.resolve_action(*S9_ACTION).group
    hits = step2_orbit_filter(G, _cand(catalog, 13), 32, 11340)
    assert len(hits) == 2 and all(size == 11340 for _, size in hits)


def test_step2_trivial_candidate(catalog):
    G = catalog.resolve_action("A5", "D10").group
    assert step2_orbit_filter(G, trivial_group(6), 3, 10) == []


def test_step3_class13_gives_d69_and_class11_fails(catalog):
    G = catalog.resolve_action(*S9_ACTION).group
    survivors = [o for o, _ in step2_orbit_filter(G, _cand(catalog, 13), 32, 11340)
                 if step3_lambda_check(G, o, T52).survives]
    assert survivors
    for o, _ in step2_orbit_filter(G, _cand(catalog, 11), 32, 11340):
        res = step3_lambda_check(G, o, T52)
        assert not res.survives and res.report.lambda_witness is not None


def test_step3_cyclic_orbit_eliminated():
    G = PermGroup([parse_perm("(1,2,3,4,5)", 5)])
    res = step3_lambda_check(G, [1, 2, 3], ParamTuple(5, 5, 3, 3, 1))
    assert not res.survives and res.report.lambda_witness


def test_trace_for_table5_tuple(catalog):
    trace, found = trace_tuple(catalog, *S9_ACTION, T52)
    assert trace.coverage is Coverage.CATALOG
    assert len(trace.step1) == 17
    assert len({f.design for f in found}) >= 1


def test_verify_record_d22(catalog):
    rep = verify_record(catalog, catalog.design("D22"))
    assert rep.ok and rep.params == ParamTuple(6, 10, 5, 3, 2)


def test_catalog_instances_cover_also_under(catalog):
    rec = catalog.design("D2")
    inst = catalog_instances(catalog, rec)
    assert {i.group_id for i in inst} >= {"A6", "S6", "S5"}
    assert all(i.report.ok and i.report.params == rec.params for i in inst)


@pytest.fixture(scope="module")
def small_result(catalog):
    ids = [f"D{i}" for i in range(1, 41)]
    return run_pipeline(catalog, threads=1, design_ids=ids)


def test_pipeline_subset_has_no_unknowns(small_result):
    assert small_result.unknown_verdicts == 0
    assert all(rep.ok for _, rep in small_result.designs)


def test_traces_partition_outcomes(small_result):
    for t in small_result.traces:
        assert t.status in ("survives", "eliminated", "unresolved")
        assert (t.status == "eliminated") == (t.eliminated_at is not None)


def test_shared_designs_merge(catalog):
    res = run_pipeline(catalog, design_ids=["D2", "D3"])
    d2 = next(cl for cl in res.dedup_classes if cl.design_id == "D2")
    assert {m.group_id for m in d2.members} >= {"A6", "S6", "S5"}
