import random
from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from flagtrans.designs import (Design, DesignError, IsoVerdict, are_isomorphic, check_design, complement, develop,
                               fingerprint, full_design, is_flag_transitive, relabel, verify_2design)
from flagtrans.group import PermGroup
from flagtrans.params import ParamTuple
from flagtrans.perm import Permutation, parse_perm

from oracles import is_2design_bruteforce


def sym(n):
    return PermGroup([parse_perm("(1,2)", n), parse_perm("(" + ",".join(map(str, range(1, n + 1))) + ")", n)])


def alt(n):
    return PermGroup([Permutation.from_cycles([(1, 2, x)], n) for x in range(3, n + 1)])


# PG(3,2) points as nonzero vectors of F_2^4; a transitive group on them is generated by a Singer cycle
def fano3_design():
    pts = list(range(1, 16))
    planes = []
    for a in pts:
        planes.append(tuple(sorted(x for x in pts if bin(a & x).count("1") % 2 == 0)))
    lines = set()
    for x, y in combinations(pts, 2):
        lines.add(tuple(sorted((x, y, x ^ y))))
    return Design(15, sorted(lines)), Design(15, planes)


def test_develop_full():
    D = develop(sym(5), [1, 2, 3])
    assert D.b == 10 and D == full_design(5, 3)


def test_verify_examples():
    assert verify_2design(full_design(5, 3)).params == ParamTuple(5, 10, 6, 3, 3)
    rep = verify_2design(full_design(10, 6))
    assert full_design(10, 6).b == 210 and rep.params == ParamTuple(10, 210, 126, 6, 70)
    assert full_design(7, 5).b == 21 and verify_2design(full_design(7, 5)).params.lam == 10


def test_verify_failure_has_witness():
    D = Design(5, [(1, 2, 3), (1, 4, 5), (2, 4, 5)])
    rep = verify_2design(D)
    assert not rep.is_2design and rep.params is None
    (p, c), (q, d) = rep.lambda_witness
    assert c != d
    blocks = [set(b) for b in D.blocks]
    assert c == sum(set(p) <= b for b in blocks) and d == sum(set(q) <= b for b in blocks)


def test_design_rejects_bad_input():
    with pytest.raises(DesignError):
        Design(5, [(1, 2, 3), (1, 2, 3)])
    with pytest.raises(DesignError):
        Design(5, [(1, 2, 6)])
    with pytest.raises(DesignError):
        Design(5, [(1, 2)])


def test_flag_transitivity_examples():
    assert is_flag_transitive(sym(5), full_design(5, 3))
    assert is_flag_transitive(alt(5), full_design(5, 3))
    cyc = PermGroup([parse_perm("(1,2,3,4,5)", 5)])
    assert not is_flag_transitive(cyc, full_design(5, 3))


def test_flag_transitivity_requires_invariance():
    D = Design(5, [(1, 2, 3), (1, 4, 5), (2, 4, 5)])
    with pytest.raises(DesignError):
        is_flag_transitive(sym(5), D)


def test_cyclic_orbit_is_not_a_design():
    cyc = PermGroup([parse_perm("(1,2,3,4,5)", 5)])
    D = develop(cyc, [1, 2, 3])
    assert D.b == 5 and not verify_2design(D).is_2design


@pytest.mark.parametrize("n", range(5, 11))
def test_full_designs_theorem(n):
    for k in range(3, n - 1):
        D = full_design(n, k)
        for G in (sym(n), alt(n)):
            assert check_design(G, D).ok


@pytest.mark.parametrize("n,k", [(5, 3), (6, 3), (6, 4), (7, 3), (7, 4)])
def test_verify_matches_bruteforce(n, k):
    D = full_design(n, k)
    assert tuple(verify_2design(D).params) == is_2design_bruteforce(n, D.blocks)


def test_pg32_designs():
    lines, planes = fano3_design()
    assert verify_2design(lines).params == ParamTuple(15, 35, 7, 3, 1)
    assert verify_2design(planes).params == ParamTuple(15, 15, 7, 7, 3)
    comp = complement(lines)
    assert verify_2design(comp).params == ParamTuple(15, 35, 28, 12, 22)
    assert verify_2design(complement(planes)).params == ParamTuple(15, 15, 8, 8, 4)


def test_fingerprint_profile_full_design():
    fp = fingerprint(full_design(5, 3))
    # {1,2,3} meets itself in 3, three blocks in 2 points, six in 1 point
    assert dict(fp.block_profile) == {3: 1, 2: 6, 1: 3}


@st.composite
def relabelings(draw, n):
    return draw(st.permutations(list(range(1, n + 1))))


SMALL_DESIGNS = [full_design(6, 3), full_design(7, 4), *fano3_design()]


@settings(max_examples=30, deadline=None)
@given(st.sampled_from(SMALL_DESIGNS), st.randoms(use_true_random=False))
def test_relabel_invariance(D, rnd):
    perm = list(range(1, D.v + 1))
    rnd.shuffle(perm)
    E = relabel(D, perm)
    assert fingerprint(D) == fingerprint(E)
    res = are_isomorphic(D, E)
    assert res.verdict is IsoVerdict.YES
    assert relabel(D, res.mapping) == E


def test_nonisomorphic_same_parameters():
    # two Steiner triple systems on 15 points: PG(3,2) lines and the Bose construction over Z_5 x Z_3
    lines, _ = fano3_design()
    pts = [(a, i) for i in range(3) for a in range(5)]
    idx = {p: j + 1 for j, p in enumerate(pts)}
    inv2 = 3  # inverse of 2 mod 5
    blocks = [tuple(sorted((idx[(a, 0)], idx[(a, 1)], idx[(a, 2)]))) for a in range(5)]
    for a, b in combinations(range(5), 2):
        c = ((a + b) * inv2) % 5
        for i in range(3):
            blocks.append(tuple(sorted((idx[(a, i)], idx[(b, i)], idx[(c, (i + 1) % 3)]))))
    bose = Design(15, blocks)
    assert verify_2design(bose).params == ParamTuple(15, 35, 7, 3, 1)
    assert are_isomorphic(lines, bose).verdict is IsoVerdict.NO


@settings(max_examples=20, deadline=None)
@given(st.sampled_from(SMALL_DESIGNS), st.randoms(use_true_random=False))
def test_point_transitive_shortcut_agrees(D, rnd):
    # all SMALL_DESIGNS have point-transitive automorphism groups
    perm = list(range(1, D.v + 1))
    rnd.shuffle(perm)
    E = relabel(D, perm)
    full = are_isomorphic(D, E)
    short = are_isomorphic(D, E, point_transitive=True)
    assert short.verdict is full.verdict is IsoVerdict.YES
    assert short.nodes <= full.nodes
    assert relabel(D, short.mapping) == E


def test_isomorphism_parameter_mismatch_is_immediate():
    res = are_isomorphic(full_design(5, 3), full_design(6, 3))
    assert res.verdict is IsoVerdict.NO and res.nodes == 0


def test_isomorphism_budget_reports_unknown():
    lines, _ = fano3_design()
    perm = list(range(1, 16))
    random.Random(3).shuffle(perm)
    res = are_isomorphic(lines, relabel(lines, perm), node_budget=1)
    assert res.verdict is IsoVerdict.UNKNOWN


@given(st.sampled_from(SMALL_DESIGNS))
def test_complement_involution(D):
    assert complement(complement(D)) == D
    assert D.replication.sum() == D.b * D.k


def test_design_json_roundtrip():
    D = full_design(6, 3)
    assert Design.from_json(D.to_json()) == D


def test_develop_under_symmetric_group_is_full():
    for n, k in [(6, 3), (7, 4), (8, 5)]:
        block = random.Random(n).sample(range(1, n + 1), k)
        assert develop(sym(n), block) == full_design(n, k)
