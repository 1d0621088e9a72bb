"""The elimination pipeline: tuples -> candidate stabilizers -> orbits -> designs.

For a tuple (v,b,r,k,lambda) and a point action of G, a flag-transitive design
has a block stabilizer H of index b that is transitive on its block, so the
block is an H-orbit of length k whose G-orbit has exactly b members (step ii)
and whose development is a 2-design with the stated lambda (step iii). Step i
asks which H exist; that knowledge comes from the catalog, which also says
when its list of classes is complete.
"""

from __future__ import annotations

import enum
import json
from collections import defaultdict
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

from .catalog import Catalog, CatalogError, DesignRecord, StabilizerCandidateSpec, validate
from .designs import (Design, DesignCheckReport, Fingerprint, IsoVerdict, are_isomorphic, check_design,
                      develop, fingerprint, verify_2design)
from .group import PermGroup, set_orbit_array, subgroup_orbits
from .params import ParamTuple, enumerate_all


class Coverage(enum.Enum):
    CATALOG = "catalog"  # the catalog lists every class of this index
    UNKNOWN = "unknown"  # the catalog is silent; nothing is claimed


@dataclass(frozen=True)
class Step1Result:
    candidates: tuple[StabilizerCandidateSpec, ...]
    coverage: Coverage

    def __len__(self) -> int:
        return len(self.candidates)

    def __iter__(self):
        return iter(self.candidates)

    @property
    def eliminates(self) -> bool:
        return not self.candidates and self.coverage is Coverage.CATALOG


def step1_candidates(c: Catalog, group_id: str, action_ref: str, b: int) -> Step1Result:
    cands = c.candidates(group_id, action_ref, b)
    cov = c.coverage(group_id, action_ref, b)
    complete = cov is not None and cov.complete
    return Step1Result(tuple(cands), Coverage.CATALOG if complete else Coverage.UNKNOWN)


def set_orbit_size(G: PermGroup, points: Iterable[int], limit: int | None = None) -> int | None:
    """|O^G| for a 1-based point set, or None once it exceeds ``limit``."""
    arr = set_orbit_array(G.generator_arrays(), [p - 1 for p in points], limit=limit)
    return None if arr is None else arr.shape[0]


@dataclass(frozen=True)
class OrbitOutcome:
    orbit: tuple[int, ...]
    set_orbit_size: int | None  # None: larger than b
    step2: bool
    step3: bool | None = None  # None when step 2 already failed
    params: ParamTuple | None = None  # what the development turned out to be
    witness: tuple | None = None
    design_id: str | None = None  # filled in after deduplication


def step2_orbit_filter(G_v: PermGroup, H: PermGroup | StabilizerCandidateSpec, k: int, b: int
                       ) -> list[tuple[tuple[int, ...], int]]:
    """H-orbits of length k whose set-orbit under G has exactly b members."""
    return [(o.orbit, o.set_orbit_size) for o in _orbit_outcomes(G_v, _as_group(H), k, b) if o.step2]


def _as_group(H) -> PermGroup:
    if isinstance(H, StabilizerCandidateSpec):
        return PermGroup(list(H.generators))
    return H


def _orbit_outcomes(G_v: PermGroup, H: PermGroup, k: int, b: int) -> list[OrbitOutcome]:
    out = []
    for orb in subgroup_orbits(G_v.degree, H).orbits:
        if len(orb) != k:
            continue
        size = set_orbit_size(G_v, orb, limit=b)
        out.append(OrbitOutcome(tuple(orb), size, size == b))
    return out


@dataclass(frozen=True)
class Step3Result:
    design: Design | None
    report: DesignCheckReport

    @property
    def survives(self) -> bool:
        return self.design is not None


def step3_lambda_check(G_v: PermGroup, O: Iterable[int], expected: ParamTuple) -> Step3Result:
    """Develop O; it survives iff the result is a 2-design with exactly the expected parameters."""
    D = develop(G_v, O)
    rep = verify_2design(D)
    ok = rep.is_2design and rep.params == ParamTuple(*expected)
    return Step3Result(D if ok else None, rep)


# pipeline result types


@dataclass
class ClassTrace:
    class_no: int
    order: int
    signature: str
    orbits: list[OrbitOutcome]

    @property
    def outcome_labels(self) -> list[str]:
        """Which steps eliminate this class's k-orbits, plus any design ids produced."""
        labels = set()
        if not self.orbits or any(not o.step2 for o in self.orbits):
            labels.add("Step(ii)")
        if any(o.step2 and not o.step3 for o in self.orbits):
            labels.add("Step(iii)")
        ids = sorted({o.design_id for o in self.orbits if o.step3 and o.design_id},
                     key=lambda d: int(d[1:]) if d[1:].isdigit() else 0)
        return sorted(labels) + ids

    @property
    def survives(self) -> bool:
        return any(o.step3 for o in self.orbits)


@dataclass
class EliminationTrace:
    tuple: ParamTuple
    group_id: str
    action_ref: str
    coverage: Coverage
    step1: list[ClassTrace] = field(default_factory=list)
    catalog_designs: list[str] = field(default_factory=list)
    surviving_designs: list[str] = field(default_factory=list)

    @property
    def status(self) -> str:
        if self.surviving_designs or self.catalog_designs:
            return "survives"
        if self.coverage is Coverage.CATALOG:
            return "eliminated"
        return "unresolved"

    @property
    def eliminated_at(self) -> str | None:
        if self.status != "eliminated":
            return None
        if not self.step1:
            return "Step(i)"
        if all(not o.step2 for cl in self.step1 for o in cl.orbits):
            return "Step(ii)"
        return "Step(iii)"


@dataclass
class DesignInstance:
    """One design as seen under one group action."""
    design_id: str | None  # catalog id, or None for a pipeline-only find
    group_id: str
    action_ref: str
    base_block: tuple[int, ...]
    design: Design
    report: DesignCheckReport
    fp: Fingerprint | None = None

    @property
    def key(self) -> tuple:
        return (self.group_id, self.action_ref, self.base_block)


@dataclass
class IsoClass:
    design_id: str
    params: ParamTuple
    members: list[DesignInstance]


@dataclass
class ClassificationResult:
    designs: list[tuple[DesignRecord, DesignCheckReport]]
    dedup_classes: list[IsoClass]
    traces: list[EliminationTrace]
    discrepancies: list[str]
    unknown_verdicts: int = 0
    group_order: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.discrepancies and self.unknown_verdicts == 0 and all(r.ok for _, r in self.designs)

    def to_json(self) -> dict:
        return {
            "ok": self.ok,
            "classes": len(self.dedup_classes),
            "discrepancies": self.discrepancies,
            "unknown_isomorphism_verdicts": self.unknown_verdicts,
            "designs": [
                {"design_id": rec.design_id, "group_id": rec.group_id, "action_ref": rec.action_ref,
                 "params": list(rec.params), "table_row_ref": rec.table_row_ref, "check": rep.to_json()}
                for rec, rep in self.designs
            ],
            "dedup_classes": [
                {"design_id": cl.design_id, "params": list(cl.params),
                 "instances": [{"group_id": m.group_id, "action_ref": m.action_ref,
                                "base_block": list(m.base_block), "source": "catalog" if m.design_id else "pipeline"}
                               for m in cl.members]}
                for cl in self.dedup_classes
            ],
            "traces": [_trace_json(t) for t in self.traces],
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=1, sort_keys=False)


def _trace_json(t: EliminationTrace) -> dict:
    return {
        "group_id": t.group_id, "action_ref": t.action_ref, "tuple": list(t.tuple),
        "coverage": t.coverage.value, "status": t.status, "eliminated_at": t.eliminated_at,
        "catalog_designs": t.catalog_designs, "surviving_designs": t.surviving_designs,
        "classes": [
            {"class_no": cl.class_no, "order": cl.order, "orbit_lengths": cl.signature,
             "outcome": cl.outcome_labels,
             "orbits": [{"orbit": list(o.orbit), "set_orbit_size": o.set_orbit_size, "step2": o.step2,
                         "step3": o.step3, "params": list(o.params) if o.params else None,
                         "design_id": o.design_id} for o in cl.orbits]}
            for cl in t.step1
        ],
    }


# pipeline


def trace_tuple(c: Catalog, group_id: str, action_ref: str, t: ParamTuple
                ) -> tuple[EliminationTrace, list[DesignInstance]]:
    """Steps i-iii for one tuple; returns the trace and the designs it produced."""
    s1 = step1_candidates(c, group_id, action_ref, t.b)
    trace = EliminationTrace(t, group_id, action_ref, s1.coverage)
    found: list[DesignInstance] = []
    if not s1.candidates:
        return trace, found
    G_v = c.resolve_action(group_id, action_ref).group
    for cand in s1.candidates:
        H = PermGroup(list(cand.generators))
        sig = subgroup_orbits(G_v.degree, H)
        outcomes = []
        for o in _orbit_outcomes(G_v, H, t.k, t.b):
            if not o.step2:
                outcomes.append(o)
                continue
            s3 = step3_lambda_check(G_v, o.orbit, t)
            outcomes.append(OrbitOutcome(o.orbit, o.set_orbit_size, True, s3.survives, s3.report.params,
                                         s3.report.lambda_witness))
            if s3.survives:
                rep = check_design(G_v, s3.design)
                found.append(DesignInstance(None, group_id, action_ref, o.orbit, s3.design, rep))
        trace.step1.append(ClassTrace(cand.class_no, H.order(), str(sig), outcomes))
    return trace, found


def catalog_instances(c: Catalog, rec: DesignRecord, include_also: bool = True) -> list[DesignInstance]:
    out = []
    places = [(rec.group_id, rec.action_ref, rec.base_block)]
    if include_also:
        places += [(a.group_id, a.action_ref, a.base_block) for a in rec.also_under]
    for gid, ref, block in places:
        G_v = c.resolve_action(gid, ref).group
        D = develop(G_v, block)
        out.append(DesignInstance(rec.design_id, gid, ref, tuple(block), D, check_design(G_v, D)))
    return out


def verify_record(c: Catalog, rec: DesignRecord) -> DesignCheckReport:
    """Develop the record's base block under its own action and check everything."""
    rep = catalog_instances(c, rec, include_also=False)[0].report
    if rep.params != rec.params:
        # a 2-design with the wrong parameters does not verify the record
        rep.is_2design = False
    return rep


def _map(fn: Callable, items: Sequence, threads: int) -> list:
    if threads <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(fn, items))


def _design_sort_key(design_id: str | None) -> tuple[int, str]:
    if design_id and design_id[1:].isdigit():
        return int(design_id[1:]), ""
    return 10**9, design_id or ""


def deduplicate(instances: list[DesignInstance], node_budget: int = 10**7, threads: int = 1
                ) -> tuple[list[list[DesignInstance]], int]:
    """Partition instances into isomorphism classes; returns (classes, unknown verdict count).

    Fingerprints separate most classes; equal fingerprints go to the
    budgeted backtracking test. Instances are visited in a fixed order so the
    partition does not depend on scheduling.
    """
    for inst, fp in zip(instances, _map(lambda i: fingerprint(i.design), instances, threads)):
        inst.fp = fp
    classes: list[list[DesignInstance]] = []
    unknown = 0
    by_fp: dict[Fingerprint, list[int]] = defaultdict(list)
    for inst in instances:
        placed = False
        for ci in by_fp[inst.fp]:
            rep = classes[ci][0]
            if rep.design_id is not None and rep.design_id == inst.design_id:
                classes[ci].append(inst)  # same record, another group: isomorphic by construction
                placed = True
                break
            verdict = are_isomorphic(inst.design, rep.design, node_budget, point_transitive=True).verdict
            if verdict is IsoVerdict.UNKNOWN:
                unknown += 1
            elif verdict is IsoVerdict.YES:
                classes[ci].append(inst)
                placed = True
                break
        if not placed:
            by_fp[inst.fp].append(len(classes))
            classes.append([inst])
    return classes, unknown


def run_pipeline(c: Catalog, threads: int = 1, *, check_catalog: bool = False,
                 design_ids: Iterable[str] | None = None, node_budget: int = 10**7) -> ClassificationResult:
    """Enumerate, eliminate, verify the catalog designs, deduplicate; deterministic output."""
    if check_catalog:
        rep = validate(c)
        if not rep.ok:
            raise CatalogError("catalog invalid: " + "; ".join(f"{e.record} {e.check}" for e in rep.failures[:5]))
    group_rank = {g.id: i for i, g in enumerate(c.groups)}
    enum_res = enumerate_all(c)
    work = [(gid, sid, t) for (gid, sid), tuples in enum_res.per_action.items() for t in tuples]
    wanted = set(design_ids) if design_ids is not None else None
    records = [d for d in c.designs if wanted is None or d.design_id in wanted]

    traced = _map(lambda w: trace_tuple(c, *w), work, threads)
    inst_lists = _map(lambda r: catalog_instances(c, r), records, threads)

    discrepancies: list[str] = []
    catalog_inst = [i for lst in inst_lists for i in lst]
    pipeline_inst = [i for _, found in traced for i in found]
    for inst in catalog_inst:
        if not inst.report.ok:
            discrepancies.append(f"{inst.design_id} fails verification under {inst.group_id}/{inst.action_ref}")
    designs = []
    for rec, lst in zip(records, inst_lists):
        primary = lst[0].report
        if primary.params != rec.params:
            discrepancies.append(f"{rec.design_id}: developed parameters {primary.params} differ from {rec.params}")
            primary.is_2design = False
        designs.append((rec, primary))

    # dedupe in a fixed order: catalog instances by design number, then pipeline finds
    ordered = sorted(catalog_inst, key=lambda i: (_design_sort_key(i.design_id), group_rank[i.group_id])) + \
        sorted(pipeline_inst, key=lambda i: (group_rank[i.group_id], i.action_ref, i.design.v, i.base_block))
    groups_of_params: dict[ParamTuple, list[DesignInstance]] = defaultdict(list)
    for inst in ordered:
        groups_of_params[inst.report.params].append(inst)
    partitions = _map(lambda key: deduplicate(groups_of_params[key], node_budget),
                      sorted(groups_of_params, key=lambda p: (p.v, p.b, p.k, p.lam)), threads)
    iso_classes: list[IsoClass] = []
    unknown = 0
    for classes, unk in partitions:
        unknown += unk
        for members in classes:
            ids = sorted({m.design_id for m in members if m.design_id}, key=_design_sort_key)
            if len(ids) > 1:
                discrepancies.append(f"designs {', '.join(ids)} are isomorphic")
            if not ids:
                m = members[0]
                discrepancies.append(f"design not in catalog: {m.report.params} under {m.group_id}/{m.action_ref} "
                                     f"block {list(m.base_block)}")
            iso_classes.append(IsoClass(ids[0] if ids else "new", members[0].report.params, members))
    if unknown:
        discrepancies.append(f"{unknown} isomorphism test(s) exhausted the node budget")

    # label pipeline finds with the catalog ids of their classes
    id_of = {id(m): cl.design_id for cl in iso_classes for m in cl.members}
    cat_by_action: dict[tuple, list[str]] = defaultdict(list)
    for inst in catalog_inst:
        cat_by_action[(inst.group_id, inst.action_ref, inst.report.params)].append(inst.design_id)
    traces = []
    for (trace, found) in traced:
        ids = iter(id_of[id(f)] for f in found)
        for cl in trace.step1:
            for j, o in enumerate(cl.orbits):
                if o.step3:
                    cl.orbits[j] = OrbitOutcome(o.orbit, o.set_orbit_size, o.step2, o.step3, o.params,
                                                o.witness, next(ids))
        trace.surviving_designs = sorted({id_of[id(f)] for f in found}, key=_design_sort_key)
        trace.catalog_designs = sorted(set(cat_by_action.get((trace.group_id, trace.action_ref, trace.tuple), [])),
                                       key=_design_sort_key)
        if trace.coverage is Coverage.CATALOG and trace.catalog_designs and not trace.surviving_designs:
            discrepancies.append(f"{trace.group_id}/{trace.action_ref} {trace.tuple}: catalog design(s) "
                                 f"{', '.join(trace.catalog_designs)} but complete candidate list eliminates it")
        traces.append(trace)

    iso_classes.sort(key=lambda cl: (_design_sort_key(cl.design_id), cl.params))
    traces.sort(key=lambda t: (group_rank[t.group_id], t.tuple.v, t.tuple.k, t.tuple.lam, t.tuple.b, t.action_ref))
    designs.sort(key=lambda d: (group_rank[d[0].group_id], d[0].v, d[0].k, d[0].lam, d[0].number))
    return ClassificationResult(designs, iso_classes, traces, sorted(set(discrepancies)), unknown,
                                [g.id for g in c.groups])


# text tables


def format_design_table(c: Catalog, result: ClassificationResult, table: int) -> str:
    """Rows in published order: Case, G, G_x, v, b, r, k, lambda, Reference."""
    prefix = f"table{table}:"
    rows = []
    for rec, _ in result.designs:
        if rec.table_row_ref.startswith(prefix):
            rows.append((int(rec.table_row_ref[len(prefix):]), rec))
    # rows of the second table that reuse a full design point back to it
    extra = []
    if table == 2:
        for rec, _ in result.designs:
            for alt in rec.also_under:
                if rec.table_row_ref.startswith("table1:") and c.group(alt.group_id).natural_degree != rec.v:
                    extra.append((alt, rec))
    header = ["Case", "G", "G_x", "v", "b", "r", "k", "lambda", "Reference"]
    lines = []
    for case, rec in sorted(rows, key=lambda x: x[0]):
        places = [(rec.group_id, rec.action_ref)] + [(a.group_id, a.action_ref) for a in rec.also_under]
        if table == 1:
            places = [p for p in places if c.group(p[0]).natural_degree == rec.v]
        gs = ", ".join(c.group(g).display for g, _ in places)
        hs = ", ".join(s for _, s in places)
        lines.append([str(case), gs, hs, *map(str, rec.params), f"D{rec.number}"])
    grouped: dict[tuple, list] = defaultdict(list)
    for alt, rec in extra:
        grouped[rec.design_id].append((alt, rec))
    for did, items in sorted(grouped.items(), key=lambda x: _design_sort_key(x[0])):
        rec = items[0][1]
        gs = ", ".join(c.group(a.group_id).display for a, _ in items)
        hs = ", ".join(a.action_ref for a, _ in items)
        lines.append(["-", gs, hs, *map(str, rec.params), did])
    widths = [max(len(r[i]) for r in [header] + lines) for i in range(len(header))]
    fmt = lambda r: "  ".join(x.ljust(w) for x, w in zip(r, widths)).rstrip()
    return "\n".join([fmt(header), fmt(["-" * w for w in widths])] + [fmt(r) for r in lines]) + "\n"
