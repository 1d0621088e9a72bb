"""Reference data: groups, maximal subgroups, candidate block stabilizers, designs.

The catalog is a single versioned JSON document. ``load`` parses and
type-checks it; ``validate`` re-derives every stated fact (orders, membership,
coset-action degrees, primitivity, design arithmetic) and reports per record.
"""

from __future__ import annotations

import json
import threading
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Any

from .group import CosetActionResult, GroupError, PermGroup, coset_action, is_primitive
from .params import ParamTuple
from .perm import Permutation, PermParseError, parse_perm

SCHEMA_VERSION = 1
ENV_VAR = "FLAGTRANS_CATALOG"


class CatalogError(ValueError):
    pass


@dataclass(frozen=True)
class GroupSpec:
    id: str
    natural_degree: int
    generators: tuple[Permutation, ...]
    expected_order: int
    label: str = ""

    @property
    def display(self) -> str:
        return self.label or self.id


@dataclass(frozen=True)
class MaxSubgroupSpec:
    group_id: str
    subgroup_id: str
    generators: tuple[Permutation, ...]
    expected_order: int
    expected_index: int


@dataclass(frozen=True)
class StabilizerCandidateSpec:
    group_id: str
    action_ref: str
    index: int
    class_no: int
    generators: tuple[Permutation, ...]


@dataclass(frozen=True)
class CoverageSpec:
    """Declares that the catalog lists every class of subgroups of a given index."""
    group_id: str
    action_ref: str
    index: int
    complete: bool


@dataclass(frozen=True)
class ActionBlock:
    group_id: str
    action_ref: str
    base_block: tuple[int, ...]


@dataclass(frozen=True)
class DesignRecord:
    design_id: str
    group_id: str
    action_ref: str
    v: int
    b: int
    r: int
    k: int
    lam: int
    base_block: tuple[int, ...]
    table_row_ref: str
    also_under: tuple[ActionBlock, ...] = ()

    @property
    def params(self) -> ParamTuple:
        return ParamTuple(self.v, self.b, self.r, self.k, self.lam)

    @property
    def number(self) -> int:
        return int(self.design_id[1:])


@dataclass(frozen=True)
class ResolvedAction:
    group_id: str
    action_ref: str
    group: PermGroup  # degree-v image
    labeling: tuple[Permutation, ...]  # labeling[i] represents coset i+1

    @property
    def degree(self) -> int:
        return self.group.degree


class Catalog:
    """Immutable after construction; ``resolve_action`` caches once per key."""

    def __init__(self, groups, max_subgroups, candidates, coverage, designs, source: str = "<memory>"):
        self.groups: tuple[GroupSpec, ...] = tuple(groups)
        self.max_subgroups: tuple[MaxSubgroupSpec, ...] = tuple(max_subgroups)
        self.stabilizer_candidates: tuple[StabilizerCandidateSpec, ...] = tuple(candidates)
        self.candidate_coverage: tuple[CoverageSpec, ...] = tuple(coverage)
        self.designs: tuple[DesignRecord, ...] = tuple(designs)
        self.source = source
        self._groups = {g.id: g for g in self.groups}
        self._subs = {(m.group_id, m.subgroup_id): m for m in self.max_subgroups}
        self._designs = {d.design_id: d for d in self.designs}
        self._cache: dict[tuple[str, str], ResolvedAction] = {}
        self._key_locks: dict[tuple[str, str], threading.Lock] = {}
        self._lock = threading.Lock()
        self._natural: dict[str, PermGroup] = {}

    def __repr__(self) -> str:
        return f"<Catalog {self.source}: {len(self.groups)} groups, {len(self.designs)} designs>"

    # lookups

    def group(self, group_id: str) -> GroupSpec:
        try:
            return self._groups[group_id]
        except KeyError:
            raise CatalogError(f"unknown group {group_id!r}") from None

    def max_subgroups_of(self, group_id: str) -> list[MaxSubgroupSpec]:
        self.group(group_id)
        return [m for m in self.max_subgroups if m.group_id == group_id]

    def max_subgroup(self, group_id: str, subgroup_id: str) -> MaxSubgroupSpec:
        self.group(group_id)
        try:
            return self._subs[(group_id, subgroup_id)]
        except KeyError:
            raise CatalogError(f"unknown maximal subgroup {subgroup_id!r} of {group_id}") from None

    def design(self, design_id: str) -> DesignRecord:
        try:
            return self._designs[design_id]
        except KeyError:
            raise CatalogError(f"unknown design {design_id!r}") from None

    def candidates(self, group_id: str, action_ref: str, index: int) -> list[StabilizerCandidateSpec]:
        self.max_subgroup(group_id, action_ref)
        out = [c for c in self.stabilizer_candidates
               if c.group_id == group_id and c.action_ref == action_ref and c.index == index]
        return sorted(out, key=lambda c: c.class_no)

    def coverage(self, group_id: str, action_ref: str, index: int) -> CoverageSpec | None:
        for c in self.candidate_coverage:
            if (c.group_id, c.action_ref, c.index) == (group_id, action_ref, index):
                return c
        return None

    # group construction

    def natural_group(self, group_id: str) -> PermGroup:
        spec = self.group(group_id)
        with self._lock:
            G = self._natural.get(group_id)
            if G is None:
                G = PermGroup(list(spec.generators), order_hint=spec.expected_order)
                self._natural[group_id] = G
        return G

    def resolve_action(self, group_id: str, action_ref: str) -> ResolvedAction:
        """The primitive image of G on the cosets of a maximal subgroup, with its labeling."""
        key = (group_id, action_ref)
        sub = self.max_subgroup(group_id, action_ref)
        with self._lock:
            hit = self._cache.get(key)
            if hit is not None:
                return hit
            key_lock = self._key_locks.setdefault(key, threading.Lock())
        with key_lock:
            hit = self._cache.get(key)
            if hit is not None:
                return hit
            G = self.natural_group(group_id)
            H = PermGroup(list(sub.generators), order_hint=sub.expected_order)
            ca: CosetActionResult = coset_action(G, H)
            res = ResolvedAction(group_id, action_ref, ca.image_group, tuple(ca.labeling))
            with self._lock:
                self._cache[key] = res
            return res


# loading


def default_catalog_path() -> Path:
    return Path(str(resources.files("flagtrans") / "data" / "catalog.json"))


def _need(rec: dict, name: str, kind, where: str):
    if name not in rec:
        raise CatalogError(f"{where}: missing field {name!r}")
    val = rec[name]
    if kind is int and (isinstance(val, bool) or not isinstance(val, int)):
        raise CatalogError(f"{where}: field {name!r} must be an integer")
    if kind is not int and not isinstance(val, kind):
        raise CatalogError(f"{where}: field {name!r} must be {kind.__name__}")
    return val


def _perms(rec: dict, degree: int, where: str) -> tuple[Permutation, ...]:
    texts = _need(rec, "generators", list, where)
    if not texts:
        raise CatalogError(f"{where}: empty generator list")
    out = []
    for i, t in enumerate(texts):
        if not isinstance(t, str):
            raise CatalogError(f"{where}: generators[{i}] must be a string")
        try:
            out.append(parse_perm(t, degree))
        except PermParseError as exc:
            raise CatalogError(f"{where}: generators[{i}]: {exc}") from None
    return tuple(out)


def _points(values, v: int, where: str, name: str) -> tuple[int, ...]:
    if not isinstance(values, list) or not all(isinstance(x, int) and not isinstance(x, bool) for x in values):
        raise CatalogError(f"{where}: field {name!r} must be a list of integers")
    if any(not 1 <= x <= v for x in values):
        raise CatalogError(f"{where}: field {name!r} has points outside 1..{v}")
    if list(values) != sorted(set(values)):
        raise CatalogError(f"{where}: field {name!r} must be strictly increasing")
    return tuple(values)


def parse(data: Any, source: str = "<memory>") -> Catalog:
    if not isinstance(data, dict):
        raise CatalogError(f"{source}: top level must be an object")
    version = data.get("schema_version")
    if version != SCHEMA_VERSION:
        raise CatalogError(f"{source}: unknown schema version {version!r} (expected {SCHEMA_VERSION})")
    raw_groups = data.get("groups") or []
    if not raw_groups:
        raise CatalogError(f"{source}: no groups")

    groups = []
    for i, rec in enumerate(raw_groups):
        where = f"groups[{i}]"
        gid = _need(rec, "id", str, where)
        where = f"groups[{i}] ({gid})"
        deg = _need(rec, "natural_degree", int, where)
        groups.append(GroupSpec(gid, deg, _perms(rec, deg, where), _need(rec, "expected_order", int, where),
                                rec.get("label", "")))
    degree_of = {g.id: g.natural_degree for g in groups}
    if len(degree_of) != len(groups):
        raise CatalogError(f"{source}: duplicate group id")

    subs = []
    for i, rec in enumerate(data.get("max_subgroups") or []):
        where = f"max_subgroups[{i}]"
        gid = _need(rec, "group_id", str, where)
        sid = _need(rec, "subgroup_id", str, where)
        where = f"max_subgroups[{i}] ({gid}/{sid})"
        if gid not in degree_of:
            raise CatalogError(f"{where}: unknown group {gid!r}")
        subs.append(MaxSubgroupSpec(gid, sid, _perms(rec, degree_of[gid], where),
                                    _need(rec, "expected_order", int, where),
                                    _need(rec, "expected_index", int, where)))
    index_of = {(m.group_id, m.subgroup_id): m.expected_index for m in subs}

    def action_degree(gid, sid, where):
        if (gid, sid) not in index_of:
            raise CatalogError(f"{where}: unknown action {gid}/{sid}")
        return index_of[(gid, sid)]

    cands = []
    for i, rec in enumerate(data.get("stabilizer_candidates") or []):
        where = f"stabilizer_candidates[{i}]"
        gid = _need(rec, "group_id", str, where)
        ref = _need(rec, "action_ref", str, where)
        v = action_degree(gid, ref, where)
        cands.append(StabilizerCandidateSpec(gid, ref, _need(rec, "index", int, where),
                                             _need(rec, "class_no", int, where), _perms(rec, v, where)))

    coverage = []
    for i, rec in enumerate(data.get("candidate_coverage") or []):
        where = f"candidate_coverage[{i}]"
        gid = _need(rec, "group_id", str, where)
        ref = _need(rec, "action_ref", str, where)
        action_degree(gid, ref, where)
        coverage.append(CoverageSpec(gid, ref, _need(rec, "index", int, where),
                                     bool(_need(rec, "complete", bool, where))))

    designs = []
    seen = set()
    for i, rec in enumerate(data.get("designs") or []):
        where = f"designs[{i}]"
        did = _need(rec, "design_id", str, where)
        where = f"designs[{i}] ({did})"
        if did in seen:
            raise CatalogError(f"{where}: duplicate design id")
        seen.add(did)
        if not (did.startswith("D") and did[1:].isdigit()):
            raise CatalogError(f"{where}: design id must look like D<number>")
        gid = _need(rec, "group_id", str, where)
        ref = _need(rec, "action_ref", str, where)
        v = _need(rec, "v", int, where)
        action_degree(gid, ref, where)
        also = []
        for j, alt in enumerate(rec.get("also_under") or []):
            w2 = f"{where}.also_under[{j}]"
            g2 = _need(alt, "group_id", str, w2)
            r2 = _need(alt, "action_ref", str, w2)
            v2 = action_degree(g2, r2, w2)
            also.append(ActionBlock(g2, r2, _points(_need(alt, "base_block", list, w2), v2, w2, "base_block")))
        designs.append(DesignRecord(
            did, gid, ref, v, _need(rec, "b", int, where), _need(rec, "r", int, where),
            _need(rec, "k", int, where), _need(rec, "lambda", int, where),
            _points(_need(rec, "base_block", list, where), v, where, "base_block"),
            _need(rec, "table_row_ref", str, where), tuple(also)))
    return Catalog(groups, subs, cands, coverage, designs, source)


def load(path: str | Path | None = None) -> Catalog:
    """Parse a catalog file; ``None`` selects the bundled reference catalog."""
    p = Path(path) if path is not None else default_catalog_path()
    try:
        text = p.read_text(encoding="utf-8")
    except OSError as exc:
        raise CatalogError(f"cannot read catalog {p}: {exc.strerror or exc}") from None
    if not text.strip():
        raise CatalogError(f"{p}: no groups (empty file)")
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise CatalogError(f"{p}: line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    return parse(data, str(p))


# validation


@dataclass(frozen=True)
class CheckEntry:
    record: str
    check: str
    ok: bool
    detail: str = ""


@dataclass
class ValidationReport:
    entries: list[CheckEntry] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(e.ok for e in self.entries)

    @property
    def failures(self) -> list[CheckEntry]:
        return [e for e in self.entries if not e.ok]

    def add(self, record: str, check: str, ok: bool, detail: str = "") -> None:
        self.entries.append(CheckEntry(record, check, bool(ok), detail))

    def to_json(self) -> dict:
        return {"ok": self.ok, "checked": len(self.entries),
                "failures": [e.__dict__ for e in self.failures]}


def validate(c: Catalog) -> ValidationReport:
    """Re-derive every fact the catalog states; failures become report entries."""
    rep = ValidationReport()
    built: dict[str, PermGroup] = {}
    usable: set[tuple[str, str]] = set()  # actions whose coset action could be built
    for g in c.groups:
        name = f"group {g.id}"
        # no order hint: the chain is verified independently of the stated order
        G = PermGroup(list(g.generators))
        built[g.id] = G
        rep.add(name, "order", G.order() == g.expected_order, f"computed {G.order()}, stated {g.expected_order}")

    for m in c.max_subgroups:
        name = f"subgroup {m.group_id}/{m.subgroup_id}"
        G = built[m.group_id]
        H = PermGroup(list(m.generators))
        rep.add(name, "order", H.order() == m.expected_order, f"computed {H.order()}, stated {m.expected_order}")
        inside = all(G.contains(h) for h in m.generators)
        rep.add(name, "membership", inside)
        rep.add(name, "index", m.expected_order * m.expected_index == c.group(m.group_id).expected_order)
        if not inside or G.order() % H.order():
            continue
        try:
            act = c.resolve_action(m.group_id, m.subgroup_id)
        except GroupError as exc:
            rep.add(name, "coset action", False, str(exc))
            continue
        usable.add((m.group_id, m.subgroup_id))
        rep.add(name, "coset action degree", act.degree == m.expected_index, f"degree {act.degree}")
        rep.add(name, "primitive", act.degree <= 2 or is_primitive(act.group))

    for s in c.stabilizer_candidates:
        name = f"candidate {s.group_id}/{s.action_ref}/b={s.index}/#{s.class_no}"
        if (s.group_id, s.action_ref) not in usable:
            rep.add(name, "action", False, "its point action could not be built")
            continue
        act = c.resolve_action(s.group_id, s.action_ref)
        H = PermGroup(list(s.generators))
        rep.add(name, "subgroup", all(act.group.contains(h) for h in s.generators))
        rep.add(name, "order", H.order() * s.index == act.group.order(),
                f"{H.order()} * {s.index} vs {act.group.order()}")

    ids = [d.design_id for d in c.designs]
    for d in c.designs:
        name = f"design {d.design_id}"
        t = d.params
        rep.add(name, "arithmetic", t.satisfies_identities() and t.is_nontrivial(),
                "bk = vr and lambda(v-1) = r(k-1) with 2 < k < v-1")
        rep.add(name, "degree", c.max_subgroup(d.group_id, d.action_ref).expected_index == d.v)
        rep.add(name, "block size", len(d.base_block) == d.k)
    rep.add("designs", "unique ids", len(ids) == len(set(ids)))
    return rep
