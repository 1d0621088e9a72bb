"""Simple incidence structures on {1..v} and the checks run against them.

A ``Design`` keeps its blocks as a lexicographically sorted ``(b, k)`` array
of 0-based points (each row sorted); the public accessors are 1-based.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from math import comb
from typing import Iterable, Sequence

import numpy as np

from .group import PermGroup, is_primitive, set_orbit_array
from .params import ParamTuple, complement_params

_PAIR_CHUNK = 1 << 22


class DesignError(ValueError):
    pass


def _lexsort_rows(rows: np.ndarray) -> np.ndarray:
    if rows.shape[0] <= 1:
        return rows
    order = np.lexsort(rows.T[::-1])
    return rows[order]


class Design:
    """Point set {1..v} with a duplicate-free list of k-subsets."""

    def __init__(self, v: int, blocks: Iterable[Sequence[int]] | np.ndarray, *, _rows: np.ndarray | None = None):
        if _rows is None:
            rows = np.array([sorted(b) for b in blocks], dtype=np.int32)
            if rows.ndim != 2 or rows.shape[0] == 0:
                raise DesignError("blocks must be a non-empty list of equal-size sets")
            if rows.min() < 1 or rows.max() > v:
                raise DesignError(f"block points must lie in 1..{v}")
            rows = rows - 1
            if rows.shape[1] > 1 and np.any(rows[:, 1:] == rows[:, :-1]):
                raise DesignError("a block repeats a point")
        else:
            rows = _rows
        k = rows.shape[1]
        if not 2 < k < v - 1:
            raise DesignError(f"block size {k} is trivial for v={v} (need 2 < k < v-1)")
        rows = _lexsort_rows(np.ascontiguousarray(rows, dtype=np.int32))
        if rows.shape[0] > 1 and np.any(np.all(rows[1:] == rows[:-1], axis=1)):
            raise DesignError("duplicate blocks")
        rows.setflags(write=False)
        self.v = v
        self.rows = rows

    @classmethod
    def from_rows(cls, v: int, rows: np.ndarray) -> "Design":
        """Trusted constructor from 0-based rows, each already sorted."""
        return cls(v, (), _rows=rows)

    @property
    def b(self) -> int:
        return self.rows.shape[0]

    @property
    def k(self) -> int:
        return self.rows.shape[1]

    @cached_property
    def blocks(self) -> list[tuple[int, ...]]:
        return [tuple(int(x) + 1 for x in row) for row in self.rows]

    @cached_property
    def replication(self) -> np.ndarray:
        """r_x for x = 1..v (index 0 holds r_1)."""
        return np.bincount(self.rows.ravel(), minlength=self.v)

    @cached_property
    def pair_coverage(self) -> np.ndarray:
        """v x v upper-triangular table: entry [x, y] (x < y, 0-based) counts blocks on {x, y}."""
        v, k = self.v, self.k
        counts = np.zeros(v * v, dtype=np.int64)
        rows = self.rows.astype(np.int64)
        per_chunk = max(1, _PAIR_CHUNK // max(1, comb(k, 2)))
        ii, jj = np.triu_indices(k, 1)
        for start in range(0, rows.shape[0], per_chunk):
            chunk = rows[start:start + per_chunk]
            idx = (chunk[:, ii] * v + chunk[:, jj]).ravel()
            counts += np.bincount(idx, minlength=v * v)
        return counts.reshape(v, v)

    @cached_property
    def _index(self) -> dict[bytes, int]:
        return {row.tobytes(): i for i, row in enumerate(self.rows)}

    def index_of(self, block: Iterable[int]) -> int:
        """Position of a 1-based block in the sorted block list, or -1."""
        row = np.array(sorted(block), dtype=np.int32) - 1
        return self._index.get(row.tobytes(), -1)

    def __contains__(self, block) -> bool:
        return self.index_of(block) >= 0

    def is_invariant_under(self, g: np.ndarray) -> bool:
        img = np.sort(g[self.rows], axis=1)
        index = self._index
        return all(key in index for key in map(bytes, img))

    def __eq__(self, other) -> bool:
        if not isinstance(other, Design):
            return NotImplemented
        return self.v == other.v and np.array_equal(self.rows, other.rows)

    def __hash__(self) -> int:
        return hash((self.v, self.rows.tobytes()))

    def __repr__(self) -> str:
        return f"<Design v={self.v} b={self.b} k={self.k}>"

    def to_json(self) -> dict:
        return {"v": self.v, "blocks": [list(b) for b in self.blocks]}

    @classmethod
    def from_json(cls, data: dict) -> "Design":
        return cls(int(data["v"]), data["blocks"])


# construction


def develop(G: PermGroup, base_block: Iterable[int]) -> Design:
    """The design whose blocks are the G-images of ``base_block``."""
    pts = sorted(set(base_block))
    if not 2 < len(pts) < G.degree - 1:
        raise DesignError(f"block size {len(pts)} is trivial for v={G.degree}")
    if pts[0] < 1 or pts[-1] > G.degree:
        raise DesignError("base block point out of range")
    rows = set_orbit_array(G.generator_arrays(), [p - 1 for p in pts])
    return Design.from_rows(G.degree, rows)


def full_design(n: int, k: int) -> Design:
    if n < 5 or not 3 <= k <= n - 2:
        raise DesignError(f"full design needs n >= 5 and 3 <= k <= n-2, got n={n}, k={k}")
    rows = np.array(list(combinations(range(n), k)), dtype=np.int32)
    return Design.from_rows(n, rows)


def complement(D: Design) -> Design:
    v, k = D.v, D.k
    if v - k < 2:
        raise DesignError("complement needs v - k >= 2")
    mask = np.ones((D.b, v), dtype=bool)
    np.put_along_axis(mask, D.rows, False, axis=1)
    rows = np.nonzero(mask)[1].reshape(D.b, v - k).astype(np.int32)
    return Design(v, (), _rows=rows)


# checks


@dataclass
class DesignCheckReport:
    params: ParamTuple | None
    is_2design: bool
    # ((x, y), count) for the first pair and the first pair whose count differs
    lambda_witness: tuple[tuple[tuple[int, int], int], tuple[tuple[int, int], int]] | None = None
    flag_transitive: bool | None = None
    point_primitive: bool | None = None

    @property
    def ok(self) -> bool:
        return bool(self.is_2design and self.flag_transitive and self.point_primitive)

    def to_json(self) -> dict:
        return {
            "params": list(self.params) if self.params else None,
            "is_2design": self.is_2design,
            "lambda_witness": self.lambda_witness,
            "flag_transitive": self.flag_transitive,
            "point_primitive": self.point_primitive,
        }


def verify_2design(D: Design) -> DesignCheckReport:
    """Count r_x and lambda_xy in one pass over the blocks; both must be constant."""
    cov = D.pair_coverage
    iu, ju = np.triu_indices(D.v, 1)
    lam = cov[iu, ju]
    if np.all(lam == lam[0]) and lam[0] > 0:
        rep = D.replication
        if np.all(rep == rep[0]):
            t = ParamTuple(D.v, D.b, int(rep[0]), D.k, int(lam[0]))
            return DesignCheckReport(t, True)
    bad = np.flatnonzero(lam != lam[0])
    if bad.size:
        j = int(bad[0])
        witness = (((int(iu[0]) + 1, int(ju[0]) + 1), int(lam[0])),
                   ((int(iu[j]) + 1, int(ju[j]) + 1), int(lam[j])))
    else:
        witness = (((int(iu[0]) + 1, int(ju[0]) + 1), int(lam[0])),) * 2
    return DesignCheckReport(None, False, witness)


def is_flag_transitive(G: PermGroup, D: Design) -> bool:
    """Point-transitive, and the stabilizer of point 1 is transitive on the blocks through 1."""
    if G.degree != D.v:
        raise DesignError(f"group degree {G.degree} differs from v={D.v}")
    for g in G.generator_arrays():
        if not D.is_invariant_under(g):
            raise DesignError("design is not invariant under the group")
    if not G.is_transitive():
        return False
    r1 = int(D.replication[0])
    if r1 == 0:
        return False
    first = D.rows[np.flatnonzero(np.any(D.rows == 0, axis=1))[0]]
    G1 = G.stabilizer(1)
    orb = set_orbit_array(G1.generator_arrays(), first.tolist(), limit=r1)
    return orb is not None and orb.shape[0] == r1


def check_design(G: PermGroup, D: Design) -> DesignCheckReport:
    report = verify_2design(D)
    report.flag_transitive = is_flag_transitive(G, D)
    report.point_primitive = G.is_transitive() and is_primitive(G)
    return report


# isomorphism


def _profile(values: np.ndarray) -> tuple[tuple[int, int], ...]:
    vals, counts = np.unique(values, return_counts=True)
    return tuple((int(a), int(c)) for a, c in zip(vals, counts))


@dataclass(frozen=True)
class Fingerprint:
    params: tuple[int, ...]
    block_profile: tuple[tuple[int, int], ...]  # |B0 ∩ B| over all blocks B
    triple_profile: tuple[tuple[int, int], ...]  # blocks on {1, y, z} over pairs {y, z}
    pair_profile: tuple[tuple[int, int], ...] | None  # |B ∩ B'| over block pairs, b <= 5000


PAIR_PROFILE_MAX_B = 5000


def fingerprint(D: Design) -> Fingerprint:
    """Isomorphism invariants of a block-transitive design.

    Block-transitivity makes the profiles taken from one block (or, by Block's
    lemma, one point) independent of which block or point is used.
    """
    rep = D.replication
    lam = int(D.pair_coverage[0, 1])
    params = (D.v, D.b, int(rep[0]), D.k, lam)
    mask = np.zeros(D.v, dtype=np.int32)
    mask[D.rows[0]] = 1
    block_profile = _profile(mask[D.rows].sum(axis=1))

    through = D.rows[np.any(D.rows == 0, axis=1)]
    rest = through[:, 1:].astype(np.int64)  # rows sorted, so point 0 leads
    ii, jj = np.triu_indices(rest.shape[1], 1)
    counts = np.bincount((rest[:, ii] * D.v + rest[:, jj]).ravel(), minlength=D.v * D.v)
    iu, ju = np.triu_indices(D.v, 1)
    sel = iu > 0
    triple_profile = _profile(counts.reshape(D.v, D.v)[iu[sel], ju[sel]])

    pair_profile = None
    if D.b <= PAIR_PROFILE_MAX_B:
        inc = np.zeros((D.b, D.v), dtype=np.float32)
        np.put_along_axis(inc, D.rows, 1.0, axis=1)
        hist = np.zeros(D.k + 1, dtype=np.int64)
        for start in range(0, D.b, 1024):
            block = inc[start:start + 1024] @ inc.T
            ii_, jj_ = np.nonzero(np.triu(np.ones_like(block, dtype=bool), start + 1)[:, :])
            hist += np.bincount(np.rint(block[ii_, jj_]).astype(np.int64), minlength=D.k + 1)
        pair_profile = tuple((i, int(c)) for i, c in enumerate(hist) if c)
    return Fingerprint(params, block_profile, triple_profile, pair_profile)


class IsoVerdict(enum.Enum):
    YES = "yes"
    NO = "no"
    UNKNOWN = "unknown"


@dataclass
class IsoResult:
    verdict: IsoVerdict
    nodes: int
    mapping: list[int] | None = None  # mapping[x-1] = image of point x

    def __eq__(self, other):
        if isinstance(other, IsoVerdict):
            return self.verdict is other
        return NotImplemented


class _BudgetExhausted(Exception):
    pass


def _mix64(x: np.ndarray) -> np.ndarray:
    # splitmix64 finaliser; uint64 arithmetic wraps
    z = x + np.uint64(0x9E3779B97F4A7C15)
    z = (z ^ (z >> np.uint64(30))) * np.uint64(0xBF58476D1CE4E5B9)
    z = (z ^ (z >> np.uint64(27))) * np.uint64(0x94D049BB133111EB)
    return z ^ (z >> np.uint64(31))


class _Refiner:
    """Joint colour refinement of two incidence structures.

    Colours are canonical across both sides: a colour name is derived only
    from isomorphism-invariant data, so an isomorphism must map each point
    colour class of one side onto the same class of the other.
    """

    def __init__(self, d1: Design, d2: Design, budget: int):
        self.d = (d1, d2)
        self.budget = budget
        self.nodes = 0
        rng = np.random.default_rng(0x5EED)
        self._salt = rng.integers(1, 2**63, size=1 << 20, dtype=np.uint64)
        # incidences sorted by point, for per-point reductions
        self._inc = []
        for D in self.d:
            flat = D.rows.ravel()
            order = np.argsort(flat, kind="stable")
            blocks_of = (order // D.k).astype(np.int64)
            starts = np.searchsorted(flat[order], np.arange(D.v))
            self._inc.append((blocks_of, starts))

    def _hash_col(self, colors: np.ndarray) -> np.ndarray:
        return self._salt[colors % self._salt.size] ^ (colors.astype(np.uint64) * np.uint64(0x9E3779B97F4A7C15))

    def refine(self, pc1: np.ndarray, pc2: np.ndarray):
        """Refine point colourings to a joint fixed point; None if the sides diverge."""
        self.nodes += 1
        if self.nodes > self.budget:
            raise _BudgetExhausted
        pcs = [pc1, pc2]
        n_colors = -1
        while True:
            # blocks: hashed multiset of point colours. A collision can only merge
            # classes, which keeps the colouring invariant; mappings are checked at the end.
            sigs = [_mix64(pc[D.rows].astype(np.uint64)).sum(axis=1, dtype=np.uint64)
                    for pc, D in zip(pcs, self.d)]
            _, bc_all = np.unique(np.concatenate(sigs), return_inverse=True)
            bc_all = bc_all.ravel()
            bcs = [bc_all[:self.d[0].b], bc_all[self.d[0].b:]]
            if not self._same_histogram(bcs):
                return None
            # points: own colour plus hashed multiset of incident block colours
            psigs = []
            for pc, bc, (blocks_of, starts) in zip(pcs, bcs, self._inc):
                h = self._hash_col(bc[blocks_of].astype(np.int64))
                summed = np.add.reduceat(h, starts) if h.size else np.zeros(0, np.uint64)
                psigs.append(np.stack([pc.astype(np.uint64), summed], axis=1))
            allp = np.concatenate(psigs, axis=0)
            _, new_all = np.unique(allp, axis=0, return_inverse=True)
            new_all = new_all.ravel().astype(np.int64)
            v1 = self.d[0].v
            pcs = [new_all[:v1], new_all[v1:]]
            if not self._same_histogram(pcs):
                return None
            count = int(new_all.max()) + 1
            if count == n_colors:
                return pcs
            n_colors = count

    @staticmethod
    def _same_histogram(cols) -> bool:
        a, b = cols
        if a.size != b.size:
            return False
        m = int(max(a.max(initial=0), b.max(initial=0))) + 1
        return np.array_equal(np.bincount(a, minlength=m), np.bincount(b, minlength=m))


def _check_mapping(d1: Design, d2: Design, mapping: np.ndarray) -> bool:
    img = _lexsort_rows(np.sort(mapping[d1.rows], axis=1))
    return np.array_equal(img, d2.rows)


def are_isomorphic(D1: Design, D2: Design, node_budget: int = 10**7, *,
                   point_transitive: bool = False) -> IsoResult:
    """Backtracking search for a point bijection carrying blocks onto blocks.

    Individualise a point in the smallest unsplit colour class, refine, recurse.
    Returns UNKNOWN when ``node_budget`` refinements are used up.

    With ``point_transitive=True`` the caller promises that D2 has a
    point-transitive automorphism group. Any isomorphism can then be composed
    with an automorphism so the first individualised point goes to one fixed
    target, and the top level of the search has a single branch.
    """
    if (D1.v, D1.b, D1.k) != (D2.v, D2.b, D2.k):
        return IsoResult(IsoVerdict.NO, 0)
    if not np.array_equal(np.sort(D1.replication), np.sort(D2.replication)):
        return IsoResult(IsoVerdict.NO, 0)
    ref = _Refiner(D1, D2, node_budget)
    v = D1.v
    start = np.zeros(v, dtype=np.int64)

    def search(pc1: np.ndarray, pc2: np.ndarray, depth: int = 0) -> np.ndarray | None:
        res = ref.refine(pc1, pc2)
        if res is None:
            return None
        c1, c2 = res
        sizes = np.bincount(c1)
        if sizes.max() == 1:
            mapping = np.empty(v, dtype=np.int32)
            order2 = np.empty(v, dtype=np.int64)
            order2[c2] = np.arange(v)
            mapping[:] = order2[c1]
            return mapping if _check_mapping(D1, D2, mapping) else None
        nonsingle = np.flatnonzero(sizes > 1)
        target = int(nonsingle[np.argmin(sizes[nonsingle])])
        x = int(np.flatnonzero(c1 == target)[0])
        fresh = int(c1.max()) + 1
        targets = np.flatnonzero(c2 == target)
        if depth == 0 and point_transitive:
            targets = targets[:1]
        for y in targets:
            n1 = c1.copy()
            n2 = c2.copy()
            n1[x] = fresh
            n2[int(y)] = fresh
            found = search(n1, n2, depth + 1)
            if found is not None:
                return found
        return None

    try:
        mapping = search(start, start.copy())
    except _BudgetExhausted:
        return IsoResult(IsoVerdict.UNKNOWN, ref.nodes)
    if mapping is None:
        return IsoResult(IsoVerdict.NO, ref.nodes)
    return IsoResult(IsoVerdict.YES, ref.nodes, [int(m) + 1 for m in mapping])


def relabel(D: Design, perm: Sequence[int]) -> Design:
    """Image of D under the point map x -> perm[x-1]."""
    p = np.asarray(perm, dtype=np.int32) - 1
    return Design.from_rows(D.v, np.sort(p[D.rows], axis=1))
