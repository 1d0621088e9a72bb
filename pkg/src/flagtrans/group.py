"""Permutation groups backed by a stabilizer chain.

The chain is built with a seeded random Schreier-Sims pass and then checked
deterministically: every Schreier generator of every level must sift to the
identity through the levels below it. A chain whose orbit-length product
equals a known group order is complete and skips the check.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from math import prod
from typing import Iterable, Iterator, Sequence

import numpy as np

from .perm import INDEX_DTYPE, Permutation, inverse

_RANDOM_SIFT_STREAK = 30


class GroupError(ValueError):
    pass


class _Level:
    __slots__ = ("point", "gens", "orbit", "u", "uinv")

    def __init__(self, point: int):
        self.point = point
        self.gens: list[np.ndarray] = []
        self.orbit: list[int] = [point]
        self.u: dict[int, np.ndarray] = {}
        self.uinv: dict[int, np.ndarray] = {}

    def rebuild(self, degree: int) -> None:
        ident = np.arange(degree, dtype=INDEX_DTYPE)
        u = {self.point: ident}
        orbit = [self.point]
        i = 0
        while i < len(orbit):
            beta = orbit[i]
            ub = u[beta]
            for s in self.gens:
                gamma = int(s[beta])
                if gamma not in u:
                    u[gamma] = s[ub]
                    orbit.append(gamma)
            i += 1
        uinv = {}
        for beta, ub in u.items():
            inv = np.empty_like(ub)
            inv[ub] = ident
            uinv[beta] = inv
        self.orbit, self.u, self.uinv = orbit, u, uinv


class _Chain:
    def __init__(self, degree: int):
        self.degree = degree
        self.levels: list[_Level] = []
        self.strong: list[np.ndarray] = []
        self.ident = np.arange(degree, dtype=INDEX_DTYPE)

    def order(self) -> int:
        return prod(len(lvl.orbit) for lvl in self.levels)

    def sift(self, g: np.ndarray, start: int = 0) -> tuple[np.ndarray, int]:
        for j in range(start, len(self.levels)):
            lvl = self.levels[j]
            beta = int(g[lvl.point])
            inv = lvl.uinv.get(beta)
            if inv is None:
                return g, j
            g = inv[g]
        return g, len(self.levels)

    def is_identity(self, g: np.ndarray) -> bool:
        return bool(np.array_equal(g, self.ident))

    def add_strong(self, h: np.ndarray, j: int) -> None:
        if j == len(self.levels):
            moved = np.flatnonzero(h != self.ident)
            self.levels.append(_Level(int(moved[0])))
        self.strong.append(h)
        for i in range(j + 1):
            self.levels[i].gens.append(h)
            self.levels[i].rebuild(self.degree)

    def insert(self, g: np.ndarray) -> bool:
        h, j = self.sift(g)
        if j < len(self.levels) or not self.is_identity(h):
            self.add_strong(h, j)
            return True
        return False

    def verify_once(self) -> bool:
        for i in range(len(self.levels) - 1, -1, -1):
            lvl = self.levels[i]
            for beta in lvl.orbit:
                ub = lvl.u[beta]
                for s in lvl.gens:
                    t = s[ub]
                    gamma = int(s[beta])
                    g = lvl.uinv[gamma][t]
                    h, j = self.sift(g, i + 1)
                    if j < len(self.levels) or not self.is_identity(h):
                        self.add_strong(h, j)
                        return False
        return True


def _build_chain(degree: int, gens: Sequence[np.ndarray], base_prefix: Sequence[int],
                 known_order: int | None, seed: int) -> _Chain:
    chain = _Chain(degree)
    for b in base_prefix:
        chain.levels.append(_Level(b))
        chain.levels[-1].rebuild(degree)
    nontrivial = [g for g in gens if not chain.is_identity(g)]
    for g in nontrivial:
        chain.insert(g)
    if not nontrivial:
        return chain
    if known_order is not None and chain.order() == known_order:
        return chain
    rng = random.Random(seed)
    pool = [g.copy() for g in nontrivial]
    while len(pool) < 10:
        pool.append(nontrivial[len(pool) % len(nontrivial)].copy())
    acc = chain.ident.copy()
    for _ in range(50):
        i, j = rng.sample(range(len(pool)), 2)
        pool[i] = pool[j][pool[i]]
        acc = pool[i][acc]
    streak = 0
    while streak < _RANDOM_SIFT_STREAK:
        i, j = rng.sample(range(len(pool)), 2)
        pool[i] = pool[j][pool[i]] if rng.random() < 0.5 else pool[i][pool[j]]
        acc = pool[i][acc]
        if chain.insert(acc):
            streak = 0
            if known_order is not None and chain.order() == known_order:
                return chain
        else:
            streak += 1
    if known_order is not None and chain.order() == known_order:
        return chain
    while not chain.verify_once():
        if known_order is not None and chain.order() == known_order:
            break
    return chain


class PermGroup:
    """A permutation group on {1..degree} with a verified stabilizer chain.

    Immutable after construction; all queries are read-only.
    """

    def __init__(self, generators: Sequence[Permutation], *, base_prefix: Sequence[int] = (),
                 known_order: int | None = None, order_hint: int | None = None, seed: int = 0):
        if not generators:
            raise GroupError("need at least one generator")
        degree = generators[0].degree
        for g in generators:
            if g.degree != degree:
                raise GroupError(f"degree mismatch: {g.degree} vs {degree}")
        for b in base_prefix:
            if not 1 <= b <= degree:
                raise GroupError(f"base point {b} out of range")
        self.degree = degree
        self.generators = list(generators)
        # order_hint is an upper bound that may end the random phase early; unlike
        # known_order it is not asserted
        self._chain = _build_chain(degree, [g.array for g in generators],
                                   [b - 1 for b in base_prefix], known_order or order_hint, seed)
        if known_order is not None and self._chain.order() != known_order:
            raise GroupError(f"group order {self._chain.order()} differs from expected {known_order}")

    def __repr__(self) -> str:
        return f"<PermGroup degree={self.degree} order={self.order()}>"

    # chain data

    def order(self) -> int:
        return self._chain.order()

    @property
    def base(self) -> list[int]:
        return [lvl.point + 1 for lvl in self._chain.levels]

    @property
    def strong_generators(self) -> list[Permutation]:
        return [Permutation._wrap(s) for s in self._chain.strong]

    def fundamental_orbits(self) -> list[list[int]]:
        return [[b + 1 for b in lvl.orbit] for lvl in self._chain.levels]

    def generator_arrays(self) -> list[np.ndarray]:
        return [g.array for g in self.generators]

    # membership and elements

    def contains(self, p: Permutation) -> bool:
        if p.degree != self.degree:
            raise GroupError(f"degree mismatch: {p.degree} vs {self.degree}")
        h, j = self._chain.sift(p.array)
        return j == len(self._chain.levels) and self._chain.is_identity(h)

    __contains__ = contains

    def random_element(self, rng: random.Random) -> Permutation:
        g = self._chain.ident
        for lvl in self._chain.levels:
            u = lvl.u[rng.choice(lvl.orbit)]
            g = g[u]  # left-multiply: u_j ... u_0 order built bottom-up
        return Permutation._wrap(g)

    def elements(self) -> Iterator[Permutation]:
        """Every element, once each. Only sensible for small groups."""
        levels = self._chain.levels

        def rec(i: int, acc: np.ndarray) -> Iterator[np.ndarray]:
            if i < 0:
                yield acc
                return
            for beta in levels[i].orbit:
                yield from rec(i - 1, levels[i].u[beta][acc])

        for a in rec(len(levels) - 1, self._chain.ident):
            yield Permutation._wrap(a)

    # point actions

    def orbit(self, x: int) -> list[int]:
        if not 1 <= x <= self.degree:
            raise GroupError(f"point {x} out of range 1..{self.degree}")
        return [p + 1 for p in _point_orbit(self.generator_arrays(), x - 1)]

    def orbits(self) -> list[list[int]]:
        return [[p + 1 for p in orb] for orb in _all_orbits(self.generator_arrays(), self.degree)]

    def stabilizer(self, x: int) -> "PermGroup":
        stab_order = self.order() // len(self.orbit(x))
        if self.base[:1] == [x]:
            chain = self._chain
        else:
            chain = _build_chain(self.degree, self._chain.strong, [x - 1], self.order(), 0)
        stab_gens = chain.levels[1].gens if len(chain.levels) > 1 else []
        if not stab_gens:
            return trivial_group(self.degree)
        return PermGroup([Permutation._wrap(s) for s in stab_gens], known_order=stab_order)

    def is_transitive(self) -> bool:
        return len(_point_orbit(self.generator_arrays(), 0)) == self.degree

    def is_primitive(self) -> bool:
        return is_primitive(self)


def trivial_group(degree: int) -> PermGroup:
    return PermGroup([Permutation.identity(degree)])


def from_generators(gens: Sequence[Permutation], **kwargs) -> PermGroup:
    return PermGroup(gens, **kwargs)


def order(G: PermGroup) -> int:
    return G.order()


def contains(G: PermGroup, p: Permutation) -> bool:
    return G.contains(p)


def orbit(G: PermGroup, x: int) -> list[int]:
    return G.orbit(x)


def stabilizer(G: PermGroup, x: int) -> PermGroup:
    return G.stabilizer(x)


def is_transitive(G: PermGroup) -> bool:
    return G.is_transitive()


def _point_orbit(gens: Sequence[np.ndarray], x: int) -> list[int]:
    seen = {x}
    orb = [x]
    i = 0
    while i < len(orb):
        y = orb[i]
        for g in gens:
            z = int(g[y])
            if z not in seen:
                seen.add(z)
                orb.append(z)
        i += 1
    return orb


def _all_orbits(gens: Sequence[np.ndarray], degree: int) -> list[list[int]]:
    seen = np.zeros(degree, dtype=bool)
    out = []
    for x in range(degree):
        if not seen[x]:
            orb = _point_orbit(gens, x)
            seen[orb] = True
            out.append(sorted(orb))
    return out


# induced action on subsets


def set_orbit_array(gens: Sequence[np.ndarray], start: Iterable[int], limit: int | None = None) -> np.ndarray | None:
    """Orbit of a 0-based point set as a ``(n, k)`` array of sorted rows.

    Breadth-first with a FIFO queue: rows appear in the order a queue-based
    search would discover them, scanning generators in the given order.
    Returns None when the orbit exceeds ``limit`` sets.
    """
    row = np.array(sorted(set(start)), dtype=INDEX_DTYPE)
    if row.size == 0:
        raise GroupError("set_orbit needs a non-empty set")
    k = row.size
    seen = {row.tobytes()}
    chunks = [row[None, :]]
    frontier = row[None, :]
    total = 1
    while frontier.shape[0]:
        imgs = np.stack([g[frontier] for g in gens], axis=1).reshape(-1, k)
        imgs.sort(axis=1)
        keep = []
        for idx, key in enumerate(map(bytes, imgs)):
            if key not in seen:
                seen.add(key)
                keep.append(idx)
        total += len(keep)
        if limit is not None and total > limit:
            return None
        frontier = imgs[keep]
        if frontier.shape[0]:
            chunks.append(frontier)
    return np.concatenate(chunks, axis=0)


def set_orbit(G: PermGroup, S: Iterable[int]) -> list[tuple[int, ...]]:
    """Orbit of the point set ``S`` (1-based) under the induced action on subsets."""
    pts = sorted(set(S))
    if not pts:
        raise GroupError("set_orbit needs a non-empty set")
    if pts[0] < 1 or pts[-1] > G.degree:
        raise GroupError("set contains points out of range")
    arr = set_orbit_array(G.generator_arrays(), [p - 1 for p in pts])
    return [tuple(int(x) + 1 for x in row) for row in arr]


# coset action


@dataclass(frozen=True)
class CosetActionResult:
    image_group: PermGroup
    labeling: list[Permutation]  # labeling[i] represents the coset labelled i+1

    @property
    def degree(self) -> int:
        return self.image_group.degree

    def image_of(self, g: Permutation, subgroup: PermGroup) -> Permutation:
        """The permutation induced on coset labels by an arbitrary element ``g``."""
        return _induced_perm(self.labeling, g, subgroup)


def _lex_levels(H: PermGroup) -> list[tuple[np.ndarray, dict[int, np.ndarray]]]:
    """H's chain rebuilt on the base 0, 1, ..., n-1, non-trivial levels only."""
    chain = _build_chain(H.degree, H._chain.strong, range(H.degree), H.order(), 0)
    return [(np.array(lvl.orbit, dtype=INDEX_DTYPE), lvl.u) for lvl in chain.levels if len(lvl.orbit) > 1]


def _canonical_rep(levels, g: np.ndarray) -> np.ndarray:
    # lexicographically least image list among the elements of the coset Hg
    for orbit, u in levels:
        z = int(orbit[np.argmin(g[orbit])])
        g = g[u[z]]
    return g


def _induced_perm(labeling: Sequence[Permutation], g: Permutation, H: PermGroup) -> Permutation:
    levels = _lex_levels(H)
    label = {_canonical_rep(levels, rep.array).tobytes(): i for i, rep in enumerate(labeling)}
    images = np.empty(len(labeling), dtype=INDEX_DTYPE)
    for i, rep in enumerate(labeling):
        j = label.get(_canonical_rep(levels, g.array[rep.array]).tobytes())
        if j is None:
            raise GroupError("element does not permute the cosets")
        images[i] = j
    return Permutation._wrap(images)


def coset_action(G: PermGroup, H: PermGroup, max_index: int = 10**6) -> CosetActionResult:
    """Action of G on the right cosets of H.

    Cosets are labelled breadth-first from H itself, scanning G's generators
    in order. Each coset is keyed by its lexicographically least element, so
    identifying the coset of a product is a single walk down H's chain.
    """
    if H.degree != G.degree:
        raise GroupError("subgroup degree differs from group degree")
    for h in H.generators:
        if not G.contains(h):
            raise GroupError("H is not a subgroup of G")
    index, rem = divmod(G.order(), H.order())
    if rem:
        raise GroupError("H is not a subgroup of G (order does not divide)")
    if index > max_index:
        raise GroupError(f"index {index} exceeds limit {max_index}")
    levels = _lex_levels(H)
    first = _canonical_rep(levels, G._chain.ident)
    reps: list[np.ndarray] = [first]
    label: dict[bytes, int] = {first.tobytes(): 0}
    gens = G.generator_arrays()
    images = [np.full(index, -1, dtype=INDEX_DTYPE) for _ in gens]
    i = 0
    while i < len(reps):
        for s_idx, s in enumerate(gens):
            g = _canonical_rep(levels, s[reps[i]])
            key = g.tobytes()
            j = label.get(key)
            if j is None:
                j = len(reps)
                if j >= index:
                    raise GroupError("coset enumeration overflow; H is not a subgroup")
                reps.append(g)
                label[key] = j
            images[s_idx][i] = j
        i += 1
    if len(reps) != index:
        raise GroupError(f"found {len(reps)} cosets, expected {index}")
    image_gens = [Permutation._wrap(a) for a in images]
    image = PermGroup(image_gens, order_hint=G.order())
    return CosetActionResult(image, [Permutation._wrap(r) for r in reps])


# primitivity


def _minimal_block(gens: Sequence[np.ndarray], degree: int, a: int, b: int) -> list[int]:
    parent = list(range(degree))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    parent[find(b)] = find(a)
    queue = [(a, b)]
    while queue:
        x, y = queue.pop()
        for g in gens:
            fx, fy = find(int(g[x])), find(int(g[y]))
            if fx != fy:
                parent[fy] = fx
                queue.append((fx, fy))
    root = find(a)
    return [x for x in range(degree) if find(x) == root]


def minimal_block(G: PermGroup, a: int, b: int) -> list[int]:
    """Smallest block of imprimitivity containing points ``a`` and ``b`` (1-based)."""
    return [x + 1 for x in _minimal_block(G.generator_arrays(), G.degree, a - 1, b - 1)]


def is_primitive(G: PermGroup) -> bool:
    if not G.is_transitive():
        raise GroupError("primitivity is only defined for transitive groups")
    n = G.degree
    if n <= 2:
        return True
    gens = G.generator_arrays()
    # the minimal block through {0, beta} has the same size for all beta in one G_0-orbit
    for orb in _all_orbits(G.stabilizer(1).generator_arrays(), n):
        beta = orb[0]
        if beta != 0 and len(_minimal_block(gens, n, 0, beta)) < n:
            return False
    return True


# orbit signatures


@dataclass(frozen=True)
class OrbitSignature:
    lengths: tuple[tuple[int, int], ...]  # (orbit length, multiplicity), ascending length
    orbits: tuple[tuple[int, ...], ...] = field(repr=False)

    def __str__(self) -> str:
        parts = []
        for length, mult in self.lengths:
            parts.append(f"{length}^{mult}" if mult > 1 else f"{length}")
        return ", ".join(parts)


def subgroup_orbits(degree: int, H: PermGroup) -> OrbitSignature:
    if H.degree != degree:
        raise GroupError(f"subgroup acts on {H.degree} points, expected {degree}")
    orbs = _all_orbits(H.generator_arrays(), degree)
    counts: dict[int, int] = {}
    for o in orbs:
        counts[len(o)] = counts.get(len(o), 0) + 1
    return OrbitSignature(tuple(sorted(counts.items())),
                          tuple(tuple(x + 1 for x in o) for o in orbs))
