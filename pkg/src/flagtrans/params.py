"""Parameter arithmetic for 2-(v,k,lambda) designs.

Binomial coefficients are exact Python integers throughout; C(280, 32) does
not fit in 64 bits.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import TYPE_CHECKING, NamedTuple

if TYPE_CHECKING:
    from .catalog import Catalog


class ParamTuple(NamedTuple):
    v: int
    b: int
    r: int
    k: int
    lam: int

    def satisfies_identities(self) -> bool:
        return self.b * self.k == self.v * self.r and self.lam * (self.v - 1) == self.r * (self.k - 1)

    def is_nontrivial(self) -> bool:
        return 2 < self.k < self.v - 1

    def short(self) -> str:
        return f"({self.v},{self.k},{self.lam})"

    def __str__(self) -> str:
        return f"({self.v},{self.b},{self.r},{self.k},{self.lam})"


class ParamError(ValueError):
    pass


@dataclass(frozen=True)
class FeasibilityContext:
    group_order: int
    stabilizer_order: int

    def __post_init__(self):
        if self.stabilizer_order <= 0 or self.group_order % self.stabilizer_order:
            raise ParamError("stabilizer order must divide the group order")

    @property
    def v(self) -> int:
        return self.group_order // self.stabilizer_order


def divisors(n: int) -> list[int]:
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def feasible_tuples(ctx: FeasibilityContext) -> list[ParamTuple]:
    """All (v,b,r,k,lambda) admissible for a point action with the given orders.

    Conditions: 2 < k < v-1; r divides |G_x|; lambda = r(k-1)/(v-1) and
    b = vr/k integral; r > lambda; r^2 > lambda*v; v <= b <= C(v,k).
    Ordered by k, then r.
    """
    v = ctx.v
    rs = divisors(ctx.stabilizer_order)
    out = []
    for k in range(3, v - 1):
        max_b = comb(v, k)
        for r in rs:
            if (r * (k - 1)) % (v - 1) or (v * r) % k:
                continue
            lam = r * (k - 1) // (v - 1)
            b = v * r // k
            if r > lam and r * r > lam * v and v <= b <= max_b:
                out.append(ParamTuple(v, b, r, k, lam))
    return out


@dataclass
class EnumerationResult:
    # (group_id, subgroup_id) -> tuples, in catalog order
    per_action: dict[tuple[str, str], list[ParamTuple]]
    per_group: dict[str, int]

    @property
    def total(self) -> int:
        return sum(self.per_group.values())


def enumerate_all(catalog: "Catalog") -> EnumerationResult:
    per_action: dict[tuple[str, str], list[ParamTuple]] = {}
    per_group: dict[str, int] = {}
    for g in catalog.groups:
        per_group[g.id] = 0
        for m in catalog.max_subgroups_of(g.id):
            tuples = feasible_tuples(FeasibilityContext(g.expected_order, m.expected_order))
            per_action[(g.id, m.subgroup_id)] = tuples
            per_group[g.id] += len(tuples)
    return EnumerationResult(per_action, per_group)


def full_design_params(n: int, k: int) -> ParamTuple:
    if n < 5 or not 3 <= k <= n - 2:
        raise ParamError(f"full design needs n >= 5 and 3 <= k <= n-2, got n={n}, k={k}")
    return ParamTuple(n, comb(n, k), comb(n - 1, k - 1), k, comb(n - 2, k - 2))


def complement_params(t: ParamTuple) -> ParamTuple:
    v, b, r, k, lam = t
    lam_c = b - 2 * r + lam
    if v - k < 2 or lam_c < 1:
        raise ParamError("complement out of scope")
    return ParamTuple(v, b, b - r, v - k, lam_c)
