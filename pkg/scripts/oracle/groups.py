"""Natural-degree generators for the 15 almost simple groups and their
maximal subgroups (one representative per Aut(G)-class, ATLAS lists).

Every construction is explicit: point stabilisers, wreath products,
affine/projective groups over small fields, and intersections with the
alternating group via Schreier generators.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations, product

from flagtrans.group import PermGroup
from flagtrans.perm import Permutation, compose, inverse


def perm_from_map(n: int, f) -> Permutation:
    """Permutation of {1..n} from a function on {1..n}."""
    return Permutation([f(x) for x in range(1, n + 1)])


def cyc(n: int, *cycles) -> Permutation:
    return Permutation.from_cycles(cycles, n)


def sym_gens(n: int, pts) -> list[Permutation]:
    pts = list(pts)
    if len(pts) < 2:
        return []
    out = [cyc(n, pts[:2])]
    if len(pts) > 2:
        out.append(cyc(n, pts))
    return out


def alt_gens(n: int, pts) -> list[Permutation]:
    pts = list(pts)
    if len(pts) < 3:
        return []
    return [cyc(n, [pts[0], pts[1], p]) for p in pts[2:]]


def wreath_gens(n: int, block_size: int, blocks: int) -> list[Permutation]:
    """S_a wr S_b on a*b points, blocks {1..a}, {a+1..2a}, ..."""
    a = block_size
    gens = sym_gens(n, range(1, a + 1))
    # swap first two blocks, cycle all blocks
    swap = {}
    for i in range(a):
        swap[1 + i] = 1 + a + i
        swap[1 + a + i] = 1 + i
    gens.append(perm_from_map(n, lambda x: swap.get(x, x)))
    if blocks > 2:
        def rot(x):
            if x > a * blocks:
                return x
            q, r = divmod(x - 1, a)
            return ((q + 1) % blocks) * a + r + 1
        gens.append(perm_from_map(n, rot))
    return gens


def even_part(gens: list[Permutation]) -> list[Permutation]:
    """Generators of <gens> ∩ A_n via Schreier generators for the transversal {1, t}."""
    odd = [g for g in gens if not g.is_even()]
    if not odd:
        return list(gens)
    t = odd[0]
    tinv = inverse(t)
    out = []
    for g in gens:
        if g.is_even():
            out.append(g)
            out.append(compose(compose(t, g), tinv))
        else:
            out.append(compose(g, tinv))
            out.append(compose(t, g))
    return [g for g in out if not g.is_identity()] or [Permutation.identity(gens[0].degree)]


# finite fields of order p^e as (add, mul) tables over {0..q-1}


def _field(p: int, e: int, modpoly: tuple[int, ...]):
    """Elements are integers whose base-p digits are polynomial coefficients."""
    q = p ** e

    def to_vec(x):
        return [(x // p ** i) % p for i in range(e)]

    def to_int(vec):
        return sum(c * p ** i for i, c in enumerate(vec))

    def add(x, y):
        return to_int([(a + b) % p for a, b in zip(to_vec(x), to_vec(y))])

    def mul(x, y):
        a, b = to_vec(x), to_vec(y)
        prod_ = [0] * (2 * e - 1)
        for i, ai in enumerate(a):
            for j, bj in enumerate(b):
                prod_[i + j] = (prod_[i + j] + ai * bj) % p
        # reduce by monic modpoly of degree e: x^e = -(c_0 + c_1 x + ...)
        for d in range(2 * e - 2, e - 1, -1):
            c = prod_[d]
            if c:
                prod_[d] = 0
                for i, m in enumerate(modpoly):
                    prod_[d - e + i] = (prod_[d - e + i] - c * m) % p
        return to_int(prod_[:e])

    addt = [[add(x, y) for y in range(q)] for x in range(q)]
    mult = [[mul(x, y) for y in range(q)] for x in range(q)]
    inv = [0] * q
    for x in range(1, q):
        inv[x] = next(y for y in range(1, q) if mult[x][y] == 1)
    neg = [next(y for y in range(q) if addt[x][y] == 0) for x in range(q)]
    return q, addt, mult, inv, neg


def _primitive_element(q, mult):
    for z in range(2, q):
        x, seen = 1, set()
        for _ in range(q - 1):
            x = mult[x][z]
            seen.add(x)
        if len(seen) == q - 1:
            return z
    raise ValueError("no primitive element")


def projective_line_gens(p: int, e: int, modpoly, *, pgl: bool, frob: bool, m10: bool = False):
    """Generators on the q+1 points of PG(1, q); point q+1 is infinity."""
    q, addt, mult, inv, neg = _field(p, e, modpoly)
    z = _primitive_element(q, mult)
    INF = q

    def as_perm(f):
        return perm_from_map(q + 1, lambda pt: f(pt - 1) + 1)

    def translate(x):
        return INF if x == INF else addt[x][1]

    def scale(c):
        return lambda x: INF if x == INF else mult[c][x]

    def neg_inv(x):
        if x == INF:
            return 0
        if x == 0:
            return INF
        return neg[inv[x]]

    def power(x, k):
        r = 1
        for _ in range(k):
            r = mult[r][x]
        return r

    def frobenius(x):
        return INF if x == INF else power(x, p)

    z2 = mult[z][z]
    gens = [as_perm(translate), as_perm(scale(z2)), as_perm(neg_inv)]
    if pgl:
        gens.append(as_perm(scale(z)))
    if frob:
        gens.append(as_perm(frobenius))
    if m10:
        gens.append(as_perm(lambda x: INF if x == INF else mult[z][power(x, p)]))
    return gens


F9 = (3, 2, (1, 0))      # x^2 + 1
F8 = (2, 3, (1, 1, 0))   # x^3 + x + 1
F7 = (7, 1, (0,))        # prime field; the modulus is unused


def affine_gens(p: int, dim: int) -> list[Permutation]:
    """AGL(dim, p) on p^dim points (vector x <-> 1 + sum x_i p^i)."""
    n = p ** dim

    def to_vec(x):
        return [(x // p ** i) % p for i in range(dim)]

    def to_pt(vec):
        return 1 + sum((c % p) * p ** i for i, c in enumerate(vec))

    def mat_map(M):
        return perm_from_map(n, lambda x: to_pt([sum(M[i][j] * to_vec(x - 1)[j] for j in range(dim))
                                                 for i in range(dim)]))

    gens = [perm_from_map(n, lambda x: to_pt([to_vec(x - 1)[0] + 1] + to_vec(x - 1)[1:]))]
    # GL(dim, p): a primitive-root diagonal element, an elementary transvection and a cycle
    w = next(a for a in range(1, p) if len({pow(a, i, p) for i in range(1, p)}) == p - 1) if p > 2 else 1
    diag = [[w if (i == j == 0) else (1 if i == j else 0) for j in range(dim)] for i in range(dim)]
    transv = [[1 if i == j or (i == 0 and j == 1) else 0 for j in range(dim)] for i in range(dim)]
    cycm = [[1 if j == (i + 1) % dim else 0 for j in range(dim)] for i in range(dim)]
    for M in (diag, transv, cycm):
        gens.append(mat_map(M))
    return gens


def affine_line_gens(p: int) -> list[Permutation]:
    """AGL(1, p) on p points."""
    w = next(a for a in range(2, p) if len({pow(a, i, p) for i in range(1, p)}) == p - 1)
    return [perm_from_map(p, lambda x: x % p + 1), perm_from_map(p, lambda x: (w * (x - 1)) % p + 1)]


def fano_gens() -> list[Permutation]:
    """PSL(3,2) as the collineation group of the Fano plane {i, i+1, i+3} mod 7."""
    lines = {frozenset(((i + d) % 7) + 1 for d in (0, 1, 3)) for i in range(7)}
    gens = []
    G = None
    for img in permutations(range(1, 8)):
        g = Permutation(list(img))
        if all(frozenset(g(x) for x in L) in lines for L in lines):
            if G is None or not G.contains(g):
                gens.append(g)
                G = PermGroup(gens)
                if G.order() == 168:
                    break
    return gens


def sylow_subgroup(G: PermGroup, p: int) -> list[Permutation]:
    """Generators of a Sylow p-subgroup by greedy extension inside the normaliser (small G only)."""
    order = G.order()
    target = 1
    while order % (target * p) == 0:
        target *= p
    elems = list(G.elements())
    pelems = [g for g in elems if _is_p_power(g.order(), p)]
    gens: list[Permutation] = []
    H = None
    size = 1
    while size < target:
        Hset = set(H.elements()) if H is not None else {Permutation.identity(G.degree)}
        for x in pelems:
            if x in Hset:
                continue
            if all(compose(compose(inverse(x), h), x) in Hset for h in gens):
                K = PermGroup(gens + [x])
                if _is_p_power(K.order(), p):
                    gens.append(x)
                    H, size = K, K.order()
                    break
        else:
            raise RuntimeError("Sylow construction stalled")
    return gens


def normaliser_of_cyclic(G: PermGroup, c: Permutation) -> list[Permutation]:
    powers = {c ** i for i in range(c.order())}
    gens: list[Permutation] = []
    N = None
    for g in G.elements():
        if compose(compose(inverse(g), c), g) in powers:
            if N is None or not N.contains(g):
                gens.append(g)
                N = PermGroup(gens)
    return gens


def _is_p_power(n: int, p: int) -> bool:
    while n % p == 0:
        n //= p
    return n == 1


@dataclass
class SubSpec:
    subgroup_id: str
    generators: list[Permutation]
    order: int


@dataclass
class GroupDef:
    id: str
    label: str  # display name used in the tables
    degree: int
    generators: list[Permutation]
    order: int
    maximal: list[SubSpec]


def _alt_group(n: int) -> list[Permutation]:
    return alt_gens(n, range(1, n + 1))


def _sym_group(n: int) -> list[Permutation]:
    return sym_gens(n, range(1, n + 1))


def build_groups() -> list[GroupDef]:
    gd: list[GroupDef] = []
    R = range

    def add(gid, label, n, gens, order, subs):
        gd.append(GroupDef(gid, label, n, gens, order, [SubSpec(s, g, o) for s, g, o in subs]))

    # degree 5
    add("A5", "A5", 5, _alt_group(5), 60, [
        ("A4", alt_gens(5, R(1, 5)), 12),
        ("D10", [cyc(5, [1, 2, 3, 4, 5]), cyc(5, [2, 5], [3, 4])], 10),
        ("S3", even_part(sym_gens(5, R(1, 4)) + sym_gens(5, [4, 5])), 6),
    ])
    add("S5", "S5", 5, _sym_group(5), 120, [
        ("A5", _alt_group(5), 60),
        ("S4", sym_gens(5, R(1, 5)), 24),
        ("5:4", affine_line_gens(5), 20),
        ("D12", sym_gens(5, R(1, 4)) + sym_gens(5, [4, 5]), 12),
    ])
    # degree 6
    add("A6", "A6", 6, _alt_group(6), 360, [
        ("A5", alt_gens(6, R(1, 6)), 60),
        ("F36", even_part(wreath_gens(6, 3, 2)), 36),
        ("S4", even_part(sym_gens(6, R(1, 5)) + sym_gens(6, [5, 6])), 24),
    ])
    add("S6", "S6", 6, _sym_group(6), 720, [
        ("A6", _alt_group(6), 360),
        ("S5", sym_gens(6, R(1, 6)), 120),
        ("3^2:D8", wreath_gens(6, 3, 2), 72),
        ("S4x2", sym_gens(6, R(1, 5)) + sym_gens(6, [5, 6]), 48),
    ])
    # degree 10: groups between PSL(2,9) and PGammaL(2,9)
    psl = projective_line_gens(*F9, pgl=False, frob=False)
    pgl = projective_line_gens(*F9, pgl=True, frob=False)
    m10 = projective_line_gens(*F9, pgl=False, frob=False, m10=True)
    pgaml = projective_line_gens(*F9, pgl=True, frob=True)
    s6 = projective_line_gens(*F9, pgl=False, frob=True)
    inf = 10

    def stab_inf(gens, order):
        return PermGroup(gens, known_order=order).stabilizer(inf).generators

    def n_c5(gens, order):
        G = PermGroup(gens, known_order=order)
        c5 = next(g for g in G.elements() if g.order() == 5)
        return normaliser_of_cyclic(G, c5)

    def syl2(gens, order):
        return sylow_subgroup(PermGroup(gens, known_order=order), 2)

    add("M10", "M10", 10, m10, 720, [
        ("A6", psl, 360),
        ("3^2:Q8", stab_inf(m10, 720), 72),
        ("5:4", n_c5(m10, 720), 20),
        ("8:2", syl2(m10, 720), 16),
    ])
    add("PGL2_9", "PGL2(9)", 10, pgl, 720, [
        ("A6", psl, 360),
        ("3^2:8", stab_inf(pgl, 720), 72),
        ("D20", n_c5(pgl, 720), 20),
        ("D16", syl2(pgl, 720), 16),
    ])
    add("PGammaL2_9", "PΓL2(9)", 10, pgaml, 1440, [
        ("S6", s6, 720),
        ("PGL2(9)", pgl, 720),
        ("M10", m10, 720),
        ("3^2:[2^4]", stab_inf(pgaml, 1440), 144),
        ("10:4", n_c5(pgaml, 1440), 40),
        ("[2^5]", syl2(pgaml, 1440), 32),
    ])
    # degree 7
    fano = fano_gens()
    add("A7", "A7", 7, _alt_group(7), 2520, [
        ("A6", alt_gens(7, R(1, 7)), 360),
        ("L2(7)", fano, 168),
        ("S5", even_part(sym_gens(7, R(1, 6)) + sym_gens(7, [6, 7])), 120),
        ("(A4xS3):2", even_part(sym_gens(7, R(1, 5)) + sym_gens(7, [5, 6, 7])), 72),
    ])
    add("S7", "S7", 7, _sym_group(7), 5040, [
        ("A7", _alt_group(7), 2520),
        ("S6", sym_gens(7, R(1, 7)), 720),
        ("S5x2", sym_gens(7, R(1, 6)) + sym_gens(7, [6, 7]), 240),
        ("S4xS3", sym_gens(7, R(1, 5)) + sym_gens(7, [5, 6, 7]), 144),
        ("7:6", affine_line_gens(7), 42),
    ])
    # degree 8
    add("A8", "A8", 8, _alt_group(8), 20160, [
        ("A7", alt_gens(8, R(1, 8)), 2520),
        ("2^3:L3(2)", affine_gens(2, 3), 1344),
        ("S6", even_part(sym_gens(8, R(1, 7)) + sym_gens(8, [7, 8])), 720),
        ("2^4:(S3xS3)", even_part(wreath_gens(8, 4, 2)), 576),
        ("(A5x3):2", even_part(sym_gens(8, R(1, 6)) + sym_gens(8, [6, 7, 8])), 360),
    ])
    add("S8", "S8", 8, _sym_group(8), 40320, [
        ("A8", _alt_group(8), 20160),
        ("S7", sym_gens(8, R(1, 8)), 5040),
        ("S6x2", sym_gens(8, R(1, 7)) + sym_gens(8, [7, 8]), 1440),
        ("S5xS3", sym_gens(8, R(1, 6)) + sym_gens(8, [6, 7, 8]), 720),
        ("(S4xS4):2", wreath_gens(8, 4, 2), 1152),
        ("2^4:S4", wreath_gens(8, 2, 4), 384),
        ("PGL2(7)", projective_line_gens(*F7, pgl=True, frob=False), 336),
    ])
    # degree 9
    add("A9", "A9", 9, _alt_group(9), 181440, [
        ("A8", alt_gens(9, R(1, 9)), 20160),
        ("S7", even_part(sym_gens(9, R(1, 8)) + sym_gens(9, [8, 9])), 5040),
        ("(A6x3):2", even_part(sym_gens(9, R(1, 7)) + sym_gens(9, [7, 8, 9])), 2160),
        ("L2(8):3", projective_line_gens(*F8, pgl=False, frob=True), 1512),
        ("(A5xA4):2", even_part(sym_gens(9, R(1, 6)) + sym_gens(9, R(6, 10))), 1440),
        ("3^3:S4", even_part(wreath_gens(9, 3, 3)), 648),
        ("3^2:2A4", even_part(affine_gens(3, 2)), 216),
    ])
    add("S9", "S9", 9, _sym_group(9), 362880, [
        ("A9", _alt_group(9), 181440),
        ("S8", sym_gens(9, R(1, 9)), 40320),
        ("S7x2", sym_gens(9, R(1, 8)) + sym_gens(9, [8, 9]), 10080),
        ("S6xS3", sym_gens(9, R(1, 7)) + sym_gens(9, [7, 8, 9]), 4320),
        ("S5xS4", sym_gens(9, R(1, 6)) + sym_gens(9, R(6, 10)), 2880),
        ("3^3:(2xS4)", wreath_gens(9, 3, 3), 1296),
        ("AGL2(3)", affine_gens(3, 2), 432),
    ])
    # degree 10
    add("A10", "A10", 10, _alt_group(10), 1814400, [
        ("A9", alt_gens(10, R(1, 10)), 181440),
        ("S8", even_part(sym_gens(10, R(1, 9)) + sym_gens(10, [9, 10])), 40320),
        ("(A7x3):2", even_part(sym_gens(10, R(1, 8)) + sym_gens(10, [8, 9, 10])), 15120),
        ("(A5xA5):4", even_part(wreath_gens(10, 5, 2)), 14400),
        ("(A6xA4):2", even_part(sym_gens(10, R(1, 7)) + sym_gens(10, R(7, 11))), 8640),
        ("2^4:S5", even_part(wreath_gens(10, 2, 5)), 1920),
        ("M10", m10, 720),
    ])
    add("S10", "S10", 10, _sym_group(10), 3628800, [
        ("A10", _alt_group(10), 1814400),
        ("S9", sym_gens(10, R(1, 10)), 362880),
        ("S8x2", sym_gens(10, R(1, 9)) + sym_gens(10, [9, 10]), 80640),
        ("S7xS3", sym_gens(10, R(1, 8)) + sym_gens(10, [8, 9, 10]), 30240),
        ("S6xS4", sym_gens(10, R(1, 7)) + sym_gens(10, R(7, 11)), 17280),
        ("(S5xS5):2", wreath_gens(10, 5, 2), 28800),
        ("2^5:S5", wreath_gens(10, 2, 5), 3840),
        ("PGammaL2(9)", pgaml, 1440),
    ])
    return gd


if __name__ == "__main__":
    for g in build_groups():
        G = PermGroup(g.generators)
        assert G.order() == g.order, (g.id, G.order())
        for s in g.maximal:
            H = PermGroup(s.generators)
            ok = H.order() == s.order and all(G.contains(h) for h in s.generators)
            print(g.id, s.subgroup_id, H.order(), s.order, "ok" if ok else "MISMATCH")
