"""Concrete schemoids and morphisms between them.

Sets of vertices or points are ``frozenset``s of 0-based integers. Objects of
set-valued schemoids are ordered by (size, sorted members) and that payload is
kept in ``cat.obj_data``.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from itertools import combinations
from typing import Sequence

from .core import (
    GuardError,
    Schemoid,
    SchemoidError,
    SchemoidMorphism,
    discrete_schemoid,
    product_schemoid,
    terminal_schemoid,
    validate_morphism,
    validate_schemoid,
)
from .fincat import FinCat, CategoryError, group_category, inverse_of, poset_category, thin_functor


def discrete(C: FinCat) -> Schemoid:
    """Every morphism in its own block."""
    return discrete_schemoid(C)


# ---------------------------------------------------------------- association schemes


@dataclass(frozen=True)
class AssociationScheme:
    n_points: int
    relation_of: tuple[tuple[int, ...], ...]
    labels: tuple[str, ...] | None = field(default=None, compare=False)
    point_labels: tuple[str, ...] | None = field(default=None, compare=False)

    __hash__ = None  # type: ignore[assignment]

    @property
    def n_relations(self) -> int:
        return 1 + max((r for row in self.relation_of for r in row), default=-1)

    def label(self, r: int) -> str:
        return self.labels[r] if self.labels else f"R{r}"


@dataclass
class SchemeReport:
    errors: list[str] = field(default_factory=list)
    intersection_numbers: dict[tuple[int, int, int], int] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.errors


def validate_association_scheme(A: AssociationScheme) -> SchemeReport:
    """Check diagonal, transpose closure and constancy of ``p^g_{ef}``.

    ``p^g_{ef}`` counts ``y`` with ``(x, y) in e`` and ``(y, z) in f`` for any
    ``(x, z) in g``.
    """
    rep = SchemeReport()
    n, R = A.n_points, A.relation_of
    if len(R) != n or any(len(row) != n for row in R):
        rep.errors.append("relation table is not n x n")
        return rep
    k = A.n_relations
    members = defaultdict(list)
    for x in range(n):
        for y in range(n):
            members[R[x][y]].append((x, y))
    empty = [r for r in range(k) if not members[r]]
    if empty:
        rep.errors.append(f"relations {empty} are empty")
    diag = {R[x][x] for x in range(n)}
    if len(diag) != 1 or any(R[x][y] in diag for x in range(n) for y in range(n) if x != y):
        rep.errors.append("the diagonal is not a single relation")
    for r in range(k):
        ts = {R[y][x] for (x, y) in members[r]}
        if len(ts) != 1 or len(members[next(iter(ts))]) != len(members[r]):
            x, y = members[r][0]
            rep.errors.append(f"transpose of relation {r} is not a relation (witness ({x}, {y}))")
            break
    if rep.errors:
        return rep
    for g in range(k):
        first = None
        for (x, z) in members[g]:
            counts: dict[tuple[int, int], int] = defaultdict(int)
            for y in range(n):
                counts[(R[x][y], R[y][z])] += 1
            if first is None:
                first, w = dict(counts), (x, z)
                continue
            for key in sorted(set(counts) | set(first)):
                if counts.get(key, 0) != first.get(key, 0):
                    rep.errors.append(
                        f"p^{g}_{{{key[0]},{key[1]}}} is {first.get(key, 0)} at {w} "
                        f"but {counts.get(key, 0)} at {(x, z)}")
                    return rep
        for (e, f), c in first.items():
            rep.intersection_numbers[(e, f, g)] = c
    rep.intersection_numbers = dict(sorted(rep.intersection_numbers.items()))
    return rep


def complete_graph_category(n: int, labels: Sequence[str] | None = None) -> FinCat:
    """One morphism ``(x, y): y -> x`` for every ordered pair, index ``x * n + y``."""
    src, tgt = [], []
    for x in range(n):
        for y in range(n):
            src.append(y)
            tgt.append(x)
    comp = {}
    for x in range(n):
        for y in range(n):
            for z in range(n):
                comp[(x * n + y, y * n + z)] = x * n + z
    lab = [str(i) for i in range(n)] if labels is None else list(labels)
    mor_labels = tuple(f"({lab[x]},{lab[y]})" for x in range(n) for y in range(n))
    return FinCat(n, src, tgt, [x * n + x for x in range(n)], comp,
                  obj_labels=tuple(lab), mor_labels=mor_labels)


def from_association_scheme(A: AssociationScheme, max_points: int = 128) -> Schemoid:
    """Objects are points; the morphism ``(x, y)`` goes ``y -> x``; blocks are relations."""
    if A.n_points > max_points:
        raise GuardError(f"scheme has {A.n_points} points; limit is {max_points}")
    rep = validate_association_scheme(A)
    if not rep.ok:
        raise SchemoidError("not an association scheme: " + rep.errors[0])
    n = A.n_points
    C = complete_graph_category(n, A.point_labels)
    block_of = [A.relation_of[x][y] for x in range(n) for y in range(n)]
    labels = tuple(A.label(r) for r in range(A.n_relations))
    return validate_schemoid(C, block_of, labels)


def hamming(n: int) -> AssociationScheme:
    """H(n, 2): binary words (point ``p`` is the word ``format(p, '0nb')``), T_i by distance."""
    if n < 1:
        raise ValueError("hamming length must be at least 1")
    if n > 10:
        raise GuardError(f"hamming length {n} exceeds the bound 10")
    N = 1 << n
    rel = tuple(tuple(bin(x ^ y).count("1") for y in range(N)) for x in range(N))
    return AssociationScheme(N, rel, tuple(f"T{i}" for i in range(n + 1)),
                             tuple(format(p, f"0{n}b") for p in range(N)))


def hamming_schemoid(n: int) -> Schemoid:
    return from_association_scheme(hamming(n))


# ---------------------------------------------------------------- groups


def cyclic_table(n: int):
    return [[(a + b) % n for b in range(n)] for a in range(n)]


def direct_product_table(A, B):
    nB = len(B)
    n = len(A) * nB
    return [[A[x // nB][y // nB] * nB + B[x % nB][y % nB] for y in range(n)] for x in range(n)]


def _perm_group_table(gens):
    """Closure of permutation generators; element 0 is the identity."""
    ident = tuple(range(len(gens[0])))
    elems = [ident]
    index = {ident: 0}
    frontier = [ident]
    while frontier:
        nxt = []
        for a in frontier:
            for g in gens:
                c = tuple(g[i] for i in a)
                if c not in index:
                    index[c] = len(elems)
                    elems.append(c)
                    nxt.append(c)
        frontier = nxt
    # a * b means "apply b then a"
    return [[index[tuple(a[i] for i in b)] for b in elems] for a in elems]


def dihedral_table(m: int):
    rot = tuple((i + 1) % m for i in range(m))
    ref = tuple((-i) % m for i in range(m))
    return _perm_group_table([rot, ref])


def symmetric3_table():
    return _perm_group_table([(1, 0, 2), (0, 2, 1)])


def quaternion_table():
    # elements +-1, +-i, +-j, +-k encoded as (sign, unit) with unit in 1,i,j,k
    units = {("1", "1"): (1, "1"), ("1", "i"): (1, "i"), ("1", "j"): (1, "j"), ("1", "k"): (1, "k"),
             ("i", "1"): (1, "i"), ("i", "i"): (-1, "1"), ("i", "j"): (1, "k"), ("i", "k"): (-1, "j"),
             ("j", "1"): (1, "j"), ("j", "i"): (-1, "k"), ("j", "j"): (-1, "1"), ("j", "k"): (1, "i"),
             ("k", "1"): (1, "k"), ("k", "i"): (1, "j"), ("k", "j"): (-1, "i"), ("k", "k"): (-1, "1")}
    elems = [(s, u) for u in "1ijk" for s in (1, -1)]
    index = {e: n for n, e in enumerate(elems)}
    table = []
    for s1, u1 in elems:
        row = []
        for s2, u2 in elems:
            s, u = units[(u1, u2)]
            row.append(index[(s1 * s2 * s, u)])
        table.append(row)
    return table


def small_groups() -> dict[str, list[list[int]]]:
    """Multiplication tables of every group of order at most 8, up to isomorphism."""
    z2 = cyclic_table(2)
    groups = {f"Z{n}": cyclic_table(n) for n in range(1, 9)}
    groups["Z2xZ2"] = direct_product_table(z2, z2)
    groups["Z4xZ2"] = direct_product_table(cyclic_table(4), z2)
    groups["Z2xZ2xZ2"] = direct_product_table(groups["Z2xZ2"], z2)
    groups["S3"] = symmetric3_table()
    groups["D4"] = dihedral_table(4)
    groups["Q8"] = quaternion_table()
    return groups


def check_group_table(table) -> None:
    n = len(table)
    if n == 0 or any(len(r) != n for r in table):
        raise CategoryError("group table must be square and non-empty")
    group_category(table)  # identity present
    e = [g for g in range(n) if all(table[g][f] == f for f in range(n))][0]
    for a in range(n):
        if sorted(table[a]) != list(range(n)) or sorted(table[b][a] for b in range(n)) != list(range(n)):
            raise CategoryError(f"element {a} has no inverse (not a Latin square)")
        for b in range(n):
            for c in range(n):
                if table[table[a][b]][c] != table[a][table[b][c]]:
                    raise CategoryError(f"group table not associative at ({a}, {b}, {c})")
    if any(table[e][a] != a or table[a][e] != a for a in range(n)):
        raise CategoryError("identity is not two-sided")


def group_case(G, H: Sequence[int]) -> AssociationScheme:
    """Orbits of ``G`` acting by left multiplication on pairs of left cosets ``gH``."""
    check_group_table(G)
    n = len(G)
    H = sorted(set(H))
    e = [g for g in range(n) if all(G[g][f] == f for f in range(n))][0]
    if e not in H or any(G[a][b] not in H for a in H for b in H):
        raise SchemoidError(f"{H} is not a subgroup")
    cosets: list[frozenset] = []
    coset_of = {}
    for g in range(n):
        if g in coset_of:
            continue
        c = frozenset(G[g][h] for h in H)
        for x in c:
            coset_of[x] = len(cosets)
        cosets.append(c)
    m = len(cosets)
    rel = [[-1] * m for _ in range(m)]
    k = 0
    for a in range(m):
        for b in range(m):
            if rel[a][b] != -1:
                continue
            ga, gb = min(cosets[a]), min(cosets[b])
            for g in range(n):
                rel[coset_of[G[g][ga]]][coset_of[G[g][gb]]] = k
            k += 1
    return AssociationScheme(m, tuple(tuple(r) for r in rel),
                             point_labels=tuple(f"{min(c)}H" for c in cosets))


def from_groupoid(H: FinCat) -> Schemoid:
    """Objects are the morphisms of ``H``; ``(k, l): l -> k`` when ``t(k) == t(l)``.

    The block of ``(k, l)`` is indexed by ``k^-1 o l``.
    """
    inv = []
    for f in H.morphisms:
        g = inverse_of(H, f)
        if g is None:
            raise SchemoidError(f"morphism {H.mor_label(f)} is not invertible")
        inv.append(g)
    pairs = [(k, l) for k in H.morphisms for l in H.morphisms if H.tgt[k] == H.tgt[l]]
    index = {p: i for i, p in enumerate(pairs)}
    src = [l for _, l in pairs]
    tgt = [k for k, _ in pairs]
    identity = [index[(k, k)] for k in H.morphisms]
    comp = {}
    for (k, l), i in index.items():
        for m in H.morphisms:
            j = index.get((l, m))
            if j is not None:
                comp[(i, j)] = index[(k, m)]
    block_of = [H.comp[(inv[k], l)] for k, l in pairs]
    mor_labels = tuple(f"({H.mor_label(k)},{H.mor_label(l)})" for k, l in pairs)
    C = FinCat(H.n_morphisms, src, tgt, identity, comp,
               obj_labels=tuple(H.mor_label(f) for f in H.morphisms), mor_labels=mor_labels)
    used = sorted(set(block_of))
    # every morphism f of H occurs as k^-1 l with k = id, so blocks are dense
    labels = tuple(f"G[{H.mor_label(f)}]" for f in used)
    return validate_schemoid(C, block_of, labels)


def group_schemoid(table, labels: Sequence[str] | None = None) -> Schemoid:
    """The groupoid schemoid of a group given by its table."""
    check_group_table(table)
    return from_groupoid(group_category(table, labels))


# ---------------------------------------------------------------- (N <= n, len)


def truncated_len(n: int) -> Schemoid:
    """Objects ``0..n``; arrow ``i -> j`` for ``i <= j``; blocks by length.

    Morphisms are ordered by (length, source).
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    arrows = [(i, i + L) for L in range(n + 1) for i in range(n + 1 - L)]
    index = {a: k for k, a in enumerate(arrows)}
    comp = {}
    for (i, j), f in index.items():
        for k in range(j, n + 1):
            comp[(index[(j, k)], f)] = index[(i, k)]
    C = FinCat(n + 1, [a for a, _ in arrows], [b for _, b in arrows], list(range(n + 1)), comp,
               obj_labels=tuple(str(i) for i in range(n + 1)),
               mor_labels=tuple(f"{i}->{j}" for i, j in arrows))
    return validate_schemoid(C, [j - i for i, j in arrows], tuple(f"len{L}" for L in range(n + 1)))


def truncated_arrow(n: int, i: int, j: int) -> int:
    """Index of ``i -> j`` in ``truncated_len(n)``."""
    L = j - i
    return sum(n + 1 - a for a in range(L)) + i


def power_schemoid(S: Schemoid, k: int) -> Schemoid:
    """``S x ... x S`` (k factors) with flat tuple labels; k = 0 gives the terminal schemoid."""
    if k == 0:
        return terminal_schemoid()
    P = S
    for _ in range(k - 1):
        P = product_schemoid(P, S)
    from itertools import product as iproduct
    cat = P.cat
    obj_labels = tuple("(" + ",".join(S.cat.obj_label(a) for a in t) + ")"
                       for t in iproduct(S.cat.objects, repeat=k))
    mor_labels = tuple("(" + ",".join(S.cat.mor_label(a) for a in t) + ")"
                       for t in iproduct(S.cat.morphisms, repeat=k))
    block_labels = tuple("(" + ",".join(S.block_label(a) for a in t) + ")"
                         for t in iproduct(range(S.n_blocks), repeat=k))
    cat = FinCat(cat.n_objects, cat.src, cat.tgt, cat.identity, cat.comp,
                 obj_labels=obj_labels, mor_labels=mor_labels)
    return Schemoid(cat, P.block_of, P.blocks, block_labels, P.constants)


# ---------------------------------------------------------------- set families


def set_label(s) -> str:
    return "{" + ",".join(str(v) for v in sorted(s)) + "}"


def _set_key(s):
    return (len(s), tuple(sorted(s)))


def powerset_difference(theta: Sequence) -> Schemoid:
    """Inclusions between members of ``theta``; ``U <= V`` lies in the block of ``V - U``.

    Duplicate members are dropped. Blocks are ordered by (size, members).
    """
    sets = sorted({frozenset(s) for s in theta}, key=_set_key)
    C = poset_category(sets, lambda a, b: a <= b, [set_label(s) for s in sets])
    diffs = [sets[C.tgt[f]] - sets[C.src[f]] for f in C.morphisms]
    keys = sorted(set(diffs), key=_set_key)
    bid = {d: i for i, d in enumerate(keys)}
    mor_labels = tuple(f"{set_label(sets[C.src[f]])}<{set_label(sets[C.tgt[f]])}" for f in C.morphisms)
    C = FinCat(C.n_objects, C.src, C.tgt, C.identity, C.comp,
               obj_labels=C.obj_labels, mor_labels=mor_labels, obj_data=C.obj_data)
    return validate_schemoid(C, [bid[d] for d in diffs], tuple(set_label(d) + "~" for d in keys))


def full_powerset(n: int) -> list[frozenset]:
    return [frozenset(c) for k in range(n + 1) for c in combinations(range(n), k)]


@dataclass(frozen=True)
class SimplicialComplex:
    """Vertices ``0..n_vertices-1``; ``faces`` are the non-empty simplices."""

    n_vertices: int
    faces: frozenset

    __hash__ = None  # type: ignore[assignment]

    @classmethod
    def generated(cls, n_vertices: int, facets) -> "SimplicialComplex":
        """Downward closure of ``facets`` plus every vertex."""
        faces = {frozenset([v]) for v in range(n_vertices)}
        for s in facets:
            s = tuple(s)
            for k in range(1, len(s) + 1):
                faces.update(frozenset(c) for c in combinations(s, k))
        return cls(n_vertices, frozenset(faces))

    def simplices(self) -> list[frozenset]:
        return sorted(self.faces, key=_set_key)

    def edges(self):
        return [s for s in self.simplices() if len(s) == 2]

    def components(self) -> list[list[int]]:
        parent = list(range(self.n_vertices))

        def find(a):
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        for e in self.edges():
            a, b = sorted(e)
            parent[find(a)] = find(b)
        groups = defaultdict(list)
        for v in range(self.n_vertices):
            groups[find(v)].append(v)
        return sorted(groups.values())


def validate_complex(K: SimplicialComplex) -> SimplicialComplex:
    for s in K.faces:
        if not s:
            raise SchemoidError("the empty set is implicit and must not be listed")
        if any(not 0 <= v < K.n_vertices for v in s):
            raise SchemoidError(f"face {set_label(s)} uses a vertex out of range")
    for v in range(K.n_vertices):
        if frozenset([v]) not in K.faces:
            raise SchemoidError(f"vertex {v} is missing as a face")
    for s in K.simplices():
        for v in s:
            t = s - {v}
            if t and t not in K.faces:
                raise SchemoidError(f"not downward closed: {set_label(s)} is a face but {set_label(t)} is not")
    return K


def simplicial_schemoid(K: SimplicialComplex) -> Schemoid:
    """Face poset including the empty face, blocks by difference set."""
    validate_complex(K)
    return powerset_difference([frozenset()] + K.simplices())


def all_complexes(n: int) -> list[SimplicialComplex]:
    """Every complex on vertex set ``0..n-1`` (all vertices present); small n only."""
    if n > 4:
        raise GuardError("enumeration of complexes limited to 4 vertices")
    higher = [frozenset(c) for k in range(2, n + 1) for c in combinations(range(n), k)]
    out = []
    for mask in range(1 << len(higher)):
        chosen = {higher[i] for i in range(len(higher)) if mask >> i & 1}
        if all(s - {v} in chosen or len(s) == 2 for s in chosen for v in s):
            out.append(SimplicialComplex(n, frozenset(chosen | {frozenset([v]) for v in range(n)})))
    return out


@dataclass(frozen=True)
class FiniteSpace:
    n_points: int
    opens: tuple[frozenset, ...]

    __hash__ = None  # type: ignore[assignment]

    @classmethod
    def make(cls, n_points: int, opens) -> "FiniteSpace":
        return cls(n_points, tuple(sorted({frozenset(u) for u in opens}, key=_set_key)))


def validate_space(X: FiniteSpace) -> FiniteSpace:
    opens = set(X.opens)
    whole = frozenset(range(X.n_points))
    if frozenset() not in opens or whole not in opens:
        raise SchemoidError("open sets must contain the empty set and the whole space")
    for u in opens:
        if not u <= whole:
            raise SchemoidError(f"open set {set_label(u)} has points out of range")
        for v in opens:
            if u | v not in opens:
                raise SchemoidError(f"union of {set_label(u)} and {set_label(v)} is not open")
            if u & v not in opens:
                raise SchemoidError(f"intersection of {set_label(u)} and {set_label(v)} is not open")
    return X


def open_set_schemoid(X: FiniteSpace) -> Schemoid:
    validate_space(X)
    return powerset_difference(X.opens)


def sierpinski_space() -> FiniteSpace:
    return FiniteSpace.make(2, [[], [0], [0, 1]])


# ---------------------------------------------------------------- morphisms


def _sets_of(S: Schemoid) -> list[frozenset]:
    data = S.cat.obj_data
    if data is None or not all(isinstance(d, frozenset) for d in data):
        raise SchemoidError("schemoid objects are not sets")
    return list(data)


def height_morphism(S: Schemoid, n: int | None = None) -> SchemoidMorphism:
    """``U -> |U|`` into ``truncated_len(n)``; ``n`` defaults to the size of the union."""
    sets = _sets_of(S)
    if n is None:
        n = len(frozenset().union(*sets))
    T = truncated_len(n)
    obj_map = [len(s) for s in sets]
    if max(obj_map, default=0) > n:
        raise SchemoidError(f"a set has more than {n} elements")
    mor_map = [truncated_arrow(n, obj_map[S.cat.src[f]], obj_map[S.cat.tgt[f]]) for f in S.cat.morphisms]
    return validate_morphism(S, T, obj_map, mor_map)


def indicator_morphism(S: Schemoid, n: int | None = None) -> SchemoidMorphism:
    """``U -> `` its indicator vector in the n-fold power of ``truncated_len(1)``.

    Vertex 0 is the most significant coordinate of the mixed-radix indices.
    """
    sets = _sets_of(S)
    if n is None:
        n = 1 + max((v for s in sets for v in s), default=-1)
    T = power_schemoid(truncated_len(1), n)

    def obj(s):
        return sum(1 << (n - 1 - v) for v in s)

    def mor(a, b):
        # truncated_len(1): 0 = id0, 1 = id1, 2 = the arrow
        idx = 0
        for v in range(n):
            c = 1 if v in a else (2 if v in b else 0)
            idx = idx * 3 + c
        return idx

    obj_map = [obj(s) for s in sets]
    mor_map = [mor(sets[S.cat.src[f]], sets[S.cat.tgt[f]]) for f in S.cat.morphisms]
    return validate_morphism(S, T, obj_map, mor_map)


class SimplicialMapError(SchemoidError):
    def __init__(self, msg, witness=None):
        self.witness = witness
        super().__init__(msg)


def check_simplicial_map(K: SimplicialComplex, L: SimplicialComplex, f: Sequence[int]) -> None:
    """Raise unless ``f`` is simplicial and each component is non-degenerate or constant."""
    if len(f) != K.n_vertices or any(not 0 <= v < L.n_vertices for v in f):
        raise SimplicialMapError("vertex map has wrong length or range")
    for s in K.simplices():
        img = frozenset(f[v] for v in s)
        if img not in L.faces:
            raise SimplicialMapError(f"image of face {set_label(s)} is not a face", witness=sorted(s))
    for comp in K.components():
        if len({f[v] for v in comp}) == 1:
            continue
        for e in K.edges():
            a, b = sorted(e)
            if a in comp and f[a] == f[b]:
                raise SimplicialMapError(
                    f"degenerate on a non-constant component: f({a}) = f({b}) = {f[a]}", witness=[a, b])


def is_nondegenerate(K: SimplicialComplex, f: Sequence[int]) -> bool:
    return all(f[a] != f[b] for a, b in (sorted(e) for e in K.edges()))


def simplicial_map_morphism(K: SimplicialComplex, L: SimplicialComplex, f: Sequence[int]) -> SchemoidMorphism:
    """``P(f)``: a face goes to its image, the empty face to the empty face."""
    validate_complex(K)
    validate_complex(L)
    check_simplicial_map(K, L, f)
    SK, SL = simplicial_schemoid(K), simplicial_schemoid(L)
    pos = {s: i for i, s in enumerate(_sets_of(SL))}
    obj_map = [pos[frozenset(f[v] for v in s)] for s in _sets_of(SK)]
    return validate_morphism(SK, SL, obj_map, thin_functor(SK.cat, SL.cat, obj_map))


def continuous_map_morphism(f: Sequence[int], X: FiniteSpace, Y: FiniteSpace) -> SchemoidMorphism:
    """``f^*`` from the open sets of ``Y`` to those of ``X``: ``U -> f^-1(U)``."""
    validate_space(X)
    validate_space(Y)
    if len(f) != X.n_points or any(not 0 <= y < Y.n_points for y in f):
        raise SchemoidError("point map has wrong length or range")
    opens_X = set(X.opens)
    SY, SX = open_set_schemoid(Y), open_set_schemoid(X)
    pos = {s: i for i, s in enumerate(_sets_of(SX))}
    obj_map = []
    for U in _sets_of(SY):
        pre = frozenset(x for x in range(X.n_points) if f[x] in U)
        if pre not in opens_X:
            raise SchemoidError(f"not continuous: preimage of open set {set_label(U)} is {set_label(pre)}")
        obj_map.append(pos[pre])
    return validate_morphism(SY, SX, obj_map, thin_functor(SY.cat, SX.cat, obj_map))


# ---------------------------------------------------------------- Hamming vs Z/2


def sign_morphism(n: int) -> SchemoidMorphism:
    """``v``: words of even weight to object 0, odd weight to object 1 of the Z/2 schemoid."""
    H = hamming_schemoid(n)
    Z = group_schemoid(cyclic_table(2))
    N = H.cat.n_objects
    obj_map = [bin(p).count("1") % 2 for p in range(N)]
    # in the Z/2 schemoid, (k, l): l -> k has index 2k + l
    mor_map = [2 * obj_map[H.cat.tgt[f]] + obj_map[H.cat.src[f]] for f in H.cat.morphisms]
    return validate_morphism(H, Z, obj_map, mor_map)


def word_inclusion(n: int) -> SchemoidMorphism:
    """``u``: object 0 to the zero word and object 1 to the word ``0..01``."""
    H = hamming_schemoid(n)
    Z = group_schemoid(cyclic_table(2))
    N = H.cat.n_objects
    obj_map = [0, 1]
    mor_map = [obj_map[Z.cat.tgt[f]] * N + obj_map[Z.cat.src[f]] for f in Z.cat.morphisms]
    return validate_morphism(Z, H, obj_map, mor_map)
