"""Schemoids: partitioned finite categories.

Composition convention used throughout: the structure constant
``p[sigma, tau, mu]`` is the number of pairs ``(s, t)`` in ``sigma x tau`` with
``s o t == h`` for a fixed ``h`` in ``mu`` (``s`` is applied second). The
schemoid axiom says this count does not depend on the choice of ``h``.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from typing import Sequence

from .fincat import (
    FinCat,
    StructuralError,
    functor_violation,
    interval_category,
    product_category,
    opposite,
    terminal_category,
)


class SchemoidError(ValueError):
    pass


class PartitionError(SchemoidError):
    """The block data is not a partition of the morphisms."""


class AxiomViolation(SchemoidError):
    """Fiber cardinalities differ over two morphisms of one block."""

    def __init__(self, sigma, tau, mu, f, g, count_f, count_g):
        self.witness = dict(sigma=sigma, tau=tau, mu=mu, f=f, g=g, count_f=count_f, count_g=count_g)
        super().__init__(
            f"schemoid axiom fails for blocks ({sigma}, {tau}; {mu}): "
            f"{count_f} factorizations over morphism {f} but {count_g} over {g}"
        )


class NotTameError(SchemoidError):
    def __init__(self, report):
        self.report = report
        super().__init__(f"schemoid is not tame: {report.reason()}")


class MorphismError(SchemoidError):
    pass


class FunctorialityError(MorphismError):
    def __init__(self, kind, a, b, msg):
        self.witness = dict(kind=kind, first=a, second=b)
        super().__init__(msg)


class BlockMapError(MorphismError):
    def __init__(self, block, images):
        self.witness = dict(block=block, target_blocks=sorted(images))
        super().__init__(f"block {block} is sent into several target blocks {sorted(images)}")


class GuardError(SchemoidError):
    """A brute-force search was refused because its input exceeds the size bound."""


@dataclass(frozen=True)
class Schemoid:
    cat: FinCat
    block_of: tuple[int, ...]
    blocks: tuple[tuple[int, ...], ...]
    block_labels: tuple[str, ...] | None = field(default=None, compare=False)
    constants: dict = field(default_factory=dict, compare=False, repr=False)

    __hash__ = None  # type: ignore[assignment]

    @property
    def n_blocks(self) -> int:
        return len(self.blocks)

    def block_label(self, b: int) -> str:
        return self.block_labels[b] if self.block_labels else f"B{b}"

    def block_index(self, label: str) -> int:
        return self.block_labels.index(label) if self.block_labels else int(label.lstrip("B"))

    def rep(self, b: int) -> int:
        """Smallest morphism of block ``b``."""
        return self.blocks[b][0]

    def identity_block(self, x: int) -> int:
        return self.block_of[self.cat.identity[x]]


def _check_partition(cat: FinCat, block_of: Sequence[int]) -> tuple[tuple[int, ...], ...]:
    if len(block_of) != cat.n_morphisms:
        raise PartitionError(f"block assignment has {len(block_of)} entries for {cat.n_morphisms} morphisms")
    if not block_of:
        return ()
    nb = max(block_of) + 1
    if min(block_of) < 0:
        raise PartitionError("negative block id")
    members: list[list[int]] = [[] for _ in range(nb)]
    for f, b in enumerate(block_of):
        members[b].append(f)
    empty = [b for b, m in enumerate(members) if not m]
    if empty:
        raise PartitionError(f"block ids {empty} are empty")
    return tuple(tuple(m) for m in members)


def blocks_to_block_of(n_morphisms: int, blocks: Sequence[Sequence[int]]) -> list[int]:
    """Convert a list of morphism sets to a total block assignment."""
    block_of = [-1] * n_morphisms
    for b, members in enumerate(blocks):
        if not members:
            raise PartitionError(f"block {b} is empty")
        for f in members:
            if not 0 <= f < n_morphisms:
                raise PartitionError(f"block {b} lists out-of-range morphism {f}")
            if block_of[f] != -1:
                raise PartitionError(f"morphism {f} lies in blocks {block_of[f]} and {b}")
            block_of[f] = b
    missing = [f for f, b in enumerate(block_of) if b == -1]
    if missing:
        raise PartitionError(f"morphisms {missing} are not covered by any block")
    return block_of


def factorization_counts(cat: FinCat, block_of: Sequence[int]):
    """``counts[(sigma, tau)][h]`` = #{(s, t) in sigma x tau : s o t = h}."""
    counts: dict[tuple[int, int], dict[int, int]] = defaultdict(lambda: defaultdict(int))
    for (s, t), h in cat.comp.items():
        counts[(block_of[s], block_of[t])][h] += 1
    return counts


def axiom_witness(cat: FinCat, block_of: Sequence[int], blocks) -> AxiomViolation | None:
    """First violation of the fiber-cardinality condition, or ``None``."""
    counts = factorization_counts(cat, block_of)
    for (sigma, tau) in sorted(counts):
        by_h = counts[(sigma, tau)]
        for mu in sorted({block_of[h] for h in by_h}):
            members = blocks[mu]
            f0 = members[0]
            c0 = by_h.get(f0, 0)
            for g in members[1:]:
                cg = by_h.get(g, 0)
                if cg != c0:
                    return AxiomViolation(sigma, tau, mu, f0, g, c0, cg)
    return None


def _constants_from_counts(counts, blocks, block_of) -> dict[tuple[int, int, int], int]:
    table = {}
    for (sigma, tau), by_h in counts.items():
        for mu in {block_of[h] for h in by_h}:
            table[(sigma, tau, mu)] = by_h.get(blocks[mu][0], 0)
    return dict(sorted(table.items()))


def validate_schemoid(cat: FinCat, block_of: Sequence[int],
                      block_labels: Sequence[str] | None = None) -> Schemoid:
    """Check the partition and the schemoid axiom; cache the structure constants.

    Raises :class:`PartitionError` before looking at the axiom, then
    :class:`AxiomViolation` with the first witness found.
    """
    if any(not 0 <= v < cat.n_morphisms for v in cat.identity) or len(cat.tgt) != len(cat.src):
        raise StructuralError("category tables are index-inconsistent")
    block_of = tuple(int(b) for b in block_of)
    blocks = _check_partition(cat, block_of)
    if block_labels is not None and len(block_labels) != len(blocks):
        raise PartitionError("one label per block required")
    witness = axiom_witness(cat, block_of, blocks)
    if witness is not None:
        raise witness
    counts = factorization_counts(cat, block_of)
    constants = _constants_from_counts(counts, blocks, block_of)
    return Schemoid(cat, block_of, blocks, tuple(block_labels) if block_labels else None, constants)


def schemoid_from_blocks(cat: FinCat, blocks: Sequence[Sequence[int]],
                         block_labels: Sequence[str] | None = None) -> Schemoid:
    return validate_schemoid(cat, blocks_to_block_of(cat.n_morphisms, blocks), block_labels)


def structure_constants(S: Schemoid) -> dict[tuple[int, int, int], int]:
    """Sparse table ``(sigma, tau, mu) -> p``; absent keys are zero."""
    return dict(S.constants)


def constant(S: Schemoid, sigma: int, tau: int, mu: int) -> int:
    return S.constants.get((sigma, tau, mu), 0)


def discrete_schemoid(C: FinCat) -> Schemoid:
    labels = tuple(C.mor_label(f) for f in C.morphisms)
    return validate_schemoid(C, list(C.morphisms), labels)


# ---------------------------------------------------------------- tameness


def identity_classes(S: Schemoid) -> tuple[list[int], list[list[int]]]:
    """Objects grouped by the block of their identity.

    Returns ``(class_of, classes)``; classes are ordered by smallest member.
    """
    cat = S.cat
    by_block: dict[int, list[int]] = {}
    for x in cat.objects:
        by_block.setdefault(S.identity_block(x), []).append(x)
    classes = sorted(by_block.values(), key=lambda m: m[0])
    class_of = [0] * cat.n_objects
    for k, members in enumerate(classes):
        for x in members:
            class_of[x] = k
    return class_of, classes


@dataclass
class TamenessReport:
    unital: bool
    tii_holds: bool
    tiii_holds: bool
    composition: dict[tuple[int, int], int] = field(default_factory=dict)
    unital_witness: int | None = None
    tii_witness: int | None = None
    tiii_failures: list[dict] = field(default_factory=list)

    @property
    def tame(self) -> bool:
        return self.unital and self.tiii_holds

    def reason(self) -> str:
        if not self.unital:
            return f"T(i): block {self.unital_witness} mixes identities and non-identities"
        if not self.tii_holds:
            return f"T(ii): block {self.tii_witness} has sources or targets in several identity classes"
        if not self.tiii_holds:
            w = self.tiii_failures[0]
            return f"T(iii): blocks ({w['sigma']}, {w['tau']}): {w['problem']}"
        return "tame"


def tameness_report(S: Schemoid) -> TamenessReport:
    """Check T(i), T(ii) and T(iii).

    T(iii) is checked literally: for ``sigma: [x] -> [y]`` and
    ``tau: [y] -> [z]`` there must be ``f in sigma``, ``g in tau`` with
    ``s(g) == t(f)``, and the composites ``g o f`` must all lie in one block.
    """
    cat = S.cat
    ids = set(cat.identity)
    unital, uw = True, None
    for b, members in enumerate(S.blocks):
        inter = [f for f in members if f in ids]
        if inter and len(inter) != len(members):
            unital, uw = False, b
            break

    src_block: list[int | None] = []
    tgt_block: list[int | None] = []
    tii, tw = True, None
    for b, members in enumerate(S.blocks):
        sb = {S.identity_block(cat.src[f]) for f in members}
        tb = {S.identity_block(cat.tgt[f]) for f in members}
        if len(sb) != 1 or len(tb) != 1:
            if tii:
                tii, tw = False, b
            src_block.append(None)
            tgt_block.append(None)
        else:
            src_block.append(sb.pop())
            tgt_block.append(tb.pop())

    report = TamenessReport(unital, tii, False, unital_witness=uw, tii_witness=tw)
    if not tii:
        report.tiii_failures.append(dict(sigma=tw, tau=None, problem="T(ii) fails so [C] is undefined"))
        return report

    composites: dict[tuple[int, int], set[int]] = defaultdict(set)
    for (g, f), h in cat.comp.items():
        composites[(S.block_of[g], S.block_of[f])].add(S.block_of[h])
    ok = True
    for sigma in range(S.n_blocks):
        for tau in range(S.n_blocks):
            if tgt_block[sigma] != src_block[tau]:
                continue
            found = composites.get((tau, sigma), set())
            if not found:
                ok = False
                report.tiii_failures.append(dict(sigma=sigma, tau=tau, problem="no composable representatives"))
            elif len(found) > 1:
                ok = False
                report.tiii_failures.append(
                    dict(sigma=sigma, tau=tau, problem=f"composites lie in several blocks {sorted(found)}"))
            else:
                report.composition[(tau, sigma)] = next(iter(found))
    report.tiii_holds = ok
    return report


def quotient_category(S: Schemoid) -> tuple[FinCat, tuple[int, ...]]:
    """The category ``[C]`` of a tame schemoid and the projection on morphisms.

    Morphisms of ``[C]`` are the blocks, with the same ids, so the projection is
    ``S.block_of``.
    """
    report = tameness_report(S)
    if not report.tame:
        raise NotTameError(report)
    cat = S.cat
    class_of, classes = identity_classes(S)
    src = [class_of[cat.src[S.rep(b)]] for b in range(S.n_blocks)]
    tgt = [class_of[cat.tgt[S.rep(b)]] for b in range(S.n_blocks)]
    identity = [S.identity_block(members[0]) for members in classes]
    obj_labels = tuple(f"[{cat.obj_label(members[0])}]" for members in classes)
    mor_labels = tuple(S.block_label(b) for b in range(S.n_blocks))
    Q = FinCat(len(classes), src, tgt, identity, dict(report.composition),
               obj_labels=obj_labels, mor_labels=mor_labels)
    return Q, S.block_of


def object_projection(S: Schemoid) -> tuple[int, ...]:
    return tuple(identity_classes(S)[0])


# ---------------------------------------------------------------- morphisms


@dataclass(frozen=True)
class SchemoidMorphism:
    source: Schemoid
    target: Schemoid
    obj_map: tuple[int, ...]
    mor_map: tuple[int, ...]
    block_map: tuple[int, ...]

    __hash__ = None  # type: ignore[assignment]


def validate_morphism(source: Schemoid, target: Schemoid, obj_map, mor_map) -> SchemoidMorphism:
    """Check functoriality, then that each block lands inside one target block."""
    obj_map, mor_map = tuple(obj_map), tuple(mor_map)
    bad = functor_violation(source.cat, target.cat, obj_map, mor_map)
    if bad is not None:
        raise FunctorialityError(*bad)
    block_map = []
    for b, members in enumerate(source.blocks):
        images = {target.block_of[mor_map[f]] for f in members}
        if len(images) != 1:
            raise BlockMapError(b, images)
        block_map.append(images.pop())
    return SchemoidMorphism(source, target, obj_map, mor_map, tuple(block_map))


def identity_morphism(S: Schemoid) -> SchemoidMorphism:
    return SchemoidMorphism(S, S, tuple(S.cat.objects), tuple(S.cat.morphisms), tuple(range(S.n_blocks)))


def compose_morphisms(v: SchemoidMorphism, u: SchemoidMorphism) -> SchemoidMorphism:
    """``v o u``."""
    return SchemoidMorphism(
        u.source, v.target,
        tuple(v.obj_map[x] for x in u.obj_map),
        tuple(v.mor_map[f] for f in u.mor_map),
        tuple(v.block_map[b] for b in u.block_map),
    )


def same_morphism(u: SchemoidMorphism, v: SchemoidMorphism) -> bool:
    return u.obj_map == v.obj_map and u.mor_map == v.mor_map


# ---------------------------------------------------------------- products


def product_schemoid(S: Schemoid, T: Schemoid) -> Schemoid:
    P = product_category(S.cat, T.cat)
    nb = T.n_blocks
    block_of = [S.block_of[f] * nb + T.block_of[g] for f in S.cat.morphisms for g in T.cat.morphisms]
    labels = tuple(f"({S.block_label(a)},{T.block_label(b)})" for a in range(S.n_blocks) for b in range(nb))
    return validate_schemoid(P, block_of, labels)


def opposite_schemoid(S: Schemoid) -> Schemoid:
    return validate_schemoid(opposite(S.cat), S.block_of, S.block_labels)


def terminal_schemoid() -> Schemoid:
    return discrete_schemoid(terminal_category())


def interval_schemoid() -> Schemoid:
    return discrete_schemoid(interval_category())


def check_homotopy(H: SchemoidMorphism, S: Schemoid) -> tuple[SchemoidMorphism, SchemoidMorphism]:
    """Restrict a homotopy ``H : S x I -> S'`` to its two ends ``(F, G)``."""
    expected = product_category(S.cat, interval_category())
    if H.source.cat != expected:
        raise MorphismError("homotopy source is not S x I")
    H = validate_morphism(H.source, H.target, H.obj_map, H.mor_map)
    ends = []
    for i in (0, 1):
        obj = [H.obj_map[a * 2 + i] for a in S.cat.objects]
        mor = [H.mor_map[f * 3 + i] for f in S.cat.morphisms]
        ends.append(validate_morphism(S, H.target, obj, mor))
    return ends[0], ends[1]


# ---------------------------------------------------------------- isomorphism search


@dataclass
class IsoSearch:
    witness: SchemoidMorphism | None
    nodes: int

    @property
    def found(self) -> bool:
        return self.witness is not None


def _hom_profile(cat: FinCat, x: int):
    out = sorted(len(cat.hom(x, y)) for y in cat.objects)
    inn = sorted(len(cat.hom(y, x)) for y in cat.objects)
    return (len(cat.hom(x, x)), tuple(out), tuple(inn))


def find_category_isomorphism(C: FinCat, D: FinCat, block_C=None, block_D=None, max_objects: int = 8):
    """Backtracking search for an isomorphism ``C -> D`` respecting optional blocks.

    Returns ``((obj_map, mor_map) or None, nodes_explored)``.
    """
    if C.n_objects > max_objects or D.n_objects > max_objects:
        raise GuardError(
            f"isomorphism search limited to {max_objects} objects "
            f"(got {C.n_objects} and {D.n_objects}); raise the bound to force it")
    if C.n_objects != D.n_objects or C.n_morphisms != D.n_morphisms:
        return None, 0
    if block_C is not None:
        sizes_C = sorted(block_C.count(b) for b in set(block_C))
        sizes_D = sorted(block_D.count(b) for b in set(block_D))
        if sizes_C != sizes_D:
            return None, 0
    n = C.n_objects
    prof_C = [_hom_profile(C, x) for x in C.objects]
    prof_D = [_hom_profile(D, y) for y in D.objects]
    if sorted(prof_C) != sorted(prof_D):
        return None, 0

    # triples each morphism participates in
    involved: dict[int, list[tuple[int, int, int]]] = defaultdict(list)
    for (g, f), h in C.comp.items():
        for m in {g, f, h}:
            involved[m].append((g, f, h))

    nodes = 0
    obj_map = [-1] * n
    used_obj = [False] * n

    def obj_search(x):
        nonlocal nodes
        if x == n:
            res = mor_search()
            return res
        for y in D.objects:
            if used_obj[y] or prof_D[y] != prof_C[x]:
                continue
            ok = True
            for x2 in range(x):
                if len(C.hom(x, x2)) != len(D.hom(y, obj_map[x2])) or \
                        len(C.hom(x2, x)) != len(D.hom(obj_map[x2], y)):
                    ok = False
                    break
            if not ok or len(C.hom(x, x)) != len(D.hom(y, y)):
                continue
            nodes += 1
            obj_map[x], used_obj[y] = y, True
            res = obj_search(x + 1)
            if res is not None:
                return res
            obj_map[x], used_obj[y] = -1, False
        return None

    def mor_search():
        m = C.n_morphisms
        mor_map = [-1] * m
        used = [False] * m
        bmap: dict[int, int] = {}
        bused: dict[int, int] = {}
        order = list(C.identity) + [f for f in C.morphisms if f not in set(C.identity)]

        def consistent(f):
            for g1, f1, h1 in involved[f]:
                a, b, c = mor_map[g1], mor_map[f1], mor_map[h1]
                if a >= 0 and b >= 0 and c >= 0 and D.comp.get((a, b)) != c:
                    return False
            return True

        def assign(k):
            nonlocal nodes
            if k == m:
                return list(mor_map)
            f = order[k]
            if k < n:
                cands = [D.identity[obj_map[C.src[f]]]]
            else:
                cands = D.hom(obj_map[C.src[f]], obj_map[C.tgt[f]])
            for h in cands:
                if used[h]:
                    continue
                if block_C is not None:
                    bc, bd = block_C[f], block_D[h]
                    if bmap.get(bc, bd) != bd or bused.get(bd, bc) != bc:
                        continue
                nodes += 1
                mor_map[f], used[h] = h, True
                added = False
                if block_C is not None and block_C[f] not in bmap:
                    bmap[block_C[f]], bused[block_D[h]] = block_D[h], block_C[f]
                    added = True
                if consistent(f):
                    res = assign(k + 1)
                    if res is not None:
                        return res
                if added:
                    del bmap[block_C[f]]
                    del bused[block_D[h]]
                mor_map[f], used[h] = -1, False
            return None

        res = assign(0)
        return None if res is None else (tuple(obj_map), tuple(res))

    found = obj_search(0)
    return found, nodes


def schemoid_isomorphic_bruteforce(S: Schemoid, T: Schemoid, max_objects: int = 8) -> IsoSearch:
    """Exhaustive search for a block-preserving isomorphism of schemoids."""
    if S.n_blocks != T.n_blocks:
        if S.cat.n_objects > max_objects or T.cat.n_objects > max_objects:
            raise GuardError(f"isomorphism search limited to {max_objects} objects")
        return IsoSearch(None, 0)
    found, nodes = find_category_isomorphism(S.cat, T.cat, S.block_of, T.block_of, max_objects)
    if found is None:
        return IsoSearch(None, nodes)
    return IsoSearch(validate_morphism(S, T, *found), nodes)


def relabel_schemoid(S: Schemoid, obj_perm: Sequence[int], mor_perm: Sequence[int],
                     block_perm: Sequence[int] | None = None) -> Schemoid:
    """Apply index bijections (old index -> new index). Used by invariance tests."""
    cat = S.cat
    m = cat.n_morphisms
    src, tgt, block_of = [0] * m, [0] * m, [0] * m
    block_perm = block_perm or list(range(S.n_blocks))
    for f in cat.morphisms:
        src[mor_perm[f]] = obj_perm[cat.src[f]]
        tgt[mor_perm[f]] = obj_perm[cat.tgt[f]]
        block_of[mor_perm[f]] = block_perm[S.block_of[f]]
    identity = [0] * cat.n_objects
    for x in cat.objects:
        identity[obj_perm[x]] = mor_perm[cat.identity[x]]
    comp = {(mor_perm[g], mor_perm[f]): mor_perm[h] for (g, f), h in cat.comp.items()}
    return validate_schemoid(FinCat(cat.n_objects, src, tgt, identity, comp), block_of)
