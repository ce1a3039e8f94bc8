"""Finite categories stored as explicit tables.

A :class:`FinCat` has objects ``0..n_objects-1`` and morphisms
``0..n_morphisms-1``; ``comp[(g, f)]`` is ``g o f`` and is present exactly for
the composable pairs (``src[g] == tgt[f]``).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping, Sequence


class CategoryError(ValueError):
    """Base class for malformed category data."""


class StructuralError(CategoryError):
    """Index out of range or inconsistent table shapes."""


class ComposabilityError(CategoryError):
    def __init__(self, g: int, f: int, msg: str | None = None):
        self.g, self.f = g, f
        super().__init__(msg or f"morphisms {g} and {f} are not composable")


@dataclass(frozen=True)
class FinCat:
    n_objects: int
    src: tuple[int, ...]
    tgt: tuple[int, ...]
    identity: tuple[int, ...]
    comp: Mapping[tuple[int, int], int]
    obj_labels: tuple[str, ...] | None = field(default=None, compare=False)
    mor_labels: tuple[str, ...] | None = field(default=None, compare=False)
    # arbitrary python payload per object (sets, words, ...), used by constructors
    obj_data: tuple | None = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "src", tuple(self.src))
        object.__setattr__(self, "tgt", tuple(self.tgt))
        object.__setattr__(self, "identity", tuple(self.identity))
        object.__setattr__(self, "comp", dict(self.comp))

    __hash__ = None  # type: ignore[assignment]

    @property
    def n_morphisms(self) -> int:
        return len(self.src)

    @property
    def objects(self) -> range:
        return range(self.n_objects)

    @property
    def morphisms(self) -> range:
        return range(len(self.src))

    def obj_label(self, x: int) -> str:
        return self.obj_labels[x] if self.obj_labels else str(x)

    def mor_label(self, f: int) -> str:
        return self.mor_labels[f] if self.mor_labels else str(f)

    def is_identity(self, f: int) -> bool:
        return self.identity[self.src[f]] == f

    def hom(self, x: int, y: int) -> list[int]:
        return self._homs().get((x, y), [])

    def _homs(self):
        cache = self.__dict__.get("_hom_cache")
        if cache is None:
            cache = {}
            for f in self.morphisms:
                cache.setdefault((self.src[f], self.tgt[f]), []).append(f)
            object.__setattr__(self, "_hom_cache", cache)
        return cache

    def out_of(self, x: int) -> list[int]:
        return [f for f in self.morphisms if self.src[f] == x]

    def into(self, x: int) -> list[int]:
        return [f for f in self.morphisms if self.tgt[f] == x]

    def composable_pairs(self):
        """Sorted ``(g, f, g o f)`` triples."""
        return sorted((g, f, h) for (g, f), h in self.comp.items())

    def compose(self, g: int, f: int) -> int:
        return compose(self, g, f)


@dataclass
class ValidationReport:
    structural: list[str] = field(default_factory=list)
    violations: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.structural and not self.violations

    def __bool__(self):
        return self.ok


def make_category(n_objects: int, morphisms: Sequence[tuple[int, int]], identity: Sequence[int],
                  compose_table, **labels) -> FinCat:
    """Build from ``(src, tgt)`` pairs and ``(g, f, gf)`` triples or a mapping."""
    if isinstance(compose_table, Mapping):
        comp = dict(compose_table)
    else:
        comp = {(g, f): h for g, f, h in compose_table}
    return FinCat(n_objects, [s for s, _ in morphisms], [t for _, t in morphisms], identity, comp, **labels)


def _structural_errors(C: FinCat) -> list[str]:
    errs = []
    n, m = C.n_objects, C.n_morphisms
    if n < 0:
        errs.append("negative object count")
    if len(C.tgt) != m:
        errs.append("src/tgt length mismatch")
        return errs
    for f in range(m):
        if not (0 <= C.src[f] < n and 0 <= C.tgt[f] < n):
            errs.append(f"morphism {f} has endpoint out of range")
    if len(C.identity) != n:
        errs.append(f"identity table has {len(C.identity)} entries for {n} objects")
    for x, i in enumerate(C.identity):
        if not 0 <= i < m:
            errs.append(f"identity of object {x} is out-of-range morphism {i}")
    for (g, f), h in C.comp.items():
        for v in (g, f, h):
            if not (isinstance(v, int) and 0 <= v < m):
                errs.append(f"compose entry ({g}, {f}) -> {h} has out-of-range index")
                break
    return errs


def validate_category(C: FinCat) -> ValidationReport:
    """Collect every structural problem and every violated category law."""
    rep = ValidationReport(structural=_structural_errors(C))
    if rep.structural:
        return rep
    v = rep.violations
    src, tgt, comp = C.src, C.tgt, C.comp
    for x in C.objects:
        i = C.identity[x]
        if src[i] != x or tgt[i] != x:
            v.append(f"identity {i} of object {x} is not an endomorphism of {x}")
    for (g, f), h in sorted(comp.items()):
        if src[g] != tgt[f]:
            v.append(f"compose lists non-composable pair ({g}, {f})")
        elif src[h] != src[f] or tgt[h] != tgt[g]:
            v.append(f"composite {g} o {f} = {h} has wrong endpoints")
    for g in C.morphisms:
        for f in C.morphisms:
            if src[g] == tgt[f] and (g, f) not in comp:
                v.append(f"composable pair ({g}, {f}) missing from compose")
    if v:
        return rep
    for f in C.morphisms:
        if comp[(C.identity[tgt[f]], f)] != f:
            v.append(f"left identity law fails for {f}")
        if comp[(f, C.identity[src[f]])] != f:
            v.append(f"right identity law fails for {f}")
    out: dict[int, list[int]] = {}
    for h in C.morphisms:
        out.setdefault(src[h], []).append(h)
    for (g, f), gf in sorted(comp.items()):
        for h in out.get(tgt[g], ()):
            if comp[(h, gf)] != comp[(comp[(h, g)], f)]:
                v.append(f"associativity fails for ({h}, {g}, {f})")
    return rep


def check_category(C: FinCat) -> FinCat:
    rep = validate_category(C)
    if rep.structural:
        raise StructuralError("; ".join(rep.structural))
    if rep.violations:
        raise CategoryError("; ".join(rep.violations[:5]))
    return C


def compose(C: FinCat, g: int, f: int) -> int:
    try:
        return C.comp[(g, f)]
    except KeyError:
        raise ComposabilityError(g, f) from None


def opposite(C: FinCat) -> FinCat:
    comp = {(f, g): h for (g, f), h in C.comp.items()}
    return FinCat(C.n_objects, C.tgt, C.src, C.identity, comp,
                  obj_labels=C.obj_labels, mor_labels=C.mor_labels, obj_data=C.obj_data)


def _pair_label(a: str, b: str) -> str:
    return f"({a},{b})"


def product_category(C: FinCat, D: FinCat) -> FinCat:
    """Object ``(a, b)`` has index ``a * |ob D| + b``; morphisms likewise."""
    nD, mD = D.n_objects, D.n_morphisms
    src, tgt = [], []
    for f in C.morphisms:
        for g in D.morphisms:
            src.append(C.src[f] * nD + D.src[g])
            tgt.append(C.tgt[f] * nD + D.tgt[g])
    identity = [C.identity[a] * mD + D.identity[b] for a in C.objects for b in D.objects]
    comp = {}
    for (g1, f1), h1 in C.comp.items():
        for (g2, f2), h2 in D.comp.items():
            comp[(g1 * mD + g2, f1 * mD + f2)] = h1 * mD + h2
    obj_labels = tuple(_pair_label(C.obj_label(a), D.obj_label(b)) for a in C.objects for b in D.objects)
    mor_labels = tuple(_pair_label(C.mor_label(f), D.mor_label(g)) for f in C.morphisms for g in D.morphisms)
    obj_data = None
    if C.obj_data is not None and D.obj_data is not None:
        obj_data = tuple((a, b) for a in C.obj_data for b in D.obj_data)
    return FinCat(C.n_objects * nD, src, tgt, identity, comp,
                  obj_labels=obj_labels, mor_labels=mor_labels, obj_data=obj_data)


def terminal_category() -> FinCat:
    return FinCat(1, [0], [0], [0], {(0, 0): 0}, obj_labels=("*",), mor_labels=("id*",))


def empty_category() -> FinCat:
    return FinCat(0, [], [], [], {})


def interval_category() -> FinCat:
    """Objects 0, 1; morphisms id0 = 0, id1 = 1, u = 2 : 0 -> 1."""
    comp = {(0, 0): 0, (1, 1): 1, (2, 0): 2, (1, 2): 2}
    return FinCat(2, [0, 1, 0], [0, 1, 1], [0, 1], comp,
                  obj_labels=("0", "1"), mor_labels=("id0", "id1", "u"))


def group_category(table: Sequence[Sequence[int]], labels: Sequence[str] | None = None) -> FinCat:
    """One-object category of a group; ``table[g][f]`` is ``g * f``, element 0 the unit."""
    n = len(table)
    comp = {(g, f): int(table[g][f]) for g in range(n) for f in range(n)}
    e = [g for g in range(n) if all(table[g][f] == f for f in range(n))]
    if not e:
        raise CategoryError("multiplication table has no identity")
    return FinCat(1, [0] * n, [0] * n, [e[0]], comp, obj_labels=("*",),
                  mor_labels=tuple(labels) if labels else None)


def poset_category(elements: Sequence, leq, labels: Sequence[str] | None = None) -> FinCat:
    """Thin category of a finite poset; morphisms ordered by (source, target)."""
    n = len(elements)
    arrows = [(i, j) for i in range(n) for j in range(n) if leq(elements[i], elements[j])]
    index = {a: k for k, a in enumerate(arrows)}
    identity = [index[(i, i)] for i in range(n)]
    comp = {}
    for (i, j), f in index.items():
        for k in range(n):
            g = index.get((j, k))
            if g is not None:
                comp[(g, f)] = index[(i, k)]
    return FinCat(n, [a for a, _ in arrows], [b for _, b in arrows], identity, comp,
                  obj_labels=tuple(labels) if labels else None, obj_data=tuple(elements))


def inverse_of(C: FinCat, f: int) -> int | None:
    for g in C.hom(C.tgt[f], C.src[f]):
        if C.comp[(g, f)] == C.identity[C.src[f]] and C.comp[(f, g)] == C.identity[C.tgt[f]]:
            return g
    return None


@dataclass(frozen=True)
class Functor:
    source: FinCat
    target: FinCat
    obj_map: tuple[int, ...]
    mor_map: tuple[int, ...]

    __hash__ = None  # type: ignore[assignment]


def functor_violation(source: FinCat, target: FinCat, obj_map, mor_map):
    """First reason ``(obj_map, mor_map)`` fails to be a functor, or ``None``."""
    if len(obj_map) != source.n_objects or len(mor_map) != source.n_morphisms:
        return ("shape", None, None, "object/morphism map has wrong length")
    for x in source.objects:
        if not 0 <= obj_map[x] < target.n_objects:
            return ("range", x, None, f"object {x} maps out of range")
    for f in source.morphisms:
        h = mor_map[f]
        if not 0 <= h < target.n_morphisms:
            return ("range", f, None, f"morphism {f} maps out of range")
        if target.src[h] != obj_map[source.src[f]] or target.tgt[h] != obj_map[source.tgt[f]]:
            return ("endpoints", f, None, f"morphism {f} maps to {h} with mismatched endpoints")
    for x in source.objects:
        if mor_map[source.identity[x]] != target.identity[obj_map[x]]:
            return ("identity", source.identity[x], None, f"identity of object {x} not preserved")
    for (g, f), h in sorted(source.comp.items()):
        if target.comp[(mor_map[g], mor_map[f])] != mor_map[h]:
            return ("composition", g, f, f"composition of ({g}, {f}) not preserved")
    return None


def compose_functors(G: Functor, F: Functor) -> Functor:
    return Functor(F.source, G.target,
                   tuple(G.obj_map[x] for x in F.obj_map),
                   tuple(G.mor_map[f] for f in F.mor_map))


def identity_functor(C: FinCat) -> Functor:
    return Functor(C, C, tuple(C.objects), tuple(C.morphisms))


def projections(C: FinCat, D: FinCat) -> tuple[Functor, Functor]:
    """The two projection functors out of ``product_category(C, D)``."""
    P = product_category(C, D)
    nD, mD = D.n_objects, D.n_morphisms
    p1 = Functor(P, C, tuple(x // nD for x in P.objects), tuple(f // mD for f in P.morphisms))
    p2 = Functor(P, D, tuple(x % nD for x in P.objects), tuple(f % mD for f in P.morphisms))
    return p1, p2


def thin_functor(source: FinCat, target: FinCat, obj_map) -> tuple[int, ...]:
    """Morphism map induced by an object map into a thin category.

    Raises :class:`CategoryError` if some arrow has no image.
    """
    mor_map = []
    for f in source.morphisms:
        hs = target.hom(obj_map[source.src[f]], obj_map[source.tgt[f]])
        if not hs:
            raise CategoryError(f"no morphism for the image of {source.mor_label(f)}")
        mor_map.append(hs[0])
    return tuple(mor_map)


