"""Kan extensions along schemoid morphisms into tame schemoids.

Both extensions are computed over the quotient category ``[D]`` of the target
and pulled back to ``D`` along the projection, so they are constant on blocks.

Right extension: the end ``int_c M(c)^{[D]([d], [u c])}``, i.e. families
``x[c, a]`` in ``M(c)`` indexed by ``a: [d] -> [u c]`` with
``M(f) x[c, a] = x[c', [u f] a]`` for every ``f: c -> c'``.

Left extension: the coend ``int^c [D]([u c], [d]) . M(c)``, the quotient of
``sum_{c, a} M(c)`` by ``(c, a [u f], m) ~ (c', a, M(f) m)``.

With ``locally_constant=True`` (the default) the families are also required
to agree, and the summands identified, on objects ``c ~ c'`` whose identities
share a block. Without that identification the hom adjunction fails as soon
as an identity class of the source has more than one object.
"""

from __future__ import annotations

from dataclasses import dataclass

from .. import linalg as la
from ..core import NotTameError, SchemoidMorphism, identity_classes, quotient_category, tameness_report
from .reps import FunctorRep, RepError, lc_hom, restrict


@dataclass
class _Setup:
    Q: object  # quotient category of the target
    pu_obj: list[int]
    pu_mor: list[int]
    class_of_D: list[int]
    src_classes: list[list[int]]


def _setup(u: SchemoidMorphism) -> _Setup:
    D = u.target
    rep = tameness_report(D)
    if not rep.tame:
        raise NotTameError(rep)
    Q, proj = quotient_category(D)
    class_of_D, _ = identity_classes(D)
    pu_obj = [class_of_D[y] for y in u.obj_map]
    pu_mor = [proj[g] for g in u.mor_map]
    _, src_classes = identity_classes(u.source)
    return _Setup(Q, pu_obj, pu_mor, class_of_D, src_classes)


def _pull_back(u: SchemoidMorphism, st: _Setup, spaces_dim, act, F) -> FunctorRep:
    D = u.target
    dims = [spaces_dim[st.class_of_D[y]] for y in D.cat.objects]
    mats = [[list(r) for r in act[D.block_of[g]]] for g in D.cat.morphisms]
    return FunctorRep(D, F, dims, mats)


def kan_right(u: SchemoidMorphism, M: FunctorRep, locally_constant: bool = True) -> FunctorRep:
    st = _setup(u)
    C, Q, F = u.source.cat, st.Q, M.F
    # variables for class [d]: (c, a) pairs
    layouts = []
    spaces = []
    for d in Q.objects:
        index, off = {}, 0
        for c in C.objects:
            for a in Q.hom(d, st.pu_obj[c]):
                index[(c, a)] = off
                off += M.dims[c]
        rows = []
        for f in C.morphisms:
            c, c2 = C.src[f], C.tgt[f]
            for a in Q.hom(d, st.pu_obj[c]):
                a2 = Q.comp[(st.pu_mor[f], a)]
                o1, o2 = index[(c, a)], index[(c2, a2)]
                for i in range(M.dims[c2]):
                    row = [F.zero] * off
                    for j in range(M.dims[c]):
                        row[o1 + j] = F.add(row[o1 + j], M.mats[f][i][j])
                    row[o2 + i] = F.sub(row[o2 + i], F.one)
                    if any(row):
                        rows.append(row)
        if locally_constant:
            for cls in st.src_classes:
                c0 = cls[0]
                for c in cls[1:]:
                    for a in Q.hom(d, st.pu_obj[c]):
                        for i in range(M.dims[c]):
                            row = [F.zero] * off
                            row[index[(c0, a)] + i] = F.one
                            row[index[(c, a)] + i] = F.sub(row[index[(c, a)] + i], F.one)
                            if any(row):
                                rows.append(row)
        basis, free = la.nullspace(F, rows, off)
        layouts.append(index)
        spaces.append((basis, free, off))
    act = {}
    for beta in Q.morphisms:
        d, d2 = Q.src[beta], Q.tgt[beta]
        basis, _, _ = spaces[d]
        _, free2, off2 = spaces[d2]
        cols = []
        for x in basis:
            y = [F.zero] * off2
            for (c, a2), o2 in layouts[d2].items():
                o1 = layouts[d][(c, Q.comp[(a2, beta)])]
                for i in range(M.dims[c]):
                    y[o2 + i] = x[o1 + i]
            cols.append([y[j] for j in free2])
        act[beta] = la.transpose(cols, len(free2)) if cols else [[] for _ in free2]
    return _pull_back(u, st, [len(s[0]) for s in spaces], act, F)


def kan_left(u: SchemoidMorphism, M: FunctorRep, locally_constant: bool = True) -> FunctorRep:
    st = _setup(u)
    C, Q, F = u.source.cat, st.Q, M.F
    layouts = []
    quotients = []
    for d in Q.objects:
        index, off = {}, 0
        for c in C.objects:
            for a in Q.hom(st.pu_obj[c], d):
                index[(c, a)] = off
                off += M.dims[c]
        rels = []
        for f in C.morphisms:
            c, c2 = C.src[f], C.tgt[f]
            for a in Q.hom(st.pu_obj[c2], d):
                a1 = Q.comp[(a, st.pu_mor[f])]
                o1, o2 = index[(c, a1)], index[(c2, a)]
                for j in range(M.dims[c]):
                    v = [F.zero] * off
                    v[o1 + j] = F.one
                    for i in range(M.dims[c2]):
                        v[o2 + i] = F.sub(v[o2 + i], M.mats[f][i][j])
                    if any(v):
                        rels.append(v)
        if locally_constant:
            for cls in st.src_classes:
                c0 = cls[0]
                for c in cls[1:]:
                    for a in Q.hom(st.pu_obj[c], d):
                        for j in range(M.dims[c]):
                            v = [F.zero] * off
                            v[index[(c0, a)] + j] = F.one
                            v[index[(c, a)] + j] = F.sub(v[index[(c, a)] + j], F.one)
                            if any(v):
                                rels.append(v)
        R, piv = la.rref(F, rels, off)
        keep = [j for j in range(off) if j not in set(piv)]
        layouts.append(index)
        quotients.append((R, piv, keep, off))
    act = {}
    for beta in Q.morphisms:
        d, d2 = Q.src[beta], Q.tgt[beta]
        _, _, keep, _ = quotients[d]
        R2, piv2, keep2, off2 = quotients[d2]
        inv1 = {o: key for key, o in layouts[d].items()}
        cols = []
        for j in keep:
            # find the summand containing coordinate j
            base = max(o for o in inv1 if o <= j)
            c, a = inv1[base]
            y = [F.zero] * off2
            y[layouts[d2][(c, Q.comp[(beta, a)])] + (j - base)] = F.one
            y = la.reduce_vector(F, y, R2, piv2)
            cols.append([y[k] for k in keep2])
        act[beta] = la.transpose(cols, len(keep2)) if cols else [[] for _ in keep2]
    return _pull_back(u, st, [len(q[2]) for q in quotients], act, F)


@dataclass
class AdjunctionCheck:
    right_lhs: int  # dim lc_hom(u^* F, M)
    right_rhs: int  # dim lc_hom(F, Ran M)
    left_lhs: int   # dim lc_hom(Lan M, F)
    left_rhs: int   # dim lc_hom(M, u^* F)

    @property
    def ok(self) -> bool:
        return self.right_lhs == self.right_rhs and self.left_lhs == self.left_rhs


def adjunction_check(u: SchemoidMorphism, M: FunctorRep, Fr: FunctorRep,
                     locally_constant: bool = True) -> AdjunctionCheck:
    """Compare hom dimensions on both sides of both adjunctions.

    ``M`` lives on the source of ``u`` and ``Fr`` on its target.
    """
    if M.S.cat != u.source.cat or Fr.S.cat != u.target.cat:
        raise RepError("representations do not match the morphism")
    uF = restrict(u, Fr)
    ran = kan_right(u, M, locally_constant)
    lan = kan_left(u, M, locally_constant)
    return AdjunctionCheck(lc_hom(uF, M).dim, lc_hom(Fr, ran).dim,
                           lc_hom(lan, Fr).dim, lc_hom(M, uF).dim)
