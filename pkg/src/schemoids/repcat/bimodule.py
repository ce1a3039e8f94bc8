"""Functors induced by a representation ``U`` of ``C1^op x C2``.

``(F (x) U)(a)`` is the coequalizer of
``sum_{p: d -> d'} F(d) (x) U(d', a)  =>  sum_d F(d) (x) U(d, a)``
with the maps ``x (x) y -> F(p) x (x) y`` and ``x (x) y -> x (x) U(p, a) y``,
and summands over objects with equivalent identities identified.
``hom_U(G)(b)`` is the space of locally constant maps ``U(b, -) -> G``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .. import linalg as la
from ..core import Schemoid, identity_classes, opposite_schemoid, product_schemoid, quotient_category
from ..fields import Field
from .reps import FunctorRep, RepError, check_rep, lc_hom


def bimodule_schemoid(S1: Schemoid, S2: Schemoid) -> Schemoid:
    return product_schemoid(opposite_schemoid(S1), S2)


def _slot(U: FunctorRep, S1: Schemoid, S2: Schemoid):
    n2, m2 = S2.cat.n_objects, S2.cat.n_morphisms

    def obj(d, a):
        return d * n2 + a

    def mor(p, g):
        return p * m2 + g

    return obj, mor


def slice_rep(U: FunctorRep, S1: Schemoid, S2: Schemoid, b: int) -> FunctorRep:
    """``U(b, -)`` as a representation of ``S2``."""
    obj, mor = _slot(U, S1, S2)
    idb = S1.cat.identity[b]
    dims = [U.dims[obj(b, a)] for a in S2.cat.objects]
    mats = [U.mats[mor(idb, g)] for g in S2.cat.morphisms]
    return FunctorRep(S2, U.F, dims, mats)


def tensor(Fr: FunctorRep, U: FunctorRep, S1: Schemoid, S2: Schemoid,
           locally_constant: bool = True) -> FunctorRep:
    """``F (x)_{C1} U`` as a representation of ``S2``."""
    F = U.F
    C1, C2 = S1.cat, S2.cat
    obj, mor = _slot(U, S1, S2)
    _, classes1 = identity_classes(S1)
    spaces = []
    for a in C2.objects:
        index, owner, off = {}, [], 0
        for d in C1.objects:
            index[d] = off
            off += Fr.dims[d] * U.dims[obj(d, a)]
            owner.extend([d] * (off - index[d]))
        rels = []
        for p in C1.morphisms:
            d, d2 = C1.src[p], C1.tgt[p]
            fd, fd2 = Fr.dims[d], Fr.dims[d2]
            ud, ud2 = U.dims[obj(d, a)], U.dims[obj(d2, a)]
            Fp = Fr.mats[p]
            # U(p, id_a): U(d2, a) -> U(d, a) (first slot contravariant)
            Up = U.mats[mor(p, C2.identity[a])]
            for x in range(fd):
                for y in range(ud2):
                    v = [F.zero] * off
                    for x2 in range(fd2):
                        c = Fp[x2][x]
                        if c:
                            k = index[d2] + x2 * ud2 + y
                            v[k] = F.add(v[k], c)
                    for y2 in range(ud):
                        c = Up[y2][y]
                        if c:
                            k = index[d] + x * ud + y2
                            v[k] = F.sub(v[k], c)
                    if any(v):
                        rels.append(v)
        if locally_constant:
            for cls in classes1:
                for d in cls[1:]:
                    for k in range(Fr.dims[d] * U.dims[obj(d, a)]):
                        v = [F.zero] * off
                        v[index[cls[0]] + k] = F.one
                        v[index[d] + k] = F.sub(v[index[d] + k], F.one)
                        rels.append(v)
        R, piv = la.rref(F, rels, off)
        keep = [j for j in range(off) if j not in set(piv)]
        spaces.append((index, owner, off, R, piv, keep))
    mats = []
    for g in C2.morphisms:
        a, a2 = C2.src[g], C2.tgt[g]
        index, owner, _, _, _, keep = spaces[a]
        index2, _, off2, R2, piv2, keep2 = spaces[a2]
        cols = []
        for j in keep:
            d = owner[j]
            ud = U.dims[obj(d, a)]
            ud2 = U.dims[obj(d, a2)]
            x, y = divmod(j - index[d], ud)
            Ug = U.mats[mor(C1.identity[d], g)]
            w = [F.zero] * off2
            for y2 in range(ud2):
                c = Ug[y2][y]
                if c:
                    w[index2[d] + x * ud2 + y2] = c
            w = la.reduce_vector(F, w, R2, piv2)
            cols.append([w[k] for k in keep2])
        mats.append(la.transpose(cols, len(keep2)) if cols else [[] for _ in keep2])
    dims = [len(spaces[a][5]) for a in C2.objects]
    return FunctorRep(S2, F, dims, mats)


def hom_functor(U: FunctorRep, G: FunctorRep, S1: Schemoid, S2: Schemoid) -> FunctorRep:
    """``b -> lc_hom(U(b, -), G)`` as a representation of ``S1``."""
    F = U.F
    C1, C2 = S1.cat, S2.cat
    obj, mor = _slot(U, S1, S2)
    homs = [lc_hom(slice_rep(U, S1, S2, b), G) for b in C1.objects]
    mats = []
    for p in C1.morphisms:
        b, b2 = C1.src[p], C1.tgt[p]
        H, H2 = homs[b], homs[b2]
        cols = []
        for eta in H.basis:
            # (p_* eta)_a = eta_a U(p, a): U(b2, a) -> U(b, a) -> G(a)
            comps = {}
            for a in C2.objects:
                Up = U.mats[mor(p, C2.identity[a])]
                comps[a] = la.matmul(F, eta[a], Up, U.dims[obj(b, a)], U.dims[obj(b2, a)])
            coords = H2.coordinates(comps)
            if coords is None:
                raise RepError("transported map is not locally constant natural")
            cols.append(coords)
        mats.append(la.transpose(cols, H2.dim) if cols else [[] for _ in range(H2.dim)])
    return FunctorRep(S1, F, [h.dim for h in homs], mats)


@dataclass
class BimoduleResult:
    tensor: FunctorRep
    hom: FunctorRep
    lhs: int  # dim lc_hom(F (x) U, G)
    rhs: int  # dim lc_hom(F, hom_U(G))

    @property
    def adjunction_ok(self) -> bool:
        return self.lhs == self.rhs


def bimodule_functors(U: FunctorRep, Fr: FunctorRep, G: FunctorRep, S1: Schemoid, S2: Schemoid,
                      locally_constant: bool = True) -> BimoduleResult:
    if U.S.cat != bimodule_schemoid(S1, S2).cat:
        raise RepError("U must be a representation of C1^op x C2")
    if Fr.S.cat != S1.cat or G.S.cat != S2.cat:
        raise RepError("F must live on C1 and G on C2")
    T = tensor(Fr, U, S1, S2, locally_constant)
    check_rep(T)
    Hm = hom_functor(U, G, S1, S2)
    check_rep(Hm)
    return BimoduleResult(T, Hm, lc_hom(T, G).dim, lc_hom(Fr, Hm).dim)


def regular_bimodule(S: Schemoid, F: Field) -> FunctorRep:
    """``U(d, a)`` = span of blocks ``[d] -> [a]``; ``U(p, g) s = [g] s [p]``."""
    Q, proj = quotient_category(S)
    class_of, _ = identity_classes(S)
    B = bimodule_schemoid(S, S)
    C = S.cat
    homs = {(c1, c2): Q.hom(c1, c2) for c1 in Q.objects for c2 in Q.objects}
    dims = [len(homs[(class_of[d], class_of[a])]) for d in C.objects for a in C.objects]
    mats = []
    for p in C.morphisms:
        for g in C.morphisms:
            # (p, g): (t p, s g) -> (s p, t g)
            d2, d = C.tgt[p], C.src[p]
            a, a2 = C.src[g], C.tgt[g]
            src_basis = homs[(class_of[d2], class_of[a])]
            tgt_basis = homs[(class_of[d], class_of[a2])]
            pos = {s: i for i, s in enumerate(tgt_basis)}
            M = la.zeros(F, len(tgt_basis), len(src_basis))
            for j, s in enumerate(src_basis):
                img = Q.comp[(proj[g], Q.comp[(s, proj[p])])]
                M[pos[img]][j] = F.one
            mats.append(M)
    return FunctorRep(B, F, dims, mats)
