"""Explicit checks of a Morita-type witness ``u: D -> C``, ``v: C -> D``.

The four clauses:

1. ``v o u`` is the identity functor on the nose;
2. ``u^* v^* N == N`` for every enumerated representation ``N`` of ``D``;
3. the identity family ``v^* u^* M -> M`` is a locally constant natural
   isomorphism for every enumerated ``M`` on ``C``;
4. ``u^*`` and ``v^*`` carry locally constant transformations to locally
   constant transformations (checked on hom bases of enumerated pairs).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .. import linalg as la
from ..constructors import cyclic_table, group_schemoid, sign_morphism, word_inclusion
from ..core import SchemoidMorphism, validate_morphism
from ..fields import Field
from .reps import enumerate_functor_reps, is_natural, lc_hom, restrict


@dataclass
class MoritaReport:
    clauses: dict = field(default_factory=dict)
    witnesses: dict = field(default_factory=dict)
    counts: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(self.clauses.values())


def _restrict_family(u: SchemoidMorphism, comps):
    return {x: comps[u.obj_map[x]] for x in u.source.cat.objects}


def _carries(w: SchemoidMorphism, reps, max_pairs: int):
    """Check clause 4 for ``w^*`` on pairs of representations of ``w.target``."""
    n = 0
    for M in reps:
        for N in reps:
            if n >= max_pairs:
                return None, n
            n += 1
            H = lc_hom(M, N)
            wM, wN = restrict(w, M), restrict(w, N)
            for eta in H.basis:
                bad = is_natural(wM, wN, _restrict_family(w, eta))
                if bad is not None:
                    return dict(source_dims=list(M.dims), target_dims=list(N.dims), failure=bad), n
    return None, n


def morita_witness_check(u: SchemoidMorphism, v: SchemoidMorphism, F: Field, dim_bound: int,
                         max_pairs: int = 400) -> MoritaReport:
    rep = MoritaReport()
    C, D = v.source, u.source
    # clause 1
    ok1, w1 = True, None
    vu_obj = [v.obj_map[y] for y in u.obj_map]
    vu_mor = [v.mor_map[g] for g in u.mor_map]
    if v.target.cat != D.cat or u.target.cat != C.cat:
        ok1, w1 = False, dict(problem="u and v are not composable both ways")
    else:
        for y in D.cat.objects:
            if vu_obj[y] != y:
                ok1, w1 = False, dict(object=y, image=vu_obj[y])
                break
        if ok1:
            for g in D.cat.morphisms:
                if vu_mor[g] != g:
                    ok1, w1 = False, dict(morphism=g, image=vu_mor[g])
                    break
    rep.clauses["v o u = 1"] = ok1
    if w1:
        rep.witnesses["v o u = 1"] = w1

    reps_D = enumerate_functor_reps(D, F, dim_bound)
    reps_C = enumerate_functor_reps(C, F, dim_bound)
    rep.counts = {"source reps": len(reps_D), "target reps": len(reps_C)}

    # clause 2
    ok2, w2 = True, None
    for N in reps_D:
        back = restrict(u, restrict(v, N))
        if not back.same_as(N):
            ok2, w2 = False, dict(dims=list(N.dims), block_mats={str(b): m for b, m in N.block_mats().items()})
            break
    rep.clauses["u* v* = 1"] = ok2
    if w2:
        rep.witnesses["u* v* = 1"] = w2

    # clause 3
    uv = SchemoidMorphism(C, C, tuple(u.obj_map[v.obj_map[x]] for x in C.cat.objects),
                          tuple(u.mor_map[v.mor_map[f]] for f in C.cat.morphisms),
                          tuple(u.block_map[v.block_map[b]] for b in range(C.n_blocks)))
    ok3, w3 = True, None
    for M in reps_C:
        back = restrict(uv, M)
        if back.dims != M.dims:
            ok3, w3 = False, dict(dims=list(M.dims), problem="dimensions differ")
            break
        comps = {x: la.identity(F, M.dims[x]) for x in C.cat.objects}
        bad = is_natural(back, M, comps)
        if bad is not None:
            ok3, w3 = False, dict(dims=list(M.dims), failure=bad)
            break
    rep.clauses["theta natural iso"] = ok3
    if w3:
        rep.witnesses["theta natural iso"] = w3

    # clause 4
    w4u, nu = _carries(u, reps_C, max_pairs)
    w4v, nv = _carries(v, reps_D, max_pairs)
    rep.clauses["u*, v* preserve lc maps"] = w4u is None and w4v is None
    if w4u or w4v:
        rep.witnesses["u*, v* preserve lc maps"] = w4u or w4v
    rep.counts["pairs checked"] = nu + nv
    return rep


def swap_automorphism() -> SchemoidMorphism:
    """Exchange the two objects of the Z/2 groupoid schemoid (and alpha with its inverse)."""
    Z = group_schemoid(cyclic_table(2))
    # (k, l) has index 2k + l
    mor = [2 * (1 - f // 2) + (1 - f % 2) for f in Z.cat.morphisms]
    return validate_morphism(Z, Z, [1, 0], mor)


def hamming_witness(n: int, perturb: bool = False):
    """``(u, v)`` between the Z/2 groupoid schemoid and the Hamming schemoid ``H(n, 2)``.

    With ``perturb`` the map ``v`` is followed by the object swap of the
    Z/2 schemoid, so ``v o u`` is no longer the identity.
    """
    u, v = word_inclusion(n), sign_morphism(n)
    if perturb:
        s = swap_automorphism()
        v = validate_morphism(v.source, v.target,
                              [s.obj_map[y] for y in v.obj_map], [s.mor_map[g] for g in v.mor_map])
    return u, v
