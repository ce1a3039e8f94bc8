"""Modules over finite-dimensional algebras, free resolutions and Ext.

The Mitchell correspondence sends a representation of a tame schemoid to a
module over the category algebra of its quotient category; schemoid
cohomology is Ext over that algebra.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .. import linalg as la
from ..algebra import FDAlgebra, _radical, category_algebra
from ..core import NotTameError, Schemoid, SchemoidMorphism, identity_classes, quotient_category
from ..core import tameness_report
from ..fields import Field
from .kan import kan_right
from .reps import FunctorRep, RepError, check_rep, constant_rep


@dataclass
class AlgModule:
    """Left module: ``act[i]`` is the matrix of the basis element ``e_i``."""

    A: FDAlgebra
    dim: int
    act: list

    def apply(self, a, m):
        """Action of an algebra vector ``a`` on a module vector ``m``."""
        F = self.A.F
        out = [F.zero] * self.dim
        for i, c in enumerate(a):
            if c:
                v = la.matvec(F, self.act[i], m)
                out = [F.add(x, F.mul(c, y)) for x, y in zip(out, v)]
        return out


def module_violations(X: AlgModule) -> list[str]:
    A, F, n = X.A, X.A.F, X.dim
    errs = []
    for i in range(A.dim):
        for j in range(A.dim):
            lhs = la.matmul(F, X.act[i], X.act[j], n, n)
            rhs = la.zeros(F, n, n)
            for k, c in A.mult.get((i, j), {}).items():
                rhs = la.add(F, rhs, la.scale(F, c, X.act[k]))
            if lhs != rhs:
                errs.append(f"action does not respect e{i} e{j}")
                return errs
    if A.unit is not None:
        U = la.zeros(F, n, n)
        for k, c in enumerate(A.unit):
            if c:
                U = la.add(F, U, la.scale(F, c, X.act[k]))
        if U != la.identity(F, n):
            errs.append("unit does not act as the identity")
    return errs


def free_module(A: FDAlgebra, r: int) -> AlgModule:
    """``A^r``; coordinate ``slot * dim A + i`` is ``e_i`` in slot ``slot``."""
    F, n = A.F, A.dim
    out = []
    for i in range(n):
        L = A.left_matrix(A.basis(i))
        M = la.zeros(F, r * n, r * n)
        for s in range(r):
            for a in range(n):
                for b in range(n):
                    M[s * n + a][s * n + b] = L[a][b]
        out.append(M)
    return AlgModule(A, r * n, out)


def hom_A(X: AlgModule, Y: AlgModule):
    """Basis of ``Hom_A(X, Y)`` as ``dim Y x dim X`` matrices."""
    F = X.A.F
    m, n = X.dim, Y.dim
    rows = []
    for i in range(X.A.dim):
        # phi X_i - Y_i phi = 0, phi[r][c] at r * m + c
        for r in range(n):
            for c in range(m):
                row = [F.zero] * (n * m)
                for k in range(m):
                    if X.act[i][k][c]:
                        row[r * m + k] = F.add(row[r * m + k], X.act[i][k][c])
                for k in range(n):
                    if Y.act[i][r][k]:
                        row[k * m + c] = F.sub(row[k * m + c], Y.act[i][r][k])
                if any(row):
                    rows.append(row)
    basis, _ = la.nullspace(F, rows, n * m)
    return [[v[r * m:(r + 1) * m] for r in range(n)] for v in basis]


# ---------------------------------------------------------------- Mitchell correspondence


def mitchell_algebra(S: Schemoid, F: Field) -> FDAlgebra:
    Q, _ = quotient_category(S)
    return category_algebra(Q, F)


def mitchell(S: Schemoid, M: FunctorRep) -> AlgModule:
    """``theta(M)``: the sum of ``M`` over identity classes with blocks acting.

    The module lives over the category algebra of ``[C]`` whose basis is the
    blocks of ``S``.
    """
    rep = tameness_report(S)
    if not rep.tame:
        raise NotTameError(rep)
    check_rep(M)
    F = M.F
    A = mitchell_algebra(S, F)
    Q, _ = quotient_category(S)
    _, classes = identity_classes(S)
    dims = [M.dims[cl[0]] for cl in classes]
    offs = [sum(dims[:k]) for k in range(len(dims))]
    n = sum(dims)
    act = []
    for b in range(S.n_blocks):
        X = la.zeros(F, n, n)
        s, t = Q.src[b], Q.tgt[b]
        mat = M.mats[S.rep(b)]
        for i in range(dims[t]):
            for j in range(dims[s]):
                X[offs[t] + i][offs[s] + j] = mat[i][j]
        act.append(X)
    return AlgModule(A, n, act)


def eta(S: Schemoid, X: AlgModule) -> FunctorRep:
    """Inverse of :func:`mitchell`: ``[x] -> e_[id_x] X`` with blocks acting."""
    F = X.A.F
    Q, _ = quotient_category(S)
    class_of, _ = identity_classes(S)
    images = []
    for k in Q.objects:
        P = X.act[Q.identity[k]]
        R, piv = la.rref(F, la.transpose(P, X.dim), X.dim)
        images.append((R, piv))
    block_mats = {}
    for b in range(S.n_blocks):
        s, t = Q.src[b], Q.tgt[b]
        Rs, _ = images[s]
        _, pt = images[t]
        cols = []
        for v in Rs:
            w = la.matvec(F, X.act[b], v)
            cols.append([w[p] for p in pt])
        block_mats[b] = la.transpose(cols, len(pt)) if cols else [[] for _ in pt]
    dims = [len(images[class_of[x]][1]) for x in S.cat.objects]
    return FunctorRep.from_blocks(S, F, dims, block_mats)


# ---------------------------------------------------------------- resolutions


@dataclass
class Resolution:
    """``P_k = A^{ranks[k]}``; ``diffs[k]`` is ``P_{k+1} -> P_k`` and ``aug`` is ``P_0 -> M``."""

    A: FDAlgebra
    M: AlgModule
    ranks: list[int]
    aug: list
    diffs: list = field(default_factory=list)
    # generators of P_k as vectors of P_{k-1} (or of M for k = 0)
    gens: list = field(default_factory=list)

    def length(self) -> int:
        """Index of the last nonzero term if the resolution terminated, else -1."""
        if self.ranks and self.ranks[-1] == 0:
            return len(self.ranks) - 2
        return -1


def _submodule_span(X: AlgModule, vectors):
    F = X.A.F
    ims = [la.matvec(F, X.act[i], v) for v in vectors for i in range(X.A.dim)]
    return la.rref(F, ims, X.dim)


def _choose_generators(X: AlgModule, rad) -> list:
    """Module generators, lifted from a basis of ``X / J X`` when the radical is known."""
    F, n = X.A.F, X.dim
    if n == 0:
        return []
    start = []
    if rad is not None:
        start = [X.apply(j, v) for j in rad for v in la.identity(F, n)]
    R, piv = la.rref(F, start, n)
    cands = []
    for i in range(n):
        e = [F.zero] * n
        e[i] = F.one
        if not la.in_span(F, e, R, piv):
            cands.append(e)
            R, piv = la.rref(F, R + [e], n)
    gens: list = []
    span = ([], [])
    while len(span[1]) < n:
        remaining = [c for c in cands if not la.in_span(F, c, *span)]
        if not remaining:
            remaining = [e for e in la.identity(F, n) if not la.in_span(F, e, *span)]
        total = [F.zero] * n
        for c in remaining:
            total = [F.add(a, b) for a, b in zip(total, c)]
        best, best_rank = None, -1
        for c in [total] + remaining:
            r = len(_submodule_span(X, gens + [c])[1])
            if r > best_rank:
                best, best_rank = c, r
        gens.append(best)
        span = _submodule_span(X, gens)
    return gens


def _cover_matrix(X: AlgModule, gens):
    """Matrix of ``A^r -> X`` sending slot ``s`` basis ``e_i`` to ``e_i g_s``."""
    F, n = X.A.F, X.A.dim
    cols = []
    for g in gens:
        for i in range(n):
            cols.append(la.matvec(F, X.act[i], g))
    return la.transpose(cols, X.dim) if cols else [[] for _ in range(X.dim)]


def _kernel_module(X: AlgModule, Mat, ncols: int):
    """Kernel of ``Mat`` (from the free module with ``ncols`` coordinates) as a module."""
    F = X.A.F
    P = free_module(X.A, ncols // X.A.dim) if X.A.dim else None
    basis, free = la.nullspace(F, Mat, ncols)
    act = []
    for i in range(X.A.dim):
        cols = []
        for b in basis:
            w = la.matvec(F, P.act[i], b)
            cols.append([w[j] for j in free])
        act.append(la.transpose(cols, len(free)) if cols else [[] for _ in free])
    return AlgModule(X.A, len(basis), act), basis


def projective_resolution(A: FDAlgebra, M: AlgModule, length: int) -> Resolution:
    """Free resolution computed through ``P_length`` (stops early at a zero kernel)."""
    F = A.F
    rad = _radical(A)
    gens = _choose_generators(M, rad)
    aug = _cover_matrix(M, gens)
    res = Resolution(A, M, [len(gens)], aug, [], [gens])
    cur_mat, cur_cols = aug, len(gens) * A.dim
    for k in range(length):
        K, kb = _kernel_module(M, cur_mat, cur_cols)
        if K.dim == 0:
            res.ranks.append(0)
            break
        kg = _choose_generators(K, rad)
        # generators in the coordinates of P_k
        gvecs = []
        for g in kg:
            v = [F.zero] * cur_cols
            for c, b in zip(g, kb):
                if c:
                    v = [F.add(x, F.mul(c, y)) for x, y in zip(v, b)]
            gvecs.append(v)
        Pk = free_module(A, cur_cols // A.dim)
        D = _cover_matrix(Pk, gvecs)
        res.diffs.append(D)
        res.gens.append(gvecs)
        res.ranks.append(len(kg))
        cur_mat, cur_cols = D, len(kg) * A.dim
    return res


def check_resolution(res: Resolution) -> list[str]:
    """``d^2 = 0`` and exactness by rank arithmetic at each computed degree."""
    F, n = res.A.F, res.A.dim
    errs = []
    maps = [res.aug] + res.diffs
    dims_P = [r * n for r in res.ranks]
    if la.rank(F, res.aug, dims_P[0]) != res.M.dim:
        errs.append("augmentation is not surjective")
    for k in range(len(res.diffs)):
        comp = la.matmul(F, maps[k], maps[k + 1], dims_P[k], dims_P[k + 1])
        if not la.is_zero(comp):
            errs.append(f"d^2 != 0 at degree {k}")
        if la.rank(F, maps[k], dims_P[k]) + la.rank(F, maps[k + 1], dims_P[k + 1]) != dims_P[k]:
            errs.append(f"not exact at P_{k}")
    if res.ranks[-1] == 0 and len(res.ranks) >= 2:
        k = len(res.ranks) - 2
        if la.rank(F, maps[k], dims_P[k]) != dims_P[k]:
            errs.append(f"last map out of P_{k} is not injective")
    return errs


def _hom_cochain_matrix(N: AlgModule, D, r_src: int, r_tgt: int):
    """Matrix of ``Hom(P_k, N) -> Hom(P_{k+1}, N)`` in the ``N^r`` coordinates.

    ``D`` is ``P_{k+1} -> P_k`` with ``r_src`` = rank of ``P_{k+1}`` and
    ``r_tgt`` = rank of ``P_k``. A map out of ``A^r`` is determined by its
    values on the units of the slots, and ``e_a`` in slot ``k`` goes to
    ``e_a`` times the value at slot ``k``.
    """
    F, n, dN = N.A.F, N.A.dim, N.dim
    out = la.zeros(F, r_src * dN, r_tgt * dN)
    for j in range(r_src):
        vec = _image_of_generator(N.A, D, j)
        for k in range(r_tgt):
            for a in range(n):
                c = vec[k * n + a]
                if not c:
                    continue
                for row in range(dN):
                    for cc in range(dN):
                        x = N.act[a][row][cc]
                        if x:
                            out[j * dN + row][k * dN + cc] = F.add(out[j * dN + row][k * dN + cc], F.mul(c, x))
    return out


def _image_of_generator(A: FDAlgebra, D, j: int):
    """Column of ``D`` at the free generator of slot ``j`` (the unit in that slot)."""
    F, n = A.F, A.dim
    out = [F.zero] * len(D)
    for a, c in enumerate(A.unit):
        if c:
            for r in range(len(D)):
                if D[r][j * n + a]:
                    out[r] = F.add(out[r], F.mul(c, D[r][j * n + a]))
    return out


def ext_dims(A: FDAlgebra, M: AlgModule, N: AlgModule, n_max: int) -> list[int]:
    """``dim Ext^i_A(M, N)`` for ``0 <= i <= n_max`` from a free resolution of ``M``."""
    if A.unit is None:
        raise RepError("Ext needs a unital algebra")
    F = A.F
    res = projective_resolution(A, M, n_max + 1)
    ranks = list(res.ranks)
    while len(ranks) < n_max + 2:
        ranks.append(0)
    dN = N.dim
    cob_ranks = [0]  # rank of Hom(P_{k-1}) -> Hom(P_k); zero into degree 0
    for k in range(n_max + 1):
        if k < len(res.diffs):
            Dm = _hom_cochain_matrix(N, res.diffs[k], ranks[k + 1], ranks[k])
            cob_ranks.append(la.rank(F, Dm, ranks[k] * dN))
        else:
            cob_ranks.append(0)
    return [ranks[k] * dN - cob_ranks[k + 1] - cob_ranks[k] for k in range(n_max + 1)]


def module_from_rep_on_algebra(A: FDAlgebra, mats) -> AlgModule:
    n = len(mats[0]) if mats else 0
    return AlgModule(A, n, [[list(r) for r in m] for m in mats])


def trivial_module(A: FDAlgebra, values) -> AlgModule:
    """One-dimensional module with ``e_i`` acting by ``values[i]``."""
    return AlgModule(A, 1, [[[A.F(v)]] for v in values])


# ---------------------------------------------------------------- schemoid cohomology


def schemoid_cohomology(u: SchemoidMorphism, M: FunctorRep, n_max: int) -> list[int]:
    """``H^i(u; M) = Ext^i(theta(R), theta(Ran_u M))`` over the quotient algebra of the target."""
    D = u.target
    R = constant_rep(D, M.F, 1)
    ran = kan_right(u, M)
    A = mitchell_algebra(D, M.F)
    X, Y = mitchell(D, R), mitchell(D, ran)
    return ext_dims(A, X, Y, n_max)
