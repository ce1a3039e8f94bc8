"""Representations of schemoids in finite-dimensional vector spaces."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product as iproduct
from typing import Sequence

from .. import linalg as la
from ..core import GuardError, Schemoid, SchemoidError, SchemoidMorphism, identity_classes
from ..fields import Field


class RepError(SchemoidError):
    def __init__(self, msg, witness=None):
        self.witness = witness
        super().__init__(msg)


@dataclass
class FunctorRep:
    """``dims[x]`` per object, ``mats[f]`` (dim t(f) x dim s(f)) per morphism."""

    S: Schemoid
    F: Field
    dims: tuple[int, ...]
    mats: list

    def __post_init__(self):
        self.dims = tuple(self.dims)

    @classmethod
    def from_blocks(cls, S: Schemoid, F: Field, dims, block_mats) -> "FunctorRep":
        """Expand one matrix per block to every member of the block.

        ``block_mats`` may omit identity-only blocks, which default to identities.
        """
        mats = []
        for f in S.cat.morphisms:
            b = S.block_of[f]
            if b in block_mats:
                mats.append([[F(x) for x in row] for row in block_mats[b]])
            elif S.cat.is_identity(f):
                mats.append(la.identity(F, dims[S.cat.src[f]]))
            else:
                raise RepError(f"no matrix given for block {S.block_label(b)}")
        return cls(S, F, dims, mats)

    def block_mats(self) -> dict[int, list]:
        return {b: self.mats[self.S.rep(b)] for b in range(self.S.n_blocks)}

    def total_dim(self) -> int:
        return sum(self.dims)

    def same_as(self, other: "FunctorRep") -> bool:
        return self.dims == other.dims and self.mats == other.mats and self.F == other.F


@dataclass
class RepReport:
    errors: list[dict] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.errors

    def first(self) -> str:
        return self.errors[0]["message"] if self.errors else "ok"


def _shape_ok(m, rows, cols) -> bool:
    return len(m) == rows and all(len(r) == cols for r in m)


def validate_functor_rep(M: FunctorRep) -> RepReport:
    """Shapes, block constancy, identities and composition."""
    S, F = M.S, M.F
    cat = S.cat
    rep = RepReport()
    if len(M.dims) != cat.n_objects or len(M.mats) != cat.n_morphisms:
        rep.errors.append(dict(kind="shape", message="dims or matrices have the wrong count"))
        return rep
    for f in cat.morphisms:
        if not _shape_ok(M.mats[f], M.dims[cat.tgt[f]], M.dims[cat.src[f]]):
            rep.errors.append(dict(kind="shape", morphism=f,
                                   message=f"matrix of {cat.mor_label(f)} has the wrong shape"))
            return rep
    for b, members in enumerate(S.blocks):
        f0 = members[0]
        for g in members[1:]:
            if M.mats[g] != M.mats[f0] or M.dims[cat.src[g]] != M.dims[cat.src[f0]] \
                    or M.dims[cat.tgt[g]] != M.dims[cat.tgt[f0]]:
                rep.errors.append(dict(kind="block", block=b, morphisms=[f0, g],
                                       message=f"block {S.block_label(b)}: {cat.mor_label(f0)} and "
                                               f"{cat.mor_label(g)} get different matrices"))
                break
    for x in cat.objects:
        if M.mats[cat.identity[x]] != la.identity(F, M.dims[x]):
            rep.errors.append(dict(kind="identity", object=x,
                                   message=f"identity of {cat.obj_label(x)} is not the identity matrix"))
            break
    for (g, f), h in sorted(cat.comp.items()):
        prod = la.matmul(F, M.mats[g], M.mats[f], M.dims[cat.tgt[f]], M.dims[cat.src[f]])
        if prod != M.mats[h]:
            rep.errors.append(dict(kind="composition", morphisms=[g, f],
                                   message=f"M({cat.mor_label(g)}) M({cat.mor_label(f)}) != "
                                           f"M({cat.mor_label(h)})"))
            break
    return rep


def check_rep(M: FunctorRep) -> FunctorRep:
    r = validate_functor_rep(M)
    if not r.ok:
        raise RepError(r.first(), r.errors[0])
    return M


def constant_rep(S: Schemoid, F: Field, d: int = 1) -> FunctorRep:
    I = la.identity(F, d)
    return FunctorRep(S, F, [d] * S.cat.n_objects, [[list(r) for r in I] for _ in S.cat.morphisms])


def zero_rep(S: Schemoid, F: Field) -> FunctorRep:
    return FunctorRep(S, F, [0] * S.cat.n_objects, [[] for _ in S.cat.morphisms])


def restrict(u: SchemoidMorphism, N: FunctorRep) -> FunctorRep:
    """``u^* N``: ``x -> N(u x)``, ``f -> N(u f)``."""
    if N.S.cat != u.target.cat:
        raise RepError("representation does not live on the target of the morphism")
    dims = [N.dims[y] for y in u.obj_map]
    mats = [[list(r) for r in N.mats[g]] for g in u.mor_map]
    return FunctorRep(u.source, N.F, dims, mats)


# ---------------------------------------------------------------- natural transformations


@dataclass
class HomSpace:
    """Solutions of the naturality system.

    ``groups[x]`` says which variable block object ``x`` uses; each element of
    ``basis`` is a dict ``object -> matrix``. Coordinates of a solution vector
    in this basis are its entries at ``free``.
    """

    source: FunctorRep
    target: FunctorRep
    groups: list[int]
    offsets: list[int]
    n_vars: int
    vectors: list[list]
    free: list[int]
    R: list = field(default_factory=list, repr=False)
    pivots: list = field(default_factory=list, repr=False)

    @property
    def dim(self) -> int:
        return len(self.vectors)

    def components(self, vec) -> dict[int, list]:
        M, N = self.source, self.target
        out = {}
        for x in M.S.cat.objects:
            off = self.offsets[self.groups[x]]
            m, n = M.dims[x], N.dims[x]
            out[x] = [[vec[off + i * m + j] for j in range(m)] for i in range(n)]
        return out

    @property
    def basis(self) -> list[dict[int, list]]:
        return [self.components(v) for v in self.vectors]

    def vector_of(self, comps: dict[int, list]) -> list | None:
        """Flatten a family; None if objects sharing variables get different components."""
        M = self.source
        vec = [M.F.zero] * self.n_vars
        seen = {}
        for x in M.S.cat.objects:
            g = self.groups[x]
            if g in seen:
                if comps[x] != comps[seen[g]]:
                    return None
                continue
            seen[g] = x
            off = self.offsets[g]
            m = M.dims[x]
            for i, row in enumerate(comps[x]):
                for j, v in enumerate(row):
                    vec[off + i * m + j] = v
        return vec

    def coordinates(self, comps: dict[int, list]):
        """Coordinates of a family in the basis, or None if it is not in the space."""
        vec = self.vector_of(comps)
        if vec is None or any(la.reduce_vector(self.source.F, vec, self.R, self.pivots)):
            return None
        return [vec[j] for j in self.free]


def _hom_system(M: FunctorRep, N: FunctorRep, groups: list[int]):
    if M.S.cat != N.S.cat or M.F != N.F:
        raise RepError("representations live on different schemoids or fields")
    cat, F = M.S.cat, M.F
    ng = 1 + max(groups, default=-1)
    offsets, shapes = [0] * ng, [None] * ng
    for x in cat.objects:
        g = groups[x]
        shape = (N.dims[x], M.dims[x])
        if shapes[g] is None:
            shapes[g] = shape
        elif shapes[g] != shape:
            raise RepError(f"objects sharing an identity class have different dimensions (object {x})")
    total = 0
    for g in range(ng):
        offsets[g] = total
        total += shapes[g][0] * shapes[g][1] if shapes[g] else 0
    rows = []
    seen = set()
    for f in cat.morphisms:
        x, y = cat.src[f], cat.tgt[f]
        key = (M.S.block_of[f], groups[x], groups[y])
        if key in seen:
            # same block and same variable groups give the same equations
            continue
        seen.add(key)
        Mf, Nf = M.mats[f], N.mats[f]
        mx, nx, my, ny = M.dims[x], N.dims[x], M.dims[y], N.dims[y]
        ox, oy = offsets[groups[x]], offsets[groups[y]]
        for i in range(ny):
            for j in range(mx):
                row = [F.zero] * total
                # (N(f) eta_x)[i][j]
                for k in range(nx):
                    c = Nf[i][k]
                    if c:
                        row[ox + k * mx + j] = F.add(row[ox + k * mx + j], c)
                # - (eta_y M(f))[i][j]
                for k in range(my):
                    c = Mf[k][j]
                    if c:
                        row[oy + i * my + k] = F.sub(row[oy + i * my + k], c)
                if any(row):
                    rows.append(row)
    return rows, offsets, total


def _solve_hom(M, N, groups) -> HomSpace:
    rows, offsets, total = _hom_system(M, N, groups)
    vectors, free = la.nullspace(M.F, rows, total)
    R, pivots = la.rref(M.F, vectors, total)
    return HomSpace(M, N, groups, offsets, total, vectors, free, R, pivots)


def lc_hom(M: FunctorRep, N: FunctorRep) -> HomSpace:
    """Locally constant natural transformations ``M -> N``."""
    class_of, _ = identity_classes(M.S)
    return _solve_hom(M, N, list(class_of))


def nat_hom(M: FunctorRep, N: FunctorRep) -> HomSpace:
    """All natural transformations ``M -> N`` of the underlying functors."""
    return _solve_hom(M, N, list(M.S.cat.objects))


def is_natural(M: FunctorRep, N: FunctorRep, comps: dict[int, list], locally_constant=True):
    """First failing morphism or object for a family of components, else None."""
    cat, F = M.S.cat, M.F
    for f in cat.morphisms:
        x, y = cat.src[f], cat.tgt[f]
        lhs = la.matmul(F, N.mats[f], comps[x], N.dims[x], M.dims[x])
        rhs = la.matmul(F, comps[y], M.mats[f], M.dims[y], M.dims[x])
        if lhs != rhs:
            return ("naturality", f)
    if locally_constant:
        class_of, _ = identity_classes(M.S)
        first = {}
        for x in cat.objects:
            c = class_of[x]
            if c in first and comps[first[c]] != comps[x]:
                return ("locally constant", x)
            first.setdefault(c, x)
    return None


def find_isomorphism(M: FunctorRep, N: FunctorRep, tries: int = 16):
    """An invertible locally constant transformation ``M -> N`` or None.

    Deterministic: combinations of the hom basis with small fixed coefficients
    are tried (all of them over a small prime field).
    """
    if M.dims != N.dims:
        return None
    H = lc_hom(M, N)
    F = M.F
    if H.dim == 0:
        return None if M.total_dim() else {x: [] for x in M.S.cat.objects}
    if F.p and F.p ** H.dim <= 4096:
        combos = (list(c) for c in iproduct(range(F.p), repeat=H.dim))
    else:
        combos = ([F(((t + 1) * (i + 2) ** 2 + i) % (F.p or 97) + 1) for i in range(H.dim)] for t in range(tries))
    for coeffs in combos:
        vec = [F.zero] * H.n_vars
        for c, v in zip(coeffs, H.vectors):
            if c:
                vec = [F.add(a, F.mul(c, b)) for a, b in zip(vec, v)]
        comps = H.components(vec)
        if all(la.rank(F, comps[x], M.dims[x]) == M.dims[x] for x in M.S.cat.objects):
            return comps
    return None


# ---------------------------------------------------------------- enumeration


def dimension_classes(S: Schemoid) -> list[int]:
    """Union-find classes of objects forced to equal dimension by block constancy."""
    cat = S.cat
    parent = list(cat.objects)

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for members in S.blocks:
        f0 = members[0]
        for g in members[1:]:
            parent[find(cat.src[g])] = find(cat.src[f0])
            parent[find(cat.tgt[g])] = find(cat.tgt[f0])
    roots = {}
    out = []
    for x in cat.objects:
        r = find(x)
        out.append(roots.setdefault(r, len(roots)))
    return out


def enumerate_functor_reps(S: Schemoid, F: Field, dim_bound: int, max_candidates: int = 10 ** 6,
                           max_p: int = 3) -> list[FunctorRep]:
    """Every representation with all dimensions ``<= dim_bound`` over a small prime field.

    Dimension vectors are visited in lexicographic order of the dimension
    classes; block matrices in row-major lexicographic order of entries.
    """
    if not F.p or F.p > max_p:
        raise GuardError(f"enumeration needs a prime field with p <= {max_p}")
    cat = S.cat
    dclass = dimension_classes(S)
    ncls = 1 + max(dclass, default=-1)
    ids = set(cat.identity)
    forced = [any(f in ids for f in members) for members in S.blocks]
    # composition constraints between blocks: mat(s) mat(t) = mat(m)
    constraints = sorted({(S.block_of[g], S.block_of[f], S.block_of[h]) for (g, f), h in cat.comp.items()})
    free_blocks = [b for b in range(S.n_blocks) if not forced[b]]
    order = {b: i for i, b in enumerate(free_blocks)}
    # a constraint is checked once its last free block is assigned
    check_at: dict[int, list] = {i: [] for i in range(len(free_blocks))}
    initial = []
    for c in constraints:
        pos = [order[b] for b in c if b in order]
        (check_at[max(pos)] if pos else initial).append(c)

    out = []
    for dvec in iproduct(range(dim_bound + 1), repeat=ncls):
        dims = [dvec[dclass[x]] for x in cat.objects]
        shapes = [(dims[cat.tgt[S.rep(b)]], dims[cat.src[S.rep(b)]]) for b in range(S.n_blocks)]
        total = 1
        for b in free_blocks:
            total *= F.p ** (shapes[b][0] * shapes[b][1])
        if total > max_candidates:
            raise GuardError(f"dimension vector {list(dvec)} needs {total} candidates; limit {max_candidates}")
        mats: dict[int, list] = {}
        ok = True
        for b in range(S.n_blocks):
            if forced[b]:
                r, c = shapes[b]
                if r != c:
                    ok = False
                    break
                mats[b] = la.identity(F, r)
        if not ok:
            continue

        def holds(c):
            s, t, m = c
            inner = dims[cat.src[S.rep(s)]]
            return la.matmul(F, mats[s], mats[t], inner, shapes[t][1]) == mats[m]

        if not all(holds(c) for c in initial):
            continue

        def assign(i):
            if i == len(free_blocks):
                out.append(FunctorRep.from_blocks(S, F, dims, {b: [list(r) for r in m] for b, m in mats.items()}))
                return
            b = free_blocks[i]
            r, c = shapes[b]
            for entries in iproduct(range(F.p), repeat=r * c):
                mats[b] = [list(entries[k * c:(k + 1) * c]) for k in range(r)]
                if all(holds(cn) for cn in check_at[i]):
                    assign(i + 1)
            del mats[b]

        assign(0)
    return out


def rep_from_blocks(S: Schemoid, F: Field, dims: Sequence[int], block_mats: dict) -> FunctorRep:
    return check_rep(FunctorRep.from_blocks(S, F, dims, block_mats))
