"""Finite-dimensional algebras over exact fields.

An :class:`FDAlgebra` stores its structure tensor sparsely:
``mult[(i, j)] = {k: c}`` means ``e_i e_j = sum_k c e_k``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product as iproduct
from typing import Sequence

from . import linalg as la
from .constructors import SimplicialComplex, is_nondegenerate, simplicial_schemoid
from .constructors import check_simplicial_map, validate_complex
from .core import GuardError, NotTameError, Schemoid, SchemoidError, quotient_category, tameness_report
from .fields import Field, QQ
from .fincat import FinCat


class AlgebraError(ValueError):
    pass


@dataclass
class FDAlgebra:
    F: Field
    dim: int
    mult: dict[tuple[int, int], dict[int, object]]
    unit: list | None
    labels: tuple[str, ...] | None = None

    def label(self, i: int) -> str:
        return self.labels[i] if self.labels else f"e{i}"

    def basis(self, i: int) -> list:
        v = [self.F.zero] * self.dim
        v[i] = self.F.one
        return v

    def coeff(self, i: int, j: int, k: int):
        return self.mult.get((i, j), {}).get(k, self.F.zero)

    def mul(self, u, v) -> list:
        F = self.F
        out = [F.zero] * self.dim
        nu = [(i, a) for i, a in enumerate(u) if a]
        nv = [(j, b) for j, b in enumerate(v) if b]
        for i, a in nu:
            for j, b in nv:
                row = self.mult.get((i, j))
                if row:
                    ab = F.mul(a, b)
                    for k, c in row.items():
                        out[k] = F.add(out[k], F.mul(ab, c))
        return out

    def left_matrix(self, u) -> list[list]:
        """Matrix of ``x -> u x`` (columns are images of basis vectors)."""
        cols = [self.mul(u, self.basis(j)) for j in range(self.dim)]
        return la.transpose(cols, self.dim)

    def right_matrix(self, u) -> list[list]:
        cols = [self.mul(self.basis(j), u) for j in range(self.dim)]
        return la.transpose(cols, self.dim)

    def power(self, u, k: int):
        if k == 0:
            if self.unit is None:
                raise AlgebraError("algebra has no unit")
            return list(self.unit)
        out = list(u)
        for _ in range(k - 1):
            out = self.mul(out, u)
        return out

    def is_commutative(self) -> bool:
        for i in range(self.dim):
            for j in range(i + 1, self.dim):
                if self.mult.get((i, j), {}) != self.mult.get((j, i), {}):
                    return False
        return True

    def table(self) -> dict:
        """Labeled nonzero structure constants, for printing and JSON."""
        out = {}
        for (i, j), row in sorted(self.mult.items()):
            terms = {self.label(k): self.F.to_json(c) for k, c in sorted(row.items())}
            if terms:
                out[f"{self.label(i)}*{self.label(j)}"] = terms
        return out


def make_algebra(F: Field, dim: int, entries, unit=None, labels=None) -> FDAlgebra:
    """Build from ``(i, j, k, c)`` entries, summing repeats and dropping zeros."""
    mult: dict[tuple[int, int], dict[int, object]] = {}
    for i, j, k, c in entries:
        if not (0 <= i < dim and 0 <= j < dim and 0 <= k < dim):
            raise AlgebraError(f"entry ({i}, {j}, {k}) outside a {dim}-dimensional basis")
        row = mult.setdefault((i, j), {})
        row[k] = F.add(row.get(k, F.zero), F(c))
    for key in list(mult):
        mult[key] = {k: c for k, c in mult[key].items() if c}
        if not mult[key]:
            del mult[key]
    return FDAlgebra(F, dim, mult, None if unit is None else [F(x) for x in unit],
                     tuple(labels) if labels else None)


def check_algebra(A: FDAlgebra) -> list[str]:
    """Associativity on basis triples and the unit law; returns the violations found."""
    errors = []
    n = A.dim
    for i in range(n):
        ei = A.basis(i)
        for j in range(n):
            eij = A.mul(ei, A.basis(j))
            for k in range(n):
                ek = A.basis(k)
                if A.mul(eij, ek) != A.mul(ei, A.mul(A.basis(j), ek)):
                    errors.append(f"associativity fails on ({A.label(i)}, {A.label(j)}, {A.label(k)})")
                    return errors
    if A.unit is not None:
        for i in range(n):
            e = A.basis(i)
            if A.mul(A.unit, e) != e or A.mul(e, A.unit) != e:
                errors.append(f"unit law fails on {A.label(i)}")
                break
    return errors


@dataclass
class AlgebraMap:
    source: FDAlgebra
    target: FDAlgebra
    matrix: list[list]  # target.dim x source.dim

    def apply(self, v):
        return la.matvec(self.target.F, self.matrix, v)

    def image(self, i: int):
        return [row[i] for row in self.matrix]

    def violations(self) -> list[str]:
        A, B = self.source, self.target
        out = []
        for i in range(A.dim):
            for j in range(A.dim):
                lhs = self.apply(A.mul(A.basis(i), A.basis(j)))
                rhs = B.mul(self.image(i), self.image(j))
                if lhs != rhs:
                    out.append(f"not multiplicative on ({A.label(i)}, {A.label(j)})")
                    return out
        if A.unit is not None and B.unit is not None and self.apply(A.unit) != list(B.unit):
            out.append("unit not preserved")
        return out

    def is_bijective(self) -> bool:
        return self.source.dim == self.target.dim and \
            la.rank(self.target.F, self.matrix, self.source.dim) == self.source.dim


# ---------------------------------------------------------------- constructions


def category_algebra(C: FinCat, F: Field = QQ) -> FDAlgebra:
    """Basis = morphisms; ``g f`` is the composite when defined, else 0."""
    entries = [(g, f, h, 1) for (g, f), h in C.comp.items()]
    unit = [0] * C.n_morphisms
    for i in C.identity:
        unit[i] = 1
    labels = tuple(C.mor_label(f) for f in C.morphisms)
    return make_algebra(F, C.n_morphisms, entries, unit if C.n_morphisms else [], labels)


def _block_unit(S: Schemoid):
    """Coordinates of the sum of identities in the block basis, or None."""
    ids = set(S.cat.identity)
    unit = [0] * S.n_blocks
    for b, members in enumerate(S.blocks):
        inside = sum(1 for f in members if f in ids)
        if inside == len(members):
            unit[b] = 1
        elif inside:
            return None
    return unit


def bose_mesner(S: Schemoid, F: Field = QQ) -> FDAlgebra:
    """Block sums with ``sigma tau = sum_mu p^mu_{sigma tau} mu``.

    The table is cross-checked against the product of block sums computed in
    the category algebra.
    """
    entries = [(s, t, m, c) for (s, t, m), c in S.constants.items()]
    A = make_algebra(F, S.n_blocks, entries, _block_unit(S),
                     tuple(S.block_label(b) for b in range(S.n_blocks)))
    # independent expansion in the category algebra
    prod: dict[tuple[int, int], dict[int, int]] = {}
    for (g, f), h in S.cat.comp.items():
        row = prod.setdefault((S.block_of[g], S.block_of[f]), {})
        row[h] = row.get(h, 0) + 1
    for key, row in prod.items():
        for h, c in row.items():
            if F(c) != A.coeff(key[0], key[1], S.block_of[h]):
                raise AssertionError(f"Bose-Mesner table inconsistent at blocks {key}")
    return A


def require_t_i_ii(S: Schemoid):
    rep = tameness_report(S)
    if not (rep.unital and rep.tii_holds):
        raise NotTameError(rep)
    return rep


def quotient_linear_algebra(S: Schemoid, F: Field = QQ) -> FDAlgebra:
    """Total algebra of the linear category on identity classes.

    Basis = blocks; ``sigma tau = sum_mu p^mu_{sigma tau} mu`` when the source
    class of ``sigma`` is the target class of ``tau``, else 0; the unit is the
    sum of identity blocks. Needs T(i) and T(ii) only.
    """
    require_t_i_ii(S)
    cat = S.cat
    sclass = [S.identity_block(cat.src[S.rep(b)]) for b in range(S.n_blocks)]
    tclass = [S.identity_block(cat.tgt[S.rep(b)]) for b in range(S.n_blocks)]
    entries = [(s, t, m, c) for (s, t, m), c in S.constants.items() if sclass[s] == tclass[t]]
    unit = [0] * S.n_blocks
    for b in set(S.identity_block(x) for x in cat.objects):
        unit[b] = 1
    return make_algebra(F, S.n_blocks, entries, unit, tuple(S.block_label(b) for b in range(S.n_blocks)))


def quotient_category_algebra(S: Schemoid, F: Field = QQ) -> FDAlgebra:
    """Category algebra of ``[C]``; basis indices are block ids."""
    Q, _ = quotient_category(S)
    return category_algebra(Q, F)


def identity_map(A: FDAlgebra) -> AlgebraMap:
    return AlgebraMap(A, A, la.identity(A.F, A.dim))


# ---------------------------------------------------------------- Stanley-Reisner


def stanley_reisner_mod_squares(K: SimplicialComplex, F: Field = QQ) -> FDAlgebra:
    """``R[K]/(x_i^2)``: basis ``1`` and the square-free monomials of faces."""
    validate_complex(K)
    monos = [frozenset()] + K.simplices()
    index = {m: i for i, m in enumerate(monos)}
    entries = []
    for a in monos:
        for b in monos:
            if a & b:
                continue
            u = a | b
            if u in index:
                entries.append((index[a], index[b], index[u], 1))
    labels = tuple("1" if not m else "*".join(f"x{v}" for v in sorted(m)) for m in monos)
    unit = [1] + [0] * (len(monos) - 1)
    return make_algebra(F, len(monos), entries, unit, labels)


def _sr_monomials(K: SimplicialComplex):
    return [frozenset()] + K.simplices()


def _block_keys(S: Schemoid) -> list[frozenset]:
    """Difference set of each block of a set-valued schemoid."""
    data = S.cat.obj_data
    return [data[S.cat.tgt[S.rep(b)]] - data[S.cat.src[S.rep(b)]] for b in range(S.n_blocks)]


def alpha_K(K: SimplicialComplex, F: Field = QQ):
    """``(SR, BM, alpha)`` with ``alpha(x_sigma) = sigma~``."""
    SR = stanley_reisner_mod_squares(K, F)
    S = simplicial_schemoid(K)
    BM = bose_mesner(S, F)
    pos = {k: b for b, k in enumerate(_block_keys(S))}
    M = la.zeros(F, BM.dim, SR.dim)
    for i, m in enumerate(_sr_monomials(K)):
        M[pos[m]][i] = F.one
    return SR, BM, AlgebraMap(SR, BM, M)


def _sr_pullback(K, L, phi, SR_K, SR_L) -> AlgebraMap:
    """Extend ``y_j -> sum_{phi(i) = j} x_i`` multiplicatively."""
    F = SR_K.F
    idx_K = {m: i for i, m in enumerate(_sr_monomials(K))}
    cols = []
    for m in _sr_monomials(L):
        v = SR_K.basis(idx_K[frozenset()])
        for j in sorted(m):
            g = [F.zero] * SR_K.dim
            for i in range(K.n_vertices):
                if phi[i] == j:
                    g[idx_K[frozenset([i])]] = F.one
            v = SR_K.mul(v, g)
        cols.append(v)
    return AlgebraMap(SR_L, SR_K, la.transpose(cols, SR_K.dim))


@dataclass
class PullbackSquare:
    phi_star: AlgebraMap
    P_phi_star: AlgebraMap
    alpha_K: AlgebraMap
    alpha_L: AlgebraMap
    commutes: bool
    P_phi_star_is_algebra_map: bool


def sr_pullbacks(K: SimplicialComplex, L: SimplicialComplex, phi: Sequence[int], F: Field = QQ) -> PullbackSquare:
    """Build ``phi^*`` and ``P(phi)^*`` and compare ``alpha_K phi^*`` with ``P(phi)^* alpha_L``."""
    validate_complex(K)
    validate_complex(L)
    check_simplicial_map(K, L, phi)
    if not is_nondegenerate(K, phi):
        raise SchemoidError("the simplicial map is degenerate on some edge")
    SR_K, BM_K, aK = alpha_K(K, F)
    SR_L, BM_L, aL = alpha_K(L, F)
    phi_star = _sr_pullback(K, L, phi, SR_K, SR_L)
    SK, SL = simplicial_schemoid(K), simplicial_schemoid(L)
    keys_K, keys_L = _block_keys(SK), _block_keys(SL)
    M = la.zeros(F, BM_K.dim, BM_L.dim)
    pos_L = {k: b for b, k in enumerate(keys_L)}
    for b, sigma in enumerate(keys_K):
        tau = frozenset(phi[v] for v in sigma)
        M[b][pos_L[tau]] = F.one
    Pstar = AlgebraMap(BM_L, BM_K, M)
    left = la.matmul(F, aK.matrix, phi_star.matrix, SR_K.dim, SR_L.dim)
    right = la.matmul(F, Pstar.matrix, aL.matrix, BM_L.dim, SR_L.dim)
    return PullbackSquare(phi_star, Pstar, aK, aL, left == right, not Pstar.violations())


# ---------------------------------------------------------------- invariants


def center(A: FDAlgebra) -> tuple[int, list[list]]:
    """Solve ``z e_a = e_a z`` for all basis ``a``; returns ``(dim, basis)``."""
    F, n = A.F, A.dim
    rows = []
    for a in range(n):
        for k in range(n):
            rows.append([F.sub(A.coeff(i, a, k), A.coeff(a, i, k)) for i in range(n)])
    basis, _ = la.nullspace(F, rows, n)
    return len(basis), basis


def _sparse_rank(F: Field, vectors) -> int:
    """Rank of sparse vectors given as ``{index: value}`` dicts."""
    pivots: dict[int, dict] = {}
    r = 0
    for v in vectors:
        v = {k: c for k, c in v.items() if c}
        while v:
            lead = min(v)
            row = pivots.get(lead)
            if row is None:
                inv = F.inv(v[lead])
                pivots[lead] = {k: F.mul(c, inv) for k, c in v.items()}
                r += 1
                break
            c = v[lead]
            for k, x in row.items():
                y = F.sub(v.get(k, F.zero), F.mul(c, x))
                if y:
                    v[k] = y
                else:
                    v.pop(k, None)
    return r


def _hochschild_images(A: FDAlgebra, k: int):
    """Images under the Hochschild differential of the elementary k-cochains.

    Cochain ``E_{b, m}`` sends the basis tuple ``b`` to ``e_m`` and all other
    tuples to 0; coordinates of a (k+1)-cochain are (tuple, output) pairs.
    """
    F, n = A.F, A.dim
    nz = {key: row for key, row in A.mult.items() if row}
    by_product: dict[int, list] = {}
    for (x, y), row in nz.items():
        for t, c in row.items():
            by_product.setdefault(t, []).append((x, y, c))

    def idx(tup, out):
        i = 0
        for t in tup:
            i = i * n + t
        return i * n + out

    for b in iproduct(range(n), repeat=k):
        for m in range(n):
            img: dict[int, object] = {}

            def put(key, c):
                img[key] = F.add(img.get(key, F.zero), c)

            for a1 in range(n):
                for r, c in A.mult.get((a1, m), {}).items():
                    put(idx((a1,) + b, r), c)
            for i in range(k):
                sign = F.one if (i + 1) % 2 == 0 else F.neg(F.one)
                for x, y, c in by_product.get(b[i], ()):
                    put(idx(b[:i] + (x, y) + b[i + 1:], m), F.mul(sign, c))
            sign = F.one if (k + 1) % 2 == 0 else F.neg(F.one)
            for a in range(n):
                for r, c in A.mult.get((m, a), {}).items():
                    put(idx(b + (a,), r), F.mul(sign, c))
            yield img


def hochschild_cohomology(A: FDAlgebra, n_max: int, max_dim: int = 12, max_cochains: int = 20000) -> list[int]:
    """``dim HH^0 .. HH^n_max`` from the standard cochain complex ``Hom(A^{(x)k}, A)``."""
    n = A.dim
    if n > max_dim:
        raise GuardError(f"Hochschild cohomology limited to dimension {max_dim} (got {n})")
    if n ** (n_max + 1) > max_cochains:
        raise GuardError(f"cochain space of degree {n_max} has {n ** (n_max + 1)} basis elements; "
                         f"limit is {max_cochains}")
    ranks = [_sparse_rank(A.F, _hochschild_images(A, k)) for k in range(n_max + 1)]
    dims = []
    for k in range(n_max + 1):
        cochains = n ** (k + 1)
        prev = ranks[k - 1] if k else 0
        dims.append(cochains - ranks[k] - prev)
    if dims and dims[0] != center(A)[0]:
        raise AssertionError("HH^0 differs from the center")
    return dims


@dataclass
class IsoVerdict:
    status: str  # "isomorphic", "not isomorphic", "not distinguished"
    reason: str
    witness: AlgebraMap | None = None


def _radical(A: FDAlgebra, enum_limit: int = 256):
    """Basis of the Jacobson radical, or None when no method applies."""
    F, n = A.F, A.dim
    if F.p == 0:
        # trace form criterion (characteristic 0)
        Ls = [A.left_matrix(A.basis(i)) for i in range(n)]
        rows = []
        for j in range(n):
            row = []
            for i in range(n):
                prod = la.matmul(F, Ls[i], Ls[j], n, n)
                row.append(sum((prod[t][t] for t in range(n)), F.zero))
            rows.append(row)
        return la.nullspace(F, rows, n)[0]
    if A.is_commutative():
        # Frobenius is additive, so the nilradical is the kernel of x -> x^(p^e)
        e = 1
        while F.p ** e < n + 1:
            e += 1
        cols = [A.power(A.basis(i), F.p ** e) for i in range(n)]
        return la.nullspace(F, la.transpose(cols, n), n)[0]
    if F.p ** n > enum_limit:
        return None
    elems = [list(v) for v in iproduct(range(F.p), repeat=n)]

    def nilpotent(x):
        y = x
        for _ in range(n + 1):
            y = A.mul(y, x)
        return not any(y)

    rad = [x for x in elems if all(nilpotent(A.mul(y, x)) for y in elems)]
    return la.rref(F, rad, n)[0]


def _product_span_dim(A: FDAlgebra, U, V) -> int:
    prods = [A.mul(u, v) for u in U for v in V]
    return la.rank(A.F, prods, A.dim) if prods else 0


def invariants(A: FDAlgebra) -> dict:
    F, n = A.F, A.dim
    inv = {"dim": n, "commutative": A.is_commutative(), "center": center(A)[0]}
    J = _radical(A)
    if J is not None:
        dims = [len(J)]
        P = J
        while dims[-1] and len(dims) <= n:
            prods = [A.mul(u, v) for u in P for v in J]
            P = la.rref(F, prods, n)[0] if prods else []
            dims.append(len(P))
        inv["radical_powers"] = dims
    if F.p and F.p ** n <= 1 << 16:
        count = 0
        for v in iproduct(range(F.p), repeat=n):
            v = list(v)
            if A.mul(v, v) == v:
                count += 1
        inv["idempotents"] = count
    return inv


def _generators(A: FDAlgebra):
    """Greedy basis elements generating ``A`` with the unit, plus words spanning it."""
    F, n = A.F, A.dim
    gens: list[int] = []

    def closure(gs):
        words = [((), list(A.unit))] if A.unit is not None else []
        words += [((g,), A.basis(g)) for g in gs]
        R, piv = la.rref(F, [w for _, w in words], n)
        frontier = list(words)
        while frontier:
            nxt = []
            for w, v in frontier:
                for g in gs:
                    u = A.mul(v, A.basis(g))
                    if not la.in_span(F, u, R, piv):
                        words.append((w + (g,), u))
                        nxt.append((w + (g,), u))
                        R, piv = la.rref(F, R + [u], n)
            frontier = nxt
        return words, len(piv)

    for i in range(n):
        _, r = closure(gens)
        if r == n:
            break
        if closure(gens + [i])[1] > r:
            gens.append(i)
    words, r = closure(gens)
    if r != n:
        raise AlgebraError("algebra is not generated by its basis and unit")
    # keep an independent set of words
    basis_words, rows = [], []
    for w, v in words:
        trial = rows + [v]
        if la.rank(F, trial, n) > len(rows):
            rows.append(v)
            basis_words.append(w)
    return gens, basis_words, rows


def algebra_iso_bruteforce(A: FDAlgebra, B: FDAlgebra, max_candidates: int = 10 ** 6) -> IsoVerdict:
    """Invariant battery, then a search over images of generators.

    Over F_p every image is tried (within ``max_candidates``); over Q only
    signed basis vectors are tried, so a failed search is inconclusive.
    """
    if A.F != B.F:
        raise AlgebraError("algebras over different fields")
    if A.dim != B.dim:
        return IsoVerdict("not isomorphic", f"dimensions {A.dim} and {B.dim} differ")
    ia, ib = invariants(A), invariants(B)
    for key in ia:
        if key in ib and ia[key] != ib[key]:
            return IsoVerdict("not isomorphic", f"invariant {key} differs: {ia[key]} vs {ib[key]}")
    if A.unit is None or B.unit is None:
        return IsoVerdict("not distinguished", "search needs unital algebras")
    F, n = A.F, A.dim
    gens, words, rows = _generators(A)
    if F.p:
        per = F.p ** n
        if per ** len(gens) > max_candidates:
            return IsoVerdict("not distinguished", f"search space {per}^{len(gens)} exceeds {max_candidates}")
        cands = [list(v) for v in iproduct(range(F.p), repeat=n)]
    else:
        cands = []
        for i in range(n):
            cands.append(B.basis(i))
            cands.append([F.neg(x) for x in B.basis(i)])
        for i in range(n):
            for j in range(i + 1, n):
                cands.append([F.add(x, y) for x, y in zip(B.basis(i), B.basis(j))])
        if len(cands) ** len(gens) > max_candidates:
            return IsoVerdict("not distinguished", "search space too large")
    Winv = la.inverse(F, la.transpose(rows, n))
    for images in iproduct(cands, repeat=len(gens)):
        img = dict(zip(gens, images))
        cols = []
        for w in words:
            v = list(B.unit)
            for g in w:
                v = B.mul(v, img[g])
            cols.append(v)
        # map sends word-vector columns to cols; change basis back to e_i
        M = la.matmul(F, la.transpose(cols, n), Winv, n, n)
        phi = AlgebraMap(A, B, M)
        if phi.is_bijective() and not phi.violations():
            return IsoVerdict("isomorphic", "explicit isomorphism found", phi)
    if F.p:
        return IsoVerdict("not isomorphic", "exhaustive search over generator images found none")
    return IsoVerdict("not distinguished", "restricted search over signed basis images found none")
