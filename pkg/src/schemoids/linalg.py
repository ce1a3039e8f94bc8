"""Dense exact linear algebra over a :class:`~schemoids.fields.Field`.

Matrices are lists of rows. Functions that may see a matrix with no rows take
the column count explicitly.
"""

from __future__ import annotations

from .fields import Field


def zeros(F: Field, rows: int, cols: int):
    return [[F.zero] * cols for _ in range(rows)]


def identity(F: Field, n: int):
    out = zeros(F, n, n)
    for i in range(n):
        out[i][i] = F.one
    return out


def convert(F: Field, A):
    return [[F(x) for x in row] for row in A]


def transpose(A, ncols: int | None = None):
    if not A:
        return [[] for _ in range(ncols or 0)]
    return [list(col) for col in zip(*A)]


def matmul(F: Field, A, B, inner: int | None = None, cols: int | None = None):
    """A (m x k) times B (k x n). ``inner``/``cols`` disambiguate empty shapes."""
    m = len(A)
    k = inner if inner is not None else (len(B) if B else (len(A[0]) if A else 0))
    n = cols if cols is not None else (len(B[0]) if B else 0)
    out = zeros(F, m, n)
    p = F.p
    for i in range(m):
        Ai = A[i]
        oi = out[i]
        for t in range(k):
            a = Ai[t]
            if not a:
                continue
            Bt = B[t]
            for j in range(n):
                b = Bt[j]
                if b:
                    oi[j] += a * b
        if p:
            out[i] = [x % p for x in oi]
    return out


def matvec(F: Field, A, v):
    p = F.p
    out = []
    for row in A:
        s = 0
        for a, x in zip(row, v):
            if a and x:
                s += a * x
        out.append(s % p if p else s + F.zero)
    return out


def add(F: Field, A, B):
    return [[F.add(a, b) for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]


def scale(F: Field, c, A):
    return [[F.mul(c, a) for a in row] for row in A]


def is_zero(A) -> bool:
    return all(not x for row in A for x in row)


def rref(F: Field, A, ncols: int | None = None):
    """Reduced row echelon form.

    Returns ``(R, pivots)`` where ``R`` holds only the nonzero rows.
    """
    if ncols is None:
        ncols = len(A[0]) if A else 0
    p = F.p
    rows = [list(r) for r in A if any(r)]
    pivots: list[int] = []
    R: list[list] = []
    col = 0
    while rows and col < ncols:
        piv = None
        for idx, r in enumerate(rows):
            if r[col]:
                piv = idx
                break
        if piv is None:
            col += 1
            continue
        prow = rows.pop(piv)
        inv = F.inv(prow[col])
        if p:
            prow = [(x * inv) % p for x in prow]
        else:
            prow = [x * inv for x in prow]
        nz = [(j, v) for j, v in enumerate(prow) if v]
        for others in (R, rows):
            for r in others:
                c = r[col]
                if c:
                    if p:
                        for j, v in nz:
                            r[j] = (r[j] - c * v) % p
                    else:
                        for j, v in nz:
                            r[j] = r[j] - c * v
        rows = [r for r in rows if any(r)]
        R.append(prow)
        pivots.append(col)
        col += 1
    return R, pivots


def rank(F: Field, A, ncols: int | None = None) -> int:
    return len(rref(F, A, ncols)[1])


def nullspace(F: Field, A, ncols: int):
    """Basis of ``{x : A x = 0}``.

    Returns ``(basis, free)``; basis vector ``i`` is 1 at column ``free[i]`` and
    0 at every other free column, so coordinates of any kernel vector in this
    basis are its entries at ``free``.
    """
    R, pivots = rref(F, A, ncols)
    pivset = set(pivots)
    free = [j for j in range(ncols) if j not in pivset]
    basis = []
    for f in free:
        v = [F.zero] * ncols
        v[f] = F.one
        for row, pc in zip(R, pivots):
            if row[f]:
                v[pc] = F.neg(row[f])
        basis.append(v)
    return basis, free


def span_basis(F: Field, vectors, dim: int):
    """Reduced basis of the span of ``vectors`` (as rows) and its pivot columns."""
    return rref(F, vectors, dim)


def reduce_vector(F: Field, v, R, pivots):
    """Subtract multiples of the rref rows so ``v`` vanishes at every pivot."""
    v = list(v)
    for row, pc in zip(R, pivots):
        c = v[pc]
        if c:
            v = [F.sub(a, F.mul(c, b)) for a, b in zip(v, row)]
    return v


def in_span(F: Field, v, R, pivots) -> bool:
    return not any(reduce_vector(F, v, R, pivots))


def solve(F: Field, A, b, ncols: int | None = None):
    """One solution ``x`` of ``A x = b`` or ``None``."""
    if ncols is None:
        ncols = len(A[0]) if A else 0
    aug = [list(row) + [bi] for row, bi in zip(A, b)]
    R, pivots = rref(F, aug, ncols + 1)
    if ncols in pivots:
        return None
    x = [F.zero] * ncols
    for row, pc in zip(R, pivots):
        x[pc] = row[ncols]
    return x


def inverse(F: Field, A):
    n = len(A)
    aug = [list(row) + e for row, e in zip(A, identity(F, n))]
    R, pivots = rref(F, aug, 2 * n)
    if pivots[:n] != list(range(n)):
        return None
    return [row[n:] for row in R[:n]]


def kron(F: Field, A, B):
    out = []
    for ra in A:
        for rb in B:
            out.append([F.mul(a, b) for a in ra for b in rb])
    return out
