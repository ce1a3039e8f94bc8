"""Independent reference computations used by the tests.

Nothing here imports the package: each function recomputes a value from
first principles (bit strings, group tables, explicit small complexes).
"""

from itertools import combinations, product


def hamming_intersection_numbers(n):
    """``p[(i, j, k)]`` = #{z : d(x, z) = i, d(z, y) = j} for any x, y with d(x, y) = k."""
    N = 1 << n

    def d(a, b):
        return bin(a ^ b).count("1")

    out = {}
    for k in range(n + 1):
        y = (1 << k) - 1  # a word at distance k from x = 0
        for z in range(N):
            key = (d(0, z), d(z, y), k)
            out[key] = out.get(key, 0) + 1
    return out


def cyclic_cohomology_trivial(m, p, top):
    """``dim H^k(Z/m, K)`` with trivial coefficients, ``K`` of characteristic ``p``.

    Periodic resolution ``... -> ZG --N--> ZG --(g-1)--> ZG -> Z``; on
    ``Hom(-, K)`` the maps become multiplication by 0 and by m alternately.
    """
    def rank(c):
        return 0 if (c % p == 0 if p else c == 0) else 1

    # delta_k : C^k -> C^{k+1}; delta_0 = (g - 1)^* = 0, delta_1 = N^* = m, ...
    deltas = [rank(0) if k % 2 == 0 else rank(m) for k in range(top + 2)]
    dims = []
    for k in range(top + 1):
        into = deltas[k - 1] if k > 0 else 0
        dims.append(1 - deltas[k] - into)
    return dims


def conjugacy_class_count(table):
    n = len(table)
    e = next(g for g in range(n) if all(table[g][h] == h for h in range(n)))
    inv = [next(h for h in range(n) if table[g][h] == e) for g in range(n)]
    seen, classes = set(), 0
    for x in range(n):
        if x in seen:
            continue
        classes += 1
        for g in range(n):
            seen.add(table[table[g][x]][inv[g]])
    return classes


def simplices_of(n_vertices, facets):
    out = set()
    for s in facets:
        for k in range(1, len(s) + 1):
            out.update(frozenset(c) for c in combinations(s, k))
    out.update(frozenset([v]) for v in range(n_vertices))
    return out


def involutions_count(p, d):
    """Number of d x d matrices X over F_p with X^2 = I (d <= 2)."""
    if d == 0:
        return 1
    count = 0
    for entries in product(range(p), repeat=d * d):
        X = [entries[i * d:(i + 1) * d] for i in range(d)]
        sq = [[sum(X[i][k] * X[k][j] for k in range(d)) % p for j in range(d)] for i in range(d)]
        if all(sq[i][j] == (1 if i == j else 0) for i in range(d) for j in range(d)):
            count += 1
    return count


def matrix_rank_mod(rows, p):
    """Gaussian elimination over F_p on integer rows."""
    rows = [list(r) for r in rows]
    r = 0
    ncols = len(rows[0]) if rows else 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c] % p), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = pow(rows[r][c], -1, p)
        rows[r] = [x * inv % p for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] % p:
                f = rows[i][c]
                rows[i] = [(a - f * b) % p for a, b in zip(rows[i], rows[r])]
        r += 1
    return r
