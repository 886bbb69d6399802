"""Independent oracles used to freeze expected values in the test suite.

Everything here is deliberately self-contained and written with a
different algorithmic style from the package (naive full-pivot Smith
reduction without transform tracking, brute-force enumeration), so test
expectations do not depend on the code under test.
"""

from fractions import Fraction
from itertools import combinations


def oracle_smith_diagonal(rows):
    """Invariant factors (including 1s, excluding 0s) of an integer matrix."""
    a = [list(r) for r in rows]
    m = len(a)
    n = len(a[0]) if a else 0
    t = 0
    while t < min(m, n):
        piv = None
        best = None
        for i in range(t, m):
            for j in range(t, n):
                if a[i][j] != 0 and (best is None or abs(a[i][j]) < best):
                    piv, best = (i, j), abs(a[i][j])
        if piv is None:
            break
        a[t], a[piv[0]] = a[piv[0]], a[t]
        for row in a:
            row[t], row[piv[1]] = row[piv[1]], row[t]
        dirty = True
        while dirty:
            dirty = False
            for i in range(t + 1, m):
                if a[i][t] != 0:
                    q = a[i][t] // a[t][t]
                    a[i] = [x - q * y for x, y in zip(a[i], a[t])]
                    if a[i][t] != 0:
                        a[t], a[i] = a[i], a[t]
                        dirty = True
            for j in range(t + 1, n):
                if a[t][j] != 0:
                    q = a[t][j] // a[t][t]
                    for row in a:
                        row[j] -= q * row[t]
                    if a[t][j] != 0:
                        for row in a:
                            row[t], row[j] = row[j], row[t]
                        dirty = True
        t += 1
    diag = [abs(a[i][i]) for i in range(min(m, n)) if a[i][i] != 0]
    # repair divisibility pairwise (gcd/lcm swap converges)
    changed = True
    while changed:
        changed = False
        for i in range(len(diag) - 1):
            x, y = diag[i], diag[i + 1]
            if y % x != 0:
                g = _gcd(x, y)
                diag[i], diag[i + 1] = g, x * y // g
                changed = True
    return diag


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def oracle_rank(rows, ncols):
    """Rank over Q by naive Gaussian elimination."""
    a = [[Fraction(x) for x in r] for r in rows]
    rank = 0
    for col in range(ncols):
        piv = None
        for i in range(rank, len(a)):
            if a[i][col] != 0:
                piv = i
                break
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        for i in range(len(a)):
            if i != rank and a[i][col] != 0:
                f = a[i][col] / a[rank][col]
                a[i] = [x - f * y for x, y in zip(a[i], a[rank])]
        rank += 1
    return rank


def close_facets(facets):
    """All faces of the given facets, grouped and sorted by dimension."""
    simps = set()
    for f in facets:
        f = tuple(sorted(f))
        for k in range(1, len(f) + 1):
            simps.update(combinations(f, k))
    by_dim = {}
    for s in simps:
        by_dim.setdefault(len(s) - 1, []).append(s)
    return {k: sorted(v) for k, v in by_dim.items()}


def oracle_boundary(by_dim, k):
    """Boundary matrix rows=(k-1)-simplices, cols=k-simplices, signs (-1)^i."""
    lower = by_dim.get(k - 1, [])
    upper = by_dim.get(k, [])
    index = {s: i for i, s in enumerate(lower)}
    mat = [[0] * len(upper) for _ in lower]
    for j, s in enumerate(upper):
        for i in range(len(s)):
            face = s[:i] + s[i + 1:]
            mat[index[face]][j] = (-1) ** i
    return mat


def oracle_homology(facets, k):
    """H_k of the complex spanned by `facets`: (rank, sorted torsion > 1)."""
    by_dim = close_facets(facets)
    dim = max(by_dim)
    nk = len(by_dim.get(k, []))
    if nk == 0:
        return (0, [])
    bk = oracle_boundary(by_dim, k) if k >= 1 else [[0] * nk]
    rank_bk = oracle_rank(bk, nk) if k >= 1 else 0
    if k + 1 <= dim:
        bk1 = oracle_boundary(by_dim, k + 1)
        rank_bk1 = oracle_rank(bk1, len(by_dim[k + 1]))
        torsion = [d for d in oracle_smith_diagonal(bk1) if d > 1]
    else:
        rank_bk1 = 0
        torsion = []
    return (nk - rank_bk - rank_bk1, sorted(torsion))


# catalog facet lists (duplicated here on purpose: the oracle must not
# import the package under test)

CIRCLE = [(0, 1), (1, 2), (0, 2)]
SPHERE = [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)]
TORUS = sorted(tuple(sorted(((i) % 7, (i + 1) % 7, (i + 3) % 7))) for i in range(7)) + \
        sorted(tuple(sorted(((i) % 7, (i + 2) % 7, (i + 3) % 7))) for i in range(7))
PROJECTIVE_PLANE = [(0, 1, 4), (0, 1, 5), (0, 2, 3), (0, 2, 4), (0, 3, 5),
                    (1, 2, 3), (1, 2, 5), (1, 3, 4), (2, 4, 5), (3, 4, 5)]
KLEIN_BOTTLE = [(0, 1, 5), (0, 3, 5), (1, 2, 6), (1, 5, 6), (0, 2, 3), (2, 3, 6),
                (3, 5, 7), (3, 4, 7), (5, 6, 8), (5, 7, 8), (3, 4, 6), (4, 6, 8),
                (2, 4, 7), (0, 2, 4), (1, 7, 8), (1, 2, 7), (0, 4, 8), (0, 1, 8)]
POINT = [(0,)]
INTERVAL = [(0, 1)]
