"""Independent brute-force oracles used by the tests.

E-polynomials of the spaces involved are polynomial-count: evaluating them at
a prime p gives the number of F_p points.  The counts below are done by
direct enumeration over small prime fields.
"""

from itertools import product


def _partitions(n, largest=None):
    largest = n if largest is None else largest
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions(n - first, first):
            yield (first,) + rest


def all_partitions(n):
    return list(_partitions(n))


def below(a, b):
    """a is dominated by b (plain tuples, any lengths)."""
    sa = sb = 0
    for i in range(max(len(a), len(b))):
        sa += a[i] if i < len(a) else 0
        sb += b[i] if i < len(b) else 0
        if sa > sb:
            return False
    return True


def in_P(parts, eps):
    bad = 0 if eps == 1 else 1
    return all(parts.count(v) % 2 == 0 for v in set(parts) if v % 2 == bad)


def collapse_oracle(d, eps):
    """The dominance-largest element of P_eps(N) below d, by exhaustive search."""
    cands = [p for p in _partitions(sum(d)) if in_P(p, eps) and below(p, d)]
    tops = [p for p in cands if all(below(x, p) for x in cands)]
    assert len(tops) == 1
    return tops[0]


# -- linear algebra over F_p --------------------------------------------------


def rank_mod(rows, p):
    m = [list(r) for r in rows]
    rank, cols = 0, len(m[0]) if m else 0
    for c in range(cols):
        piv = next((i for i in range(rank, len(m)) if m[i][c] % p), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        inv = pow(m[rank][c], p - 2, p)
        m[rank] = [(x * inv) % p for x in m[rank]]
        for i in range(len(m)):
            if i != rank and m[i][c] % p:
                f = m[i][c]
                m[i] = [(x - f * y) % p for x, y in zip(m[i], m[rank])]
        rank += 1
    return rank


def gl_order(k, p):
    out = 1
    for i in range(k):
        out *= p**k - p**i
    return out


def count_isotropic(k, dim, p, form, quad=None):
    """Number of k-dimensional subspaces on which `form` (and `quad`) vanish."""
    vecs = [v for v in product(range(p), repeat=dim) if any(v)]
    if quad is not None:
        vecs = [v for v in vecs if quad(v) % p == 0]

    def extend(chosen):
        if len(chosen) == k:
            return 1
        total = 0
        for v in vecs:
            if any(form(v, w) % p for w in chosen):
                continue
            if rank_mod(chosen + [v], p) == len(chosen) + 1:
                total += extend(chosen + [v])
        return total

    return extend([]) // gl_order(k, p)


def symplectic_form(n):
    def form(v, w):
        return sum(v[i] * w[n + i] - v[n + i] * w[i] for i in range(n))

    return form


def split_quadric(dim):
    """Q(x) = x_0 x_1 + x_2 x_3 + ... (+ x_last^2 when dim is odd) and its polar form."""
    half = dim // 2

    def quad(v):
        s = sum(v[2 * i] * v[2 * i + 1] for i in range(half))
        return s + (v[-1] ** 2 if dim % 2 else 0)

    def form(v, w):
        s = sum(v[2 * i] * w[2 * i + 1] + v[2 * i + 1] * w[2 * i] for i in range(half))
        return s + (2 * v[-1] * w[-1] if dim % 2 else 0)

    return quad, form


def count_sym_rank(k, m, p):
    idx = [(i, j) for i in range(m) for j in range(i, m)]
    total = 0
    for vals in product(range(p), repeat=len(idx)):
        mat = [[0] * m for _ in range(m)]
        for (i, j), x in zip(idx, vals):
            mat[i][j] = mat[j][i] = x
        if rank_mod(mat, p) == k:
            total += 1
    return total


def count_skew_rank(k, m, p):
    idx = [(i, j) for i in range(m) for j in range(i + 1, m)]
    total = 0
    for vals in product(range(p), repeat=len(idx)):
        mat = [[0] * m for _ in range(m)]
        for (i, j), x in zip(idx, vals):
            mat[i][j], mat[j][i] = x, (-x) % p
        if rank_mod(mat, p) == k:
            total += 1
    return total


def transpose(parts):
    return tuple(sum(1 for p in parts if p > i) for i in range(parts[0] if parts else 0))


def special_oracle(parts, family):
    """Transpose-membership test; type D uses the symplectic rule on the transpose."""
    eps = {"B": 1, "C": -1, "D": -1}[family]
    return in_P(parts, 1 if family in "BD" else -1) and in_P(transpose(parts), eps)
