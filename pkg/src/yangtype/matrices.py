"""Evaluation of word functions on tuples of rational matrices.

A word w over {1,...,L} paired with an L-tuple (X_1,...,X_L) of N x N
matrices gives the product X_{w_1} ... X_{w_n}; its (i, j) entry evaluates
the matrix generator p_ij(w) and its trace evaluates the circular generator
P(wh).  These numeric values are used for invariance checks (the functions
with i, j <= d are invariant under simultaneous conjugation fixing the
first d coordinates) and for cheap linear-independence probing.

Everything is exact: Fraction entries, integer random matrices from a seeded
generator, and Fraction Gaussian elimination for ranks.
"""

from __future__ import annotations

import itertools
import random
from fractions import Fraction

from .words import check_word, rotations


class MatrixTuple:
    """An L-tuple of N x N matrices with exact rational entries."""

    def __init__(self, N, mats):
        self.N = N
        self.mats = []
        for X in mats:
            if len(X) != N or any(len(row) != N for row in X):
                raise ValueError("inconsistent matrix dimensions")
            self.mats.append([[Fraction(v) for v in row] for row in X])

    @property
    def L(self):
        return len(self.mats)

    def matrix(self, a):
        if not (1 <= a <= len(self.mats)):
            raise ValueError(f"no matrix for letter {a}")
        return self.mats[a - 1]

    def conjugate_tail(self, d, g):
        """Conjugate every matrix by block-diag(1_d, g)."""
        N = self.N
        m = N - d
        if len(g) != m or any(len(row) != m for row in g):
            raise ValueError("g has wrong size")
        G = [[Fraction(1 if p == q else 0) for q in range(N)] for p in range(N)]
        for p in range(m):
            for q in range(m):
                G[d + p][d + q] = Fraction(g[p][q])
        Ginv = mat_inverse(G)
        return MatrixTuple(N, [mat_mul(mat_mul(G, X), Ginv) for X in self.mats])


def mat_mul(A, B):
    n, m, k = len(A), len(B[0]), len(B)
    return [[sum((A[p][q] * B[q][r] for q in range(k)), Fraction(0))
             for r in range(m)] for p in range(n)]


def mat_inverse(A):
    n = len(A)
    M = [[Fraction(v) for v in row] + [Fraction(1 if p == q else 0) for q in range(n)]
         for p, row in enumerate(A)]
    for c in range(n):
        p = next((q for q in range(c, n) if M[q][c]), None)
        if p is None:
            raise ValueError("singular matrix")
        M[c], M[p] = M[p], M[c]
        inv = 1 / M[c][c]
        M[c] = [v * inv for v in M[c]]
        for q in range(n):
            if q != c and M[q][c]:
                f = M[q][c]
                M[q] = [v - f * u for v, u in zip(M[q], M[c])]
    return [row[n:] for row in M]


def word_product(w, t: MatrixTuple):
    check_word(w)
    P = t.matrix(w[0])
    for a in w[1:]:
        P = mat_mul(P, t.matrix(a))
    return P


def eval_entry(i, j, w, t: MatrixTuple):
    """(X_{w_1} ... X_{w_n})_{ij}."""
    if not (1 <= i <= t.N and 1 <= j <= t.N):
        raise ValueError("index out of range")
    return word_product(w, t)[i - 1][j - 1]


def eval_trace(wh, t: MatrixTuple):
    """tr(X_{w_1} ... X_{w_n}); depends only on the rotation class of wh."""
    P = word_product(wh, t)
    return sum((P[p][p] for p in range(t.N)), Fraction(0))


# -- random data -------------------------------------------------------------


def random_matrix_tuple(N, L, rng: random.Random, bound=5):
    return MatrixTuple(N, [[[rng.randint(-bound, bound) for _ in range(N)]
                            for _ in range(N)] for _ in range(L)])


def random_unimodular(n, rng: random.Random, shears=6):
    """A product of integer shear matrices; determinant 1, exactly invertible."""
    G = [[Fraction(1 if p == q else 0) for q in range(n)] for p in range(n)]
    for _ in range(shears):
        p, q = rng.randrange(n), rng.randrange(n)
        if p == q:
            continue
        c = rng.randint(-2, 2)
        S = [[Fraction(1 if a == b else 0) for b in range(n)] for a in range(n)]
        S[p][q] = Fraction(c)
        G = mat_mul(G, S)
    return G


def invariance_check(d, t: MatrixTuple, g, words):
    """Conjugate the tail block by g and compare all entry/trace values.

    Entries with i, j <= d and all traces must be unchanged.  Returns a list
    of discrepancies (empty means invariant).
    """
    if d >= t.N:
        raise ValueError("need d < N")
    t2 = t.conjugate_tail(d, g)
    bad = []
    for w in words:
        for i in range(1, d + 1):
            for j in range(1, d + 1):
                a, b = eval_entry(i, j, w, t), eval_entry(i, j, w, t2)
                if a != b:
                    bad.append(("entry", i, j, w, a, b))
        a, b = eval_trace(w, t), eval_trace(w, t2)
        if a != b:
            bad.append(("trace", w, a, b))
    return bad


def trace_rotation_check(w, t: MatrixTuple):
    vals = {eval_trace(r, t) for r in rotations(tuple(w))}
    return len(vals) == 1


# -- exact rank --------------------------------------------------------------


def sparse_rank(rows):
    """Rank over Q of a family of sparse vectors given as dicts {key: value}."""
    basis = []  # list of (pivot key, dict row)
    rank = 0
    for row in rows:
        r = {k: Fraction(v) for k, v in row.items() if v}
        for pk, prow in basis:
            if pk in r:
                f = r[pk]
                for k, v in prow.items():
                    new = r.get(k, 0) - f * v
                    if new:
                        r[k] = new
                    elif k in r:
                        del r[k]
        if r:
            pk = min(r)
            inv = 1 / r[pk]
            r = {k: v * inv for k, v in r.items()}
            basis.append((pk, r))
            rank += 1
    return rank


def evaluation_vectors(monos, d, L, N, samples, seed):
    """Numeric evaluation vectors for commutative p-symbol monomials.

    Each monomial (tuple of PSymbol tuples) is evaluated at ``samples``
    random MatrixTuples; the results form a vector per monomial.  Full rank
    certifies linear independence of the monomials as functions.
    """
    rng = random.Random(seed)
    tuples = [random_matrix_tuple(N, L, rng) for _ in range(samples)]
    out = []
    for mono in monos:
        vec = {}
        for idx, t in enumerate(tuples):
            v = Fraction(1)
            for s in mono:
                if s[0] == "m":
                    v *= eval_entry(s[1], s[2], s[3], t)
                else:
                    v *= eval_trace(s[1], t)
            if v:
                vec[idx] = v
        out.append(vec)
    return out
