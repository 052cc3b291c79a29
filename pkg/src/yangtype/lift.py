"""Special elements and their parameter liftings.

For a word w = w_1 ... w_n over {1,...,L}, the special element

    e_{ij}(w; N) = sum over a_1,...,a_{n-1} in {1..N} of
                   E_{i a_1 | w_1} E_{a_1 a_2 | w_2} ... E_{a_{n-1} j | w_n}

lives in U(gl(N,C)^{+L}), and e(w; N) is its trace (sum over i = j).
For the empty word, e_{ij}() is the Kronecker delta.

The lifting t~_{ij}(w; N; s) corrects e_{ij}(w; N) by lower terms along the
dominance order so that the projection to level N-1 reproduces the same
element with the parameter shifted by one:

    pi(t~_{ij}(w; N; s)) = t~_{ij}(w; N-1; s-1).

The shifted normalisation t_{ij}(w; N; s) = t~_{ij}(w; N; N+s) keeps s fixed
under projection.  Both are also obtained as coefficients of a matrix
geometric series, which ``lift_t_series`` implements literally as a second
route.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from functools import lru_cache

from .pbw import DEFAULT, PbwElement
from .words import EPSILON, check_word, dominated_words, transition_coeff


@lru_cache(maxsize=None)
def special(i, j, w, N, order=DEFAULT):
    """The element e_{ij}(w; N); e_{ij}(epsilon) is the scalar delta_{ij}."""
    w = check_word(w, allow_empty=True)
    if not (1 <= i <= N and 1 <= j <= N):
        raise ValueError(f"index out of range for N={N}")
    if w == EPSILON:
        c = Fraction(1 if i == j else 0)
        return PbwElement(N, {(): c} if c else {}, order, _normal=True)
    terms = {}
    n = len(w)
    for mids in itertools.product(range(1, N + 1), repeat=n - 1):
        rows = (i,) + mids
        cols = mids + (j,)
        mono = tuple((rows[p], cols[p], w[p]) for p in range(n))
        terms[mono] = terms.get(mono, 0) + Fraction(1)
    return PbwElement(N, terms, order)


def trace_special(w, N, order=DEFAULT):
    """e(w; N) = sum_i e_{ii}(w; N)."""
    acc = PbwElement.zero(N, order)
    for i in range(1, N + 1):
        acc = acc + special(i, i, w, N, order)
    return acc


def lift_t(i, j, w, N, s, shifted=False, order=DEFAULT):
    """t~_{ij}(w; N; s), or the shifted t_{ij}(w; N; s) = t~ at N + s.

    s may be a rational number or a polynomial in the formal parameter.
    """
    w = check_word(w)
    s_eff = s + N if shifted else s
    acc = special(i, j, w, N, order)
    for wp in dominated_words(w):
        if wp == w:
            continue
        acc = acc + transition_coeff(w, wp, -s_eff) * special(i, j, wp, N, order)
    return acc


def trace_lift_t(w, N, s, shifted=False, order=DEFAULT):
    acc = PbwElement.zero(N, order)
    for i in range(1, N + 1):
        acc = acc + lift_t(i, i, w, N, s, shifted, order)
    return acc


def shift_expand(w, s, s_new):
    """Rewrite t~(w; . ; s) in the t~(. ; . ; s_new) basis.

    Returns a list of (word, coeff) pairs: t~_{ij}(w; N; s) equals the sum of
    coeff * t~_{ij}(word; N; s_new) over the dominated words.  The transition
    coefficients compose as a cocycle, which makes this exact for any pair of
    parameter values.
    """
    delta = s_new - s
    out = []
    for wp in dominated_words(w):
        out.append((wp, transition_coeff(w, wp, delta)))
    return out


# -- dual route: matrix geometric series ------------------------------------


def _series_add(dst, key, elem):
    if key in dst:
        dst[key] = dst[key] + elem
    else:
        dst[key] = elem


def _series_mul(A, B, N, order, max_len):
    """Product of two N x N matrices whose entries are dicts {u-word: PbwElement}.

    A u-word records, per position, which letter's expansion variable u_a the
    inverse-power came from; entries longer than max_len are discarded since
    they cannot contribute to the coefficients we read off.
    """
    out = [[{} for _ in range(N)] for _ in range(N)]
    for i in range(N):
        for k in range(N):
            if not A[i][k]:
                continue
            for j in range(N):
                for ua, ea in A[i][k].items():
                    for ub, eb in B[k][j].items():
                        key = ua + ub
                        if len(key) > max_len:
                            continue
                        _series_add(out[i][j], key, ea * eb)
    return out


@lru_cache(maxsize=None)
def _geom_series(letters, n, N, s_eff, order):
    # M[i][j] = sum_a sum_{p=0..n-1} (-s)^p (u_a-power p+1 marker) E_{ij|a}
    # A u-word letter (a, p) stands for u_a^{-p-1}; its "length" is p + 1.
    M = [[{} for _ in range(N)] for _ in range(N)]
    for a in letters:
        for p in range(n):
            c = (-s_eff) ** p if p else Fraction(1)
            for ii in range(N):
                for jj in range(N):
                    g = PbwElement.generator(N, ii + 1, jj + 1, a, order) * c
                    _series_add(M[ii][jj], ((a, p),), g)
    # total = 1 + M + M^2 + ... + M^n, tracking u-degree to prune
    def udeg(key):
        return sum(p + 1 for _, p in key)

    def prune(mat):
        for row in mat:
            for ent in row:
                for k in [k for k in ent if udeg(k) > n]:
                    del ent[k]
        return mat

    total = [[dict() for _ in range(N)] for _ in range(N)]
    for ii in range(N):
        total[ii][ii][()] = PbwElement.one(N, order)
    power = [[dict(ent) for ent in row] for row in total]
    M = prune(M)
    for _ in range(n):
        power = prune(_series_mul(power, M, N, order, n))
        for ii in range(N):
            for jj in range(N):
                for k, e in power[ii][jj].items():
                    _series_add(total[ii][jj], k, e)
    return total


def lift_t_series(i, j, w, N, s, shifted=False, order=DEFAULT):
    """t~_{ij}(w; N; s) read off a truncated matrix geometric series.

    Expand (1 - sum_a E(N)_a / (u_a + s))^{-1} entrywise, with each
    1/(u_a + s) = sum_{p >= 0} (-s)^p u_a^{-p-1} truncated at total degree
    len(w); the coefficient of u_{w_1}^{-1} ... u_{w_n}^{-1} in entry (i, j)
    is the lifting.  Independent of the dominance-order formula.
    """
    w = check_word(w)
    s_eff = s + N if shifted else s
    n = len(w)
    letters = tuple(sorted(set(w)))
    total = _geom_series(letters, n, N, s_eff, order)
    # The u_a are free noncommuting variables.  A slot (a, p) stands for the
    # atomic factor u_a^{-p-1} = u_a^{-1} repeated p + 1 times, so a key
    # matches the monomial u_{w_1}^{-1} ... u_{w_n}^{-1} exactly when its
    # flattened letter sequence equals w.
    acc = PbwElement.zero(N, order)
    for key, e in total[i - 1][j - 1].items():
        flat = tuple(a for a, p in key for _ in range(p + 1))
        if flat == w:
            acc = acc + e
    return acc


# -- projection consistency --------------------------------------------------


def verify_projection(w, N, s, shifted=False):
    """Check the projection identity for every (i, j) with i, j <= N - 1.

    Unshifted: pi(t~_{ij}(w; N; s)) = t~_{ij}(w; N-1; s-1); shifted:
    pi(t_{ij}(w; N; s)) = t_{ij}(w; N-1; s) with the same s.  Also checks
    the trace version.  Returns True or raises AssertionError.
    """
    w = check_word(w)
    for i in range(1, N):
        for j in range(1, N):
            lhs = lift_t(i, j, w, N, s, shifted).project()
            rhs = lift_t(i, j, w, N - 1, s if shifted else s - 1, shifted)
            assert lhs == rhs, (w, N, s, i, j, shifted)
    tl = trace_lift_t(w, N, s, shifted).project()
    tr = trace_lift_t(w, N - 1, s if shifted else s - 1, shifted)
    assert tl == tr, (w, N, s, "trace", shifted)
    return True
