"""The Poisson layer: brackets on the limit algebra of word generators.

The commutative algebra is freely generated by the symbols

    p[i,j](z)   -- matrix-entry generators, 1 <= i, j <= d, z a nonempty word,
    P(zh)       -- trace generators indexed by circular words zh,

encoded here as tuples ('m', i, j, z) and ('t', zh) with zh the canonical
(lexicographically least) rotation.  A polynomial is a dict mapping sorted
symbol tuples (commutative monomials) to Fraction coefficients.

The three closed-form generator brackets (matrix/matrix, matrix/trace,
trace/trace) are quadratic-linear expressions obtained by matching equal
letters in the two words and exchanging the surrounding word fragments.
``leibniz_oracle`` recomputes them from scratch inside the symmetric algebra
S(gl(N,C)^{+L}) at finite rank, using only the Leibniz rule and the bracket
of matrix units; the closed forms must agree with it after evaluation.

Also here: the pseudo-concatenation algebra on words, the Lie bracket it
induces on matrix generators, and the h-deformation that connects the full
quadratic bracket (h = 1) to that linear one (h = 0).
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from .pbw import bracket_gens
from .words import EPSILON, check_word, circular_canonical, pseudo_concat


# -- polynomials in the p-symbols -------------------------------------------


def msym(i, j, z):
    return ("m", i, j, check_word(z))


def tsym(z):
    return ("t", circular_canonical(z))


def p_zero():
    return {}


def p_add(dst, mono, coeff):
    """In place: dst += coeff * mono.  mono is an unsorted symbol tuple."""
    key = tuple(sorted(mono))
    new = dst.get(key, 0) + coeff
    if new:
        dst[key] = new
    elif key in dst:
        del dst[key]
    return dst


def p_scale_add(dst, other, coeff=1):
    for mono, c in other.items():
        p_add(dst, mono, c * coeff)
    return dst


def p_mul(a, b):
    out = {}
    for m1, c1 in a.items():
        for m2, c2 in b.items():
            p_add(out, m1 + m2, c1 * c2)
    return out


def p_eq(a, b):
    keys = set(a) | set(b)
    return all(a.get(k, 0) == b.get(k, 0) for k in keys)


def p_dump(poly):
    """Deterministic text form: coeff * p[i,j|w] * P[zh] factors."""
    if not poly:
        return "0"

    def fmt(sym):
        if sym[0] == "m":
            _, i, j, z = sym
            return f"p[{i},{j}|{''.join(map(str, z))}]"
        return f"P[{''.join(map(str, sym[1]))}]"

    parts = []
    for mono in sorted(poly):
        c = poly[mono]
        body = " * ".join(fmt(s) for s in mono) or "1"
        parts.append(f"{c} * {body}")
    return " + ".join(parts)


# -- the KKS double bracket on the free algebra ------------------------------


def kks(z, w):
    """Double bracket of two words: dict {(left word, right word): int}.

    Matching letters z_r = w_s contribute the two tensor products obtained
    by exchanging the fragments around the match, with the matched letter
    kept on one side or the other.  Empty words stand for the unit.
    """
    z = check_word(z)
    w = check_word(w)
    out = {}

    def add(pair, c):
        new = out.get(pair, 0) + c
        if new:
            out[pair] = new
        elif pair in out:
            del out[pair]

    for r in range(len(z)):
        for s in range(len(w)):
            if z[r] != w[s]:
                continue
            add((w[:s] + z[r + 1:], z[:r + 1] + w[s + 1:]), 1)
            add((w[:s] + z[r:], z[:r] + w[s + 1:]), -1)
    return out


def kks_on_letters(a, b):
    # <<a, a>> = 1 (x) a - a (x) 1, zero for distinct letters
    if a != b:
        return {}
    return {(EPSILON, (a,)): 1, ((a,), EPSILON): -1}


# -- generator brackets ------------------------------------------------------


def _p_or_delta(i, j, word):
    """As a polynomial: p_ij(word), or the Kronecker scalar for the empty word."""
    if word == EPSILON:
        return {(): Fraction(1)} if i == j else {}
    return {(msym(i, j, word),): Fraction(1)}


def bracket_pp(i, j, z, k, l, w):
    """{p_ij(z), p_kl(w)}: the matrix/matrix bracket, from the double bracket."""
    out = {}
    for (u1, u2), c in kks(z, w).items():
        p_scale_add(out, p_mul(_p_or_delta(k, j, u1), _p_or_delta(i, l, u2)), c)
    return out


def bracket_pp_direct(i, j, z, k, l, w):
    """Same bracket, written out as the literal double sum over letter matches
    (not through the double bracket); used to cross-check bracket_pp."""
    z = check_word(z)
    w = check_word(w)
    out = {}
    for r in range(len(z)):
        for s in range(len(w)):
            if z[r] != w[s]:
                continue
            p_scale_add(out, p_mul(_p_or_delta(k, j, w[:s] + z[r + 1:]),
                                   _p_or_delta(i, l, z[:r + 1] + w[s + 1:])), 1)
            p_scale_add(out, p_mul(_p_or_delta(k, j, w[:s] + z[r:]),
                                   _p_or_delta(i, l, z[:r] + w[s + 1:])), -1)
    return out


def bracket_pt(i, j, z, wh):
    """{p_ij(z), P(wh)}: matrix/trace bracket; wh is any representative."""
    z = check_word(z)
    w = check_word(wh)
    out = {}
    for r in range(len(z)):
        for s in range(len(w)):
            if z[r] != w[s]:
                continue
            glue = w[s + 1:] + w[:s]
            p_add(out, (msym(i, j, z[:r + 1] + glue + z[r + 1:]),), Fraction(1))
            p_add(out, (msym(i, j, z[:r] + glue + z[r:]),), Fraction(-1))
    return out


def bracket_tt(zh, wh):
    """{P(zh), P(wh)}: the necklace bracket on circular words."""
    z = check_word(zh)
    w = check_word(wh)
    out = {}
    for r in range(len(z)):
        for s in range(len(w)):
            if z[r] != w[s]:
                continue
            glue = w[s + 1:] + w[:s]
            p_add(out, (tsym(z[:r + 1] + glue + z[r + 1:]),), Fraction(1))
            p_add(out, (tsym(z[:r] + glue + z[r:]),), Fraction(-1))
    return out


def _gen_bracket(s1, s2):
    if s1[0] == "m" and s2[0] == "m":
        return bracket_pp(s1[1], s1[2], s1[3], s2[1], s2[2], s2[3])
    if s1[0] == "m":
        return bracket_pt(s1[1], s1[2], s1[3], s2[1])
    if s2[0] == "m":
        out = {}
        p_scale_add(out, bracket_pt(s2[1], s2[2], s2[3], s1[1]), -1)
        return out
    return bracket_tt(s1[1], s2[1])


def poisson_bracket(a, b):
    """The bracket extended to arbitrary polynomials by bilinearity and Leibniz."""
    out = {}
    for m1, c1 in a.items():
        for m2, c2 in b.items():
            for r in range(len(m1)):
                for s in range(len(m2)):
                    rest = {m1[:r] + m1[r + 1:] + m2[:s] + m2[s + 1:]: c1 * c2}
                    p_scale_add(out, p_mul(_gen_bracket(m1[r], m2[s]), rest))
    return out


# -- h-deformation and the linear degeneration -------------------------------


def bracket_pp_linear(i, j, z, k, l, w):
    """The linear part: only the two extreme letter matches survive."""
    out = {}
    zw = pseudo_concat(z, w)
    if zw is not None and k == j:
        p_add(out, (msym(i, l, zw),), Fraction(1))
    wz = pseudo_concat(w, z)
    if wz is not None and i == l:
        p_add(out, (msym(k, j, wz),), Fraction(-1))
    return out


def bracket_pp_quadratic(i, j, z, k, l, w):
    """The genuinely quadratic matches: everything except the two extremes."""
    z = check_word(z)
    w = check_word(w)
    m, n = len(z), len(w)
    out = {}
    for r in range(m):
        for s in range(n):
            if z[r] != w[s]:
                continue
            if (r, s) != (m - 1, 0):
                p_scale_add(out, p_mul(_p_or_delta(k, j, w[:s] + z[r + 1:]),
                                       _p_or_delta(i, l, z[:r + 1] + w[s + 1:])), 1)
            if (r, s) != (0, n - 1):
                p_scale_add(out, p_mul(_p_or_delta(k, j, w[:s] + z[r:]),
                                       _p_or_delta(i, l, z[:r] + w[s + 1:])), -1)
    return out


def h_bracket_pp(i, j, z, k, l, w, h):
    """{.,.}_1 + h {.,.}_2; at h = 1 this is bracket_pp, at h = 0 the Lie bracket."""
    out = bracket_pp_linear(i, j, z, k, l, w)
    p_scale_add(out, bracket_pp_quadratic(i, j, z, k, l, w), h)
    return out


def g_bracket(i, j, z, k, l, w):
    """Lie bracket of matrix generators over the pseudo-concatenation algebra.

    [z_ij, w_kl] = delta_kj (z . w)_il - delta_il (w . z)_kj, as a dict
    {(i, j, word): int}; a vanishing pseudo-concatenation contributes nothing.
    """
    out = {}
    zw = pseudo_concat(z, w)
    if zw is not None and k == j:
        out[(i, l, zw)] = out.get((i, l, zw), 0) + 1
    wz = pseudo_concat(w, z)
    if wz is not None and i == l:
        key = (k, j, wz)
        new = out.get(key, 0) - 1
        if new:
            out[key] = new
        elif key in out:
            del out[key]
    return out


def unit_check(L, max_len):
    """The sum of all letters is a two-sided unit of the word algebra; the
    product itself is associative.  Returns True or raises AssertionError."""
    from .words import all_words

    words = all_words(L, max_len)
    for w in words:
        left = {}
        right = {}
        for a in range(1, L + 1):
            u = pseudo_concat((a,), w)
            if u is not None:
                left[u] = left.get(u, 0) + 1
            u = pseudo_concat(w, (a,))
            if u is not None:
                right[u] = right.get(u, 0) + 1
        assert left == {w: 1} and right == {w: 1}, w
    for u, v, w in itertools.product(words, repeat=3):
        if len(u) + len(v) + len(w) > max_len + 2:
            continue
        uv = pseudo_concat(u, v)
        vw = pseudo_concat(v, w)
        lhs = pseudo_concat(uv, w) if uv is not None else None
        rhs = pseudo_concat(u, vw) if vw is not None else None
        assert lhs == rhs, (u, v, w)
    return True


def top_degree_crosscheck(L, w, wt, idx_tuples=None):
    """Leading terms of the universal commutation relation = the Poisson bracket.

    Keeps the terms of the form-1 relation for (w, wt) whose combined word
    length is one less than the input total, reads them as commutative symbol
    products, and compares with bracket_pp at each index tuple.  Returns True
    or raises AssertionError.
    """
    from .stable import stable_comm

    if idx_tuples is None:
        idx_tuples = [(1, 2, 3, 4), (1, 1, 2, 2), (1, 1, 1, 2), (1, 2, 1, 1),
                      (1, 1, 1, 1)]
    rel = stable_comm(L, w, wt, 1)
    total = len(w) + len(wt)
    for (i, j, k, l) in idx_tuples:
        sym = {"i": i, "j": j, "k": k, "l": l}
        lhs = {}
        for (tag, z1, z2), c in rel.items():
            if len(z1) + len(z2) != total - 1:
                continue
            f1 = _p_or_delta(sym[tag[0][0]], sym[tag[0][1]], z1)
            f2 = _p_or_delta(sym[tag[1][0]], sym[tag[1][1]], z2)
            p_scale_add(lhs, p_mul(f1, f2), c)
        rhs = bracket_pp(i, j, w, k, l, wt)
        assert p_eq(lhs, rhs), (w, wt, (i, j, k, l), p_dump(lhs), p_dump(rhs))
    return True


# -- finite-rank oracle in the symmetric algebra -----------------------------
#
# Monomials are sorted tuples of matrix units (i, j, a); everything commutes,
# and the bracket of two monomials is computed by the Leibniz rule from the
# bracket of matrix units.  No closed formulas from above are used.


def sym_add(dst, mono, coeff):
    key = tuple(sorted(mono))
    new = dst.get(key, 0) + coeff
    if new:
        dst[key] = new
    elif key in dst:
        del dst[key]
    return dst


def sym_mul(a, b):
    out = {}
    for m1, c1 in a.items():
        for m2, c2 in b.items():
            sym_add(out, m1 + m2, c1 * c2)
    return out


def sym_eq(a, b):
    keys = set(a) | set(b)
    return all(a.get(k, 0) == b.get(k, 0) for k in keys)


def sym_bracket(a, b):
    out = {}
    for m1, c1 in a.items():
        for m2, c2 in b.items():
            for r in range(len(m1)):
                for s in range(len(m2)):
                    rest = m1[:r] + m1[r + 1:] + m2[:s] + m2[s + 1:]
                    for g, sign in bracket_gens(m1[r], m2[s]):
                        sym_add(out, rest + (g,), sign * c1 * c2)
    return out


def sym_p(i, j, z, N):
    """The finite-rank image of p_ij(z): a sum of matrix-unit monomials."""
    z = check_word(z)
    out = {}
    for mids in itertools.product(range(1, N + 1), repeat=len(z) - 1):
        rows = (i,) + mids
        cols = mids + (j,)
        sym_add(out, tuple((rows[p], cols[p], z[p]) for p in range(len(z))),
                Fraction(1))
    return out


def sym_trace_p(zh, N):
    out = {}
    for i in range(1, N + 1):
        for mono, c in sym_p(i, i, zh, N).items():
            sym_add(out, mono, c)
    return out


def sym_eval(poly, N):
    """Evaluate a symbol polynomial at finite rank N."""
    out = {}
    for mono, c in poly.items():
        term = {(): Fraction(1)}
        for s in mono:
            factor = sym_p(s[1], s[2], s[3], N) if s[0] == "m" else sym_trace_p(s[1], N)
            term = sym_mul(term, factor)
        for m2, c2 in term.items():
            sym_add(out, m2, c * c2)
    return out


def leibniz_oracle(sym1, sym2, N):
    """The bracket of two generator symbols computed entirely at finite rank."""
    def ev(s):
        return sym_p(s[1], s[2], s[3], N) if s[0] == "m" else sym_trace_p(s[1], N)
    return sym_bracket(ev(sym1), ev(sym2))
