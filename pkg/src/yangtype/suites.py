"""Batch verification suites shared by the CLI and the test suite.

Every function returns a list of failure-description strings; an empty list
means the whole suite passed.  All checks are exact — no tolerances.
"""

from __future__ import annotations

import itertools
import random
from fractions import Fraction

from . import lift, matrices, poisson, stable, words
from .pbw import DEFAULT, PbwElement, ProjectionOrder
from .scalars import S


# -- pbw engine --------------------------------------------------------------


def _random_element(N, L, rng, n_terms=3, max_len=2):
    terms = {}
    for _ in range(n_terms):
        mono = tuple((rng.randint(1, N), rng.randint(1, N), rng.randint(1, L))
                     for _ in range(rng.randint(0, max_len)))
        terms[mono] = terms.get(mono, 0) + Fraction(rng.randint(-3, 3))
    return PbwElement(N, terms)


def run_pbw(seed=0, N=3, L=2, rounds=25):
    rng = random.Random(seed)
    bad = []
    # associativity and unit
    for _ in range(rounds):
        x = _random_element(N, L, rng)
        y = _random_element(N, L, rng)
        z = _random_element(N, L, rng)
        if (x * y) * z != x * (y * z):
            bad.append(f"associativity failed: {x.dump()} | {y.dump()} | {z.dump()}")
        if x * PbwElement.one(N) != x or PbwElement.one(N) * x != x:
            bad.append(f"unit failed: {x.dump()}")
    # Jacobi on random elements
    for _ in range(rounds):
        x, y, z = (_random_element(N, L, rng) for _ in range(3))
        j = (x.commutator(y.commutator(z)) + y.commutator(z.commutator(x))
             + z.commutator(x.commutator(y)))
        if not j.is_zero():
            bad.append("Jacobi failed on random triple")
    # order conversion round trip
    for _ in range(rounds):
        x = _random_element(N, L, rng)
        back = x.reorder(ProjectionOrder(N)).reorder(DEFAULT)
        if back != x:
            bad.append(f"order round-trip failed: {x.dump()}")
    # projection is an algebra morphism on weight-0 elements
    for _ in range(rounds):
        x = _random_element(N, L, rng)
        y = _random_element(N, L, rng)
        x = _weight_zero_part(x)
        y = _weight_zero_part(y)
        lhs = (x * y).project()
        rhs = x.project() * y.project()
        if lhs != rhs:
            bad.append("projection morphism failed")
    # the trace identity relating the two orders of a mixed length-3 word
    for N2 in (2, 3, 4):
        e121 = lift.trace_special((1, 2, 1), N2)
        e112 = lift.trace_special((1, 1, 2), N2)
        e1 = lift.trace_special((1,), N2)
        e2 = lift.trace_special((2,), N2)
        e12 = lift.trace_special((1, 2), N2)
        if e121 - e112 - e1 * e2 + N2 * e12 != 0:
            bad.append(f"trace rearrangement identity failed at N={N2}")
    return bad


def _weight_zero_part(x):
    from .pbw import gen_weight
    kept = {m: c for m, c in x.terms.items()
            if sum(gen_weight(g, x.N) for g in m) == 0}
    return PbwElement(x.N, kept, x.order, _normal=True)


# -- stable relations --------------------------------------------------------


def _word_pairs(L, max_total):
    for n1 in range(1, max_total):
        for n2 in range(1, max_total - n1 + 1):
            for w in words.words_of_length(L, n1):
                for wt in words.words_of_length(L, n2):
                    yield w, wt


def run_yangian(max_total=6):
    try:
        stable.yangian_regression(max_total)
    except AssertionError as e:
        return [f"yangian regression failed: {e.args[0] if e.args else e}"]
    return []


def run_stable(L=2, max_total=4, N_values=(4, 5, 6),
               idx_tuples=((1, 2, 3, 4), (1, 1, 2, 2), (1, 1, 1, 1), (1, 1, 1, 2)),
               form=1):
    bad = []
    for w, wt in _word_pairs(L, max_total):
        rel = stable.stable_comm(L, w, wt, form)
        # structural constraints: degree bound and parity
        total = len(w) + len(wt)
        for (tag, z1, z2), c in rel.items():
            deficit = total - len(z1) - len(z2)
            if deficit < 1:
                bad.append(f"degree bound violated for {w},{wt}: {tag},{z1},{z2}")
            odd = deficit % 2 == 1
            expect = stable.ODD_TAG[form] if odd else stable.EVEN_TAG[form]
            if tag != expect:
                bad.append(f"parity/tag violated for {w},{wt}: {tag},{z1},{z2}")
        ok, where = stable.instantiate_check(L, w, wt, form, idx_tuples, N_values)
        if not ok:
            bad.append(f"instantiate_check failed for {w},{wt} at {where}")
        # split invariance
        if stable.stable_comm_lastsplit(L, w, wt, form) != rel:
            bad.append(f"split invariance failed for {w},{wt}")
        # swap symmetry between forms 1 and 4
        flip = stable.stable_comm(L, wt, w, stable.SWAP_FORM[form])
        relabeled = {}
        for (tag, z1, z2), c in flip.items():
            key = (stable._sub_tag(tag, stable._SWAP_SYM), z1, z2)
            relabeled[key] = relabeled.get(key, 0) - c
        if relabeled != rel:
            bad.append(f"form swap symmetry failed for {w},{wt}")
        # normalized version instantiates to the same element
        norm = stable.normalize_relation(L, rel, total)
        for N in (max(N_values),):
            for idx in idx_tuples:
                a = stable.instantiate(rel, *idx, N)
                b = stable.instantiate(norm, *idx, N)
                if a != b:
                    bad.append(f"normalize changed value for {w},{wt} at {idx}")
    return bad


def run_stable_sindep(L=2, max_total=3, N_values=(4,), s_values=(0, 1, -2),
                      idx_tuples=((1, 2, 3, 4), (1, 1, 1, 2))):
    """The same universal relations hold verbatim for the lifted elements."""
    bad = []
    for w, wt in _word_pairs(L, max_total):
        for s in s_values:
            ok, where = stable.instantiate_check(
                L, w, wt, 1, idx_tuples, N_values,
                factory_maker=lambda N: stable.lift_factory(N, s))
            if not ok:
                bad.append(f"s-independence failed for {w},{wt} at s={s}, {where}")
    return bad


def run_extraction(L=2, max_total=3, N=8, form=1):
    bad = []
    for w, wt in _word_pairs(L, max_total):
        got = stable.extract_by_linear_algebra(L, w, wt, form, N)
        want = stable.stable_comm(L, w, wt, form)
        if got != want:
            bad.append(f"extraction mismatch for {w},{wt}: {got} != {want}")
    return bad


# -- liftings and projections ------------------------------------------------


def run_projection(L=2, max_len=3, N_values=(3, 4), s_values=(0, 1, -2)):
    bad = []
    for w in words.all_words(L, max_len):
        for N in N_values:
            for s in s_values:
                for shifted in (False, True):
                    try:
                        lift.verify_projection(w, N, s, shifted)
                    except AssertionError as e:
                        bad.append(f"projection failed: {e.args[0]}")
    return bad


def run_dual_route(L=2, max_len=3, N_values=(2, 3, 4), shifted=False):
    """The dominance-order sum equals the geometric-series coefficient,
    with fully symbolic s."""
    bad = []
    for w in words.all_words(L, max_len):
        for N in N_values:
            for i in range(1, N + 1):
                for j in range(1, N + 1):
                    a = lift.lift_t(i, j, w, N, S, shifted)
                    b = lift.lift_t_series(i, j, w, N, S, shifted)
                    if a != b:
                        bad.append(f"dual-route mismatch: w={w} N={N} ({i},{j})")
    return bad


def run_covariance(L=2, max_len=3, N=4):
    """[e_ij(w), diag E_kl] = delta_kj e_il(w) - delta_il e_kj(w)."""
    bad = []
    for w in words.all_words(L, max_len):
        for i, j, k, l in itertools.product(range(1, N + 1), repeat=4):
            diag = PbwElement.zero(N)
            for a in range(1, L + 1):
                diag = diag + PbwElement.generator(N, k, l, a)
            lhs = lift.special(i, j, w, N).commutator(diag)
            rhs = PbwElement.zero(N)
            if k == j:
                rhs = rhs + lift.special(i, l, w, N)
            if i == l:
                rhs = rhs - lift.special(k, j, w, N)
            if lhs != rhs:
                bad.append(f"covariance failed: w={w} ({i},{j},{k},{l})")
        if len(bad) > 3:
            return bad
    return bad


def _series_coefficients(n_max, s):
    """Commutative one-letter oracle: expand (1 - x/(u+s))^{-1}.

    Returns a[n][k] = coefficient of u^{-n} x^k, computed by literal series
    multiplication of inverse powers of (u + s); no binomials.
    """
    # (u+s)^{-1} as coefficients of u^{-1-i}
    base = [(-s) ** i if i else Fraction(1) for i in range(n_max)]
    a = [[Fraction(0)] * (n_max + 1) for _ in range(n_max + 1)]
    a[0][0] = Fraction(1)
    power = [Fraction(1)] + [Fraction(0)] * (n_max - 1)  # (u+s)^{-k} shifted by k
    for k in range(1, n_max + 1):
        # multiply by (u+s)^{-1}: convolution of tail coefficients
        power = [sum((power[i] * base[d - i] for i in range(d + 1)), Fraction(0))
                 for d in range(n_max)]
        # x^k (u+s)^{-k}: u-exponent is -(k + d)
        for d in range(n_max):
            if k + d <= n_max:
                a[k + d][k] += power[d]
    return a


def run_transition(L=2, max_len=5, series_max=6):
    bad = []
    # leading coefficient
    for w in words.all_words(L, 3):
        if words.transition_coeff(w, w, Fraction(7)) != 1:
            bad.append(f"c(w,w) != 1 for {w}")
    # cocycle composition over the dominance interval
    vals = (Fraction(2), Fraction(-3))
    for w in words.all_words(L, max_len):
        for wp in words.dominated_words(w):
            a, b = vals
            acc = 0
            for wm in words.dominated_words(w):
                if words.dominates(wm, wp):
                    acc += (words.transition_coeff(w, wm, a)
                            * words.transition_coeff(wm, wp, b))
            if acc != words.transition_coeff(w, wp, a + b):
                bad.append(f"cocycle failed for {w} -> {wp}")
    # one-letter series oracle
    for s in (Fraction(1), Fraction(-2), Fraction(3, 2)):
        a = _series_coefficients(series_max, s)
        for n in range(1, series_max + 1):
            for k in range(1, n + 1):
                want = words.transition_coeff((1,) * n, (1,) * k, -s)
                if a[n][k] != want:
                    bad.append(f"series oracle mismatch at n={n},k={k},s={s}")
    return bad


# -- poisson layer -----------------------------------------------------------


def _msyms(d, L, max_len):
    for w in words.all_words(L, max_len):
        for i in range(1, d + 1):
            for j in range(1, d + 1):
                yield poisson.msym(i, j, w)


def _tsyms(L, max_len):
    for w in words.circular_words(L, max_len):
        yield poisson.tsym(w)


def run_poisson_oracle(L=2, d=2, max_len=3, N=3):
    bad = []
    gens = list(_msyms(d, L, max_len)) + list(_tsyms(L, max_len))
    for s1 in gens:
        for s2 in gens:
            closed = poisson.sym_eval(poisson._gen_bracket(s1, s2), N)
            direct = poisson.leibniz_oracle(s1, s2, N)
            if not poisson.sym_eq(closed, direct):
                bad.append(f"oracle mismatch for {s1}, {s2}")
        if len(bad) > 5:
            return bad
    return bad


def _sym_len(s):
    return len(s[3]) if s[0] == "m" else len(s[1])


def run_poisson_axioms(L=2, d=2, max_total=5):
    bad = []
    pair_gens = list(_msyms(d, L, max_total - 1)) + list(_tsyms(L, max_total - 1))
    gens = [g for g in pair_gens if _sym_len(g) <= max_total - 2]
    polys = {g: {(g,): Fraction(1)} for g in pair_gens}
    # antisymmetry and bracket degree on pairs
    for g1, g2 in itertools.combinations_with_replacement(pair_gens, 2):
        if _sym_len(g1) + _sym_len(g2) > max_total:
            continue
        b12 = poisson.poisson_bracket(polys[g1], polys[g2])
        b21 = poisson.poisson_bracket(polys[g2], polys[g1])
        total = {}
        poisson.p_scale_add(total, b12)
        poisson.p_scale_add(total, b21)
        if total:
            bad.append(f"antisymmetry failed for {g1}, {g2}")
        want = _sym_len(g1) + _sym_len(g2) - 1
        for mono in b12:
            if sum(_sym_len(s) for s in mono) != want:
                bad.append(f"bracket degree != -1 for {g1}, {g2}")
                break
    # Jacobi on triples
    for g1, g2, g3 in itertools.combinations_with_replacement(gens, 3):
        if _sym_len(g1) + _sym_len(g2) + _sym_len(g3) > max_total:
            continue
        total = {}
        for a, b, c in ((g1, g2, g3), (g2, g3, g1), (g3, g1, g2)):
            inner = poisson.poisson_bracket(polys[b], polys[c])
            poisson.p_scale_add(total, poisson.poisson_bracket(polys[a], inner))
        if total:
            bad.append(f"Jacobi failed for {g1}, {g2}, {g3}")
    return bad


def run_top_degree(L=2, max_total=4):
    bad = []
    for w, wt in _word_pairs(L, max_total):
        try:
            poisson.top_degree_crosscheck(L, w, wt)
        except AssertionError as e:
            bad.append(f"top-degree mismatch for {w},{wt}")
    return bad


def run_degeneration(L=2, d=2, max_total=4, unit_len=3):
    bad = []
    idx = list(itertools.product(range(1, d + 1), repeat=4))
    for z, w in _word_pairs(L, max_total):
        for (i, j, k, l) in idx:
            h0 = poisson.h_bracket_pp(i, j, z, k, l, w, 0)
            g = poisson.g_bracket(i, j, z, k, l, w)
            g_as_poly = {}
            for (a, b, word), c in g.items():
                poisson.p_add(g_as_poly, (poisson.msym(a, b, word),), Fraction(c))
            if not poisson.p_eq(h0, g_as_poly):
                bad.append(f"h=0 degeneration mismatch for {z},{w} at ({i},{j},{k},{l})")
        # h = 1 must reproduce the full bracket
        h1 = poisson.h_bracket_pp(1, 1, z, 1, 2, w, 1)
        if not poisson.p_eq(h1, poisson.bracket_pp(1, 1, z, 1, 2, w)):
            bad.append(f"h=1 does not match full bracket for {z},{w}")
        # the double-bracket route and the literal double sum agree
        if not poisson.p_eq(poisson.bracket_pp(1, 2, z, 2, 1, w),
                            poisson.bracket_pp_direct(1, 2, z, 2, 1, w)):
            bad.append(f"double-bracket route mismatch for {z},{w}")
    try:
        poisson.unit_check(L, unit_len)
    except AssertionError as e:
        bad.append(f"word-algebra unit/associativity failed: {e.args[0]}")
    return bad


def run_necklace_center(L=2, k_max=3, max_len=3):
    bad = []
    for a in range(1, L + 1):
        for k in range(1, k_max + 1):
            for w in words.circular_words(L, max_len):
                if poisson.bracket_tt((a,) * k, w):
                    bad.append(f"central element moved: letter {a}^{k} vs {w}")
    return bad


# -- normal basis independence (finite-rank proxy) ---------------------------


def t_generators(d, L, max_len):
    """All t-generator labels (i, j, word) ordered by the normal-monomial order."""
    gens = []
    for i in range(1, d + 1):
        for j in range(1, d + 1):
            for w in words.all_words(L, max_len):
                gens.append((i, j, w))
    gens.sort(key=lambda g: ((g[0], g[1]), len(g[2]), g[2]))
    return gens


def normal_monomials(d, L, max_deg):
    """Multisets of t-generators with total word length <= max_deg, as sorted
    tuples (the normal monomials); includes the empty monomial."""
    gens = t_generators(d, L, max_deg)
    out = [()]
    def extend(prefix, start, budget):
        for p in range(start, len(gens)):
            g = gens[p]
            cost = len(g[2])
            if cost > budget:
                continue
            mono = prefix + (g,)
            out.append(mono)
            extend(mono, p, budget - cost)
    extend((), 0, max_deg)
    return out


def run_normal_independence(d=2, L=2, max_deg=3, N=8, s=Fraction(0)):
    monos = normal_monomials(d, L, max_deg)
    cache = {}
    def gen_elem(g):
        if g not in cache:
            cache[g] = lift.lift_t(g[0], g[1], g[2], N, s, shifted=True)
        return cache[g]
    rows = []
    for mono in monos:
        e = PbwElement.one(N)
        for g in mono:
            e = e * gen_elem(g)
        rows.append(e.terms)
    rank = matrices.sparse_rank(rows)
    if rank != len(monos):
        return [f"normal monomials dependent: rank {rank} of {len(monos)} at N={N}"]
    return []


# -- matrix oracle -----------------------------------------------------------


def run_matrix_oracle(seed=0, L=2, N=4, d=2, max_len=3, samples=3):
    rng = random.Random(seed)
    bad = []
    wordlist = words.all_words(L, max_len)
    for _ in range(samples):
        t = matrices.random_matrix_tuple(N, L, rng)
        g = matrices.random_unimodular(N - d, rng)
        for issue in matrices.invariance_check(d, t, g, wordlist):
            bad.append(f"invariance violated: {issue}")
        for w in wordlist:
            if not matrices.trace_rotation_check(w, t):
                bad.append(f"trace not rotation invariant for {w}")
    return bad


SUITES = {
    "pbw": lambda a: run_pbw(seed=a.seed),
    "yangian": lambda a: run_yangian(max_total=a.max_degree),
    "stable": lambda a: (run_stable(L=a.L, max_total=a.max_total)
                         + run_extraction(L=a.L, max_total=min(a.max_total, 3))),
    "projection": lambda a: (run_projection(L=a.L, max_len=a.max_len,
                                            N_values=tuple(a.N), s_values=tuple(a.s))
                             + run_dual_route(L=a.L, max_len=a.max_len)
                             + run_transition(L=a.L)),
    "poisson": lambda a: (run_poisson_oracle(L=a.L)
                          + run_poisson_axioms(L=a.L, max_total=a.max_len)
                          + run_top_degree(L=a.L)
                          + run_degeneration(L=a.L)
                          + run_necklace_center(L=a.L)),
}
