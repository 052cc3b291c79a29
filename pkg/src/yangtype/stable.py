"""Universal quadratic-linear commutation relations between special elements.

For words w, wt over {1,...,L} the commutator [e_{ij}(w; N), e_{kl}(wt; N)]
equals an N-independent bilinear expression in the e's, provided the ambient
rank N is at least the number of distinct row/column symbols involved.  The
expression comes in four canonical forms, differing in which products of
pairs are used:

    form 1:  sums of  delta e_{kj}(z1) e_{il}(z2)   (odd part)
                  and delta e_{ij}(z1) e_{kl}(z2)   (even part)
    form 2:  kj.il odd,  kl.ij even
    form 3:  il.kj odd,  ij.kl even
    form 4:  il.kj odd,  kl.ij even

A relation is stored as a dict mapping (tag, z1, z2) to an integer
coefficient, where tag is a pair of two-symbol strings over {i, j, k, l}
naming the row/column slots of the two factors, and z1, z2 are the words
(possibly empty; an empty word means a Kronecker delta in the slot's
symbols).  The parity of len(z1) + len(z2) relative to len(w) + len(wt)
decides whether a term belongs to the odd or the even family.
"""

from __future__ import annotations

import itertools
import json
from fractions import Fraction
from functools import lru_cache

from .lift import lift_t, special
from .pbw import DEFAULT, PbwElement
from .words import EPSILON, check_word, word_to_str, parse_word

# tag tables: which product shape carries the odd / even terms in each form
ODD_TAG = {1: ("kj", "il"), 2: ("kj", "il"), 3: ("il", "kj"), 4: ("il", "kj")}
EVEN_TAG = {1: ("ij", "kl"), 2: ("kl", "ij"), 3: ("ij", "kl"), 4: ("kl", "ij")}
# [e(w), e(wt)] = -[e(wt), e(w)] with (i,j) <-> (k,l): form pairing under swap
SWAP_FORM = {1: 4, 2: 3, 3: 2, 4: 1}

_SWAP_SYM = {"i": "k", "j": "l", "k": "i", "l": "j"}


def _sub_tag(tag, sub):
    return tuple("".join(sub.get(ch, ch) for ch in slot) for slot in tag)


def _merge(dst, key, coeff):
    new = dst.get(key, 0) + coeff
    if new:
        dst[key] = new
    elif key in dst:
        del dst[key]


@lru_cache(maxsize=None)
def stable_comm(L, w, wt, form):
    """The relation [e_{ij}(w), e_{kl}(wt)] in the requested canonical form.

    Returns a dict {(tag, z1, z2): int}.  The recursion splits w into its
    first letter and the rest, commutes each piece through e_{kl}(wt) in the
    form whose free slot sits next to the summed index, and glues the words
    back by concatenation.
    """
    w = check_word(w, L)
    wt = check_word(wt, L)
    if form not in (1, 2, 3, 4):
        raise ValueError("form must be 1..4")
    if len(w) == 1 and len(wt) == 1:
        a, b = w[0], wt[0]
        if a != b:
            return {}
        # [E_{ij|a}, E_{kl|a}] = delta_{kj} E_{il|a} - delta_{il} E_{kj|a}
        if form in (1, 2):
            raw = {(("kj", "il"), EPSILON, w): 1, (("kj", "il"), w, EPSILON): -1}
        else:
            raw = {(("il", "kj"), w, EPSILON): 1, (("il", "kj"), EPSILON, w): -1}
        return _to_form(L, raw, len(w) + len(wt), form)
    if len(w) == 1:
        # antisymmetry: negate, swap the roles of (i,j) and (k,l)
        flipped = stable_comm(L, wt, w, SWAP_FORM[form])
        out = {}
        for (tag, z1, z2), c in flipped.items():
            _merge(out, (_sub_tag(tag, _SWAP_SYM), z1, z2), -c)
        return _to_form(L, out, len(w) + len(wt), form)
    return _split_and_glue(L, w, wt, form, 1)


def stable_comm_lastsplit(L, w, wt, form):
    """Same relation, but splitting off the last letter of w instead of the
    first.  Uniqueness makes the output identical to stable_comm; kept as an
    independent check of split-invariance."""
    w = check_word(w, L)
    wt = check_word(wt, L)
    if len(w) < 2:
        return stable_comm(L, w, wt, form)
    return _split_and_glue(L, w, wt, form, len(w) - 1)


def _split_and_glue(L, w, wt, form, cut):
    head, tail = w[:cut], w[cut:]
    total = len(w) + len(wt)
    raw = {}
    # e_{ij}(w) = sum_a e_{ia}(head) e_{aj}(tail); Leibniz over the two factors.
    # First factor commuted in form 4 (free column slot j -> summed a sits at
    # the right edge of every term), second in form 3 (free row slot i -> a at
    # the left edge); the sum over a then re-concatenates the words.
    r1 = stable_comm(L, head, wt, 4)
    for (tag, z1, z2), c in r1.items():
        # form-4 tags put j in the rightmost factor's column, so the summed
        # index is adjacent to the right-multiplied e_{aj}(tail) and the sum
        # over it concatenates the words
        if "j" not in tag[1]:
            raise AssertionError(f"form-4 term with j outside last slot: {tag}")
        _merge(raw, (tag, z1, z2 + tail), c)
    r2 = stable_comm(L, tail, wt, 3)
    for (tag, z1, z2), c in r2.items():
        # form-3 tags put i in the leftmost factor's row, adjacent to the
        # left-multiplied e_{ia}(head)
        if "i" not in tag[0]:
            raise AssertionError(f"form-3 term with i outside first slot: {tag}")
        _merge(raw, (tag, head + z1, z2), c)
    return _to_form(L, raw, total, form)


def _to_form(L, raw, total, form):
    """Rewrite arbitrary (tag, z1, z2) terms into the canonical shape of form.

    A delta factor (empty word) commutes with everything, so such terms may
    be transposed for free; genuine quadratic terms are swapped at the cost
    of a commutator, which is expanded recursively (always via form 1) and
    pushed back on the worklist.
    """
    want_odd = ODD_TAG[form]
    want_even = EVEN_TAG[form]
    out = {}
    work = list(raw.items())
    while work:
        (tag, z1, z2), c = work.pop()
        if not c:
            continue
        odd = (total - len(z1) - len(z2)) % 2 == 1
        want = want_odd if odd else want_even
        if tag == want:
            _merge(out, (tag, z1, z2), c)
            continue
        if tag == (want[1], want[0]):
            if z1 == EPSILON or z2 == EPSILON:
                work.append((((want[0], want[1]), z2, z1), c))
                continue
            # A B = B A + [A, B]: swap and add the commutator terms
            work.append(((want, z2, z1), c))
            sub = {"i": tag[0][0], "j": tag[0][1], "k": tag[1][0], "l": tag[1][1]}
            inner = stable_comm(L, z1, z2, 1)
            for (itag, y1, y2), ic in inner.items():
                work.append(((_sub_tag(itag, sub), y1, y2), c * ic))
            continue
        raise ValueError(f"unexpected tag {tag} while reducing to form {form}")
    return out


def normalize_relation(L, rel, total):
    """Reorder every product so the smaller factor (by slot, length, word)
    comes first, paying with commutators.  Idempotent."""
    rank = {"ij": 0, "il": 1, "kj": 2, "kl": 3}

    def key(slot, z):
        return (rank[slot], len(z), z)

    out = {}
    work = list(rel.items())
    while work:
        (tag, z1, z2), c = work.pop()
        if not c:
            continue
        if z1 == EPSILON or z2 == EPSILON or key(tag[0], z1) <= key(tag[1], z2):
            _merge(out, (tag, z1, z2), c)
            continue
        work.append((((tag[1], tag[0]), z2, z1), c))
        sub = {"i": tag[0][0], "j": tag[0][1], "k": tag[1][0], "l": tag[1][1]}
        for (itag, y1, y2), ic in stable_comm(L, z1, z2, 1).items():
            work.append(((_sub_tag(itag, sub), y1, y2), c * ic))
    return out


# -- instantiation -----------------------------------------------------------


def instantiate(rel, i, j, k, l, N, factory=None, order=DEFAULT):
    """Evaluate a relation at concrete indices in U(gl(N,C)^{+L}).

    ``factory(p, q, word)`` produces the element standing for the (p,q) slot;
    it defaults to the special elements e_{pq}(word; N).  An empty word is the
    Kronecker delta of the slot's indices.
    """
    if factory is None:
        def factory(p, q, word):
            return special(p, q, word, N, order)
    sym = {"i": i, "j": j, "k": k, "l": l}

    def eval_slot(slot, word):
        p, q = sym[slot[0]], sym[slot[1]]
        if word == EPSILON:
            return Fraction(1 if p == q else 0)
        return factory(p, q, word)

    acc = PbwElement.zero(N, order)
    for (tag, z1, z2), c in rel.items():
        f1 = eval_slot(tag[0], z1)
        f2 = eval_slot(tag[1], z2)
        if isinstance(f1, Fraction) and isinstance(f2, Fraction):
            term = PbwElement(N, {(): f1 * f2}, order, _normal=True)
        else:
            term = f1 * f2
        acc = acc + c * term
    return acc


def instantiate_check(L, w, wt, form, idx_tuples, N_values, factory_maker=None):
    """Check [X_{ij}(w), X_{kl}(wt)] against the canonical relation.

    With the default factory X = e this verifies the relation itself; other
    factories (e.g. the liftings at various parameter values) verify that the
    same relation holds verbatim for them.
    """
    rel = stable_comm(L, w, wt, form)
    for N in N_values:
        factory = None
        if factory_maker is not None:
            factory = factory_maker(N)
        for (i, j, k, l) in idx_tuples:
            if max(i, j, k, l) > N:
                continue
            if factory is None:
                a = special(i, j, w, N)
                b = special(k, l, wt, N)
            else:
                a = factory(i, j, w)
                b = factory(k, l, wt)
            lhs = a.commutator(b)
            rhs = instantiate(rel, i, j, k, l, N, factory)
            if lhs != rhs:
                return False, (N, (i, j, k, l))
    return True, None


def lift_factory(N, s, shifted=False, order=DEFAULT):
    def factory(p, q, word):
        return lift_t(p, q, word, N, s, shifted, order)
    return factory


# -- independent derivation by linear algebra --------------------------------


def _candidate_terms(L, w, wt, form):
    """All parity-admissible (tag, z1, z2) with letters drawn from w + wt."""
    total = len(w) + len(wt)
    pool = tuple(sorted(w + wt))
    cands = []
    for m in range(0, total):
        odd = (total - m) % 2 == 1
        tag = ODD_TAG[form] if odd else EVEN_TAG[form]
        for n1 in range(0, m + 1):
            n2 = m - n1
            if n1 == 0 and n2 == 0:
                continue
            for z1 in set(itertools.permutations(pool, n1)):
                for z2 in set(itertools.permutations(pool, n2)):
                    cands.append((tag, z1, z2))
    return sorted(set(cands))


def _solve_exact(rows, rhs):
    """Solve rows * x = rhs over Q; return x or raise if not uniquely solvable."""
    m = len(rows)
    n = len(rows[0]) if rows else 0
    A = [[Fraction(v) for v in r] + [Fraction(b)] for r, b in zip(rows, rhs)]
    piv_cols = []
    r = 0
    for c in range(n):
        p = next((q for q in range(r, m) if A[q][c]), None)
        if p is None:
            continue
        A[r], A[p] = A[p], A[r]
        inv = 1 / A[r][c]
        A[r] = [v * inv for v in A[r]]
        for q in range(m):
            if q != r and A[q][c]:
                f = A[q][c]
                A[q] = [v - f * u for v, u in zip(A[q], A[r])]
        piv_cols.append(c)
        r += 1
        if r == m:
            break
    for q in range(r, m):
        if A[q][n]:
            raise ValueError("inconsistent system")
    if len(piv_cols) < n:
        raise ValueError("underdetermined system")
    x = [Fraction(0)] * n
    for q, c in enumerate(piv_cols):
        x[c] = A[q][n]
    return x


def extract_by_linear_algebra(L, w, wt, form, N):
    """Recover the canonical relation by solving exact linear systems.

    For each generic and degenerate index tuple, expand the commutator
    [e_{ij}(w), e_{kl}(wt)] and all candidate right-hand-side products in PBW
    coordinates at ambient rank N, and solve for the integer coefficients.
    The stacked system must have a unique solution; raise otherwise (use a
    larger N).
    """
    w = check_word(w, L)
    wt = check_word(wt, L)
    cands = _candidate_terms(L, w, wt, form)
    idx_tuples = [(1, 2, 3, 4), (1, 1, 1, 2), (1, 2, 1, 1), (1, 1, 2, 2),
                  (1, 1, 1, 1)]
    rows, rhs = [], []
    for (i, j, k, l) in idx_tuples:
        if max(i, j, k, l) > N:
            raise ValueError("N too small for the index tuples")
        lhs = special(i, j, w, N).commutator(special(k, l, wt, N))
        cols = []
        monos = set(lhs.terms)
        for cand in cands:
            e = instantiate({cand: 1}, i, j, k, l, N)
            cols.append(e)
            monos.update(e.terms)
        for m in sorted(monos):
            rows.append([col.terms.get(m, Fraction(0)) for col in cols])
            rhs.append(lhs.terms.get(m, Fraction(0)))
    x = _solve_exact(rows, rhs)
    out = {}
    for cand, v in zip(cands, x):
        if v:
            if v.denominator != 1:
                raise ValueError(f"non-integer coefficient {v} for {cand}")
            out[cand] = int(v)
    return out


# -- Yangian regression (L = 1) ---------------------------------------------


def yangian_regression(max_total):
    """For L = 1 the normalized relations must be the classical ones.

    [t^(m), t^(n)] for words 1^m, 1^n: odd family KJ.IL with the telescoping
    quadratic tail, even family empty.  Checks every m, n with m + n up to
    max_total.  Returns True or raises AssertionError.
    """
    one = lambda r: (1,) * r
    for m in range(1, max_total):
        for n in range(1, max_total - m + 1):
            rel = stable_comm(1, one(m), one(n), 1)
            rel = normalize_relation(1, rel, m + n)
            expected = {}
            _merge(expected, (("kj", "il"), EPSILON, one(m + n - 1)), 1)
            _merge(expected, (("kj", "il"), one(m + n - 1), EPSILON), -1)
            for r in range(1, min(m, n)):
                _merge(expected, (("kj", "il"), one(r), one(m + n - 1 - r)), 1)
                _merge(expected, (("kj", "il"), one(m + n - 1 - r), one(r)), -1)
            # normalized shape: smaller factor first
            expected = normalize_relation(1, expected, m + n)
            assert rel == expected, (m, n, rel, expected)
            even = {k for k in rel if k[0] in (("ij", "kl"), ("kl", "ij"))}
            assert not even, (m, n, even)
    return True


# -- serialization -----------------------------------------------------------


def relation_to_json(L, w, wt, form, rel):
    terms = []
    for (tag, z1, z2), c in rel.items():
        terms.append({
            "tag": f"{tag[0].upper()}.{tag[1].upper()}",
            "z1": word_to_str(z1),
            "z2": word_to_str(z2),
            "coeff": c,
        })
    terms.sort(key=lambda t: (t["tag"], t["z1"], t["z2"]))
    return {"L": L, "w": word_to_str(w), "wt": word_to_str(wt),
            "form": form, "terms": terms}


def relation_from_json(data):
    rel = {}
    for t in data["terms"]:
        a, b = t["tag"].split(".")
        tag = (a.lower(), b.lower())
        z1 = parse_word(t["z1"], allow_empty=True)
        z2 = parse_word(t["z2"], allow_empty=True)
        rel[(tag, z1, z2)] = t["coeff"]
    return data["L"], parse_word(data["w"]), parse_word(data["wt"]), data["form"], rel


def relation_dump(rel):
    """Deterministic text form, one term per line."""
    lines = []
    for (tag, z1, z2), c in rel.items():
        lines.append((f"{tag[0].upper()}.{tag[1].upper()}",
                      word_to_str(z1), word_to_str(z2), c))
    lines.sort()
    return "\n".join(
        f"{c:+d} * e[{t[0]},{t[1]}]({z1 or 'eps'}) e[{t[2]},{t[3]}]({z2 or 'eps'})"
        for t, z1, z2, c in lines)


def dumps_relation(L, w, wt, form, rel):
    return json.dumps(relation_to_json(L, w, wt, form, rel), indent=2)
