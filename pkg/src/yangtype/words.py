"""Words over the alphabet {1,...,L} and their combinatorics.

A word is a tuple of integer letters; the empty tuple () is the empty word
epsilon, which is only accepted where an operation explicitly says so.
Circular words are represented by the lexicographically least rotation.
Also here: the pseudo-concatenation product, the run-length dominance order,
and the transition coefficients that relate the parameter liftings at two
values of the parameter.
"""

from __future__ import annotations

import itertools
from math import comb

EPSILON = ()


def check_word(w, L=None, allow_empty=False):
    if not w and not allow_empty:
        raise ValueError("empty word not allowed here")
    for a in w:
        if not isinstance(a, int) or a < 1 or (L is not None and a > L):
            raise ValueError(f"letter {a!r} outside alphabet")
    return tuple(w)


def word_to_str(w):
    """Text form: digit string for letters <= 9, comma-separated otherwise."""
    if not w:
        return ""
    if max(w) <= 9:
        return "".join(str(a) for a in w)
    return ",".join(str(a) for a in w)


def parse_word(text, L=None, allow_empty=False):
    """Inverse of :func:`word_to_str`."""
    text = text.strip()
    if not text:
        if allow_empty:
            return EPSILON
        raise ValueError("empty word not allowed here")
    if "," in text:
        letters = tuple(int(p) for p in text.split(","))
    else:
        letters = tuple(int(ch) for ch in text)
    return check_word(letters, L)


def rotations(w):
    return [w[r:] + w[:r] for r in range(len(w))]


def circular_canonical(w):
    """Lexicographically minimal rotation; the canonical circular-word form."""
    check_word(w)
    return min(rotations(tuple(w)))


def pseudo_concat(z, w):
    """Merge-on-matching-boundary product; None when the boundary letters differ.

    The last letter of z must equal the first letter of w; it is kept once.
    """
    check_word(z)
    check_word(w)
    if z[-1] != w[0]:
        return None
    return tuple(z) + tuple(w[1:])


def run_decomposition(w):
    """Maximal constant runs of w as (letter, multiplicity) pairs."""
    check_word(w)
    runs = []
    for a in w:
        if runs and runs[-1][0] == a:
            runs[-1][1] += 1
        else:
            runs.append([a, 1])
    return [(a, m) for a, m in runs]


def _word_from_runs(runs):
    return tuple(itertools.chain.from_iterable((a,) * m for a, m in runs))


def dominated_words(w):
    """All words obtained from w by shrinking each run, keeping it nonempty."""
    runs = run_decomposition(w)
    out = set()
    for reduced in itertools.product(*[range(1, m + 1) for _, m in runs]):
        out.add(_word_from_runs([(a, m) for (a, _), m in zip(runs, reduced)]))
    return out


def dominates(w, w_prime):
    """True when w_prime is dominated by (or equal to) w."""
    runs = run_decomposition(w)
    runs_p = run_decomposition(w_prime)
    if len(runs) != len(runs_p):
        return False
    return all(a == b and n <= m for (a, m), (b, n) in zip(runs, runs_p))


def transition_coeff(w, w_prime, delta):
    """Coefficient of the dominated word w_prime in the parameter-shift expansion.

    For w with runs a_1^{m_1}...a_k^{m_k} and w_prime = a_1^{m_1-r_1}...a_k^{m_k-r_k},
    the coefficient is delta^(r_1+...+r_k) * prod binom(m_i - 1, r_i), where
    delta is the difference of the two parameter values.
    """
    runs = run_decomposition(w)
    runs_p = run_decomposition(w_prime)
    if len(runs) != len(runs_p):
        raise ValueError(f"{w_prime} is not dominated by {w}")
    total_r = 0
    binom = 1
    for (a, m), (b, n) in zip(runs, runs_p):
        if a != b or n > m:
            raise ValueError(f"{w_prime} is not dominated by {w}")
        r = m - n
        total_r += r
        binom *= comb(m - 1, r)
    return binom * delta**total_r


def words_of_length(L, n):
    """All words of length exactly n, in lexicographic order."""
    return [tuple(p) for p in itertools.product(range(1, L + 1), repeat=n)]


def all_words(L, max_len):
    """All nonempty words of length <= max_len, by length then lex."""
    out = []
    for n in range(1, max_len + 1):
        out.extend(words_of_length(L, n))
    return out


def circular_words(L, max_len):
    """Canonical representatives of all circular words of length <= max_len."""
    return sorted({circular_canonical(w) for w in all_words(L, max_len)},
                  key=lambda w: (len(w), w))
