import pytest
from fractions import Fraction

from hypothesis import given, strategies as st

from yangtype.words import (EPSILON, all_words, check_word, circular_canonical,
                            circular_words, dominated_words, dominates,
                            parse_word, pseudo_concat, rotations,
                            run_decomposition, transition_coeff, word_to_str)

word_st = st.lists(st.integers(1, 2), min_size=1, max_size=6).map(tuple)


def test_circular_canonical_examples():
    assert circular_canonical((1,)) == (1,)
    assert circular_canonical((2, 1)) == (1, 2)
    assert circular_canonical((2, 1, 1)) == (1, 1, 2)


@given(word_st)
def test_circular_canonical_rotation_invariant(w):
    assert {circular_canonical(r) for r in rotations(w)} == {circular_canonical(w)}


def test_pseudo_concat_examples():
    assert pseudo_concat((1, 2), (2, 1)) == (1, 2, 1)
    assert pseudo_concat((1, 2), (1, 1)) is None
    # one-letter alphabet: lengths add minus one
    assert pseudo_concat((1,) * 3, (1,) * 4) == (1,) * 6


@given(word_st, word_st, word_st)
def test_pseudo_concat_associative(u, v, w):
    uv = pseudo_concat(u, v)
    vw = pseudo_concat(v, w)
    lhs = pseudo_concat(uv, w) if uv is not None else None
    rhs = pseudo_concat(u, vw) if vw is not None else None
    assert lhs == rhs


def test_dominated_words_examples():
    assert dominated_words((1, 2)) == {(1, 2)}
    assert dominated_words((1, 1, 2)) == {(1, 1, 2), (1, 2)}
    assert dominated_words((1, 1, 2, 2)) == {(1, 1, 2, 2), (1, 2, 2), (1, 1, 2), (1, 2)}


@given(word_st)
def test_dominance_contains_self_and_is_order(w):
    doms = dominated_words(w)
    assert w in doms
    for wp in doms:
        assert dominates(w, wp)
        # transitivity through an intermediate
        for wm in dominated_words(wp):
            assert dominates(w, wm)


def test_transition_coeff_examples():
    d = Fraction(3)
    assert transition_coeff((1, 2), (1, 2), d) == 1
    assert transition_coeff((1, 1, 1), (1, 1), d) == 2 * d
    assert transition_coeff((1, 1, 2, 2), (1, 2), d) == d * d
    with pytest.raises(ValueError):
        transition_coeff((1, 2), (2,), d)


@given(word_st)
def test_transition_cocycle(w):
    a, b = Fraction(2), Fraction(-5)
    for wp in dominated_words(w):
        acc = sum(transition_coeff(w, wm, a) * transition_coeff(wm, wp, b)
                  for wm in dominated_words(w) if dominates(wm, wp))
        assert acc == transition_coeff(w, wp, a + b)


def test_run_decomposition():
    assert run_decomposition((1, 1, 2, 1)) == [(1, 2), (2, 1), (1, 1)]


def test_text_round_trip():
    for w in all_words(2, 4):
        assert parse_word(word_to_str(w)) == w
    assert word_to_str(EPSILON) == ""
    assert parse_word("", allow_empty=True) == EPSILON
    with pytest.raises(ValueError):
        parse_word("")
    assert parse_word("1,10,2") == (1, 10, 2)
    assert word_to_str((1, 10, 2)) == "1,10,2"


def test_check_word_rejects_bad_letters():
    with pytest.raises(ValueError):
        check_word((0,))
    with pytest.raises(ValueError):
        check_word((3,), L=2)
    with pytest.raises(ValueError):
        check_word(())


def test_circular_words_enumeration():
    assert circular_words(2, 2) == [(1,), (2,), (1, 1), (1, 2), (2, 2)]
