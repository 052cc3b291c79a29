import random
from fractions import Fraction

import pytest

from yangtype.matrices import (MatrixTuple, eval_entry, eval_trace,
                               invariance_check, mat_inverse, mat_mul,
                               random_matrix_tuple, random_unimodular,
                               sparse_rank, trace_rotation_check)
from yangtype.suites import run_matrix_oracle

X1 = [[1, 2], [3, 4]]
X2 = [[0, 1], [1, 0]]
T = MatrixTuple(2, [X1, X2])


def test_eval_golden():
    assert eval_trace((1, 2), T) == 5
    assert eval_entry(1, 1, (1, 2), T) == 2
    assert eval_entry(2, 1, (1,), T) == 3


def test_trace_rotation_invariance():
    for w in [(1, 2), (1, 1, 2), (2, 1, 2, 1)]:
        assert trace_rotation_check(w, T)


def test_mat_inverse():
    A = [[2, 1], [1, 1]]
    assert mat_mul(A, mat_inverse(A)) == [[1, 0], [0, 1]]
    with pytest.raises(ValueError):
        mat_inverse([[1, 1], [2, 2]])


def test_random_unimodular_is_invertible():
    rng = random.Random(7)
    g = random_unimodular(3, rng)
    assert mat_mul(g, mat_inverse(g)) == [
        [1, 0, 0], [0, 1, 0], [0, 0, 1]]


def test_invariance_under_tail_conjugation():
    rng = random.Random(11)
    t = random_matrix_tuple(4, 2, rng)
    g = random_unimodular(2, rng)
    words = [(1,), (2,), (1, 2), (2, 1), (1, 1, 2)]
    assert invariance_check(2, t, g, words) == []


def test_non_invariance_of_tail_entries():
    # negative control: entries with an index inside the conjugated block move
    rng = random.Random(13)
    t = random_matrix_tuple(4, 2, rng)
    g = random_unimodular(2, rng)
    t2 = t.conjugate_tail(2, g)
    moved = any(eval_entry(i, j, (1, 2), t) != eval_entry(i, j, (1, 2), t2)
                for i in range(1, 5) for j in range(1, 5) if i > 2 or j > 2)
    assert moved


def test_sparse_rank():
    rows = [{0: Fraction(1), 1: Fraction(2)},
            {0: Fraction(2), 1: Fraction(4)},
            {2: Fraction(1)}]
    assert sparse_rank(rows) == 2
    assert sparse_rank([]) == 0
    assert sparse_rank([{}]) == 0


def test_matrix_oracle_suite():
    assert run_matrix_oracle(seed=12345) == []
