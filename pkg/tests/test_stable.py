import json

import pytest
from fractions import Fraction

from yangtype.words import EPSILON
from yangtype.lift import special
from yangtype.stable import (SWAP_FORM, dumps_relation, extract_by_linear_algebra,
                             instantiate, instantiate_check, lift_factory,
                             normalize_relation, relation_from_json,
                             relation_to_json, stable_comm, stable_comm_lastsplit,
                             yangian_regression)
from yangtype.suites import run_stable, run_stable_sindep


def test_base_case_form1():
    rel = stable_comm(1, (1,), (1,), 1)
    assert rel == {(("kj", "il"), EPSILON, (1,)): 1,
                   (("kj", "il"), (1,), EPSILON): -1}


def test_base_case_distinct_letters_empty():
    for form in (1, 2, 3, 4):
        assert stable_comm(2, (1,), (2,), form) == {}


def test_mixed_pair_golden():
    rel = stable_comm(2, (2,), (1, 2), 1)
    assert rel == {(("kj", "il"), (1,), (2,)): 1,
                   (("kj", "il"), (1, 2), EPSILON): -1}


def test_forms_are_instantiation_equal():
    idx = [(1, 2, 3, 4), (1, 1, 1, 2), (1, 1, 1, 1)]
    for form in (1, 2, 3, 4):
        ok, where = instantiate_check(2, (1, 2), (2,), form, idx, [4])
        assert ok, where


def test_split_invariance():
    for w, wt in [((1, 2), (2, 1)), ((1, 1), (1, 1)), ((1, 2, 1), (2,))]:
        assert stable_comm_lastsplit(2, w, wt, 1) == stable_comm(2, w, wt, 1)


def test_swap_symmetry_forms():
    assert SWAP_FORM == {1: 4, 2: 3, 3: 2, 4: 1}
    rel = run_stable(L=2, max_total=3, N_values=(4,), idx_tuples=((1, 2, 3, 4),))
    assert rel == []


def test_instantiate_empty_relation_is_zero():
    assert instantiate({}, 1, 2, 3, 4, 4).is_zero()


def test_instantiate_degenerate_indices():
    rel = stable_comm(1, (1,), (1,), 1)
    lhs = special(1, 1, (1,), 2).commutator(special(2, 1, (1,), 2))
    assert instantiate(rel, 1, 1, 2, 1, 2) == lhs


def test_normalize_is_idempotent_and_value_preserving():
    rel = stable_comm(2, (1, 2), (2, 1), 1)
    norm = normalize_relation(2, rel, 4)
    assert normalize_relation(2, norm, 4) == norm
    for idx in [(1, 2, 3, 4), (1, 1, 1, 2)]:
        assert instantiate(rel, *idx, 5) == instantiate(norm, *idx, 5)


def test_yangian_regression_small():
    assert yangian_regression(5)


def test_quadratic_tail_shape():
    # the (2,2) relation carries exactly one quadratic pair plus the two
    # linear terms, mirroring the classical telescoping sum
    rel = stable_comm(1, (1, 1), (1, 1), 1)
    linear = {k: v for k, v in rel.items() if EPSILON in (k[1], k[2])}
    quad = {k: v for k, v in rel.items() if EPSILON not in (k[1], k[2])}
    assert linear == {(("kj", "il"), EPSILON, (1, 1, 1)): 1,
                      (("kj", "il"), (1, 1, 1), EPSILON): -1}
    assert quad == {(("kj", "il"), (1,), (1, 1)): 1,
                    (("kj", "il"), (1, 1), (1,)): -1}


def test_extraction_agrees():
    for w, wt in [((1,), (1,)), ((2,), (1, 2)), ((1, 2), (1,))]:
        assert extract_by_linear_algebra(2, w, wt, 1, 8) == stable_comm(2, w, wt, 1)


def test_extraction_rejects_small_N():
    with pytest.raises(ValueError):
        extract_by_linear_algebra(2, (1, 2), (2, 1), 1, 3)


def test_relations_hold_for_lifted_elements():
    assert run_stable_sindep(L=2, max_total=3, N_values=(4,),
                             s_values=(0, 1, -2)) == []


def test_json_round_trip():
    rel = stable_comm(2, (2,), (1, 2), 1)
    text = dumps_relation(2, (2,), (1, 2), 1, rel)
    data = json.loads(text)
    assert data["L"] == 2 and data["w"] == "2" and data["wt"] == "12"
    assert data["terms"] == [
        {"tag": "KJ.IL", "z1": "1", "z2": "2", "coeff": 1},
        {"tag": "KJ.IL", "z1": "12", "z2": "", "coeff": -1},
    ]
    L, w, wt, form, back = relation_from_json(data)
    assert (L, w, wt, form) == (2, (2,), (1, 2), 1)
    assert back == rel


def test_commutator_of_lifts_matches_relation_instantiation():
    # direct Corollary-style check at one spot: commutator of lifted elements
    # equals the relation instantiated with the same lifted elements
    w, wt = (1, 1), (2,)
    rel = stable_comm(2, w, wt, 1)
    f = lift_factory(4, Fraction(1))
    lhs = f(1, 2, w).commutator(f(2, 1, wt))
    assert lhs == instantiate(rel, 1, 2, 2, 1, 4, f)
