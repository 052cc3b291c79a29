from fractions import Fraction

from yangtype.poisson import (bracket_pp, bracket_pp_direct, bracket_pt,
                              bracket_tt, g_bracket, h_bracket_pp, kks,
                              kks_on_letters, leibniz_oracle, msym, p_dump,
                              p_eq, p_mul, p_zero, poisson_bracket, sym_eval,
                              tsym, unit_check)
from yangtype.suites import (run_degeneration, run_necklace_center,
                             run_poisson_axioms, run_poisson_oracle,
                             run_top_degree)
from yangtype.words import EPSILON, all_words


def test_kks_letters():
    assert kks_on_letters(1, 1) == {(EPSILON, (1,)): 1, ((1,), EPSILON): -1}
    assert kks_on_letters(1, 2) == {}


def test_kks_golden():
    # <<x_1, x_2 x_1>> = x_2 (x) x_1 - x_2 x_1 (x) 1
    assert kks((1,), (2, 1)) == {((2,), (1,)): 1, ((2, 1), EPSILON): -1}


def test_kks_is_sum_of_letter_brackets_for_letters():
    for a in (1, 2):
        for b in (1, 2):
            assert kks((a,), (b,)) == kks_on_letters(a, b)


def test_bracket_pp_matches_direct_double_sum():
    words = [w for n in (1, 2, 3) for w in all_words(2, n)]
    for z in words:
        for w in words:
            assert p_eq(bracket_pp(1, 2, z, 2, 1, w),
                        bracket_pp_direct(1, 2, z, 2, 1, w))


def test_bracket_pp_golden():
    # {p_12(1), p_21(1)} = p_11(1) - p_22(1)
    got = bracket_pp(1, 2, (1,), 2, 1, (1,))
    assert got == {(msym(1, 1, (1,)),): Fraction(1),
                   (msym(2, 2, (1,)),): Fraction(-1)}


def test_bracket_pt_golden():
    # one matched letter: {p_11(1), P(12)} = p_11(12) - p_11(21)
    got = bracket_pt(1, 1, (1,), (1, 2))
    assert got == {(msym(1, 1, (1, 2)),): Fraction(1),
                   (msym(1, 1, (2, 1)),): Fraction(-1)}


def test_necklace_bracket_vanishes_in_low_length():
    for zt in range(1, 4):
        for wt in range(1, 7 - zt):
            for z in all_words(2, zt):
                for w in all_words(2, wt):
                    assert bracket_tt(z, w) == {}


def test_necklace_bracket_first_nonzero_golden():
    got = bracket_tt((1, 1, 2), (1, 1, 2, 2))
    assert p_dump(got) == "-1 * P[112122] + 1 * P[112212]"


def test_necklace_bracket_rotation_independent():
    a = bracket_tt((1, 1, 2), (1, 1, 2, 2))
    b = bracket_tt((1, 2, 1), (2, 2, 1, 1))
    assert p_eq(a, b)


def test_golden_bracket_agrees_with_matrix_entry_oracle():
    lhs = {(tsym((1, 1, 2)),): Fraction(1)}
    rhs = {(tsym((1, 1, 2, 2)),): Fraction(1)}
    got = sym_eval(poisson_bracket(lhs, rhs), 3)
    want = leibniz_oracle(tsym((1, 1, 2)), tsym((1, 1, 2, 2)), 3)
    assert got == want


def test_leibniz_extension():
    # {ab, c} = a{b, c} + {a, c}b in the commutative target
    a = {(msym(1, 2, (1,)),): Fraction(1)}
    b = {(msym(2, 1, (2,)),): Fraction(1)}
    c = {(msym(2, 2, (1, 2)),): Fraction(1)}
    lhs = poisson_bracket(p_mul(a, b), c)
    rhs = p_mul(a, poisson_bracket(b, c))
    for mono, cc in p_mul(poisson_bracket(a, c), b).items():
        rhs[mono] = rhs.get(mono, 0) + cc
        if not rhs[mono]:
            del rhs[mono]
    assert p_eq(lhs, rhs)


def test_h_deformation_endpoints():
    for z in all_words(2, 2):
        for w in all_words(2, 2):
            full = bracket_pp(1, 2, z, 2, 2, w)
            assert p_eq(h_bracket_pp(1, 2, z, 2, 2, w, Fraction(1)), full)
            h0 = h_bracket_pp(1, 2, z, 2, 2, w, Fraction(0))
            lin = {(msym(*k),): Fraction(v)
                   for k, v in g_bracket(1, 2, z, 2, 2, w).items()}
            assert p_eq(h0, lin)


def test_unit_and_associativity():
    assert unit_check(2, 3) is True


def test_oracle_suite():
    assert run_poisson_oracle(L=2, d=2, max_len=2, N=3) == []


def test_axioms_suite():
    assert run_poisson_axioms(L=2, d=2, max_total=4) == []


def test_degeneration_suite():
    assert run_degeneration(L=2, d=2, max_total=3, unit_len=2) == []


def test_necklace_center_suite():
    assert run_necklace_center(L=2, k_max=2, max_len=3) == []


def test_top_degree_suite():
    assert run_top_degree(L=2, max_total=3) == []


def test_p_dump_format():
    poly = {(msym(1, 2, (1, 2)), tsym((1,))): Fraction(3, 2)}
    assert p_dump(poly) == "3/2 * p[1,2|12] * P[1]"
    assert p_dump({}) == "0"
