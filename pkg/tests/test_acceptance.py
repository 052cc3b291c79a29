"""Acceptance gate: thirteen exact, zero-tolerance checks.

Each test prints a single PASS/FAIL line naming the property it certifies
and asserts with the collected failure details.  All arithmetic is exact
rational/polynomial arithmetic; there are no tolerances anywhere.
"""

from fractions import Fraction

from yangtype.lift import trace_special
from yangtype.suites import (run_degeneration, run_dual_route, run_extraction,
                             run_necklace_center, run_normal_independence,
                             run_poisson_axioms, run_poisson_oracle,
                             run_projection, run_stable, run_top_degree,
                             run_transition, run_yangian)


def _report(name, failures):
    ok = not failures
    print(("PASS" if ok else "FAIL") + f": {name}")
    assert ok, failures


def test_01_trace_rearrangement_identity():
    bad = []
    for N in (2, 3, 4):
        lhs = (trace_special((1, 2, 1), N) - trace_special((1, 1, 2), N)
               - trace_special((1,), N) * trace_special((2,), N)
               + N * trace_special((1, 2), N))
        if lhs != 0:
            bad.append(f"identity fails at N={N}")
    _report("trace rearrangement identity, N in {2,3,4}", bad)


def test_02_one_letter_regression():
    _report("one-letter commutation relations match the classical telescoping "
            "form up to total degree 6", run_yangian(max_total=6))


def test_03_universal_relations_stability():
    bad = run_stable(L=2, max_total=4, N_values=(4, 5, 6),
                     idx_tuples=((1, 2, 3, 4), (1, 1, 2, 2), (1, 1, 1, 1),
                                 (1, 1, 1, 2)), form=1)
    _report("universal relations hold with N-independent coefficients, "
            "L=2, total length <= 4, N in {4,5,6}", bad)


def test_04_extraction_agreement():
    _report("linear-algebra extraction reproduces the recursive relations, "
            "L=2, total length <= 3, N=8",
            run_extraction(L=2, max_total=3, N=8))


def test_05_projection_consistency():
    bad = run_projection(L=2, max_len=3, N_values=(3, 4), s_values=(0, 1, -2))
    _report("rank-lowering projection maps lifted elements onto their "
            "rank N-1 counterparts, lengths <= 3, N in {3,4}, s in {0,1,-2}",
            bad)


def test_06_dual_route_lifting():
    bad = run_dual_route(L=2, max_len=3, N_values=(2, 3, 4))
    _report("dominance-sum lifting equals the series-coefficient route with "
            "symbolic s, lengths <= 3, N <= 4", bad)


def test_07_poisson_closed_forms_vs_oracle():
    _report("closed-form generator brackets match the finite-rank Leibniz "
            "oracle, N=3, d=2, L=2, lengths <= 3",
            run_poisson_oracle(L=2, d=2, max_len=3, N=3))


def test_08_poisson_axioms():
    _report("bracket antisymmetry, Jacobi, and degree -1 on generators with "
            "total length <= 5", run_poisson_axioms(L=2, d=2, max_total=5))


def test_09_top_degree_correspondence():
    _report("leading terms of the universal relations equal the Poisson "
            "bracket, L=2, total length <= 4", run_top_degree(L=2, max_total=4))


def test_10_transition_coefficients():
    _report("transition coefficients: identity at w=w, cocycle composition "
            "for lengths <= 5, series oracle to order 6",
            run_transition(L=2, max_len=5, series_max=6))


def test_11_linear_degeneration():
    _report("h=0 bracket degenerates to the pseudo-concatenation Lie "
            "bracket, total length <= 4; word algebra unit/associativity "
            "to length 3", run_degeneration(L=2, d=2, max_total=4, unit_len=3))


def test_12_necklace_center():
    _report("powers of a single letter are central for the necklace "
            "bracket, k <= 3, lengths <= 3",
            run_necklace_center(L=2, k_max=3, max_len=3))


def test_13_normal_monomial_independence():
    _report("normal monomials of degree <= 3 in lifted generators are "
            "linearly independent at N=8 (exact rank)",
            run_normal_independence(d=2, L=2, max_deg=3, N=8, s=Fraction(0)))
