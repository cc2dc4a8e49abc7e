"""Instance-family enumeration and harness tests."""

from __future__ import annotations

from random import Random

import pytest

from twistpoly.core import SetSystem, direct_sum, is_delta_matroid, twist
from twistpoly.gf2 import delta_matroid_of_matrix
from twistpoly.poly import twist_polynomial_fast
from twistpoly.verify import (
    InstanceFamily,
    VerificationReport,
    all_delta_matroids,
    all_set_systems,
    all_signed_rotations,
    all_simple_graph_matrices,
    all_symmetric_matrices,
    check_bipartite_constant_term,
    check_constant_iff_single,
    check_fast_naive_equivalence,
    check_interlacement_oracle,
    check_lemma4,
    check_lemma5_and_lemma2,
    check_monomial_complete_odd,
    check_prop1,
    check_prop2,
    check_same_interlacement_pairs,
    complete_graph_matrix,
    count_delta_matroids,
    interleaved_genus_closed_form,
    random_delta_matroid,
    run_suite,
)


def test_set_system_counts():
    assert sum(1 for _ in all_set_systems(0)) == 1
    assert sum(1 for _ in all_set_systems(1)) == 3
    assert sum(1 for _ in all_set_systems(2)) == 15
    assert sum(1 for _ in all_set_systems(3)) == 255


def test_delta_matroid_counts():
    # n = 1 has exactly {∅}, {{0}}, {∅,{0}}; larger counts are frozen
    # regressions cross-validated against the public axiom test below
    assert count_delta_matroids(0) == 1
    assert count_delta_matroids(1) == 3
    assert count_delta_matroids(2) == 15
    assert count_delta_matroids(3) == 155
    assert count_delta_matroids(4) == 5959


def test_enumeration_matches_public_axiom_check():
    for n in range(4):
        expected = {s.feasible for s in all_set_systems(n) if is_delta_matroid(s)}
        got = {d.feasible for d in all_delta_matroids(n)}
        assert got == expected


def test_enumeration_sample_agrees_at_n4():
    rng = Random(71)
    fams = list(all_delta_matroids(4))
    assert all(is_delta_matroid(d) for d in rng.sample(fams, 200))


def test_delta_matroid_family_closed_under_twist():
    fams = {d.feasible for d in all_delta_matroids(3)}
    for fam in fams:
        d = SetSystem(3, fam)
        for a in range(8):
            assert twist(d, a).feasible in fams


def test_enumeration_contains_all_binary_and_sums():
    fams = {d.feasible for d in all_delta_matroids(4)}
    for c in all_symmetric_matrices(4):
        assert delta_matroid_of_matrix(c).feasible in fams
    for d1 in all_delta_matroids(2):
        for d2 in all_delta_matroids(2):
            assert direct_sum(d1, d2).feasible in fams


def test_matrix_family_counts():
    assert sum(1 for _ in all_symmetric_matrices(2)) == 8
    assert sum(1 for _ in all_symmetric_matrices(3)) == 64
    assert sum(1 for _ in all_simple_graph_matrices(3)) == 8
    assert sum(1 for _ in all_simple_graph_matrices(6)) == 32768


def test_rotation_family_counts():
    assert {str(r) for r in all_signed_rotations(1)} == {"1 1", "1 -1"}
    assert sum(1 for _ in all_signed_rotations(2)) == 12
    assert sum(1 for _ in all_signed_rotations(3)) == 120
    assert sum(1 for _ in all_signed_rotations(4)) == 1680


def test_family_dispatch():
    fam = InstanceFamily("all-delta-matroids", 2)
    assert sum(1 for _ in fam.instances()) == 15
    assert [m.n for m in InstanceFamily("complete-K", 3).instances()] == [1, 2, 3]
    assert [b.e for b in InstanceFamily("canonical-B", 4).instances()] == [1, 2, 3, 4]
    with pytest.raises(ValueError):
        InstanceFamily("nonsense", 2)
    with pytest.raises(ValueError):
        InstanceFamily("all-set-systems", 9)
    with pytest.raises(ValueError):
        list(all_set_systems(5))


def test_closed_form():
    assert interleaved_genus_closed_form(1).coeffs == (2,)
    assert interleaved_genus_closed_form(2).coeffs == (2, 0, 2)
    assert interleaved_genus_closed_form(3).coeffs == (0, 0, 8)
    assert interleaved_genus_closed_form(4).coeffs == (0, 0, 8, 0, 8)


def test_complete_graph_matrix():
    assert complete_graph_matrix(3).rows == (0b110, 0b101, 0b011)
    assert complete_graph_matrix(1).rows == (0,)


def test_random_delta_matroid_is_delta_matroid():
    rng = Random(73)
    for _ in range(30):
        assert is_delta_matroid(random_delta_matroid(rng.randint(0, 6), rng))


def test_report_lines():
    rep = VerificationReport("demo", checked=5, seed=3)
    assert rep.machine_line() == "THEOREM demo PASS checked=5 seed=3"
    rep.fail("bad instance")
    assert rep.machine_line() == "THEOREM demo FAIL checked=5 seed=3"
    assert "bad instance" in rep.render()
    blank = VerificationReport("x")
    assert blank.machine_line().endswith("seed=-")


def test_report_counterexample_cap():
    rep = VerificationReport("demo")
    for i in range(40):
        rep.fail(f"cex {i}")
    assert len(rep.counterexamples) == 25
    assert "15 more" in rep.render()
    assert not rep.passed


def test_prop2_example_product():
    b2 = SetSystem.from_sets(2, [[], [0, 1]])
    p = twist_polynomial_fast(direct_sum(b2, b2))
    assert p.coeffs == (4, 0, 8, 0, 4)


def test_small_checks_pass():
    assert check_prop2(2).passed
    assert check_lemma4(4).passed
    assert check_prop1(4).passed
    assert check_constant_iff_single(3).passed
    rep = check_lemma5_and_lemma2(3)
    assert rep.passed and any("violated as expected" in n for n in rep.notes)
    assert check_bipartite_constant_term(4).passed
    assert check_monomial_complete_odd(4, n7_samples=0).passed
    assert check_interlacement_oracle(3, trials=200, e_max=6, seed=1).passed
    rep = check_same_interlacement_pairs(3, min_pairs=5)
    assert rep.passed and rep.checked >= 5
    assert check_fast_naive_equivalence(2, trials=20, n_random=8, seed=1).passed


def test_run_suite():
    reports = run_suite("lemma4", max_n=5)
    assert len(reports) == 1 and reports[0].theorem == "lemma4"
    assert reports[0].checked == 5
    with pytest.raises(ValueError):
        run_suite("nonsense")


def test_run_suite_all_small():
    reports = run_suite("all", max_n=3, seed=2)
    names = {r.theorem for r in reports}
    assert "prop2" in names and "interlacement-oracle" in names
    assert all(r.passed for r in reports)
