import itertools

import pytest
from hypothesis import given, strategies as st

from weakfano.k3 import (ci_genus, detect_low_degree_curves, effectivity_test, genus_bound_B,
                         knutsen_smooth_quadric_existence, linear_system_dim_lower_bound, low_degree_genus_cap)
from weakfano.lattice import degree, make_k3_rank2

TABLE_B = [0, 0, 0, 1, 2, 2, 4, 5, 6, 8, 10, 11, 14, 16, 18, 21, 24, 26]


def test_B_table():
    assert [genus_bound_B(d).value for d in range(1, 19)] == TABLE_B
    assert genus_bound_B(14).value == 16


def test_B_below_line_bound():
    for d in range(1, 61):
        b = genus_bound_B(d)
        assert 12 * b.value <= d * d - 1
        assert (12 * b.value == d * d - 1) == (d % 6 in (1, 5))
        assert (d - b.r) % 6 == 0 and b.r in (-2, -1, 0, 1, 2, 3)


def test_ci_genus():
    assert ci_genus([2, 3, 1], 4) == 4
    assert ci_genus([2, 3, 2], 4) == 13
    assert ci_genus([2, 2, 2], 4) == 5
    assert ci_genus([3], 2) == 1
    with pytest.raises(ValueError):
        ci_genus([], 1)


def test_effectivity():
    S = make_k3_rank2(2, 5)
    H, C = S.basis()
    r = effectivity_test(H - C)
    assert (r.kind, r.degree, r.genus) == ("effective_curve", 1, 0)
    assert effectivity_test(S.zero()).kind == "zero"
    # D² = -4 sits on the excluded boundary
    D = 2 * (H - C)
    assert D.square() == -8 and effectivity_test(D).kind == "inconclusive"
    assert effectivity_test(-H).kind == "inconclusive"


def test_low_degree_cap():
    assert [low_degree_genus_cap(k) for k in (1, 2, 3)] == [0, 0, 0]
    with pytest.raises(ValueError):
        low_degree_genus_cap(4)


def test_knutsen_examples():
    assert knutsen_smooth_quadric_existence(4, 6) == "complete_intersection"
    assert knutsen_smooth_quadric_existence(4, 7) == "impossible"
    assert knutsen_smooth_quadric_existence(16, 14) == "exists_rank2"


def test_complete_intersections_only_in_multiples_of_six():
    for d in range(1, 19):
        for g in range(41):
            if knutsen_smooth_quadric_existence(g, d) == "complete_intersection":
                assert d in (6, 12, 18) and g == 3 * (d // 6) ** 2 + 1


def test_detect_examples():
    r = detect_low_degree_curves(2, 5)
    assert r.kind == "line" and r.classes[0].coords == (1, -1) and not r.candidate
    assert detect_low_degree_curves(0, 9).kind == "none"
    assert detect_low_degree_curves(8, 10).kind == "conic"
    with pytest.raises(ValueError):
        detect_low_degree_curves(4, 7)


EXPECT = {1: "line", 2: "conic", 3: "rational_cubic"}


def _rank2_pairs(dmax):
    return [(g, d) for d in range(1, dmax + 1) for g in range(0, d * d // 12 + 1)
            if knutsen_smooth_quadric_existence(g, d) == "exists_rank2"]


def test_detected_classes_are_in_lattice():
    for g, d in _rank2_pairs(20):
        r = detect_low_degree_curves(g, d)
        want = {"line": 1, "conic": 1, "rational_cubic": 2, "none": 0}[r.kind]
        assert len(r.classes) == want
        for D in r.classes:
            assert D.square() == -2 and EXPECT[degree(D)] == r.kind


def test_detector_matches_brute_force():
    for g, d in _rank2_pairs(13):
        S = make_k3_rank2(g, d)
        found = {}
        for a, b in itertools.product(range(-6, 7), repeat=2):
            D = S.cls(a, b)
            if degree(D) in (1, 2, 3) and D.square() == -2:
                found.setdefault(degree(D), set()).add(D)
        r = detect_low_degree_curves(g, d)
        brute = EXPECT[min(found)] if found else "none"
        assert brute == r.kind, (g, d)
        if found:
            assert set(r.classes) == found[min(found)]


def test_linear_system_bound():
    assert linear_system_dim_lower_bound(1, 5, 1, 4) == -1
    assert linear_system_dim_lower_bound(1, 5, 2, 4) == 4
    assert linear_system_dim_lower_bound(10, 11, 2, 4) == 1
    assert linear_system_dim_lower_bound(0, 1, 1, 4) == 2


@given(g=st.integers(0, 60), d=st.integers(1, 30), e=st.integers(1, 4))
def test_clifford_branch_never_exceeds_first(g, d, e):
    # both bounds coincide on the first branch; on the second the min is no larger
    b = linear_system_dim_lower_bound(g, d, e, 4)
    assert b <= 13 + g - e * d if e == 2 else True
