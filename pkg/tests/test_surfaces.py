import pytest
from hypothesis import given, strategies as st

from weakfano.classifier import P_PLANE, P_QUADRIC, QUADRIC_SMALL
from weakfano.lattice import degree, genus, make_dp4, make_f2
from weakfano.surfaces import (ConeCurve, DP4Curve, SmoothQuadricCurve, bpf_alphabet, bpf_decompose,
                               bpf_decompositions, closed_form_agrees, cone_secant_count, dp4_enumerate_weak_fano_pairs,
                               dp4_secant_line_profile, enumerate_cone_curves, enumerate_dp4_curves,
                               enumerate_smooth_quadric_curves, fixed_line_witness, generator_sum, residual_system_f2,
                               vertex_multiplicity)


def test_smooth_quadric_rows():
    rows = enumerate_smooth_quadric_curves(6)
    assert len(rows) == 10
    assert {(g, d) for _, g, d in rows if (g, d) in P_PLANE} == P_PLANE
    assert (SmoothQuadricCurve(3, 3).genus, SmoothQuadricCurve(3, 3).degree) == (4, 6)


def test_cone_rows():
    rows = enumerate_cone_curves(6)
    assert [(g, d) for _, g, d in rows] == [(0, 1), (0, 2), (0, 3), (1, 4), (2, 5), (4, 6)]
    assert [c.through_vertex for c, _, _ in rows] == [True, False, True, False, True, False]


def test_cone_intersections():
    line, conic = ConeCurve(0, 1), ConeCurve(1, 0)
    assert vertex_multiplicity(line) == 1 and vertex_multiplicity(conic) == 0
    assert cone_secant_count(ConeCurve(2, 1), line) == 3


def test_residuals_decompose():
    for c, g, d in enumerate_cone_curves(6):
        R = residual_system_f2(c)
        assert R.dot(make_f2().cls(1, 0)) >= 0
        dec = bpf_decompose(R)
        assert dec is not None and generator_sum(dec.summands, make_f2()) == R


def test_bad_constructor_args():
    with pytest.raises(ValueError):
        SmoothQuadricCurve(0, 0)
    with pytest.raises(ValueError):
        ConeCurve(1, 2)
    with pytest.raises(ValueError):
        DP4Curve(2, (1, 0, 0, 0, 0))
    with pytest.raises(ValueError):
        enumerate_cone_curves(0)


def test_alphabets_are_nef():
    for S in (make_f2(), make_dp4()):
        for gen in bpf_alphabet(S):
            assert gen.cls.square() >= 0


def test_dp4_rows():
    rows = enumerate_dp4_curves(sorted(P_QUADRIC))
    assert {(g, d) for _, g, d in rows} == set(P_QUADRIC)
    assert {(c.k, c.m) for c, g, d in rows if (g, d) == (0, 6)} >= {(2, (0, 0, 0, 0, 0)), (3, (0, 0, 0, 1, 2))}


def test_dp4_weak_fano_pairs():
    assert dp4_enumerate_weak_fano_pairs() == set(P_QUADRIC | QUADRIC_SMALL)


def test_not_bpf_rows_have_witness():
    # the (0,6) plane-sextic row: 2L meets the conic 2L-ΣE four times
    c = DP4Curve(2, (0, 0, 0, 0, 0))
    R = c.residual()
    assert bpf_decompose(R) is None
    w = fixed_line_witness(R, c.cls())
    assert w is not None and w.dot(c.cls()) == 4 and w.label() == "2L-E1-E2-E3-E4-E5"


def test_line_profile_has_sixteen_entries():
    assert len(dp4_secant_line_profile(DP4Curve(3, (0, 0, 0, 1, 1)))) == 16


def test_decompositions_resum():
    S = make_dp4()
    for c, _, _ in enumerate_dp4_curves([(1, 5), (2, 7), (13, 12)]):
        for dec in bpf_decompositions(c.residual(), 3):
            assert generator_sum(dec.summands, S) == c.residual()


@given(a=st.integers(0, 12), b=st.integers(0, 12))
def test_two_path_smooth_quadric(a, b):
    if (a, b) == (0, 0):
        return
    c = SmoothQuadricCurve(a, b)
    assert closed_form_agrees(c.cls(), c.genus, c.degree)


@given(a=st.integers(0, 12), b=st.integers(0, 1))
def test_two_path_cone(a, b):
    if (a, b) == (0, 0):
        return
    c = ConeCurve(a, b)
    assert closed_form_agrees(c.cls(), c.genus, c.degree)


@given(k=st.integers(1, 12), m=st.lists(st.integers(0, 5), min_size=5, max_size=5))
def test_two_path_dp4(k, m):
    c = DP4Curve(k, tuple(sorted(m)))
    assert degree(c.cls()) == c.degree and genus(c.cls()) == c.genus
