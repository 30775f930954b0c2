import itertools

import pytest
from hypothesis import given, strategies as st

from weakfano.classifier import (P_ALL, P_CONIC, P_CUBIC, P_LINE, P_NONE, P_PLANE, P_QUADRIC, CurveInstance,
                                 PgdPolynomial, anticanonical_cube, anticanonical_sq_E, cg_range, classify,
                                 contradiction_pattern, existence_audit, nmax, nmax_refined, p_membership_numeric,
                                 pgd_nmax_raw, search_contradictory_divisor, secant_pairing)
from weakfano.lattice import make_k3_rank3

pairs = st.sampled_from(sorted(P_ALL))
tri = st.sampled_from(["yes", "no", "unknown"])
place = st.sampled_from(["hyperplane", "smooth_quadric_section", "smooth_cubic_section", "unknown"])


def test_set_sizes():
    assert len(P_ALL) == 36
    assert len(P_PLANE) + len(P_QUADRIC) + len(P_CUBIC) == 38
    assert not (P_NONE & P_LINE) and not (P_LINE & P_CONIC)
    assert P_PLANE | P_QUADRIC | P_CUBIC == P_ALL


def test_numeric_membership_oracle():
    # independent restatement: Castelnuovo-type window minus two excluded pairs
    for d in range(1, 31):
        for g in range(81):
            lit = (g, d) in P_ALL
            window = d <= 17 and g > 3 * d - 26 and g <= (d * d - 1) / 12
            assert lit == (window and (g, d) not in {(4, 7), (10, 11)} or (g, d) in {(4, 6), (13, 12)})
            assert lit == p_membership_numeric(g, d)


def test_nmax_buckets():
    for g, d in P_ALL:
        want = 0 if (g, d) in P_NONE else 1 if (g, d) in P_LINE else 2
        assert nmax(g, d) == want, (g, d)


def test_polynomial_examples():
    P = PgdPolynomial(0, 7)
    assert P.text().replace(" ", "") == "n^2-22n+48" and P(2) == 8 and P(3) < 0
    assert pgd_nmax_raw(0, 7) == 2
    assert anticanonical_cube(0, 1) == 46 and anticanonical_sq_E(0, 1) == 5
    assert secant_pairing(1, 4) == -1 and secant_pairing(2, 7) == -1


def test_outside_p_rejected():
    with pytest.raises(ValueError):
        pgd_nmax_raw(4, 7)
    with pytest.raises(ValueError):
        search_contradictory_divisor(0, 7, 20)


def test_special_rule():
    n, certs = nmax_refined(1, 6)
    assert n == 0 and certs[0].reason == "special_rule_1_6"


def test_polynomial_certificates_are_negative():
    for g, d in P_ALL:
        P = PgdPolynomial(g, d)
        for c in nmax_refined(g, d)[1]:
            if c.reason == "polynomial_negative":
                assert P(c.n) < 0


def _revalidate(c):
    S = make_k3_rank3(c.g, c.d, c.n, c.cg)   # fresh lattice, fresh Gram matrix
    D = S.cls(*c.divisor)
    H, C, G = S.basis()
    assert (D.dot(H), D.square(), D.dot(C), D.dot(G)) == c.numbers
    assert contradiction_pattern(D, c.d, c.n)[0] == c.pattern


def test_every_certificate_revalidates():
    for g, d in P_ALL:
        for c in nmax_refined(g, d)[1]:
            if c.reason == "contradictory_divisor":
                assert c.cg in cg_range(g, d, c.n)
                _revalidate(c)


def test_classify_examples():
    v = classify(CurveInstance(0, 8, "smooth_cubic_section", "no", "no"))
    assert v.verdict == "weak_fano"
    v = classify(CurveInstance(10, 11))
    assert v.verdict == "not_weak_fano"
    v = classify(CurveInstance(0, 6, "smooth_quadric_section"))
    assert v.verdict == "insufficient_data" and v.missing == ("has_4secant_line",)
    v = classify(CurveInstance(0, 3))
    assert v.verdict == "weak_fano"
    v = classify(CurveInstance(2, 8))
    assert v.verdict == "insufficient_data" and "containment" in v.missing
    v = classify(CurveInstance(0, 4, "hyperplane", has_4secant_line="yes"))
    assert v.verdict == "weak_fano" and v.conflicts
    # a conic secant is impossible when n_max = 1
    v = classify(CurveInstance(0, 6, "smooth_quadric_section", "no", "yes"))
    assert v.verdict == "weak_fano" and v.conflicts


def test_curve_instance_validation():
    with pytest.raises(ValueError):
        CurveInstance(-1, 3)
    with pytest.raises(ValueError):
        CurveInstance(0, 3, "plane")
    with pytest.raises(ValueError):
        CurveInstance(0, 3, has_4secant_line="maybe")


def test_existence_audit():
    rows = existence_audit()
    assert len(rows) == 36 and all(r.ok for r in rows)
    assert {(r.g, r.d) for r in rows if r.low_degree == "line"} == {(0, 1), (2, 5), (14, 13)}
    assert {(r.g, r.d) for r in rows if r.low_degree == "conic"} == {(0, 2), (1, 4), (5, 8), (8, 10)}


def _refinements(t):
    return ["yes", "no"] if t == "unknown" else [t]


def test_classify_monotone_exhaustive():
    for (g, d), cont, a, b in itertools.product(sorted(P_ALL), ["hyperplane", "smooth_quadric_section",
                                                                "smooth_cubic_section", "unknown"],
                                                 ["yes", "no", "unknown"], ["yes", "no", "unknown"]):
        base = classify(CurveInstance(g, d, cont, a, b)).verdict
        for a2, b2 in itertools.product(_refinements(a), _refinements(b)):
            v = classify(CurveInstance(g, d, cont, a2, b2)).verdict
            if base != "insufficient_data":
                assert v == base, (g, d, cont, a, b, a2, b2)


@given(gd=pairs, cont=place, a=tri, b=tri)
def test_cubic_section_resolves_with_full_data(gd, cont, a, b):
    v = classify(CurveInstance(*gd, cont, a, b))
    if cont == "smooth_cubic_section" and "unknown" not in (a, b):
        assert v.verdict != "insufficient_data"
    if v.verdict == "insufficient_data":
        assert v.missing
