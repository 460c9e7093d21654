import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from tconvex.errors import NotFutureTimelike, ParallelLines, ZeroVector
from tconvex.lorentz import (
    LIGHTLIKE,
    SPACELIKE,
    TIMELIKE,
    LVec,
    SupportLine,
    classify,
    hyp_matrix,
    hyp_translate,
    langle,
    langle_acosh,
    line_intersect,
    lprod,
    support_line,
    support_vertex,
)

T0 = math.asinh(1.0)
SQRT2 = math.sqrt(2.0)

rapidity = st.floats(-2.0, 2.0)
shift = st.floats(-3.0, 3.0)
radius = st.floats(0.2, 5.0)


def future(psi, r):
    return hyp_translate(psi, LVec(0.0, r))


def test_lprod_examples():
    assert lprod(LVec(1, 0), LVec(1, 0)) == 1
    assert lprod(LVec(0, 1), LVec(0, 1)) == -1
    assert lprod(LVec(1, 1), LVec(1, 1)) == 0


def test_classify_examples():
    c = classify(LVec(0, 1))
    assert c.kind == TIMELIKE and c.future
    assert classify(LVec(2, 1)).kind == SPACELIKE
    c = classify(LVec(1, -1))
    assert c.kind == LIGHTLIKE and not c.future
    with pytest.raises(ZeroVector):
        classify(LVec(0.0, 1e-13))


def test_lvec_rejects_nonfinite():
    with pytest.raises(ValueError):
        LVec(math.nan, 1.0)
    with pytest.raises(ValueError):
        LVec(1.0, math.inf)


def test_hyp_translate_example_matrix():
    v = hyp_translate(T0, LVec(0, 1))
    assert v.x1 == pytest.approx(1.0, abs=1e-15)
    assert v.x2 == pytest.approx(SQRT2, abs=1e-15)
    np.testing.assert_allclose(hyp_matrix(T0), [[SQRT2, 1], [1, SQRT2]], atol=1e-15)
    assert hyp_translate(0.0, LVec(0.3, -2.5)) == LVec(0.3, -2.5)


def test_hyp_translate_composes():
    v = LVec(0.3, 1.7)
    a = hyp_translate(0.2, hyp_translate(0.5, v))
    b = hyp_translate(0.7, v)
    assert abs(a.x1 - b.x1) <= 1e-12 and abs(a.x2 - b.x2) <= 1e-12


@pytest.mark.parametrize("t", np.linspace(-10, 10, 21))
def test_hyp_matrix_unit_determinant(t):
    assert np.linalg.det(hyp_matrix(t)) == pytest.approx(1.0, abs=1e-12 * math.cosh(t) ** 2)


def test_langle_examples():
    assert langle(LVec(0, 2), LVec(0, 2)) == 0.0
    assert langle(LVec(0, 1), hyp_translate(0.8, LVec(0, 1))) == pytest.approx(0.8, abs=1e-14)
    # <x, y> = -sqrt2 so cosh(angle) = sqrt2
    assert langle(LVec(0, 1), LVec(1, SQRT2)) == pytest.approx(math.log(1 + SQRT2), abs=1e-15)


def test_langle_rejects_non_future():
    with pytest.raises(NotFutureTimelike):
        langle(LVec(0, -1), LVec(0, 1))
    with pytest.raises(NotFutureTimelike):
        langle(LVec(0, 1), LVec(2, 1))


@given(rapidity, radius, rapidity, radius)
def test_langle_matches_acosh_form(p1, r1, p2, r2):
    x, y = future(p1, r1), future(p2, r2)
    phi = langle(x, y)
    assert phi >= 0
    assert phi == pytest.approx(abs(p1 - p2), abs=1e-12)
    if phi > 1e-3:
        assert langle_acosh(x, y) == pytest.approx(phi, abs=1e-10)


@given(rapidity, radius, rapidity, radius, shift)
def test_isometry_invariance(p1, r1, p2, r2, s):
    x, y = future(p1, r1), future(p2, r2)
    xs, ys = hyp_translate(s, x), hyp_translate(s, y)
    assert abs(langle(xs, ys) - langle(x, y)) <= 1e-10
    assert abs(lprod(xs, ys) - lprod(x, y)) <= 1e-10 * max(1.0, abs(lprod(x, y)))


@given(st.floats(-3, 3), st.floats(-3, 3), shift)
def test_translation_preserves_causal_kind(a, b, s):
    v = LVec(a, b)
    q = lprod(v, v) / max(a * a, b * b, 1e-300)
    if max(abs(a), abs(b)) < 1e-6 or abs(q) < 1e-6:
        return
    assert classify(hyp_translate(s, v)).kind == classify(v).kind


def test_support_line_examples():
    line = support_line(LVec(0, 1))
    assert line.normal == LVec(0, 1) and line.offset == -1
    line = support_line(LVec(0, 3))
    assert line.normal == LVec(0, 1) and line.offset == -3
    line = support_line(LVec(1, SQRT2))
    assert line.offset == pytest.approx(-1.0, abs=1e-15)
    assert line.normal.x2 == pytest.approx(SQRT2, abs=1e-15)
    with pytest.raises(NotFutureTimelike):
        support_line(LVec(1, 0))


def test_line_intersect_examples():
    x = line_intersect(SupportLine(LVec(0, 1), -1), SupportLine(LVec(1, SQRT2), -1))
    assert x.x1 == pytest.approx(SQRT2 - 1, abs=1e-15)
    assert x.x2 == pytest.approx(1.0, abs=1e-15)
    with pytest.raises(ParallelLines):
        line_intersect(SupportLine(LVec(0, 1), -1), SupportLine(LVec(0, 1), -2))


def test_intersection_of_orbit_lines_is_future():
    u = LVec(0, 1)
    v = hyp_translate(0.7, u)
    x = line_intersect(support_line(u), support_line(v))
    assert classify(x).future_timelike


@given(rapidity, st.floats(0.05, 2.0), radius)
def test_orbit_support_lines_meet_in_future(p, gap, h):
    # two lines of one elementary polygon: same support number, translated normals
    x = line_intersect(support_line(future(p, h)), support_line(future(p + gap, h)))
    assert classify(x).future_timelike


@given(st.floats(-6, 6), st.floats(0.01, 2.0), radius, radius)
def test_support_vertex_lies_on_both_lines(p, gap, h1, h2):
    x = support_vertex(p, h1, p + gap, h2)
    for psi, h in ((p, h1), (p + gap, h2)):
        eta = LVec(math.sinh(psi), math.cosh(psi))
        assert abs(lprod(x, eta) + h) <= 1e-9 * max(1.0, h) * math.cosh(p + gap)
    if abs(p) < 2:
        direct = line_intersect(SupportLine(LVec(math.sinh(p), math.cosh(p)), -h1),
                                SupportLine(LVec(math.sinh(p + gap), math.cosh(p + gap)), -h2))
        assert x.x1 == pytest.approx(direct.x1, rel=1e-8, abs=1e-8)
        assert x.x2 == pytest.approx(direct.x2, rel=1e-8, abs=1e-8)
