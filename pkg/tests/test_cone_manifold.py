import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from tconvex import sampling
from tconvex.coarea import gram
from tconvex.cone_manifold import (
    N_FACE_TOTAL_ANGLE,
    canonical_rotation,
    cos_half_cone_angle,
    cos_half_cone_angle_equal,
    cyclic_permutation_matrix,
    enumerate_charts,
    involution,
    n_face_total_angle,
    s_cone_angle,
    sinh_identity_residual,
)
from tconvex.errors import BadAngle, TooFewFacets
from tconvex.orthoscheme import dihedral_cosines

angle = st.floats(0.05, 2.0)


def test_chart_counts():
    assert len(enumerate_charts([0.3, 0.4, 0.5])) == 2
    charts = enumerate_charts([0.3, 0.4, 0.5, 0.6])
    assert len(charts) == 6
    assert (2, 3, 0, 1) in charts and (1, 0, 2, 3) in charts
    # labelled slots, so repeated values do not merge charts
    assert len(enumerate_charts([0.5, 0.5, 0.5, 0.5])) == 6
    with pytest.raises(TooFewFacets):
        enumerate_charts([0.3, 0.4])


def test_canonical_rotation():
    assert canonical_rotation((2, 0, 1)) == (0, 1, 2)
    assert canonical_rotation((3, 1, 0, 2)) == (0, 2, 3, 1)


@pytest.mark.parametrize("phis", [[0.3, 0.5, 0.7, 0.9], [0.2, 1.4, 0.6, 0.6, 1.1], [0.5] * 6])
def test_n_face_is_nonsingular(phis):
    n = len(phis)
    for k in range(n):
        for j in range(k + 2, n):
            if (j + 1) % n == k:
                continue
            assert n_face_total_angle(phis, k, j) == pytest.approx(N_FACE_TOTAL_ANGLE, abs=1e-12)
    assert N_FACE_TOTAL_ANGLE == pytest.approx(2 * math.pi)


def test_n_face_rejects_overlap():
    with pytest.raises(ValueError):
        n_face_total_angle([0.3, 0.5, 0.7, 0.9], 0, 1)
    with pytest.raises(TooFewFacets):
        n_face_total_angle([0.3, 0.5, 0.7], 0, 1)


def test_equal_angle_closed_form():
    for a in (0.1, 0.7, 2.5):
        assert cos_half_cone_angle(a, a, a) == pytest.approx(cos_half_cone_angle_equal(a), rel=1e-13)


def test_s_cone_angle_example():
    rep = s_cone_angle(0.4, 0.4, 0.4)
    assert rep.face_type == "S"
    assert len(rep.dihedral_angles) == 6
    assert rep.discrepancy <= 1e-12
    assert 2 * math.pi < rep.theta_sum < 3 * math.pi
    with pytest.raises(BadAngle):
        s_cone_angle(0.4, 0.0, 0.4)


@given(angle, angle, angle)
def test_s_cone_angle_sum_matches_closed_form(a, b, c):
    rep = s_cone_angle(a, b, c)
    assert rep.discrepancy <= 1e-10
    assert 2 * math.pi < rep.theta_closed < 3 * math.pi


@given(angle, angle, angle, angle, angle)
def test_cone_angle_ignores_ambient(a, b, c, u, v):
    base = s_cone_angle(a, b, c)
    other = s_cone_angle(a, b, c, ambient=(u, v))
    assert other.theta_sum == pytest.approx(base.theta_sum, abs=1e-10)


@given(angle, angle, angle)
def test_cone_angle_symmetric(a, b, c):
    ref = cos_half_cone_angle(a, b, c)
    for triple in ((b, c, a), (c, b, a), (a, c, b)):
        assert cos_half_cone_angle(*triple) == pytest.approx(ref, abs=1e-12)


def test_sinh_identity_examples():
    assert sinh_identity_residual(0.3, 0.5, 0.7) <= 1e-15
    assert sinh_identity_residual(2.0, 2.0, 2.0) <= 1e-14


@given(st.floats(-3, 3), st.floats(-3, 3), st.floats(-3, 3))
def test_sinh_identity(a, b, c):
    assert sinh_identity_residual(a, b, c) <= 1e-12


def test_involution_examples():
    assert involution([0.1, 0.2, 0.3]) == [0.3, 0.2, 0.1]
    assert involution(involution([0.1, 0.2, 0.3])) == [0.1, 0.2, 0.3]


@given(st.integers(0, 2**32 - 1))
def test_involution_is_isometry(seed):
    rng = np.random.default_rng(seed)
    n = int(rng.integers(3, 9))
    phis = sampling.random_phis(rng, n)
    rev = involution(phis)
    # reversed angles have reversed dihedral cosines
    cos = dihedral_cosines(phis).dihedral_cos
    cos_rev = dihedral_cosines(rev).dihedral_cos
    np.testing.assert_allclose(cos_rev, cos[::-1], rtol=1e-13)
    # the Gram matrix is conjugated by the normal relabelling i -> -i mod n
    sigma = [(-i) % n for i in range(n)]
    P = np.eye(n)[sigma]
    np.testing.assert_allclose(gram(rev).entries, P @ gram(phis).entries @ P.T, rtol=1e-13, atol=1e-15)


def test_cyclic_permutation_matrix():
    P = cyclic_permutation_matrix(4, 1)
    np.testing.assert_array_equal(P @ np.arange(4), [3, 0, 1, 2])
