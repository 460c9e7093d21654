import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from tconvex import sampling
from tconvex.errors import BadInput, Infeasible, TooFewFacets, TransversalMiss
from tconvex.orthoscheme import (
    arc_length_n2,
    chain,
    chain_residual,
    cross_ratio,
    cyclic_distance,
    dihedral_cos_squared,
    dihedral_cosines,
    solve_angles_from_dihedral,
)

seeds = st.integers(0, 2**32 - 1)


def test_equal_angles_cosine():
    for a in (0.1, 0.8, 2.0):
        ortho = dihedral_cosines([a] * 4)
        np.testing.assert_allclose(ortho.dihedral_cos, 1 / (2 * math.cosh(a)), rtol=1e-14)


def test_triple_depends_on_neighbours_only():
    phis = [0.3, 0.5, 0.7, 0.9, 1.1]
    c2 = dihedral_cos_squared(phis)
    a, b, c = phis[0], phis[1], phis[2]
    assert c2[1] == pytest.approx(math.sinh(a) * math.sinh(c) / (math.sinh(a + b) * math.sinh(b + c)), rel=1e-15)
    # swapping the outer angles of a triple leaves its cosine fixed
    swapped = [0.7, 0.5, 0.3, 0.9, 1.1]
    assert dihedral_cos_squared(swapped)[1] == pytest.approx(c2[1], rel=1e-15)


def test_right_angle_pairs():
    ortho = dihedral_cosines([0.3, 0.4, 0.5, 0.6, 0.7])
    assert ortho.right_angle_pairs == [(0, 2), (0, 3), (1, 3), (1, 4), (2, 4)]
    assert dihedral_cosines([0.3, 0.4, 0.5]).right_angle_pairs == []


def test_too_few_facets():
    with pytest.raises(TooFewFacets):
        dihedral_cosines([0.3, 0.4])
    with pytest.raises(TooFewFacets):
        solve_angles_from_dihedral([0.2, 0.2])


@given(seeds)
def test_two_paths_agree(seed):
    rng = np.random.default_rng(seed)
    ortho = dihedral_cosines(sampling.random_phis(rng, int(rng.integers(3, 11))))
    assert ortho.discrepancy <= 1e-12
    assert np.all((ortho.dihedral_cos > 0) & (ortho.dihedral_cos < 1))


def test_arc_length_n2():
    for a, b in ((0.3, 0.3), (0.2, 1.4), (1.0, 0.5)):
        theta = arc_length_n2(a, b)
        closed = math.acos((math.sinh(a) + math.sinh(b)) / math.sinh(a + b))
        assert theta == pytest.approx(closed, abs=1e-12)
        assert 0 < theta < math.pi / 2
        assert arc_length_n2(b, a) == pytest.approx(theta, abs=1e-14)


def test_cross_ratio_example():
    phis = [0.4, 0.4, 0.4, 0.4]
    w = cross_ratio(phis, 1)
    c2 = 1 / (4 * math.cosh(0.4) ** 2)
    assert w.lam == pytest.approx(1 / (1 - c2), rel=1e-13)
    assert w.lam > 1
    assert all(x < y for x, y in zip(w.u, w.u[1:]))
    assert w.identity_residual <= 1e-13


def test_cross_ratio_rejects_bad_transversal():
    with pytest.raises(TransversalMiss):
        cross_ratio([0.3, 0.4, 0.5], 0, transversal=(0.0, 1.0, 0.0))
    with pytest.raises(TransversalMiss):
        cross_ratio([0.3, 0.4, 0.5], 0, transversal=(0.0, 0.0, 1.0))


@given(seeds, st.floats(-0.5, 0.5), st.floats(0.5, 3.0))
def test_cross_ratio_transversal_invariance(seed, a, c):
    rng = np.random.default_rng(seed)
    n = int(rng.integers(3, 9))
    phis = sampling.random_phis(rng, n)
    k = int(rng.integers(0, n))
    w0 = cross_ratio(phis, k)
    w1 = cross_ratio(phis, k, transversal=(a, 1.0, c))
    assert w1.lam == pytest.approx(w0.lam, rel=1e-10)
    assert w0.identity_residual <= 1e-12


def test_solve_examples():
    phis = np.array([0.3, 0.5, 0.7])
    A = dihedral_cos_squared(phis)
    got = solve_angles_from_dihedral(A)
    assert cyclic_distance(got, phis) <= 1e-8
    a = 0.8
    got = solve_angles_from_dihedral([1 / (4 * math.cosh(a) ** 2)] * 5)
    np.testing.assert_allclose(got, a, atol=1e-8)


def test_solve_rejects_out_of_range():
    with pytest.raises(BadInput):
        solve_angles_from_dihedral([0.2, 1.2, 0.3])
    with pytest.raises(BadInput):
        solve_angles_from_dihedral([0.2, 0.0, 0.3])


def test_chain_satisfies_relation():
    phis = np.array([0.3, 0.5, 0.7, 0.2, 0.9])
    A = dihedral_cos_squared(phis)
    p = chain(A, phis[0], phis[1])
    np.testing.assert_allclose(p, phis, rtol=1e-10)
    for k in range(1, len(phis) - 1):
        assert abs(chain_residual(p[k - 1], p[k], p[k + 1], A[k])) <= 1e-12


@settings(max_examples=40, deadline=None)
@given(seeds)
def test_solve_round_trip(seed):
    rng = np.random.default_rng(seed)
    phis = sampling.random_phis(rng, int(rng.integers(3, 9)))
    A = dihedral_cos_squared(phis)
    got = solve_angles_from_dihedral(A)
    assert np.max(np.abs(dihedral_cos_squared(got) - A)) <= 1e-12
    assert cyclic_distance(got, phis) <= 1e-6


def test_cyclic_distance():
    assert cyclic_distance([1, 2, 3], [3, 1, 2]) == 0
    assert cyclic_distance([1, 2, 3], [3, 2, 1]) == 0
    assert cyclic_distance([1, 2], [1, 2, 3]) == math.inf


def test_solve_long_cycles():
    rng = np.random.default_rng(0)
    for _ in range(20):
        phis = sampling.random_phis(rng, 12)
        A = dihedral_cos_squared(phis)
        assert np.max(np.abs(dihedral_cos_squared(solve_angles_from_dihedral(A)) - A)) <= 1e-12


def test_solve_unreachable_cosines():
    # equal angles give at most 1/4, so equal squared cosines of 0.9 are unreachable
    with pytest.raises(Infeasible):
        solve_angles_from_dihedral([0.9, 0.9, 0.9])
