from __future__ import annotations

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from zzpers.decompose import pers
from zzpers.diamond import DiamondInstance, check_exact, verify_diamond_matching
from zzpers.field import identity, mat_mul, rank
from zzpers.harness import SplitMix64, random_complex_simplices
from zzpers.homology import (
    SimplicialComplex,
    SimplicialZigzag,
    boundary_matrix,
    build_zigzag,
    grid_labels,
    homology_basis,
    induced_map,
    mayer_vietoris,
    mv_check,
    union_to_intersection,
    verify_strong_diamond,
)
from zzpers.zigzag import Barcode, ZigzagModule

HOLLOW = SimplicialComplex(3, [(0, 1), (1, 2), (0, 2)])
FILLED = SimplicialComplex(3, [(0, 1, 2)])
ARC_A = SimplicialComplex(4, [(0, 1), (1, 2)])
ARC_B = SimplicialComplex(4, [(2, 3), (0, 3)])


def _random_complex(rng, nv: int) -> SimplicialComplex:
    return SimplicialComplex(nv, random_complex_simplices(rng, nv, 1 + rng.below(6)))


def test_complex_closure_and_validation():
    assert len(FILLED.simplices) == 7
    assert HOLLOW <= FILLED and not FILLED <= HOLLOW
    assert (ARC_A | ARC_B) & ARC_A == ARC_A
    with pytest.raises(ValueError):
        SimplicialComplex(2, [(0, 2)])
    with pytest.raises(ValueError):
        SimplicialComplex(3, [(0, 1)], close=False)


def test_edge_boundary():
    edge = SimplicialComplex(2, [(0, 1)])
    assert boundary_matrix(edge, 1, 2).tolist() == [[1], [1]]
    assert boundary_matrix(edge, 1, 5).tolist() == [[4], [1]]
    assert boundary_matrix(edge, 0, 5).shape == (0, 2)


def test_boundary_of_boundary_triangle():
    for p in (2, 3, 5):
        d1, d2 = boundary_matrix(FILLED, 1, p), boundary_matrix(FILLED, 2, p)
        assert not mat_mul(d1, d2, p).any()
    assert rank(boundary_matrix(HOLLOW, 1, 5), 5) == 2


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 2**32), st.integers(1, 6), st.sampled_from([2, 3, 5]))
def test_boundary_squared_is_zero(seed, nv, p):
    c = _random_complex(SplitMix64(seed), nv)
    for ell in range(1, c.dimension + 1):
        assert not mat_mul(boundary_matrix(c, ell, p), boundary_matrix(c, ell + 1, p), p).any()


@pytest.mark.parametrize("p", [2, 5])
def test_homology_examples(p):
    assert homology_basis(HOLLOW, 0, p).dim == 1
    assert homology_basis(HOLLOW, 1, p).dim == 1
    assert homology_basis(SimplicialComplex(2, [(0,), (1,)]), 0, p).dim == 2
    assert homology_basis(FILLED, 1, p).dim == 0


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 2**32), st.integers(1, 6), st.sampled_from([2, 3]))
def test_homology_basis_invariants(seed, nv, p):
    c = _random_complex(SplitMix64(seed), nv)
    for ell in range(0, c.dimension + 1):
        h = homology_basis(c, ell, p)
        assert not mat_mul(boundary_matrix(c, ell, p), h.cycles, p).any()
        both = np.concatenate([h.boundaries, h.cycles], axis=1)
        assert rank(both, p) == both.shape[1]
        nullity = len(h.simplices) - rank(boundary_matrix(c, ell, p), p)
        assert h.dim == nullity - rank(boundary_matrix(c, ell + 1, p), p)


def test_induced_map_examples():
    assert np.array_equal(induced_map(HOLLOW, HOLLOW, 1, 3), identity(1))
    assert induced_map(HOLLOW, FILLED, 1, 3).shape == (0, 1)
    assert induced_map(ARC_A, ARC_A | ARC_B, 0, 2).tolist() == [[1]]
    with pytest.raises(ValueError):
        induced_map(FILLED, HOLLOW, 1, 2)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 2**32), st.integers(2, 6), st.sampled_from([2, 3]))
def test_functoriality(seed, nv, p):
    rng = SplitMix64(seed)
    a = _random_complex(rng, nv)
    b = a | _random_complex(rng, nv)
    c = b | _random_complex(rng, nv)
    for ell in range(0, 3):
        ab, bc_ = induced_map(a, b, ell, p), induced_map(b, c, ell, p)
        assert np.array_equal(mat_mul(bc_, ab, p), induced_map(a, c, ell, p))


def test_zigzag_shapes():
    assert grid_labels(3) == ["1", "1.5", "2", "2.5", "3"]
    assert SimplicialZigzag([HOLLOW] * 3, "union").tau() == "fgfg"
    assert SimplicialZigzag([HOLLOW] * 3, "intersection").tau() == "gfgf"
    single = build_zigzag(SimplicialZigzag([HOLLOW]), 1, 2)
    assert single.dims == (1,) and single.tau == ""
    with pytest.raises(ValueError):
        SimplicialZigzag([HOLLOW], "sideways")


@pytest.mark.parametrize("mode", ["union", "intersection"])
def test_constant_sequence(mode):
    two_circles = SimplicialComplex(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
    for n in (1, 2, 3):
        z = SimplicialZigzag([two_circles] * n, mode)
        for ell, mult in ((0, 2), (1, 2), (2, 0)):
            bc = pers(build_zigzag(z, ell, 3))
            assert bc == Barcode({(1, 2 * n - 1, None): mult} if mult else {})


def test_two_arcs_by_hand():
    union = SimplicialZigzag([ARC_A, ARC_B], "union")
    inter = SimplicialZigzag([ARC_A, ARC_B], "intersection")
    assert pers(build_zigzag(union, 0, 2)) == Barcode.from_intervals([(1, 3)])
    assert pers(build_zigzag(union, 1, 2)) == Barcode.from_intervals([(2, 2)])
    assert pers(build_zigzag(inter, 0, 2)) == Barcode.from_intervals([(1, 3), (2, 2)])
    assert pers(build_zigzag(inter, 1, 2)) == Barcode()
    report = verify_strong_diamond([ARC_A, ARC_B], 1, 2)
    assert report.ok, report.violations


def test_mayer_vietoris_examples():
    assert mv_check(HOLLOW, HOLLOW, 1, 3)
    assert mv_check(HOLLOW, HOLLOW, 0, 3)
    # two arcs: the circle's H_1 class comes from the two-point intersection
    h1, h0 = mayer_vietoris(ARC_A, ARC_B, 1, 2), mayer_vietoris(ARC_A, ARC_B, 0, 2)
    assert h1.d2.shape[0] - rank(h1.d2, 2) == 1
    assert h0.d1.shape[1] - rank(h0.d1, 2) == 1
    assert mv_check(ARC_A, ARC_B, 0, 2)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 2**32), st.integers(1, 6), st.sampled_from([2, 3]))
def test_mayer_vietoris_random(seed, nv, p):
    rng = SplitMix64(seed)
    a, b = _random_complex(rng, nv), _random_complex(rng, nv)
    for ell in range(0, 3):
        assert mv_check(a, b, ell, p)


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 2**32), st.integers(1, 5))
def test_mayer_vietoris_diamond_matches(seed, nv):
    """H(A) <- H(A∩B) -> H(B) against H(A) -> H(A∪B) <- H(B)."""
    rng = SplitMix64(seed)
    a, b = _random_complex(rng, nv), _random_complex(rng, nv)
    for ell in range(0, 2):
        mv = mayer_vietoris(a, b, ell, 2)
        ha, hb = homology_basis(a, ell, 2).dim, homology_basis(b, ell, 2).dim
        left, right = ZigzagModule(2, "", (ha,), ()), ZigzagModule(2, "", (hb,), ())
        d = DiamondInstance(
            left, right, mv.d2[:, :ha], (-mv.d2[:, ha:]) % 2, mv.d1[:ha], mv.d1[ha:]
        )
        assert check_exact(d)
        assert verify_diamond_matching(d).ok


def test_union_to_intersection_swaps():
    n_grid = 5
    assert union_to_intersection(2, 3, n_grid) == (3, 4)
    assert union_to_intersection(3, 4, n_grid) == (2, 3)
    assert union_to_intersection(1, 5, n_grid) == (1, 5)
    with pytest.raises(ValueError):
        union_to_intersection(2, 2, n_grid)


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 2**32), st.integers(2, 4), st.integers(2, 6))
def test_strong_diamond_random(seed, n, nv):
    rng = SplitMix64(seed)
    complexes = [_random_complex(rng, nv) for _ in range(n)]
    report = verify_strong_diamond(complexes, 1, 2)
    assert report.ok, report.violations
