from __future__ import annotations

import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import caution1_module, caution2_module
from oracles import theorem_multiplicities
from zzpers.decompose import decompose, multiplicities_from_dims, pers
from zzpers.field import identity, mat_mul
from zzpers.filtration import InvariantViolation
from zzpers.harness import SplitMix64, plant, random_module, random_type, scramble
from zzpers.zigzag import Barcode, ZigzagModule, direct_sum, interval_module, zero_module


def test_caution1():
    bc, trace = decompose(caution1_module())
    assert bc == Barcode.from_intervals([(1, 2), (2, 3)])
    assert trace.r == [(1,), (1, 1), (1, 0, 0)]
    assert trace.c == [(0,), (0, 1), (1, 0, 0)]


@pytest.mark.parametrize("n", [1, 2, 3])
def test_caution2_short_intervals_only(n):
    m = caution2_module(n)
    top = 2 * n + 1
    want = [(1, 2)] + [(2 * j, 2 * j + 2) for j in range(1, n)] + [(2 * n, top)]
    bc = pers(m)
    assert bc == Barcode.from_intervals(want)
    assert bc.multiplicity(1, top) == 0


@pytest.mark.parametrize("n", [1, 2, 3])
def test_caution2_has_long_submodule(n):
    """The all-ones vectors span a submodule isomorphic to I(1, 2n+1), yet no long bar exists."""
    m = caution2_module(n)
    ones = [np.ones((a, 1), dtype=np.int64) for a in m.dims]
    for i, arrow in enumerate(m.tau, start=1):
        src, dst = (i - 1, i) if arrow == "f" else (i, i - 1)
        assert np.array_equal(mat_mul(m.arrow(i), ones[src], 2), ones[dst])
    assert pers(m).multiplicity(1, m.n) == 0


def test_identity_persistence_module():
    for n in range(1, 6):
        for a in range(0, 3):
            m = ZigzagModule(3, "f" * (n - 1), (a,) * n, tuple(identity(a) for _ in range(n - 1)))
            bc, trace = decompose(m)
            assert bc == Barcode({(1, n, None): a} if a else {})
            assert trace.r[-1] == (a,) + (0,) * (n - 1)
            assert all(not any(c) for c in trace.c[:-1])


def test_zero_module():
    assert pers(zero_module("fgfg")) == Barcode()


def test_multiplicities_from_dims_rejects_negative():
    with pytest.raises(InvariantViolation):
        multiplicities_from_dims([(0,), (1, 0)], "f")


@pytest.mark.parametrize("length", range(0, 7))
def test_intervals_are_indecomposable(length):
    for tau in map("".join, itertools.product("fg", repeat=length)):
        n = length + 1
        for b in range(1, n + 1):
            for d in range(b, n + 1):
                assert pers(interval_module(tau, b, d, 5)) == Barcode.from_intervals([(b, d)])


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 2**32), st.integers(1, 7), st.sampled_from([2, 3, 5, 7]))
def test_krull_schmidt_additivity(seed, n, p):
    rng = SplitMix64(seed)
    tau = random_type(rng, n)
    a, b = random_module(rng, tau, 3, p), random_module(rng, tau, 3, p)
    assert pers(direct_sum(a, b)) == pers(a) + pers(b)


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 2**32), st.integers(1, 7), st.sampled_from([2, 3, 5]))
def test_basis_invariance_and_dimension_count(seed, n, p):
    rng = SplitMix64(seed)
    m = random_module(rng, random_type(rng, n), 4, p)
    bc = pers(m)
    assert pers(scramble(m, rng)) == bc
    assert sum((d - b + 1) * c for b, d, c, _ in bc.entries()) == sum(m.dims)
    for k in range(1, n + 1):
        assert sum(c for b, d, c, _ in bc.entries() if b <= k <= d) == m.dims[k - 1]


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 2**32), st.integers(1, 7), st.sampled_from([2, 3, 5]))
def test_difference_formula_equals_intersection_formula(seed, n, p):
    rng = SplitMix64(seed)
    m = random_module(rng, random_type(rng, n), 4, p)
    assert decompose(m)[1].c == theorem_multiplicities(m)


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 2**32), st.text(alphabet="fg", max_size=7), st.sampled_from([2, 3, 5]))
def test_planted_recovery(seed, tau, p):
    inst = plant(seed, tau, 6, p)
    assert pers(inst.module) == inst.truth
