from __future__ import annotations

import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import caution1_module
from zzpers import subspace as sub
from zzpers.decompose import right_filtrations
from zzpers.field import identity, inverse, mat_mul, rank
from zzpers.filtration import (
    FiltrationRep,
    InvariantViolation,
    birth_time_index,
    chain_dims,
    death_time_index,
    rf_abstract,
    rf_init,
    rf_step,
)
from zzpers.harness import SplitMix64, random_matrix, random_module, random_type
from zzpers.zigzag import ZigzagModule, direct_sum, interval_module


@pytest.mark.parametrize(
    "tau, bt",
    [
        ("", (1,)),
        ("f", (1, 2)),
        ("g", (2, 1)),
        ("ff", (1, 2, 3)),
        ("fg", (3, 1, 2)),
        ("gf", (2, 1, 3)),
        ("gg", (3, 2, 1)),
        ("fgf", (3, 1, 2, 4)),
    ],
)
def test_birth_time_index_table(tau, bt):
    assert birth_time_index(tau) == bt


@given(st.text(alphabet="fg", max_size=10))
def test_birth_time_index_is_permutation(tau):
    bt = birth_time_index(tau)
    assert sorted(bt) == list(range(1, len(tau) + 2))
    if tau:
        assert bt.index(len(tau) + 1) == (len(bt) - 1 if tau.endswith("f") else 0)


def test_death_time_index_examples():
    assert death_time_index("ffg", 2) == (2, 4, 3)
    for n in range(1, 7):
        tau = "f" * (n - 1)
        assert death_time_index(tau, 1) == tuple(range(1, n + 1))
        assert death_time_index(random_type(SplitMix64(n), n), n) == (n,)
    with pytest.raises(ValueError):
        death_time_index("ff", 4)


def test_rf_init():
    assert rf_init(3).phi == (1, 1, 1) and rf_init(3).dims == (3,)
    assert rf_init(0).phi == () and rf_init(0).dims == (0,)


def test_filtration_rep_rejects_bad_phi():
    with pytest.raises(InvariantViolation):
        FiltrationRep(2, (2, 1))
    with pytest.raises(InvariantViolation):
        FiltrationRep(2, (1, 3))


def test_single_forward_arrow():
    rng = SplitMix64(3)
    for _ in range(20):
        a1, a2 = 1 + rng.below(4), 1 + rng.below(4)
        mat = random_matrix(rng, a2, a1, 3)
        m = ZigzagModule(3, "f", (a1, a2), (mat,))
        r = rank(mat, 3)
        assert chain_dims(rf_abstract(m)) == (r, a2 - r)
        assert right_filtrations(m)[-1].dims == (r, a2 - r)


def test_caution1_right_filtration():
    m = caution1_module()
    chain = rf_abstract(m)
    # (0, f g^-1(0), f(V_2), V_3) on V_3 = F: the first step already fills V_3
    assert chain_dims(chain) == (1, 0, 0)
    assert right_filtrations(m)[-1].dims == (1, 0, 0)


def test_fgf_interval_table():
    tau = "fgf"
    bt = birth_time_index(tau)
    for b in range(1, 5):
        dims = chain_dims(rf_abstract(interval_module(tau, b, 4)))
        assert dims == tuple(int(x == b) for x in bt)
    # I(b_2, 4) = I(1, 4) gives (0, 0, F, F, F)
    assert [sub.dim(x) for x in rf_abstract(interval_module(tau, 1, 4))] == [0, 0, 1, 1, 1]


@pytest.mark.parametrize("length", range(0, 6))
def test_interval_right_filtration_lemma(length):
    """Through the end: one subquotient at the birth slot; otherwise nothing."""
    for tau in map("".join, itertools.product("fg", repeat=length)):
        n = length + 1
        bt = birth_time_index(tau)
        for b in range(1, n + 1):
            for d in range(b, n + 1):
                m = interval_module(tau, b, d)
                want = tuple(int(d == n and x == b) for x in bt)
                assert chain_dims(rf_abstract(m)) == want
                assert right_filtrations(m)[-1].dims == want


def test_length3_chain_shape():
    # rf(V1 -f-> V2 <-g- V3) = (0, g^-1(0), g^-1 f(V1), V3)
    rng = SplitMix64(17)
    for _ in range(20):
        m = random_module(rng, "fg", 3, 5)
        f, g = m.arrow(1), m.arrow(2)
        want = [
            sub.zero_space(m.dims[2]),
            sub.null_space(g, 5),
            sub.preimage(g, sub.column_space(f, 5), 5),
            sub.full_space(m.dims[2]),
        ]
        got = rf_abstract(m)
        assert len(got) == 4
        assert all(sub.equal(x, y, 5) for x, y in zip(got, want))


@st.composite
def step_case(draw):
    p = draw(st.sampled_from([2, 3, 5]))
    depth = draw(st.integers(1, 4))
    a = draw(st.integers(0, 4))
    phi = tuple(sorted(draw(st.lists(st.integers(1, depth), min_size=a, max_size=a))))
    b = draw(st.integers(0, 4))
    arrow = draw(st.sampled_from("fg"))
    seed = draw(st.integers(0, 2**32))
    shape = (b, a) if arrow == "f" else (a, b)
    return p, FiltrationRep(depth, phi), arrow, random_matrix(SplitMix64(seed), *shape, p)


@settings(max_examples=200, deadline=None)
@given(step_case())
def test_rf_step_matches_subspace_algebra(case):
    """The new filtration, read back in old coordinates, is the image / preimage chain."""
    p, rep, arrow, mat = case
    b = mat.shape[0] if arrow == "f" else mat.shape[1]
    old = rep.chain()
    if arrow == "f":
        # a backward next arrow has rows indexed by V_{k+1}, so it records T
        new, ech, t = rf_step(rep, "f", mat, p, identity(b), "g")
        assert np.array_equal(mat_mul(t, mat, p), ech)
        to_old = inverse(t, p)
        want = [sub.image(mat, r, p) for r in old] + [sub.full_space(b)]
    else:
        # a forward next arrow has columns indexed by V_{k+1}, so it records C
        new, ech, to_old = rf_step(rep, "g", mat, p, identity(b), "f")
        assert np.array_equal(mat_mul(mat, to_old, p), ech)
        want = [sub.zero_space(b)] + [sub.preimage(mat, r, p) for r in old]
    got = [sub.span(mat_mul(to_old, c, p), p) for c in new.chain()]
    assert len(got) == len(want)
    assert all(sub.equal(x, y, p) for x, y in zip(got, want))


@settings(max_examples=150, deadline=None)
@given(st.integers(0, 2**32), st.integers(1, 6), st.sampled_from([2, 3, 5]))
def test_rf_step_dims_match_abstract(seed, n, p):
    rng = SplitMix64(seed)
    m = random_module(rng, random_type(rng, n), 5, p)
    reps = right_filtrations(m)
    for k in range(1, n + 1):
        assert reps[k - 1].dims == chain_dims(rf_abstract(m, k))
        assert list(reps[k - 1].phi) == sorted(reps[k - 1].phi)


@settings(max_examples=80, deadline=None)
@given(st.integers(0, 2**32), st.integers(1, 5))
def test_rf_dims_additive(seed, n):
    rng = SplitMix64(seed)
    tau = random_type(rng, n)
    a, b = random_module(rng, tau, 3, 3), random_module(rng, tau, 3, 3)
    da = chain_dims(rf_abstract(a))
    db = chain_dims(rf_abstract(b))
    assert chain_dims(rf_abstract(direct_sum(a, b))) == tuple(x + y for x, y in zip(da, db))
