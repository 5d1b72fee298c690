"""Subspaces of GF(p)^n held as column-span bases.

A subspace is an ``n x d`` matrix whose columns form a basis.  Every
constructor here returns a canonical basis (transposed RREF), so two equal
subspaces have identical matrices.  These routines never mutate module
bases; they back the reference filtrations and the localization formula.
"""

from __future__ import annotations

import numpy as np

from .field import kernel, mat_mul, rref, zeros


def span(vectors: np.ndarray, p: int) -> np.ndarray:
    """Canonical basis of the column span of ``vectors``."""
    vectors = np.asarray(vectors, dtype=np.int64)
    n = vectors.shape[0]
    if vectors.shape[1] == 0:
        return zeros(n, 0)
    red, pivots = rref(vectors.T, p)
    return red[: len(pivots)].T.copy()


def zero_space(n: int) -> np.ndarray:
    return zeros(n, 0)


def full_space(n: int) -> np.ndarray:
    return np.eye(n, dtype=np.int64)


def dim(space: np.ndarray) -> int:
    return space.shape[1]


def image(m: np.ndarray, space: np.ndarray, p: int) -> np.ndarray:
    """Image of a subspace of the domain under the map ``m``."""
    return span(mat_mul(m, space, p), p)


def preimage(m: np.ndarray, space: np.ndarray, p: int) -> np.ndarray:
    """``{x : m x in space}`` for a subspace of the codomain of ``m``."""
    rows, cols = m.shape
    # kernel of [m | -space] projected onto the x-part
    stacked = np.concatenate([m, (-space) % p], axis=1)
    ker = kernel(stacked, p)
    return span(ker[:cols], p)


def subspace_sum(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    return span(np.concatenate([a, b], axis=1), p)


def intersect(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    """Intersection via the kernel of ``[a | -b]``."""
    n = a.shape[0]
    if a.shape[1] == 0 or b.shape[1] == 0:
        return zeros(n, 0)
    ker = kernel(np.concatenate([a, (-b) % p], axis=1), p)
    return span(mat_mul(a, ker[: a.shape[1]], p), p)


def contains(big: np.ndarray, small: np.ndarray, p: int) -> bool:
    return dim(subspace_sum(big, small, p)) == dim(big)


def equal(a: np.ndarray, b: np.ndarray, p: int) -> bool:
    return a.shape == b.shape and bool(np.array_equal(span(a, p), span(b, p)))


def null_space(m: np.ndarray, p: int) -> np.ndarray:
    return span(kernel(m, p), p)


def column_space(m: np.ndarray, p: int) -> np.ndarray:
    return span(m, p)
