"""Dense linear algebra over GF(3) on numpy int8 matrices.

Everything here treats matrices as collections of row vectors with
entries reduced mod 3.  These helpers back the code constructions:
row reduction for ranks and canonical bases, null spaces for duals,
row-space membership for containment oracles, and a chunked exhaustive
minimum-weight enumerator.
"""

from __future__ import annotations

import numpy as np

__all__ = [
    "as_gf3",
    "rref",
    "rank",
    "row_basis",
    "null_space",
    "row_space_contains",
    "same_row_space",
    "mat_mul",
    "min_weight",
    "MAX_ENUMERATION_DIM",
]

# Full codeword enumeration is used up to 3^14 words; beyond that the
# callers must use a directed search.
MAX_ENUMERATION_DIM = 14


def as_gf3(data) -> np.ndarray:
    """A fresh 2-D int8 array reduced mod 3."""
    arr = np.array(data, dtype=np.int64, copy=True)
    if arr.ndim == 1:
        arr = arr.reshape(1, -1)
    if arr.ndim != 2:
        raise ValueError("expected a vector or a matrix")
    return (arr % 3).astype(np.int8)


def rref(matrix) -> tuple[np.ndarray, tuple[int, ...]]:
    """Reduced row echelon form and pivot columns."""
    a = as_gf3(matrix)
    rows, cols = a.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        hits = np.nonzero(a[r:, c])[0]
        if hits.size == 0:
            continue
        p = r + int(hits[0])
        if p != r:
            a[[r, p]] = a[[p, r]]
        if a[r, c] == 2:
            a[r] = (a[r] * 2) % 3
        col = a[:, c].copy()
        col[r] = 0
        if np.any(col):
            a = (a - np.outer(col, a[r])) % 3
            a = a.astype(np.int8)
        pivots.append(c)
        r += 1
    return a, tuple(pivots)


def rank(matrix) -> int:
    return len(rref(matrix)[1])


def row_basis(matrix) -> np.ndarray:
    """Canonical (RREF) basis of the row space, zero rows dropped."""
    r, pivots = rref(matrix)
    return r[: len(pivots)]


def null_space(matrix) -> np.ndarray:
    """Basis rows of {x : every row of matrix is orthogonal to x}."""
    a = as_gf3(matrix)
    _, cols = a.shape
    r, pivots = rref(a)
    free = [c for c in range(cols) if c not in set(pivots)]
    basis = np.zeros((len(free), cols), dtype=np.int8)
    for row, f in enumerate(free):
        basis[row, f] = 1
        for i, p in enumerate(pivots):
            basis[row, p] = (-int(r[i, f])) % 3
    return basis


def row_space_contains(matrix, vectors) -> bool:
    """Whether every given vector lies in the row space of matrix."""
    basis, pivots = rref(matrix)
    v = as_gf3(vectors)
    if v.shape[1] != basis.shape[1]:
        raise ValueError("column count mismatch")
    v = v.astype(np.int16)
    for i, p in enumerate(pivots):
        v = (v - np.outer(v[:, p], basis[i])) % 3
    return not np.any(v)


def same_row_space(a, b) -> bool:
    ra, pa = rref(a)
    rb, pb = rref(b)
    return pa == pb and np.array_equal(ra[: len(pa)], rb[: len(pb)])


def mat_mul(a, b) -> np.ndarray:
    """(a @ b) mod 3 without int8 overflow."""
    prod = as_gf3(a).astype(np.int64) @ as_gf3(b).astype(np.int64)
    return (prod % 3).astype(np.int8)


def _coefficient_grid(k: int) -> np.ndarray:
    """All 3^k coefficient vectors as a (3^k, k) int8 array, the
    all-zero vector first."""
    powers = 3 ** np.arange(k - 1, -1, -1, dtype=np.int64)
    return ((np.arange(3**k, dtype=np.int64)[:, None] // powers) % 3).astype(np.int8)


def min_weight(generator) -> int:
    """Exact minimum Hamming weight over all nonzero codewords of the
    row space, by chunked full enumeration (the generator may contain
    dependent rows; the span is what is enumerated)."""
    basis = row_basis(generator)
    k = basis.shape[0]
    if k == 0:
        raise ValueError("zero code has no nonzero codewords")
    if k > MAX_ENUMERATION_DIM:
        raise ValueError(
            f"enumeration of 3^{k} codewords exceeds the 3^{MAX_ENUMERATION_DIM} limit"
        )
    k_low = min(k, 9)
    low = basis[k - k_low :].astype(np.int64)
    suffixes = (_coefficient_grid(k_low).astype(np.int64) @ low) % 3
    suffix_weights = np.count_nonzero(suffixes, axis=1)
    best = int(suffix_weights[1:].min()) if suffixes.shape[0] > 1 else None

    k_high = k - k_low
    if k_high:
        high = basis[:k_high].astype(np.int64)
        prefixes = (_coefficient_grid(k_high).astype(np.int64) @ high) % 3
        for prefix in prefixes[1:]:
            words = (suffixes + prefix) % 3
            w = int(np.count_nonzero(words, axis=1).min())
            if best is None or w < best:
                best = w
    assert best is not None
    return best
