"""Pure-numpy pairwise distance kernels.

Fallback used when the compiled extension (zetamds._distkernels) is not
available. Same function names and semantics as the extension: each
function takes a C-contiguous (N, m) float64 matrix and returns the full
(N, N) distance matrix with an exactly symmetric layout and a zero
diagonal (except for the deliberately broken "literal" variants).

Work proceeds over row blocks so peak temporary memory stays at
O(block * N * m) regardless of N.
"""

import numpy as np

BACKEND_NAME = "numpy"

_BLOCK = 256


def _blockwise(X, block_fn, symmetric=True, zero_diagonal=True):
    """Assemble the full matrix from upper block-triangle evaluations.

    block_fn(A, B) must return the (len(A), len(B)) distance block and be
    an exactly symmetric formula (d(a, b) == d(b, a) bit for bit), which
    holds for every kernel here built from |a-b|. Mirroring the blocks
    then yields an exactly symmetric matrix.
    """
    n = X.shape[0]
    out = np.empty((n, n), dtype=np.float64)
    for i0 in range(0, n, _BLOCK):
        i1 = min(i0 + _BLOCK, n)
        start = i0 if symmetric else 0
        for j0 in range(start, n, _BLOCK):
            j1 = min(j0 + _BLOCK, n)
            block = block_fn(X[i0:i1], X[j0:j1])
            out[i0:i1, j0:j1] = block
            if symmetric and j0 > i0:
                out[j0:j1, i0:i1] = block.T
    if zero_diagonal:
        np.fill_diagonal(out, 0.0)
    return out


def pairwise_euclidean(X):
    def block(A, B):
        diff = A[:, None, :] - B[None, :, :]
        return np.sqrt(np.einsum("ijk,ijk->ij", diff, diff))

    return _blockwise(X, block)


def pairwise_chebyshev(X):
    def block(A, B):
        return np.max(np.abs(A[:, None, :] - B[None, :, :]), axis=2)

    return _blockwise(X, block)


def pairwise_chebyshev_literal(X):
    """max_k(|a_k| - b_k): asymmetric and possibly negative by design.

    The diagonal keeps the raw formula value (nonzero when a row has a
    negative coordinate) instead of being forced to zero.
    """

    def block(A, B):
        return np.max(np.abs(A)[:, None, :] - B[None, :, :], axis=2)

    return _blockwise(X, block, symmetric=False, zero_diagonal=False)


def pairwise_canberra(X):
    def block(A, B):
        num = np.abs(A[:, None, :] - B[None, :, :])
        den = np.abs(A)[:, None, :] + np.abs(B)[None, :, :]
        with np.errstate(divide="ignore", invalid="ignore"):
            ratio = num / den
        ratio[den == 0.0] = 0.0  # 0/0 convention
        return ratio.sum(axis=2)

    return _blockwise(X, block)


def pairwise_lorentzian(X):
    def block(A, B):
        return np.log1p(np.abs(A[:, None, :] - B[None, :, :])).sum(axis=2)

    return _blockwise(X, block)


def pairwise_arccosine(X):
    norms = np.sqrt(np.einsum("ij,ij->i", X, X))

    def block(A, B, na, nb):
        cos = (A @ B.T) / np.outer(na, nb)
        np.clip(cos, -1.0, 1.0, out=cos)
        return np.arccos(cos)

    n = X.shape[0]
    out = np.empty((n, n), dtype=np.float64)
    for i0 in range(0, n, _BLOCK):
        i1 = min(i0 + _BLOCK, n)
        for j0 in range(i0, n, _BLOCK):
            j1 = min(j0 + _BLOCK, n)
            blk = block(X[i0:i1], X[j0:j1], norms[i0:i1], norms[j0:j1])
            if j0 == i0:
                # dgemm output need not be exactly symmetric; mirror the
                # upper triangle of the diagonal block.
                blk = np.triu(blk) + np.triu(blk, 1).T
            out[i0:i1, j0:j1] = blk
            if j0 > i0:
                out[j0:j1, i0:i1] = blk.T
    np.fill_diagonal(out, 0.0)
    return out


def pairwise_jaccard(X):
    sq = np.einsum("ij,ij->i", X, X)
    n = X.shape[0]
    out = np.empty((n, n), dtype=np.float64)
    for i0 in range(0, n, _BLOCK):
        i1 = min(i0 + _BLOCK, n)
        for j0 in range(i0, n, _BLOCK):
            j1 = min(j0 + _BLOCK, n)
            dot = X[i0:i1] @ X[j0:j1].T
            den = np.add.outer(sq[i0:i1], sq[j0:j1]) - dot
            with np.errstate(divide="ignore", invalid="ignore"):
                sim = dot / den
            sim[den == 0.0] = 1.0  # both rows zero: identical vectors
            blk = 1.0 - sim
            if j0 == i0:
                blk = np.triu(blk) + np.triu(blk, 1).T
            out[i0:i1, j0:j1] = blk
            if j0 > i0:
                out[j0:j1, i0:i1] = blk.T
    np.fill_diagonal(out, 0.0)
    return out


def pairwise_jaccard_literal(X):
    """Tanimoto similarity reported as printed: not a distance (d(x,x)=1)."""
    sq = np.einsum("ij,ij->i", X, X)
    n = X.shape[0]
    out = np.empty((n, n), dtype=np.float64)
    for i0 in range(0, n, _BLOCK):
        i1 = min(i0 + _BLOCK, n)
        for j0 in range(i0, n, _BLOCK):
            j1 = min(j0 + _BLOCK, n)
            dot = X[i0:i1] @ X[j0:j1].T
            den = np.add.outer(sq[i0:i1], sq[j0:j1]) - dot
            with np.errstate(divide="ignore", invalid="ignore"):
                sim = dot / den
            sim[den == 0.0] = 1.0
            if j0 == i0:
                sim = np.triu(sim) + np.triu(sim, 1).T
            out[i0:i1, j0:j1] = sim
            if j0 > i0:
                out[j0:j1, i0:i1] = sim.T
    # the printed formula gives exactly T(x, x) = 1 on the diagonal
    np.fill_diagonal(out, 1.0)
    return out
