"""Classical (Torgerson) multidimensional scaling and its diagnostics.

The embedding is spectral, not iterative: square the dissimilarities,
double-center,

    B = -1/2 * J (D o D) J,      J = I - (1/N) 11^T,

take the eigendecomposition of B, and use sqrt(lambda_p) * v_p for the
p-th largest positive eigenvalue as coordinate column p. Negative
eigenvalues (the signature of non-Euclidean dissimilarities such as the
Lorentzian) are reported in full but never used for coordinates.

Stress here is a diagnostic of the finished embedding, not an objective:
Kruskal stress-1, sqrt(sum (d - d~)^2 / sum d^2) over unordered pairs,
with d~ the Euclidean distance in embedding space.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import IO, List, Optional, Tuple, Union

import numpy as np
from scipy.spatial.distance import pdist

from .errors import ConvergenceError, DegenerateInputError, DimensionUnavailableError
from .metrics import DistanceMatrix, Metric


@dataclass(frozen=True)
class GramMatrix:
    """Double-centered inner-product matrix produced from squared distances."""

    entries: np.ndarray

    def __post_init__(self):
        entries = np.ascontiguousarray(self.entries, dtype=np.float64)
        n = entries.shape[0]
        if entries.ndim != 2 or entries.shape != (n, n):
            raise ValueError(f"Gram matrix must be square, got shape {entries.shape}")
        if not np.array_equal(entries, entries.T):
            raise ValueError("Gram matrix must be exactly symmetric")
        scale = np.max(np.abs(entries)) if n else 0.0
        tol = 1.0e-9 * n * scale
        sums = np.abs(entries.sum(axis=0))
        if n and sums.max() > tol and scale > 0.0:
            raise ValueError(
                f"Gram matrix is not double-centered: worst column sum {sums.max():.3e} "
                f"exceeds tolerance {tol:.3e}"
            )
        entries.flags.writeable = False
        object.__setattr__(self, "entries", entries)

    @property
    def n(self) -> int:
        return int(self.entries.shape[0])


@dataclass(frozen=True)
class Embedding:
    """Coordinates plus the full eigenvalue spectrum of the Gram matrix."""

    coordinates: np.ndarray
    eigenvalues: np.ndarray
    n: int
    source_metric: Metric
    source_variant: str = "standard"

    def __post_init__(self):
        coords = np.ascontiguousarray(self.coordinates, dtype=np.float64)
        eigenvalues = np.asarray(self.eigenvalues, dtype=np.float64).copy()
        if coords.ndim != 2 or coords.shape[1] != self.n:
            raise ValueError(f"expected N x {self.n} coordinates, got shape {coords.shape}")
        coords.flags.writeable = False
        eigenvalues.flags.writeable = False
        object.__setattr__(self, "coordinates", coords)
        object.__setattr__(self, "eigenvalues", eigenvalues)

    @property
    def n_objects(self) -> int:
        return int(self.coordinates.shape[0])

    @property
    def n_positive_eigenvalues(self) -> int:
        return int(np.sum(self.eigenvalues > 0.0))

    @property
    def n_negative_eigenvalues(self) -> int:
        return int(np.sum(self.eigenvalues < 0.0))


@dataclass(frozen=True)
class StressReport:
    """Stress value, Shepard pairs and the stress-versus-dimension curve."""

    stress_1: float
    shepard_pairs: np.ndarray = field(repr=False)
    stress_curve: List[Tuple[int, float]] = field(default_factory=list)


def double_center(D: Union[DistanceMatrix, np.ndarray]) -> GramMatrix:
    """B = -1/2 * J (D o D) J computed via row/column/grand means."""
    entries = D.entries if isinstance(D, DistanceMatrix) else np.asarray(D, dtype=np.float64)
    A = entries * entries
    row = A.mean(axis=1, keepdims=True)
    col = A.mean(axis=0, keepdims=True)
    grand = A.mean()
    B = -0.5 * (A - row - col + grand)
    # the formula is symmetric in exact arithmetic; enforce it bitwise
    B = 0.5 * (B + B.T)
    return GramMatrix(entries=B)


def eigendecompose_symmetric(B: Union[GramMatrix, np.ndarray]):
    """Full spectrum of a symmetric matrix, eigenvalues descending.

    Returns (eigenvalues, eigenvectors) with orthonormal eigenvector
    columns; negative eigenvalues are included, as they diagnose
    non-Euclidean dissimilarities. Ties keep the solver's original order.
    """
    M = B.entries if isinstance(B, GramMatrix) else np.asarray(B, dtype=np.float64)
    if M.ndim != 2 or M.shape[0] != M.shape[1]:
        raise ValueError(f"matrix must be square, got shape {M.shape}")
    if not np.array_equal(M, M.T):
        raise ValueError("matrix must be exactly symmetric")
    try:
        evals, evecs = np.linalg.eigh(M)
    except np.linalg.LinAlgError as exc:
        raise ConvergenceError(f"symmetric eigendecomposition failed: {exc}") from exc
    order = np.argsort(-evals, kind="stable")
    return evals[order], evecs[:, order]


def _signed_columns(vectors: np.ndarray) -> np.ndarray:
    """Deterministic sign convention: largest-|entry| coordinate positive."""
    out = vectors.copy()
    for p in range(out.shape[1]):
        col = out[:, p]
        idx = int(np.argmax(np.abs(col)))
        if col[idx] < 0.0:
            out[:, p] = -col
    return out


def embed(D: DistanceMatrix, n: int) -> Embedding:
    """Classical MDS embedding of D into n dimensions."""
    if n < 1:
        raise ValueError(f"embedding dimension must be at least 1, got {n}")
    if not D.is_symmetric:
        raise ValueError(
            f"cannot embed an asymmetric dissimilarity matrix (variant {D.variant!r})"
        )
    evals, evecs = eigendecompose_symmetric(double_center(D))
    positive = int(np.sum(evals > 0.0))
    if n > positive:
        raise DimensionUnavailableError(n, positive)
    cols = _signed_columns(evecs[:, :n])
    coords = cols * np.sqrt(evals[:n])
    return Embedding(coordinates=coords, eigenvalues=evals, n=n,
                     source_metric=D.metric, source_variant=D.variant)


def _condensed(D: DistanceMatrix) -> np.ndarray:
    """Upper triangle of D in row-major (i<j) order."""
    entries = D.entries
    n = entries.shape[0]
    iu = np.triu_indices(n, k=1)
    return entries[iu]


def kruskal_stress(D: DistanceMatrix, E: Embedding) -> float:
    """Kruskal stress-1 of the embedding against the original distances."""
    if E.n_objects != D.n_objects:
        raise ValueError(
            f"embedding has {E.n_objects} objects but distance matrix has {D.n_objects}"
        )
    d = _condensed(D)
    denom = float(np.dot(d, d))
    if denom == 0.0:
        raise DegenerateInputError("all distances are zero; stress is undefined")
    dhat = pdist(E.coordinates)
    diff = d - dhat
    return float(np.sqrt(np.dot(diff, diff) / denom))


def shepard_points(D: DistanceMatrix, E: Embedding) -> np.ndarray:
    """(d_ij, d~_ij) pairs, one per unordered pair, row-major i<j order."""
    if E.n_objects != D.n_objects:
        raise ValueError(
            f"embedding has {E.n_objects} objects but distance matrix has {D.n_objects}"
        )
    return np.column_stack((_condensed(D), pdist(E.coordinates)))


def stress_curve(D: DistanceMatrix, n_max: int) -> List[Tuple[int, float]]:
    """Stress-1 at each embedding dimension n = 1..n_max."""
    if n_max < 1:
        raise ValueError(f"n_max must be at least 1, got {n_max}")
    E = embed(D, n_max)
    d = _condensed(D)
    denom = float(np.dot(d, d))
    if denom == 0.0:
        raise DegenerateInputError("all distances are zero; stress is undefined")
    curve = []
    acc = np.zeros_like(d)
    for p in range(n_max):
        acc += pdist(E.coordinates[:, p:p + 1], metric="sqeuclidean")
        diff = d - np.sqrt(acc)
        curve.append((p + 1, float(np.sqrt(np.dot(diff, diff) / denom))))
    return curve


def diagnostics(D: DistanceMatrix, E: Embedding, curve_max: Optional[int] = None) -> StressReport:
    """Assemble the stress report for a finished embedding."""
    n_max = E.n if curve_max is None else curve_max
    return StressReport(
        stress_1=kruskal_stress(D, E),
        shepard_pairs=shepard_points(D, E),
        stress_curve=stress_curve(D, n_max),
    )


def write_embedding_csv(E: Embedding, dest: Union[str, IO[str]]):
    """Write coordinates as CSV `i,c1,...,cn` (1-based i, full precision)."""
    own = isinstance(dest, str)
    fh = open(dest, "w", encoding="utf-8", newline="\n") if own else dest
    try:
        header = ",".join(["i"] + [f"c{p + 1}" for p in range(E.n)])
        fh.write(header + "\n")
        for i, row in enumerate(E.coordinates, start=1):
            fh.write(",".join([str(i)] + [repr(float(v)) for v in row]) + "\n")
    finally:
        if own:
            fh.close()


def write_eigenvalues_csv(E: Embedding, dest: Union[str, IO[str]]):
    """Write the full spectrum as CSV `p,lambda` (descending, 1-based p)."""
    own = isinstance(dest, str)
    fh = open(dest, "w", encoding="utf-8", newline="\n") if own else dest
    try:
        fh.write("p,lambda\n")
        for p, lam in enumerate(E.eigenvalues, start=1):
            fh.write(f"{p},{float(lam)!r}\n")
    finally:
        if own:
            fh.close()
