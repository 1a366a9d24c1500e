"""The six distances, pairwise matrices, and metric-axiom checks.

Distances implemented (for vectors a, b of equal length m):

* arccosine:  arccos of the cosine similarity (argument clamped to [-1, 1])
* jaccard:    1 - T with Tanimoto T = sum(ab) / (sum(a^2) + sum(b^2) - sum(ab))
* chebyshev:  max_k |a_k - b_k|
* euclidean:  sqrt(sum (a_k - b_k)^2)
* canberra:   sum |a_k - b_k| / (|a_k| + |b_k|), 0/0 terms count as 0
* lorentzian: sum ln(1 + |a_k - b_k|)

Two deliberately "wrong" escape hatches are kept for comparison runs:
the literal Jaccard form (the similarity T itself, which violates the
identity axiom) and the literal Chebyshev form max_k(|a_k| - b_k)
(asymmetric and possibly negative). Both are off by default.

Matrix construction is delegated to a compiled kernel module when the
extension built from _distkernels.pyx is importable; otherwise the
blockwise numpy fallback with identical semantics is selected at import.
Set ZETA_MDS_NO_EXT=1 to force the fallback.
"""

from __future__ import annotations

import enum
import math
import os
from dataclasses import dataclass, field
from typing import IO, List, Optional, Tuple, Union

import numpy as np

from . import _kernels_py
from .errors import DegenerateInputError, DimensionError, MemoryLimitError
from .zeros import ObjectSet

_ext = None
if os.environ.get("ZETA_MDS_NO_EXT", "").strip() in ("", "0"):
    try:
        from . import _distkernels as _ext
    except ImportError:
        _ext = None

_BACKENDS = {"numpy": _kernels_py}
if _ext is not None:
    _BACKENDS["compiled"] = _ext

_DEFAULT_BACKEND = "compiled" if _ext is not None else "numpy"

#: Dense-matrix guard: beyond this many objects the float64 matrix alone
#: tops 1 GiB and the pipeline stops being a desk-scale computation.
MAX_OBJECTS = 12000


def active_backend() -> str:
    """Name of the kernel backend selected at import ("compiled" or "numpy")."""
    return _DEFAULT_BACKEND


def available_backends() -> Tuple[str, ...]:
    return tuple(sorted(_BACKENDS))


class Metric(enum.Enum):
    ARCCOSINE = "arccosine"
    JACCARD = "jaccard"
    CHEBYSHEV = "chebyshev"
    EUCLIDEAN = "euclidean"
    CANBERRA = "canberra"
    LORENTZIAN = "lorentzian"

    @classmethod
    def from_name(cls, name: str) -> "Metric":
        try:
            return cls(name.strip().lower())
        except ValueError:
            names = ", ".join(m.value for m in cls)
            raise ValueError(f"unknown metric {name!r}; expected one of: {names}") from None


#: variant tag -> kernel function name
_KERNELS = {
    (Metric.ARCCOSINE, "standard"): "pairwise_arccosine",
    (Metric.JACCARD, "standard"): "pairwise_jaccard",
    (Metric.JACCARD, "jaccard-literal"): "pairwise_jaccard_literal",
    (Metric.CHEBYSHEV, "standard"): "pairwise_chebyshev",
    (Metric.CHEBYSHEV, "chebyshev-literal"): "pairwise_chebyshev_literal",
    (Metric.EUCLIDEAN, "standard"): "pairwise_euclidean",
    (Metric.CANBERRA, "standard"): "pairwise_canberra",
    (Metric.LORENTZIAN, "standard"): "pairwise_lorentzian",
}


@dataclass(frozen=True)
class DistanceMatrix:
    """Dense symmetric matrix of pairwise dissimilarities.

    variant is "standard" for the six true distances; the literal escape
    hatches are tagged so downstream stages know the usual invariants
    (zero diagonal, non-negativity, symmetry for chebyshev-literal) were
    waived on purpose.
    """

    entries: np.ndarray
    metric: Metric
    variant: str = "standard"

    def __post_init__(self):
        entries = np.ascontiguousarray(self.entries, dtype=np.float64)
        if entries.ndim != 2 or entries.shape[0] != entries.shape[1]:
            raise ValueError(f"distance matrix must be square, got shape {entries.shape}")
        if not np.all(np.isfinite(entries)):
            raise ValueError("distance matrix entries must be finite")
        if self.variant == "standard":
            if entries.shape[0] and (np.any(np.diag(entries) != 0.0)):
                raise ValueError("distance matrix diagonal must be exactly zero")
            if np.any(entries < 0.0):
                raise ValueError("distances must be non-negative")
            if not np.array_equal(entries, entries.T):
                raise ValueError("distance matrix must be exactly symmetric")
        entries.flags.writeable = False
        object.__setattr__(self, "entries", entries)

    @property
    def n_objects(self) -> int:
        return int(self.entries.shape[0])

    @property
    def is_symmetric(self) -> bool:
        return bool(np.array_equal(self.entries, self.entries.T))


@dataclass(frozen=True)
class AxiomReport:
    """Sampled pass fractions for the identity/symmetry/triangle axioms.

    counterexamples holds index triples (i, j, k): identity failures are
    recorded as (i, i, i), symmetry failures as (i, j, j), triangle
    failures as the offending (i, j, k).
    """

    identity_pass: float
    symmetry_pass: float
    triangle_pass: float
    counterexamples: List[Tuple[int, int, int]] = field(default_factory=list)

    @property
    def all_pass(self) -> bool:
        return self.identity_pass == 1.0 and self.symmetry_pass == 1.0 and self.triangle_pass == 1.0


def _as_vector(x, name: str) -> np.ndarray:
    v = np.asarray(x, dtype=np.float64)
    if v.ndim != 1 or v.size < 1:
        raise DimensionError(f"{name} must be a non-empty 1-D vector, got shape {v.shape}")
    return v


def distance(metric: Metric, a, b, *, jaccard_literal: bool = False,
             chebyshev_literal: bool = False) -> float:
    """Scalar distance between two equal-length vectors."""
    a = _as_vector(a, "a")
    b = _as_vector(b, "b")
    if a.size != b.size:
        raise DimensionError(f"vector lengths differ: {a.size} vs {b.size}")

    if metric is Metric.EUCLIDEAN:
        d = a - b
        return float(math.sqrt(np.dot(d, d)))
    if metric is Metric.LORENTZIAN:
        return float(np.sum(np.log1p(np.abs(a - b))))
    if metric is Metric.CHEBYSHEV:
        if chebyshev_literal:
            return float(np.max(np.abs(a) - b))
        return float(np.max(np.abs(a - b)))
    if metric is Metric.CANBERRA:
        num = np.abs(a - b)
        den = np.abs(a) + np.abs(b)
        mask = den > 0.0
        return float(np.sum(num[mask] / den[mask]))
    if metric is Metric.ARCCOSINE:
        na = math.sqrt(np.dot(a, a))
        nb = math.sqrt(np.dot(b, b))
        if na == 0.0 or nb == 0.0:
            raise DegenerateInputError("arccosine distance undefined for a zero vector")
        c = float(np.dot(a, b)) / (na * nb)
        return float(math.acos(min(1.0, max(-1.0, c))))
    if metric is Metric.JACCARD:
        dot = float(np.dot(a, b))
        den = float(np.dot(a, a)) + float(np.dot(b, b)) - dot
        if den == 0.0:
            # only possible when both vectors are zero
            raise DegenerateInputError("jaccard distance undefined for two zero vectors")
        sim = dot / den
        return sim if jaccard_literal else 1.0 - sim
    raise ValueError(f"unhandled metric {metric!r}")


def _objects_matrix(objects) -> np.ndarray:
    if isinstance(objects, ObjectSet):
        return objects.vectors
    X = np.ascontiguousarray(objects, dtype=np.float64)
    if X.ndim != 2:
        raise DimensionError(f"object set must be a 2-D matrix, got shape {X.shape}")
    return X


def _variant_tag(metric: Metric, jaccard_literal: bool, chebyshev_literal: bool) -> str:
    if jaccard_literal and metric is Metric.JACCARD:
        return "jaccard-literal"
    if chebyshev_literal and metric is Metric.CHEBYSHEV:
        return "chebyshev-literal"
    return "standard"


def distance_matrix(objects, metric: Metric, *, jaccard_literal: bool = False,
                    chebyshev_literal: bool = False, backend: Optional[str] = None) -> DistanceMatrix:
    """Pairwise distance matrix over the rows of an object set.

    Symmetric entries are computed once per unordered pair and mirrored;
    the diagonal is not computed (exactly zero), except under the literal
    variants which report their raw formula values everywhere.
    """
    X = _objects_matrix(objects)
    n = X.shape[0]
    if n < 2:
        raise ValueError(f"need at least 2 objects, got {n}")
    if n > MAX_OBJECTS:
        raise MemoryLimitError(
            f"{n} objects would need a dense {n}x{n} float64 matrix "
            f"({n * n * 8 / 2**30:.1f} GiB); the supported maximum is {MAX_OBJECTS}"
        )
    if not np.all(np.isfinite(X)):
        raise ValueError("object vectors must be finite")

    variant = _variant_tag(metric, jaccard_literal, chebyshev_literal)
    if metric is Metric.ARCCOSINE:
        norms = np.einsum("ij,ij->i", X, X)
        bad = np.nonzero(norms == 0.0)[0]
        if bad.size:
            raise DegenerateInputError(
                f"arccosine distance undefined: object {int(bad[0]) + 1} is a zero vector"
            )
    if metric is Metric.JACCARD:
        zero_rows = np.nonzero(np.einsum("ij,ij->i", X, X) == 0.0)[0]
        if zero_rows.size >= 2:
            i, j = (int(zero_rows[0]) + 1, int(zero_rows[1]) + 1)
            raise DegenerateInputError(
                f"jaccard distance undefined for the pair of zero vectors ({i}, {j})"
            )

    impl = _BACKENDS[backend if backend is not None else _DEFAULT_BACKEND]
    kernel = getattr(impl, _KERNELS[(metric, variant)])
    return DistanceMatrix(entries=kernel(X), metric=metric, variant=variant)


def check_axioms(metric: Metric, objects, samples: int = 1000, seed: int = 0, *,
                 jaccard_literal: bool = False, chebyshev_literal: bool = False,
                 tolerance: float = 1.0e-12, max_counterexamples: int = 1000) -> AxiomReport:
    """Sample-test the identity, symmetry and triangle axioms.

    Draws `samples` single objects, pairs, and triples (uniformly, with a
    fixed seed) and checks each axiom to the given absolute tolerance.
    Degenerate distance evaluations count as failures instead of raising.
    """
    if samples < 1:
        raise ValueError(f"samples must be positive, got {samples}")
    X = _objects_matrix(objects)
    n = X.shape[0]
    if n < 3:
        raise ValueError(f"need at least 3 objects for axiom sampling, got {n}")

    def dist(i, j):
        return distance(metric, X[i], X[j], jaccard_literal=jaccard_literal,
                        chebyshev_literal=chebyshev_literal)

    rng = np.random.default_rng(seed)
    counterexamples: List[Tuple[int, int, int]] = []

    def record(triple):
        if len(counterexamples) < max_counterexamples:
            counterexamples.append(triple)

    identity_ok = 0
    for i in rng.integers(0, n, size=samples):
        i = int(i)
        try:
            ok = abs(dist(i, i)) <= tolerance
        except DegenerateInputError:
            ok = False
        identity_ok += ok
        if not ok:
            record((i, i, i))

    symmetry_ok = 0
    for _ in range(samples):
        i, j = (int(v) for v in rng.choice(n, size=2, replace=False))
        try:
            ok = abs(dist(i, j) - dist(j, i)) <= tolerance
        except DegenerateInputError:
            ok = False
        symmetry_ok += ok
        if not ok:
            record((i, j, j))

    triangle_ok = 0
    for _ in range(samples):
        i, j, k = (int(v) for v in rng.choice(n, size=3, replace=False))
        try:
            ok = dist(i, j) <= dist(i, k) + dist(j, k) + tolerance
        except DegenerateInputError:
            ok = False
        triangle_ok += ok
        if not ok:
            record((i, j, k))

    return AxiomReport(
        identity_pass=identity_ok / samples,
        symmetry_pass=symmetry_ok / samples,
        triangle_pass=triangle_ok / samples,
        counterexamples=counterexamples,
    )


def write_distance_csv(matrix: DistanceMatrix, dest: Union[str, IO[str]]):
    """Write the upper triangle as CSV rows `i,j,d` with 1-based indices."""
    own = isinstance(dest, str)
    fh = open(dest, "w", encoding="utf-8", newline="\n") if own else dest
    try:
        fh.write("i,j,d\n")
        entries = matrix.entries
        for i in range(matrix.n_objects):
            row = entries[i]
            for j in range(i + 1, matrix.n_objects):
                fh.write(f"{i + 1},{j + 1},{row[j]!r}\n")
    finally:
        if own:
            fh.close()
