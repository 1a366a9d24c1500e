"""Zero-list ingestion and window construction.

The input is a plain-text table of the imaginary parts t_k of the
nontrivial zeros rho_k = 1/2 + i*t_k, one decimal literal per line
('#' comments and blank lines allowed), as exported by the public zero
tables. Windows of m consecutive ordinates become the row vectors that
the metric and embedding stages consume; two layouts are supported:

* disjoint blocks (stride m): row i+1 starts m positions after row i,
* sliding windows (stride 1): row i+1 starts one position after row i.
"""

from __future__ import annotations

import enum
import io
from dataclasses import dataclass, field
from typing import Optional, Union

import numpy as np

from .errors import (
    EmptyInputError,
    InvalidWindowError,
    MonotonicityError,
    ParseError,
)


class Approach(enum.Enum):
    """Window layout: disjoint blocks (A1) or unit-stride sliding windows (A2)."""

    A1 = "a1"
    A2 = "a2"


@dataclass(frozen=True)
class ZeroList:
    """Ordered imaginary parts of nontrivial zeros on the critical line."""

    values: np.ndarray
    source_path: Optional[str] = None

    def __post_init__(self):
        values = np.asarray(self.values, dtype=np.float64)
        if values.ndim != 1:
            raise ValueError("ZeroList values must be one-dimensional")
        if values.size and values[0] <= 0.0:
            raise MonotonicityError(1, float(values[0]), 0.0)
        bad = np.nonzero(np.diff(values) <= 0.0)[0]
        if bad.size:
            k = int(bad[0])
            raise MonotonicityError(k + 2, float(values[k + 1]), float(values[k]))
        values = values.copy()
        values.flags.writeable = False
        object.__setattr__(self, "values", values)

    def __len__(self):
        return int(self.values.size)


@dataclass(frozen=True)
class ObjectSet:
    """N windows of m consecutive zero ordinates, one per row."""

    vectors: np.ndarray
    m: int
    approach: Approach
    origin: ZeroList = field(repr=False)

    def __post_init__(self):
        vectors = np.ascontiguousarray(self.vectors, dtype=np.float64)
        if vectors.ndim != 2 or vectors.shape[1] != self.m:
            raise ValueError(f"expected an N x {self.m} matrix, got shape {vectors.shape}")
        if self.m > 1 and not np.all(np.diff(vectors, axis=1) > 0.0):
            raise ValueError("window rows must be strictly increasing")
        vectors.flags.writeable = False
        object.__setattr__(self, "vectors", vectors)

    @property
    def n_objects(self) -> int:
        return int(self.vectors.shape[0])


def parse_zeros(stream: Union[str, bytes, io.IOBase], source_path: Optional[str] = None) -> ZeroList:
    """Parse a zero-list file into a ZeroList.

    Accepts a text string, a UTF-8 byte string, or an open file object.
    Values are kept in file order; an out-of-order pair raises
    MonotonicityError rather than being silently reordered.
    """
    if isinstance(stream, bytes):
        text = stream.decode("utf-8")
    elif isinstance(stream, str):
        text = stream
    else:
        raw = stream.read()
        text = raw.decode("utf-8") if isinstance(raw, bytes) else raw

    values = []
    previous = 0.0
    for line_no, line in enumerate(text.splitlines(), start=1):
        token = line.strip()
        if not token or token.startswith("#"):
            continue
        try:
            value = float(token)
        except ValueError:
            raise ParseError(line_no, token) from None
        if not np.isfinite(value):
            raise ParseError(line_no, token)
        if value <= previous:
            raise MonotonicityError(line_no, value, previous)
        values.append(value)
        previous = value

    if not values:
        raise EmptyInputError("no zero ordinates found in input")
    # The per-line monotonicity check above already enforced the ZeroList
    # invariants, so construction cannot fail here.
    return ZeroList(np.array(values, dtype=np.float64), source_path=source_path)


def load_zeros(path: str) -> ZeroList:
    """Read and parse a zero-list file from disk."""
    with open(path, "rb") as fh:
        return parse_zeros(fh, source_path=path)


def serialize(zeros: ZeroList) -> str:
    """Render a ZeroList back to file text, one ordinate per line.

    Uses shortest round-trip decimal representation, so
    parse_zeros(serialize(z)) reproduces z exactly.
    """
    return "".join(f"{v!r}\n" for v in zeros.values.tolist())


def _check_window_args(zeros: ZeroList, m: int):
    if m < 1:
        raise InvalidWindowError(f"window length must be at least 1, got {m}")
    if len(zeros) < m:
        raise InvalidWindowError(
            f"window length {m} exceeds the {len(zeros)} available zeros"
        )


def window_disjoint(zeros: ZeroList, m: int, limit: Optional[int] = None) -> ObjectSet:
    """Cut the zero list into disjoint windows of length m (approach A1).

    Row i holds ordinates (i-1)*m+1 .. i*m of the list; a trailing
    partial window is discarded. `limit` caps the number of rows.
    """
    _check_window_args(zeros, m)
    n = len(zeros) // m
    if limit is not None:
        n = min(n, int(limit))
    vectors = zeros.values[: n * m].reshape(n, m)
    return ObjectSet(vectors=vectors, m=m, approach=Approach.A1, origin=zeros)


def window_sliding(zeros: ZeroList, m: int, limit: Optional[int] = None) -> ObjectSet:
    """Slide a length-m window over the zero list with stride 1 (approach A2).

    Row i holds ordinates i .. i+m-1, so consecutive rows share m-1
    values. `limit` caps the number of rows.
    """
    _check_window_args(zeros, m)
    n = len(zeros) - m + 1
    if limit is not None:
        n = min(n, int(limit))
    windows = np.lib.stride_tricks.sliding_window_view(zeros.values, m)[:n]
    return ObjectSet(vectors=windows.copy(), m=m, approach=Approach.A2, origin=zeros)
