"""Periodicity quantification for embedding components.

Each component trace xi~_i(p), i = 1..N, is approximated by a single
sinusoid A*sin(omega*i + phi). The fit is deterministic: the dominant
discrete-Fourier bin seeds omega, amplitude and phase come from the
closed-form linear least squares on (A*cos(phi), A*sin(phi)) at fixed
omega, and omega is then refined by a bounded one-dimensional search
around the seed. Across components, the amplitude law A_p ~ p^alpha is
fitted on log-log axes and the frequency law omega_p ~ p by ordinary
least squares.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import IO, Iterable, List, Optional, Sequence, Tuple, Union

import numpy as np
from scipy.optimize import minimize_scalar

from .errors import (
    DegenerateSeriesError,
    DomainError,
    InsufficientDataError,
)
from .mds import Embedding

#: r2 above which a component is annotated as periodic in reports.
PERIODIC_R2_DEFAULT = 0.8


@dataclass(frozen=True)
class SinusoidFit:
    """Least-squares sinusoid for one component trace."""

    A: float
    omega: float
    phi: float
    r2: float
    p: int = 0

    def is_periodic(self, threshold: float = PERIODIC_R2_DEFAULT) -> bool:
        return self.r2 >= threshold

    def evaluate(self, i) -> np.ndarray:
        """Model values A*sin(omega*i + phi) at (1-based) indices i."""
        return self.A * np.sin(self.omega * np.asarray(i, dtype=np.float64) + self.phi)


@dataclass(frozen=True)
class PowerLawFit:
    """A ~ prefactor * p^exponent, fitted on log-log axes."""

    exponent: float
    prefactor: float
    r2: float


@dataclass(frozen=True)
class LinearFit:
    slope: float
    intercept: float
    r2: float


def _wrap_phase(phi: float) -> float:
    """Map a phase to the interval (-pi, pi]."""
    phi = math.remainder(phi, 2.0 * math.pi)
    if phi <= -math.pi:
        phi += 2.0 * math.pi
    return phi


def _amplitude_phase_lsq(yc: np.ndarray, idx: np.ndarray, omega: float):
    """Closed-form least squares of yc on sin(omega*i), cos(omega*i).

    Returns (C, S, sse): coefficients of sin and cos and the residual
    sum of squares.
    """
    s = np.sin(omega * idx)
    c = np.cos(omega * idx)
    # 2x2 normal equations
    ss = np.dot(s, s)
    cc = np.dot(c, c)
    sc = np.dot(s, c)
    ys = np.dot(yc, s)
    yx = np.dot(yc, c)
    det = ss * cc - sc * sc
    if det <= 0.0:
        # omega at the edge of usability (basis nearly collinear)
        return 0.0, 0.0, float(np.dot(yc, yc))
    C = (cc * ys - sc * yx) / det
    S = (ss * yx - sc * ys) / det
    sse = float(np.dot(yc, yc) - (C * ys + S * yx))
    return float(C), float(S), max(sse, 0.0)


def fit_sinusoid(series: Sequence[float], p: int = 0) -> SinusoidFit:
    """Fit A*sin(omega*i + phi) to a series indexed i = 1..N.

    The series is centered before fitting; omega is constrained to the
    open interval (0, pi) (Nyquist bound for unit index spacing).
    """
    y = np.asarray(series, dtype=np.float64)
    if y.ndim != 1:
        raise ValueError(f"series must be 1-D, got shape {y.shape}")
    n = y.size
    if n < 8:
        raise InsufficientDataError(f"need at least 8 samples to fit a sinusoid, got {n}")
    if not np.all(np.isfinite(y)):
        raise ValueError("series values must be finite")

    yc = y - y.mean()
    sst = float(np.dot(yc, yc))
    if sst == 0.0:
        raise DegenerateSeriesError("series is constant; no sinusoid can be fitted")

    idx = np.arange(1, n + 1, dtype=np.float64)
    spectrum = np.abs(np.fft.rfft(yc))
    # usable bins exclude DC and, for even n, the Nyquist bin
    hi = (n - 1) // 2
    if hi < 1:
        raise InsufficientDataError("series too short for frequency estimation")
    k0 = int(np.argmax(spectrum[1:hi + 1])) + 1

    bin_width = 2.0 * math.pi / n
    lo_limit = bin_width / 8.0
    hi_limit = math.pi - bin_width / 8.0

    best: Optional[Tuple[float, float, float, float]] = None  # (sse, omega, C, S)

    def consider(omega: float):
        nonlocal best
        C, S, sse = _amplitude_phase_lsq(yc, idx, omega)
        if best is None or sse < best[0] or (sse == best[0] and omega < best[1]):
            best = (sse, omega, C, S)

    for k in (k0 - 1, k0, k0 + 1):
        if k < 1 or k > hi:
            continue
        center = bin_width * k
        lo = max(lo_limit, center - bin_width)
        hi_b = min(hi_limit, center + bin_width)
        if not lo < hi_b:
            continue
        consider(center)  # the raw bin itself: refinement may only improve
        res = minimize_scalar(
            lambda w: _amplitude_phase_lsq(yc, idx, w)[2],
            bounds=(lo, hi_b),
            method="bounded",
            options={"xatol": 1.0e-10},
        )
        consider(float(res.x))

    sse, omega, C, S = best
    A = math.hypot(C, S)
    phi = _wrap_phase(math.atan2(S, C))
    r2 = min(1.0, max(0.0, 1.0 - sse / sst))
    return SinusoidFit(A=A, omega=omega, phi=phi, r2=r2, p=p)


def fit_components(E: Embedding, p_max: int) -> List[SinusoidFit]:
    """Independent sinusoid fits for embedding components p = 1..p_max."""
    if p_max < 0:
        raise ValueError(f"p_max must be non-negative, got {p_max}")
    if p_max > E.n:
        raise ValueError(f"p_max={p_max} exceeds the embedding dimension n={E.n}")
    fits = []
    for p in range(1, p_max + 1):
        try:
            fits.append(fit_sinusoid(E.coordinates[:, p - 1], p=p))
        except (DegenerateSeriesError, InsufficientDataError) as exc:
            raise type(exc)(f"component p={p}: {exc}") from exc
    return fits


def _ols(x: np.ndarray, y: np.ndarray):
    """Ordinary least squares; returns (slope, intercept, r2)."""
    xm = x.mean()
    ym = y.mean()
    sxx = float(np.dot(x - xm, x - xm))
    if sxx == 0.0:
        raise DomainError("abscissae are all equal; slope is undefined")
    sxy = float(np.dot(x - xm, y - ym))
    slope = sxy / sxx
    intercept = ym - slope * xm
    resid = y - (slope * x + intercept)
    ssr = float(np.dot(resid, resid))
    sst = float(np.dot(y - ym, y - ym))
    r2 = 1.0 if ssr == 0.0 else 1.0 - ssr / sst
    return slope, intercept, min(1.0, max(0.0, r2))


def fit_power_law(points: Iterable[Tuple[float, float]]) -> PowerLawFit:
    """Fit A ~ c * p^alpha by least squares on (ln p, ln A)."""
    pts = np.asarray(list(points), dtype=np.float64)
    if pts.ndim != 2 or pts.shape[1] != 2:
        raise ValueError("points must be (p, A) pairs")
    if pts.shape[0] < 3:
        raise InsufficientDataError(f"power-law fit needs at least 3 points, got {pts.shape[0]}")
    if np.any(pts <= 0.0):
        raise DomainError("power-law fit requires strictly positive p and A")
    slope, intercept, r2 = _ols(np.log(pts[:, 0]), np.log(pts[:, 1]))
    return PowerLawFit(exponent=slope, prefactor=math.exp(intercept), r2=r2)


def fit_linear(points: Iterable[Tuple[float, float]]) -> LinearFit:
    """Ordinary least-squares line through (p, omega) pairs."""
    pts = np.asarray(list(points), dtype=np.float64)
    if pts.ndim != 2 or pts.shape[1] != 2:
        raise ValueError("points must be (x, y) pairs")
    if pts.shape[0] < 2:
        raise InsufficientDataError(f"linear fit needs at least 2 points, got {pts.shape[0]}")
    slope, intercept, r2 = _ols(pts[:, 0], pts[:, 1])
    return LinearFit(slope=slope, intercept=intercept, r2=r2)


def write_fits_csv(fits: Sequence[SinusoidFit], dest: Union[str, IO[str]]):
    """Per-component fits as CSV `p,A,omega,phi,r2`."""
    own = isinstance(dest, str)
    fh = open(dest, "w", encoding="utf-8", newline="\n") if own else dest
    try:
        fh.write("p,A,omega,phi,r2\n")
        for f in fits:
            fh.write(f"{f.p},{f.A!r},{f.omega!r},{f.phi!r},{f.r2!r}\n")
    finally:
        if own:
            fh.close()


def write_summary_csv(power: Optional[PowerLawFit], linear: Optional[LinearFit],
                      dest: Union[str, IO[str]]):
    """Cross-component laws as CSV `law,param1,param2,r2`.

    Power-law row: exponent, prefactor. Linear row: slope, intercept.
    Laws that could not be fitted (too few components) are marked
    `insufficient`.
    """
    own = isinstance(dest, str)
    fh = open(dest, "w", encoding="utf-8", newline="\n") if own else dest
    try:
        fh.write("law,param1,param2,r2\n")
        if power is not None:
            fh.write(f"amplitude-power-law,{power.exponent!r},{power.prefactor!r},{power.r2!r}\n")
        else:
            fh.write("amplitude-power-law,insufficient,insufficient,insufficient\n")
        if linear is not None:
            fh.write(f"frequency-linear-law,{linear.slope!r},{linear.intercept!r},{linear.r2!r}\n")
        else:
            fh.write("frequency-linear-law,insufficient,insufficient,insufficient\n")
    finally:
        if own:
            fh.close()
