"""MDS embeddings of windowed Riemann zeta zeros under six distance metrics.

The pipeline: parse a table of zero ordinates, window it into vectors of
m consecutive zeros, build a pairwise distance matrix under one of six
metrics, embed with classical (Torgerson) MDS, and quantify the periodic
structure of the embedding components (sinusoid fits plus the amplitude
power law and frequency linear law across components).
"""

__version__ = "0.1.0"

from . import errors
from .fits import (
    LinearFit,
    PowerLawFit,
    SinusoidFit,
    fit_components,
    fit_linear,
    fit_power_law,
    fit_sinusoid,
)
from .mds import (
    Embedding,
    GramMatrix,
    StressReport,
    diagnostics,
    double_center,
    eigendecompose_symmetric,
    embed,
    kruskal_stress,
    shepard_points,
    stress_curve,
)
from .metrics import (
    AxiomReport,
    DistanceMatrix,
    Metric,
    active_backend,
    available_backends,
    check_axioms,
    distance,
    distance_matrix,
)
from .zeros import (
    Approach,
    ObjectSet,
    ZeroList,
    load_zeros,
    parse_zeros,
    serialize,
    window_disjoint,
    window_sliding,
)
from .zeta import (
    GUARANTEED_RANGE,
    default_terms,
    eta_error_bound,
    verify_zero,
    zeta_critical,
)

__all__ = [
    "__version__",
    "errors",
    "Approach", "ObjectSet", "ZeroList", "load_zeros", "parse_zeros",
    "serialize", "window_disjoint", "window_sliding",
    "GUARANTEED_RANGE", "default_terms", "eta_error_bound", "verify_zero",
    "zeta_critical",
    "AxiomReport", "DistanceMatrix", "Metric", "active_backend",
    "available_backends", "check_axioms", "distance", "distance_matrix",
    "Embedding", "GramMatrix", "StressReport", "diagnostics", "double_center",
    "eigendecompose_symmetric", "embed", "kruskal_stress", "shepard_points",
    "stress_curve",
    "LinearFit", "PowerLawFit", "SinusoidFit", "fit_components", "fit_linear",
    "fit_power_law", "fit_sinusoid",
]
