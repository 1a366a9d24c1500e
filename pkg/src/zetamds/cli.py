"""Command-line pipeline: validate, embed, analyze, sweep.

Composes the library end to end and emits reproducible artifacts
(UTF-8/LF CSVs with full-precision decimals, deterministic SVGs, and a
manifest recording the full configuration, the input file digest and the
library version). Exit codes: 0 success, 2 input/parse, 3 verification,
4 embedding stage, 5 analysis stage.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
from dataclasses import asdict, dataclass
from typing import List, Optional

import numpy as np

from . import __version__, fits as fits_mod, mds, svg
from .errors import ZetaMdsError
from .metrics import Metric, active_backend, distance_matrix
from .zeros import Approach, ZeroList, load_zeros, window_disjoint, window_sliding
from .zeta import GUARANTEED_RANGE, zeta_critical

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_VERIFY = 3
EXIT_EMBED = 4
EXIT_ANALYZE = 5

_DEFAULTS = dict(metric="lorentzian", m=10, approach="a1", dims=3,
                 limit=1000, components=10, azimuth=30.0, elevation=20.0, seed=0)


@dataclass(frozen=True)
class RunConfig:
    """Full configuration of one pipeline run (recorded in the manifest)."""

    zeros_path: str
    metric: str
    m: int
    approach: str
    dims: int
    limit: Optional[int]
    components: int
    out_dir: str
    jaccard_literal: bool
    seed: int
    azimuth: float
    elevation: float


def _resolve_out(value: Optional[str]) -> str:
    return value or os.environ.get("ZETA_MDS_OUT") or "zetamds-out"


def _config_from_args(args, command: str) -> RunConfig:
    dims = args.dims
    components = getattr(args, "components", _DEFAULTS["components"])
    if dims is None:
        dims = _DEFAULTS["dims"]
        if command == "analyze":
            # Fig.1 uses a 3-dim locus but Fig.2/3 need 10 components; when
            # --dims is not given, analyze embeds with enough dimensions.
            dims = max(dims, components)
    limit = args.limit if args.limit and args.limit > 0 else None
    return RunConfig(
        zeros_path=args.zeros,
        metric=args.metric,
        m=args.m,
        approach=args.approach,
        dims=dims,
        limit=limit,
        components=components,
        out_dir=_resolve_out(args.out),
        jaccard_literal=bool(args.jaccard_literal),
        seed=args.seed,
        azimuth=args.azimuth,
        elevation=args.elevation,
    )


def _sha256(path: str) -> str:
    h = hashlib.sha256()
    with open(path, "rb") as fh:
        for chunk in iter(lambda: fh.read(1 << 20), b""):
            h.update(chunk)
    return h.hexdigest()


def _write_manifest(cfg: RunConfig, out_dir: str, extra: Optional[dict] = None):
    manifest = {
        "config": asdict(cfg),
        "input_sha256": _sha256(cfg.zeros_path),
        "version": __version__,
        "kernel_backend": active_backend(),
    }
    if extra:
        manifest.update(extra)
    path = os.path.join(out_dir, "manifest.json")
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        json.dump(manifest, fh, indent=2, sort_keys=True)
        fh.write("\n")


def _windows(zeros: ZeroList, cfg: RunConfig):
    window = window_disjoint if Approach(cfg.approach) is Approach.A1 else window_sliding
    return window(zeros, cfg.m, cfg.limit)


def _embed_pipeline(cfg: RunConfig):
    """Distance matrix, embedding and diagnostics for one configuration."""
    objects = _windows(load_zeros(cfg.zeros_path), cfg)
    D = distance_matrix(objects, Metric.from_name(cfg.metric),
                        jaccard_literal=cfg.jaccard_literal)
    E = mds.embed(D, cfg.dims)
    report = mds.diagnostics(D, E)
    return objects, D, E, report


def _write_embed_outputs(cfg: RunConfig, out_dir: str, E, report):
    os.makedirs(out_dir, exist_ok=True)
    mds.write_embedding_csv(E, os.path.join(out_dir, "embedding.csv"))
    mds.write_eigenvalues_csv(E, os.path.join(out_dir, "eigenvalues.csv"))
    with open(os.path.join(out_dir, "stress.csv"), "w", encoding="utf-8", newline="\n") as fh:
        fh.write("n,stress\n")
        for n, s in report.stress_curve:
            fh.write(f"{n},{s!r}\n")
    with open(os.path.join(out_dir, "shepard.csv"), "w", encoding="utf-8", newline="\n") as fh:
        fh.write("d,dhat\n")
        for d, dhat in report.shepard_pairs:
            fh.write(f"{float(d)!r},{float(dhat)!r}\n")
    title = f"{cfg.metric} locus (m={cfg.m}, {cfg.approach}, N={E.n_objects})"
    with open(os.path.join(out_dir, "locus.svg"), "w", encoding="utf-8", newline="\n") as fh:
        fh.write(svg.locus_svg(E.coordinates[:, : min(3, E.n)], title,
                               azimuth=cfg.azimuth, elevation=cfg.elevation))
    _write_manifest(cfg, out_dir, extra={
        "n_objects": E.n_objects,
        "stress_1": report.stress_1,
        "positive_eigenvalues": E.n_positive_eigenvalues,
        "negative_eigenvalues": E.n_negative_eigenvalues,
    })


def cmd_validate(args) -> int:
    try:
        zeros = load_zeros(args.zeros)
    except (OSError, ZetaMdsError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT

    failures = 0
    checked = 0
    for k, t in enumerate(zeros.values[: args.check_count], start=1):
        t = float(t)
        if abs(t) > GUARANTEED_RANGE:
            print(f"ordinate {k}: t={t!r} outside oracle range, skipped")
            continue
        value = zeta_critical(t)
        ok = abs(value) < args.tol
        checked += 1
        failures += not ok
        status = "pass" if ok else "FAIL"
        print(f"ordinate {k}: t={t!r} |zeta(1/2+it)|={abs(value):.3e} {status}")
    print(f"checked {checked} ordinates, {failures} failures")
    return EXIT_VERIFY if failures else EXIT_OK


def cmd_embed(args) -> int:
    cfg = _config_from_args(args, "embed")
    try:
        _, _, E, report = _embed_pipeline(cfg)
    except (OSError, ZetaMdsError) as exc:
        return _report_pipeline_error(exc)
    _write_embed_outputs(cfg, cfg.out_dir, E, report)
    print(f"embedded N={E.n_objects} objects into {cfg.dims} dimensions "
          f"({cfg.metric}, m={cfg.m}, {cfg.approach})")
    print(f"stress-1: {report.stress_1:.6f}; eigenvalues: "
          f"{E.n_positive_eigenvalues} positive, {E.n_negative_eigenvalues} negative")
    print(f"wrote {cfg.out_dir}/: manifest.json embedding.csv eigenvalues.csv "
          f"stress.csv shepard.csv locus.svg")
    return EXIT_OK


def _report_pipeline_error(exc) -> int:
    from .errors import (DegenerateInputError, DimensionUnavailableError,
                         EmptyInputError, InvalidWindowError, MemoryLimitError,
                         MonotonicityError, ParseError)

    if isinstance(exc, (OSError, ParseError, MonotonicityError, EmptyInputError,
                        InvalidWindowError)):
        print(f"input stage: {exc}", file=sys.stderr)
        return EXIT_INPUT
    stage = "embedding"
    if isinstance(exc, (DegenerateInputError, MemoryLimitError)):
        stage = "distance-matrix"
    elif isinstance(exc, DimensionUnavailableError):
        stage = "eigendecomposition"
    print(f"{stage} stage: {exc}", file=sys.stderr)
    return EXIT_EMBED


def _load_embedding(out_dir: str, cfg: RunConfig) -> Optional[mds.Embedding]:
    """Reload a previously written embedding, if this out-dir has one."""
    coords_path = os.path.join(out_dir, "embedding.csv")
    evals_path = os.path.join(out_dir, "eigenvalues.csv")
    if not (os.path.exists(coords_path) and os.path.exists(evals_path)):
        return None
    data = np.atleast_2d(np.loadtxt(coords_path, delimiter=",", skiprows=1))
    evals = np.atleast_2d(np.loadtxt(evals_path, delimiter=",", skiprows=1))
    coords = data[:, 1:]
    variant = "jaccard-literal" if (cfg.jaccard_literal and cfg.metric == "jaccard") else "standard"
    return mds.Embedding(coordinates=coords, eigenvalues=evals[:, 1],
                         n=coords.shape[1], source_metric=Metric.from_name(cfg.metric),
                         source_variant=variant)


def cmd_analyze(args) -> int:
    cfg = _config_from_args(args, "analyze")
    E = _load_embedding(cfg.out_dir, cfg)
    if E is None:
        try:
            _, _, E, report = _embed_pipeline(cfg)
        except (OSError, ZetaMdsError) as exc:
            return _report_pipeline_error(exc)
        _write_embed_outputs(cfg, cfg.out_dir, E, report)
    if cfg.components > E.n:
        print(f"analysis stage: {cfg.components} components requested but the "
              f"embedding has only n={E.n}", file=sys.stderr)
        return EXIT_ANALYZE

    try:
        component_fits = fits_mod.fit_components(E, cfg.components)
    except ZetaMdsError as exc:
        print(f"analysis stage: {exc}", file=sys.stderr)
        return EXIT_ANALYZE

    power = linear = None
    if len(component_fits) >= 3:
        power = fits_mod.fit_power_law([(f.p, f.A) for f in component_fits])
    if len(component_fits) >= 2:
        linear = fits_mod.fit_linear([(f.p, f.omega) for f in component_fits])

    out = cfg.out_dir
    fits_mod.write_fits_csv(component_fits, os.path.join(out, "fits.csv"))
    fits_mod.write_summary_csv(power, linear, os.path.join(out, "summary.csv"))
    with open(os.path.join(out, "components.svg"), "w", encoding="utf-8", newline="\n") as fh:
        fh.write(svg.components_svg(E.coordinates, component_fits, cfg.components))
    with open(os.path.join(out, "parameters.svg"), "w", encoding="utf-8", newline="\n") as fh:
        fh.write(svg.parameters_svg(component_fits, power, linear))
    _write_manifest(cfg, out, extra={"n_objects": E.n_objects})

    for f in component_fits:
        tag = "periodic" if f.is_periodic() else "aperiodic"
        print(f"p={f.p:2d}  A={f.A:.6g}  omega={f.omega:.6g}  phi={f.phi:+.4f}  "
              f"r2={f.r2:.4f}  [{tag}]")
    if power is not None:
        print(f"amplitude law: A ~ p^{power.exponent:.4f} (r2={power.r2:.4f})")
    else:
        print("amplitude law: insufficient components (need >= 3)")
    if linear is not None:
        print(f"frequency law: omega ~ {linear.slope:.6g}*p {linear.intercept:+.6g} "
              f"(r2={linear.r2:.4f})")
    else:
        print("frequency law: insufficient components (need >= 2)")
    print(f"wrote {out}/: fits.csv summary.csv components.svg parameters.svg")
    return EXIT_OK


def cmd_sweep(args) -> int:
    cfg = _config_from_args(args, "sweep")
    metric_names = args.metrics or [m.value for m in Metric]
    results = {}
    loci = []
    os.makedirs(cfg.out_dir, exist_ok=True)
    for name in metric_names:
        sub_cfg = RunConfig(**{**asdict(cfg), "metric": name,
                               "out_dir": os.path.join(cfg.out_dir, name)})
        try:
            _, _, E, report = _embed_pipeline(sub_cfg)
        except (OSError, ZetaMdsError) as exc:
            results[name] = f"error: {exc}"
            print(f"{name}: FAILED ({exc})", file=sys.stderr)
            continue
        _write_embed_outputs(sub_cfg, sub_cfg.out_dir, E, report)
        results[name] = "ok"
        loci.append((name, E.coordinates[:, : min(3, E.n)]))
        print(f"{name}: stress-1 {report.stress_1:.4f}, "
              f"{E.n_negative_eigenvalues} negative eigenvalues")
    if loci:
        with open(os.path.join(cfg.out_dir, "panel.svg"), "w", encoding="utf-8",
                  newline="\n") as fh:
            fh.write(svg.panel_svg(loci, azimuth=cfg.azimuth, elevation=cfg.elevation))
    _write_manifest(cfg, cfg.out_dir, extra={"results": results})
    return EXIT_OK if loci else EXIT_EMBED


def _add_pipeline_args(sub, components_default=True):
    sub.add_argument("--zeros", required=True, metavar="PATH",
                     help="zero-list text file (one ordinate per line)")
    sub.add_argument("--metric", default=_DEFAULTS["metric"],
                     choices=[m.value for m in Metric])
    sub.add_argument("--m", type=int, default=_DEFAULTS["m"],
                     help="window length (default %(default)s)")
    sub.add_argument("--approach", default=_DEFAULTS["approach"], choices=["a1", "a2"],
                     help="a1: disjoint windows, a2: sliding windows")
    sub.add_argument("--dims", type=int, default=None,
                     help="embedding dimension (default 3; analyze raises it to --components)")
    sub.add_argument("--limit", type=int, default=_DEFAULTS["limit"],
                     help="cap on object count N, 0 disables (default %(default)s)")
    if components_default:
        sub.add_argument("--components", type=int, default=_DEFAULTS["components"],
                         help="components to fit (default %(default)s)")
    sub.add_argument("--out", default=None, metavar="DIR",
                     help="output directory (fallback: $ZETA_MDS_OUT, then ./zetamds-out)")
    sub.add_argument("--jaccard-literal", action="store_true",
                     help="use the Jaccard formula exactly as printed (similarity, not distance)")
    sub.add_argument("--seed", type=int, default=_DEFAULTS["seed"])
    sub.add_argument("--azimuth", type=float, default=_DEFAULTS["azimuth"],
                     help="locus projection azimuth in degrees (default %(default)s)")
    sub.add_argument("--elevation", type=float, default=_DEFAULTS["elevation"],
                     help="locus projection elevation in degrees (default %(default)s)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="zetamds",
        description="MDS embeddings of windowed zeta zeros and their periodicity analysis",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_val = sub.add_parser("validate", help="verify ingested ordinates against the zeta oracle")
    p_val.add_argument("--zeros", required=True, metavar="PATH")
    p_val.add_argument("--check-count", type=int, default=25,
                       help="how many leading ordinates to verify (default %(default)s)")
    p_val.add_argument("--tol", type=float, default=1.0e-5,
                       help="|zeta| threshold for a pass (default %(default)s)")
    p_val.set_defaults(func=cmd_validate)

    p_embed = sub.add_parser("embed", help="distance matrix + classical MDS + diagnostics")
    _add_pipeline_args(p_embed)
    p_embed.set_defaults(func=cmd_embed)

    p_an = sub.add_parser("analyze", help="sinusoid fits and cross-component laws")
    _add_pipeline_args(p_an)
    p_an.set_defaults(func=cmd_analyze)

    p_sw = sub.add_parser("sweep", help="run embed for several metrics and build a panel figure")
    _add_pipeline_args(p_sw)
    p_sw.add_argument("--metrics", nargs="+", choices=[m.value for m in Metric],
                      default=None, help="metrics to sweep (default: all six)")
    p_sw.set_defaults(func=cmd_sweep)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    cfg_checks = []
    if hasattr(args, "m") and args.m < 1:
        cfg_checks.append("--m must be at least 1")
    if getattr(args, "dims", None) is not None and args.dims < 1:
        cfg_checks.append("--dims must be at least 1")
    if (getattr(args, "dims", None) is not None and hasattr(args, "components")
            and args.command == "analyze" and args.components > args.dims):
        cfg_checks.append("--components must not exceed --dims")
    if cfg_checks:
        parser.error("; ".join(cfg_checks))  # exits 2
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
