"""Render yield-versus-performance scatter figures from a sweep CSV.

One figure per benchmark. X is the normalized reciprocal of the
post-mapping gate count (right is better), Y the simulated yield rate
(top is better), log-scaled by default since yields span orders of
magnitude. Fixed baseline design points are annotated (1)-(4) by their
variant index. The CSV is never modified.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass, field
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

REQUIRED_COLUMNS = ("benchmark", "config", "k", "seed", "yield", "post_gates", "perf_norm")

# marker, color, size per known configuration; unknown configs get
# fallback styles in deterministic order
_STYLE = {
    "ibm": ("*", "black", 110),
    "eff-full": ("o", "tab:blue", 45),
    "eff-5-freq": ("^", "tab:green", 45),
    "eff-rd-bus": (".", "tab:gray", 30),
    "eff-layout-only": ("s", "tab:red", 45),
}
_FALLBACK_MARKERS = ("v", "D", "P", "X", "h", "<", ">")


class SchemaMismatchError(Exception):
    """The CSV is missing a required column."""


class EmptyInputError(Exception):
    """The CSV has no data rows."""


@dataclass(frozen=True)
class PlotSpec:
    csv_path: str | Path
    out_dir: str | Path
    y_scale: str = "log"  # "log" | "linear"
    formats: tuple[str, ...] = ("png",)
    marker_map: dict = field(default_factory=dict)  # config -> (marker, color, size)


@dataclass(frozen=True)
class SweepPoint:
    benchmark: str
    config: str
    seed: int
    yield_rate: float
    perf_norm: float


def read_rows(csv_path: str | Path) -> list[SweepPoint]:
    with open(csv_path, newline="", encoding="utf-8") as f:
        reader = csv.DictReader(f)
        header = reader.fieldnames or []
        missing = [c for c in REQUIRED_COLUMNS if c not in header]
        if missing:
            raise SchemaMismatchError(f"missing columns: {', '.join(missing)}")
        rows = [
            SweepPoint(
                benchmark=r["benchmark"],
                config=r["config"],
                seed=int(r["seed"]),
                yield_rate=float(r["yield"]),
                perf_norm=float(r["perf_norm"]),
            )
            for r in reader
        ]
    if not rows:
        raise EmptyInputError(f"no data rows in {csv_path}")
    return rows


def style_for(config: str, spec: PlotSpec, extra_index: int):
    if config in spec.marker_map:
        return spec.marker_map[config]
    if config in _STYLE:
        return _STYLE[config]
    return (_FALLBACK_MARKERS[extra_index % len(_FALLBACK_MARKERS)], "tab:purple", 40)


def render(spec: PlotSpec) -> dict[str, list[Path]]:
    """Write one figure per benchmark; returns benchmark -> written paths."""
    rows = read_rows(spec.csv_path)
    out_dir = Path(spec.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)

    benchmarks: dict[str, list[SweepPoint]] = {}
    for row in rows:
        benchmarks.setdefault(row.benchmark, []).append(row)

    written: dict[str, list[Path]] = {}
    for benchmark in sorted(benchmarks):
        points = benchmarks[benchmark]
        fig, ax = plt.subplots(figsize=(5.2, 4.0))

        floor = _display_floor(points)
        extra = 0
        for config in sorted({p.config for p in points}):
            sub = [p for p in points if p.config == config]
            marker, color, size = style_for(config, spec, extra)
            if config not in _STYLE and config not in spec.marker_map:
                extra += 1
            xs = [p.perf_norm for p in sub]
            ys = [max(p.yield_rate, floor) if spec.y_scale == "log" else p.yield_rate
                  for p in sub]
            ax.scatter(xs, ys, marker=marker, c=color, s=size, label=config,
                       zorder=3 if config == "ibm" else 2)
            if config == "ibm":
                for p, x, y in zip(sub, xs, ys):
                    ax.annotate(f"({p.seed})", (x, y), textcoords="offset points",
                                xytext=(4, 4), fontsize=8)

        if spec.y_scale == "log":
            ax.set_yscale("log")
        ax.set_xlabel("normalized reciprocal of post-mapping gate count")
        ax.set_ylabel("yield rate")
        ax.set_title(benchmark)
        ax.grid(True, which="both", alpha=0.25)
        ax.legend(fontsize=8, loc="best")
        fig.tight_layout()

        paths = []
        for fmt in spec.formats:
            path = out_dir / f"{benchmark}.{fmt}"
            fig.savefig(path, dpi=150)
            paths.append(path)
        plt.close(fig)
        written[benchmark] = paths
    return written


def _display_floor(points) -> float:
    """Display floor for zero yields on a log axis (data left untouched)."""
    positive = [p.yield_rate for p in points if p.yield_rate > 0]
    if not positive:
        return 1e-6
    return min(positive) / 2.0
