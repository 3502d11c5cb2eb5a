"""CSV-to-figure rendering: one panel per input file, one series per key."""

from __future__ import annotations

import csv
from dataclasses import dataclass, field
from pathlib import Path

from matplotlib.figure import Figure

EXPECTED_HEADER = [
    "scenario", "d", "k", "party", "noise_type", "param",
    "mean_bpsc", "min_bpsc", "max_bpsc", "n_runs", "seed",
]


class PlotError(ValueError):
    """Unusable sweep CSV."""


@dataclass
class SweepSeries:
    """One curve: grid params with mean and min/max envelope values."""

    label: str
    noise_type: str
    params: list[float] = field(default_factory=list)
    mean: list[float] = field(default_factory=list)
    low: list[float] = field(default_factory=list)
    high: list[float] = field(default_factory=list)


@dataclass(frozen=True)
class FigureSpec:
    """What to render: input CSVs (one panel each), series key, output path."""

    csv_paths: tuple[str, ...]
    series: str  # "dk" or "party"
    out: str
    dpi: int = 150

    def __post_init__(self) -> None:
        if not self.csv_paths:
            raise PlotError("no input CSV given")
        if self.series not in ("dk", "party"):
            raise PlotError(f"series key must be 'dk' or 'party', got {self.series!r}")


def load_series(path: str, series: str) -> list[SweepSeries]:
    """Group a sweep CSV into curves keyed by (d, k) or by party label."""
    with open(path, encoding="utf-8", newline="") as fh:
        reader = csv.reader(fh)
        try:
            header = next(reader)
        except StopIteration:
            raise PlotError(f"{path}: empty file") from None
        if header != EXPECTED_HEADER:
            raise PlotError(f"{path}: unexpected header {header!r}")
        groups: dict[str, SweepSeries] = {}
        for row in reader:
            if len(row) != len(EXPECTED_HEADER):
                raise PlotError(f"{path}: row with {len(row)} fields")
            record = dict(zip(EXPECTED_HEADER, row))
            key = (
                f"d={record['d']}, k={record['k']}" if series == "dk" else record["party"]
            )
            series_obj = groups.setdefault(key, SweepSeries(key, record["noise_type"]))
            series_obj.params.append(float(record["param"]))
            series_obj.mean.append(float(record["mean_bpsc"]))
            series_obj.low.append(float(record["min_bpsc"]))
            series_obj.high.append(float(record["max_bpsc"]))
    if not groups:
        raise PlotError(f"{path}: no data rows")
    return list(groups.values())


def render(spec: FigureSpec) -> Figure:
    """Render the figure described by spec, save it to spec.out, return it."""
    panels = [load_series(path, spec.series) for path in spec.csv_paths]
    n = len(panels)
    fig = Figure(figsize=(6.0, 3.2 * n), dpi=spec.dpi)
    axes = fig.subplots(n, 1, squeeze=False)[:, 0]
    for ax, path, series_list in zip(axes, spec.csv_paths, panels):
        for s in series_list:
            (line,) = ax.plot(s.params, s.mean, label=s.label)
            ax.fill_between(s.params, s.low, s.high, alpha=0.25, color=line.get_color())
        ax.set_title(Path(path).stem)
        ax.set_xlabel(series_list[0].noise_type)
        ax.set_ylabel("BPSC")
        ax.legend(loc="best", fontsize="small")
    fig.tight_layout()
    fig.savefig(spec.out)
    return fig
