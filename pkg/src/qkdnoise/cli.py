"""Command-line front end: seeded sweeps to CSV, dataset inspection and export.

CSV schema (one row per grid point and party):
scenario,d,k,party,noise_type,param,mean_bpsc,min_bpsc,max_bpsc,n_runs,seed
Floats are printed with 9 significant digits and lines end with a line feed,
so a rerun with identical flags produces a byte-identical file.
"""

from __future__ import annotations

import argparse
import math
import sys
from typing import Sequence

from .dataset import (
    BUILTIN_KEYS,
    DatasetError,
    ExperimentRecord,
    dump_custom,
    load_builtin,
    load_network_builtin,
)
from .noise import NoiseModelError
from .scenarios import (
    AsymmetricScenario,
    NetworkScenario,
    NoiseKind,
    ScenarioError,
    SymmetricScenario,
    run_asymmetric,
    run_network,
    run_symmetric,
)

CSV_HEADER = "scenario,d,k,party,noise_type,param,mean_bpsc,min_bpsc,max_bpsc,n_runs,seed"

DEFAULT_GRIDS = {
    NoiseKind.ISOTROPIC: "0:0.5:0.01",
    NoiseKind.DETECTOR: "0:1000000:20000",
    NoiseKind.CHANNEL: "0:1000000:20000",
}
DEFAULT_LOSS_GRID = "0:30:0.5"


def parse_grid_spec(spec: str) -> tuple[float, ...]:
    """Parse 'start:stop:step' into an inclusive grid (endpoint within half a step)."""
    parts = spec.split(":")
    if len(parts) != 3:
        raise ScenarioError(f"grid spec must be start:stop:step, got {spec!r}")
    try:
        start, stop, step = (float(p) for p in parts)
    except ValueError:
        raise ScenarioError(f"non-numeric grid spec {spec!r}") from None
    if step <= 0:
        raise ScenarioError("grid step must be positive")
    if stop < start:
        raise ScenarioError("grid stop must be >= start")
    n = int(math.floor((stop - start) / step + 0.5))
    return tuple(start + i * step for i in range(n + 1))


def parse_grid_list(spec: str) -> tuple[float, ...]:
    try:
        return tuple(float(tok) for tok in spec.split(",") if tok.strip() != "")
    except ValueError:
        raise ScenarioError(f"non-numeric grid list {spec!r}") from None


def _fmt(x: float) -> str:
    return f"{x:.9g}"


def _rows_to_csv(rows: list[tuple]) -> str:
    lines = [CSV_HEADER]
    for scenario, d, k, party, noise_type, param, mean, lo, hi, n_runs, seed in rows:
        lines.append(
            f"{scenario},{d},{k},{party},{noise_type},"
            f"{_fmt(param)},{_fmt(mean)},{_fmt(lo)},{_fmt(hi)},{n_runs},{seed}"
        )
    return "\n".join(lines) + "\n"


def _emit(text: str, out: str) -> None:
    if out == "-":
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)


def _pick_grid(args, default: str, flag: str, list_flag: str) -> tuple[float, ...]:
    spec = getattr(args, flag)
    listed = getattr(args, list_flag)
    if spec is not None and listed is not None:
        raise ScenarioError(f"--{flag.replace('_', '-')} and --{list_flag.replace('_', '-')} are mutually exclusive")
    if listed is not None:
        return parse_grid_list(listed)
    return parse_grid_spec(spec if spec is not None else default)


def cmd_symmetric(args) -> int:
    kind = NoiseKind(args.noise)
    grid = _pick_grid(args, DEFAULT_GRIDS[kind], "grid", "grid_list")
    scenario = SymmetricScenario(d=args.d, k=args.k, noise_kind=kind, grid=grid)
    summaries = run_symmetric(scenario, n_runs=args.runs, seed=args.seed)
    rows = [
        (
            "symmetric", args.d, args.k, "AB", kind.value,
            s.param, s.mean_bpsc, s.min_bpsc, s.max_bpsc, s.n_runs, args.seed,
        )
        for s in summaries
    ]
    _emit(_rows_to_csv(rows), args.out)
    return 0


def cmd_asymmetric(args) -> int:
    if args.bob_rate < 0:
        raise ScenarioError("--bob-rate must be >= 0")
    grid = _pick_grid(args, DEFAULT_LOSS_GRID, "loss_db", "loss_list")
    scenario = AsymmetricScenario(
        d=args.d, k=args.k, loss_grid=grid, bob_channel_rate=args.bob_rate
    )
    summaries = run_asymmetric(scenario, n_runs=args.runs, seed=args.seed)
    rows = [
        (
            "asymmetric", args.d, args.k, "AB", "channel_loss",
            s.param, s.mean_bpsc, s.min_bpsc, s.max_bpsc, s.n_runs, args.seed,
        )
        for s in summaries
    ]
    _emit(_rows_to_csv(rows), args.out)
    return 0


def cmd_network(args) -> int:
    if args.f_rate < 0:
        raise ScenarioError("--f-rate must be >= 0")
    grid = _pick_grid(args, DEFAULT_LOSS_GRID, "loss_db", "loss_list")
    scenario = NetworkScenario(loss_grid=grid, lab_rate=args.f_rate)
    summaries = run_network(scenario, n_runs=args.runs, seed=args.seed)
    rows = []
    for s in summaries:
        for label, d_i in zip(("Bob1", "Bob2", "Bob3"), scenario.partition):
            mean, lo, hi = s.per_party[label]
            rows.append(
                (
                    "network", d_i, d_i, label, "network_loss",
                    s.param, mean, lo, hi, s.n_runs, args.seed,
                )
            )
    _emit(_rows_to_csv(rows), args.out)
    return 0


def _show_matrix(record: ExperimentRecord, basis: str) -> str:
    m = record.comp if basis == "comp" else record.four
    width = max(len(str(int(v))) for v in m.counts.flat)
    return "\n".join(" ".join(f"{int(v):>{width}}" for v in row) for row in m.counts) + "\n"


def cmd_datasets(args) -> int:
    if args.action == "list":
        lines = [
            f"d={d} k={k}  comp {d}x{d}, fourier {d}x{d}, duration 25 s"
            for d, k in BUILTIN_KEYS
        ]
        net = load_network_builtin()
        partition = "+".join(str(p) for p in net.partition)
        lines.append(f"network  d={net.d} partition {partition}, duration 25 s")
        sys.stdout.write("\n".join(lines) + "\n")
        return 0

    # action == "show"
    if args.network:
        record = load_network_builtin()
    else:
        if args.d is None or args.k is None:
            raise DatasetError("datasets show requires --d and --k (or --network)")
        record = load_builtin(args.d, args.k)
    if args.export is not None:
        _emit(dump_custom(record), args.export)
        return 0
    sys.stdout.write(_show_matrix(record, args.basis))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qkdnoise",
        description="Seeded channel-noise sweeps over bundled coincidence data.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("--runs", type=int, default=100, help="repetitions per grid point")
        p.add_argument("--seed", type=int, default=1, help="master seed for all randomness")
        p.add_argument("--out", default="-", help="output CSV path, '-' for stdout")

    p = sub.add_parser("symmetric", help="source between the labs, S_A = S_B")
    p.add_argument("--d", type=int, required=True, help="total dimension")
    p.add_argument("--k", type=int, required=True, help="subspace size")
    p.add_argument(
        "--noise", choices=[k.value for k in NoiseKind], required=True,
        help="noise parametrization swept on the grid",
    )
    p.add_argument("--grid", help="start:stop:step (default depends on --noise)")
    p.add_argument("--grid-list", help="comma-separated explicit grid values")
    add_common(p)
    p.set_defaults(func=cmd_symmetric)

    p = sub.add_parser("asymmetric", help="source in Alice's lab, lossy channel to Bob")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--loss-db", help=f"loss grid start:stop:step (default {DEFAULT_LOSS_GRID})")
    p.add_argument("--loss-list", help="comma-separated explicit loss values in dB")
    p.add_argument(
        "--bob-rate", type=float, default=0.0,
        help="Bob-side channel singles rate T_B = d*S_B (per second)",
    )
    add_common(p)
    p.set_defaults(func=cmd_asymmetric)

    p = sub.add_parser("network", help="star network with Bob labs of 2+2+4 detectors")
    p.add_argument("--loss-db", help=f"loss grid start:stop:step (default {DEFAULT_LOSS_GRID})")
    p.add_argument("--loss-list", help="comma-separated explicit loss values in dB")
    p.add_argument(
        "--f-rate", type=float, default=0.0,
        help="channel singles per second entering each Bob lab",
    )
    add_common(p)
    p.set_defaults(func=cmd_network)

    p = sub.add_parser("datasets", help="inspect or export the bundled datasets")
    p.add_argument("action", choices=["list", "show"])
    p.add_argument("--d", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--network", action="store_true", help="select the star-network record")
    p.add_argument("--basis", choices=["comp", "fourier"], default="comp")
    p.add_argument("--export", help="write the record as a custom dataset document")
    p.set_defaults(func=cmd_datasets)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (DatasetError, NoiseModelError, ScenarioError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
