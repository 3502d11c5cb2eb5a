"""Producing figure-ready CSVs with the command-line interface.

The qkdnoise CLI writes one CSV row per grid point and party with the mean
and min/max BPSC envelope.  Output is byte-deterministic for fixed flags,
so sweep files are safe to diff and cache.  The companion qkdnoise-plots
package turns them into mean-plus-envelope panels.
Run: python demos/06_sweep_csv_and_figures.py  (about 20 s)
"""

import pathlib
import tempfile

from qkdnoise.cli import main

workdir = pathlib.Path(tempfile.mkdtemp(prefix="qkdnoise_demo_"))
print(f"writing sweep CSVs under {workdir}\n")

csv_paths = []
for bob_rate in ("0", "160000", "320000"):
    out = workdir / f"asym_d4k4_tb{bob_rate}.csv"
    argv = [
        "asymmetric", "--d", "4", "--k", "4",
        "--loss-db", "0:20:1", "--bob-rate", bob_rate,
        "--runs", "100", "--seed", "1", "--out", str(out),
    ]
    assert main(argv) == 0
    csv_paths.append(out)
    head = out.read_text().splitlines()
    print(f"{out.name}: {len(head) - 1} rows")
    print("  " + head[0])
    print("  " + head[1])

print("\nsame flags, same bytes:")
again = workdir / "again.csv"
main([
    "asymmetric", "--d", "4", "--k", "4", "--loss-db", "0:20:1",
    "--bob-rate", "0", "--runs", "100", "--seed", "1", "--out", str(again),
])
print("  identical:", again.read_bytes() == csv_paths[0].read_bytes())

print("\nto render the three panels (requires the qkdnoise-plots package):")
print(
    "  plot "
    + " ".join(f"--csv {p}" for p in csv_paths)
    + f" --series dk --out {workdir}/asymmetric_panels.png"
)
