"""Tour of the bundled coincidence datasets and their noiseless key rates.

Each dataset is a pair of d x d coincidence matrices (computational basis
and subspace Fourier basis) from one 25 s run of a path-entangled photon
source.  Run: python demos/01_datasets.py
"""

from qkdnoise import (
    BUILTIN_KEYS,
    bpsc,
    load_builtin,
    load_network_builtin,
    total_counts,
)

print("built-in records")
print("-" * 64)
for d, k in BUILTIN_KEYS:
    record = load_builtin(d, k)
    result = bpsc(record.comp, record.four, d, k)
    print(
        f"d={d} k={k}:  comp counts {total_counts(record.comp):6d}  "
        f"four counts {total_counts(record.four):6d}  "
        f"noiseless BPSC {result.bpsc:.4f}  (max log2(k) = {k.bit_length() - 1}.0)"
    )

print()
print("the d=8 computational matrix is shared by the k=2 and k=4 records:")
r82, r84 = load_builtin(8, 2), load_builtin(8, 4)
print("  identical:", (r82.comp.counts == r84.comp.counts).all())

net = load_network_builtin()
print()
print(f"star-network record: d={net.d}, detector partition {net.partition}")
print("computational matrix (block diagonal, off-block entries all zero):")
for row in net.comp.counts:
    print("  " + " ".join(f"{v:5d}" for v in row))

print()
print("per-subspace detail for d=8, k=2 (weights follow the sifted counts):")
result = bpsc(r82.comp, r82.four, 8, 2)
for j, (w, rate) in enumerate(zip(result.weights, result.subspace_rates)):
    print(f"  subspace {j}: weight {w:.4f}  rate {rate:.4f} bits")
print(f"  weighted BPSC: {result.bpsc:.6f}")
