"""Secret-key rate per subspace coincidence from a coincidence-matrix pair.

The d-dimensional outcome space is partitioned into d/k diagonal blocks of
size k.  Each block is sifted and evaluated on its own: the computational
and Fourier blocks are normalized into joint outcome distributions, and the
block's asymptotic rate is log2(k) minus the two conditional entropies
H(A|B).  Blocks are then averaged with weights proportional to their share
of sifted computational-basis coincidences.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .dataset import CoincidenceMatrix

_PROB_SUM_TOL = 1e-12


class KeyRateError(ValueError):
    """Input unusable for a key-rate evaluation."""


@dataclass(frozen=True, eq=False)
class JointDistribution:
    """Normalized k x k joint outcome distribution for one subspace block."""

    probs: np.ndarray

    def __post_init__(self) -> None:
        arr = np.array(self.probs, dtype=float)
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
            raise KeyRateError("probs must be a square grid")
        if (arr < 0).any():
            raise KeyRateError("probabilities must be >= 0")
        if abs(arr.sum() - 1.0) > _PROB_SUM_TOL:
            raise KeyRateError(f"probabilities sum to {arr.sum()!r}, not 1")
        arr.flags.writeable = False
        object.__setattr__(self, "probs", arr)


@dataclass(frozen=True)
class KeyRateResult:
    """Weighted key rate in bits per subspace coincidence (BPSC).

    subspace_rates are clipped at zero, raw_rates are not; weights are the
    computational-basis block sums normalized to 1.
    """

    bpsc: float
    subspace_rates: tuple[float, ...]
    weights: tuple[float, ...]
    raw_rates: tuple[float, ...]


def extract_block(m: CoincidenceMatrix, k: int, j: int) -> np.ndarray:
    """The j-th k x k diagonal block (rows and columns j*k .. j*k + k - 1)."""
    if k < 1 or m.dim % k != 0:
        raise KeyRateError(f"k={k} does not divide d={m.dim}")
    if not 0 <= j < m.dim // k:
        raise KeyRateError(f"subspace index {j} out of range for d={m.dim}, k={k}")
    return m.counts[j * k : (j + 1) * k, j * k : (j + 1) * k]


def normalize_block(counts: np.ndarray) -> JointDistribution:
    total = counts.sum()
    if total <= 0:
        raise KeyRateError("cannot normalize an empty block")
    return JointDistribution(counts / total)


def conditional_entropy(p: JointDistribution) -> float:
    """H(A|B) = H(AB) - H(B) in bits, B being the column marginal; 0 log 0 = 0."""
    probs = p.probs
    nz = probs[probs > 0]
    h_joint = -float(np.sum(nz * np.log(nz)))
    col = probs.sum(axis=0)
    col = col[col > 0]
    h_col = -float(np.sum(col * np.log(col)))
    return (h_joint - h_col) / math.log(2.0)


def bpsc(comp: CoincidenceMatrix, four: CoincidenceMatrix, d: int, k: int) -> KeyRateResult:
    """Evaluate the key rate per subspace coincidence for a matrix pair.

    Per subspace j the raw rate is
    log2(k) - H(A|B)[comp block j] - H(A|B)[Fourier block j],
    clipped at zero before weighting.  A subspace whose computational block
    is empty carries weight zero; an empty Fourier block contributes the
    maximal entropy log2(k), which drives that subspace's rate to zero.

    Raises KeyRateError when no computational block has any counts at all.
    """
    if comp.dim != d or four.dim != d:
        raise KeyRateError(f"matrix dimensions do not match d={d}")
    if k < 2 or d % k != 0:
        raise KeyRateError(f"k={k} must be >= 2 and divide d={d}")

    n_blocks = d // k
    log2k = math.log2(k)
    block_sums = []
    raw_rates = []
    for j in range(n_blocks):
        cb = extract_block(comp, k, j)
        fb = extract_block(four, k, j)
        n_comp = int(cb.sum())
        block_sums.append(n_comp)
        if n_comp == 0:
            raw_rates.append(0.0)
            continue
        h_comp = conditional_entropy(normalize_block(cb))
        h_four = log2k if fb.sum() == 0 else conditional_entropy(normalize_block(fb))
        raw_rates.append(log2k - h_comp - h_four)

    total = sum(block_sums)
    if total == 0:
        raise KeyRateError("no sifted coincidences in any subspace block")

    weights = tuple(s / total for s in block_sums)
    clipped = tuple(max(0.0, r) for r in raw_rates)
    rate = float(sum(w * r for w, r in zip(weights, clipped)))
    return KeyRateResult(
        bpsc=rate,
        subspace_rates=clipped,
        weights=weights,
        raw_rates=tuple(raw_rates),
    )
