"""Accidental-coincidence rates, noise parameter conversions, seeded samplers.

Single-click events arriving at rate S per detector occasionally pair up
across the two labs within the coincidence window tau and show up as extra,
uniformly distributed coincidences.  This module turns the scenario noise
parameters into per-run count budgets and draws the random noise matrices
and loss thinning that the scenario sweeps add to the measured data.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .dataset import CoincidenceMatrix, ExperimentRecord, total_counts


class NoiseModelError(ValueError):
    """Noise parameter outside the modeled regime."""


@dataclass(frozen=True)
class ProtocolConstants:
    """Timing constants shared by every scenario.

    tau: coincidence window in seconds.
    run_duration: acquisition time of one run in seconds.
    """

    tau: float = 5e-9
    run_duration: float = 25.0

    def __post_init__(self) -> None:
        if not (self.tau > 0 and self.run_duration > 0):
            raise NoiseModelError("tau and run_duration must be positive")


DEFAULT_CONSTANTS = ProtocolConstants()


# --- noise specifications (one tagged variant per physical mechanism) ------


@dataclass(frozen=True)
class IsotropicNoise:
    """Mixedness parameter p in [0, 1): accidental fraction of all coincidences."""

    p: float

    def __post_init__(self) -> None:
        if not 0 <= self.p < 1:
            raise NoiseModelError("isotropic p must lie in [0, 1)")


@dataclass(frozen=True)
class DetectorNoise:
    """Extra singles per detector per second, same rate in both labs."""

    singles_rate: float

    def __post_init__(self) -> None:
        if self.singles_rate < 0:
            raise NoiseModelError("singles rate must be >= 0")


@dataclass(frozen=True)
class ChannelNoise:
    """Total extra singles per lab per second (split over the d detectors)."""

    total_rate: float

    def __post_init__(self) -> None:
        if self.total_rate < 0:
            raise NoiseModelError("total singles rate must be >= 0")


@dataclass(frozen=True)
class ChannelLoss:
    """Asymmetric scenario: loss in dB on Bob's channel plus Bob-side channel rate."""

    loss_db: float
    bob_channel_rate: float = 0.0

    def __post_init__(self) -> None:
        if self.loss_db < 0:
            raise NoiseModelError("loss must be >= 0 dB")
        if self.bob_channel_rate < 0:
            raise NoiseModelError("channel rate must be >= 0")


@dataclass(frozen=True)
class NetworkNoise:
    """Star network: shared loss in dB plus singles per second entering each lab."""

    loss_db: float
    lab_rate: float = 0.0

    def __post_init__(self) -> None:
        if self.loss_db < 0:
            raise NoiseModelError("loss must be >= 0 dB")
        if self.lab_rate < 0:
            raise NoiseModelError("lab rate must be >= 0")


NoiseSpec = IsotropicNoise | DetectorNoise | ChannelNoise | ChannelLoss | NetworkNoise


# --- deterministic random streams ------------------------------------------


@dataclass(frozen=True)
class RandomStream:
    """Value-like RNG handle: (seed, path) fully determines the draw sequence.

    Paths are tuples of small nonnegative integers identifying where in a
    sweep a draw happens (scenario, grid index, repetition, draw site), so
    repetitions can be scheduled in any order, or in parallel, without
    changing any sampled value.
    """

    seed: int
    path: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if not 0 <= self.seed < 2**64:
            raise NoiseModelError("seed must be a 64-bit nonnegative integer")
        if any(p < 0 for p in self.path):
            raise NoiseModelError("path entries must be nonnegative")

    def child(self, *parts: int) -> "RandomStream":
        return RandomStream(self.seed, self.path + tuple(int(p) for p in parts))

    def generator(self) -> np.random.Generator:
        return np.random.default_rng(np.random.SeedSequence([self.seed, *self.path]))


def round_count(x: float) -> int:
    """Round a fractional expected count to an integer, halves away from zero."""
    return int(math.floor(x + 0.5)) if x >= 0 else -int(math.floor(-x + 0.5))


# --- accidental coincidence rates -------------------------------------------


def accidental_rate_exact(
    s_a: float, s_b: float, d: int, constants: ProtocolConstants = DEFAULT_CONSTANTS
) -> float:
    """Accidental coincidence rate for d detectors per side, in pairs per second.

    s_a and s_b are per-detector singles rates; each lab accumulates d*S
    singles per second, and an accidental fires whenever a single on one
    side meets at least one single on the other side within tau.
    """
    if s_a < 0 or s_b < 0:
        raise NoiseModelError("singles rates must be >= 0")
    if d < 1:
        raise NoiseModelError("d must be >= 1")
    tau = constants.tau
    return d * s_a * -math.expm1(-tau * d * s_b) + d * s_b * -math.expm1(-tau * d * s_a)


def accidental_rate_approx(
    s_a: float, s_b: float, d: int, constants: ProtocolConstants = DEFAULT_CONSTANTS
) -> float:
    """First-order approximation 2 * tau * d^2 * s_a * s_b (valid for tau*d*S << 1)."""
    if s_a < 0 or s_b < 0:
        raise NoiseModelError("singles rates must be >= 0")
    if d < 1:
        raise NoiseModelError("d must be >= 1")
    # s_a * s_b first, so swapping the labs is bitwise neutral
    return 2.0 * constants.tau * (d * d) * (s_a * s_b)


# --- parameter-to-count conversions -----------------------------------------


def isotropic_noise_counts(p: float, n_true: int) -> int:
    """Accidental counts to add so a fraction p of all coincidences is noise.

    Solving n_noise / (n_true + n_noise) = p gives n_noise = n_true * p/(1-p).
    """
    if p >= 1:
        raise NoiseModelError("fully mixed state unsupported (p must be < 1)")
    if not 0 <= p:
        raise NoiseModelError("p must lie in [0, 1)")
    if n_true < 0:
        raise NoiseModelError("n_true must be >= 0")
    return round_count(n_true * p / (1.0 - p))


def transmittance_from_db(loss_db: float) -> float:
    """Channel survival probability eta = 10**(-dB/10)."""
    if loss_db < 0:
        raise NoiseModelError("loss must be >= 0 dB")
    return 10.0 ** (-loss_db / 10.0)


def alice_singles_from_loss(
    record: ExperimentRecord,
    eta: float,
    constants: ProtocolConstants = DEFAULT_CONSTANTS,
) -> float:
    """Per-detector singles rate at Alice caused by channel loss on Bob's arm.

    Every pair whose Bob photon is lost leaves a lone click at Alice, so the
    lab-total singles rate is (1 - eta) times the detected pair rate of the
    lossless run; the source is path symmetric, so the total splits evenly
    over Alice's d detectors.
    """
    if eta == 0:
        raise NoiseModelError("channel fully opaque (eta = 0): no coincidences remain")
    if not 0 < eta <= 1:
        raise NoiseModelError("eta must lie in (0, 1]")
    pair_rate = total_counts(record.comp) / constants.run_duration
    return (1.0 - eta) * pair_rate / record.d


def network_block_counts(
    ds_a: float,
    d_i: int,
    lab_rate: float,
    constants: ProtocolConstants = DEFAULT_CONSTANTS,
    total_dim: int = 8,
) -> int:
    """Accidental counts per run between Alice and one network lab with d_i detectors.

    Only the fraction d_i / total_dim of Alice's loss singles can pair with
    lab i, and the lab receives lab_rate channel singles per second, giving
    2 * run * tau * (ds_a * d_i / total_dim) * lab_rate counts per run.
    """
    if ds_a < 0 or lab_rate < 0:
        raise NoiseModelError("rates must be >= 0")
    if not 1 <= d_i <= total_dim:
        raise NoiseModelError(f"d_i must lie in 1..{total_dim}")
    rate = 2.0 * constants.tau * (ds_a * d_i / total_dim) * lab_rate
    return round_count(constants.run_duration * rate)


# --- samplers ---------------------------------------------------------------


def sample_noise_matrix(total: int, rows: int, cols: int, stream: RandomStream) -> np.ndarray:
    """Multinomially place `total` counts into a rows x cols grid, all cells equal.

    The output always sums to exactly `total`.
    """
    if total < 0:
        raise NoiseModelError("total must be >= 0")
    if rows < 1 or cols < 1:
        raise NoiseModelError("grid must have at least one cell")
    cells = rows * cols
    pvals = np.full(cells, 1.0 / cells)
    pvals[-1] = 1.0 - pvals[:-1].sum()
    return stream.generator().multinomial(int(total), pvals).reshape(rows, cols)


def thin_matrix(m: CoincidenceMatrix, eta: float, stream: RandomStream) -> CoincidenceMatrix:
    """Binomially keep each recorded count with probability eta, cell by cell."""
    if not 0 <= eta <= 1:
        raise NoiseModelError("eta must lie in [0, 1]")
    thinned = stream.generator().binomial(m.counts, eta)
    return CoincidenceMatrix(thinned, m.basis, m.duration_s)
