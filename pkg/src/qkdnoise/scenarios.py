"""Scenario sweeps: symmetric source-in-the-middle, source-at-Alice, star network.

Each runner walks a noise-parameter grid, repeats the seeded noise injection
n_runs times per grid point, and reports the mean together with the best and
worst key rate observed.  Randomness is derived per (scenario, grid index,
repetition, draw site), so results are independent of execution order and
the same (scenario, n_runs, seed) always reproduces the same summaries.
"""

from __future__ import annotations

import math
import os
import struct
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from enum import Enum
from typing import Callable, Sequence

from .dataset import (
    CoincidenceMatrix,
    ExperimentRecord,
    computational,
    load_builtin,
    load_network_builtin,
    subspace_fourier,
    total_counts,
)
from .keyrate import KeyRateError, bpsc
from .noise import (
    DEFAULT_CONSTANTS,
    ProtocolConstants,
    RandomStream,
    accidental_rate_approx,
    alice_singles_from_loss,
    isotropic_noise_counts,
    network_block_counts,
    round_count,
    sample_noise_matrix,
    thin_matrix,
    transmittance_from_db,
)

THREADS_ENV_VAR = "QKDNOISE_THREADS"

VANISH_THRESHOLD = 1e-6  # bits; below this the key rate counts as vanished

NETWORK_PARTY_LABELS = ("Bob1", "Bob2", "Bob3")


class ScenarioError(ValueError):
    """Invalid scenario configuration."""


class NoiseKind(Enum):
    ISOTROPIC = "isotropic"
    DETECTOR = "detector"
    CHANNEL = "channel"


# stream-path scenario identifiers
_SID = {
    NoiseKind.ISOTROPIC: 10,
    NoiseKind.DETECTOR: 11,
    NoiseKind.CHANNEL: 12,
}
_SID_ASYMMETRIC = 20
_SID_NETWORK = 30
_SID_CRITICAL = 40


def _check_grid(grid: Sequence[float], in_range: Callable[[float], bool], what: str) -> None:
    if len(grid) == 0:
        raise ScenarioError("parameter grid is empty")
    if any(b <= a for a, b in zip(grid, grid[1:])):
        raise ScenarioError("parameter grid must be strictly increasing")
    if not all(in_range(v) for v in grid):
        raise ScenarioError(f"grid value out of range for {what}")


@dataclass(frozen=True)
class SymmetricScenario:
    """Source between the labs, S_A = S_B; one of three noise parametrizations.

    grid holds p for isotropic noise, the per-detector singles rate S for
    detector noise, or the per-lab total rate T = d*S for channel noise.
    """

    d: int
    k: int
    noise_kind: NoiseKind
    grid: tuple[float, ...]

    def __post_init__(self) -> None:
        if self.noise_kind is NoiseKind.ISOTROPIC:
            _check_grid(self.grid, lambda v: 0 <= v < 1, "isotropic p")
        else:
            _check_grid(self.grid, lambda v: v >= 0, "singles rate")


@dataclass(frozen=True)
class AsymmetricScenario:
    """Source in Alice's lab; Bob's channel has loss plus a fixed noise rate."""

    d: int
    k: int
    loss_grid: tuple[float, ...]
    bob_channel_rate: float = 0.0

    def __post_init__(self) -> None:
        _check_grid(self.loss_grid, lambda v: v >= 0, "loss (dB)")
        if self.bob_channel_rate < 0:
            raise ScenarioError("bob_channel_rate must be >= 0")


@dataclass(frozen=True)
class NetworkScenario:
    """Star network: Bob's detectors split over labs of sizes `partition`."""

    loss_grid: tuple[float, ...]
    lab_rate: float = 0.0
    partition: tuple[int, ...] = (2, 2, 4)

    def __post_init__(self) -> None:
        _check_grid(self.loss_grid, lambda v: v >= 0, "loss (dB)")
        if self.lab_rate < 0:
            raise ScenarioError("lab_rate must be >= 0")
        if sum(self.partition) != 8:
            raise ScenarioError("partition must sum to 8")


@dataclass(frozen=True)
class MonteCarloSummary:
    """Mean/min/max BPSC over n_runs repetitions at one grid point.

    per_party maps a network party label to its own (mean, min, max); flag
    is set when at least one repetition had no sifted coincidences left and
    was scored as zero.
    """

    param: float
    mean_bpsc: float
    min_bpsc: float
    max_bpsc: float
    n_runs: int
    per_party: dict[str, tuple[float, float, float]] | None = None
    flag: str | None = None


def _stats(values) -> tuple[float, float, float]:
    lo, hi = min(values), max(values)
    # the mean of identical values is that value, ulp-exactly
    mean = lo if lo == hi else math.fsum(values) / len(values)
    return mean, lo, hi


def _summary(param, values, n_runs, per_party=None, flag=None) -> MonteCarloSummary:
    mean, lo, hi = _stats(values)
    return MonteCarloSummary(
        param=float(param),
        mean_bpsc=mean,
        min_bpsc=lo,
        max_bpsc=hi,
        n_runs=n_runs,
        per_party=per_party,
        flag=flag,
    )


def _max_workers() -> int:
    raw = os.environ.get(THREADS_ENV_VAR)
    if raw is None:
        return 1
    try:
        n = int(raw)
    except ValueError:
        raise ScenarioError(f"{THREADS_ENV_VAR} must be an integer, got {raw!r}") from None
    return max(1, n)


def _map_grid(fn: Callable[[int, float], MonteCarloSummary], grid) -> list[MonteCarloSummary]:
    # Grid points are independent; merge order is fixed by the grid, so
    # threading never changes the output.
    workers = _max_workers()
    if workers == 1:
        return [fn(i, p) for i, p in enumerate(grid)]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, range(len(grid)), grid))


# --- symmetric scenario -------------------------------------------------------


def symmetric_noise_totals(
    scenario: SymmetricScenario,
    param: float,
    record: ExperimentRecord,
    constants: ProtocolConstants = DEFAULT_CONSTANTS,
) -> tuple[int, int]:
    """Per-run accidental-count budgets (comp basis, Fourier basis) at one grid value."""
    kind = scenario.noise_kind
    if kind is NoiseKind.ISOTROPIC:
        return (
            isotropic_noise_counts(param, total_counts(record.comp)),
            isotropic_noise_counts(param, total_counts(record.four)),
        )
    if kind is NoiseKind.DETECTOR:
        s = param
    else:  # channel: per-lab total T splits evenly over the d detectors
        s = param / scenario.d
    per_run = round_count(
        constants.run_duration * accidental_rate_approx(s, s, scenario.d, constants)
    )
    return per_run, per_run


def _with_noise(m: CoincidenceMatrix, extra: int, stream: RandomStream) -> CoincidenceMatrix:
    if extra == 0:
        return m
    noise = sample_noise_matrix(extra, m.dim, m.dim, stream)
    return CoincidenceMatrix(m.counts + noise, m.basis, m.duration_s)


def run_symmetric(
    scenario: SymmetricScenario,
    n_runs: int = 100,
    seed: int = 1,
    constants: ProtocolConstants = DEFAULT_CONSTANTS,
) -> list[MonteCarloSummary]:
    """Sweep the symmetric scenario grid and summarize BPSC per grid point."""
    if n_runs < 1:
        raise ScenarioError("n_runs must be >= 1")
    record = load_builtin(scenario.d, scenario.k)
    base = RandomStream(seed)
    sid = _SID[scenario.noise_kind]

    def point(gi: int, param: float) -> MonteCarloSummary:
        n_comp, n_four = symmetric_noise_totals(scenario, param, record, constants)
        values = []
        for rep in range(n_runs):
            stream = base.child(sid, gi, rep)
            comp = _with_noise(record.comp, n_comp, stream.child(0))
            four = _with_noise(record.four, n_four, stream.child(1))
            values.append(bpsc(comp, four, scenario.d, scenario.k).bpsc)
        return _summary(param, values, n_runs)

    return _map_grid(point, scenario.grid)


# --- asymmetric scenario ------------------------------------------------------


def asymmetric_extra_counts(
    s_a: float,
    bob_channel_rate: float,
    d: int,
    constants: ProtocolConstants = DEFAULT_CONSTANTS,
) -> int:
    """Per-run, per-basis accidental counts between loss singles and Bob's channel singles."""
    rate = accidental_rate_approx(s_a, bob_channel_rate / d, d, constants)
    return round_count(constants.run_duration * rate)


def _asymmetric_rep(
    record: ExperimentRecord,
    eta: float,
    extra: int,
    stream: RandomStream,
) -> tuple[float, bool]:
    """One repetition: thin both matrices, add accidentals, evaluate; returns (bpsc, emptied)."""
    comp = thin_matrix(record.comp, eta, stream.child(0))
    four = thin_matrix(record.four, eta, stream.child(1))
    comp = _with_noise(comp, extra, stream.child(2))
    four = _with_noise(four, extra, stream.child(3))
    try:
        return bpsc(comp, four, record.d, record.k).bpsc, False
    except KeyRateError:
        return 0.0, True


def run_asymmetric(
    scenario: AsymmetricScenario,
    n_runs: int = 100,
    seed: int = 1,
    constants: ProtocolConstants = DEFAULT_CONSTANTS,
) -> list[MonteCarloSummary]:
    """Sweep channel loss with the source in Alice's lab."""
    if n_runs < 1:
        raise ScenarioError("n_runs must be >= 1")
    record = load_builtin(scenario.d, scenario.k)
    base = RandomStream(seed)

    def point(gi: int, loss_db: float) -> MonteCarloSummary:
        eta = transmittance_from_db(loss_db)
        s_a = alice_singles_from_loss(record, eta, constants)
        extra = asymmetric_extra_counts(s_a, scenario.bob_channel_rate, record.d, constants)
        values = []
        emptied = 0
        for rep in range(n_runs):
            value, was_empty = _asymmetric_rep(
                record, eta, extra, base.child(_SID_ASYMMETRIC, gi, rep)
            )
            values.append(value)
            emptied += was_empty
        flag = f"empty-repetitions={emptied}" if emptied else None
        return _summary(loss_db, values, n_runs, flag=flag)

    return _map_grid(point, scenario.loss_grid)


# --- star network scenario ----------------------------------------------------


def _party_blocks(record: ExperimentRecord) -> list[tuple[int, ExperimentRecord]]:
    """Split the network record into standalone (d_i, k_i = d_i) block records."""
    blocks = []
    offset = 0
    for d_i in record.partition:
        sl = slice(offset, offset + d_i)
        blocks.append(
            (
                d_i,
                ExperimentRecord(
                    d=d_i,
                    k=d_i,
                    comp=CoincidenceMatrix(
                        record.comp.counts[sl, sl], computational(), record.comp.duration_s
                    ),
                    four=CoincidenceMatrix(
                        record.four.counts[sl, sl], subspace_fourier(d_i), record.four.duration_s
                    ),
                ),
            )
        )
        offset += d_i
    return blocks


def network_party_rep(
    block: ExperimentRecord,
    eta: float,
    extra: int,
    stream: RandomStream,
) -> tuple[float, bool]:
    """One repetition of one party's block pair; same pipeline as the asymmetric case."""
    return _asymmetric_rep(block, eta, extra, stream)


def run_network(
    scenario: NetworkScenario,
    n_runs: int = 100,
    seed: int = 1,
    constants: ProtocolConstants = DEFAULT_CONSTANTS,
) -> list[MonteCarloSummary]:
    """Sweep shared channel loss for the star network; per_party is always populated.

    The summary's own mean is the unweighted mean of the party means, and
    its min/max envelope spans all parties.
    """
    if n_runs < 1:
        raise ScenarioError("n_runs must be >= 1")
    record = load_network_builtin()
    if scenario.partition != record.partition:
        raise ScenarioError(
            f"partition {scenario.partition} does not match the dataset partition {record.partition}"
        )
    blocks = _party_blocks(record)
    pair_rate = total_counts(record.comp) / constants.run_duration
    base = RandomStream(seed)

    def point(gi: int, loss_db: float) -> MonteCarloSummary:
        eta = transmittance_from_db(loss_db)
        ds_a = (1.0 - eta) * pair_rate
        per_party: dict[str, tuple[float, float, float]] = {}
        party_means = []
        mins = []
        maxes = []
        emptied = 0
        for pi, (d_i, block) in enumerate(blocks):
            extra = network_block_counts(ds_a, d_i, scenario.lab_rate, constants)
            values = []
            for rep in range(n_runs):
                value, was_empty = network_party_rep(
                    block, eta, extra, base.child(_SID_NETWORK, gi, rep, pi)
                )
                values.append(value)
                emptied += was_empty
            stats = _stats(values)
            per_party[NETWORK_PARTY_LABELS[pi]] = stats
            party_means.append(stats[0])
            mins.append(stats[1])
            maxes.append(stats[2])
        flag = f"empty-repetitions={emptied}" if emptied else None
        return MonteCarloSummary(
            param=float(loss_db),
            mean_bpsc=math.fsum(party_means) / len(party_means),
            min_bpsc=min(mins),
            max_bpsc=max(maxes),
            n_runs=n_runs,
            per_party=per_party,
            flag=flag,
        )

    return _map_grid(point, scenario.loss_grid)


# --- critical noise search ----------------------------------------------------


class CriticalNoiseError(RuntimeError):
    """Bisection preconditions violated (no bracket)."""


def bisect_crossing(
    f: Callable[[float], float],
    lo: float,
    hi: float,
    threshold: float,
    tol: float,
) -> float:
    """Find where a decreasing f crosses below threshold, to parameter tolerance tol."""
    if tol <= 0:
        raise ScenarioError("tol must be positive")
    if f(lo) <= threshold:
        raise CriticalNoiseError("key rate already vanished at the lower bound")
    if f(hi) > threshold:
        raise CriticalNoiseError("no crossing within the upper bound")
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if f(mid) > threshold:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def find_critical_noise(
    scenario: SymmetricScenario,
    n_runs: int = 100,
    seed: int = 1,
    tol: float = 1e3,
    constants: ProtocolConstants = DEFAULT_CONSTANTS,
) -> float:
    """Noise parameter at which the mean BPSC vanishes (drops below 1e-6 bits).

    The scenario's grid supplies the initial bracket [grid[0], grid[-1]].
    Evaluations are keyed by the parameter value itself, not by grid index,
    so the result does not depend on the bisection visit order.
    """
    if n_runs < 1:
        raise ScenarioError("n_runs must be >= 1")
    record = load_builtin(scenario.d, scenario.k)
    base = RandomStream(seed)

    def mean_bpsc(param: float) -> float:
        (param_key,) = struct.unpack("<Q", struct.pack("<d", float(param)))
        n_comp, n_four = symmetric_noise_totals(scenario, param, record, constants)
        values = []
        for rep in range(n_runs):
            stream = base.child(_SID_CRITICAL, _SID[scenario.noise_kind], param_key, rep)
            comp = _with_noise(record.comp, n_comp, stream.child(0))
            four = _with_noise(record.four, n_four, stream.child(1))
            values.append(bpsc(comp, four, scenario.d, scenario.k).bpsc)
        return math.fsum(values) / len(values)

    return bisect_crossing(
        mean_bpsc, scenario.grid[0], scenario.grid[-1], VANISH_THRESHOLD, tol
    )
