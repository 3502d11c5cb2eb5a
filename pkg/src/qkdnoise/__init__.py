"""Seeded channel-noise injection and subspace key-rate sweeps for
entanglement-based QKD coincidence data."""

from .dataset import (
    BUILTIN_KEYS,
    BasisKind,
    BasisLabel,
    CoincidenceMatrix,
    DatasetCatalog,
    DatasetError,
    ExperimentRecord,
    builtin_catalog,
    computational,
    dump_custom,
    load_builtin,
    load_custom,
    load_network_builtin,
    subspace_fourier,
    total_counts,
)
from .keyrate import (
    JointDistribution,
    KeyRateError,
    KeyRateResult,
    bpsc,
    conditional_entropy,
    extract_block,
    normalize_block,
)
from .noise import (
    DEFAULT_CONSTANTS,
    ChannelLoss,
    ChannelNoise,
    DetectorNoise,
    IsotropicNoise,
    NetworkNoise,
    NoiseModelError,
    NoiseSpec,
    ProtocolConstants,
    RandomStream,
    accidental_rate_approx,
    accidental_rate_exact,
    alice_singles_from_loss,
    isotropic_noise_counts,
    network_block_counts,
    round_count,
    sample_noise_matrix,
    thin_matrix,
    transmittance_from_db,
)
from .scenarios import (
    AsymmetricScenario,
    CriticalNoiseError,
    MonteCarloSummary,
    NetworkScenario,
    NoiseKind,
    ScenarioError,
    SymmetricScenario,
    bisect_crossing,
    find_critical_noise,
    run_asymmetric,
    run_network,
    run_symmetric,
    symmetric_noise_totals,
)

__version__ = "0.1.0"

__all__ = [
    "BUILTIN_KEYS",
    "BasisKind",
    "BasisLabel",
    "CoincidenceMatrix",
    "DatasetCatalog",
    "DatasetError",
    "ExperimentRecord",
    "builtin_catalog",
    "computational",
    "dump_custom",
    "load_builtin",
    "load_custom",
    "load_network_builtin",
    "subspace_fourier",
    "total_counts",
    "JointDistribution",
    "KeyRateError",
    "KeyRateResult",
    "bpsc",
    "conditional_entropy",
    "extract_block",
    "normalize_block",
    "DEFAULT_CONSTANTS",
    "ChannelLoss",
    "ChannelNoise",
    "DetectorNoise",
    "IsotropicNoise",
    "NetworkNoise",
    "NoiseModelError",
    "NoiseSpec",
    "ProtocolConstants",
    "RandomStream",
    "accidental_rate_approx",
    "accidental_rate_exact",
    "alice_singles_from_loss",
    "isotropic_noise_counts",
    "network_block_counts",
    "round_count",
    "sample_noise_matrix",
    "thin_matrix",
    "transmittance_from_db",
    "AsymmetricScenario",
    "CriticalNoiseError",
    "MonteCarloSummary",
    "NetworkScenario",
    "NoiseKind",
    "ScenarioError",
    "SymmetricScenario",
    "bisect_crossing",
    "find_critical_noise",
    "run_asymmetric",
    "run_network",
    "run_symmetric",
    "symmetric_noise_totals",
    "__version__",
]
