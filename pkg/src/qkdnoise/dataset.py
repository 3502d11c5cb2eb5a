"""Coincidence-matrix datasets: bundled records, validation, text ingestion.

A dataset is a pair of d x d coincidence matrices (computational basis and
subspace Fourier basis) collected over one acquisition run.  Bundled records
cover (d, k) in {(2,2), (4,2), (4,4), (8,2), (8,4)} plus a block-diagonal
star-network composition with detector partition 2+2+4.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterator, Mapping

import numpy as np

from . import _tables


class DatasetError(ValueError):
    """Malformed dataset input or unknown built-in key."""


class BasisKind(Enum):
    COMPUTATIONAL = "comp"
    SUBSPACE_FOURIER = "fourier"


@dataclass(frozen=True)
class BasisLabel:
    """Measurement-basis tag; Fourier labels carry the subspace size k."""

    kind: BasisKind
    subspace_size: int | None = None

    def __post_init__(self) -> None:
        if self.kind is BasisKind.COMPUTATIONAL:
            if self.subspace_size is not None:
                raise DatasetError("computational basis takes no subspace size")
        else:
            if self.subspace_size is None or self.subspace_size < 2:
                raise DatasetError("subspace Fourier basis requires k >= 2")


def computational() -> BasisLabel:
    return BasisLabel(BasisKind.COMPUTATIONAL)


def subspace_fourier(k: int) -> BasisLabel:
    return BasisLabel(BasisKind.SUBSPACE_FOURIER, k)


@dataclass(frozen=True, eq=False)
class CoincidenceMatrix:
    """d x d grid of coincidence counts for one basis setting and one run.

    Entry [i][j] is the number of coincidences between Alice's detector i
    and Bob's detector j.  Counts are nonnegative integers; the array is
    frozen after construction.
    """

    counts: np.ndarray
    basis: BasisLabel
    duration_s: float = 25.0

    def __post_init__(self) -> None:
        arr = np.array(self.counts, dtype=np.int64)
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1] or arr.shape[0] < 1:
            raise DatasetError(f"counts must be a square grid, got shape {arr.shape}")
        if (arr < 0).any():
            raise DatasetError("negative coincidence count")
        if self.basis.kind is BasisKind.SUBSPACE_FOURIER:
            k = self.basis.subspace_size
            if arr.shape[0] % k != 0:
                raise DatasetError(
                    f"subspace size k={k} does not divide dimension d={arr.shape[0]}"
                )
        if not self.duration_s > 0:
            raise DatasetError("run duration must be positive")
        arr.flags.writeable = False
        object.__setattr__(self, "counts", arr)

    @property
    def dim(self) -> int:
        return int(self.counts.shape[0])


def total_counts(m: CoincidenceMatrix) -> int:
    """Sum of all entries (the count budget behind pair-rate estimates)."""
    return int(m.counts.sum())


@dataclass(frozen=True)
class ExperimentRecord:
    """A computational/Fourier matrix pair for one (d, k) configuration.

    ``partition`` is set only on the star-network record, where the Fourier
    matrix is block-mixed (blocks of size 2, 2 and 4 rather than a uniform
    k); ``k`` then labels the smallest block.
    """

    d: int
    k: int
    comp: CoincidenceMatrix
    four: CoincidenceMatrix
    partition: tuple[int, ...] | None = None

    def __post_init__(self) -> None:
        if self.comp.dim != self.d or self.four.dim != self.d:
            raise DatasetError(
                f"matrix dimensions {self.comp.dim}/{self.four.dim} do not match d={self.d}"
            )
        if self.k < 2 or self.d % self.k != 0:
            raise DatasetError(f"k={self.k} must be >= 2 and divide d={self.d}")
        if self.comp.basis.kind is not BasisKind.COMPUTATIONAL:
            raise DatasetError("comp matrix must carry the computational basis tag")
        if self.four.basis.kind is not BasisKind.SUBSPACE_FOURIER:
            raise DatasetError("four matrix must carry the Fourier basis tag")
        if self.partition is not None and sum(self.partition) != self.d:
            raise DatasetError("partition must sum to d")


def _record(d: int, k: int, comp_data, four_data, partition=None) -> ExperimentRecord:
    return ExperimentRecord(
        d=d,
        k=k,
        comp=CoincidenceMatrix(np.array(comp_data), computational(), _tables.RUN_DURATION_S),
        four=CoincidenceMatrix(np.array(four_data), subspace_fourier(k), _tables.RUN_DURATION_S),
        partition=partition,
    )


_BUILTIN_TABLES = {
    (2, 2): (_tables.D2_COMP, _tables.D2_K2_FOUR),
    (4, 2): (_tables.D4_COMP, _tables.D4_K2_FOUR),
    (4, 4): (_tables.D4_COMP, _tables.D4_K4_FOUR),
    (8, 2): (_tables.D8_COMP, _tables.D8_K2_FOUR),
    (8, 4): (_tables.D8_COMP, _tables.D8_K4_FOUR),
}

BUILTIN_KEYS: tuple[tuple[int, int], ...] = tuple(sorted(_BUILTIN_TABLES))


def load_builtin(d: int, k: int) -> ExperimentRecord:
    """Return the bundled record for (d, k); the comp matrix is shared across k."""
    try:
        comp_data, four_data = _BUILTIN_TABLES[(d, k)]
    except KeyError:
        raise DatasetError(f"no such built-in dataset: d={d}, k={k}") from None
    return _record(d, k, comp_data, four_data)


def load_network_builtin() -> ExperimentRecord:
    """Return the star-network record (d=8, detector partition 2+2+4).

    Both matrices are block diagonal; all off-block entries are zero.
    """
    return _record(
        8,
        2,
        _tables.NETWORK_COMP,
        _tables.NETWORK_FOUR,
        partition=_tables.NETWORK_PARTITION,
    )


@dataclass(frozen=True)
class DatasetCatalog:
    """All bundled records, keyed by (d, k), plus the network composition."""

    records: Mapping[tuple[int, int], ExperimentRecord]
    network: ExperimentRecord

    def __iter__(self) -> Iterator[ExperimentRecord]:
        yield from self.records.values()
        yield self.network


def builtin_catalog() -> DatasetCatalog:
    return DatasetCatalog(
        records={key: load_builtin(*key) for key in BUILTIN_KEYS},
        network=load_network_builtin(),
    )


# ---------------------------------------------------------------------------
# Custom dataset documents
#
# UTF-8 text, line oriented.  Header lines "d=<int>", "k=<int>",
# "duration_s=<real>", then a "[comp]" section of d whitespace-separated
# rows of d integers, then a "[fourier]" section of the same shape.  Lines
# starting with "#" are comments.
# ---------------------------------------------------------------------------

_HEADER_FIELDS = ("d", "k", "duration_s")


def load_custom(text: str) -> ExperimentRecord:
    """Parse a custom dataset document into a validated record.

    Raises DatasetError with a distinct message for each defect class:
    missing or malformed header, missing basis section, ragged or
    wrongly-sized grids, negative counts, and k not dividing d.
    """
    header: dict[str, str] = {}
    sections: dict[str, list[list[int]]] = {}
    current: list[list[int]] | None = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line.startswith("[") and line.endswith("]"):
            tag = line[1:-1].strip().lower()
            if tag not in ("comp", "fourier"):
                raise DatasetError(f"line {lineno}: unknown section [{tag}]")
            if tag in sections:
                raise DatasetError(f"line {lineno}: duplicate section [{tag}]")
            sections[tag] = []
            current = sections[tag]
        elif current is not None:
            try:
                current.append([int(tok) for tok in line.split()])
            except ValueError:
                raise DatasetError(f"line {lineno}: non-integer count in matrix row") from None
        elif "=" in line:
            key, _, value = line.partition("=")
            key = key.strip()
            if key not in _HEADER_FIELDS:
                raise DatasetError(f"line {lineno}: unknown header field {key!r}")
            header[key] = value.strip()
        else:
            raise DatasetError(f"line {lineno}: unexpected content before any section")

    for field in ("d", "k"):
        if field not in header:
            raise DatasetError(f"missing header field {field!r}")
    try:
        d = int(header["d"])
        k = int(header["k"])
        duration = float(header.get("duration_s", _tables.RUN_DURATION_S))
    except ValueError:
        raise DatasetError("malformed header value") from None
    if k < 2 or d % k != 0:
        raise DatasetError(f"k={k} must be >= 2 and divide d={d}")

    for tag in ("comp", "fourier"):
        if tag not in sections:
            raise DatasetError(f"missing basis section [{tag}]")
        rows = sections[tag]
        if len(rows) != d or any(len(r) != d for r in rows):
            raise DatasetError(
                f"[{tag}] grid must be {d}x{d}, got "
                f"{len(rows)} rows of widths {sorted({len(r) for r in rows})}"
            )
        if any(v < 0 for r in rows for v in r):
            raise DatasetError(f"[{tag}] grid contains a negative count")

    return ExperimentRecord(
        d=d,
        k=k,
        comp=CoincidenceMatrix(np.array(sections["comp"]), computational(), duration),
        four=CoincidenceMatrix(np.array(sections["fourier"]), subspace_fourier(k), duration),
    )


def dump_custom(record: ExperimentRecord) -> str:
    """Serialize a record to the custom document schema (round-trips exactly)."""
    width = max(len(str(int(v))) for m in (record.comp, record.four) for v in m.counts.flat)
    lines = [
        f"d={record.d}",
        f"k={record.k}",
        f"duration_s={record.comp.duration_s:g}",
        "[comp]",
    ]
    lines += [" ".join(f"{int(v):>{width}}" for v in row) for row in record.comp.counts]
    lines.append("[fourier]")
    lines += [" ".join(f"{int(v):>{width}}" for v in row) for row in record.four.counts]
    return "\n".join(lines) + "\n"
