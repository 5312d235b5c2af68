"""Feature-matrix and evaluation-config ingestion.

The feature matrix is a CSV file: first column holds platform ids, the
header row names the features. The evaluation config is a YAML file that
declares, per feature, the direction of merit and (for qualitative
columns such as camera resolutions) an explicit token-to-number encoding
map. Tokens are opaque: "620x512" or "4k60p" mean whatever the config
says they mean, nothing is guessed from units or symbols.

Cells holding "-", "N/A", or nothing are missing. How missing data is
handled is a policy choice: fail, substitute the column mean, or exclude
the cell and renormalize that platform's weights downstream.
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path
from typing import Mapping

import yaml

from .errors import (
    ConfigError,
    DegenerateColumnError,
    EncodingError,
    FormatError,
    MissingValueError,
)
from .level import CapabilityProfile

MISSING_TOKENS = frozenset({"", "-", "N/A"})


class Direction(Enum):
    MORE_IS_BETTER = "more_is_better"
    LESS_IS_BETTER = "less_is_better"

    @property
    def sign(self) -> int:
        return 1 if self is Direction.MORE_IS_BETTER else -1


class MissingValuePolicy(Enum):
    ERROR = "error"
    COLUMN_MEAN = "mean"
    EXCLUDE = "exclude"


@dataclass(frozen=True)
class FeatureSpec:
    """Declaration of one feature: merit direction, unit label, token encodings."""

    name: str
    direction: Direction
    unit: str = ""
    encoding: Mapping[str, float] | None = None

    def __post_init__(self):
        if self.encoding is not None:
            for token, value in self.encoding.items():
                if not (isinstance(value, (int, float)) and math.isfinite(value) and value > 0):
                    raise ConfigError(
                        f"feature {self.name!r}: encoding for token {token!r} "
                        f"must be a positive finite number, got {value!r}"
                    )


@dataclass(frozen=True)
class FeatureMatrix:
    """Platforms x features grid of numeric values; None marks a missing cell."""

    platforms: tuple[str, ...]
    features: tuple[FeatureSpec, ...]
    values: tuple[tuple[float | None, ...], ...]

    def __post_init__(self):
        if not self.platforms or not self.features:
            raise FormatError("feature matrix needs at least one platform and one feature")
        if len(set(self.platforms)) != len(self.platforms):
            raise FormatError("duplicate platform ids")
        names = [f.name for f in self.features]
        if len(set(names)) != len(names):
            raise FormatError("duplicate feature names")
        if len(self.values) != len(self.platforms):
            raise FormatError(
                f"value grid has {len(self.values)} rows for {len(self.platforms)} platforms"
            )
        for platform, row in zip(self.platforms, self.values):
            if len(row) != len(self.features):
                raise FormatError(
                    f"row for {platform!r} has {len(row)} cells, "
                    f"expected {len(self.features)}"
                )
            for spec, cell in zip(self.features, row):
                if cell is not None and not math.isfinite(cell):
                    raise FormatError(
                        f"non-finite value {cell!r} at ({platform!r}, {spec.name!r})"
                    )

    @property
    def feature_names(self) -> tuple[str, ...]:
        return tuple(f.name for f in self.features)

    def column(self, index: int) -> tuple[float | None, ...]:
        return tuple(row[index] for row in self.values)

    def missing_cells(self) -> list[tuple[str, str]]:
        """(platform, feature) pairs of every missing cell, row-major order."""
        return [
            (platform, spec.name)
            for platform, row in zip(self.platforms, self.values)
            for spec, cell in zip(self.features, row)
            if cell is None
        ]


@dataclass(frozen=True)
class ResolvedMatrix:
    """A feature matrix paired with a per-cell presence mask.

    Under the error and column-mean policies the matrix carries no missing
    cells and the mask is all-True; under the exclude policy missing cells
    stay in the matrix and the mask tells aggregation what to skip.
    """

    matrix: FeatureMatrix
    present: tuple[tuple[bool, ...], ...]

    @property
    def complete(self) -> bool:
        return all(all(row) for row in self.present)


@dataclass(frozen=True)
class EvalConfig:
    """Parsed evaluation config: feature declarations plus run policies."""

    features: tuple[FeatureSpec, ...]
    weights: Mapping[str, float] | None = None
    missing: MissingValuePolicy | None = None
    profiles: Mapping[str, CapabilityProfile] = field(default_factory=dict)

    def spec_for(self, name: str) -> FeatureSpec:
        for spec in self.features:
            if spec.name == name:
                return spec
        raise ConfigError(f"feature {name!r} is not declared in the config")


def load_config(path: str | Path) -> EvalConfig:
    """Load and validate an evaluation config from a YAML file."""
    try:
        raw = yaml.safe_load(Path(path).read_text(encoding="utf-8"))
    except yaml.YAMLError as exc:
        raise ConfigError(f"cannot parse config {path}: {exc}") from exc
    if not isinstance(raw, dict):
        raise ConfigError(f"config {path} must be a mapping at the top level")

    features = _parse_feature_specs(raw.get("features"))
    names = {spec.name for spec in features}

    weights = raw.get("weights")
    if weights is not None:
        if not isinstance(weights, dict):
            raise ConfigError("weights must map feature names to numbers")
        unknown = set(weights) - names
        if unknown:
            raise ConfigError(f"weights name undeclared features: {sorted(unknown)}")
        absent = names - set(weights)
        if absent:
            raise ConfigError(f"weights missing for features: {sorted(absent)}")
        for key, value in weights.items():
            if not (isinstance(value, (int, float)) and math.isfinite(value) and value >= 0):
                raise ConfigError(f"weight for {key!r} must be a non-negative number")
        weights = {key: float(value) for key, value in weights.items()}

    missing = raw.get("missing")
    if missing is not None:
        try:
            missing = MissingValuePolicy(missing)
        except ValueError:
            choices = ", ".join(p.value for p in MissingValuePolicy)
            raise ConfigError(f"missing policy must be one of: {choices}") from None

    profiles = _parse_profiles(raw.get("profiles"))
    return EvalConfig(features=features, weights=weights, missing=missing, profiles=profiles)


def _parse_feature_specs(entries) -> tuple[FeatureSpec, ...]:
    if not entries or not isinstance(entries, list):
        raise ConfigError("config must declare a non-empty 'features' list")
    specs = []
    for entry in entries:
        if not isinstance(entry, dict) or "name" not in entry:
            raise ConfigError(f"feature entry needs at least a 'name': {entry!r}")
        extra = set(entry) - {"name", "direction", "unit", "encoding"}
        if extra:
            raise ConfigError(f"feature {entry['name']!r}: unknown keys {sorted(extra)}")
        try:
            direction = Direction(entry.get("direction"))
        except ValueError:
            choices = ", ".join(d.value for d in Direction)
            raise ConfigError(
                f"feature {entry['name']!r}: direction must be one of: {choices}"
            ) from None
        encoding = entry.get("encoding")
        if encoding is not None:
            if not isinstance(encoding, dict):
                raise ConfigError(f"feature {entry['name']!r}: encoding must be a mapping")
            encoding = {str(token): float(value) for token, value in encoding.items()}
        specs.append(
            FeatureSpec(
                name=str(entry["name"]),
                direction=direction,
                unit=str(entry.get("unit", "")),
                encoding=encoding,
            )
        )
    names = [spec.name for spec in specs]
    if len(set(names)) != len(names):
        raise ConfigError("duplicate feature names in config")
    return tuple(specs)


def _parse_profiles(entries) -> dict[str, CapabilityProfile]:
    if entries is None:
        return {}
    if not isinstance(entries, dict):
        raise ConfigError("profiles must map platform ids to capability booleans")
    profiles = {}
    for platform, body in entries.items():
        if not isinstance(body, dict):
            raise ConfigError(f"profile for {platform!r} must be a mapping")
        extra = set(body) - {"perception", "modeling", "planning", "execution", "evidence"}
        if extra:
            raise ConfigError(f"profile for {platform!r}: unknown keys {sorted(extra)}")
        for layer in ("modeling", "planning", "execution"):
            if not isinstance(body.get(layer), bool):
                raise ConfigError(
                    f"profile for {platform!r} needs boolean {layer!r}"
                )
        perception = body.get("perception", True)
        if not isinstance(perception, bool):
            raise ConfigError(f"profile for {platform!r}: perception must be boolean")
        evidence = body.get("evidence") or {}
        if not isinstance(evidence, dict):
            raise ConfigError(f"profile for {platform!r}: evidence must be a mapping")
        profiles[str(platform)] = CapabilityProfile(
            platform=str(platform),
            modeling=body["modeling"],
            planning=body["planning"],
            execution=body["execution"],
            perception=perception,
            evidence={str(k): str(v) for k, v in evidence.items()},
        )
    return profiles


def parse_feature_matrix(source: str | Path, config: EvalConfig) -> FeatureMatrix:
    """Parse a feature-matrix CSV file against a config's feature declarations.

    The header row names the features (first column is the platform id);
    every named feature must be declared in the config. String tokens are
    resolved through the feature's encoding map; "-", "N/A", and empty
    cells become missing values.
    """
    text = Path(source).read_text(encoding="utf-8")
    return parse_feature_matrix_text(text, config)


def parse_feature_matrix_text(text: str, config: EvalConfig) -> FeatureMatrix:
    """Same as parse_feature_matrix, for already-loaded CSV text."""
    rows = [row for row in csv.reader(io.StringIO(text)) if row]
    if not rows:
        raise FormatError("matrix file is empty")
    header = [cell.strip() for cell in rows[0]]
    if len(header) < 2:
        raise FormatError("header row must name at least one feature")
    names = header[1:]
    if len(set(names)) != len(names):
        raise FormatError("duplicate feature name in header")
    specs = tuple(config.spec_for(name) for name in names)

    platforms: list[str] = []
    grid: list[tuple[float | None, ...]] = []
    for line_no, row in enumerate(rows[1:], start=2):
        cells = [cell.strip() for cell in row]
        if len(cells) != len(header):
            raise FormatError(
                f"line {line_no}: expected {len(header)} cells, got {len(cells)}"
            )
        platform = cells[0]
        platforms.append(platform)
        grid.append(
            tuple(
                _parse_cell(cell, spec, platform, line_no)
                for spec, cell in zip(specs, cells[1:])
            )
        )
    if not platforms:
        raise FormatError("matrix file has a header but no platform rows")
    return FeatureMatrix(platforms=tuple(platforms), features=specs, values=tuple(grid))


def _parse_cell(cell: str, spec: FeatureSpec, platform: str, line_no: int) -> float | None:
    if cell in MISSING_TOKENS:
        return None
    if spec.encoding and cell in spec.encoding:
        return spec.encoding[cell]
    try:
        value = float(cell)
    except ValueError:
        raise EncodingError(
            f"line {line_no}, feature {spec.name!r}: no encoding for token {cell!r} "
            f"(platform {platform!r})"
        ) from None
    if not math.isfinite(value):
        raise FormatError(
            f"line {line_no}, feature {spec.name!r}: non-finite value {cell!r}"
        )
    return value


def serialize_feature_matrix(matrix: FeatureMatrix) -> str:
    """Render a matrix back to CSV text; missing cells serialize as empty.

    Numbers use repr, so parse -> serialize -> parse is lossless.
    """
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["platform", *matrix.feature_names])
    for platform, row in zip(matrix.platforms, matrix.values):
        writer.writerow([platform, *("" if cell is None else repr(cell) for cell in row)])
    return out.getvalue()


def resolve_missing(matrix: FeatureMatrix, policy: MissingValuePolicy) -> ResolvedMatrix:
    """Apply a missing-value policy, yielding a matrix plus presence mask.

    error: raise on the first missing cell. mean: substitute the column
    mean of the present values. exclude: keep cells missing and mark them
    absent in the mask for aggregation-time weight renormalization.
    """
    if not isinstance(policy, MissingValuePolicy):
        raise ConfigError(f"not a missing-value policy: {policy!r}")
    n_features = len(matrix.features)
    present = tuple(
        tuple(cell is not None for cell in row) for row in matrix.values
    )

    if policy is MissingValuePolicy.ERROR:
        missing = matrix.missing_cells()
        if missing:
            platform, feature = missing[0]
            raise MissingValueError(
                f"missing value at ({platform!r}, {feature!r}) under the error policy"
            )
        return ResolvedMatrix(matrix=matrix, present=present)

    for j in range(n_features):
        if not any(row[j] for row in present):
            raise DegenerateColumnError(
                f"feature {matrix.features[j].name!r} has no present values"
            )

    if policy is MissingValuePolicy.EXCLUDE:
        return ResolvedMatrix(matrix=matrix, present=present)

    means = []
    for j in range(n_features):
        found = [cell for cell in matrix.column(j) if cell is not None]
        means.append(math.fsum(found) / len(found))
    filled = tuple(
        tuple(means[j] if cell is None else cell for j, cell in enumerate(row))
        for row in matrix.values
    )
    full = FeatureMatrix(platforms=matrix.platforms, features=matrix.features, values=filled)
    all_present = tuple((True,) * n_features for _ in matrix.platforms)
    return ResolvedMatrix(matrix=full, present=all_present)
