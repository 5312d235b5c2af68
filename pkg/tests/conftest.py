import sys
from pathlib import Path

import pytest

# make tests/golden.py importable regardless of invocation directory
sys.path.insert(0, str(Path(__file__).parent))

REPO_ROOT = Path(__file__).resolve().parents[1]
DATA_DIR = REPO_ROOT / "data"


@pytest.fixture(scope="session")
def benchmark_matrix_path() -> Path:
    return DATA_DIR / "uas_features.csv"


@pytest.fixture(scope="session")
def benchmark_config_path() -> Path:
    return DATA_DIR / "uas_config.yaml"


@pytest.fixture(scope="session")
def benchmark_config(benchmark_config_path):
    from ncap import load_config

    return load_config(benchmark_config_path)


@pytest.fixture(scope="session")
def benchmark_matrix(benchmark_matrix_path, benchmark_config):
    from ncap import parse_feature_matrix

    return parse_feature_matrix(benchmark_matrix_path, benchmark_config)
