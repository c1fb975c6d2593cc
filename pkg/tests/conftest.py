import json
from pathlib import Path

import numpy as np
import pytest

GOLDENS = Path(__file__).parent / "goldens"


@pytest.fixture(scope="session")
def goldens_dir() -> Path:
    return GOLDENS


def load_golden(name: str):
    with open(GOLDENS / name, "r", encoding="utf-8") as fh:
        return json.load(fh)


@pytest.fixture(scope="session")
def rng():
    return np.random.default_rng(1234)
