import os
from pathlib import Path

import pytest

ROOT = Path(__file__).resolve().parents[2]


@pytest.fixture(scope="session")
def corpus_dir():
    return Path(os.environ.get("FLCALC_CORPUS_DIR", ROOT / "corpus"))


@pytest.fixture(scope="session")
def fixtures_dir():
    return ROOT / "tests" / "fixtures"
