import os
import shutil
from pathlib import Path

import pytest

ROOT = Path(__file__).resolve().parents[2]
DATA = ROOT / "data"


@pytest.fixture(scope="session")
def data_dir():
    return DATA


@pytest.fixture(scope="session")
def cli():
    exe = os.environ.get("HOMCOVER_CLI") or shutil.which("homcover")
    if not exe:
        candidate = ROOT / "build" / "homcover"
        exe = str(candidate) if candidate.exists() else None
    if not exe:
        pytest.skip("homcover executable not found")
    return exe
