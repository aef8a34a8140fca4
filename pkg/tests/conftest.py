from importlib.resources import files
from pathlib import Path

import pytest


@pytest.fixture(scope="session")
def data_dir() -> Path:
    return Path(files("kakimizu").joinpath("data"))
