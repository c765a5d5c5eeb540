import sys
from pathlib import Path

import pytest

# Same import layout as app/main.py: packages are imported from app/
sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "app"))

from catalog.fixtures import fixture  # noqa: E402


@pytest.fixture
def sl2_z2():
    return fixture("sl2_z2")


@pytest.fixture
def dihedral():
    return fixture("paper_dihedral")


@pytest.fixture
def semidirect():
    return fixture("semidirect_sl2_z2")
