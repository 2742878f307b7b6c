import os
import sys
from pathlib import Path

import pytest

# Add src to path
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..', 'src'))

from ordpath.core import PathGraph  # noqa: E402

CATALOG_DIR = Path(__file__).resolve().parent.parent / "catalog"


@pytest.fixture
def catalog_dir():
    return CATALOG_DIR


@pytest.fixture
def triangle():
    return PathGraph.of(3, [(0, 2)])


@pytest.fixture
def four_cycle():
    """Path 0-1-2-3 plus chords 0-2 and 1-3."""
    return PathGraph.of(4, [(0, 2), (1, 3)])
