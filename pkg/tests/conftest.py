import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from helpers import graph_for  # noqa: E402


@pytest.fixture
def g233():
    return graph_for(2, 3, 3)


@pytest.fixture
def g3410():
    return graph_for(3, 4, 10)
