from pathlib import Path

import pytest

from poincare.pipeline import compute
from poincare.tablefile import parse_text

DATA = Path(__file__).parent / "data"


@pytest.fixture(scope="session")
def golden():
    return parse_text((DATA / "golden_table.txt").read_text())


@pytest.fixture(scope="session")
def results():
    """Default-config pipeline results for n = 3..20, computed once per session."""
    return {n: compute(n) for n in range(3, 21)}
