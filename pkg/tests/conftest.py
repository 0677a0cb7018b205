import json
from pathlib import Path

import pytest

from bettidecomp import BettiDiagram, parse_diagram

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


@pytest.fixture(scope="session")
def fixtures_dir() -> Path:
    return FIXTURES


@pytest.fixture(scope="session")
def quotient_diagram() -> BettiDiagram:
    """Betti table of k[x,y,z]/(x^2, x*y, x*z^2)."""
    return parse_diagram((FIXTURES / "quotient_x2_xy_xz2.json").read_text(), "json")


@pytest.fixture(scope="session")
def dual_functionals() -> dict:
    return json.loads((FIXTURES / "dual_functionals_n3_window_0_2.json").read_text())


@pytest.fixture(scope="session")
def five_tableaux() -> dict:
    return json.loads((FIXTURES / "tableaux_n2_window_0_1.json").read_text())


@pytest.fixture(scope="session")
def pure_summands() -> dict:
    return json.loads((FIXTURES / "pure_summands.json").read_text())
