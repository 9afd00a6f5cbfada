import sys
from pathlib import Path

import numpy as np
import pytest

from privopt import Scenario
from privopt.cli import load_scenario

REPO_ROOT = Path(__file__).resolve().parent.parent
SCENARIO_DIR = REPO_ROOT / "scenarios"

sys.path.insert(0, str(Path(__file__).resolve().parent))


@pytest.fixture(scope="session")
def table1_file():
    return load_scenario(str(SCENARIO_DIR / "table1.json"))


@pytest.fixture(scope="session")
def table2_file():
    return load_scenario(str(SCENARIO_DIR / "table2.json"))


@pytest.fixture(scope="session")
def table1(table1_file):
    """Case-study parameters; price 0.2, cap 10000, near-secure provider."""
    return table1_file.scenario


@pytest.fixture(scope="session")
def table2(table2_file):
    """Sensitivity reference parameters; price 0.5, equal breach probabilities."""
    return table2_file.scenario


def make_random_scenario(rng: np.random.Generator, regime: str | None = None) -> Scenario:
    """Valid random scenario, optionally pinned to one gradient regime."""
    theta = float(rng.uniform(0.05, 0.95))
    if regime == "lt1":
        nu = float(rng.uniform(0.05, 0.95))
    elif regime == "a":
        nu = 1.0 + theta * float(rng.uniform(0.05, 0.95))
    elif regime == "b":
        nu = 1.0 + theta + float(rng.uniform(0.02, 1.5 - theta))
    elif regime == "eq1":
        nu = 1.0
    elif regime == "eq1pt":
        nu = 1.0 + theta
    else:
        nu = float(rng.uniform(0.05, 2.5))
    p_star = float(rng.uniform(0.1, 10.0))
    return Scenario(
        q_star=float(rng.uniform(10.0, 1000.0)),
        p_star=p_star,
        price=p_star * float(rng.uniform(0.0, 0.95)),
        nu=nu,
        theta=theta,
        alpha_n=float(rng.uniform(0.01, 1.0)),
        l_n=float(rng.uniform(100.0, 1e5)),
        pi_s=float(10.0 ** rng.uniform(-6, -2)),
        pi_c_star=float(10.0 ** rng.uniform(-6, -2)),
    )
