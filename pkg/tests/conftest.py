"""Test configuration for pytest."""
import os
import random
import sys

import pytest

# Add the project root to the Python path
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

from src.main.python.config.search_config import RunConfig, RunMode  # noqa: E402
from src.main.python.parsers.family_parser import parse_family_spec  # noqa: E402
from src.main.python.services.domination import DominationCalculator  # noqa: E402
from src.main.python.services.families import generate  # noqa: E402


def family(text):
    """Graph for a family specification such as ``"path:4"``."""
    return generate(parse_family_spec(text))


@pytest.fixture
def petersen():
    return family("petersen")


@pytest.fixture
def p4():
    return family("path:4")


@pytest.fixture
def c4():
    return family("cycle:4")


@pytest.fixture
def k3():
    return family("complete:3")


@pytest.fixture
def domination():
    """Fresh solver so memoisation never leaks between tests."""
    return DominationCalculator()


@pytest.fixture
def rng():
    return random.Random(20240601)


@pytest.fixture
def small_verify_config():
    """Verify configuration small enough for unit tests."""
    return RunConfig(
        mode=RunMode.VERIFY,
        max_n=3,
        random_graphs=20,
        random_pairs=10,
        random_sets=20,
        random_snakes=20,
    )
