import random
import time

import pytest

SEED = time.time()
random.seed(SEED)


def pytest_report_header(config):
    return f"SEED is {SEED}"


def pytest_addoption(parser):
    parser.addoption(
        "--runslow",
        action="store_true",
        default=False,
        help="run the exhaustive enumerations at 10 and 11 strands",
    )


def pytest_collection_modifyitems(config, items):
    if config.getoption("--runslow"):
        return
    skip_slow = pytest.mark.skip(reason="needs --runslow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip_slow)


@pytest.fixture
def rng():
    return random.Random(SEED)
