"""
Pytest configuration
"""
import logging

import pytest

from dcsparse.config import get_settings
from dcsparse.losses import LossKind
from tests.factories import random_problem


@pytest.fixture(autouse=True)
def reset_logging_and_settings():
    """CLI runs attach handlers to captured streams; drop them between tests"""
    get_settings.cache_clear()
    yield
    get_settings.cache_clear()
    root = logging.getLogger()
    for handler in root.handlers:
        if isinstance(handler, logging.FileHandler):
            handler.close()
    root.handlers.clear()
    root.setLevel(logging.WARNING)
    logging.disable(logging.NOTSET)


@pytest.fixture
def squared_problem():
    return random_problem(50, 10, seed=1)


@pytest.fixture
def logistic_problem():
    return random_problem(200, 8, seed=2, loss=LossKind.LOGISTIC)
