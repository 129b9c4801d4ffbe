import random

import pytest

from algebra.lyndon import RootSystem
from algebra.nichols import NicholsKernel
from database.connection import DatabaseManager
from services.report_service import ReportService


@pytest.fixture(scope="session")
def kernel():
    """Multipoint kernel with a pinned seed, shared across the session."""
    return NicholsKernel(rank_method="multipoint", rank_points=3, rank_seed=1)


@pytest.fixture(scope="session")
def exact_kernel():
    return NicholsKernel(rank_method="exact")


@pytest.fixture(scope="session")
def roots(kernel):
    return RootSystem(kernel=kernel, height_convention="characteristic-zero")


@pytest.fixture
def rng():
    return random.Random(1)


@pytest.fixture
def database():
    manager = DatabaseManager("sqlite:///:memory:")
    manager.create_tables()
    return manager


@pytest.fixture
def reports(database):
    return ReportService(database)
