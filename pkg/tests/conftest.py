import numpy as np
import pytest

from restalg.corpus import default_corpus, restricted_of

SEED = 20260808


def pytest_report_header(config):
    return f"restalg random seed: {SEED}"


@pytest.fixture(scope="session")
def seed():
    return SEED


@pytest.fixture(scope="session")
def rng():
    return np.random.default_rng(SEED)


@pytest.fixture(scope="session")
def corpus():
    """Base corpus members as (label, semigroup) pairs."""
    return default_corpus(include_restricted=False)


@pytest.fixture(scope="session")
def full_corpus():
    """Base members plus their zero-adjoined variants."""
    return default_corpus(include_restricted=True)


@pytest.fixture(scope="session")
def corpus_restricted():
    """(label, RestrictedSemigroup) for every base member."""
    return [(label, restricted_of(label)) for label, _ in default_corpus(False)]
