import pytest

from qalink import bundled_corpus_path, load_corpus


@pytest.fixture(scope="session")
def qcache():
    """Skein memo shared across the whole test session.

    q_polynomial is pure, so reusing subdiagram results across tests only
    saves time; every test still checks real values.
    """
    return {}


@pytest.fixture(scope="session")
def corpus():
    entries = load_corpus(bundled_corpus_path())
    assert len(entries) >= 40
    return entries


@pytest.fixture(scope="session")
def corpus_by_name(corpus):
    return {e.name: e for e in corpus}
