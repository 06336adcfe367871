import pytest

from subcensus import catalog, config


@pytest.fixture(autouse=True)
def fresh_settings(monkeypatch):
    """Every test starts from default settings, unaffected by the environment"""
    for var in ("SUBCENSUS_MAX_ORDER", "SUBCENSUS_LOG", "SUBCENSUS_WORKERS", "SUBCENSUS_EXHAUSTIVE_ASSOC"):
        monkeypatch.delenv(var, raising=False)
    config.reset_settings()
    yield
    config.reset_settings()


@pytest.fixture(scope="session")
def catalog_reports():
    """Brute-force verification of every catalog entry, computed once"""
    return catalog.verify_catalog(workers=1)
