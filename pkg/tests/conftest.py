import pytest
from hypothesis import settings

from milnor.catalog import shipped_catalog
from milnor.invariants import analyze_hypersurface

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

LEMNISCATE = "(x^2+y^2)^2-2*(x^2-y^2)*z^2"
CARDIOID = "(x^2+y^2+x*z)^2-(x^2+y^2)*z^2"


@pytest.fixture(scope="session")
def catalog():
    return shipped_catalog("examples")


@pytest.fixture(scope="session")
def catalog_reports(catalog):
    """Analysis of every fast catalog entry, computed once per session."""
    return {e.name: analyze_hypersurface(e.parse()) for e in catalog}
