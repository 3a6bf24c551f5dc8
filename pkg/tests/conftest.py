import os

import pytest

from src.builders.builders_service import BuildersService


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: builds 120-cell scale complexes")
    config.addinivalue_line("markers", "deep: long-running, needs CELLFORGE_DEEP=true")


def pytest_collection_modifyitems(config, items):
    if os.getenv("CELLFORGE_DEEP", "False").lower() == "true":
        return
    skip = pytest.mark.skip(reason="set CELLFORGE_DEEP=true to run")
    for item in items:
        if "deep" in item.keywords:
            item.add_marker(skip)


@pytest.fixture(autouse=True)
def output_dir(tmp_path, monkeypatch):
    out = tmp_path / "out"
    out.mkdir()
    monkeypatch.setattr("src.config.AppConfig.OUTPUT_DIR", str(out))
    return out


@pytest.fixture
def dodecahedron():
    return BuildersService.build_dodecahedron()


@pytest.fixture(scope="session")
def cell120():
    return BuildersService.build_120cell()
