import pytest


def pytest_addoption(parser):
    parser.addoption("--runlong", action="store_true", default=False, help="run E7/E8 computations")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--runlong"):
        return
    skip = pytest.mark.skip(reason="needs --runlong")
    for item in items:
        if "long" in item.keywords:
            item.add_marker(skip)
