import functools

import pytest

from boroczky.configuration import build_config, incidence_report
from boroczky.elliptic import build_elliptic_config
from boroczky.fatpoints import FatPointScheme, boroczky_scheme

ACCEPTANCE_LINES: list[str] = []


def pytest_addoption(parser):
    parser.addoption("--runslow", action="store_true", default=False, help="run slow exact computations")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--runslow"):
        return
    skip = pytest.mark.skip(reason="slow; use --runslow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@functools.lru_cache(maxsize=None)
def config_for(n):
    return build_config(n)


@functools.lru_cache(maxsize=None)
def report_for(n):
    return incidence_report(config_for(n))


@functools.lru_cache(maxsize=None)
def scheme_for(n) -> FatPointScheme:
    # cached so symbolic pieces are shared between tests
    return boroczky_scheme(config_for(n))


@functools.lru_cache(maxsize=None)
def elliptic_config():
    return build_elliptic_config()


@functools.lru_cache(maxsize=None)
def elliptic_scheme() -> FatPointScheme:
    cfg = elliptic_config()
    return FatPointScheme(cfg.table.curve.field, cfg.triple_points, "elliptic:E6")


@pytest.fixture
def b12():
    return config_for(12)
