import pytest


def pytest_addoption(parser):
    parser.addoption("--runslow", action="store_true", default=False,
                     help="run the long full-grid reproduction checks (tens of minutes)")
    parser.addoption("--runhuge", action="store_true", default=False,
                     help="run the multi-hour n=8 reproduction checks")


def pytest_collection_modifyitems(config, items):
    skips = {}
    if not config.getoption("--runslow"):
        skips["slow"] = pytest.mark.skip(reason="needs --runslow")
    if not config.getoption("--runhuge"):
        skips["huge"] = pytest.mark.skip(reason="needs --runhuge")
    for item in items:
        for name, marker in skips.items():
            if name in item.keywords:
                item.add_marker(marker)
