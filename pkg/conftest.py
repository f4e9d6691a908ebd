import pytest


def pytest_addoption(parser):
    parser.addoption('--run-slow', action='store_true', default=False, help='run the desk-scale searches')


# pragma: no cover
def pytest_runtest_setup(item):
    if item.get_closest_marker('slow') is not None and not item.config.getoption('--run-slow'):
        pytest.skip('slow test, pass --run-slow to run it')

    if item.get_closest_marker('networkx') is not None:
        try:
            import networkx  # noqa: F401
        except ImportError:
            pytest.skip('test requires networkx')

    if item.get_closest_marker('jsonschema') is not None:
        try:
            import jsonschema  # noqa: F401
        except ImportError:
            pytest.skip('test requires jsonschema')


@pytest.hookimpl(trylast=True)
def pytest_collection_modifyitems(session, config, items):
    items[:] = sorted(items, key=lambda x: x.fspath)
