import pytest

from metricdim import all_pairs_distances, cayley_graph, complete_graph, cycle_graph, path_graph


@pytest.fixture(scope="session")
def cay8():
    return all_pairs_distances(cayley_graph(8, 3))


@pytest.fixture(scope="session")
def c8():
    return all_pairs_distances(cycle_graph(8))


@pytest.fixture(scope="session")
def k3():
    return all_pairs_distances(complete_graph(3))


@pytest.fixture(scope="session")
def k4():
    return all_pairs_distances(complete_graph(4))


@pytest.fixture(scope="session")
def p5():
    return all_pairs_distances(path_graph(5))


def pytest_terminal_summary(terminalreporter):
    try:
        import test_acceptance
    except ImportError:
        return
    if test_acceptance.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in test_acceptance.RESULTS:
            terminalreporter.write_line(line)
