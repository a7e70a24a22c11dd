import pytest

from reconkit.graphcore import all_graphs, graph, path


@pytest.fixture(scope="session")
def prism():
    """The triangular prism: two triangles joined by a perfect matching."""
    return graph(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5),
                     (0, 3), (1, 4), (2, 5)])


@pytest.fixture(scope="session")
def paw():
    return graph(4, [(0, 1), (1, 2), (0, 2), (2, 3)])


@pytest.fixture(scope="session")
def bowtie():
    return graph(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)])


@pytest.fixture(scope="session")
def k2():
    return path(2)


@pytest.fixture(scope="session")
def corpus5():
    """All graphs with at most 5 vertices."""
    return all_graphs(5)


@pytest.fixture(scope="session")
def corpus6():
    """All graphs with at most 6 vertices."""
    return all_graphs(6)
