import pkg_resources
import pytest

import boxmis


def fixture_path(name):
    return pkg_resources.resource_filename('boxmis', 'data/fixtures/%s.arr' % name)


def load_fixture(name):
    return boxmis.Arrangement.from_file(fixture_path(name))


@pytest.fixture
def arrangement():
    return load_fixture


@pytest.fixture
def rng():
    return boxmis.RandomSource(20240601)


@pytest.fixture
def hub_graph():
    """ the five-square arrangement: two hubs, three leaves """
    return boxmis.OrderedGraph.from_edge_mask(5, 0x7F)
