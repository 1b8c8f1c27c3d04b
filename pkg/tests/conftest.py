import json
import pathlib

import pytest

from lpa_ideals import FieldSpec, graph_from_obj

FIXTURES = pathlib.Path(__file__).resolve().parent.parent / "fixtures"


def load_graph(name):
    return graph_from_obj(json.loads((FIXTURES / f"{name}.json").read_text()))


@pytest.fixture(scope="session")
def f5():
    return FieldSpec(5)


@pytest.fixture(scope="session")
def g1():
    return load_graph("g1")


@pytest.fixture(scope="session")
def g2():
    return load_graph("g2")


@pytest.fixture(scope="session")
def g3():
    return load_graph("g3")


@pytest.fixture(scope="session")
def g4():
    return load_graph("g4")


@pytest.fixture(scope="session")
def g5():
    return load_graph("g5")


@pytest.fixture(scope="session")
def g6():
    return load_graph("g6")


@pytest.fixture(scope="session")
def g7():
    return load_graph("g7")


@pytest.fixture(scope="session")
def all_graphs(g1, g2, g3, g4, g5, g6, g7):
    return {"g1": g1, "g2": g2, "g3": g3, "g4": g4, "g5": g5,
            "g6": g6, "g7": g7}
