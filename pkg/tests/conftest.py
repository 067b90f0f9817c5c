import pytest
from hypothesis import strategies as st

from geb.graphs import Graph, pair_count

DATA_DIR_NAME = "data"


@pytest.fixture(scope="session")
def data_dir(tmp_path_factory):
    import pathlib

    return pathlib.Path(__file__).parent / DATA_DIR_NAME


@st.composite
def random_graphs(draw, max_n=12, min_n=1):
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    adj = draw(st.integers(min_value=0, max_value=(1 << pair_count(n)) - 1))
    return Graph(n, adj)
