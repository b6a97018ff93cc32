import itertools

import numpy as np
import pytest

from quospec import Graph, is_connected
from quospec import families

_CRITERIA = {}


def all_connected_labeled(n):
    """Every connected graph on vertex set 0..n-1 (filter over all edge subsets)."""
    pairs = list(itertools.combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        g = Graph.from_edges(n, [p for k, p in enumerate(pairs) if mask >> k & 1])
        if is_connected(g):
            yield g


def atlas_connected(orders):
    import networkx as nx

    for h in nx.graph_atlas_g():
        if h.number_of_nodes() in orders and nx.is_connected(h):
            yield Graph(nx.to_numpy_array(h, dtype=int))


def sampled_connected_labeled(n, count, seed):
    rng = np.random.default_rng(seed)
    pairs = list(itertools.combinations(range(n), 2))
    out = []
    while len(out) < count:
        keep = rng.random(len(pairs)) < 0.5
        g = Graph.from_edges(n, [p for p, k in zip(pairs, keep) if k])
        if is_connected(g):
            out.append(g)
    return out


# Frozen fixture numberings: see quospec.families.
NAMED = {
    "K2": lambda: families.complete(2),
    "K3": lambda: families.complete(3),
    "K4": lambda: families.complete(4),
    "P3": lambda: families.path(3),
    "C4": lambda: families.cycle(4),
    "C5": lambda: families.cycle(5),
    "C6": lambda: families.cycle(6),
    "K33": lambda: families.complete_bipartite(3, 3),
    "K23": lambda: families.complete_bipartite(2, 3),
    "petersen": families.petersen,
    "Q3": lambda: families.hypercube(3),
    "Hb1": lambda: families.subdivided_complete(4),
    "W4": lambda: families.wheel(4),
    "cone_C5": lambda: families.cone(families.cycle(5)),
    "cone_petersen": lambda: families.cone(families.petersen()),
}


@pytest.fixture(params=sorted(NAMED))
def named_graph(request):
    return request.param, NAMED[request.param]()


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(label): acceptance criterion")


def pytest_runtest_makereport(item, call):
    """Record acceptance outcomes; a criterion split over several tests passes only if all do."""
    marker = item.get_closest_marker("criterion")
    if marker and call.when == "call":
        label = marker.args[0]
        ok = call.excinfo is None and _CRITERIA.get(label, "PASS") == "PASS"
        _CRITERIA[label] = "PASS" if ok else "FAIL"


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for label in sorted(_CRITERIA, key=lambda s: int(s.split(".")[0])):
        terminalreporter.write_line(f"{_CRITERIA[label]}  {label}")
