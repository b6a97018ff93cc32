import itertools

from hypothesis import strategies as st

from quospec import Graph, is_connected


@st.composite
def graphs(draw, min_n=1, max_n=7, connected=False):
    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    g = Graph.from_edges(n, [p for p, k in zip(pairs, keep) if k])
    if connected and not is_connected(g):
        # Chain in the path 0-1-...-(n-1) to force connectivity while keeping the draw.
        edges = set(g.edges()) | {(i, i + 1) for i in range(n - 1)}
        g = Graph.from_edges(n, sorted(edges))
    return g


def connected_graphs(max_n=7):
    return graphs(max_n=max_n, connected=True)
