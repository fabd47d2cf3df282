import itertools

from hypothesis import strategies as st

from kminors.graph import Bipartition, Graph


@st.composite
def graphs(draw, min_n=0, max_n=9):
    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph(range(n), [p for p, k in zip(pairs, keep) if k])


@st.composite
def bipartite_graphs(draw, max_a=7, max_b=7, min_deg_a=0):
    n_b = draw(st.integers(max(1, min_deg_a), max_b))
    n_a = draw(st.integers(1, max_a))
    a = list(range(n_a))
    b = list(range(n_a, n_a + n_b))
    edges = set()
    for x in a:
        nb = draw(st.sets(st.sampled_from(b), min_size=min_deg_a, max_size=n_b))
        edges |= {(x, y) for y in nb}
    return Graph(a + b, edges), Bipartition(a, b)


def k_minus(n, missing):
    return Graph(range(n), [e for e in itertools.combinations(range(n), 2) if e not in missing])
