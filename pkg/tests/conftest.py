from hypothesis import strategies as st

from psforest.forest import PathStarForest
from psforest.graph import Graph


@st.composite
def graphs(draw, min_n: int = 0, max_n: int = 10):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [e for e, keep in zip(pairs, mask) if keep])


@st.composite
def forests(draw, max_components: int = 3, max_path: int = 6, max_star: int = 6):
    k = draw(st.integers(1, max_components))
    paths = draw(st.lists(st.integers(2, max_path), max_size=k))
    stars = draw(st.lists(st.integers(3, max_star), min_size=0 if paths else 1, max_size=k - len(paths) or 1))
    return PathStarForest(tuple(paths), tuple(stars))
