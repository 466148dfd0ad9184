from hypothesis import strategies as st

from domcount.scanning import graph_from_edge_mask


@st.composite
def labeled_graphs(draw, min_n: int = 0, max_n: int = 8):
    """Uniform-ish random labeled graph via a random edge mask."""
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    mask = draw(st.integers(min_value=0, max_value=(1 << (n * (n - 1) // 2)) - 1))
    return graph_from_edge_mask(n, mask)
