import hypothesis.strategies as st


@st.composite
def weights(draw, max_rank=3, min_coord=-4, max_coord=4):
    n = draw(st.integers(1, max_rank))
    return tuple(
        draw(st.lists(st.integers(min_coord, max_coord), min_size=n, max_size=n))
    )


@st.composite
def dominant_weights(draw, max_rank=3, max_coord=3):
    n = draw(st.integers(1, max_rank))
    return tuple(
        draw(st.lists(st.integers(0, max_coord), min_size=n, max_size=n))
    )


@st.composite
def strict_weights(draw, max_rank=3, max_coord=3):
    n = draw(st.integers(1, max_rank))
    return tuple(
        draw(st.lists(st.integers(1, max_coord), min_size=n, max_size=n))
    )


@st.composite
def weight_pairs(draw, max_rank=3, min_coord=-4, max_coord=4):
    n = draw(st.integers(1, max_rank))
    mk = lambda: tuple(
        draw(st.lists(st.integers(min_coord, max_coord), min_size=n, max_size=n))
    )
    return mk(), mk()
