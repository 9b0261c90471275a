import pytest
from hypothesis import strategies as st

from bousfield import INF, OMEGA, IndexSet, J, K, T
from bousfield.lawcheck import SMALL_GRID, enumerate_grid


@pytest.fixture(scope="session")
def grid():
    return enumerate_grid(SMALL_GRID)


def probe_points(*sets, extra=0):
    horizon = max(s.threshold + s.period for s in sets) + extra
    return [*range(horizon + 1), INF]


@st.composite
def index_sets(draw, max_threshold=6, periods=(1, 2, 3, 4, 6)):
    threshold = draw(st.integers(0, max_threshold))
    bits = draw(st.lists(st.booleans(), min_size=threshold, max_size=threshold))
    period = draw(st.sampled_from(periods))
    residues = draw(st.sets(st.integers(0, period - 1)))
    infinity = draw(st.booleans())
    return IndexSet.build(bits, period, residues, infinity)


small_sets = st.lists(st.integers(0, 6), max_size=4).map(lambda xs: IndexSet.of(*xs))
cosmall_sets = st.tuples(index_sets(), st.integers(0, 7)).map(
    lambda p: p[0] | IndexSet.interval(p[1], INF))
ext_nats = st.one_of(st.integers(0, 7), st.just(INF))
omega_nats = st.one_of(st.integers(0, 7), st.sampled_from([OMEGA, INF]))

elements = st.one_of(
    st.builds(T, ext_nats, cosmall_sets),
    st.builds(J, omega_nats, small_sets),
    st.builds(K, index_sets()),
)
