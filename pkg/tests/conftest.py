import itertools

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from imbalance.poset import make_poset

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@st.composite
def posets(draw, min_n=0, max_n=7):
    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    bits = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return make_poset(n, [pr for pr, b in zip(pairs, bits) if b])


@st.composite
def labelled_posets(draw, min_n=0, max_n=7):
    P = draw(posets(min_n, max_n))
    omega = draw(st.permutations(range(1, P.n + 1)))
    return P, tuple(omega)


@st.composite
def small_partitions(draw, max_n=10):
    from imbalance.shapes import partitions

    n = draw(st.integers(0, max_n))
    return draw(st.sampled_from(list(partitions(n))))
