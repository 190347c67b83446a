from hypothesis import settings, strategies as st

from novertex.partitions import enumerate_partitions

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


def partitions(max_size: int = 10):
    return st.integers(0, max_size).flatmap(lambda n: st.sampled_from(enumerate_partitions(n)))
