import pytest

from hookwalk import RandomStream, sample_syt, simulate_stream, staircase, tableau_to_word


@pytest.fixture(scope="session", autouse=True)
def warm_kernels():
    """Compile (or load from cache) every jit kernel before timed tests."""
    rng = RandomStream(0)
    t = sample_syt(staircase(2), rng, engine="auto")
    word = tableau_to_word(t, engine="auto")
    simulate_stream(2, word, engine="auto")
    from hookwalk.sampling import corner_distribution_empirical

    corner_distribution_empirical(staircase(2), 10, rng, engine="auto")
