import pytest
from hypothesis import HealthCheck, settings

# Shared-box timing is jittery; property tests should never fail on deadlines.
settings.register_profile(
    "strreg",
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("strreg")


@pytest.fixture(scope="session")
def english_like_1e6():
    """One million bytes over 26 letters, shared by benchmark-flavored tests."""
    from strreg.text import GenSpec, gen_text

    return gen_text(GenSpec(alphabet_size=26, length=10**6, seed=2026))
