import pytest

from glsuper.polytope import count_lattice_points, polytope_denominator


@pytest.fixture(scope="session")
def counts_k2():
    """Lattice counts for k=2, d = 1..160: enough data to pin the period-32 fit."""
    top = (2 * 2 + 1) * polytope_denominator(2)
    return {d: count_lattice_points(2, d) for d in range(1, top + 1)}
