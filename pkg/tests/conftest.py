"""Shared test configuration and fixtures."""

import pytest

from rectakit._core.configuration import KitConfiguration, Limits
from rectakit.gf2code import LinearCode, golay23, golay23_even, golay24, repetition_code, zero_code
from rectakit.graph import CayleyGraph, ExplicitGraph, complete, complete_multipartite, coset_graph, hypercube, petersen, triangular
from rectakit.permgroup import PermGroup, registry_group


@pytest.fixture
def config() -> KitConfiguration:
    """Default configuration for testing."""
    return KitConfiguration()


@pytest.fixture
def tight_config() -> KitConfiguration:
    """Configuration with small size guards, for exercising the limit errors."""
    return KitConfiguration(
        limits=Limits(
            max_enumeration_dimension=4,
            max_coset_dimension=6,
            max_explicit_quotient_dimension=6,
            max_isomorphism_vertices=16,
            max_brute_force_vertices=5,
            max_materialized_action=64,
            max_cube_dimension=6,
        )
    )


@pytest.fixture(scope="session")
def g24() -> LinearCode:
    """The extended binary Golay code."""
    return golay24()


@pytest.fixture(scope="session")
def g23() -> LinearCode:
    """The binary Golay code."""
    return golay23()


@pytest.fixture(scope="session")
def g23_even() -> LinearCode:
    """The even-weight subcode of the binary Golay code."""
    return golay23_even()


@pytest.fixture
def cube5() -> CayleyGraph:
    return hypercube(5)


@pytest.fixture
def folded7() -> CayleyGraph:
    """The folded 7-cube as the coset graph of the repetition code."""
    return coset_graph(repetition_code(7))


@pytest.fixture
def zero6() -> LinearCode:
    return zero_code(6)


@pytest.fixture
def k4() -> ExplicitGraph:
    return complete(4)


@pytest.fixture
def k42() -> ExplicitGraph:
    """K_{4[2]}, isomorphic to the halved 4-cube."""
    return complete_multipartite(4, 2)


@pytest.fixture
def t5() -> ExplicitGraph:
    return triangular(5)


@pytest.fixture
def petersen_graph() -> ExplicitGraph:
    return petersen()


@pytest.fixture(scope="session")
def m24() -> PermGroup:
    """M24 from the verified registry."""
    return registry_group("M24")


@pytest.fixture(scope="session")
def m23() -> PermGroup:
    """M23 from the verified registry."""
    return registry_group("M23")
