import pytest

import hallkit as hk


@pytest.fixture(scope="session")
def hall2():
    return hk.materialize_hall(2)


@pytest.fixture(scope="session")
def hall3():
    return hk.materialize_hall(3)


@pytest.fixture(scope="session")
def refl2():
    return hk.materialize_reflexive(2)


@pytest.fixture(scope="session")
def refl3():
    return hk.materialize_reflexive(3)


@pytest.fixture(scope="session")
def full2():
    """The monoid of all 16 binary relations on 2 points, in code order."""
    return hk.semigroup_of_relations(list(hk.all_relations(2)))
