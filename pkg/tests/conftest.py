import random

import pytest

from udlrc import LocalityClass, LocalitySpec, build_code, validate_spec

# The [8, 4] two-class workhorse over GF(5^5): one (r=2, delta=3) group and
# one (r=3, delta=2) group, precode length 5.
REF_SPEC = LocalitySpec(
    classes=(LocalityClass.from_groups(2, 3, 1), LocalityClass.from_groups(3, 2, 1)),
    k=4,
    q=5,
    t=5,
)

# Same layout at full precode dimension k = n_gab = 5.
REF_FULL_SPEC = LocalitySpec(classes=REF_SPEC.classes, k=5, q=5, t=5)

# One class, two groups: exercises multi-step cover chains.
SINGLE_SPEC = LocalitySpec(
    classes=(LocalityClass.from_groups(2, 2, 2),), k=3, q=5, t=4
)

# Three classes over GF(7^6), ordered condition satisfied.
THREE_SPEC = LocalitySpec(
    classes=(
        LocalityClass.from_groups(1, 3, 1),
        LocalityClass.from_groups(2, 2, 1),
        LocalityClass.from_groups(3, 2, 1),
    ),
    k=5,
    q=7,
    t=6,
)

# REF with its classes swapped: builds fine, ordered condition fails.
REVERSED_SPEC = LocalitySpec(
    classes=(LocalityClass.from_groups(3, 2, 1), LocalityClass.from_groups(2, 3, 1)),
    k=4,
    q=5,
    t=5,
)


@pytest.fixture(scope="session")
def ref_instance():
    return build_code(validate_spec(REF_SPEC))


@pytest.fixture(scope="session")
def ref_full_instance():
    return build_code(validate_spec(REF_FULL_SPEC))


@pytest.fixture(scope="session")
def single_instance():
    return build_code(validate_spec(SINGLE_SPEC))


@pytest.fixture(scope="session")
def three_instance():
    return build_code(validate_spec(THREE_SPEC))


@pytest.fixture(scope="session")
def reversed_instance():
    return build_code(validate_spec(REVERSED_SPEC))


@pytest.fixture(scope="session")
def all_instances(ref_instance, ref_full_instance, single_instance, three_instance):
    return [ref_instance, ref_full_instance, single_instance, three_instance]


@pytest.fixture
def rng():
    return random.Random(20260810)
