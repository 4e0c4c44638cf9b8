import random

import pytest

from rbmzv import ShaAlgebra
from rbmzv.letters import COMPOSITION


def random_sha_element(alg, rng, max_terms=3, max_payload=4, max_tail=2):
    """Small random element of Sha over composition-style letters."""
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        head = rng.choice([None, rng.randint(1, max_payload)])
        tail = tuple(
            rng.randint(1, max_payload) for _ in range(rng.randint(0, max_tail))
        )
        terms[(head, tail)] = terms.get((head, tail), 0) + rng.randint(-3, 3)
    return alg.element(terms)


@pytest.fixture
def rng():
    return random.Random(20240817)


@pytest.fixture
def sha_weight1():
    return ShaAlgebra(COMPOSITION, 1)
