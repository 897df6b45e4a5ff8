from __future__ import annotations

import pytest

from homakivis import GenConfig, random_multiplicative_hom_algebra

# Feasible exact twist orders per dimension for signed permutations.
ORDERS = {2: (1, 2, 4), 3: (1, 2, 3, 4, 6), 4: (1, 2, 3, 4, 6), 5: (1, 2, 3, 4, 5, 6)}


def suite_configs(count: int = 100) -> list[GenConfig]:
    configs = []
    for i in range(count):
        dim = 2 + (i % 4)
        order = ORDERS[dim][i % len(ORDERS[dim])]
        configs.append(GenConfig(dim=dim, seed=1000 + i, coeff_bound=3,
                                 twist_order=order))
    return configs


@pytest.fixture(scope="session")
def suite100():
    """The 100 seeded multiplicative instances shared by the theorem suites."""
    return [random_multiplicative_hom_algebra(cfg) for cfg in suite_configs()]
