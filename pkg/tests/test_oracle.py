from fractions import Fraction

import pytest
from hypothesis import given, settings

from wefsub import Allocation, Instance
from wefsub.envy_graph import min_subsidies
from wefsub.oracle import (
    InstanceTooLarge,
    all_allocations,
    enumerate_min_subsidy,
    enumerate_permutations,
    generate_tight,
    tight_value,
    worst_allocation,
)
from wefsub.pipeline import allocate
from known_instances import HEAVY_TAIL, HEAVY_TAIL_SPLIT
from strategies import instances

F = Fraction


def test_enumeration_order_is_item_major():
    got = [a.bundles for a in all_allocations(2, 2)]
    assert got == [((0, 1), ()), ((0,), (1,)), ((1,), (0,)), ((), (0, 1))]


def test_heavy_tail_optimum():
    best, witness = enumerate_min_subsidy(HEAVY_TAIL)
    assert witness == Allocation([[], [0, 1]])
    assert best == sum(min_subsidies(HEAVY_TAIL, witness)) == F(6, 5)


def test_no_items_costs_nothing():
    assert enumerate_min_subsidy(Instance([1, 3], [[], []]))[0] == 0


def test_single_agent_costs_nothing():
    assert enumerate_min_subsidy(Instance([2], [[4, 1]]))[0] == 0


def test_size_guard():
    with pytest.raises(InstanceTooLarge):
        enumerate_min_subsidy(Instance([1] * 4, [[1] * 11] * 4))


def test_permutations_of_heavy_tail_bundles():
    assert enumerate_permutations(HEAVY_TAIL, HEAVY_TAIL_SPLIT.bundles) == [((0, 1), False), ((1, 0), False)]


def test_permutations_single_agent():
    assert enumerate_permutations(Instance([1], [[3]]), [(0,)]) == [((0,), True)]


@given(instances("identical", max_agents=4, max_items=5))
def test_identical_permutations_all_wefable(inst):
    bundles = [[o for o in range(inst.m) if o % inst.n == i] for i in range(inst.n)]
    assert all(ok for _, ok in enumerate_permutations(inst, bundles))


def test_worst_family_value():
    inst = generate_tight("uniform", [1, 2], items=3)
    assert sum(min_subsidies(inst, worst_allocation(inst))) == tight_value("uniform", inst) == 6


def test_single_item_family_at_small_eps():
    inst = generate_tight("single-item", [1, 2, 3], value=5)
    best, witness = enumerate_min_subsidy(inst)
    assert witness == Allocation([[0], [], []])
    assert best == tight_value("single-item", inst) == 5 * (5 - F(1, 100))


def test_two_fans_family():
    inst = generate_tight("two-fans", [1, 2, 3])
    assert enumerate_min_subsidy(inst)[0] == tight_value("two-fans", inst) == 2


def test_equal_split_family():
    inst = generate_tight("surplus", [1, 1])
    assert inst.m == 1
    assert tight_value("surplus", inst) == 1


@pytest.mark.parametrize(
    "family, weights, kwargs",
    [
        ("surplus", [1, "3/2"], {}),
        ("single-item", [1], {}),
        ("single-item", [1, 2], {"eps": 1}),
        ("two-fans", [1], {}),
        ("favoured", [1, 2], {"agent": 0}),
        ("favoured", [2, 3], {"agent": 1}),
        ("uniform", [0, 1], {}),
        ("nope", [1, 2], {}),
    ],
)
def test_generator_rejects_bad_parameters(family, weights, kwargs):
    with pytest.raises(ValueError):
        generate_tight(family, weights, **kwargs)


@settings(max_examples=60)
@given(instances(max_agents=3, max_items=4))
def test_algorithms_never_beat_the_optimum(inst):
    best, witness = enumerate_min_subsidy(inst)
    assert best == sum(min_subsidies(inst, witness))
    assert allocate(inst, "general").total_subsidy >= best
