from fractions import Fraction

import pytest
from hypothesis import given

from wefsub import Allocation, Instance, allocate_identical
from wefsub.core import derived
from wefsub.envy_graph import check_wef_xy
from wefsub.identical import ClassMismatch, identical_steps, subsidy_bound
from wefsub.oracle import generate_tight
from known_instances import SEVEN_HALVES
from strategies import instances

F = Fraction


def test_seven_halves():
    sol = allocate_identical(SEVEN_HALVES)
    assert sol.allocation == Allocation([[], [0, 1, 2]])
    assert sol.subsidies == (F(6, 7), 0)
    assert sol.wef01


def test_equal_weights_split_evenly():
    sol = allocate_identical(Instance([1, 1], [[1, 1], [1, 1]]))
    assert sorted(len(b) for b in sol.allocation.bundles) == [1, 1]
    assert sol.subsidies == (0, 0)


def test_ties_go_to_the_higher_index():
    steps = list(identical_steps(Instance([1, 1], [[1, 1], [1, 1]])))
    assert steps[0] == Allocation([[], [0]])


def test_lower_bound_family_small():
    inst = generate_tight("surplus", [1, 2])
    assert inst.m == 2
    sol = allocate_identical(inst)
    assert [len(b) for b in sol.allocation.bundles] == [0, 2]
    assert sol.total_subsidy == 1


@pytest.mark.parametrize("weights, value", [([1, 2, 3], 1), ([2, 2, 5], 3), ([1, 1, 1, 4], 2)])
def test_lower_bound_family_is_tight(weights, value):
    inst = generate_tight("surplus", weights, value=value)
    assert allocate_identical(inst).total_subsidy == (len(weights) - 1) * value


def test_rejects_non_identical():
    with pytest.raises(ClassMismatch):
        allocate_identical(Instance([1, 2], [[1, 2], [2, 1]]))


@given(instances("identical", max_agents=5, max_items=8))
def test_bounds_and_wef01(inst):
    sol = allocate_identical(inst)
    V = derived(inst).V
    assert sol.certified_wef and sol.wef01
    assert all(s <= V for s in sol.subsidies)
    assert sol.total_subsidy <= subsidy_bound(inst) == (inst.n - 1) * V


@given(instances("identical", max_agents=5, max_items=8))
def test_every_prefix_is_wef01(inst):
    for partial in identical_steps(inst):
        assert check_wef_xy(inst, partial, 0, 1)
