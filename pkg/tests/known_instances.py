"""Small hand-checked instances shared by the test modules."""

from wefsub import Allocation, Instance

# No bundle permutation of ({o1}, {o2}) is WEF-able.
HEAVY_TAIL = Instance([1, 10], [[5, 7], [10, 8]])
HEAVY_TAIL_SPLIT = Allocation([[0], [1]])
HEAVY_TAIL_SWAPPED = Allocation([[1], [0]])

# Weights 2 and 3, each agent keeps one item; the heavier agent needs 2.
TWO_THREE = Instance([2, 3], [[8, 10], [6, 7]])
TWO_THREE_SPLIT = Allocation([[0], [1]])

# Identical unit items with weights 1 and 7/2.
SEVEN_HALVES = Instance([1, "7/2"], [[1, 1, 1], [1, 1, 1]], "identical")

# Binary: the light agent likes all five items, the heavy one the first four.
BINARY_FIVE = Instance([1, 2], [[1, 1, 1, 1, 1], [1, 1, 1, 1, 0]], "binary")
