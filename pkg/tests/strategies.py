from fractions import Fraction

from hypothesis import strategies as st

from wefsub import Allocation, Instance


@st.composite
def weight_vectors(draw, n):
    # One shared denominator keeps the integerized quotas small.
    d = draw(st.sampled_from([1, 1, 2, 3, 4]))
    return [Fraction(k, d) for k in draw(st.lists(st.integers(1, 6), min_size=n, max_size=n))]


@st.composite
def instances(draw, valuation_class="general", max_agents=4, max_items=6):
    n = draw(st.integers(1, max_agents))
    m = draw(st.integers(0, max_items))
    w = draw(weight_vectors(n))
    if valuation_class == "identical":
        row = draw(st.lists(st.integers(0, 9), min_size=m, max_size=m))
        rows = [row] * n
    else:
        top = 1 if valuation_class == "binary" else 9
        rows = draw(st.lists(st.lists(st.integers(0, top), min_size=m, max_size=m), min_size=n, max_size=n))
    return Instance(w, rows, valuation_class)


@st.composite
def allocations(draw, n, m):
    owners = draw(st.lists(st.integers(0, n - 1), min_size=m, max_size=m))
    return Allocation([[o for o, i in enumerate(owners) if i == a] for a in range(n)])


@st.composite
def instance_with_allocation(draw, valuation_class="general", max_agents=4, max_items=6):
    inst = draw(instances(valuation_class, max_agents, max_items))
    return inst, draw(allocations(inst.n, inst.m))
