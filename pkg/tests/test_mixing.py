import math
from itertools import combinations

import numpy as np
import pytest
from hypothesis import assume, given, settings, strategies as st

from assortbounds.errors import (
    DegenerateDenominatorError,
    DegenerateMarginalError,
    DegeneratePartitionError,
    EmptyGraphError,
)
from assortbounds.graph import EdgeCounts, MetadataAssignment, edge_counts
from assortbounds.mixing import (
    ContingencyTable,
    assortativity_from_contingency,
    assortativity_from_counts,
    assortativity_long_form,
    contingency_from_counts,
    delta_profile,
    freeman_segregation,
    newman_naive_min,
    phi_bounds,
    phi_coefficient,
    phi_determinant_form,
)


def test_contingency_examples():
    t = contingency_from_counts(EdgeCounts(1, 4, 1))
    assert t.e11 == pytest.approx(1 / 6) and t.e00 == pytest.approx(1 / 6)
    assert t.e10 == pytest.approx(1 / 3) and t.e01 == pytest.approx(1 / 3)
    assert t.a1 == pytest.approx(0.5)
    t = contingency_from_counts(EdgeCounts(31, 63, 17))
    assert t.a1 == pytest.approx((2 * 31 + 63) / 222)
    assert t.a1 == pytest.approx(0.5631, abs=5e-5)
    assert t.a1 == t.b1
    t = contingency_from_counts(EdgeCounts(0, 7, 0))
    assert (t.e10, t.e01, t.a1) == (0.5, 0.5, 0.5)
    with pytest.raises(EmptyGraphError):
        contingency_from_counts(EdgeCounts(0, 0, 0))


def test_phi_examples():
    assert phi_coefficient(ContingencyTable(0.5, 0, 0, 0.5)) == pytest.approx(1)
    assert phi_coefficient(ContingencyTable(0.25, 0.25, 0.25, 0.25)) == pytest.approx(0)
    assert phi_coefficient(ContingencyTable(0.3, 0.2, 0.2, 0.3)) == pytest.approx(0.2)
    with pytest.raises(DegenerateMarginalError):
        phi_coefficient(ContingencyTable(1.0, 0, 0, 0))


def test_phi_bounds_examples():
    assert phi_bounds(0.5, 0.5, 0.5, 0.5) == pytest.approx((-1, 1))
    assert phi_bounds(0.25, 0.75, 0.25, 0.75) == pytest.approx((-1 / 3, 1))
    assert phi_bounds(0.2, 0.8, 0.5, 0.5) == pytest.approx((-0.5, 0.5))
    with pytest.raises(DegenerateMarginalError):
        phi_bounds(0, 1, 0.5, 0.5)


def test_assortativity_examples():
    assert assortativity_from_contingency(ContingencyTable(0.5, 0, 0, 0.5)) == pytest.approx(1)
    assert assortativity_from_contingency(ContingencyTable(0, 0.5, 0.5, 0)) == pytest.approx(-1)
    t = contingency_from_counts(EdgeCounts(31, 63, 17))
    assert assortativity_from_contingency(t) == pytest.approx(-0.153, abs=5e-4)
    assert assortativity_from_counts(EdgeCounts(31, 63, 17)) == pytest.approx(-0.153, abs=5e-4)
    assert assortativity_from_counts(EdgeCounts(25, 1404, 75830)) == pytest.approx(0.025, abs=5e-4)
    assert assortativity_from_counts(EdgeCounts(122, 729, 78002)) == pytest.approx(0.246, abs=5e-4)
    assert assortativity_from_counts(EdgeCounts(2, 0, 2)) == 1.0


@pytest.mark.parametrize("counts", [(5, 0, 0), (0, 0, 3)])
def test_single_class_edge_set_is_undefined(counts):
    ec = EdgeCounts(*counts)
    with pytest.raises(DegenerateDenominatorError):
        assortativity_from_counts(ec)
    with pytest.raises(DegenerateDenominatorError):
        assortativity_long_form(ec)
    with pytest.raises(DegenerateDenominatorError):
        assortativity_from_contingency(contingency_from_counts(ec))


def test_newman_naive_min():
    assert newman_naive_min([0.5, 0.5]) == pytest.approx(-1)
    assert newman_naive_min([0.25, 0.75]) == pytest.approx(-5 / 3)
    assert newman_naive_min([0.1, 0.9]) == pytest.approx(-0.82 / 0.18)
    assert newman_naive_min([0.1, 0.9]) == pytest.approx(-4.556, abs=5e-4)
    with pytest.raises(DegenerateDenominatorError):
        newman_naive_min([1.0, 0.0])


def _brute_expected_m10(g, n1):
    vals = []
    for ones in combinations(range(g.n), n1):
        vals.append(edge_counts(g, MetadataAssignment.from_ones(g.n, ones)).m10)
    return sum(vals) / len(vals)


def test_freeman_p3(p3):
    end = freeman_segregation(p3, MetadataAssignment((1, 0, 0)))
    # brute-force permutation mean: labellings give m10 = 1, 2, 1
    assert end.expected_cross == pytest.approx(_brute_expected_m10(p3, 1))
    assert end.expected_cross == pytest.approx(4 / 3)
    assert end.observed_cross == 1
    assert end.S == pytest.approx(0.25)
    mid = freeman_segregation(p3, MetadataAssignment((0, 1, 0)))
    assert mid.observed_cross == 2 and mid.S == 0


def test_freeman_wolf(wolf):
    g, a = wolf
    res = freeman_segregation(g, a)
    assert res.expected_cross == pytest.approx(58.275)
    assert res.observed_cross == 63
    assert res.S == 0


def test_freeman_degenerate(p3):
    with pytest.raises(DegeneratePartitionError):
        freeman_segregation(p3, MetadataAssignment((0, 0, 0)))


def test_freeman_expectation_matches_enumeration(c6, k4):
    for g in (c6, k4):
        for n1 in range(1, g.n):
            a = MetadataAssignment.from_ones(g.n, range(n1))
            assert freeman_segregation(g, a).expected_cross == pytest.approx(_brute_expected_m10(g, n1))


count_triples = st.tuples(st.integers(0, 500), st.integers(0, 500), st.integers(0, 500))


@given(count_triples)
@settings(max_examples=500)
def test_three_forms_agree(c):
    ec = EdgeCounts(*c)
    assume(ec.m > 0 and ec.m ** 2 != (ec.m00 - ec.m11) ** 2)
    r = assortativity_from_counts(ec)
    assert assortativity_long_form(ec) == pytest.approx(r, abs=1e-12)
    assert assortativity_from_contingency(contingency_from_counts(ec)) == pytest.approx(r, abs=1e-12)
    assert -1 - 1e-12 <= r <= 1
    assert (r == 1.0) == (ec.m10 == 0 and ec.m11 > 0 and ec.m00 > 0)


@given(st.lists(st.floats(0.01, 1.0), min_size=4, max_size=4))
@settings(max_examples=300)
def test_phi_forms_and_bounds(w):
    s = sum(w)
    t = ContingencyTable(*(x / s for x in w[:3]), 1 - sum(x / s for x in w[:3]))
    phi = phi_coefficient(t)
    assert phi_determinant_form(t) == pytest.approx(phi, abs=1e-12)
    lo, hi = phi_bounds(t.a0, t.a1, t.b0, t.b1)
    assert lo - 1e-12 <= phi <= hi + 1e-12
    assert -1 - 1e-12 <= lo <= 0 <= hi <= 1 + 1e-12


@given(st.floats(0.05, 0.95), st.floats(0.05, 0.95))
def test_phi_max_attained_with_empty_e01(a0, b0):
    # put the smaller 0-marginal on x so a table with e01 = 0 exists
    a0, b0 = min(a0, b0), max(a0, b0)
    assume(b0 - a0 > 1e-6)
    t = ContingencyTable(e11=1 - b0, e10=b0 - a0, e01=0.0, e00=a0)
    assert phi_coefficient(t) == pytest.approx(phi_bounds(t.a0, t.a1, t.b0, t.b1)[1], rel=1e-9)


@given(st.floats(0.01, 0.5))
def test_symmetric_phi_min(a0):
    lo, hi = phi_bounds(a0, 1 - a0, a0, 1 - a0)
    assert lo == pytest.approx(-a0 / (1 - a0), rel=1e-12)
    assert hi == pytest.approx(1.0)


@pytest.mark.parametrize("m", [7, 20, 33])
def test_concavity_witness(m):
    for m10 in range(m + 1):
        prof = delta_profile(m, m10)
        if not prof:
            continue
        best = max(r for _, r in prof)
        assert max(r for d, r in prof if abs(d) <= 1) == best
        if m10 > 0:
            # the peak is unique up to parity; m10 = 0 gives r = 1 everywhere
            assert all(abs(d) <= 1 for d, r in prof if r == best)
        by_abs = sorted(prof, key=lambda t: abs(t[0]))
        rs = [r for _, r in by_abs]
        assert all(x >= y - 1e-15 for x, y in zip(rs, rs[1:]))


def test_segregation_range_and_completeness():
    rng = np.random.default_rng(5)
    from conftest import random_connected_graph
    for _ in range(50):
        g = random_connected_graph(rng, 3, 8)
        n1 = int(rng.integers(1, g.n))
        a = MetadataAssignment.from_ones(g.n, rng.permutation(g.n)[:n1].tolist())
        res = freeman_segregation(g, a)
        assert 0 <= res.S <= 1
        assert (res.S == 1) == (res.observed_cross == 0)
    # two disjoint edges, one per class: complete segregation
    from assortbounds.graph import validate_graph
    g = validate_graph([(0, 1), (2, 3)], 4)
    assert freeman_segregation(g, MetadataAssignment((1, 1, 0, 0))).S == 1
