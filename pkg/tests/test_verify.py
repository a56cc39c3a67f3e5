import random

import pytest

from subarchmap import (Allocation, Circuit, CouplingGraph, Gate,
                        check_equivalence, check_feasibility, induced_subgraph,
                        is_connected, lift_to_platform, map_optimal)
from subarchmap.circuits import PHYSICAL
from subarchmap.verify import RELAXED, STRICT, verify_result

from conftest import random_circuit, random_connected_graph


def path(n):
    return CouplingGraph(range(n), [(i, i + 1) for i in range(n - 1)])


class TestFeasibility:
    def test_clean_circuit(self):
        c = Circuit(2, (Gate("cx", (0, 1)), Gate("h", (0,))), PHYSICAL)
        assert check_feasibility(c, path(3)) == []

    def test_off_edge_cx(self):
        c = Circuit(2, (Gate("cx", (0, 2)),), PHYSICAL)
        (idx, reason), = check_feasibility(c, path(3))
        assert idx == 0 and "disconnected" in reason

    def test_off_edge_swap(self):
        c = Circuit(2, (Gate("swap", (0, 2)),), PHYSICAL)
        assert len(check_feasibility(c, path(3))) == 1

    def test_non_platform_qubit(self):
        c = Circuit(1, (Gate("h", (9,)),), PHYSICAL)
        (idx, reason), = check_feasibility(c, path(3))
        assert "non-platform" in reason

    def test_unary_off_edge_is_fine(self):
        c = Circuit(1, (Gate("h", (2,)),), PHYSICAL)
        assert check_feasibility(c, path(3)) == []


class TestEquivalence:
    def test_swap_equivalent_routes(self):
        orig = Circuit(2, (Gate("cx", (0, 1)), Gate("cx", (1, 0))))
        phys = Circuit(2, (Gate("cx", (0, 1)), Gate("swap", (0, 1)),
                           Gate("cx", (0, 1))), PHYSICAL)
        a = Allocation.from_dict({0: 0, 1: 1})
        assert check_equivalence(orig, phys, a) == []

    def test_wrong_gate_detected(self):
        orig = Circuit(2, (Gate("cx", (0, 1)),))
        phys = Circuit(2, (Gate("cx", (1, 0)),), PHYSICAL)
        a = Allocation.from_dict({0: 0, 1: 1})
        assert check_equivalence(orig, phys, a) != []

    def test_unallocated_touch_reported(self):
        orig = Circuit(1, (Gate("h", (0,)),))
        phys = Circuit(1, (Gate("h", (5,)),), PHYSICAL)
        a = Allocation.from_dict({0: 0})
        (idx, reason), = check_equivalence(orig, phys, a)
        assert idx == -1 and "unallocated" in reason

    def test_relaxed_vs_strict(self):
        orig = Circuit(3, (Gate("x", (0,)), Gate("x", (2,))))
        phys = Circuit(3, (Gate("x", (2,)), Gate("x", (0,))), PHYSICAL)
        a = Allocation.from_dict({0: 0, 1: 1, 2: 2})
        assert check_equivalence(orig, phys, a, STRICT) != []
        assert check_equivalence(orig, phys, a, RELAXED) == []


def test_verdict_roundtrip():
    g = path(3)
    orig = Circuit(3, (Gate("cx", (0, 1)), Gate("cx", (1, 2)), Gate("cx", (0, 2))))
    v = verify_result(orig, map_optimal(orig, g), g)
    assert v.ok and v.swap_count == 1
    d = v.to_dict()
    assert d["feasible"] and d["equivalent"] and d["violations"] == []


class TestLifting:
    def test_identity_lift_from_induced_subgraph(self):
        rng = random.Random(4)
        for _ in range(10):
            g = random_connected_graph(rng, 7)
            sub_vertices = sorted(rng.sample(g.vertices, 5))
            sub = induced_subgraph(g, sub_vertices)
            if not is_connected(sub):
                continue
            c = random_circuit(rng, 3, 5)
            r = map_optimal(c, sub)
            lifted = lift_to_platform(r, g)
            assert lifted.swaps == r.swaps
            assert verify_result(c, lifted, g).ok

    def test_relabeling_lift(self):
        # subarchitecture with labels that are not platform labels
        sub = CouplingGraph([100, 101, 102], [(100, 101), (101, 102)])
        c = Circuit(3, (Gate("cx", (0, 1)), Gate("cx", (1, 2))))
        r = map_optimal(c, sub)
        g = path(5)
        lifted = lift_to_platform(r, g)
        assert lifted.swaps == r.swaps
        assert verify_result(c, lifted, g).ok

    def test_no_embedding(self):
        tri = CouplingGraph(range(3), [(0, 1), (1, 2), (0, 2)])
        c = Circuit(3, (Gate("cx", (0, 1)),))
        r = map_optimal(c, tri)
        with pytest.raises(ValueError, match="does not embed"):
            lift_to_platform(r, path(4))
