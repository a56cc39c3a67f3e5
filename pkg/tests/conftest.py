import itertools
import random

import pytest

from subarchmap import CouplingGraph, Circuit, Gate, induced_subgraph, is_connected


def pytest_addoption(parser):
    parser.addoption("--run-extended", action="store_true", default=False,
                     help="also run tests marked 'extended'")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--run-extended"):
        return
    skip = pytest.mark.skip(reason="needs --run-extended")
    for item in items:
        if "extended" in item.keywords:
            item.add_marker(skip)


def random_connected_graph(rng: random.Random, n: int,
                           extra_edges: int | None = None) -> CouplingGraph:
    """Random spanning tree plus a few extra edges; connected by construction."""
    verts = list(range(n))
    rng.shuffle(verts)
    edges = set()
    for i in range(1, n):
        edges.add(tuple(sorted((verts[i], rng.choice(verts[:i])))))
    if extra_edges is None:
        extra_edges = rng.randrange(0, n)
    pool = [(u, v) for u in range(n) for v in range(u + 1, n)
            if (u, v) not in edges]
    rng.shuffle(pool)
    edges.update(pool[:extra_edges])
    return CouplingGraph(range(n), edges)


def random_circuit(rng: random.Random, n_qubits: int, n_gates: int) -> Circuit:
    gates = []
    for _ in range(n_gates):
        a, b = rng.sample(range(n_qubits), 2)
        gates.append(Gate("cx", (a, b)))
    return Circuit(n_qubits, tuple(gates))


def naive_connected_subsets(g: CouplingGraph, k: int) -> set[tuple[int, ...]]:
    """Filter every k-subset; the trusted but slow enumeration oracle."""
    out = set()
    for subset in itertools.combinations(g.vertices, k):
        if is_connected(induced_subgraph(g, subset)):
            out.add(subset)
    return out


def relabel_graph(g: CouplingGraph, perm: dict[int, int]) -> CouplingGraph:
    return CouplingGraph([perm[v] for v in g.vertices],
                         [(perm[u], perm[v]) for u, v in g.edges])
