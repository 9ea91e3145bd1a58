import numpy as np
import pytest

from qaflow.buses import ConnectivityGraph
from qaflow.mapping import (
    RoutedResult,
    TooFewPhysicalQubitsError,
    all_pairs_distances,
    initial_mapping,
    performance_metric,
    route,
)
from qaflow.profiling import profile_circuit

from conftest import circuit_from_pairs, random_circuit


def path_graph(n: int) -> ConnectivityGraph:
    return ConnectivityGraph(list(range(n)), [(i, i + 1) for i in range(n - 1)])


def grid_graph(w: int, h: int) -> ConnectivityGraph:
    def qid(x, y):
        return y * w + x

    pairs = [(qid(x, y), qid(x + 1, y)) for y in range(h) for x in range(w - 1)]
    pairs += [(qid(x, y), qid(x, y + 1)) for y in range(h - 1) for x in range(w)]
    return ConnectivityGraph(list(range(w * h)), pairs)


def test_single_logical_qubit():
    c = circuit_from_pairs(1, [])
    mapping = initial_mapping(profile_circuit(c), path_graph(3))
    assert len(mapping) == 1
    assert mapping[0] in (0, 1, 2)


def test_chain_program_onto_chain_chip():
    n = 8
    c = circuit_from_pairs(n, [(i, i + 1) for i in range(n - 1)] * 4)
    mapping = initial_mapping(profile_circuit(c), path_graph(n))
    for i in range(n - 1):
        assert abs(mapping[i] - mapping[i + 1]) == 1


def test_chain_program_onto_grids():
    n = 12
    c = circuit_from_pairs(n, [(i, i + 1) for i in range(n - 1)] * 4)
    prof = profile_circuit(c)
    for g in (grid_graph(8, 2), grid_graph(5, 4)):
        mapping = initial_mapping(prof, g)
        routed = route(c, g, mapping)
        assert routed.inserted_swaps == 0


def test_too_few_physical_qubits():
    c = circuit_from_pairs(5, [(0, 1)])
    with pytest.raises(TooFewPhysicalQubitsError):
        initial_mapping(profile_circuit(c), path_graph(4))


def test_route_all_adjacent_no_swaps():
    c = circuit_from_pairs(3, [(0, 1), (1, 2), (0, 1)])
    r = route(c, path_graph(3), {0: 0, 1: 1, 2: 2})
    assert r.inserted_swaps == 0
    assert r.post_gate_count == len(c.gates)
    assert r.final_map == {0: 0, 1: 1, 2: 2}


def test_route_distance_two_single_swap():
    c = circuit_from_pairs(3, [(0, 2)])
    g = path_graph(3)
    # brute-force oracle: some single swap on an edge makes the pair adjacent
    def adjacent_after(swap, mapping):
        m = dict(mapping)
        inv = {p: l for l, p in m.items()}
        a, b = swap
        la, lb = inv.get(a), inv.get(b)
        if la is not None:
            m[la] = b
        if lb is not None:
            m[lb] = a
        return g.are_connected(m[0], m[2])

    map0 = {0: 0, 1: 1, 2: 2}
    assert any(adjacent_after(e, map0) for e in g.pairs)
    r = route(c, g, map0)
    assert r.inserted_swaps == 1
    assert r.post_gate_count == len(c.gates) + 3


def test_route_executes_only_adjacent_gates():
    rng = np.random.default_rng(4)
    c = random_circuit(rng, max_qubits=8, max_gates=120)
    g = grid_graph(4, 2)
    mapping = initial_mapping(profile_circuit(c), g)
    result, executed, swaps = route(c, g, mapping, return_trace=True)
    for _, (pa, pb) in executed:
        assert g.are_connected(pa, pb)
    assert result.inserted_swaps == len(swaps)
    assert result.post_gate_count == len(c.gates) + 3 * len(swaps)
    two_q = [i for i, gate in enumerate(c.gates) if len(gate.operands) == 2]
    assert sorted(i for i, _ in executed) == two_q


def test_route_deterministic():
    rng = np.random.default_rng(8)
    c = random_circuit(rng, max_qubits=9, max_gates=150)
    g = grid_graph(3, 3)
    mapping = initial_mapping(profile_circuit(c), g)
    assert route(c, g, mapping) == route(c, g, mapping)


def test_performance_metric_counts():
    r0 = RoutedResult(inserted_swaps=0, post_gate_count=100, final_map={})
    r7 = RoutedResult(inserted_swaps=7, post_gate_count=121, final_map={})
    assert performance_metric(r0) == 100
    assert performance_metric(r7) == 121


def test_denser_connectivity_never_hurts_on_small_suite():
    rng = np.random.default_rng(12)
    base = grid_graph(3, 2)
    denser = ConnectivityGraph(
        base.nodes, base.pairs + [(0, 4), (1, 5), (1, 3)]
    )
    for _ in range(30):
        c = random_circuit(rng, max_qubits=6, max_gates=60)
        mapping = initial_mapping(profile_circuit(c), base)
        r_base = route(c, base, mapping)
        r_dense = route(c, denser, mapping)
        assert r_dense.post_gate_count <= r_base.post_gate_count


def test_all_pairs_distances_path():
    d = all_pairs_distances(path_graph(4))
    assert d[0][3] == 3 and d[1][3] == 2 and d[2][2] == 0
