import numpy as np
import pytest

from qaflow.layout import (
    OccupiedNodeError,
    Placement,
    candidate_nodes,
    node_cost,
    place_qubits,
)
from qaflow.profiling import degree_list, profile_circuit

from conftest import matrix_from_pairs, random_circuit


def _placement(coords):
    return Placement(positions={i: c for i, c in enumerate(coords)})


def test_node_cost_single_neighbor():
    m = matrix_from_pairs(2, [(0, 1)] * 3)
    p = _placement([(0, 0)])  # qubit 0 placed
    assert node_cost(1, (2, 0), p, m) == 3 * 2


def test_node_cost_no_placed_neighbors():
    m = matrix_from_pairs(3, [(0, 1)])
    p = _placement([(0, 0)])
    for loc in candidate_nodes(p):
        assert node_cost(2, loc, p, m) == 0


def test_node_cost_occupied_node_rejected():
    m = matrix_from_pairs(2, [(0, 1)])
    p = _placement([(0, 0)])
    with pytest.raises(OccupiedNodeError):
        node_cost(1, (0, 0), p, m)


def test_candidate_nodes_single():
    assert set(candidate_nodes(_placement([(0, 0)]))) == {
        (0, 1), (1, 0), (0, -1), (-1, 0)
    }


def test_candidate_nodes_domino():
    got = candidate_nodes(_placement([(0, 0), (0, 1)]))
    assert len(got) == 6
    assert set(got) == {(0, 2), (-1, 1), (1, 1), (-1, 0), (1, 0), (0, -1)}


def test_candidate_nodes_2x2_block():
    block = [(0, 0), (1, 0), (0, 1), (1, 1)]
    # brute-force frontier: empty nodes 4-adjacent to the block
    expected = set()
    for x, y in block:
        for loc in ((x + 1, y), (x - 1, y), (x, y + 1), (x, y - 1)):
            if loc not in block:
                expected.add(loc)
    got = candidate_nodes(_placement(block))
    assert set(got) == expected
    assert len(got) == 8


def test_candidate_nodes_order_is_north_first():
    got = candidate_nodes(_placement([(0, 0)]))
    assert got[0] == (0, 1)


def test_star_fixture_walkthrough(star5):
    profile = profile_circuit(star5)
    placement = place_qubits(profile.degrees, profile.matrix)
    pos = placement.positions
    assert pos[4] == (0, 0)
    for q in range(4):
        x, y = pos[q]
        assert abs(x) + abs(y) == 1
    # the walkthrough's first two picks: north for the strongest partner,
    # then west for the next one
    assert pos[0] == (0, 1)
    assert pos[1] == (-1, 0)


def test_single_qubit_program():
    m = matrix_from_pairs(1, [])
    placement = place_qubits(degree_list(m), m)
    assert placement.positions == {0: (0, 0)}


def test_path_coupled_program_places_lattice_path():
    m = matrix_from_pairs(4, [(i, i + 1) for i in range(3)] * 5)
    placement = place_qubits(degree_list(m), m)
    pos = placement.positions
    for i in range(3):
        (x0, y0), (x1, y1) = pos[i], pos[i + 1]
        assert abs(x0 - x1) + abs(y0 - y1) == 1


def test_placement_injective_and_total():
    for seed in range(6):
        rng = np.random.default_rng(seed)
        c = random_circuit(rng, max_qubits=10, max_gates=80)
        profile = profile_circuit(c)
        placement = place_qubits(profile.degrees, profile.matrix)
        assert len(placement.positions) == c.num_qubits
        assert len(set(placement.positions.values())) == c.num_qubits


def test_every_step_takes_a_minimal_cost_node():
    rng = np.random.default_rng(11)
    c = random_circuit(rng, max_qubits=10, max_gates=120)
    profile = profile_circuit(c)
    _, trace = place_qubits(profile.degrees, profile.matrix, return_trace=True)
    for step in trace[1:]:
        chosen_cost = dict(step.costs)[step.chosen]
        assert chosen_cost == min(cost for _, cost in step.costs)


def test_deterministic_coordinates():
    rng = np.random.default_rng(3)
    c = random_circuit(rng, max_qubits=12, max_gates=150)
    profile = profile_circuit(c)
    a = place_qubits(profile.degrees, profile.matrix)
    b = place_qubits(profile.degrees, profile.matrix)
    assert a.positions == b.positions


def test_strong_pairs_end_up_adjacent():
    # hub 0 dominates: each partner's strength to 0 exceeds its other edges
    pairs = [(0, 1)] * 9 + [(0, 2)] * 8 + [(0, 3)] * 7 + [(0, 4)] * 6
    pairs += [(1, 2), (3, 4)]  # weak side edges
    m = matrix_from_pairs(5, pairs)
    placement = place_qubits(degree_list(m), m)
    hx, hy = placement.positions[0]
    for q in (1, 2, 3, 4):
        x, y = placement.positions[q]
        assert abs(x - hx) + abs(y - hy) == 1


def test_disconnected_graph_stays_contiguous():
    # two components with no edges between them
    m = matrix_from_pairs(6, [(0, 1), (1, 2), (3, 4), (4, 5)])
    placement = place_qubits(degree_list(m), m)
    assert len(placement.positions) == 6
    occupied = set(placement.positions.values())
    seen = set()
    stack = [next(iter(occupied))]
    while stack:
        x, y = stack.pop()
        if (x, y) in seen:
            continue
        seen.add((x, y))
        for nb in ((x + 1, y), (x - 1, y), (x, y + 1), (x, y - 1)):
            if nb in occupied:
                stack.append(nb)
    assert seen == occupied
