import numpy as np
import pytest

from qaflow.profiling import coupling_matrix, degree_list, profile_circuit, write_matrix_csv
from qaflow.qasm import Circuit, two_qubit_gate_count

from conftest import circuit_from_pairs, gate_1q, random_circuit


def test_star_fixture_matrix(star5):
    m = coupling_matrix(star5)
    assert m.m[0, 4] == m.m[4, 0] == 2
    nonzero = {(i, j): int(m.m[i, j]) for i in range(5) for j in range(5) if m.m[i, j]}
    for (i, j), v in nonzero.items():
        assert v == (2 if {i, j} == {0, 4} else 1)
    assert two_qubit_gate_count(star5) == int(m.m.sum()) // 2


def test_star_fixture_degree_head(star5):
    profile = profile_circuit(star5)
    assert profile.degrees.entries[0] == (4, 5)


def test_no_two_qubit_gates_zero_matrix():
    c = Circuit(3, (gate_1q("h", 0), gate_1q("x", 2)))
    assert not coupling_matrix(c).m.any()


def test_direction_ignored_hand_enumeration():
    c = circuit_from_pairs(3, [(0, 1), (1, 0), (1, 2)])
    m = coupling_matrix(c)
    assert m.m[0, 1] == m.m[1, 0] == 2
    assert m.m[1, 2] == m.m[2, 1] == 1
    assert m.m[0, 2] == 0


def test_degree_list_of_hand_enumeration():
    m = coupling_matrix(circuit_from_pairs(3, [(0, 1), (1, 0), (1, 2)]))
    assert degree_list(m).entries == ((1, 3), (0, 2), (2, 1))


def test_degree_list_ties_by_id():
    m = coupling_matrix(Circuit(3, ()))
    assert degree_list(m).entries == ((0, 0), (1, 0), (2, 0))


@pytest.mark.parametrize("seed", range(8))
def test_matrix_invariants_random(seed):
    rng = np.random.default_rng(seed)
    c = random_circuit(rng, max_qubits=12, max_gates=200)
    m = coupling_matrix(c)
    assert (m.m == m.m.T).all()
    assert (np.diag(m.m) == 0).all()
    degs = degree_list(m)
    assert sum(d for _, d in degs.entries) == 2 * two_qubit_gate_count(c)
    order = [d for _, d in degs.entries]
    assert order == sorted(order, reverse=True)


def test_profile_is_gate_order_insensitive():
    rng = np.random.default_rng(5)
    c = random_circuit(rng, max_qubits=8, max_gates=120)
    gates = list(c.gates)
    rng.shuffle(gates)
    shuffled = Circuit(c.num_qubits, tuple(gates), name=c.name)
    assert (coupling_matrix(c).m == coupling_matrix(shuffled).m).all()


def test_matrix_csv_dump(tmp_path):
    m = coupling_matrix(circuit_from_pairs(3, [(0, 1), (1, 2)]))
    out = tmp_path / "m.csv"
    write_matrix_csv(m, out)
    lines = out.read_text().splitlines()
    assert lines[0] == "q0,q1,q2"
    assert lines[1:] == ["0,1,0", "1,0,1", "0,1,0"]
