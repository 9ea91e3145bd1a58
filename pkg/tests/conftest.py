"""Shared fixtures and small builders for the test suite."""

from __future__ import annotations

import numpy as np
import pytest

from qaflow.buses import connectivity, select_buses
from qaflow.layout import Placement, place_qubits
from qaflow.profiling import CouplingMatrix, profile_circuit
from qaflow.qasm import Circuit, Gate, GateKind, parse_qasm

# 5-qubit walkthrough fixture: a weight star around q4. The hub couples
# to q0 twice and to q1..q3 once each, so q4 tops the degree list and
# its four partners belong at lattice distance 1.
STAR5_QASM = """
OPENQASM 2.0;
include "qelib1.inc";
qreg q[5];
creg c[5];
h q[4];
cx q[4],q[0];
cx q[1],q[4];
cx q[4],q[2];
cx q[3],q[4];
cx q[0],q[4];
measure q[0] -> c[0];
measure q[1] -> c[1];
measure q[2] -> c[2];
measure q[3] -> c[3];
measure q[4] -> c[4];
"""


@pytest.fixture
def star5() -> Circuit:
    return parse_qasm(STAR5_QASM, name="star5")


def gate_1q(name: str, q: int) -> Gate:
    return Gate(name, (q,), GateKind.ONE_QUBIT)


def gate_2q(a: int, b: int, name: str = "cx") -> Gate:
    return Gate(name, (a, b), GateKind.TWO_QUBIT)


def circuit_from_pairs(n: int, pairs, name: str = "pairs") -> Circuit:
    return Circuit(n, tuple(gate_2q(a, b) for a, b in pairs), name=name)


def matrix_from_pairs(n: int, pairs) -> CouplingMatrix:
    m = np.zeros((n, n), dtype=np.int64)
    for a, b in pairs:
        m[a, b] += 1
        m[b, a] += 1
    return CouplingMatrix(n=n, m=m)


def random_circuit(rng: np.random.Generator, max_qubits: int = 16,
                   max_gates: int = 500) -> Circuit:
    n = int(rng.integers(1, max_qubits + 1))
    n_gates = int(rng.integers(0, max_gates + 1))
    gates = []
    names_1q = ("h", "x", "t", "rz")
    for _ in range(n_gates):
        r = rng.random()
        if n >= 2 and r < 0.5:
            a, b = rng.choice(n, size=2, replace=False)
            gates.append(gate_2q(int(a), int(b)))
        elif r < 0.9:
            gates.append(gate_1q(str(rng.choice(names_1q)), int(rng.integers(n))))
        else:
            q = int(rng.integers(n))
            gates.append(Gate("measure", (q,), GateKind.MEASURE))
    return Circuit(n, tuple(gates), name="random")


def random_blob_placement(rng: np.random.Generator, n: int) -> Placement:
    """Random connected set of n lattice nodes grown from the origin."""
    occupied = [(0, 0)]
    taken = {(0, 0)}
    while len(occupied) < n:
        x, y = occupied[int(rng.integers(len(occupied)))]
        nb = [(x + 1, y), (x - 1, y), (x, y + 1), (x, y - 1)]
        loc = nb[int(rng.integers(4))]
        if loc not in taken:
            taken.add(loc)
            occupied.append(loc)
    return Placement(positions={i: c for i, c in enumerate(occupied)})


def flow_connectivity(circuit: Circuit, k: int):
    """Layout + bus selection for a circuit; returns (placement, graph)."""
    prof = profile_circuit(circuit)
    placement = place_qubits(prof.degrees, prof.matrix)
    plan = select_buses(placement, prof.matrix, k)
    return placement, connectivity(placement, plan)
