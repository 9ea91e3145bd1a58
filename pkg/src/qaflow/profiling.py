"""Coupling-structure profiling of a circuit.

Single-qubit gates, initialization, and measurements are ignored; the
profile captures only how often each pair of logical qubits interacts
through two-qubit gates. Gate direction is ignored as well: cx(a,b) and
cx(b,a) increment the same undirected entry.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .qasm import Circuit, GateKind


@dataclass(frozen=True)
class CouplingMatrix:
    """Symmetric, zero-diagonal matrix of two-qubit gate counts per pair."""

    n: int
    m: np.ndarray

    def strength(self, a: int, b: int) -> int:
        return int(self.m[a, b])

    def degrees(self) -> np.ndarray:
        """Per-qubit total two-qubit gate count (row sums)."""
        return self.m.sum(axis=1)


@dataclass(frozen=True)
class CouplingDegreeList:
    """(qubit, degree) entries sorted by degree descending, id ascending."""

    entries: tuple[tuple[int, int], ...]

    def qubit_order(self) -> list[int]:
        return [q for q, _ in self.entries]


@dataclass(frozen=True)
class CouplingProfile:
    matrix: CouplingMatrix
    degrees: CouplingDegreeList


def coupling_matrix(circuit: Circuit) -> CouplingMatrix:
    n = circuit.num_qubits
    m = np.zeros((n, n), dtype=np.int64)
    for g in circuit.gates:
        if g.kind is GateKind.TWO_QUBIT:
            a, b = g.operands
            m[a, b] += 1
            m[b, a] += 1
    return CouplingMatrix(n=n, m=m)


def degree_list(matrix: CouplingMatrix) -> CouplingDegreeList:
    degs = matrix.degrees()
    order = sorted(range(matrix.n), key=lambda q: (-degs[q], q))
    return CouplingDegreeList(entries=tuple((q, int(degs[q])) for q in order))


def profile_circuit(circuit: Circuit) -> CouplingProfile:
    m = coupling_matrix(circuit)
    return CouplingProfile(matrix=m, degrees=degree_list(m))


def write_matrix_csv(matrix: CouplingMatrix, path: str | Path) -> None:
    """Dump the matrix as CSV with a q0..qN-1 header row."""
    with open(path, "w", newline="", encoding="utf-8") as f:
        w = csv.writer(f)
        w.writerow([f"q{i}" for i in range(matrix.n)])
        for row in matrix.m:
            w.writerow([int(v) for v in row])
