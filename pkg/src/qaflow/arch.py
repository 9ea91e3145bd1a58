"""Architecture container: placed qubits, bus plan, design frequencies.

The JSON layout is the toolchain's interchange format:

{
  "qubits": [{"id": 0, "x": 0, "y": 0, "freq_ghz": 5.17}, ...],
  "buses": [
    {"kind": "bus2", "qubits": [0, 1]},
    {"kind": "bus4", "anchor": [0, 0], "qubits": [0, 1, 2, 3]}
  ],
  "provenance": {...}
}

A "bus4" entry with three qubits is the degenerate 3-qubit bus on a
square with one empty corner.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

from .buses import BusPlan, ConnectivityGraph, Square, connectivity
from .freqalloc import FrequencyPlan
from .layout import Placement


@dataclass(frozen=True)
class ArchQubit:
    id: int
    x: int
    y: int
    freq_ghz: float | None = None


@dataclass(frozen=True)
class Architecture:
    qubits: tuple[ArchQubit, ...]
    bus_plan: BusPlan
    provenance: dict = field(default_factory=dict)

    def placement(self) -> Placement:
        return Placement(positions={q.id: (q.x, q.y) for q in self.qubits})

    def frequencies(self) -> dict[int, float | None]:
        return {q.id: q.freq_ghz for q in self.qubits}

    def connectivity_graph(self) -> ConnectivityGraph:
        return connectivity(self.placement(), self.bus_plan)

    def with_frequencies(self, plan: FrequencyPlan) -> "Architecture":
        qubits = tuple(
            ArchQubit(q.id, q.x, q.y, plan.freqs[q.id]) for q in self.qubits
        )
        return Architecture(qubits=qubits, bus_plan=self.bus_plan,
                            provenance=self.provenance)

    @property
    def num_four_qubit_buses(self) -> int:
        return len(self.bus_plan.four_qubit_buses)

    def to_dict(self) -> dict:
        buses: list[dict] = [
            {"kind": "bus2", "qubits": list(pair)}
            for pair in self.bus_plan.two_qubit_buses
        ]
        buses.extend(
            {"kind": "bus4", "anchor": list(s.anchor), "qubits": list(s.qubits)}
            for s in self.bus_plan.four_qubit_buses
        )
        return {
            "qubits": [
                {"id": q.id, "x": q.x, "y": q.y, "freq_ghz": q.freq_ghz}
                for q in self.qubits
            ],
            "buses": buses,
            "provenance": self.provenance,
        }

    @staticmethod
    def from_dict(data: dict) -> "Architecture":
        qubits = tuple(
            ArchQubit(q["id"], q["x"], q["y"], q.get("freq_ghz"))
            for q in data["qubits"]
        )
        by_coord = {(q.x, q.y): q.id for q in qubits}
        two_q: list[tuple[int, int]] = []
        squares: list[Square] = []
        for bus in data["buses"]:
            if bus["kind"] == "bus2":
                a, b = bus["qubits"]
                two_q.append((min(a, b), max(a, b)))
            elif bus["kind"] == "bus4":
                i, j = bus["anchor"]
                corners = ((i, j), (i + 1, j), (i, j + 1), (i + 1, j + 1))
                squares.append(Square(
                    anchor=(i, j),
                    corner_qubits=tuple(by_coord.get(c) for c in corners),
                ))
            else:
                raise ValueError(f"unknown bus kind {bus['kind']!r}")
        plan = BusPlan(two_qubit_buses=tuple(sorted(two_q)),
                       four_qubit_buses=tuple(squares))
        return Architecture(qubits=qubits, bus_plan=plan,
                            provenance=data.get("provenance", {}))

    def save(self, path: str | Path) -> None:
        with open(path, "w", encoding="utf-8") as f:
            json.dump(self.to_dict(), f, indent=2, sort_keys=True)
            f.write("\n")

    @staticmethod
    def load(path: str | Path) -> "Architecture":
        with open(path, encoding="utf-8") as f:
            return Architecture.from_dict(json.load(f))


def build_architecture(
    placement: Placement,
    bus_plan: BusPlan,
    freqs: FrequencyPlan | None = None,
    provenance: dict | None = None,
) -> Architecture:
    qubits = tuple(
        ArchQubit(
            q,
            placement.positions[q][0],
            placement.positions[q][1],
            freqs.freqs.get(q) if freqs is not None else None,
        )
        for q in sorted(placement.positions)
    )
    return Architecture(qubits=qubits, bus_plan=bus_plan,
                        provenance=provenance or {})
