"""Bus planning on the placed lattice.

Every pair of adjacent occupied nodes gets a 2-qubit bus, except where a
unit square is upgraded to a 4-qubit bus: the square's boundary edges are
then served by the square itself (which also couples its diagonals). Two
upgraded squares may never share a lattice edge, otherwise a qubit pair
would be doubly connected.

Squares with only 3 occupied corners degenerate to 3-qubit buses; their
cross weight is the coupling strength of the single fully-occupied
diagonal.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

import numpy as np

from .layout import Coord, Placement
from .profiling import CouplingMatrix


class DuplicatePairError(Exception):
    """A qubit pair appeared in two buses; indicates an internal bug."""


@dataclass(frozen=True)
class Square:
    """Unit lattice square identified by its lower-left anchor.

    corner_qubits holds the qubit at each of the corners
    (anchor, east, north, north-east), or None where the node is empty.
    """

    anchor: Coord
    corner_qubits: tuple[int | None, int | None, int | None, int | None]

    @property
    def occupied_count(self) -> int:
        return sum(1 for q in self.corner_qubits if q is not None)

    @property
    def qubits(self) -> tuple[int, ...]:
        return tuple(q for q in self.corner_qubits if q is not None)

    def boundary_edges(self) -> list[tuple[Coord, Coord]]:
        (i, j) = self.anchor
        a, e, n, ne = (i, j), (i + 1, j), (i, j + 1), (i + 1, j + 1)
        return [(a, e), (a, n), (e, ne), (n, ne)]


@dataclass(frozen=True)
class BusPlan:
    two_qubit_buses: tuple[tuple[int, int], ...]
    four_qubit_buses: tuple[Square, ...]


@dataclass(frozen=True)
class SelectionStep:
    """One replayable greedy pick: chosen square and all filtered weights."""

    chosen: Coord
    filtered: tuple[tuple[Coord, int], ...]
    weights: tuple[tuple[Coord, int], ...]


class ConnectivityGraph:
    """Qubit pairs supporting native two-qubit gates, from the bus plan."""

    def __init__(self, nodes: list[int], pairs: list[tuple[int, int]]):
        self.nodes = sorted(nodes)
        self.pairs = sorted((min(a, b), max(a, b)) for a, b in pairs)
        self._adj: dict[int, set[int]] = {q: set() for q in self.nodes}
        for a, b in self.pairs:
            self._adj[a].add(b)
            self._adj[b].add(a)

    def neighbors(self, q: int) -> list[int]:
        return sorted(self._adj[q])

    def are_connected(self, a: int, b: int) -> bool:
        return b in self._adj.get(a, ())

    def induced(self, qubits) -> "ConnectivityGraph":
        keep = set(qubits)
        pairs = [(a, b) for a, b in self.pairs if a in keep and b in keep]
        return ConnectivityGraph(sorted(keep), pairs)


def enumerate_squares(placement: Placement) -> list[Square]:
    """All unit squares with at least 3 occupied corners, y desc then x asc."""
    by_coord = {c: q for q, c in placement.positions.items()}
    anchors = set()
    for x, y in by_coord:
        anchors.update({(x, y), (x - 1, y), (x, y - 1), (x - 1, y - 1)})
    squares = []
    for i, j in anchors:
        corners = ((i, j), (i + 1, j), (i, j + 1), (i + 1, j + 1))
        qs = tuple(by_coord.get(c) for c in corners)
        if sum(1 for q in qs if q is not None) >= 3:
            squares.append(Square(anchor=(i, j), corner_qubits=qs))
    squares.sort(key=lambda s: (-s.anchor[1], s.anchor[0]))
    return squares


def cross_weight(square: Square, matrix: CouplingMatrix) -> int:
    """Coupling strength carried by the square's diagonals.

    A 3-occupied square has one fully-occupied diagonal; only its pair
    counts.
    """
    a, e, n, ne = square.corner_qubits
    total = 0
    for d0, d1 in ((a, ne), (e, n)):
        if d0 is not None and d1 is not None:
            total += matrix.strength(d0, d1)
    return total


def _neighbor_anchors(anchor: Coord) -> list[Coord]:
    i, j = anchor
    return [(i + 1, j), (i, j + 1), (i - 1, j), (i, j - 1)]


def select_buses(
    placement: Placement,
    matrix: CouplingMatrix,
    k_max: int,
    return_trace: bool = False,
) -> BusPlan | tuple[BusPlan, list[SelectionStep]]:
    """Greedy upgrade of up to k_max squares to 4-qubit buses.

    Each iteration recomputes filtered weights (weight minus the current
    weights of the four edge-adjacent squares), picks the available square
    with the highest filtered weight among those with positive weight,
    then zeroes and blocks its edge-adjacent squares. Squares whose
    current weight is zero are never upgraded: a bus with no diagonal
    traffic costs yield without buying performance.
    """
    squares = enumerate_squares(placement)
    weight = {s.anchor: cross_weight(s, matrix) for s in squares}
    by_anchor = {s.anchor: s for s in squares}
    unavailable: set[Coord] = set()
    selected: list[Square] = []
    trace: list[SelectionStep] = []

    k = k_max
    while k > 0:
        filtered = {
            a: weight[a] - sum(weight.get(nb, 0) for nb in _neighbor_anchors(a))
            for a in weight
        }
        candidates = [
            s.anchor for s in squares
            if s.anchor not in unavailable and weight[s.anchor] > 0
        ]
        if not candidates:
            break
        chosen = max(candidates, key=lambda a: filtered[a])
        if return_trace:
            trace.append(SelectionStep(
                chosen,
                tuple((a, filtered[a]) for a in candidates),
                tuple(sorted(weight.items(), key=lambda kv: (-kv[0][1], kv[0][0]))),
            ))
        selected.append(by_anchor[chosen])
        unavailable.add(chosen)
        weight[chosen] = 0
        for nb in _neighbor_anchors(chosen):
            unavailable.add(nb)
            if nb in weight:
                weight[nb] = 0
        k -= 1

    plan = _finalize_plan(placement, selected)
    return (plan, trace) if return_trace else plan


def random_bus_plan(
    placement: Placement, k_max: int, rng: np.random.Generator
) -> BusPlan:
    """Uniformly random square upgrades, still honoring the adjacency ban."""
    squares = enumerate_squares(placement)
    by_anchor = {s.anchor: s for s in squares}
    available = [s.anchor for s in squares]
    selected: list[Square] = []
    for _ in range(k_max):
        if not available:
            break
        chosen = available[int(rng.integers(len(available)))]
        selected.append(by_anchor[chosen])
        banned = {chosen, *_neighbor_anchors(chosen)}
        available = [a for a in available if a not in banned]
    return _finalize_plan(placement, selected)


def edge_bus_plan(placement: Placement) -> BusPlan:
    """2-qubit buses on every occupied lattice edge; no squares upgraded."""
    return _finalize_plan(placement, [])


def max_bus_plan(placement: Placement) -> BusPlan:
    """As many 4-qubit buses as the adjacency ban allows (greedy packing)."""
    squares = enumerate_squares(placement)
    blocked: set[Coord] = set()
    selected: list[Square] = []
    for s in squares:
        if s.anchor in blocked:
            continue
        selected.append(s)
        blocked.add(s.anchor)
        blocked.update(_neighbor_anchors(s.anchor))
    return _finalize_plan(placement, selected)


def _finalize_plan(placement: Placement, selected: list[Square]) -> BusPlan:
    occupied = placement.occupied()
    by_coord = {c: q for q, c in placement.positions.items()}
    covered: set[frozenset[Coord]] = set()
    for s in selected:
        covered.update(frozenset(e) for e in s.boundary_edges())
    edges = []
    for x, y in occupied:
        for nb in ((x + 1, y), (x, y + 1)):
            if nb in occupied and frozenset(((x, y), nb)) not in covered:
                a, b = by_coord[(x, y)], by_coord[nb]
                edges.append((min(a, b), max(a, b)))
    return BusPlan(
        two_qubit_buses=tuple(sorted(edges)),
        four_qubit_buses=tuple(selected),
    )


def connectivity(placement: Placement, plan: BusPlan) -> ConnectivityGraph:
    """Union of per-bus qubit pairs; duplicates indicate a planner bug."""
    seen: set[tuple[int, int]] = set()
    pairs: list[tuple[int, int]] = []

    def add(a: int, b: int) -> None:
        key = (min(a, b), max(a, b))
        if key in seen:
            raise DuplicatePairError(f"pair {key} contributed by two buses")
        seen.add(key)
        pairs.append(key)

    for a, b in plan.two_qubit_buses:
        add(a, b)
    for s in plan.four_qubit_buses:
        for a, b in combinations(s.qubits, 2):
            add(a, b)
    return ConnectivityGraph(sorted(placement.positions), pairs)
