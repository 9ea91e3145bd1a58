"""Greedy coupling-driven qubit placement on an unbounded 2D lattice.

Qubits are placed one at a time in coupling-degree order. Each new qubit
goes to the empty frontier node minimizing the sum over its already-placed
logical neighbors of coupling strength times Manhattan distance. Cost ties
are broken toward greatest y, then least x, which makes placement fully
deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .profiling import CouplingDegreeList, CouplingMatrix

Coord = tuple[int, int]


class OccupiedNodeError(Exception):
    """Cost was requested for a lattice node that already holds a qubit."""


@dataclass
class Placement:
    """Injective map from qubit id to lattice coordinate."""

    positions: dict[int, Coord] = field(default_factory=dict)

    def occupied(self) -> set[Coord]:
        return set(self.positions.values())

    def qubit_at(self, loc: Coord) -> int | None:
        for q, c in self.positions.items():
            if c == loc:
                return q
        return None

    def bounding_box(self) -> tuple[Coord, Coord]:
        xs = [c[0] for c in self.positions.values()]
        ys = [c[1] for c in self.positions.values()]
        return (min(xs), min(ys)), (max(xs), max(ys))


@dataclass(frozen=True)
class PlacementStep:
    """One replayable decision: the qubit placed and all candidate costs."""

    qubit: int
    chosen: Coord
    costs: tuple[tuple[Coord, int], ...]


def _manhattan(a: Coord, b: Coord) -> int:
    return abs(a[0] - b[0]) + abs(a[1] - b[1])


def node_cost(q: int, loc: Coord, placement: Placement, matrix: CouplingMatrix) -> int:
    """Strength-weighted Manhattan distance from loc to q's placed neighbors."""
    if loc in placement.occupied():
        raise OccupiedNodeError(f"node {loc} already holds a qubit")
    total = 0
    for other, pos in placement.positions.items():
        s = matrix.strength(q, other)
        if s:
            total += s * _manhattan(loc, pos)
    return total


def candidate_nodes(placement: Placement) -> list[Coord]:
    """Empty 4-neighborhood frontier of the occupied nodes.

    Deduplicated and ordered by greatest y then least x, so scanning in
    order and keeping the first minimum applies the tie-break for free.
    """
    occupied = placement.occupied()
    frontier = set()
    for x, y in occupied:
        for loc in ((x, y + 1), (x + 1, y), (x, y - 1), (x - 1, y)):
            if loc not in occupied:
                frontier.add(loc)
    return sorted(frontier, key=lambda c: (-c[1], c[0]))


def place_qubits(
    degrees: CouplingDegreeList,
    matrix: CouplingMatrix,
    return_trace: bool = False,
) -> Placement | tuple[Placement, list[PlacementStep]]:
    """Place every qubit of the profile; the lattice is unbounded.

    The next qubit is the highest-degree unplaced one that couples to a
    placed qubit; if none does (disconnected coupling graph), the globally
    highest-degree unplaced qubit is taken so the chip stays contiguous.
    """
    order = degrees.qubit_order()
    placement = Placement()
    trace: list[PlacementStep] = []
    if not order:
        return (placement, trace) if return_trace else placement

    first = order[0]
    placement.positions[first] = (0, 0)
    if return_trace:
        trace.append(PlacementStep(first, (0, 0), (((0, 0), 0),)))

    remaining = order[1:]
    while remaining:
        q = next(
            (c for c in remaining
             if any(matrix.strength(c, p) for p in placement.positions)),
            remaining[0],
        )
        candidates = candidate_nodes(placement)
        costs = [(loc, node_cost(q, loc, placement, matrix)) for loc in candidates]
        best = min(costs, key=lambda lc: lc[1])[0]
        placement.positions[q] = best
        remaining.remove(q)
        if return_trace:
            trace.append(PlacementStep(q, best, tuple(costs)))

    return (placement, trace) if return_trace else placement
