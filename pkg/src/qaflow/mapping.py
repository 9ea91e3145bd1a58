"""Logical-to-physical qubit mapping and SWAP-insertion routing.

The router processes two-qubit gates in dependency order. Gates whose
mapped endpoints share a bus execute immediately; otherwise a SWAP is
chosen on an edge touching a blocked gate's endpoint, minimizing the
summed shortest-path distance of the front layer plus a 0.5-weighted
lookahead window. If no swap improves that score, the oldest blocked
gate's endpoint is walked along one shortest path until the gate becomes
executable, which guarantees termination. Every SWAP counts as 3 gates
in the performance metric.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

import numpy as np

from .buses import ConnectivityGraph
from .profiling import CouplingProfile
from .qasm import Circuit, GateKind

LOOKAHEAD_WEIGHT = 0.5
LOOKAHEAD_WINDOW = 20
_INF = float("inf")


class TooFewPhysicalQubitsError(Exception):
    """The architecture has fewer physical qubits than the program needs."""


@dataclass(frozen=True)
class RoutedResult:
    inserted_swaps: int
    post_gate_count: int
    final_map: dict[int, int]


def performance_metric(result: RoutedResult) -> int:
    """Post-mapping gate count; smaller is better."""
    return result.post_gate_count


def all_pairs_distances(graph: ConnectivityGraph) -> dict[int, dict[int, float]]:
    """BFS hop distances between all physical qubits (inf if disconnected)."""
    dist: dict[int, dict[int, float]] = {}
    for src in graph.nodes:
        d = {src: 0.0}
        queue = deque([src])
        while queue:
            u = queue.popleft()
            for v in graph.neighbors(u):
                if v not in d:
                    d[v] = d[u] + 1
                    queue.append(v)
        dist[src] = {n: d.get(n, _INF) for n in graph.nodes}
    return dist


def _mapping_cost(

    mapping: dict[int, int], profile: CouplingProfile, dist
) -> float:
    total = 0.0
    m = profile.matrix.m
    n = profile.matrix.n
    for a in range(n):
        for b in range(a + 1, n):
            if m[a, b]:
                total += float(m[a, b]) * dist[mapping[a]][mapping[b]]
    return total


def _greedy_mapping(
    profile: CouplingProfile,
    graph: ConnectivityGraph,
    dist,
    hub_first: bool,
) -> dict[int, int]:
    """Degree-ordered greedy assignment minimizing strength*distance.

    Cost ties go to the physical qubit with the highest (hub_first) or
    lowest (boundary-hugging) physical degree, then the lowest id. The
    two variants suit different chip shapes; the caller keeps the better.
    """
    deg = {p: len(graph.neighbors(p)) for p in graph.nodes}
    sign = -1 if hub_first else 1
    free = set(graph.nodes)
    mapping: dict[int, int] = {}
    m = profile.matrix.m
    for q, _ in profile.degrees.entries:
        best_p, best_key = None, None
        for p in free:
            cost = 0.0
            for other, pos in mapping.items():
                if m[q, other]:
                    cost += float(m[q, other]) * dist[p][pos]
            key = (cost, sign * deg[p], p)
            if best_key is None or key < best_key:
                best_p, best_key = p, key
        mapping[q] = best_p
        free.remove(best_p)
    return mapping


def initial_mapping(profile: CouplingProfile, graph: ConnectivityGraph) -> dict[int, int]:
    """Initial logical-to-physical map.

    Builds a small portfolio (two greedy tie-break variants plus the
    identity map when ids line up) and keeps the candidate with the
    lowest total strength-weighted distance.
    """
    n_logical = profile.matrix.n
    if n_logical > len(graph.nodes):
        raise TooFewPhysicalQubitsError(
            f"{n_logical} logical qubits but only {len(graph.nodes)} physical"
        )
    dist = all_pairs_distances(graph)
    candidates = [
        _greedy_mapping(profile, graph, dist, hub_first=True),
        _greedy_mapping(profile, graph, dist, hub_first=False),
    ]
    node_set = set(graph.nodes)
    if all(q in node_set for q in range(n_logical)):
        candidates.append({q: q for q in range(n_logical)})
    return min(candidates, key=lambda c: _mapping_cost(c, profile, dist))


def route(
    circuit: Circuit,
    graph: ConnectivityGraph,
    map0: dict[int, int],
    return_trace: bool = False,
):
    """Route the circuit, returning swap count and post-mapping gate count.

    map0 must injectively map every logical qubit of the circuit onto
    physical qubits of the graph.
    """
    dist = all_pairs_distances(graph)
    l2p = dict(map0)
    p2l: dict[int, int] = {}
    for l, p in l2p.items():
        if p in p2l:
            raise ValueError("initial mapping is not injective")
        p2l[p] = l

    # Per-qubit queues of pending two-qubit gates; a gate is in the front
    # layer when it heads the queue of both its operands.
    twoq = [
        (idx, g.operands[0], g.operands[1])
        for idx, g in enumerate(circuit.gates)
        if g.kind is GateKind.TWO_QUBIT
    ]
    queues: dict[int, deque[int]] = {}
    for pos, (_, a, b) in enumerate(twoq):
        queues.setdefault(a, deque()).append(pos)
        queues.setdefault(b, deque()).append(pos)
    done = [False] * len(twoq)
    remaining = len(twoq)

    swaps: list[tuple[int, int]] = []
    executed: list[tuple[int, tuple[int, int]]] = []

    def front_layer() -> list[int]:
        for queue in queues.values():
            while queue and done[queue[0]]:
                queue.popleft()
        front = set()
        for queue in queues.values():
            if queue:
                pos = queue[0]
                _, a, b = twoq[pos]
                if queues[a][0] == pos and queues[b][0] == pos:
                    front.add(pos)
        return sorted(front)

    def apply_swap(u: int, v: int) -> None:
        lu, lv = p2l.get(u), p2l.get(v)
        if lu is not None:
            l2p[lu] = v
        if lv is not None:
            l2p[lv] = u
        p2l.pop(u, None)
        p2l.pop(v, None)
        if lu is not None:
            p2l[v] = lu
        if lv is not None:
            p2l[u] = lv
        swaps.append((u, v))

    def layer_score(front: list[int], extended: list[int]) -> float:
        score = 0.0
        for pos in front:
            _, a, b = twoq[pos]
            score += dist[l2p[a]][l2p[b]]
        for pos in extended:
            _, a, b = twoq[pos]
            score += LOOKAHEAD_WEIGHT * dist[l2p[a]][l2p[b]]
        return score

    def shortest_path(src: int, dst: int) -> list[int]:
        parent = {src: None}
        queue = deque([src])
        while queue:
            u = queue.popleft()
            if u == dst:
                break
            for v in graph.neighbors(u):
                if v not in parent:
                    parent[v] = u
                    queue.append(v)
        path = [dst]
        while parent[path[-1]] is not None:
            path.append(parent[path[-1]])
        return path[::-1]

    while remaining:
        front = front_layer()
        ran_any = False
        for pos in front:
            idx, a, b = twoq[pos]
            pa, pb = l2p[a], l2p[b]
            if graph.are_connected(pa, pb):
                done[pos] = True
                remaining -= 1
                ran_any = True
                executed.append((idx, (pa, pb)))
        if ran_any or not remaining:
            continue

        extended = [
            pos for pos in range(len(twoq))
            if not done[pos] and pos not in front
        ][:LOOKAHEAD_WINDOW]

        candidates = set()
        for pos in front:
            _, a, b = twoq[pos]
            for endpoint in (l2p[a], l2p[b]):
                for nb in graph.neighbors(endpoint):
                    candidates.add((min(endpoint, nb), max(endpoint, nb)))

        current = layer_score(front, extended)
        best_edge, best_score = None, None
        for u, v in sorted(candidates):
            apply_swap(u, v)
            s = layer_score(front, extended)
            apply_swap(u, v)  # undo
            swaps.pop()
            swaps.pop()
            if best_score is None or s < best_score:
                best_edge, best_score = (u, v), s

        if best_score is not None and best_score < current - 1e-9:
            apply_swap(*best_edge)
            continue

        # No improving swap: walk the oldest blocked gate's endpoint along
        # one shortest path until the gate can run.
        oldest = front[0]
        _, a, b = twoq[oldest]
        path = shortest_path(l2p[a], l2p[b])
        cur = 0
        while not graph.are_connected(path[cur], l2p[b]):
            apply_swap(path[cur], path[cur + 1])
            cur += 1

    result = RoutedResult(
        inserted_swaps=len(swaps),
        post_gate_count=len(circuit.gates) + 3 * len(swaps),
        final_map=dict(l2p),
    )
    return (result, executed, swaps) if return_trace else result
