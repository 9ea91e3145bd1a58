"""Design-frequency assignment.

Two schemes are provided:

* ``allocate`` walks each chip component from its geometric center
  outward in breadth-first order over the connectivity graph and assigns
  every visited qubit the candidate frequency (0.01 GHz grid over
  5.00..5.34 GHz) with the best simulated local yield, then repeats the
  same per-qubit step in further refinement sweeps until the plan stops
  changing. The local score for a qubit is the Monte Carlo probability
  that no collision rule involving it fires among the already-assigned
  qubits within connectivity distance 2 - the only qubits any of its
  rules can reach. All candidates share one noise draw per step, so the
  argmax is a paired comparison.
* ``five_frequency_plan`` is the fixed baseline: five frequencies in
  arithmetic progression 5.00..5.27 GHz, tiled with period 5 along the
  (1, 2) lattice diagonal so no two qubits within lattice distance 2
  repeat a frequency.

The 340 MHz window equals the anharmonicity magnitude, which keeps the
inequality rule unsatisfiable by construction.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Mapping

import numpy as np

from .buses import ConnectivityGraph
from .layout import Placement
from .yieldsim import (
    CheckSet,
    RuleSet,
    SimParams,
    _rule_instances,
    enumerate_checks,
    success_mask,
)

CANDIDATE_FREQS_GHZ = tuple(float(v) for v in np.arange(500, 535) / 100.0)
CENTER_FREQ_GHZ = CANDIDATE_FREQS_GHZ[17]  # 5.17, middle of the window
FIVE_FREQS_GHZ = tuple(float(v) for v in np.linspace(5.00, 5.27, 5))

DEFAULT_LOCAL_TRIALS = 8000
DEFAULT_PASSES = 3
DEFAULT_RESTARTS = 3

_EVAL_KEY = 0xFFFFFFFF  # spawn key reserved for the restart-selection stream


@dataclass(frozen=True)
class FrequencyPlan:
    freqs: dict[int, float]


@dataclass(frozen=True)
class AllocationStep:
    """Replayable record of one per-qubit candidate sweep."""

    qubit: int
    restart: int
    step: int
    sweep: int
    region: tuple[int, ...]
    region_freqs: tuple[tuple[int, float], ...]  # other qubits, frozen at the step
    rates: tuple[float, ...]  # one per candidate frequency
    chosen_ghz: float


def center_qubit(placement: Placement, within: Iterable[int] | None = None) -> int:
    """Qubit closest (Euclidean) to the centroid; ties to the lowest id."""
    qubits = sorted(placement.positions if within is None else within)
    if not qubits:
        raise ValueError("empty placement")
    xs = np.array([placement.positions[q][0] for q in qubits], dtype=float)
    ys = np.array([placement.positions[q][1] for q in qubits], dtype=float)
    d2 = (xs - xs.mean()) ** 2 + (ys - ys.mean()) ** 2
    return qubits[int(np.lexsort((np.array(qubits), d2))[0])]


def local_region(q: int, graph: ConnectivityGraph, assigned: set[int]) -> tuple[int, ...]:
    """Assigned qubits within connectivity distance 2 of q, plus q itself.

    Distance 2 suffices: triple rules span one shared neighbor, so no rule
    can involve q and a qubit further away.
    """
    n1 = set(graph.neighbors(q))
    n2 = set()
    for u in n1:
        n2.update(graph.neighbors(u))
    region = ({q} | n1 | n2) & (assigned | {q})
    return tuple(sorted(region))


def _components(graph: ConnectivityGraph) -> list[list[int]]:
    seen: set[int] = set()
    comps = []
    for start in graph.nodes:
        if start in seen:
            continue
        comp, queue = [], deque([start])
        seen.add(start)
        while queue:
            u = queue.popleft()
            comp.append(u)
            for v in graph.neighbors(u):
                if v not in seen:
                    seen.add(v)
                    queue.append(v)
        comps.append(sorted(comp))
    comps.sort(key=lambda c: c[0])
    return comps


def _bfs_order(graph: ConnectivityGraph, root: int) -> list[int]:
    """Breadth-first discovery order from root, neighbors by ascending id."""
    order = []
    visited = {root}
    queue = deque([root])
    while queue:
        u = queue.popleft()
        for v in graph.neighbors(u):
            if v not in visited:
                visited.add(v)
                order.append(v)
                queue.append(v)
    return order


def candidate_rates(
    q: int,
    region: tuple[int, ...],
    graph: ConnectivityGraph,
    freqs: Mapping[int, float],
    params: SimParams,
    rules: RuleSet,
    local_trials: int,
    step: int,
    restart: int = 0,
) -> np.ndarray:
    """Simulated no-collision rate of every candidate frequency for q.

    Only rule instances involving q are scored; the other region qubits'
    mutual collisions are independent of the choice. Exprs are linear in
    q's frequency, so one noise matrix (derived from (seed, restart,
    step)) scores all candidates in a single pass.
    """
    sub = graph.induced(region)
    checks = enumerate_checks(sub)
    checks = CheckSet(
        pairs=tuple(p for p in checks.pairs if q in p),
        triples=tuple(t for t in checks.triples if q in t),
    )
    index = {node: i for i, node in enumerate(region)}
    rng = np.random.default_rng(
        np.random.SeedSequence(params.seed, spawn_key=(restart, step))
    )
    noise = rng.normal(0.0, params.sigma_mhz, size=(local_trials, len(region))).astype(np.float32)
    base_f = np.array([freqs.get(node, 0.0) * 1000.0 for node in region], dtype=np.float32)
    base_f[index[q]] = 0.0
    f = base_f[None, :] + noise

    cands_mhz = (np.array(CANDIDATE_FREQS_GHZ) * 1000.0).astype(np.float32)
    pairs_idx = np.array(
        [(index[j], index[k]) for j, k in checks.pairs], dtype=np.intp
    ).reshape(-1, 2)
    triples_idx = np.array(
        [(index[j], index[k], index[i]) for j, k, i in checks.triples], dtype=np.intp
    ).reshape(-1, 3)
    collided = np.zeros((len(cands_mhz), local_trials), dtype=bool)
    for rule in rules.rules:
        idx = _rule_instances(rule, pairs_idx, triples_idx)
        if idx.shape[0] == 0:
            continue
        slots = (rule.fj, rule.fk) if rule.scope == "pair" else (rule.fj, rule.fk, rule.fi)
        base = np.full((local_trials, idx.shape[0]), rule.delta * rules.delta_mhz,
                       dtype=np.float32)
        for s, coef in enumerate(slots):
            base += np.float32(coef) * f[:, idx[:, s]]
        w = np.zeros(idx.shape[0], dtype=np.float32)
        for s, coef in enumerate(slots):
            w += np.float32(coef) * (idx[:, s] == index[q])
        expr = base[None, :, :] + (w[None, None, :] * cands_mhz[:, None, None])
        np.abs(expr, out=expr)
        if rule.relation == "near_zero":
            hit = expr < rule.threshold_mhz
            collided |= hit.any(axis=2)
        else:
            # one-sided rule: |expr| trick does not apply, recompute signed
            signed = base[None, :, :] + (w[None, None, :] * cands_mhz[:, None, None])
            collided |= (signed > 0.0).any(axis=2)
    return 1.0 - collided.mean(axis=1)


def _greedy_sweeps(
    placement: Placement,
    graph: ConnectivityGraph,
    params: SimParams,
    rules: RuleSet,
    local_trials: int,
    passes: int,
    restart: int,
    want_trace: bool,
) -> tuple[dict[int, float], list[AllocationStep]]:
    assigned: dict[int, float] = {}
    trace: list[AllocationStep] = []
    orders: list[list[int]] = []
    step = 0
    for comp in _components(graph):
        root = center_qubit(placement, within=comp)
        assigned[root] = CENTER_FREQ_GHZ
        orders.append(_bfs_order(graph.induced(comp), root))

    for sweep in range(max(1, passes)):
        changed = False
        for order in orders:
            for v in order:
                region = local_region(v, graph, set(assigned))
                rates = candidate_rates(
                    v, region, graph, assigned, params, rules,
                    local_trials, step, restart,
                )
                best = int(np.argmax(rates))  # argmax keeps the lowest index on ties
                freq = CANDIDATE_FREQS_GHZ[best]
                if want_trace:
                    trace.append(AllocationStep(
                        qubit=v, restart=restart, step=step, sweep=sweep,
                        region=region,
                        region_freqs=tuple(
                            (n, assigned[n]) for n in region if n != v
                        ),
                        rates=tuple(rates), chosen_ghz=freq,
                    ))
                if assigned.get(v) != freq:
                    changed = True
                assigned[v] = freq
                step += 1
        if not changed:
            break
    return assigned, trace


def allocate(
    placement: Placement,
    graph: ConnectivityGraph,
    params: SimParams,
    rules: RuleSet,
    local_trials: int = DEFAULT_LOCAL_TRIALS,
    passes: int = DEFAULT_PASSES,
    restarts: int = DEFAULT_RESTARTS,
    return_trace: bool = False,
) -> FrequencyPlan | tuple[FrequencyPlan, list[AllocationStep]]:
    """Center-outward breadth-first frequency assignment.

    The center qubit of every connected component is pinned to the middle
    of the window; every other qubit gets the candidate with maximal
    simulated local yield, ties to the lowest frequency. After the first
    sweep the same per-qubit step repeats in the same order (at most
    ``passes`` sweeps, stopping once nothing changes) so early
    assignments are revisited with their full neighborhood known.

    The sweep procedure runs ``restarts`` times on distinct noise
    substreams; the plan with the best whole-chip yield under one shared
    evaluation stream wins (ties to the earliest restart). The result is
    a pure function of (placement, graph, params.seed).
    """
    candidates: list[tuple[dict[int, float], list[AllocationStep]]] = []
    for r in range(max(1, restarts)):
        candidates.append(_greedy_sweeps(
            placement, graph, params, rules, local_trials, passes, r,
            want_trace=return_trace,
        ))

    if len(candidates) == 1:
        best_assigned, best_trace = candidates[0]
    else:
        eval_rng = np.random.default_rng(
            np.random.SeedSequence(params.seed, spawn_key=(_EVAL_KEY,))
        )
        noise = eval_rng.normal(
            0.0, params.sigma_mhz, size=(local_trials, len(graph.nodes))
        )
        scores = [
            success_mask(assigned, graph, noise, rules).mean()
            for assigned, _ in candidates
        ]
        best_assigned, best_trace = candidates[int(np.argmax(scores))]

    plan = FrequencyPlan(freqs=best_assigned)
    return (plan, best_trace) if return_trace else plan


def replay_candidate_rates(
    entry: AllocationStep,
    graph: ConnectivityGraph,
    params: SimParams,
    rules: RuleSet,
    local_trials: int = DEFAULT_LOCAL_TRIALS,
) -> np.ndarray:
    """Recompute one trace entry's candidate rates, for argmax checks."""
    freqs = dict(entry.region_freqs)
    return candidate_rates(
        entry.qubit, entry.region, graph, freqs, params, rules,
        local_trials, entry.step, entry.restart,
    )


def five_frequency_plan(placement: Placement) -> FrequencyPlan:
    """Baseline five-frequency tiling keyed only on lattice coordinates."""
    freqs = {}
    for q, (x, y) in placement.positions.items():
        freqs[q] = float(FIVE_FREQS_GHZ[(x + 2 * y) % 5])
    return FrequencyPlan(freqs=freqs)
