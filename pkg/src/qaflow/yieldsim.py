"""Monte Carlo fabrication-yield estimation under frequency-collision rules.

Fabrication is modeled as i.i.d. Gaussian noise N(0, sigma) added to each
qubit's design frequency. A sampled chip fails if any collision rule fires
on any connected pair (rules scoped "pair", both orientations) or on any
center qubit with two of its neighbors (rules scoped "triple", both
orientations of the neighbor pair). Yield is the fraction of samples with
no collision.

Rules are data, not code: each rule is a linear expression
``a_j*f_j + a_k*f_k + a_i*f_i + a_delta*delta`` (MHz) compared either
against a near-zero threshold (|expr| < t) or against zero (expr > 0).
The default rule set ships as ``data/collision_rules.json``; tests inject
reduced rule sets through the same type.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Iterable, Mapping

import numpy as np

from .buses import ConnectivityGraph


@dataclass(frozen=True)
class CollisionRule:
    rule_id: int
    scope: str  # "pair" | "triple"
    fj: float
    fk: float
    fi: float
    delta: float
    relation: str  # "near_zero" | "strictly_positive"
    threshold_mhz: float | None

    def __post_init__(self):
        if self.scope == "pair" and self.fi != 0:
            raise ValueError(f"pair rule {self.rule_id} must not use f_i")
        if self.relation == "near_zero" and self.threshold_mhz is None:
            raise ValueError(f"rule {self.rule_id}: near_zero needs a threshold")


@dataclass(frozen=True)
class RuleSet:
    rules: tuple[CollisionRule, ...]
    delta_mhz: float = -340.0

    def only(self, *rule_ids: int) -> "RuleSet":
        """Reduced rule set, e.g. for single-rule oracles in tests."""
        keep = tuple(r for r in self.rules if r.rule_id in rule_ids)
        return RuleSet(rules=keep, delta_mhz=self.delta_mhz)

    @staticmethod
    def from_dict(data: Mapping) -> "RuleSet":
        rules = tuple(
            CollisionRule(
                rule_id=r["id"],
                scope=r["scope"],
                fj=float(r["coeff"]["fj"]),
                fk=float(r["coeff"]["fk"]),
                fi=float(r["coeff"]["fi"]),
                delta=float(r["coeff"]["delta"]),
                relation=r["relation"],
                threshold_mhz=None if r["threshold_mhz"] is None else float(r["threshold_mhz"]),
            )
            for r in data["rules"]
        )
        return RuleSet(rules=rules, delta_mhz=float(data["delta_mhz"]))

    def to_dict(self) -> dict:
        return {
            "delta_mhz": self.delta_mhz,
            "rules": [
                {
                    "id": r.rule_id,
                    "scope": r.scope,
                    "coeff": {"fj": r.fj, "fk": r.fk, "fi": r.fi, "delta": r.delta},
                    "relation": r.relation,
                    "threshold_mhz": r.threshold_mhz,
                }
                for r in self.rules
            ],
        }


def load_rules(path: str | Path) -> RuleSet:
    with open(path, encoding="utf-8") as f:
        return RuleSet.from_dict(json.load(f))


def default_rules() -> RuleSet:
    text = resources.files("qaflow").joinpath("data/collision_rules.json").read_text()
    return RuleSet.from_dict(json.loads(text))


@dataclass(frozen=True)
class SimParams:
    sigma_mhz: float
    trials: int
    seed: int

    def __post_init__(self):
        if self.sigma_mhz < 0:
            raise ValueError("sigma_mhz must be non-negative")
        if self.trials < 1:
            raise ValueError("trials must be at least 1")


@dataclass(frozen=True)
class YieldEstimate:
    rate: float
    successes: int
    trials: int


@dataclass(frozen=True)
class CheckSet:
    """Enumerated rule instances over a connectivity graph.

    pairs: both orientations (j, k) of every connected pair.
    triples: (j, k, i) for every center j and unordered neighbor pair
    {k, i}, in both orientations (some rules are asymmetric in k/i).
    """

    pairs: tuple[tuple[int, int], ...]
    triples: tuple[tuple[int, int, int], ...]


def enumerate_checks(graph: ConnectivityGraph) -> CheckSet:
    pairs = []
    for a, b in graph.pairs:
        pairs.append((a, b))
        pairs.append((b, a))
    triples = []
    for j in graph.nodes:
        nbs = graph.neighbors(j)
        for x in range(len(nbs)):
            for y in range(x + 1, len(nbs)):
                k, i = nbs[x], nbs[y]
                triples.append((j, k, i))
                triples.append((j, i, k))
    return CheckSet(pairs=tuple(pairs), triples=tuple(triples))


def sample_fabrication(
    freqs: Mapping[int, float], sigma_mhz: float, rng: np.random.Generator
) -> dict[int, float]:
    """Post-fabrication frequencies (GHz): one Gaussian draw per qubit.

    Qubits are drawn in ascending id order, keeping the result a pure
    function of the generator state.
    """
    out = {}
    for q in sorted(freqs):
        out[q] = freqs[q] + rng.normal(0.0, sigma_mhz) / 1000.0
    return out


def _compile_checks(checks: CheckSet, index: Mapping[int, int]) -> tuple[np.ndarray, np.ndarray]:
    pairs = np.array([(index[j], index[k]) for j, k in checks.pairs], dtype=np.intp)
    triples = np.array([(index[j], index[k], index[i]) for j, k, i in checks.triples], dtype=np.intp)
    return pairs.reshape(-1, 2), triples.reshape(-1, 3)


def _rule_instances(
    rule: CollisionRule, pairs_idx: np.ndarray, triples_idx: np.ndarray
) -> np.ndarray:
    """Instance index rows for one rule, skipping redundant orientations.

    Both orientations of a check evaluate the identical |expr| when a
    near-zero pair rule is antisymmetric with no delta term, or when a
    triple rule is symmetric in its two outer qubits; one orientation
    then suffices. Index maps are monotone in qubit id, so comparing
    indices is comparing ids.
    """
    if rule.scope == "pair":
        idx = pairs_idx
        if rule.relation == "near_zero" and rule.fj == -rule.fk and rule.delta == 0:
            idx = idx[idx[:, 0] < idx[:, 1]]
        return idx
    idx = triples_idx
    if rule.relation == "near_zero" and rule.fk == rule.fi:
        idx = idx[idx[:, 1] < idx[:, 2]]
    return idx


def _collision_mask(
    f_mhz: np.ndarray,
    pairs_idx: np.ndarray,
    triples_idx: np.ndarray,
    rules: RuleSet,
) -> np.ndarray:
    """Per-trial collision indicator for post-fab frequencies (trials, n)."""
    collided = np.zeros(f_mhz.shape[0], dtype=bool)
    for rule in rules.rules:
        idx = _rule_instances(rule, pairs_idx, triples_idx)
        if idx.shape[0] == 0:
            continue
        if rule.scope == "pair":
            expr = (
                rule.fj * f_mhz[:, idx[:, 0]]
                + rule.fk * f_mhz[:, idx[:, 1]]
                + rule.delta * rules.delta_mhz
            )
        else:
            expr = (
                rule.fj * f_mhz[:, idx[:, 0]]
                + rule.fk * f_mhz[:, idx[:, 1]]
                + rule.fi * f_mhz[:, idx[:, 2]]
                + rule.delta * rules.delta_mhz
            )
        if rule.relation == "near_zero":
            hit = np.abs(expr) < rule.threshold_mhz
        else:
            hit = expr > 0.0
        collided |= hit.any(axis=1)
    return collided


def check_collision(
    postfab: Mapping[int, float], checks: CheckSet, rules: RuleSet
) -> bool:
    """True iff any rule fires on the given post-fab frequencies (GHz)."""
    qubits = sorted(postfab)
    index = {q: i for i, q in enumerate(qubits)}
    f_mhz = np.array([[postfab[q] * 1000.0 for q in qubits]])
    pairs_idx, triples_idx = _compile_checks(checks, index)
    return bool(_collision_mask(f_mhz, pairs_idx, triples_idx, rules)[0])


def success_mask(
    freqs: Mapping[int, float],
    graph: ConnectivityGraph,
    noise_mhz: np.ndarray,
    rules: RuleSet,
) -> np.ndarray:
    """Per-trial success indicators for explicit noise draws (trials, n).

    Noise columns follow ascending qubit id. Exposed so tests can reuse
    one noise matrix across different graphs.
    """
    qubits = sorted(freqs)
    index = {q: i for i, q in enumerate(qubits)}
    base = np.array([freqs[q] * 1000.0 for q in qubits])
    f_mhz = base[None, :] + noise_mhz
    pairs_idx, triples_idx = _compile_checks(enumerate_checks(graph), index)
    return ~_collision_mask(f_mhz, pairs_idx, triples_idx, rules)


def simulate_yield_graph(
    freqs: Mapping[int, float],
    graph: ConnectivityGraph,
    params: SimParams,
    rules: RuleSet,
) -> YieldEstimate:
    """Monte Carlo yield for design frequencies (GHz) on a connectivity graph.

    Trial t consumes row t of a seed-determined noise matrix, so the
    estimate is reproducible and independent of how trials would be
    partitioned across workers.
    """
    rng = np.random.default_rng(params.seed)
    noise = rng.normal(0.0, params.sigma_mhz, size=(params.trials, len(freqs)))
    ok = success_mask(freqs, graph, noise, rules)
    successes = int(ok.sum())
    return YieldEstimate(
        rate=successes / params.trials, successes=successes, trials=params.trials
    )


def simulate_yield(arch, params: SimParams, rules: RuleSet) -> YieldEstimate:
    """Yield of a finished architecture (frequencies must be assigned)."""
    freqs = arch.frequencies()
    if any(v is None for v in freqs.values()):
        raise ValueError("architecture has unassigned frequencies")
    return simulate_yield_graph(freqs, arch.connectivity_graph(), params, rules)
