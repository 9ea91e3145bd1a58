"""End-to-end design flow and the experiment sweep.

``run_flow`` composes profiling, layout, bus selection, and frequency
allocation into one architecture. ``pareto_sweep`` produces one row per
(configuration, bus budget) design point for each benchmark:

* ibm             - the four fixed general-purpose lattice baselines,
* eff-full        - the full flow, sweeping the 4-qubit bus budget K,
* eff-5-freq      - flow layout and buses, baseline five-frequency plan,
* eff-rd-bus      - flow layout and frequencies, random bus selection,
* eff-layout-only - flow layout, no/maximal buses, five-frequency plan.

Every row's random streams derive from (base seed, benchmark, config, K,
variant), so the CSV is byte-identical across runs and across any level
of row parallelism.
"""

from __future__ import annotations

import csv
import io
import zlib
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .arch import Architecture, build_architecture
from .buses import connectivity, edge_bus_plan, enumerate_squares, max_bus_plan, random_bus_plan, select_buses
from .freqalloc import DEFAULT_LOCAL_TRIALS, allocate, five_frequency_plan
from .layout import Placement, place_qubits
from .mapping import initial_mapping, route
from .profiling import profile_circuit
from .qasm import Circuit
from .yieldsim import RuleSet, SimParams, simulate_yield

CONFIGS = ("ibm", "eff-full", "eff-5-freq", "eff-rd-bus", "eff-layout-only")
BASELINE_NAMES = ("ibm16", "ibm16-4bus", "ibm20", "ibm20-4bus")

CSV_HEADER = ("benchmark", "config", "k", "seed", "yield", "post_gates", "perf_norm")


class UnknownBaselineError(Exception):
    pass


@dataclass(frozen=True)
class SweepRow:
    benchmark: str
    config: str
    k: int
    seed: int
    yield_rate: float
    post_gates: int
    perf_norm: float = 0.0


def derive_seed(base: int, *parts: int) -> int:
    """Stable 64-bit substream seed from a base seed and integer key parts."""
    ss = np.random.SeedSequence(base, spawn_key=tuple(int(p) & 0xFFFFFFFF for p in parts))
    return int(ss.generate_state(1, np.uint64)[0])


def _name_key(name: str) -> int:
    return zlib.crc32(name.encode("utf-8"))


def run_flow(
    circuit: Circuit,
    k: int,
    params: SimParams,
    rules: RuleSet,
    local_trials: int = DEFAULT_LOCAL_TRIALS,
) -> Architecture:
    """Full flow: profile, place, select buses (at most k), allocate."""
    return generate_architecture(
        circuit, "eff-full", k, params, rules, local_trials=local_trials
    )


def generate_architecture(
    circuit: Circuit,
    config: str,
    k: int,
    params: SimParams,
    rules: RuleSet,
    local_trials: int = DEFAULT_LOCAL_TRIALS,
    rd_seed: int | None = None,
    max_buses: bool = False,
) -> Architecture:
    """One application-specific architecture under the given configuration."""
    profile = profile_circuit(circuit)
    placement = place_qubits(profile.degrees, profile.matrix)

    if config in ("eff-full", "eff-5-freq"):
        plan = select_buses(placement, profile.matrix, k)
    elif config == "eff-rd-bus":
        rng = np.random.default_rng(rd_seed if rd_seed is not None else params.seed)
        plan = random_bus_plan(placement, k, rng)
    elif config == "eff-layout-only":
        plan = max_bus_plan(placement) if max_buses else select_buses(placement, profile.matrix, 0)
    else:
        raise ValueError(f"unknown flow config {config!r}")

    if config in ("eff-full", "eff-rd-bus"):
        graph = connectivity(placement, plan)
        freqs = allocate(placement, graph, params, rules, local_trials=local_trials)
    else:
        freqs = five_frequency_plan(placement)

    provenance = {
        "config": config,
        "k": len(plan.four_qubit_buses),
        "k_requested": k,
        "seed": params.seed,
        "source": circuit.name,
    }
    return build_architecture(placement, plan, freqs, provenance)


def _grid_placement(width: int, height: int) -> Placement:
    positions = {}
    for y in range(height):
        for x in range(width):
            positions[y * width + x] = (x, y)
    return Placement(positions=positions)


def baseline_arch(name: str) -> Architecture:
    """The four fixed general-purpose designs: 2x8 and 4x5 lattices,
    either 2-qubit buses only or maximally packed 4-qubit buses, with the
    five-frequency plan."""
    if name not in BASELINE_NAMES:
        raise UnknownBaselineError(f"unknown baseline {name!r}")
    width, height = (8, 2) if name.startswith("ibm16") else (5, 4)
    placement = _grid_placement(width, height)
    plan = max_bus_plan(placement) if name.endswith("-4bus") else edge_bus_plan(placement)
    freqs = five_frequency_plan(placement)
    return build_architecture(
        placement, plan, freqs, provenance={"config": "ibm", "name": name}
    )


def k_star(circuit: Circuit) -> int:
    """Largest useful 4-qubit bus budget: greedy selection until no
    positive-weight square remains."""
    profile = profile_circuit(circuit)
    placement = place_qubits(profile.degrees, profile.matrix)
    cap = len(enumerate_squares(placement))
    plan = select_buses(placement, profile.matrix, cap)
    return len(plan.four_qubit_buses)


@dataclass(frozen=True)
class _RowJob:
    benchmark: str
    circuit: Circuit
    config: str
    k: int
    variant: int
    base_seed: int
    sigma_mhz: float
    trials: int
    local_trials: int
    rules: RuleSet
    baseline: str | None = None
    max_buses: bool = False


def _compute_row(job: _RowJob) -> SweepRow:
    row_seed = derive_seed(
        job.base_seed, _name_key(job.benchmark), CONFIGS.index(job.config),
        job.k, job.variant,
    )
    alloc_params = SimParams(job.sigma_mhz, job.trials, derive_seed(row_seed, 1))
    if job.config == "ibm":
        arch = baseline_arch(job.baseline)
    else:
        arch = generate_architecture(
            job.circuit, job.config, job.k, alloc_params, job.rules,
            local_trials=job.local_trials,
            rd_seed=derive_seed(row_seed, 3),
            max_buses=job.max_buses,
        )
    est = simulate_yield(
        arch, SimParams(job.sigma_mhz, job.trials, derive_seed(row_seed, 2)), job.rules
    )
    profile = profile_circuit(job.circuit)
    graph = arch.connectivity_graph()
    mapping = initial_mapping(profile, graph)
    routed = route(job.circuit, graph, mapping)
    return SweepRow(
        benchmark=job.benchmark,
        config=job.config,
        k=job.k,
        seed=job.variant,
        yield_rate=est.rate,
        post_gates=routed.post_gate_count,
    )


def sweep_jobs(
    circuits: list[Circuit],
    configs,
    k_max: int | None,
    params: SimParams,
    rules: RuleSet,
    rd_samples: int = 10,
    local_trials: int = DEFAULT_LOCAL_TRIALS,
) -> list[_RowJob]:
    """Expand benchmarks x configurations into independent row jobs."""
    jobs: list[_RowJob] = []

    def add(circuit, config, k, variant, baseline=None, max_buses=False):
        jobs.append(_RowJob(
            benchmark=circuit.name, circuit=circuit, config=config, k=k,
            variant=variant, base_seed=params.seed, sigma_mhz=params.sigma_mhz,
            trials=params.trials, local_trials=local_trials, rules=rules,
            baseline=baseline, max_buses=max_buses,
        ))

    for circuit in circuits:
        cap = k_star(circuit) if k_max is None else k_max
        for config in configs:
            if config == "ibm":
                for variant, name in enumerate(BASELINE_NAMES, start=1):
                    size = 16 if name.startswith("ibm16") else 20
                    if circuit.num_qubits <= size:
                        k = len(baseline_arch(name).bus_plan.four_qubit_buses)
                        add(circuit, "ibm", k, variant, baseline=name)
            elif config in ("eff-full", "eff-5-freq"):
                for k in range(cap + 1):
                    add(circuit, config, k, 0)
            elif config == "eff-rd-bus":
                for k in range(1, cap + 1):
                    for s in range(rd_samples):
                        add(circuit, config, k, s)
            elif config == "eff-layout-only":
                add(circuit, config, 0, 0)
                profile = profile_circuit(circuit)
                placement = place_qubits(profile.degrees, profile.matrix)
                k_all = len(max_bus_plan(placement).four_qubit_buses)
                add(circuit, config, k_all, 1, max_buses=True)
            else:
                raise ValueError(f"unknown config {config!r}")
    return jobs


def pareto_sweep(
    circuits: list[Circuit],
    configs=CONFIGS,
    k_max: int | None = None,
    params: SimParams = None,
    rules: RuleSet = None,
    rd_samples: int = 10,
    local_trials: int = DEFAULT_LOCAL_TRIALS,
    jobs: int = 1,
) -> list[SweepRow]:
    """Run every design point and return normalized, deterministically
    sorted rows. perf_norm is 1 for the benchmark's best (smallest)
    post-mapping gate count."""
    job_list = sweep_jobs(circuits, configs, k_max, params, rules,
                          rd_samples=rd_samples, local_trials=local_trials)
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            rows = list(pool.map(_compute_row, job_list, chunksize=1))
    else:
        rows = [_compute_row(j) for j in job_list]

    best: dict[str, int] = {}
    for r in rows:
        best[r.benchmark] = min(best.get(r.benchmark, r.post_gates), r.post_gates)
    rows = [
        SweepRow(r.benchmark, r.config, r.k, r.seed, r.yield_rate, r.post_gates,
                 perf_norm=best[r.benchmark] / r.post_gates)
        for r in rows
    ]
    rows.sort(key=lambda r: (r.benchmark, r.config, r.k, r.seed))
    return rows


def rows_to_csv(rows: list[SweepRow]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_HEADER)
    for r in rows:
        w.writerow([
            r.benchmark, r.config, r.k, r.seed,
            f"{r.yield_rate:.6f}", r.post_gates, f"{r.perf_norm:.6f}",
        ])
    return buf.getvalue()


def write_rows_csv(rows: list[SweepRow], path: str | Path) -> None:
    Path(path).write_text(rows_to_csv(rows), encoding="utf-8")
