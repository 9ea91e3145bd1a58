"""Command line interface.

Subcommands:
  profile   - coupling profile of a QASM program (optional matrix CSV)
  run       - generate one architecture JSON for a program
  sweep     - run experiment configurations and write the sweep CSV
  yield     - Monte Carlo yield of an architecture JSON
  baseline  - emit one of the fixed general-purpose baseline designs
"""

from __future__ import annotations

import argparse
import sys

from . import benchmarks
from .arch import Architecture
from .flow import (
    BASELINE_NAMES,
    CONFIGS,
    baseline_arch,
    generate_architecture,
    pareto_sweep,
    write_rows_csv,
)
from .profiling import profile_circuit, write_matrix_csv
from .qasm import parse_qasm_file, two_qubit_gate_count
from .yieldsim import SimParams, default_rules, load_rules, simulate_yield


def _add_sim_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--sigma-mhz", type=float, default=30.0,
                   help="fabrication noise std dev in MHz (default 30)")
    p.add_argument("--trials", type=int, default=10000,
                   help="Monte Carlo trials (default 10000)")
    p.add_argument("--seed", type=int, default=2024, help="base RNG seed")
    p.add_argument("--rules", default=None,
                   help="collision rule config JSON (default: bundled rules)")


def _rules(args):
    return load_rules(args.rules) if args.rules else default_rules()


def _load_circuits(paths):
    out = []
    for p in paths:
        if p.startswith("bench:"):
            out.append(benchmarks.load(p.split(":", 1)[1]))
        else:
            out.append(parse_qasm_file(p))
    return out


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="qaflow",
        description="Application-specific superconducting quantum processor design flow",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_prof = sub.add_parser("profile", help="coupling profile of a program")
    p_prof.add_argument("--qasm", required=True)
    p_prof.add_argument("--matrix", default=None, help="write matrix CSV here")

    p_run = sub.add_parser("run", help="generate one architecture")
    p_run.add_argument("--qasm", required=True)
    p_run.add_argument("--config", default="eff-full",
                       choices=[c for c in CONFIGS if c != "ibm"])
    p_run.add_argument("--k", type=int, default=0,
                       help="4-qubit bus budget (eff-layout-only: >0 packs maximally)")
    p_run.add_argument("--local-trials", type=int, default=8000,
                       help="trials per candidate frequency (default 8000)")
    p_run.add_argument("--out", required=True)
    _add_sim_args(p_run)

    p_sweep = sub.add_parser("sweep", help="run experiment configurations")
    p_sweep.add_argument("--qasm", nargs="+", required=True,
                         help="program paths, or bench:<name> for bundled benchmarks")
    p_sweep.add_argument("--configs", default="all",
                         help="comma-separated subset of: " + ",".join(CONFIGS))
    p_sweep.add_argument("--k-max", default="auto",
                         help="'auto' (stop at the last useful square) or an integer")
    p_sweep.add_argument("--rd-samples", type=int, default=10,
                         help="random bus plans per K (default 10)")
    p_sweep.add_argument("--local-trials", type=int, default=8000)
    p_sweep.add_argument("--jobs", type=int, default=1,
                         help="parallel row jobs (output is identical for any value)")
    p_sweep.add_argument("--out", required=True)
    _add_sim_args(p_sweep)

    p_yield = sub.add_parser("yield", help="Monte Carlo yield of an architecture")
    p_yield.add_argument("--arch", required=True)
    _add_sim_args(p_yield)

    p_base = sub.add_parser("baseline", help="emit a fixed baseline design")
    p_base.add_argument("--name", required=True, choices=BASELINE_NAMES)
    p_base.add_argument("--out", required=True)

    p_bench = sub.add_parser("benchmarks", help="list bundled benchmark programs")

    args = parser.parse_args(argv)

    if args.command == "profile":
        circuit = _load_circuits([args.qasm])[0]
        profile = profile_circuit(circuit)
        print(f"qubits: {circuit.num_qubits}")
        print(f"two_qubit_gates: {two_qubit_gate_count(circuit)}")
        print("degree_list: " + " ".join(f"q{q}:{d}" for q, d in profile.degrees.entries))
        if args.matrix:
            write_matrix_csv(profile.matrix, args.matrix)
            print(f"matrix written to {args.matrix}")
        return 0

    if args.command == "run":
        circuit = _load_circuits([args.qasm])[0]
        params = SimParams(args.sigma_mhz, args.trials, args.seed)
        arch = generate_architecture(
            circuit, args.config, args.k, params, _rules(args),
            local_trials=args.local_trials,
            rd_seed=args.seed,
            max_buses=(args.config == "eff-layout-only" and args.k > 0),
        )
        arch.save(args.out)
        print(f"{args.config} architecture with {arch.num_four_qubit_buses} "
              f"4-qubit buses written to {args.out}")
        return 0

    if args.command == "sweep":
        circuits = _load_circuits(args.qasm)
        configs = CONFIGS if args.configs == "all" else tuple(args.configs.split(","))
        unknown = set(configs) - set(CONFIGS)
        if unknown:
            parser.error(f"unknown configs: {sorted(unknown)}")
        k_max = None if args.k_max == "auto" else int(args.k_max)
        params = SimParams(args.sigma_mhz, args.trials, args.seed)
        rows = pareto_sweep(
            circuits, configs, k_max, params, _rules(args),
            rd_samples=args.rd_samples, local_trials=args.local_trials,
            jobs=args.jobs,
        )
        write_rows_csv(rows, args.out)
        print(f"{len(rows)} rows written to {args.out}")
        return 0

    if args.command == "yield":
        arch = Architecture.load(args.arch)
        params = SimParams(args.sigma_mhz, args.trials, args.seed)
        est = simulate_yield(arch, params, _rules(args))
        print(f"yield {est.rate:.6f} ({est.successes}/{est.trials})")
        return 0

    if args.command == "baseline":
        arch = baseline_arch(args.name)
        arch.save(args.out)
        print(f"{args.name} written to {args.out}")
        return 0

    if args.command == "benchmarks":
        for name in benchmarks.names():
            print(name)
        return 0

    return 1


if __name__ == "__main__":
    sys.exit(main())
