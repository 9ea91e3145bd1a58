"""Bundled desk-scale benchmark programs.

Stand-ins covering the gate-pattern families the flow cares about: a
chain-coupled trotterized spin model, a uniform all-pairs pattern (qft),
a ripple-carry adder, a chain-dominant ansatz with weak long-range
terms, and a 3-regular maxcut ansatz. See tools/gen_benchmarks.py for
how they were produced.
"""

from __future__ import annotations

from importlib import resources

from ..qasm import Circuit, parse_qasm


def names() -> list[str]:
    files = resources.files(__package__)
    return sorted(
        p.name[: -len(".qasm")]
        for p in files.iterdir()
        if p.name.endswith(".qasm")
    )


def load(name: str) -> Circuit:
    text = resources.files(__package__).joinpath(f"{name}.qasm").read_text()
    return parse_qasm(text, name=name)
