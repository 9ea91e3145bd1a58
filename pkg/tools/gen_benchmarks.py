#!/usr/bin/env python3
"""Regenerate the bundled benchmark programs (src/qaflow/benchmarks/).

All programs are already decomposed to 1- and 2-qubit gates. Run from the
repository root:

    python tools/gen_benchmarks.py
"""

from __future__ import annotations

from pathlib import Path

OUT = Path(__file__).resolve().parents[1] / "src" / "qaflow" / "benchmarks"


def header(n: int) -> list[str]:
    return ['OPENQASM 2.0;', 'include "qelib1.inc";', f"qreg q[{n}];", f"creg c[{n}];"]


def measures(n: int) -> list[str]:
    return [f"measure q[{i}] -> c[{i}];" for i in range(n)]


def ising_chain(n: int = 12, rounds: int = 4) -> list[str]:
    """Trotterized transverse-field spin chain: nearest-neighbor ZZ terms."""
    lines = header(n)
    for i in range(n):
        lines.append(f"h q[{i}];")
    for r in range(rounds):
        for i in range(n - 1):
            lines.append(f"cx q[{i}],q[{i + 1}];")
            lines.append(f"rz(0.37) q[{i + 1}];")
            lines.append(f"cx q[{i}],q[{i + 1}];")
        for i in range(n):
            lines.append(f"rx(0.21) q[{i}];")
    return lines + measures(n)


def qft(n: int = 8) -> list[str]:
    """Quantum Fourier transform, controlled-phases decomposed to 2 cx each.

    Every qubit pair interacts exactly twice; final reordering swaps are
    omitted as usual for benchmark use.
    """
    lines = header(n)
    for k in range(n):
        lines.append(f"h q[{k}];")
        for j in range(k + 1, n):
            half = f"pi/{2 ** (j - k + 1)}"
            lines.append(f"u1({half}) q[{j}];")
            lines.append(f"cx q[{j}],q[{k}];")
            lines.append(f"u1(-{half}) q[{k}];")
            lines.append(f"cx q[{j}],q[{k}];")
            lines.append(f"u1({half}) q[{k}];")
    return lines + measures(n)


def _ccx(a: int, b: int, c: int) -> list[str]:
    return [
        f"h q[{c}];",
        f"cx q[{b}],q[{c}];",
        f"tdg q[{c}];",
        f"cx q[{a}],q[{c}];",
        f"t q[{c}];",
        f"cx q[{b}],q[{c}];",
        f"tdg q[{c}];",
        f"cx q[{a}],q[{c}];",
        f"t q[{b}];",
        f"t q[{c}];",
        f"h q[{c}];",
        f"cx q[{a}],q[{b}];",
        f"t q[{a}];",
        f"tdg q[{b}];",
        f"cx q[{a}],q[{b}];",
    ]


def rc_adder(bits: int = 4) -> list[str]:
    """Ripple-carry adder (in-place, majority/unmajority blocks),
    Toffolis decomposed to the standard 6-cx network.

    Layout: q[0]=carry-in, q[1..bits]=a, q[bits+1..2bits]=b,
    q[2bits+1]=carry-out.
    """
    n = 2 * bits + 2
    a = [1 + i for i in range(bits)]
    b = [bits + 1 + i for i in range(bits)]
    cin, cout = 0, 2 * bits + 1
    lines = header(n)
    for i in (1, 2):  # give the inputs something to add
        lines.append(f"x q[{a[i % bits]}];")
        lines.append(f"x q[{b[(i + 1) % bits]}];")

    def maj(x, y, z):
        return [f"cx q[{z}],q[{y}];", f"cx q[{z}],q[{x}];"] + _ccx(x, y, z)

    def uma(x, y, z):
        return _ccx(x, y, z) + [f"cx q[{z}],q[{x}];", f"cx q[{x}],q[{y}];"]

    lines += maj(cin, b[0], a[0])
    for i in range(1, bits):
        lines += maj(a[i - 1], b[i], a[i])
    lines.append(f"cx q[{a[bits - 1]}],q[{cout}];")
    for i in range(bits - 1, 0, -1):
        lines += uma(a[i - 1], b[i], a[i])
    lines += uma(cin, b[0], a[0])
    return lines + measures(n)


def coupled_cluster_ansatz(n: int = 8, strong: int = 6) -> list[str]:
    """Chain-dominant ansatz: heavy nearest-neighbor ladders plus weak
    next-nearest terms (about a tenth of the chain weight)."""
    lines = header(n)
    for i in range(n):
        lines.append(f"ry(0.42) q[{i}];")
    for r in range(strong):
        for i in range(n - 1):
            lines.append(f"cx q[{i}],q[{i + 1}];")
            lines.append(f"rz(0.11) q[{i + 1}];")
            lines.append(f"cx q[{i}],q[{i + 1}];")
    for i in range(n - 2):
        lines.append(f"cx q[{i}],q[{i + 2}];")
    return lines + measures(n)


def grid_spin_model(cols: int = 3, rows: int = 4) -> list[str]:
    """Trotterized 2D spin model on a cols x rows grid: uniform
    nearest-neighbor couplings plus site-dependent plaquette-diagonal
    terms (some plaquettes interact strongly, some weakly, some not at
    all), so the diagonal traffic varies across the chip."""
    n = cols * rows
    qid = lambda x, y: y * cols + x
    j1 = [(qid(x, y), qid(x + 1, y)) for y in range(rows) for x in range(cols - 1)]
    j1 += [(qid(x, y), qid(x, y + 1)) for y in range(rows - 1) for x in range(cols)]
    lines = header(n)
    for i in range(n):
        lines.append(f"h q[{i}];")
    for r in range(2):
        for u, v in j1:
            lines.append(f"cx q[{u}],q[{v}];")
            lines.append(f"rz(0.31) q[{v}];")
            lines.append(f"cx q[{u}],q[{v}];")
        for i in range(n):
            lines.append(f"rx(0.73) q[{i}];")
    for y in range(rows - 1):
        for x in range(cols - 1):
            rounds = (3, 1, 0)[(x + 2 * y) % 3]
            for r in range(rounds):
                for u, v in ((qid(x, y), qid(x + 1, y + 1)),
                             (qid(x + 1, y), qid(x, y + 1))):
                    lines.append(f"cx q[{u}],q[{v}];")
                    lines.append(f"rz(0.12) q[{v}];")
                    lines.append(f"cx q[{u}],q[{v}];")
    return lines + measures(n)


def main() -> None:
    OUT.mkdir(parents=True, exist_ok=True)
    programs = {
        "ising_chain_12": ising_chain(),
        "qft_8": qft(),
        "rc_adder_10": rc_adder(),
        "cc_ansatz_8": coupled_cluster_ansatz(),
        "grid_spin_12": grid_spin_model(),
    }
    for name, lines in programs.items():
        path = OUT / f"{name}.qasm"
        path.write_text("\n".join(lines) + "\n", encoding="utf-8")
        print(f"wrote {path}")


if __name__ == "__main__":
    main()
