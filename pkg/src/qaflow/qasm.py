"""OpenQASM 2.0 ingestion and the gate-list circuit representation.

The toolchain only needs gate names, operand indices, and arity, so the
parser accepts a deliberately small subset of OpenQASM 2.0:

* exactly one ``qreg`` (dense qubit indexing in register order),
* any number of ``creg`` declarations (ignored),
* gate applications with literal, indexed qubit operands,
* ``measure q[i] -> c[j];`` (classical target not bounds-checked),
* ``barrier`` statements (dropped).

Gate parameters in parentheses are parsed and discarded; gate names are
preserved verbatim. Gates on three or more qubits are rejected: inputs
are expected to be decomposed into 1- and 2-qubit gates beforehand.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from pathlib import Path


class GateKind(Enum):
    ONE_QUBIT = "one_qubit"
    TWO_QUBIT = "two_qubit"
    MEASURE = "measure"


class QasmError(Exception):
    """Base class for all parse-time failures."""


class QasmSyntaxError(QasmError):
    """Malformed token or statement; carries the 1-based source line."""

    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


class UnsupportedGateError(QasmError):
    """Gate of arity >= 3 (input was not decomposed)."""


class IndexOutOfRangeError(QasmError):
    """Qubit operand index exceeds the declared register size."""


class MultipleRegistersError(QasmError):
    """More than one qreg declaration; only a single register is supported."""


@dataclass(frozen=True)
class Gate:
    name: str
    operands: tuple[int, ...]
    kind: GateKind


@dataclass(frozen=True)
class Circuit:
    num_qubits: int
    gates: tuple[Gate, ...]
    name: str = "circuit"


_QREG_RE = re.compile(r"^qreg\s+([A-Za-z_]\w*)\s*\[\s*(\d+)\s*\]$")
_CREG_RE = re.compile(r"^creg\s+([A-Za-z_]\w*)\s*\[\s*(\d+)\s*\]$")
_MEASURE_RE = re.compile(
    r"^measure\s+([A-Za-z_]\w*)\s*\[\s*(\d+)\s*\]\s*->\s*[A-Za-z_]\w*\s*\[\s*\d+\s*\]$"
)
_GATE_RE = re.compile(r"^([A-Za-z_]\w*)\s*(?:\(([^)]*)\))?\s+(.+)$")
_OPERAND_RE = re.compile(r"^([A-Za-z_]\w*)\s*\[\s*(\d+)\s*\]$")

# Statement keywords that are not gate applications. "gate"/"opaque"
# definitions, conditionals, and reset are outside the supported subset.
_REJECTED_KEYWORDS = ("gate", "opaque", "if", "reset")


def parse_qasm(text: str, name: str = "circuit") -> Circuit:
    """Parse an OpenQASM 2.0 program (supported subset) into a Circuit.

    Raises QasmSyntaxError, UnsupportedGateError, IndexOutOfRangeError,
    or MultipleRegistersError on malformed or out-of-subset input.
    """
    qreg_name: str | None = None
    qreg_size = 0
    gates: list[Gate] = []

    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("//", 1)[0]
        for stmt in line.split(";"):
            stmt = stmt.strip()
            if not stmt:
                continue
            if stmt.startswith("OPENQASM") or stmt.startswith("include"):
                continue
            head = stmt.split(None, 1)[0].rstrip("(")
            if stmt.startswith("qreg"):
                m = _QREG_RE.match(stmt)
                if m is None:
                    raise QasmSyntaxError(line_no, f"malformed qreg: {stmt!r}")
                if qreg_name is not None:
                    raise MultipleRegistersError(
                        f"line {line_no}: second qreg {m.group(1)!r}; "
                        "only one quantum register is supported"
                    )
                qreg_name, qreg_size = m.group(1), int(m.group(2))
                continue
            if stmt.startswith("creg"):
                if _CREG_RE.match(stmt) is None:
                    raise QasmSyntaxError(line_no, f"malformed creg: {stmt!r}")
                continue
            if stmt.startswith("barrier"):
                continue
            if head in _REJECTED_KEYWORDS:
                raise QasmSyntaxError(line_no, f"unsupported statement: {stmt!r}")
            if stmt.startswith("measure"):
                m = _MEASURE_RE.match(stmt)
                if m is None:
                    raise QasmSyntaxError(line_no, f"malformed measure: {stmt!r}")
                idx = _qubit_index(m.group(1), m.group(2), qreg_name, qreg_size, line_no)
                gates.append(Gate("measure", (idx,), GateKind.MEASURE))
                continue

            m = _GATE_RE.match(stmt)
            if m is None:
                raise QasmSyntaxError(line_no, f"malformed statement: {stmt!r}")
            gate_name, _params, args = m.group(1), m.group(2), m.group(3)
            operands = []
            for arg in args.split(","):
                om = _OPERAND_RE.match(arg.strip())
                if om is None:
                    raise QasmSyntaxError(
                        line_no, f"operand {arg.strip()!r} is not an indexed qubit"
                    )
                operands.append(
                    _qubit_index(om.group(1), om.group(2), qreg_name, qreg_size, line_no)
                )
            if len(operands) >= 3:
                raise UnsupportedGateError(
                    f"line {line_no}: {gate_name!r} acts on {len(operands)} qubits; "
                    "gates must be decomposed into 1- and 2-qubit gates"
                )
            if len(operands) == 2:
                if operands[0] == operands[1]:
                    raise QasmSyntaxError(
                        line_no, f"two-qubit gate {gate_name!r} with repeated operand"
                    )
                gates.append(Gate(gate_name, tuple(operands), GateKind.TWO_QUBIT))
            else:
                gates.append(Gate(gate_name, tuple(operands), GateKind.ONE_QUBIT))

    return Circuit(num_qubits=qreg_size, gates=tuple(gates), name=name)


def _qubit_index(
    reg: str, idx_str: str, qreg_name: str | None, qreg_size: int, line_no: int
) -> int:
    if qreg_name is None:
        raise QasmSyntaxError(line_no, "qubit operand before qreg declaration")
    if reg != qreg_name:
        raise QasmSyntaxError(line_no, f"unknown register {reg!r}")
    idx = int(idx_str)
    if idx >= qreg_size:
        raise IndexOutOfRangeError(
            f"line {line_no}: {reg}[{idx}] exceeds register size {qreg_size}"
        )
    return idx


def parse_qasm_file(path: str | Path) -> Circuit:
    path = Path(path)
    return parse_qasm(path.read_text(encoding="utf-8"), name=path.stem)


def to_qasm(circuit: Circuit) -> str:
    """Serialize a Circuit back to the supported OpenQASM 2.0 subset.

    Parameters were discarded at parse time, so gates are emitted bare;
    the output re-parses to an identical Circuit.
    """
    lines = ['OPENQASM 2.0;', 'include "qelib1.inc";', f"qreg q[{circuit.num_qubits}];"]
    if any(g.kind is GateKind.MEASURE for g in circuit.gates):
        lines.append(f"creg c[{circuit.num_qubits}];")
    for g in circuit.gates:
        if g.kind is GateKind.MEASURE:
            lines.append(f"measure q[{g.operands[0]}] -> c[{g.operands[0]}];")
        else:
            args = ",".join(f"q[{i}]" for i in g.operands)
            lines.append(f"{g.name} {args};")
    return "\n".join(lines) + "\n"


def two_qubit_gate_count(circuit: Circuit) -> int:
    """Number of two-qubit gate instances in the circuit."""
    return sum(1 for g in circuit.gates if g.kind is GateKind.TWO_QUBIT)
