"""Gate and circuit containers plus the plain-text circuit format.

A circuit is a time-ordered gate list: the first gate in ``gates`` acts
first. The unitary of a circuit is therefore the product of the gate
unitaries in reverse list order.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

GATE_ARITY: dict[str, int] = {
    "h": 1,
    "s": 1,
    "sdg": 1,
    "x": 1,
    "y": 1,
    "z": 1,
    "cx": 2,
    "cz": 2,
    "swap": 2,
}

# Gates whose two qubit operands are interchangeable; stored sorted ascending.
UNORDERED_KINDS = frozenset({"cz", "swap"})

PAULI_KINDS = frozenset({"x", "y", "z"})
SINGLE_QUBIT_KINDS = frozenset({"h", "s", "sdg", "x", "y", "z"})
TWO_QUBIT_KINDS = frozenset({"cx", "cz", "swap"})

# Contribution to the reporting metric: CX and CZ count 1, SWAP counts as
# its three-CX expansion.
TWO_QUBIT_WEIGHT: dict[str, int] = {"cx": 1, "cz": 1, "swap": 3}

_INVERSE_KIND: dict[str, str] = {
    "h": "h",
    "s": "sdg",
    "sdg": "s",
    "x": "x",
    "y": "y",
    "z": "z",
    "cx": "cx",
    "cz": "cz",
    "swap": "swap",
}


@dataclass(frozen=True)
class Gate:
    """A single gate application, identified by mnemonic and qubit operands."""

    kind: str
    qubits: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.kind not in GATE_ARITY:
            raise ValueError(f"unknown gate kind {self.kind!r}")
        arity = GATE_ARITY[self.kind]
        if len(self.qubits) != arity:
            raise ValueError(
                f"gate {self.kind!r} takes {arity} qubit(s), got {self.qubits}"
            )
        if any(q < 0 for q in self.qubits):
            raise ValueError(f"negative qubit index in {self.qubits}")
        if arity == 2:
            if self.qubits[0] == self.qubits[1]:
                raise ValueError(f"gate {self.kind!r} needs distinct qubits")
            if self.kind in UNORDERED_KINDS and self.qubits[0] > self.qubits[1]:
                object.__setattr__(
                    self, "qubits", (self.qubits[1], self.qubits[0])
                )

    def inverse(self) -> "Gate":
        return Gate(_INVERSE_KIND[self.kind], self.qubits)

    def touches(self, qubit: int) -> bool:
        return qubit in self.qubits

    @property
    def is_two_qubit(self) -> bool:
        return self.kind in TWO_QUBIT_KINDS

    def relabeled(self, mapping) -> "Gate":
        """Return the gate with each qubit ``q`` replaced by ``mapping[q]``."""
        return Gate(self.kind, tuple(mapping[q] for q in self.qubits))

    def __str__(self) -> str:
        return " ".join([self.kind, *map(str, self.qubits)])


def h(q: int) -> Gate:
    return Gate("h", (q,))


def s(q: int) -> Gate:
    return Gate("s", (q,))


def sdg(q: int) -> Gate:
    return Gate("sdg", (q,))


def x(q: int) -> Gate:
    return Gate("x", (q,))


def y(q: int) -> Gate:
    return Gate("y", (q,))


def z(q: int) -> Gate:
    return Gate("z", (q,))


def cx(control: int, target: int) -> Gate:
    return Gate("cx", (control, target))


def cz(a: int, b: int) -> Gate:
    return Gate("cz", (a, b))


def swap(a: int, b: int) -> Gate:
    return Gate("swap", (a, b))


@dataclass(frozen=True)
class Circuit:
    """A fixed-width, time-ordered list of gates."""

    n: int
    gates: tuple[Gate, ...] = ()

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"circuit needs at least one qubit, got n={self.n}")
        if not isinstance(self.gates, tuple):
            object.__setattr__(self, "gates", tuple(self.gates))
        for g in self.gates:
            if max(g.qubits) >= self.n:
                raise ValueError(
                    f"gate {g} out of range for {self.n} qubit(s)"
                )

    def __len__(self) -> int:
        return len(self.gates)

    def __iter__(self) -> Iterator[Gate]:
        return iter(self.gates)

    def __add__(self, other: "Circuit") -> "Circuit":
        if self.n != other.n:
            raise ValueError(f"width mismatch: {self.n} vs {other.n}")
        return Circuit(self.n, self.gates + other.gates)

    @property
    def two_qubit_count(self) -> int:
        """Two-qubit cost of the circuit: CX and CZ count 1, SWAP counts 3."""
        return sum(TWO_QUBIT_WEIGHT.get(g.kind, 0) for g in self.gates)

    @property
    def total_count(self) -> int:
        return len(self.gates)

    def count_kind(self, kind: str) -> int:
        return sum(1 for g in self.gates if g.kind == kind)

    def inverse(self) -> "Circuit":
        return Circuit(self.n, tuple(g.inverse() for g in reversed(self.gates)))

    def extended(self, gates: Iterable[Gate]) -> "Circuit":
        return Circuit(self.n, self.gates + tuple(gates))

    def relabeled(self, mapping) -> "Circuit":
        return Circuit(self.n, tuple(g.relabeled(mapping) for g in self.gates))

    def to_text(self) -> str:
        lines = [f"qubits {self.n}"]
        lines.extend(str(g) for g in self.gates)
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "Circuit":
        """Parse the plain-text format.

        The first meaningful line must be ``qubits N``; every following
        line is one gate: a mnemonic and space-separated 0-based decimal
        qubit indices. ``#`` starts a comment, blank lines are skipped.
        """
        n: int | None = None
        gates: list[Gate] = []
        for lineno, raw in enumerate(text.splitlines(), start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            parts = line.split()
            if n is None:
                if parts[0] != "qubits":
                    raise ValueError(
                        f"line {lineno}: expected 'qubits N' header, got {parts[0]!r}"
                    )
                if len(parts) != 2 or not parts[1].isdigit() or int(parts[1]) < 1:
                    raise ValueError(
                        f"line {lineno}: malformed header {line!r}"
                    )
                n = int(parts[1])
                continue
            kind = parts[0]
            if kind not in GATE_ARITY:
                raise ValueError(f"line {lineno}: unknown gate {kind!r}")
            arity = GATE_ARITY[kind]
            if len(parts) - 1 != arity:
                raise ValueError(
                    f"line {lineno}: gate {kind!r} takes {arity} index(es), "
                    f"got {len(parts) - 1}"
                )
            qubits = []
            for token in parts[1:]:
                if not token.isdigit():
                    raise ValueError(
                        f"line {lineno}: bad qubit index {token!r}"
                    )
                q = int(token)
                if q >= n:
                    raise ValueError(
                        f"line {lineno}: qubit index {q} out of range for "
                        f"{n} qubit(s)"
                    )
                qubits.append(q)
            try:
                gates.append(Gate(kind, tuple(qubits)))
            except ValueError as exc:
                raise ValueError(f"line {lineno}: {exc}") from None
        if n is None:
            raise ValueError("empty circuit text: missing 'qubits N' header")
        return cls(n, tuple(gates))
