"""Pauli operators on n qubits with exact phase tracking.

An operator is stored as ``i**phase_exp * prod_q X_q**x_q * Z_q**z_q``
where the X factor is written before the Z factor on every qubit and
``phase_exp`` is kept mod 4. A bare Y therefore carries ``phase_exp`` 1
in this normal form, since Y = i X Z.
"""

from __future__ import annotations

from dataclasses import dataclass

from .circuit import Circuit, Gate

_AXIS_BITS = {"I": (0, 0), "X": (1, 0), "Y": (1, 1), "Z": (0, 1)}
_BITS_AXIS = {v: k for k, v in _AXIS_BITS.items()}
_SIGN_PREFIX = {0: "+", 1: "i", 2: "-", 3: "-i"}


def _bit(value: int, index: int) -> int:
    return (value >> index) & 1


@dataclass(frozen=True)
class PauliOperator:
    """An n-qubit Pauli operator with an exact i**phase_exp prefactor."""

    n: int
    x_bits: int
    z_bits: int
    phase_exp: int = 0

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"need at least one qubit, got n={self.n}")
        limit = 1 << self.n
        if not (0 <= self.x_bits < limit and 0 <= self.z_bits < limit):
            raise ValueError(
                f"component bits out of range for {self.n} qubit(s)"
            )
        object.__setattr__(self, "phase_exp", self.phase_exp % 4)

    @classmethod
    def identity(cls, n: int) -> "PauliOperator":
        return cls(n, 0, 0, 0)

    @classmethod
    def from_label(cls, label: str) -> "PauliOperator":
        """Build from a string like ``"XIZ"``, ``"-YZ"`` or ``"iXY"``.

        Character position q names the action on qubit q. An optional
        prefix ``+``, ``-``, ``i`` or ``-i`` sets the overall phase; Y
        letters contribute their own factor of i on top of it.
        """
        body = label
        phase = 0
        for prefix, value in (("-i", 3), ("+", 0), ("-", 2), ("i", 1)):
            if body.startswith(prefix):
                phase = value
                body = body[len(prefix):]
                break
        if not body:
            raise ValueError(f"empty Pauli label {label!r}")
        x_bits = z_bits = 0
        for q, ch in enumerate(body):
            if ch not in _AXIS_BITS:
                raise ValueError(f"bad Pauli letter {ch!r} in {label!r}")
            xb, zb = _AXIS_BITS[ch]
            x_bits |= xb << q
            z_bits |= zb << q
            if ch == "Y":
                phase += 1
        return cls(len(body), x_bits, z_bits, phase % 4)

    def to_label(self) -> str:
        letters = []
        for q in range(self.n):
            letters.append(_BITS_AXIS[(_bit(self.x_bits, q), _bit(self.z_bits, q))])
        residual = (self.phase_exp - self.y_count) % 4
        return _SIGN_PREFIX[residual] + "".join(letters)

    @property
    def y_count(self) -> int:
        return (self.x_bits & self.z_bits).bit_count()

    @property
    def weight(self) -> int:
        return (self.x_bits | self.z_bits).bit_count()

    @property
    def is_identity(self) -> bool:
        return self.x_bits == 0 and self.z_bits == 0

    @property
    def is_hermitian(self) -> bool:
        return (self.phase_exp - self.y_count) % 2 == 0

    def sign(self) -> int:
        """+1 or -1 for a Hermitian operator."""
        if not self.is_hermitian:
            raise ValueError(f"{self.to_label()} is not Hermitian")
        return 1 if (self.phase_exp - self.y_count) % 4 == 0 else -1

    def axis(self, q: int) -> str:
        """The letter I, X, Y or Z acting on qubit q."""
        return _BITS_AXIS[(_bit(self.x_bits, q), _bit(self.z_bits, q))]

    def __mul__(self, other: "PauliOperator") -> "PauliOperator":
        if self.n != other.n:
            raise ValueError(f"width mismatch: {self.n} vs {other.n}")
        # Moving other's X block left past self's Z block gives a factor
        # (-1) per crossing, folded into the i exponent as +2.
        phase = self.phase_exp + other.phase_exp
        phase += 2 * (self.z_bits & other.x_bits).bit_count()
        return PauliOperator(
            self.n, self.x_bits ^ other.x_bits, self.z_bits ^ other.z_bits, phase
        )

    def commutes_with(self, other: "PauliOperator") -> bool:
        return not anticommute(self, other)

    def conjugated(self, gate: Gate) -> "PauliOperator":
        """The image of self under conjugation by a single gate."""
        x, z, e = self.x_bits, self.z_bits, self.phase_exp
        kind = gate.kind
        if max(gate.qubits) >= self.n:
            raise ValueError(f"gate {gate} out of range for {self.n} qubit(s)")
        if kind == "h":
            (q,) = gate.qubits
            xq, zq = _bit(x, q), _bit(z, q)
            e += 2 * (xq & zq)
            x ^= (xq ^ zq) << q
            z ^= (xq ^ zq) << q
        elif kind == "s":
            (q,) = gate.qubits
            xq = _bit(x, q)
            e += xq
            z ^= xq << q
        elif kind == "sdg":
            (q,) = gate.qubits
            xq = _bit(x, q)
            e += 3 * xq
            z ^= xq << q
        elif kind == "x":
            (q,) = gate.qubits
            e += 2 * _bit(z, q)
        elif kind == "y":
            (q,) = gate.qubits
            e += 2 * (_bit(x, q) ^ _bit(z, q))
        elif kind == "z":
            (q,) = gate.qubits
            e += 2 * _bit(x, q)
        elif kind == "cx":
            c, t = gate.qubits
            x ^= _bit(x, c) << t
            z ^= _bit(z, t) << c
        elif kind == "cz":
            a, b = gate.qubits
            e += 2 * (_bit(x, a) & _bit(x, b))
            z ^= _bit(x, b) << a
            z ^= _bit(x, a) << b
        elif kind == "swap":
            a, b = gate.qubits
            xa, xb = _bit(x, a), _bit(x, b)
            za, zb = _bit(z, a), _bit(z, b)
            x ^= ((xa ^ xb) << a) | ((xa ^ xb) << b)
            z ^= ((za ^ zb) << a) | ((za ^ zb) << b)
        else:  # pragma: no cover
            raise ValueError(f"unknown gate kind {kind!r}")
        return PauliOperator(self.n, x, z, e)

    def restricted(self, qubits: tuple[int, ...]) -> "PauliOperator":
        """Project onto an ordered qubit subset that covers the support."""
        x = z = 0
        keep = 0
        for local, q in enumerate(qubits):
            x |= _bit(self.x_bits, q) << local
            z |= _bit(self.z_bits, q) << local
            keep |= 1 << q
        if (self.x_bits | self.z_bits) & ~keep:
            raise ValueError("support extends outside the given subset")
        return PauliOperator(len(qubits), x, z, self.phase_exp)

    def embedded(self, n: int, at: tuple[int, ...]) -> "PauliOperator":
        """Embed into n qubits, sending local qubit j to ``at[j]``."""
        x = z = 0
        for local, q in enumerate(at):
            x |= _bit(self.x_bits, local) << q
            z |= _bit(self.z_bits, local) << q
        return PauliOperator(n, x, z, self.phase_exp)

    def __str__(self) -> str:
        return self.to_label()


def pauli_weight(p: PauliOperator) -> int:
    """Number of qubits on which p acts non-trivially."""
    return p.weight


def anticommute(p: PauliOperator, q: PauliOperator) -> bool:
    """True when the two operators anticommute."""
    if p.n != q.n:
        raise ValueError(f"width mismatch: {p.n} vs {q.n}")
    crossings = (p.x_bits & q.z_bits).bit_count() + (p.z_bits & q.x_bits).bit_count()
    return crossings % 2 == 1


def conjugate_pauli(circuit: Circuit, p: PauliOperator) -> PauliOperator:
    """Conjugate p by the circuit unitary: returns G p G^-1.

    Gates are folded in list order, so the first gate of the circuit is
    the innermost conjugation.
    """
    if circuit.n != p.n:
        raise ValueError(f"width mismatch: circuit {circuit.n} vs operator {p.n}")
    for gate in circuit.gates:
        p = p.conjugated(gate)
    return p
