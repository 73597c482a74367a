"""Clifford circuit synthesis and optimization."""

from .circuit import (
    Circuit,
    Gate,
    TWO_QUBIT_WEIGHT,
    cx,
    cz,
    h,
    s,
    sdg,
    swap,
    x,
    y,
    z,
)
from .pauli import PauliOperator, anticommute, conjugate_pauli, pauli_weight
from .synth import (
    DisentangleResult,
    StandardFormPartition,
    ag_canonical,
    disentangle_cost,
    disentangler,
    greedy_bidirectional,
    greedy_unidirectional,
    standard_form,
)
from .tableau import (
    CliffordTableau,
    circuit_to_tableau,
    random_clifford,
    tableaus_equal,
)

__all__ = [
    "Circuit",
    "CliffordTableau",
    "DisentangleResult",
    "Gate",
    "PauliOperator",
    "StandardFormPartition",
    "TWO_QUBIT_WEIGHT",
    "ag_canonical",
    "anticommute",
    "circuit_to_tableau",
    "conjugate_pauli",
    "cx",
    "cz",
    "disentangle_cost",
    "disentangler",
    "greedy_bidirectional",
    "greedy_unidirectional",
    "h",
    "pauli_weight",
    "random_clifford",
    "s",
    "sdg",
    "standard_form",
    "swap",
    "tableaus_equal",
    "x",
    "y",
    "z",
]

__version__ = "0.1.0"
