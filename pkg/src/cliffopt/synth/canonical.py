"""Canonical Gaussian-elimination synthesis, used as a cost baseline.

Processes qubits in order. For qubit k it reduces the image of X_k to
exactly X_k with column operations (H to create an X component, CX to
move and clear it, CZ and S to clear Z components), then reduces the
image of Z_k, which anticommutation already pins to Y_k or Z_k at k
plus a Z tail. Gate counts scale with the dense n^2/log n bound rather
than tracking circuit structure, so greedy synthesis usually beats it;
it exists as the reference point optimizers are measured against.
"""

from __future__ import annotations

from ..circuit import Circuit, Gate, cx, cz, h, s, x, z
from ..tableau import CliffordTableau


def _bits_from(mask: int, start: int) -> list[int]:
    out = []
    q = start
    mask >>= start
    while mask:
        if mask & 1:
            out.append(q)
        mask >>= 1
        q += 1
    return out


def ag_canonical(t: CliffordTableau) -> Circuit:
    """A circuit with tableau exactly t, built by Gaussian elimination."""
    n = t.n
    work = t.copy()
    cleaning: list[Gate] = []

    def emit(gate: Gate) -> None:
        nonlocal work
        cleaning.append(gate)
        work = work.apply_gate(gate)

    for k in range(n):
        px, pz = work.row_bits(k)
        if px == 0:
            emit(h(_bits_from(pz, k)[0]))
            px, pz = work.row_bits(k)
        if not (px >> k) & 1:
            emit(cx(_bits_from(px, k + 1)[0], k))
            px, pz = work.row_bits(k)
        for j in _bits_from(px, k + 1):
            emit(cx(k, j))
        px, pz = work.row_bits(k)
        for j in _bits_from(pz, k + 1):
            emit(cz(k, j))
        if (work.row_bits(k)[1] >> k) & 1:
            emit(s(k))

        qx, qz = work.row_bits(n + k)
        for j in _bits_from(qx, k + 1):
            if (qz >> j) & 1:
                emit(s(j))
            emit(h(j))
        qx, qz = work.row_bits(n + k)
        if (qx >> k) & 1:
            emit(h(k))
            emit(s(k))
            emit(h(k))
        qx, qz = work.row_bits(n + k)
        for j in _bits_from(qz, k + 1):
            emit(cx(j, k))

        if work.row_phase(k) == 2:
            emit(z(k))
        if work.row_phase(n + k) == 2:
            emit(x(k))

    if not work.is_identity():
        raise AssertionError("elimination left a non-identity residue")
    return Circuit(n, tuple(g.inverse() for g in reversed(cleaning)))
