"""Greedy tableau-to-circuit synthesis.

Both drivers peel off one qubit per step: they choose an anticommuting
pair, reduce it to (X_j, Z_j) with the pair disentangler, and recurse on
the remaining qubits. The unidirectional driver always reduces the
images of (X_p, Z_p) for the cheapest still-active p, emitting gates on
one side only. The bidirectional driver scans low-weight pairs (P, P')
of inputs, compares the cost of reducing (P, P') against the cost of
reducing their images (O, O') = (U P U^-1, U P' U^-1), and emits gates
on both sides at once, which empirically lowers the CX count.
"""

from __future__ import annotations

import random
from bisect import insort
from itertools import chain

from ..circuit import Circuit, Gate
from ..pauli import PauliOperator
from ..tableau import CliffordTableau
from .disentangle import clean_pair_gates, pair_cost_bits

_AX = {"X": (1, 0), "Y": (1, 1), "Z": (0, 1)}

# Ordered anticommuting letter pairs on a single shared qubit. (X, Z)
# leads so that cost ties resolve to the pair needing no local gates.
_SINGLE_LETTER_PAIRS = (
    ("X", "Z"), ("X", "Y"), ("Y", "X"), ("Y", "Z"), ("Z", "X"), ("Z", "Y")
)

Support = tuple[tuple[int, str], ...]


def _support_bits(ops: Support) -> tuple[int, int]:
    xb = zb = 0
    for slot, letter in ops:
        xv, zv = _AX[letter]
        xb |= xv << slot
        zb |= zv << slot
    return xb, zb


def _anticommute_bits(x1: int, z1: int, x2: int, z2: int) -> bool:
    return ((x1 & z2).bit_count() + (z1 & x2).bit_count()) % 2 == 1


def _build_pair_patterns() -> tuple[tuple[Support, Support, int], ...]:
    """Ordered anticommuting pairs on two slots, each slot touched."""
    singles: list[Support] = []
    letters = (None, "X", "Y", "Z")
    for la in letters:
        for lb in letters:
            ops = tuple(
                (slot, l) for slot, l in ((0, la), (1, lb)) if l is not None
            )
            if ops:
                singles.append(ops)
    out = []
    for ops1 in singles:
        x1, z1 = _support_bits(ops1)
        for ops2 in singles:
            x2, z2 = _support_bits(ops2)
            if not _anticommute_bits(x1, z1, x2, z2):
                continue
            if (x1 | z1 | x2 | z2) != 3:
                continue
            out.append((ops1, ops2, pair_cost_bits(x1, z1, x2, z2)))
    return tuple(out)


def _build_triple_patterns() -> tuple[tuple[Support, Support, int], ...]:
    """Weight-2 pairs sharing slot 0, partners on slots 1 and 2."""
    out = []
    for ls in "XYZ":
        for ms in "XYZ":
            if ls == ms:
                continue
            for lx in "XYZ":
                for my in "XYZ":
                    ops1: Support = ((0, ls), (1, lx))
                    ops2: Support = ((0, ms), (2, my))
                    x1, z1 = _support_bits(ops1)
                    x2, z2 = _support_bits(ops2)
                    out.append((ops1, ops2, pair_cost_bits(x1, z1, x2, z2)))
    return tuple(out)


_PAIR_PATTERNS = _build_pair_patterns()
_TRIPLE_PATTERNS = _build_triple_patterns()


def _pauli_from_support(n: int, sup: Support) -> PauliOperator:
    xb = zb = 0
    for q, letter in sup:
        xv, zv = _AX[letter]
        xb |= xv << q
        zb |= zv << q
    return PauliOperator(n, xb, zb, (xb & zb).bit_count() % 4)


def greedy_unidirectional(
    t: CliffordTableau, rng: random.Random | None = None
) -> Circuit:
    """Synthesize a circuit for t, emitting gates on the output side only.

    Deterministic without an rng (cheapest active qubit first, lowest
    index on ties); with an rng the qubit order is drawn uniformly.
    """
    n = t.n
    work = t.copy()
    act = set(range(n))
    parts: list[list[Gate]] = []
    while act:
        ordered = sorted(act)
        if rng is not None:
            p = ordered[rng.randrange(len(ordered))]
        else:
            p = min(
                ordered,
                key=lambda q: pair_cost_bits(
                    *work.row_bits(q), *work.row_bits(n + q)
                ),
            )
        d_gates, _, _ = clean_pair_gates(work.row(p), work.row(n + p), target=p)
        work = work.apply_circuit(Circuit(n, tuple(d_gates)))
        parts.append([g.inverse() for g in reversed(d_gates)])
        act.remove(p)
    if not work.is_identity():
        raise AssertionError("synthesis left a non-identity residue")
    return Circuit(n, tuple(chain.from_iterable(reversed(parts))))


def greedy_bidirectional(
    t: CliffordTableau, rng: random.Random | None = None, pool: int = 4
) -> Circuit:
    """Synthesize a circuit for t, emitting gates on both sides.

    Each step scans anticommuting input pairs (P, P') of weight at most
    two whose supports overlap, scores them by the reduction cost of
    (P, P') plus that of their images, and reduces the best onto a fresh
    qubit from both ends. Without an rng the scan keeps the first
    cheapest candidate; with one it draws uniformly from the `pool`
    cheapest.
    """
    n = t.n
    work = t.copy()
    act = set(range(n))
    left_parts: list[list[Gate]] = []
    right_parts: list[list[Gate]] = []
    keep = 1 if rng is None else pool
    while act:
        ordered = sorted(act)
        contrib: dict[tuple[int, str], tuple[int, int]] = {}
        for q in ordered:
            xq = work.row_bits(q)
            zq = work.row_bits(n + q)
            contrib[(q, "X")] = xq
            contrib[(q, "Z")] = zq
            contrib[(q, "Y")] = (xq[0] ^ zq[0], xq[1] ^ zq[1])

        best: list[tuple[int, int, Support, Support]] = []
        idx = 0

        def consider(sup1: Support, sup2: Support, pcost: int) -> None:
            nonlocal idx
            ox = oz = 0
            for q_l in sup1:
                cb = contrib[q_l]
                ox ^= cb[0]
                oz ^= cb[1]
            o2x = o2z = 0
            for q_l in sup2:
                cb = contrib[q_l]
                o2x ^= cb[0]
                o2z ^= cb[1]
            cost = pcost + pair_cost_bits(ox, oz, o2x, o2z)
            if len(best) < keep or cost < best[-1][0]:
                insort(best, (cost, idx, sup1, sup2))
                if len(best) > keep:
                    best.pop()
            idx += 1

        for q in ordered:
            for l1, l2 in _SINGLE_LETTER_PAIRS:
                consider(((q, l1),), ((q, l2),), 0)
        for i, q in enumerate(ordered):
            for r in ordered[i + 1:]:
                qubits = (q, r)
                for ops1, ops2, pcost in _PAIR_PATTERNS:
                    consider(
                        tuple((qubits[s], l) for s, l in ops1),
                        tuple((qubits[s], l) for s, l in ops2),
                        pcost,
                    )
        if len(ordered) >= 3:
            for s_q in ordered:
                for x_q in ordered:
                    if x_q == s_q:
                        continue
                    for y_q in ordered:
                        if y_q == s_q or y_q == x_q:
                            continue
                        qubits = (s_q, x_q, y_q)
                        for ops1, ops2, pcost in _TRIPLE_PATTERNS:
                            consider(
                                tuple((qubits[s], l) for s, l in ops1),
                                tuple((qubits[s], l) for s, l in ops2),
                                pcost,
                            )

        _, _, sup1, sup2 = best[0 if rng is None else rng.randrange(len(best))]
        p = _pauli_from_support(n, sup1)
        p2 = _pauli_from_support(n, sup2)
        o = work.conjugate(p)
        o2 = work.conjugate(p2)
        a_mask, _, _, _ = _image_classes(o, o2)
        j = (a_mask & -a_mask).bit_length() - 1
        dl_gates, dl_swap, _ = clean_pair_gates(o, o2, target=j)
        if dl_swap is not None:
            raise AssertionError("left reduction should land on its anchor")
        dr_gates, _, _ = clean_pair_gates(p, p2, target=j)
        work = work.apply_circuit(Circuit(n, tuple(dl_gates)))
        work = work.right_apply_circuit(Circuit(n, tuple(dr_gates)).inverse())
        left_parts.append([g.inverse() for g in reversed(dl_gates)])
        right_parts.append(dr_gates)
        act.remove(j)
    if not work.is_identity():
        raise AssertionError("synthesis left a non-identity residue")
    gates = tuple(
        chain(
            chain.from_iterable(right_parts),
            chain.from_iterable(reversed(left_parts)),
        )
    )
    return Circuit(n, gates)


def _image_classes(o: PauliOperator, o2: PauliOperator) -> tuple[int, int, int, int]:
    occ1 = o.x_bits | o.z_bits
    occ2 = o2.x_bits | o2.z_bits
    diff = (o.x_bits ^ o2.x_bits) | (o.z_bits ^ o2.z_bits)
    both = occ1 & occ2
    return both & diff, both & ~diff, occ1 & ~occ2, occ2 & ~occ1
