"""Template matching and rewriting over Clifford circuits.

A template is an identity word, so every cyclic rotation of it (and of
its inverse) is one too. If a prefix of a rotation appears in the
circuit, possibly interleaved with gates that commute out of the way,
the prefix can be replaced by the inverted remainder of the rotation.
The rewrite is kept only when it strictly lowers the circuit metric,
two-qubit weight first, total gate count second.

Interleaved gates are handled with per-wire commutation classes: gates
acting diagonally in the Z basis on a wire (S, S-dagger, Z, CZ, a CX
control) commute there, as do gates acting diagonally in the X basis
(X, a CX target); anything else blocks the wire.
"""

from __future__ import annotations

import time
from typing import Callable, Iterable, Sequence

from .circuit import Circuit, Gate, TWO_QUBIT_WEIGHT, cx, h
from .templates import Template, builtin_templates

_WINDOW = 64

# Per-wire commutation classes.
_DIAG_Z = 1
_DIAG_X = 2
_BLOCK = 4

Metric = Callable[[Circuit], tuple]


def default_metric(c: Circuit) -> tuple[int, int]:
    return (c.two_qubit_count, c.total_count)


def _wire_class(gate: Gate, wire: int) -> int:
    kind = gate.kind
    if kind in ("s", "sdg", "z", "cz"):
        return _DIAG_Z
    if kind == "cx":
        return _DIAG_Z if wire == gate.qubits[0] else _DIAG_X
    if kind == "x":
        return _DIAG_X
    return _BLOCK


def _rotations(templates: Iterable[Template]) -> dict[str, list[tuple[Gate, ...]]]:
    """All distinct rotations of the templates and their inverses,
    indexed by the kind of their first gate."""
    by_kind: dict[str, list[tuple[Gate, ...]]] = {}
    seen: set[tuple[Gate, ...]] = set()
    for template in templates:
        words = [template.gates]
        words.append(tuple(g.inverse() for g in reversed(template.gates)))
        for word in words:
            m = len(word)
            for k in range(m):
                rot = word[k:] + word[:k]
                if rot in seen:
                    continue
                seen.add(rot)
                by_kind.setdefault(rot[0].kind, []).append(rot)
    return by_kind


def _bind_gate(
    t_gate: Gate, c_gate: Gate, binding: dict[int, int]
) -> dict[int, int] | None:
    """Extend the wire binding so t_gate maps onto c_gate, or give up."""
    if t_gate.kind != c_gate.kind:
        return None
    orientations = [c_gate.qubits]
    if len(c_gate.qubits) == 2 and c_gate.kind != "cx":
        orientations.append((c_gate.qubits[1], c_gate.qubits[0]))
    for conc in orientations:
        trial = dict(binding)
        ok = True
        for abs_w, conc_q in zip(t_gate.qubits, conc):
            bound = trial.get(abs_w)
            if bound is None:
                if conc_q in trial.values():
                    ok = False
                    break
                trial[abs_w] = conc_q
            elif bound != conc_q:
                ok = False
                break
        if ok:
            return trial
    return None


def _movable(gate: Gate, pending_mask: dict[int, int]) -> bool:
    for w in gate.qubits:
        mask = pending_mask.get(w, 0)
        if mask and mask != _wire_class(gate, w):
            return False
    return True


def _try_rotation(
    gates: list[Gate],
    i: int,
    rot: tuple[Gate, ...],
    metric: Metric,
    n: int,
    current: tuple,
) -> list[Gate] | None:
    m = len(rot)
    binding = _bind_gate(rot[0], gates[i], {})
    if binding is None:
        return None
    matched_pos = [i]
    snapshots = [binding]
    pending_mask: dict[int, int] = {}
    k = 1
    end = min(len(gates), i + _WINDOW)
    for j in range(i + 1, end):
        if k == m:
            break
        g = gates[j]
        trial = _bind_gate(rot[k], g, snapshots[-1])
        if trial is not None and _movable(g, pending_mask):
            matched_pos.append(j)
            snapshots.append(trial)
            k += 1
            continue
        for w in g.qubits:
            pending_mask[w] = pending_mask.get(w, 0) | _wire_class(g, w)

    min_p = -(-m // 2)
    for p in range(k, min_p - 1, -1):
        bind = snapshots[p - 1]
        suffix = rot[p:]
        if any(w not in bind for g in suffix for w in g.qubits):
            continue
        last = matched_pos[p - 1]
        replacement = [
            g.inverse().relabeled(bind) for g in reversed(suffix)
        ]
        matched = set(matched_pos[:p])
        kept = [gates[j] for j in range(i, last + 1) if j not in matched]
        candidate = gates[:i] + replacement + kept + gates[last + 1:]
        if metric(Circuit(n, tuple(candidate))) < current:
            return candidate
    return None


def match_and_apply(
    c: Circuit,
    templates: Sequence[Template] | None = None,
    metric: Metric = default_metric,
    deadline: float | None = None,
) -> Circuit:
    """Rewrite with the templates until no strict improvement remains."""
    if templates is None:
        templates = builtin_templates()
    by_kind = _rotations(templates)
    gates = list(c.gates)
    changed = True
    while changed:
        changed = False
        i = 0
        while i < len(gates):
            if deadline is not None and time.monotonic() > deadline:
                return Circuit(c.n, tuple(gates))
            rewritten = None
            current = metric(Circuit(c.n, tuple(gates)))
            for rot in by_kind.get(gates[i].kind, ()):
                rewritten = _try_rotation(gates, i, rot, metric, c.n, current)
                if rewritten is not None:
                    break
            if rewritten is not None:
                gates = rewritten
                changed = True
            else:
                i += 1
    return Circuit(c.n, tuple(gates))


def reduce_single_qubit(c: Circuit) -> Circuit:
    """Template pass restricted to single-qubit rewrites."""
    singles = tuple(
        t for t in builtin_templates()
        if all(g.kind not in TWO_QUBIT_WEIGHT for g in t.gates)
    )
    out = match_and_apply(c, singles)
    if out.two_qubit_count != c.two_qubit_count:
        raise AssertionError("single-qubit pass changed two-qubit weight")
    return out


def to_cz_form(c: Circuit) -> Circuit:
    """Rewrite each CX as H-conjugated CZ; other gates pass through."""
    gates: list[Gate] = []
    for g in c.gates:
        if g.kind == "cx":
            ctrl, tgt = g.qubits
            gates += [h(tgt), Gate("cz", (ctrl, tgt)), h(tgt)]
        else:
            gates.append(g)
    return Circuit(c.n, tuple(gates))


def push_singles(c: Circuit, direction: str) -> Circuit:
    """Bubble single-qubit gates past two-qubit gates they commute with.

    Rightward, a diagonal gate (S, S-dagger, Z) hops over a CZ or a CX
    control on its wire, any single hops over a disjoint two-qubit gate,
    and an H followed by a CZ on its wire turns the CZ into a CX with
    the H re-emitted after it. Leftward mirrors the same moves.
    """
    if direction not in ("left", "right"):
        raise ValueError(f"direction must be 'left' or 'right', not {direction!r}")
    gates = list(c.gates)
    moved = True
    while moved:
        moved = False
        for i in range(len(gates) - 1):
            first, second = gates[i], gates[i + 1]
            if direction == "right":
                new = _commute_right(first, second)
            else:
                new = _commute_right(second, first)
                new = (new[1], new[0]) if new is not None else None
            if new is not None:
                gates[i], gates[i + 1] = new
                moved = True
    return Circuit(c.n, tuple(gates))


def _commute_right(first: Gate, second: Gate) -> tuple[Gate, Gate] | None:
    """Reorder [first, second] to an equivalent [second', first'] when
    first is a single-qubit gate that can hop right over second."""
    if len(first.qubits) != 1 or len(second.qubits) != 2:
        return None
    w = first.qubits[0]
    if w not in second.qubits:
        return second, first
    if first.kind in ("s", "sdg", "z") and _wire_class(second, w) == _DIAG_Z:
        return second, first
    if first.kind == "h" and second.kind == "cz":
        other = second.qubits[0] if second.qubits[1] == w else second.qubits[1]
        return cx(other, w), first
    return None
