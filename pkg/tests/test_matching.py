"""Template rewriting engine: matches, movability, and equivalence."""

import random

from cliffopt import (
    Circuit,
    circuit_to_tableau,
    cx,
    cz,
    h,
    s,
    sdg,
    tableaus_equal,
    x,
)
from cliffopt.matching import (
    match_and_apply,
    push_singles,
    reduce_single_qubit,
    to_cz_form,
)
from cliffopt.templates import builtin_templates

from _util import random_circuit


def _by_id(tid: str):
    return tuple(t for t in builtin_templates() if t.id == tid)


def test_full_match_erases_template():
    for t in builtin_templates():
        out = match_and_apply(Circuit(t.size, t.gates), (t,))
        assert out.gates == (), t.id


def test_rotated_and_inverted_words_erase():
    for t in builtin_templates():
        m = len(t.gates)
        for k in (1, m // 2, m - 1):
            rot = t.gates[k:] + t.gates[:k]
            out = match_and_apply(Circuit(t.size, rot), (t,))
            assert out.gates == (), (t.id, k)
        inv = tuple(g.inverse() for g in reversed(t.gates))
        out = match_and_apply(Circuit(t.size, inv), (t,))
        assert out.gates == (), t.id


def test_match_across_commuting_gate():
    c = Circuit(2, (cz(0, 1), s(0), cz(0, 1)))
    out = match_and_apply(c, _by_id("double_cz"))
    assert out.gates == (s(0),)


def test_blocked_by_noncommuting_gate():
    c = Circuit(2, (cz(0, 1), h(0), cz(0, 1)))
    out = match_and_apply(c, _by_id("double_cz"))
    assert out == c


def test_binding_is_injective():
    c = Circuit(3, (cz(0, 1), cz(0, 2)))
    out = match_and_apply(c, _by_id("double_cz"))
    assert out == c


def test_partial_match_uses_inverted_remainder():
    c = Circuit(1, (s(0), h(0), s(0), h(0)))
    out = match_and_apply(c, _by_id("sh_cycle"))
    assert out.total_count == 2
    assert tableaus_equal(circuit_to_tableau(out), circuit_to_tableau(c))


def test_odd_cz_chain_keeps_one():
    c = Circuit(2, (cz(0, 1), cz(0, 1), cz(0, 1)))
    out = match_and_apply(c, _by_id("double_cz"))
    assert out.gates == (cz(0, 1),)


def test_rewrites_preserve_tableau():
    rng = random.Random(5)
    for _ in range(40):
        n = rng.randrange(2, 5)
        c = random_circuit(rng, n, rng.randrange(0, 40))
        out = match_and_apply(c)
        assert tableaus_equal(circuit_to_tableau(out), circuit_to_tableau(c))
        assert (out.two_qubit_count, out.total_count) <= (
            c.two_qubit_count,
            c.total_count,
        )


def test_to_cz_form():
    rng = random.Random(7)
    for _ in range(20):
        c = random_circuit(rng, 3, 20)
        out = to_cz_form(c)
        assert out.count_kind("cx") == 0
        assert out.two_qubit_count == c.two_qubit_count
        assert tableaus_equal(circuit_to_tableau(out), circuit_to_tableau(c))


def test_push_singles_moves():
    out = push_singles(Circuit(2, (s(0), cz(0, 1))), "right")
    assert out.gates == (cz(0, 1), s(0))
    out = push_singles(Circuit(2, (h(0), cz(0, 1))), "right")
    assert out.gates == (cx(1, 0), h(0))
    out = push_singles(Circuit(2, (cz(0, 1), h(0))), "left")
    assert out.gates == (h(0), cx(1, 0))
    out = push_singles(Circuit(3, (sdg(0), cz(1, 2))), "right")
    assert out.gates == (cz(1, 2), sdg(0))
    # X does not commute with a CZ leg.
    frozen = Circuit(2, (x(0), cz(0, 1)))
    assert push_singles(frozen, "right") == frozen


def test_push_singles_preserves_tableau():
    rng = random.Random(9)
    for direction in ("left", "right"):
        for _ in range(25):
            c = random_circuit(rng, 4, 30)
            out = push_singles(c, direction)
            assert tableaus_equal(
                circuit_to_tableau(out), circuit_to_tableau(c)
            )


def test_reduce_single_qubit():
    c = Circuit(2, (h(0), h(0), cz(0, 1), s(0), h(0), s(0), h(0), s(0), h(0)))
    out = reduce_single_qubit(c)
    assert out.two_qubit_count == c.two_qubit_count
    assert out.total_count < c.total_count
    assert tableaus_equal(circuit_to_tableau(out), circuit_to_tableau(c))
