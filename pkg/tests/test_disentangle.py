"""Pair reduction: class split, local words, exactness, and cost."""

import random

import numpy as np
import pytest

from cliffopt import (
    Circuit,
    PauliOperator,
    conjugate_pauli,
    disentangle_cost,
    disentangler,
    standard_form,
)

from _dense import circuit_unitary, conjugate_dense, pauli_matrix


def random_anticommuting_pair(rng: random.Random, n: int):
    while True:
        x1, z1 = rng.getrandbits(n), rng.getrandbits(n)
        if x1 or z1:
            break
    p1 = PauliOperator(
        n, x1, z1, ((x1 & z1).bit_count() + 2 * rng.getrandbits(1)) % 4
    )
    while True:
        x2, z2 = rng.getrandbits(n), rng.getrandbits(n)
        if ((x1 & z2).bit_count() + (z1 & x2).bit_count()) % 2:
            break
    p2 = PauliOperator(
        n, x2, z2, ((x2 & z2).bit_count() + 2 * rng.getrandbits(1)) % 4
    )
    return p1, p2


def test_standard_form_classes():
    o = PauliOperator.from_label("XXYZI")
    o2 = PauliOperator.from_label("ZXIII")
    part = standard_form(o, o2)
    assert part.a == (0,)
    assert part.b == (1,)
    assert part.c == (2, 3)
    assert part.d == ()
    assert part.e == (4,)


def test_standard_form_standardizes_letters():
    rng = random.Random(31)
    for _ in range(200):
        n = rng.randrange(1, 9)
        o, o2 = random_anticommuting_pair(rng, n)
        part = standard_form(o, o2)
        so = conjugate_pauli(part.local_layer, o)
        so2 = conjugate_pauli(part.local_layer, o2)
        for q in part.a:
            assert (so.axis(q), so2.axis(q)) == ("X", "Z")
        for q in part.b:
            assert (so.axis(q), so2.axis(q)) == ("X", "X")
        for q in part.c:
            assert (so.axis(q), so2.axis(q)) == ("X", "I")
        for q in part.d:
            assert (so.axis(q), so2.axis(q)) == ("I", "Z")
        for q in part.e:
            assert (so.axis(q), so2.axis(q)) == ("I", "I")
        assert len(part.a) % 2 == 1


def test_standard_form_rejects_commuting():
    with pytest.raises(ValueError, match="commute"):
        standard_form(
            PauliOperator.from_label("XX"), PauliOperator.from_label("ZZ")
        )


def test_rejects_non_hermitian():
    with pytest.raises(ValueError, match="Hermitian"):
        disentangler(PauliOperator(1, 1, 0, 1), PauliOperator(1, 0, 1, 0))


def test_disentangler_exact_small_dense():
    rng = random.Random(37)
    for _ in range(60):
        n = rng.randrange(1, 4)
        o, o2 = random_anticommuting_pair(rng, n)
        res = disentangler(o, o2)
        u = circuit_unitary(res.circuit)
        want_x = conjugate_dense(u, pauli_matrix(PauliOperator(n, 1, 0, 0)))
        want_z = conjugate_dense(u, pauli_matrix(PauliOperator(n, 0, 1, 0)))
        assert np.allclose(want_x, pauli_matrix(o))
        assert np.allclose(want_z, pauli_matrix(o2))


def test_disentangler_exact_wide():
    rng = random.Random(41)
    for _ in range(500):
        n = rng.randrange(1, 33)
        o, o2 = random_anticommuting_pair(rng, n)
        res = disentangler(o, o2)
        x0 = PauliOperator(n, 1, 0, 0)
        z0 = PauliOperator(n, 0, 1, 0)
        assert conjugate_pauli(res.circuit, x0) == o
        assert conjugate_pauli(res.circuit, z0) == o2


def test_cost_matches_circuit():
    rng = random.Random(43)
    for _ in range(300):
        n = rng.randrange(1, 17)
        o, o2 = random_anticommuting_pair(rng, n)
        res = disentangler(o, o2)
        assert res.cnot_cost == res.circuit.count_kind("cx")
        assert disentangle_cost(o, o2) == res.cnot_cost


def test_cost_formula_examples():
    # One A qubit, nothing else: free.
    o = PauliOperator.from_label("X")
    o2 = PauliOperator.from_label("Z")
    assert disentangle_cost(o, o2) == 0
    # Three A qubits: one pair to fold, three CX.
    o = PauliOperator.from_label("XXX")
    o2 = PauliOperator.from_label("ZZZ")
    assert disentangle_cost(o, o2) == 3
    # A plus two-qubit B block: |B| + 1 = 3.
    o = PauliOperator.from_label("XXX")
    o2 = PauliOperator.from_label("ZXX")
    assert disentangle_cost(o, o2) == 3
    # A plus one C and one D qubit.
    o = PauliOperator.from_label("XYI")
    o2 = PauliOperator.from_label("ZIZ")
    assert disentangle_cost(o, o2) == 2


def test_deferred_swap_is_leading_gate():
    rng = random.Random(47)
    seen_deferred = 0
    for _ in range(200):
        n = rng.randrange(2, 9)
        o, o2 = random_anticommuting_pair(rng, n)
        res = disentangler(o, o2)
        swaps = [g for g in res.circuit.gates if g.kind == "swap"]
        if res.deferred_swap is None:
            assert not swaps
        else:
            seen_deferred += 1
            assert len(swaps) == 1
            assert res.circuit.gates[0].kind == "swap"
            assert res.circuit.gates[0].qubits == res.deferred_swap
            assert 0 in res.deferred_swap
    assert seen_deferred > 0


def test_single_qubit_pairs():
    # Every anticommuting single-qubit pair reduces with zero CX.
    labels = ["X", "Y", "Z", "-X", "-Y", "-Z"]
    for l1 in labels:
        for l2 in labels:
            o = PauliOperator.from_label(l1)
            o2 = PauliOperator.from_label(l2)
            if l1.lstrip("-") == l2.lstrip("-"):
                continue
            res = disentangler(o, o2)
            assert res.cnot_cost == 0
            u = circuit_unitary(res.circuit)
            assert np.allclose(
                conjugate_dense(u, pauli_matrix(PauliOperator(1, 1, 0, 0))),
                pauli_matrix(o),
            )
            assert np.allclose(
                conjugate_dense(u, pauli_matrix(PauliOperator(1, 0, 1, 0))),
                pauli_matrix(o2),
            )
