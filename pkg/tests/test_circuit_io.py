"""Gate and circuit containers, text format, and inverse correctness."""

import numpy as np
import pytest

from cliffopt import Circuit, Gate, cx, cz, h, s, sdg, swap, x, y, z

from _dense import circuit_unitary

SAMPLE = Circuit(
    3,
    (h(0), s(1), sdg(2), x(0), y(1), z(2), cx(0, 1), cz(1, 2), swap(0, 2)),
)


def test_gate_validation():
    with pytest.raises(ValueError):
        Gate("q", (0,))
    with pytest.raises(ValueError):
        Gate("h", (0, 1))
    with pytest.raises(ValueError):
        Gate("cx", (1,))
    with pytest.raises(ValueError):
        Gate("cx", (1, 1))
    with pytest.raises(ValueError):
        Gate("h", (-1,))


def test_unordered_kinds_sort_operands():
    assert cz(2, 0).qubits == (0, 2)
    assert swap(3, 1).qubits == (1, 3)
    assert cx(2, 0).qubits == (2, 0)  # control/target order is meaningful


def test_gate_inverse():
    assert s(0).inverse() == sdg(0)
    assert sdg(4).inverse() == s(4)
    for g in (h(0), x(1), y(2), z(0), cx(0, 1), cz(0, 1), swap(0, 1)):
        assert g.inverse() == g


def test_circuit_counts():
    assert SAMPLE.total_count == 9
    # cx + cz + swap with swap counting as three.
    assert SAMPLE.two_qubit_count == 5
    assert SAMPLE.count_kind("h") == 1
    assert SAMPLE.count_kind("cx") == 1
    assert len(SAMPLE) == 9


def test_circuit_validation():
    with pytest.raises(ValueError):
        Circuit(0, ())
    with pytest.raises(ValueError):
        Circuit(2, (h(5),))
    with pytest.raises(ValueError):
        Circuit(2, ()) + Circuit(3, ())


def test_circuit_inverse_is_dense_inverse():
    u = circuit_unitary(SAMPLE)
    v = circuit_unitary(SAMPLE.inverse())
    assert np.allclose(v, u.conj().T)


def test_concatenation_order():
    c1 = Circuit(2, (h(0),))
    c2 = Circuit(2, (cx(0, 1),))
    u = circuit_unitary(c1 + c2)
    # Gates listed first act first.
    want = circuit_unitary(c2) @ circuit_unitary(c1)
    assert np.allclose(u, want)


def test_relabeled():
    c = Circuit(3, (cx(0, 1), h(2))).relabeled({0: 2, 1: 1, 2: 0})
    assert c.gates == (cx(2, 1), h(0))


def test_text_roundtrip():
    text = SAMPLE.to_text()
    assert text.startswith("qubits 3\n")
    assert Circuit.from_text(text) == SAMPLE


def test_text_format_exact():
    c = Circuit(2, (h(0), cx(1, 0)))
    assert c.to_text() == "qubits 2\nh 0\ncx 1 0\n"


def test_text_comments_and_blanks():
    text = "# header comment\n\nqubits 2\nh 0\n\n# middle\ncx 0 1\n"
    assert Circuit.from_text(text) == Circuit(2, (h(0), cx(0, 1)))


@pytest.mark.parametrize(
    "text, pattern",
    [
        ("h 0\n", "line 1"),
        ("qubits two\n", "line 1"),
        ("qubits 2\nfoo 0\n", "line 2"),
        ("qubits 2\nh 0 1\n", "line 2"),
        ("qubits 2\nh 5\n", "line 2"),
        ("qubits 2\ncx 0\n", "line 2"),
        ("qubits 2\ncx 1 1\n", "line 2"),
        ("qubits 2\nh x\n", "line 2"),
        ("", "missing"),
    ],
)
def test_text_errors(text, pattern):
    with pytest.raises(ValueError, match=pattern):
        Circuit.from_text(text)


def test_gate_str():
    assert str(h(3)) == "h 3"
    assert str(cx(1, 0)) == "cx 1 0"
