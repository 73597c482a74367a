"""Built-in template validity."""

from cliffopt import Circuit
from cliffopt.matching import match_and_apply
from cliffopt.templates import builtin_templates, template_is_identity


def test_all_templates_are_identities():
    templates = builtin_templates()
    assert len(templates) == 8
    for t in templates:
        assert template_is_identity(t), t.id


def test_template_shapes():
    templates = builtin_templates()
    assert len({t.id for t in templates}) == 8
    for t in templates:
        wires = {w for g in t.gates for w in g.qubits}
        assert wires == set(range(t.size)), t.id


def test_templates_are_mutually_independent():
    # No template should collapse to nothing under the others.
    templates = builtin_templates()
    for t in templates:
        others = tuple(o for o in templates if o.id != t.id)
        reduced = match_and_apply(Circuit(t.size, t.gates), others)
        assert reduced.total_count > 0, t.id
