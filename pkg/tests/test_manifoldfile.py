"""Parsing, error positions, and the canonical round trip."""

from __future__ import annotations

from fractions import Fraction

import pytest

from swcalc import ManifoldFileError, emit_manifold_text, parse_manifold_text

from conftest import P2_FILE_TEXT

MINIMAL = """\
[manifold]
name = S2xS2
b1 = 0
bplus = 1
bminus = 1
euler = 4
signature = 0

[intersection_form]
0 1
1 0

[w2]
0 0

[torsion]
tors2_order = 1
"""


def test_parse_p2_file():
    data = parse_manifold_text(P2_FILE_TEXT)
    m = data.topology
    assert m.name == "P2"
    assert (m.b1, m.bplus, m.bminus, m.euler, m.signature) == (0, 1, 0, 3, 1)
    assert m.intersection_form == ((1,),)
    assert m.w2 == (1,)
    assert data.kahler is not None
    assert data.kahler.canonical_class == (-3,)
    assert data.kahler.effective_cone == ((Fraction(1),),)
    assert data.kahler.pg_zero is True
    assert data.psc_ray is not None
    assert data.psc_ray.h == (Fraction(1),)


def test_parse_minimal_without_facts():
    data = parse_manifold_text(MINIMAL)
    assert data.kahler is None
    assert data.psc_ray is None
    assert data.topology.intersection_form == ((0, 1), (1, 0))


def test_parse_triple_cup_section():
    text = MINIMAL.replace("b1 = 0", "b1 = 2").replace("euler = 4", "euler = 0")
    text += "\n[triple_cup]\n1 2 1 1\n"
    data = parse_manifold_text(text)
    cup = data.topology.triple_cup
    assert cup[0][1][0] == 1
    assert cup[1][0][0] == -1


def test_parse_errors_carry_line_and_column():
    bad = MINIMAL.replace("0 1", "0 x", 1)
    with pytest.raises(ManifoldFileError) as info:
        parse_manifold_text(bad)
    assert info.value.line == 10
    assert info.value.column == 3

    with pytest.raises(ManifoldFileError) as info:
        parse_manifold_text(MINIMAL.replace("0 1\n", "0 1 0\n", 1))
    assert "square" in str(info.value)

    with pytest.raises(ManifoldFileError) as info:
        parse_manifold_text(MINIMAL + "\n[nope]\nx = 1\n")
    assert "unknown section" in str(info.value)

    with pytest.raises(ManifoldFileError) as info:
        parse_manifold_text(MINIMAL.replace("[torsion]\ntors2_order = 1\n", ""))
    assert "missing required section" in str(info.value)

    with pytest.raises(ManifoldFileError) as info:
        parse_manifold_text(MINIMAL.replace("name = S2xS2\n", ""))
    assert "missing key 'name'" in str(info.value)

    with pytest.raises(ManifoldFileError) as info:
        parse_manifold_text(MINIMAL + "\n[triple_cup]\n1 2 1\n")
    assert "i j k value" in str(info.value)


def test_parse_rejects_duplicate_cup_entries():
    text = MINIMAL.replace("b1 = 0", "b1 = 2").replace("euler = 4", "euler = 0")
    text += "\n[triple_cup]\n1 2 1 1\n2 1 1 1\n"
    with pytest.raises(ManifoldFileError) as info:
        parse_manifold_text(text)
    assert "duplicate" in str(info.value)


def test_parse_rejects_duplicate_keys_and_sections():
    with pytest.raises(ManifoldFileError):
        parse_manifold_text(MINIMAL + "\n[manifold]\nname = again\n")
    with pytest.raises(ManifoldFileError):
        parse_manifold_text(MINIMAL.replace("b1 = 0", "b1 = 0\nb1 = 0"))


def test_round_trip_is_identity_on_data():
    for text in (P2_FILE_TEXT, MINIMAL):
        data = parse_manifold_text(text)
        emitted = emit_manifold_text(data)
        again = parse_manifold_text(emitted)
        assert again == data
        # The canonical form is a fixed point of emission.
        assert emit_manifold_text(again) == emitted


def test_round_trip_with_cup_and_component_signs():
    text = MINIMAL.replace("b1 = 0", "b1 = 2").replace("euler = 4", "euler = 0")
    text += (
        "\n[triple_cup]\n1 2 1 2\n1 2 2 -1\n"
        "\n[psc]\npsc_ray = 1,1\npsc_component_sign = -1\n"
    )
    data = parse_manifold_text(text)
    assert data.psc_ray.component_sign == -1
    again = parse_manifold_text(emit_manifold_text(data))
    assert again == data


def test_comments_and_blank_lines_are_ignored():
    text = "# leading comment\n\n" + P2_FILE_TEXT.replace(
        "[torsion]", "# about torsion\n[torsion]"
    )
    assert parse_manifold_text(text).topology.name == "P2"
