import pytest

from conftest import FIXTURES, GOOD, load
from solvcoh.fixture import FixtureError, parse, parse_text, serialize
from solvcoh.model import validate

MINIMAL = """solvcoh-fixture v1
[meta]
name: tiny
[weight_group]
rank: 0
[generators]
x1 weight=
x2 weight=
x3 weight=
[structure_constants]
1 2 3 -1 0
[forms]
"""


@pytest.mark.parametrize("name", GOOD)
def test_roundtrip(name):
    spec = load(name)
    text = serialize(spec)
    again = parse_text(text)
    assert serialize(again) == text
    assert again.generators == spec.generators
    assert set(again.structure_constants) == set(spec.structure_constants)
    assert again.forms == spec.forms
    assert again.weight_group == spec.weight_group


def test_bogus_heisenberg_canonicalizes():
    spec = parse(FIXTURES / "bad" / "bogus_heisenberg.fixture")
    text = serialize(spec)
    assert serialize(parse_text(text)) == text


def test_minimal():
    spec = parse_text(MINIMAL)
    assert spec.n == 3 and spec.name == "tiny"
    assert validate(spec).ok
    assert spec.structure_constants[0][:3] == (0, 1, 2)


def _codes(text):
    with pytest.raises(FixtureError) as err:
        parse_text(text)
    return err.value.codes, err.value.issues


@pytest.mark.parametrize(
    "old, new, code",
    [
        ("solvcoh-fixture v1", "solvcoh-fixture v2", "header"),
        ("[forms]", "[extras]", "section"),
        ("[forms]", "[forms]\n[forms]", "duplicate"),
        ("1 2 3 -1 0", "1 2 3 -1", "syntax"),
        ("1 2 3 -1 0", "1 2 3 x 0", "bad-number"),
        ("1 2 3 -1 0", "1 2 7 -1 0", "index-range"),
        ("1 2 3 -1 0", "2 1 3 -1 0", "triple-order"),
        ("x1 weight=", "x1 weight=1", "weight-length"),
        ("x1 weight=", "x1 colour=red", "unknown-key"),
        ("x1 weight=", "x1 bidegree=1,0", "missing-field"),
        ("name: tiny", "title: tiny", "missing-field"),
        ("x2 weight=", "x1 weight=", "duplicate"),
        ("rank: 0", "rank: 0\nflavour: x", "unknown-key"),
    ],
)
def test_error_codes(old, new, code):
    codes, _ = _codes(MINIMAL.replace(old, new))
    assert code in codes


def test_error_line_numbers():
    codes, issues = _codes(MINIMAL.replace("1 2 3 -1 0", "2 1 3 -1 0"))
    assert issues[0].line == 11
    with pytest.raises(FixtureError) as err:
        parse(FIXTURES / "bad" / "relation_real_log.fixture")
    assert err.value.codes == ["real-log-relation"]
    assert err.value.issues[0].line == 8
    assert "relation_real_log.fixture" in str(err.value)


def test_comments_and_blank_lines():
    text = MINIMAL.replace("[generators]", "# a comment\n\n[generators]  # trailing")
    assert parse_text(text).n == 3


def test_logderiv_and_forms():
    spec = load("semidirect")
    assert spec.generators[1].logderiv[0][0] == 0
    assert str(spec.generators[1].logderiv[0][1]) == "1/2"
    assert "omega" in spec.symplectic_forms and "theta" in spec.one_forms
