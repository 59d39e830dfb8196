from fractions import Fraction as Fr

import pytest
from conftest import WORKSPACES

from svnfilter import (
    DuplicateName,
    ExpressionSyntaxError,
    GradeOutOfRange,
    ParseError,
    UnknownElement,
    UnknownName,
    UniverseMismatch,
    evaluate,
    format_grade,
    load_workspace,
    loads_workspace,
    render_set,
    serialize,
)
from svnfilter import worked_examples as ex

SHIPPED = sorted(WORKSPACES.glob("*.json"))


# ---------------------------------------------------------------- tables

@pytest.mark.parametrize("grade,text", [
    (Fr(0), "0"), (Fr(1), "1"), (Fr(3, 10), "0.3"), (Fr(1, 8), "0.125"),
    (Fr(1, 3), "1/3"), (Fr(7, 20), "0.35"), (Fr(2, 7), "2/7"),
])
def test_format_grade(grade, text):
    assert format_grade(grade) == text


def test_render_set_layout():
    a, *_ = ex.complement_example()
    assert render_set(a, "A").splitlines() == [
        "A  mu   sigma  nu",
        "a  0.2  0.6    0.8",
        "b  1    0.5    0",
    ]


# ---------------------------------------------------------------- workspace documents

def test_shipped_workspaces_exist():
    assert {p.name for p in SHIPPED} >= {"incomparable.json", "complement.json", "image.json",
                                          "filter_base.json", "principal.json"}


@pytest.mark.parametrize("path", SHIPPED, ids=lambda p: p.name)
def test_round_trip(path):
    ws = load_workspace(path)
    again = loads_workspace(serialize(ws))
    assert again.universe == ws.universe
    assert again.sets == ws.sets and again.maps == ws.maps and again.base_refs == ws.base_refs
    assert serialize(again) == path.read_text(encoding="utf-8")


def test_loaded_grades_are_exact():
    ws = load_workspace(WORKSPACES / "incomparable.json")
    assert ws.set("A").triple("a") == (Fr(1, 2), Fr(3, 10), Fr(1, 5))


def test_json_numbers_read_exactly():
    ws = loads_workspace('{"universe": ["a"], "sets": {"A": {"a": [0.1, "1/3", 1]}}}')
    assert ws.set("A").triple("a") == (Fr(1, 10), Fr(1, 3), 1)


def test_grade_out_of_range():
    with pytest.raises(GradeOutOfRange, match="line 1"):
        loads_workspace('{"universe": ["a"], "sets": {"A": {"a": ["1.2", "0", "0"]}}}')


def test_unknown_element():
    with pytest.raises(UnknownElement, match="'d'"):
        loads_workspace('{"universe": ["a"], "sets": {"A": {"a": ["0", "0", "1"], "d": ["0", "0", "1"]}}}')


def test_parse_error_carries_position():
    with pytest.raises(ParseError) as err:
        loads_workspace('{\n  "universe": ["a"],\n  "sets": {"A": }\n}')
    assert (err.value.line, err.value.column) == (3, 17)


def test_duplicate_names():
    with pytest.raises(DuplicateName):
        loads_workspace('{"universe": ["a"], "sets": {"A": {"a": ["0","0","1"]}, "A": {"a": ["0","0","1"]}}}')
    with pytest.raises(DuplicateName):
        loads_workspace('{"universe": ["a", "a"]}')


def test_structural_errors():
    with pytest.raises(ParseError):
        loads_workspace('{"universe": ["a"], "extra": 1}')
    with pytest.raises(ParseError):
        loads_workspace('{"sets": {}}')
    with pytest.raises(ParseError):
        loads_workspace('{"universe": ["a"], "sets": {"A": {"a": ["0", "0"]}}}')
    with pytest.raises(UnknownName):
        loads_workspace('{"universe": ["a"], "sets": {}, "bases": {"B": ["X"]}}')
    with pytest.raises(ParseError):
        loads_workspace('{"universe": ["a", "b"], "sets": {"A": {"a": ["0", "0", "1"]}}}')


# ---------------------------------------------------------------- expressions

@pytest.fixture
def filter_ws():
    return load_workspace(WORKSPACES / "filter_base.json")


def test_eval_intersection_and_union(filter_ws):
    f, g = filter_ws.set("F"), filter_ws.set("G")
    assert evaluate(filter_ws, "F & G") == f & g
    assert evaluate(filter_ws, "F | G | H") == f | g | filter_ws.set("H")
    assert evaluate(filter_ws, "(F & G) | H") == (f & g) | filter_ws.set("H")
    assert evaluate(filter_ws, "meet(F, G, H)") == f & g & filter_ws.set("H")
    assert evaluate(filter_ws, "join(F, G)") == f | g
    assert evaluate(filter_ws, "F^c^c") == f


def test_eval_predicates(filter_ws):
    assert evaluate(filter_ws, "F & G <= F") is True
    assert evaluate(filter_ws, "F & G == W") is False
    assert evaluate(filter_ws, "F meets G") is True


def test_eval_on_incomparable_pair():
    ws = load_workspace(WORKSPACES / "incomparable.json")
    assert evaluate(ws, "A <= B") is False
    assert evaluate(ws, "B <= A") is False


def test_eval_images():
    ws = load_workspace(WORKSPACES / "image.json")
    f, a, b, image_stated, preimage_stated = ex.image_example()
    assert evaluate(ws, "inv(f, B)") == preimage_stated
    assert evaluate(ws, "img(f, A)") == image_stated
    assert evaluate(ws, "img:inf(f, A)") == image_stated
    assert evaluate(ws, "img:sup(f, A)").triple("beta") == (Fr(1, 2), Fr(3, 10), Fr(1, 5))


def test_eval_errors(filter_ws):
    with pytest.raises(ExpressionSyntaxError, match="parentheses"):
        evaluate(filter_ws, "F & G | H")
    with pytest.raises(SyntaxError):
        evaluate(filter_ws, "F &")
    with pytest.raises(ExpressionSyntaxError) as err:
        evaluate(filter_ws, "F $ G")
    assert err.value.position == 2
    with pytest.raises(UnknownName):
        evaluate(filter_ws, "F & Q")
    with pytest.raises(UnknownName):
        evaluate(filter_ws, "img(g, F)")
    ws = load_workspace(WORKSPACES / "image.json")
    with pytest.raises(UniverseMismatch):
        evaluate(ws, "A & B")
