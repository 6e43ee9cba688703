import json
import re

import pytest

from crystal_tableaux import (
    DocumentError,
    Weight,
    bfs_binfty,
    bfs_highest_weight,
    binfty_lower,
    cliff_zero,
    deserialize,
    make_type_spec,
    serialize,
    t_infinity,
    tableau_to_cliff,
    to_dot,
)
from crystal_tableaux.serialization import parse_word

A2 = make_type_spec("A", 2)
B3 = make_type_spec("B", 3)


def test_binfty_document():
    text = serialize(t_infinity(A2), "binfty")
    assert json.loads(text) == {"family": "A", "rank": 2, "model": "binfty", "rows": [["1", "1"], ["2"]]}
    assert list(json.loads(text)) == ["family", "rank", "model", "rows"]
    f3 = binfty_lower(B3, 3, t_infinity(B3))
    assert json.loads(serialize(f3, "binfty"))["rows"] == [["1", "1", "1", "1"], ["2", "2", "2"], ["3", "0"]]
    assert deserialize(serialize(f3, "binfty")) == (f3, "binfty", None)


def test_barred_letters_render_ascii_minus():
    T = binfty_lower(B3, 3, binfty_lower(B3, 3, t_infinity(B3)))
    assert '"-3"' in serialize(T, "binfty")


def test_cliff_document():
    doc = json.loads(serialize(cliff_zero(A2), "cliff"))
    assert doc["model"] == "cliff" and doc["k"] == {"1": [0, 0], "2": [0]}
    c = tableau_to_cliff(B3, bfs_binfty(B3, 3).nodes[-1].element)
    assert deserialize(serialize(c, "cliff"))[0] == c


def test_hw_document():
    lam = Weight((1, 1))
    for node in bfs_highest_weight(A2, lam).nodes:
        assert deserialize(serialize(node.element, "hw", lam)) == (node.element, "hw", lam)


@pytest.mark.parametrize(
    "doc,where",
    [
        ("{", "line 1"),
        ('{"family": "E", "rank": 2, "model": "binfty", "rows": [["1"]]}', "family"),
        ('{"family": "G", "rank": 3, "model": "binfty", "rows": [["1"]]}', "rank"),
        ('{"family": "A", "rank": 2, "model": "x", "rows": [["1"]]}', "model"),
        ('{"family": "A", "rank": 2, "model": "binfty", "rows": [["1", "1"], [2]]}', r"rows\[1\]\[0\]"),
        ('{"family": "A", "rank": 2, "model": "binfty", "rows": [["1", "q"], ["2"]]}', r"rows\[0\]\[1\]"),
        ('{"family": "A", "rank": 2, "model": "binfty", "rows": [["1", "1", "1"], ["2"]]}', "marginally"),
        ('{"family": "A", "rank": 2, "model": "cliff", "k": {"1": [1, 0], "2": [0]}}', "constraint"),
        ('{"family": "A", "rank": 2, "model": "cliff", "k": {"1": [0], "2": [0]}}', r"k\.1"),
        ('{"family": "A", "rank": 2, "model": "hw", "rows": [["2", "1"], ["3"]], "lambda": [1, 1]}', "B\\(\\(1, 1\\)\\)"),
        ('{"family": "B", "rank": 2, "model": "hw", "rows": [["1"], ["2"]], "lambda": [0, 1]}', "lambda"),
    ],
)
def test_errors_carry_location(doc, where):
    with pytest.raises(DocumentError, match=where):
        deserialize(doc)


def test_dot_output():
    g0 = bfs_binfty(B3, 0)
    dot = to_dot(g0)
    assert dot.count("->") == 0 and len(re.findall(r"^\s*n\d+ \[", dot, re.M)) == 1
    dot = to_dot(bfs_binfty(B3, 1))
    assert sorted(re.findall(r'-> n\d+ \[label="(\d+)"\]', dot)) == ["1", "2", "3"]
    G2 = make_type_spec("G", 2)
    dot = to_dot(bfs_binfty(G2, 2))
    assert len(re.findall(r"^\s*n\d+ \[label", dot, re.M)) == 7
    assert dot.count("->") == 6
    assert to_dot(bfs_binfty(G2, 2)) == dot


def test_parse_word():
    assert parse_word("f1,e2") == [("lowering", 1), ("raising", 2)]
    with pytest.raises(DocumentError):
        parse_word("g1")
