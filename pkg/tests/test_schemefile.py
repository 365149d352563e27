import json

import pytest

from ctschemes.arith import Modulus
from ctschemes.evaluate import seq_auto, seq_linear
from ctschemes.linear import generate_linear
from ctschemes.ctdef import catalog
from ctschemes.schemefile import (SchemeFileError, UnsupportedVersionError, dumps, load_scheme, loads,
                                  save_scheme)


def test_catalan_roundtrip(tmp_path, schemes):
    path = tmp_path / "cat.json"
    save_scheme(schemes("catalan", 2, 1), path)
    S = load_scheme(path)
    assert S.transitions == [[2, 1], [2, 0]] and S.initial == [1, 1]
    assert json.loads(path.read_text())["transitions"] == [[2, 1], [2, 0]]


def test_linear_roundtrip_keeps_matrices(tmp_path, schemes):
    L = schemes("motzkin", 2, 2, "linear")
    path = tmp_path / "m4.json"
    save_scheme(L, path)
    back = load_scheme(path)
    assert back.matrices == L.matrices
    assert back.initial == L.initial
    assert back.defs == L.defs
    assert seq_linear(back, 100) == seq_linear(L, 100)


@pytest.mark.parametrize("name, p, a, kind", [("catalan", 2, 1, "auto"), ("motzkin", 5, 2, "auto"),
                                              ("delannoy", 3, 2, "linear"), ("apery", 2, 2, "linear")])
def test_byte_identical_resave(tmp_path, schemes, name, p, a, kind):
    S = schemes(name, p, a, kind)
    src = {"P": "p", "Q": "q", "vars": ["x1", "x2", "x3"] if name == "apery" else ["x"]}
    text = dumps(S, source=src)
    S2, src2 = loads(text)
    assert dumps(S2, source=src2) == text
    assert dumps(S2, source=src2, include_defs=False) == dumps(S, source=src, include_defs=False)


def test_defs_are_optional(tmp_path, schemes):
    S = schemes("motzkin", 2, 3)
    path = tmp_path / "nodefs.json"
    save_scheme(S, path, include_defs=False)
    back = load_scheme(path)
    assert back.defs is None
    assert seq_auto(back, 64) == seq_auto(S, 64)


def test_truncated_file(tmp_path, schemes):
    text = dumps(schemes("catalan", 2, 1))
    with pytest.raises(SchemeFileError, match="line 1, column"):
        loads(text[: len(text) // 2])


def _doc(schemes):
    return json.loads(dumps(schemes("catalan", 2, 1)))


@pytest.mark.parametrize("mutate, exc", [
    (lambda d: d.update(version=2), UnsupportedVersionError),
    (lambda d: d.update(format="other"), SchemeFileError),
    (lambda d: d.update(kind="mystery"), SchemeFileError),
    (lambda d: d.update(p=4), SchemeFileError),
    (lambda d: d.update(modulus=3), SchemeFileError),
    (lambda d: d.update(states=3), SchemeFileError),
    (lambda d: d.update(transitions=[[2, 1], [5, 0]]), SchemeFileError),
    (lambda d: d.update(transitions=[[2, 1], 7]), SchemeFileError),
    (lambda d: d.update(initial=[1, 2]), SchemeFileError),
    (lambda d: d.pop("transitions"), SchemeFileError),
    (lambda d: d.update(defs=[["x^-1+", "1"], ["1", "1"]]), SchemeFileError),
])
def test_malformed_documents(schemes, mutate, exc):
    doc = _doc(schemes)
    mutate(doc)
    with pytest.raises(exc):
        loads(json.dumps(doc))


def test_bad_linear_matrix(schemes):
    doc = json.loads(dumps(generate_linear(catalog("catalan"), Modulus(2, 1))))
    doc["matrices"][0][0] = [[9, 1]]
    with pytest.raises(SchemeFileError):
        loads(json.dumps(doc))
    doc["matrices"][0][0] = [["a", 1]]
    with pytest.raises(SchemeFileError):
        loads(json.dumps(doc))
    doc["matrices"][0][0] = [[1]]
    with pytest.raises(SchemeFileError):
        loads(json.dumps(doc))
