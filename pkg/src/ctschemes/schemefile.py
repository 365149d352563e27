"""JSON persistence for schemes.

The document is written with sorted keys and no insignificant whitespace, so
loading a file and saving it again reproduces it byte for byte.  State
indices are 1-based; transition target 0 is the zero sink.
"""

from __future__ import annotations

import json
import os
import tempfile

from .arith import ArithError, Modulus
from .auto import AutoScheme
from .ctdef import default_vars
from .expr import ExprError, format_laurent, parse_laurent
from .linear import LinearScheme

FORMAT = "ctscheme"
VERSION = 1


class SchemeFileError(ValueError):
    pass


class UnsupportedVersionError(SchemeFileError):
    pass


def scheme_to_dict(scheme, source=None, include_defs=True):
    m = scheme.modulus
    doc = {
        "format": FORMAT,
        "version": VERSION,
        "kind": scheme.kind,
        "p": m.p,
        "a": m.a,
        "modulus": m.pa,
        "states": scheme.r,
        "initial": list(scheme.initial),
    }
    if scheme.kind == "auto":
        doc["transitions"] = [list(row) for row in scheme.transitions]
    else:
        doc["matrices"] = [[[[j + 1, c] for j, c in sorted(row.items())] for row in mat]
                           for mat in scheme.matrices]
    vars = None
    if source is not None:
        vars = list(source["vars"])
        doc["source"] = {"P": source["P"], "Q": source["Q"], "vars": vars}
    if include_defs and scheme.defs:
        arity = scheme.defs[0][0].arity
        if vars is None or len(vars) != arity:
            vars = list(default_vars(arity))
        doc["vars"] = vars
        doc["defs"] = [[format_laurent(P, vars), format_laurent(Q, vars)] for P, Q in scheme.defs]
    return doc


def dumps(scheme, source=None, include_defs=True) -> str:
    doc = scheme_to_dict(scheme, source, include_defs)
    return json.dumps(doc, sort_keys=True, separators=(",", ":")) + "\n"


def save_scheme(scheme, path, source=None, include_defs=True):
    """Write atomically: a failed write never leaves a partial file behind."""
    text = dumps(scheme, source, include_defs)
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(prefix=".scheme-", dir=directory)
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _need(doc, key, kind, where=""):
    if key not in doc:
        raise SchemeFileError(f"missing field {where}{key!r}")
    v = doc[key]
    if kind is int and (isinstance(v, bool) or not isinstance(v, int)):
        raise SchemeFileError(f"field {where}{key!r} must be an integer")
    if kind is not int and not isinstance(v, kind):
        raise SchemeFileError(f"field {where}{key!r} has the wrong type")
    return v


def scheme_from_dict(doc):
    """Rebuild a scheme (and its optional source) from a parsed document."""
    if not isinstance(doc, dict):
        raise SchemeFileError("top level must be an object")
    if doc.get("format") != FORMAT:
        raise SchemeFileError(f"not a scheme file (format {doc.get('format')!r})")
    version = _need(doc, "version", int)
    if version != VERSION:
        raise UnsupportedVersionError(f"unsupported scheme file version {version} (expected {VERSION})")
    kind = _need(doc, "kind", str)
    p, a = _need(doc, "p", int), _need(doc, "a", int)
    try:
        modulus = Modulus(p, a)
    except ArithError as exc:
        raise SchemeFileError(str(exc)) from None
    if _need(doc, "modulus", int) != modulus.pa:
        raise SchemeFileError(f"field 'modulus' is {doc['modulus']}, expected {modulus.pa}")
    r = _need(doc, "states", int)
    initial = _need(doc, "initial", list)
    if len(initial) != r:
        raise SchemeFileError(f"field 'initial' has {len(initial)} entries, expected {r}")

    defs = None
    if "defs" in doc:
        vars = _need(doc, "vars", list)
        raw = _need(doc, "defs", list)
        try:
            defs = [(parse_laurent(P, vars).reduce_mod(modulus), parse_laurent(Q, vars).reduce_mod(modulus))
                    for P, Q in raw]
        except (ExprError, ValueError, TypeError) as exc:
            raise SchemeFileError(f"field 'defs': {exc}") from None

    if kind == "auto":
        transitions = _need(doc, "transitions", list)
        scheme = AutoScheme(modulus, transitions, list(initial), defs)
    elif kind == "linear":
        raw = _need(doc, "matrices", list)
        mats = []
        try:
            for alpha, mat in enumerate(raw):
                rows = []
                for i, row in enumerate(mat):
                    entries = {}
                    for j, c in row:
                        if isinstance(j, bool) or not isinstance(j, int):
                            raise SchemeFileError(f"matrices[{alpha}][{i}]: bad column {j!r}")
                        entries[j - 1] = c
                    rows.append(entries)
                mats.append(rows)
        except (TypeError, ValueError) as exc:
            if isinstance(exc, SchemeFileError):
                raise
            raise SchemeFileError(f"field 'matrices' is malformed: {exc}") from None
        scheme = LinearScheme(modulus, mats, list(initial), defs)
    else:
        raise SchemeFileError(f"unknown scheme kind {kind!r}")
    try:
        scheme.validate()
    except (ValueError, TypeError) as exc:
        raise SchemeFileError(str(exc)) from None

    source = doc.get("source")
    if source is not None:
        if not isinstance(source, dict) or not {"P", "Q", "vars"} <= set(source):
            raise SchemeFileError("field 'source' must hold P, Q and vars")
    return scheme, source


def loads(text: str):
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemeFileError(f"parse error at line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    return scheme_from_dict(doc)


def load_scheme(path, with_source=False):
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    try:
        scheme, source = loads(text)
    except SchemeFileError as exc:
        raise SchemeFileError(f"{path}: {exc}") from None
    return (scheme, source) if with_source else scheme
