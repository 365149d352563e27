import pytest

from ctschemes.arith import Modulus
from ctschemes.auto import generate_auto
from ctschemes.ctdef import catalog
from ctschemes.linear import generate_linear

_cache = {}


def scheme_for(name, p, a, kind="auto", cap=10**5):
    key = (name, p, a, kind, cap)
    if key not in _cache:
        build = generate_auto if kind == "auto" else generate_linear
        _cache[key] = build(catalog(name), Modulus(p, a), cap)
    return _cache[key]


@pytest.fixture
def schemes():
    return scheme_for
