import random

import pytest
from hypothesis import given, strategies as st

from ctschemes.arith import (ArithError, CoprimalityError, Modulus, crt_combine, digits_lsb_first, is_prime,
                             parse_index)


@pytest.mark.parametrize("n, p, expected", [
    (30, 2, [0, 1, 1, 1, 1]),
    (0, 5, []),
    (100, 5, [0, 0, 4]),
])
def test_digits_examples(n, p, expected):
    assert digits_lsb_first(n, p) == expected


def test_digits_bad_base():
    with pytest.raises(ArithError):
        digits_lsb_first(10, 1)


@given(st.integers(0, 10**6), st.sampled_from([2, 3, 5, 7]))
def test_digits_horner_roundtrip(n, p):
    ds = digits_lsb_first(n, p)
    assert all(0 <= d < p for d in ds)
    assert not ds or ds[-1] != 0
    acc = 0
    for d in reversed(ds):
        acc = acc * p + d
    assert acc == n


def test_crt_examples():
    assert crt_combine([(0, 8), (0, 125)]) == (0, 1000)
    # exhaustive search over 0..5
    want = [x for x in range(6) if x % 2 == 1 and x % 3 == 2]
    assert crt_combine([(1, 2), (2, 3)]) == (want[0], 6)
    assert crt_combine([(187 % 8, 8), (187 % 125, 125)]) == (187, 1000)
    assert crt_combine([(3, 8), (62, 125)]) == (187, 1000)


def test_crt_rejects_common_factor():
    with pytest.raises(CoprimalityError, match="4 and 6"):
        crt_combine([(1, 4), (1, 6)])


@given(st.data())
def test_crt_inverts_reduction(data):
    mods = data.draw(st.sampled_from([[8, 125], [2, 3, 5], [9, 4, 25, 7], [16]]))
    M = 1
    for m in mods:
        M *= m
    x = data.draw(st.integers(0, M - 1))
    assert crt_combine([(x % m, m) for m in mods]) == (x, M)


def test_modulus():
    m = Modulus(5, 3)
    assert m.pa == 125
    with pytest.raises(ArithError):
        Modulus(6, 1)
    with pytest.raises(ArithError):
        Modulus(2, 0)
    assert [q for q in range(30) if is_prime(q)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]


@pytest.mark.parametrize("text, value", [
    ("0", 0), ("12345", 12345), ("10^100", 10**100), ("10**100", 10**100), (" 2 ^ 10 ", 1024), (7, 7),
])
def test_parse_index(text, value):
    assert parse_index(text) == value
    assert parse_index(str(parse_index(text))) == value


@pytest.mark.parametrize("bad", ["-3", "1e5", "ten", "", -1, "2^-1"])
def test_parse_index_rejects(bad):
    with pytest.raises(ArithError):
        parse_index(bad)


def test_big_index_decimal_roundtrip():
    rng = random.Random(3)
    for _ in range(50):
        n = rng.getrandbits(400)
        assert parse_index(str(n)) == n
