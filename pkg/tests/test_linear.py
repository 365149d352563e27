import warnings

import pytest

from ctschemes.arith import Modulus
from ctschemes.auto import CapExceeded
from ctschemes.ctdef import CTPair, catalog, ct_direct, ct_sequence
from ctschemes.evaluate import eval_linear, seq_auto, seq_linear
from ctschemes.linear import LinearScheme, from_auto, generate_linear


class StateCountWarning(UserWarning):
    pass


def _soft(cond, msg):
    if not cond:
        warnings.warn(msg, StateCountWarning)


def test_constant_sequence_identity_matrices():
    L = generate_linear(CTPair.parse("1", "1"), Modulus(3, 1))
    assert L.r == 1 and L.initial == [1]
    assert L.matrices == [[{0: 1}]] * 3


def test_motzkin_mod2_against_automaton(schemes):
    L = generate_linear(catalog("motzkin"), Modulus(2, 1), 30)
    A = schemes("motzkin", 2, 1)
    assert L.r <= A.r
    _soft(L.r == 4, f"Motzkin mod 2 linear scheme has {L.r} states; published scheme has 4")
    assert seq_linear(L, 300) == seq_auto(A, 300)


def test_motzkin_mod4():
    L = generate_linear(catalog("motzkin"), Modulus(2, 2), 30)
    _soft(L.r == 8, f"Motzkin mod 4 linear scheme has {L.r} states; published scheme has 8")
    assert L.r <= 8
    assert [eval_linear(L, n) for n in range(41)] == [ct_direct(catalog("motzkin"), n, 4) for n in range(41)]


def test_relations_hold_as_polynomials():
    # every row must express the child's Q exactly through the member Q's
    m = Modulus(2, 3)
    L = generate_linear(catalog("motzkin"), m)
    from ctschemes.auto import child_pair, normalize_pair
    for i, (P, Q) in enumerate(L.defs):
        for alpha in range(2):
            child = normalize_pair(*child_pair(P, Q, alpha))
            row = L.matrices[alpha][i]
            if child is None:
                assert row == {}
                continue
            assert all(L.defs[j][0] == child[0] for j in row)
            acc = None
            for j, c in row.items():
                term = L.defs[j][1].scale(c)
                acc = term if acc is None else acc + term
            assert acc == child[1]


@pytest.mark.parametrize("name, p, a", [("catalan", 2, 3), ("motzkin", 3, 2), ("delannoy", 5, 2),
                                        ("apery", 2, 2), ("apery", 3, 1)])
def test_fixed_point_and_compression(schemes, name, p, a):
    L = schemes(name, p, a, "linear")
    A = schemes(name, p, a, "auto")
    L.validate()
    assert L.check_fixed_point()
    assert L.r <= A.r
    assert L.initial == [Q.constant_term() for _, Q in L.defs]


def test_from_auto_is_equivalent(schemes):
    A = schemes("catalan", 3, 2)
    L = from_auto(A)
    assert seq_linear(L, 200) == seq_auto(A, 200)


def test_cap_exceeded():
    with pytest.raises(CapExceeded):
        generate_linear(catalog("motzkin"), Modulus(2, 4), 3)


def test_multivariate_oracle():
    pair = CTPair.parse("x/y+y+1/x+1", "1+x*y", ["x", "y"])
    m = Modulus(3, 2)
    L = generate_linear(pair, m)
    assert seq_linear(L, 60) == ct_sequence(pair, 60, m.pa)


def test_row_strings():
    L = generate_linear(catalog("catalan"), Modulus(2, 1))
    assert L.row_strings() == [["A[2]", "A[1]"], ["A[2]", "0"]]


def test_validate_rejects_bad_matrices():
    m = Modulus(2, 1)
    with pytest.raises(ValueError):
        LinearScheme(m, [[{0: 1}]], [1]).validate()
    with pytest.raises(ValueError):
        LinearScheme(m, [[{1: 1}], [{0: 1}]], [1]).validate()
    with pytest.raises(ValueError):
        LinearScheme(m, [[{0: 2}], [{0: 1}]], [1]).validate()
