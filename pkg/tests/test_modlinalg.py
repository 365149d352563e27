import itertools
import random

import pytest

from ctschemes.arith import Modulus
from ctschemes.expr import parse_laurent
from ctschemes.modlinalg import SpanBasis, span_solve, valuation


def poly(text, m=4):
    p = {4: 2, 8: 2, 9: 3, 2: 2, 25: 5}[m]
    a = {4: 2, 8: 3, 9: 2, 2: 1, 25: 2}[m]
    return parse_laurent(text).reduce_mod(Modulus(p, a))


def test_examples():
    assert span_solve([poly("1+x")], poly("2+2*x"), 2, 2) == [2]
    assert span_solve([poly("1+x")], poly("x"), 2, 2) is None
    assert span_solve([poly("2*x")], poly("x"), 2, 2) is None
    # the exhaustive checks behind the last two
    assert not any(c * 1 % 4 == 0 and c % 4 == 1 for c in range(4))
    assert not any(2 * c % 4 == 1 for c in range(4))


def test_valuation():
    assert valuation(12, 2) == 2 and valuation(7, 7) == 1 and valuation(5, 3) == 0


def _span(basis, m, ncol):
    out = set()
    for cs in itertools.product(range(m), repeat=len(basis)):
        out.add(tuple(sum(c * b[j] for c, b in zip(cs, basis)) % m for j in range(ncol)))
    return out


@pytest.mark.parametrize("p, a", [(2, 1), (2, 2), (2, 3), (3, 2), (5, 1)])
def test_membership_matches_enumeration(p, a):
    m = p**a
    rng = random.Random(p * 10 + a)
    for _ in range(120):
        ncol = rng.randint(1, 3)
        nb = rng.randint(1, 3 if m <= 8 else 2)
        basis = [[rng.choice([0, 1, p, m - 1, rng.randrange(m)]) for _ in range(ncol)] for _ in range(nb)]
        span = _span(basis, m, ncol)
        sb = SpanBasis(p, a)
        for b in basis:
            sb.add(dict(enumerate(b)))
        for t in itertools.product(range(m), repeat=ncol):
            sol = sb.solve(dict(enumerate(t)))
            assert (sol is not None) == (t in span), (basis, t)
            if sol is not None:
                rec = tuple(sum(sol.get(i, 0) * basis[i][j] for i in range(nb)) % m for j in range(ncol))
                assert rec == t


def test_fuzz_reconstruction_large():
    p, a = 2, 4
    m = p**a
    rng = random.Random(11)
    for _ in range(200):
        ncol = rng.randint(2, 12)
        cols = [(rng.randint(-6, 6),) for _ in range(ncol)]
        basis = [{c: rng.randrange(m) * rng.choice([1, 2, 4, 8]) % m for c in rng.sample(cols, rng.randint(1, ncol))}
                 for _ in range(rng.randint(1, 6))]
        sb = SpanBasis(p, a)
        for b in basis:
            sb.add(b)
        coeffs = [rng.randrange(m) for _ in basis]
        target = {}
        for c, b in zip(coeffs, basis):
            for k, v in b.items():
                target[k] = (target.get(k, 0) + c * v) % m
        sol = sb.solve(target)
        assert sol is not None
        _check(sol, basis, target, m)
        # perturbed targets: whatever comes back must reconstruct exactly
        target[rng.choice(cols)] = rng.randrange(m)
        sol = sb.solve(target)
        if sol is not None:
            _check(sol, basis, target, m)


def _check(sol, basis, target, m):
    rec = {}
    for i, c in sol.items():
        for k, v in basis[i].items():
            rec[k] = (rec.get(k, 0) + c * v) % m
    assert {k: v for k, v in rec.items() if v} == {k: v for k, v in target.items() if v % m}


def test_labels_are_returned():
    sb = SpanBasis(3, 1)
    sb.add({"a": 1}, label=7)
    sb.add({"b": 1}, label=9)
    assert sb.solve({"a": 2, "b": 1}) == {7: 2, 9: 1}
    assert sb.solve({"c": 1}) is None
    assert sb.solve({}) == {}
