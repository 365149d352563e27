"""Constant-term sequence definitions.

A sequence is given by a pair ``(P, Q)`` of integer Laurent polynomials and
``a(n) = CT[P^n Q]``.  This module holds the builtin catalog, the compiler
from binomial sums to constant-term pairs and two brute-force evaluators
used as test oracles.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb

import numpy as np

from .expr import format_laurent, parse_laurent
from .laurent import LaurentPoly


class CatalogError(KeyError):
    pass


class UnsupportedSpecError(ValueError):
    pass


def default_vars(arity):
    return ("x",) if arity == 1 else tuple(f"x{i + 1}" for i in range(arity))


@dataclass(frozen=True)
class CTPair:
    P: LaurentPoly
    Q: LaurentPoly
    vars: tuple = field(default=None)

    def __post_init__(self):
        if self.P.arity != self.Q.arity:
            raise ValueError(f"P has arity {self.P.arity} but Q has arity {self.Q.arity}")
        if self.P.modulus is not None or self.Q.modulus is not None:
            raise ValueError("a CTPair holds integer polynomials")
        if self.vars is None:
            object.__setattr__(self, "vars", default_vars(self.P.arity))
        else:
            object.__setattr__(self, "vars", tuple(self.vars))
        if len(self.vars) != self.P.arity:
            raise ValueError(f"expected {self.P.arity} variable names, got {self.vars}")

    @property
    def arity(self):
        return self.P.arity

    @classmethod
    def parse(cls, P: str, Q: str = "1", vars=("x",)):
        return cls(parse_laurent(P, vars), parse_laurent(Q, vars), tuple(vars))

    def strings(self):
        return format_laurent(self.P, self.vars), format_laurent(self.Q, self.vars)


_CATALOG = {
    "catalan": ("1/x+2+x", "1-x", ("x",)),
    "motzkin": ("1/x+1+x", "1-x^2", ("x",)),
    "delannoy": ("1/x+3+2*x", "1", ("x",)),
    "apery": ("(1+x1)*(1+x2)*(1+x3)*(1+x2+x3+x2*x3+x1*x2*x3)/(x1*x2*x3)", "1",
              ("x1", "x2", "x3")),
}

CATALOG_NAMES = tuple(_CATALOG)


def catalog_source(name):
    """The raw expression strings ``(P, Q, vars)`` behind a catalog entry."""
    try:
        return _CATALOG[name.lower()]
    except KeyError:
        raise CatalogError(f"unknown sequence {name!r}; choose from {', '.join(CATALOG_NAMES)}") from None


def catalog(name) -> CTPair:
    P, Q, vars = catalog_source(name)
    return CTPair.parse(P, Q, vars)


# -- binomial sums ------------------------------------------------------------

@dataclass(frozen=True)
class BinomialSumSpec:
    """sum_k C(n,k) g^k prod_i C(a_i n + b_i k + c_i, d_i n + e_i k + f_i)."""

    g: int
    factors: tuple = ()

    def __post_init__(self):
        factors = tuple(tuple(int(v) for v in f) for f in self.factors)
        for f in factors:
            if len(f) != 6:
                raise UnsupportedSpecError(f"factor {f} needs six integers")
            if min(f[:3]) < 0:
                raise UnsupportedSpecError(
                    f"factor {f}: a, b, c must be nonnegative so the top of each binomial stays >= 0")
        object.__setattr__(self, "factors", factors)

    @classmethod
    def parse(cls, text: str):
        """Read ``"g; a,b,c,d,e,f; a,b,c,d,e,f; ..."``."""
        parts = [s.strip() for s in text.split(";")]
        if not parts or not parts[0]:
            raise UnsupportedSpecError(f"missing weight g in {text!r}")
        try:
            g = int(parts[0])
            factors = [tuple(int(v) for v in s.split(",")) for s in parts[1:] if s]
        except ValueError as exc:
            raise UnsupportedSpecError(f"bad binomial-sum spec {text!r}: {exc}") from None
        return cls(g, tuple(factors))

    def __str__(self):
        return "; ".join([str(self.g)] + [",".join(map(str, f)) for f in self.factors])


APERY_SPEC = BinomialSumSpec(1, ((1, 0, 0, 0, 1, 0), (1, 1, 0, 0, 1, 0), (1, 1, 0, 0, 1, 0)))
CENTRAL_BINOMIAL_SPEC = BinomialSumSpec(1, ((1, 0, 0, 0, 1, 0),))


def _binom_ct(i, m, top, bottom):
    # (1 + x_i)^top / x_i^bottom in m variables
    e = [0] * m
    e[i] = 1
    one_plus = LaurentPoly.constant(1, m) + LaurentPoly.monomial(e)
    e[i] = -bottom
    return one_plus**top * LaurentPoly.monomial(e)


def bin_to_ct(spec: BinomialSumSpec) -> CTPair:
    """Compile a binomial sum into a constant-term pair."""
    m = len(spec.factors)
    if m == 0:
        one = LaurentPoly.constant(1, 1)
        return CTPair(one.scale(1 + spec.g), one)
    one = LaurentPoly.constant(1, m)
    Q, outer, inner = one, one, one
    for i, (a, b, c, d, e, f) in enumerate(spec.factors):
        Q = Q * _binom_ct(i, m, c, f)
        outer = outer * _binom_ct(i, m, a, d)
        inner = inner * _binom_ct(i, m, b, e)
    P = outer * (one + inner.scale(spec.g))
    return CTPair(P, Q)


def _binom(top, bottom):
    if bottom < 0 or bottom > top:
        return 0
    return comb(top, bottom)


def binsum_direct(spec: BinomialSumSpec, n: int) -> int:
    total = 0
    for k in range(n + 1):
        term = comb(n, k) * spec.g**k
        for a, b, c, d, e, f in spec.factors:
            if not term:
                break
            term *= _binom(a * n + b * k + c, d * n + e * k + f)
        total += term
    return total


# -- brute-force constant terms --------------------------------------------------

def ct_direct(pair: CTPair, n: int, m: int | None = None) -> int:
    """Exact CT[P^n Q], optionally reduced mod ``m``."""
    Pn = pair.P**n
    total = 0
    for e, c in pair.Q.items():
        total += c * Pn.coeff(tuple(-x for x in e))
    return total % m if m is not None else total


def ct_sequence(pair: CTPair, count: int, m: int) -> list[int]:
    """CT[P^n Q] mod ``m`` for ``n < count`` by a pruned dense power sweep.

    Only the part of P^n that can still meet ``-supp(Q)`` within the remaining
    multiplications is kept, which keeps multivariate sweeps affordable.
    """
    if count <= 0:
        return []
    k = pair.arity
    P_items = list(pair.P.items())
    Q_items = list(pair.Q.items())
    if not P_items:
        return [pair.Q.constant_term() % m] + [0] * (count - 1)
    plo = np.min([e for e, _ in P_items], axis=0)
    phi = np.max([e for e, _ in P_items], axis=0)
    if Q_items:
        qlo = np.min([e for e, _ in Q_items], axis=0)
        qhi = np.max([e for e, _ in Q_items], axis=0)
    dtype = np.int64 if m < 2**28 else object

    arr = np.ones((1,) * k, dtype=dtype) % m
    offset = np.zeros(k, dtype=np.int64)
    out = []
    for n in range(count):
        if not Q_items:
            out.append(0)
        else:
            s = 0
            for e, c in Q_items:
                idx = -np.asarray(e) - offset
                if np.all(idx >= 0) and np.all(idx < arr.shape):
                    s += int(arr[tuple(idx)]) * c
            out.append(s % m)
        if n == count - 1:
            break
        # multiply by P
        width = phi - plo
        new = np.zeros(tuple(np.array(arr.shape) + width), dtype=dtype)
        for e, c in P_items:
            sl = tuple(slice(int(e[j] - plo[j]), int(e[j] - plo[j]) + arr.shape[j]) for j in range(k))
            new[sl] += arr * (c % m)
        new %= m
        offset = offset + plo
        # crop to exponents that can still reach -supp(Q)
        rest = count - 2 - n
        lo = -qhi - rest * phi
        hi = -qlo - rest * plo
        start = np.maximum(lo - offset, 0)
        stop = np.minimum(hi - offset + 1, new.shape)
        if np.any(stop <= start):
            out.extend([0] * (count - 1 - n))
            return out
        arr = new[tuple(slice(int(a), int(b)) for a, b in zip(start, stop))]
        offset = offset + start
    return out
