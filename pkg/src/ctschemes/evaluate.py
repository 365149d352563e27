"""Log-time evaluation of schemes, CRT composition and C-finite helpers."""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

import numpy as np

from .arith import crt_combine, digits_lsb_first, parse_index
from .auto import ZERO, AutoScheme
from .linear import LinearScheme


class PreconditionError(ValueError):
    pass


def eval_auto(scheme: AutoScheme, n) -> int:
    """Walk the base-p digits of n, least significant first, from state 1."""
    n = parse_index(n)
    trans = scheme.transitions
    p = scheme.modulus.p
    state = 1
    while n:
        n, d = divmod(n, p)
        state = trans[state - 1][d]
        if state == ZERO:
            return 0
    return scheme.initial[state - 1]


def seq_auto(scheme: AutoScheme, count: int) -> list[int]:
    if count < 1:
        raise ValueError("count must be at least 1")
    return [eval_auto(scheme, n) for n in range(count)]


def eval_linear(scheme: LinearScheme, n) -> int:
    """First entry of C^(d_0) C^(d_1) ... C^(d_{k-1}) . initial."""
    n = parse_index(n)
    m = scheme.modulus.pa
    mats = scheme.matrices
    # row vector e_1^T, pushed through the digit matrices left to right
    u = {0: 1}
    for d in digits_lsb_first(n, scheme.modulus.p):
        rows = mats[d]
        nxt = {}
        for i, ui in u.items():
            for j, c in rows[i].items():
                nxt[j] = (nxt.get(j, 0) + ui * c) % m
        u = {j: v for j, v in nxt.items() if v}
        if not u:
            return 0
    return sum(ui * scheme.initial[i] for i, ui in u.items()) % m


def _dense_stack(scheme: LinearScheme, dtype):
    r = scheme.r
    out = np.zeros((scheme.p, r, r), dtype=dtype)
    for alpha, mat in enumerate(scheme.matrices):
        for i, row in enumerate(mat):
            for j, c in row.items():
                out[alpha, i, j] = c
    return out


def seq_linear(scheme: LinearScheme, count: int) -> list[int]:
    """All values for n < count via A(pn + alpha) = C^(alpha) A(n), level by level."""
    if count < 1:
        raise ValueError("count must be at least 1")
    p, m, r = scheme.modulus.p, scheme.modulus.pa, scheme.r
    dtype = np.int64 if r * (m - 1) ** 2 < 2**62 else object
    C = _dense_stack(scheme, dtype)
    V = np.zeros((count, r), dtype=dtype)
    V[0] = scheme.initial
    lo, hi = 0, 1
    # n in [p*lo, p*hi) is computed from the block [lo, hi); n = 0 is the fixed point
    while hi < count and p * lo < count:
        block = V[lo:hi]
        for alpha in range(p):
            skip = 1 if lo == 0 and alpha == 0 else 0
            idx = np.arange(lo + skip, hi) * p + alpha
            keep = idx < count
            if keep.any():
                V[idx[keep]] = (block[skip:][keep] @ C[alpha].T) % m
        lo, hi = hi, min(p * hi, count)
    return [int(v) for v in V[:, 0]]


def evaluate(scheme, n) -> int:
    if isinstance(scheme, AutoScheme):
        return eval_auto(scheme, n)
    return eval_linear(scheme, n)


def sequence(scheme, count: int) -> list[int]:
    if isinstance(scheme, AutoScheme):
        return seq_auto(scheme, count)
    return seq_linear(scheme, count)


def eval_crt(entries, m: int, n) -> int:
    """Combine evaluations mod pairwise coprime prime powers, then reduce mod m.

    ``entries`` holds schemes, or ``(scheme, modulus)`` pairs whose modulus
    must agree with the scheme's own.
    """
    schemes = []
    for e in entries:
        if isinstance(e, tuple):
            s, pa = e
            if pa != s.modulus.pa:
                raise PreconditionError(f"entry modulus {pa} does not match scheme modulus {s.modulus.pa}")
            schemes.append(s)
        else:
            schemes.append(e)
    mods = [s.modulus.pa for s in schemes]
    for i, a in enumerate(mods):
        for b in mods[i + 1:]:
            if gcd(a, b) != 1:
                raise PreconditionError(f"moduli {a} and {b} are not coprime")
    total = 1
    for a in mods:
        total *= a
    if m < 1 or total % m:
        raise PreconditionError(f"{m} does not divide the product of moduli {mods} = {total}")
    n = parse_index(n)
    r, _ = crt_combine([(evaluate(s, n), s.modulus.pa) for s in schemes])
    return r % m


# -- C-finite sequences ----------------------------------------------------------

@dataclass(frozen=True)
class CFiniteSpec:
    """x_n = sum_i coeffs[i-1] * x_{n-i}; ``init`` holds x_offset .. x_{offset+d-1}."""

    coeffs: tuple
    init: tuple
    offset: int = 0

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(int(c) for c in self.coeffs))
        object.__setattr__(self, "init", tuple(int(c) for c in self.init))
        if not self.coeffs:
            raise ValueError("order must be at least 1")
        if len(self.init) != len(self.coeffs):
            raise ValueError(f"need {len(self.coeffs)} initial values, got {len(self.init)}")

    @property
    def order(self):
        return len(self.coeffs)


FIBONACCI = CFiniteSpec((1, 1), (1, 1), offset=1)


def _matmul(A, B, m):
    k = len(B)
    cols = list(zip(*B))
    return [[sum(a * b for a, b in zip(row, col)) % m for col in cols] for row in A] if k else A


def cfinite_eval(spec: CFiniteSpec, m: int, n) -> int:
    """x_n mod m by companion-matrix square-and-multiply."""
    n = parse_index(n)
    d = spec.order
    k = n - spec.offset
    if k < 0:
        raise ValueError(f"index {n} precedes the first initial value x_{spec.offset}")
    if k < d:
        return spec.init[k] % m
    # state (x_{t+d-1}, ..., x_t); one step shifts t by 1
    M = [[c % m for c in spec.coeffs]] + [[int(i == j) for j in range(d)] for i in range(d - 1)]
    R = [[int(i == j) % m for j in range(d)] for i in range(d)]
    e = k - (d - 1)
    while e:
        if e & 1:
            R = _matmul(R, M, m)
        e >>= 1
        if e:
            M = _matmul(M, M, m)
    state = [x % m for x in reversed(spec.init)]
    return sum(a * b for a, b in zip(R[0], state)) % m


def fib_doubling(n, m: int) -> int:
    """F_n mod m (F_1 = F_2 = 1) via F_2k = F_k (F_{k-1} + F_{k+1}), F_2k+1 = F_k^2 + F_{k+1}^2."""
    n = parse_index(n)
    if n < 1:
        raise ValueError("fib_doubling needs n >= 1")
    memo = {1: 1 % m, 2: 1 % m}

    def F(k):
        v = memo.get(k)
        if v is None:
            h = k // 2
            if k % 2 == 0:
                v = F(h) * (F(h + 1) + F(h - 1)) % m
            else:
                v = (F(h) ** 2 + F(h + 1) ** 2) % m
            memo[k] = v
        return v

    return F(n)
