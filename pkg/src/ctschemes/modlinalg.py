"""Submodule membership over Z/p^aZ.

Vectors are sparse dicts ``{column: residue}`` with hashable, totally ordered
column keys (exponent tuples in practice), so the ambient coordinate set can
grow as new monomials show up.

:class:`SpanBasis` keeps an echelon form whose pivots are exact powers of p.
Whenever a row with pivot ``p^k`` is stored, ``p^(a-k)`` times that row (which
vanishes at the pivot) is inserted as well.  With that closure in place,
greedy top-down reduction decides membership exactly, despite zero divisors.
"""

from __future__ import annotations


def valuation(x, p):
    k = 0
    while x % p == 0:
        x //= p
        k += 1
    return k


def _axpy(y, c, x, m):
    # y += c*x (mod m), in place; drops zeros
    for col, v in x.items():
        w = (y.get(col, 0) + c * v) % m
        if w:
            y[col] = w
        else:
            y.pop(col, None)


class SpanBasis:
    """Incremental basis of members; each row remembers how it combines them."""

    def __init__(self, p, a):
        self.p = p
        self.a = a
        self.m = p**a
        self.members = []
        # pivot column -> (row, pivot value p^k, combination {member: coeff})
        self._rows = {}

    def __len__(self):
        return len(self.members)

    def add(self, vec, label=None):
        """Append a member; ``label`` defaults to its position."""
        idx = len(self.members)
        self.members.append(idx if label is None else label)
        vec = {c: v % self.m for c, v in vec.items() if v % self.m}
        self._insert(vec, {idx: 1})

    def _insert(self, vec, combo):
        p, a, m = self.p, self.a, self.m
        while vec:
            col = min(vec)
            u = vec[col]
            k = valuation(u, p)
            pk = p**k
            inv = pow(u // pk, -1, m)
            if inv != 1:
                vec = {c: v * inv % m for c, v in vec.items()}
                combo = {i: v * inv % m for i, v in combo.items()}
            held = self._rows.get(col)
            if held is not None and k >= held[1][0]:
                row, (w, pw), rcombo = held
                q = p ** (k - w)
                _axpy(vec, -q, row, m)
                _axpy(combo, -q, rcombo, m)
                continue
            self._rows[col] = (vec, (k, pk), combo)
            if k:
                s = p ** (a - k)
                self._insert({c: v * s % m for c, v in vec.items() if v * s % m},
                             {i: v * s % m for i, v in combo.items() if v * s % m})
            if held is None:
                return
            # the displaced row now reduces against the new, stronger pivot
            vec, _, combo = held
            vec = dict(vec)
            combo = dict(combo)

    def solve(self, target):
        """Coefficients ``{member label: c}`` reproducing ``target``, or ``None``."""
        m = self.m
        vec = {c: v % m for c, v in target.items() if v % m}
        acc = {}
        while vec:
            col = min(vec)
            held = self._rows.get(col)
            if held is None:
                return None
            row, (w, pw), rcombo = held
            if vec[col] % pw:
                return None
            q = vec[col] // pw
            _axpy(vec, -q, row, m)
            _axpy(acc, q, rcombo, m)
        return {self.members[i]: c for i, c in acc.items() if c}


def span_solve(basis, target, p, a):
    """Solve ``sum_j c_j basis[j] = target`` over Z/p^aZ.

    ``basis`` and ``target`` are sparse dict vectors (or objects with an
    ``items()`` method, such as Laurent polynomials).  Returns the full
    coefficient list or ``None`` when the target is not in the span.
    """
    sb = SpanBasis(p, a)
    for b in basis:
        sb.add(dict(b.items()))
    sol = sb.solve(dict(target.items()))
    if sol is None:
        return None
    return [sol.get(j, 0) for j in range(len(basis))]
