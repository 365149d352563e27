"""Linear p-schemes: A_i(pn + alpha) = sum_j C[alpha][i][j] A_j(n) mod p^a.

Generation follows the automatic-scheme worklist, but a child whose Q lies in
the Z/p^aZ-span of the Q's already recorded for the same P becomes a matrix
row instead of a new state.  Relations are fixed when found.
"""

from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass, field

from .arith import Modulus
from .auto import AutoScheme, CapExceeded, PowerCache, ZERO, _start, child_pair, normalize_pair
from .ctdef import CTPair
from .modlinalg import SpanBasis

log = logging.getLogger(__name__)


@dataclass
class LinearScheme:
    """``matrices[alpha][i]`` is the sparse row ``{j: c}`` (0-based j) of state i."""

    modulus: Modulus
    matrices: list
    initial: list
    defs: list | None = field(default=None, compare=False)

    kind = "linear"

    @property
    def p(self):
        return self.modulus.p

    @property
    def r(self):
        return len(self.initial)

    def dense(self, alpha):
        r = self.r
        out = [[0] * r for _ in range(r)]
        for i, row in enumerate(self.matrices[alpha]):
            for j, c in row.items():
                out[i][j] = c
        return out

    def validate(self):
        p, r, m = self.modulus.p, self.r, self.modulus.pa
        if r < 1:
            raise ValueError("a scheme needs at least one state")
        if len(self.matrices) != p:
            raise ValueError(f"expected {p} matrices, got {len(self.matrices)}")
        for alpha, mat in enumerate(self.matrices):
            if len(mat) != r:
                raise ValueError(f"matrix {alpha}: expected {r} rows, got {len(mat)}")
            for i, row in enumerate(mat):
                for j, c in row.items():
                    if not isinstance(j, int) or not 0 <= j < r:
                        raise ValueError(f"matrix {alpha}, row {i + 1}: bad column {j!r}")
                    if not isinstance(c, int) or not 0 < c < m:
                        raise ValueError(f"matrix {alpha}, row {i + 1}: entry {c!r} outside (0, {m})")
        for v in self.initial:
            if not isinstance(v, int) or not 0 <= v < m:
                raise ValueError(f"initial value {v!r} outside [0, {m})")
        if self.defs is not None and len(self.defs) != r:
            raise ValueError(f"expected {r} state definitions, got {len(self.defs)}")

    def check_fixed_point(self):
        """initial == C^(0) . initial (mod p^a)."""
        m = self.modulus.pa
        return all(
            sum(c * self.initial[j] for j, c in row.items()) % m == self.initial[i]
            for i, row in enumerate(self.matrices[0]))

    def row_strings(self, name="A"):
        """Human-readable right-hand sides, one list per state, 1-based names."""
        out = []
        for i in range(self.r):
            rhs = []
            for alpha in range(self.p):
                row = self.matrices[alpha][i]
                parts = [f"{name}[{j + 1}]" if c == 1 else f"{c}*{name}[{j + 1}]"
                         for j, c in sorted(row.items())]
                rhs.append("+".join(parts) or "0")
            out.append(rhs)
        return out


def from_auto(scheme: AutoScheme) -> LinearScheme:
    """View an automatic scheme as a (0/1) linear one."""
    mats = [[{} if row[alpha] == ZERO else {row[alpha] - 1: 1} for row in scheme.transitions]
            for alpha in range(scheme.p)]
    return LinearScheme(scheme.modulus, mats, list(scheme.initial), scheme.defs)


def generate_linear(pair: CTPair, modulus: Modulus, cap: int = 10000) -> LinearScheme:
    """Worklist generation with span compression; raises :class:`CapExceeded`."""
    if cap < 1:
        raise ValueError("cap must be at least 1")
    p, a = modulus.p, modulus.a
    root = _start(pair, modulus)
    if root is None:
        return LinearScheme(modulus, [[{}] for _ in range(p)], [0], None)
    powers = PowerCache(p)
    states = []
    index = {}
    groups = {}

    def register(state):
        if len(states) >= cap:
            raise CapExceeded(cap, len(states) + 1)
        i = len(states)
        states.append(state)
        index[state] = i
        P, Q = state
        groups.setdefault(P, SpanBasis(p, a)).add(dict(Q.items()), i)
        queue.append(i)
        return i

    queue = deque()
    register(root)
    mats = [[] for _ in range(p)]
    while queue:
        i = queue.popleft()
        P, Q = states[i]
        pw = powers(P)
        for alpha in range(p):
            child = normalize_pair(*child_pair(P, Q, alpha, pw))
            if child is None:
                mats[alpha].append({})
                continue
            j = index.get(child)
            if j is not None:
                mats[alpha].append({j: 1})
                continue
            basis = groups.get(child[0])
            combo = basis.solve(dict(child[1].items())) if basis is not None else None
            if combo is None:
                combo = {register(child): 1}
            mats[alpha].append(combo)
    initial = [Q.constant_term() for _, Q in states]
    log.debug("linear scheme mod %s: %d states", modulus.pa, len(states))
    return LinearScheme(modulus, mats, initial, states)
