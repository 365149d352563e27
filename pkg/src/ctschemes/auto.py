"""Automatic p-schemes: finite automata with output for CT[P^n Q] mod p^a.

Each state is a normalized pair (P, Q).  For a digit alpha the child of
(P, Q) is (P^p, P^alpha Q), which encodes A(pn + alpha); normalization
repeatedly drops terms of Q that cannot reach the constant term and divides
all exponents by p while P allows it.
"""

from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass, field

from .arith import Modulus
from .ctdef import CTPair
from .laurent import LaurentPoly

log = logging.getLogger(__name__)

# Target index of the absorbing zero state, in the 1-based external numbering.
ZERO = 0


class CapExceeded(Exception):
    """Generation needed more states than the cap allows."""

    def __init__(self, cap, reached):
        super().__init__(f"more than {cap} states needed (reached {reached})")
        self.cap = cap
        self.reached = reached


def child_pair(P: LaurentPoly, Q: LaurentPoly, alpha: int, powers=None):
    """Raw child ``(P^p, P^alpha * Q)``; ``powers`` may supply P^0..P^p."""
    p = P.modulus.p
    if not 0 <= alpha < p:
        raise ValueError(f"digit {alpha} out of range for p={p}")
    if powers is None:
        return P**p, P**alpha * Q
    return powers[p], powers[alpha] * Q


def normalize_pair(P: LaurentPoly, Q: LaurentPoly):
    """Canonical form of a pair, or ``None`` when its sequence is identically 0."""
    p = P.modulus.p
    while True:
        if not Q:
            return None
        if not P.is_p_power_supported(p):
            return P, Q
        Q = Q.filter_p_divisible(p)
        if not Q:
            return None
        P2 = P.lambda_divide(p)
        Q2 = Q.lambda_divide(p)
        if P2 == P and Q2 == Q:
            # only exponent-0 terms left (e.g. constant P); Lambda is the identity
            return P, Q
        P, Q = P2, Q2


class PowerCache:
    """Memoizes P^0..P^p per distinct P; many states share one P."""

    def __init__(self, p):
        self.p = p
        self._cache = {}

    def __call__(self, P):
        hit = self._cache.get(P)
        if hit is None:
            hit = [LaurentPoly.constant(1, P.arity, P.modulus)]
            for _ in range(self.p):
                hit.append(hit[-1] * P)
            self._cache[P] = hit
        return hit


@dataclass
class AutoScheme:
    """Automaton with output.

    ``transitions[i][alpha]`` is the 1-based target of state ``i + 1`` on digit
    ``alpha`` (``ZERO`` for the zero sink); ``initial[i]`` is A_{i+1}(0).
    """

    modulus: Modulus
    transitions: list
    initial: list
    defs: list | None = field(default=None, compare=False)

    kind = "auto"

    @property
    def p(self):
        return self.modulus.p

    @property
    def r(self):
        return len(self.initial)

    def validate(self):
        p, r, m = self.modulus.p, self.r, self.modulus.pa
        if r < 1:
            raise ValueError("a scheme needs at least one state")
        if len(self.transitions) != r:
            raise ValueError(f"expected {r} transition rows, got {len(self.transitions)}")
        for i, row in enumerate(self.transitions, 1):
            if len(row) != p:
                raise ValueError(f"state {i}: expected {p} transitions, got {len(row)}")
            for t in row:
                if not isinstance(t, int) or not 0 <= t <= r:
                    raise ValueError(f"state {i}: bad transition target {t!r}")
        for v in self.initial:
            if not isinstance(v, int) or not 0 <= v < m:
                raise ValueError(f"initial value {v!r} outside [0, {m})")
        if self.defs is not None and len(self.defs) != r:
            raise ValueError(f"expected {r} state definitions, got {len(self.defs)}")

    def check_zero_consistency(self):
        """A_i(0) must equal the value at the digit-0 target."""
        for i, row in enumerate(self.transitions):
            j = row[0]
            want = 0 if j == ZERO else self.initial[j - 1]
            if self.initial[i] != want:
                return False
        return True


def _start(pair: CTPair, modulus: Modulus):
    P = pair.P.reduce_mod(modulus)
    Q = pair.Q.reduce_mod(modulus)
    return normalize_pair(P, Q)


def trivial_zero_auto(modulus):
    return AutoScheme(modulus, [[ZERO] * modulus.p], [0], None)


def generate_auto(pair: CTPair, modulus: Modulus, cap: int = 10000) -> AutoScheme:
    """Breadth-first exploration of child pairs; raises :class:`CapExceeded`."""
    if cap < 1:
        raise ValueError("cap must be at least 1")
    p = modulus.p
    root = _start(pair, modulus)
    if root is None:
        return trivial_zero_auto(modulus)
    powers = PowerCache(p)
    index = {root: 1}
    states = [root]
    transitions = []
    queue = deque([root])
    while queue:
        P, Q = queue.popleft()
        pw = powers(P)
        row = []
        for alpha in range(p):
            child = normalize_pair(*child_pair(P, Q, alpha, pw))
            if child is None:
                row.append(ZERO)
                continue
            j = index.get(child)
            if j is None:
                if len(states) >= cap:
                    raise CapExceeded(cap, len(states) + 1)
                states.append(child)
                j = index[child] = len(states)
                queue.append(child)
            row.append(j)
        transitions.append(row)
    initial = [Q.constant_term() for _, Q in states]
    log.debug("automatic scheme mod %s: %d states", modulus.pa, len(states))
    return AutoScheme(modulus, transitions, initial, states)
