"""Prime-power moduli, big indices, base-p digits and CRT combination."""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from math import gcd, prod


class ArithError(ValueError):
    """Invalid input to one of the arithmetic helpers."""


class CoprimalityError(ArithError):
    pass


def is_prime(n: int) -> bool:
    # trial division; p is always small here
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class Modulus:
    """The modulus p**a with p prime and a >= 1."""

    p: int
    a: int
    pa: int = field(init=False, compare=False)

    def __post_init__(self):
        if not isinstance(self.p, int) or not is_prime(self.p):
            raise ArithError(f"p must be prime, got {self.p!r}")
        if not isinstance(self.a, int) or self.a < 1:
            raise ArithError(f"exponent a must be a positive integer, got {self.a!r}")
        object.__setattr__(self, "pa", self.p**self.a)

    def __str__(self):
        return f"{self.p}^{self.a}"


_POWER_RE = re.compile(r"^\s*(\d+)\s*(?:\^|\*\*)\s*(\d+)\s*$")


def parse_index(text) -> int:
    """Parse a nonnegative index from ``"123"``, ``"10^100"`` or ``"10**100"``.

    Plain ints are passed through (after a sign check).
    """
    if isinstance(text, bool):
        raise ArithError(f"not an index: {text!r}")
    if isinstance(text, int):
        value = text
    else:
        s = str(text).strip()
        m = _POWER_RE.match(s)
        if m:
            value = int(m.group(1)) ** int(m.group(2))
        elif s.isdigit():
            value = int(s)
        else:
            raise ArithError(f"cannot parse index {text!r}")
    if value < 0:
        raise ArithError(f"index must be nonnegative, got {value}")
    return value


def digits_lsb_first(n: int, p: int) -> list[int]:
    """Base-``p`` digits of ``n``, least significant first; ``[]`` for 0."""
    if p < 2:
        raise ArithError(f"invalid base {p}")
    if n < 0:
        raise ArithError(f"index must be nonnegative, got {n}")
    out = []
    while n:
        n, d = divmod(n, p)
        out.append(d)
    return out


def crt_combine(pairs) -> tuple[int, int]:
    """Combine ``[(r_i, m_i), ...]`` into ``(r, M)`` with ``M = prod(m_i)``."""
    pairs = [(int(r), int(m)) for r, m in pairs]
    for i, (_, mi) in enumerate(pairs):
        if mi < 1:
            raise ArithError(f"modulus must be positive, got {mi}")
        for _, mj in pairs[i + 1:]:
            if gcd(mi, mj) != 1:
                raise CoprimalityError(f"moduli {mi} and {mj} are not coprime")
    M = prod(m for _, m in pairs)
    r = 0
    for ri, mi in pairs:
        Mi = M // mi
        r += ri * Mi * pow(Mi, -1, mi) if mi > 1 else 0
    return r % M, M
