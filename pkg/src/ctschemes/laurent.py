"""Sparse multivariate Laurent polynomials over Z or Z/p^aZ.

A polynomial is a mapping from exponent tuples (negative entries allowed) to
nonzero coefficients.  With ``modulus=None`` the coefficients are exact
integers; otherwise they are residues in ``[1, p^a)`` and every operation
reduces eagerly.
"""

from __future__ import annotations

from collections import defaultdict

from .arith import Modulus


class IncompatibleError(ValueError):
    """Operands live in different rings (modulus or arity differ)."""


class NotPSupportedError(ValueError):
    """Lambda-division requested on a polynomial with an exponent not divisible by p."""


class LaurentPoly:
    __slots__ = ("_terms", "arity", "modulus", "_key", "_hash")

    def __init__(self, terms=None, arity=1, modulus=None):
        if arity < 1:
            raise ValueError("arity must be at least 1")
        self.arity = arity
        self.modulus = modulus
        m = modulus.pa if modulus is not None else None
        clean = {}
        for e, c in (terms or {}).items():
            e = tuple(e)
            if len(e) != arity:
                raise IncompatibleError(f"exponent {e} does not have arity {arity}")
            if m is not None:
                c %= m
            if c:
                clean[e] = c
        self._terms = clean
        self._key = None
        self._hash = None

    @classmethod
    def _raw(cls, terms, arity, modulus):
        # terms already clean: exponent tuples of right arity, reduced, nonzero
        obj = cls.__new__(cls)
        obj._terms = terms
        obj.arity = arity
        obj.modulus = modulus
        obj._key = None
        obj._hash = None
        return obj

    @classmethod
    def constant(cls, c, arity=1, modulus=None):
        return cls({(0,) * arity: c}, arity, modulus)

    @classmethod
    def monomial(cls, exps, coeff=1, modulus=None):
        exps = tuple(exps)
        return cls({exps: coeff}, len(exps), modulus)

    # -- inspection -------------------------------------------------------

    @property
    def terms(self):
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def is_zero(self):
        return not self._terms

    def coeff(self, exps):
        return self._terms.get(tuple(exps), 0)

    def constant_term(self):
        return self._terms.get((0,) * self.arity, 0)

    @property
    def key(self):
        """Canonical, hashable description: terms sorted by exponent tuple."""
        if self._key is None:
            self._key = tuple(sorted(self._terms.items()))
        return self._key

    def __eq__(self, other):
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return (self.arity == other.arity and self.modulus == other.modulus
                and self._terms == other._terms)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.arity, self.modulus, self.key))
        return self._hash

    def __repr__(self):
        from .expr import format_laurent

        ring = "Z" if self.modulus is None else f"Z/{self.modulus.pa}"
        return f"LaurentPoly({format_laurent(self)!r} over {ring})"

    # -- ring operations --------------------------------------------------

    def _check(self, other):
        if self.arity != other.arity or self.modulus != other.modulus:
            raise IncompatibleError(
                f"cannot combine arity {self.arity} over {self.modulus} "
                f"with arity {other.arity} over {other.modulus}")

    def _mod(self):
        return self.modulus.pa if self.modulus is not None else None

    def __add__(self, other):
        self._check(other)
        m = self._mod()
        out = dict(self._terms)
        for e, c in other._terms.items():
            v = out.get(e, 0) + c
            if m is not None:
                v %= m
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return LaurentPoly._raw(out, self.arity, self.modulus)

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        m = self._mod()
        out = {}
        for e, v in self._terms.items():
            v *= c
            if m is not None:
                v %= m
            if v:
                out[e] = v
        return LaurentPoly._raw(out, self.arity, self.modulus)

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        self._check(other)
        m = self._mod()
        a, b = self._terms, other._terms
        if len(a) < len(b):
            a, b = b, a
        acc = defaultdict(int)
        if self.arity == 1:
            for (eb,), cb in b.items():
                for (ea,), ca in a.items():
                    acc[ea + eb] += ca * cb
            pairs = (((e,), c) for e, c in acc.items())
        else:
            for eb, cb in b.items():
                for ea, ca in a.items():
                    acc[tuple(x + y for x, y in zip(ea, eb))] += ca * cb
            pairs = acc.items()
        if m is None:
            out = {e: c for e, c in pairs if c}
        else:
            out = {}
            for e, c in pairs:
                c %= m
                if c:
                    out[e] = c
        return LaurentPoly._raw(out, self.arity, self.modulus)

    __rmul__ = scale

    def __pow__(self, e):
        if e < 0:
            raise ValueError("negative powers are not supported")
        result = LaurentPoly.constant(1, self.arity, self.modulus)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    # -- modular helpers --------------------------------------------------

    def reduce_mod(self, modulus: Modulus):
        return LaurentPoly(self._terms, self.arity, modulus)

    def lift(self):
        """Forget the modulus, keeping the residues as integers."""
        return LaurentPoly._raw(dict(self._terms), self.arity, None)

    def _base(self, p):
        if p is None:
            if self.modulus is None:
                raise ValueError("p is required for polynomials over Z")
            p = self.modulus.p
        return p

    def is_p_power_supported(self, p=None):
        p = self._base(p)
        return all(x % p == 0 for e in self._terms for x in e)

    def lambda_divide(self, p=None):
        """Replace each x_j^p by x_j."""
        p = self._base(p)
        out = {}
        for e, c in self._terms.items():
            if any(x % p for x in e):
                raise NotPSupportedError(f"exponent {e} is not divisible by {p}")
            out[tuple(x // p for x in e)] = c
        return LaurentPoly._raw(out, self.arity, self.modulus)

    def filter_p_divisible(self, p=None):
        """Drop every term with some exponent not divisible by p."""
        p = self._base(p)
        out = {e: c for e, c in self._terms.items() if all(x % p == 0 for x in e)}
        return LaurentPoly._raw(out, self.arity, self.modulus)

    def shift(self, exps):
        """Multiply by the monomial x^exps."""
        out = {tuple(x + y for x, y in zip(e, exps)): c for e, c in self._terms.items()}
        return LaurentPoly._raw(out, self.arity, self.modulus)


# Functional spellings.

def reduce_mod(P: LaurentPoly, modulus: Modulus) -> LaurentPoly:
    return P.reduce_mod(modulus)


def add(A, B):
    return A + B


def mul(A, B):
    return A * B


def scale(A, c):
    return A.scale(c)


def power(P, e):
    return P**e


def constant_term(P):
    return P.constant_term()


def is_p_power_supported(P, p=None):
    return P.is_p_power_supported(p)


def lambda_divide(P, p=None):
    return P.lambda_divide(p)


def filter_p_divisible(Q, p=None):
    return Q.filter_p_divisible(p)
