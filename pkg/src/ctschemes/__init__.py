"""Congruence automata and linear schemes for constant-term sequences.

Sequences are given as a(n) = CT[P(x)^n Q(x)] for Laurent polynomials P, Q.
For a prime power p^a the generators build a finite scheme once; afterwards
a(n) mod p^a costs one step per base-p digit of n.
"""

from .arith import Modulus, crt_combine, digits_lsb_first, parse_index
from .auto import ZERO, AutoScheme, CapExceeded, child_pair, generate_auto, normalize_pair
from .ctdef import BinomialSumSpec, CTPair, bin_to_ct, binsum_direct, catalog, ct_direct, ct_sequence
from .evaluate import (FIBONACCI, CFiniteSpec, cfinite_eval, eval_auto, eval_crt, eval_linear, evaluate,
                       fib_doubling, seq_auto, seq_linear, sequence)
from .expr import format_laurent, parse_laurent
from .laurent import LaurentPoly
from .linear import LinearScheme, generate_linear
from .modlinalg import SpanBasis, span_solve
from .schemefile import load_scheme, save_scheme

__all__ = [
    "Modulus", "crt_combine", "digits_lsb_first", "parse_index",
    "ZERO", "AutoScheme", "CapExceeded", "child_pair", "generate_auto", "normalize_pair",
    "BinomialSumSpec", "CTPair", "bin_to_ct", "binsum_direct", "catalog", "ct_direct", "ct_sequence",
    "FIBONACCI", "CFiniteSpec", "cfinite_eval", "eval_auto", "eval_crt", "eval_linear", "evaluate",
    "fib_doubling", "seq_auto", "seq_linear", "sequence",
    "format_laurent", "parse_laurent", "LaurentPoly", "LinearScheme", "generate_linear",
    "SpanBasis", "span_solve", "load_scheme", "save_scheme",
]
