"""Exact computations with Temperley-Lieb type Hecke symmetries and their canonical pairing."""

from heckesym.checks import Check
from heckesym.scalar import (QQ, QS, ComplexNumbers, QuadraticExtension, Rationals,
                             RationalFunctions, Specialization, specialize)
from heckesym.tensorop import TensorOperator, hecke_check, lift, ybe_check
from heckesym.tlhecke import (TLInstance, build_instance, example_instance, instance_from_dict,
                              instance_to_dict)
from heckesym.pairing import CanonicalPairing, LinComb, pair_words, t
from heckesym.qdet import build_det, compute_c
from heckesym.gram import build_gram, gram_det, prop4_check, scan
from heckesym.poincare import dim_table, lambda_dims, sym_dim

__all__ = [
    "Check", "QQ", "QS", "ComplexNumbers", "QuadraticExtension", "Rationals",
    "RationalFunctions", "Specialization", "specialize", "TensorOperator", "hecke_check",
    "lift", "ybe_check", "TLInstance", "build_instance", "example_instance",
    "instance_from_dict", "instance_to_dict", "CanonicalPairing", "LinComb", "pair_words",
    "t", "build_det", "compute_c", "build_gram", "gram_det", "prop4_check", "scan",
    "dim_table", "lambda_dims", "sym_dim",
]
