"""Exact arithmetic for the cyclotomic Witt ring and its surroundings:
number-theoretic kernels, a literal roots-of-unity oracle, lambda and
gamma operations with the gamma filtration, exact integer linear
algebra, matrices over commutative rigs, and prime spectra of finite
rigs, all behind one CLI."""

from .arith import IntPolynomial, cyclotomic_poly, euler_phi, factor, mobius, ramanujan_sum
from .witt import ONE, ZERO, WittElement, basis_mul, frobenius, mul, phi, trace, verschiebung

__version__ = "0.1.0"

__all__ = [
    "IntPolynomial", "cyclotomic_poly", "euler_phi", "factor", "mobius",
    "ramanujan_sum", "WittElement", "phi", "ZERO", "ONE", "basis_mul", "mul",
    "frobenius", "verschiebung", "trace", "__version__",
]
