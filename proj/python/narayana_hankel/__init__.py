"""Exact Hankel determinants of convolution powers of Narayana polynomials.

Polynomials in t are lists of Fractions, lowest degree first. Rational
functions are (numerator, denominator) pairs of such lists with a monic
denominator.
"""

from fractions import Fraction

from . import _narayana
from ._narayana import MathError, PreconditionError, suite_names

__all__ = [
    "MathError",
    "PreconditionError",
    "cigler_det",
    "conv_power_seq",
    "family_entries",
    "hankel_dets",
    "hfrac",
    "main_det",
    "narayana_poly",
    "run_suite",
    "suite_names",
]


def _poly(coeffs):
    return [Fraction(c) for c in coeffs]


def _ratfunc(parts):
    num, den = parts
    return _poly(num), _poly(den)


def narayana_poly(n):
    return _poly(_narayana.narayana_poly(n))


def conv_power_seq(tau, count):
    return [_poly(p) for p in _narayana.conv_power_seq(tau, count)]


def family_entries(m, shift, count):
    return [_poly(p) for p in _narayana.family_entries(m, shift, count)]


def hankel_dets(m, shift, max_size):
    """Determinants of sizes 0..max_size by fraction-free elimination."""
    return [_ratfunc(d) for d in _narayana.hankel_dets(m, shift, max_size)]


def main_det(m, shift, size):
    """Closed-form determinant with the name of the branch that produced it."""
    value, label, ambiguous = _narayana.main_det(m, shift, size)
    return _ratfunc(value), label, ambiguous


def cigler_det(variant, size):
    return _ratfunc(_narayana.cigler_det(variant, size))


def hfrac(m, shift, order=40, max_terms=10):
    """Partial quotients (k, v, u) of the family series and the stop status."""
    quotients, status = _narayana.hfrac(m, shift, order, max_terms)
    return [(k, _ratfunc(v), [_ratfunc(c) for c in u]) for k, v, u in quotients], status


def run_suite(name, **bounds):
    return _narayana.run_suite(name, bounds)
