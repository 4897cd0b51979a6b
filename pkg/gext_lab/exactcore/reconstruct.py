from fractions import Fraction
from typing import Optional, Union

import mpmath

RealLike = Union[str, int, Fraction, "mpmath.mpf"]


def exact_value(x: RealLike) -> Fraction:
    """The exact rational denoted by a decimal string, an integer or an mpf."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    if isinstance(x, mpmath.mpc):
        x = x.real
    value = mpmath.mpf(x)
    if not mpmath.isfinite(value):
        raise ValueError(f"cannot rationalise {value}")
    man, exp = value.man_exp
    man, exp = int(man), int(exp)
    if exp >= 0:
        return Fraction(man * 2**exp)
    return Fraction(man, 2 ** (-exp))


def rational_reconstruct(x: RealLike, denominator_bound: int) -> Optional[Fraction]:
    """Best continued-fraction convergent of x with denominator at most the bound.

    The convergent p/q is accepted only when |x - p/q| < 1/(2 q^2), the
    classical guarantee that a rational this close to x is one of its
    convergents.  Returns None when no convergent qualifies.
    """
    if denominator_bound < 1:
        raise ValueError("denominator bound must be positive")
    target = exact_value(x)
    h_prev, h = 0, 1
    k_prev, k = 1, 0
    best: Optional[Fraction] = None
    rest = target
    while True:
        a = int(rest.numerator) // int(rest.denominator)
        h_prev, h = h, a * h + h_prev
        k_prev, k = k, a * k + k_prev
        if k > denominator_bound:
            break
        best = Fraction(h, k)
        frac = rest - a
        if not frac:
            break
        rest = 1 / frac
    if best is None:
        return None
    if abs(target - best) * 2 * best.denominator**2 >= 1:
        return None
    return best
