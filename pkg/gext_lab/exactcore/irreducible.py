"""Irreducibility certificates for polynomials over Q and over finite fields.

Over a finite field the answer is always decisive.  Over Q a battery of
exact tests runs in order: rational roots, Eisenstein on small shifts,
degree sets of factorisations modulo good primes and finally sympy's
exact factorisation over Z[x], which always decides.
"""
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import gcd
from typing import FrozenSet, List, Optional, Sequence, Set, Tuple

import mpmath
from she_logging import logger
from sympy import primefactors
from sympy.polys.domains import ZZ
from sympy.polys.factortools import dup_factor_list, dup_irreducible_p

from gext_lab.exactcore.factor import factor_finite
from gext_lab.exactcore.poly import DensePoly, poly_gcd
from gext_lab.exactcore.reconstruct import rational_reconstruct
from gext_lab.exactcore.scalar import PrimeField, RationalField

CERTIFIED_IRREDUCIBLE = "certified-irreducible"
CERTIFIED_REDUCIBLE = "certified-reducible"
UNKNOWN = "unknown"

SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97)
EISENSTEIN_SHIFTS = (0, 1, -1, 2, -2, 3, -3)
GOOD_PRIME_COUNT = 12


@dataclass(frozen=True)
class IrreducibilityVerdict:
    status: str
    method: str
    witness: Optional[DensePoly] = None

    @property
    def irreducible(self) -> bool:
        return self.status == CERTIFIED_IRREDUCIBLE

    @property
    def reducible(self) -> bool:
        return self.status == CERTIFIED_REDUCIBLE


def _irreducible(method: str) -> IrreducibilityVerdict:
    return IrreducibilityVerdict(CERTIFIED_IRREDUCIBLE, method)


def _reducible(method: str, witness: Optional[DensePoly]) -> IrreducibilityVerdict:
    return IrreducibilityVerdict(CERTIFIED_REDUCIBLE, method, witness)


def poly_irreducible(f: DensePoly) -> IrreducibilityVerdict:
    if f.degree < 1:
        raise ValueError("irreducibility of a constant polynomial is undefined")
    if f.degree == 1:
        return _irreducible("degree one")
    if f.field.is_finite:
        return _finite_irreducible(f)
    if not isinstance(f.field, RationalField):
        raise ValueError(f"poly_irreducible works over Q and finite fields, not {f.field}")
    return _rational_irreducible(f)


def _finite_irreducible(f: DensePoly) -> IrreducibilityVerdict:
    factors = factor_finite(f)
    if len(factors) == 1 and factors[0][1] == 1 and factors[0][0].degree == f.degree:
        return _irreducible("finite-field factorisation")
    return _reducible("finite-field factorisation", factors[0][0])


def rabin_irreducible(f: DensePoly) -> IrreducibilityVerdict:
    """Rabin's test over any finite field of order q."""
    q = f.field.order
    if q is None:
        raise ValueError("Rabin's test needs a finite coefficient field")
    if f.degree < 1:
        raise ValueError("irreducibility of a constant polynomial is undefined")
    f = f.monic()
    n = f.degree
    if n == 1:
        return _irreducible("degree one")
    x = DensePoly.x(f.field)
    powers = [x % f]
    for _ in range(n):
        powers.append(powers[-1].pow_mod(q, f))
    for r in primefactors(n):
        common = poly_gcd(f, powers[n // r] - x)
        if common.degree > 0:
            return _reducible("Rabin test", common)
    if powers[n] != x % f:
        common = poly_gcd(f, f.derivative())
        witness = common if common.degree > 0 else None
        return _reducible("Rabin test", witness)
    return _irreducible("Rabin test")


def primitive_integer_coefficients(f: DensePoly) -> List[int]:
    """Scale a polynomial over Q to coprime integer coefficients, positive lead."""
    denominators = [c.denominator for c in f.coeffs]
    lcm = reduce(lambda a, b: a * b // gcd(a, b), denominators, 1)
    ints = [int(c * lcm) for c in f.coeffs]
    content = reduce(gcd, ints, 0)
    ints = [c // content for c in ints]
    if ints[-1] < 0:
        ints = [-c for c in ints]
    return ints


def _int_poly(coeffs: Sequence[int]) -> DensePoly:
    return DensePoly(RationalField(), [Fraction(c) for c in coeffs])


def _rational_irreducible(f: DensePoly) -> IrreducibilityVerdict:
    ints = primitive_integer_coefficients(f)
    n = len(ints) - 1
    g = _int_poly(ints)

    root_stage_decisive, root = _rational_root(ints)
    if root is not None:
        witness = DensePoly(g.field, [-root, Fraction(1)])
        return _reducible("rational root", witness)
    if root_stage_decisive and n <= 3:
        return _irreducible("no rational root")

    for shift in EISENSTEIN_SHIFTS:
        shifted = primitive_integer_coefficients(g.compose_shift(Fraction(shift)))
        p = _eisenstein_prime(shifted)
        if p is not None:
            logger.debug("Eisenstein criterion at p=%d after shift %d", p, shift)
            return _irreducible("Eisenstein criterion")

    degrees = _mod_p_degree_set(ints)
    candidates = [d for d in degrees if 1 <= d <= n // 2]
    if root_stage_decisive:
        candidates = [d for d in candidates if d >= 2]
    if not candidates:
        return _irreducible("degree sets modulo good primes")
    return _integer_factorisation(ints)


def _integer_factorisation(ints: Sequence[int]) -> IrreducibilityVerdict:
    """Decide over Z[x] with sympy; Gauss's lemma carries the answer to Q[x]."""
    rep = [ZZ(c) for c in reversed(ints)]
    if dup_irreducible_p(rep, ZZ):
        return _irreducible("integer factorisation")
    _, factors = dup_factor_list(rep, ZZ)
    smallest = min((factor for factor, _ in factors), key=len)
    return _reducible("integer factorisation", _int_poly([int(c) for c in reversed(smallest)]))


def _rational_root(ints: Sequence[int]) -> Tuple[bool, Optional[Fraction]]:
    """Look for a rational root near each numeric root; the bool says whether
    the search covered every root."""
    poly = _int_poly(ints)
    if ints[0] == 0:
        return True, Fraction(0)
    lead = abs(ints[-1])
    try:
        with mpmath.workprec(256):
            roots, err = mpmath.polyroots(
                list(reversed(ints)), maxsteps=200, extraprec=256, error=True
            )
    except mpmath.mp.NoConvergence:
        return False, None
    if err > mpmath.mpf(2) ** -64:
        return False, None
    for z in roots:
        if abs(mpmath.im(z)) > mpmath.mpf(2) ** -64:
            continue
        r = rational_reconstruct(mpmath.re(z), lead)
        if r is not None and not poly(r):
            return True, r
    return True, None


def _eisenstein_prime(ints: Sequence[int]) -> Optional[int]:
    for p in SMALL_PRIMES:
        if ints[-1] % p == 0:
            continue
        if all(c % p == 0 for c in ints[:-1]) and ints[0] % (p * p) != 0:
            return p
    return None


def _mod_p_degree_set(ints: Sequence[int]) -> FrozenSet[int]:
    """Degrees a rational factor could have, from factorisations mod good primes."""
    n = len(ints) - 1
    allowed: Set[int] = set(range(n + 1))
    good = 0
    for p in SMALL_PRIMES:
        if ints[-1] % p == 0:
            continue
        field = PrimeField(p)
        fp = DensePoly(field, ints)
        if poly_gcd(fp, fp.derivative()).degree > 0:
            continue
        factor_degrees = [g.degree for g, _ in factor_finite(fp)]
        sums = {0}
        for d in factor_degrees:
            sums |= {s + d for s in sums}
        allowed &= sums
        good += 1
        if allowed <= {0, n} or good >= GOOD_PRIME_COUNT:
            break
    return frozenset(allowed)
