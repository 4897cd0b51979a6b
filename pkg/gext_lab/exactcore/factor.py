"""Factorisation over finite fields (square-free, distinct-degree, equal-degree)."""
import random
from typing import List, Tuple

from she_logging import logger

from gext_lab.exactcore.poly import DensePoly, poly_gcd, squarefree_decomposition

FACTOR_SEED = 0x5EED


def _require_finite(f: DensePoly) -> int:
    q = f.field.order
    if q is None:
        raise ValueError(f"cannot factor over infinite field {f.field}")
    return q


def distinct_degree(f: DensePoly) -> List[Tuple[DensePoly, int]]:
    """Split a monic square-free f into products of equal-degree irreducibles."""
    q = _require_finite(f)
    out: List[Tuple[DensePoly, int]] = []
    x = DensePoly.x(f.field)
    rest = f
    h = x % rest
    i = 1
    while rest.degree >= 2 * i:
        h = h.pow_mod(q, rest)
        g = poly_gcd(rest, h - x)
        if g.degree > 0:
            out.append((g, i))
            rest = rest // g
            h = h % rest
        i += 1
    if rest.degree > 0:
        out.append((rest.monic(), rest.degree))
    return out


def equal_degree(f: DensePoly, d: int, rng: random.Random) -> List[DensePoly]:
    """Cantor-Zassenhaus: split f, a product of irreducibles of degree d."""
    q = _require_finite(f)
    field = f.field
    count = f.degree // d
    if count == 1:
        return [f.monic()]
    factors = [f.monic()]
    p = field.characteristic
    while len(factors) < count:
        h = DensePoly(field, [field.random_element(rng) for _ in range(f.degree)])
        if h.degree <= 0:
            continue
        if p == 2:
            extension_bits = (q.bit_length() - 1) * d
            g = h % f
            term = g
            for _ in range(extension_bits - 1):
                term = (term * term) % f
                g = g + term
        else:
            g = h.pow_mod((q**d - 1) // 2, f) - field.one
        refined: List[DensePoly] = []
        for u in factors:
            if u.degree == d:
                refined.append(u)
                continue
            common = poly_gcd(g % u, u)
            if 0 < common.degree < u.degree:
                refined.extend([common, (u // common).monic()])
            else:
                refined.append(u)
        factors = refined
    return factors


def factor_finite(f: DensePoly) -> List[Tuple[DensePoly, int]]:
    """Monic irreducible factors of f with multiplicities, in canonical order."""
    _require_finite(f)
    if f.degree <= 0:
        return []
    rng = random.Random(FACTOR_SEED)
    out: List[Tuple[DensePoly, int]] = []
    for part, multiplicity in squarefree_decomposition(f):
        for chunk, d in distinct_degree(part):
            for factor in equal_degree(chunk, d, rng):
                out.append((factor, multiplicity))
    out.sort(key=lambda fm: (fm[0].sort_key(), fm[1]))
    logger.debug("Factored degree %d polynomial into %d factors", f.degree, len(out))
    return out
