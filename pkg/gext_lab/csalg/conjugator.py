"""Noether-Skolem conjugators and bimodule homomorphism spaces."""
import itertools
import random
from typing import Any, Iterator, List, Sequence, Tuple

from she_logging import logger

from gext_lab.autgroup.automorphism import generators
from gext_lab.csalg.skew import SkewGroupAlgebra
from gext_lab.csalg.subalgebra import full_algebra_basis, intertwiners, span_closure
from gext_lab.exactcore.scalar import Field
from gext_lab.helpers.errors import ConjugatorNotFound, GextError
from gext_lab.tower.linalg import Matrix

SMALL_COEFFICIENTS = (0, 1, -1, 2, -2, 3, -3)


def _block_diagonal(field: Field, a: Matrix, b: Matrix) -> Matrix:
    n = a.size
    zero = field.zero
    rows = [list(row) + [zero] * n for row in a.rows] + [[zero] * n + list(row) for row in b.rows]
    return Matrix(field, rows)


def verify_isomorphism(field: Field, n: int, pairs: Sequence[Tuple[Matrix, Matrix]]) -> bool:
    """a_i ↦ b_i extends to an algebra isomorphism iff the algebra generated
    by the pairs (a_i, b_i) projects bijectively onto both factors."""
    left = span_closure(field, n, [a for a, _ in pairs])
    right = span_closure(field, n, [b for _, b in pairs])
    graph = span_closure(field, 2 * n, [_block_diagonal(field, a, b) for a, b in pairs])
    return graph.dim == left.dim == right.dim


def find_conjugator(
    field: Field,
    n: int,
    pairs: Sequence[Tuple[Matrix, Matrix]],
    budget: int,
    seed: int,
) -> Matrix:
    """A unit u with u·a·u^{-1} = b for every (a, b) in pairs."""
    if not verify_isomorphism(field, n, pairs):
        raise GextError("generator map does not extend to an algebra isomorphism")
    solutions = intertwiners(field, n, full_algebra_basis(field, n), [(a, b) for a, b in pairs])
    if not solutions:
        raise ConjugatorNotFound("the intertwiner space is zero")
    rng = random.Random(seed)
    for tried, u in enumerate(_candidates(field, n, solutions, budget, rng)):
        if not u.is_invertible():
            continue
        u_inv = u.inverse()
        if all(u @ a @ u_inv == b for a, b in pairs):
            logger.debug("Conjugator found after %d candidates", tried + 1)
            return u
        raise GextError("intertwiner does not conjugate the generators")
    raise ConjugatorNotFound(f"no invertible intertwiner among {2 * budget} candidates")


def _candidates(field: Field, n: int, basis: Sequence[Matrix], budget: int, rng: random.Random) -> Iterator[Matrix]:
    yield from itertools.islice(_deterministic(field, n, basis), budget)
    for _ in range(budget):
        yield _combine(field, n, [field.random_element(rng) for _ in basis], basis)


def _deterministic(field: Field, n: int, basis: Sequence[Matrix]) -> Iterator[Matrix]:
    yield from basis
    if field.is_finite:
        values = list(field.elements())
        for combo in itertools.product(values, repeat=len(basis)):
            if any(combo):
                yield _combine(field, n, combo, basis)
        return
    for bound in range(1, 4):
        allowed = [c for c in SMALL_COEFFICIENTS if abs(c) <= bound]
        for combo in itertools.product(allowed, repeat=len(basis)):
            if max(abs(c) for c in combo) == bound:
                yield _combine(field, n, [field.coerce(c) for c in combo], basis)


def _combine(field: Field, n: int, coefficients: Sequence[Any], basis: Sequence[Matrix]) -> Matrix:
    acc = Matrix.zeros(field, n)
    for c, m in zip(coefficients, basis):
        if c:
            acc = acc + m.scale(c)
    return acc


def bimodule_hom_check(skew: SkewGroupAlgebra, g: int, h: int) -> Tuple[int, int]:
    """Dimensions (over K, over L) of L-bimodule maps L·g → L·h.

    Lg is identified with L through l·g ↦ l, so a map F must commute with
    left multiplication and intertwine right multiplication, which acts on
    Lg through g(l) and on Lh through h(l).
    """
    group = skew.group
    tower = group.tower
    K = tower.K
    n = tower.degree
    pairs: List[Tuple[Matrix, Matrix]] = []
    for theta in generators(tower):
        M = tower.left_mul_matrix(theta)
        pairs.append((M, M))
        pairs.append(
            (tower.left_mul_matrix(group[g].apply(theta)), tower.left_mul_matrix(group[h].apply(theta)))
        )
    maps = intertwiners(K, n, full_algebra_basis(K, n), [(a, b) for a, b in pairs])
    dim_k = len(maps)
    return dim_k, dim_k // n
