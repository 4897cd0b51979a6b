"""K-algebra automorphisms of L, found exactly (finite fields) or by
numeric search followed by exact certification (towers over Q)."""
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence, Tuple

import mpmath
from she_logging import logger

from gext_lab.config import RunConfig
from gext_lab.exactcore.poly import DensePoly
from gext_lab.helpers.errors import PrecisionCapExceeded, PrecisionError
from gext_lab.tower.embeddings import Embedding, evaluate, numeric_embeddings
from gext_lab.tower.linalg import Matrix
from gext_lab.tower.tower import FieldTower


class Automorphism:
    """σ ∈ Aut_K(L), given by the images of the generators above the ground."""

    def __init__(self, tower: FieldTower, images: Sequence[Any]) -> None:
        if len(images) != len(tower.upper_levels):
            raise ValueError("one image per generator above the ground is required")
        self.tower = tower
        self.images: Tuple[Any, ...] = tuple(tower.lift(y) for y in images)
        self.matrix = Matrix.from_columns(
            tower.K, [tower.to_k_vector(self._on_exponents(e)) for e in tower.exponents]
        )
        self.index = -1

    def _on_exponents(self, exponents: Sequence[int]) -> Any:
        b = self.tower.lift(1)
        for y, e in zip(self.images, exponents):
            if e:
                b = b * y**e
        return b

    def apply(self, x: Any) -> Any:
        return self.tower.from_k_vector(self.matrix.apply(self.tower.to_k_vector(x)))

    def key(self) -> Tuple:
        return tuple(self.tower.L.sort_key(y) for y in self.images)

    def is_identity(self) -> bool:
        return all(y == g for y, g in zip(self.images, generators(self.tower)))

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Automorphism) and other.matrix == self.matrix

    def __hash__(self) -> int:
        return hash(self.matrix)

    def __repr__(self) -> str:
        return f"Automorphism(index={self.index}, images={self.images!r})"


def generators(tower: FieldTower) -> List[Any]:
    return [tower.generator(tower.ground + i) for i in range(len(tower.upper_levels))]


def substitute(tower: FieldTower, x: Any, field_index: int, images: Sequence[Any]) -> Any:
    """Image in L of x ∈ F_field_index under the partial map fixing K and
    sending each generator above the ground to ``images``."""
    if field_index <= tower.ground:
        return tower.lift(x)
    y = images[field_index - tower.ground - 1]
    acc = tower.lift(0)
    for c in reversed(x.coeffs):
        acc = acc * y + substitute(tower, c, field_index - 1, images)
    return acc


def certify(tower: FieldTower, images: Sequence[Any]) -> bool:
    """Exact check that generator images define a K-algebra automorphism."""
    images = [tower.lift(y) for y in images]
    for offset, level in enumerate(tower.upper_levels):
        field_index = tower.ground + offset + 1
        g = level.minpoly
        twisted = DensePoly(
            tower.L, [substitute(tower, c, field_index - 1, images) for c in g.coeffs]
        )
        if twisted(images[offset]):
            return False
    sigma = Automorphism(tower, images)
    if not sigma.matrix.is_invertible():
        return False
    basis = tower.basis()
    columns = [tower.from_k_vector(sigma.matrix.column(j)) for j in range(len(basis))]
    for i, a in enumerate(basis):
        for j in range(i, len(basis)):
            product = tower.to_k_vector(a * basis[j])
            if sigma.matrix.apply(product) != tower.to_k_vector(columns[i] * columns[j]):
                return False
    return True


def frobenius_automorphisms(tower: FieldTower) -> List[Automorphism]:
    """Powers x ↦ x^(q^j) of the |K|-power Frobenius, 0 ≤ j < [L:K]."""
    q = tower.K.order
    gens = generators(tower)
    out = []
    images = list(gens)
    for _ in range(tower.degree):
        if certify(tower, images):
            out.append(Automorphism(tower, images))
        images = [y**q for y in images]
    return out


def _relation_image(
    tower: FieldTower,
    target: Any,
    basis_values: Sequence[Any],
    bound: int,
    tolerance: Any,
) -> Optional[Any]:
    """Express a complex number as a rational combination of the reference
    images of the base-field basis of L, through an integer relation."""
    twist = mpmath.sqrt(3) + mpmath.pi
    vector = [mpmath.re(target) + twist * mpmath.im(target)] + [
        mpmath.re(v) + twist * mpmath.im(v) for v in basis_values
    ]
    if abs(vector[0]) < tolerance:
        if abs(target) < tolerance:
            return tower.lift(0)
        return None
    try:
        relation = mpmath.pslq(vector, tol=tolerance, maxcoeff=bound, maxsteps=20000)
    except ValueError:
        return None
    if relation is None or relation[0] == 0:
        return None
    coords = [Fraction(-int(a), int(relation[0])) for a in relation[1:]]
    if max(c.denominator for c in coords) > bound:
        return None
    approx = sum((mpmath.mpf(c.numerator) / c.denominator * v for c, v in zip(coords, basis_values)), mpmath.mpc(0))
    if abs(approx - target) > tolerance * (1 + abs(target)):
        return None
    return tower.from_base_vector(coords)


def numeric_automorphisms(tower: FieldTower, config: RunConfig) -> Tuple[List[Automorphism], int]:
    """Certified automorphisms of a tower over Q, with the precision used."""
    n = tower.degree
    precision = config.precision
    while True:
        try:
            found, near = _search_at(tower, config, precision)
        except PrecisionError as e:
            logger.debug("Escalating precision after %s", e)
            found, near = [], 1
        complete = found and n % len(found) == 0 and _closed(found)
        if complete and not near:
            return found, precision
        if precision >= config.precision_cap:
            raise PrecisionCapExceeded(
                f"{near} uncertified candidates remain at {precision} bits"
            )
        precision = min(2 * precision, config.precision_cap)
        logger.debug("Raising working precision to %d bits", precision)


def _closed(found: Sequence[Automorphism]) -> bool:
    keys = {a.matrix for a in found}
    return all((a.matrix @ b.matrix) in keys for a in found for b in found)


def _search_at(tower: FieldTower, config: RunConfig, precision: int) -> Tuple[List[Automorphism], int]:
    embeddings = numeric_embeddings(tower, precision)
    with mpmath.workprec(precision):
        tolerance = mpmath.mpf(2) ** (-(3 * precision // 4))
        reference = _reference(embeddings, tolerance)
        real_reference = reference.is_real(tolerance)
        basis_values = [evaluate(b, reference.values) for b in _base_basis(tower)]
        ground = tower.ground
        targets = [e for e in embeddings if e.path[:ground] == reference.path[:ground]]
        found: Dict[Matrix, Automorphism] = {}
        near = 0
        for target in targets:
            if real_reference and not target.is_real(tolerance):
                continue
            images = []
            for value in target.values[ground:]:
                y = _relation_image(tower, value, basis_values, config.max_denominator, tolerance)
                if y is None:
                    near += 1
                    logger.debug("No rational image for embedding path %s", target.path)
                    break
                images.append(y)
            else:
                if certify(tower, images):
                    sigma = Automorphism(tower, images)
                    found.setdefault(sigma.matrix, sigma)
                else:
                    near += 1
                    logger.debug("Rejected candidate for embedding path %s", target.path)
    return list(found.values()), near


def _reference(embeddings: Sequence[Embedding], tolerance: Any) -> Embedding:
    for e in embeddings:
        if e.is_real(tolerance):
            return e
    return embeddings[0]


def _base_basis(tower: FieldTower) -> List[Any]:
    """Product power basis of L over the base field, in flattened order."""
    whole = FieldTower(tower.base, tower.levels, ground=0)
    return whole.basis()
