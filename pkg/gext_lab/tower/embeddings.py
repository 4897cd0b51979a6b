"""Complex embeddings of towers over Q, level by level."""
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, List, Sequence, Tuple

import mpmath
from she_logging import logger

from gext_lab.exactcore.scalar import RationalField
from gext_lab.helpers.errors import PrecisionError
from gext_lab.tower.field import ExtElt, ExtensionField
from gext_lab.tower.tower import FieldTower


@dataclass(frozen=True)
class Embedding:
    """Images of every generator; ``path`` holds the root index chosen per level."""

    path: Tuple[int, ...]
    values: Tuple[Any, ...]

    def is_real(self, tolerance: Any) -> bool:
        return all(abs(mpmath.im(v)) < tolerance for v in self.values)


def evaluate(x: Any, values: Sequence[Any]) -> Any:
    """Numeric value of an element of the tower under generator images ``values``."""
    if isinstance(x, Fraction):
        return mpmath.mpf(x.numerator) / x.denominator
    if isinstance(x, int):
        return mpmath.mpf(x)
    assert isinstance(x, ExtElt)
    depth = _depth(x.field)
    theta = values[depth - 1]
    acc = mpmath.mpc(0)
    for c in reversed(x.coeffs):
        acc = acc * theta + evaluate(c, values)
    return acc


def _depth(field: Any) -> int:
    depth = 0
    while isinstance(field, ExtensionField):
        depth += 1
        field = field.below
    return depth


def separation_tolerance(precision: int) -> Any:
    return mpmath.mpf(2) ** (-(precision // 4))


def numeric_embeddings(tower: FieldTower, precision: int) -> List[Embedding]:
    """All embeddings of L into C, as complex generator images at ``precision`` bits."""
    if not isinstance(tower.base, RationalField):
        raise ValueError("numeric embeddings need a tower over Q")
    with mpmath.workprec(precision):
        tolerance = separation_tolerance(precision)
        partial: List[Embedding] = [Embedding((), ())]
        for level in tower.levels:
            extended: List[Embedding] = []
            for emb in partial:
                coeffs = [evaluate(c, emb.values) for c in level.minpoly.coeffs]
                roots = _roots(list(reversed(coeffs)), precision)
                for i, a in enumerate(roots):
                    for b in roots[i + 1 :]:
                        if abs(a - b) < tolerance:
                            raise PrecisionError(
                                f"roots of {level.name} not separated at {precision} bits"
                            )
                for index, root in enumerate(roots):
                    extended.append(Embedding(emb.path + (index,), emb.values + (root,)))
            partial = extended
    logger.debug("Computed %d embeddings at %d bits", len(partial), precision)
    return partial


def _roots(coeffs: List[Any], precision: int) -> List[Any]:
    if len(coeffs) == 2:
        roots = [-coeffs[1] / coeffs[0]]
    else:
        try:
            roots = mpmath.polyroots(
                coeffs, maxsteps=max(100, 20 * len(coeffs)), extraprec=2 * precision, cleanup=True
            )
        except mpmath.mp.NoConvergence as e:
            raise PrecisionError(f"root finding did not converge at {precision} bits") from e
    roots = [mpmath.mpc(r) for r in roots]
    return sorted(roots, key=lambda z: (float(mpmath.re(z)), float(mpmath.im(z))))
