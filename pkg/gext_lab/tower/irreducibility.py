"""Irreducibility of a defining polynomial over the field directly below it."""
import itertools
from typing import Iterator, List, Sequence

from she_logging import logger

from gext_lab.exactcore.irreducible import (
    CERTIFIED_IRREDUCIBLE,
    UNKNOWN,
    IrreducibilityVerdict,
    poly_irreducible,
    rabin_irreducible,
)
from gext_lab.exactcore.poly import DensePoly
from gext_lab.exactcore.scalar import Field, RationalField
from gext_lab.tower.field import ExtensionField
from gext_lab.tower.tower import FieldTower, Level

SMALL_COEFFICIENTS = (0, 1, -1, 2, -2, 3, -3)
CANDIDATE_BUDGET = 64


def irreducible_over(lower_levels: Sequence[Level], base: Field, g: DensePoly) -> IrreducibilityVerdict:
    """Decide whether g is irreducible over the top field of ``lower_levels``."""
    below = lower_levels[-1].field if lower_levels else base
    if g.field != below:
        raise ValueError("polynomial is not over the field below the new level")
    if g.degree == 1:
        return IrreducibilityVerdict(CERTIFIED_IRREDUCIBLE, "degree one")
    if not lower_levels:
        return poly_irreducible(g)
    if below.is_finite:
        return rabin_irreducible(g)
    return _number_field_irreducible(list(lower_levels), base, g)


def _number_field_irreducible(lower: List[Level], base: Field, g: DensePoly) -> IrreducibilityVerdict:
    """g is irreducible over the number field F iff F[t]/(g) is a field; that
    holds as soon as some element has an irreducible Q-minimal polynomial of
    full degree."""
    assert isinstance(base, RationalField)
    trial = Level("_t", ExtensionField(lower[-1].field, "_t", g))
    tower = FieldTower(base, lower + [trial], ground=0)
    gens = [tower.generator(i) for i in range(len(tower.levels))]
    full = tower.degree
    for tried, coefficients in enumerate(_candidate_coefficients(len(gens) - 1)):
        if tried >= CANDIDATE_BUDGET:
            break
        element = gens[-1]
        for c, gen in zip(coefficients, gens[:-1]):
            if c:
                element = element + gen * c
        minpoly = tower.minpoly_of_element(element)
        verdict = poly_irreducible(minpoly)
        if verdict.reducible:
            logger.debug("Extension algebra is not a field: element minpoly splits")
            return IrreducibilityVerdict(verdict.status, "primitive element over Q", verdict.witness)
        if minpoly.degree == full and verdict.irreducible:
            return IrreducibilityVerdict(CERTIFIED_IRREDUCIBLE, "primitive element over Q")
    return IrreducibilityVerdict(UNKNOWN, "no primitive element found")


def _candidate_coefficients(count: int) -> Iterator[Sequence[int]]:
    yield (0,) * count
    for bound in range(1, 4):
        allowed = [c for c in SMALL_COEFFICIENTS if abs(c) <= bound]
        for combo in itertools.product(allowed, repeat=count):
            if combo and max(abs(c) for c in combo) == bound:
                yield combo
