"""Towers of simple extensions K = F_g ⊆ ... ⊆ F_r = L over a base field.

A tower over base field F_0 is a list of levels; level i adjoins a root of
its monic defining polynomial over the field below.  Everything at or below
the ground level forms the coefficient field K, and L is viewed as a K-vector
space through the product power basis of the generators above ground, the
lowest level's exponent varying fastest.
"""
import itertools
from dataclasses import dataclass, field as dataclass_field
from typing import Any, Dict, List, Optional, Sequence, Tuple

from gext_lab.exactcore.irreducible import IrreducibilityVerdict
from gext_lab.exactcore.poly import DensePoly
from gext_lab.exactcore.scalar import Field, PrimeField, RationalField
from gext_lab.tower.field import ExtElt, ExtensionField
from gext_lab.tower.linalg import EchelonSpace, Matrix, solve


@dataclass(frozen=True)
class Level:
    name: str
    field: ExtensionField
    verdict: Optional[IrreducibilityVerdict] = None

    @property
    def minpoly(self) -> DensePoly:
        return self.field.modulus

    @property
    def degree(self) -> int:
        return self.field.degree


@dataclass
class FieldTower:
    base: Field
    levels: List[Level]
    ground: int = 0
    assumptions: List[str] = dataclass_field(default_factory=list)

    def __post_init__(self) -> None:
        if not 0 <= self.ground <= len(self.levels):
            raise ValueError(f"ground index {self.ground} outside the tower")
        self.fields: List[Field] = [self.base] + [lvl.field for lvl in self.levels]
        self.exponents: List[Tuple[int, ...]] = [
            tuple(reversed(combo))
            for combo in itertools.product(
                *[range(lvl.degree) for lvl in reversed(self.levels[self.ground :])]
            )
        ]
        self._basis: Optional[List[Any]] = None

    @property
    def K(self) -> Field:
        return self.fields[self.ground]

    @property
    def L(self) -> Field:
        return self.fields[-1]

    @property
    def degree(self) -> int:
        n = 1
        for lvl in self.levels[self.ground :]:
            n *= lvl.degree
        return n

    @property
    def absolute_degree(self) -> int:
        return self.L.absolute_degree

    @property
    def characteristic(self) -> int:
        return self.base.characteristic

    @property
    def is_finite(self) -> bool:
        return self.base.is_finite

    @property
    def upper_levels(self) -> List[Level]:
        return self.levels[self.ground :]

    def describe(self) -> Dict[str, Any]:
        base = "Q" if isinstance(self.base, RationalField) else f"F{self.base.characteristic}"
        return {
            "base": base,
            "levels": [{"gen": lvl.name, "minpoly": lvl.minpoly.render()} for lvl in self.levels],
            "ground": self.levels[self.ground - 1].name if self.ground else None,
        }

    def lift(self, x: Any) -> Any:
        """Embed an element of any field in the tower (or an int) into L."""
        return self.L.coerce(x)

    def generator(self, level: int) -> Any:
        return self.lift(self.levels[level].field.gen)

    def basis(self) -> List[Any]:
        if self._basis is None:
            gens = [self.generator(self.ground + i) for i in range(len(self.upper_levels))]
            out = []
            for exps in self.exponents:
                b = self.lift(1)
                for g, e in zip(gens, exps):
                    if e:
                        b = b * g**e
                out.append(b)
            self._basis = out
        return self._basis

    def to_k_vector(self, x: Any) -> Tuple[Any, ...]:
        """Coordinates of x ∈ L in the K-basis of L."""

        def unroll(value: Any, index: int) -> List[Any]:
            if index == self.ground:
                return [value]
            out: List[Any] = []
            for c in value.coeffs:
                out.extend(unroll(c, index - 1))
            return out

        return tuple(unroll(self.lift(x), len(self.levels)))

    def from_k_vector(self, vector: Sequence[Any]) -> Any:
        if len(vector) != self.degree:
            raise ValueError(f"expected {self.degree} coordinates, got {len(vector)}")
        K = self.K

        def roll(chunk: Sequence[Any], index: int) -> Any:
            if index == self.ground:
                return K.coerce(chunk[0])
            level = self.fields[index]
            step = len(chunk) // level.degree
            return ExtElt(
                level,
                tuple(roll(chunk[i * step : (i + 1) * step], index - 1) for i in range(level.degree)),
            )

        return roll(list(vector), len(self.levels))

    def base_vector(self, x: Any) -> Tuple[Any, ...]:
        """Coordinates of x over the base field (all levels flattened)."""
        return self.L.flatten(self.lift(x))

    def from_base_vector(self, vector: Sequence[Any]) -> Any:
        if isinstance(self.L, ExtensionField):
            return self.L.unflatten(vector)
        return self.L.coerce(vector[0])

    def left_mul_matrix(self, x: Any) -> Matrix:
        x = self.lift(x)
        return Matrix.from_columns(self.K, [self.to_k_vector(x * b) for b in self.basis()])

    def minpoly_of_element(self, x: Any) -> DensePoly:
        """Minimal polynomial of x over K."""
        K = self.K
        x = self.lift(x)
        powers: List[Tuple[Any, ...]] = []
        space = EchelonSpace(K, self.degree)
        current = self.lift(1)
        while True:
            v = self.to_k_vector(current)
            if not space.add(v):
                coeffs = solve(K, powers, v)
                assert coeffs is not None
                return DensePoly(K, [-c for c in coeffs] + [K.one])
            powers.append(v)
            current = current * x

    def over_ground(self, name: str, minpoly: DensePoly) -> "FieldTower":
        """The tower K ⊆ K(μ) for μ with the given minimal polynomial over K."""
        if minpoly.field != self.K:
            raise ValueError("minimal polynomial must have coefficients in K")
        level = Level(name, ExtensionField(self.K, name, minpoly))
        return FieldTower(self.base, self.levels[: self.ground] + [level], ground=self.ground)

    @property
    def is_prime_base(self) -> bool:
        return isinstance(self.base, PrimeField)
