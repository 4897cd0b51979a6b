"""Fixed fields L^H and restriction of automorphisms to G-stable subfields."""
import itertools
from dataclasses import dataclass
from typing import Any, Iterator, List, Sequence, Tuple

from she_logging import logger

from gext_lab.autgroup.group import AutGroup, Subgroup, automorphisms
from gext_lab.config import RunConfig
from gext_lab.exactcore.poly import DensePoly
from gext_lab.helpers.errors import GextError, NotGStable, PrimitiveElementNotFound
from gext_lab.tower.linalg import EchelonSpace, Matrix, kernel, solve
from gext_lab.tower.tower import FieldTower

SMALL_COEFFICIENTS = (0, 1, -1, 2, -2, 3, -3)


@dataclass
class SubfieldHandle:
    tower: FieldTower
    space: EchelonSpace
    primitive: Any
    minpoly: DensePoly

    @property
    def degree(self) -> int:
        return self.space.dim

    def basis(self) -> List[Any]:
        return [self.tower.from_k_vector(row) for row in self.space.rows()]

    def contains(self, x: Any) -> bool:
        return self.space.contains(self.tower.to_k_vector(x))

    def issubset(self, other: "SubfieldHandle") -> bool:
        return self.space.issubset(other.space)

    def matrices(self) -> List[Matrix]:
        """Images in E(L/K) of the K-basis of this subfield."""
        return [self.tower.left_mul_matrix(b) for b in self.basis()]

    def __eq__(self, other: object) -> bool:
        return isinstance(other, SubfieldHandle) and self.space == other.space

    def __hash__(self) -> int:
        return hash(self.space)


def fixed_subspace(group: AutGroup, elements: Sequence[int]) -> EchelonSpace:
    tower = group.tower
    n = tower.degree
    K = tower.K
    identity = Matrix.identity(K, n)
    rows: List[Sequence[Any]] = []
    for h in elements:
        if h == 0:
            continue
        rows.extend((group[h].matrix - identity).rows)
    return EchelonSpace(K, n, kernel(K, rows, n))


def subfield_from_space(tower: FieldTower, space: EchelonSpace, budget: int) -> SubfieldHandle:
    """Check closure and pick a primitive element for a subspace of L."""
    if not space.contains(tower.to_k_vector(1)):
        raise GextError("fixed subspace does not contain 1")
    basis = [tower.from_k_vector(row) for row in space.rows()]
    for i, a in enumerate(basis):
        for b in basis[i:]:
            if not space.contains(tower.to_k_vector(a * b)):
                raise GextError("fixed subspace is not closed under multiplication")
    for tried, candidate in enumerate(_primitive_candidates(tower, basis)):
        if tried >= budget:
            break
        minpoly = tower.minpoly_of_element(candidate)
        if minpoly.degree == space.dim:
            return SubfieldHandle(tower, space, candidate, minpoly)
    raise PrimitiveElementNotFound(
        f"no primitive element for a subfield of degree {space.dim} within {budget} candidates"
    )


def _primitive_candidates(tower: FieldTower, basis: Sequence[Any]) -> Iterator[Any]:
    yield from basis
    K = tower.K
    if K.is_finite:
        for combo in itertools.product(list(K.elements()), repeat=len(basis)):
            if any(combo):
                yield _combine(tower, combo, basis)
        return
    for bound in range(1, 4):
        allowed = [c for c in SMALL_COEFFICIENTS if abs(c) <= bound]
        for combo in itertools.product(allowed, repeat=len(basis)):
            if max(abs(c) for c in combo) == bound:
                yield _combine(tower, combo, basis)


def _combine(tower: FieldTower, coefficients: Sequence[Any], basis: Sequence[Any]) -> Any:
    acc = tower.lift(0)
    for c, b in zip(coefficients, basis):
        if c:
            acc = acc + b * c
    return acc


def fixed_field(group: AutGroup, subgroup: Subgroup, config: RunConfig) -> SubfieldHandle:
    space = fixed_subspace(group, subgroup.elements)
    handle = subfield_from_space(group.tower, space, config.primitive_budget)
    logger.debug("Fixed field of a subgroup of order %d has degree %d", subgroup.order, handle.degree)
    return handle


def fixing_subgroup(group: AutGroup, subfield: SubfieldHandle) -> Tuple[int, ...]:
    """G^M: the automorphisms fixing every element of M."""
    rows = subfield.space.rows()
    return tuple(
        g for g in range(group.order) if all(group[g].matrix.apply(r) == tuple(r) for r in rows)
    )


def is_g_stable(group: AutGroup, subfield: SubfieldHandle) -> bool:
    return all(
        subfield.space.contains(sigma.matrix.apply(row))
        for sigma in group.elements
        for row in subfield.space.rows()
    )


@dataclass
class RestrictionResult:
    gamma_tower: FieldTower
    gamma_group: AutGroup
    table: List[int]
    kernel: Tuple[int, ...]
    kernel_matches: bool
    surjective: bool
    homomorphism: bool


def restriction_map(group: AutGroup, gamma: SubfieldHandle, config: RunConfig) -> RestrictionResult:
    tower = group.tower
    if not is_g_stable(group, gamma):
        raise NotGStable("subfield is not stable under every automorphism")
    gamma_tower = tower.over_ground("mu", gamma.minpoly)
    gamma_group = automorphisms(gamma_tower, config)
    K = tower.K
    powers = [tower.to_k_vector(gamma.primitive**i) for i in range(gamma.degree)]
    lookup = {sigma.images[0]: sigma.index for sigma in gamma_group.elements}
    table = []
    for sigma in group.elements:
        image = sigma.apply(gamma.primitive)
        coords = solve(K, powers, tower.to_k_vector(image))
        if coords is None:
            raise NotGStable("image of the primitive element left the subfield")
        element = gamma_tower.L.element(coords)
        target = lookup.get(element)
        if target is None:
            raise GextError("restricted automorphism is missing from the subfield's group")
        table.append(target)
    kernel_elements = tuple(g for g, t in enumerate(table) if t == 0)
    homomorphism = all(
        table[group.table[a][b]] == gamma_group.table[table[a]][table[b]]
        for a in range(group.order)
        for b in range(group.order)
    )
    return RestrictionResult(
        gamma_tower=gamma_tower,
        gamma_group=gamma_group,
        table=table,
        kernel=kernel_elements,
        kernel_matches=kernel_elements == fixing_subgroup(group, gamma),
        surjective=len(set(table)) == gamma_group.order,
        homomorphism=homomorphism,
    )
