"""Shared, lazily computed state for one verification run over a tower."""
from functools import cached_property
from typing import Any, Dict, List, Tuple

from gext_lab.autgroup.automorphism import generators
from gext_lab.autgroup.group import AutGroup, Subgroup, automorphisms, enumerate_subgroups
from gext_lab.autgroup.subfield import SubfieldHandle, fixed_field
from gext_lab.config import RunConfig
from gext_lab.csalg.skew import SkewGroupAlgebra, skew_group_algebra, subalgebras_containing_L
from gext_lab.csalg.subalgebra import SimplicityVerdict, Subalgebra, centralizer, is_simple
from gext_lab.exactcore.irreducible import IrreducibilityVerdict
from gext_lab.exactcore.poly import DensePoly
from gext_lab.exactcore.scalar import Field
from gext_lab.tower.irreducibility import irreducible_over
from gext_lab.tower.linalg import Matrix
from gext_lab.tower.tower import FieldTower


class GaloisContext:
    def __init__(self, tower: FieldTower, config: RunConfig) -> None:
        self.tower = tower
        self.config = config
        self._centralizers: Dict[Tuple, Subalgebra] = {}
        self._gamma_groups: Dict[int, AutGroup] = {}

    @property
    def n(self) -> int:
        return self.tower.degree

    @property
    def K(self) -> Field:
        return self.tower.K

    @cached_property
    def group(self) -> AutGroup:
        return automorphisms(self.tower, self.config)

    @cached_property
    def galois(self) -> bool:
        return self.group.order == self.n

    @cached_property
    def subgroups(self) -> List[Subgroup]:
        return enumerate_subgroups(self.group, self.config.subgroup_cap)

    @cached_property
    def subfields(self) -> List[SubfieldHandle]:
        """L^H for every H, in subgroup order: first L itself, last L^G."""
        return [fixed_field(self.group, H, self.config) for H in self.subgroups]

    @cached_property
    def skew(self) -> SkewGroupAlgebra:
        return skew_group_algebra(self.group)

    @cached_property
    def crossed(self) -> List[SkewGroupAlgebra]:
        return [skew for _, skew in subalgebras_containing_L(self.group, self.subgroups)]

    @cached_property
    def field_image(self) -> Subalgebra:
        return Subalgebra(self.K, self.n, [self.tower.left_mul_matrix(b) for b in self.tower.basis()], "L")

    @cached_property
    def generator_matrices(self) -> List[Matrix]:
        return [self.tower.left_mul_matrix(g) for g in generators(self.tower)]

    def image(self, index: int) -> Subalgebra:
        """Image in E of the subfield fixed by subgroup ``index``."""
        return Subalgebra(self.K, self.n, self.subfields[index].matrices(), f"L^H for H=#{index}")

    def centralizer(self, algebra: Subalgebra) -> Subalgebra:
        key = algebra.key()
        if key not in self._centralizers:
            self._centralizers[key] = centralizer(
                self.K, self.n, algebra.basis, f"C_E({algebra.provenance})"
            )
        return self._centralizers[key]

    def irreducible(self, f: DensePoly) -> IrreducibilityVerdict:
        """Irreducibility over K, whatever K is."""
        return irreducible_over(self.tower.levels[: self.tower.ground], self.tower.base, f)

    def simplicity(self, algebra: Subalgebra) -> SimplicityVerdict:
        return is_simple(algebra, self.config.mc_trials, self.config.random_seed, self.irreducible)

    def gamma_group(self, index: int) -> AutGroup:
        """Aut_K of the subfield fixed by subgroup ``index``, as its own tower."""
        if index not in self._gamma_groups:
            handle = self.subfields[index]
            self._gamma_groups[index] = automorphisms(self.tower.over_ground("mu", handle.minpoly), self.config)
        return self._gamma_groups[index]

    def describe_subfield(self, index: int) -> Dict[str, Any]:
        handle = self.subfields[index]
        return {"subgroup_index": index, "degree": handle.degree, "minpoly": handle.minpoly.render()}
