"""Skew group algebras L⋊H = ⊕_{h∈H} L·h realised inside E(L/K)."""
from dataclasses import dataclass
from typing import List, Sequence, Tuple

from she_logging import logger

from gext_lab.autgroup.automorphism import generators
from gext_lab.autgroup.group import AutGroup, Subgroup
from gext_lab.csalg.subalgebra import Subalgebra
from gext_lab.helpers.errors import TheoremViolation
from gext_lab.tower.linalg import EchelonSpace


@dataclass
class SkewGroupAlgebra:
    group: AutGroup
    subgroup: Tuple[int, ...]
    algebra: Subalgebra
    labels: List[Tuple[int, int]]

    @property
    def dim(self) -> int:
        return self.algebra.dim


def crossed_product(group: AutGroup, elements: Sequence[int], provenance: str = "") -> SkewGroupAlgebra:
    """span{M(b_i)·S_h : b_i in the K-basis of L, h in ``elements``}."""
    tower = group.tower
    K = tower.K
    n = tower.degree
    mult = [tower.left_mul_matrix(b) for b in tower.basis()]
    space = EchelonSpace(K, n * n)
    labels = []
    matrices = []
    for h in elements:
        S = group[h].matrix
        for i, M in enumerate(mult):
            product = M @ S
            if not space.add(product.flatten()):
                raise TheoremViolation(
                    "skew-group-direct-sum",
                    f"the sum of the components L·g is not direct (basis {i}, element {h})",
                    witness={"basis_index": i, "group_element": h},
                )
            labels.append((i, h))
            matrices.append(product)
    gens = [tower.left_mul_matrix(g) for g in generators(tower)] + [group[h].matrix for h in elements]
    algebra = Subalgebra(K, n, matrices, provenance or "L⋊H", generators=gens)
    return SkewGroupAlgebra(group, tuple(elements), algebra, labels)


def skew_group_algebra(group: AutGroup) -> SkewGroupAlgebra:
    tower = group.tower
    skew = crossed_product(group, range(group.order), "L⋊G")
    expected = tower.degree * group.order
    if skew.dim != expected:
        raise TheoremViolation(
            "skew-group-direct-sum",
            f"dim L⋊G = {skew.dim}, expected [L:K]·|G| = {expected}",
            witness={"dimension": skew.dim, "expected": expected},
        )
    check_multiplication(group)
    logger.debug("Skew group algebra has dimension %d", skew.dim)
    return skew


def check_multiplication(group: AutGroup) -> None:
    """(λ·g)(μ·h) = λ·g(μ)·gh on generators λ, μ of L and all g, h."""
    tower = group.tower
    elements = [tower.lift(1)] + generators(tower)
    for lam in elements:
        M_lam = tower.left_mul_matrix(lam)
        for mu in elements:
            M_mu = tower.left_mul_matrix(mu)
            for g in range(group.order):
                S_g = group[g].matrix
                M_gmu = tower.left_mul_matrix(group[g].apply(mu))
                for h in range(group.order):
                    left = (M_lam @ S_g) @ (M_mu @ group[h].matrix)
                    right = (M_lam @ M_gmu) @ group[group.table[g][h]].matrix
                    if left != right:
                        raise TheoremViolation(
                            "skew-group-multiplication",
                            "multiplication rule of L⋊G fails",
                            witness={"g": g, "h": h},
                        )


def subalgebras_containing_L(group: AutGroup, lattice: Sequence[Subgroup]) -> List[Tuple[Subgroup, SkewGroupAlgebra]]:
    return [(H, crossed_product(group, H.elements, f"L⋊H for H=#{i}")) for i, H in enumerate(lattice)]


def is_g_stable_algebra(group: AutGroup, skew: SkewGroupAlgebra) -> bool:
    """S_g·A·S_g^{-1} ⊆ A for every g, tested on algebra generators of A."""
    tower = group.tower
    gens = [tower.left_mul_matrix(g) for g in generators(tower)] + [group[h].matrix for h in skew.subgroup]
    for g in range(group.order):
        S = group[g].matrix
        S_inv = group[group.inverses[g]].matrix
        for x in gens:
            if not skew.algebra.contains(S @ x @ S_inv):
                return False
    return True


def g_stable_filter(
    group: AutGroup, pairs: Sequence[Tuple[Subgroup, SkewGroupAlgebra]]
) -> List[Tuple[Subgroup, SkewGroupAlgebra]]:
    out = []
    for H, skew in pairs:
        stable = is_g_stable_algebra(group, skew)
        if stable != H.normal:
            raise TheoremViolation(
                "stable-skew-subalgebras",
                "conjugation stability disagrees with normality",
                witness={"subgroup": list(H.elements), "stable": stable, "normal": H.normal},
            )
        if stable:
            out.append((H, skew))
    return out


def group_part(group: AutGroup, algebra: Subalgebra) -> Tuple[int, ...]:
    """A ∩ G: the automorphisms whose matrices lie in the algebra."""
    return tuple(g for g in range(group.order) if algebra.contains(group[g].matrix))
