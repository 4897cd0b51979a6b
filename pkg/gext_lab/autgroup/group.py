"""The automorphism group G = Aut_K(L) as a finite group with a Cayley table."""
import itertools
from dataclasses import dataclass
from typing import Any, Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from she_logging import logger

from gext_lab.autgroup.automorphism import (
    Automorphism,
    frobenius_automorphisms,
    generators,
    numeric_automorphisms,
)
from gext_lab.config import RunConfig
from gext_lab.helpers.errors import GextError, SubgroupCapExceeded
from gext_lab.tower.linalg import Matrix
from gext_lab.tower.tower import FieldTower

ASSOCIATIVITY_SAMPLE = 4096


class AutGroup:
    """Automorphisms with the identity first, the rest in a stable order."""

    def __init__(self, tower: FieldTower, elements: Iterable[Automorphism]) -> None:
        unique: Dict[Matrix, Automorphism] = {}
        for sigma in elements:
            unique.setdefault(sigma.matrix, sigma)
        identity = Matrix.identity(tower.K, tower.degree)
        if identity not in unique:
            raise GextError("automorphism list does not contain the identity")
        rest = sorted((s for m, s in unique.items() if m != identity), key=lambda s: s.key())
        self.tower = tower
        self.elements: List[Automorphism] = [unique[identity]] + rest
        for i, sigma in enumerate(self.elements):
            sigma.index = i
        lookup = {s.matrix: s.index for s in self.elements}
        self.table: List[List[int]] = []
        for a in self.elements:
            row = []
            for b in self.elements:
                product = lookup.get(a.matrix @ b.matrix)
                if product is None:
                    raise GextError("automorphisms are not closed under composition")
                row.append(product)
            self.table.append(row)
        self.inverses = [row.index(0) for row in self.table]
        self._check_axioms()

    @property
    def order(self) -> int:
        return len(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __getitem__(self, index: int) -> Automorphism:
        return self.elements[index]

    def multiply(self, a: int, b: int) -> int:
        return self.table[a][b]

    def _check_axioms(self) -> None:
        n = self.order
        everything = list(range(n))
        for i, row in enumerate(self.table):
            if sorted(row) != everything:
                raise GextError(f"row {i} of the Cayley table is not a permutation")
        if self.table[0] != everything:
            raise GextError("identity row of the Cayley table is wrong")
        triples: Iterable[Tuple[int, int, int]] = itertools.product(everything, repeat=3)
        if n**3 > ASSOCIATIVITY_SAMPLE:
            triples = itertools.islice(triples, 0, None, max(1, n**3 // ASSOCIATIVITY_SAMPLE))
        t = self.table
        for a, b, c in triples:
            if t[t[a][b]][c] != t[a][t[b][c]]:
                raise GextError(f"composition is not associative at ({a}, {b}, {c})")
        if n > self.tower.degree:
            raise GextError(f"|G| = {n} exceeds [L:K] = {self.tower.degree}")

    def conjugate(self, g: int, h: int) -> int:
        """g h g^-1."""
        return self.table[self.table[g][h]][self.inverses[g]]


def automorphisms(tower: FieldTower, config: RunConfig) -> AutGroup:
    if tower.degree == 1:
        group = AutGroup(tower, [Automorphism(tower, generators(tower))])
    elif tower.is_finite:
        group = AutGroup(tower, frobenius_automorphisms(tower))
    else:
        found, precision = numeric_automorphisms(tower, config)
        group = AutGroup(tower, found)
        tower.assumptions.append(
            f"automorphism candidates found numerically at {precision} bits, each certified exactly"
        )
    logger.info(
        "Automorphism group of order %d for [L:K] = %d",
        group.order,
        tower.degree,
        extra={"group_order": group.order, "tower_degree": tower.degree},
    )
    return group


@dataclass(frozen=True)
class Subgroup:
    elements: Tuple[int, ...]
    normal: bool

    @property
    def order(self) -> int:
        return len(self.elements)

    def __contains__(self, g: int) -> bool:
        return g in self.elements


def closure(group: AutGroup, generators: Iterable[int]) -> FrozenSet[int]:
    elements = {0}
    frontier = [0]
    gens = list(generators)
    while frontier:
        a = frontier.pop()
        for g in gens:
            b = group.table[a][g]
            if b not in elements:
                elements.add(b)
                frontier.append(b)
    return frozenset(elements)


def is_normal(group: AutGroup, elements: Iterable[int]) -> bool:
    members = set(elements)
    return all(group.conjugate(g, h) in members for g in range(group.order) for h in members)


def enumerate_subgroups(group: AutGroup, cap: int) -> List[Subgroup]:
    """Every subgroup, sorted by (order, elements)."""
    if group.order > cap:
        raise SubgroupCapExceeded(f"|G| = {group.order} exceeds the subgroup cap {cap}")
    found = {closure(group, [g]) for g in range(group.order)}
    frontier = set(found)
    cyclic = list(found)
    while frontier:
        fresh = set()
        for a in frontier:
            for c in cyclic:
                joined = closure(group, a | c)
                if joined not in found:
                    fresh.add(joined)
        found |= fresh
        frontier = fresh
    subgroups = [Subgroup(tuple(sorted(s)), is_normal(group, s)) for s in found]
    subgroups.sort(key=lambda h: (h.order, h.elements))
    logger.debug("Found %d subgroups", len(subgroups))
    return subgroups


def orbit(group: AutGroup, x: Any) -> List[Any]:
    out: List[Any] = []
    for sigma in group.elements:
        y = sigma.apply(x)
        if y not in out:
            out.append(y)
    return out


def subgroup_index(subgroups: Sequence[Subgroup], elements: Iterable[int]) -> Optional[int]:
    wanted = tuple(sorted(set(elements)))
    for i, h in enumerate(subgroups):
        if h.elements == wanted:
            return i
    return None
