"""Isomorphism testing for small groups given by Cayley tables."""
from typing import Dict, List, Optional, Sequence

Table = Sequence[Sequence[int]]


def element_orders(table: Table) -> List[int]:
    out = []
    for g in range(len(table)):
        k, x = 1, g
        while x != 0:
            x = table[x][g]
            k += 1
        out.append(k)
    return out


def _closure(table: Table, gens: Sequence[int]) -> set:
    seen = {0}
    frontier = [0]
    while frontier:
        a = frontier.pop()
        for g in gens:
            b = table[a][g]
            if b not in seen:
                seen.add(b)
                frontier.append(b)
    return seen


def generating_set(table: Table) -> List[int]:
    """Greedy generators, highest order first."""
    orders = element_orders(table)
    gens: List[int] = []
    span = {0}
    for g in sorted(range(len(table)), key=lambda x: (-orders[x], x)):
        if len(span) == len(table):
            break
        if g not in span:
            gens.append(g)
            span = _closure(table, gens)
    return gens


def _extend(table_a: Table, table_b: Table, gens: Sequence[int], images: Sequence[int]) -> Optional[List[int]]:
    mapping: Dict[int, int] = {0: 0}
    frontier = [0]
    while frontier:
        a = frontier.pop()
        for g, img in zip(gens, images):
            x = table_a[a][g]
            y = table_b[mapping[a]][img]
            if x in mapping:
                if mapping[x] != y:
                    return None
            else:
                mapping[x] = y
                frontier.append(x)
    if len(mapping) != len(table_a) or len(set(mapping.values())) != len(table_a):
        return None
    result = [mapping[i] for i in range(len(table_a))]
    size = len(table_a)
    for x in range(size):
        for y in range(size):
            if result[table_a[x][y]] != table_b[result[x]][result[y]]:
                return None
    return result


def find_isomorphism(table_a: Table, table_b: Table) -> Optional[List[int]]:
    """A bijection φ with φ(xy) = φ(x)φ(y), or None."""
    if len(table_a) != len(table_b):
        return None
    orders_a = element_orders(table_a)
    orders_b = element_orders(table_b)
    if sorted(orders_a) != sorted(orders_b):
        return None
    gens = generating_set(table_a)

    def search(index: int, chosen: List[int]) -> Optional[List[int]]:
        if index == len(gens):
            return _extend(table_a, table_b, gens, chosen)
        for candidate in range(len(table_b)):
            if orders_b[candidate] == orders_a[gens[index]]:
                found = search(index + 1, chosen + [candidate])
                if found is not None:
                    return found
        return None

    return search(0, [])


def quotient_table(table: Table, normal: Sequence[int]) -> List[List[int]]:
    """Cayley table of G/N, cosets ordered by their least element."""
    members = set(normal)
    coset_of: Dict[int, int] = {}
    cosets: List[frozenset] = []
    for g in range(len(table)):
        if g in coset_of:
            continue
        coset = frozenset(table[g][n] for n in members)
        for x in coset:
            coset_of[x] = len(cosets)
        cosets.append(coset)
    reps = [min(c) for c in cosets]
    return [[coset_of[table[a][b]] for b in reps] for a in reps]


def subtable(table: Table, elements: Sequence[int]) -> List[List[int]]:
    """Cayley table of a subgroup, re-indexed in the given order (identity first)."""
    index = {g: i for i, g in enumerate(elements)}
    return [[index[table[a][b]] for b in elements] for a in elements]
