"""Subalgebras of E = End_K(L) ≅ M_n(K): spans, centralizers, centers, simplicity.

A subalgebra is stored as the reduced echelon form of its basis matrices
flattened row-major, so two algebras are equal exactly when their echelon
rows are.
"""
import itertools
import random
from dataclasses import dataclass
from typing import Any, Callable, Iterable, List, Optional, Sequence, Tuple

from she_logging import logger

from gext_lab.exactcore.irreducible import (
    CERTIFIED_IRREDUCIBLE,
    IrreducibilityVerdict,
    poly_irreducible,
    rabin_irreducible,
)
from gext_lab.exactcore.poly import DensePoly
from gext_lab.exactcore.scalar import Field, RationalField
from gext_lab.helpers.errors import FieldMismatchError, GextError
from gext_lab.tower.linalg import EchelonSpace, Matrix, kernel, solve

IrreducibilityTest = Callable[[DensePoly], IrreducibilityVerdict]

DETERMINISTIC = "deterministic"
PROBABILISTIC = "probabilistic"


class Subalgebra:
    def __init__(
        self,
        field: Field,
        n: int,
        matrices: Iterable[Matrix],
        provenance: str = "",
        generators: Optional[Sequence[Matrix]] = None,
        verify: bool = True,
    ) -> None:
        self.field = field
        self.n = n
        self.provenance = provenance
        self.space = EchelonSpace(field, n * n)
        for m in matrices:
            if m.size != n:
                raise ValueError(f"{m.size}x{m.size} matrix in an algebra of {n}x{n} matrices")
            self.space.add(m.flatten())
        self._basis: Optional[List[Matrix]] = None
        if verify:
            self._verify(generators)

    def _verify(self, generators: Optional[Sequence[Matrix]]) -> None:
        if not self.contains(Matrix.identity(self.field, self.n)):
            raise GextError(f"{self.provenance or 'subalgebra'} does not contain the identity")
        basis = self.basis
        right = list(generators) if generators is not None else basis
        for g in right:
            if not self.contains(g):
                raise GextError(f"generator outside {self.provenance or 'subalgebra'}")
        for a in basis:
            for g in right:
                if not self.contains(a @ g):
                    raise GextError(f"{self.provenance or 'subalgebra'} is not closed under products")

    @property
    def dim(self) -> int:
        return self.space.dim

    @property
    def basis(self) -> List[Matrix]:
        if self._basis is None:
            self._basis = [Matrix.from_flat(self.field, self.n, row) for row in self.space.rows()]
        return self._basis

    def contains(self, m: Matrix) -> bool:
        return self.space.contains(m.flatten())

    def issubset(self, other: "Subalgebra") -> bool:
        return self.space.issubset(other.space)

    def key(self) -> Tuple:
        return self.space.key()

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Subalgebra) and self.n == other.n and self.space == other.space

    def __hash__(self) -> int:
        return hash(self.space)

    def __repr__(self) -> str:
        return f"Subalgebra(dim={self.dim}, provenance={self.provenance!r})"


def _check_sizes(field: Field, n: int, matrices: Sequence[Matrix]) -> None:
    for m in matrices:
        if m.size != n:
            raise ValueError(f"expected {n}x{n} matrices, got {m.size}x{m.size}")
        if m.field != field:
            raise FieldMismatchError(f"matrix over {m.field} in an algebra over {field}")


def span_closure(field: Field, n: int, gens: Sequence[Matrix], provenance: str = "") -> Subalgebra:
    """The least unital subalgebra containing ``gens``."""
    _check_sizes(field, n, gens)
    identity = Matrix.identity(field, n)
    space = EchelonSpace(field, n * n)
    queue = []
    for m in [identity] + list(gens):
        if space.add(m.flatten()):
            queue.append(m)
    while queue:
        a = queue.pop()
        for g in gens:
            product = a @ g
            if space.add(product.flatten()):
                queue.append(product)
    return Subalgebra(field, n, [Matrix.from_flat(field, n, row) for row in space.rows()], provenance, verify=False)


def intertwiners(field: Field, n: int, start: Sequence[Matrix], pairs: Sequence[Tuple[Matrix, Matrix]]) -> List[Matrix]:
    """Basis of {X ∈ span(start) : X·a = b·X for every (a, b) in pairs}.

    Constraints are imposed one pair at a time on the surviving subspace.
    """
    current = list(start)
    for a, b in pairs:
        if not current:
            break
        images = [(x @ a - b @ x).flatten() for x in current]
        rows = [[img[k] for img in images] for k in range(n * n)]
        solutions = kernel(field, rows, len(current))
        current = [_combine(field, n, sol, current) for sol in solutions]
    return current


def _combine(field: Field, n: int, coefficients: Sequence[Any], matrices: Sequence[Matrix]) -> Matrix:
    acc = Matrix.zeros(field, n)
    for c, m in zip(coefficients, matrices):
        if c:
            acc = acc + m.scale(c)
    return acc


def full_algebra_basis(field: Field, n: int) -> List[Matrix]:
    out = []
    for i in range(n):
        for j in range(n):
            out.append(Matrix(field, [[field.one if (r, c) == (i, j) else field.zero for c in range(n)] for r in range(n)]))
    return out


def centralizer(field: Field, n: int, S: Sequence[Matrix], provenance: str = "") -> Subalgebra:
    """C_E(S) = {X : XM = MX for M in S}."""
    _check_sizes(field, n, S)
    basis = intertwiners(field, n, full_algebra_basis(field, n), [(m, m) for m in S])
    return Subalgebra(field, n, basis, provenance, verify=False)


def commutant_within(A: Subalgebra, S: Sequence[Matrix], provenance: str = "") -> Subalgebra:
    """C_A(S) = A ∩ C_E(S)."""
    basis = intertwiners(A.field, A.n, A.basis, [(m, m) for m in S])
    return Subalgebra(A.field, A.n, basis, provenance, verify=False)


def center(A: Subalgebra) -> Subalgebra:
    return commutant_within(A, A.basis, f"Z({A.provenance})" if A.provenance else "center")


@dataclass(frozen=True)
class SimplicityVerdict:
    simple: bool
    method: str
    reason: str
    center_dim: int


def default_irreducibility(f: DensePoly) -> IrreducibilityVerdict:
    if f.degree == 1:
        return IrreducibilityVerdict(CERTIFIED_IRREDUCIBLE, "degree one")
    if f.field.is_finite:
        return rabin_irreducible(f)
    if isinstance(f.field, RationalField):
        return poly_irreducible(f)
    raise ValueError(f"no irreducibility test supplied for polynomials over {f.field}")


def center_is_field(
    A: Subalgebra, irreducibility: IrreducibilityTest = default_irreducibility, budget: int = 2000
) -> Tuple[bool, str, int]:
    """Whether Z(A) is a field: some element must have an irreducible minimal
    polynomial of degree dim Z(A)."""
    Z = center(A)
    field = A.field
    basis = Z.basis
    for tried, z in enumerate(_element_candidates(field, basis)):
        if tried >= budget:
            break
        minpoly = matrix_minpoly(field, z)
        if minpoly.degree == Z.dim:
            verdict = irreducibility(minpoly)
            if verdict.irreducible:
                return True, "center is a field", Z.dim
            return False, "center has zero divisors", Z.dim
    return False, "no generating element for the center", Z.dim


def _element_candidates(field: Field, basis: Sequence[Matrix]) -> Iterable[Matrix]:
    yield from basis
    if not basis:
        return
    n = basis[0].size
    coefficients = [0, 1, -1, 2, -2, 3, -3]
    if field.is_finite:
        values = list(field.elements())
        rng = random.Random(len(basis))
        while True:
            yield _combine(field, n, [rng.choice(values) for _ in basis], basis)
    for bound in range(1, 4):
        for combo in _small_combinations(len(basis), bound, coefficients):
            yield _combine(field, n, [field.coerce(c) for c in combo], basis)


def _small_combinations(length: int, bound: int, coefficients: Sequence[int]) -> Iterable[Tuple[int, ...]]:
    allowed = [c for c in coefficients if abs(c) <= bound]
    for combo in itertools.product(allowed, repeat=length):
        if max(abs(c) for c in combo) == bound:
            yield combo


def matrix_minpoly(field: Field, m: Matrix) -> DensePoly:
    n = m.size
    space = EchelonSpace(field, n * n)
    powers: List[Tuple[Any, ...]] = []
    current = Matrix.identity(field, n)
    while True:
        v = current.flatten()
        if not space.add(v):
            coeffs = solve(field, powers, v)
            assert coeffs is not None
            return DensePoly(field, [-c for c in coeffs] + [field.one])
        powers.append(v)
        current = current @ m


def is_simple(
    A: Subalgebra,
    trials: int,
    seed: int,
    irreducibility: IrreducibilityTest = default_irreducibility,
) -> SimplicityVerdict:
    """Simplicity through the trace form (x, y) ↦ tr(xy) and the center.

    A nondegenerate trace form rules out a radical in any characteristic.
    In characteristic p the form may degenerate on simple algebras too, so
    random elements of its radical are tested for generating a proper ideal.
    """
    field = A.field
    basis = A.basis
    gram = [[(a @ b).trace() for b in basis] for a in basis]
    radical = kernel(field, gram, len(basis))
    if not radical:
        is_field, reason, zdim = center_is_field(A, irreducibility)
        return SimplicityVerdict(is_field, DETERMINISTIC, reason, zdim)
    if field.characteristic == 0:
        return SimplicityVerdict(False, DETERMINISTIC, "trace form is degenerate", center(A).dim)
    suspects = [_combine(field, A.n, v, basis) for v in radical]
    rng = random.Random(seed)
    for _ in range(trials):
        x = _random_nonzero(field, A.n, suspects, rng)
        if not _ideal_is_everything(A, x):
            return SimplicityVerdict(False, DETERMINISTIC, "proper two-sided ideal found", center(A).dim)
    logger.debug("Monte-Carlo simplicity check used %d trials", trials)
    is_field, reason, zdim = center_is_field(A, irreducibility)
    return SimplicityVerdict(is_field, PROBABILISTIC, reason, zdim)


def _random_nonzero(field: Field, n: int, span: Sequence[Matrix], rng: random.Random) -> Matrix:
    while True:
        x = _combine(field, n, [field.random_element(rng) for _ in span], span)
        if any(x.flatten()):
            return x


def _ideal_is_everything(A: Subalgebra, x: Matrix) -> bool:
    """Whether the two-sided ideal A·x·A is all of A."""
    right = EchelonSpace(A.field, A.n * A.n)
    right_elements = []
    for a in A.basis:
        y = x @ a
        if right.add(y.flatten()):
            right_elements.append(y)
        if right.dim == A.dim:
            return True
    ideal = EchelonSpace(A.field, A.n * A.n, [y.flatten() for y in right_elements])
    for a in A.basis:
        for y in right_elements:
            ideal.add((a @ y).flatten())
            if ideal.dim == A.dim:
                return True
    return False
