"""Exact linear algebra over any gext_lab field.

Vectors are tuples of field elements.  ``EchelonSpace`` keeps a subspace in
reduced row echelon form so that membership tests and canonical bases come
for free; ``Matrix`` is an immutable square or rectangular matrix.
"""
from typing import Any, Dict, Iterable, List, Optional, Sequence, Tuple

from gext_lab.exactcore.scalar import Field
from gext_lab.helpers.errors import DivisionByZeroError, FieldMismatchError

Vector = Tuple[Any, ...]


class EchelonSpace:
    """A subspace of field^width held as fully reduced echelon rows."""

    def __init__(self, field: Field, width: int, vectors: Iterable[Sequence[Any]] = ()) -> None:
        self.field = field
        self.width = width
        self._rows: Dict[int, List[Any]] = {}
        for v in vectors:
            self.add(v)

    @property
    def dim(self) -> int:
        return len(self._rows)

    @property
    def pivots(self) -> Tuple[int, ...]:
        return tuple(sorted(self._rows))

    def rows(self) -> Tuple[Vector, ...]:
        return tuple(tuple(self._rows[p]) for p in self.pivots)

    def _reduce(self, v: Sequence[Any]) -> List[Any]:
        if len(v) != self.width:
            raise ValueError(f"vector of length {len(v)} in a space of width {self.width}")
        out = list(v)
        for p, row in self._rows.items():
            c = out[p]
            if c:
                for j in range(p, self.width):
                    if row[j]:
                        out[j] = out[j] - c * row[j]
        return out

    def contains(self, v: Sequence[Any]) -> bool:
        return not any(self._reduce(v))

    def add(self, v: Sequence[Any]) -> bool:
        """Add v to the span; True when the dimension grew."""
        r = self._reduce(v)
        pivot = next((i for i, c in enumerate(r) if c), None)
        if pivot is None:
            return False
        inv = self.field.one / r[pivot]
        r = [c * inv for c in r]
        for row in self._rows.values():
            c = row[pivot]
            if c:
                for j in range(pivot, self.width):
                    if r[j]:
                        row[j] = row[j] - c * r[j]
        self._rows[pivot] = r
        return True

    def coordinates(self, v: Sequence[Any]) -> Optional[List[Any]]:
        """Coefficients of v on the echelon rows, or None when v is outside."""
        if not self.contains(v):
            return None
        return [v[p] for p in self.pivots]

    def key(self) -> Tuple:
        return tuple(tuple(self.field.sort_key(c) for c in row) for row in self.rows())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, EchelonSpace):
            return False
        return self.width == other.width and self.rows() == other.rows()

    def __hash__(self) -> int:
        return hash(self.rows())

    def issubset(self, other: "EchelonSpace") -> bool:
        return all(other.contains(row) for row in self.rows())


def rref(field: Field, rows: Sequence[Sequence[Any]], width: int) -> Tuple[Tuple[Vector, ...], Tuple[int, ...]]:
    space = EchelonSpace(field, width, rows)
    return space.rows(), space.pivots


def rank(field: Field, rows: Sequence[Sequence[Any]], width: int) -> int:
    return EchelonSpace(field, width, rows).dim


def kernel(field: Field, rows: Sequence[Sequence[Any]], width: int) -> List[Vector]:
    """Basis of {v : row·v = 0 for every row}, one vector per free column."""
    reduced, pivots = rref(field, rows, width)
    pivot_set = set(pivots)
    basis = []
    for free in range(width):
        if free in pivot_set:
            continue
        v = [field.zero] * width
        v[free] = field.one
        for row, p in zip(reduced, pivots):
            if row[free]:
                v[p] = -row[free]
        basis.append(tuple(v))
    return basis


def solve(field: Field, columns: Sequence[Sequence[Any]], target: Sequence[Any]) -> Optional[List[Any]]:
    """Coefficients c with Σ c_i columns[i] = target, or None."""
    m = len(columns)
    height = len(target)
    rows = [[columns[i][r] for i in range(m)] + [-target[r]] for r in range(height)]
    for v in kernel(field, rows, m + 1):
        if v[m]:
            scale = field.one / v[m]
            return [c * scale for c in v[:m]]
    return None


class Matrix:
    __slots__ = ("field", "rows")

    def __init__(self, field: Field, rows: Iterable[Sequence[Any]]) -> None:
        self.field = field
        self.rows: Tuple[Vector, ...] = tuple(tuple(r) for r in rows)

    @classmethod
    def identity(cls, field: Field, n: int) -> "Matrix":
        return cls(field, [[field.one if i == j else field.zero for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, field: Field, n: int) -> "Matrix":
        return cls(field, [[field.zero] * n for _ in range(n)])

    @classmethod
    def from_columns(cls, field: Field, columns: Sequence[Sequence[Any]]) -> "Matrix":
        height = len(columns[0]) if columns else 0
        return cls(field, [[col[i] for col in columns] for i in range(height)])

    @classmethod
    def from_flat(cls, field: Field, n: int, flat: Sequence[Any]) -> "Matrix":
        return cls(field, [flat[i * n : (i + 1) * n] for i in range(n)])

    @property
    def size(self) -> int:
        return len(self.rows)

    def flatten(self) -> Vector:
        return tuple(c for row in self.rows for c in row)

    def column(self, j: int) -> Vector:
        return tuple(row[j] for row in self.rows)

    def _check(self, other: "Matrix") -> None:
        if other.field != self.field:
            raise FieldMismatchError(f"matrices over {self.field} and {other.field}")

    def __matmul__(self, other: "Matrix") -> "Matrix":
        self._check(other)
        zero = self.field.zero
        cols = list(zip(*other.rows))
        out = []
        for row in self.rows:
            out_row = []
            for col in cols:
                acc = zero
                for a, b in zip(row, col):
                    if a and b:
                        acc = acc + a * b
                out_row.append(acc)
            out.append(out_row)
        return Matrix(self.field, out)

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check(other)
        return Matrix(self.field, [[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._check(other)
        return Matrix(self.field, [[a - b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def scale(self, c: Any) -> "Matrix":
        return Matrix(self.field, [[c * a for a in r] for r in self.rows])

    def apply(self, v: Sequence[Any]) -> Vector:
        zero = self.field.zero
        out = []
        for row in self.rows:
            acc = zero
            for a, b in zip(row, v):
                if a and b:
                    acc = acc + a * b
            out.append(acc)
        return tuple(out)

    def transpose(self) -> "Matrix":
        return Matrix(self.field, list(zip(*self.rows)))

    def trace(self) -> Any:
        acc = self.field.zero
        for i, row in enumerate(self.rows):
            acc = acc + row[i]
        return acc

    def determinant(self) -> Any:
        n = self.size
        work = [list(r) for r in self.rows]
        det = self.field.one
        for col in range(n):
            pivot = next((r for r in range(col, n) if work[r][col]), None)
            if pivot is None:
                return self.field.zero
            if pivot != col:
                work[col], work[pivot] = work[pivot], work[col]
                det = -det
            det = det * work[col][col]
            inv = self.field.one / work[col][col]
            for r in range(col + 1, n):
                c = work[r][col]
                if c:
                    factor = c * inv
                    for j in range(col, n):
                        work[r][j] = work[r][j] - factor * work[col][j]
        return det

    def is_invertible(self) -> bool:
        return bool(self.determinant())

    def inverse(self) -> "Matrix":
        n = self.size
        field = self.field
        work = [list(r) + [field.one if i == j else field.zero for j in range(n)] for i, r in enumerate(self.rows)]
        for col in range(n):
            pivot = next((r for r in range(col, n) if work[r][col]), None)
            if pivot is None:
                raise DivisionByZeroError("matrix is singular")
            work[col], work[pivot] = work[pivot], work[col]
            inv = field.one / work[col][col]
            work[col] = [c * inv for c in work[col]]
            for r in range(n):
                c = work[r][col]
                if r != col and c:
                    work[r] = [a - c * b for a, b in zip(work[r], work[col])]
        return Matrix(field, [row[n:] for row in work])

    def key(self) -> Tuple:
        return tuple(self.field.sort_key(c) for c in self.flatten())

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Matrix) and self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def __repr__(self) -> str:
        return f"Matrix({[list(r) for r in self.rows]!r})"
