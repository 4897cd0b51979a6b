"""Simple algebraic extensions F(θ) = F[x]/(g) and their elements."""
import itertools
import random
from typing import Any, Iterator, List, Sequence, Tuple

from gext_lab.exactcore.poly import DensePoly, poly_xgcd
from gext_lab.exactcore.scalar import Field
from gext_lab.helpers.errors import DivisionByZeroError, FieldMismatchError


class ExtElt:
    """Element Σ c_i θ^i of an extension field, coefficients in the field below."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: "ExtensionField", coeffs: Tuple[Any, ...]) -> None:
        self.field = field
        self.coeffs = coeffs

    def _other(self, other: Any) -> "ExtElt":
        if isinstance(other, ExtElt) and other.field is self.field:
            return other
        return self.field.coerce(other)

    def __add__(self, other: Any) -> "ExtElt":
        o = self._other(other)
        return ExtElt(self.field, tuple(a + b for a, b in zip(self.coeffs, o.coeffs)))

    __radd__ = __add__

    def __sub__(self, other: Any) -> "ExtElt":
        o = self._other(other)
        return ExtElt(self.field, tuple(a - b for a, b in zip(self.coeffs, o.coeffs)))

    def __rsub__(self, other: Any) -> "ExtElt":
        return self._other(other) - self

    def __neg__(self) -> "ExtElt":
        return ExtElt(self.field, tuple(-a for a in self.coeffs))

    def __mul__(self, other: Any) -> "ExtElt":
        if isinstance(other, ExtElt) and other.field is self.field:
            return self.field.multiply(self, other)
        if isinstance(other, int) or self.field.below.contains(other):
            return ExtElt(self.field, tuple(a * other for a in self.coeffs))
        return self.field.multiply(self, self.field.coerce(other))

    __rmul__ = __mul__

    def inverse(self) -> "ExtElt":
        return self.field.invert(self)

    def __truediv__(self, other: Any) -> "ExtElt":
        return self * self._other(other).inverse()

    def __rtruediv__(self, other: Any) -> "ExtElt":
        return self._other(other) * self.inverse()

    def __pow__(self, exponent: int) -> "ExtElt":
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = self.field.one
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, ExtElt):
            return other.field is self.field and other.coeffs == self.coeffs
        try:
            return self.field.coerce(other).coeffs == self.coeffs
        except FieldMismatchError:
            return False

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __bool__(self) -> bool:
        return any(bool(c) for c in self.coeffs)

    def __repr__(self) -> str:
        return f"{self.field.name}[{', '.join(repr(c) for c in self.coeffs)}]"


class ExtensionField(Field):
    """F(θ) with θ a root of the monic polynomial ``modulus`` over ``below``."""

    kind = "extension"

    def __init__(self, below: Field, name: str, modulus: DensePoly) -> None:
        if modulus.field != below:
            raise FieldMismatchError(f"minimal polynomial of {name} is not over {below}")
        if not modulus.is_monic() or modulus.degree < 1:
            raise ValueError(f"minimal polynomial of {name} must be monic and nonconstant")
        self.below = below
        self.name = name
        self.modulus = modulus
        self.degree = modulus.degree
        self.characteristic = below.characteristic
        self._tail = [-c for c in modulus.coeffs[:-1]]

    def __repr__(self) -> str:
        return f"{self.below!r}({self.name})"

    @property
    def base(self) -> Field:
        field: Field = self
        while isinstance(field, ExtensionField):
            field = field.below
        return field

    @property
    def absolute_degree(self) -> int:
        return self.degree * self.below.absolute_degree

    @property
    def zero(self) -> ExtElt:
        return ExtElt(self, (self.below.zero,) * self.degree)

    @property
    def one(self) -> ExtElt:
        return self.constant(self.below.one)

    @property
    def gen(self) -> ExtElt:
        if self.degree == 1:
            return self.constant(self._tail[0])
        return ExtElt(self, (self.below.zero, self.below.one) + (self.below.zero,) * (self.degree - 2))

    @property
    def is_finite(self) -> bool:
        return self.below.is_finite

    @property
    def order(self) -> Any:
        below = self.below.order
        return None if below is None else below**self.degree

    def constant(self, c: Any) -> ExtElt:
        return ExtElt(self, (self.below.coerce(c),) + (self.below.zero,) * (self.degree - 1))

    def element(self, coeffs: Sequence[Any]) -> ExtElt:
        if len(coeffs) > self.degree:
            return self.from_poly(DensePoly(self.below, coeffs))
        values = [self.below.coerce(c) for c in coeffs]
        values += [self.below.zero] * (self.degree - len(values))
        return ExtElt(self, tuple(values))

    def from_poly(self, poly: DensePoly) -> ExtElt:
        reduced = poly % self.modulus
        return self.element(reduced.coeffs)

    def to_poly(self, x: ExtElt) -> DensePoly:
        return DensePoly(self.below, x.coeffs)

    def coerce(self, value: Any) -> ExtElt:
        if isinstance(value, ExtElt):
            if value.field is self:
                return value
            return self.constant(self.below.coerce(value))
        if isinstance(value, int) or self.below.contains(value):
            return self.constant(value)
        return self.constant(self.below.coerce(value))

    def contains(self, value: Any) -> bool:
        return isinstance(value, ExtElt) and value.field is self

    def multiply(self, a: ExtElt, b: ExtElt) -> ExtElt:
        d = self.degree
        zero = self.below.zero
        prod: List[Any] = [zero] * (2 * d - 1)
        for i, x in enumerate(a.coeffs):
            if not x:
                continue
            for j, y in enumerate(b.coeffs):
                if y:
                    prod[i + j] = prod[i + j] + x * y
        tail = self._tail
        for k in range(2 * d - 2, d - 1, -1):
            c = prod[k]
            if not c:
                continue
            for j in range(d):
                if tail[j]:
                    prod[k - d + j] = prod[k - d + j] + c * tail[j]
        return ExtElt(self, tuple(prod[:d]))

    def invert(self, a: ExtElt) -> ExtElt:
        if not a:
            raise DivisionByZeroError(f"inverse of zero in {self!r}")
        g, s, _ = poly_xgcd(self.to_poly(a), self.modulus)
        if g.degree != 0:
            raise DivisionByZeroError(f"{a!r} is a zero divisor in {self!r}")
        return self.from_poly(s)

    def lift(self, x: Any) -> ExtElt:
        """Embed an element of any field below this one."""
        return self.coerce(x)

    def elements(self) -> Iterator[ExtElt]:
        below = list(self.below.elements())
        for combo in itertools.product(below, repeat=self.degree):
            yield ExtElt(self, tuple(reversed(combo)))

    def random_element(self, rng: random.Random) -> ExtElt:
        return ExtElt(self, tuple(self.below.random_element(rng) for _ in range(self.degree)))

    def sort_key(self, value: ExtElt) -> Tuple:
        return tuple(self.below.sort_key(c) for c in value.coeffs)

    def render(self, value: ExtElt) -> List[Any]:
        return [self.below.render(c) for c in value.coeffs]

    def flatten(self, value: ExtElt) -> Tuple:
        out: Tuple = ()
        for c in value.coeffs:
            out += self.below.flatten(c)
        return out

    def unflatten(self, vector: Sequence[Any]) -> ExtElt:
        step = self.below.absolute_degree
        if len(vector) != step * self.degree:
            raise ValueError(f"expected {step * self.degree} coordinates, got {len(vector)}")
        coeffs = []
        for i in range(self.degree):
            chunk = vector[i * step : (i + 1) * step]
            if isinstance(self.below, ExtensionField):
                coeffs.append(self.below.unflatten(chunk))
            else:
                coeffs.append(self.below.coerce(chunk[0]))
        return ExtElt(self, tuple(coeffs))

    def pth_root(self, value: ExtElt) -> ExtElt:
        if self.order is None:
            raise ValueError(f"{self!r} has characteristic 0")
        return value ** (self.order // self.characteristic)
