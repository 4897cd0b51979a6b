"""Base fields: the rationals and the prime fields GF(p).

Every field object used by gext_lab (including the extension fields built by
``gext_lab.tower``) exposes the same small surface: ``zero``, ``one``,
``coerce``, ``contains``, ``characteristic``, ``order`` and friends.  Field
elements are plain Python values that support ``+ - * /``, equality and
truthiness (``bool(x)`` is ``x != 0``).
"""
import random
from fractions import Fraction
from typing import Any, Iterator, Optional, Tuple, Union

from sympy import isprime

from gext_lab.helpers.errors import DivisionByZeroError, FieldMismatchError

PRIME_MODULUS_LIMIT = 2**31


class Field:
    """Common interface of every coefficient field."""

    characteristic: int = 0
    kind: str = ""

    @property
    def zero(self) -> Any:
        raise NotImplementedError

    @property
    def one(self) -> Any:
        raise NotImplementedError

    @property
    def is_finite(self) -> bool:
        return False

    @property
    def order(self) -> Optional[int]:
        return None

    @property
    def absolute_degree(self) -> int:
        return 1

    def coerce(self, value: Any) -> Any:
        raise NotImplementedError

    def contains(self, value: Any) -> bool:
        raise NotImplementedError

    def elements(self) -> Iterator[Any]:
        raise NotImplementedError(f"{self} is not a finite field")

    def random_element(self, rng: random.Random) -> Any:
        raise NotImplementedError

    def sort_key(self, value: Any) -> Tuple:
        raise NotImplementedError

    def render(self, value: Any) -> Any:
        raise NotImplementedError

    def pth_root(self, value: Any) -> Any:
        raise NotImplementedError(f"{self} has characteristic 0")

    def flatten(self, value: Any) -> Tuple:
        """Coordinates of ``value`` over the prime field (itself for a base field)."""
        return (value,)


class RationalField(Field):
    characteristic = 0
    kind = "rational"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, RationalField)

    def __hash__(self) -> int:
        return hash("Q")

    def __repr__(self) -> str:
        return "Q"

    @property
    def zero(self) -> Fraction:
        return Fraction(0)

    @property
    def one(self) -> Fraction:
        return Fraction(1)

    def coerce(self, value: Any) -> Fraction:
        if isinstance(value, Fraction):
            return value
        if isinstance(value, int):
            return Fraction(value)
        raise FieldMismatchError(f"cannot coerce {value!r} into Q")

    def contains(self, value: Any) -> bool:
        return isinstance(value, Fraction)

    def random_element(self, rng: random.Random) -> Fraction:
        return Fraction(rng.randint(-9, 9))

    def sort_key(self, value: Fraction) -> Tuple:
        return (value,)

    def render(self, value: Fraction) -> str:
        return f"{value.numerator}/{value.denominator}"


class Residue:
    """An element of GF(p), stored as its representative in [0, p)."""

    __slots__ = ("value", "p")

    def __init__(self, value: int, p: int) -> None:
        self.value = value % p
        self.p = p

    def _other(self, other: Any) -> int:
        if isinstance(other, Residue):
            if other.p != self.p:
                raise FieldMismatchError(f"GF({self.p}) and GF({other.p}) mixed")
            return other.value
        if isinstance(other, int):
            return other % self.p
        return NotImplemented  # type: ignore

    def __add__(self, other: Any) -> "Residue":
        o = self._other(other)
        if o is NotImplemented:
            return NotImplemented
        return Residue(self.value + o, self.p)

    __radd__ = __add__

    def __sub__(self, other: Any) -> "Residue":
        o = self._other(other)
        if o is NotImplemented:
            return NotImplemented
        return Residue(self.value - o, self.p)

    def __rsub__(self, other: Any) -> "Residue":
        o = self._other(other)
        if o is NotImplemented:
            return NotImplemented
        return Residue(o - self.value, self.p)

    def __mul__(self, other: Any) -> "Residue":
        o = self._other(other)
        if o is NotImplemented:
            return NotImplemented
        return Residue(self.value * o, self.p)

    __rmul__ = __mul__

    def __neg__(self) -> "Residue":
        return Residue(-self.value, self.p)

    def inverse(self) -> "Residue":
        if not self.value:
            raise DivisionByZeroError(f"inverse of 0 in GF({self.p})")
        return Residue(pow(self.value, self.p - 2, self.p), self.p)

    def __truediv__(self, other: Any) -> "Residue":
        o = self._other(other)
        if o is NotImplemented:
            return NotImplemented
        return self * Residue(o, self.p).inverse()

    def __rtruediv__(self, other: Any) -> "Residue":
        o = self._other(other)
        if o is NotImplemented:
            return NotImplemented
        return Residue(o, self.p) * self.inverse()

    def __pow__(self, exponent: int) -> "Residue":
        if exponent < 0:
            return self.inverse() ** (-exponent)
        return Residue(pow(self.value, exponent, self.p), self.p)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Residue):
            return self.p == other.p and self.value == other.value
        if isinstance(other, int):
            return self.value == other % self.p
        return False

    def __hash__(self) -> int:
        return hash((self.value, self.p))

    def __bool__(self) -> bool:
        return self.value != 0

    def __repr__(self) -> str:
        return f"{self.value} (mod {self.p})"


class PrimeField(Field):
    kind = "prime-field"

    def __init__(self, p: int) -> None:
        if p >= PRIME_MODULUS_LIMIT:
            raise ValueError(f"modulus {p} must be below 2^31")
        if not isprime(p):
            raise ValueError(f"modulus {p} is not prime")
        self.p = p
        self.characteristic = p

    def __eq__(self, other: object) -> bool:
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self) -> int:
        return hash(("F", self.p))

    def __repr__(self) -> str:
        return f"F{self.p}"

    @property
    def zero(self) -> Residue:
        return Residue(0, self.p)

    @property
    def one(self) -> Residue:
        return Residue(1, self.p)

    @property
    def is_finite(self) -> bool:
        return True

    @property
    def order(self) -> int:
        return self.p

    def coerce(self, value: Any) -> Residue:
        if isinstance(value, Residue):
            if value.p != self.p:
                raise FieldMismatchError(f"GF({value.p}) element used in GF({self.p})")
            return value
        if isinstance(value, int):
            return Residue(value, self.p)
        raise FieldMismatchError(f"cannot coerce {value!r} into GF({self.p})")

    def contains(self, value: Any) -> bool:
        return isinstance(value, Residue) and value.p == self.p

    def elements(self) -> Iterator[Residue]:
        return (Residue(v, self.p) for v in range(self.p))

    def random_element(self, rng: random.Random) -> Residue:
        return Residue(rng.randrange(self.p), self.p)

    def sort_key(self, value: Residue) -> Tuple:
        return (value.value,)

    def render(self, value: Residue) -> int:
        return value.value

    def pth_root(self, value: Residue) -> Residue:
        # Frobenius is the identity on GF(p).
        return value


Scalar = Union[Fraction, Residue]


def base_field_from_tag(tag: str) -> Field:
    """``"Q"`` or ``"F<p>"``, as written on the ``base`` line of a tower file."""
    if tag == "Q":
        return RationalField()
    if tag.startswith("F") and tag[1:].isdigit():
        return PrimeField(int(tag[1:]))
    raise ValueError(f"unknown base field {tag!r}")
