"""Dense univariate polynomials over any gext_lab field.

Coefficients are stored low degree first, with trailing zeros trimmed, so
the zero polynomial has an empty coefficient tuple and degree -1.
"""
from typing import Any, Iterable, List, Sequence, Tuple, Union

from gext_lab.exactcore.scalar import Field
from gext_lab.helpers.errors import DivisionByZeroError, FieldMismatchError


class DensePoly:
    __slots__ = ("field", "coeffs")

    def __init__(self, field: Field, coeffs: Iterable[Any]) -> None:
        values = [field.coerce(c) for c in coeffs]
        while values and not values[-1]:
            values.pop()
        self.field = field
        self.coeffs: Tuple[Any, ...] = tuple(values)

    @classmethod
    def zero(cls, field: Field) -> "DensePoly":
        return cls(field, ())

    @classmethod
    def constant(cls, field: Field, value: Any) -> "DensePoly":
        return cls(field, (value,))

    @classmethod
    def x(cls, field: Field) -> "DensePoly":
        return cls(field, (field.zero, field.one))

    @classmethod
    def monomial(cls, field: Field, degree: int, coefficient: Any = 1) -> "DensePoly":
        return cls(field, [field.zero] * degree + [field.coerce(coefficient)])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lead(self) -> Any:
        if not self.coeffs:
            return self.field.zero
        return self.coeffs[-1]

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == self.field.one

    def coefficient(self, i: int) -> Any:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return self.field.zero

    def _check(self, other: "DensePoly") -> None:
        if other.field != self.field:
            raise FieldMismatchError(
                f"polynomials over {self.field} and {other.field} cannot be combined"
            )

    def _lift(self, other: Union["DensePoly", Any]) -> "DensePoly":
        if isinstance(other, DensePoly):
            self._check(other)
            return other
        return DensePoly.constant(self.field, other)

    def __add__(self, other: Union["DensePoly", Any]) -> "DensePoly":
        o = self._lift(other)
        n = max(len(self.coeffs), len(o.coeffs))
        return DensePoly(
            self.field, [self.coefficient(i) + o.coefficient(i) for i in range(n)]
        )

    __radd__ = __add__

    def __neg__(self) -> "DensePoly":
        return DensePoly(self.field, [-c for c in self.coeffs])

    def __sub__(self, other: Union["DensePoly", Any]) -> "DensePoly":
        return self + (-self._lift(other))

    def __rsub__(self, other: Any) -> "DensePoly":
        return self._lift(other) - self

    def __mul__(self, other: Union["DensePoly", Any]) -> "DensePoly":
        o = self._lift(other)
        if self.is_zero() or o.is_zero():
            return DensePoly.zero(self.field)
        out: List[Any] = [self.field.zero] * (len(self.coeffs) + len(o.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(o.coeffs):
                out[i + j] = out[i + j] + a * b
        return DensePoly(self.field, out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "DensePoly":
        if exponent < 0:
            raise ValueError("negative polynomial power")
        result = DensePoly.constant(self.field, self.field.one)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def scale(self, c: Any) -> "DensePoly":
        return DensePoly(self.field, [c * a for a in self.coeffs])

    def monic(self) -> "DensePoly":
        if self.is_zero():
            return self
        inv = self.field.one / self.lead
        return self.scale(inv)

    def divrem(self, other: "DensePoly") -> Tuple["DensePoly", "DensePoly"]:
        self._check(other)
        if other.is_zero():
            raise DivisionByZeroError("polynomial division by zero")
        rem = list(self.coeffs)
        dd = other.degree
        inv_lead = self.field.one / other.lead
        if len(rem) <= dd:
            return DensePoly.zero(self.field), self
        quot: List[Any] = [self.field.zero] * (len(rem) - dd)
        for k in range(len(rem) - 1, dd - 1, -1):
            c = rem[k]
            if not c:
                continue
            q = c * inv_lead
            quot[k - dd] = q
            for j, b in enumerate(other.coeffs):
                rem[k - dd + j] = rem[k - dd + j] - q * b
        return DensePoly(self.field, quot), DensePoly(self.field, rem[:dd])

    def __floordiv__(self, other: "DensePoly") -> "DensePoly":
        return self.divrem(other)[0]

    def __mod__(self, other: "DensePoly") -> "DensePoly":
        return self.divrem(other)[1]

    def divides(self, other: "DensePoly") -> bool:
        return (other % self).is_zero()

    def derivative(self) -> "DensePoly":
        return DensePoly(
            self.field, [c * i for i, c in enumerate(self.coeffs)][1:]
        )

    def __call__(self, x: Any) -> Any:
        acc = self.field.zero if not self.coeffs else self.coeffs[-1]
        for c in reversed(self.coeffs[:-1]):
            acc = acc * x + c
        if not self.coeffs:
            return x * 0
        return acc

    def compose_shift(self, c: Any) -> "DensePoly":
        """f(x + c)."""
        result = DensePoly.zero(self.field)
        shift = DensePoly(self.field, (c, self.field.one))
        for a in reversed(self.coeffs):
            result = result * shift + a
        return result

    def pow_mod(self, exponent: int, modulus: "DensePoly") -> "DensePoly":
        result = DensePoly.constant(self.field, self.field.one) % modulus
        base = self % modulus
        while exponent:
            if exponent & 1:
                result = (result * base) % modulus
            base = (base * base) % modulus
            exponent >>= 1
        return result

    def map_coeffs(self, fn: Any, field: Field) -> "DensePoly":
        return DensePoly(field, [fn(c) for c in self.coeffs])

    def sort_key(self) -> Tuple:
        return (self.degree,) + tuple(self.field.sort_key(c) for c in self.coeffs)

    def render(self) -> List[Any]:
        return [self.field.render(c) for c in self.coeffs]

    def __eq__(self, other: object) -> bool:
        if isinstance(other, DensePoly):
            return self.field == other.field and self.coeffs == other.coeffs
        return False

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return self.to_string()

    def to_string(self, var: str = "x") -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            mono = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
            if i and c == self.field.one:
                terms.append(mono)
            else:
                terms.append(f"({c!r})" + (f"*{mono}" if mono else ""))
        return " + ".join(terms)


def poly_gcd(a: DensePoly, b: DensePoly) -> DensePoly:
    """Monic gcd; ``poly_gcd(0, 0)`` is the zero polynomial."""
    a._check(b)
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def poly_xgcd(a: DensePoly, b: DensePoly) -> Tuple[DensePoly, DensePoly, DensePoly]:
    """Return ``(g, s, t)`` with ``g = s*a + t*b`` and ``g`` monic."""
    a._check(b)
    field = a.field
    r0, r1 = a, b
    s0, s1 = DensePoly.constant(field, field.one), DensePoly.zero(field)
    t0, t1 = DensePoly.zero(field), DensePoly.constant(field, field.one)
    while not r1.is_zero():
        q, r = r0.divrem(r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if r0.is_zero():
        return r0, s0, t0
    inv = field.one / r0.lead
    return r0.scale(inv), s0.scale(inv), t0.scale(inv)


def pth_root(f: DensePoly) -> DensePoly:
    """The polynomial h with h(x)^p = f(x), for f' = 0 in characteristic p."""
    p = f.field.characteristic
    if not p:
        raise ValueError("p-th roots need positive characteristic")
    return DensePoly(
        f.field, [f.field.pth_root(f.coeffs[i]) for i in range(0, len(f.coeffs), p)]
    )


def squarefree(f: DensePoly) -> DensePoly:
    """Monic product of the distinct irreducible factors of f."""
    if f.is_zero():
        raise ValueError("square-free part of the zero polynomial")
    f = f.monic()
    if f.degree <= 0:
        return f
    d = f.derivative()
    if d.is_zero():
        return squarefree(pth_root(f))
    g = poly_gcd(f, d)
    w = f // g
    # whatever is left in g carries multiplicities divisible by p
    shared = poly_gcd(g, w)
    while shared.degree > 0:
        g = g // shared
        shared = poly_gcd(g, w)
    if g.degree > 0:
        w = w * squarefree(pth_root(g))
    return w.monic()


def squarefree_decomposition(f: DensePoly) -> List[Tuple[DensePoly, int]]:
    """Square-free factors with multiplicities, for fields of characteristic p."""
    f = f.monic()
    p = f.field.characteristic
    out: List[Tuple[DensePoly, int]] = []
    d = f.derivative()
    if d.is_zero():
        if f.degree <= 0:
            return out
        return [(h, m * p) for h, m in squarefree_decomposition(pth_root(f))]
    c = poly_gcd(f, d)
    w = f // c
    i = 1
    while w.degree > 0:
        y = poly_gcd(w, c)
        fac = w // y
        if fac.degree > 0:
            out.append((fac.monic(), i))
        w = y
        c = c // y
        i += 1
    if c.degree > 0:
        out.extend((h, m * p) for h, m in squarefree_decomposition(pth_root(c)))
    return out


def from_integers(field: Field, coeffs: Sequence[int]) -> DensePoly:
    return DensePoly(field, [field.coerce(c) for c in coeffs])
