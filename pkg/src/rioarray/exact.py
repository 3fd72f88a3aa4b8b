"""Exact coefficient rings: integers, rationals and integer polynomials in ``r``.

Values are plain Python objects (``int``, ``fractions.Fraction``, :class:`PolyR`);
the :class:`Ring` singletons ``ZZ``, ``QQ`` and ``ZZ_R`` describe which ring a
value lives in and supply the unit tests and inverses needed by series division.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence, Union

__all__ = [
    "RingMismatchError",
    "DivisibilityError",
    "NotInvertibleError",
    "PolyR",
    "Ring",
    "ZZ",
    "QQ",
    "ZZ_R",
    "Coeff",
    "ring_of",
    "ring_add",
    "ring_mul",
    "ring_neg",
    "exact_div",
    "binomial",
    "poly_eval",
    "common_ring",
]


class RingMismatchError(TypeError):
    """Operands belong to different coefficient rings."""


class DivisibilityError(ArithmeticError):
    """An exact division was requested on non-divisible operands."""


class NotInvertibleError(ArithmeticError):
    """A value that must be a unit is not invertible in its ring."""


class PolyR:
    """Dense polynomial over the integers in the single indeterminate ``r``.

    Coefficients are stored in ascending order with trailing zeros stripped,
    so the zero polynomial has an empty coefficient tuple.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = [int(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("PolyR is immutable")

    @classmethod
    def const(cls, c: int) -> "PolyR":
        return cls((c,))

    @classmethod
    def r(cls) -> "PolyR":
        return cls((0, 1))

    @property
    def degree(self) -> int:
        """Index of the last nonzero coefficient; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def coeff(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def __call__(self, v):
        return poly_eval(self, v)

    @staticmethod
    def _lift(other) -> "PolyR":
        if isinstance(other, PolyR):
            return other
        if isinstance(other, int) and not isinstance(other, bool):
            return PolyR((other,))
        return NotImplemented

    def __add__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        a, b = self.coeffs, o.coeffs
        if len(a) < len(b):
            a, b = b, a
        return PolyR([x + (b[i] if i < len(b) else 0) for i, x in enumerate(a)])

    __radd__ = __add__

    def __neg__(self):
        return PolyR([-c for c in self.coeffs])

    def __sub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return o + (-self)

    def __mul__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        a, b = self.coeffs, o.coeffs
        if not a or not b:
            return PolyR()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return PolyR(out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative exponent")
        out, base = PolyR((1,)), self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __eq__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return self.coeffs == o.coeffs

    def __hash__(self):
        if len(self.coeffs) <= 1:
            return hash(self.coeffs[0] if self.coeffs else 0)
        return hash(self.coeffs)

    def __bool__(self):
        return bool(self.coeffs)

    def __repr__(self):
        return f"PolyR({list(self.coeffs)})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mag = abs(c)
            if i == 0:
                term = str(mag)
            else:
                mono = "r" if i == 1 else f"r^{i}"
                term = mono if mag == 1 else f"{mag}{mono}"
            if not parts:
                parts.append(term if c > 0 else "-" + term)
            else:
                parts.append(("+" if c > 0 else "-") + term)
        return "".join(parts)


Coeff = Union[int, Fraction, PolyR]


class Ring:
    """A coefficient ring: membership, constants, units and coercion."""

    name = "?"
    zero: Coeff = 0
    one: Coeff = 1

    def contains(self, a) -> bool:
        raise NotImplementedError

    def is_unit(self, a) -> bool:
        raise NotImplementedError

    def unit_inverse(self, a) -> Coeff:
        raise NotImplementedError

    def coerce(self, a) -> Coeff:
        raise NotImplementedError

    def half(self, a) -> Coeff:
        raise NotInvertibleError(f"2 is not a unit in {self.name}")

    def __repr__(self):
        return self.name


class _Integers(Ring):
    name = "ZZ"
    zero, one = 0, 1

    def contains(self, a):
        return isinstance(a, int) and not isinstance(a, bool)

    def is_unit(self, a):
        return a in (1, -1)

    def unit_inverse(self, a):
        if a not in (1, -1):
            raise NotInvertibleError(f"{a} is not a unit in ZZ")
        return a

    def coerce(self, a):
        if self.contains(a):
            return a
        if isinstance(a, Fraction) and a.denominator == 1:
            return a.numerator
        if isinstance(a, PolyR) and a.is_constant():
            return a.coeff(0)
        raise RingMismatchError(f"cannot coerce {a!r} into ZZ")


class _Rationals(Ring):
    name = "QQ"
    zero, one = Fraction(0), Fraction(1)

    def contains(self, a):
        return isinstance(a, Fraction)

    def is_unit(self, a):
        return a != 0

    def unit_inverse(self, a):
        if a == 0:
            raise NotInvertibleError("0 is not invertible in QQ")
        return 1 / Fraction(a)

    def coerce(self, a):
        if isinstance(a, Fraction):
            return a
        if isinstance(a, int) and not isinstance(a, bool):
            return Fraction(a)
        if isinstance(a, PolyR) and a.is_constant():
            return Fraction(a.coeff(0))
        raise RingMismatchError(f"cannot coerce {a!r} into QQ")

    def half(self, a):
        return a / 2


class _PolynomialsInR(Ring):
    name = "ZZ[r]"
    zero, one = PolyR(), PolyR((1,))

    def contains(self, a):
        return isinstance(a, PolyR)

    def is_unit(self, a):
        return a.is_constant() and a.coeff(0) in (1, -1)

    def unit_inverse(self, a):
        if not self.is_unit(a):
            raise NotInvertibleError(f"{a} is not a unit in ZZ[r]")
        return a

    def coerce(self, a):
        if isinstance(a, PolyR):
            return a
        if isinstance(a, int) and not isinstance(a, bool):
            return PolyR((a,))
        if isinstance(a, Fraction) and a.denominator == 1:
            return PolyR((a.numerator,))
        raise RingMismatchError(f"cannot coerce {a!r} into ZZ[r]")


ZZ = _Integers()
QQ = _Rationals()
ZZ_R = _PolynomialsInR()


def ring_of(a) -> Ring:
    if isinstance(a, bool):
        raise RingMismatchError("bool is not a coefficient")
    if isinstance(a, int):
        return ZZ
    if isinstance(a, Fraction):
        return QQ
    if isinstance(a, PolyR):
        return ZZ_R
    raise RingMismatchError(f"{type(a).__name__} is not a supported coefficient type")


def common_ring(*rings: Ring) -> Ring:
    """Smallest of ZZ, QQ, ZZ[r] containing all given rings.

    QQ and ZZ[r] together have no common ring here.
    """
    rs = set(rings)
    if rs <= {ZZ}:
        return ZZ
    if rs <= {ZZ, QQ}:
        return QQ
    if rs <= {ZZ, ZZ_R}:
        return ZZ_R
    raise RingMismatchError(f"no common ring for {sorted(r.name for r in rs)}")


def _check_same(a, b) -> None:
    ra, rb = ring_of(a), ring_of(b)
    if ra is not rb:
        raise RingMismatchError(f"operands from {ra} and {rb}")


def ring_add(a: Coeff, b: Coeff) -> Coeff:
    _check_same(a, b)
    return a + b


def ring_mul(a: Coeff, b: Coeff) -> Coeff:
    _check_same(a, b)
    return a * b


def ring_neg(a: Coeff) -> Coeff:
    ring_of(a)
    return -a


def exact_div(a: int, b: int) -> int:
    """Return ``a // b``, raising :class:`DivisibilityError` unless ``b | a``."""
    if b == 0:
        raise ZeroDivisionError("exact_div by zero")
    q, rem = divmod(a, b)
    if rem:
        raise DivisibilityError(f"{b} does not divide {a}")
    return q


def binomial(n: int, k: int) -> int:
    """Binomial coefficient, zero when ``k < 0`` or ``k > n >= 0``.

    For negative ``n`` the polynomial extension ``n(n-1)...(n-k+1)/k!`` is used.
    """
    if k < 0:
        return 0
    if n >= 0 and k > n:
        return 0
    if n >= 0 and k > n - k:
        k = n - k
    num, den = 1, 1
    for i in range(k):
        num *= n - i
        den *= i + 1
    return exact_div(num, den)


def poly_eval(p: Union[PolyR, Sequence], v):
    """Horner evaluation of a polynomial (PolyR or ascending coefficient list)."""
    coeffs = p.coeffs if isinstance(p, PolyR) else p
    acc = 0
    for c in reversed(coeffs):
        acc = acc * v + c
    return acc
