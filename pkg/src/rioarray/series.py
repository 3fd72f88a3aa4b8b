"""Truncated formal power series over an exact coefficient ring.

A :class:`Series` holds the coefficients of ``z^0 .. z^N`` and remembers its
truncation order ``N``. Binary operations return a series whose order is the
smaller of the two operand orders; nothing is ever silently extended.
"""
from __future__ import annotations

from typing import Iterable, Optional, Sequence

from .exact import (
    QQ,
    ZZ,
    Coeff,
    NotInvertibleError,
    Ring,
    RingMismatchError,
    ring_of,
)

__all__ = [
    "Series",
    "TruncationError",
    "CompositionError",
    "NotRevertibleError",
    "SqrtError",
    "catalan_series",
    "catalan_series_sqrt",
]


class TruncationError(IndexError):
    """Coefficient requested beyond the truncation order."""


class CompositionError(ValueError):
    """Inner series of a composition has a nonzero constant term."""


class NotRevertibleError(ValueError):
    """Series has no compositional inverse (order != 1 or non-unit linear term)."""


class SqrtError(ValueError):
    """Square root requested for a series whose constant term is not 1."""


class Series:
    __slots__ = ("coeffs", "ring")

    def __init__(self, coeffs: Sequence[Coeff], order: Optional[int] = None,
                 ring: Optional[Ring] = None):
        cs = list(coeffs)
        if ring is None:
            if not cs:
                raise ValueError("ring must be given for an empty coefficient list")
            ring = ring_of(cs[0])
        if order is None:
            order = len(cs) - 1
        if order < 0:
            raise ValueError("truncation order must be non-negative")
        cs = cs[: order + 1] + [ring.zero] * (order + 1 - len(cs))
        self.coeffs = tuple(ring.coerce(c) for c in cs)
        self.ring = ring

    @classmethod
    def _raw(cls, coeffs: list, ring: Ring) -> "Series":
        s = object.__new__(cls)
        s.coeffs = tuple(coeffs)
        s.ring = ring
        return s

    # constructors

    @classmethod
    def zero(cls, order: int, ring: Ring = ZZ) -> "Series":
        return cls._raw([ring.zero] * (order + 1), ring)

    @classmethod
    def one(cls, order: int, ring: Ring = ZZ) -> "Series":
        return cls.monomial(0, order, ring)

    @classmethod
    def z(cls, order: int, ring: Ring = ZZ) -> "Series":
        return cls.monomial(1, order, ring)

    @classmethod
    def monomial(cls, k: int, order: int, ring: Ring = ZZ, c: Coeff = None) -> "Series":
        cs = [ring.zero] * (order + 1)
        if k <= order:
            cs[k] = ring.one if c is None else ring.coerce(c)
        return cls._raw(cs, ring)

    @classmethod
    def geometric(cls, a: Coeff, order: int, ring: Optional[Ring] = None) -> "Series":
        """The series ``1/(1 - a z) = sum a^n z^n``."""
        ring = ring or ring_of(a)
        a = ring.coerce(a)
        cs, t = [], ring.one
        for _ in range(order + 1):
            cs.append(t)
            t = t * a
        return cls._raw(cs, ring)

    # basic access

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def coeff_at(self, n: int) -> Coeff:
        """The coefficient ``[z^n]`` of the series."""
        if n < 0:
            raise IndexError("negative coefficient index")
        if n > self.order:
            raise TruncationError(f"[z^{n}] requested from a series truncated at {self.order}")
        return self.coeffs[n]

    __getitem__ = coeff_at

    def valuation(self) -> Optional[int]:
        """Index of the first nonzero coefficient, None if all are zero."""
        for i, c in enumerate(self.coeffs):
            if c != 0:
                return i
        return None

    def truncate(self, order: int) -> "Series":
        if order > self.order:
            raise TruncationError(f"cannot extend a series of order {self.order} to {order}")
        return Series._raw(list(self.coeffs[: order + 1]), self.ring)

    def change_ring(self, ring: Ring) -> "Series":
        return Series._raw([ring.coerce(c) for c in self.coeffs], ring)

    def map(self, f, ring: Ring) -> "Series":
        return Series._raw([f(c) for c in self.coeffs], ring)

    def __iter__(self):
        return iter(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        return self.ring is other.ring and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.ring.name, self.coeffs))

    def __repr__(self):
        return f"Series({[str(c) for c in self.coeffs]}, ring={self.ring.name})"

    # arithmetic

    def _other(self, other) -> "Series":
        if isinstance(other, Series):
            if other.ring is not self.ring:
                raise RingMismatchError(f"series over {self.ring} and {other.ring}")
            return other
        return Series.monomial(0, self.order, self.ring, other)

    def __add__(self, other):
        o = self._other(other)
        n = min(self.order, o.order)
        return Series._raw([self.coeffs[i] + o.coeffs[i] for i in range(n + 1)], self.ring)

    __radd__ = __add__

    def __neg__(self):
        return Series._raw([-c for c in self.coeffs], self.ring)

    def __sub__(self, other):
        return self + (-self._other(other))

    def __rsub__(self, other):
        return self._other(other) - self

    def __mul__(self, other):
        if not isinstance(other, Series):
            c = self.ring.coerce(other)
            return Series._raw([x * c for x in self.coeffs], self.ring)
        o = self._other(other)
        n = min(self.order, o.order)
        a, b = self.coeffs, o.coeffs
        zero = self.ring.zero
        out = [zero] * (n + 1)
        for i in range(n + 1):
            ai = a[i]
            if ai == 0:
                continue
            for j in range(n + 1 - i):
                bj = b[j]
                if bj != 0:
                    out[i + j] = out[i + j] + ai * bj
        return Series._raw(out, self.ring)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        out = Series.one(self.order, self.ring)
        base = self
        while e:
            if e & 1:
                out = out * base
            e >>= 1
            if e:
                base = base * base
        return out

    def inverse(self) -> "Series":
        """Multiplicative inverse; the constant term must be a unit."""
        return Series.one(self.order, self.ring) / self

    def __truediv__(self, other):
        if not isinstance(other, Series):
            inv = self.ring.unit_inverse(self.ring.coerce(other))
            return Series._raw([x * inv for x in self.coeffs], self.ring)
        g = self._other(other)
        n = min(self.order, g.order)
        if not self.ring.is_unit(g.coeffs[0]):
            raise NotInvertibleError(
                f"constant term {g.coeffs[0]} of the divisor is not a unit in {self.ring}")
        inv0 = self.ring.unit_inverse(g.coeffs[0])
        f, gc = self.coeffs, g.coeffs
        out = []
        for k in range(n + 1):
            acc = f[k]
            for i in range(1, k + 1):
                if gc[i] != 0:
                    acc = acc - gc[i] * out[k - i]
            out.append(acc * inv0)
        return Series._raw(out, self.ring)

    def __rtruediv__(self, other):
        return self._other(other) / self

    def shift_down(self, m: int) -> "Series":
        """Divide by ``z^m``; the first ``m`` coefficients must vanish.

        The result has order ``N - m``.
        """
        if any(c != 0 for c in self.coeffs[:m]):
            raise NotInvertibleError(f"series is not divisible by z^{m}")
        return Series._raw(list(self.coeffs[m:]), self.ring)

    def shift_up(self, m: int) -> "Series":
        """Multiply by ``z^m`` keeping the truncation order."""
        n = self.order
        return Series._raw(([self.ring.zero] * m + list(self.coeffs))[: n + 1], self.ring)

    def derivative(self) -> "Series":
        if self.order == 0:
            return Series.zero(0, self.ring)
        return Series._raw([c * i for i, c in enumerate(self.coeffs)][1:], self.ring)

    # composition

    def compose(self, g: "Series") -> "Series":
        """``f(g(z))`` by Horner's scheme; ``g`` must have zero constant term."""
        g = self._other(g)
        if g.coeffs[0] != 0:
            raise CompositionError("inner series must have zero constant term")
        n = min(self.order, g.order)
        g = g.truncate(n)
        acc = Series.monomial(0, n, self.ring, self.coeffs[n])
        for k in range(n - 1, -1, -1):
            acc = acc * g
            acc = Series._raw([acc.coeffs[0] + self.coeffs[k]] + list(acc.coeffs[1:]), self.ring)
        return acc

    __call__ = compose

    def revert(self) -> "Series":
        """Compositional inverse, solved one coefficient at a time.

        Writing ``h = h1 z + sum_{k>=2} h_k z^k``, the inverse ``g`` satisfies
        ``g = (z - sum_{k>=2} h_k g^k) / h1`` and the right side's ``z^n``
        coefficient only involves ``g_1 .. g_{n-1}``.
        """
        h, ring = self.coeffs, self.ring
        n = self.order
        if n < 1 or h[0] != 0 or not ring.is_unit(h[1]):
            raise NotRevertibleError("series must have order 1 with a unit linear coefficient")
        inv1 = ring.unit_inverse(h[1])
        zero = ring.zero
        g = [zero] * (n + 1)
        g[1] = inv1
        # pw[k][m] = [z^m] g^k, filled column by column as g grows
        pw = [[zero] * (n + 1) for _ in range(n + 1)]
        pw[1][1] = inv1
        for k in range(2, n + 1):
            pw[k][k] = pw[k - 1][k - 1] * inv1
        for m in range(2, n + 1):
            # [z^m] g^k for k >= 2 uses only g_1..g_{m-1}
            for k in range(2, m):
                acc = zero
                prev = pw[k - 1]
                for j in range(1, m - k + 2):
                    if g[j] != 0 and prev[m - j] != 0:
                        acc = acc + g[j] * prev[m - j]
                pw[k][m] = acc
            acc = zero
            for k in range(2, m + 1):
                if h[k] != 0:
                    acc = acc + h[k] * pw[k][m]
            g[m] = -acc * inv1
            pw[1][m] = g[m]
        return Series._raw(g, ring)

    def sqrt(self) -> "Series":
        """Square root with constant term 1; needs 2 to be invertible."""
        if self.coeffs[0] != 1:
            raise SqrtError("square root needs constant term 1")
        ring = self.ring
        ring.half(ring.one)
        n = self.order
        out = [ring.one]
        for k in range(1, n + 1):
            acc = self.coeffs[k]
            for i in range(1, k):
                acc = acc - out[i] * out[k - i]
            out.append(ring.half(acc))
        return Series._raw(out, ring)


def catalan_series(order: int, ring: Ring = ZZ) -> Series:
    """Catalan generating function from the fixed point ``c = 1 + z c^2``."""
    cs = [ring.one]
    for n in range(1, order + 1):
        acc = ring.zero
        for i in range(n):
            acc = acc + cs[i] * cs[n - 1 - i]
        cs.append(acc)
    return Series._raw(cs, ring)


def catalan_series_sqrt(order: int) -> Series:
    """Catalan generating function ``(1 - sqrt(1 - 4z)) / (2z)`` over QQ."""
    one = Series.one(order + 1, QQ)
    s = (one - Series.z(order + 1, QQ) * 4).sqrt()
    return ((one - s) / 2).shift_down(1)


def from_ints(values: Iterable[int], order: Optional[int] = None, ring: Ring = ZZ) -> Series:
    return Series(list(values), order, ring)
