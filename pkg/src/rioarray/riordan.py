"""Riordan arrays ``(d(z), h(z))``, their materialized triangles, and the group law."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, List, Optional, Sequence, Tuple

from .exact import Coeff, NotInvertibleError, Ring, RingMismatchError, ZZ, common_ring, ring_of
from .series import Series, TruncationError

__all__ = [
    "MalformedArrayError",
    "RiordanArray",
    "Triangle",
    "make",
    "identity",
    "entry",
    "to_triangle",
    "group_mul",
    "group_inv",
    "apply_series",
    "apply_vector",
]


class MalformedArrayError(ValueError):
    """The pair (d, h) violates d(0) a unit, h(0) = 0."""


@dataclass(frozen=True)
class Triangle:
    """Explicit lower-triangular block: row ``n`` holds entries ``(n, 0..n)``."""

    rows: Tuple[Tuple[Coeff, ...], ...]
    ring: Ring = ZZ
    name: str = ""

    def __post_init__(self):
        for n, row in enumerate(self.rows):
            if len(row) != n + 1:
                raise ValueError(f"row {n} has {len(row)} entries, expected {n + 1}")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Coeff]], ring: Optional[Ring] = None,
                  name: str = "") -> "Triangle":
        rows = [list(r) for r in rows]
        if ring is None:
            ring = ring_of(rows[0][0]) if rows and rows[0] else ZZ
        return cls(tuple(tuple(ring.coerce(c) for c in r) for r in rows), ring, name)

    @classmethod
    def from_function(cls, f: Callable[[int, int], Coeff], depth: int, ring: Ring = ZZ,
                      name: str = "") -> "Triangle":
        return cls.from_rows([[f(n, k) for k in range(n + 1)] for n in range(depth + 1)],
                             ring, name)

    @classmethod
    def identity(cls, depth: int, ring: Ring = ZZ) -> "Triangle":
        return cls.from_function(lambda n, k: ring.one if n == k else ring.zero, depth, ring, "I")

    @property
    def depth(self) -> int:
        return len(self.rows) - 1

    def entry(self, n: int, k: int) -> Coeff:
        if n > self.depth or k > self.depth:
            raise TruncationError(f"({n},{k}) outside a depth-{self.depth} triangle")
        return self.rows[n][k] if k <= n else self.ring.zero

    def __getitem__(self, nk):
        return self.entry(*nk)

    def __eq__(self, other):
        if not isinstance(other, Triangle):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def truncate(self, depth: int) -> "Triangle":
        if depth > self.depth:
            raise TruncationError(f"cannot extend depth {self.depth} to {depth}")
        return Triangle(self.rows[: depth + 1], self.ring, self.name)

    def map(self, f: Callable[[Coeff], Coeff], ring: Ring) -> "Triangle":
        return Triangle(tuple(tuple(f(c) for c in r) for r in self.rows), ring, self.name)

    def change_ring(self, ring: Ring) -> "Triangle":
        return self.map(ring.coerce, ring)

    def column(self, k: int) -> List[Coeff]:
        return [self.rows[n][k] for n in range(k, self.depth + 1)]

    def diagonal(self) -> List[Coeff]:
        return [row[-1] for row in self.rows]

    def row_sums(self) -> List[Coeff]:
        out = []
        for row in self.rows:
            acc = self.ring.zero
            for c in row:
                acc = acc + c
            out.append(acc)
        return out

    def matmul(self, other: "Triangle") -> "Triangle":
        """Exact product of two lower-triangular blocks of equal depth."""
        ring = common_ring(self.ring, other.ring)
        a = self.change_ring(ring) if self.ring is not ring else self
        b = other.change_ring(ring) if other.ring is not ring else other
        depth = min(a.depth, b.depth)
        rows = []
        for n in range(depth + 1):
            arow = a.rows[n]
            row = []
            for k in range(n + 1):
                acc = ring.zero
                for j in range(k, n + 1):
                    x = arow[j]
                    if x != 0:
                        acc = acc + x * b.rows[j][k]
                row.append(acc)
            rows.append(tuple(row))
        return Triangle(tuple(rows), ring)

    __matmul__ = matmul

    def inverse(self) -> "Triangle":
        """Inverse by forward substitution; the diagonal must consist of units."""
        ring = self.ring
        rows: List[List[Coeff]] = []
        for n in range(self.depth + 1):
            t = self.rows[n]
            if not ring.is_unit(t[n]):
                raise NotInvertibleError(f"diagonal entry ({n},{n}) = {t[n]} is not a unit")
            dinv = ring.unit_inverse(t[n])
            row = [ring.zero] * (n + 1)
            row[n] = dinv
            for k in range(n):
                acc = ring.zero
                for j in range(k, n):
                    if t[j] != 0:
                        acc = acc + t[j] * rows[j][k]
                row[k] = -(acc * dinv)
            rows.append(row)
        return Triangle(tuple(tuple(r) for r in rows), ring)

    def apply_vector(self, v: Sequence[Coeff]) -> List[Coeff]:
        return apply_vector(self, v)


@dataclass(frozen=True)
class RiordanArray:
    """The Riordan array with ``R[n, k] = [z^n] d(z) h(z)^k``, truncated at ``order``."""

    d: Series
    h: Series
    name: str = field(default="", compare=False)

    def __post_init__(self):
        if self.d.ring is not self.h.ring:
            raise RingMismatchError(f"d over {self.d.ring}, h over {self.h.ring}")
        ring = self.d.ring
        if not ring.is_unit(self.d.coeffs[0]):
            raise MalformedArrayError(f"d(0) = {self.d.coeffs[0]} is not a unit")
        if self.h.coeffs[0] != 0:
            raise MalformedArrayError(f"h(0) = {self.h.coeffs[0]} must be 0")
        n = min(self.d.order, self.h.order)
        if self.d.order != n:
            object.__setattr__(self, "d", self.d.truncate(n))
        if self.h.order != n:
            object.__setattr__(self, "h", self.h.truncate(n))

    @property
    def order(self) -> int:
        return self.d.order

    @property
    def ring(self) -> Ring:
        return self.d.ring

    def is_invertible(self) -> bool:
        return self.order >= 1 and self.ring.is_unit(self.h.coeffs[1])

    def is_normalized(self) -> bool:
        """True when d(0) = h'(0) = 1, i.e. the diagonal is all ones."""
        return self.d.coeffs[0] == 1 and (self.order == 0 or self.h.coeffs[1] == 1)

    def change_ring(self, ring: Ring) -> "RiordanArray":
        if ring is self.ring:
            return self
        return RiordanArray(self.d.change_ring(ring), self.h.change_ring(ring), self.name)

    def truncate(self, order: int) -> "RiordanArray":
        return RiordanArray(self.d.truncate(order), self.h.truncate(order), self.name)

    def entry(self, n: int, k: int) -> Coeff:
        return entry(self, n, k)

    def to_triangle(self, depth: Optional[int] = None) -> Triangle:
        return to_triangle(self, self.order if depth is None else depth)

    def __mul__(self, other: "RiordanArray") -> "RiordanArray":
        return group_mul(self, other)

    def inverse(self) -> "RiordanArray":
        return group_inv(self)


def make(d: Series, h: Series, name: str = "") -> RiordanArray:
    return RiordanArray(d, h, name)


def identity(order: int, ring: Ring = ZZ) -> RiordanArray:
    return RiordanArray(Series.one(order, ring), Series.z(order, ring), "I")


def entry(R: RiordanArray, n: int, k: int) -> Coeff:
    """Single entry straight from ``[z^n] d h^k``, without the triangle cache."""
    if n > R.order or k > R.order:
        raise TruncationError(f"({n},{k}) beyond truncation order {R.order}")
    if k > n:
        return R.ring.zero
    d, h = R.d.truncate(n), R.h.truncate(n)
    acc = d
    for _ in range(k):
        acc = acc * h
    return acc.coeffs[n]


def to_triangle(R: RiordanArray, depth: int) -> Triangle:
    """Rows ``0..depth``, column ``k`` read from the running product ``d h^k``."""
    if depth > R.order:
        raise TruncationError(f"depth {depth} beyond truncation order {R.order}")
    ring = R.ring
    h = R.h.truncate(depth)
    cols = []
    cur = R.d.truncate(depth)
    for k in range(depth + 1):
        cols.append(cur.coeffs)
        if k < depth:
            cur = cur * h
    rows = tuple(tuple(cols[k][n] for k in range(n + 1)) for n in range(depth + 1))
    return Triangle(rows, ring, R.name)


def _unify(R1: RiordanArray, R2: RiordanArray) -> Tuple[RiordanArray, RiordanArray]:
    ring = common_ring(R1.ring, R2.ring)
    n = min(R1.order, R2.order)
    return R1.change_ring(ring).truncate(n), R2.change_ring(ring).truncate(n)


def group_mul(R1: RiordanArray, R2: RiordanArray) -> RiordanArray:
    """``(d1, h1)(d2, h2) = (d1 * d2(h1), h2(h1))``; ZZ operands lift to QQ or ZZ[r]."""
    a, b = _unify(R1, R2)
    name = f"{a.name}*{b.name}" if a.name and b.name else ""
    return RiordanArray(a.d * b.d.compose(a.h), b.h.compose(a.h), name)


def group_inv(R: RiordanArray) -> RiordanArray:
    """``(1 / d(hbar), hbar)`` with ``hbar`` the compositional inverse of ``h``."""
    hbar = R.h.revert()
    d = R.d.compose(hbar).inverse()
    return RiordanArray(d, hbar, f"inv({R.name})" if R.name else "")


def apply_series(R: RiordanArray, g: Series) -> Series:
    """The action ``(d, h) * g = d(z) g(h(z))``."""
    if g.ring is not R.ring:
        raise RingMismatchError(f"array over {R.ring}, series over {g.ring}")
    n = min(R.order, g.order)
    return R.d.truncate(n) * g.truncate(n).compose(R.h.truncate(n))


def apply_vector(T: Triangle, v: Sequence[Coeff]) -> List[Coeff]:
    """Row-by-row product of the triangle with a column vector."""
    if len(v) < T.depth + 1:
        raise ValueError(f"vector of length {len(v)} too short for depth {T.depth}")
    out = []
    for row in T.rows:
        acc = T.ring.zero
        for a, x in zip(row, v):
            acc = acc + a * x
        out.append(acc)
    return out
