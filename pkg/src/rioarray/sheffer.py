"""Sheffer polynomial sequences ``p_n(x) = sum_k T[n, k] x^k`` and the checks built on them."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Union

from .exact import QQ, Coeff, DivisibilityError, poly_eval
from .report import IdentityReport, compare
from .riordan import RiordanArray, Triangle
from .series import Series

__all__ = [
    "ShefferSeq",
    "sheffer_of",
    "eval",
    "gf_check",
    "gf_check_inverse",
    "shift_check",
    "chebyshev_U",
    "chebyshev_bridge",
    "three_term_polys",
    "catalan_r_sheffer_gf",
    "catalan_r_inverse_sheffer_gf",
    "shapiro_inverse_sheffer_gf",
]

Number = Union[int, Fraction]


@dataclass(frozen=True)
class ShefferSeq:
    source: Triangle

    @property
    def depth(self) -> int:
        return self.source.depth

    @property
    def polynomials(self) -> List[List[Coeff]]:
        return [list(row) for row in self.source.rows]

    def poly(self, n: int) -> List[Coeff]:
        if n > self.depth:
            raise IndexError(f"p_{n} beyond depth {self.depth}")
        return list(self.source.rows[n])

    def eval(self, n: int, x: Number):
        if not 0 <= n <= self.depth:
            raise IndexError(f"p_{n} beyond depth {self.depth}")
        return poly_eval(self.source.rows[n], x)

    def values(self, x: Number, signed_flip: bool = False) -> list:
        """``p_0(x), ..., p_depth(x)``; ``signed_flip`` multiplies ``p_n`` by ``(-1)^n``."""
        out = []
        for n, row in enumerate(self.source.rows):
            v = poly_eval(row, x)
            out.append(-v if signed_flip and n % 2 else v)
        return out

    def integer_values(self, x: Number, signed_flip: bool = False) -> List[int]:
        """Like :meth:`values` but insists every value is an integer."""
        out = []
        for v in self.values(x, signed_flip):
            if isinstance(v, Fraction):
                if v.denominator != 1:
                    raise DivisibilityError(f"value {v} is not an integer")
                v = v.numerator
            out.append(v)
        return out


def sheffer_of(T: Triangle) -> ShefferSeq:
    return ShefferSeq(T)


def eval(S: ShefferSeq, n: int, x: Number):  # noqa: A001 - mirrors the operation name
    return S.eval(n, x)


# generating-function checks

def _qq_array(R: RiordanArray) -> RiordanArray:
    return R.change_ring(QQ)


def gf_check(R: RiordanArray, x: Number, depth: int, gf: Optional[Series] = None,
             name: str = "sheffer-gf") -> IdentityReport:
    """Compare ``[z^n] d/(1 - x h)`` (or a supplied ``gf``) with ``p_n(x)`` from the rows."""
    xq = Fraction(x)
    if gf is None:
        A = _qq_array(R).truncate(depth)
        gf = A.d / (Series.one(depth, QQ) - A.h * xq)
    S = sheffer_of(R.to_triangle(depth))
    cases = ((n, None, gf.coeff_at(n), S.eval(n, xq)) for n in range(depth + 1))
    return compare(name, depth, cases, array=R.name, x=x)


def gf_check_inverse(R: RiordanArray, x: Number, depth: int) -> IdentityReport:
    """``1/d(hbar) * 1/(1 - x hbar)`` against rows of the triangular inverse of ``R``."""
    xq = Fraction(x)
    A = _qq_array(R).truncate(depth)
    hbar = A.h.revert()
    one = Series.one(depth, QQ)
    gf = (one / A.d.compose(hbar)) / (one - hbar * xq)
    S = sheffer_of(R.to_triangle(depth).change_ring(QQ).inverse())
    cases = ((n, None, gf.coeff_at(n), S.eval(n, xq)) for n in range(depth + 1))
    return compare("sheffer-gf-inverse", depth, cases, array=R.name, x=x)


def shift_check(R: RiordanArray, rv: Number, x: Number, depth: int) -> IdentityReport:
    """``p_n^{R(r)}(x) = p_n^R(x + r)`` with ``R(r)`` built as a triangle product."""
    from .catalog import r_riordan_triangle

    lhs = sheffer_of(r_riordan_triangle(R, rv, depth))
    rhs = sheffer_of(R.to_triangle(depth))
    cases = ((n, None, lhs.eval(n, x), rhs.eval(n, x + rv)) for n in range(depth + 1))
    return compare("sheffer-shift", depth, cases, array=R.name, r=rv, x=x)


def catalan_r_sheffer_gf(rv: Number, x: Number, order: int) -> Series:
    """``c(z) / (1 - (x + r) z c(z))`` over QQ."""
    from .series import catalan_series

    c = catalan_series(order, QQ)
    return c / (Series.one(order, QQ) - c.shift_up(1) * Fraction(x + rv))


def catalan_r_inverse_sheffer_gf(rv: Number, x: Number, order: int) -> Series:
    """``(1 + (r-1) z) / (1 + (2r - x) z + (r^2 - (r-1) x) z^2)`` over QQ."""
    r, x = Fraction(rv), Fraction(x)
    z = Series.z(order, QQ)
    one = Series.one(order, QQ)
    num = one + z * (r - 1)
    den = one + z * (2 * r - x) + z.shift_up(1) * (r * r - (r - 1) * x)
    return num / den


def shapiro_inverse_sheffer_gf(x: Number, order: int) -> Series:
    """``1 / (1 - (x - 2) z + z^2)``."""
    z = Series.z(order, QQ)
    one = Series.one(order, QQ)
    return one / (one - z * Fraction(x - 2) + z.shift_up(1))


# Chebyshev polynomials of the second kind

def _padd(a: Sequence, b: Sequence) -> list:
    n = max(len(a), len(b))
    return [(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)]


def _pmul(a: Sequence, b: Sequence) -> list:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def _strip(p: list) -> list:
    while p and p[-1] == 0:
        p.pop()
    return p


def chebyshev_U(n: int) -> List[int]:
    """Coefficients of ``U_n`` from ``U_0 = 1, U_1 = 2x, U_n = 2x U_{n-1} - U_{n-2}``."""
    prev, cur = [1], [0, 2]
    if n == 0:
        return prev
    for _ in range(n - 1):
        prev, cur = cur, _strip(_padd(_pmul([0, 2], cur), [-c for c in prev]))
    return cur


def compose_poly(p: Sequence, q: Sequence) -> list:
    """``p(q(x))`` for ascending coefficient lists."""
    acc: list = []
    for c in reversed(p):
        acc = _padd(_pmul(acc, q), [c])
    return _strip(acc)


def chebyshev_bridge(n: int) -> List[int]:
    """``U_n((x - 2)/2)`` expanded over QQ; the result must be integral."""
    sub = compose_poly(chebyshev_U(n), [Fraction(-1), Fraction(1, 2)])
    out = []
    for c in sub:
        c = Fraction(c)
        if c.denominator != 1:
            raise DivisibilityError(f"U_{n}((x-2)/2) has non-integral coefficient {c}")
        out.append(c.numerator)
    return out


def three_term_polys(depth: int) -> List[List[int]]:
    """``p_0 = 1, p_1 = x - 2, p_n = (x - 2) p_{n-1} - p_{n-2}``."""
    ps = [[1], [-2, 1]]
    for _ in range(2, depth + 1):
        ps.append(_strip(_padd(_pmul([-2, 1], ps[-1]), [-c for c in ps[-2]])))
    return ps[: depth + 1]
