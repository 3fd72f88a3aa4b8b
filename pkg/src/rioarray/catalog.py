"""Named arrays: generalized Pascal ``P(r)``, the Catalan triangles ``C`` and ``B``,
the one-parameter family ``R(r) = R P(r)`` and closed-form entry formulas.

A parameter value is an ``int``, a ``Fraction``, or the indeterminate :data:`R`
(a :class:`PolyR`); the ring of the resulting array follows the parameter.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Union

from .exact import QQ, ZZ, ZZ_R, PolyR, Ring, binomial, common_ring, exact_div, ring_of
from .riordan import RiordanArray, Triangle, group_mul
from .series import Series, catalan_series, catalan_series_sqrt

__all__ = [
    "R",
    "ParamValue",
    "DEFAULT_ORDER",
    "pascal",
    "pascal_entry",
    "r_riordan",
    "r_riordan_triangle",
    "catalan_C",
    "shapiro_B",
    "catalan_r",
    "ballot_entry",
    "shapiro_entry",
    "catalan_entry_inverse",
    "shapiro_entry_inverse",
    "cr_entry",
    "cr_inv_entry",
    "cr_inv_entry_nested",
    "cr_triangle",
    "cr_inv_triangle",
    "catalan_r_closed_form",
    "catalan_r_inverse_closed_form",
    "catalan_number",
]

#: the formal parameter ``r``
R = PolyR.r()

ParamValue = Union[int, Fraction, PolyR]

DEFAULT_ORDER = 30


def _param_ring(rv: ParamValue) -> Ring:
    return ring_of(rv)


def _pow(rv, e: int, ring: Ring):
    return ring.coerce(rv) ** e if e else ring.one


def pascal(rv: ParamValue = 1, order: int = DEFAULT_ORDER) -> RiordanArray:
    """``P(r) = (1/(1 - r z), z/(1 - r z))``."""
    ring = _param_ring(rv)
    one = Series.one(order, ring)
    p = one / (one - Series.z(order, ring) * rv)
    return RiordanArray(p, p.shift_up(1), f"pascal[{rv}]")


def pascal_entry(n: int, k: int, rv: ParamValue = 1):
    """``binom(n, k) r^(n-k)``."""
    ring = _param_ring(rv)
    if k > n:
        return ring.zero
    return ring.coerce(binomial(n, k)) * _pow(rv, n - k, ring)


def catalan_number(n: int) -> int:
    return exact_div(binomial(2 * n, n), n + 1)


def catalan_C(order: int = DEFAULT_ORDER, ring: Ring = ZZ) -> RiordanArray:
    """Aigner's triangle ``C = (c(z), z c(z))``."""
    c = catalan_series(order, ring)
    return RiordanArray(c, c.shift_up(1), "catalan")


def shapiro_B(order: int = DEFAULT_ORDER, ring: Ring = ZZ) -> RiordanArray:
    """Shapiro's triangle ``B = (c(z)^2, z c(z)^2)``."""
    c = catalan_series(order, ring)
    c2 = c * c
    return RiordanArray(c2, c2.shift_up(1), "shapiro")


def r_riordan(Rarr: RiordanArray, rv: ParamValue) -> RiordanArray:
    """``R(r) = R P(r)`` through the group law."""
    ring = common_ring(Rarr.ring, _param_ring(rv))
    out = group_mul(Rarr.change_ring(ring), pascal(ring.coerce(rv), Rarr.order))
    if Rarr.name:
        out = RiordanArray(out.d, out.h, f"{Rarr.name}[{rv}]")
    return out


def r_riordan_triangle(Rarr: RiordanArray, rv: ParamValue, depth: int) -> Triangle:
    """``R(r)`` as the finite product of the two triangles, entry by entry."""
    P = Triangle.from_function(lambda n, k: pascal_entry(n, k, rv), depth, _param_ring(rv))
    return Rarr.to_triangle(depth) @ P


def catalan_r(rv: ParamValue, order: int = DEFAULT_ORDER) -> RiordanArray:
    return r_riordan(catalan_C(order), rv)


# closed-form entries; every exact_div here doubles as an integrality check

def ballot_entry(n: int, k: int) -> int:
    """``C[n, k] = (k+1)/(n+1) binom(2n-k, n)``."""
    if k > n or k < 0:
        return 0
    return exact_div((k + 1) * binomial(2 * n - k, n), n + 1)


def shapiro_entry(n: int, k: int) -> int:
    """``B[n, k] = (k+1)/(n+1) binom(2n+2, n-k)``."""
    if k > n or k < 0:
        return 0
    return exact_div((k + 1) * binomial(2 * n + 2, n - k), n + 1)


def catalan_entry_inverse(n: int, k: int) -> int:
    """``C^-1[n, k] = (-1)^(n-k) binom(k+1, n-k)``."""
    if k > n:
        return 0
    return (-1) ** (n - k) * binomial(k + 1, n - k)


def shapiro_entry_inverse(n: int, k: int) -> int:
    """``B^-1[n, k] = (-1)^(n-k) binom(n+k+1, n-k)``."""
    if k > n:
        return 0
    return (-1) ** (n - k) * binomial(n + k + 1, n - k)


def cr_entry(n: int, k: int) -> PolyR:
    """Entry of ``C(r)`` as a polynomial in ``r`` of degree ``n - k``."""
    if k > n:
        return PolyR()
    return PolyR(
        exact_div((i + k + 1) * binomial(2 * n - i - k, n), n + 1) * binomial(i + k, k)
        for i in range(n - k + 1)
    )


def cr_inv_entry(n: int, k: int) -> PolyR:
    """Entry of ``C(r)^-1``; ``(-1)^(n-k)`` times a polynomial with non-negative coefficients.

    Expanding ``[z^(n-k)] ((1+rz) - z)^(k+1) / (1+rz)^(2k+2)`` gives
    ``(-1)^(n-k) sum_i binom(k+1, n-k-i) binom(n, i) r^i``.
    """
    if k > n:
        return PolyR()
    sign = (-1) ** (n - k)
    return PolyR(sign * binomial(k + 1, n - k - i) * binomial(n, i) for i in range(n - k + 1))


def cr_inv_entry_nested(n: int, k: int) -> PolyR:
    """The nested-binomial sum ``(-1)^(n-k) sum_i binom(i+k+1, n-i-k) binom(i+k, k) r^i``.

    Agrees with :func:`cr_inv_entry` only for ``n - k <= 2``; first
    disagreement at ``(3, 0)``. Kept so the verification engine can report it.
    """
    if k > n:
        return PolyR()
    sign = (-1) ** (n - k)
    return PolyR(
        sign * binomial(i + k + 1, n - i - k) * binomial(i + k, k)
        for i in range(n - k + 1)
    )


def cr_triangle(depth: int) -> Triangle:
    return Triangle.from_function(cr_entry, depth, ZZ_R, "catalan[r]")


def cr_inv_triangle(depth: int) -> Triangle:
    return Triangle.from_function(cr_inv_entry, depth, ZZ_R, "inv(catalan[r])")


def catalan_r_closed_form(rv: Union[int, Fraction], order: int = DEFAULT_ORDER) -> RiordanArray:
    """``C(r)`` from the square-root closed form, over QQ at a specialized ``r``.

    Both components share the numerator ``1 - 2rz - sqrt(1 - 4z)``; the
    denominator ``1 - r + r^2 z`` has constant term ``1 - r`` and for ``r = 1``
    a factor ``z`` is cancelled against the numerator first.
    """
    r = QQ.coerce(rv)
    m = order + 2
    one = Series.one(m, QQ)
    z = Series.z(m, QQ)
    num = one - z * (2 * r) - (one - z * 4).sqrt()
    den = one * (1 - r) + z * (r * r)
    v = den.valuation()
    if v:
        num, den = num.shift_down(v), den.shift_down(v)
    h = (num / den) / 2
    d = h.shift_down(1)
    return RiordanArray(d.truncate(order), h.truncate(order), f"catalan[{rv}]")


def catalan_r_inverse_closed_form(rv: ParamValue, order: int = DEFAULT_ORDER) -> RiordanArray:
    """``C(r)^-1 = ((1+(r-1)z)/(1+rz)^2, (z+(r-1)z^2)/(1+rz)^2)``."""
    ring = _param_ring(rv)
    r = ring.coerce(rv)
    one = Series.one(order, ring)
    z = Series.z(order, ring)
    num = one + z * (r - 1)
    den = (one + z * r) ** 2
    d = num / den
    return RiordanArray(d, d.shift_up(1), f"inv(catalan[{rv}])")


def catalan_sqrt_C(order: int = DEFAULT_ORDER) -> RiordanArray:
    """``C`` built from ``c(z) = (1 - sqrt(1-4z))/(2z)`` over QQ."""
    c = catalan_series_sqrt(order)
    return RiordanArray(c, c.shift_up(1), "catalan")
