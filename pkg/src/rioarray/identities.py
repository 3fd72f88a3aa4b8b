"""Verification engine: each identity is a depth-parameterized exact check.

Every ``check_*`` function returns an :class:`IdentityReport`. Cases are
visited in lexicographic ``(n, k)`` order and the first mismatch is recorded,
so a failing report always names the smallest counterexample.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Callable, Dict, Iterator, List, Sequence

from .catalog import (
    R,
    ballot_entry,
    catalan_C,
    catalan_number,
    catalan_r,
    catalan_r_closed_form,
    catalan_r_inverse_closed_form,
    catalan_sqrt_C,
    cr_entry,
    cr_inv_entry,
    cr_inv_entry_nested,
    r_riordan_triangle,
    shapiro_B,
    shapiro_entry,
    shapiro_entry_inverse,
)
from .exact import QQ, ZZ_R, binomial, poly_eval
from .report import Failure, IdentityReport, compare
from .riordan import Triangle
from .series import Series, catalan_series, catalan_series_sqrt
from .sheffer import (
    catalan_r_inverse_sheffer_gf,
    catalan_r_sheffer_gf,
    chebyshev_bridge,
    gf_check,
    shapiro_inverse_sheffer_gf,
    sheffer_of,
    shift_check,
    three_term_polys,
)

__all__ = [
    "IdentityReport",
    "Failure",
    "FibGen",
    "fib",
    "DEFAULT_DEPTH",
    "SYMBOLIC_DEPTH",
    "check_ballot_formulas",
    "check_binomial_sum_nested",
    "check_binomial_sum_vandermonde",
    "check_row_sums_shift",
    "check_fibonacci_pair",
    "check_power_identity",
    "check_fib_power_identity",
    "check_fib_closed_forms",
    "check_shapiro_recurrence",
    "check_cr_entries",
    "check_cr_inverse_entries",
    "check_cr_inverse_nested",
    "check_specialization",
    "check_column_convolution",
    "check_degree_leading",
    "check_basis_relation",
    "check_chebyshev_bridge",
    "check_generating_functions",
    "check_shift",
    "check_closed_forms",
    "check_sequences",
    "run_all",
    "CHECKS",
]

DEFAULT_DEPTH = 30
# symbolic (ZZ[r]) checks are capped here
SYMBOLIC_DEPTH = 24


class FibGen:
    """Memoized Fibonacci numbers with ``F_1 = F_2 = 1`` (and ``F_0 = 0``)."""

    def __init__(self):
        self._memo = [0, 1]

    def __call__(self, n: int) -> int:
        if n < 0:
            raise ValueError("negative Fibonacci index")
        memo = self._memo
        while len(memo) <= n:
            memo.append(memo[-1] + memo[-2])
        return memo[n]

    __getitem__ = __call__


fib = FibGen()


def _lower(depth: int) -> Iterator:
    for n in range(depth + 1):
        for k in range(n + 1):
            yield n, k


# closed forms for C and B

def check_ballot_formulas(depth: int = DEFAULT_DEPTH) -> IdentityReport:
    """Ballot and Shapiro closed forms against ``[z^n] d h^k`` of ``C`` and ``B``."""
    C = catalan_C(depth).to_triangle(depth)
    B = shapiro_B(depth).to_triangle(depth)
    cases = ((n, k, (C[n, k], B[n, k]), (ballot_entry(n, k), shapiro_entry(n, k)))
             for n, k in _lower(depth))
    return compare("ballot", depth, cases)


def check_binomial_sum_nested(depth: int = DEFAULT_DEPTH) -> IdentityReport:
    """``binom(n+k+1, n-k) = sum_i binom(i+k+1, n-i-k) binom(i+k, k)``, taken as written."""
    cases = ((n, k, binomial(n + k + 1, n - k),
              sum(binomial(i + k + 1, n - i - k) * binomial(i + k, k) for i in range(n - k + 1)))
             for n, k in _lower(depth))
    return compare("binomial-sum", depth, cases)


def check_binomial_sum_vandermonde(depth: int = DEFAULT_DEPTH) -> IdentityReport:
    """``binom(n+k+1, n-k) = sum_i binom(k+1, n-k-i) binom(n, i)``: the value at r = 1 of
    the corrected inverse-entry formula."""
    cases = ((n, k, binomial(n + k + 1, n - k),
              sum(binomial(k + 1, n - k - i) * binomial(n, i) for i in range(n - k + 1)))
             for n, k in _lower(depth))
    return compare("binomial-sum-vandermonde", depth, cases)


def check_row_sums_shift(r: int, depth: int = DEFAULT_DEPTH) -> IdentityReport:
    """Row sums of ``C(r)`` equal column 0 of ``C(r+1)``, in scalar and matrix form."""
    A = catalan_r(r, depth).to_triangle(depth)
    A1 = catalan_r(r + 1, depth).to_triangle(depth)
    sums = A.row_sums()

    def cases():
        for n in range(depth + 1):
            lhs = sum(Fraction(i + k + 1, n + 1) * binomial(2 * n - i - k, n)
                      * binomial(i + k, k) * r ** i
                      for k in range(n + 1) for i in range(n - k + 1))
            rhs = sum(Fraction(i + 1, n + 1) * binomial(2 * n - i, n) * (r + 1) ** i
                      for i in range(n + 1))
            yield n, None, (lhs, sums[n]), (rhs, A1[n, 0])

    return compare("row-sums", depth, cases(), r=r)


# Fibonacci and power identities

def check_fibonacci_pair(depth: int = DEFAULT_DEPTH) -> IdentityReport:
    """``sum_k binom(k+1, n-k) = F_{n+2}``, ``sum_k C[n,k] (-1)^(n-k) F_{k+2} = 1``,
    and ``(-1)^n p_n^{C^-1}(-1) = F_{n+2}`` from the inverse triangle."""
    Cinv = sheffer_of(catalan_C(depth).inverse().to_triangle(depth))
    flipped = Cinv.values(-1, signed_flip=True)

    def cases():
        for n in range(depth + 1):
            s1 = sum(binomial(k + 1, n - k) for k in range(n + 1))
            s2 = sum(Fraction(k + 1, n + 1) * binomial(2 * n - k, n) * (-1) ** (n - k) * fib(k + 2)
                     for k in range(n + 1))
            yield n, None, (s1, s2, flipped[n]), (fib(n + 2), 1, fib(n + 2))

    return compare("fibonacci-pair", depth, cases())


def _known_inputs(x: int, n: int):
    if x == 2:
        return (1, 0, -1, 0)[n % 4]
    if x == 3:
        return (1, 1, 0, -1, -1, 0)[n % 6]
    if x == 4:
        return n + 1
    if x == 5:
        return fib(2 * n + 2)
    return None


def check_power_identity(x: int, depth: int = DEFAULT_DEPTH) -> IdentityReport:
    """``B (p_k^{B^-1}(x))_k = (x^n)_n``.

    For x = 2, 3, 4, 5 the input vector is also compared with its known form
    (period 4, period 6, n + 1, even-index Fibonacci), and for x = 4 the scalar
    form ``sum_k (k+1)^2/(n+1) binom(2n+2, n-k) = 4^n`` is checked too.
    """
    B = shapiro_B(depth)
    BT = B.to_triangle(depth)
    p = sheffer_of(B.inverse().to_triangle(depth)).values(x)
    out = BT.apply_vector(p)

    def cases():
        for n in range(depth + 1):
            lhs, rhs = [out[n]], [x ** n]
            known = _known_inputs(x, n)
            if known is not None:
                lhs.append(p[n])
                rhs.append(known)
            if x == 4:
                lhs.append(sum(Fraction((k + 1) ** 2, n + 1) * binomial(2 * n + 2, n - k)
                               for k in range(n + 1)))
                rhs.append(4 ** n)
            yield n, None, tuple(lhs), tuple(rhs)

    return compare("power", depth, cases(), x=x)


def check_fib_power_identity(depth: int = DEFAULT_DEPTH) -> IdentityReport:
    """``sum_k (k+1)/(n+1) binom(2n+2, n-k) F_{2k+2} = 5^n``."""
    cases = ((n, None,
              sum(Fraction(k + 1, n + 1) * binomial(2 * n + 2, n - k) * fib(2 * k + 2)
                  for k in range(n + 1)),
              5 ** n) for n in range(depth + 1))
    return compare("fib-power", depth, cases)


def check_fib_closed_forms(depth: int = DEFAULT_DEPTH) -> IdentityReport:
    """Even- and odd-index Fibonacci numbers as signed binomial sums in powers of -5."""
    def cases():
        for n in range(depth + 1):
            even = (-1) ** n * sum(
                (binomial(n + k + 2, n - k) - binomial(n + k + 1, n - k - 1)) * (-5) ** k
                for k in range(n + 1))
            odd = (-1) ** n * sum(
                (binomial(n + k + 2, n - k) - binomial(n + k, n - k - 2)) * (-5) ** k
                for k in range(n + 1))
            yield n, None, (even, odd), (fib(2 * n + 2), fib(2 * n + 1))

    return compare("fib-closed-forms", depth, cases())


def check_shapiro_recurrence(depth: int = DEFAULT_DEPTH) -> IdentityReport:
    """``B[n,k] = B[n-1,k-1] + 2 B[n-1,k] + B[n-1,k+1]``, missing entries read as 0."""
    B = shapiro_B(depth).to_triangle(depth)

    def b(n, k):
        return B[n, k] if 0 <= k <= n else 0

    cases = ((n, k, B[n, k], b(n - 1, k - 1) + 2 * b(n - 1, k) + b(n - 1, k + 1))
             for n, k in _lower(depth) if n >= 1)
    return compare("shapiro-recurrence", depth, cases)


# symbolic C(r) and its inverse

def check_cr_entries(depth: int = SYMBOLIC_DEPTH) -> IdentityReport:
    """Nested-sum entries of ``C(r)`` against ``C P(r)`` as a triangle product and via the group law."""
    prod = r_riordan_triangle(catalan_C(depth), R, depth)
    group = catalan_r(R, depth).to_triangle(depth)
    cases = ((n, k, (cr_entry(n, k),) * 2, (prod[n, k], group[n, k])) for n, k in _lower(depth))
    return compare("cr-entries", depth, cases)


def _symbolic_inverse(depth: int) -> Triangle:
    return Triangle.from_function(cr_entry, depth, ZZ_R).inverse()


def check_cr_inverse_entries(depth: int = SYMBOLIC_DEPTH) -> IdentityReport:
    """Vandermonde-form inverse entries against triangular inversion, the group
    inverse, and the closed form of ``C(r)^-1``."""
    inv = _symbolic_inverse(depth)
    grp = catalan_r(R, depth).inverse().to_triangle(depth)
    closed = catalan_r_inverse_closed_form(R, depth).to_triangle(depth)
    cases = ((n, k, (cr_inv_entry(n, k),) * 3, (inv[n, k], grp[n, k], closed[n, k]))
             for n, k in _lower(depth))
    return compare("cr-inverse", depth, cases)


def check_cr_inverse_nested(depth: int = SYMBOLIC_DEPTH) -> IdentityReport:
    """Nested-binomial inverse entries, taken as written, against triangular inversion."""
    inv = _symbolic_inverse(depth)
    cases = ((n, k, cr_inv_entry_nested(n, k), inv[n, k]) for n, k in _lower(depth))
    return compare("cr-inverse-nested", depth, cases)


def check_specialization(depth: int = SYMBOLIC_DEPTH, values: Sequence[int] = range(-3, 4)
                         ) -> IdentityReport:
    """Evaluating symbolic entries at ``v`` equals building ``C(v)`` directly."""
    tris = {v: catalan_r(v, depth).to_triangle(depth) for v in values}

    def cases():
        for n, k in _lower(depth):
            e = cr_entry(n, k)
            for v in values:
                yield n, k, poly_eval(e, v), tris[v][n, k]

    return compare("specialization", depth, cases(), values=list(values))


def check_column_convolution(depth: int = SYMBOLIC_DEPTH) -> IdentityReport:
    """Column ``k`` of ``C(r)`` is the ``(k+1)``-fold convolution of column 0."""
    T = catalan_r(R, depth).to_triangle(depth)
    col0 = Series(T.column(0), depth, ZZ_R)
    cases = []
    power = col0
    for k in range(depth + 1):
        if k:
            power = power * col0
        for n in range(k, depth + 1):
            cases.append((n, k, T[n, k], power.coeff_at(n - k)))
    cases.sort(key=lambda c: (c[0], c[1]))
    return compare("column-convolution", depth, iter(cases))


def check_degree_leading(depth: int = SYMBOLIC_DEPTH) -> IdentityReport:
    """``C(r)[n+1, 1]`` has degree n, constant term ``C_{n+1}``, leading coefficient n+1;
    ``C(r)[n, 0]`` is monic of degree n with constant term ``C_n``; inverse signs alternate."""
    T = catalan_r(R, depth).to_triangle(depth)

    def cases():
        for n in range(depth + 1):
            c0 = T[n, 0]
            lhs = [c0.degree, c0.coeff(0), c0.coeff(n)]
            rhs = [n, catalan_number(n), 1]
            if n + 1 <= depth:
                p = T[n + 1, 1]
                lhs += [p.degree, p.coeff(0), p.coeff(n)]
                rhs += [n, catalan_number(n + 1), n + 1]
            for k in range(n + 1):
                q = cr_inv_entry(n, k)
                lhs.append(all((-1) ** (n - k) * c >= 0 for c in q.coeffs))
                rhs.append(True)
            yield n, None, tuple(lhs), tuple(rhs)

    return compare("degree-leading", depth, cases())


# Sheffer-level checks

BASIS_ARRAYS = ("catalan", "shapiro", "catalan[2]", "catalan[-1]")


def _named(name: str, depth: int):
    if name == "catalan":
        return catalan_C(depth)
    if name == "shapiro":
        return shapiro_B(depth)
    if name.startswith("catalan[") and name.endswith("]"):
        return catalan_r(int(name[8:-1]), depth)
    raise KeyError(name)


def check_basis_relation(array: str = "shapiro", x=4, depth: int = DEFAULT_DEPTH
                         ) -> IdentityReport:
    """``sum_k R[n,k] p_k^{R^-1}(x) = x^n`` with the inverse from the group law."""
    A = _named(array, depth)
    p = sheffer_of(A.inverse().to_triangle(depth)).values(x)
    out = A.to_triangle(depth).apply_vector(p)
    cases = ((n, None, out[n], x ** n) for n in range(depth + 1))
    return compare("basis", depth, cases, array=array, x=x)


def check_chebyshev_bridge(depth: int = DEFAULT_DEPTH) -> IdentityReport:
    """Rows of ``B^-1`` = ``U_n((x-2)/2)`` = three-term recursion = signed binomial formula."""
    inv = shapiro_B(depth).inverse().to_triangle(depth)
    rec = three_term_polys(depth)

    def cases():
        for n in range(depth + 1):
            row = list(inv.rows[n])
            explicit = [shapiro_entry_inverse(n, k) for k in range(n + 1)]
            yield n, None, (row, row, row), (chebyshev_bridge(n), rec[n], explicit)

    return compare("chebyshev", depth, cases())


GF_XS = (-2, -1, 0, Fraction(1, 2), 2, 3, 4, 5)
GF_RS = (-1, 0, 1, 2, Fraction(1, 2))


def check_generating_functions(depth: int = DEFAULT_DEPTH, xs=GF_XS, rs=GF_RS) -> IdentityReport:
    """Closed-form Sheffer generating functions of ``C(r)``, ``C(r)^-1`` and ``B^-1``
    against direct row evaluation; also the generic ``d/(1 - x h)``."""
    C = catalan_C(depth)
    B = shapiro_B(depth)
    rows = {}
    for r in rs:
        A = catalan_r(r, depth)
        rows[r] = (sheffer_of(A.to_triangle(depth)),
                   sheffer_of(A.to_triangle(depth).change_ring(QQ).inverse()))
    binv = sheffer_of(B.inverse().to_triangle(depth))

    def cases():
        for x in xs:
            for r in rs:
                direct, inverse = rows[r]
                g1 = catalan_r_sheffer_gf(r, x, depth)
                g2 = catalan_r_inverse_sheffer_gf(r, x, depth)
                for n in range(depth + 1):
                    yield n, None, (g1[n], g2[n]), (direct.eval(n, x), inverse.eval(n, x))
            g3 = shapiro_inverse_sheffer_gf(x, depth)
            for n in range(depth + 1):
                yield n, None, g3[n], binv.eval(n, x)
            for A in (C, B):
                rep = gf_check(A, x, depth)
                if not rep.passed:
                    f = rep.first_failure
                    yield f.n, None, f.lhs, f.rhs

    return compare("generating-functions", depth, cases(), xs=list(map(str, xs)),
                   rs=list(map(str, rs)))


def check_shift(depth: int = DEFAULT_DEPTH) -> IdentityReport:
    """``p_n^{R(r)}(x) = p_n^R(x + r)`` for ``C`` and ``B`` over a grid of r and x."""
    C, B = catalan_C(depth), shapiro_B(depth)

    def cases():
        for A in (C, B):
            for r in (-2, -1, 0, 1, 2, Fraction(1, 3)):
                for x in (-1, 0, 1, Fraction(2, 3)):
                    rep = shift_check(A, r, x, depth)
                    f = rep.first_failure
                    if f is not None:
                        yield f.n, None, f.lhs, f.rhs
                    else:
                        yield depth, None, True, True

    return compare("shift", depth, cases())


def check_closed_forms(depth: int = DEFAULT_DEPTH) -> IdentityReport:
    """Square-root closed form of ``C(r)`` at rational r against the group law;
    ``c(z)`` from the fixed point against the square-root formula;
    ``C(1) = B`` and ``C^-1 = (1 - z, z - z^2)``."""
    C = catalan_C(depth)

    def cases():
        yield 0, None, catalan_series(depth, QQ), catalan_series_sqrt(depth)
        yield 0, None, catalan_sqrt_C(depth).to_triangle(depth), C.to_triangle(depth).change_ring(QQ)
        yield 0, None, catalan_r(1, depth).to_triangle(depth), shapiro_B(depth).to_triangle(depth)
        inv = C.inverse()
        one, z = Series.one(depth), Series.z(depth)
        yield 0, None, (inv.d, inv.h), (one - z, z - z.shift_up(1))
        for r in (-2, -1, 0, 1, 2, 3, Fraction(1, 2), Fraction(-2, 3)):
            yield 0, None, catalan_r_closed_form(r, depth).to_triangle(depth), \
                catalan_r(r, depth).change_ring(QQ).to_triangle(depth)

    return compare("closed-forms", depth, cases())


def check_sequences(depth: int = DEFAULT_DEPTH) -> IdentityReport:
    """Initial terms: column 0 of ``C(2)`` and ``C(3)``; row sums of ``C`` are ``C_{n+1}``."""
    c2 = catalan_r(2, depth).to_triangle(depth).column(0)
    c3 = catalan_r(3, depth).to_triangle(depth).column(0)
    rs = catalan_C(depth).to_triangle(depth).row_sums()
    oracle2 = [sum(ballot_entry(n, k) * 2 ** k for k in range(n + 1)) for n in range(depth + 1)]
    oracle3 = [sum(ballot_entry(n, k) * 3 ** k for k in range(n + 1)) for n in range(depth + 1)]

    def cases():
        yield 0, None, (c2[:5], c3[:5]), ([1, 3, 10, 35, 126], [1, 4, 17, 74, 326])
        for n in range(depth + 1):
            yield n, None, (c2[n], c3[n], rs[n]), (oracle2[n], oracle3[n], catalan_number(n + 1))

    return compare("sequences", depth, cases())


# registry used by run_all and the command line

def _all_row_sums(depth):
    return [check_row_sums_shift(r, depth) for r in range(-2, 4)]


def _all_power(depth):
    return [check_power_identity(x, depth) for x in (2, 3, 4, 5)]


def _all_basis(depth):
    return [check_basis_relation(a, x, depth) for a in BASIS_ARRAYS for x in range(-3, 6)]


def _sym(depth):
    return min(depth, SYMBOLIC_DEPTH)


#: name -> (callable(depth, **params) -> list of reports, accepted params)
CHECKS: Dict[str, tuple] = {
    "ballot": (lambda depth, **_: [check_ballot_formulas(depth)], ()),
    "binomial-sum": (lambda depth, **_: [check_binomial_sum_nested(depth)], ()),
    "binomial-sum-vandermonde": (lambda depth, **_: [check_binomial_sum_vandermonde(depth)], ()),
    "row-sums": (lambda depth, r=None, **_: (
        _all_row_sums(depth) if r is None else [check_row_sums_shift(r, depth)]), ("r",)),
    "fibonacci-pair": (lambda depth, **_: [check_fibonacci_pair(depth)], ()),
    "power": (lambda depth, x=None, **_: (
        _all_power(depth) if x is None else [check_power_identity(x, depth)]), ("x",)),
    "fib-power": (lambda depth, **_: [check_fib_power_identity(depth)], ()),
    "fib-closed-forms": (lambda depth, **_: [check_fib_closed_forms(depth)], ()),
    "shapiro-recurrence": (lambda depth, **_: [check_shapiro_recurrence(depth)], ()),
    "cr-entries": (lambda depth, **_: [check_cr_entries(_sym(depth))], ()),
    "cr-inverse": (lambda depth, **_: [check_cr_inverse_entries(_sym(depth))], ()),
    "cr-inverse-nested": (lambda depth, **_: [check_cr_inverse_nested(_sym(depth))], ()),
    "specialization": (lambda depth, **_: [check_specialization(_sym(depth))], ()),
    "column-convolution": (lambda depth, **_: [check_column_convolution(_sym(depth))], ()),
    "degree-leading": (lambda depth, **_: [check_degree_leading(_sym(depth))], ()),
    "basis": (lambda depth, x=None, **_: (
        _all_basis(depth) if x is None
        else [check_basis_relation(a, x, depth) for a in BASIS_ARRAYS]), ("x",)),
    "chebyshev": (lambda depth, **_: [check_chebyshev_bridge(depth)], ()),
    "generating-functions": (lambda depth, x=None, **_: [check_generating_functions(
        depth, GF_XS if x is None else (x,))], ("x",)),
    "shift": (lambda depth, **_: [check_shift(depth)], ()),
    "closed-forms": (lambda depth, **_: [check_closed_forms(depth)], ()),
    "sequences": (lambda depth, **_: [check_sequences(depth)], ()),
}

#: command-line aliases for the two named lemmas
ALIASES = {"lemma3.5": "binomial-sum", "lemma3.6": "row-sums"}


def run_check(name: str, depth: int = DEFAULT_DEPTH, **params) -> List[IdentityReport]:
    name = ALIASES.get(name, name)
    fn, accepted = CHECKS[name]
    extra = set(k for k, v in params.items() if v is not None) - set(accepted)
    if extra:
        raise TypeError(f"check {name!r} takes no parameter(s) {sorted(extra)}")
    return fn(depth, **{k: v for k, v in params.items() if v is not None})


def run_all(depth: int = DEFAULT_DEPTH) -> List[IdentityReport]:
    """Every registered check in declaration order."""
    out: List[IdentityReport] = []
    for name in CHECKS:
        out.extend(run_check(name, depth))
    return out
