"""One test group per acceptance criterion; the terminal summary prints a PASS/FAIL line for each."""
import random
from contextlib import contextmanager
from fractions import Fraction

import pytest

from rioarray.catalog import (
    R, ballot_entry, catalan_C, catalan_r, cr_entry, cr_inv_entry_nested, pascal, r_riordan_triangle,
    shapiro_B, shapiro_entry)
from rioarray.cli import main
from rioarray.exact import QQ, ZZ, ZZ_R, PolyR, binomial
from rioarray.identities import (
    check_chebyshev_bridge, check_fib_closed_forms, check_fibonacci_pair, check_fib_power_identity,
    check_generating_functions, check_power_identity)
from rioarray.riordan import Triangle, entry, group_inv, group_mul, identity
from rioarray.series import Series
from rioarray.sheffer import chebyshev_U, compose_poly, sheffer_of, shapiro_inverse_sheffer_gf

from conftest import random_array, record_criterion

DEPTH = 30
SYM_DEPTH = 24

TITLES = {
    1: "golden blocks of C, B and symbolic C(r)",
    2: "group and FTRA properties on random arrays",
    3: "closed-form entry formulas",
    4: "basis relation with inverse Sheffer values",
    5: "power, periodic and Fibonacci identity pack",
    6: "Chebyshev bridge and three-term recursion",
    7: "generating functions vs row evaluation",
    8: "sequence recomputations",
    9: "CLI contract",
}


@contextmanager
def criterion_part(number):
    ok = False
    try:
        yield
        ok = True
    finally:
        record_criterion(number, TITLES[number], ok)


# 1

C_BLOCK = [[1], [1, 1], [2, 2, 1], [5, 5, 3, 1], [14, 14, 9, 4, 1], [42, 42, 28, 14, 5, 1],
           [132, 132, 90, 48, 20, 6, 1]]
B_BLOCK = [[1], [2, 1], [5, 4, 1], [14, 14, 6, 1], [42, 48, 27, 8, 1], [132, 165, 110, 44, 10, 1],
           [429, 572, 429, 208, 65, 12, 1]]
CR_BLOCK = [
    ["1"],
    ["1+r", "1"],
    ["2+2r+r^2", "2+2r", "1"],
    ["5+5r+3r^2+r^3", "5+6r+3r^2", "3+3r", "1"],
    ["14+14r+9r^2+4r^3+r^4", "14+18r+12r^2+4r^3", "9+12r+6r^2", "4+4r", "1"],
]


def test_c1_golden_blocks():
    with criterion_part(1):
        assert [list(r) for r in catalan_C(6).to_triangle(6).rows] == C_BLOCK
        assert [list(r) for r in shapiro_B(6).to_triangle(6).rows] == B_BLOCK
        sym = catalan_r(R, 4).to_triangle(4)
        assert [[str(e) for e in row] for row in sym.rows] == CR_BLOCK


# 2

N_CASES = 100
ORDER = 16


def test_c2_random_group_and_ftra():
    with criterion_part(2):
        rng = random.Random(20261016)
        I = identity(ORDER)
        for _ in range(N_CASES):
            A, B, C = (random_array(rng, ORDER) for _ in range(3))
            TA, TB = A.to_triangle(ORDER), B.to_triangle(ORDER)
            assert group_mul(group_mul(A, B), C) == group_mul(A, group_mul(B, C))
            assert group_mul(A, I) == A == group_mul(I, A)
            assert group_mul(A, group_inv(A)) == I == group_mul(group_inv(A), A)
            assert group_mul(A, B).to_triangle(ORDER) == TA @ TB
            assert group_inv(A).to_triangle(ORDER) == TA.inverse()
            # revert / compose round trips
            hbar = A.h.revert()
            assert A.h.compose(hbar) == Series.z(ORDER) == hbar.compose(A.h)
            # entry definition vs the running-product triangle
            n, k = rng.randint(0, ORDER), rng.randint(0, ORDER)
            assert entry(A, n, k) == TA[n, k]
            # FTRA: matrix times vector equals d * g(h)
            g = Series([rng.randint(-9, 9) for _ in range(ORDER + 1)], ORDER)
            assert TA.apply_vector(list(g.coeffs)) == list((A.d * g.compose(A.h)).coeffs)
        C, B = catalan_C(ORDER), shapiro_B(ORDER)
        assert group_mul(C, pascal(1, ORDER)) == B
        z = Series.z(ORDER)
        one = Series.one(ORDER)
        inv = group_inv(C)
        assert inv.d == one - z and inv.h == z - z * z


# 3

def test_c3_ballot_and_shapiro_formulas():
    with criterion_part(3):
        CT, BT = catalan_C(DEPTH).to_triangle(DEPTH), shapiro_B(DEPTH).to_triangle(DEPTH)
        for n in range(DEPTH + 1):
            for k in range(n + 1):
                assert ballot_entry(n, k) == CT[n, k]
                assert shapiro_entry(n, k) == BT[n, k]


def test_c3_cr_entry_formula():
    with criterion_part(3):
        sym = r_riordan_triangle(catalan_C(SYM_DEPTH), R, SYM_DEPTH)
        for n in range(SYM_DEPTH + 1):
            for k in range(n + 1):
                assert cr_entry(n, k) == sym[n, k]


def _first_inverse_mismatch(depth):
    inv = r_riordan_triangle(catalan_C(depth), R, depth).inverse()
    for n in range(depth + 1):
        for k in range(n + 1):
            if cr_inv_entry_nested(n, k) != inv[n, k]:
                return n, k, cr_inv_entry_nested(n, k), inv[n, k]
    return None


def test_c3_cr_inverse_entry_formula():
    """The nested-binomial entry formula for C(r)^-1 against symbolic triangular inversion.

    Known to disagree from (3, 0) on: the formula gives -r-3r^2-r^3 where the
    inverse has -3r^2-r^3. The corrected form is tested in test_catalog.
    """
    with criterion_part(3):
        assert _first_inverse_mismatch(SYM_DEPTH) is None


# 4

BASIS = {
    "C": lambda d: catalan_C(d),
    "B": lambda d: shapiro_B(d),
    "C(2)": lambda d: catalan_r(2, d),
    "C(-1)": lambda d: catalan_r(-1, d),
}


@pytest.mark.parametrize("name", list(BASIS))
def test_c4_basis_relation(name):
    with criterion_part(4):
        A = BASIS[name](DEPTH)
        T = A.to_triangle(DEPTH)
        S = sheffer_of(T.inverse())
        for x in range(-3, 6):
            assert T.apply_vector(S.values(x)) == [x ** n for n in range(DEPTH + 1)]


# 5

def _fib(n, memo={0: 0, 1: 1}):
    if n not in memo:
        memo[n] = _fib(n - 1) + _fib(n - 2)
    return memo[n]


def test_c5_power_and_periodic():
    with criterion_part(5):
        B = shapiro_B(DEPTH).to_triangle(DEPTH)
        BI = sheffer_of(B.inverse())
        assert B.apply_vector([n + 1 for n in range(DEPTH + 1)]) == [4 ** n for n in range(DEPTH + 1)]
        assert BI.values(4) == [n + 1 for n in range(DEPTH + 1)]
        assert BI.values(2) == [(1, 0, -1, 0)[n % 4] for n in range(DEPTH + 1)]
        assert BI.values(3) == [(1, 1, 0, -1, -1, 0)[n % 6] for n in range(DEPTH + 1)]
        assert B.apply_vector(BI.values(3)) == [3 ** n for n in range(DEPTH + 1)]
        for n in range(DEPTH + 1):
            assert sum(Fraction((k + 1) ** 2, n + 1) * binomial(2 * n + 2, n - k)
                       for k in range(n + 1)) == 4 ** n
        for x in (2, 3, 4, 5):
            assert check_power_identity(x, DEPTH).passed


def test_c5_fibonacci():
    with criterion_part(5):
        B = shapiro_B(DEPTH).to_triangle(DEPTH)
        assert B.apply_vector([_fib(2 * n + 2) for n in range(DEPTH + 1)]) == [5 ** n for n in range(DEPTH + 1)]
        C = catalan_C(DEPTH).to_triangle(DEPTH)
        flipped = sheffer_of(C.inverse()).values(-1, signed_flip=True)
        assert flipped == [_fib(n + 2) for n in range(DEPTH + 1)]
        assert [sum(binomial(k + 1, n - k) for k in range(n + 1)) for n in range(DEPTH + 1)] == flipped
        for report in (check_fibonacci_pair(DEPTH), check_fib_power_identity(DEPTH),
                       check_fib_closed_forms(DEPTH)):
            assert report.passed, report.line()


# 6

def test_c6_chebyshev():
    with criterion_part(6):
        inv = sheffer_of(shapiro_B(DEPTH).to_triangle(DEPTH).inverse())
        for n in range(DEPTH + 1):
            u = compose_poly(chebyshev_U(n), [Fraction(-1), Fraction(1, 2)])
            assert u == inv.poly(n)
        p_prev, p = [1], [-2, 1]
        assert inv.poly(0) == p_prev and inv.poly(1) == p
        for n in range(2, DEPTH + 1):
            nxt = [0] * (n + 1)
            for i, c in enumerate(p):
                nxt[i + 1] += c
                nxt[i] -= 2 * c
            for i, c in enumerate(p_prev):
                nxt[i] -= c
            assert inv.poly(n) == nxt
            p_prev, p = p, nxt
        assert check_chebyshev_bridge(DEPTH).passed


# 7

XS = (-2, -1, 0, Fraction(1, 2), 2, 3, 4, 5)


def test_c7_generating_functions():
    with criterion_part(7):
        inv = sheffer_of(shapiro_B(DEPTH).to_triangle(DEPTH).inverse())
        for x in XS:
            gf = shapiro_inverse_sheffer_gf(x, DEPTH)
            assert list(gf.coeffs) == inv.values(x)
        assert check_generating_functions(DEPTH).passed


# 8

def test_c8_sequences():
    with criterion_part(8):
        col = catalan_r(2, DEPTH).to_triangle(DEPTH).column(0)
        assert col[:5] == [1, 3, 10, 35, 126]
        assert col == [binomial(2 * n + 1, n) for n in range(DEPTH + 1)]
        for r in range(-2, 4):
            sums = r_riordan_triangle(catalan_C(DEPTH), r, DEPTH).row_sums()
            nxt = r_riordan_triangle(catalan_C(DEPTH), r + 1, DEPTH).column(0)
            assert sums == nxt


# 9

EXAMPLES = [
    (["table", "catalan", "--depth", "6"],
     "  1\n  1   1\n  2   2  1\n  5   5  3  1\n 14  14  9  4  1\n 42  42 28 14  5 1\n132 132 90 48 20 6 1\n"),
    (["table", "inv(shapiro)", "--depth", "4"],
     " 1\n-2   1\n 3  -4  1\n-4  10 -6  1\n 5 -20 21 -8 1\n"),
    (["sequence", "shapiro", "--apply", "1,2,3,4,5,6,7", "--depth", "6"], "1 4 16 64 256 1024 4096\n"),
    (["sequence", "catalan", "--row-sums", "--depth", "5"], "1 2 5 14 42 132\n"),
    (["sheffer", "inv(shapiro)", "--x", "5", "--depth", "5"], "1 3 8 21 55 144\n"),
    (["sheffer", "inv(shapiro)", "--x", "2", "--depth", "7"], "1 0 -1 0 1 0 -1 0\n"),
    (["sheffer", "inv(catalan)", "--x", "-1", "--signed-flip", "--depth", "5"], "1 2 3 5 8 13\n"),
]


@pytest.mark.parametrize("argv,expected", EXAMPLES, ids=[" ".join(a[:2]) for a, _ in EXAMPLES])
def test_c9_documented_outputs(capsys, argv, expected):
    with criterion_part(9):
        assert main(argv) == 0
        assert capsys.readouterr().out == expected


def test_c9_symbolic_json_and_column(capsys):
    import json

    with criterion_part(9):
        assert main(["table", "catalan[r]", "--depth", "4", "--format", "json"]) == 0
        rows = json.loads(capsys.readouterr().out)["rows"]
        assert [int(c) for c in rows[4][0]] == [14, 14, 9, 4, 1]
        assert main(["sequence", "catalan[2]", "--column", "0", "--depth", "5"]) == 0
        assert capsys.readouterr().out.startswith("1 3 10 35 126 ")


@pytest.mark.parametrize("argv", [["verify", "power", "--x", "4", "--depth", "20"],
                                  ["verify", "lemma3.6", "--r", "7", "--depth", "20"],
                                  ["verify", "all", "--depth", "30"]],
                         ids=["power", "row-sums", "all"])
def test_c9_verify_exit_codes(capsys, argv):
    with criterion_part(9):
        code = main(argv)
        out = capsys.readouterr().out
        assert code == 0, out
