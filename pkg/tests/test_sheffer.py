from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from rioarray.catalog import catalan_C, catalan_r, pascal, shapiro_B, shapiro_entry_inverse
from rioarray.exact import QQ, DivisibilityError, poly_eval
from rioarray.identities import fib
from rioarray.riordan import Triangle
from rioarray.series import Series
from rioarray.sheffer import (
    catalan_r_inverse_sheffer_gf, catalan_r_sheffer_gf, chebyshev_U, chebyshev_bridge,
    compose_poly, gf_check, gf_check_inverse, shapiro_inverse_sheffer_gf, sheffer_of, shift_check,
    three_term_polys,
)

D = 30
B = shapiro_B(D)
Binv = sheffer_of(B.inverse().to_triangle(D))
Cinv = sheffer_of(catalan_C(D).inverse().to_triangle(D))


def test_sheffer_of_rows():
    assert sheffer_of(B.to_triangle(4)).poly(2) == [5, 4, 1]
    I = sheffer_of(Triangle.identity(6))
    assert all(I.poly(n) == [0] * n + [1] for n in range(7))
    assert Binv.poly(2) == [3, -4, 1]


def test_eval_examples():
    assert Binv.values(4) == [n + 1 for n in range(D + 1)]
    assert Binv.eval(4, 5) == 55
    assert Cinv.values(-1, signed_flip=True) == [fib(n + 2) for n in range(D + 1)]
    with pytest.raises(IndexError):
        Binv.eval(D + 1, 0)


def test_integer_values_requires_integrality():
    assert Binv.integer_values(Fraction(5)) == Binv.values(5)
    with pytest.raises(DivisibilityError):
        Binv.integer_values(Fraction(1, 2))


@pytest.mark.parametrize("A", [catalan_C(12), shapiro_B(12), catalan_r(-2, 12)], ids=["C", "B", "C(-2)"])
def test_degree_monic_constant_term(A):
    S = sheffer_of(A.to_triangle(12))
    for n in range(13):
        p = S.poly(n)
        assert len(p) == n + 1 and p[-1] == 1
        assert S.eval(n, 0) == A.to_triangle(12)[n, 0]


def test_gf_check_examples():
    # x = 2 on B^-1: 1/(1 + z^2)
    assert list(shapiro_inverse_sheffer_gf(2, 8)) == [1, 0, -1, 0, 1, 0, -1, 0, 1]
    assert Binv.values(2)[:4] == [1, 0, -1, 0]
    rep = gf_check(catalan_C(D), 0, D)
    assert rep.passed and rep.checked == D + 1
    assert list(catalan_C(8).d) == [1, 1, 2, 5, 14, 42, 132, 429, 1430]
    for x in (-2, Fraction(1, 2), 3, 5):
        g = shapiro_inverse_sheffer_gf(x, D)
        assert [g[n] for n in range(D + 1)] == Binv.values(x)


def test_gf_check_reports_mismatch_as_data():
    wrong = Series.one(10, QQ)
    rep = gf_check(catalan_C(10), 1, 10, gf=wrong)
    assert not rep.passed
    assert (rep.first_failure.n, rep.first_failure.lhs, rep.first_failure.rhs) == (1, 0, 2)


@pytest.mark.parametrize("x", [-2, -1, 0, Fraction(1, 2), 2, 3, 4, 5])
def test_generating_functions(x):
    for A in (catalan_C(D), shapiro_B(D), catalan_r(2, D), pascal(3, D)):
        assert gf_check(A, x, D).passed
        assert gf_check_inverse(A, x, D).passed
    for r in (-1, 0, 1, 2, Fraction(1, 2)):
        A = catalan_r(r, D)
        S = sheffer_of(A.to_triangle(D))
        Si = sheffer_of(A.to_triangle(D).change_ring(QQ).inverse())
        g1, g2 = catalan_r_sheffer_gf(r, x, D), catalan_r_inverse_sheffer_gf(r, x, D)
        assert all(g1[n] == S.eval(n, x) and g2[n] == Si.eval(n, x) for n in range(D + 1))


def test_shift_examples():
    C = catalan_C(16)
    PB = sheffer_of(shapiro_B(16).to_triangle(16))
    PC = sheffer_of(C.to_triangle(16))
    assert [PB.eval(n, 0) for n in range(17)] == [PC.eval(n, 1) for n in range(17)]
    assert shift_check(C, 1, 0, 16).passed
    assert shift_check(C, 0, 3, 16).passed
    assert shift_check(C, 2, -1, 16).passed


@given(st.integers(-4, 4), st.fractions(-3, 3, max_denominator=5))
def test_shift_property(r, x):
    assert shift_check(shapiro_B(10), r, x, 10).passed


def test_chebyshev():
    assert chebyshev_U(0) == [1]
    assert chebyshev_U(1) == [0, 2]
    assert chebyshev_U(2) == [-1, 0, 4]
    assert chebyshev_bridge(2) == [3, -4, 1] == Binv.poly(2)
    assert compose_poly([-1, 0, 4], [-1, Fraction(1, 2)]) == [3, -4, 1]


def test_chebyshev_bridge_and_recursion():
    rec = three_term_polys(D)
    assert rec[0] == [1] and rec[1] == [-2, 1]
    for n in range(D + 1):
        assert Binv.poly(n) == chebyshev_bridge(n) == rec[n]
        assert Binv.poly(n) == [shapiro_entry_inverse(n, k) for k in range(n + 1)]


@pytest.mark.parametrize("A", [catalan_C(D), shapiro_B(D), catalan_r(2, D), catalan_r(-1, D)],
                         ids=["C", "B", "C(2)", "C(-1)"])
@pytest.mark.parametrize("x", [-3, 0, Fraction(2, 7), 5])
def test_inverse_basis(A, x):
    p = sheffer_of(A.inverse().to_triangle(D)).values(x)
    assert A.to_triangle(D).apply_vector(p) == [Fraction(x) ** n for n in range(D + 1)]
