import pytest

from cohomone.polynomial import (
    InexactDivision,
    IntegerPolynomial,
    one_minus_power,
    one_plus_power,
    product,
)

P = IntegerPolynomial


def test_trailing_zeros_trimmed():
    assert P((1, 2, 0, 0)).coefficients == (1, 2)
    assert P((0, 0)).coefficients == ()
    assert P(()).degree == -1


def test_ring_operations():
    a = P((1, 2, 3))
    b = P((0, 1))
    assert (a + b).coefficients == (1, 3, 3)
    assert (a - a).is_zero()
    assert (a * b).coefficients == (0, 1, 2, 3)
    assert (-a).coefficients == (-1, -2, -3)
    assert a.scale(2).coefficients == (2, 4, 6)
    assert (a * P.zero()).is_zero()


def test_mul_matches_schoolbook_on_grid():
    polys = [P(c) for c in [(1,), (1, 1), (2, -1, 3), (0, 0, 1), (1, -1, 0, 2)]]
    for a in polys:
        for b in polys:
            prod = a * b
            for k in range(prod.degree + 1):
                expected = sum(a.coefficient(i) * b.coefficient(k - i) for i in range(k + 1))
                assert prod.coefficient(k) == expected


def test_divmod_reconstructs():
    dividends = [P((1, 1, 1, 1, 1)), P((3, 0, -2, 5)), P((0, 0, 0, 1))]
    divisors = [P((-1, 1)), P((1, 1)), P((1, 0, 1)), P((2, -1))]
    for a in dividends:
        for b in divisors:
            q, r = a.divmod(b)
            assert (q * b + r).coefficients == a.coefficients
            assert r.degree < b.degree


def test_divexact_and_remainder_error():
    a = one_minus_power(6)
    assert a.divexact(one_minus_power(2)).coefficients == (1, 0, 1, 0, 1)
    with pytest.raises(InexactDivision):
        P((1, 1, 1)).divexact(P((-1, 1)))


def test_division_requires_unit_leading_coefficient():
    with pytest.raises(ValueError):
        P((1, 2, 1)).divmod(P((1, 2)))
    with pytest.raises(ZeroDivisionError):
        P((1,)).divmod(P.zero())


def test_evaluation():
    p = P((1, -2, 3))
    assert p(0) == 1
    assert p(2) == 1 - 4 + 12
    assert P.zero()(5) == 0


def test_helpers():
    assert one_plus_power(3).coefficients == (1, 0, 0, 1)
    assert one_minus_power(2).coefficients == (1, 0, -1)
    assert product([]).coefficients == (1,)
    assert product([one_plus_power(1), one_plus_power(2)]).coefficients == (1, 1, 1, 1)
    assert P.monomial(3, -2).coefficients == (0, 0, 0, -2)
    assert P((1,)).shift(2).coefficients == (0, 0, 1)


def test_str_rendering():
    assert str(P(())) == "0"
    assert str(P((1, 1))) == "1 + t"
    assert str(P((0, 0, -1))) == "-t^2"
