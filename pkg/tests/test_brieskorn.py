import sympy
import pytest

from cohomone.brieskorn import (
    BrieskornParams,
    GradedAbelianGroup,
    HomologyEntry,
    delta_at_one,
    delta_poly,
    homology,
    rational_sphere_gate,
)
from cohomone.errors import InvalidParams, Unsupported


def oracle_delta(m: int, d: int):
    """Monodromy polynomial straight from the product over d-th roots of unity.

    Delta(t) = prod_{w^d = 1, w != 1} (t - w (-1)^m), assembled as the
    resultant of x^(d-1) + ... + 1 (whose roots are exactly those w)
    against t - (-1)^m x.  Independent of the package's division route.
    """
    t, x = sympy.symbols("t x")
    cyclotomic_like = sum(x**i for i in range(d))
    sign = (-1) ** m
    res = sympy.resultant(cyclotomic_like, t - sign * x, x)
    poly = sympy.Poly(sympy.expand(res), t)
    return [int(c) for c in reversed(poly.all_coeffs())]


def test_delta_poly_examples():
    assert delta_poly(BrieskornParams(4, 3)).as_list() == [1, 1, 1]
    assert delta_poly(BrieskornParams(5, 2)).as_list() == [-1, 1]
    assert delta_poly(BrieskornParams(4, 1)).as_list() == [1]
    assert delta_poly(BrieskornParams(6, 1)).as_list() == [1]


def test_delta_poly_against_root_product_oracle():
    for m in range(3, 11):
        for d in range(1, 13):
            assert delta_poly(BrieskornParams(m, d)).as_list() == oracle_delta(m, d), (m, d)


def test_delta_poly_degree():
    for m in (3, 4, 5):
        for d in (1, 2, 7, 12):
            assert delta_poly(BrieskornParams(m, d)).degree == d - 1


@pytest.mark.parametrize(
    "m, d, expected",
    [(4, 5, 5), (5, 4, 0), (5, 7, 1), (3, 2, 0), (6, 50, 50), (9, 9, 1)],
)
def test_delta_at_one_closed_form(m, d, expected):
    assert delta_at_one(BrieskornParams(m, d)) == expected


def test_delta_at_one_matches_polynomial_on_grid():
    for m in range(3, 11):
        for d in range(1, 51):
            p = BrieskornParams(m, d)
            assert delta_poly(p)(1) == delta_at_one(p), (m, d)


def entries(m, d):
    return [(e.degree, e.free_rank, e.torsion) for e in homology(BrieskornParams(m, d)).entries]


def test_homology_examples():
    assert entries(4, 5) == [(0, 1, ()), (3, 0, (5,)), (7, 1, ())]
    # m odd, d even: the S^(m-1) x S^m pattern
    assert entries(3, 2) == [(0, 1, ()), (2, 1, ()), (3, 1, ()), (5, 1, ())]
    # d = 1 is the sphere
    assert entries(5, 1) == [(0, 1, ()), (9, 1, ())]
    assert entries(4, 1) == [(0, 1, ()), (7, 1, ())]
    # m odd, d odd: homotopy sphere
    assert entries(5, 7) == [(0, 1, ()), (9, 1, ())]


def test_homology_middle_order_matches_delta():
    for m in range(3, 9):
        for d in range(1, 30):
            p = BrieskornParams(m, d)
            h = homology(p)
            value = delta_at_one(p)
            if value == 0:
                assert h.free_rank(m - 1) == 1 and h.free_rank(m) == 1
            elif value == 1:
                assert h.entry(m - 1) is None
            else:
                assert h.torsion(m - 1) == (value,)


def test_connectivity_no_low_entries():
    for m in range(3, 9):
        for d in (1, 2, 3, 10):
            h = homology(BrieskornParams(m, d))
            for e in h.entries:
                assert e.degree == 0 or e.degree >= m - 1


def test_rational_sphere_gate():
    for m in range(3, 9):
        for d in range(1, 20):
            p = BrieskornParams(m, d)
            assert homology(p).is_rational_sphere(p.sphere_dim) == rational_sphere_gate(p)
            assert rational_sphere_gate(p) == (m % 2 == 0 or d % 2 == 1)


def test_param_validation():
    with pytest.raises(Unsupported):
        BrieskornParams(2, 5)
    with pytest.raises(InvalidParams):
        BrieskornParams(4, 0)


def test_graded_group_shape_rules():
    with pytest.raises(InvalidParams):
        GradedAbelianGroup((HomologyEntry(3, 1), HomologyEntry(2, 1)))
    with pytest.raises(InvalidParams):
        HomologyEntry(1, 0, ())
    with pytest.raises(InvalidParams):
        HomologyEntry(1, 1, (1,))
