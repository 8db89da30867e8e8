import sympy as sp
import pytest

from cohomone.catalog import default_catalog
from cohomone.errors import InvalidEmbedding, Unsupported
from cohomone.lie_catalog import (
    GroupType,
    NamedEmbedding,
    degrees,
    injective_rank_map,
    is_declared_injective,
    parse_group,
)
from cohomone.rational_homotopy import (
    HomogeneousSpaceModel,
    euler_characteristic,
    hilbert_series,
    odd_product_poincare,
    quotient_homotopy,
)


def space(embedding_id):
    return HomogeneousSpaceModel.of(default_catalog().embedding(embedding_id))


def identity_space(expr):
    g = parse_group(expr)
    emb = NamedEmbedding(f"id-{expr}", g, g, injective_rank_map(g), frozenset({"identity"}))
    return HomogeneousSpaceModel.of(emb)


# -- quotient homotopy ---------------------------------------------------------


def test_quotient_homotopy_examples():
    qh = quotient_homotopy(space("su6-sp3"))
    assert (qh.odd_degrees, qh.even_degrees, qh.heuristic) == ((5, 9), (), False)

    qh = quotient_homotopy(space("spin8-g2"))
    assert (qh.odd_degrees, qh.even_degrees) == ((7, 7), ())

    qh = quotient_homotopy(identity_space("Sp(3)"))
    assert qh.odd_degrees == () and qh.even_degrees == () and not qh.heuristic

    qh = quotient_homotopy(space("t2-in-su3"))
    assert (qh.odd_degrees, qh.even_degrees) == ((3, 5), (2, 2))


def test_quotient_homotopy_heuristic_flag():
    g, h = parse_group("SU(4)"), parse_group("SU(2)")
    undeclared = NamedEmbedding("su2-in-su4-bare", g, h)
    qh = quotient_homotopy(HomogeneousSpaceModel.of(undeclared))
    assert qh.heuristic
    assert qh.odd_degrees == (5, 7)  # maximal-rank default kills degree 3

    declared = NamedEmbedding("su2-in-su4-decl", g, h, ((3, 1),))
    assert not quotient_homotopy(HomogeneousSpaceModel.of(declared)).heuristic


def test_quotient_homotopy_torus_circle_shifts_to_degree_two():
    qh = quotient_homotopy(space("t2-in-sp2"))
    assert qh.even_degrees == (2, 2)
    assert qh.odd_degrees == (3, 7)


def test_dimension_bookkeeping_over_catalog():
    # sum(odd) - sum(even - 1) equals dim G/H for every shipped inclusion
    # with fully declared ranks
    for emb in default_catalog().embeddings():
        sp_model = HomogeneousSpaceModel.of(emb)
        qh = quotient_homotopy(sp_model)
        if qh.heuristic:
            continue
        assert qh.formal_dimension == sp_model.dimension, emb.id


def test_injective_pairs_have_no_even_part():
    for emb in default_catalog().embeddings():
        if not is_declared_injective(emb):
            continue
        qh = quotient_homotopy(HomogeneousSpaceModel.of(emb))
        assert qh.even_degrees == (), emb.id
        assert len(qh.odd_degrees) == emb.ambient.rank - emb.subgroup.rank, emb.id


def test_declared_rank_bound_error():
    # over-declared ranks are rejected as soon as the record is built
    with pytest.raises(InvalidEmbedding):
        NamedEmbedding("overdeclared", parse_group("SU(3)"), parse_group("SU(2)"), ((5, 1),))


# -- Hilbert series --------------------------------------------------------------


def sympy_series(g: GroupType, h: GroupType):
    t = sp.symbols("t")
    num = sp.prod([1 - t ** (d + 1) for d in degrees(g)])
    den = sp.prod([1 - t ** (e + 1) for e in degrees(h)])
    quotient = sp.cancel(num / den)
    poly = sp.Poly(quotient, t)
    return list(reversed(poly.all_coeffs()))


@pytest.mark.parametrize(
    "embedding_id, expected",
    [
        ("t2-in-su3", [1, 0, 2, 0, 2, 0, 1]),
        ("t2-in-sp2", [1, 0, 2, 0, 2, 0, 2, 0, 1]),
        ("sp1cubed-in-sp3", [1, 0, 0, 0, 2, 0, 0, 0, 2, 0, 0, 0, 1]),
        ("spin8-in-f4", [1] + [0] * 7 + [2] + [0] * 7 + [2] + [0] * 7 + [1]),
        ("su3-kplus-u2", [1, 0, 1, 0, 1]),
    ],
)
def test_hilbert_series_frozen_values(embedding_id, expected):
    assert hilbert_series(space(embedding_id)).as_list() == expected


def test_hilbert_series_identity_quotient():
    assert hilbert_series(identity_space("Spin(8)")).as_list() == [1]


def test_hilbert_series_against_sympy_oracle():
    for emb in default_catalog().embeddings():
        if emb.subgroup.rank != emb.ambient.rank:
            continue
        computed = hilbert_series(HomogeneousSpaceModel.of(emb)).as_list()
        assert computed == sympy_series(emb.ambient, emb.subgroup), emb.id


def test_hilbert_series_top_degree_is_quotient_dimension():
    for emb in default_catalog().embeddings():
        if emb.subgroup.rank != emb.ambient.rank:
            continue
        model = HomogeneousSpaceModel.of(emb)
        assert hilbert_series(model).degree == model.dimension, emb.id


def test_hilbert_series_needs_equal_rank():
    with pytest.raises(Unsupported):
        hilbert_series(space("su6-sp3"))


def test_hilbert_series_rejects_inconsistent_pair():
    # equal rank, but the division leaves a remainder: bad inclusion data
    pretend = NamedEmbedding("fake-pair", parse_group("SU(4)"), parse_group("Sp(1)xSp(1)xSp(1)"))
    with pytest.raises(InvalidEmbedding):
        hilbert_series(HomogeneousSpaceModel.of(pretend))


# -- Euler characteristics ---------------------------------------------------------


def test_euler_characteristic_examples():
    assert euler_characteristic(space("t2-in-su3")) == 6
    assert euler_characteristic(space("t2-in-g2")) == 12
    assert euler_characteristic(space("su6-sp3")) == 0  # corank 2
    assert euler_characteristic(identity_space("G2")) == 1


def test_euler_matches_series_at_one_for_equal_rank_pairs():
    for emb in default_catalog().embeddings():
        if emb.subgroup.rank != emb.ambient.rank:
            continue
        model = HomogeneousSpaceModel.of(emb)
        assert hilbert_series(model)(1) == euler_characteristic(model), emb.id


# -- sphere-product Poincare polynomials ---------------------------------------------


def test_odd_product_poincare():
    assert odd_product_poincare([3, 4, 7]).as_list() == [1, 0, 0, 1, 1, 0, 0, 2, 0, 0, 1, 1, 0, 0, 1]
    assert odd_product_poincare([]).as_list() == [1]
    assert odd_product_poincare([3, 5]).as_list() == [1, 0, 0, 1, 0, 1, 0, 0, 1]


def test_space_model_checks_ambient():
    emb = default_catalog().embedding("t2-in-su3")
    with pytest.raises(InvalidEmbedding):
        HomogeneousSpaceModel(parse_group("SU(4)"), emb)
