"""The classification layer.

Queryable reproductions of the classification data: the corank-2 pair
table and its transitive-fiber filter, the five exceptional-fiber pairs,
the four-parameter seven-manifold family with its torsion arithmetic,
parameterized diagram factories (Brieskorn, tensor, seven-family), and
the diagram classifier that template-matches a validated diagram against
the shipped catalog and the structural family recognizers.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Sequence

from .catalog import Catalog, DiagramRecord, default_catalog
from .diagram import GroupDiagram, equivalent, validate
from .errors import InvalidDiagram, InvalidParams
from .lie_catalog import (
    GroupType,
    NamedEmbedding,
    SimpleGroupLabel,
    is_declared_injective,
    parse_group,
    special_orthogonal,
    special_unitary,
    spheres_acted_on,
    symplectic,
)
from .polynomial import IntegerPolynomial, one_plus_power
from .rational_homotopy import (
    HomogeneousSpaceModel,
    hilbert_series,
    quotient_homotopy,
)

_T1 = GroupType((), 1)
_T2 = GroupType((), 2)
_SU2 = special_unitary(2)
_TRIVIAL = GroupType()


# ---------------------------------------------------------------------------
# Seven-manifold family
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SevenFamilyParams:
    """Parameters of the S^3 x S^3 seven-manifold family; all = 1 mod 4."""

    p_minus: int
    q_minus: int
    p_plus: int
    q_plus: int

    def __post_init__(self) -> None:
        for name in ("p_minus", "q_minus", "p_plus", "q_plus"):
            value = getattr(self, name)
            if value % 4 != 1:
                raise InvalidParams(f"{name} = {value} is not congruent to 1 mod 4")


def seven_family_torsion(p: SevenFamilyParams) -> int:
    """r = |p-^2 q+^2 - p+^2 q-^2| / 8; the third homology group is Z/r (r > 0).

    The congruences make every square 1 mod 8, so the difference is
    divisible by 8 exactly.
    """
    diff = p.p_minus**2 * p.q_plus**2 - p.p_plus**2 * p.q_minus**2
    assert diff % 8 == 0, "difference of squares must be divisible by 8"
    return abs(diff) // 8


def realize_torsion(t: int) -> SevenFamilyParams:
    """Parameters with torsion exactly t: p+ = +-(2t+1), p- = +-(2t-1), q = 1.

    Exactly one sign of each of 2t+1 and 2t-1 is 1 mod 4.
    """
    if t < 1:
        raise InvalidParams(f"t must be positive, got {t}")

    def pick(v: int) -> int:
        return v if v % 4 == 1 else -v

    return SevenFamilyParams(pick(2 * t - 1), 1, pick(2 * t + 1), 1)


# ---------------------------------------------------------------------------
# Corank-2 pair table
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CorankTwoRow:
    """A simple corank-2 pair (G, L) whose quotient has two odd homotopy degrees."""

    group: GroupType
    subgroup: GroupType
    ell_minus: int
    total: int  # ell_minus + ell_plus
    ell_plus: int
    notes: tuple[str, ...]
    embedding_id: str
    family: str
    param: Optional[int]

    def __post_init__(self) -> None:
        if self.ell_plus != self.total - self.ell_minus or self.ell_plus < 0:
            raise InvalidParams(f"{self.embedding_id}: inconsistent degree columns")
        if self.ell_minus % 2 == 0:
            raise InvalidParams(f"{self.embedding_id}: ell_minus must be odd")


def enumerate_corank2(max_rank: int, catalog: Optional[Catalog] = None) -> list[CorankTwoRow]:
    """All catalogued (G simple, L simple or trivial, corank 2) pairs with
    rationally injective inclusion, with the two odd quotient degrees.
    """
    if max_rank < 2:
        raise InvalidParams("max_rank must be at least 2")
    catalog = catalog or default_catalog()
    rows: list[CorankTwoRow] = []
    for embedding, family, param in catalog.corank2_sources(max_rank):
        g, sub = embedding.ambient, embedding.subgroup
        if not g.is_simple():
            continue
        if not (sub.is_simple() or sub.is_trivial()):
            continue
        if g.rank - sub.rank != 2:
            continue
        if not is_declared_injective(embedding):
            continue
        qh = quotient_homotopy(HomogeneousSpaceModel.of(embedding))
        assert not qh.heuristic and not qh.even_degrees and len(qh.odd_degrees) == 2
        ell_minus, total = qh.odd_degrees
        notes = tuple(sorted(t for t in embedding.tags if t == "multiple" or t.startswith("m>=")))
        rows.append(
            CorankTwoRow(
                g, sub, ell_minus, total, total - ell_minus, notes, embedding.id, family, param
            )
        )
    rows.sort(key=lambda r: (r.group.dimension, str(r.group), r.subgroup.dimension, str(r.subgroup), r.family, r.param or 0))
    return rows


def table3_filter(rows: Sequence[CorankTwoRow]) -> list[CorankTwoRow]:
    """Rows whose subgroup acts transitively on a sphere of dimension ell_plus >= 1."""
    out = []
    for row in rows:
        if row.ell_plus < 1 or not row.subgroup.is_simple():
            continue
        if row.ell_plus in spheres_acted_on(row.subgroup):
            out.append(row)
    return out


# ---------------------------------------------------------------------------
# Exceptional-fiber pairs
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Case6Pair:
    group: GroupType
    isotropy: GroupType
    fiber_dim: int
    fiber_tag: str
    total_dim: int


def case6_pairs() -> list[Case6Pair]:
    """The five equal-rank pairs whose quotients appear as exceptional fibers."""
    return [
        Case6Pair(special_unitary(3), _T2, 2, "su3-mod-t2", 7),
        Case6Pair(symplectic(2), _T2, 2, "sp2-mod-t2", 9),
        Case6Pair(parse_group("G2"), _T2, 2, "g2-mod-t2", 13),
        Case6Pair(symplectic(3), _SU2 * _SU2 * _SU2, 4, "sp3-mod-sp1cubed", 13),
        Case6Pair(parse_group("F4"), special_orthogonal(8), 8, "f4-mod-spin8", 25),
    ]


# ---------------------------------------------------------------------------
# Classification outcomes
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ClassificationOutcome:
    """Tagged alternative naming the matched family, or a reasoned rejection."""

    kind: str
    description: Optional[str] = None
    m: Optional[int] = None
    d: Optional[int] = None
    index: Optional[int] = None
    params: Optional[SevenFamilyParams] = None
    torsion: Optional[int] = None
    reason: Optional[str] = None

    def __post_init__(self) -> None:
        if self.kind == "brieskorn":
            assert self.m is not None and self.d is not None
            if self.m % 2 and self.d % 2 == 0:
                raise InvalidParams("Brieskorn outcomes require m even or d odd")
        if self.kind == "seven-family" and not self.torsion:
            raise InvalidParams("seven-family outcomes require nonzero torsion order")

    @staticmethod
    def linear_sphere(description: str) -> "ClassificationOutcome":
        return ClassificationOutcome("linear-sphere", description=description)

    @staticmethod
    def brieskorn(m: int, d: int) -> "ClassificationOutcome":
        return ClassificationOutcome("brieskorn", m=m, d=d)

    @staticmethod
    def wu() -> "ClassificationOutcome":
        return ClassificationOutcome("wu")

    @staticmethod
    def g2_quotient(index: int) -> "ClassificationOutcome":
        if index not in (1, 3):
            raise InvalidParams("the G2/SU(2) quotients carry subgroup index 1 or 3")
        return ClassificationOutcome("g2-quotient", index=index)

    @staticmethod
    def seven_family(params: SevenFamilyParams, torsion: int) -> "ClassificationOutcome":
        return ClassificationOutcome("seven-family", params=params, torsion=torsion)

    @staticmethod
    def not_rational_sphere(reason: str) -> "ClassificationOutcome":
        return ClassificationOutcome("not-rational-sphere", reason=reason)

    @staticmethod
    def unmatched() -> "ClassificationOutcome":
        return ClassificationOutcome("unmatched")

    def as_dict(self) -> dict:
        out: dict = {"kind": self.kind}
        if self.description is not None:
            out["description"] = self.description
        if self.m is not None:
            out["m"] = self.m
        if self.d is not None:
            out["d"] = self.d
        if self.index is not None:
            out["index"] = self.index
        if self.params is not None:
            out["params"] = {
                "p_minus": self.params.p_minus,
                "q_minus": self.params.q_minus,
                "p_plus": self.params.p_plus,
                "q_plus": self.params.q_plus,
            }
        if self.torsion is not None:
            out["torsion"] = self.torsion
        if self.reason is not None:
            out["reason"] = self.reason
        return out


def _outcome_from_record(record: DiagramRecord) -> Optional[ClassificationOutcome]:
    data = record.outcome
    if not data:
        return None
    kind = data["kind"]
    if kind == "g2-quotient":
        return ClassificationOutcome.g2_quotient(int(data["index"]))
    if kind == "linear-sphere":
        return ClassificationOutcome.linear_sphere(data["description"])
    if kind == "not-rational-sphere":
        return ClassificationOutcome.not_rational_sphere(data["reason"])
    if kind == "wu":
        return ClassificationOutcome.wu()
    if kind == "brieskorn":
        return ClassificationOutcome.brieskorn(int(data["m"]), int(data["d"]))
    raise InvalidDiagram(f"diagram record {record.id} carries unknown outcome kind {kind!r}")


# ---------------------------------------------------------------------------
# Diagram factories
# ---------------------------------------------------------------------------


def _register(catalog: Catalog, **kwargs) -> NamedEmbedding:
    return catalog.register(NamedEmbedding(**kwargs))


def brieskorn_diagram(
    m: int, d: int, variant: str = "standard", catalog: Optional[Catalog] = None
) -> GroupDiagram:
    """The circle-times-rotation-group diagram of the Brieskorn action on B^(2m-1)_d.

    ``variant`` selects the full rotation group ("standard", m >= 3), its
    7-dimensional-spinor restriction ("spin7", m = 8 only), or the
    exceptional-holonomy restriction ("g2", m = 7 only).
    """
    if m < 3 or d < 1:
        raise InvalidParams("need m >= 3 and d >= 1")
    catalog = catalog or default_catalog()
    if variant == "standard":
        ambient_part, kplus_type, h_type = special_orthogonal(m), special_orthogonal(m - 1), special_orthogonal(m - 2)
        kplus_row_tag = "block"
    elif variant == "spin7":
        if m != 8:
            raise InvalidParams("the spin7 variant exists only at m = 8")
        ambient_part, kplus_type, h_type = special_orthogonal(7), parse_group("G2"), special_unitary(3)
        kplus_row_tag = "block"
    elif variant == "g2":
        if m != 7:
            raise InvalidParams("the g2 variant exists only at m = 7")
        ambient_part, kplus_type, h_type = parse_group("G2"), special_unitary(3), special_unitary(2)
        kplus_row_tag = "block"
    else:
        raise InvalidParams(f"unknown variant {variant!r}")

    g = _T1 * ambient_part
    a = d if d % 2 else d // 2
    stem = f"brieskorn[{variant},m={m},d={d}]"
    h = _register(
        catalog, id=f"{stem}-h", ambient=g, subgroup=h_type,
        tags=frozenset({"block", "proper-projections"}),
    )
    k_minus = _register(
        catalog, id=f"{stem}-kminus", ambient=g, subgroup=_T1 * h_type,
        tags=frozenset({"family:brieskorn", f"winding:{a}", f"variant:{variant}"}),
    )
    k_plus = _register(
        catalog, id=f"{stem}-kplus", ambient=g, subgroup=kplus_type,
        tags=frozenset({"block", "family:brieskorn", f"variant:{variant}"}),
    )
    h_in_k_minus = _register(
        catalog, id=f"{stem}-h-in-km", ambient=_T1 * h_type, subgroup=h_type,
        homotopy_map_ranks=(), tags=frozenset({"block"}),
    )
    h_in_k_plus = _register(
        catalog, id=f"{stem}-h-in-kp", ambient=kplus_type, subgroup=h_type,
        homotopy_map_ranks=(), tags=frozenset({kplus_row_tag}),
    )
    if d % 2:
        counts = dict(components_h=2, components_k_minus=1, components_k_plus=2)
    else:
        counts = dict(components_h=1, components_k_minus=1, components_k_plus=1)
    return GroupDiagram(
        g=g, h=h, k_minus=k_minus, k_plus=k_plus,
        h_in_k_minus=h_in_k_minus, h_in_k_plus=h_in_k_plus,
        nonorientable_k_minus=False,
        nonorientable_k_plus=bool(m % 2 and d % 2),
        **counts,
    )


def seven_family_diagram(
    params: SevenFamilyParams, catalog: Optional[Catalog] = None
) -> GroupDiagram:
    """The S^3 x S^3 diagram with finite principal isotropy and two circle slopes."""
    catalog = catalog or default_catalog()
    g = _SU2 * _SU2
    stem = f"seven[{params.p_minus},{params.q_minus},{params.p_plus},{params.q_plus}]"
    h = _register(
        catalog, id=f"{stem}-h", ambient=g, subgroup=_TRIVIAL,
        tags=frozenset({"proper-projections", "finite:4"}),
    )
    k_minus = _register(
        catalog, id=f"{stem}-kminus", ambient=g, subgroup=_T1,
        tags=frozenset({"family:seven", f"slope:{params.p_minus},{params.q_minus}"}),
    )
    k_plus = _register(
        catalog, id=f"{stem}-kplus", ambient=g, subgroup=_T1,
        tags=frozenset({"family:seven", f"slope:{params.p_plus},{params.q_plus}"}),
    )
    witness = catalog.embedding("trivial-in-circle")
    return GroupDiagram(
        g=g, h=h, k_minus=k_minus, k_plus=k_plus,
        h_in_k_minus=witness, h_in_k_plus=witness,
        components_h=4, components_k_minus=2, components_k_plus=2,
        nonorientable_k_minus=True, nonorientable_k_plus=True,
    )


def tensor_su_diagram(n: int, catalog: Optional[Catalog] = None) -> GroupDiagram:
    """The SU(n) x SU(2) diagram of the tensor-product action on S^(4n-1), n >= 4."""
    if n < 4:
        raise InvalidParams("the tensor family needs n >= 4 (n = 3 is the eleven-sphere table)")
    catalog = catalog or default_catalog()
    g = special_unitary(n) * _SU2
    stem = f"tensor-su[n={n}]"
    h = _register(
        catalog, id=f"{stem}-h", ambient=g, subgroup=special_unitary(n - 2) * _T1,
        tags=frozenset({"block", "proper-projections"}),
    )
    k_minus = _register(
        catalog, id=f"{stem}-kminus", ambient=g, subgroup=special_unitary(n - 1) * _T1,
        tags=frozenset({"block", "family:tensor-su", f"n:{n}"}),
    )
    k_plus = _register(
        catalog, id=f"{stem}-kplus", ambient=g, subgroup=special_unitary(n - 2) * _SU2,
        tags=frozenset({"diagonal", "family:tensor-su", f"n:{n}"}),
    )
    h_in_k_minus = _register(
        catalog, id=f"{stem}-h-in-km",
        ambient=special_unitary(n - 1) * _T1, subgroup=special_unitary(n - 2) * _T1,
        tags=frozenset({"block"}),
    )
    h_in_k_plus = _register(
        catalog, id=f"{stem}-h-in-kp",
        ambient=special_unitary(n - 2) * _SU2, subgroup=special_unitary(n - 2) * _T1,
        tags=frozenset({"block"}),
    )
    return GroupDiagram(
        g=g, h=h, k_minus=k_minus, k_plus=k_plus,
        h_in_k_minus=h_in_k_minus, h_in_k_plus=h_in_k_plus,
    )


def tensor_sp_diagram(n: int, catalog: Optional[Catalog] = None) -> GroupDiagram:
    """The Sp(n) x Sp(2) diagram of the quaternionic tensor action on S^(8n-1), n >= 2."""
    if n < 2:
        raise InvalidParams("the quaternionic tensor family needs n >= 2")
    catalog = catalog or default_catalog()
    g = symplectic(n) * symplectic(2)
    sp1sp1 = _SU2 * _SU2
    stem = f"tensor-sp[n={n}]"
    h = _register(
        catalog, id=f"{stem}-h", ambient=g, subgroup=symplectic(n - 2) * sp1sp1,
        tags=frozenset({"block", "proper-projections"}),
    )
    k_minus = _register(
        catalog, id=f"{stem}-kminus", ambient=g, subgroup=symplectic(n - 1) * sp1sp1,
        tags=frozenset({"block", "family:tensor-sp", f"n:{n}"}),
    )
    k_plus = _register(
        catalog, id=f"{stem}-kplus", ambient=g, subgroup=symplectic(n - 2) * symplectic(2),
        tags=frozenset({"diagonal", "family:tensor-sp", f"n:{n}"}),
    )
    h_in_k_minus = _register(
        catalog, id=f"{stem}-h-in-km",
        ambient=symplectic(n - 1) * sp1sp1, subgroup=symplectic(n - 2) * sp1sp1,
        tags=frozenset({"block"}),
    )
    h_in_k_plus = _register(
        catalog, id=f"{stem}-h-in-kp",
        ambient=symplectic(n - 2) * symplectic(2), subgroup=symplectic(n - 2) * sp1sp1,
        tags=frozenset({"block"}),
    )
    return GroupDiagram(
        g=g, h=h, k_minus=k_minus, k_plus=k_plus,
        h_in_k_minus=h_in_k_minus, h_in_k_plus=h_in_k_plus,
    )


# ---------------------------------------------------------------------------
# Structural recognizers
# ---------------------------------------------------------------------------


def _so_index(semisimple_part: GroupType) -> Optional[int]:
    """m with so(m) equal to the given type, if any."""
    dim = semisimple_part.dimension
    # dim so(m) = m(m-1)/2
    m = (1 + math.isqrt(1 + 8 * dim)) // 2
    for candidate in (m, m + 1):
        if candidate >= 3 and special_orthogonal(candidate) == semisimple_part:
            return candidate
    return None


def _recognize_brieskorn(d: GroupDiagram) -> Optional[ClassificationOutcome]:
    for cand in (d, d.swap()):
        if cand.ell_minus != 1 or cand.g.torus_rank != 1:
            continue
        if cand.k_minus.subgroup != _T1 * cand.h.subgroup:
            continue
        winding = cand.k_minus.tag_value("winding")
        if winding is None:
            continue
        semisimple = GroupType(cand.g.factors)
        h_type, kplus_type = cand.h.subgroup, cand.k_plus.subgroup
        m: Optional[int] = None
        if semisimple == parse_group("G2"):
            if kplus_type == special_unitary(3) and h_type == special_unitary(2):
                m = 7
        elif semisimple == parse_group("Spin(7)") and kplus_type == parse_group("G2"):
            if h_type == special_unitary(3):
                m = 8
        else:
            so_m = _so_index(semisimple)
            if (
                so_m is not None
                and kplus_type == special_orthogonal(so_m - 1)
                and h_type == special_orthogonal(so_m - 2)
            ):
                m = so_m
        if m is None or cand.ell_plus != m - 2:
            continue
        a = int(winding)
        if a == 0:
            return ClassificationOutcome.not_rational_sphere(
                "the circle factor acts with the same orbits as its complement (non-primitive)"
            )
        counts = (cand.components_h, cand.components_k_minus, cand.components_k_plus)
        if counts == (1, 1, 1):
            d_param = 2 * abs(a)
        elif counts == (2, 1, 2) and a % 2:
            d_param = abs(a)
        else:
            continue
        if m % 2 and d_param % 2 == 0:
            return ClassificationOutcome.not_rational_sphere(
                f"middle homology in degree {m - 1} is infinite (m odd, d even)"
            )
        return ClassificationOutcome.brieskorn(m, d_param)
    return None


def _recognize_tensor_su(d: GroupDiagram) -> Optional[ClassificationOutcome]:
    a_ranks = sorted(f.rank for f in d.g.factors if f.family == "A")
    if d.g.torus_rank or len(d.g.factors) != 2 or len(a_ranks) != 2 or a_ranks[0] != 1:
        return None
    n = a_ranks[1] + 1
    if n < 4:
        return None
    expect_h = special_unitary(n - 2) * _T1
    expect_km = special_unitary(n - 1) * _T1
    expect_kp = special_unitary(n - 2) * _SU2
    for cand in (d, d.swap()):
        if (
            cand.h.subgroup == expect_h
            and cand.k_minus.subgroup == expect_km
            and cand.k_plus.subgroup == expect_kp
            and (cand.ell_minus, cand.ell_plus) == (2 * n - 3, 2)
        ):
            return ClassificationOutcome.linear_sphere(
                f"SU({n})xSU(2) on S^{4 * n - 1} via the tensor product of C^{n} and C^2"
            )
    return None


def _recognize_tensor_sp(d: GroupDiagram) -> Optional[ClassificationOutcome]:
    if d.g.torus_rank or len(d.g.factors) != 2:
        return None
    b2 = symplectic(2)
    factors = list(d.g.factors)
    n: Optional[int] = None
    if d.g == b2 * b2:
        n = 2
    elif SimpleGroupLabel("B", 2) in factors:
        others = [f for f in factors if f != SimpleGroupLabel("B", 2)]
        if len(others) == 1 and others[0].family == "C":
            n = others[0].rank
    if n is None or n < 2:
        return None
    sp1sp1 = _SU2 * _SU2
    expect_h = symplectic(n - 2) * sp1sp1
    expect_km = symplectic(n - 1) * sp1sp1
    expect_kp = symplectic(n - 2) * b2
    for cand in (d, d.swap()):
        if (
            cand.h.subgroup == expect_h
            and cand.k_minus.subgroup == expect_km
            and cand.k_plus.subgroup == expect_kp
            and (cand.ell_minus, cand.ell_plus) == (4 * n - 5, 4)
        ):
            return ClassificationOutcome.linear_sphere(
                f"Sp({n})xSp(2) on S^{8 * n - 1} via the tensor product of H^{n} and H^2"
            )
    return None


def _recognize_seven_family(d: GroupDiagram) -> Optional[ClassificationOutcome]:
    if d.g != _SU2 * _SU2 or not d.h.subgroup.is_trivial():
        return None
    if d.k_minus.subgroup != _T1 or d.k_plus.subgroup != _T1:
        return None
    slope_minus = d.k_minus.tag_value("slope")
    slope_plus = d.k_plus.tag_value("slope")
    if slope_minus is None or slope_plus is None:
        return None
    try:
        pair_minus = tuple(int(v) for v in slope_minus.split(","))
        pair_plus = tuple(int(v) for v in slope_plus.split(","))
        # exchanging the two slopes is the swap move, so order them canonically
        (p_minus, q_minus), (p_plus, q_plus) = sorted((pair_minus, pair_plus))
        params = SevenFamilyParams(p_minus, q_minus, p_plus, q_plus)
    except (ValueError, InvalidParams):
        return None
    torsion = seven_family_torsion(params)
    if torsion == 0:
        return ClassificationOutcome.not_rational_sphere(
            "p-q+ = p+q- makes the third homology group infinite"
        )
    return ClassificationOutcome.seven_family(params, torsion)


_RECOGNIZERS = (
    _recognize_brieskorn,
    _recognize_tensor_su,
    _recognize_tensor_sp,
    _recognize_seven_family,
)


def classify_diagram(d: GroupDiagram, catalog: Optional[Catalog] = None) -> ClassificationOutcome:
    """Match a validated diagram against the shipped catalog and known families."""
    catalog = catalog or default_catalog()
    violations = validate(d)
    if violations:
        raise InvalidDiagram("; ".join(str(v) for v in violations))
    for record in catalog.diagram_records():
        if record.diagram.g != d.g:
            continue
        if equivalent(d, record.diagram) == "distinct-at-descriptor-level":
            continue
        outcome = _outcome_from_record(record)
        if outcome is not None:
            return outcome
    for recognize in _RECOGNIZERS:
        outcome = recognize(d)
        if outcome is not None:
            return outcome
    return ClassificationOutcome.unmatched()


# ---------------------------------------------------------------------------
# Rational Betti data of the three orbits
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class OrbitBetti:
    p_h: IntegerPolynomial
    p_k_plus: IntegerPolynomial
    p_k_minus: IntegerPolynomial
    n: int


def orbit_betti(d: GroupDiagram, catalog: Optional[Catalog] = None) -> Optional[OrbitBetti]:
    """Rational Betti polynomials of G/H and G/K-+ with the expected sphere dimension.

    Derived from the regime the diagram sits in (stored catalog data,
    equal rank, one non-orientable orbit with a circle fiber, two
    orientable orbits with opposite fiber parities, or the doubly
    non-orientable circle-circle case); None outside these regimes.
    """
    catalog = catalog or default_catalog()
    for record in catalog.diagram_records():
        if record.diagram.g != d.g or record.orbit_poincare is None:
            continue
        relation = equivalent(d, record.diagram)
        if relation == "distinct-at-descriptor-level":
            continue
        p_h, p_kp, p_km, n = record.stored_betti()
        if relation == "swap-equal":
            p_kp, p_km = p_km, p_kp
        return OrbitBetti(p_h, p_kp, p_km, n)

    n = d.manifold_dim
    if d.h.subgroup.rank == d.g.rank:
        return OrbitBetti(
            hilbert_series(HomogeneousSpaceModel(d.g, d.h)),
            hilbert_series(HomogeneousSpaceModel(d.g, d.k_plus)),
            hilbert_series(HomogeneousSpaceModel(d.g, d.k_minus)),
            n,
        )
    h_count = d.nonorientable_count
    lo, hi = sorted((d.ell_minus, d.ell_plus))
    if h_count == 0 and lo % 2 != hi % 2:
        total = lo + hi
        p_h = one_plus_power(lo) * one_plus_power(hi) * one_plus_power(total)
        p_kp = one_plus_power(d.ell_minus) * one_plus_power(total)
        p_km = one_plus_power(d.ell_plus) * one_plus_power(total)
        return OrbitBetti(p_h, p_kp, p_km, n)
    if h_count == 1 and lo == 1 and hi >= 3 and hi % 2:
        # circle-fiber orbit is a rational (2*hi+1)-sphere; the other orbit
        # is non-orientable with rational cohomology concentrated in 0 and 1
        sphere = one_plus_power(2 * hi + 1)
        line = one_plus_power(1)
        p_h = line * sphere
        if d.ell_minus == 1:
            p_km, p_kp = sphere, line
        else:
            p_km, p_kp = line, sphere
        return OrbitBetti(p_h, p_kp, p_km, n)
    if h_count == 2 and lo == hi == 1 and d.g == _SU2 * _SU2 and d.h.subgroup.is_trivial():
        cube = one_plus_power(3)
        return OrbitBetti(cube * cube, cube, cube, n)
    return None
