"""Group diagrams H < K-, K+ < G and the checks that constrain them.

A diagram describes a closed cohomogeneity-one manifold as a union of two
disk bundles over G/K- and G/K+ glued along G/H; the fibers K+-/H must be
spheres of positive dimension l+-.  This module owns:

* structural validation of a diagram (fiber dimensions, sphere
  recognition through the transitive-action table, component-count and
  effectiveness rules),
* the six-case classification of the rational homotopy fiber of
  G/H -> M by (l-, l+, number of non-orientable singular orbits), each
  case forcing the dimension of a rational-sphere total space,
* primitivity checks against a declared subgroup lattice,
* descriptor-level diagram equivalence (with the K+/K- swap move),
* the Euler-characteristic consistency of the decomposition, and
* exact Mayer-Vietoris rank feasibility for candidate Betti data.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Optional, Sequence

from .errors import Incomparable, InvalidLattice, InvalidParams
from .lie_catalog import GroupType, NamedEmbedding, sphere_quotient
from .polynomial import IntegerPolynomial
from .rational_homotopy import HomogeneousSpaceModel, euler_characteristic


@dataclass(frozen=True)
class GroupDiagram:
    """The quadruple H < K+- < G with its discrete annotations.

    The five embeddings are catalogued records: three into G, and the two
    containment witnesses h-in-K+- that exhibit K+-/H as spheres.
    Component counts annotate the number of connected components of each
    group (types themselves model connected groups); the non-orientable
    flags describe the singular orbits G/K-+ and are caller-supplied
    data, not derived.
    """

    g: GroupType
    h: NamedEmbedding
    k_minus: NamedEmbedding
    k_plus: NamedEmbedding
    h_in_k_minus: NamedEmbedding
    h_in_k_plus: NamedEmbedding
    components_h: int = 1
    components_k_minus: int = 1
    components_k_plus: int = 1
    nonorientable_k_minus: bool = False
    nonorientable_k_plus: bool = False

    @property
    def ell_minus(self) -> int:
        return self.k_minus.subgroup.dimension - self.h.subgroup.dimension

    @property
    def ell_plus(self) -> int:
        return self.k_plus.subgroup.dimension - self.h.subgroup.dimension

    @property
    def nonorientable_count(self) -> int:
        return int(self.nonorientable_k_minus) + int(self.nonorientable_k_plus)

    @property
    def manifold_dim(self) -> int:
        """dim M = dim G/H + 1."""
        return self.g.dimension - self.h.subgroup.dimension + 1

    def swap(self) -> "GroupDiagram":
        """The diagram with K+ and K- exchanged (an equivalence move)."""
        return replace(
            self,
            k_minus=self.k_plus,
            k_plus=self.k_minus,
            h_in_k_minus=self.h_in_k_plus,
            h_in_k_plus=self.h_in_k_minus,
            components_k_minus=self.components_k_plus,
            components_k_plus=self.components_k_minus,
            nonorientable_k_minus=self.nonorientable_k_plus,
            nonorientable_k_plus=self.nonorientable_k_minus,
        )

    def descriptor(self) -> tuple:
        return (
            str(self.g),
            self.h.id,
            self.k_minus.id,
            self.k_plus.id,
            self.h_in_k_minus.id,
            self.h_in_k_plus.id,
            self.components_h,
            self.components_k_minus,
            self.components_k_plus,
            self.nonorientable_k_minus,
            self.nonorientable_k_plus,
        )


@dataclass(frozen=True)
class Violation:
    rule: str
    message: str

    def __str__(self) -> str:
        return f"[{self.rule}] {self.message}"


def validate(d: GroupDiagram) -> list[Violation]:
    """All rule violations of a diagram; an empty list means valid."""
    out: list[Violation] = []
    for name, emb in (("H", d.h), ("K-", d.k_minus), ("K+", d.k_plus)):
        if emb.ambient != d.g:
            out.append(Violation("containment-shape", f"{name} ({emb.id}) is not an embedding into {d.g}"))
    for name, k, w in (("K-", d.k_minus, d.h_in_k_minus), ("K+", d.k_plus, d.h_in_k_plus)):
        if w.ambient != k.subgroup or w.subgroup != d.h.subgroup:
            out.append(
                Violation(
                    "containment-shape",
                    f"witness {w.id} does not present H inside {name} "
                    f"(expected {d.h.subgroup} inside {k.subgroup})",
                )
            )
    if out:
        return out

    ells = {"K-": d.ell_minus, "K+": d.ell_plus}
    for name, ell in ells.items():
        if ell < 1:
            out.append(Violation("fiber-dimension", f"{name}/H has dimension {ell}; both fibers need dimension >= 1"))
    if not out:
        for name, k, w in (("K-", d.k_minus, d.h_in_k_minus), ("K+", d.k_plus, d.h_in_k_plus)):
            recognized = sphere_quotient(k.subgroup, w)
            if recognized != ells[name]:
                out.append(
                    Violation(
                        "sphere-recognition",
                        f"{name}/H (via {w.id}) is not a catalogued transitive sphere of dimension {ells[name]}",
                    )
                )

    counts = {"H": d.components_h, "K-": d.components_k_minus, "K+": d.components_k_plus}
    if any(c < 1 for c in counts.values()):
        out.append(Violation("component-pattern", "component counts must be positive"))
    elif d.ell_minus >= 2 and d.ell_plus >= 2:
        bad = [name for name, c in counts.items() if c != 1]
        if bad:
            out.append(
                Violation(
                    "connectedness",
                    f"both fibers have dimension >= 2, so all groups are connected; {', '.join(bad)} annotated otherwise",
                )
            )
    elif min(d.ell_minus, d.ell_plus) == 1 and max(d.ell_minus, d.ell_plus) > 1:
        # circle side: the K with 1-dimensional fiber; big side: the other
        if d.ell_minus == 1:
            circle_name, circle_count, big_name, big_count = "K-", d.components_k_minus, "K+", d.components_k_plus
        else:
            circle_name, circle_count, big_name, big_count = "K+", d.components_k_plus, "K-", d.components_k_minus
        if big_count != d.components_h:
            out.append(
                Violation(
                    "component-pattern",
                    f"with a single circle fiber, H and {big_name} carry equal component counts "
                    f"(got {d.components_h} and {big_count})",
                )
            )
        if circle_count != 1:
            out.append(
                Violation(
                    "component-pattern",
                    f"{circle_name} extends H's identity component by a circle and is connected "
                    f"(got count {circle_count})",
                )
            )

    if not d.h.has_tag("proper-projections"):
        out.append(
            Violation(
                "effectiveness-declaration",
                f"H ({d.h.id}) must declare non-surjective projections to every simple factor of G",
            )
        )
    return out


# ---------------------------------------------------------------------------
# Homotopy-fiber case classification
# ---------------------------------------------------------------------------

#: case-6 fibers: (fiber dimension l, tag, description, forced total dimension)
CASE6_FIBERS: tuple[tuple[int, str, str, int], ...] = (
    (2, "su3-mod-t2", "SU(3)/T2 x loops(S7)", 7),
    (2, "sp2-mod-t2", "Sp(2)/T2 x loops(S9)", 9),
    (2, "g2-mod-t2", "G2/T2 x loops(S13)", 13),
    (4, "sp3-mod-sp1cubed", "Sp(3)/Sp(1)^3 x loops(S13)", 13),
    (8, "f4-mod-spin8", "F4/Spin(8) x loops(S25)", 25),
)


@dataclass(frozen=True)
class GHCaseResult:
    """One compatible homotopy-fiber case with its forced total dimension."""

    case_index: int
    fiber_model: str
    forced_dim: int


def gh_classify(
    ell_minus: int,
    ell_plus: int,
    h: int,
    fiber_hint: Optional[str] = None,
) -> list[GHCaseResult]:
    """All homotopy-fiber cases compatible with (l-, l+, h).

    ``h`` counts non-orientable singular orbits.  Each case forces the
    dimension n of a rational-sphere total space through the rank-one
    connecting homomorphism, which must hit the loop-space factor.  The
    two fiber labels play symmetric roles except where a case singles
    out the circle side, so inputs are accepted in either order.  An
    empty list means no case is compatible (that combination cannot
    carry a rational sphere).
    """
    if ell_minus < 1 or ell_plus < 1:
        raise InvalidParams("fiber dimensions must be at least 1")
    if h not in (0, 1, 2):
        raise InvalidParams("the non-orientable orbit count h must be 0, 1 or 2")
    lo, hi = sorted((ell_minus, ell_plus))
    results: list[GHCaseResult] = []
    if h == 2:
        if lo == hi == 1:
            results.append(GHCaseResult(1, "S3 x S3 x loops(S7)", 7))
    elif h == 1:
        if lo == hi == 1:
            results.append(GHCaseResult(2, "S1 x S3 x loops(S5)", 5))
        elif lo == 1 and hi >= 3 and hi % 2 == 1:
            results.append(
                GHCaseResult(3, f"S1 x S{2 * hi + 1} x loops(S{2 * hi + 3})", 2 * hi + 3)
            )
    else:
        total = ell_minus + ell_plus
        if ell_minus % 2 == ell_plus % 2:
            n4 = total + 1
        else:
            n4 = 2 * total + 1
        results.append(
            GHCaseResult(4, f"S{ell_minus} x S{ell_plus} x loops(S{total + 1})", n4)
        )
        if ell_minus == ell_plus and ell_minus % 2 == 0:
            results.append(
                GHCaseResult(5, f"S{ell_minus} x loops(S{ell_minus + 1})", ell_minus + 1)
            )
            for ell, tag, description, forced in CASE6_FIBERS:
                if ell != ell_minus:
                    continue
                if fiber_hint is not None and fiber_hint != tag:
                    continue
                results.append(GHCaseResult(6, description, forced))
    return results


# ---------------------------------------------------------------------------
# Primitivity
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class PrimitivityResult:
    verdict: str  # "non-primitive" | "primitive-required" | "unknown"
    witness: Optional[str] = None


def primitivity(
    d: GroupDiagram,
    lattice: Sequence[NamedEmbedding],
    assert_rational_sphere: bool = False,
) -> PrimitivityResult:
    """Search a declared subgroup lattice for a witness of non-primitivity.

    A lattice entry L witnesses non-primitivity when it is a proper
    subgroup of G declared (via ``contains:<id>`` tags) to contain H and
    both K+-.  With ``assert_rational_sphere`` the caller states that the
    total space is a rational sphere, which forbids such a witness; the
    scan then returns "primitive-required" (and finding a witness anyway
    raises, since the declarations contradict the assertion).
    """
    if d.k_minus.subgroup == d.g or d.k_plus.subgroup == d.g:
        # a singular group equal to G cannot sit inside a proper subgroup
        return PrimitivityResult("primitive-required")
    needed = {d.h.id, d.k_minus.id, d.k_plus.id}
    for entry in lattice:
        if entry.ambient != d.g:
            raise InvalidLattice(f"lattice entry {entry.id} lives in {entry.ambient}, not {d.g}")
        if entry.subgroup == d.g:
            continue
        declared = {tag.split(":", 1)[1] for tag in entry.tags if tag.startswith("contains:")}
        if needed <= declared:
            if assert_rational_sphere:
                raise InvalidLattice(
                    f"lattice entry {entry.id} contradicts the rational-sphere assertion"
                )
            return PrimitivityResult("non-primitive", witness=entry.id)
    if assert_rational_sphere:
        return PrimitivityResult("primitive-required")
    return PrimitivityResult("unknown")


# ---------------------------------------------------------------------------
# Equivalence moves (descriptor level)
# ---------------------------------------------------------------------------


def equivalent(d1: GroupDiagram, d2: GroupDiagram) -> str:
    """"equal", "swap-equal", or "distinct-at-descriptor-level".

    Only the catalogued descriptors are compared; conjugation moves finer
    than catalog identity are not decided.
    """
    if d1.g != d2.g:
        raise Incomparable(f"diagrams live in different groups {d1.g} and {d2.g}")
    if d1.descriptor() == d2.descriptor():
        return "equal"
    if d1.swap().descriptor() == d2.descriptor():
        return "swap-equal"
    return "distinct-at-descriptor-level"


# ---------------------------------------------------------------------------
# Euler characteristic of the decomposition
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class EulerCheck:
    """chi(G/K+) + chi(G/K-) - chi(G/H), checked against a sphere's chi."""

    value: int
    manifold_dim: int
    expected: int
    consistent: bool


def double_disk_euler(d: GroupDiagram) -> EulerCheck:
    """Euler characteristic of the union of the two disk bundles.

    Must equal 1 + (-1)^n for an n-dimensional rational sphere.
    """
    chi_plus = euler_characteristic(HomogeneousSpaceModel(d.g, d.k_plus))
    chi_minus = euler_characteristic(HomogeneousSpaceModel(d.g, d.k_minus))
    chi_h = euler_characteristic(HomogeneousSpaceModel(d.g, d.h))
    value = chi_plus + chi_minus - chi_h
    n = d.manifold_dim
    expected = 1 + (-1) ** n
    return EulerCheck(value, n, expected, value == expected)


# ---------------------------------------------------------------------------
# Mayer-Vietoris rank feasibility
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class MVFeasibility:
    verdict: str  # "feasible" | "infeasible"
    failing_degree: Optional[int]
    rank_profile: tuple[tuple[int, int, int], ...]  # (r_k, s_k, delta_k) per degree

    @property
    def feasible(self) -> bool:
        return self.verdict == "feasible"


def mv_feasible(
    p_h: IntegerPolynomial,
    p_k_plus: IntegerPolynomial,
    p_k_minus: IntegerPolynomial,
    n: int,
) -> MVFeasibility:
    """Can M be a rational n-sphere given the orbits' Betti polynomials?

    Solves the exactness system of the restriction/difference/connecting
    ranks (r_k, s_k, delta_k) by forward substitution:

        b_k(M)            = delta_(k-1) + r_k
        b_k(K+) + b_k(K-) = r_k + s_k
        b_k(H)            = s_k + delta_k

    with b(M) = 1 in degrees 0 and n.  Feasible iff every rank is
    non-negative and the final connecting rank is zero.
    """
    if n < 1:
        raise InvalidParams("the sphere dimension n must be at least 1")
    for p in (p_h, p_k_plus, p_k_minus):
        if any(c < 0 for c in p):
            raise InvalidParams("Betti polynomials must have non-negative coefficients")
    top = max(n, p_h.degree, p_k_plus.degree, p_k_minus.degree) + 1
    profile: list[tuple[int, int, int]] = []
    delta_prev = 0
    verdict, failing = "feasible", None
    for k in range(top + 1):
        b_m = 1 if k in (0, n) else 0
        r = b_m - delta_prev
        s = p_k_plus.coefficient(k) + p_k_minus.coefficient(k) - r
        delta = p_h.coefficient(k) - s
        profile.append((r, s, delta))
        if r < 0 or s < 0 or delta < 0:
            verdict, failing = "infeasible", k
            break
        delta_prev = delta
    else:
        if delta_prev != 0:
            verdict, failing = "infeasible", top
    return MVFeasibility(verdict, failing, tuple(profile))
