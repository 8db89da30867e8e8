"""Rational homotopy and cohomology arithmetic for homogeneous spaces G/H.

Three exact computations, all driven by the degree multisets of the two
groups and the declared per-degree ranks of the inclusion on rational
homotopy:

* the long-exact-sequence bookkeeping that turns (degrees of G, degrees
  of H, map ranks) into the rational homotopy of G/H,
* the equal-rank Hilbert series prod(1 - t^(d+1)) / prod(1 - t^(e+1)),
  whose exact quotient is the rational Poincare polynomial of G/H, and
* Euler characteristics as Weyl-order ratios.

Degrees of a compact group are odd, so a surviving ambient generator in
degree k lands in odd degree k, while a killed subgroup generator in
degree k feeds degree k+1 (even).  In particular a torus circle of H
inside a semisimple G contributes a degree-2 class of G/H.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidEmbedding, Unsupported
from .lie_catalog import (
    GroupType,
    NamedEmbedding,
    degree_multiplicities,
    degrees,
    weyl_order,
)
from .polynomial import InexactDivision, IntegerPolynomial, one_minus_power, one_plus_power, product


@dataclass(frozen=True)
class HomogeneousSpaceModel:
    """A homogeneous space presented as (ambient group, catalogued inclusion)."""

    ambient: GroupType
    inclusion: NamedEmbedding

    def __post_init__(self) -> None:
        if self.inclusion.ambient != self.ambient:
            raise InvalidEmbedding(
                f"{self.inclusion.id}: inclusion ambient {self.inclusion.ambient} "
                f"differs from {self.ambient}"
            )

    @classmethod
    def of(cls, inclusion: NamedEmbedding) -> "HomogeneousSpaceModel":
        return cls(inclusion.ambient, inclusion)

    @property
    def dimension(self) -> int:
        return self.ambient.dimension - self.inclusion.subgroup.dimension


@dataclass(frozen=True)
class QuotientHomotopy:
    """Non-trivial rational homotopy of a quotient, split by parity.

    ``heuristic`` is True when some degree had no declared map rank and
    the maximal-rank default was used; such outputs are unverified.
    """

    odd_degrees: tuple[int, ...]
    even_degrees: tuple[int, ...]
    heuristic: bool = False

    @property
    def formal_dimension(self) -> int:
        """Sum over odd degrees minus sum of (e - 1) over even degrees.

        For a rationally elliptic quotient this equals dim G/H.
        """
        return sum(self.odd_degrees) - sum(e - 1 for e in self.even_degrees)


def quotient_homotopy(space: HomogeneousSpaceModel) -> QuotientHomotopy:
    """Rational homotopy of G/H from the exact sequence of H -> G -> G/H.

    Per degree k with ambient multiplicity c_G(k), subgroup multiplicity
    c_H(k) and map rank r(k): G/H receives c_G(k) - r(k) classes in
    degree k and c_H(k) - r(k) classes in degree k+1.  Missing declared
    ranks default to min(c_G, c_H) and set the heuristic flag.
    """
    amb = degree_multiplicities(space.ambient)
    sub = degree_multiplicities(space.inclusion.subgroup)
    declared = space.inclusion.rank_map
    odd: list[int] = []
    even: list[int] = []
    heuristic = False
    for k in sorted(set(amb) | set(sub)):
        c_g = amb.get(k, 0)
        c_h = sub.get(k, 0)
        bound = min(c_g, c_h)
        if k in declared:
            r = declared[k]
            if r > bound:
                raise InvalidEmbedding(
                    f"{space.inclusion.id}: declared degree-{k} rank {r} exceeds bound {bound}"
                )
        else:
            r = bound
            if bound > 0:
                heuristic = True
        odd.extend([k] * (c_g - r))
        even.extend([k + 1] * (c_h - r))
    return QuotientHomotopy(tuple(sorted(odd)), tuple(sorted(even)), heuristic)


def hilbert_series(space: HomogeneousSpaceModel) -> IntegerPolynomial:
    """Rational Poincare polynomial of an equal-rank quotient G/H.

    Computed as the exact quotient
    prod_{d in degrees(G)} (1 - t^(d+1)) / prod_{e in degrees(H)} (1 - t^(e+1)).
    The result must be a polynomial with non-negative coefficients and
    constant term 1; anything else means the inclusion data is wrong.
    """
    g, h = space.ambient, space.inclusion.subgroup
    if g.rank != h.rank:
        raise Unsupported(
            f"hilbert_series needs an equal-rank pair, got ranks {g.rank} and {h.rank}"
        )
    numerator = product(one_minus_power(d + 1) for d in degrees(g))
    denominator = product(one_minus_power(e + 1) for e in degrees(h))
    try:
        series = numerator.divexact(denominator)
    except InexactDivision as exc:
        raise InvalidEmbedding(f"{space.inclusion.id}: Hilbert series is not polynomial") from exc
    if series.coefficient(0) != 1 or any(c < 0 for c in series):
        raise InvalidEmbedding(
            f"{space.inclusion.id}: Hilbert series {series} is not a valid Poincare polynomial"
        )
    return series


def euler_characteristic(space: HomogeneousSpaceModel) -> int:
    """Euler characteristic of G/H: Weyl-order ratio at equal rank, else 0."""
    g, h = space.ambient, space.inclusion.subgroup
    if h.rank < g.rank:
        return 0
    wg, wh = weyl_order(g), weyl_order(h)
    if wg % wh:
        raise InvalidEmbedding(
            f"{space.inclusion.id}: Weyl order {wh} does not divide {wg}"
        )
    return wg // wh


def odd_product_poincare(dims) -> IntegerPolynomial:
    """Poincare polynomial prod (1 + t^d) of a product of spheres."""
    return product(one_plus_power(d) for d in dims)
