"""Homology of the Brieskorn varieties B^(2m-1)_d.

B^(2m-1)_d is the link of the singularity z_0^d + z_1^2 + ... + z_m^2 = 0,
the intersection of the zero set with a small sphere in C^(m+1).  It is an
(m-2)-connected (2m-1)-manifold, and everything about its homology is
controlled by the integer Delta(1), where Delta is the characteristic
polynomial of the monodromy of the associated fibration:

    Delta(t) = prod over d-th roots of unity w != 1 of (t - w * (-1)^m)
             = (t^d - (-1)^(m*d)) / (t - (-1)^m).

The middle group H_(m-1) is cyclic of order |Delta(1)| when that value is
nonzero and infinite cyclic when Delta(1) = 0, giving:

* m even:            H_(m-1) = Z/d (no torsion entry when d = 1),
* m odd, d even:     H_(m-1) = Z and H_m = Z  (the S^(m-1) x S^m pattern),
* m odd, d odd:      no middle homology (a homotopy sphere).

The exact-division identity is the computational definition here; the
product over roots of unity is kept as the independent test oracle.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidParams, Unsupported
from .polynomial import IntegerPolynomial


@dataclass(frozen=True)
class BrieskornParams:
    """Parameters (m, d) of B^(2m-1)_d; m >= 3 and d >= 1."""

    m: int
    d: int

    def __post_init__(self) -> None:
        if self.m < 3:
            raise Unsupported(f"m must be at least 3 (B^3_d is not simply connected), got {self.m}")
        if self.d < 1:
            raise InvalidParams(f"d must be at least 1, got {self.d}")

    @property
    def sphere_dim(self) -> int:
        return 2 * self.m - 1


@dataclass(frozen=True)
class HomologyEntry:
    degree: int
    free_rank: int = 0
    torsion: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if self.free_rank < 0 or any(t < 2 for t in self.torsion):
            raise InvalidParams(f"malformed homology entry in degree {self.degree}")
        if self.free_rank == 0 and not self.torsion:
            raise InvalidParams(f"empty homology entry in degree {self.degree}")


@dataclass(frozen=True)
class GradedAbelianGroup:
    """A finitely generated graded abelian group, sparse by degree."""

    entries: tuple[HomologyEntry, ...] = ()

    def __post_init__(self) -> None:
        degs = [e.degree for e in self.entries]
        if degs != sorted(set(degs)):
            raise InvalidParams("entries must have strictly increasing degrees")

    def entry(self, degree: int) -> HomologyEntry | None:
        for e in self.entries:
            if e.degree == degree:
                return e
        return None

    def free_rank(self, degree: int) -> int:
        e = self.entry(degree)
        return e.free_rank if e else 0

    def torsion(self, degree: int) -> tuple[int, ...]:
        e = self.entry(degree)
        return e.torsion if e else ()

    def is_rational_sphere(self, n: int) -> bool:
        """Free ranks concentrated in degrees 0 and n, both equal to 1."""
        if self.free_rank(0) != 1 or self.free_rank(n) != 1:
            return False
        return all(e.free_rank == 0 for e in self.entries if e.degree not in (0, n))


def delta_poly(p: BrieskornParams) -> IntegerPolynomial:
    """Monodromy characteristic polynomial, by exact division.

    (t^d - (-1)^(m*d)) / (t - (-1)^m), a degree d-1 integer polynomial.
    """
    sign_m = -1 if p.m % 2 else 1
    constant = -((-1) ** (p.m * p.d))
    numerator = IntegerPolynomial((constant,) + (0,) * (p.d - 1) + (1,))
    denominator = IntegerPolynomial((-sign_m, 1))
    quotient, remainder = numerator.divmod(denominator)
    assert remainder.is_zero(), "monodromy division must be exact"
    return quotient


def delta_at_one(p: BrieskornParams) -> int:
    """Closed form for Delta(1): d for m even; 0 (d even) or 1 (d odd) for m odd."""
    if p.m % 2 == 0:
        return p.d
    return 0 if p.d % 2 == 0 else 1


def homology(p: BrieskornParams) -> GradedAbelianGroup:
    """Integral homology of B^(2m-1)_d as a graded abelian group."""
    m, d = p.m, p.d
    top = p.sphere_dim
    entries = [HomologyEntry(0, free_rank=1)]
    middle = delta_at_one(p)
    if middle == 0:
        entries.append(HomologyEntry(m - 1, free_rank=1))
        entries.append(HomologyEntry(m, free_rank=1))
    elif middle > 1:
        entries.append(HomologyEntry(m - 1, torsion=(middle,)))
    entries.append(HomologyEntry(top, free_rank=1))
    return GradedAbelianGroup(tuple(entries))


def rational_sphere_gate(p: BrieskornParams) -> bool:
    """True exactly when B^(2m-1)_d is a rational sphere: m even or d odd."""
    return p.m % 2 == 0 or p.d % 2 == 1
