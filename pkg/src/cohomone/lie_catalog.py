"""Symbolic catalog of compact connected Lie group types.

A group type records the local isomorphism class of a compact connected
Lie group: a multiset of simple factors plus a torus rank.  Low-rank
coincidences (Spin(3) = SU(2), Sp(2) = Spin(5), Spin(6) = SU(4),
Spin(4) = SU(2) x SU(2)) are folded away at construction time, so
structural equality of :class:`GroupType` is equality of isomorphism
type.  The numeric invariants carried here are the classical ones:

===========  ==================  ===========================  ============
family       dimension           rational homotopy degrees    Weyl order
===========  ==================  ===========================  ============
A_n          n(n+2)              3, 5, ..., 2n+1              (n+1)!
B_n          n(2n+1)             3, 7, ..., 4n-1              2^n n!
C_n          n(2n+1)             3, 7, ..., 4n-1              2^n n!
D_n          n(2n-1)             3, 7, ..., 4n-5 and 2n-1     2^(n-1) n!
G2           14                  3, 11                        12
F4           52                  3, 11, 15, 23                1152
E6           78                  3, 9, 11, 15, 17, 23         51840
E7           133                 3, 11, 15, 19, 23, 27, 35    2903040
E8           248                 3, 15, ..., 47, 59           696729600
===========  ==================  ===========================  ============

A torus factor contributes its rank to both rank and dimension and one
degree-1 generator per circle.  Two cross-identities tie the tables
together and are enforced by the test suite: the dimension of a group
equals the sum of its degrees, and the Weyl order times 2^rank equals
the product of (degree + 1) over all degrees.

The module also ships the table of all effective transitive compact
group actions on spheres, as nine parameterized row families, and the
sphere-recognition and named-embedding machinery built on top of it.
"""

from __future__ import annotations

import math
import re
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Optional

from .errors import InvalidEmbedding, InvalidLabel, Unsupported

_CLASSICAL_FAMILIES = ("A", "B", "C", "D")
_EXCEPTIONAL_RANKS = {"E6": 6, "E7": 7, "E8": 8, "F4": 4, "G2": 2}
_EXCEPTIONAL_DATA = {
    # family: (dimension, degrees, weyl order)
    "G2": (14, (3, 11), 12),
    "F4": (52, (3, 11, 15, 23), 1152),
    "E6": (78, (3, 9, 11, 15, 17, 23), 51840),
    "E7": (133, (3, 11, 15, 19, 23, 27, 35), 2903040),
    "E8": (248, (3, 15, 23, 27, 35, 39, 47, 59), 696729600),
}


@dataclass(frozen=True, order=True)
class SimpleGroupLabel:
    """A Killing-Cartan label, e.g. A3 or E6.  Not necessarily canonical."""

    family: str
    rank: int

    def __post_init__(self) -> None:
        if self.family in _EXCEPTIONAL_RANKS:
            if self.rank != _EXCEPTIONAL_RANKS[self.family]:
                raise InvalidLabel(f"{self.family} has fixed rank {_EXCEPTIONAL_RANKS[self.family]}")
        elif self.family in _CLASSICAL_FAMILIES:
            if self.rank < 1:
                raise InvalidLabel(f"rank must be positive, got {self.family}{self.rank}")
        else:
            raise InvalidLabel(f"unknown family {self.family!r}")

    def __str__(self) -> str:
        if self.family in _EXCEPTIONAL_RANKS:
            return self.family
        return f"{self.family}{self.rank}"

    @property
    def dimension(self) -> int:
        n = self.rank
        if self.family == "A":
            return n * (n + 2)
        if self.family in ("B", "C"):
            return n * (2 * n + 1)
        if self.family == "D":
            return n * (2 * n - 1)
        return _EXCEPTIONAL_DATA[self.family][0]

    @property
    def degrees(self) -> tuple[int, ...]:
        n = self.rank
        if self.family == "A":
            return tuple(range(3, 2 * n + 2, 2))
        if self.family in ("B", "C"):
            return tuple(range(3, 4 * n, 4))
        if self.family == "D":
            return tuple(sorted(tuple(range(3, 4 * n - 4, 4)) + (2 * n - 1,)))
        return _EXCEPTIONAL_DATA[self.family][1]

    @property
    def weyl_order(self) -> int:
        n = self.rank
        if self.family == "A":
            return math.factorial(n + 1)
        if self.family in ("B", "C"):
            return 2**n * math.factorial(n)
        if self.family == "D":
            return 2 ** (n - 1) * math.factorial(n)
        return _EXCEPTIONAL_DATA[self.family][2]


def _canonical_factors(label: SimpleGroupLabel) -> tuple[tuple[SimpleGroupLabel, ...], int]:
    """Expand one label into canonical simple factors plus a torus rank."""
    fam, n = label.family, label.rank
    if fam == "B" and n == 1:
        return (SimpleGroupLabel("A", 1),), 0  # Spin(3) = SU(2)
    if fam == "C" and n == 1:
        return (SimpleGroupLabel("A", 1),), 0  # Sp(1) = SU(2)
    if fam == "C" and n == 2:
        return (SimpleGroupLabel("B", 2),), 0  # Sp(2) = Spin(5); B2 is canonical
    if fam == "D":
        if n == 1:
            return (), 1  # Spin(2) = U(1)
        if n == 2:
            return (SimpleGroupLabel("A", 1),) * 2, 0  # Spin(4) = SU(2) x SU(2)
        if n == 3:
            return (SimpleGroupLabel("A", 3),), 0  # Spin(6) = SU(4)
    return (label,), 0


@dataclass(frozen=True)
class GroupType:
    """Isomorphism type of a compact connected Lie group.

    Factors are canonicalized and sorted on construction, so types built
    from different low-rank presentations compare equal.
    """

    factors: tuple[SimpleGroupLabel, ...] = ()
    torus_rank: int = 0

    def __post_init__(self) -> None:
        if self.torus_rank < 0:
            raise InvalidLabel("torus rank must be non-negative")
        expanded: list[SimpleGroupLabel] = []
        torus = self.torus_rank
        for label in self.factors:
            simple, extra_torus = _canonical_factors(label)
            expanded.extend(simple)
            torus += extra_torus
        object.__setattr__(self, "factors", tuple(sorted(expanded)))
        object.__setattr__(self, "torus_rank", torus)

    @property
    def rank(self) -> int:
        return sum(f.rank for f in self.factors) + self.torus_rank

    @property
    def dimension(self) -> int:
        return sum(f.dimension for f in self.factors) + self.torus_rank

    def is_trivial(self) -> bool:
        return not self.factors and self.torus_rank == 0

    def is_simple(self) -> bool:
        return len(self.factors) == 1 and self.torus_rank == 0

    def is_semisimple(self) -> bool:
        return self.torus_rank == 0

    def __mul__(self, other: "GroupType") -> "GroupType":
        return GroupType(self.factors + other.factors, self.torus_rank + other.torus_rank)

    def __str__(self) -> str:
        parts = [str(f) for f in self.factors]
        if self.torus_rank:
            parts.append(f"T{self.torus_rank}")
        return "x".join(parts) if parts else "e"


TRIVIAL_GROUP = GroupType()


def canonicalize(label: SimpleGroupLabel) -> GroupType:
    """Canonical isomorphism type of a single Killing-Cartan label."""
    return GroupType((label,))


def degrees(group: GroupType) -> tuple[int, ...]:
    """Sorted multiset of rational homotopy generator degrees."""
    out: list[int] = [1] * group.torus_rank
    for f in group.factors:
        out.extend(f.degrees)
    return tuple(sorted(out))


def degree_multiplicities(group: GroupType) -> Counter:
    return Counter(degrees(group))


def weyl_order(group: GroupType) -> int:
    out = 1
    for f in group.factors:
        out *= f.weyl_order
    return out


# ---------------------------------------------------------------------------
# Group-name parsing
# ---------------------------------------------------------------------------

_LABEL_RE = re.compile(r"^([A-D])(\d+)$|^(E[678]|F4|G2)$")
_NAMED_RE = re.compile(r"^(SU|SO|Spin|Sp|U|T)\(?([0-9]+)\)?$")


def _parse_term(term: str) -> GroupType:
    term = term.strip()
    if term in ("e", "{e}", "1", "trivial"):
        return TRIVIAL_GROUP
    if term == "S1":
        return GroupType((), 1)
    if term == "S3":
        return GroupType((SimpleGroupLabel("A", 1),))
    m = _LABEL_RE.match(term)
    if m:
        if m.group(3):
            fam = m.group(3)
            return GroupType((SimpleGroupLabel(fam, _EXCEPTIONAL_RANKS[fam]),))
        return GroupType((SimpleGroupLabel(m.group(1), int(m.group(2))),))
    m = _NAMED_RE.match(term)
    if not m:
        raise InvalidLabel(f"cannot parse group term {term!r}")
    name, n = m.group(1), int(m.group(2))
    if name == "T":
        return GroupType((), n)
    if name == "SU":
        if n < 1:
            raise InvalidLabel(f"SU({n}) is not defined")
        return TRIVIAL_GROUP if n == 1 else GroupType((SimpleGroupLabel("A", n - 1),))
    if name == "U":
        if n < 1:
            raise InvalidLabel(f"U({n}) is not defined")
        return GroupType((SimpleGroupLabel("A", n - 1),), 1) if n > 1 else GroupType((), 1)
    if name == "Sp":
        if n < 0:
            raise InvalidLabel(f"Sp({n}) is not defined")
        return TRIVIAL_GROUP if n == 0 else GroupType((SimpleGroupLabel("C", n),))
    # SO(n) and Spin(n): same local type
    if n < 1:
        raise InvalidLabel(f"{name}({n}) is not defined")
    if n == 1:
        return TRIVIAL_GROUP
    if n % 2:
        return GroupType((SimpleGroupLabel("B", (n - 1) // 2),))
    return GroupType((SimpleGroupLabel("D", n // 2),))


def parse_group(text: str) -> GroupType:
    """Parse a group expression such as ``SU(3)xSU(2)``, ``Spin(9)`` or ``A2xT1``.

    Terms are separated by ``x`` or a Unicode multiplication sign;
    recognized term forms are SU/SO/Spin/Sp/U/T with an integer argument,
    the literals S1, S3, e, and raw labels like B2 or E7.
    """
    text = text.replace("×", "x")
    out = TRIVIAL_GROUP
    for term in text.split("x"):
        out = out * _parse_term(term)
    return out


def special_orthogonal(n: int) -> GroupType:
    return _parse_term(f"SO({n})")


def special_unitary(n: int) -> GroupType:
    return _parse_term(f"SU({n})")


def symplectic(n: int) -> GroupType:
    return _parse_term(f"Sp({n})")


# ---------------------------------------------------------------------------
# Named embeddings
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class NamedEmbedding:
    """A catalogued conjugacy class of subgroup inclusion.

    ``homotopy_map_ranks`` records, per degree, the rank of the induced
    map on rational homotopy.  Degrees absent from the map have no
    declared rank; consumers fall back to the maximal-rank heuristic.
    Tags are free-form symbolic attributes ("block", "spinor",
    "winding:3", "proper-projections", ...).
    """

    id: str
    ambient: GroupType
    subgroup: GroupType
    homotopy_map_ranks: tuple[tuple[int, int], ...] = ()
    tags: frozenset[str] = frozenset()

    def __post_init__(self) -> None:
        object.__setattr__(
            self, "homotopy_map_ranks", tuple(sorted((int(k), int(v)) for k, v in self.homotopy_map_ranks))
        )
        object.__setattr__(self, "tags", frozenset(self.tags))
        validate_embedding(self)

    @property
    def rank_map(self) -> dict[int, int]:
        return dict(self.homotopy_map_ranks)

    def declared_rank(self, degree: int) -> Optional[int]:
        return self.rank_map.get(degree)

    def has_tag(self, tag: str) -> bool:
        return tag in self.tags

    def tag_value(self, prefix: str) -> Optional[str]:
        """Value of a ``prefix:value`` tag, or None."""
        for tag in self.tags:
            if tag.startswith(prefix + ":"):
                return tag[len(prefix) + 1 :]
        return None


def validate_embedding(e: NamedEmbedding) -> None:
    if e.subgroup.dimension > e.ambient.dimension:
        raise InvalidEmbedding(f"{e.id}: subgroup dimension exceeds ambient dimension")
    if e.subgroup.rank > e.ambient.rank:
        raise InvalidEmbedding(f"{e.id}: subgroup rank exceeds ambient rank")
    sub_mult = degree_multiplicities(e.subgroup)
    amb_mult = degree_multiplicities(e.ambient)
    for k, r in e.homotopy_map_ranks:
        if r < 0:
            raise InvalidEmbedding(f"{e.id}: negative map rank in degree {k}")
        if r > min(sub_mult.get(k, 0), amb_mult.get(k, 0)):
            raise InvalidEmbedding(
                f"{e.id}: degree-{k} map rank {r} exceeds multiplicity bound "
                f"min({sub_mult.get(k, 0)}, {amb_mult.get(k, 0)})"
            )


def injective_rank_map(subgroup: GroupType) -> tuple[tuple[int, int], ...]:
    """Declared ranks for a rationally injective inclusion: full subgroup multiplicities."""
    return tuple(sorted(degree_multiplicities(subgroup).items()))


def is_declared_injective(e: NamedEmbedding) -> bool:
    return dict(e.homotopy_map_ranks) == dict(injective_rank_map(e.subgroup))


# ---------------------------------------------------------------------------
# Transitive actions on spheres
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SphereActionRow:
    """One instantiated row of the transitive-sphere-action table."""

    group: GroupType
    isotropy: GroupType
    sphere_dim: int
    family: str = ""
    m: Optional[int] = None
    embedding_classes: frozenset[str] = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        if self.group.dimension - self.isotropy.dimension != self.sphere_dim:
            raise InvalidLabel(
                f"sphere row {self.family}({self.m}): dimension mismatch "
                f"{self.group.dimension} - {self.isotropy.dimension} != {self.sphere_dim}"
            )


def _sphere_row_families(max_m: int) -> Iterable[SphereActionRow]:
    circle = GroupType((), 1)
    sp1 = GroupType((SimpleGroupLabel("A", 1),))
    for m in range(2, max_m + 1):
        classes = {"block", "diagonal"} if m == 4 else {"block"}
        yield SphereActionRow(
            special_orthogonal(m), special_orthogonal(m - 1), m - 1, "so", m, frozenset(classes)
        )
    for m in range(2, max_m + 1):
        yield SphereActionRow(
            special_unitary(m), special_unitary(m - 1), 2 * m - 1, "su", m, frozenset({"block"})
        )
    for m in range(2, max_m + 1):
        yield SphereActionRow(
            special_unitary(m) * circle,
            special_unitary(m - 1) * circle,
            2 * m - 1,
            "su-u1",
            m,
            frozenset({"block"}),
        )
    for m in range(1, max_m + 1):
        yield SphereActionRow(
            symplectic(m), symplectic(m - 1), 4 * m - 1, "sp", m, frozenset({"block"})
        )
    for m in range(1, max_m + 1):
        yield SphereActionRow(
            symplectic(m) * circle,
            symplectic(m - 1) * circle,
            4 * m - 1,
            "sp-u1",
            m,
            frozenset({"block"}),
        )
    for m in range(1, max_m + 1):
        classes = {"block", "diagonal"} if m == 1 else {"block"}
        yield SphereActionRow(
            symplectic(m) * sp1,
            symplectic(m - 1) * sp1,
            4 * m - 1,
            "sp-sp1",
            m,
            frozenset(classes),
        )
    yield SphereActionRow(
        parse_group("G2"), special_unitary(3), 6, "g2", None, frozenset({"block"})
    )
    yield SphereActionRow(
        parse_group("Spin(7)"), parse_group("G2"), 7, "spin7", None, frozenset({"block"})
    )
    yield SphereActionRow(
        parse_group("Spin(9)"), parse_group("Spin(7)"), 15, "spin9", None, frozenset({"spinor"})
    )


def transitive_sphere_pairs(max_m: int = 12) -> list[SphereActionRow]:
    """All effective transitive sphere actions, families instantiated up to ``max_m``."""
    return list(_sphere_row_families(max_m))


def _factor_counter(g: GroupType) -> Counter:
    return Counter(g.factors)


def _passenger_match(ambient: GroupType, sub: GroupType, row: SphereActionRow) -> bool:
    """Does (ambient, sub) equal (row.group, row.isotropy) times a common passenger factor?"""
    amb_extra = _factor_counter(ambient) - _factor_counter(row.group)
    if sum((_factor_counter(row.group) - _factor_counter(ambient)).values()):
        return False
    sub_extra = _factor_counter(sub) - _factor_counter(row.isotropy)
    if sum((_factor_counter(row.isotropy) - _factor_counter(sub)).values()):
        return False
    if amb_extra != sub_extra:
        return False
    amb_torus = ambient.torus_rank - row.group.torus_rank
    sub_torus = sub.torus_rank - row.isotropy.torus_rank
    return amb_torus >= 0 and sub_torus >= 0 and amb_torus == sub_torus


_STANDARDNESS_TAGS = ("block", "diagonal", "spinor")


def sphere_quotient(ambient: GroupType, sub: NamedEmbedding) -> Optional[int]:
    """Sphere dimension of ambient/subgroup, if the pair is a catalogued sphere action.

    The inclusion must be declared standard for some table row (its tags
    carry the row's embedding class); factors of the ambient group acting
    trivially are cancelled against equal factors of the subgroup before
    matching.  Returns None when no row matches.
    """
    if sub.ambient != ambient:
        raise InvalidEmbedding(f"{sub.id}: embedding does not live in the given ambient group")
    ell = ambient.dimension - sub.subgroup.dimension
    max_m = 2 * ambient.rank + 3
    for row in transitive_sphere_pairs(max_m):
        if row.sphere_dim != ell:
            continue
        if not (row.embedding_classes & sub.tags):
            continue
        if _passenger_match(ambient, sub.subgroup, row):
            return ell
    return None


def spheres_acted_on(group: GroupType) -> set[int]:
    """All sphere dimensions on which a simple group acts transitively."""
    if not group.is_simple():
        raise Unsupported("spheres_acted_on is defined for simple groups only")
    max_m = max(12, 2 * group.rank + 3)
    return {row.sphere_dim for row in transitive_sphere_pairs(max_m) if row.group == group}
