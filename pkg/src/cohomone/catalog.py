"""Loading of the shipped embedding and diagram catalogs.

The catalogs are versioned JSON files under ``cohomone/data``; the
environment variable ``COHOMONE_DATA_DIR`` points the loader at an
alternative directory carrying the same file names.  All records are
immutable after load.

Embedding records may be concrete or parameterized families (one
integer parameter ``m`` with a lower bound); family group expressions
use linear forms in ``m`` as arguments, e.g. ``Spin(2m+1)``.
"""

from __future__ import annotations

import json
import os
import re
from dataclasses import dataclass, field
from functools import lru_cache
from pathlib import Path
from typing import Mapping, Optional

from .diagram import GroupDiagram
from .errors import InvalidDiagram, InvalidLabel
from .lie_catalog import GroupType, NamedEmbedding, injective_rank_map, parse_group
from .polynomial import IntegerPolynomial

_DATA_ENV = "COHOMONE_DATA_DIR"
_LINEAR_RE = re.compile(r"^\s*(?:(\d*)\s*m\s*)?([+-]?\s*\d+)?\s*$")


def _eval_linear(expr: str, m: int) -> int:
    match = _LINEAR_RE.match(expr)
    if not match or (match.group(1) is None and match.group(2) is None):
        raise InvalidLabel(f"cannot evaluate parameter expression {expr!r}")
    coef_text, offset_text = match.groups()
    coef = 0
    if coef_text is not None:
        coef = int(coef_text) if coef_text else 1
    offset = int(offset_text.replace(" ", "")) if offset_text else 0
    return coef * m + offset


def _substitute(expr: str, m: int) -> str:
    return re.sub(r"\(([^()]*)\)", lambda mt: f"({_eval_linear(mt.group(1), m)})", expr)


def _rank_map(spec, subgroup: GroupType) -> tuple[tuple[int, int], ...]:
    if spec == "injective":
        return injective_rank_map(subgroup)
    if isinstance(spec, Mapping):
        return tuple(sorted((int(k), int(v)) for k, v in spec.items()))
    raise InvalidLabel(f"bad map_ranks spec {spec!r}")


def _embedding_from_record(record: Mapping) -> NamedEmbedding:
    subgroup = parse_group(record["subgroup"])
    return NamedEmbedding(
        id=record["id"],
        ambient=parse_group(record["ambient"]),
        subgroup=subgroup,
        homotopy_map_ranks=_rank_map(record.get("map_ranks", {}), subgroup),
        tags=frozenset(record.get("tags", ())),
    )


@dataclass(frozen=True)
class EmbeddingFamily:
    """A subgroup-inclusion family parameterized by an integer m."""

    id: str
    ambient_expr: str
    subgroup_expr: str
    param_min: int
    map_ranks_spec: object
    tags: frozenset[str]
    tags_at: Mapping[str, tuple[str, ...]] = field(default_factory=dict)

    def instantiate(self, m: int) -> NamedEmbedding:
        if m < self.param_min:
            raise InvalidLabel(f"{self.id}: parameter m={m} below minimum {self.param_min}")
        subgroup = parse_group(_substitute(self.subgroup_expr, m))
        tags = set(self.tags) | set(self.tags_at.get(str(m), ()))
        return NamedEmbedding(
            id=f"{self.id}@m={m}",
            ambient=parse_group(_substitute(self.ambient_expr, m)),
            subgroup=subgroup,
            homotopy_map_ranks=_rank_map(self.map_ranks_spec, subgroup),
            tags=frozenset(tags),
        )

    def instances_up_to_rank(self, max_rank: int) -> list[NamedEmbedding]:
        out = []
        m = self.param_min
        while True:
            e = self.instantiate(m)
            if e.ambient.rank > max_rank:
                break
            out.append(e)
            m += 1
        return out


@dataclass(frozen=True)
class DiagramRecord:
    """A catalogued diagram with its stored classification metadata."""

    id: str
    diagram: GroupDiagram
    outcome: Optional[Mapping] = None
    rational_sphere: bool = False
    orbit_poincare: Optional[Mapping] = None
    tags: frozenset[str] = frozenset()

    def stored_betti(self) -> Optional[tuple[IntegerPolynomial, IntegerPolynomial, IntegerPolynomial, int]]:
        if not self.orbit_poincare:
            return None
        data = self.orbit_poincare
        return (
            IntegerPolynomial(tuple(data["h"])),
            IntegerPolynomial(tuple(data["k_plus"])),
            IntegerPolynomial(tuple(data["k_minus"])),
            int(data["n"]),
        )


class Catalog:
    """The embedding and diagram registries, indexed by id."""

    def __init__(self) -> None:
        self._embeddings: dict[str, NamedEmbedding] = {}
        self._families: dict[str, EmbeddingFamily] = {}
        self._diagrams: dict[str, DiagramRecord] = {}

    # -- embeddings --------------------------------------------------------

    def register(self, embedding: NamedEmbedding) -> NamedEmbedding:
        existing = self._embeddings.get(embedding.id)
        if existing is not None:
            if existing != embedding:
                raise InvalidLabel(f"conflicting registrations for embedding id {embedding.id!r}")
            return existing
        self._embeddings[embedding.id] = embedding
        return embedding

    def embedding(self, embedding_id: str) -> NamedEmbedding:
        try:
            return self._embeddings[embedding_id]
        except KeyError:
            raise InvalidLabel(f"unknown embedding id {embedding_id!r}") from None

    def embeddings(self) -> list[NamedEmbedding]:
        return [self._embeddings[k] for k in sorted(self._embeddings)]

    def families(self) -> list[EmbeddingFamily]:
        return [self._families[k] for k in sorted(self._families)]

    def corank2_sources(self, max_rank: int) -> list[tuple[NamedEmbedding, str, Optional[int]]]:
        """Concrete and instantiated embeddings tagged for the corank-2 table.

        Returns (embedding, family id, parameter) triples; concrete rows
        carry their own id as family and no parameter.
        """
        out: list[tuple[NamedEmbedding, str, Optional[int]]] = []
        for e in self.embeddings():
            if e.has_tag("corank2") and e.ambient.rank <= max_rank:
                out.append((e, e.id, None))
        for fam in self.families():
            if "corank2" not in fam.tags:
                continue
            for e in fam.instances_up_to_rank(max_rank):
                m = int(e.id.rsplit("=", 1)[1])
                out.append((e, fam.id, m))
        return out

    def lattice_for(self, group: GroupType) -> list[NamedEmbedding]:
        return [e for e in self.embeddings() if e.has_tag("lattice") and e.ambient == group]

    # -- diagrams ----------------------------------------------------------

    def register_diagram(self, record: DiagramRecord) -> DiagramRecord:
        existing = self._diagrams.get(record.id)
        if existing is not None:
            if existing != record:
                raise InvalidDiagram(f"conflicting registrations for diagram id {record.id!r}")
            return existing
        self._diagrams[record.id] = record
        return record

    def diagram_record(self, diagram_id: str) -> DiagramRecord:
        try:
            return self._diagrams[diagram_id]
        except KeyError:
            raise InvalidDiagram(f"unknown diagram id {diagram_id!r}") from None

    def diagram_records(self) -> list[DiagramRecord]:
        return [self._diagrams[k] for k in sorted(self._diagrams)]

    # -- construction ------------------------------------------------------

    def _load_embeddings(self, path: Path) -> None:
        data = json.loads(path.read_text())
        for record in data["embeddings"]:
            self.register(_embedding_from_record(record))
        for record in data.get("families", ()):
            fam = EmbeddingFamily(
                id=record["id"],
                ambient_expr=record["ambient"],
                subgroup_expr=record["subgroup"],
                param_min=int(record["param_min"]),
                map_ranks_spec=record.get("map_ranks", {}),
                tags=frozenset(record.get("tags", ())),
                tags_at={k: tuple(v) for k, v in record.get("tags_at", {}).items()},
            )
            if fam.id in self._families:
                raise InvalidLabel(f"duplicate family id {fam.id!r}")
            self._families[fam.id] = fam

    def diagram_from_record(self, record: Mapping) -> GroupDiagram:
        counts = record.get("component_counts", {})
        flags = record.get("nonorientable", {})
        return GroupDiagram(
            g=parse_group(record["g"]),
            h=self.embedding(record["h"]),
            k_minus=self.embedding(record["k_minus"]),
            k_plus=self.embedding(record["k_plus"]),
            h_in_k_minus=self.embedding(record["h_in_k_minus"]),
            h_in_k_plus=self.embedding(record["h_in_k_plus"]),
            components_h=int(counts.get("h", 1)),
            components_k_minus=int(counts.get("k_minus", 1)),
            components_k_plus=int(counts.get("k_plus", 1)),
            nonorientable_k_minus=bool(flags.get("k_minus", False)),
            nonorientable_k_plus=bool(flags.get("k_plus", False)),
        )

    def _load_diagrams(self, path: Path) -> None:
        data = json.loads(path.read_text())
        for record in data["diagrams"]:
            self.register_diagram(
                DiagramRecord(
                    id=record["id"],
                    diagram=self.diagram_from_record(record),
                    outcome=record.get("outcome"),
                    rational_sphere=bool(record.get("rational_sphere", False)),
                    orbit_poincare=record.get("orbit_poincare"),
                    tags=frozenset(record.get("tags", ())),
                )
            )


def data_dir() -> Path:
    override = os.environ.get(_DATA_ENV)
    if override:
        return Path(override)
    return Path(__file__).resolve().parent / "data"


def load_catalog(directory: Optional[Path] = None) -> Catalog:
    base = Path(directory) if directory is not None else data_dir()
    catalog = Catalog()
    catalog._load_embeddings(base / "embeddings.json")
    catalog._load_diagrams(base / "diagrams.json")
    return catalog


@lru_cache(maxsize=4)
def _cached_catalog(directory: str) -> Catalog:
    return load_catalog(Path(directory))


def default_catalog() -> Catalog:
    return _cached_catalog(str(data_dir()))
