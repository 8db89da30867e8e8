"""Command-line front end.

Every subcommand reads scalar flags (and, for diagrams, a JSON document
from a file or stdin) and writes one deterministic JSON payload to
stdout.  Exit codes: 0 success, 1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from typing import Optional

from .brieskorn import BrieskornParams, delta_at_one, delta_poly, homology, rational_sphere_gate
from .catalog import Catalog, default_catalog
from .classification import (
    SevenFamilyParams,
    brieskorn_diagram,
    classify_diagram,
    realize_torsion,
    seven_family_diagram,
    seven_family_torsion,
    tensor_sp_diagram,
    tensor_su_diagram,
)
from .diagram import GroupDiagram, gh_classify, mv_feasible, primitivity, validate
from .errors import CohomoneError
from .lie_catalog import degrees, parse_group, weyl_order
from .polynomial import IntegerPolynomial
from .rational_homotopy import (
    HomogeneousSpaceModel,
    euler_characteristic,
    hilbert_series,
    odd_product_poincare,
    quotient_homotopy,
)
from .verify import build_report

#: which subcommand exercises each public library operation (coverage-tested)
OP_COVERAGE = {
    "canonicalize": "degrees",
    "degrees": "degrees",
    "weyl_order": "degrees",
    "transitive_sphere_pairs": "verify-tables",
    "sphere_quotient": "verify-tables",
    "spheres_acted_on": "verify-tables",
    "quotient_homotopy": "quotient",
    "hilbert_series": "hilbert",
    "euler_characteristic": "hilbert",
    "odd_product_poincare": "mv-check",
    "validate": "classify",
    "gh_classify": "gh-case",
    "primitivity": "primitivity",
    "equivalent": "classify",
    "double_disk_euler": "verify-tables",
    "mv_feasible": "mv-check",
    "delta_poly": "brieskorn",
    "delta_at_one": "brieskorn",
    "homology": "brieskorn",
    "enumerate_corank2": "verify-tables",
    "table3_filter": "verify-tables",
    "seven_family_torsion": "seven-family",
    "realize_torsion": "seven-family",
    "case6_pairs": "verify-tables",
    "classify_diagram": "classify",
}


@dataclass(frozen=True)
class CommandResult:
    exit_code: int
    payload: dict


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # exit code 2, diagnostics on stderr
        raise _UsageError(message)


def _coeffs(text: str) -> IntegerPolynomial:
    text = text.strip()
    if not text:
        return IntegerPolynomial.one()
    return IntegerPolynomial(tuple(int(v) for v in text.split(",")))


def _sphere_poly(text: str) -> IntegerPolynomial:
    dims = [int(v) for v in text.split(",") if v.strip()]
    return odd_product_poincare(dims)


def _load_diagram(spec: str, catalog: Catalog) -> GroupDiagram:
    raw = sys.stdin.read() if spec == "-" else open(spec, "r", encoding="utf-8").read()
    try:
        document = json.loads(raw)
    except json.JSONDecodeError as exc:
        raise _UsageError(f"diagram document is not valid JSON: {exc}") from exc
    return _diagram_from_document(document, catalog)


def _diagram_from_document(document: dict, catalog: Catalog) -> GroupDiagram:
    if "catalog" in document:
        return catalog.diagram_record(document["catalog"]).diagram
    family = document.get("family")
    if family == "brieskorn":
        return brieskorn_diagram(
            int(document["m"]), int(document["d"]),
            document.get("variant", "standard"), catalog,
        )
    if family == "seven":
        params = SevenFamilyParams(
            int(document["p_minus"]), int(document["q_minus"]),
            int(document["p_plus"]), int(document["q_plus"]),
        )
        return seven_family_diagram(params, catalog)
    if family == "tensor-su":
        return tensor_su_diagram(int(document["n"]), catalog)
    if family == "tensor-sp":
        return tensor_sp_diagram(int(document["n"]), catalog)
    if family is not None:
        raise _UsageError(f"unknown diagram family {family!r}")
    return catalog.diagram_from_record(document)


def _embedding_payload(embedding_id: str, catalog: Catalog) -> tuple:
    embedding = catalog.embedding(embedding_id)
    return embedding, HomogeneousSpaceModel.of(embedding)


def _build_parser() -> _Parser:
    parser = _Parser(prog="cohomone", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("brieskorn", help="monodromy polynomial and homology of B^(2m-1)_d")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--d", type=int, required=True)

    p = sub.add_parser("degrees", help="rank, dimension, degrees and Weyl order of a group")
    p.add_argument("--group", required=True, help="group expression, e.g. 'SU(3)xSU(2)'")

    p = sub.add_parser("quotient", help="rational homotopy of G/H for a catalogued inclusion")
    p.add_argument("--embedding", required=True, help="catalog embedding id")

    p = sub.add_parser("hilbert", help="equal-rank Poincare series and Euler characteristic")
    p.add_argument("--embedding", required=True, help="catalog embedding id")

    p = sub.add_parser("gh-case", help="compatible homotopy-fiber cases and forced dimensions")
    p.add_argument("--l-minus", type=int, required=True)
    p.add_argument("--l-plus", type=int, required=True)
    p.add_argument("--h", type=int, required=True, help="number of non-orientable singular orbits")
    p.add_argument("--fiber", default=None, help="exceptional fiber tag to select")

    p = sub.add_parser("classify", help="classify a diagram document")
    p.add_argument("--diagram", required=True, help="JSON file path or '-' for stdin")

    p = sub.add_parser("primitivity", help="scan the shipped lattice for non-primitivity witnesses")
    p.add_argument("--diagram", required=True, help="JSON file path or '-' for stdin")
    p.add_argument("--rational-sphere", action="store_true",
                   help="assert the total space is a rational sphere")

    p = sub.add_parser("mv-check", help="Mayer-Vietoris rank feasibility for Betti data")
    p.add_argument("--n", type=int, required=True)
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--p-h", help="comma-separated Betti numbers of G/H by degree")
    g.add_argument("--h-spheres", help="sphere dimensions whose product models G/H")
    p.add_argument("--p-k-plus", help="Betti numbers of G/K+")
    p.add_argument("--k-plus-spheres", help="sphere dimensions whose product models G/K+")
    p.add_argument("--p-k-minus", help="Betti numbers of G/K-")
    p.add_argument("--k-minus-spheres", help="sphere dimensions whose product models G/K-")

    p = sub.add_parser("seven-family", help="torsion arithmetic of the seven-manifold family")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--realize", type=int, help="build parameters realizing this torsion order")
    g.add_argument("--p-minus", type=int)
    p.add_argument("--q-minus", type=int, default=1)
    p.add_argument("--p-plus", type=int, default=None)
    p.add_argument("--q-plus", type=int, default=1)

    sub.add_parser("verify-tables", help="verify every shipped table and closed form")
    return parser


def _cmd_brieskorn(args, catalog: Catalog) -> CommandResult:
    params = BrieskornParams(args.m, args.d)
    groups = homology(params)
    payload = {
        "m": params.m,
        "d": params.d,
        "delta_coeffs": delta_poly(params).as_list(),
        "delta_at_one": delta_at_one(params),
        "homology": [
            {"degree": e.degree, "free_rank": e.free_rank, "torsion": list(e.torsion)}
            for e in groups.entries
        ],
        "rational_sphere": rational_sphere_gate(params),
    }
    return CommandResult(0, payload)


def _cmd_degrees(args, catalog: Catalog) -> CommandResult:
    group = parse_group(args.group)
    payload = {
        "group": str(group),
        "rank": group.rank,
        "dimension": group.dimension,
        "degrees": list(degrees(group)),
        "weyl_order": weyl_order(group),
    }
    return CommandResult(0, payload)


def _cmd_quotient(args, catalog: Catalog) -> CommandResult:
    embedding, space = _embedding_payload(args.embedding, catalog)
    qh = quotient_homotopy(space)
    payload = {
        "embedding": embedding.id,
        "ambient": str(embedding.ambient),
        "subgroup": str(embedding.subgroup),
        "odd_degrees": list(qh.odd_degrees),
        "even_degrees": list(qh.even_degrees),
        "heuristic": qh.heuristic,
        "dimension": space.dimension,
    }
    return CommandResult(0, payload)


def _cmd_hilbert(args, catalog: Catalog) -> CommandResult:
    embedding, space = _embedding_payload(args.embedding, catalog)
    series = hilbert_series(space)
    payload = {
        "embedding": embedding.id,
        "coefficients": series.as_list(),
        "euler_characteristic": euler_characteristic(space),
        "dimension": space.dimension,
    }
    return CommandResult(0, payload)


def _cmd_gh_case(args, catalog: Catalog) -> CommandResult:
    cases = gh_classify(args.l_minus, args.l_plus, args.h, args.fiber)
    payload = {
        "query": {"l_minus": args.l_minus, "l_plus": args.l_plus, "h": args.h, "fiber": args.fiber},
        "cases": [
            {"case": c.case_index, "fiber": c.fiber_model, "dim": c.forced_dim} for c in cases
        ],
    }
    return CommandResult(0, payload)


def _cmd_classify(args, catalog: Catalog) -> CommandResult:
    diagram = _load_diagram(args.diagram, catalog)
    violations = validate(diagram)
    if violations:
        raise _UsageError(
            "diagram is invalid: " + "; ".join(str(v) for v in violations)
        )
    outcome = classify_diagram(diagram, catalog)
    payload = {
        "group": str(diagram.g),
        "ell_minus": diagram.ell_minus,
        "ell_plus": diagram.ell_plus,
        "manifold_dim": diagram.manifold_dim,
        "outcome": outcome.as_dict(),
    }
    return CommandResult(0, payload)


def _cmd_primitivity(args, catalog: Catalog) -> CommandResult:
    diagram = _load_diagram(args.diagram, catalog)
    lattice = catalog.lattice_for(diagram.g)
    result = primitivity(diagram, lattice, assert_rational_sphere=args.rational_sphere)
    payload = {
        "group": str(diagram.g),
        "lattice_size": len(lattice),
        "verdict": result.verdict,
        "witness": result.witness,
    }
    return CommandResult(0, payload)


def _cmd_mv_check(args, catalog: Catalog) -> CommandResult:
    def pick(coeffs: Optional[str], spheres: Optional[str], name: str) -> IntegerPolynomial:
        if coeffs is not None:
            return _coeffs(coeffs)
        if spheres is not None:
            return _sphere_poly(spheres)
        raise _UsageError(f"missing {name} (give Betti coefficients or sphere dimensions)")

    p_h = pick(args.p_h, args.h_spheres, "--p-h/--h-spheres")
    p_kp = pick(args.p_k_plus, args.k_plus_spheres, "--p-k-plus/--k-plus-spheres")
    p_km = pick(args.p_k_minus, args.k_minus_spheres, "--p-k-minus/--k-minus-spheres")
    result = mv_feasible(p_h, p_kp, p_km, args.n)
    payload = {
        "n": args.n,
        "p_h": p_h.as_list(),
        "p_k_plus": p_kp.as_list(),
        "p_k_minus": p_km.as_list(),
        "verdict": result.verdict,
        "failing_degree": result.failing_degree,
        "rank_profile": [list(row) for row in result.rank_profile],
    }
    return CommandResult(0, payload)


def _cmd_seven_family(args, catalog: Catalog) -> CommandResult:
    if args.realize is not None:
        params = realize_torsion(args.realize)
    else:
        if args.p_plus is None:
            raise _UsageError("--p-plus is required with --p-minus")
        params = SevenFamilyParams(args.p_minus, args.q_minus, args.p_plus, args.q_plus)
    torsion = seven_family_torsion(params)
    payload = {
        "params": {
            "p_minus": params.p_minus,
            "q_minus": params.q_minus,
            "p_plus": params.p_plus,
            "q_plus": params.q_plus,
        },
        "torsion": torsion,
        "rational_sphere": torsion != 0,
    }
    return CommandResult(0, payload)


def _cmd_verify_tables(args, catalog: Catalog) -> CommandResult:
    report = build_report(catalog)
    return CommandResult(0 if report["summary"]["ok"] else 1, report)


_HANDLERS = {
    "brieskorn": _cmd_brieskorn,
    "degrees": _cmd_degrees,
    "quotient": _cmd_quotient,
    "hilbert": _cmd_hilbert,
    "gh-case": _cmd_gh_case,
    "classify": _cmd_classify,
    "primitivity": _cmd_primitivity,
    "mv-check": _cmd_mv_check,
    "seven-family": _cmd_seven_family,
    "verify-tables": _cmd_verify_tables,
}


def run(argv: list[str], catalog: Optional[Catalog] = None) -> CommandResult:
    """Dispatch one command line; returns the exit code and JSON payload."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        handler = _HANDLERS[args.command]
        return handler(args, catalog or default_catalog())
    except _UsageError as exc:
        return CommandResult(2, {"error": str(exc)})
    except CohomoneError as exc:
        return CommandResult(2, {"error": f"{type(exc).__name__}: {exc}"})


def render(payload: dict) -> str:
    return json.dumps(payload, sort_keys=True, indent=2) + "\n"


def main(argv: Optional[list[str]] = None) -> int:
    result = run(sys.argv[1:] if argv is None else argv)
    if result.exit_code == 2:
        sys.stderr.write(render(result.payload))
    else:
        sys.stdout.write(render(result.payload))
    return result.exit_code


if __name__ == "__main__":
    sys.exit(main())
