"""One-shot verification of every shipped table and closed-form invariant.

Builds a machine-readable report with one record per checked cell:
expected value (from embedded data or a closed form), computed value,
and a match flag.  The report is deterministic: fixed ordering, no
timestamps, plain JSON-serializable values.
"""

from __future__ import annotations

from typing import Optional

from .brieskorn import BrieskornParams, delta_at_one, delta_poly, homology, rational_sphere_gate
from .catalog import Catalog, default_catalog
from .classification import (
    SevenFamilyParams,
    case6_pairs,
    classify_diagram,
    enumerate_corank2,
    orbit_betti,
    realize_torsion,
    seven_family_torsion,
    table3_filter,
)
from .diagram import double_disk_euler, gh_classify, mv_feasible
from .lie_catalog import transitive_sphere_pairs
from .polynomial import IntegerPolynomial
from .rational_homotopy import HomogeneousSpaceModel, euler_characteristic, hilbert_series


def _check(checks: list, check_id: str, expected, computed) -> None:
    checks.append(
        {
            "id": check_id,
            "expected": expected,
            "computed": computed,
            "match": expected == computed,
        }
    )


# -- Table 1 ----------------------------------------------------------------


def _check_table1(checks: list, max_m: int = 12) -> None:
    rows = transitive_sphere_pairs(max_m)
    families = sorted({row.family for row in rows})
    _check(checks, "table1/family-count", 9, len(families))
    for row in rows:
        tag = f"table1/{row.family}" + (f"/m={row.m}" if row.m is not None else "")
        _check(
            checks,
            tag,
            row.sphere_dim,
            row.group.dimension - row.isotropy.dimension,
        )


# -- Tables 2 and 3 -----------------------------------------------------------

# expected (ell_minus, ell_minus + ell_plus, ell_plus) per family; parameterized
# families are closed forms in m
_TABLE2_SPORADIC = {
    "su6-so6": (9, 11, 2),
    "su6-sp3": (5, 9, 4),
    "su5-sp2": (5, 9, 4),
    "spin9-sp2": (11, 15, 4),
    "spin9-g2": (7, 15, 8),
    "spin8-g2": (7, 7, 0),
    "e6-f4": (9, 17, 8),
    "f4-g2": (15, 23, 8),
    "g2-trivial": (3, 11, 8),
}

_TABLE2_FAMILIES = {
    "su(m)/su(m-2)": lambda m: (2 * m - 3, 2 * m - 1, 2),
    "spin(2m+1)/spin(2m-3)": lambda m: (4 * m - 5, 4 * m - 1, 4),
    "sp(m)/sp(m-2)": lambda m: (4 * m - 5, 4 * m - 1, 4),
    "spin(2m)/spin(2m-3)": lambda m: (2 * m - 1, 4 * m - 5, 2 * m - 4),
}

_TABLE2_RANGES = {
    # family -> (min m, ambient rank as function of m) for the max_rank 9 run
    "su(m)/su(m-2)": (3, lambda m: m - 1),
    "spin(2m+1)/spin(2m-3)": (4, lambda m: m),
    "sp(m)/sp(m-2)": (2, lambda m: m),
    "spin(2m)/spin(2m-3)": (4, lambda m: m),
}

_TABLE3_EXPECTED = {
    ("su(m)/su(m-2)", 4),
    ("su5-sp2", None),
    ("spin(2m+1)/spin(2m-3)", 4),
    ("spin9-sp2", None),
    ("sp(m)/sp(m-2)", 4),
    ("spin(2m)/spin(2m-3)", 4),
    ("spin(2m)/spin(2m-3)", 5),
    ("spin(2m)/spin(2m-3)", 6),
    ("spin(2m)/spin(2m-3)", 7),
    ("spin(2m)/spin(2m-3)", 8),
    ("spin(2m)/spin(2m-3)", 9),
}


def _expected_table2(max_rank: int) -> dict[tuple[str, Optional[int]], tuple[int, int, int]]:
    expected: dict[tuple[str, Optional[int]], tuple[int, int, int]] = {
        (fam, None): cols for fam, cols in _TABLE2_SPORADIC.items()
    }
    for fam, columns in _TABLE2_FAMILIES.items():
        m_min, rank_of = _TABLE2_RANGES[fam]
        m = m_min
        while rank_of(m) <= max_rank:
            expected[(fam, m)] = columns(m)
            m += 1
    return expected


def _check_table2(checks: list, catalog: Catalog, max_rank: int = 9) -> list:
    rows = enumerate_corank2(max_rank, catalog)
    computed = {(r.family, r.param): (r.ell_minus, r.total, r.ell_plus) for r in rows}
    expected = _expected_table2(max_rank)
    _check(checks, "table2/family-count", 13, len({fam for fam, _ in computed}))
    for key in sorted(expected, key=lambda k: (k[0], k[1] or 0)):
        fam, param = key
        tag = f"table2/{fam}" + (f"/m={param}" if param is not None else "")
        _check(checks, tag, list(expected[key]), list(computed.get(key, ())))
    extras = sorted(set(computed) - set(expected), key=lambda k: (k[0], k[1] or 0))
    _check(checks, "table2/no-extra-rows", [], [f"{fam}@{param}" for fam, param in extras])
    return rows


def _check_table3(checks: list, rows) -> None:
    kept = table3_filter(rows)
    computed = sorted(
        (r.family, r.param if r.param is not None else -1) for r in kept
    )
    expected = sorted((fam, param if param is not None else -1) for fam, param in _TABLE3_EXPECTED)
    _check(checks, "table3/rows", [list(e) for e in expected], [list(c) for c in computed])
    _check(checks, "table3/family-count", 6, len({fam for fam, _ in computed}))


# -- the five eleven-sphere diagrams ------------------------------------------

_TABLE5_EXPECTED = {
    "t5-row1": {"kind": "g2-quotient", "index": 3},
    "t5-row2": {"kind": "not-rational-sphere"},
    "t5-row3": {"kind": "not-rational-sphere"},
    "t5-row4": {"kind": "linear-sphere"},
    "t5-row5": {"kind": "g2-quotient", "index": 1},
}


def _check_table5(checks: list, catalog: Catalog) -> None:
    for record_id, expected in sorted(_TABLE5_EXPECTED.items()):
        record = catalog.diagram_record(record_id)
        outcome = classify_diagram(record.diagram, catalog).as_dict()
        swapped = classify_diagram(record.diagram.swap(), catalog).as_dict()
        computed = {k: outcome.get(k) for k in expected}
        _check(checks, f"table5/{record_id}", expected, computed)
        _check(checks, f"table5/{record_id}/swap-invariant", outcome, swapped)


# -- Brieskorn grid -----------------------------------------------------------


def _homology_signature(m: int, d: int) -> list:
    return [
        [e.degree, e.free_rank, list(e.torsion)]
        for e in homology(BrieskornParams(m, d)).entries
    ]


def _expected_homology(m: int, d: int) -> list:
    top = 2 * m - 1
    if m % 2 == 0:
        middle = [] if d == 1 else [[m - 1, 0, [d]]]
    elif d % 2 == 0:
        middle = [[m - 1, 1, []], [m, 1, []]]
    else:
        middle = []
    return [[0, 1, []]] + middle + [[top, 1, []]]


def _check_brieskorn(checks: list, m_range=range(3, 11), d_range=range(1, 51)) -> None:
    mismatches = []
    gate_mismatches = []
    order_mismatches = []
    for m in m_range:
        for d in d_range:
            p = BrieskornParams(m, d)
            if delta_poly(p)(1) != delta_at_one(p):
                mismatches.append([m, d, "delta"])
            if _homology_signature(m, d) != _expected_homology(m, d):
                mismatches.append([m, d, "homology"])
            if homology(p).is_rational_sphere(p.sphere_dim) != rational_sphere_gate(p):
                gate_mismatches.append([m, d])
            if m == 4:
                torsion = homology(p).torsion(3)
                order = torsion[0] if torsion else 1
                if order != d:
                    order_mismatches.append([m, d])
    _check(checks, "brieskorn/delta-and-homology-grid", [], mismatches)
    _check(checks, "brieskorn/rational-sphere-gate", [], gate_mismatches)
    _check(checks, "brieskorn/middle-order-at-m=4", [], order_mismatches)


# -- seven-manifold family -----------------------------------------------------


def _check_seven_family(checks: list, t_max: int = 1000) -> None:
    bad = []
    for t in range(1, t_max + 1):
        params = realize_torsion(t)
        if seven_family_torsion(params) != t:
            bad.append(t)
        for v in (params.p_minus, params.q_minus, params.p_plus, params.q_plus):
            if v % 4 != 1:
                bad.append(t)
    _check(checks, "seven-family/roundtrip", [], bad)
    flat = SevenFamilyParams(1, 1, 1, 1)
    _check(checks, "seven-family/degenerate-r", 0, seven_family_torsion(flat))


# -- fiber-case classifier ------------------------------------------------------


def _check_gh(checks: list, ell_max: int = 50) -> None:
    parity_failures = []
    formula_failures = []
    for ell_minus in range(1, ell_max + 1):
        for ell_plus in range(1, ell_max + 1):
            for h in (0, 1, 2):
                for result in gh_classify(ell_minus, ell_plus, h):
                    if result.forced_dim % 2 == 0:
                        parity_failures.append([ell_minus, ell_plus, h, result.case_index])
                    if result.case_index == 4:
                        same = ell_minus % 2 == ell_plus % 2
                        want = ell_minus + ell_plus + 1 if same else 2 * (ell_minus + ell_plus) + 1
                        if result.forced_dim != want:
                            formula_failures.append([ell_minus, ell_plus, h])
    _check(checks, "gh/all-forced-dims-odd", [], parity_failures)
    _check(checks, "gh/case4-parity-dichotomy", [], formula_failures)
    g2_query = [(r.case_index, r.forced_dim) for r in gh_classify(3, 2, 0)]
    _check(checks, "gh/query-3-2-0", [[4, 11]], [list(x) for x in g2_query])
    case6 = gh_classify(4, 4, 0, fiber_hint="sp3-mod-sp1cubed")
    _check(
        checks,
        "gh/query-4-4-0-hinted",
        [[4, 9], [5, 5], [6, 13]],
        [[r.case_index, r.forced_dim] for r in case6],
    )


# -- equal-rank invariants -------------------------------------------------------

_EQUAL_RANK_EXPECTED = {
    "t2-in-su3": 6,
    "t2-in-sp2": 8,
    "t2-in-g2": 12,
    "sp1cubed-in-sp3": 6,
    "spin8-in-f4": 6,
}


def _check_equal_rank(checks: list, catalog: Catalog) -> None:
    for embedding_id, expected_chi in sorted(_EQUAL_RANK_EXPECTED.items()):
        space = HomogeneousSpaceModel.of(catalog.embedding(embedding_id))
        _check(checks, f"equal-rank/chi/{embedding_id}", expected_chi, euler_characteristic(space))
    for embedding in catalog.embeddings():
        if embedding.subgroup.rank != embedding.ambient.rank:
            continue
        space = HomogeneousSpaceModel.of(embedding)
        _check(
            checks,
            f"equal-rank/series-at-1/{embedding.id}",
            euler_characteristic(space),
            hilbert_series(space)(1),
        )
    for pair in case6_pairs():
        _check(
            checks,
            f"equal-rank/case6-fiber-dim/{pair.fiber_tag}",
            True,
            pair.fiber_dim in (2, 4, 8),
        )
    for record in catalog.diagram_records():
        check = double_disk_euler(record.diagram)
        if record.diagram.manifold_dim % 2:
            _check(checks, f"equal-rank/double-disk-euler/{record.id}", 0, check.value)


# -- Mayer-Vietoris feasibility ---------------------------------------------------


def _check_mv(checks: list, catalog: Catalog) -> None:
    for record in catalog.diagram_records():
        if not record.rational_sphere:
            continue
        betti = orbit_betti(record.diagram, catalog)
        if betti is None:
            _check(checks, f"mv/feasible/{record.id}", "derivable", "no-betti-data")
            continue
        result = mv_feasible(betti.p_h, betti.p_k_plus, betti.p_k_minus, betti.n)
        _check(checks, f"mv/feasible/{record.id}", "feasible", result.verdict)
        lhs = sum(
            (-1) ** k * (betti.p_k_plus.coefficient(k) + betti.p_k_minus.coefficient(k) - betti.p_h.coefficient(k))
            for k in range(max(betti.p_h.degree, betti.p_k_plus.degree, betti.p_k_minus.degree) + 1)
        )
        rhs = 1 + (-1) ** betti.n
        _check(checks, f"mv/alternating-sum/{record.id}", rhs, lhs)
    counterexample = mv_feasible(
        IntegerPolynomial((1, 0, 0, 1)),
        IntegerPolynomial((1, 0, 1)),
        IntegerPolynomial((1, 0, 1)),
        5,
    )
    _check(checks, "mv/counterexample-verdict", "infeasible", counterexample.verdict)
    _check(checks, "mv/counterexample-degree", 2, counterexample.failing_degree)


# -- entry point -------------------------------------------------------------------


def build_report(catalog: Optional[Catalog] = None) -> dict:
    """Run every table/formula verification and assemble the report."""
    catalog = catalog or default_catalog()
    checks: list = []
    _check_table1(checks)
    rows = _check_table2(checks, catalog)
    _check_table3(checks, rows)
    _check_table5(checks, catalog)
    _check_brieskorn(checks)
    _check_seven_family(checks)
    _check_gh(checks)
    _check_equal_rank(checks, catalog)
    _check_mv(checks, catalog)
    failed = [c["id"] for c in checks if not c["match"]]
    return {
        "catalog_version": 1,
        "checks": checks,
        "summary": {
            "total": len(checks),
            "passed": len(checks) - len(failed),
            "failed": failed,
            "ok": not failed,
        },
    }
