"""The checks behind `orbifano verify`, one function per suite.

Every suite takes the registry and returns report entries; a suite never
raises for a failed check, only for a broken registry it cannot read.
"""

from __future__ import annotations

import logging
from typing import Any, Dict, List, Optional, Sequence, Tuple

from sympy import Rational

from orbifano.errors import OrbifanoError
from orbifano.intersection.ci import ci_degree, context_for
from orbifano.intersection.graded import top_intersection
from orbifano.invariants.formulas import (
    defect_bounds,
    defect_from_pi1,
    invariants_of,
    poincare_series,
)
from orbifano.invariants.sieve import (
    CandidateStatus,
    candidate_sieve,
    cascade,
    cascade_families,
    defective_candidates,
    family_name,
    no_toric_degeneration,
    not_occurring,
    numerical_bounds,
    pro2_bounds,
    survivors,
)
from orbifano.io.registry import load_identities
from orbifano.mmp.contractions import DIVISORIAL
from orbifano.mmp.curation import THEOREM_ROOTS, root_state
from orbifano.mmp.theorem import discrepancy_report, verify_theorem4
from orbifano.mmp.tree import TreeNode, enumerate_tree
from orbifano.polygon.families import match_family
from orbifano.polygon.fano import (
    Fan2,
    FanoPolygon,
    degree_via_formula,
    face_fan,
    ray_lattice_index,
    singularity_content,
    toric_degree,
)
from orbifano.schemas.registry import FamilyRecord, Registry, format_rational
from orbifano.schemas.report import ReportEntry
from orbifano.sections.identities import (
    IdentityCheck,
    pfaffian_incidence,
    verify_basis_from_rays,
    verify_binomials,
    verify_octahedral_relations,
    verify_pfaffian,
)
from orbifano.sections.monomials import parse_poly
from orbifano.sections.quotients import quotient_surface_basket
from orbifano.sections.strata import basket_of_report, ci_singularity_report
from orbifano.singularity.cyclic import ONE_THIRD, Basket
from orbifano.toric.chambers import charts, irrelevant_ideal, nef_cone
from orbifano.toric.weights import WeightMatrix, adjoint_class, is_wellformed

logger = logging.getLogger(__name__)

# Degree intervals per k among the surviving candidates.
PRO2_BOUNDS: Dict[int, Tuple[Rational, Rational]] = {
    1: (Rational(1, 3), Rational(25, 3)),
    2: (Rational(2, 3), Rational(20, 3)),
    3: (Rational(1), Rational(5)),
    4: (Rational(1, 3), Rational(10, 3)),
    5: (Rational(2, 3), Rational(8, 3)),
    6: (Rational(1), Rational(2)),
}

# The same intervals before any covering argument.
NUMERICAL_BOUNDS: Dict[int, Tuple[Rational, Rational]] = {
    1: (Rational(1, 3), Rational(25, 3)),
    2: (Rational(2, 3), Rational(23, 3)),
    3: (Rational(1), Rational(7)),
    4: (Rational(1, 3), Rational(19, 3)),
    5: (Rational(2, 3), Rational(14, 3)),
    6: (Rational(1), Rational(4)),
    7: (Rational(4, 3), Rational(7, 3)),
}

NO_TORIC_DEGENERATION = ("X_{4,1/3}", "X_{5,2/3}", "X_{6,1}")
REMARK8_PAIRS = ((2, Rational(20, 3)), (4, Rational(10, 3)))

PRO2_CITATION = "Prop. 2, bounds on K^2 for each k"
TABLE4_CITATION = "Table 4, necessarily defective possibilities"
CASCADE_CITATION = "Cor. 1, blow-ups of nonsingular points"


def entry(
    check_id: str, citation: str, ok: bool, expected: Any = None, computed: Any = None
) -> ReportEntry:
    return ReportEntry(
        id=check_id,
        citation=citation,
        status="pass" if ok else "fail",
        expected=expected,
        computed=computed,
    )


def skipped(check_id: str, citation: str, expected: Any = None, computed: Any = None) -> ReportEntry:
    return ReportEntry(
        id=check_id,
        citation=citation,
        status="skipped-with-citation",
        expected=expected,
        computed=computed,
    )


def _from_identity(check: IdentityCheck) -> ReportEntry:
    return entry(f"identities.{check.id}", check.citation, check.holds, "identity holds", check.detail)


def _pair_text(k: int, d: Rational) -> str:
    return f"({k}, {format_rational(d)})"


def _ranges_text(ranges: Dict[int, Tuple[Rational, Rational]]) -> Dict[str, str]:
    return {str(k): f"{format_rational(lo)}..{format_rational(hi)}" for k, (lo, hi) in ranges.items()}


def _family_table_checks(rec: FamilyRecord) -> List[ReportEntry]:
    base = f"tables.{rec.name}"
    try:
        inv = invariants_of(rec.k, rec.d)
    except OrbifanoError as exc:
        return [entry(f"{base}.invariants", rec.citation, False, "valid (k, K^2)", str(exc))]
    out = [
        entry(f"{base}.h0", rec.citation, inv.h0 == rec.h0, rec.h0, inv.h0),
        entry(f"{base}.r", rec.citation, inv.r == rec.r, rec.r, inv.r),
        entry(f"{base}.moduli", rec.citation, inv.moduli == rec.moduli, rec.moduli, inv.moduli),
    ]
    if inv.moduli != rec.moduli:
        logger.warning("%s: moduli formula gives %d, registry has %d", rec.name, inv.moduli, rec.moduli)

    lo, hi = defect_bounds(rec.k, rec.d)
    try:
        sigma: Optional[int] = defect_from_pi1(rec.pi1)
    except ValueError:
        sigma = None
    out.append(
        entry(
            f"{base}.defect",
            "Lemma 1 and Prop. 3, sigma from the fundamental group of the smooth locus",
            sigma is not None and lo <= sigma <= hi,
            f"{lo} <= sigma <= {hi}",
            sigma if sigma is not None else f"unknown group {rec.pi1!r}",
        )
    )

    try:
        series = poincare_series(rec.k, rec.d)
    except OrbifanoError as exc:
        out.append(entry(f"{base}.poincare", rec.citation, False, "integer coefficients", str(exc)))
        return out
    ok = series[0] == 1 and series[1] == inv.h0 and all(c >= 0 for c in series)
    out.append(
        entry(
            f"{base}.poincare",
            "Remark 6, closed form of the Poincare series",
            ok,
            f"1, {inv.h0}, ... all nonnegative",
            series,
        )
    )
    return out


def tables_suite(reg: Registry) -> List[ReportEntry]:
    out: List[ReportEntry] = []
    for rec in reg.families:
        out.extend(_family_table_checks(rec))
    return out


def polygons_suite(reg: Registry) -> List[ReportEntry]:
    out: List[ReportEntry] = []
    families = reg.by_invariants()
    for rec in reg.polygons:
        base = f"polygons.{rec.id:02d}"
        cite = f"Table 3, row {rec.id}"
        expected = {"n": rec.n, "k": rec.k}
        try:
            p = FanoPolygon.of(rec.vertices)
            content = singularity_content(p)
        except OrbifanoError as exc:
            out.append(entry(f"{base}.content", cite, False, expected, str(exc)))
            continue
        computed = {"n": content.n, "k": content.k, "basket": str(content.basket)}
        ok = content.is_pure_one_third and (content.n, content.k) == (rec.n, rec.k)
        out.append(entry(f"{base}.content", cite, ok, expected, computed))
        if not content.is_pure_one_third:
            continue

        formula = degree_via_formula(content)
        fan_degree = toric_degree(face_fan(p))
        out.append(
            entry(f"{base}.degree", "§7, K^2 = 12 - n - 5k/3", fan_degree == formula, formula, fan_degree)
        )
        names = sorted(f.name for f in families.get((content.k, formula), []))
        out.append(entry(f"{base}.deforms-to", cite, rec.deforms_to in names, rec.deforms_to, names))
    return out


def _weights_checks(rec: FamilyRecord) -> List[ReportEntry]:
    c = rec.construction
    base = f"constructions.{rec.name}"
    cite = c.citation or rec.citation
    if c.erratum:
        return [skipped(base, cite, "construction as printed", c.erratum)]

    wm = WeightMatrix.of(c.weights, c.labels)
    bundles = c.bundle_classes()
    adjoint = adjoint_class(wm, bundles)
    omega = tuple(c.omega) if c.omega else adjoint
    out = [entry(f"{base}.wellformed", cite, is_wellformed(wm), True, is_wellformed(wm))]

    try:
        chamber = nef_cone(wm, omega)
    except OrbifanoError as exc:
        out.append(entry(f"{base}.nef", cite, False, c.nef, str(exc)))
        return out
    computed_nef = [list(r) for r in chamber.rays]
    if c.nef is not None:
        out.append(entry(f"{base}.nef", cite, chamber.same_as(c.nef), c.nef, computed_nef))
    if c.nef_erratum:
        out.append(skipped(f"{base}.nef-printed", f"{cite}: {c.nef_erratum}", c.printed_nef, computed_nef))
    outside = [b for b in bundles if not chamber.contains(b)]
    out.append(entry(f"{base}.bundles-nef", cite, not outside, "every L_i nef", outside))
    out.append(
        entry(
            f"{base}.adjoint-ample", cite, chamber.contains_interior(adjoint),
            "-K_F - sum L_i in the interior", list(adjoint),
        )
    )

    degree = ci_degree(wm, omega, bundles)
    out.append(entry(f"{base}.degree", cite, degree == rec.d, rec.d, degree))

    expected = str(Basket.of([ONE_THIRD] * rec.k))
    try:
        basket = str(basket_of_report(ci_singularity_report(wm, omega, bundles)))
    except OrbifanoError as exc:
        basket = str(exc)
    out.append(entry(f"{base}.singularities", cite, basket == expected, expected, basket))
    return out


def _toric_surface_checks(rec: FamilyRecord, reg: Registry) -> List[ReportEntry]:
    c = rec.construction
    base = f"constructions.{rec.name}"
    cite = c.citation or rec.citation
    rays = [tuple(v) for v in reg.polygon(c.polygon_id).vertices]
    residues = [
        tuple(sum(w * ray[i] for w, ray in zip(row, rays)) for i in range(2)) for row in c.weights
    ]
    out = [
        entry(f"{base}.relations", cite, all(r == (0, 0) for r in residues),
              "every row a relation among the rays", residues),
    ]
    index = ray_lattice_index(Fan2(tuple(rays)))
    out.append(entry(f"{base}.ray-index", cite, index == c.group_order, c.group_order, index))
    degree = toric_degree(face_fan(FanoPolygon.of(rays)))
    out.append(entry(f"{base}.degree", cite, degree == rec.d, rec.d, degree))
    return out


def _quotient_checks(rec: FamilyRecord) -> List[ReportEntry]:
    c = rec.construction
    base = f"constructions.{rec.name}"
    cite = c.citation or rec.citation
    wm = WeightMatrix.of(c.weights, c.labels)
    bundles = c.bundle_classes()
    omega = tuple(c.omega) if c.omega else adjoint_class(wm, bundles)
    degree = ci_degree(wm, omega, bundles) / c.group_order
    out = [entry(f"{base}.degree", cite, degree == rec.d, rec.d, degree)]
    expected = str(Basket.of([ONE_THIRD] * rec.k))
    try:
        basket = str(quotient_surface_basket(c.group_order, c.group_weights, bundles[0][0]))
    except OrbifanoError as exc:
        basket = str(exc)
    out.append(entry(f"{base}.singularities", cite, basket == expected, expected, basket))
    return out


def _worked_example(reg: Registry) -> List[ReportEntry]:
    """The chart, ideal and intersection numbers of the two-row example X_{1,10/3}."""
    rec = reg.family("X_{1,10/3}")
    c = rec.construction
    cite = "§3.2, worked example"
    base = "constructions.worked-example"
    wm = WeightMatrix.of(c.weights, c.labels)
    bundles = c.bundle_classes()
    omega = adjoint_class(wm, bundles)
    out: List[ReportEntry] = []

    by_pivots = {chart.pivots: chart for chart in charts(wm, omega)}
    for pivots, order, weights in (((2, 3), 3, (1, 1, 1, 1)), ((0, 3), 2, (0, 1, 1, 1))):
        chart = by_pivots.get(pivots)
        computed = (
            {"order": chart.order, "weights": list(chart.cyclic_weights())} if chart else "missing"
        )
        expected = {"order": order, "weights": list(weights)}
        name = "U" + "".join(str(i) for i in pivots)
        out.append(entry(f"{base}.chart-{name}", cite, computed == expected, expected, computed))

    ideal = sorted(irrelevant_ideal(wm, omega))
    wanted = sorted((i, j) for i in (0, 1, 2) for j in (3, 4, 5))
    out.append(entry(f"{base}.irrelevant", cite, ideal == wanted, wanted, ideal))

    ctx = context_for(wm, omega)
    big_l, big_m = ctx.lift((1, 0)), ctx.lift((0, 1))
    numbers = {
        "L^2M^2": (top_intersection(ctx, [big_l, big_l, big_m, big_m]), Rational(1, 3)),
        "L^4": (top_intersection(ctx, [big_l] * 4), Rational(1, 12)),
        # L and M are exchanged by swapping the rows, so M^4 = L^4
        "M^4": (top_intersection(ctx, [big_m] * 4), Rational(1, 12)),
    }
    for label, (value, expected) in numbers.items():
        out.append(entry(f"{base}.{label}", cite, value == expected, expected, value))
    degree = ci_degree(wm, omega, bundles)
    out.append(entry(f"{base}.K2", cite, degree == rec.d, rec.d, degree))
    return out


def constructions_suite(reg: Registry) -> List[ReportEntry]:
    out: List[ReportEntry] = []
    for rec in reg.families:
        c = rec.construction
        cite = c.citation or rec.citation
        try:
            if c.kind == "weights":
                out.extend(_weights_checks(rec))
            elif c.kind == "toric_surface":
                out.extend(_toric_surface_checks(rec, reg))
            elif c.kind == "quotient":
                out.extend(_quotient_checks(rec))
            elif c.kind == "grassmannian":
                out.append(skipped(f"constructions.{rec.name}", cite,
                                   "weighted Grassmannian model", c.erratum or c.note))
            elif c.kind == "nonsimplicial":
                out.append(skipped(f"constructions.{rec.name}", cite,
                                   "degree on a non-simplicial toric variety",
                                   "sections checked in the identities suite"))
            elif c.kind == "pfaffian":
                wm = WeightMatrix.of(c.weights, c.labels)
                out.append(entry(f"constructions.{rec.name}.wellformed", cite,
                                 is_wellformed(wm), True, is_wellformed(wm)))
                out.append(skipped(f"constructions.{rec.name}.degree", cite,
                                   "degree of a Pfaffian degeneracy locus",
                                   "equations checked in the identities suite"))
        except (OrbifanoError, KeyError, TypeError) as exc:
            out.append(entry(f"constructions.{rec.name}", cite, False, "construction checks", str(exc)))
    try:
        out.extend(_worked_example(reg))
    except (OrbifanoError, KeyError) as exc:
        out.append(entry("constructions.worked-example", "§3.2, worked example", False, None, str(exc)))
    return out


def _edge_violations(node: TreeNode) -> Tuple[int, List[str]]:
    """Edges checked and those that break K2Y + rhoY = 10, drop rho(X) by other than one or lower K^2."""
    checked, bad = 0, []
    for child in node.children:
        checked += 1
        s, t = node.state, child.state
        ok = (
            child.edge in DIVISORIAL
            and t.K2Y + t.rhoY == 10
            and t.rho_x == s.rho_x - 1
            and t.degree > s.degree
        )
        if not ok:
            bad.append(f"{child.edge}: [{s}] -> [{t}]")
        more, worse = _edge_violations(child)
        checked += more
        bad.extend(worse)
    return checked, bad


def mmp_suite(reg: Registry) -> List[ReportEntry]:
    out = verify_theorem4(reg)
    for root in THEOREM_ROOTS:
        cite = "Thm. 2, hypotheses preserved by each contraction"
        try:
            rec = reg.family(root.name)
            tree = enumerate_tree(root_state(rec.k, rec.d, rec.r), "raw")
        except (OrbifanoError, KeyError) as exc:
            out.append(entry(f"mmp.{root.name}.edges", cite, False, "valid root", str(exc)))
            continue
        checked, bad = _edge_violations(tree)
        out.append(entry(f"mmp.{root.name}.edges", cite, not bad, f"{checked} consistent edges", bad))
    try:
        for d in discrepancy_report(reg):
            out.append(skipped(d.id, d.citation, d.expected, d.computed))
    except (OrbifanoError, KeyError) as exc:
        out.append(entry("mmp.discrepancies", "Thm. 4", False, "discrepancy report", str(exc)))
    return out


def identities_suite(reg: Registry) -> List[ReportEntry]:
    ids = load_identities()
    out: List[ReportEntry] = []

    pf = ids.pfaffian
    c = reg.family(pf.family).construction
    wm = WeightMatrix.of(c.weights, c.labels)
    out.extend(_from_identity(chk) for chk in verify_pfaffian(pf, wm, c.bundle_classes()))
    points = pfaffian_incidence(wm, [parse_poly(e) for e in pf.equations], c.omega)
    computed = {"points": len(points), "orders": sorted({p.order for p in points})}
    expected = {"points": pf.singular_points_on_x, "orders": [pf.singular_point_order]}
    out.append(entry("identities.pfaffian.incidence", pf.citation, computed == expected, expected, computed))

    out.extend(_from_identity(chk) for chk in verify_octahedral_relations(ids))
    octa = reg.family(ids.octahedral.family).construction
    out.append(
        _from_identity(
            verify_basis_from_rays(ids.octahedral.basis, octa.rays, octa.labels, octa.bundle_divisor)
        )
    )

    ambient: Dict[str, tuple] = {}
    for rec in ids.binomials:
        fc = reg.family(rec.family).construction
        if fc.kind == "weights" and fc.bundles:
            ambient[rec.family] = (WeightMatrix.of(fc.weights, fc.labels), fc.bundle_classes()[0])
    out.extend(_from_identity(chk) for chk in verify_binomials(ids, ambient))

    for rec in ids.binomials:
        try:
            matched = match_family(FanoPolygon.of(reg.polygon(rec.polygon).vertices), reg)
        except (OrbifanoError, KeyError) as exc:
            matched = str(exc)
        out.append(
            entry(f"identities.binomial.{rec.id}.family", rec.citation, matched == rec.family,
                  rec.family, matched)
        )
    return out


def _table4_checks(reg: Registry, statuses: Sequence[CandidateStatus]) -> List[ReportEntry]:
    by_pair = {s.pair: s for s in statuses}
    out: List[ReportEntry] = []
    recorded = set()
    for row in reg.defective:
        pair = (row.k, row.d)
        recorded.add(pair)
        base = f"candidates.table4.k{row.k}.{row.degree}"
        expected = {"r": row.r, "sigma_min": row.sigma_at_least, "occurs": row.occurs}
        status = by_pair.get(pair)
        if status is None:
            out.append(entry(base, TABLE4_CITATION, False, expected, "not a candidate"))
            continue
        r = invariants_of(row.k, row.d).r
        if row.occurs:
            verdict_ok = status.verdict == "occurs"
        else:
            verdict_ok = status.verdict == "excluded-by-cover" or (
                status.verdict == "undecided" and pair in not_occurring([pair])
            )
        computed = {"r": r, "sigma_min": status.sigma_min, "verdict": status.verdict}
        ok = verdict_ok and r == row.r and status.sigma_min == row.sigma_at_least
        out.append(entry(base, TABLE4_CITATION, ok, expected, computed))

    for s in defective_candidates(list(statuses)):
        if s.pair not in recorded:
            out.append(
                skipped(
                    f"candidates.table4.missing.k{s.k}.{format_rational(s.d)}",
                    TABLE4_CITATION,
                    "row absent from the table",
                    s.as_dict(),
                )
            )
    return out


def candidates_suite(reg: Registry) -> List[ReportEntry]:
    statuses = candidate_sieve()
    out: List[ReportEntry] = []

    bounds = _ranges_text(pro2_bounds(statuses))
    for k, text in _ranges_text(PRO2_BOUNDS).items():
        out.append(entry(f"candidates.pro2.k{k}", PRO2_CITATION, bounds.get(k) == text, text, bounds.get(k)))
    extra = sorted(set(bounds) - set(_ranges_text(PRO2_BOUNDS)))
    out.append(entry("candidates.pro2.k-max", PRO2_CITATION, not extra, "k <= 6", extra))
    numeric = _ranges_text(numerical_bounds(statuses))
    wanted = _ranges_text(NUMERICAL_BOUNDS)
    out.append(
        entry("candidates.numerical", "Prop. 2 proof, c2 >= 0, h0 >= 0 and r > k", numeric == wanted,
              wanted, numeric)
    )

    out.extend(_table4_checks(reg, statuses))
    undecided = [
        _pair_text(*s.pair) for s in statuses if s.verdict == "undecided" and s.sigma_min >= 1
    ]
    out.append(
        entry("candidates.undecided", "Prop. 2 proof, the defective case not excluded at this point",
              undecided == ["(5, 8/3)"], ["(5, 8/3)"], undecided)
    )

    families = cascade()
    alive = survivors(statuses)
    for k, d in REMARK8_PAIRS:
        ok = (k, d) in alive and (k, d) not in families
        out.append(
            entry(f"candidates.remark8.k{k}.{format_rational(d)}",
                  "Remark 8, survivors of the sieve that do not occur", ok,
                  "sieve survivor outside the family set", {"survivor": (k, d) in alive,
                                                           "in families": (k, d) in families})
        )

    ruled_out = not_occurring(alive)
    out.append(
        entry("candidates.not-occurring", "Remark 8, pairs above every root of the directed MMP",
              sorted(ruled_out) == sorted(REMARK8_PAIRS + ((5, Rational(8, 3)),)),
              [_pair_text(*p) for p in REMARK8_PAIRS] + ["(5, 8/3)"],
              [_pair_text(*p) for p in sorted(ruled_out)])
    )
    leftover = set(alive) - ruled_out
    out.append(
        entry("candidates.cascade", CASCADE_CITATION, leftover == families,
              sorted(_pair_text(*p) for p in families), sorted(_pair_text(*p) for p in leftover))
    )
    names = cascade_families()
    recorded = {f.name: f.fano_index for f in reg.families}
    out.append(
        entry("candidates.cascade.families", CASCADE_CITATION, names == recorded,
              dict(sorted(recorded.items())), dict(sorted(names.items())))
    )
    rigid = [family_name("X", k, d) for k, d in no_toric_degeneration(families)]
    out.append(
        entry("candidates.no-toric-degeneration", "Thm. 6, families with h0(-K) = 0",
              tuple(rigid) == NO_TORIC_DEGENERATION, list(NO_TORIC_DEGENERATION), rigid)
    )
    return out
