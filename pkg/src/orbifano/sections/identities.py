from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence

from sympy import Integer, Matrix, expand

from orbifano.errors import NotAntisymmetric
from orbifano.sections.monomials import (
    MonomialPoly,
    check_homogeneity,
    check_substitution_identity,
    monomial_basis,
    parse_poly,
    terms,
)
from orbifano.schemas.identities import Identities, MonomialList, PfaffianRecord
from orbifano.toric.chambers import Chart, charts
from orbifano.toric.weights import WeightMatrix, weights_from_rays

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class IdentityCheck:
    id: str
    citation: str
    holds: bool
    detail: str = ""


def pfaffian4(a: Matrix, i: int) -> MonomialPoly:
    """Pfaffian of the 4x4 submatrix of a 5x5 antisymmetric matrix without row/column i.

    `i` counts from 1. With j<k<l<m the remaining indices the expansion is
    a_jk a_lm - a_jl a_km + a_jm a_kl.

    Raises:
        NotAntisymmetric: if a is not antisymmetric with zero diagonal.
    """
    if a.shape != (5, 5):
        raise NotAntisymmetric(f"expected a 5x5 matrix, got {a.shape}")
    for p in range(5):
        for q in range(p, 5):
            if expand(a[p, q] + a[q, p]) != 0:
                raise NotAntisymmetric(f"entries ({p + 1},{q + 1}) and ({q + 1},{p + 1}) do not cancel")
    j, k, l, m = [x for x in range(5) if x != i - 1]
    return expand(a[j, k] * a[l, m] - a[j, l] * a[k, m] + a[j, m] * a[k, l])


def antisymmetric_from_upper(upper: Dict[str, str]) -> Matrix:
    """5x5 antisymmetric matrix from entries keyed "jk" (1-based, j < k)."""
    a = Matrix.zeros(5, 5)
    for key, text in upper.items():
        j, k = int(key[0]) - 1, int(key[1]) - 1
        a[j, k] = parse_poly(text)
        a[k, j] = -a[j, k]
    return a


def _same_up_to_sign(p: MonomialPoly, q: MonomialPoly) -> bool:
    return expand(p - q) == Integer(0) or expand(p + q) == Integer(0)


def verify_pfaffian(record: PfaffianRecord, wm: WeightMatrix, bundles: Sequence[Sequence[int]]) -> List[IdentityCheck]:
    """Each 4x4 Pfaffian matches its listed equation up to sign and is homogeneous of class L_i."""
    a = antisymmetric_from_upper(record.upper)
    out: List[IdentityCheck] = []
    for i, text in enumerate(record.equations, start=1):
        pf = pfaffian4(a, i)
        eq = parse_poly(text)
        out.append(
            IdentityCheck(f"pfaffian.{i}", record.citation, _same_up_to_sign(pf, eq), f"Pf_{i} = {pf}")
        )
        cls = check_homogeneity(eq, wm)
        expected = tuple(bundles[i - 1]) if i - 1 < len(bundles) else None
        out.append(
            IdentityCheck(
                f"pfaffian.{i}.class", record.citation, cls is not None and cls == expected,
                f"class {cls}, expected {expected}",
            )
        )
    return out


def pfaffian_incidence(
    wm: WeightMatrix, equations: Sequence[MonomialPoly], omega: Sequence[int]
) -> List[Chart]:
    """Singular chart origins of F that lie on X = {equations = 0}.

    The origin of the chart with pivots I lies on X iff no equation has a
    monomial supported on I alone.
    """
    out: List[Chart] = []
    supports = [[mono.support for mono in terms(eq, wm.labels)] for eq in equations]
    for chart in charts(wm, omega):
        if chart.is_smooth:
            continue
        pivots = set(chart.pivots)
        if all(not any(s <= pivots for s in eq) for eq in supports):
            out.append(chart)
    logger.debug("%d singular chart origins lie on the degeneracy locus", len(out))
    return out


def verify_octahedral_relations(identities: Identities) -> List[IdentityCheck]:
    """Cube relations among the z_i and the 14 embedding equations as monomial identities."""
    rec = identities.octahedral
    out: List[IdentityCheck] = []
    for group, check in (("cube", rec.cube), ("embedding", rec.embedding)):
        for n, relation in enumerate(check.relations, start=1):
            holds = check_substitution_identity(check.substitution, relation)
            out.append(IdentityCheck(f"octahedral.{group}.{n}", check.citation, holds, relation))
    return out


def verify_binomials(
    identities: Identities, ambient: Optional[Dict[str, tuple]] = None
) -> List[IdentityCheck]:
    """Each binomial degeneration: the parametrization satisfies the binomial.

    `ambient` maps a family name to (WeightMatrix, bundle); when given, the
    binomial must also be homogeneous of the bundle's class.
    """
    out: List[IdentityCheck] = []
    for rec in identities.binomials:
        holds = check_substitution_identity(rec.substitution, rec.relation)
        out.append(IdentityCheck(f"binomial.{rec.id}", rec.citation, holds, rec.relation))
        if ambient and rec.family in ambient:
            wm, bundle = ambient[rec.family]
            cls = check_homogeneity(parse_poly(rec.relation), wm)
            out.append(
                IdentityCheck(
                    f"binomial.{rec.id}.class", rec.citation, cls == tuple(bundle),
                    f"class {cls} in {rec.family}, expected {tuple(bundle)}",
                )
            )
    return out


def verify_basis_from_rays(
    basis: MonomialList,
    rays: Sequence[Sequence[int]],
    labels: Sequence[str],
    divisor: Sequence[int],
) -> IdentityCheck:
    """Monomials of the class of sum(divisor_i D_i) on the toric variety with these rays."""
    wm = weights_from_rays(rays, labels)
    bundle = tuple(sum(row[j] * c for j, c in enumerate(divisor)) for row in wm.rows)
    found = {mono.as_expr(wm.labels) for mono in monomial_basis(wm, bundle)}
    expected = {parse_poly(text) for text in basis.monomials}
    detail = ", ".join(sorted(str(e) for e in found))
    return IdentityCheck("octahedral.basis", basis.citation, found == expected, detail)
