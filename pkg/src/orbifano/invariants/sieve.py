"""Which (k, K^2) pairs survive the numerical and covering-space arguments.

A pair is first bounded by c2hat >= 0, h0(-K) >= 0 and r > k. When the
defect sigma is forced to be positive there is a 3^sigma-to-1 cover, etale
over the smooth locus, by another del Pezzo surface of degree 3^sigma * K^2;
the pair dies when no such surface can exist.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Dict, Iterable, List, Literal, Optional, Set, Tuple

from sympy import Rational

from orbifano.invariants.formulas import defect_bounds, invariants_of
from orbifano.mmp.curation import THEOREM_ROOTS, TheoremRoot

logger = logging.getLogger(__name__)

Pair = Tuple[int, Rational]
Range = Tuple[Rational, Rational]
Verdict = Literal["occurs", "excluded-by-bounds", "excluded-by-cover", "undecided"]

# Bound on k used to start the enumeration; K^2 <= 12 - 4k/3 leaves nothing beyond it.
K_SEARCH = 9
SMOOTH_DEGREES = range(1, 10)

# (k, K^2 of the root, number of nonsingular points blown up along the cascade).
CASCADE_ROOTS: Tuple[Tuple[int, Rational, int], ...] = (
    (1, Rational(25, 3), 8),
    (2, Rational(17, 3), 5),
    (3, Rational(5), 4),
    (4, Rational(7, 3), 2),
    (5, Rational(5, 3), 1),
    (6, Rational(2), 1),
)

# Families of Fano index > 1, beside the X-series.
INDEX_FAMILIES: Tuple[Tuple[str, int, Rational, int], ...] = (
    ("S", 1, Rational(25, 3), 5),
    ("B", 1, Rational(16, 3), 2),
    ("B", 2, Rational(8, 3), 2),
)


@dataclass(frozen=True)
class CandidateStatus:
    k: int
    d: Rational
    sigma_min: int
    sigma_max: int
    verdict: Verdict
    cover_degree: Optional[Rational] = None
    reason: str = ""

    @property
    def pair(self) -> Pair:
        return (self.k, self.d)

    def as_dict(self) -> dict:
        return {
            "k": self.k,
            "d": self.d,
            "sigma_min": self.sigma_min,
            "sigma_max": self.sigma_max,
            "verdict": self.verdict,
            "cover_degree": self.cover_degree,
            "reason": self.reason,
        }


def _degrees(k: int) -> Iterable[Rational]:
    d = Rational(k % 3, 3) or Rational(1)
    top = 12 - Rational(4 * k, 3)
    while d <= top:
        yield d
        d += 1


def _bounds_reason(k: int, d: Rational) -> str:
    inv = invariants_of(k, d)
    if inv.h0 < 0:
        return f"h0(-K) = {inv.h0} < 0"
    if inv.r <= k:
        return f"r = {inv.r} <= k"
    return ""


def _cover_target(d: Rational, sigma: int, alive: Set[Pair]) -> Optional[str]:
    target = 3**sigma * d
    if target.is_integer and int(target) in SMOOTH_DEGREES:
        return f"smooth del Pezzo surface of degree {target}"
    for k2, d2 in sorted(alive):
        if d2 == target:
            return f"candidate ({k2}, {d2})"
    return None


def candidate_sieve(occurring: Optional[Iterable[Pair]] = None) -> List[CandidateStatus]:
    """Every (k, d) with 0 < d <= 12 - 4k/3 and d = k/3 mod 1, with its verdict.

    Survivors are "occurs" when they belong to `occurring` (by default the
    pairs the cascade generates) and "undecided" otherwise.
    """
    occurring = set(occurring) if occurring is not None else cascade()
    bounded: Dict[Pair, str] = {}
    for k in range(1, K_SEARCH + 1):
        for d in _degrees(k):
            bounded[(k, d)] = _bounds_reason(k, d)

    alive = {pair for pair, why in bounded.items() if not why}
    sigma = {pair: defect_bounds(*pair) for pair in alive}
    targets: Dict[Pair, str] = {}
    changed = True
    while changed:
        changed = False
        for pair in sorted(alive):
            lo = sigma[pair][0]
            if lo == 0:
                continue
            found = _cover_target(pair[1], lo, alive - {pair})
            if found is None:
                alive.discard(pair)
                changed = True
            else:
                targets[pair] = found

    out: List[CandidateStatus] = []
    for (k, d), why in sorted(bounded.items()):
        if why:
            out.append(CandidateStatus(k, d, 0, k // 2, "excluded-by-bounds", reason=why))
            continue
        lo, hi = sigma[(k, d)]
        cover = 3**lo * d if lo else None
        if (k, d) not in alive:
            verdict: Verdict = "excluded-by-cover"
            reason = f"no del Pezzo surface of degree {cover} with 1/3(1,1) points"
        elif (k, d) in occurring:
            verdict, reason = "occurs", targets.get((k, d), "")
        else:
            verdict, reason = "undecided", targets.get((k, d), "not excluded by the sieve")
        out.append(CandidateStatus(k, d, lo, hi, verdict, cover, reason))
    logger.debug("sieve: %d pairs, %d survive", len(out), len(alive))
    return out


def root_degrees(roots: Iterable[TheoremRoot] = THEOREM_ROOTS) -> Dict[int, Rational]:
    """Largest K^2 among the surfaces without floating (-1)-curves, for each k."""
    out: Dict[int, Rational] = {}
    for root in roots:
        d = Rational(root.degree)
        out[root.k] = max(out.get(root.k, d), d)
    return out


def not_occurring(pairs: Iterable[Pair], roots: Iterable[TheoremRoot] = THEOREM_ROOTS) -> Set[Pair]:
    """Pairs lying above every MMP root with the same k.

    Any other surface contracts floating (-1)-curves down to a root, and each
    contraction raises K^2 by one.
    """
    top = root_degrees(roots)
    return {(k, d) for k, d in pairs if k not in top or d > top[k]}


def survivors(statuses: Optional[List[CandidateStatus]] = None) -> List[Pair]:
    statuses = statuses if statuses is not None else candidate_sieve()
    return [s.pair for s in statuses if s.verdict in ("occurs", "undecided")]


def bounded_ranges(
    statuses: Iterable[CandidateStatus], verdicts: Tuple[Verdict, ...]
) -> Dict[int, Range]:
    out: Dict[int, Range] = {}
    for s in statuses:
        if s.verdict not in verdicts:
            continue
        lo, hi = out.get(s.k, (s.d, s.d))
        out[s.k] = (min(lo, s.d), max(hi, s.d))
    return dict(sorted(out.items()))


def pro2_bounds(statuses: Optional[List[CandidateStatus]] = None) -> Dict[int, Range]:
    """Smallest and largest K^2 for each k among the sieve survivors."""
    statuses = statuses if statuses is not None else candidate_sieve()
    return bounded_ranges(statuses, ("occurs", "undecided"))


def numerical_bounds(statuses: Optional[List[CandidateStatus]] = None) -> Dict[int, Range]:
    """Degree ranges before the covering argument is applied."""
    statuses = statuses if statuses is not None else candidate_sieve()
    return bounded_ranges(statuses, ("occurs", "undecided", "excluded-by-cover"))


def defective_candidates(statuses: Optional[List[CandidateStatus]] = None) -> List[CandidateStatus]:
    """Pairs passing the numerical bounds whose defect is forced to be positive."""
    statuses = statuses if statuses is not None else candidate_sieve()
    return [s for s in statuses if s.verdict != "excluded-by-bounds" and s.sigma_min >= 1]


def cascade(roots: Iterable[Tuple[int, Rational, int]] = CASCADE_ROOTS) -> Set[Pair]:
    """(k, d - j) for j = 0..budget over all roots."""
    out: Set[Pair] = set()
    for k, d, budget in roots:
        for j in range(budget + 1):
            out.add((k, Rational(d) - j))
    return out


def family_name(series: str, k: int, d: Rational) -> str:
    return f"{series}_{{{k},{d}}}"


def cascade_families(roots: Iterable[Tuple[int, Rational, int]] = CASCADE_ROOTS) -> Dict[str, int]:
    """Family names with their Fano index: the cascade X-series plus the index > 1 families."""
    out: Dict[str, int] = {}
    special = {(k, d): (series, index) for series, k, d, index in INDEX_FAMILIES}
    for k, d in sorted(cascade(roots)):
        series, index = special.get((k, d), ("X", 1))
        if series == "B":
            out[family_name("X", k, d)] = 1
        out[family_name(series, k, d)] = index
    for series, k, d, index in INDEX_FAMILIES:
        out.setdefault(family_name(series, k, d), index)
    return out


def no_toric_degeneration(pairs: Iterable[Pair]) -> List[Pair]:
    """Pairs with h0(-K) = 0; their families have no toric qG-degeneration."""
    return sorted(p for p in pairs if invariants_of(*p).h0 == 0)
