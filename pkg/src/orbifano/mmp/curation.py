"""Recorded outcomes of the directed MMP for surfaces with 1/3(1,1) points.

The prunes here come from geometric arguments about curve configurations on
the minimal resolution. The basket bookkeeping cannot re-derive them, so they
are kept as data next to their citations.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Tuple

from sympy import Rational

from orbifano.mmp.contractions import ContractionType, MMPState

Path = Tuple[ContractionType, ...]


@dataclass(frozen=True)
class Prune:
    prefix: Path
    citation: str


@dataclass(frozen=True)
class TheoremRoot:
    """A surface without floating (-1)-curves and the directed MMPs it admits."""

    name: str
    k: int
    degree: str
    sequences: Tuple[Tuple[Path, str], ...]
    prunes: Tuple[Prune, ...]
    citation: str


@dataclass(frozen=True)
class RecordedSequence:
    """A contraction sequence discussed in the text together with the end it claims."""

    id: str
    root: str
    path: Path
    claimed: str
    citation: str


_K3_PRUNES = (
    Prune(("E4", "E6"), "Thm. 4(3) figure: X_{3,5} ends in P(1,1,3)"),
    Prune(("E6",), "Thm. 4(3) figure: X_{3,5} starts with (E.4)"),
)

THEOREM_ROOTS: Tuple[TheoremRoot, ...] = (
    TheoremRoot(
        "B_{1,16/3}", 1, "16/3", ((("E4", "E2"), "C(smooth)"),), (),
        "Thm. 4(1), first case",
    ),
    TheoremRoot(
        "S_{1,25/3}", 1, "25/3", (((), "D5"),), (),
        "Thm. 4(1), P(1,1,3)",
    ),
    TheoremRoot(
        "B_{2,8/3}", 2, "8/3", ((("E4", "E2", "E4", "E2"), "C(smooth)"),),
        (Prune(("E4", "E4"), "Thm. 4(2) figure: B_{2,8/3} alternates (E.4) and (E.2)"),),
        "Thm. 4(2), first case",
    ),
    TheoremRoot(
        "X_{2,17/3}", 2, "17/3", ((("E4", "E2"), "D5"),),
        (Prune(("E4", "E5"), "Thm. 4(2) figure: X_{2,17/3} ends in P(1,1,3)"),),
        "Thm. 4(2), second case",
    ),
    TheoremRoot(
        "X_{3,5}", 3, "5", ((("E4", "E5"), "D5"),), _K3_PRUNES,
        "Thm. 4(3)",
    ),
    TheoremRoot(
        "X_{4,7/3}", 4, "7/3", ((("E4", "E2", "E4", "E5"), "D5"),),
        (
            Prune(("E6",), "§6 k=4: the first contraction is not of type (E.6)"),
            Prune(("E4", "E2", "E6"), "§6 k=4: after (E.2) the tree continues as for k=3"),
            Prune(("E4", "E2", "E4", "E6"), "§6 k=4: after (E.2) the tree continues as for k=3"),
            Prune(("E4", "E4", "E2"), "§6 k=4: (E.2) would have been available earlier"),
            Prune(("E4", "E4", "E4"), "§6 k=4, Case 2 does not occur"),
            Prune(("E4", "E4", "E5"), "§6 k=4, Case 3 does not occur"),
        ),
        "Thm. 4(4); §6 k=4 case",
    ),
    TheoremRoot(
        "X_{5,5/3}", 5, "5/3", ((("E4", "E4", "E5", "E5"), "D5"),),
        (
            Prune(("E6",), "Thm. 4(5) figure: X_{5,5/3} starts with (E.4)"),
            Prune(("E4", "E5"), "Thm. 4(5) figure: a second (E.4) comes before any (E.5)"),
            Prune(("E4", "E4", "E6"), "Thm. 4(5) figure: no (E.6) after two (E.4)"),
            Prune(("E4", "E4", "E5", "E6"), "Thm. 4(5) figure: X_{5,5/3} ends in P(1,1,3)"),
        ),
        "Thm. 4(5)",
    ),
    TheoremRoot(
        "X_{6,2}", 6, "2", ((("E6", "E6", "E6"), "D4"), (("E6", "E6"), "C(C2,C2)")),
        (Prune(("E4",), "§6 k=6: the first contraction is not of type (E.4)"),),
        "Thm. 4(6); §6 k=6 case",
    ),
)

RECORDED_SEQUENCES: Tuple[RecordedSequence, ...] = (
    RecordedSequence(
        "k4.case2", "X_{4,7/3}", ("E4", "E4", "E4", "E4"),
        "C(C1,C1)",
        "§6 k=4, Case 2: four (E.4) contractions end on a conic bundle with two (C.1) fibres",
    ),
)


def root_state(k: int, degree, r: int) -> MMPState:
    """State of a root from its table data: rho(Y) = r and K_Y^2 = d - k/3."""
    d = Rational(degree)
    return MMPState.of(k, 0, 0, r, d - Rational(k, 3))


def _table_state(root: TheoremRoot) -> MMPState:
    d = Rational(root.degree)
    r = 10 - d + Rational(root.k, 3)
    return root_state(root.k, d, int(r))


def theorem_root(name: str) -> TheoremRoot:
    for root in THEOREM_ROOTS:
        if root.name == name:
            return root
    raise KeyError(name)


def roots_for_k(k: int) -> List[TheoremRoot]:
    return [root for root in THEOREM_ROOTS if root.k == k]


def curated_prunes(state: MMPState) -> Tuple[Prune, ...]:
    """Recorded prunes for the theorem root with this state; none for other states."""
    for root in THEOREM_ROOTS:
        if _table_state(root) == state:
            return root.prunes
    return ()
