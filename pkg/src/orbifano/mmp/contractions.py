from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Dict, List, Literal, Optional, Tuple

from sympy import Rational

from orbifano.errors import InvalidState, NotApplicable

# Divisorial contractions E1..E6, the conic bundle C with fibre kinds C1/C2, and the
# five rank-one terminal surfaces D1..D5, listed in priority order.
ContractionType = Literal[
    "E1", "E2", "E3", "E4", "E5", "E6", "C", "C1", "C2", "D1", "D2", "D3", "D4", "D5"
]
PRIORITY: Tuple[ContractionType, ...] = (
    "E1", "E2", "E3", "E4", "E5", "E6", "C", "C1", "C2", "D1", "D2", "D3", "D4", "D5"
)
DIVISORIAL: Tuple[ContractionType, ...] = ("E1", "E2", "E3", "E4", "E5", "E6")

MAX_BASKET = 6


@dataclass(frozen=True)
class MMPState:
    """A del Pezzo surface X seen through its minimal resolution Y.

    k, n2 and n1 count the 1/3(1,1), A2 and A1 points of X; rhoY and K2Y are
    the Picard rank and K^2 of Y.
    """

    k: int
    n2: int
    n1: int
    rhoY: int
    K2Y: Rational

    @classmethod
    def of(cls, k: int, n2: int, n1: int, rhoY: int, K2Y) -> "MMPState":
        state = cls(k, n2, n1, rhoY, Rational(K2Y))
        state.check()
        return state

    @property
    def basket_size(self) -> int:
        return self.k + 2 * self.n2 + self.n1

    @property
    def rho_x(self) -> int:
        return self.rhoY - self.basket_size

    @property
    def degree(self) -> Rational:
        """K_X^2; each 1/3(1,1) point contributes 1/3 over K_Y^2."""
        return self.K2Y + Rational(self.k, 3)

    def check(self) -> None:
        if min(self.k, self.n2, self.n1) < 0:
            raise InvalidState(f"negative singularity count in {self}")
        if self.basket_size > MAX_BASKET:
            raise InvalidState(f"k + 2n2 + n1 = {self.basket_size} exceeds {MAX_BASKET} in {self}")
        if self.K2Y + self.rhoY != 10:
            raise InvalidState(f"K2Y + rhoY = {self.K2Y + self.rhoY}, expected 10, in {self}")
        if self.degree <= 0:
            raise InvalidState(f"K_X^2 = {self.degree} is not positive in {self}")
        if self.rho_x < 1:
            raise InvalidState(f"rho(X) = {self.rho_x} in {self}")

    def basket_text(self) -> str:
        parts = []
        if self.k:
            parts.append(f"{self.k}x1/3")
        if self.n2:
            parts.append(f"{self.n2}xA2")
        if self.n1:
            parts.append(f"{self.n1}xA1")
        return " + ".join(parts) or "smooth"

    def __str__(self) -> str:
        return (
            f"k={self.k} A2={self.n2} A1={self.n1} rhoY={self.rhoY} "
            f"K2Y={self.K2Y} rhoX={self.rho_x}"
        )

    def as_dict(self) -> Dict[str, object]:
        return {
            "k": self.k,
            "n2": self.n2,
            "n1": self.n1,
            "rhoY": self.rhoY,
            "K2Y": self.K2Y,
            "rhoX": self.rho_x,
            "degree": self.degree,
        }


# (dk, dn2, dn1, drho): change of the basket and of rho(Y) under each divisorial type.
_EFFECTS: Dict[ContractionType, Tuple[int, int, int, int]] = {
    "E1": (0, 0, 0, 1),
    "E2": (0, 0, -1, 2),
    "E3": (0, -1, 0, 3),
    "E4": (-1, 0, 1, 1),
    "E5": (-1, 0, -1, 3),
    "E6": (-2, 1, 0, 1),
}

# Singularities consumed and created by each divisorial type, as (k, n2, n1) counts.
_CONSUMES: Dict[ContractionType, Tuple[int, int, int]] = {
    "E1": (0, 0, 0),
    "E2": (0, 0, 1),
    "E3": (0, 1, 0),
    "E4": (1, 0, 0),
    "E5": (1, 0, 1),
    "E6": (2, 0, 0),
}
_CREATES: Dict[ContractionType, Tuple[int, int, int]] = {
    "E4": (0, 0, 1),
    "E6": (0, 1, 0),
}

# (k, n2, n1, rhoY, K2Y) of the rank-one terminal surfaces.
D_TERMINALS: Dict[ContractionType, Tuple[int, int, int, int, int]] = {
    "D1": (0, 0, 0, 1, 9),
    "D2": (0, 0, 1, 2, 8),
    "D3": (0, 1, 1, 4, 6),
    "D4": (0, 3, 0, 7, 3),
    "D5": (1, 0, 0, 2, 8),
}


def applicable(s: MMPState, t: ContractionType) -> bool:
    if t not in _CONSUMES:
        return False
    need = _CONSUMES[t]
    return s.k >= need[0] and s.n2 >= need[1] and s.n1 >= need[2]


def apply(s: MMPState, t: ContractionType) -> MMPState:
    """State after a divisorial contraction of type t.

    Raises:
        NotApplicable: if t is not divisorial or X lacks the singularities it consumes.
    """
    if t not in _EFFECTS:
        raise NotApplicable(f"{t} is not a divisorial contraction")
    if not applicable(s, t):
        raise NotApplicable(f"{t} needs {_CONSUMES[t]} (k, A2, A1) but X has {s.basket_text()}")
    if s.rho_x < 2:
        raise NotApplicable(f"{t} would leave Picard rank {s.rho_x - 1}")
    dk, dn2, dn1, drho = _EFFECTS[t]
    out = replace(s, k=s.k + dk, n2=s.n2 + dn2, n1=s.n1 + dn1, rhoY=s.rhoY - drho, K2Y=s.K2Y + drho)
    out.check()
    return out


def rho_x(s: MMPState) -> int:
    return s.rho_x


def conic_fibres(s: MMPState) -> Optional[Tuple[ContractionType, ...]]:
    """Fibre kinds of a conic bundle structure on X, or None when the basket does not split.

    Every singular point lies on a special fibre: C1 carries two A1 points and
    C2 one 1/3(1,1) point with one A2 point.
    """
    if s.rho_x != 2 or s.n1 % 2 or s.k != s.n2:
        return None
    return ("C1",) * (s.n1 // 2) + ("C2",) * s.k


def rank_one_terminal(s: MMPState) -> Optional[ContractionType]:
    key = (s.k, s.n2, s.n1, s.rhoY, s.K2Y)
    for name, data in D_TERMINALS.items():
        if key == data:
            return name
    return None


def _consumes_created(t: ContractionType, last: ContractionType) -> bool:
    made = _CREATES.get(last)
    if made is None:
        return False
    return any(m and c for m, c in zip(made, _CONSUMES[t]))


def directed_available(
    s: MMPState, last: Optional[ContractionType] = None, floating: bool = False
) -> List[ContractionType]:
    """Contractions a directed MMP may perform next, in priority order.

    A type listed before `last` is allowed only when it consumes a point that
    `last` created, and E3 never follows E6. E1 is only offered with
    `floating`. A conic bundle shows up as C, a rank-one surface as its D type.

    C is listed together with any divisorial moves. The basket says whether
    a conic bundle can exist, not whether an extremal ray of higher priority
    exists on the actual surface, so both stay in the tree of possibilities
    and curation removes the ones that do not occur. The k = 6 root needs
    this: after E6, E6 it both fibres as C(C2,C2) and contracts a third E6.
    """
    out: List[ContractionType] = []
    if s.rho_x >= 2:
        for t in DIVISORIAL:
            if t == "E1" and not floating:
                continue
            if not applicable(s, t):
                continue
            if last is not None and last in DIVISORIAL:
                if t == "E3" and last == "E6":
                    continue
                if PRIORITY.index(t) < PRIORITY.index(last) and not _consumes_created(t, last):
                    continue
            out.append(t)
    if conic_fibres(s) is not None:
        out.append("C")
    terminal = rank_one_terminal(s)
    if terminal is not None:
        out.append(terminal)
    return out
