from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import List, Optional

from orbifano.errors import InvalidState, NotApplicable
from orbifano.io.registry import default_registry
from orbifano.mmp.contractions import conic_fibres, rank_one_terminal
from orbifano.mmp.curation import (
    RECORDED_SEQUENCES,
    THEOREM_ROOTS,
    TheoremRoot,
    root_state,
    theorem_root,
)
from orbifano.mmp.tree import Mode, TreeNode, enumerate_tree, replay, terminal_paths
from orbifano.schemas.registry import Registry
from orbifano.schemas.report import ReportEntry

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Discrepancy:
    """Where the contraction bookkeeping and the recorded text disagree."""

    id: str
    citation: str
    expected: str
    computed: str


def tree_for(name: str, mode: Mode = "raw", registry: Optional[Registry] = None) -> TreeNode:
    """Directed MMP tree of a theorem root, its state taken from the registry row."""
    reg = registry or default_registry()
    rec = reg.family(name)
    return enumerate_tree(root_state(rec.k, rec.d, rec.r), mode)


def _end_label(state) -> str:
    fibres = conic_fibres(state)
    labels = []
    if fibres is not None:
        labels.append("C(" + (",".join(fibres) or "smooth") + ")")
    terminal = rank_one_terminal(state)
    if terminal is not None:
        labels.append(terminal)
    return " | ".join(labels) or f"no terminal at [{state}]"


def _check_root(root: TheoremRoot, reg: Registry) -> List[ReportEntry]:
    rec = reg.family(root.name)
    out: List[ReportEntry] = []
    try:
        start = root_state(rec.k, rec.d, rec.r)
    except InvalidState as exc:
        return [ReportEntry(id=f"mmp.{root.name}.state", citation=root.citation, status="fail",
                            expected="valid root state", computed=str(exc))]
    curated = terminal_paths(enumerate_tree(start, "curated"))
    raw = terminal_paths(enumerate_tree(start, "raw"))

    for i, (path, terminal) in enumerate(root.sequences, start=1):
        expected = f"{','.join(path) or '-'} -> {terminal}"
        try:
            end = replay(start, path)
            computed = f"{','.join(path) or '-'} -> {_end_label(end)}"
            ok = terminal in _end_label(end).split(" | ") and terminal in curated.get(path, [])
        except (NotApplicable, InvalidState) as exc:
            computed, ok = str(exc), False
        out.append(ReportEntry(id=f"mmp.{root.name}.sequence{i}", citation=root.citation,
                               status="pass" if ok else "fail", expected=expected, computed=computed))

    wanted = sorted(f"{','.join(p) or '-'} -> {t}" for p, t in root.sequences)
    found = sorted(f"{','.join(p) or '-'} -> {t}" for p, ts in curated.items() for t in ts)
    out.append(ReportEntry(id=f"mmp.{root.name}.curated", citation=root.citation,
                           status="pass" if wanted == found else "fail",
                           expected=wanted, computed=found))
    contained = all(t in raw.get(p, []) for p, ts in curated.items() for t in ts)
    out.append(ReportEntry(id=f"mmp.{root.name}.raw-contains-curated", citation=root.citation,
                           status="pass" if contained else "fail",
                           expected=True, computed=contained))
    return out


def verify_theorem4(registry: Optional[Registry] = None) -> List[ReportEntry]:
    """Each root replays its recorded sequences and its curated tree holds exactly those."""
    reg = registry or default_registry()
    out: List[ReportEntry] = []
    for root in THEOREM_ROOTS:
        out.extend(_check_root(root, reg))
    failed = sum(1 for e in out if e.failed)
    logger.info("directed MMP checks: %d entries, %d failed", len(out), failed)
    return out


def discrepancy_report(registry: Optional[Registry] = None) -> List[Discrepancy]:
    """Recorded sequences that do not reach their claimed end, and terminal paths only curation removes."""
    reg = registry or default_registry()
    out: List[Discrepancy] = []
    for seq in RECORDED_SEQUENCES:
        rec = reg.family(seq.root)
        start = root_state(rec.k, rec.d, rec.r)
        try:
            computed = _end_label(replay(start, seq.path))
        except (NotApplicable, InvalidState) as exc:
            computed = str(exc)
        if seq.claimed not in computed.split(" | "):
            out.append(Discrepancy(f"mmp.{seq.id}", seq.citation,
                                   f"{','.join(seq.path)} -> {seq.claimed}", computed))
    for root in THEOREM_ROOTS:
        rec = reg.family(root.name)
        start = root_state(rec.k, rec.d, rec.r)
        raw = terminal_paths(enumerate_tree(start, "raw"))
        curated = terminal_paths(enumerate_tree(start, "curated"))
        extra = 0
        for path, ends in sorted(raw.items()):
            for end in ends:
                if end in curated.get(path, []):
                    continue
                extra += 1
                cut = next(
                    (p for p in theorem_root(root.name).prunes if path[: len(p.prefix)] == p.prefix),
                    None,
                )
                out.append(Discrepancy(
                    f"mmp.{root.name}.raw-only.{extra}",
                    cut.citation if cut else root.citation,
                    "pruned",
                    f"{','.join(path) or '-'} -> {end}",
                ))
    return out
