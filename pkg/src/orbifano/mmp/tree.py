from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Literal, Optional, Sequence, Tuple

from orbifano.errors import NotApplicable
from orbifano.mmp.contractions import (
    DIVISORIAL,
    ContractionType,
    MMPState,
    apply,
    conic_fibres,
    directed_available,
)
from orbifano.mmp.curation import Path, Prune, curated_prunes

logger = logging.getLogger(__name__)

Mode = Literal["raw", "curated"]


@dataclass(frozen=True)
class Terminal:
    """End of a directed MMP: a conic bundle with its special fibres, or a D surface."""

    kind: ContractionType
    fibres: Tuple[ContractionType, ...] = ()

    def __str__(self) -> str:
        if self.kind == "C":
            return "C(" + (",".join(self.fibres) or "smooth") + ")"
        return self.kind


@dataclass
class TreeNode:
    state: MMPState
    edge: Optional[ContractionType] = None
    children: List["TreeNode"] = field(default_factory=list)
    terminals: List[Terminal] = field(default_factory=list)
    pruned: List[Prune] = field(default_factory=list)

    @property
    def dead_end(self) -> bool:
        return not self.children and not self.terminals


@dataclass(frozen=True)
class Leaf:
    path: Path
    terminal: Optional[Terminal]

    def __str__(self) -> str:
        seq = ",".join(self.path) or "-"
        return f"{seq} -> {self.terminal if self.terminal else 'dead end'}"


def _terminals(s: MMPState, moves: Sequence[ContractionType]) -> List[Terminal]:
    out: List[Terminal] = []
    for t in moves:
        if t == "C":
            out.append(Terminal("C", conic_fibres(s) or ()))
        elif t.startswith("D"):
            out.append(Terminal(t))
    return out


def _prune_for(path: Path, prunes: Sequence[Prune]) -> Optional[Prune]:
    for p in prunes:
        if path == p.prefix:
            return p
    return None


def _grow(node: TreeNode, path: Path, prunes: Sequence[Prune], floating: bool) -> None:
    moves = directed_available(node.state, node.edge, floating=floating)
    node.terminals = _terminals(node.state, moves)
    for t in moves:
        if t not in DIVISORIAL:
            continue
        child_path = path + (t,)
        hit = _prune_for(child_path, prunes)
        if hit is not None:
            node.pruned.append(hit)
            continue
        child = TreeNode(apply(node.state, t), t)
        _grow(child, child_path, prunes, floating)
        node.children.append(child)


def _drop_dead_ends(node: TreeNode) -> bool:
    """Remove subtrees without a terminal; True if anything survives below node."""
    node.children = [c for c in node.children if _drop_dead_ends(c)]
    return bool(node.children or node.terminals)


def enumerate_tree(
    root: MMPState,
    mode: Mode = "raw",
    prunes: Optional[Sequence[Prune]] = None,
    floating: bool = False,
) -> TreeNode:
    """Every directed MMP from root, children in priority order.

    Raw mode keeps dead ends. Curated mode cuts the recorded prefixes
    (looked up by root when `prunes` is None) and then drops every branch
    that never reaches a terminal.
    """
    root.check()
    if mode == "curated" and prunes is None:
        prunes = curated_prunes(root)
    tree = TreeNode(root)
    _grow(tree, (), prunes if mode == "curated" else (), floating)
    if mode == "curated":
        _drop_dead_ends(tree)
    return tree


def leaf_summary(tree: TreeNode) -> List[Leaf]:
    """One entry per terminal reached and per dead end, in depth-first order."""
    out: List[Leaf] = []

    def walk(node: TreeNode, path: Path) -> None:
        for term in node.terminals:
            out.append(Leaf(path, term))
        if node.dead_end:
            out.append(Leaf(path, None))
        for child in node.children:
            walk(child, path + (child.edge,))

    walk(tree, ())
    return out


def terminal_paths(tree: TreeNode) -> Dict[Path, List[str]]:
    found: Dict[Path, List[str]] = {}
    for leaf in leaf_summary(tree):
        if leaf.terminal is not None:
            found.setdefault(leaf.path, []).append(str(leaf.terminal))
    return found


def render_tree_text(tree: TreeNode, title: str = "") -> str:
    lines: List[str] = []

    def walk(node: TreeNode, depth: int) -> None:
        pad = "  " * depth
        head = f"{node.edge} -> " if node.edge else (f"{title}: " if title else "")
        lines.append(f"{pad}{head}[{node.state.basket_text()}] {node.state}")
        for term in node.terminals:
            lines.append(f"{pad}  => {term}")
        for p in node.pruned:
            lines.append(f"{pad}  x {','.join(p.prefix)} pruned ({p.citation})")
        if node.dead_end:
            lines.append(f"{pad}  => dead end")
        for child in node.children:
            walk(child, depth + 1)

    walk(tree, 0)
    return "\n".join(lines)


def tree_to_json(tree: TreeNode) -> Dict[str, object]:
    return {
        "state": tree.state.as_dict(),
        "basket": tree.state.basket_text(),
        "edge": tree.edge,
        "terminals": [str(t) for t in tree.terminals],
        "dead_end": tree.dead_end,
        "pruned": [{"prefix": list(p.prefix), "citation": p.citation} for p in tree.pruned],
        "children": [tree_to_json(c) for c in tree.children],
    }


def replay(root: MMPState, path: Sequence[ContractionType], floating: bool = False) -> MMPState:
    """Follow path under the directed rules.

    Raises:
        NotApplicable: at the first step the directed rules forbid.
    """
    state, last = root, None
    for i, t in enumerate(path):
        if t not in directed_available(state, last, floating=floating):
            raise NotApplicable(f"step {i + 1} ({t}) is not available after {last} at [{state}]")
        state, last = apply(state, t), t
    logger.debug("replayed %s to %s", ",".join(path), state)
    return state
