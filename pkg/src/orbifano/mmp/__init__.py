from orbifano.mmp.contractions import (
    D_TERMINALS,
    DIVISORIAL,
    PRIORITY,
    ContractionType,
    MMPState,
    applicable,
    apply,
    conic_fibres,
    directed_available,
    rank_one_terminal,
    rho_x,
)
from orbifano.mmp.curation import (
    RECORDED_SEQUENCES,
    THEOREM_ROOTS,
    Prune,
    RecordedSequence,
    TheoremRoot,
    curated_prunes,
    root_state,
    roots_for_k,
    theorem_root,
)
from orbifano.mmp.theorem import Discrepancy, discrepancy_report, tree_for, verify_theorem4
from orbifano.mmp.tree import (
    Leaf,
    Terminal,
    TreeNode,
    enumerate_tree,
    leaf_summary,
    render_tree_text,
    replay,
    terminal_paths,
    tree_to_json,
)

__all__ = [
    "D_TERMINALS",
    "DIVISORIAL",
    "PRIORITY",
    "RECORDED_SEQUENCES",
    "THEOREM_ROOTS",
    "ContractionType",
    "Discrepancy",
    "Leaf",
    "MMPState",
    "Prune",
    "RecordedSequence",
    "Terminal",
    "TheoremRoot",
    "TreeNode",
    "applicable",
    "apply",
    "conic_fibres",
    "curated_prunes",
    "directed_available",
    "discrepancy_report",
    "enumerate_tree",
    "leaf_summary",
    "rank_one_terminal",
    "render_tree_text",
    "replay",
    "rho_x",
    "root_state",
    "roots_for_k",
    "terminal_paths",
    "theorem_root",
    "tree_for",
    "tree_to_json",
    "verify_theorem4",
]
