from orbifano.singularity.content import (
    class_t_family,
    edge_height_width,
    is_class_R,
    one_third_residue_family,
    residue,
    singularity_content_of_cone,
)
from orbifano.singularity.cyclic import (
    A1,
    A2,
    ONE_THIRD,
    Basket,
    CyclicQuotient,
    basket_of,
    canonical_index,
    cone_singularity,
    discrepancies,
    hj_expansion,
    is_class_T,
    is_du_val,
)

__all__ = [
    "A1",
    "A2",
    "ONE_THIRD",
    "Basket",
    "CyclicQuotient",
    "basket_of",
    "canonical_index",
    "class_t_family",
    "cone_singularity",
    "discrepancies",
    "edge_height_width",
    "hj_expansion",
    "is_class_R",
    "is_class_T",
    "is_du_val",
    "one_third_residue_family",
    "residue",
    "singularity_content_of_cone",
]
