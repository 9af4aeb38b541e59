from orbifano.lattice.cones import (
    facet_normals,
    in_cone,
    in_simplicial_cone,
    is_strictly_convex,
    primitive,
    same_cone,
    solve,
)
from orbifano.lattice.enumerate import enumerate_nonneg_solutions
from orbifano.lattice.normal_forms import (
    AbelianGroup,
    cokernel,
    cokernel_map,
    gcd_of_minors,
    kernel_basis,
    row_echelon,
    row_saturation,
    smith_normal_form,
)

__all__ = [
    "AbelianGroup",
    "cokernel",
    "cokernel_map",
    "enumerate_nonneg_solutions",
    "facet_normals",
    "gcd_of_minors",
    "in_cone",
    "in_simplicial_cone",
    "is_strictly_convex",
    "kernel_basis",
    "primitive",
    "row_echelon",
    "row_saturation",
    "same_cone",
    "smith_normal_form",
    "solve",
]
