from orbifano.toric.chambers import (
    Chamber,
    Chart,
    SimplicialFan,
    chamber_of,
    charts,
    fan_from_chamber,
    irrelevant_ideal,
    nef_cone,
)
from orbifano.toric.weights import (
    WeightMatrix,
    adjoint_class,
    anticanonical,
    is_standard,
    is_wellformed,
    kernel_rays,
    weights_from_rays,
    wellform,
    wellform_with_map,
)

__all__ = [
    "Chamber",
    "Chart",
    "SimplicialFan",
    "WeightMatrix",
    "adjoint_class",
    "anticanonical",
    "chamber_of",
    "charts",
    "fan_from_chamber",
    "irrelevant_ideal",
    "is_standard",
    "is_wellformed",
    "kernel_rays",
    "weights_from_rays",
    "nef_cone",
    "wellform",
    "wellform_with_map",
]
