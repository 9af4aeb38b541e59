from orbifano.io.registry import (
    default_registry,
    load_identities,
    load_registry,
    registry_from_dict,
)
from orbifano.io.weightfile import (
    WeightFile,
    parse_bundle_file,
    parse_omega,
    parse_weight_file,
    parse_weight_text,
)

__all__ = [
    "WeightFile",
    "default_registry",
    "load_identities",
    "load_registry",
    "parse_bundle_file",
    "parse_omega",
    "parse_weight_file",
    "parse_weight_text",
    "registry_from_dict",
]
