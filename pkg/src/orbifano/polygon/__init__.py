from orbifano.polygon.families import match_family
from orbifano.polygon.fano import (
    Fan2,
    FanoPolygon,
    SingularityContent,
    class_group,
    cone_types,
    degree_via_formula,
    edge_data,
    face_fan,
    fano_index,
    h0_proxy,
    lattice_points_on_boundary,
    normal_form,
    parse_vertices,
    ray_lattice_index,
    singularity_content,
    toric_degree,
    validate,
)
from orbifano.polygon.svg import render_polygon_svg

__all__ = [
    "Fan2",
    "FanoPolygon",
    "SingularityContent",
    "class_group",
    "cone_types",
    "degree_via_formula",
    "edge_data",
    "face_fan",
    "fano_index",
    "h0_proxy",
    "lattice_points_on_boundary",
    "match_family",
    "normal_form",
    "parse_vertices",
    "ray_lattice_index",
    "render_polygon_svg",
    "singularity_content",
    "toric_degree",
    "validate",
]
