from __future__ import annotations

import pytest
from sympy import Rational

from orbifano.errors import (
    InputError,
    NoFamily,
    NonPrimitiveVertex,
    NotConvex,
    OriginNotInterior,
)
from orbifano.intersection.ci import surface_degree
from orbifano.lattice.normal_forms import AbelianGroup
from orbifano.polygon.families import match_family
from orbifano.polygon.fano import (
    FanoPolygon,
    class_group,
    degree_via_formula,
    face_fan,
    fano_index,
    h0_proxy,
    lattice_points_on_boundary,
    normal_form,
    parse_vertices,
    ray_lattice_index,
    singularity_content,
    toric_degree,
)
from orbifano.polygon.svg import render_polygon_svg
from orbifano.singularity.cyclic import CyclicQuotient

P2 = [[1, 0], [0, 1], [-1, -1]]
P113 = [[-1, 2], [-2, 1], [1, -1]]


def adjacent_determinant_degree(vertices):
    """K^2 as twice the area of the dual polygon, built edge by edge."""
    n = len(vertices)
    duals = []
    for i in range(n):
        (u0, u1), (v0, v1) = vertices[i], vertices[(i + 1) % n]
        det = u0 * v1 - u1 * v0
        duals.append((Rational(u1 - v1, det), Rational(v0 - u0, det)))
    return sum(a[0] * b[1] - a[1] * b[0] for a, b in zip(duals, duals[1:] + duals[:1]))


def test_vertices_are_put_in_canonical_order():
    p = FanoPolygon.of(P113)
    assert p.vertices == ((-2, 1), (1, -1), (-1, 2))
    assert str(p) == "-2,1;1,-1;-1,2"
    assert parse_vertices("-1,2; -2,1; 1,-1") == p


def test_parse_vertices_rejects_garbage():
    with pytest.raises(InputError):
        parse_vertices("a,b;1,2")


@pytest.mark.parametrize(
    "vertices, error, vertex",
    [
        ([[2, 0], [0, 1], [-1, -1]], NonPrimitiveVertex, (2, 0)),
        ([[3, -1], [-1, 3], [-1, -1], [1, 0]], NotConvex, (1, 0)),
        ([[1, 0], [0, 1], [1, 1]], OriginNotInterior, None),
    ],
)
def test_validation_errors(vertices, error, vertex):
    with pytest.raises(error) as info:
        FanoPolygon.of(vertices)
    if vertex is not None:
        assert info.value.vertex == vertex


def test_repeated_vertex():
    with pytest.raises(InputError):
        FanoPolygon.of([[1, 0], [1, 0], [0, 1], [-1, -1]])


def test_weighted_plane_113():
    p = FanoPolygon.of(P113)
    content = singularity_content(p)
    assert content.n == 2
    assert content.k == 1
    assert str(content.basket) == "1 × 1/3(1,1)"
    assert degree_via_formula(content) == Rational(25, 3)
    assert h0_proxy(content) == 9
    assert toric_degree(face_fan(p)) == Rational(25, 3)
    assert lattice_points_on_boundary(p) == 3
    assert class_group(face_fan(p)) == AbelianGroup(1, ())
    assert fano_index(face_fan(p)) == 5


def test_projective_plane():
    p = FanoPolygon.of(P2)
    content = singularity_content(p)
    assert (content.n, content.k) == (3, 0)
    assert toric_degree(face_fan(p)) == 9
    assert fano_index(face_fan(p)) == 3


def test_mixed_basket_has_no_formula_degree():
    p = FanoPolygon.of([[0, 1], [5, -2], [-1, 0]])
    content = singularity_content(p)
    assert content.basket.count(CyclicQuotient.of(5, 2)) == 1
    assert not content.is_pure_one_third
    with pytest.raises(ValueError):
        degree_via_formula(content)
    with pytest.raises(NoFamily):
        match_family(p)


def test_registry_polygons_agree_with_their_records(registry):
    for rec in registry.polygons:
        p = FanoPolygon.of(rec.vertices)
        content = singularity_content(p)
        assert (content.n, content.k) == (rec.n, rec.k), rec.id
        assert content.is_pure_one_third
        fan_degree = toric_degree(face_fan(p))
        assert fan_degree == degree_via_formula(content), rec.id
        assert fan_degree == adjacent_determinant_degree(list(p.vertices)), rec.id
        assert surface_degree(p.vertices) == fan_degree
        assert fan_degree == registry.family(rec.deforms_to).d, rec.id


def test_registry_polygons_match_their_family(registry):
    for rec in registry.polygons:
        assert match_family(FanoPolygon.of(rec.vertices), registry) == rec.deforms_to


def test_family_survives_a_change_of_basis(registry):
    rec = registry.polygon(15)
    sheared = [[x + y, y] for x, y in rec.vertices]
    p = FanoPolygon.of(sheared)
    assert normal_form(p) == normal_form(FanoPolygon.of(rec.vertices))
    assert match_family(p, registry) == rec.deforms_to


def test_unknown_invariants_have_no_family(registry):
    with pytest.raises(NoFamily):
        match_family(FanoPolygon.of(P2), registry)


def test_svg_is_deterministic():
    p = FanoPolygon.of(P113)
    svg = render_polygon_svg(p, scale=20)
    assert svg == render_polygon_svg(FanoPolygon.of(list(reversed(P113))), scale=20)
    assert svg.startswith("<?xml")
    assert "<svg" in svg and "<path" in svg
    # bounding box grown by one on each side: x in [-3, 2], y in [-2, 3]
    assert 'width="100' in svg and 'height="100' in svg
    assert render_polygon_svg(p, scale=40) != svg
    assert render_polygon_svg(FanoPolygon.of(P2), scale=20) != svg


@pytest.mark.parametrize(
    "vertices, index",
    [
        ([(1, 0), (0, 1), (-1, -1)], 1),
        ([(3, 1), (-3, 1), (0, -1)], 3),
    ],
)
def test_ray_lattice_index(vertices, index):
    assert ray_lattice_index(face_fan(FanoPolygon.of(vertices))) == index
