from __future__ import annotations

import pytest
from sympy import Rational

from orbifano.errors import DegenerateCone, SmoothPoint
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
    canonical_index,
    cone_singularity,
    discrepancies,
    hj_expansion,
    is_class_T,
    is_du_val,
)


def test_normal_form_uses_smaller_of_a_and_inverse():
    assert CyclicQuotient.of(5, 3) == CyclicQuotient.of(5, 2)
    assert CyclicQuotient.of(12, 7).a == 7
    assert CyclicQuotient.of(1, 0).is_smooth
    with pytest.raises(ValueError):
        CyclicQuotient.of(4, 2)


@pytest.mark.parametrize(
    "u, v, expected",
    [
        ((0, 1), (3, -1), ONE_THIRD),
        ((0, 1), (3, -2), A2),
        ((0, 1), (2, -1), A1),
        ((1, 0), (0, 1), CyclicQuotient.of(1, 0)),
        ((0, 1), (5, -2), CyclicQuotient.of(5, 2)),
    ],
)
def test_cone_singularity(u, v, expected):
    assert cone_singularity(u, v) == expected
    assert cone_singularity(v, u) == expected


def test_cone_singularity_rejects_parallel_rays():
    with pytest.raises(DegenerateCone):
        cone_singularity((1, 2), (2, 4))


@pytest.mark.parametrize(
    "point, chain",
    [
        (ONE_THIRD, [3]),
        (A2, [2, 2]),
        (CyclicQuotient.of(5, 2), [3, 2]),
        (CyclicQuotient.of(12, 7), [2, 4, 2]),
    ],
)
def test_hj_expansion(point, chain):
    assert hj_expansion(point) == chain


def test_hj_expansion_of_smooth_point():
    with pytest.raises(SmoothPoint):
        hj_expansion(CyclicQuotient.of(1, 0))


def test_discrepancies_and_index():
    assert discrepancies(ONE_THIRD) == [Rational(-1, 3)]
    assert discrepancies(A2) == [0, 0]
    assert canonical_index(ONE_THIRD) == 3
    assert canonical_index(A2) == 1
    assert is_du_val(A1) and is_du_val(A2)
    assert not is_du_val(ONE_THIRD)


def test_class_t():
    assert is_class_T(CyclicQuotient.of(4, 1))
    assert is_class_T(A2)
    assert not is_class_T(ONE_THIRD)


def test_basket_text_and_counts():
    basket = Basket.of([ONE_THIRD] * 6 + [CyclicQuotient.of(1, 0)])
    assert len(basket) == 6
    assert basket.is_pure_one_third
    assert str(basket) == "6 × 1/3(1,1)"
    assert str(Basket.of([])) == "∅"
    mixed = Basket.of([A1, ONE_THIRD])
    assert mixed.count(A1) == 1
    assert not mixed.is_pure_one_third


def test_edge_height_width():
    assert edge_height_width((-1, 2), (-2, 1)) == (3, 1)
    assert edge_height_width((1, 1), (-1, 1)) == (1, 2)


def test_content_of_cones():
    # width 2 at height 2 is one primitive T-cone
    assert singularity_content_of_cone((0, 1), (4, -1)) == (1, None)
    assert singularity_content_of_cone((0, 1), (3, -1)) == (0, ONE_THIRD)
    assert singularity_content_of_cone((0, 1), (3, -2)) == (3, None)


def test_residues():
    assert residue(ONE_THIRD) == ONE_THIRD
    assert is_class_R(ONE_THIRD)
    assert residue(CyclicQuotient.of(4, 1)) is None
    assert residue(A2) is None
    assert not is_class_R(A2)


def test_families():
    assert class_t_family(4) == {
        A1,
        A2,
        CyclicQuotient.of(4, 3),
        CyclicQuotient.of(4, 1),
    }
    assert one_third_residue_family(12) == {ONE_THIRD, CyclicQuotient.of(12, 7)}
    for point in one_third_residue_family(30):
        assert residue(point) == ONE_THIRD
