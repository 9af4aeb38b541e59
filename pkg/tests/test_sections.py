from __future__ import annotations

import pytest
from sympy import Matrix

from orbifano.errors import CannotReduce, InputError, NotAntisymmetric
from orbifano.io.registry import load_identities
from orbifano.sections.identities import (
    antisymmetric_from_upper,
    pfaffian4,
    verify_binomials,
    verify_octahedral_relations,
)
from orbifano.sections.monomials import (
    Monomial,
    check_homogeneity,
    check_substitution_identity,
    monomial_basis,
    parse_poly,
    restricted_basis,
    terms,
)
from orbifano.sections.quotients import quotient_surface_basket
from orbifano.sections.strata import basket_of_report, ci_singularity_report, quotient_type
from orbifano.singularity.cyclic import A1, A2, ONE_THIRD
from orbifano.toric.weights import WeightMatrix

WORKED = WeightMatrix.of([[1, 1, 2, 1, 0, 0], [0, 0, 1, 2, 1, 1]])


def test_monomial_basis_and_restriction():
    basis = monomial_basis(WORKED, (1, 1))
    assert len(basis) == 4
    assert all(m.degree(WORKED) == (1, 1) for m in basis)
    assert len(restricted_basis(basis, [0])) == 2
    assert restricted_basis(basis, [4, 5]) == []


def test_monomial_rendering():
    assert Monomial((1, 0, 2)).render(["a", "b", "c"]) == "a*c^2"
    assert Monomial((0, 0)).render(["a", "b"]) == "1"
    assert Monomial((1, 0, 2)).support == frozenset({0, 2})


def test_homogeneity():
    assert check_homogeneity(parse_poly("x0*x4 + x1*x5"), WORKED) == (1, 1)
    assert check_homogeneity(parse_poly("x0 + x4"), WORKED) is None


def test_terms_reject_foreign_coordinates():
    with pytest.raises(InputError):
        terms(parse_poly("x0*z"), WORKED.labels)


def test_substitution_identity():
    assert check_substitution_identity({"z1": "a*b", "z2": "a", "z3": "b"}, "z1 - z2*z3")
    assert not check_substitution_identity({"z1": "a*b", "z2": "a", "z3": "a"}, "z1 - z2*z3")


def test_parse_poly_rejects_garbage():
    with pytest.raises(InputError):
        parse_poly("x0 +* x1")


@pytest.mark.parametrize(
    "order, a, b, expected",
    [
        (3, 1, 1, ONE_THIRD),
        (3, 1, 2, A2),
        (4, 2, 1, A1),
    ],
)
def test_quotient_type(order, a, b, expected):
    assert quotient_type(order, a, b) == expected


def test_quotient_type_divides_out_reflections():
    assert quotient_type(2, 1, 0).is_smooth


def test_singular_point_of_weighted_plane():
    wm = WeightMatrix.of([[1, 1, 3]], labels=["x0", "x1", "y"])
    reports = ci_singularity_report(wm, (1,), [])
    assert [r.stratum for r in reports] == [(2,)]
    assert reports[0].status == "points"
    assert reports[0].describe(wm.labels) == "{y} dim 0, stabilizer Z/3: 1 × 1/3(1,1)"
    assert str(basket_of_report(reports)) == "1 × 1/3(1,1)"


def test_quartic_in_weighted_space_eliminates_a_coordinate():
    wm = WeightMatrix.of([[1, 1, 1, 3]], labels=["x0", "x1", "x2", "y"])
    reports = ci_singularity_report(wm, (2,), [(4,)])
    (rep,) = reports
    assert rep.status == "points"
    assert rep.eliminated == (0,)
    assert rep.singularity == ONE_THIRD
    assert str(basket_of_report(reports)) == "1 × 1/3(1,1)"


def test_worked_example_basket():
    reports = ci_singularity_report(WORKED, (1, 1), [(2, 2), (2, 2)])
    assert str(basket_of_report(reports)) == "1 × 1/3(1,1)"


def test_cubic_quotient_basket():
    assert str(quotient_surface_basket(3, [1, 1, 2, 2], 3)) == "6 × 1/3(1,1)"


def test_cubic_quotient_with_large_eigenspace():
    with pytest.raises(CannotReduce):
        quotient_surface_basket(3, [0, 1, 1, 1], 3)
    with pytest.raises(InputError):
        quotient_surface_basket(3, [1, 1, 2], 3)


def test_pfaffian_of_generic_matrix():
    upper = {f"{j}{k}": f"a{j}{k}" for j in range(1, 6) for k in range(j + 1, 6)}
    a = antisymmetric_from_upper(upper)
    assert a.T == -a
    assert pfaffian4(a, 5) == parse_poly("a12*a34 - a13*a24 + a14*a23")
    assert pfaffian4(a, 1) == parse_poly("a23*a45 - a24*a35 + a25*a34")


def test_pfaffian_needs_antisymmetric_input():
    with pytest.raises(NotAntisymmetric):
        pfaffian4(Matrix.ones(5, 5), 1)
    with pytest.raises(NotAntisymmetric):
        pfaffian4(Matrix.zeros(4, 4), 1)


def test_recorded_identities_hold():
    identities = load_identities()
    checks = verify_octahedral_relations(identities) + verify_binomials(identities)
    assert checks
    assert [c.id for c in checks if not c.holds] == []
