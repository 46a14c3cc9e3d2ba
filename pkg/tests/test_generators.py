import pytest

from hurwitz_composition.composition.config import CompositionConfig
from hurwitz_composition.composition.generators import cayley_dickson_sign, classical, hr_family
from hurwitz_composition.composition.matrix import IntMatrix, all_signed_unit, identity
from hurwitz_composition.composition.oracle import check_identity, system_to_formula
from hurwitz_composition.composition.rho import rho
from hurwitz_composition.composition.verification import verify_hurwitz
from hurwitz_composition.errors import DomainError, SizeCapExceeded


@pytest.mark.parametrize("dim", [1, 2, 4, 8])
def test_classical_systems_are_valid(dim):
    system = classical(dim)
    assert system.size.as_list() == [dim, dim, dim]
    assert verify_hurwitz(system).passed
    assert check_identity(system_to_formula(system)).passed
    assert all_signed_unit(system.matrices)


def test_complex_system_matches_complex_multiplication():
    assert classical(2).matrices == (identity(2), IntMatrix.from_rows([[0, -1], [1, 0]]))


def test_first_matrix_is_identity():
    for dim in (1, 2, 4, 8):
        assert classical(dim).matrices[0] == identity(dim)


@pytest.mark.parametrize("dim", [0, 3, 5, 16])
def test_no_classical_system_outside_hurwitz_dimensions(dim):
    with pytest.raises(DomainError):
        classical(dim)


def test_imaginary_units_square_to_minus_one():
    for p in range(1, 8):
        assert cayley_dickson_sign(p, p, 8) == -1
        assert cayley_dickson_sign(0, p, 8) == 1
        assert cayley_dickson_sign(p, 0, 8) == 1


def test_distinct_imaginary_units_anticommute():
    for p in range(1, 8):
        for q in range(1, 8):
            if p != q:
                assert cayley_dickson_sign(p, q, 8) == -cayley_dickson_sign(q, p, 8)


@pytest.mark.parametrize("m", range(0, 8))
def test_hr_family_reaches_rho(m):
    system = hr_family(m)
    assert system.size.as_list() == [rho(1 << m), 1 << m, 1 << m]
    assert verify_hurwitz(system).passed
    assert all_signed_unit(system.matrices)


def test_hr_family_small_exponents_are_classical():
    for m in range(4):
        assert hr_family(m) == classical(1 << m)


def test_hr_family_respects_size_cap():
    with pytest.raises(SizeCapExceeded):
        hr_family(5, CompositionConfig(size_cap=16))
    with pytest.raises(SizeCapExceeded):
        hr_family(13)


def test_hr_family_refuses_huge_exponents_without_building_them():
    with pytest.raises(SizeCapExceeded, match=r"needs 2\^1099511627776,"):
        hr_family(2**40)


def test_hr_family_rejects_negative_exponent():
    with pytest.raises(DomainError):
        hr_family(-1)
