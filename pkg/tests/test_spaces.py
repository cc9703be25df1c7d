import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from algebra import clifford, default_basis, parse_basis
from errors import InputDependsOnX0, InputNotPSlice, NotInKernelSA
from operators import block_multiplicities, in_kernel_SA
from parse_input import parse_polynomial
from partitions import (all_singletons, canonical_multiplicities,
                        enumerate_set_partitions, parse_partition,
                        uniform_multiplicities, whole)
from poly import constant, imaginary, left_mul_imaginary, power_x, restrict_x0, x_poly
from spaces import (basis_polynomial, basis_rank, ck_extension, compositions,
                    expected_dimension, homogeneous_FP_basis, is_dunkl_monogenic,
                    is_member_FP, is_P_slice, ordered_imaginary_product,
                    random_FP_element, separating_witness, slice_decompose,
                    taylor_coefficients, verify_taylor)
from strategies import p_slice_inputs

PLANE = default_basis(clifford(2))
CL3 = default_basis(clifford(3))


def p(text, basis=PLANE):
    return parse_polynomial(basis, text)


def test_x_is_slice_regular_but_not_monogenic():
    x = x_poly(PLANE)
    assert is_P_slice(x, whole(2))
    assert is_dunkl_monogenic(x, whole(2))
    assert is_member_FP(x, whole(2))
    assert not is_member_FP(x, all_singletons(2))
    assert is_member_FP(p("x0 + x1*e1"), all_singletons(2))


def test_slice_check_reports_a_witness():
    check = is_P_slice(p("x1*x2"), whole(2))
    assert not check
    assert check.block == 1
    assert check.operator in ("S_A", "S'_A", "S''_A")
    assert not check.witness.is_zero()
    assert check.describe().startswith("not P-slice")
    assert is_P_slice(x_poly(PLANE), whole(2)).describe() == "P-slice"


def test_singleton_blocks_are_always_slice():
    assert is_P_slice(p("x1*x2 + x1^3*e2"), all_singletons(2))


def test_strict_check_agrees_on_members():
    for P in enumerate_set_partitions(3):
        for f in homogeneous_FP_basis(CL3, P, 2, verify=False):
            assert is_P_slice(f, P, strict=True)


def test_ck_of_the_imaginary_part_is_x():
    for basis in (PLANE, CL3):
        g = imaginary(basis, range(1, basis.n + 1))
        assert ck_extension(g, whole(basis.n), verify=True) == x_poly(basis)


def test_ck_rejects_bad_data():
    with pytest.raises(InputDependsOnX0):
        ck_extension(p("x0*x1"), whole(2))
    with pytest.raises(InputNotPSlice):
        ck_extension(p("x1*x2"), whole(2))


@pytest.mark.parametrize("m", range(5))
def test_single_block_basis_polynomials_are_powers_of_x(m):
    assert basis_polynomial(CL3, whole(3), (m,)) == power_x(CL3, m)


def test_ordered_imaginary_product():
    P = parse_partition("{1}|{2,3}")
    g = ordered_imaginary_product(CL3, P, (1, 1), constant(CL3, 1).terms[(0, 0, 0, 0)])
    assert g == left_mul_imaginary((1,), imaginary(CL3, (2, 3)))
    with pytest.raises(ValueError):
        ordered_imaginary_product(CL3, P, (1,), None)


def test_basis_polynomial_with_coefficient():
    P = parse_partition("{1}|{2,3}")
    e12 = parse_polynomial(CL3, "e12").terms[(0, 0, 0, 0)]
    f = basis_polynomial(CL3, P, (2, 1), e12)
    assert is_member_FP(f, P)
    assert restrict_x0(f) == ordered_imaginary_product(CL3, P, (2, 1), e12)


def test_compositions():
    assert list(compositions(2, 2)) == [(2, 0), (1, 1), (0, 2)]
    assert list(compositions(0, 3)) == [(0, 0, 0)]
    assert len(list(compositions(3, 3))) == 10


@pytest.mark.parametrize("partition, d, expected", [
    ("{1,2}", 2, 4),
    ("{1}|{2}", 2, 12),
    ("{1}|{2}", 0, 4),
])
def test_homogeneous_bases_have_the_expected_dimension(partition, d, expected):
    P = parse_partition(partition)
    family = homogeneous_FP_basis(PLANE, P, d)
    assert len(family) == expected == expected_dimension(P, d, 4)
    assert basis_rank(family) == expected


def test_basis_rank():
    x = x_poly(PLANE)
    assert basis_rank([x, 2 * x]) == 1
    assert basis_rank([x, power_x(PLANE, 2)]) == 2
    assert basis_rank([]) == 0


def test_slice_decomposition():
    parts = slice_decompose(p("x1*e1 + x2*e2 + 3"), (1, 2))
    assert parts == [constant(PLANE, 3), constant(PLANE, 1)]
    g = slice_decompose(p("-x1^2 - x2^2"), (1, 2))
    assert g[2] == constant(PLANE, 1)
    assert slice_decompose(p("x2*e1"), (1,)) == [p("x2*e1")]
    assert slice_decompose(p("x1*x2*e2"), (1,)) == [p("0"), p("-x2*e12")]


def test_slice_decomposition_failures():
    with pytest.raises(NotInKernelSA):
        slice_decompose(p("x1*x2"), (1, 2))
    with pytest.raises(InputDependsOnX0):
        slice_decompose(p("x0 + x1*e1"), (1, 2))


def test_decomposable_data_is_in_the_kernel():
    f = p("x1*e1 + x2*e2 - 2*x1^2 - 2*x2^2 + 5*e12")
    slice_decompose(f, (1, 2))
    assert in_kernel_SA(f, (1, 2), block_multiplicities((1, 2), 2))


def test_random_members_are_reproducible():
    P = parse_partition("{1}|{2,3}")
    f = random_FP_element(CL3, P, 3, seed=7)
    assert f == random_FP_element(CL3, P, 3, seed=7)
    assert is_member_FP(f, P)
    assert is_member_FP(f, P, uniform_multiplicities(P))


def test_taylor_expansion():
    P = parse_partition("{1}|{2,3}")
    f = basis_polynomial(CL3, P, (1, 2))
    verify_taylor(f, P)
    coeffs = taylor_coefficients(f, P, canonical_multiplicities(P))
    assert coeffs[0] == restrict_x0(f)


def test_separating_witness():
    P, Q = whole(2), all_singletons(2)
    witness = separating_witness(PLANE, P, Q)
    assert witness is not None
    assert is_member_FP(witness.polynomial, witness.member)
    assert not is_member_FP(witness.polynomial, witness.other)


def test_quaternionic_basis_members():
    quaternions = parse_basis(clifford(2), "1,e1,e2,e12")
    for P in enumerate_set_partitions(3):
        for f in homogeneous_FP_basis(quaternions, P, 1):
            assert is_member_FP(f, P)


@settings(max_examples=25, deadline=None)
@given(st.sampled_from(enumerate_set_partitions(3)), st.data())
def test_ck_extension_is_injective(P, data):
    g1 = data.draw(p_slice_inputs(CL3, P))
    g2 = data.draw(p_slice_inputs(CL3, P))
    assume(g1 != g2)
    f1, f2 = ck_extension(g1, P), ck_extension(g2, P)
    assert f1 != f2
    assert restrict_x0(f1) == g1
    assert restrict_x0(f2) == g2


@pytest.mark.parametrize("first, second", [
    ("{1,2}|{3,4}", "{1,2}|{3}|{4}"),
    ("{1,2,3,4}", "{1}|{2,3,4}"),
    ("{1,3}|{2,4}", "{1,2}|{3,4}"),
])
def test_separating_witness_in_four_variables(first, second):
    basis = default_basis(clifford(4))
    witness = separating_witness(basis, parse_partition(first), parse_partition(second))
    assert witness is not None
    assert is_member_FP(witness.polynomial, witness.member)
    assert not is_member_FP(witness.polynomial, witness.other)
