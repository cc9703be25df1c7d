from fractions import Fraction

import pytest
from hypothesis import given, settings

from algebra import basis_element, clifford, default_basis, octonion, parse_basis
from errors import NotAdmissible, NotASliceInput, SpecMismatch
from operators import (OPERATOR_NAMES, OperatorContext, S_dprime, S_prime,
                       S_tilde, block_multiplicities, casimir_S,
                       casimir_S_commutator, cauchy_riemann,
                       conj_cauchy_riemann, delta1, delta2, dirac_A,
                       dunkl_CR, dunkl_T, dunkl_laplacian,
                       dunkl_laplacian_classical, in_kernel_SA, laplacian,
                       slice_images, spherical_derivative, spherical_dirac,
                       spherical_dunkl_dirac, spherical_value,
                       zero_multiplicities)
from parse_input import parse_polynomial
from partitions import (MultiplicitySeq, all_singletons,
                        canonical_multiplicities, parse_partition,
                        uniform_multiplicities, whole)
from poly import (constant, imaginary, left_mul_x, monomial, power_x,
                  right_mul_const, variable, x_conj_poly, x_poly)
from strategies import polynomials, slice_polynomials
from verify import (appell_and_powers, check_operator_identities,
                    check_partition_identities)

PLANE = default_basis(clifford(2))
CL3 = default_basis(clifford(3))
QUATERNIONS = parse_basis(clifford(2), "1,e1,e2,e12")
OCTONIONS = default_basis(octonion())

H = Fraction(1, 2)


def p(text, basis=PLANE):
    return parse_polynomial(basis, text)


def test_cauchy_riemann_of_x():
    assert cauchy_riemann(x_poly(PLANE)) == constant(PLANE, -1)
    assert conj_cauchy_riemann(x_poly(PLANE)) == constant(PLANE, 3)
    assert cauchy_riemann(x_conj_poly(CL3)) == constant(CL3, 4)
    assert cauchy_riemann(p("x0 + x1*e1")).is_zero()


def test_laplacian_powers():
    f = p("x1^4 + x0^2*x2*e1")
    assert laplacian(f) == p("12*x1^2 + 2*x2*e1")
    assert laplacian(f, 2) == constant(PLANE, 24)
    assert laplacian(f, 3).is_zero()
    assert laplacian(power_x(PLANE, 2)) == constant(PLANE, -2)


def test_divided_differences():
    assert delta1(p("x1^3 + x1^2*e2 + x2"), 1) == p("2*x1^2")
    assert delta2(p("x1^3"), 1) == p("-4*x1")
    assert delta2(p("x1^2*e1"), 1) == p("-4*e1")
    assert delta2(p("x1 + 5"), 1).is_zero()


def test_dunkl_T():
    k = MultiplicitySeq.of([-H, 0])
    assert dunkl_T(p("x1^3 + x1^2"), 1, k) == p("2*x1^2 + 2*x1")
    assert dunkl_T(p("x2^3"), 2, k) == p("3*x2^2")


def test_dunkl_cauchy_riemann_of_x():
    # 1 - (n + 2 sum k) vanishes for every admissible k on one block
    for basis in (PLANE, CL3, QUATERNIONS, OCTONIONS):
        P = whole(basis.n)
        for k in (canonical_multiplicities(P), uniform_multiplicities(P)):
            assert dunkl_CR(x_poly(basis), P, k).is_zero()


def test_all_singletons_give_the_classical_operator():
    P = all_singletons(3)
    k = canonical_multiplicities(P)
    f = power_x(CL3, 3)
    assert dunkl_CR(f, P, k) == cauchy_riemann(f)
    assert dunkl_laplacian(f, P, k) == laplacian(f)


def test_non_admissible_multiplicities_are_rejected():
    with pytest.raises(NotAdmissible):
        dunkl_CR(x_poly(PLANE), whole(2), zero_multiplicities(2))
    with pytest.raises(NotAdmissible):
        dunkl_laplacian(x_poly(PLANE), whole(2), zero_multiplicities(2))


def test_block_multiplicities():
    assert block_multiplicities([2, 3, 4], 5).values == (0, 0, -H, -H, 0)


def test_casimir_forms_agree_on_a_block():
    f = p("x0*x1^2*x2 + x2^3*e1 - 3*x1*e2 + 1/2", CL3)
    A = (1, 2)
    k = block_multiplicities(A, 3)
    assert casimir_S(f, A, k) == casimir_S_commutator(f, A, k)


def test_x_lies_in_the_kernel_of_S():
    A = (1, 2)
    k = block_multiplicities(A, 2)
    for name, image in slice_images(x_poly(PLANE), A, k):
        assert image.is_zero(), name
    assert in_kernel_SA(x_poly(PLANE), A)


def test_slice_images_detect_non_slice_input():
    f = p("x1*x2")
    A = (1, 2)
    k = block_multiplicities(A, 2)
    names = [name for name, image in slice_images(f, A, k) if not image.is_zero()]
    assert names and set(names) <= {"S_A", "S'_A", "S''_A"}
    assert S_prime(f, A, k) == p("-x1*x2")
    assert S_tilde(f, A, k) == p("-x1*x2")
    assert S_dprime(f, A, k) == S_prime(p("x1^2*x2*e1 + x1*x2^2*e2"), A, k)
    assert not in_kernel_SA(f, A)


def test_spherical_value_and_derivative_of_x():
    A = (1, 2)
    x = x_poly(PLANE)
    assert spherical_value(x, A) == variable(PLANE, 0)
    assert spherical_derivative(x, A) == constant(PLANE, 1)


def test_spherical_derivative_needs_kernel_input():
    with pytest.raises(NotASliceInput):
        spherical_derivative(p("x1*x2"), (1, 2))


def test_spherical_dirac_of_imaginary_part():
    # Gamma x_A = (n - 1) x_A on paravectors
    assert spherical_dirac(imaginary(CL3, (1, 2, 3))) == 2 * imaginary(CL3, (1, 2, 3))


def test_dunkl_laplacian_divided_form():
    P = parse_partition("{1}|{2,3}")
    k = canonical_multiplicities(P)
    f = p("x2^3*x3*e1 + x3^2 + x0*x2", CL3)
    assert dunkl_laplacian_classical(f, P, k) == dunkl_laplacian(f, P, k)


def test_dirac_on_a_block_is_the_restricted_sum():
    f = p("x1*x2*x3 + x3^2*e12", CL3)
    k = block_multiplicities((2, 3), 3)
    whole_sum = dirac_A(f, (2, 3), k)
    split = dirac_A(f, (2,), k) + dirac_A(f, (3,), k)
    assert whole_sum == split


class TestOperatorContext:
    def test_default_multiplicities_are_canonical(self):
        ctx = OperatorContext(PLANE, whole(2))
        assert ctx.k.values == (0, -H)
        assert OperatorContext.build(CL3, whole(3), "uniform").k == uniform_multiplicities(whole(3))
        assert OperatorContext.build(CL3, whole(3), alphas=[2]).k.values == (-H, 0, -H)

    def test_aliases_dispatch(self):
        ctx = OperatorContext(PLANE, whole(2))
        x = x_poly(PLANE)
        assert ctx.apply("dbar", x) == cauchy_riemann(x)
        assert ctx.apply("lap", power_x(PLANE, 2)) == constant(PLANE, -2)
        assert ctx.apply("D", x).is_zero()
        assert ctx.apply("delta1", p("x2^3"), index=2) == p("2*x2^2")
        assert ctx.apply("spherical_derivative", x, block=1) == constant(PLANE, 1)

    def test_every_operator_name_dispatches(self):
        ctx = OperatorContext(PLANE, whole(2))
        x = x_poly(PLANE)
        for name in OPERATOR_NAMES:
            index = 1 if name in ("delta1", "delta2", "dunkl_T") else None
            ctx.apply(name, x, index=index)

    def test_errors(self):
        ctx = OperatorContext(PLANE, whole(2))
        x = x_poly(PLANE)
        with pytest.raises(SpecMismatch):
            ctx.apply("delta1", x)
        with pytest.raises(SpecMismatch):
            ctx.apply("nabla", x)
        with pytest.raises(SpecMismatch):
            ctx.apply("dbar", x_poly(CL3))
        with pytest.raises(SpecMismatch):
            OperatorContext(PLANE, whole(3))
        with pytest.raises(SpecMismatch):
            OperatorContext(PLANE).D(x)
        with pytest.raises(NotAdmissible):
            OperatorContext(PLANE, whole(2), zero_multiplicities(2))


@settings(max_examples=25, deadline=None)
@given(polynomials(CL3))
def test_operator_identities_clifford(f):
    check_operator_identities(f)


@settings(max_examples=15, deadline=None)
@given(polynomials(OCTONIONS, max_degree=3, max_terms=3))
def test_operator_identities_octonions(f):
    check_operator_identities(f)


@settings(max_examples=15, deadline=None)
@given(polynomials(QUATERNIONS))
def test_operator_identities_quaternions(f):
    check_operator_identities(f)


@pytest.mark.parametrize("partition", ["{1,2,3}", "{1}|{2,3}", "{1,3}|{2}", "{1}|{2}|{3}"])
@settings(max_examples=15, deadline=None)
@given(f=polynomials(CL3))
def test_dunkl_laplacian_factorizations(partition, f):
    check_partition_identities(f, parse_partition(partition))


SLICE_BASES = [pytest.param(CL3, id="clifford3"), pytest.param(OCTONIONS, id="octonions")]


def _full_block(basis):
    A = list(range(1, basis.n + 1))
    return A, block_multiplicities(A, basis.n)


def _coefficients(basis):
    dim = basis.spec.dimension
    return [basis_element(basis.spec, q) for q in (0, 1, dim // 2, dim - 1)]


@pytest.mark.parametrize("basis", SLICE_BASES)
@pytest.mark.parametrize("alpha, beta", [(0, 0), (1, 0), (0, 1), (2, 1), (1, 2), (3, 0), (2, 2)])
def test_slice_polynomials_lie_in_the_spherical_kernels(basis, alpha, beta):
    A, k = _full_block(basis)
    g = power_x(basis, alpha)
    for _ in range(beta):
        g = left_mul_x(g, conjugate=True)
    for a in _coefficients(basis):
        f = right_mul_const(g, a)
        assert casimir_S(f, A, k).is_zero()
        assert spherical_dunkl_dirac(f, k).is_zero()


@pytest.mark.parametrize("basis", SLICE_BASES)
@pytest.mark.parametrize("j", range(5))
def test_powers_of_x_are_dunkl_regular(basis, j):
    P = whole(basis.n)
    k = canonical_multiplicities(P)
    for a in _coefficients(basis):
        assert dunkl_CR(right_mul_const(power_x(basis, j), a), P, k).is_zero()


@pytest.mark.parametrize("basis", SLICE_BASES)
def test_conjugate_of_x_is_not_dunkl_regular(basis):
    P = whole(basis.n)
    assert dunkl_CR(x_conj_poly(basis), P, canonical_multiplicities(P)) == constant(basis, 2)


@pytest.mark.parametrize("basis", SLICE_BASES)
def test_x1_v2_is_outside_the_spherical_kernels(basis):
    A, k = _full_block(basis)
    exps = [0] * (basis.n + 1)
    exps[1] = 1
    f = monomial(basis, exps, basis.unit(2))
    assert not casimir_S(f, A, k).is_zero()
    assert not spherical_dunkl_dirac(f, k).is_zero()
    assert spherical_dunkl_dirac(f, k) == -casimir_S(f, A, k)


@settings(max_examples=20, deadline=None)
@given(slice_polynomials(CL3))
def test_generated_slice_polynomials_clifford(f):
    A, k = _full_block(CL3)
    assert casimir_S(f, A, k).is_zero()
    assert spherical_dunkl_dirac(f, k).is_zero()


@settings(max_examples=10, deadline=None)
@given(slice_polynomials(OCTONIONS, max_degree=3, max_terms=2))
def test_generated_slice_polynomials_octonions(f):
    A, k = _full_block(OCTONIONS)
    assert casimir_S(f, A, k).is_zero()
    assert spherical_dunkl_dirac(f, k).is_zero()


@pytest.mark.parametrize("partition", ["{1,2,3}", "{1}|{2,3}", "{1,3}|{2}", "{1}|{2}|{3}"])
def test_appell_and_power_law_on_every_block(partition):
    appell_and_powers(CL3, parse_partition(partition))


@pytest.mark.slow
@pytest.mark.parametrize("partition", ["{1,2,3,4,5,6,7}", "{1,2,3}|{4}|{5,6,7}"])
def test_appell_and_power_law_on_octonion_blocks(partition):
    appell_and_powers(OCTONIONS, parse_partition(partition), max_power=3)
