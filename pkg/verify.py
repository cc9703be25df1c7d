"""
Built-in verification suites.

"reference" reproduces the worked examples (explicit polynomials, counts,
dimensions, trees); "properties" runs the randomized operator identities and
Fueter checks; "all" runs both. Every check raises VerificationFailed on the
first identity that does not hold.
"""
import logging
import time
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import factorial
from typing import Callable, Dict, List, Optional, Tuple

import numpy as np

from algebra import (HypercomplexBasis, clifford, default_basis, from_coords,
                     octonion, parse_basis)
from config import RANDOM_SEED, property_cases
from errors import FueterError, VerificationFailed
from fueter import (build_fueter_tree, count_fueter_trees, even_case_descent,
                    export_dot, laplacian_decomposition, tau,
                    verify_fueter_tree, verify_general_fueter,
                    verify_polyharmonic)
from operators import (casimir_S, casimir_S_commutator,
                       cauchy_riemann, conj_cauchy_riemann, conj_dunkl_CR,
                       delta1, delta2, dirac_A, dunkl_CR, dunkl_dirac,
                       dunkl_laplacian, dunkl_laplacian_classical, laplacian,
                       block_multiplicities, spherical_derivative,
                       spherical_dirac, spherical_dunkl_dirac, spherical_value,
                       zero_multiplicities)
from parse_input import parse_polynomial
from partitions import (SetPartition, all_singletons, bell,
                        canonical_multiplicities,
                        enumerate_set_partitions, integer_partitions,
                        odd_integer_partitions,
                        odd_partition_count, parse_partition,
                        partition_count, partition_from_shape,
                        uniform_multiplicities, whole)
from poly import (Polynomial, add, constant, derivative, euler, imaginary,
                  left_mul_imaginary, monomial, mul_real, negate, norm_sq,
                  pow_imaginary, power_x, reflect_set, require_equal,
                  require_zero, restrict_x0, scale, sum_polys, variable)
from spaces import (basis_polynomial, ck_extension, expected_dimension,
                    homogeneous_FP_basis, is_member_FP, is_P_slice,
                    random_FP_element, separating_witness, verify_taylor)

logger = logging.getLogger(__name__)

SUITES = ("reference", "properties", "all")


@dataclass(frozen=True)
class CheckResult:
    name: str
    suite: str
    passed: bool
    elapsed_ms: float
    message: str = ""


_REGISTRY: Dict[str, List[Tuple[str, Callable[[], None]]]] = {"reference": [], "properties": []}


def check(suite: str, name: str):
    def register(fn: Callable[[], None]) -> Callable[[], None]:
        _REGISTRY[suite].append((name, fn))
        return fn
    return register


# Shared settings

def r6_basis() -> HypercomplexBasis:
    """The eight-dimensional subspace <1, e1..e6, e123456> of clifford(6)."""
    return parse_basis(clifford(6), "1,e1,e2,e3,e4,e5,e6,e123456")


def quaternion_basis() -> HypercomplexBasis:
    return parse_basis(clifford(2), "1,e1,e2,e12")


def octonion_basis(n: int = 7) -> HypercomplexBasis:
    spec = octonion()
    return parse_basis(spec, ",".join(spec.basis_names[:n + 1]))


def _times_x0(f: Polynomial, power: int) -> Polynomial:
    return mul_real(f, variable(f.basis, 0, power))


def r6_expected() -> Dict[str, Polynomial]:
    """Explicit polynomials of the worked example on P = {1}|{2,3,4}|{5,6,7}."""
    b = r6_basis()
    A1, A2, A3 = (1,), (2, 3, 4), (5, 6, 7)
    xa1 = lambda g: left_mul_imaginary(A1, g)
    one = constant(b, 1)
    n2, n3 = norm_sq(b, A2), norm_sq(b, A3)
    x2, x3 = imaginary(b, A2), imaginary(b, A3)
    f = sum_polys(b, [
        scale(variable(b, 0, 5), Fraction(1, 15)),
        scale(_times_x0(xa1(one), 4), Fraction(1, 3)),
        scale(_times_x0(add(scale(xa1(add(x2, x3)), 2), add(n2, n3)), 3), Fraction(-1, 3)),
        negate(_times_x0(xa1(add(n2, n3)), 2)),
        _times_x0(add(scale(xa1(add(mul_real(x2, n3), mul_real(x3, n2))), 2), mul_real(n2, n3)), 1),
        xa1(mul_real(n2, n3)),
    ])
    x1e1 = xa1(one)
    f_s2 = add(scale(_times_x0(x1e1, 3), Fraction(2, 3)), scale(_times_x0(mul_real(x1e1, n3), 1), -2))
    f_s3 = add(scale(_times_x0(x1e1, 3), Fraction(2, 3)), scale(_times_x0(mul_real(x1e1, n2), 1), -2))
    dbar = add(scale(_times_x0(x1e1, 3), Fraction(-8, 3)), scale(_times_x0(mul_real(x1e1, add(n2, n3)), 1), 4))

    def g(other_x, other_n):
        return sum_polys(b, [
            scale(variable(b, 0, 3), Fraction(-4, 3)),
            scale(_times_x0(x1e1, 2), -4),
            scale(_times_x0(add(scale(xa1(other_x), 2), other_n), 1), 4),
            scale(mul_real(x1e1, other_n), 4),
        ])

    monogenic = add(variable(b, 0), x1e1)
    return {
        "f": f, "f_s2": f_s2, "f_s3": f_s3, "dbar": dbar,
        "g2": g(x3, n3), "g3": g(x2, n2),
        "lap_g": scale(monogenic, 16), "lap2_f": scale(monogenic, 32),
    }


R6_PARTITION = "{1}|{2,3,4}|{5,6,7}"
OCTONION_PARTITION = "{1,2,3}|{4}|{5,6,7}"

OCTONION_T1 = ("-4/3*x0^3 + 4*x0*x5^2 + 4*x0*x6^2 + 4*x0*x7^2 - 8*x0*x4*x5*i - 8*x0*x4*x6*j"
               " - 8*x0*x4*x7*k + 4*x4*x5^2*l + 4*x4*x6^2*l + 4*x4*x7^2*l - 4*x0^2*x4*l")
OCTONION_T3 = ("-4/3*x0^3 + 4*x0*x1^2 + 4*x0*x2^2 + 4*x0*x3^2 + 8*x0*x4*x1*li + 8*x0*x4*x2*lj"
               " + 8*x0*x4*x3*lk + 4*x4*x1^2*l + 4*x4*x2^2*l + 4*x4*x3^2*l - 4*x0^2*x4*l")

TABLE_ROWS = {1: (1, 1, 1), 2: (2, 1, 2), 3: (3, 2, 5), 4: (5, 2, 15), 5: (7, 3, 52), 7: (15, 5, 877)}


# Reference suite

@check("reference", "P_(1,2,2) reproduction in clifford(6)")
def check_r6_ck():
    b = r6_basis()
    P = parse_partition(R6_PARTITION)
    expected = r6_expected()
    f = basis_polynomial(b, P, (1, 2, 2))
    require_equal(f, expected["f"], "CK[x_A1 x_A2^2 x_A3^2] equals the explicit P_(1,2,2)")
    if not is_member_FP(f, P):
        raise VerificationFailed("P_(1,2,2) lies in F_P")


@check("reference", "Fueter chain of P_(1,2,2)")
def check_r6_chain():
    b = r6_basis()
    P = parse_partition(R6_PARTITION)
    e = r6_expected()
    f = e["f"]
    require_equal(spherical_derivative(f, P.block(2)), e["f_s2"], "f'_{s,A2}")
    require_equal(spherical_derivative(f, P.block(3)), e["f_s3"], "f'_{s,A3}")
    require_equal(cauchy_riemann(f), e["dbar"], "dbar_M f")
    g2 = tau(f, P, 2)
    g3 = tau(f, P, 3)
    require_equal(g2, negate(delta2(f, 2)), "g2 = -delta2_2 f")
    require_equal(g3, negate(delta2(f, 5)), "g3 = -delta2_5 f")
    require_equal(g2, e["g2"], "g2 explicit")
    require_equal(g3, e["g3"], "g3 explicit")
    parts = laplacian_decomposition(f, P)
    require_equal(sum_polys(b, (g for _, g in parts)), add(g2, g3), "Delta f = g2 + g3")
    require_equal(laplacian(g2), e["lap_g"], "Delta g2 = 16(x0 + x1 e1)")
    require_equal(laplacian(g3), e["lap_g"], "Delta g3 = 16(x0 + x1 e1)")
    lap2 = laplacian(f, 2)
    require_equal(lap2, e["lap2_f"], "Delta^2 f = 32(x0 + x1 e1)")
    require_zero(cauchy_riemann(lap2), "dbar_M Delta^2 f = 0")
    require_zero(laplacian(f, 3), "Delta^3 f = 0")


@check("reference", "x^4 on R^5 in clifford(4)")
def check_clifford_x4():
    b = default_basis(clifford(4))
    x4 = power_x(b, 4)
    lap = laplacian(x4)
    n = norm_sq(b, range(1, 5))
    expected = scale(add(add(scale(variable(b, 0, 2), 3), negate(n)), scale(_times_x0(imaginary(b, range(1, 5)), 1), 2)), -12)
    require_equal(lap, expected, "Delta_M(x^4) = -12(3x0^2 - |Im x|^2 + 2 x0 Im x)")
    Pp = parse_partition("{1}|{2}|{3,4}")
    require_zero(dunkl_laplacian(lap, Pp, canonical_multiplicities(Pp)), "Delta_D Delta_M(x^4) = 0")
    require_equal(laplacian(x4, 2), constant(b, 24), "Delta_M^2(x^4) = 24")
    report = even_case_descent(x4)
    if not report.passed:
        raise VerificationFailed("Delta(x^4) lies in F_{1|2|34}")


@check("reference", "x^3 on the octonions")
def check_octonion_x3():
    b = octonion_basis()
    lap = laplacian(power_x(b, 3))
    expected = scale(add(scale(variable(b, 0), 3), imaginary(b, range(1, 8))), -12)
    require_equal(lap, expected, "Delta_8(x^3) = -12(3x0 + Im x)")
    P = parse_partition("{1}|{2}|{3,4,5,6,7}")
    require_zero(dunkl_CR(lap, P, canonical_multiplicities(P)), "D_P Delta_8(x^3) = 0")
    if not is_member_FP(lap, P):
        raise VerificationFailed("Delta_8(x^3) lies in F_{1|2|34567}")
    require_zero(laplacian(power_x(b, 3), 3), "Delta^3(x^3) = 0")


@check("reference", "octonionic P_(2,1,2) chain")
def check_octonion_chain():
    b = octonion_basis()
    P = parse_partition(OCTONION_PARTITION)
    f = basis_polynomial(b, P, (2, 1, 2))
    if not is_member_FP(f, P):
        raise VerificationFailed("P_(2,1,2) lies in F_P")
    t1, t2, t3 = tau(f, P, 1), tau(f, P, 2), tau(f, P, 3)
    require_equal(t1, parse_polynomial(b, OCTONION_T1), "T1 f explicit")
    require_equal(t3, parse_polynomial(b, OCTONION_T3), "T3 f explicit")
    require_zero(t2, "T2 = 0")
    require_equal(laplacian(f), add(t1, t3), "Delta f = T1 f + T3 f")
    expected = scale(add(variable(b, 0), left_mul_imaginary((4,), constant(b, 1))), 32)
    require_equal(laplacian(f, 2), expected, "Delta^2 f = 32(x0 + x4 l)")


@check("reference", "partition counts")
def check_counts():
    for n, row in TABLE_ROWS.items():
        got = (partition_count(n), odd_partition_count(n), bell(n))
        if got != row:
            raise VerificationFailed(f"(p, q, B)({n}) = {row}, got {got}")
    for n, trees in ((1, 0), (3, 1), (7, 4)):
        if count_fueter_trees(n) != trees:
            raise VerificationFailed(f"{trees} Fueter trees for n = {n}")


@check("reference", "F_P dimensions over clifford(3)")
def check_dimensions():
    b = default_basis(clifford(3))
    for sizes in integer_partitions(3):
        P = partition_from_shape(sizes)
        for d in range(4):
            family = homogeneous_FP_basis(b, P, d)
            if len(family) != expected_dimension(P, d, 8):
                raise VerificationFailed(f"dim F_P in degree {d} for {P}")


@check("reference", "Fueter trees")
def check_trees():
    quaternion = build_fueter_tree(whole(3))
    if quaternion.graph.number_of_nodes() != 2 or quaternion.height != 1:
        raise VerificationFailed("quaternionic tree is a single edge")
    chain = build_fueter_tree(whole(7))
    if chain.height != 3 or any(chain.graph.out_degree(v) > 1 for v in chain.graph):
        raise VerificationFailed("unary tree of height 3 for {1..7}")
    binary = build_fueter_tree(parse_partition(OCTONION_PARTITION))
    if binary.height != 2 or binary.graph.out_degree(binary.root_key) != 2:
        raise VerificationFailed("binary tree of height 2 for {1,2,3}|{4}|{5,6,7}")
    if export_dot(binary) != export_dot(build_fueter_tree(parse_partition(OCTONION_PARTITION))):
        raise VerificationFailed("deterministic DOT output")


@check("reference", "distinct spaces for n = 3")
def check_distinct():
    b = default_basis(clifford(3))
    for P, Q in combinations(enumerate_set_partitions(3), 2):
        if separating_witness(b, P, Q) is None:
            raise VerificationFailed(f"F_{P} and F_{Q} are distinct")


# Properties suite

def random_polynomial(basis: HypercomplexBasis, rng: np.random.Generator,
                      max_degree: int = 4, max_terms: int = 4, x0: bool = True) -> Polynomial:
    """Sparse random polynomial with small rational coefficients."""
    dim = basis.spec.dimension
    parts = []
    for _ in range(int(rng.integers(1, max_terms + 1))):
        exps = [0] * (basis.n + 1)
        for _ in range(int(rng.integers(0, max_degree + 1))):
            exps[int(rng.integers(0 if x0 else 1, basis.n + 1))] += 1
        coords = [0] * dim
        for _ in range(int(rng.integers(1, 3))):
            coords[int(rng.integers(0, dim))] = Fraction(int(rng.integers(-5, 6)), int(rng.integers(1, 4)))
        parts.append(mul_real(constant(basis, from_coords(basis.spec, coords)),
                              monomial(basis, exps)))
    return sum_polys(basis, parts)


def property_bases() -> List[HypercomplexBasis]:
    return [default_basis(clifford(3)), quaternion_basis(), octonion_basis()]


def check_operator_identities(f: Polynomial) -> None:
    """Operator identities that hold for every polynomial."""
    n = f.n
    all_idx = list(range(1, n + 1))
    k = block_multiplicities(all_idx, n)
    S = lambda g: casimir_S(g, all_idx, k)
    D = lambda g: dunkl_dirac(g, k)
    X = lambda g: left_mul_imaginary(all_idx, g)
    G = lambda g: spherical_dunkl_dirac(g, k)
    r = lambda g: reflect_set(g, all_idx)
    E = lambda g: euler(g, all_idx)
    require_zero(add(S(D(f)), D(S(f))), "{S, D} = 0")
    require_zero(add(S(X(f)), X(S(f))), "{S, x} = 0")
    require_equal(G(D(f)), D(G(f)), "[G, D] = 0")
    require_equal(G(X(f)), X(G(f)), "[G, x] = 0")
    require_zero(add(D(r(f)), r(D(f))), "{D, r} = 0")
    require_equal(S(r(f)), r(S(f)), "[S, r] = 0")
    require_zero(add(X(r(f)), r(X(f))), "{x, r} = 0")
    require_equal(E(r(f)), r(E(f)), "[E, r] = 0")
    require_equal(S(f), casimir_S_commutator(f, all_idx, k), "S = 1/2([x, D] - 1)")
    lap = laplacian(f)
    require_equal(conj_cauchy_riemann(cauchy_riemann(f)), lap, "Delta = d dbar")
    require_equal(cauchy_riemann(conj_cauchy_riemann(f)), lap, "Delta = dbar d")
    for i in all_idx:
        require_equal(mul_real(delta2(f, i), variable(f.basis, i)),
                      add(delta1(f, i), scale(derivative(f, i), -2)), "x_i delta2 = delta1 - 2 d_i")
        require_zero(sum_polys(f.basis, [delta2(delta1(f, i), i), derivative(delta2(f, i), i),
                                         negate(delta2(derivative(f, i), i))]),
                     "delta2 delta1 + [d_i, delta2] = 0")
    require_zero(sum_polys(f.basis, [X(dunkl_dirac(f, zero_multiplicities(n))), E(f), spherical_dirac(f)]),
                 "x (sum v_i d_i f) + E f + Gamma f = 0")


def check_partition_identities(f: Polynomial, P: SetPartition) -> None:
    for k in (canonical_multiplicities(P), uniform_multiplicities(P)):
        lap = dunkl_laplacian(f, P, k)
        require_equal(dunkl_CR(conj_dunkl_CR(f, P, k), P, k), lap, "Delta_D = D_P D^c_P")
        require_equal(conj_dunkl_CR(dunkl_CR(f, P, k), P, k), lap, "Delta_D = D^c_P D_P")
        require_equal(dunkl_laplacian_classical(f, P, k), lap, "Delta_D in divided form")


def check_slice_derivatives(f: Polynomial, P: SetPartition) -> None:
    """f = f_s + x_A f'_s on every block, and the dbar / D_P formulas for f and x0 f."""
    b = f.basis
    k = canonical_multiplicities(P)
    derivs = [spherical_derivative(f, A) for A in P.blocks]
    for A, fs in zip(P.blocks, derivs):
        require_equal(add(spherical_value(f, A), left_mul_imaginary(A, fs)), f, "f = f_s + x_A f'_s")
    require_equal(cauchy_riemann(f),
                  sum_polys(b, (scale(fs, 1 - len(A)) for A, fs in zip(P.blocks, derivs))),
                  "dbar_M f = sum (1 - |A_j|) f'_{s,A_j}")
    g = mul_real(f, variable(b, 0))
    g_derivs = [spherical_derivative(g, A) for A in P.blocks]
    require_equal(dunkl_CR(g, P, k),
                  add(cauchy_riemann(g), sum_polys(b, (scale(gs, len(A) - 1) for A, gs in zip(P.blocks, g_derivs)))),
                  "D_P g = dbar_M g + sum (|A_j| - 1) g'_{s,A_j}")


def check_slice_laplacian(f: Polynomial, P: SetPartition) -> None:
    """Delta_D on the P-slice function x0 f, and closure of P-slice under dbar, d and Delta."""
    b = f.basis
    k = canonical_multiplicities(P)
    g = mul_real(f, variable(b, 0))
    require_equal(dunkl_laplacian(g, P, k),
                  add(laplacian(g), sum_polys(b, (scale(delta2(g, A[-1]), Fraction(len(A) - 1, 2)) for A in P.blocks))),
                  "Delta_D g = Delta_M g + sum (|A_j| - 1)/2 delta2_alpha g")
    for name, h in (("dbar", cauchy_riemann(g)), ("d", conj_cauchy_riemann(g)), ("Delta", laplacian(g))):
        if not is_P_slice(h, P):
            raise VerificationFailed(f"{name} g is P-slice", next(iter(h.terms), None))


def check_ck_round_trip(f: Polynomial, P: SetPartition) -> None:
    k = canonical_multiplicities(P)
    require_equal(ck_extension(restrict_x0(f), P, k), f, "CK[f(x0 = 0)] = f")
    verify_taylor(f, P, k)


def appell_and_powers(basis: HypercomplexBasis, P: SetPartition, max_power: int = 4) -> None:
    """P_(m e_j) = (x0 + x_A)^m, the Appell property and the power law for D_A on every block."""
    modes = (canonical_multiplicities(P), uniform_multiplicities(P))
    for j, A in enumerate(P.blocks, start=1):
        powers = [constant(basis, 1)]
        for m in range(1, max_power + 1):
            powers.append(add(mul_real(powers[-1], variable(basis, 0)), left_mul_imaginary(A, powers[-1])))
            d = [0] * P.length
            d[j - 1] = m
            require_equal(basis_polynomial(basis, P, d), powers[m], f"P_({m} e_{j}) = (x0 + x_A)^{m}")
        for k in modes:
            for m in range(1, max_power + 1):
                require_equal(scale(conj_dunkl_CR(powers[m], P, k), Fraction(1, 2)), scale(powers[m - 1], m),
                              "Appell property")
            for m in range(max_power + 1):
                g = pow_imaginary(basis, A, m)
                for s in range(m + 1):
                    expected = scale(pow_imaginary(basis, A, m - s), (-1) ** s * factorial(m) // factorial(m - s))
                    require_equal(g, expected, f"D_A^{s}(x_A^{m})")
                    g = dirac_A(g, A, k)


def appell_partitions(n: int) -> List[SetPartition]:
    """Every partition for n <= 3; otherwise whole(n), a mixed partition and the singletons."""
    if n <= 3:
        return enumerate_set_partitions(n)
    mixed = partition_from_shape((n - 2, 1, 1))
    return [whole(n), mixed, all_singletons(n)]


@check("properties", "operator identities on random polynomials")
def check_random_operators():
    cases = property_cases()
    for basis in property_bases():
        rng = np.random.default_rng(RANDOM_SEED)
        partitions = enumerate_set_partitions(basis.n)
        for _ in range(cases):
            f = random_polynomial(basis, rng)
            check_operator_identities(f)
            check_partition_identities(f, partitions[int(rng.integers(0, len(partitions)))])


def _for_random_members(identities: Callable[[Polynomial, SetPartition], None], seed: int) -> None:
    """Run identities on property_cases() seeded members of F_P, spread over the property bases."""
    bases = property_bases()
    per_basis = -(-property_cases() // len(bases))
    for basis in bases:
        rng = np.random.default_rng(seed)
        partitions = enumerate_set_partitions(basis.n)
        for case in range(per_basis):
            P = partitions[int(rng.integers(0, len(partitions)))]
            identities(random_FP_element(basis, P, 3, seed + case), P)


@check("properties", "spherical derivatives and D_P on random F_P members")
def check_random_slice_derivatives():
    _for_random_members(check_slice_derivatives, RANDOM_SEED + 1)


@check("properties", "Dunkl Laplacian on random P-slice functions")
def check_random_slice_laplacian():
    _for_random_members(check_slice_laplacian, RANDOM_SEED + 2)


@check("properties", "CK round trip and Taylor expansion")
def check_random_ck_round_trip():
    _for_random_members(check_ck_round_trip, RANDOM_SEED + 3)


@check("properties", "Appell property and powers of x_A")
def check_appell():
    for basis in property_bases():
        for P in appell_partitions(basis.n):
            appell_and_powers(basis, P)


@check("properties", "general Fueter theorem on random members")
def check_random_fueter():
    cases = max(1, property_cases() // 10)
    settings = {3: quaternion_basis(), 5: octonion_basis(5), 7: octonion_basis(7)}
    for n, basis in settings.items():
        for sizes in odd_integer_partitions(n):
            P = partition_from_shape(sizes)
            if P.length == n:
                continue
            tree = build_fueter_tree(P)
            for case in range(cases):
                f = random_FP_element(basis, P, 5, RANDOM_SEED + case)
                for report in (verify_general_fueter(f, P), verify_polyharmonic(f, P), verify_fueter_tree(tree, f)):
                    if not report.passed:
                        failed = next(name for name, ok in report.checks if not ok)
                        raise VerificationFailed(failed)
                for j, A in enumerate(P.blocks, start=1):
                    if len(A) > 2:
                        for pair in combinations(A, 2):
                            tau(f, P, j, alpha=A[-1], pair=pair)


@check("properties", "multiplicity independence and admissibility")
def check_multiplicity_independence():
    b = default_basis(clifford(3))
    for P in enumerate_set_partitions(3):
        canonical, uniform = canonical_multiplicities(P), uniform_multiplicities(P)
        for d in range(5):
            for f in homogeneous_FP_basis(b, P, d, verify=False):
                if is_member_FP(f, P, canonical) != is_member_FP(f, P, uniform):
                    raise VerificationFailed(f"membership in F_{P} independent of multiplicities")
                is_P_slice(f, P, strict=True)


@check("properties", "distinct spaces for n = 4")
def check_distinct_four():
    b = default_basis(clifford(4))
    for P, Q in combinations(enumerate_set_partitions(4), 2):
        if separating_witness(b, P, Q) is None:
            raise VerificationFailed(f"F_{P} and F_{Q} are distinct")


def run_suite(suite: str = "reference", only: Optional[str] = None) -> List[CheckResult]:
    """
    Run a named suite and time each check.

    Args:
        suite: "reference", "properties" or "all"
        only: Substring filter on check names

    Returns:
        One CheckResult per executed check
    """
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}; choose from {SUITES}")
    names = ["reference", "properties"] if suite == "all" else [suite]
    results = []
    for name in names:
        for title, fn in _REGISTRY[name]:
            if only and only not in title:
                continue
            t0 = time.perf_counter()
            try:
                fn()
                passed, message = True, ""
            except VerificationFailed as e:
                passed, message = False, str(e)
            except FueterError as e:
                passed, message = False, f"{type(e).__name__}: {e}"
            elapsed = (time.perf_counter() - t0) * 1000
            logger.info("%s [%s] %.1f ms", title, "ok" if passed else "FAIL", elapsed)
            results.append(CheckResult(title, name, passed, elapsed, message))
    return results
