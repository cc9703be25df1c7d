"""
Membership tests for P-slice, Dunkl-monogenic and P-Dunkl-regular polynomials,
the CK extension, and bases of the homogeneous parts of F_P.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import Iterator, List, Optional, Sequence, Tuple

import numpy as np
from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from algebra import HypercomplexBasis, basis_element
from config import RANDOM_SETTINGS
from errors import (InputDependsOnX0, InputNotPSlice, NotDivisible,
                    NotInKernelSA, VerificationFailed)
from operators import dunkl_CR, dunkl_dirac, slice_images
from partitions import (MultiplicitySeq, SetPartition, canonical_multiplicities,
                        uniform_multiplicities)
from poly import (Polynomial, a_degree_components, constant, degree, derivative,
                  depends_on, divide_exact_real, left_mul_imaginary, mul_real,
                  negate, norm_sq, real_power, require_equal, restrict_x0,
                  scale, sum_polys, variable, zero)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SliceCheck:
    """Verdict of a P-slice test; on failure the first nonzero image."""
    verdict: bool
    block: Optional[int] = None
    operator: Optional[str] = None
    witness: Optional[Polynomial] = None

    def __bool__(self) -> bool:
        return self.verdict

    def describe(self) -> str:
        if self.verdict:
            return "P-slice"
        return f"not P-slice: {self.operator} on block A{self.block} gives {self.witness}"


def _slice_check(f: Polynomial, P: SetPartition, k: MultiplicitySeq) -> SliceCheck:
    for j, block in enumerate(P.blocks, start=1):
        if len(block) == 1:
            continue
        for name, image in slice_images(f, block, k):
            if not image.is_zero():
                return SliceCheck(False, j, name, image)
    return SliceCheck(True)


def is_P_slice(f: Polynomial, P: SetPartition, strict: bool = False) -> SliceCheck:
    """
    Test f against ker S_P with canonical multiplicities.

    Args:
        f: Polynomial to test
        P: Partition of 1..n
        strict: Re-check with uniform multiplicities and require the same verdict

    Returns:
        SliceCheck, truthy when f is P-slice
    """
    check = _slice_check(f, P, canonical_multiplicities(P))
    if strict:
        other = _slice_check(f, P, uniform_multiplicities(P))
        if other.verdict != check.verdict:
            witness = check.witness or other.witness
            raise VerificationFailed("P-slice verdict independent of multiplicities",
                                     next(iter(witness.terms), None))
    return check


def is_dunkl_monogenic(f: Polynomial, P: SetPartition, k: Optional[MultiplicitySeq] = None) -> bool:
    if k is None:
        k = canonical_multiplicities(P)
    return dunkl_CR(f, P, k).is_zero()


def is_member_FP(f: Polynomial, P: SetPartition, k: Optional[MultiplicitySeq] = None) -> bool:
    return is_dunkl_monogenic(f, P, k) and bool(is_P_slice(f, P))


def ck_extension(g: Polynomial, P: SetPartition, k: Optional[MultiplicitySeq] = None,
                 check: bool = True, verify: bool = False) -> Polynomial:
    """
    CK[g] = sum over m of (-x0)^m / m! D^m g.

    Args:
        g: Initial datum, independent of x0 and P-slice
        P: Partition of 1..n
        k: Admissible multiplicities (canonical by default)
        check: Validate the input preconditions
        verify: Assert membership in F_P and the restriction to x0 = 0

    Raises:
        InputDependsOnX0: g involves x0
        InputNotPSlice: g is not P-slice
    """
    if k is None:
        k = canonical_multiplicities(P)
    if check:
        if depends_on(g, 0):
            raise InputDependsOnX0("CK extension needs initial data independent of x0")
        result = is_P_slice(g, P)
        if not result:
            raise InputNotPSlice(f"CK extension needs P-slice data: {result.describe()}")
    bound = degree(g) + 1
    parts = []
    term = g
    m = 0
    while not term.is_zero():
        if m > bound:
            raise VerificationFailed("D_P lowers degree in the CK iteration")
        c = Fraction((-1) ** m, factorial(m))
        parts.append(scale(mul_real(term, variable(g.basis, 0, m)), c))
        term = dunkl_dirac(term, k)
        m += 1
    logger.debug("CK extension finished after %d iterations", m)
    f = sum_polys(g.basis, parts)
    if verify:
        require_equal(restrict_x0(f), g, "CK[g] restricted to x0 = 0 equals g")
        if not is_member_FP(f, P, k):
            raise VerificationFailed("CK[g] lies in F_P")
    return f


def ordered_imaginary_product(basis: HypercomplexBasis, P: SetPartition, d: Sequence[int], a) -> Polynomial:
    """[x_P^d, a] = x_{A1}^{d1}(...(x_{Al}^{dl} a)...)."""
    if len(d) != P.length:
        raise ValueError(f"exponent vector {tuple(d)} does not match {P.length} blocks")
    g = constant(basis, a)
    for block, e in reversed(list(zip(P.blocks, d))):
        if e // 2:
            g = mul_real(g, real_power(negate(norm_sq(basis, block)), e // 2))
        if e % 2:
            g = left_mul_imaginary(block, g)
    return g


@lru_cache(maxsize=4096)
def _basis_polynomial(basis: HypercomplexBasis, P: SetPartition, d: Tuple[int, ...], q: int) -> Polynomial:
    g = ordered_imaginary_product(basis, P, d, basis_element(basis.spec, q))
    return ck_extension(g, P, check=False)


def basis_polynomial(basis: HypercomplexBasis, P: SetPartition, d: Sequence[int], a=None) -> Polynomial:
    """P_{d,a} = CK[[x_P^d, a]]; a defaults to 1."""
    if a is None:
        return _basis_polynomial(basis, P, tuple(d), 0)
    g = ordered_imaginary_product(basis, P, d, a)
    return ck_extension(g, P, check=False)


def compositions(total: int, parts: int) -> Iterator[Tuple[int, ...]]:
    """Exponent vectors of the given length summing to total, lexicographically decreasing."""
    if parts == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in compositions(total - first, parts - 1):
            yield (first,) + rest


def expected_dimension(P: SetPartition, d: int, algebra_dimension: int) -> int:
    return comb(P.length + d - 1, d) * algebra_dimension


def basis_rank(polys: Sequence[Polynomial]) -> int:
    """Rank over QQ of the coefficient matrix (monomial x algebra coordinate)."""
    columns = {}
    rows = {}
    for r, f in enumerate(polys):
        row = {}
        for m, a in f.terms.items():
            for q, c in enumerate(a.coords):
                if c:
                    col = columns.setdefault((m, q), len(columns))
                    row[col] = QQ(c.numerator, c.denominator)
        if row:
            rows[r] = row
    if not rows:
        return 0
    matrix = DomainMatrix(rows, (len(polys), len(columns)), QQ)
    return matrix.rank()


def homogeneous_FP_basis(basis: HypercomplexBasis, P: SetPartition, d: int,
                         verify: bool = True) -> List[Polynomial]:
    """
    {P_{d,a} : |d| = d, a in the algebra basis}, ordered by d then a.

    With verify, every member is tested in F_P and the family is checked to be
    linearly independent with the expected dimension.
    """
    dim = basis.spec.dimension
    family = [_basis_polynomial(basis, P, dv, q) for dv in compositions(d, P.length) for q in range(dim)]
    logger.info("generated %d basis polynomials for %s in degree %d", len(family), P, d)
    if verify:
        k = canonical_multiplicities(P)
        for f in family:
            if not is_member_FP(f, P, k):
                raise VerificationFailed(f"basis polynomial lies in F_{P}", next(iter(f.terms), None))
        rank = basis_rank(family)
        expected = expected_dimension(P, d, dim)
        logger.info("rank %d, expected %d", rank, expected)
        if rank != expected:
            raise VerificationFailed(f"homogeneous F_P basis has rank {expected}, got {rank}")
    return family


def slice_decompose(f: Polynomial, A: Sequence[int]) -> List[Polynomial]:
    """
    Write f = sum over i of x_A^i g_i with every g_i free of the variables in A.

    Raises:
        InputDependsOnX0: f involves x0
        NotInKernelSA: no such decomposition exists
    """
    A = sorted(A)
    if depends_on(f, 0):
        raise InputDependsOnX0("slice decomposition needs input independent of x0")
    if f.is_zero():
        return [f]
    minus_q = negate(norm_sq(f.basis, A))
    parts = a_degree_components(f, A)
    out = [zero(f.basis)] * (max(parts) + 1)
    for i, fi in parts.items():
        numerator = fi if i % 2 == 0 else left_mul_imaginary(A, fi)
        try:
            g = divide_exact_real(numerator, real_power(minus_q, (i + 1) // 2))
        except NotDivisible as e:
            raise NotInKernelSA(f"A-degree {i} part is not x_A^{i} times an A-free coefficient "
                                f"(remainder at {e.monomial})") from None
        if any(depends_on(g, j) for j in A):
            raise NotInKernelSA(f"A-degree {i} coefficient still depends on the variables in A")
        out[i] = g
    rebuilt = sum_polys(f.basis, (_imaginary_power_times(A, i, g) for i, g in enumerate(out)))
    if rebuilt != f:
        raise NotInKernelSA("slice decomposition does not reproduce the input")
    return out


def _imaginary_power_times(A: Sequence[int], i: int, g: Polynomial) -> Polynomial:
    if g.is_zero():
        return g
    h = mul_real(g, real_power(negate(norm_sq(g.basis, A)), i // 2))
    return left_mul_imaginary(A, h) if i % 2 else h


def random_FP_element(basis: HypercomplexBasis, P: SetPartition, d: int, seed: int,
                      max_terms: Optional[int] = None) -> Polynomial:
    """Random rational combination of basis polynomials of degree <= d (seeded)."""
    rng = np.random.default_rng(seed)
    if max_terms is None:
        max_terms = RANDOM_SETTINGS['max_terms']
    dim = basis.spec.dimension
    parts = []
    for _ in range(int(rng.integers(1, max_terms + 1))):
        deg = int(rng.integers(0, d + 1))
        choices = list(compositions(deg, P.length))
        dv = choices[int(rng.integers(0, len(choices)))]
        q = int(rng.integers(0, dim))
        num = int(rng.integers(-RANDOM_SETTINGS['max_numerator'], RANDOM_SETTINGS['max_numerator'] + 1))
        den = int(rng.integers(1, RANDOM_SETTINGS['max_denominator'] + 1))
        parts.append(scale(_basis_polynomial(basis, P, dv, q), Fraction(num, den)))
    return sum_polys(basis, parts)


def taylor_coefficients(f: Polynomial, P: SetPartition, k: Optional[MultiplicitySeq] = None) -> List[Polynomial]:
    """d0^m f at x0 = 0 for m = 0..deg f, computed as (-1)^m D^m f(x)."""
    if k is None:
        k = canonical_multiplicities(P)
    coeffs = []
    term = restrict_x0(f)
    for m in range(degree(f) + 1):
        coeffs.append(term if m % 2 == 0 else negate(term))
        term = dunkl_dirac(term, k)
    return coeffs


def verify_taylor(f: Polynomial, P: SetPartition, k: Optional[MultiplicitySeq] = None) -> None:
    """f = sum x0^m/m! d0^m f(x), with the derivatives matched against the Dunkl-Dirac powers."""
    coeffs = taylor_coefficients(f, P, k)
    g = f
    for m, c in enumerate(coeffs):
        require_equal(restrict_x0(g), c, f"d0^{m} f at x0 = 0 equals (-1)^{m} D^{m} f(x)")
        g = derivative(g, 0)
    rebuilt = sum_polys(f.basis, (scale(mul_real(c, variable(f.basis, 0, m)), Fraction(1, factorial(m)))
                                  for m, c in enumerate(coeffs)))
    require_equal(rebuilt, f, "Taylor expansion in x0")


@dataclass(frozen=True)
class Witness:
    """A polynomial in F_member that is not in F_other."""
    member: SetPartition
    other: SetPartition
    polynomial: Polynomial


def separating_witness(basis: HypercomplexBasis, P: SetPartition, Q: SetPartition,
                       max_degree: int = 3) -> Optional[Witness]:
    """Search the homogeneous bases of both spaces for a separating member."""
    for d in range(max_degree + 1):
        for member, other in ((P, Q), (Q, P)):
            for f in homogeneous_FP_basis(basis, member, d, verify=False):
                if not is_member_FP(f, other):
                    logger.debug("separating %s from %s at degree %d", member, other, d)
                    return Witness(member, other, f)
    return None
