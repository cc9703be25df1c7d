"""
Differential and differential-difference operators on polynomials.

Multiplicities are 1-based (k.k(i) is the weight of x_i). Every unit
multiplication is an explicit left action v_i(...) on the coefficient, so the
operators stay literal over non-associative algebras.
"""
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Iterator, List, Optional, Sequence, Tuple

from algebra import HypercomplexBasis
from config import OPERATOR_ALIASES
from errors import NotASliceInput, SpecMismatch
from partitions import (MultiplicitySeq, SetPartition, check_admissible,
                        multiplicities_for)
from poly import (Accumulator, Monomial, Polynomial, _accumulate, _build, add,
                  derivative, divide_exact_real, euler, left_mul_imaginary,
                  left_mul_unit, mul_real, negate, reflect, reflect_set, scale,
                  sum_polys, variable)

logger = logging.getLogger(__name__)

HALF = Fraction(1, 2)

TermMap = Callable[[Monomial, Tuple[Fraction, ...]], Iterator[Tuple[Monomial, Fraction, Sequence[Fraction]]]]


def _map_terms(f: Polynomial, fn: TermMap) -> Polynomial:
    dim = f.spec.dimension
    acc: Accumulator = {}
    for m, a in f.terms.items():
        for m2, c, coords in fn(m, a.coords):
            if c:
                _accumulate(acc, dim, m2, coords, c)
    return _build(f.basis, acc)


def _lower(m: Monomial, i: int, by: int = 1) -> Monomial:
    out = list(m)
    out[i] -= by
    return tuple(out)


def _all_indices(f: Polynomial) -> List[int]:
    return list(range(1, f.n + 1))


def zero_multiplicities(n: int) -> MultiplicitySeq:
    return MultiplicitySeq((Fraction(0),) * n)


def block_multiplicities(A: Iterable[int], n: int) -> MultiplicitySeq:
    """Canonical weights on A (0 at min A, -1/2 elsewhere), zero off A."""
    A = sorted(A)
    values = [Fraction(0)] * n
    for i in A[1:]:
        values[i - 1] = -HALF
    return MultiplicitySeq(tuple(values))


# Classical operators

def _weighted_dirac(f: Polynomial, A: Iterable[int], k: Optional[MultiplicitySeq]) -> Polynomial:
    """sum over i in A of v_i (d_i + k_i delta1_i) f, in one pass over the terms."""
    basis = f.basis
    A = sorted(A)

    def fn(m, coords):
        for i in A:
            e = m[i]
            if not e:
                continue
            c = Fraction(e)
            if k is not None and e % 2:
                c += 2 * k.k(i)
            yield _lower(m, i), c, basis.apply_unit(i, coords)

    return _map_terms(f, fn)


def cauchy_riemann(f: Polynomial) -> Polynomial:
    """d_0 f + sum v_i d_i f."""
    return add(derivative(f, 0), _weighted_dirac(f, _all_indices(f), None))


def conj_cauchy_riemann(f: Polynomial) -> Polynomial:
    return add(derivative(f, 0), negate(_weighted_dirac(f, _all_indices(f), None)))


def laplacian(f: Polynomial, power: int = 1) -> Polynomial:
    for _ in range(power):
        def fn(m, coords):
            for i, e in enumerate(m):
                if e >= 2:
                    yield _lower(m, i, 2), Fraction(e * (e - 1)), coords
        f = _map_terms(f, fn)
    return f


# Dunkl calculus

def delta1(f: Polynomial, i: int) -> Polynomial:
    """(f - r_i f) / x_i via the odd part in x_i."""
    def fn(m, coords):
        if m[i] % 2:
            yield _lower(m, i), Fraction(2), coords
    return _map_terms(f, fn)


def delta2(f: Polynomial, i: int) -> Polynomial:
    """((f - r_i f) - 2 x_i d_i f) / x_i^2."""
    def fn(m, coords):
        e = m[i]
        if e >= 2:
            yield _lower(m, i, 2), Fraction(2 * (e % 2) - 2 * e), coords
    return _map_terms(f, fn)


def dunkl_T(f: Polynomial, i: int, k: MultiplicitySeq) -> Polynomial:
    return add(derivative(f, i), scale(delta1(f, i), k.k(i)))


def dirac_A(f: Polynomial, A: Iterable[int], k: MultiplicitySeq) -> Polynomial:
    return _weighted_dirac(f, A, k)


def dunkl_dirac(f: Polynomial, k: MultiplicitySeq) -> Polynomial:
    return _weighted_dirac(f, _all_indices(f), k)


def dunkl_CR(f: Polynomial, P: SetPartition, k: MultiplicitySeq) -> Polynomial:
    """D_P = d_0 + sum_j D_{A_j}."""
    check_admissible(P, k)
    return add(derivative(f, 0), dunkl_dirac(f, k))


def conj_dunkl_CR(f: Polynomial, P: SetPartition, k: MultiplicitySeq) -> Polynomial:
    check_admissible(P, k)
    return add(derivative(f, 0), negate(dunkl_dirac(f, k)))


def dunkl_laplacian(f: Polynomial, P: SetPartition, k: MultiplicitySeq) -> Polynomial:
    """Delta_M f - sum k_i delta2_i f."""
    check_admissible(P, k)
    parts = [laplacian(f)]
    for i in range(1, P.n + 1):
        if k.k(i):
            parts.append(scale(delta2(f, i), -k.k(i)))
    return sum_polys(f.basis, parts)


def dunkl_laplacian_classical(f: Polynomial, P: SetPartition, k: MultiplicitySeq) -> Polynomial:
    """Delta_M + sum k_i (2/x_i d_i - (1 - r_i)/x_i^2), each quotient divided out exactly."""
    check_admissible(P, k)
    parts = [laplacian(f)]
    for i in range(1, P.n + 1):
        if not k.k(i):
            continue
        xi = variable(f.basis, i)
        numerator = add(scale(mul_real(derivative(f, i), xi), 2), negate(add(f, negate(reflect(f, i)))))
        parts.append(scale(divide_exact_real(numerator, variable(f.basis, i, 2)), k.k(i)))
    return sum_polys(f.basis, parts)


# Casimir and spherical operators

def casimir_S(f: Polynomial, A: Iterable[int], k: MultiplicitySeq) -> Polynomial:
    """S_A = x_A D_A + E_A, valid when k is admissible on A."""
    A = sorted(A)
    return add(left_mul_imaginary(A, dirac_A(f, A, k)), euler(f, A))


def casimir_S_commutator(f: Polynomial, A: Iterable[int], k: MultiplicitySeq) -> Polynomial:
    """1/2 (x_A D_A f - D_A (x_A f) - f)."""
    A = sorted(A)
    first = left_mul_imaginary(A, dirac_A(f, A, k))
    second = dirac_A(left_mul_imaginary(A, f), A, k)
    return scale(add(add(first, negate(second)), negate(f)), HALF)


def S_tilde(f: Polynomial, A: Iterable[int], k: MultiplicitySeq) -> Polynomial:
    """sum over i in A of x_i T_i f - E_A f = sum k_i (f - r_i f)."""
    parts = []
    for i in sorted(A):
        if k.k(i):
            parts.append(scale(add(f, negate(reflect(f, i))), k.k(i)))
    return sum_polys(f.basis, parts)


def S_prime(f: Polynomial, A: Iterable[int], k: MultiplicitySeq) -> Polynomial:
    A = sorted(A)
    return scale(S_tilde(add(f, reflect_set(f, A)), A, k), HALF)


def S_dprime(f: Polynomial, A: Iterable[int], k: MultiplicitySeq) -> Polynomial:
    """S'_A applied to x_A f."""
    A = sorted(A)
    return S_prime(left_mul_imaginary(A, f), A, k)


def slice_images(f: Polynomial, A: Iterable[int], k: MultiplicitySeq) -> List[Tuple[str, Polynomial]]:
    """The three images whose vanishing defines ker S_A."""
    A = sorted(A)
    return [
        ("S_A", casimir_S(f, A, k)),
        ("S'_A", S_prime(f, A, k)),
        ("S''_A", S_dprime(f, A, k)),
    ]


def in_kernel_SA(f: Polynomial, A: Iterable[int], k: Optional[MultiplicitySeq] = None) -> bool:
    A = sorted(A)
    if k is None:
        k = block_multiplicities(A, f.n)
    return all(g.is_zero() for _, g in slice_images(f, A, k))


def angular(f: Polynomial, i: int, j: int) -> Polynomial:
    """L_ij f = x_i d_j f - x_j d_i f."""
    return add(mul_real(derivative(f, j), variable(f.basis, i)),
               negate(mul_real(derivative(f, i), variable(f.basis, j))))


def spherical_dirac(f: Polynomial) -> Polynomial:
    """-sum over i < j of v_i (v_j L_ij f)."""
    parts = []
    n = f.n
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            L = angular(f, i, j)
            if not L.is_zero():
                parts.append(left_mul_unit(left_mul_unit(L, j), i))
    return negate(sum_polys(f.basis, parts))


def spherical_dunkl_dirac(f: Polynomial, k: Optional[MultiplicitySeq] = None) -> Polynomial:
    """S_b r with r = r_1...r_n; k defaults to canonical weights on [n]."""
    A = _all_indices(f)
    if k is None:
        k = block_multiplicities(A, f.n)
    return casimir_S(reflect_set(f, A), A, k)


def spherical_value(f: Polynomial, A: Iterable[int]) -> Polynomial:
    return scale(add(f, reflect_set(f, A)), HALF)


def _derivative_at(f: Polynomial, i: int) -> Polynomial:
    return scale(left_mul_unit(delta1(f, i), i), -HALF)


def spherical_derivative(f: Polynomial, A: Iterable[int], k: Optional[MultiplicitySeq] = None) -> Polynomial:
    """
    A-spherical derivative -1/2 v_i delta1_i f for f in ker S_A.

    Computed at i = min(A) and re-checked at i = max(A).

    Raises:
        NotASliceInput: f is not in ker S_A, or the two choices disagree
    """
    A = sorted(A)
    if not in_kernel_SA(f, A, k):
        raise NotASliceInput(f"input is not in the kernel of S_A for A = {set(A)}")
    first = _derivative_at(f, A[0])
    if len(A) > 1 and _derivative_at(f, A[-1]) != first:
        raise NotASliceInput(f"spherical derivative depends on the index in A = {set(A)}")
    return first


@dataclass(frozen=True)
class OperatorContext:
    """Basis, optional partition and multiplicities bundled for repeated use."""
    basis: HypercomplexBasis
    partition: Optional[SetPartition] = None
    multiplicities: Optional[MultiplicitySeq] = field(default=None)

    def __post_init__(self):
        if self.partition is not None:
            if self.partition.n != self.basis.n:
                raise SpecMismatch(f"partition of 1..{self.partition.n} does not fit n = {self.basis.n}")
            if self.multiplicities is None:
                object.__setattr__(self, 'multiplicities', multiplicities_for(self.partition))
            check_admissible(self.partition, self.multiplicities)
        elif self.multiplicities is not None and len(self.multiplicities.values) != self.basis.n:
            raise SpecMismatch("multiplicity vector length does not match the basis")

    @classmethod
    def build(cls, basis: HypercomplexBasis, partition: Optional[SetPartition] = None,
              mode: str = "canonical", alphas: Optional[Sequence[int]] = None) -> "OperatorContext":
        k = multiplicities_for(partition, mode, alphas) if partition is not None else None
        return cls(basis, partition, k)

    @property
    def n(self) -> int:
        return self.basis.n

    @property
    def k(self) -> MultiplicitySeq:
        return self.multiplicities if self.multiplicities is not None else zero_multiplicities(self.n)

    def _require_partition(self) -> SetPartition:
        if self.partition is None:
            raise SpecMismatch("this operator needs a partition")
        return self.partition

    def block_set(self, block: Optional[int]) -> Tuple[int, ...]:
        if block is None:
            return tuple(range(1, self.n + 1))
        return self._require_partition().block(block)

    def k_for(self, A: Sequence[int]) -> MultiplicitySeq:
        """Context weights when A is a block of the partition, canonical weights on A otherwise."""
        if self.partition is not None and tuple(A) in self.partition.blocks:
            return self.k
        return block_multiplicities(A, self.n)

    def D(self, f: Polynomial) -> Polynomial:
        return dunkl_CR(f, self._require_partition(), self.k)

    def Dc(self, f: Polynomial) -> Polynomial:
        return conj_dunkl_CR(f, self._require_partition(), self.k)

    def apply(self, name: str, f: Polynomial, index: Optional[int] = None,
              block: Optional[int] = None) -> Polynomial:
        """Apply an operator by name or alias."""
        name = OPERATOR_ALIASES.get(name, name)
        if f.basis != self.basis:
            raise SpecMismatch("polynomial basis differs from the context basis")
        logger.debug("applying %s (index=%s, block=%s)", name, index, block)
        if name in ("delta1", "delta2", "dunkl_T"):
            if index is None or not 1 <= index <= self.n:
                raise SpecMismatch(f"{name} needs an index in 1..{self.n}")
            if name == "delta1":
                return delta1(f, index)
            if name == "delta2":
                return delta2(f, index)
            return dunkl_T(f, index, self.k)
        simple = {
            "cauchy_riemann": cauchy_riemann,
            "conj_cauchy_riemann": conj_cauchy_riemann,
            "laplacian": laplacian,
            "spherical_dirac": spherical_dirac,
            "spherical_dunkl_dirac": spherical_dunkl_dirac,
        }
        if name in simple:
            return simple[name](f)
        if name == "dunkl_cr":
            return self.D(f)
        if name == "conj_dunkl_cr":
            return self.Dc(f)
        if name == "dunkl_laplacian":
            return dunkl_laplacian(f, self._require_partition(), self.k)
        if name == "dunkl_laplacian_classical":
            return dunkl_laplacian_classical(f, self._require_partition(), self.k)
        if name == "dunkl_dirac":
            return dunkl_dirac(f, self.k)
        A = self.block_set(block)
        block_ops = {
            "dirac": dirac_A,
            "casimir": casimir_S,
            "casimir_commutator": casimir_S_commutator,
            "S_tilde": S_tilde,
            "S_prime": S_prime,
            "S_dprime": S_dprime,
            "spherical_derivative": spherical_derivative,
        }
        if name in block_ops:
            return block_ops[name](f, A, self.k_for(A))
        if name == "spherical_value":
            return spherical_value(f, A)
        raise SpecMismatch(f"unknown operator {name!r}")


OPERATOR_NAMES = (
    "cauchy_riemann", "conj_cauchy_riemann", "laplacian", "delta1", "delta2", "dunkl_T",
    "dirac", "dunkl_dirac", "dunkl_cr", "conj_dunkl_cr", "dunkl_laplacian",
    "dunkl_laplacian_classical", "casimir", "casimir_commutator", "S_tilde", "S_prime",
    "S_dprime", "spherical_dirac", "spherical_dunkl_dirac", "spherical_value",
    "spherical_derivative",
)
