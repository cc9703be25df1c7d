"""
Sparse polynomials in x0..xn with left algebra coefficients.

A term (m, a) stands for the real monomial x^m times the algebra element a.
Products with algebra elements always act on the coefficient from the left;
there is no general polynomial-by-polynomial product since the coefficient
algebra need not be associative.
"""
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterable, List, Mapping, Sequence, Tuple, Union

from sympy import QQ
from sympy.polys.rings import ring

from algebra import (AlgebraElement, HypercomplexBasis, ZERO, mul_coords, one,
                     real as real_element)
from errors import NotDivisible, SpecMismatch, VerificationFailed
from point import Point

Monomial = Tuple[int, ...]
Rational = Union[int, Fraction]


@dataclass(frozen=True)
class Polynomial:
    basis: HypercomplexBasis
    terms: Mapping[Monomial, AlgebraElement]

    @property
    def n(self) -> int:
        return self.basis.n

    @property
    def spec(self):
        return self.basis.spec

    def is_zero(self) -> bool:
        return not self.terms

    def is_real(self) -> bool:
        return all(a.is_real() for a in self.terms.values())

    def __add__(self, other: "Polynomial") -> "Polynomial":
        return add(self, other)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return add(self, negate(other))

    def __neg__(self) -> "Polynomial":
        return negate(self)

    def __mul__(self, c: Rational) -> "Polynomial":
        return scale(self, c)

    __rmul__ = __mul__

    def __str__(self) -> str:
        from parse_input import format_polynomial
        return format_polynomial(self)


Accumulator = Dict[Monomial, List[Fraction]]


def _accumulate(acc: Accumulator, dim: int, m: Monomial, coords: Sequence[Fraction], c: Rational = 1) -> None:
    slot = acc.get(m)
    if slot is None:
        slot = acc[m] = [ZERO] * dim
    if c == 1:
        for r, x in enumerate(coords):
            if x:
                slot[r] += x
    else:
        for r, x in enumerate(coords):
            if x:
                slot[r] += c * x


def _build(basis: HypercomplexBasis, acc: Accumulator) -> Polynomial:
    spec = basis.spec
    terms = {}
    for m in sorted(acc, reverse=True):
        coords = acc[m]
        if any(coords):
            terms[m] = AlgebraElement(spec, tuple(coords))
    return Polynomial(basis, terms)


def _check_basis(f: Polynomial, g: Polynomial) -> None:
    if f.basis is not g.basis and f.basis != g.basis:
        raise SpecMismatch("polynomials live over different hypercomplex bases")


def zero(basis: HypercomplexBasis) -> Polynomial:
    return Polynomial(basis, {})


def monomial(basis: HypercomplexBasis, exponents: Sequence[int], a: AlgebraElement = None) -> Polynomial:
    exponents = tuple(exponents)
    if len(exponents) != basis.n + 1 or min(exponents) < 0:
        raise SpecMismatch(f"monomial {exponents} does not fit x0..x{basis.n}")
    if a is None:
        a = one(basis.spec)
    if a.is_zero():
        return zero(basis)
    return Polynomial(basis, {exponents: a})


def constant(basis: HypercomplexBasis, a: Union[AlgebraElement, Rational]) -> Polynomial:
    if not isinstance(a, AlgebraElement):
        a = real_element(basis.spec, a)
    return monomial(basis, (0,) * (basis.n + 1), a)


def variable(basis: HypercomplexBasis, i: int, power: int = 1) -> Polynomial:
    """The real polynomial x_i^power."""
    exps = [0] * (basis.n + 1)
    exps[i] = power
    return monomial(basis, exps)


def add(f: Polynomial, g: Polynomial) -> Polynomial:
    _check_basis(f, g)
    dim = f.spec.dimension
    acc: Accumulator = {}
    for m, a in f.terms.items():
        _accumulate(acc, dim, m, a.coords)
    for m, a in g.terms.items():
        _accumulate(acc, dim, m, a.coords)
    return _build(f.basis, acc)


def sum_polys(basis: HypercomplexBasis, polys: Iterable[Polynomial]) -> Polynomial:
    dim = basis.spec.dimension
    acc: Accumulator = {}
    for f in polys:
        _check_basis(f, zero(basis))
        for m, a in f.terms.items():
            _accumulate(acc, dim, m, a.coords)
    return _build(basis, acc)


def negate(f: Polynomial) -> Polynomial:
    return Polynomial(f.basis, {m: -a for m, a in f.terms.items()})


def scale(f: Polynomial, c: Rational) -> Polynomial:
    c = Fraction(c)
    if not c:
        return zero(f.basis)
    return Polynomial(f.basis, {m: a * c for m, a in f.terms.items()})


def mul_real(f: Polynomial, g: Polynomial) -> Polynomial:
    """f * g for a real-valued polynomial g."""
    _check_basis(f, g)
    if not g.is_real():
        raise SpecMismatch("mul_real needs a real-valued factor")
    dim = f.spec.dimension
    acc: Accumulator = {}
    for mg, b in g.terms.items():
        c = b.real()
        for mf, a in f.terms.items():
            m = tuple(x + y for x, y in zip(mf, mg))
            _accumulate(acc, dim, m, a.coords, c)
    return _build(f.basis, acc)


def left_mul_const(v: AlgebraElement, f: Polynomial) -> Polynomial:
    if v.spec is not f.spec:
        raise SpecMismatch(f"cannot multiply {f.spec.name} polynomial by {v.spec.name} element")
    dim = f.spec.dimension
    acc: Accumulator = {}
    for m, a in f.terms.items():
        _accumulate(acc, dim, m, mul_coords(f.spec, v.coords, a.coords))
    return _build(f.basis, acc)


def right_mul_const(f: Polynomial, v: AlgebraElement) -> Polynomial:
    """f * v, multiplying every coefficient on the right."""
    if v.spec is not f.spec:
        raise SpecMismatch(f"cannot multiply {f.spec.name} polynomial by {v.spec.name} element")
    dim = f.spec.dimension
    acc: Accumulator = {}
    for m, a in f.terms.items():
        _accumulate(acc, dim, m, mul_coords(f.spec, a.coords, v.coords))
    return _build(f.basis, acc)


def left_mul_unit(f: Polynomial, i: int) -> Polynomial:
    """v_i * f for the i-th element of the hypercomplex basis."""
    basis = f.basis
    acc: Accumulator = {}
    dim = f.spec.dimension
    for m, a in f.terms.items():
        _accumulate(acc, dim, m, basis.apply_unit(i, a.coords))
    return _build(basis, acc)


def left_mul_imaginary(A: Iterable[int], f: Polynomial) -> Polynomial:
    """x_A * f = sum over i in A of x_i (v_i f)."""
    basis = f.basis
    dim = f.spec.dimension
    acc: Accumulator = {}
    for i in sorted(A):
        for m, a in f.terms.items():
            shifted = list(m)
            shifted[i] += 1
            _accumulate(acc, dim, tuple(shifted), basis.apply_unit(i, a.coords))
    return _build(basis, acc)


def imaginary(basis: HypercomplexBasis, A: Iterable[int]) -> Polynomial:
    """x_A = sum over i in A of x_i v_i."""
    return left_mul_imaginary(A, constant(basis, 1))


def norm_sq(basis: HypercomplexBasis, A: Iterable[int]) -> Polynomial:
    """||x_A||^2 = sum over i in A of x_i^2 (real)."""
    return sum_polys(basis, (variable(basis, i, 2) for i in A))


def real_power(f: Polynomial, m: int) -> Polynomial:
    result = constant(f.basis, 1)
    for _ in range(m):
        result = mul_real(result, f)
    return result


def pow_imaginary(basis: HypercomplexBasis, A: Iterable[int], m: int) -> Polynomial:
    """x_A^m, using x_A^2 = -||x_A||^2."""
    A = sorted(A)
    if m < 0:
        raise ValueError("negative power")
    even = real_power(negate(norm_sq(basis, A)), m // 2)
    if m % 2:
        return left_mul_imaginary(A, even)
    return even


def x_poly(basis: HypercomplexBasis) -> Polynomial:
    """x = x0 + sum x_i v_i."""
    return add(variable(basis, 0), imaginary(basis, range(1, basis.n + 1)))


def x_conj_poly(basis: HypercomplexBasis) -> Polynomial:
    return add(variable(basis, 0), negate(imaginary(basis, range(1, basis.n + 1))))


def left_mul_x(f: Polynomial, conjugate: bool = False) -> Polynomial:
    """x * f (or x^c * f) with x linear in the coordinates."""
    im = left_mul_imaginary(range(1, f.n + 1), f)
    x0f = mul_real(f, variable(f.basis, 0))
    return add(x0f, negate(im) if conjugate else im)


def power_x(basis: HypercomplexBasis, m: int, conjugate: bool = False) -> Polynomial:
    """x^m (or (x^c)^m) as x(x(...x)), well defined by power-associativity."""
    result = constant(basis, 1)
    for _ in range(m):
        result = left_mul_x(result, conjugate)
    return result


def derivative(f: Polynomial, i: int) -> Polynomial:
    terms = {}
    for m, a in f.terms.items():
        e = m[i]
        if e:
            d = list(m)
            d[i] = e - 1
            terms[tuple(d)] = a * e
    return Polynomial(f.basis, {m: terms[m] for m in sorted(terms, reverse=True)})


def reflect(f: Polynomial, i: int) -> Polynomial:
    return Polynomial(f.basis, {m: (-a if m[i] % 2 else a) for m, a in f.terms.items()})


def reflect_set(f: Polynomial, A: Iterable[int]) -> Polynomial:
    A = list(A)
    return Polynomial(f.basis, {m: (-a if sum(m[i] for i in A) % 2 else a) for m, a in f.terms.items()})


def euler(f: Polynomial, A: Iterable[int]) -> Polynomial:
    """E_A f = sum over i in A of x_i d_i f: scales each term by its A-degree."""
    A = list(A)
    terms = {}
    for m, a in f.terms.items():
        k = sum(m[i] for i in A)
        if k:
            terms[m] = a * k
    return Polynomial(f.basis, terms)


def divide_exact(f: Polynomial, i: int, power: int) -> Polynomial:
    terms = {}
    for m, a in f.terms.items():
        if m[i] < power:
            raise NotDivisible(i, m)
        q = list(m)
        q[i] -= power
        terms[tuple(q)] = a
    return Polynomial(f.basis, terms)


@lru_cache(maxsize=None)
def _qq_ring(nvars: int):
    R, *_ = ring(",".join(f"x{i}" for i in range(nvars)), QQ)
    return R


def _to_ring(R, coeffs: Mapping[Monomial, Fraction]):
    return R.from_dict({m: QQ(c.numerator, c.denominator) for m, c in coeffs.items()})


def coordinate_poly(f: Polynomial, q: int) -> Dict[Monomial, Fraction]:
    """The real polynomial carried by the q-th algebra coordinate."""
    return {m: a.coords[q] for m, a in f.terms.items() if a.coords[q]}


def divide_exact_real(f: Polynomial, g: Polynomial) -> Polynomial:
    """f / g for a real-valued g, coordinatewise over the algebra basis."""
    _check_basis(f, g)
    if not g.is_real() or g.is_zero():
        raise SpecMismatch("divide_exact_real needs a nonzero real-valued divisor")
    if f.is_zero():
        return f
    R = _qq_ring(f.n + 1)
    divisor = _to_ring(R, {m: b.real() for m, b in g.terms.items()})
    dim = f.spec.dimension
    acc: Accumulator = {}
    for q in range(dim):
        coeffs = coordinate_poly(f, q)
        if not coeffs:
            continue
        quotient, remainder = _to_ring(R, coeffs).div(divisor)
        if remainder:
            raise NotDivisible(None, remainder.LM,
                               f"real divisor leaves remainder at monomial {tuple(remainder.LM)}")
        for m, c in quotient.items():
            slot = acc.setdefault(tuple(m), [ZERO] * dim)
            slot[q] += Fraction(int(c.numerator), int(c.denominator))
    return _build(f.basis, acc)


def evaluate(f: Polynomial, p: Point) -> AlgebraElement:
    if p.n != f.n:
        raise SpecMismatch(f"point has {p.n + 1} coordinates, expected {f.n + 1}")
    dim = f.spec.dimension
    out = [ZERO] * dim
    for m, a in f.terms.items():
        value = Fraction(1)
        for x, e in zip(p.to_tuple(), m):
            if e:
                value *= x ** e
        if value:
            for r, c in enumerate(a.coords):
                if c:
                    out[r] += value * c
    return AlgebraElement(f.spec, tuple(out))


def restrict_x0(f: Polynomial) -> Polynomial:
    return Polynomial(f.basis, {m: a for m, a in f.terms.items() if m[0] == 0})


def homogeneous_component(f: Polynomial, d: int) -> Polynomial:
    return Polynomial(f.basis, {m: a for m, a in f.terms.items() if sum(m) == d})


def degree(f: Polynomial) -> int:
    """Total degree; -1 for the zero polynomial."""
    return max((sum(m) for m in f.terms), default=-1)


def depends_on(f: Polynomial, i: int) -> bool:
    return any(m[i] for m in f.terms)


def a_degree_components(f: Polynomial, A: Iterable[int]) -> Dict[int, Polynomial]:
    """Split f into parts homogeneous in the variables {x_i : i in A}."""
    A = list(A)
    parts: Dict[int, Dict[Monomial, AlgebraElement]] = {}
    for m, a in f.terms.items():
        parts.setdefault(sum(m[i] for i in A), {})[m] = a
    return {k: Polynomial(f.basis, parts[k]) for k in sorted(parts)}


def first_monomial(f: Polynomial):
    """Leading monomial in the canonical order, None for 0."""
    return next(iter(f.terms), None)


def require_zero(f: Polynomial, identity: str) -> None:
    if not f.is_zero():
        raise VerificationFailed(identity, first_monomial(f))


def require_equal(lhs: Polynomial, rhs: Polynomial, identity: str) -> None:
    require_zero(add(lhs, negate(rhs)), identity)
