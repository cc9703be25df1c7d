"""
Exact arithmetic in the real alternative *-algebras used by the library:
Clifford algebras of signature (0, n) and the octonions.

Elements are dense vectors of Fractions over the algebra basis. Products are
read off a structure table of signed basis indices, built once per algebra.
"""
import logging
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Iterable, List, Sequence, Tuple

from config import MAX_CLIFFORD_N, OCTONION_NAMES
from errors import InvalidBasis, ParseError, SpecMismatch

logger = logging.getLogger(__name__)

ZERO = Fraction(0)
ONE = Fraction(1)


@dataclass(frozen=True, eq=False)
class AlgebraSpec:
    """
    Structure data of a finite-dimensional real alternative *-algebra.

    Specs are built through `clifford(n)` / `octonion()` which cache them, so
    two specs of the same algebra are the same object and compare by identity.
    """
    kind: str
    n: int
    basis_names: Tuple[str, ...]
    table: Tuple[Tuple[Tuple[int, int], ...], ...]
    conj_signs: Tuple[int, ...]

    @property
    def dimension(self) -> int:
        return len(self.basis_names)

    @property
    def name(self) -> str:
        return f"clifford:{self.n}" if self.kind == "clifford" else "octonion"

    @property
    def is_associative(self) -> bool:
        return self.kind == "clifford"

    def index(self, name: str) -> int:
        try:
            return self.basis_names.index(name)
        except ValueError:
            raise ParseError(f"unknown basis element {name!r} for {self.name}") from None

    def __repr__(self) -> str:
        return f"AlgebraSpec({self.name})"


def _bits(mask: int) -> Tuple[int, ...]:
    return tuple(i + 1 for i in range(mask.bit_length()) if mask >> i & 1)


def _blade_sign(a: int, b: int) -> int:
    # transpositions needed to sort the concatenated blade, then e_i^2 = -1
    swaps = 0
    t = a >> 1
    while t:
        swaps += bin(t & b).count("1")
        t >>= 1
    swaps += bin(a & b).count("1")
    return -1 if swaps % 2 else 1


@lru_cache(maxsize=None)
def clifford(n: int) -> AlgebraSpec:
    if not 1 <= n <= MAX_CLIFFORD_N:
        raise SpecMismatch(f"clifford:{n} not supported (1 <= n <= {MAX_CLIFFORD_N})")
    blades = sorted(range(1 << n), key=lambda m: (bin(m).count("1"), _bits(m)))
    position = {m: p for p, m in enumerate(blades)}
    names = tuple("1" if m == 0 else "e" + "".join(str(i) for i in _bits(m)) for m in blades)
    table = tuple(
        tuple((_blade_sign(a, b), position[a ^ b]) for b in blades)
        for a in blades
    )
    conj_signs = []
    for m in blades:
        g = bin(m).count("1")
        conj_signs.append(-1 if (g * (g + 1) // 2) % 2 else 1)
    logger.debug("built clifford:%d table (%d blades)", n, len(blades))
    return AlgebraSpec("clifford", n, names, table, tuple(conj_signs))


def _qmul(p, q):
    a1, b1, c1, d1 = p
    a2, b2, c2, d2 = q
    return (a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
            a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
            a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
            a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2)


def _qconj(q):
    return (q[0], -q[1], -q[2], -q[3])


def _qadd(p, q):
    return tuple(x + y for x, y in zip(p, q))


def _qneg(q):
    return tuple(-x for x in q)


def _cd_mul(x, y):
    # (a,b)(c,d) = (ac - d^c b, da + b c^c)
    a, b = x
    c, d = y
    return (_qadd(_qmul(a, c), _qneg(_qmul(_qconj(d), b))),
            _qadd(_qmul(d, a), _qmul(b, _qconj(c))))


_Q_UNITS = ((1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1))
_Q_ZERO = (0, 0, 0, 0)


def _octonion_pair(index: int):
    # l = (0,1) and l*q = (0, q^c), so li, lj, lk are (0, -i), (0, -j), (0, -k)
    if index < 4:
        return (_Q_UNITS[index], _Q_ZERO)
    if index == 4:
        return (_Q_ZERO, _Q_UNITS[0])
    return (_Q_ZERO, _qneg(_Q_UNITS[index - 4]))


def _octonion_coords(pair) -> Tuple[int, ...]:
    p, q = pair
    return (p[0], p[1], p[2], p[3], q[0], -q[1], -q[2], -q[3])


@lru_cache(maxsize=None)
def octonion() -> AlgebraSpec:
    rows = []
    for a in range(8):
        row = []
        for b in range(8):
            coords = _octonion_coords(_cd_mul(_octonion_pair(a), _octonion_pair(b)))
            nonzero = [(c, r) for r, c in enumerate(coords) if c]
            assert len(nonzero) == 1 and abs(nonzero[0][0]) == 1
            row.append(nonzero[0])
        rows.append(tuple(row))
    return AlgebraSpec("octonion", 7, OCTONION_NAMES, tuple(rows), (1,) + (-1,) * 7)


def parse_algebra(text: str) -> AlgebraSpec:
    """Parse "clifford:N" or "octonion"."""
    s = text.strip()
    if s == "octonion":
        return octonion()
    m = re.match(r'^clifford:(\d+)$', s)
    if not m:
        raise ParseError(f"bad algebra {text!r}; expected 'clifford:N' or 'octonion'")
    try:
        return clifford(int(m.group(1)))
    except SpecMismatch as e:
        raise ParseError(str(e)) from None


@dataclass(frozen=True)
class AlgebraElement:
    spec: AlgebraSpec
    coords: Tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.coords) != self.spec.dimension:
            raise SpecMismatch(
                f"element has {len(self.coords)} coordinates, {self.spec.name} needs {self.spec.dimension}")

    def is_zero(self) -> bool:
        return not any(self.coords)

    def is_real(self) -> bool:
        return not any(self.coords[1:])

    def real(self) -> Fraction:
        return self.coords[0]

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        _check_same(self, other)
        return AlgebraElement(self.spec, tuple(x + y for x, y in zip(self.coords, other.coords)))

    def __sub__(self, other: "AlgebraElement") -> "AlgebraElement":
        _check_same(self, other)
        return AlgebraElement(self.spec, tuple(x - y for x, y in zip(self.coords, other.coords)))

    def __neg__(self) -> "AlgebraElement":
        return AlgebraElement(self.spec, tuple(-x for x in self.coords))

    def __mul__(self, other):
        if isinstance(other, AlgebraElement):
            return mul(self, other)
        return AlgebraElement(self.spec, tuple(x * other for x in self.coords))

    def __rmul__(self, other):
        if isinstance(other, AlgebraElement):
            return mul(other, self)
        return AlgebraElement(self.spec, tuple(other * x for x in self.coords))

    def __str__(self) -> str:
        return format_element(self)


def _check_same(a: AlgebraElement, b: AlgebraElement) -> None:
    if a.spec is not b.spec:
        raise SpecMismatch(f"cannot combine {a.spec.name} and {b.spec.name} elements")


def zero(spec: AlgebraSpec) -> AlgebraElement:
    return AlgebraElement(spec, (ZERO,) * spec.dimension)


def basis_element(spec: AlgebraSpec, index: int) -> AlgebraElement:
    coords = [ZERO] * spec.dimension
    coords[index] = ONE
    return AlgebraElement(spec, tuple(coords))


def one(spec: AlgebraSpec) -> AlgebraElement:
    return basis_element(spec, 0)


def real(spec: AlgebraSpec, value) -> AlgebraElement:
    coords = [ZERO] * spec.dimension
    coords[0] = Fraction(value)
    return AlgebraElement(spec, tuple(coords))


def element(spec: AlgebraSpec, name: str) -> AlgebraElement:
    return basis_element(spec, spec.index(name))


def from_coords(spec: AlgebraSpec, values: Iterable) -> AlgebraElement:
    return AlgebraElement(spec, tuple(Fraction(v) for v in values))


def mul_coords(spec: AlgebraSpec, a: Sequence[Fraction], b: Sequence[Fraction]) -> List[Fraction]:
    out = [ZERO] * spec.dimension
    table = spec.table
    nz_b = [(q, y) for q, y in enumerate(b) if y]
    for p, x in enumerate(a):
        if not x:
            continue
        row = table[p]
        for q, y in nz_b:
            sign, r = row[q]
            if sign > 0:
                out[r] += x * y
            else:
                out[r] -= x * y
    return out


def mul(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    """Literal binary product a*b read off the structure table."""
    _check_same(a, b)
    return AlgebraElement(a.spec, tuple(mul_coords(a.spec, a.coords, b.coords)))


def conjugate(a: AlgebraElement) -> AlgebraElement:
    return AlgebraElement(a.spec, tuple(s * x for s, x in zip(a.spec.conj_signs, a.coords)))


def trace(a: AlgebraElement) -> AlgebraElement:
    return a + conjugate(a)


def norm_form(a: AlgebraElement) -> AlgebraElement:
    return mul(a, conjugate(a))


def is_imaginary_unit(a: AlgebraElement) -> bool:
    return trace(a).is_zero() and norm_form(a) == one(a.spec)


def ordered_product(units: Sequence[AlgebraElement], a: AlgebraElement) -> AlgebraElement:
    """[u, a] = u1(u2(...(ul a)...)), nested from the right."""
    result = a
    for u in reversed(list(units)):
        result = mul(u, result)
    return result


def format_element(a: AlgebraElement) -> str:
    parts = []
    for name, c in zip(a.spec.basis_names, a.coords):
        if not c:
            continue
        mag = abs(c)
        if name == "1":
            body = str(mag)
        elif mag == 1:
            body = name
        else:
            body = f"{mag}*{name}"
        sign = "-" if c < 0 else "+"
        parts.append((sign, body))
    if not parts:
        return "0"
    text = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sign, body in parts[1:]:
        text += f" {sign} {body}"
    return text


@dataclass(frozen=True)
class HypercomplexBasis:
    """Validated tuple (1, v1, ..., vn) spanning a hypercomplex subspace M."""
    spec: AlgebraSpec
    elements: Tuple[AlgebraElement, ...]

    @property
    def n(self) -> int:
        return len(self.elements) - 1

    def unit(self, i: int) -> AlgebraElement:
        return self.elements[i]

    @cached_property
    def left_actions(self) -> Tuple[Tuple[Tuple[Tuple[int, Fraction], ...], ...], ...]:
        # left_actions[i][q] lists (r, c) with v_i * e_q = sum c e_r
        actions = []
        for v in self.elements:
            cols = []
            for q in range(self.spec.dimension):
                image = mul_coords(self.spec, v.coords, basis_element(self.spec, q).coords)
                cols.append(tuple((r, c) for r, c in enumerate(image) if c))
            actions.append(tuple(cols))
        return tuple(actions)

    def apply_unit(self, i: int, coords: Sequence[Fraction]) -> Tuple[Fraction, ...]:
        """Coordinates of v_i * a."""
        out = [ZERO] * self.spec.dimension
        action = self.left_actions[i]
        for q, x in enumerate(coords):
            if not x:
                continue
            for r, c in action[q]:
                out[r] += c * x
        return tuple(out)

    def describe(self) -> str:
        return ",".join(format_element(v) for v in self.elements)


def validate_hypercomplex_basis(spec: AlgebraSpec, elements: Sequence[AlgebraElement]) -> HypercomplexBasis:
    elements = tuple(elements)
    if len(elements) < 2:
        raise InvalidBasis("a hypercomplex basis needs 1 and at least one imaginary unit")
    for v in elements:
        if v.spec is not spec:
            raise SpecMismatch(f"basis element {v} does not belong to {spec.name}")
    if elements[0] != one(spec):
        raise InvalidBasis(f"first basis element must be 1, got {format_element(elements[0])}")
    for i, v in enumerate(elements[1:], start=1):
        if not trace(v).is_zero():
            raise InvalidBasis(f"v{i} = {format_element(v)} is not an imaginary unit: t(v{i}) = {trace(v)}")
        if norm_form(v) != one(spec):
            raise InvalidBasis(f"v{i} = {format_element(v)} is not an imaginary unit: n(v{i}) = {norm_form(v)}")
    n = len(elements) - 1
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            vi, vj = elements[i], elements[j]
            for q in range(spec.dimension):
                a = basis_element(spec, q)
                if not (mul(vi, mul(vj, a)) + mul(vj, mul(vi, a))).is_zero():
                    raise InvalidBasis(
                        f"v{i}(v{j}a) != -v{j}(v{i}a) for (i, j, a) = ({i}, {j}, {spec.basis_names[q]})")
    return HypercomplexBasis(spec, elements)


def default_basis(spec: AlgebraSpec) -> HypercomplexBasis:
    """Paravector basis (1, e1, ..., en) for Clifford, (1, i, ..., lk) for octonions."""
    if spec.kind == "octonion":
        names = list(spec.basis_names)
    else:
        names = ["1"] + [f"e{i}" for i in range(1, spec.n + 1)]
    return validate_hypercomplex_basis(spec, [element(spec, s) for s in names])


def parse_basis(spec: AlgebraSpec, text: str) -> HypercomplexBasis:
    names = [s.strip() for s in text.split(",") if s.strip()]
    if not names:
        raise ParseError("empty basis")
    return validate_hypercomplex_basis(spec, [element(spec, s) for s in names])
