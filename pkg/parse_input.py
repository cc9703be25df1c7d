import re
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from algebra import HypercomplexBasis, ZERO
from errors import ParseError
from poly import Polynomial, _accumulate, _build

# Utils

_RATIONAL = re.compile(r'^(\d+)(?:/(\d+))?$')
_VARIABLE = re.compile(r'^x(\d+)(?:\^(\d+))?$')


def is_rational_string(token: str) -> bool:
    return bool(_RATIONAL.match(token))


def parse_rational(token: str) -> Fraction:
    m = _RATIONAL.match(token.strip())
    if not m:
        raise ParseError(f"bad rational {token!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) else 1
    if den == 0:
        raise ParseError(f"zero denominator in {token!r}")
    return Fraction(num, den)


def _split_terms(text: str) -> List[Tuple[int, str]]:
    s = re.sub(r'\s+', '', text)
    if not s:
        raise ParseError("empty polynomial")
    if s[0] not in '+-':
        s = '+' + s
    pieces = re.split(r'([+-])', s)[1:]
    terms = []
    for sign, body in zip(pieces[::2], pieces[1::2]):
        if not body:
            raise ParseError(f"missing term after {sign!r} in {text!r}")
        terms.append((-1 if sign == '-' else 1, body))
    return terms


def _parse_term(basis: HypercomplexBasis, body: str) -> Tuple[Fraction, Tuple[int, ...], int]:
    spec = basis.spec
    factors = body.split('*')
    if any(not f for f in factors):
        raise ParseError(f"empty factor in term {body!r}")
    coefficient = Fraction(1)
    exps = [0] * (basis.n + 1)
    unit = 0
    for pos, factor in enumerate(factors):
        if is_rational_string(factor):
            coefficient *= parse_rational(factor)
            continue
        m = _VARIABLE.match(factor)
        if m:
            i = int(m.group(1))
            if i > basis.n:
                raise ParseError(f"variable x{i} out of range x0..x{basis.n}")
            exps[i] += int(m.group(2)) if m.group(2) else 1
            continue
        if factor in spec.basis_names:
            if pos != len(factors) - 1:
                raise ParseError(f"basis name {factor!r} must be the last factor of {body!r}")
            unit = spec.index(factor)
            continue
        raise ParseError(f"unknown factor {factor!r} in term {body!r}")
    return coefficient, tuple(exps), unit


def parse_polynomial(basis: HypercomplexBasis, text: str) -> Polynomial:
    """
    Parse an expanded polynomial such as "3/2*x0^2*x1*e12 - x2*e1 + 1".

    Args:
        basis: Hypercomplex basis fixing the variables x0..xn and the algebra
        text: Sum of terms; each term is [rat*](x<i>[^e]*)*[basis name]

    Returns:
        The polynomial in canonical form
    """
    dim = basis.spec.dimension
    acc = {}
    for sign, body in _split_terms(text):
        coefficient, exps, unit = _parse_term(basis, body)
        coords = [ZERO] * dim
        coords[unit] = sign * coefficient
        _accumulate(acc, dim, exps, coords)
    return _build(basis, acc)


def _format_monomial(exps: Sequence[int]) -> List[str]:
    out = []
    for i, e in enumerate(exps):
        if e == 1:
            out.append(f"x{i}")
        elif e > 1:
            out.append(f"x{i}^{e}")
    return out


def format_polynomial(f: Polynomial) -> str:
    """Canonical text form; parse_polynomial(format_polynomial(f)) == f."""
    names = f.spec.basis_names
    pieces = []
    for exps, a in f.terms.items():
        variables = _format_monomial(exps)
        for name, c in zip(names, a.coords):
            if not c:
                continue
            factors = []
            mag = abs(c)
            if mag != 1 or (not variables and name == "1"):
                factors.append(str(mag))
            factors.extend(variables)
            if name != "1":
                factors.append(name)
            pieces.append(("-" if c < 0 else "+", "*".join(factors)))
    if not pieces:
        return "0"
    text = ("-" if pieces[0][0] == "-" else "") + pieces[0][1]
    for sign, body in pieces[1:]:
        text += f" {sign} {body}"
    return text


def parse_index_list(text: Optional[str]) -> Optional[List[int]]:
    """'1,3,5' -> [1, 3, 5]; used for --alpha overrides and index sets."""
    if text is None:
        return None
    s = text.strip().strip('{}')
    if not s:
        return []
    try:
        return [int(t) for t in s.split(',')]
    except ValueError:
        raise ParseError(f"bad index list {text!r}") from None
