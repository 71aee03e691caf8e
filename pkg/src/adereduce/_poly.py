import functools
import logging
import re
from itertools import combinations
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from sympy import Symbol
from sympy.parsing.sympy_parser import (
    convert_xor,
    parse_expr,
    standard_transformations,
)
from sympy.polys.domains import ZZ
from sympy.polys.matrices import DomainMatrix
from sympy.polys.orderings import grlex
from sympy.polys.polyerrors import CoercionFailed, ExactQuotientFailed
from sympy.polys.rings import PolyElement, PolyRing

from ._errors import AdeError
from .types import Bindings, Monomial, PolyLike, Terms

log = logging.getLogger(__name__)

_NAME = re.compile(r"^[A-Za-z_][A-Za-z_0-9]*$")
_NAME_PARTS = re.compile(r"^(.*?)(\d*)$")
_IDENTIFIER = re.compile(r"[A-Za-z_][A-Za-z_0-9]*")


def _name_key(name: str) -> Tuple[str, int, str]:
    # a2 before a10, and all of a before b
    stem, digits = _NAME_PARTS.match(name).groups()  # type: ignore[union-attr]
    return stem, int(digits) if digits else -1, name


def _canonical(names: Iterable[str]) -> Tuple[str, ...]:
    return tuple(sorted(set(names), key=_name_key))


@functools.lru_cache(maxsize=None)
def _ring(names: Tuple[str, ...]) -> PolyRing:
    return PolyRing(names, ZZ, grlex)


def _embed(
    element: PolyElement, source: Sequence[str], target: Tuple[str, ...]
) -> PolyElement:
    """Rewrite ``element``, written in the ``source`` variables, in the ring
    of the ``target`` variables. Source variables missing from the target
    must not occur."""
    ring = _ring(target)
    if tuple(source) == target:
        return element
    where = [target.index(name) if name in target else None for name in source]
    width = len(target)
    terms = {}
    for monom, coeff in element.items():
        exps = [0] * width
        for i, e in zip(where, monom):
            if e:
                assert i is not None, "embedding drops a variable in use"
                exps[i] = e
        terms[tuple(exps)] = coeff
    return ring.from_dict(terms)


class MPoly:
    """A polynomial with integer coefficients in named variables.

    Only the variables that actually occur are kept, ordered by name with
    numeric suffixes compared as numbers, so two polynomials are equal
    exactly when they have the same terms. Integers mix freely with
    polynomials in arithmetic.

    >>> x1, t2, t3 = MPoly.var("x1"), MPoly.var("t2"), MPoly.var("t3")
    >>> str(x1**3 - 3 * x1 * t2 + t3)
    'x1^3 - 3*t2*x1 + t3'
    >>> MPoly.parse("x1^3 - 3*x1*t2 + t3") == x1**3 - 3 * x1 * t2 + t3
    True
    """

    __slots__ = ("_names", "_element")

    def __init__(
        self,
        variables: Sequence[str] = (),
        terms: Optional[Mapping[Monomial, int]] = None,
    ):
        names = tuple(variables)
        for name in names:
            if not _NAME.match(name):
                raise AdeError(name, "variable names are identifiers")
        if len(set(names)) != len(names):
            raise AdeError(",".join(names), "repeated variable")
        for monom in terms or {}:
            if len(monom) != len(names) or min(monom, default=0) < 0:
                raise AdeError(monom, f"not an exponent vector for {names}")
        element = _ring(names).from_dict(dict(terms or {}))
        self._names, self._element = self._trim(names, element)

    @staticmethod
    def _trim(
        names: Tuple[str, ...], element: PolyElement
    ) -> Tuple[Tuple[str, ...], PolyElement]:
        used = [
            name for i, name in enumerate(names) if any(m[i] for m in element.keys())
        ]
        canonical = _canonical(used)
        return canonical, _embed(element, names, canonical)

    @classmethod
    def from_element(cls, names: Tuple[str, ...], element: PolyElement) -> "MPoly":
        """Wrap an element of the sympy ring over ``names``"""
        poly = cls.__new__(cls)
        poly._names, poly._element = cls._trim(names, element)  # noqa: SLF001
        return poly

    @classmethod
    def var(cls, name: str) -> "MPoly":
        return cls((name,), {(1,): 1})

    @classmethod
    def const(cls, value: int) -> "MPoly":
        return cls((), {(): int(value)})

    @classmethod
    def parse(cls, text: str) -> "MPoly":
        """Read the form `str` writes, or anything else sympy can parse that
        expands to an integer polynomial, with ``^`` allowed for powers

        Raises:
            AdeError: if the text is not an integer polynomial
        """
        names = _canonical(_IDENTIFIER.findall(text))
        local = {name: Symbol(name) for name in names}
        try:
            expr = parse_expr(
                text,
                local_dict=local,
                transformations=standard_transformations + (convert_xor,),
            )
            element = _ring(names).from_expr(expr)
        except (SyntaxError, TypeError, ValueError, CoercionFailed) as e:
            raise AdeError(text, f"not an integer polynomial ({e})") from e
        return cls.from_element(names, element)

    @classmethod
    def from_json(cls, doc: Mapping[str, object]) -> "MPoly":
        """Inverse of `to_json`"""
        try:
            variables = list(doc["variables"])  # type: ignore[call-overload]
            terms = {
                tuple(int(e) for e in monom): int(coeff)
                for monom, coeff in doc["terms"]  # type: ignore[attr-defined]
            }
        except (KeyError, TypeError, ValueError) as e:
            raise AdeError(doc, f"not a polynomial document ({e})") from e
        return cls(variables, terms)

    def to_json(self) -> Dict[str, object]:
        return {
            "variables": list(self._names),
            "terms": [
                [list(monom), int(coeff)] for monom, coeff in self._element.terms(grlex)
            ],
        }

    @property
    def variables(self) -> Tuple[str, ...]:
        return self._names

    @property
    def element(self) -> PolyElement:
        """The sympy ring element, over the ring of `variables`"""
        return self._element

    @property
    def terms(self) -> Terms:
        return {monom: int(coeff) for monom, coeff in self._element.items()}

    @property
    def is_zero(self) -> bool:
        return not self._element

    @property
    def is_constant(self) -> bool:
        return not self._names

    def __int__(self):
        if self._names:
            raise AdeError(self, "not a constant")
        return int(self._element.get((), 0))

    # Arithmetic

    def _binary(self, other: PolyLike, op) -> "MPoly":
        if isinstance(other, int):
            other = MPoly.const(other)
        elif not isinstance(other, MPoly):
            return NotImplemented
        names = _canonical(self._names + other.variables)
        return MPoly.from_element(
            names,
            op(
                _embed(self._element, self._names, names),
                _embed(other.element, other.variables, names),
            ),
        )

    def __add__(self, other: PolyLike) -> "MPoly":
        return self._binary(other, lambda a, b: a + b)

    def __radd__(self, other: PolyLike) -> "MPoly":
        return self._binary(other, lambda a, b: b + a)

    def __sub__(self, other: PolyLike) -> "MPoly":
        return self._binary(other, lambda a, b: a - b)

    def __rsub__(self, other: PolyLike) -> "MPoly":
        return self._binary(other, lambda a, b: b - a)

    def __mul__(self, other: PolyLike) -> "MPoly":
        return self._binary(other, lambda a, b: a * b)

    def __rmul__(self, other: PolyLike) -> "MPoly":
        return self._binary(other, lambda a, b: b * a)

    def __neg__(self) -> "MPoly":
        return MPoly.from_element(self._names, -self._element)

    def __pow__(self, k: int) -> "MPoly":
        if k < 0:
            raise AdeError(self, f"negative power {k}")
        return MPoly.from_element(self._names, self._element**k)

    def __eq__(self, other):
        if isinstance(other, int):
            other = MPoly.const(other)
        if not isinstance(other, MPoly):
            return NotImplemented
        return self._names == other.variables and self._element == other.element

    def __hash__(self):
        return hash((self._names, frozenset(self._element.items())))

    def __str__(self):
        if not self._element:
            return "0"
        text = ""
        for monom, coeff in self._element.terms(grlex):
            factors = [
                name if e == 1 else f"{name}^{e}"
                for name, e in zip(self._names, monom)
                if e
            ]
            magnitude = abs(int(coeff))
            if magnitude != 1 or not factors:
                factors.insert(0, str(magnitude))
            body = "*".join(factors)
            if not text:
                text = f"-{body}" if coeff < 0 else body
            else:
                text += f" - {body}" if coeff < 0 else f" + {body}"
        return text

    def __repr__(self):
        return f"MPoly({str(self)!r})"

    # Calculus and coefficients

    def degree(self, var: Optional[str] = None) -> int:
        """Degree in one variable, or total degree. The zero polynomial has
        degree -1."""
        if not self._element:
            return -1
        if var is None:
            return max(sum(m) for m in self._element.keys())
        if var not in self._names:
            return 0
        i = self._names.index(var)
        return max(m[i] for m in self._element.keys())

    def coefficient(self, var: str, k: int) -> "MPoly":
        """The coefficient of ``var^k``, as a polynomial in the other
        variables"""
        if var not in self._names:
            return self if k == 0 else MPoly()
        i = self._names.index(var)
        terms = {
            m[:i] + (0,) + m[i + 1 :]: int(c)
            for m, c in self._element.items()
            if m[i] == k
        }
        return MPoly(self._names, terms)

    def derivative(self, var: str) -> "MPoly":
        if var not in self._names:
            return MPoly()
        i = self._names.index(var)
        terms = {
            m[:i] + (m[i] - 1,) + m[i + 1 :]: int(c) * m[i]
            for m, c in self._element.items()
            if m[i]
        }
        return MPoly(self._names, terms)

    def evaluate(self, values: Bindings) -> "MPoly":
        """Substitute constants or polynomials for some of the variables"""
        return substitute(self, values)


def as_poly(value: PolyLike) -> MPoly:
    if isinstance(value, MPoly):
        return value
    if isinstance(value, int):
        return MPoly.const(value)
    raise AdeError(repr(value), "expected a polynomial or an integer")


def variables(prefix: str, indices: Iterable[int]) -> List[MPoly]:
    """``variables("a", range(1, 4))`` is ``[a1, a2, a3]``"""
    return [MPoly.var(f"{prefix}{i}") for i in indices]


def elementary_symmetric(k: int, names: Sequence[str]) -> MPoly:
    """The k-th elementary symmetric polynomial in the given variables

    >>> str(elementary_symmetric(2, ["a1", "a2", "a3"]))
    'a1*a2 + a1*a3 + a2*a3'
    """
    if not 0 <= k <= len(names):
        raise AdeError(k, f"out of range for {len(names)} variables")
    terms = {}
    for chosen in combinations(range(len(names)), k):
        terms[tuple(1 if i in chosen else 0 for i in range(len(names)))] = 1
    return MPoly(names, terms)


# ----------------------------------------------------------------------------
#   Elimination


def sylvester_matrix(f: MPoly, g: MPoly, var: str) -> List[List[MPoly]]:
    """The (m+n)×(m+n) Sylvester matrix of f and g in ``var``, with n shifted
    copies of f's coefficients above m shifted copies of g's, where m and n
    are the degrees of f and g"""
    m, n = f.degree(var), g.degree(var)
    size = m + n
    rows = []
    for poly, degree, copies in ((f, m, n), (g, n, m)):
        coefficients = [poly.coefficient(var, degree - k) for k in range(degree + 1)]
        for shift in range(copies):
            row = [MPoly()] * size
            row[shift : shift + degree + 1] = coefficients
            rows.append(row)
    return rows


def resultant(f: MPoly, g: MPoly, var: str) -> MPoly:
    """Determinant of the Sylvester matrix, a polynomial in the remaining
    variables. Res(x - a, x - b; x) is a - b.

    Raises:
        AdeError: if either input is the zero polynomial
    """
    for poly in (f, g):
        if poly.is_zero:
            raise AdeError(poly, "resultant of the zero polynomial")
    rows = sylvester_matrix(f, g, var)
    others = _canonical(n for n in f.variables + g.variables if n != var)
    ring = _ring(others)
    domain = ring.to_domain() if others else ZZ
    size = len(rows)
    log.debug("resultant in %s: Sylvester matrix of size %d", var, size)
    if size == 0:
        return MPoly.const(1)

    def entry(p: MPoly):
        element = _embed(p.element, p.variables, others)
        return element if others else ZZ(int(element.get((), 0)))

    entries = [[entry(p) for p in row] for row in rows]
    matrix = DomainMatrix(entries, (size, size), domain)
    det = matrix.det()
    if others:
        return MPoly.from_element(others, det)
    return MPoly.const(int(det))


def discriminant(f: MPoly, var: str) -> MPoly:
    """(-1)^(m(m-1)/2) Res(f, f'; var) for f monic of degree m in ``var``, so
    that the discriminant of a product of linear factors x - a_i is the
    product of (a_i - a_j)² over i < j

    >>> str(discriminant(MPoly.parse("x^3 + t2*x + t3"), "x"))
    '-4*t2^3 - 27*t3^2'

    Raises:
        AdeError: if f is not monic in ``var`` or has degree 0
    """
    m = f.degree(var)
    if m < 1:
        raise AdeError(f, f"has no positive degree in {var}")
    if f.coefficient(var, m) != 1:
        raise AdeError(f, f"discriminant needs a polynomial monic in {var}")
    sign = -1 if (m * (m - 1) // 2) % 2 else 1
    return sign * resultant(f, f.derivative(var), var)


# ----------------------------------------------------------------------------
#   Substitution


def _horner(
    terms: List[Tuple[Monomial, int]],
    position: int,
    images: Sequence[PolyElement],
    ring: PolyRing,
) -> PolyElement:
    # Nest on one variable at a time so images are only ever multiplied into
    # partial sums, never expanded into separate powers per term
    if position == len(images):
        return ring.ground_new(sum(c for _, c in terms))
    groups: Dict[int, List[Tuple[Monomial, int]]] = {}
    for term in terms:
        groups.setdefault(term[0][position], []).append(term)
    image = images[position]
    result = ring.zero
    previous = None
    for e in sorted(groups, reverse=True):
        if previous is not None:
            result = result * image ** (previous - e)
        result = result + _horner(groups[e], position + 1, images, ring)
        previous = e
    if previous:
        result = result * image**previous
    return result


def substitute(f: MPoly, bindings: Bindings) -> MPoly:
    """Replace variables by polynomials or integers and expand. Variables
    not in ``bindings`` are left alone.

    >>> a = elementary_symmetric(2, ["a1", "a2"])
    >>> str(substitute(MPoly.parse("-4*t2"), {"t2": a}))
    '-4*a1*a2'
    """
    bound = {
        name: as_poly(value) for name, value in bindings.items() if name in f.variables
    }
    if not bound:
        return f
    target = _canonical(
        [n for n in f.variables if n not in bound]
        + [n for p in bound.values() for n in p.variables]
    )
    ring = _ring(target)
    images = [
        _embed(bound[name].element, bound[name].variables, target)
        if name in bound
        else ring.gens[target.index(name)]
        for name in f.variables
    ]
    expanded = _horner(list(f.element.items()), 0, images, ring)
    return MPoly.from_element(target, expanded)


def divides(f: MPoly, g: MPoly) -> bool:
    """Whether g = f·q for some integer polynomial q

    Raises:
        AdeError: if f is zero
    """
    if f.is_zero:
        raise AdeError(f, "division by the zero polynomial")
    names = _canonical(f.variables + g.variables)
    try:
        multiple = _embed(g.element, g.variables, names)
        multiple.exquo(_embed(f.element, f.variables, names))
    except ExactQuotientFailed:
        return False
    return True
