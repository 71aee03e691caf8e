import functools
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np
from sympy import Poly, Symbol, cyclotomic_poly, divisors
from sympy.polys.domains import QQ, ZZ
from sympy.polys.matrices import DomainMatrix

from ._errors import AdeError
from .types import IntMatrix, RatVector, UniPoly

#: Largest power tried before `matrix_order` gives up
MATRIX_ORDER_LIMIT = 10_000

_LAMBDA = Symbol("lambda")


def _fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, np.integer)):
        return Fraction(int(value))
    return Fraction(value)


@dataclass(frozen=True)
class RatMatrix:
    """A dense matrix of exact rationals. Build it with `RatMatrix.from_rows`,
    which brings every entry into lowest terms."""

    rows: int
    cols: int
    entries: Tuple[RatVector, ...]

    @classmethod
    def from_rows(
        cls, rows: Iterable[Iterable], cols: Optional[int] = None
    ) -> "RatMatrix":
        entries = tuple(tuple(_fraction(x) for x in row) for row in rows)
        if cols is None:
            if not entries:
                raise AdeError("RatMatrix", "column count needed for an empty matrix")
            cols = len(entries[0])
        if any(len(row) != cols for row in entries):
            raise AdeError("RatMatrix", f"rows must all have {cols} entries")
        return cls(len(entries), cols, entries)

    @property
    def rank(self) -> int:
        return len(_rref(self)[1])

    def apply(self, vector: Sequence) -> RatVector:
        """Return the matrix times a column vector"""
        if len(vector) != self.cols:
            raise AdeError("RatMatrix", f"expected a vector of length {self.cols}")
        column = [_fraction(x) for x in vector]
        return tuple(sum(a * b for a, b in zip(row, column)) for row in self.entries)

    def __str__(self):
        return "\n".join(" ".join(str(x) for x in row) for row in self.entries)


def _to_domain(m: RatMatrix) -> DomainMatrix:
    rows = [[QQ(x.numerator, x.denominator) for x in row] for row in m.entries]
    return DomainMatrix(rows, (m.rows, m.cols), QQ)


def _from_domain(element) -> Fraction:
    return Fraction(int(element.numerator), int(element.denominator))


def _rref(m: RatMatrix) -> Tuple[RatMatrix, Tuple[int, ...]]:
    if m.rows == 0 or m.cols == 0:
        return m, ()
    reduced, pivots = _to_domain(m).rref()
    entries = tuple(tuple(_from_domain(x) for x in row) for row in reduced.to_list())
    return RatMatrix(m.rows, m.cols, entries), tuple(pivots)


def rref(m: RatMatrix) -> RatMatrix:
    """Reduced row echelon form over the rationals.

    >>> print(rref(RatMatrix.from_rows([[2, 4], [1, 2]])))
    1 2
    0 0
    """
    return _rref(m)[0]


def kernel_basis(m: RatMatrix) -> List[RatVector]:
    """Basis of the right kernel of ``m``, one vector per free column of its
    reduced row echelon form.

    >>> kernel_basis(RatMatrix.from_rows([[1, 1]]))
    [(Fraction(-1, 1), Fraction(1, 1))]
    """
    reduced, pivots = _rref(m)
    basis = []
    for free in range(m.cols):
        if free in pivots:
            continue
        vector = [Fraction(0)] * m.cols
        vector[free] = Fraction(1)
        for row, pivot in enumerate(pivots):
            vector[pivot] = -reduced.entries[row][free]
        basis.append(tuple(vector))
    return basis


def solve_in_basis(
    basis: Sequence[Sequence], targets: Sequence[Sequence]
) -> List[RatVector]:
    """Express each target as a combination of linearly independent basis
    vectors, all given in the same ambient coordinates.

    Raises:
        AdeError: if the basis is dependent or a target is not in its span
    """
    k = len(basis)
    dim = len(basis[0])
    augmented = RatMatrix.from_rows(
        ([b[i] for b in basis] + [t[i] for t in targets] for i in range(dim)),
        cols=k + len(targets),
    )
    reduced, pivots = _rref(augmented)
    if pivots[:k] != tuple(range(k)):
        raise AdeError("basis", "vectors are linearly dependent")
    solutions = []
    for j in range(len(targets)):
        column = [row[k + j] for row in reduced.entries]
        if any(column[k:]):
            raise AdeError(targets[j], "not in the span of the basis")
        solutions.append(tuple(column[:k]))
    return solutions


def primitive(vector: np.ndarray) -> np.ndarray:
    """Divide an integer vector by the gcd of its entries"""
    divisor = np.gcd.reduce(np.abs(vector))
    return vector // divisor if divisor > 1 else vector


def integer_kernel(m: IntMatrix) -> IntMatrix:
    """Right kernel of an integer matrix as the columns of an integer matrix,
    each column primitive."""
    cols = m.shape[1]
    basis = kernel_basis(RatMatrix.from_rows(m.tolist(), cols=cols))
    columns = []
    for vector in basis:
        scale = np.lcm.reduce([x.denominator for x in vector])
        column = np.array([int(x * int(scale)) for x in vector], dtype=np.int64)
        columns.append(primitive(column))
    if not columns:
        return np.zeros((cols, 0), dtype=np.int64)
    return np.stack(columns, axis=1)


def char_poly(m: IntMatrix) -> UniPoly:
    """Characteristic polynomial det(λI - m), leading coefficient first.

    >>> char_poly(np.array([[-1, -1], [1, 0]]))
    [1, 1, 1]
    """
    n = m.shape[0]
    if m.shape != (n, n):
        raise AdeError(m.shape, "characteristic polynomial needs a square matrix")
    if n == 0:
        return [1]
    rows = [[ZZ(int(x)) for x in row] for row in m]
    return [int(c) for c in DomainMatrix(rows, (n, n), ZZ).charpoly()]


def determinant(m: IntMatrix) -> int:
    """Exact determinant of a square integer matrix"""
    n = m.shape[0]
    if n == 0:
        return 1
    rows = [[ZZ(int(x)) for x in row] for row in m]
    return int(DomainMatrix(rows, (n, n), ZZ).det())


def evaluate_at_matrix(p: UniPoly, m: IntMatrix) -> IntMatrix:
    """Evaluate a polynomial at a square matrix by Horner's rule"""
    result = np.zeros_like(m)
    identity = np.eye(m.shape[0], dtype=m.dtype)
    for coefficient in p:
        result = result @ m + coefficient * identity
    return result


def matrix_order(m: IntMatrix, limit: int = MATRIX_ORDER_LIMIT) -> int:
    """Smallest k > 0 with m^k = I, by exact powering"""
    identity = np.eye(m.shape[0], dtype=m.dtype)
    power = m.copy()
    for k in range(1, limit + 1):
        if np.array_equal(power, identity):
            return k
        power = power @ m
    raise AdeError(m.tolist(), f"no finite order up to {limit}")


@functools.lru_cache(maxsize=None)
def _cyclotomic(d: int) -> Poly:
    return Poly(cyclotomic_poly(d, _LAMBDA), _LAMBDA, domain=ZZ)


def cyclotomic_multiplicities(p: UniPoly, h: int) -> Dict[int, int]:
    """Count the roots of ``p`` that are primitive d-th roots of unity, for
    every d dividing 2h. Each cyclotomic factor Φ_d is divided out as often
    as it goes.

    >>> cyclotomic_multiplicities([1, 1, 1], 3)
    {3: 2}

    Raises:
        AdeError: if something other than a unit is left over, meaning ``p``
            has a root that is not a root of unity of order dividing 2h
    """
    remaining = Poly(p, _LAMBDA, domain=ZZ)
    found: Dict[int, int] = {}
    for d in divisors(2 * h):
        phi = _cyclotomic(d)
        count = 0
        while remaining.degree() >= phi.degree():
            quotient, remainder = remaining.div(phi)
            if not remainder.is_zero:
                break
            remaining = quotient
            count += 1
        if count:
            found[d] = count * phi.degree()
    if remaining.degree() != 0:
        raise AdeError(
            p, f"has roots that are not roots of unity of order dividing {2 * h}"
        )
    return found
