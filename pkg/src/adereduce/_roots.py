import functools
import logging
import re
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product
from math import gcd, prod
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

import numpy as np
from sympy import totient

from ._errors import AdeError
from ._linalg import (
    char_poly,
    cyclotomic_multiplicities,
    determinant,
    matrix_order,
    solve_in_basis,
)
from .types import IntMatrix, RatVector, TypeLabels

log = logging.getLogger(__name__)

#: Explicit Weyl group enumeration refuses larger ranks unless forced
GROUP_ENUMERATION_MAX_RANK = 6

#: Number of positive roots of the exceptional types, used to tell them apart
#: from D types of the same rank
_E_POSITIVE_ROOTS = {6: 36, 7: 63, 8: 120}

_LABEL = re.compile(r"^\s*([ADEade])\s*_?\s*(\d+)\s*$")


# ----------------------------------------------------------------------------
#   Type labels


@dataclass(frozen=True, order=True)
class AdeType:
    """An irreducible simply laced type such as A5, D4 or E6. The index is
    the rank, which is also the Milnor number of the singularity."""

    family: str
    n: int

    def __post_init__(self):
        if self.family not in ("A", "D", "E"):
            raise AdeError(f"{self.family}{self.n}", "family must be A, D or E")
        if self.family == "A" and self.n < 1:
            raise AdeError(self, "A_n needs n >= 1")
        if self.family == "D" and self.n < 4:
            raise AdeError(self, "D_n needs n >= 4")
        if self.family == "E" and self.n not in (6, 7, 8):
            raise AdeError(self, "E_n needs n in 6, 7, 8")

    @classmethod
    def parse(cls, text: str) -> "AdeType":
        """Parse a label like ``"E6"``, ``"a_3"`` or ``"D 4"``"""
        match = _LABEL.match(text)
        if not match:
            raise AdeError(text, "not an ADE type label")
        return cls(match.group(1).upper(), int(match.group(2)))

    @property
    def rank(self) -> int:
        return self.n

    @property
    def is_a_even(self) -> bool:
        """True for A_n with n even, the types whose Coxeter number is odd"""
        return self.family == "A" and self.n % 2 == 0

    def __str__(self):
        return f"{self.family}{self.n}"


@dataclass(frozen=True)
class ProductType:
    """A nonempty multiset of irreducible types, stored sorted so that two
    products are equal exactly when they have the same factors."""

    factors: Tuple[AdeType, ...]

    def __post_init__(self):
        if not self.factors:
            raise AdeError("ProductType", "needs at least one factor")
        object.__setattr__(self, "factors", tuple(sorted(self.factors)))

    @classmethod
    def of(cls, *factors: Union[AdeType, str]) -> "ProductType":
        return cls(tuple(as_ade_type(f) for f in factors))

    @classmethod
    def parse(cls, labels: TypeLabels) -> "ProductType":
        """Parse ``"A1,A2,A2"``, ``"A1xA2xA2"`` or a list of labels. Whitespace
        is ignored and the factors are sorted."""
        if isinstance(labels, str):
            labels = [x for x in re.split(r"[,x×*]", labels) if x.strip()]
        return cls(tuple(AdeType.parse(label) for label in labels))

    @property
    def rank(self) -> int:
        return sum(f.n for f in self.factors)

    @property
    def is_irreducible(self) -> bool:
        return len(self.factors) == 1

    def pretty(self) -> str:
        return "×".join(str(f) for f in self.factors)

    def __lt__(self, other: "ProductType") -> bool:
        return (self.rank, self.factors) < (other.rank, other.factors)

    def __str__(self):
        return ",".join(str(f) for f in self.factors)


def as_ade_type(t: Union[AdeType, str]) -> AdeType:
    return t if isinstance(t, AdeType) else AdeType.parse(t)


def as_product_type(t: Union[ProductType, AdeType, TypeLabels]) -> ProductType:
    if isinstance(t, ProductType):
        return t
    if isinstance(t, AdeType):
        return ProductType((t,))
    return ProductType.parse(t)


def classify_component(rank: int, positive_roots: int, branch: bool) -> AdeType:
    """Name an irreducible simply laced root system from its rank, its number
    of positive roots and whether its Dynkin diagram has a branch vertex."""
    if not branch and positive_roots == rank * (rank + 1) // 2:
        return AdeType("A", rank)
    if branch and rank >= 4 and positive_roots == rank * (rank - 1):
        return AdeType("D", rank)
    if branch and _E_POSITIVE_ROOTS.get(rank) == positive_roots:
        return AdeType("E", rank)
    raise AdeError(
        f"rank {rank}, {positive_roots} positive roots, branch={branch}",
        "not an ADE component",
    )


def _components(adjacency: np.ndarray) -> List[List[int]]:
    unseen = set(range(len(adjacency)))
    components = []
    while unseen:
        stack = [min(unseen)]
        unseen.discard(stack[0])
        component = []
        while stack:
            vertex = stack.pop()
            component.append(vertex)
            for other in np.flatnonzero(adjacency[vertex]):
                if int(other) in unseen:
                    unseen.discard(int(other))
                    stack.append(int(other))
        components.append(sorted(component))
    return components


def _positive_root_count(cartan: IntMatrix) -> int:
    # Simply laced: beta + alpha_i is a root iff (beta, alpha_i) = -1
    n = len(cartan)
    simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    found = set(simple)
    frontier = simple
    while frontier:
        grown = []
        for beta in frontier:
            pairing = cartan @ np.array(beta)
            for i in np.flatnonzero(pairing == -1):
                gamma = tuple(b + int(j == i) for j, b in enumerate(beta))
                if gamma not in found:
                    found.add(gamma)
                    grown.append(gamma)
        frontier = grown
    return len(found)


def cartan_type(cartan: IntMatrix) -> ProductType:
    """Identify the type of a simply laced Cartan matrix, one factor per
    connected component of its Dynkin diagram."""
    adjacency = (cartan != 0) & ~np.eye(len(cartan), dtype=bool)
    factors = []
    for component in _components(adjacency):
        sub = cartan[np.ix_(component, component)]
        degrees = adjacency[np.ix_(component, component)].sum(axis=1)
        factors.append(
            classify_component(
                len(component), _positive_root_count(sub), bool((degrees >= 3).any())
            )
        )
    return ProductType(tuple(factors))


# ----------------------------------------------------------------------------
#   Realizations


def _unit(dim: int, i: int, scale: int = 1) -> List[Fraction]:
    vector = [Fraction(0)] * dim
    vector[i] = Fraction(scale)
    return vector


def _plus_minus_pairs(dim: int) -> List[RatVector]:
    roots = []
    for i, j in combinations(range(dim), 2):
        for si, sj in product((1, -1), repeat=2):
            vector = _unit(dim, i, si)
            vector[j] = Fraction(sj)
            roots.append(tuple(vector))
    return roots


def _e8_roots() -> List[RatVector]:
    half = Fraction(1, 2)
    roots = _plus_minus_pairs(8)
    for signs in product((1, -1), repeat=8):
        if signs.count(-1) % 2 == 0:
            roots.append(tuple(half * s for s in signs))
    return roots


def _e8_simple_roots() -> List[RatVector]:
    half = Fraction(1, 2)
    simple = [tuple([half] + [-half] * 6 + [half])]
    first = _unit(8, 0)
    first[1] = Fraction(1)
    simple.append(tuple(first))
    for i in range(6):
        vector = _unit(8, i + 1)
        vector[i] = Fraction(-1)
        simple.append(tuple(vector))
    return simple


def _realization(t: AdeType) -> Tuple[int, List[RatVector], List[RatVector]]:
    n = t.n
    if t.family == "A":
        dim = n + 1
        roots = []
        for i in range(dim):
            for j in range(dim):
                if i != j:
                    vector = _unit(dim, i)
                    vector[j] = Fraction(-1)
                    roots.append(tuple(vector))
        simple = []
        for i in range(n):
            vector = _unit(dim, i)
            vector[i + 1] = Fraction(-1)
            simple.append(tuple(vector))
        return dim, roots, simple
    if t.family == "D":
        simple = []
        for i in range(n - 1):
            vector = _unit(n, i)
            vector[i + 1] = Fraction(-1)
            simple.append(tuple(vector))
        last = _unit(n, n - 2)
        last[n - 1] = Fraction(1)
        simple.append(tuple(last))
        return n, _plus_minus_pairs(n), simple
    # E7 and E6 are the parts of E8 orthogonal to e7+e8, and also to e6+e8
    roots = _e8_roots()
    if n <= 7:
        roots = [r for r in roots if r[6] + r[7] == 0]
    if n == 6:
        roots = [r for r in roots if r[5] + r[7] == 0]
    return 8, roots, _e8_simple_roots()[:n]


# ----------------------------------------------------------------------------
#   Root systems


@dataclass(frozen=True, eq=False)
class RootSystem:
    """A simply laced root system. Roots are stored twice: as exact vectors
    in the standard realization and as integer coordinates with respect to
    the simple roots. Positive roots come first, sorted by height, and the
    negative of root ``i`` is root ``i + num_positive``."""

    #: The canonical product of irreducible factors
    type_label: ProductType
    #: Dimension of the realization
    ambient_dim: int
    #: Simple roots in Bourbaki order, in the realization
    simple_roots: Tuple[RatVector, ...]
    #: Every root in the realization, in the same order as `roots`
    ambient_roots: Tuple[RatVector, ...]
    #: Simple root coordinates, one row per root
    roots: IntMatrix
    #: Symmetric Cartan matrix, which is also the Gram matrix of the simple roots
    cartan_matrix: IntMatrix

    @property
    def rank(self) -> int:
        return len(self.simple_roots)

    @property
    def num_positive(self) -> int:
        return len(self.roots) // 2

    @property
    def num_hyperplanes(self) -> int:
        return self.num_positive

    @property
    def positive_roots(self) -> IntMatrix:
        return self.roots[: self.num_positive]

    @functools.cached_property
    def _index(self) -> Dict[Tuple[int, ...], int]:
        return {tuple(int(x) for x in root): i for i, root in enumerate(self.roots)}

    def root_index(self, coordinates: Iterable[int]) -> int:
        """Index of the root with the given simple root coordinates"""
        key = tuple(int(x) for x in coordinates)
        try:
            return self._index[key]
        except KeyError:
            raise AdeError(key, f"not a root of {self.type_label}") from None

    def positive_index(self, coordinates: Iterable[int]) -> int:
        """Index of the positive root among plus or minus the given root"""
        return self.root_index(coordinates) % self.num_positive

    def inner_product(self, a: IntMatrix, b: IntMatrix) -> IntMatrix:
        return a @ self.cartan_matrix @ b.T

    def __repr__(self):
        return f"RootSystem({str(self.type_label)!r})"


def _build(label: ProductType) -> RootSystem:
    realizations = [_realization(f) for f in label.factors]
    dim = sum(r[0] for r in realizations)
    rank = label.rank
    zero = (Fraction(0),)
    simple: List[RatVector] = []
    realization: Dict[Tuple[int, ...], RatVector] = {}
    start = offset = 0
    for factor, (fdim, froots, fsimple) in zip(label.factors, realizations):
        head, tail = zero * start, zero * (dim - start - fdim)
        simple.extend(head + tuple(v) + tail for v in fsimple)
        for vector, coeffs in zip(froots, solve_in_basis(fsimple, froots)):
            if any(c.denominator != 1 for c in coeffs):
                raise AdeError(factor, "root is not an integer combination")
            full = [0] * rank
            full[offset : offset + factor.n] = [int(c) for c in coeffs]
            realization[tuple(full)] = head + tuple(vector) + tail
        start += fdim
        offset += factor.n
    positive = []
    for c in realization:
        if all(x >= 0 for x in c):
            positive.append(c)
        elif not all(x <= 0 for x in c):
            raise AdeError(label, f"root {c} has coefficients of both signs")
    positive.sort(key=lambda c: (sum(c), c))
    ordered = positive + [tuple(-x for x in c) for c in positive]
    cartan = np.array(
        [[int(sum(a * b for a, b in zip(x, y))) for y in simple] for x in simple],
        dtype=np.int64,
    )
    return RootSystem(
        type_label=label,
        ambient_dim=dim,
        simple_roots=tuple(simple),
        ambient_roots=tuple(realization[c] for c in ordered),
        roots=np.array(ordered, dtype=np.int64).reshape(len(ordered), rank),
        cartan_matrix=cartan,
    )


@functools.lru_cache(maxsize=None)
def _cached_build(label: ProductType) -> RootSystem:
    rs = _build(label)
    log.debug(
        "Built %s: %d roots in dimension %d", label, len(rs.roots), rs.ambient_dim
    )
    return rs


def build_root_system(t: Union[AdeType, str]) -> RootSystem:
    """The root system of an irreducible type in its standard realization:
    e_i - e_j for A_n, ±e_i ± e_j for D_n and the even E8 lattice for the E
    types, with E7 and E6 cut out as the roots orthogonal to e7+e8 and also
    to e6+e8. Simple roots follow Bourbaki's labelling.

    >>> build_root_system("E6").num_hyperplanes
    36
    """
    return _cached_build(ProductType((as_ade_type(t),)))


def product_root_system(ts: Sequence[Union[AdeType, str]]) -> RootSystem:
    """Orthogonal direct sum of irreducible root systems, with factors in
    canonical order"""
    if not ts:
        raise AdeError("product_root_system", "needs at least one factor")
    return _cached_build(ProductType(tuple(as_ade_type(t) for t in ts)))


def root_system(t: Union[ProductType, AdeType, TypeLabels]) -> RootSystem:
    """Root system for anything that names a type or a product of types"""
    return _cached_build(as_product_type(t))


# ----------------------------------------------------------------------------
#   Weyl group elements


@dataclass(frozen=True, eq=False)
class WeylElement:
    """A Weyl group element acting on simple root coordinates, optionally
    with a word in the simple reflections (0-based) that produces it."""

    matrix: IntMatrix
    word: Optional[Tuple[int, ...]] = None

    def __matmul__(self, other: "WeylElement") -> "WeylElement":
        word = None
        if self.word is not None and other.word is not None:
            word = self.word + other.word
        return WeylElement(self.matrix @ other.matrix, word)

    def __pow__(self, k: int) -> "WeylElement":
        if k < 0:
            raise AdeError(k, "negative powers are not supported")
        word = None if self.word is None else self.word * k
        return WeylElement(np.linalg.matrix_power(self.matrix, k), word)

    def __eq__(self, other):
        return isinstance(other, WeylElement) and np.array_equal(
            self.matrix, other.matrix
        )

    def __hash__(self):
        return hash(self.matrix.tobytes())

    @property
    def is_identity(self) -> bool:
        return np.array_equal(self.matrix, np.eye(len(self.matrix), dtype=np.int64))

    def order(self) -> int:
        return matrix_order(self.matrix)

    def determinant(self) -> int:
        return determinant(self.matrix)

    def length(self, rs: RootSystem) -> int:
        """Number of positive roots sent to negative roots"""
        images = self.matrix @ rs.positive_roots.T
        return int((images < 0).any(axis=0).sum())

    def root_permutation(self, rs: RootSystem) -> np.ndarray:
        """Index of the image of every root

        Raises:
            AdeError: if some image is not a root
        """
        images = rs.roots @ self.matrix.T
        return np.array([rs.root_index(image) for image in images], dtype=np.int64)

    def permutes_roots(self, rs: RootSystem) -> bool:
        try:
            permutation = self.root_permutation(rs)
        except AdeError:
            return False
        return len(set(permutation.tolist())) == len(rs.roots)

    def __repr__(self):
        return f"WeylElement({self.matrix.tolist()}, word={self.word})"


def _identity(rs: RootSystem) -> WeylElement:
    return WeylElement(np.eye(rs.rank, dtype=np.int64), ())


def _reflection_matrix(rs: RootSystem, root: IntMatrix) -> IntMatrix:
    # s(v) = v - (v, root) root, with (v, root) = root^T C v
    return np.eye(rs.rank, dtype=np.int64) - np.outer(root, root @ rs.cartan_matrix)


def reflection(rs: RootSystem, root_index: int) -> WeylElement:
    """The reflection in the root with the given index into ``rs.roots``"""
    if not 0 <= root_index < len(rs.roots):
        raise AdeError(root_index, f"root index out of range for {rs.type_label}")
    root = rs.roots[root_index]
    word = None
    if root.sum() in (1, -1):
        word = (int(np.flatnonzero(root)[0]),)
    return WeylElement(_reflection_matrix(rs, root), word)


def simple_reflections(rs: RootSystem) -> List[WeylElement]:
    """The generators s_1, ..., s_n, in Bourbaki order"""
    identity = np.eye(rs.rank, dtype=np.int64)
    return [
        WeylElement(_reflection_matrix(rs, identity[i]), (i,)) for i in range(rs.rank)
    ]


def braid_relations_hold(rs: RootSystem) -> bool:
    """Check s_i² = 1 and the braid relations with m_ij letters on each side"""
    gens = [s.matrix for s in simple_reflections(rs)]
    identity = np.eye(rs.rank, dtype=np.int64)
    for i in range(rs.rank):
        if not np.array_equal(gens[i] @ gens[i], identity):
            return False
        for j in range(i + 1, rs.rank):
            m = 3 if rs.cartan_matrix[i, j] == -1 else 2
            left = [gens[i], gens[j]] * m
            right = [gens[j], gens[i]] * m
            if not np.array_equal(
                functools.reduce(np.matmul, left[:m]),
                functools.reduce(np.matmul, right[:m]),
            ):
                return False
    return True


def coxeter_element(rs: RootSystem) -> WeylElement:
    """The product s_1 s_2 ... s_n of all simple reflections in order"""
    element = _identity(rs)
    for s in simple_reflections(rs):
        element = element @ s
    return element


def coxeter_number(t: Union[AdeType, str]) -> int:
    """Order of the Coxeter element, found by exact matrix powering

    >>> coxeter_number("E6")
    12
    """
    return coxeter_element(build_root_system(t)).order()


def longest_element(rs: RootSystem) -> WeylElement:
    """The element sending every positive root to a negative root. Built by
    multiplying on the right by any s_i with w(α_i) positive, which raises the
    length by one each time, so the word is reduced."""
    element = _identity(rs)
    gens = simple_reflections(rs)
    while True:
        for i, s in enumerate(gens):
            if (element.matrix[:, i] >= 0).all():
                element = element @ s
                break
        else:
            return element


def exponents(t: Union[AdeType, str]) -> List[int]:
    """The m_j for which exp(2πi m_j / h) is an eigenvalue of the Coxeter
    element, read off the cyclotomic factorization of its characteristic
    polynomial.

    >>> exponents("E6")
    [1, 4, 5, 7, 8, 11]
    """
    c = coxeter_element(build_root_system(t)).matrix
    h = matrix_order(c)
    found = []
    for d, count in cyclotomic_multiplicities(char_poly(c), h).items():
        if h % d:
            raise AdeError(t, f"Coxeter element has an eigenvalue of order {d}")
        repeat = count // int(totient(d))
        for m in range(h):
            if h // gcd(m, h) == d:
                found.extend([m] * repeat)
    return sorted(found)


def weyl_group_order(t: Union[ProductType, AdeType, TypeLabels]) -> int:
    """|W| as the product of (m_j + 1) over the exponents of each factor

    >>> weyl_group_order("A1,A2")
    12
    """
    label = as_product_type(t)
    return prod(prod(m + 1 for m in exponents(f)) for f in label.factors)


# ----------------------------------------------------------------------------
#   Explicit group enumeration


def enumerate_group(rs: RootSystem, force: bool = False) -> IntMatrix:
    """Every element of the Weyl group, as a stack of matrices, by breadth
    first closure under the simple reflections.

    Raises:
        AdeError: if the rank exceeds `GROUP_ENUMERATION_MAX_RANK` and
            ``force`` is not given
    """
    if rs.rank > GROUP_ENUMERATION_MAX_RANK and not force:
        raise AdeError(
            rs.type_label,
            f"group enumeration is limited to rank {GROUP_ENUMERATION_MAX_RANK}",
        )
    gens = [s.matrix for s in simple_reflections(rs)]
    identity = np.eye(rs.rank, dtype=np.int64)
    seen = {identity.tobytes(): identity}
    frontier = [identity]
    while frontier:
        grown = []
        for element in frontier:
            for s in gens:
                image = element @ s
                key = image.tobytes()
                if key not in seen:
                    seen[key] = image
                    grown.append(image)
        frontier = grown
    log.debug("Enumerated %d elements of W(%s)", len(seen), rs.type_label)
    return np.stack(list(seen.values()))


def find_conjugator(
    rs: RootSystem, x: WeylElement, y: WeylElement, force: bool = False
) -> Optional[WeylElement]:
    """Some g with g x g⁻¹ = y, or None if x and y are not conjugate"""
    elements = enumerate_group(rs, force=force)
    matches = np.all(elements @ x.matrix == y.matrix @ elements, axis=(1, 2))
    hits = np.flatnonzero(matches)
    if len(hits) == 0:
        return None
    return WeylElement(elements[hits[0]])


def is_conjugate(
    rs: RootSystem, x: WeylElement, y: WeylElement, force: bool = False
) -> bool:
    return find_conjugator(rs, x, y, force=force) is not None
