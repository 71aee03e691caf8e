import functools
import logging
from collections import Counter
from dataclasses import dataclass
from itertools import combinations
from typing import Dict, Iterable, List, Sequence, Set, Tuple, Union

import numpy as np

from ._errors import AdeError
from ._linalg import integer_kernel
from ._roots import (
    AdeType,
    ProductType,
    RootSystem,
    _components,
    as_product_type,
    cartan_type,
    classify_component,
    root_system,
    simple_reflections,
)
from .types import IntMatrix, TypeLabels

log = logging.getLogger(__name__)

#: A flat is keyed by the sorted indices of the positive roots vanishing on it
Key = Tuple[int, ...]

#: Names of the curve singularities that have one
_SINGULARITY_NAMES = {
    AdeType("A", 1): ("node", "nodes"),
    AdeType("A", 2): ("cusp", "cusps"),
    AdeType("A", 3): ("tacnode", "tacnodes"),
}

_NUMBER_WORDS = ["zero", "one", "two", "three", "four", "five", "six", "seven"]


@dataclass(frozen=True)
class Flat:
    """A stratum of the reflection arrangement, recorded as the positive roots
    of its parabolic sub-root system R ∩ Z^⊥."""

    #: Sorted indices into the positive roots of the ambient system
    root_indices: Key
    #: Dimension of the span of those roots
    codim: int
    #: Type of the sub-root system
    type_label: ProductType

    @property
    def is_irreducible(self) -> bool:
        return self.type_label.is_irreducible


@dataclass(frozen=True)
class StratumClass:
    """One W-orbit of flats"""

    type_label: ProductType
    codim: int
    #: |W : N_W(W_Z)|, counted directly as the size of the orbit
    orbit_size: int
    representative: Flat


@dataclass(frozen=True)
class FiberSingularities:
    """The singularities of the fiber over a generic point of a stratum"""

    configuration: ProductType
    description: str

    def __str__(self):
        return self.description


# ----------------------------------------------------------------------------
#   Type identification


def _code_base(rank: int) -> np.ndarray:
    # Root coordinates lie in [-6, 6] so balanced base 16 digits are unique
    return 16 ** np.arange(rank, dtype=np.int64)


def _decomposition(rs: RootSystem, key: Key) -> List[Tuple[Key, List[int]]]:
    # Irreducible pieces as (positive roots, simple roots), local indices
    roots = rs.positive_roots[list(key)]
    gram = roots @ rs.cartan_matrix @ roots.T
    codes = roots @ _code_base(rs.rank)
    decomposable = np.isin(codes[:, None] - codes[None, :], codes).any(axis=1)
    adjacency = (gram != 0) & ~np.eye(len(key), dtype=bool)
    pieces = []
    for component in _components(adjacency):
        simple = [i for i in component if not decomposable[i]]
        pieces.append((tuple(component), simple))
    return pieces


@functools.lru_cache(maxsize=None)
def _type_of_key(rs: RootSystem, key: Key) -> ProductType:
    roots = rs.positive_roots[list(key)]
    gram = roots @ rs.cartan_matrix @ roots.T
    factors = []
    for component, simple in _decomposition(rs, key):
        sub = gram[np.ix_(simple, simple)]
        branch = bool(((sub != 0).sum(axis=1) >= 4).any())
        factors.append(classify_component(len(simple), len(component), branch))
    return ProductType(tuple(factors))


def flat_type(rs: RootSystem, f: Flat) -> ProductType:
    """Type of the sub-root system of a flat. A simple system is extracted
    as the positive roots that are not a sum of two others, split into
    connected pieces, and each piece is named by its rank, root count and
    whether it branches.

    Raises:
        AdeError: if the root set does not close up into a root system of
            the recorded codimension
    """
    label = _type_of_key(rs, tuple(f.root_indices))
    if label.rank != f.codim:
        raise AdeError(f.root_indices, f"spans rank {label.rank}, not {f.codim}")
    return label


def irreducible_components(
    rs: RootSystem, f: Union[Flat, Iterable[int]]
) -> List[Key]:
    """Root sets of the irreducible factors of a flat's sub-root system"""
    key = tuple(f.root_indices) if isinstance(f, Flat) else tuple(sorted(f))
    return [
        tuple(key[i] for i in component) for component, _ in _decomposition(rs, key)
    ]


# ----------------------------------------------------------------------------
#   The intersection lattice


def _primitive_columns(m: IntMatrix) -> IntMatrix:
    divisors = np.gcd.reduce(np.abs(m), axis=0)
    divisors[divisors == 0] = 1
    return m // divisors


def _row_kernel(v: np.ndarray) -> IntMatrix:
    # v[p] e_j - v[j] e_p for j != p spans the kernel of the row v
    nonzero = np.flatnonzero(v)
    p = nonzero[np.argmin(np.abs(v[nonzero]))]
    k = len(v)
    kernel = np.zeros((k, k - 1), dtype=np.int64)
    for column, j in enumerate(j for j in range(k) if j != p):
        kernel[j, column] = v[p]
        kernel[p, column] = -v[j]
    return kernel


def _pairing(rs: RootSystem) -> IntMatrix:
    # row i pairs positive root i with vectors in simple root coordinates
    return rs.positive_roots @ rs.cartan_matrix


@functools.lru_cache(maxsize=None)
def _level(rs: RootSystem, codim: int) -> Dict[Key, IntMatrix]:
    # Flats of one codimension, each with an integer basis of the flat itself
    if codim == 0:
        return {(): np.eye(rs.rank, dtype=np.int64)}
    pairing = _pairing(rs)
    found: Dict[Key, IntMatrix] = {}
    for key, basis in _level(rs, codim - 1).items():
        covered = set(key)
        for alpha in range(rs.num_positive):
            if alpha in covered:
                continue
            child = _primitive_columns(basis @ _row_kernel(pairing[alpha] @ basis))
            vanishing = ~(pairing @ child).any(axis=1)
            child_key = tuple(np.flatnonzero(vanishing).tolist())
            covered.update(child_key)
            found.setdefault(child_key, child)
    log.debug("%s: %d flats of codimension %d", rs.type_label, len(found), codim)
    return found


def _check_codim(rs: RootSystem, codim: int, lowest: int = 1):
    if not lowest <= codim <= rs.rank:
        raise AdeError(codim, f"codimension must be in {lowest}..{rs.rank}")


def _flat(rs: RootSystem, key: Key, codim: int) -> Flat:
    return Flat(key, codim, _type_of_key(rs, key))


def intersection_lattice(rs: RootSystem, max_codim: int) -> List[Flat]:
    """All flats of codimension 1 to ``max_codim``, built one level at a time:
    each flat of the next level is the closure of a flat of this level cut
    with one more hyperplane. The whole space, at codimension 0, is left out.

    >>> [str(f.type_label) for f in intersection_lattice(root_system("A2"), 2)]
    ['A1', 'A1', 'A1', 'A2']
    """
    _check_codim(rs, max_codim, lowest=0)
    return [
        _flat(rs, key, codim)
        for codim in range(1, max_codim + 1)
        for key in sorted(_level(rs, codim))
    ]


def closure(rs: RootSystem, indices: Iterable[int]) -> Key:
    """The positive roots in the rational span of the given positive roots"""
    chosen = sorted(set(indices))
    pairing = _pairing(rs)
    if not chosen:
        return ()
    flat = integer_kernel(pairing[chosen])
    vanishing = ~(pairing @ flat).any(axis=1)
    return tuple(np.flatnonzero(vanishing).tolist())


def brute_force_lattice(rs: RootSystem) -> Set[Key]:
    """Every flat found by closing every nonempty set of hyperplanes. Only
    practical for a handful of hyperplanes, but needs nothing but linear
    algebra."""
    found = set()
    for size in range(1, rs.num_positive + 1):
        for chosen in combinations(range(rs.num_positive), size):
            found.add(closure(rs, chosen))
    return found


# ----------------------------------------------------------------------------
#   Orbits


@functools.lru_cache(maxsize=None)
def generator_permutations(rs: RootSystem) -> Tuple[np.ndarray, ...]:
    """For each simple reflection, where it sends each positive root, up to
    sign"""
    permutations = []
    for s in simple_reflections(rs):
        images = rs.positive_roots @ s.matrix.T
        permutations.append(
            np.array([rs.positive_index(image) for image in images], dtype=np.int64)
        )
    return tuple(permutations)


def apply_generator(rs: RootSystem, i: int, key: Key) -> Key:
    """Image of a flat under the simple reflection s_i"""
    return tuple(sorted(generator_permutations(rs)[i][list(key)].tolist()))


@functools.lru_cache(maxsize=None)
def _orbits(rs: RootSystem, codim: int) -> Tuple[Tuple[Key, ...], ...]:
    keys = _level(rs, codim)
    unseen = set(keys)
    orbits = []
    for start in sorted(keys):
        if start not in unseen:
            continue
        unseen.discard(start)
        orbit = [start]
        frontier = [start]
        while frontier:
            grown = []
            for key in frontier:
                for i in range(rs.rank):
                    image = apply_generator(rs, i, key)
                    if image not in keys:
                        raise AdeError(image, "image of a flat is not a flat")
                    if image in unseen:
                        unseen.discard(image)
                        orbit.append(image)
                        grown.append(image)
            frontier = grown
        orbits.append(tuple(sorted(orbit)))
    log.debug("%s: %d orbits in codimension %d", rs.type_label, len(orbits), codim)
    return tuple(orbits)


def orbit_sizes(rs: RootSystem, codim: int) -> Dict[Key, int]:
    """Size of the W-orbit of every flat of the given codimension"""
    return {key: len(orbit) for orbit in _orbits(rs, codim) for key in orbit}


def orbit_census(rs: RootSystem, codim: int) -> List[StratumClass]:
    """One `StratumClass` per W-orbit of flats of the given codimension,
    sorted by type and then orbit size

    >>> [(c.type_label.pretty(), c.orbit_size)
    ...  for c in orbit_census(root_system("E6"), 5)]
    [('D5', 27), ('A5', 36), ('A1×A4', 216), ('A1×A2×A2', 360)]
    """
    _check_codim(rs, codim)
    classes = [
        StratumClass(
            _type_of_key(rs, orbit[0]), codim, len(orbit), _flat(rs, orbit[0], codim)
        )
        for orbit in _orbits(rs, codim)
    ]
    return sorted(classes, key=_census_order)


def _census_order(sc: StratumClass):
    key = sc.representative.root_indices
    return (sc.codim, sc.orbit_size, sc.type_label.factors, key)


def has_stratum_of_type(
    ambient: Union[AdeType, ProductType, TypeLabels],
    candidate: Union[ProductType, AdeType, TypeLabels],
) -> bool:
    """Whether some full subdiagram of the ambient Dynkin diagram has
    components of exactly the candidate types, by trying every set of
    vertices of the right size.

    >>> has_stratum_of_type("E6", "A1,A2,A2")
    True
    """
    rs = root_system(ambient)
    target = as_product_type(candidate)
    if target.rank > rs.rank:
        return False
    cartan = rs.cartan_matrix
    return any(
        cartan_type(cartan[np.ix_(chosen, chosen)]) == target
        for chosen in combinations(range(rs.rank), target.rank)
    )


def _count_phrase(count: int, singular: str, plural: str) -> str:
    word = _NUMBER_WORDS[count] if count < len(_NUMBER_WORDS) else str(count)
    return f"{word} {singular if count == 1 else plural}"


def generic_fiber_singularities(sc: StratumClass) -> FiberSingularities:
    """The singularities of the fiber over a generic point of the stratum,
    which are exactly the factors of its type

    >>> str(generic_fiber_singularities(
    ...     orbit_census(root_system("E6"), 5)[-1]))
    'precisely two cusps and one node'
    """
    counts = Counter(sc.type_label.factors)
    phrases = []
    for factor in sorted(counts, reverse=True):
        singular, plural = _SINGULARITY_NAMES.get(
            factor,
            (f"singularity of type {factor}", f"singularities of type {factor}"),
        )
        phrases.append(_count_phrase(counts[factor], singular, plural))
    if len(phrases) > 1:
        listing = ", ".join(phrases[:-1]) + " and " + phrases[-1]
    else:
        listing = phrases[0]
    return FiberSingularities(sc.type_label, f"precisely {listing}")


# ----------------------------------------------------------------------------
#   Census output


def census_records(census: Sequence[StratumClass]) -> List[Dict[str, object]]:
    """JSON ready records, ``flat_count`` being the number of flats of the
    same type and codimension over all orbits"""
    totals: Counter = Counter()
    for sc in census:
        totals[sc.codim, sc.type_label] += sc.orbit_size
    return [
        {
            "type": str(sc.type_label),
            "codim": sc.codim,
            "orbit_size": sc.orbit_size,
            "flat_count": totals[sc.codim, sc.type_label],
        }
        for sc in census
    ]


def census_table(census: Sequence[StratumClass]) -> str:
    """Aligned text table, one row per type and codimension with the orbit
    sizes merged"""
    merged: Dict[Tuple[int, ProductType], List[int]] = {}
    for sc in census:
        merged.setdefault((sc.codim, sc.type_label), []).append(sc.orbit_size)
    rows = [("Type", "Codim", "Orbits", "Count")]
    for (codim, label), sizes in sorted(
        merged.items(), key=lambda item: (item[0][0], item[0][1].factors)
    ):
        rows.append((label.pretty(), str(codim), str(len(sizes)), str(sum(sizes))))
    widths = [max(len(row[i]) for row in rows) for i in range(4)]
    return "\n".join(
        " | ".join(cell.ljust(width) for cell, width in zip(row, widths)).rstrip()
        for row in rows
    )
