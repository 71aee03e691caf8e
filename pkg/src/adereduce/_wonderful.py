import functools
from collections import Counter
from dataclasses import dataclass
from itertools import combinations
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple, Union

from ._errors import AdeError
from ._roots import AdeType, RootSystem
from ._strata import (
    Flat,
    Key,
    _level,
    _type_of_key,
    closure,
    irreducible_components,
    orbit_sizes,
)


@dataclass(frozen=True)
class DivisorComponent:
    """A boundary divisor of the minimal wonderful blow-up, one for each flat
    with an irreducible sub-root system"""

    flat: Flat
    #: Number of divisors of this kind conjugate to this one under W
    orbit_size: int
    #: Dimension of the stratum whose blow-up creates the divisor
    blowup_level: int

    @property
    def type(self) -> AdeType:
        return self.flat.type_label.factors[0]


@dataclass(frozen=True)
class NestedSet:
    """Irreducible flats whose boundary divisors meet"""

    members: FrozenSet[Flat]


@functools.lru_cache(maxsize=None)
def irreducible_flats(
    rs: RootSystem, max_codim: Optional[int] = None
) -> Tuple[DivisorComponent, ...]:
    """Every flat whose sub-root system is irreducible, in blow-up order:
    smallest stratum first, then by type. Hyperplanes are included as they
    are already divisors. ``max_codim`` leaves out the smaller strata.

    >>> from adereduce import root_system
    >>> [str(d.type) for d in irreducible_flats(root_system("A2"))]
    ['A2', 'A1', 'A1', 'A1']
    """
    divisors = []
    top = rs.rank if max_codim is None else min(max_codim, rs.rank)
    for codim in range(1, top + 1):
        sizes = orbit_sizes(rs, codim)
        for key in sorted(_level(rs, codim)):
            label = _type_of_key(rs, key)
            if label.is_irreducible:
                flat = Flat(key, codim, label)
                divisors.append(DivisorComponent(flat, sizes[key], rs.rank - codim))
    return tuple(
        sorted(
            divisors,
            key=lambda d: (d.blowup_level, d.type.n, d.type, d.flat.root_indices),
        )
    )


def divisor_census(
    rs: RootSystem, max_codim: Optional[int] = None
) -> Dict[AdeType, int]:
    """Number of boundary divisors of each irreducible type, smallest rank
    first"""
    counts = Counter(d.type for d in irreducible_flats(rs, max_codim))
    return {t: counts[t] for t in sorted(counts, key=lambda t: (t.n, t))}


def blowup_order(
    rs: RootSystem, max_codim: Optional[int] = None
) -> List[Tuple[int, List[AdeType]]]:
    """The irreducible strata blown up at each step, by stratum dimension,
    smallest first. Hyperplanes are never blown up so the order stops at
    codimension 2.

    >>> from adereduce import root_system
    >>> order = blowup_order(root_system("A3"))
    >>> [(dim, [str(t) for t in types]) for dim, types in order]
    [(0, ['A3']), (1, ['A2'])]
    """
    steps: Dict[int, List[AdeType]] = {}
    for divisor in irreducible_flats(rs, max_codim):
        if divisor.flat.codim < 2:
            continue
        types = steps.setdefault(divisor.blowup_level, [])
        if divisor.type not in types:
            types.append(divisor.type)
    return [
        (dim, sorted(types, key=lambda t: (t.n, t))) for dim, types in steps.items()
    ]


def divisor_records(
    rs: RootSystem, max_codim: Optional[int] = None
) -> Dict[str, object]:
    """The census as a JSON ready document"""
    return {
        "type": str(rs.type_label),
        "divisors": [
            {"type": str(t), "count": count}
            for t, count in divisor_census(rs, max_codim).items()
        ],
        "blowup_order": [
            {"dim": dim, "types": [str(t) for t in types]}
            for dim, types in blowup_order(rs, max_codim)
        ],
    }


# ----------------------------------------------------------------------------
#   Nested sets


@functools.lru_cache(maxsize=None)
def _split(rs: RootSystem, union: Key) -> FrozenSet[FrozenSet[int]]:
    joined = closure(rs, union)
    return frozenset(frozenset(c) for c in irreducible_components(rs, joined))


def _decomposes(rs: RootSystem, sets: Sequence[FrozenSet[int]]) -> bool:
    # An antichain is fine when its join splits into exactly its members
    union = tuple(sorted(frozenset().union(*sets)))
    return _split(rs, union) == frozenset(sets)


def _is_antichain(sets: Sequence[FrozenSet[int]]) -> bool:
    return not any(a <= b or b <= a for a, b in combinations(sets, 2))


def _check_irreducible(flats: Iterable[Flat]):
    for f in flats:
        if not f.is_irreducible:
            raise AdeError(f.type_label.pretty(), "nested sets hold irreducible flats")


def is_nested(rs: RootSystem, s: Union[NestedSet, Iterable[Flat]]) -> bool:
    """Whether the boundary divisors of a set of irreducible flats meet. Every
    antichain of two or more members, under inclusion of root sets, must
    have a join whose irreducible factors are exactly those members.

    Raises:
        AdeError: if a member is reducible
    """
    flats = list(s.members if isinstance(s, NestedSet) else dict.fromkeys(s))
    _check_irreducible(flats)
    sets = [frozenset(f.root_indices) for f in flats]
    for size in range(2, len(sets) + 1):
        for chosen in combinations(sets, size):
            if _is_antichain(chosen) and not _decomposes(rs, chosen):
                return False
    return True


def _extends(
    rs: RootSystem, nested: Sequence[FrozenSet[int]], new: FrozenSet[int]
) -> bool:
    # Only antichains through the new member need checking
    for size in range(1, len(nested) + 1):
        for chosen in combinations(nested, size):
            candidate = (*chosen, new)
            if _is_antichain(candidate) and not _decomposes(rs, candidate):
                return False
    return True


def max_snc_depth(rs: RootSystem) -> int:
    """Largest number of boundary divisors through one point, by exhaustive
    search over nested sets. Exponential, so only sensible for small rank.

    >>> from adereduce import root_system
    >>> max_snc_depth(root_system("A3"))
    3
    """
    sets = [frozenset(d.flat.root_indices) for d in irreducible_flats(rs)]
    best = 0

    def grow(nested: List[FrozenSet[int]], start: int):
        nonlocal best
        best = max(best, len(nested))
        for i in range(start, len(sets)):
            if _extends(rs, nested, sets[i]):
                grow(nested + [sets[i]], i + 1)

    grow([], 0)
    return best
