from collections import Counter

import pytest

from adereduce import (
    AdeError,
    Flat,
    ProductType,
    brute_force_lattice,
    census_records,
    census_table,
    closure,
    flat_type,
    generic_fiber_singularities,
    has_stratum_of_type,
    intersection_lattice,
    irreducible_components,
    orbit_census,
    root_system,
    weyl_group_order,
)
from adereduce._strata import apply_generator

from .conftest import RANK_SIX_TYPES

# One-dimensional strata of the E6 arrangement
E6_CODIM_5 = {"D5": 27, "A5": 36, "A1×A4": 216, "A1×A2×A2": 360}


def test_e6_one_dimensional_strata(e6) -> None:
    census = orbit_census(e6, 5)
    assert E6_CODIM_5 == {sc.type_label.pretty(): sc.orbit_size for sc in census}
    assert [27, 36, 216, 360] == [sc.orbit_size for sc in census]


def test_orbit_sizes_add_up_to_the_level(a3) -> None:
    for codim in range(1, 4):
        flats = [f for f in intersection_lattice(a3, codim) if f.codim == codim]
        census = orbit_census(a3, codim)
        assert len(flats) == sum(sc.orbit_size for sc in census)


def test_a3_codim_two(a3) -> None:
    census = orbit_census(a3, 2)
    assert [("A1×A1", 3), ("A2", 4)] == [
        (sc.type_label.pretty(), sc.orbit_size) for sc in census
    ]


@pytest.mark.parametrize("label", ["A2", "A3", "A1,A2", "D4"])
def test_lattice_matches_brute_force(label: str) -> None:
    rs = root_system(label)
    built = {f.root_indices for f in intersection_lattice(rs, rs.rank)}
    assert brute_force_lattice(rs) == built


def test_lattice_counts(a3) -> None:
    flats = intersection_lattice(a3, 3)
    assert {1: 6, 2: 7, 3: 1} == dict(Counter(f.codim for f in flats))


def test_codim_out_of_range(a3) -> None:
    with pytest.raises(AdeError):
        orbit_census(a3, 4)
    with pytest.raises(AdeError):
        orbit_census(a3, 0)


def test_closure(a2) -> None:
    assert (0,) == closure(a2, [0])
    assert (0, 1, 2) == closure(a2, [0, 1])
    assert () == closure(a2, [])


def test_flat_type_and_components(a3) -> None:
    for f in intersection_lattice(a3, 3):
        assert f.type_label == flat_type(a3, f)
        assert len(f.type_label.factors) == len(irreducible_components(a3, f))


def test_flat_type_rejects_wrong_codim(a2) -> None:
    wrong = Flat((0,), 2, ProductType.parse("A1"))
    with pytest.raises(AdeError):
        flat_type(a2, wrong)


@pytest.mark.parametrize(
    "ambient, candidate, expected",
    [
        ("E6", "A1,A2,A2", True),
        ("E6", "D5", True),
        ("E6", "D6", False),
        ("E6", "A6", False),
        ("A3", "A1,A1", True),
        ("A3", "A1,A1,A1", False),
        ("D4", "A1,A1,A1", True),
    ],
)
def test_has_stratum_of_type(ambient: str, candidate: str, expected: bool) -> None:
    assert expected == has_stratum_of_type(ambient, candidate)


def test_generic_fiber_singularities(e6) -> None:
    descriptions = [str(generic_fiber_singularities(sc)) for sc in orbit_census(e6, 5)]
    assert [
        "precisely one singularity of type D5",
        "precisely one singularity of type A5",
        "precisely one singularity of type A4 and one node",
        "precisely two cusps and one node",
    ] == descriptions


def test_census_records_and_table(a3) -> None:
    census = orbit_census(a3, 2)
    assert [
        {"type": "A1,A1", "codim": 2, "orbit_size": 3, "flat_count": 3},
        {"type": "A2", "codim": 2, "orbit_size": 4, "flat_count": 4},
    ] == census_records(census)
    assert (
        "Type  | Codim | Orbits | Count\n"
        "A1×A1 | 2     | 1      | 3\n"
        "A2    | 2     | 1      | 4"
    ) == census_table(census)


def stratum_types(label: str) -> set:
    rs = root_system(label)
    return {
        sc.type_label
        for codim in range(1, rs.rank + 1)
        for sc in orbit_census(rs, codim)
    }


@pytest.mark.parametrize("label", RANK_SIX_TYPES)
def test_orbit_sizes_divide_the_group_order(label: str) -> None:
    rs = root_system(label)
    order = weyl_group_order(label)
    for codim in range(1, rs.rank + 1):
        for sc in orbit_census(rs, codim):
            assert 0 == order % sc.orbit_size


@pytest.mark.parametrize("label", RANK_SIX_TYPES)
def test_census_matches_subdiagrams(label: str) -> None:
    found = stratum_types(label)
    candidates = set().union(*(stratum_types(t) for t in RANK_SIX_TYPES))
    for candidate in sorted(candidates):
        assert (candidate in found) is has_stratum_of_type(label, candidate)


@pytest.mark.parametrize("label", ["A4", "D4", "A1,A3", "D5", "E6"])
def test_flat_type_is_invariant_under_generators(label: str) -> None:
    rs = root_system(label)
    for f in intersection_lattice(rs, rs.rank):
        for i in range(rs.rank):
            image = Flat(apply_generator(rs, i, f.root_indices), f.codim, f.type_label)
            assert f.type_label == flat_type(rs, image)
