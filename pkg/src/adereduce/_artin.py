import re
from dataclasses import dataclass
from typing import Dict, Iterable, Tuple

import numpy as np

from ._errors import AdeError
from ._roots import (
    GROUP_ENUMERATION_MAX_RANK,
    RootSystem,
    WeylElement,
    coxeter_element,
    is_conjugate,
    longest_element,
    simple_reflections,
)
from .types import Letter

_TOKEN = re.compile(r"^t(\d+)(?:\^(-?1))?$")


@dataclass(frozen=True)
class ArtinWord:
    """A word in the Artin generators t_i and their inverses. Letters hold
    0-based generator indices; the text form counts from 1, as in
    ``"t1 t2 t1^-1"``."""

    letters: Tuple[Letter, ...] = ()

    @classmethod
    def parse(cls, text: str) -> "ArtinWord":
        """Parse whitespace separated ``t<i>`` or ``t<i>^-1`` tokens. The empty
        word is written ``e``.

        >>> ArtinWord.parse("t1 t2 t1^-1").letters
        ((0, 1), (1, 1), (0, -1))
        """
        letters = []
        for token in text.split():
            if token == "e":
                continue
            match = _TOKEN.match(token)
            if not match or int(match.group(1)) < 1:
                raise AdeError(token, "expected t<i> or t<i>^-1 with i >= 1")
            exponent = -1 if match.group(2) == "-1" else 1
            letters.append((int(match.group(1)) - 1, exponent))
        return cls(tuple(letters))  # type: ignore[arg-type]

    @classmethod
    def positive(cls, indices: Iterable[int]) -> "ArtinWord":
        return cls(tuple((int(i), 1) for i in indices))

    def __str__(self):
        if not self.letters:
            return "e"
        return " ".join(
            f"t{i + 1}" if e == 1 else f"t{i + 1}^-1" for i, e in self.letters
        )

    def __len__(self):
        return len(self.letters)

    def __mul__(self, other: "ArtinWord") -> "ArtinWord":
        return ArtinWord(self.letters + other.letters)

    def __pow__(self, k: int) -> "ArtinWord":
        if k < 0:
            return self.inverse() ** -k
        return ArtinWord(self.letters * k)

    def inverse(self) -> "ArtinWord":
        letters = tuple((i, -e) for i, e in reversed(self.letters))
        return ArtinWord(letters)  # type: ignore[arg-type]

    @property
    def is_positive(self) -> bool:
        return all(e == 1 for _, e in self.letters)

    def free_reduce(self) -> "ArtinWord":
        """Cancel adjacent t_i t_i^-1 pairs until none are left"""
        stack: list = []
        for letter in self.letters:
            if stack and stack[-1] == (letter[0], -letter[1]):
                stack.pop()
            else:
                stack.append(letter)
        return ArtinWord(tuple(stack))


def project_to_weyl(rs: RootSystem, w: ArtinWord) -> WeylElement:
    """Image in the Weyl group, where t_i and its inverse both go to s_i"""
    gens = simple_reflections(rs)
    matrix = np.eye(rs.rank, dtype=np.int64)
    for i, _ in w.letters:
        if not 0 <= i < rs.rank:
            raise AdeError(f"t{i + 1}", f"no such generator in rank {rs.rank}")
        matrix = matrix @ gens[i].matrix
    return WeylElement(matrix, tuple(i for i, _ in w.letters))


def artin_coxeter_element(rank: int) -> ArtinWord:
    """Π = t_1 t_2 ... t_n

    >>> str(artin_coxeter_element(3))
    't1 t2 t3'
    """
    if rank < 1:
        raise AdeError(rank, "rank must be at least 1")
    return ArtinWord.positive(range(rank))


def garside_element(rs: RootSystem) -> ArtinWord:
    """The positive lift 𝔇 of a reduced word for the longest element"""
    word = longest_element(rs).word
    assert word is not None
    return ArtinWord.positive(word)


def generic_origin_loop(rs: RootSystem) -> ArtinWord:
    """Π^h, the class up to conjugacy of a small loop around the origin in
    the Weyl cover"""
    h = coxeter_element(rs).order()
    return artin_coxeter_element(rs.rank) ** h


def braid_relation_words(i: int, j: int, m: int) -> Tuple[ArtinWord, ArtinWord]:
    """The two sides t_i t_j t_i ... = t_j t_i t_j ... with m letters each"""
    left = ArtinWord.positive([i, j] * m)
    right = ArtinWord.positive([j, i] * m)
    return ArtinWord(left.letters[:m]), ArtinWord(right.letters[:m])


def weyl_shadows(rs: RootSystem, force: bool = False) -> Dict[str, bool]:
    """Check in W the images of the identities relating Π and 𝔇. The
    conjugacy check enumerates the group, so it is only made for even h and
    small rank (or when forced)."""
    h = coxeter_element(rs).order()
    pi = artin_coxeter_element(rs.rank)
    garside = project_to_weyl(rs, garside_element(rs))
    checks = {
        "garside_squared_is_identity": (garside @ garside).is_identity,
        "origin_loop_is_identity": project_to_weyl(rs, pi**h).is_identity,
        "braid_relations": all(
            project_to_weyl(rs, left) == project_to_weyl(rs, right)
            for left, right in (
                braid_relation_words(
                    i, j, 3 if rs.cartan_matrix[i, j] == -1 else 2
                )
                for i in range(rs.rank)
                for j in range(i + 1, rs.rank)
            )
        ),
    }
    if h % 2 == 0 and (rs.rank <= GROUP_ENUMERATION_MAX_RANK or force):
        half = project_to_weyl(rs, pi ** (h // 2))
        checks["half_loop_conjugate_to_longest"] = is_conjugate(
            rs, half, garside, force=force
        )
    return checks
