from fractions import Fraction
from typing import (
    TYPE_CHECKING,
    Dict,
    List,
    Literal,
    Mapping,
    Sequence,
    Tuple,
    Union,
)

import numpy as np

if TYPE_CHECKING:
    from ._poly import MPoly

#: A dense integer matrix. Weyl elements act on simple-root coordinates, so
#: column ``i`` of a Weyl element is the image of the simple root ``i``.
#:
#: ============== ==========================================================
#: dtype          ``numpy.int64``
#: shape          ``(rank, rank)`` for group elements, ``(k, rank)`` for
#:                stacked root coordinates
#: ============== ==========================================================
IntMatrix = np.ndarray

#: An exact rational vector, one `fractions.Fraction` per coordinate
RatVector = Tuple[Fraction, ...]

#: An integer polynomial in one variable, as its coefficient list with the
#: leading coefficient first, so ``[1, 1, 1]`` is λ²+λ+1
UniPoly = List[int]

#: A letter of an Artin word: a 0-based generator index and an exponent
#:
#: ====== ================================
#: +1     the positive generator ``t_i``
#: -1     its inverse ``t_i^-1``
#: ====== ================================
Letter = Tuple[int, Literal[1, -1]]

#: A monomial as an exponent vector, aligned with the variables of the
#: polynomial it belongs to
Monomial = Tuple[int, ...]

#: The sparse terms of a polynomial, mapping each exponent vector to its
#: nonzero integer coefficient
Terms = Dict[Monomial, int]

#: A value that can stand in a polynomial position: an `MPoly` or an integer
#: constant
PolyLike = Union["MPoly", int]

#: A substitution for `substitute`, from variable name to its image
Bindings = Mapping[str, PolyLike]

#: Which local cover of a normal crossing boundary to write down
#:
#: ================ =========================================================
#: "double"         the single double cover t² = x₁⋯x_ℓ, whose base acquires
#:                  a toric singularity
#: "coordinatewise" the (ℤ/2)^ℓ cover t_i² = x_i, with a smooth base
#: ================ =========================================================
CoverVariant = Literal["double", "coordinatewise"]

#: The blow-up chart used by the A_n reductions
#:
#: ====== ============================================================
#: "odd"  the b-chart, followed by the (b₁, x₁)-adic weighted blow-up
#: "even" the b-chart after the base change b₁ ↦ c₁²
#: ====== ============================================================
Chart = Literal["odd", "even"]

#: Anything `ProductType.parse` accepts as a list of factors
TypeLabels = Union[str, Sequence[str]]
