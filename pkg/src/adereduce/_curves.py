import logging
import warnings
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple, Union

from ._an_reduction import TailDescription, tail_rule
from ._errors import AdeError, Unsupported
from ._monodromy import MonodromyClass, divisor_monodromy
from ._poly import MPoly
from ._roots import (
    AdeType,
    ProductType,
    as_ade_type,
    as_product_type,
    root_system,
    weyl_group_order,
)
from ._wonderful import divisor_census, irreducible_flats
from .types import CoverVariant, TypeLabels

log = logging.getLogger(__name__)

#: What each local cover does to the base
LOCAL_COVER_NOTES = {
    "double": "a toric singularity in the base",
    "coordinatewise": "the base stays smooth",
}

#: Returned in place of tail data for D and E singularities
SEE_HASSETT = "see Hassett"

Tail = Union[TailDescription, Unsupported]


@dataclass(frozen=True)
class CurveSpec:
    """A curve of arithmetic genus ``genus`` with the given singularities,
    and the dimension of the singular variety (1 for curves)"""

    genus: int
    singularities: ProductType
    dim: int = 1

    def __post_init__(self):
        object.__setattr__(
            self, "singularities", as_product_type(self.singularities)
        )
        if self.genus < 0:
            raise AdeError(self.genus, "genus must not be negative")
        if self.dim < 1:
            raise AdeError(self.dim, "dimension must be at least 1")

    @classmethod
    def of(
        cls, genus: int, singularities: Union[ProductType, TypeLabels], dim: int = 1
    ) -> "CurveSpec":
        return cls(genus, as_product_type(singularities), dim)

    @property
    def moduli_ready(self) -> bool:
        """Moduli statements need g >= 2"""
        return self.genus >= 2


# ----------------------------------------------------------------------------
#   Local structure of the deformation


@dataclass(frozen=True)
class DeformationFactor:
    """The mini-versal deformation of one singularity"""

    type: AdeType
    #: The Milnor number, which is the rank
    dimension: int
    weyl_group_order: int

    @property
    def discriminant(self) -> str:
        return f"Δ_{self.type}"


@dataclass(frozen=True)
class DeformationStructure:
    """The deformation space of the curve, étale locally the product of the
    factors' deformation spaces with an affine space 𝔸^m. The discriminant
    is the sum of the pullbacks of the factors' discriminants. m is not
    determined by the local data and stays symbolic."""

    spec: CurveSpec
    factors: Tuple[DeformationFactor, ...]
    weyl_group_order: int

    @property
    def singular_dimension(self) -> int:
        """Dimension of the product of the factors' bases"""
        return sum(f.dimension for f in self.factors)

    @property
    def base(self) -> str:
        return " × ".join([f"B_{f.type}" for f in self.factors] + ["𝔸^m"])

    @property
    def discriminant(self) -> str:
        return " + ".join(
            f"π{i}*{f.discriminant}" for i, f in enumerate(self.factors, 1)
        )

    def to_json(self) -> Dict[str, object]:
        return {
            "genus": self.spec.genus,
            "singularities": str(self.spec.singularities),
            "factors": [
                {
                    "type": str(f.type),
                    "dim": f.dimension,
                    "weyl_group_order": f.weyl_group_order,
                }
                for f in self.factors
            ],
            "base": self.base,
            "dimension": f"{self.singular_dimension} + m",
            "discriminant": self.discriminant,
            "weyl_group_order": self.weyl_group_order,
        }


def deformation_structure(cs: CurveSpec) -> DeformationStructure:
    factors = tuple(
        DeformationFactor(t, t.rank, weyl_group_order(t))
        for t in cs.singularities.factors
    )
    return DeformationStructure(cs, factors, weyl_group_order(cs.singularities))


# ----------------------------------------------------------------------------
#   Local covers


def local_cover_equations(depth: int, variant: CoverVariant = "double") -> List[MPoly]:
    """Equations of a cover of the base branched along ``depth`` boundary
    divisors x₁ = 0, …, x_ℓ = 0 meeting at a point: t² = x₁⋯x_ℓ for
    the double cover, or t_i² = x_i for the coordinatewise one.

    >>> [str(p) for p in local_cover_equations(2)]
    ['t^2 - x1*x2']
    """
    if depth < 1:
        raise AdeError(depth, "cover depth must be at least 1")
    x = [MPoly.var(f"x{i}") for i in range(1, depth + 1)]
    if variant == "coordinatewise":
        return [MPoly.var(f"t{i}") ** 2 - xi for i, xi in enumerate(x, 1)]
    if variant == "double":
        # A single divisor gives the same cover both ways, so name it alike
        t = MPoly.var("t1" if depth == 1 else "t")
        product = MPoly.const(1)
        for xi in x:
            product = product * xi
        return [t**2 - product]
    raise AdeError(variant, "cover variant is double or coordinatewise")


def local_cover_note(variant: CoverVariant) -> str:
    try:
        return LOCAL_COVER_NOTES[variant]
    except KeyError:
        raise AdeError(variant, "cover variant is double or coordinatewise") from None


# ----------------------------------------------------------------------------
#   Tails


def tail_description(t: Union[AdeType, str], g: int) -> Tail:
    """The tail an A_n singularity is replaced by in the stable limit of a
    genus g curve. D and E singularities return `Unsupported`.

    >>> tail_description("A3", 2).generic_aut_order
    2
    >>> bool(tail_description("D4", 3))
    False
    """
    t = as_ade_type(t)
    if g < 2:
        raise AdeError(g, "tails of stable limits need genus at least 2")
    if t.family != "A":
        return Unsupported(t, SEE_HASSETT)
    return tail_rule(t.n, 2, genus=g)


# ----------------------------------------------------------------------------
#   Divisor report


@dataclass(frozen=True)
class DivisorReport:
    """The boundary of the wonderful blow-up of the Weyl cover of the
    deformation space, and what the stable limits look like along it"""

    spec: CurveSpec
    #: Number of boundary divisors of each type
    counts: Dict[AdeType, int]
    #: Monodromy around a divisor of each type
    monodromy: Dict[AdeType, MonodromyClass]
    #: Divisor types along which a ℤ/2 stabilizer is needed
    stack_loci: Tuple[AdeType, ...]
    #: One per divisor type, empty if the genus is below 2
    tails: Tuple[Tail, ...]
    #: Coordinatewise cover equations at the depth asked for, which is how
    #: the root stack looks locally
    local_cover: Tuple[MPoly, ...]
    #: Automorphism counts assume the normalization and its special points
    #: have general moduli
    genericity_caveat: bool = True

    def stabilizer(self, t: Union[AdeType, str]) -> Optional[str]:
        return "ℤ/2" if as_ade_type(t) in self.stack_loci else None

    def to_json(self) -> Dict[str, object]:
        return {
            "genus": self.spec.genus,
            "singularities": str(self.spec.singularities),
            "dim": self.spec.dim,
            "divisors": [
                {
                    "type": str(t),
                    "count": count,
                    "unipotent": self.monodromy[t].unipotent,
                    "square_unipotent": self.monodromy[t].square_unipotent,
                    "stabilizer": self.stabilizer(t),
                }
                for t, count in self.counts.items()
            ],
            "stack_loci": [str(t) for t in self.stack_loci],
            "tails": [
                tail.to_json() if isinstance(tail, TailDescription) else str(tail)
                for tail in self.tails
            ],
            "local_cover": {
                "depth": len(self.local_cover),
                "equations": [str(p) for p in self.local_cover],
                "note": local_cover_note("coordinatewise"),
            },
            "genericity_caveat": self.genericity_caveat,
        }

    def format(self) -> str:
        lines = [
            f"Genus {self.spec.genus} with {self.spec.singularities.pretty()}, "
            f"dimension {self.spec.dim}"
        ]
        rows = [("Type", "Count", "Monodromy", "Stabilizer")] + [
            (str(t), str(c), self.monodromy[t].summary(), self.stabilizer(t) or "-")
            for t, c in self.counts.items()
        ]
        widths = [max(len(row[i]) for row in rows) for i in range(4)]
        lines += [
            " | ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip()
            for row in rows
        ]
        loci = ", ".join(str(t) for t in self.stack_loci) or "none"
        lines.append(f"Stack loci: {loci}")
        for tail in self.tails:
            lines.append(
                tail.summary() if isinstance(tail, TailDescription) else str(tail)
            )
        equations = ", ".join(f"{p} = 0" for p in self.local_cover)
        lines.append(f"Local cover: {equations}")
        if self.genericity_caveat:
            lines.append("Automorphisms assume general moduli of the normalization")
        return "\n".join(lines)


def divisor_report(cs: CurveSpec, depth: int = 1) -> DivisorReport:
    """Census, monodromy, stack loci, tails and local covers for the
    boundary divisors of a curve's deformation space

    >>> report = divisor_report(CurveSpec.of(3, "A2"))
    >>> {str(t): n for t, n in report.counts.items()}
    {'A1': 3, 'A2': 1}
    >>> [str(t) for t in report.stack_loci]
    ['A2']
    """
    rs = root_system(cs.singularities)
    counts = divisor_census(rs)
    representatives = {}
    for dc in irreducible_flats(rs):
        representatives.setdefault(dc.type, dc)
    monodromy = {t: divisor_monodromy(representatives[t], cs.dim) for t in counts}
    stack_loci = tuple(t for t in counts if monodromy[t].needs_stack)
    tails: Tuple[Tail, ...] = ()
    if cs.moduli_ready:
        tails = tuple(tail_description(t, cs.genus) for t in counts)
    else:
        warnings.warn(
            f"genus {cs.genus} is below 2, so the report leaves out tails",
            stacklevel=2,
        )
    log.debug("Divisor report for %s: %d types", cs.singularities, len(counts))
    return DivisorReport(
        spec=cs,
        counts=counts,
        monodromy=monodromy,
        stack_loci=stack_loci,
        tails=tails,
        local_cover=tuple(local_cover_equations(depth, "coordinatewise")),
    )
