"""Explicit equations for the semi-stable reduction of an A_n singularity
x₁^(n+1) + x₂² + … + x_m² = 0 and its mini-versal deformation.

Variables follow one naming scheme throughout: t_i on the base of the
deformation, a_i on its Weyl cover, b_i on the standard chart of the blow-up
of the origin, c_i after the double cover b₁ = c₁², and x_i on the fibers.
"""

import enum
import logging
from dataclasses import dataclass
from fractions import Fraction
from math import prod
from typing import Dict, List, Optional, Sequence, Tuple, Union

from ._errors import AdeError
from ._poly import MPoly, discriminant, elementary_symmetric, substitute
from ._roots import AdeType
from .types import Chart

log = logging.getLogger(__name__)


def _names(prefix: str, first: int, last: int) -> List[str]:
    return [f"{prefix}{i}" for i in range(first, last + 1)]


def _var(name: str) -> MPoly:
    return MPoly.var(name)


def _check(n: int, m: int = 1):
    if n < 1:
        raise AdeError(f"A{n}", "n must be at least 1")
    if m < 1:
        raise AdeError(m, "fiber dimension count m must be at least 1")


def _squares(m: int) -> MPoly:
    # x₂² + … + x_m²
    return sum((_var(f"x{i}") ** 2 for i in range(2, m + 1)), MPoly())


@dataclass(frozen=True)
class FamilyPresentation:
    """A family over a base, given by its ring map. The total relations
    start with the base relations, followed by the fiber equation."""

    chart_label: str
    base_vars: Tuple[str, ...]
    fiber_vars: Tuple[str, ...]
    base_relations: Tuple[MPoly, ...]
    total_relations: Tuple[MPoly, ...]
    #: The presentation is valid over fields of characteristic above this
    characteristic_above: int
    #: Local equation of the exceptional divisor on the base, if any
    exceptional_divisor: Optional[MPoly] = None

    def __post_init__(self):
        known = set(self.base_vars) | set(self.fiber_vars)
        for relation in self.total_relations:
            if not set(relation.variables) <= known:
                raise AdeError(relation, f"uses variables outside {sorted(known)}")
        for relation in self.base_relations:
            if not set(relation.variables) <= set(self.base_vars):
                raise AdeError(relation, "base relation uses fiber variables")
        if self.total_relations[: len(self.base_relations)] != self.base_relations:
            raise AdeError(self.chart_label, "family does not restrict to its base")

    @property
    def equation(self) -> MPoly:
        """The fiber equation"""
        return self.total_relations[-1]

    def fiber_over_exceptional(self) -> MPoly:
        """The fiber equation restricted to the exceptional divisor"""
        if self.exceptional_divisor is None:
            raise AdeError(self.chart_label, "has no exceptional divisor")
        (name,) = self.exceptional_divisor.variables
        return substitute(self.equation, {name: 0})

    def to_json(self) -> Dict[str, object]:
        return {
            "chart": self.chart_label,
            "base_vars": list(self.base_vars),
            "fiber_vars": list(self.fiber_vars),
            "base_relations": [str(p) for p in self.base_relations],
            "total_relations": [str(p) for p in self.total_relations],
            "exceptional_divisor": self.exceptional_divisor and str(
                self.exceptional_divisor
            ),
            "characteristic": f"char(k) > {self.characteristic_above}",
        }


def _family(
    label: str,
    n: int,
    base_vars: Sequence[str],
    m: int,
    base_relations: Sequence[MPoly],
    equation: MPoly,
    exceptional: Optional[str] = None,
) -> FamilyPresentation:
    return FamilyPresentation(
        chart_label=label,
        base_vars=tuple(base_vars),
        fiber_vars=tuple(_names("x", 1, m)),
        base_relations=tuple(base_relations),
        total_relations=tuple(base_relations) + (equation,),
        characteristic_above=n + 1,
        exceptional_divisor=None if exceptional is None else _var(exceptional),
    )


# ----------------------------------------------------------------------------
#   The Weyl cover of the deformation space


def weyl_cover_map(n: int) -> List[MPoly]:
    """[σ₁(a), …, σ_{n+1}(a)], the invariants of the symmetric group acting
    on a₁, …, a_{n+1}"""
    _check(n)
    a = _names("a", 1, n + 1)
    return [elementary_symmetric(i, a) for i in range(1, n + 2)]


def weyl_cover_bindings(n: int) -> Dict[str, MPoly]:
    """t_i ↦ e_i(-a) = (-1)^i σ_i(a), the signs for which
    ∏(x - a_i) = x^(n+1) + t₁x^n + … + t_{n+1} holds exactly

    >>> {k: str(v) for k, v in weyl_cover_bindings(1).items()}
    {'t1': '-a1 - a2', 't2': 'a1*a2'}
    """
    return {
        f"t{i}": (-1) ** i * sigma for i, sigma in enumerate(weyl_cover_map(n), 1)
    }


def root_elimination(n: int) -> Dict[str, MPoly]:
    """a_{n+1} ↦ -(a₁ + … + a_n), solving the base relation σ₁(a) = 0"""
    _check(n)
    return {f"a{n + 1}": -sum((_var(a) for a in _names("a", 1, n)), MPoly())}


def miniversal_polynomial(n: int) -> MPoly:
    """f(x₁) = x₁^(n+1) + t₂x₁^(n-1) + … + t_{n+1}"""
    _check(n)
    x1 = _var("x1")
    return x1 ** (n + 1) + sum(
        (_var(f"t{k}") * x1 ** (n + 1 - k) for k in range(2, n + 2)), MPoly()
    )


def pulled_back_discriminant(n: int) -> MPoly:
    """The discriminant of `miniversal_polynomial` in x₁, pulled back along
    the Weyl cover and written in a₁, …, a_n"""
    disc = discriminant(miniversal_polynomial(n), "x1")
    elimination = root_elimination(n)
    bindings = {
        t: substitute(image, elimination)
        for t, image in weyl_cover_bindings(n).items()
        if t != "t1"
    }
    log.debug("Pulling back a discriminant with %d terms", len(disc.terms))
    return substitute(disc, bindings)


def hyperplane_product(n: int) -> MPoly:
    """∏_{i<j} (a_i - a_j)² with a_{n+1} eliminated"""
    _check(n)
    a = [_var(name) for name in _names("a", 1, n)]
    a.append(-sum(a, MPoly()))
    return prod(
        ((a[i] - a[j]) ** 2 for i in range(n + 1) for j in range(i + 1, n + 1)),
        start=MPoly.const(1),
    )


def discriminant_identity_holds(n: int) -> bool:
    """Whether the pulled-back discriminant is the product of the squared
    hyperplanes a_i - a_j, as exact polynomials"""
    return pulled_back_discriminant(n) == hyperplane_product(n)


# ----------------------------------------------------------------------------
#   Families


def miniversal_family(n: int, m: int = 2) -> FamilyPresentation:
    """(x₂² + … + x_m²) + f(x₁) over k[t₂, …, t_{n+1}]"""
    _check(n, m)
    return _family(
        "miniversal",
        n,
        _names("t", 2, n + 1),
        m,
        [],
        _squares(m) + miniversal_polynomial(n),
    )


def weyl_pullback_family(n: int, m: int = 2) -> FamilyPresentation:
    """(x₂² + … + x_m²) + ∏(x₁ - a_i) over k[a]/(σ₁(a))"""
    _check(n, m)
    a = _names("a", 1, n + 1)
    x1 = _var("x1")
    product = prod((x1 - _var(name) for name in a), start=MPoly.const(1))
    return _family(
        "weyl-cover", n, a, m, [elementary_symmetric(1, a)], _squares(m) + product
    )


def chart_substitution(n: int) -> Dict[str, MPoly]:
    """a₁ ↦ b₁, a_i ↦ b₁b_i, the standard chart of the blow-up of the
    origin"""
    _check(n)
    b1 = _var("b1")
    return {"a1": b1, **{f"a{i}": b1 * _var(f"b{i}") for i in range(2, n + 2)}}


def _chart_roots(scale: MPoly, prefix: str, n: int) -> List[MPoly]:
    return [scale] + [scale * _var(f"{prefix}{i}") for i in range(2, n + 2)]


def _chart_base_relation(prefix: str, n: int) -> MPoly:
    # σ₁(1, y₂, …, y_{n+1})
    return 1 + sum((_var(f"{prefix}{i}") for i in range(2, n + 2)), MPoly())


def blowup_chart_family(n: int, m: int = 2) -> FamilyPresentation:
    """(x₂² + … + x_m²) + (x₁ - b₁)∏(x₁ - b₁b_i) over
    k[b]/(σ₁(1, b₂, …, b_{n+1})). The exceptional divisor is b₁ = 0."""
    _check(n, m)
    x1 = _var("x1")
    roots = _chart_roots(_var("b1"), "b", n)
    product = prod((x1 - r for r in roots), start=MPoly.const(1))
    return _family(
        "b-chart",
        n,
        _names("b", 1, n + 1),
        m,
        [_chart_base_relation("b", n)],
        _squares(m) + product,
        exceptional="b1",
    )


def double_cover_substitution(n: int) -> Dict[str, MPoly]:
    """b₁ ↦ c₁², b_i ↦ c_i, the double cover branched along b₁ = 0"""
    _check(n)
    renamed = {f"b{i}": _var(f"c{i}") for i in range(2, n + 2)}
    return {"b1": _var("c1") ** 2, **renamed}


def double_cover_family(n: int, m: int = 2) -> FamilyPresentation:
    """(x₂² + … + x_m²) + (x₁ - c₁²)∏(x₁ - c₁²c_i) over
    k[c]/(σ₁(1, c₂, …, c_{n+1}))"""
    _check(n, m)
    x1 = _var("x1")
    roots = _chart_roots(_var("c1") ** 2, "c", n)
    product = prod((x1 - r for r in roots), start=MPoly.const(1))
    return _family(
        "c-chart",
        n,
        _names("c", 1, n + 1),
        m,
        [_chart_base_relation("c", n)],
        _squares(m) + product,
        exceptional="c1",
    )


# ----------------------------------------------------------------------------
#   Tails


class Attachment(str, enum.Enum):
    """How a tail meets the rest of the stable curve"""

    WEIERSTRASS_POINT = "one Weierstrass point"
    CONJUGATE_POINTS = "two conjugate points"


@dataclass(frozen=True)
class TailDescription:
    """The tail replacing an A_n singularity in the stable limit"""

    sing: AdeType
    tail_genus: int
    attachment: Attachment
    #: Weights of the weighted projective space the tail lives in
    ambient_weights: Tuple[int, ...]
    #: Order of the automorphism group of a generic stable limit
    generic_aut_order: int
    #: The ambient genus for which the automorphism group jumps, if any
    exceptional_genus: Optional[int] = None
    #: What generates the automorphism group when it is ℤ/2
    involution: Optional[str] = None
    #: Automorphism statements assume the normalization and its special
    #: points have general moduli
    assumes_general_moduli: bool = True

    @property
    def exceptional_genus_rule(self) -> Optional[str]:
        if self.exceptional_genus is None:
            return None
        return f"Aut ≅ ℤ/2 when g = {self.exceptional_genus}"

    def summary(self) -> str:
        weights = ",".join(str(w) for w in self.ambient_weights)
        text = (
            f"{self.sing}: genus {self.tail_genus} tail in P({weights}) attached at "
            f"{self.attachment.value}; generic |Aut| = {self.generic_aut_order}"
        )
        if self.involution:
            text += f" ({self.involution})"
        return text

    def to_json(self) -> Dict[str, object]:
        return {
            "sing": str(self.sing),
            "tail_genus": self.tail_genus,
            "attachment": self.attachment.value,
            "ambient_weights": list(self.ambient_weights),
            "generic_aut_order": self.generic_aut_order,
            "exceptional_genus_rule": self.exceptional_genus_rule,
            "involution": self.involution,
            "assumes_general_moduli": self.assumes_general_moduli,
        }


def tail_rule(n: int, m: int = 2, genus: Optional[int] = None) -> TailDescription:
    """The tail of an A_n singularity in a fiber of dimension m-1, and the
    automorphisms of the generic stable limit of a genus ``genus`` curve

    >>> tail_rule(4).ambient_weights
    (1, 2, 5)
    >>> tail_rule(3, genus=2).generic_aut_order
    2
    """
    _check(n, m)
    sing = AdeType("A", n)
    if n % 2 == 0:
        return TailDescription(
            sing,
            n // 2,
            Attachment.WEIERSTRASS_POINT,
            (1, 2) + (n + 1,) * (m - 1),
            2,
            involution=(
                "hyperelliptic involution of the tail, fixing the Weierstrass "
                "point of attachment"
            ),
        )
    exceptional = (n + 1) // 2
    jumps = genus == exceptional
    return TailDescription(
        sing,
        n // 2,
        Attachment.CONJUGATE_POINTS,
        (1, 1) + ((n + 1) // 2,) * (m - 1),
        2 if jumps else 1,
        exceptional_genus=exceptional,
        involution=(
            "hyperelliptic involution of the tail, fixing the node" if jumps else None
        ),
    )


# ----------------------------------------------------------------------------
#   Semi-stable reduction


@dataclass(frozen=True)
class Reduction:
    """Everything needed to write down the semi-stable reduction of the
    A_n family over the b-chart"""

    n: int
    m: int
    chart: Chart
    #: The base change leading to ``family``
    cover: Dict[str, MPoly]
    family: FamilyPresentation
    #: Generators of the ideal blown up in the total space
    ideal: Tuple[MPoly, ...]
    #: The ideal whose blow-up of affine m-space holds the desingularized
    #: original fiber
    desingularization_ideal: Tuple[MPoly, ...]
    #: Weights of that blow-up, when it is a weighted blow-up
    desingularization_weights: Optional[Tuple[int, ...]]
    tail: TailDescription

    def to_json(self) -> Dict[str, object]:
        return {
            "sing": f"A{self.n}",
            "m": self.m,
            "chart": self.chart,
            "weyl_cover": {k: str(v) for k, v in weyl_cover_bindings(self.n).items()},
            "cover": {k: str(v) for k, v in self.cover.items()},
            **{
                k: v
                for k, v in self.family.to_json().items()
                if k in ("base_relations", "total_relations", "characteristic")
            },
            "ideal": [str(p) for p in self.ideal],
            "desingularization": {
                "ideal": [str(p) for p in self.desingularization_ideal],
                "weights": (
                    None
                    if self.desingularization_weights is None
                    else list(self.desingularization_weights)
                ),
            },
            "tail": self.tail.to_json(),
        }


def _fiber_pairs(m: int) -> List[MPoly]:
    # x_i x_j for 2 <= i <= j <= m
    return [
        _var(f"x{i}") * _var(f"x{j}")
        for i in range(2, m + 1)
        for j in range(i, m + 1)
    ]


def odd_case_reduction(n: int, m: int = 2) -> Reduction:
    """Blow up I = ((b₁, x₁)^((n+1)/2), x₂, …, x_m) in the b-chart family

    >>> [str(p) for p in odd_case_reduction(3).ideal]
    ['b1^2', 'b1*x1', 'x1^2', 'x2']
    """
    _check(n, m)
    if n % 2 == 0:
        raise AdeError(f"A{n}", "the odd case needs n odd")
    k = (n + 1) // 2
    b1, x1 = _var("b1"), _var("x1")
    rest = [_var(f"x{i}") for i in range(2, m + 1)]
    ideal = [b1 ** (k - j) * x1**j for j in range(k + 1)] + rest
    return Reduction(
        n=n,
        m=m,
        chart="odd",
        cover=chart_substitution(n),
        family=blowup_chart_family(n, m),
        ideal=tuple(ideal),
        desingularization_ideal=tuple([x1**k] + rest),
        desingularization_weights=(k,) + (1,) * (m - 1),
        tail=tail_rule(n, m),
    )


def even_case_reduction(n: int, m: int = 2) -> Reduction:
    """Pass to the double cover b₁ = c₁² and blow up
    I = ((c₁², x₁)^(n+1),
         (c₁^(n+1), c₁^(n-1)x₁, …, c₁x₁^(n/2))·(x₂, …, x_m),
         {x_i x_j})"""
    _check(n, m)
    if n % 2 == 1:
        raise AdeError(f"A{n}", "the even case needs n even")
    c1, x1 = _var("c1"), _var("x1")
    rest = [_var(f"x{i}") for i in range(2, m + 1)]
    powers = [(c1**2) ** (n + 1 - j) * x1**j for j in range(n + 2)]
    mixed = [
        c1 ** (n + 1 - 2 * j) * x1**j * x for j in range(n // 2 + 1) for x in rest
    ]
    pairs = _fiber_pairs(m)
    return Reduction(
        n=n,
        m=m,
        chart="even",
        cover=double_cover_substitution(n),
        family=double_cover_family(n, m),
        ideal=tuple(powers + mixed + pairs),
        desingularization_ideal=tuple([x1 ** (n + 1)] + pairs),
        desingularization_weights=None,
        tail=tail_rule(n, m),
    )


def reduction(n: int, m: int = 2, chart: Optional[Chart] = None) -> Reduction:
    """The reduction matching the parity of n, or the chart asked for"""
    _check(n, m)
    chart = chart or ("odd" if n % 2 else "even")
    if chart == "odd":
        return odd_case_reduction(n, m)
    if chart == "even":
        return even_case_reduction(n, m)
    raise AdeError(chart, "chart is odd or even")


# ----------------------------------------------------------------------------
#   The cusp, worked by hand


def a2_worked_family(slope_var: str = "b2") -> MPoly:
    """The b-chart family of the cusp restricted to the line of slope
    ``slope_var`` through the origin, with b₃ = -(1 + b₂) eliminated and b₁
    as the line parameter. The result is checked against
    `a2_displayed_family`.

    Raises:
        AdeError: if the two do not reconcile
    """
    check = a2_reconciliation(slope_var)
    if not (check.match_after_x1_negation and check.match_after_root_negation):
        raise AdeError(check.chart_family, "does not reconcile with the cusp family")
    return check.chart_family


def _a2_chart_restriction(slope_var: str) -> MPoly:
    family = blowup_chart_family(2, 2)
    slope = _var(slope_var)
    return substitute(family.equation, {"b2": slope, "b3": -1 - slope})


def a2_displayed_family(slope_var: str = "b2") -> MPoly:
    """The cusp family along a line as it is usually written,
    x₂² + x₁³ - (b₂² + b₂ + 1)b₁²x₁ - b₂(1 + b₂)b₁³"""
    b1, b2, x1, x2 = _var("b1"), _var(slope_var), _var("x1"), _var("x2")
    return x2**2 + x1**3 - (b2**2 + b2 + 1) * b1**2 * x1 - b2 * (1 + b2) * b1**3


@dataclass(frozen=True)
class A2Reconciliation:
    """Both forms of the cusp family along a line, and how they match up.
    They differ in the sign of the constant term, and agree once the cubic
    f(x₁) is replaced by -f(-x₁), which negates its three roots."""

    chart_family: MPoly
    displayed_family: MPoly
    direct_match: bool
    match_after_x1_negation: bool
    match_after_root_negation: bool

    def to_json(self) -> Dict[str, object]:
        return {
            "chart_family": str(self.chart_family),
            "displayed_family": str(self.displayed_family),
            "direct_match": self.direct_match,
            "match_after_x1_negation": self.match_after_x1_negation,
            "match_after_root_negation": self.match_after_root_negation,
        }


def a2_reconciliation(slope_var: str = "b2") -> A2Reconciliation:
    chart = _a2_chart_restriction(slope_var)
    displayed = a2_displayed_family(slope_var)
    squares = _squares(2)
    cubic = chart - squares
    negated_x1 = squares - substitute(cubic, {"x1": -_var("x1")})
    negated_roots = substitute(chart, {"b1": -_var("b1")})
    return A2Reconciliation(
        chart_family=chart,
        displayed_family=displayed,
        direct_match=chart == displayed,
        match_after_x1_negation=negated_x1 == displayed,
        match_after_root_negation=negated_roots == displayed,
    )


@dataclass(frozen=True)
class SpecialPoints:
    """The four special points on the first exceptional curve of the cusp
    family along a line of slope b₂"""

    labels: Tuple[str, str, str, str]
    #: Two of the four points coincide
    coincident: bool
    #: The line lies in a smaller stratum, where a root of the cubic is 0
    degenerate: bool
    notes: Tuple[str, ...] = ()


def special_points_a2(b2: Union[int, Fraction, str, MPoly]) -> SpecialPoints:
    """∞, 1, b₂ and -(1 + b₂). Numeric slopes are checked for collisions:
    b₂ = 1, -2 or -1/2 makes two points (and two roots of the cubic)
    coincide, and b₂ = 0 or -1 makes a root of the cubic vanish.

    >>> special_points_a2("b2").labels
    ('∞', '1', 'b2', '-b2 - 1')
    >>> special_points_a2(1).coincident
    True
    """
    if isinstance(b2, (str, MPoly)):
        slope = MPoly.parse(b2) if isinstance(b2, str) else b2
        if not slope.is_constant:
            labels = ("∞", "1", str(slope), str(-(1 + slope)))
            return SpecialPoints(labels, coincident=False, degenerate=False)
        b2 = int(slope)
    value = Fraction(b2)
    other = -(1 + value)
    labels = ("∞", "1", str(value), str(other))
    notes = []
    if value == 1:
        notes.append("b2 = 1 collides with 1")
    if other == 1:
        notes.append("-(1 + b2) collides with 1")
    if value == other:
        notes.append("b2 collides with -(1 + b2)")
    coincident = bool(notes)
    degenerate = value in (0, -1)
    if value == 0:
        notes.append("the root b1*b2 of the cubic vanishes")
    if value == -1:
        notes.append("the root -(1 + b2)*b1 of the cubic vanishes")
    return SpecialPoints(labels, coincident, degenerate, tuple(notes))
