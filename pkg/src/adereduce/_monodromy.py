import enum
from dataclasses import dataclass
from typing import Dict, Iterable, List, Sequence, Union

import numpy as np

from ._errors import AdeError
from ._linalg import char_poly, cyclotomic_multiplicities
from ._roots import AdeType, as_ade_type, build_root_system, coxeter_element
from ._wonderful import DivisorComponent
from .types import IntMatrix


class VanishingAction(str, enum.Enum):
    """What the monodromy of a small loop around the origin does to the
    vanishing lattice"""

    IDENTITY = "Identity"
    MINUS_IDENTITY = "MinusIdentity"


@dataclass(frozen=True)
class MonodromyClass:
    operator_on_vanishing: VanishingAction
    unipotent: bool
    square_unipotent: bool

    @property
    def needs_stack(self) -> bool:
        """A ℤ/2 stabilizer is needed exactly when the monodromy is not
        unipotent"""
        return not self.unipotent

    def summary(self) -> str:
        if self.unipotent:
            return "unipotent; no stack structure required"
        return "not unipotent; square unipotent; stack ℤ/2 required"


@dataclass(frozen=True, eq=False)
class ClassicalOperator:
    """(-1)^d times the Coxeter element, acting on the root lattice that the
    vanishing cohomology of a d-dimensional singularity is isometric to"""

    type: AdeType
    dimension: int
    matrix: IntMatrix
    coxeter_number: int

    @property
    def dimension_parity(self) -> int:
        return self.dimension % 2


def classical_operator(t: Union[AdeType, str], d: int = 1) -> ClassicalOperator:
    """The classical monodromy operator of a singularity of type t in
    dimension d

    >>> classical_operator("A1", 1).matrix
    array([[1]])
    """
    if d < 1:
        raise AdeError(d, "dimension must be at least 1")
    t = as_ade_type(t)
    c = coxeter_element(build_root_system(t))
    return ClassicalOperator(t, d, (-1) ** d * c.matrix, c.order())


def eigenvalue_orders(op: ClassicalOperator) -> List[int]:
    """Orders of all eigenvalues, with multiplicity, in increasing order

    >>> eigenvalue_orders(classical_operator("A2", 1))
    [6, 6]
    """
    counts = cyclotomic_multiplicities(char_poly(op.matrix), op.coxeter_number)
    return sorted(d for d, count in counts.items() for _ in range(count))


def expected_origin_action(t: Union[AdeType, str], d: int) -> VanishingAction:
    """-Id for odd d and A_n with n even, Id otherwise"""
    if d % 2 == 1 and as_ade_type(t).is_a_even:
        return VanishingAction.MINUS_IDENTITY
    return VanishingAction.IDENTITY


def _classify(action: VanishingAction) -> MonodromyClass:
    if action is VanishingAction.IDENTITY:
        return MonodromyClass(action, unipotent=True, square_unipotent=True)
    return MonodromyClass(action, unipotent=False, square_unipotent=True)


def origin_loop_monodromy(t: Union[AdeType, str], d: int = 1) -> MonodromyClass:
    """Raise the classical operator to the Coxeter number and classify the
    result, which must be ±Id and must agree with `expected_origin_action`.

    Raises:
        AdeError: if the computed power disagrees with the closed form
    """
    op = classical_operator(t, d)
    power = np.linalg.matrix_power(op.matrix, op.coxeter_number)
    identity = np.eye(len(power), dtype=power.dtype)
    if np.array_equal(power, identity):
        action = VanishingAction.IDENTITY
    elif np.array_equal(power, -identity):
        action = VanishingAction.MINUS_IDENTITY
    else:
        raise AdeError(op.type, f"operator^h is not ±Id in dimension {d}")
    if action is not expected_origin_action(op.type, d):
        raise AdeError(op.type, f"operator^h is {action.value} in dimension {d}")
    return _classify(action)


def divisor_monodromy(dc: DivisorComponent, d: int = 1) -> MonodromyClass:
    """Monodromy along a small loop around a boundary divisor, which is that
    of the origin loop for the divisor's own type"""
    if not dc.flat.is_irreducible:
        raise AdeError(dc.flat.type_label.pretty(), "divisors have irreducible type")
    return origin_loop_monodromy(dc.type, d)


def preserves_form(op: ClassicalOperator) -> bool:
    """Whether the operator is an isometry of the Cartan form"""
    gram = build_root_system(op.type).cartan_matrix
    return np.array_equal(op.matrix.T @ gram @ op.matrix, gram)


# ----------------------------------------------------------------------------
#   Classification table


def classification_table(
    types: Iterable[Union[AdeType, str]], dims: Sequence[int] = (1,)
) -> List[Dict[str, object]]:
    """One row per divisor type and dimension"""
    rows = []
    for t in types:
        for d in dims:
            mc = origin_loop_monodromy(t, d)
            rows.append(
                {
                    "type": str(as_ade_type(t)),
                    "dim": d,
                    "unipotent": mc.unipotent,
                    "square_unipotent": mc.square_unipotent,
                    "needs_stack": mc.needs_stack,
                }
            )
    return rows


def format_classification(rows: Sequence[Dict[str, object]]) -> str:
    header = ("Type", "Dim", "Unipotent", "Square unipotent", "Needs stack")
    keys = ("type", "dim", "unipotent", "square_unipotent", "needs_stack")
    table = [header] + [
        tuple("yes" if v is True else "no" if v is False else str(v) for v in values)
        for values in ([row[k] for k in keys] for row in rows)
    ]
    widths = [max(len(line[i]) for line in table) for i in range(len(header))]
    return "\n".join(
        " | ".join(cell.ljust(w) for cell, w in zip(line, widths)).rstrip()
        for line in table
    )
