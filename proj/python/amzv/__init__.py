"""Exact arithmetic in the shuffle Hopf algebra of alternating multiple zeta values over F_q."""

from ._core import (
    Algebra,
    BudgetExceeded,
    Element,
    Field,
    ParseError,
    Series,
    Tensor,
    check_algebra,
    check_coalgebra,
    check_coproduct_oracle,
    check_hopf,
    check_zeta,
    power_sum,
    zeta,
)

__all__ = [
    "Algebra",
    "BudgetExceeded",
    "Element",
    "Field",
    "ParseError",
    "Series",
    "Tensor",
    "check_algebra",
    "check_coalgebra",
    "check_coproduct_oracle",
    "check_hopf",
    "check_zeta",
    "power_sum",
    "zeta",
]
