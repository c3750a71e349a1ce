"""Order-p^2 torsion characters of the Nottingham group over F_p."""

from ._core import (
    BudgetExceeded,
    Character,
    DomainError,
    ParseError,
    UsageError,
    act,
    bound,
    classify,
    count_classes,
    evaluate,
    power_conjugacy_oracle,
    power_conjugacy_predicate,
    reduce,
    reduced_forms,
    strict_search,
    valid_type,
    verify_witness,
    weak_search,
)

__all__ = [
    "BudgetExceeded",
    "Character",
    "DomainError",
    "ParseError",
    "UsageError",
    "act",
    "bound",
    "classify",
    "count_classes",
    "evaluate",
    "power_conjugacy_oracle",
    "power_conjugacy_predicate",
    "reduce",
    "reduced_forms",
    "strict_search",
    "valid_type",
    "verify_witness",
    "weak_search",
]
