"""tinygroups: finite group computation and classification at tiny orders."""

from .core import (
    CayleyTable,
    CosetPartition,
    GroupError,
    GroupHom,
    SubgroupMask,
    cosets,
    element_order,
    from_json,
    is_abelian,
    is_cyclic,
    is_normal,
    multiply,
    product_set,
    quotient,
    subgroup_generated,
    to_json,
    validate_table,
)
from .presentations import (
    CosetBudgetExceededError,
    OrderMismatchError,
    Presentation,
    PresentationSyntaxError,
    Relation,
    Word,
    coset_enumerate,
    evaluate_word,
    format_presentation,
    parse_presentation,
    realize_presentation,
    satisfies_relations,
)

__all__ = [
    "CayleyTable",
    "CosetPartition",
    "GroupError",
    "GroupHom",
    "SubgroupMask",
    "cosets",
    "element_order",
    "from_json",
    "is_abelian",
    "is_cyclic",
    "is_normal",
    "multiply",
    "product_set",
    "quotient",
    "subgroup_generated",
    "to_json",
    "validate_table",
    "CosetBudgetExceededError",
    "OrderMismatchError",
    "Presentation",
    "PresentationSyntaxError",
    "Relation",
    "Word",
    "coset_enumerate",
    "evaluate_word",
    "format_presentation",
    "parse_presentation",
    "realize_presentation",
    "satisfies_relations",
]
