"""Finite binary G-spaces.

Binary operations on ``{0..n-1}`` form a monoid under
``(f g)(x, y) = f(x, g(x, y))``; a binary action of a finite group ``G`` is a
homomorphism into its group of units.  This package builds and checks such
actions, with emphasis on distributive ones and their coset models.
"""

from .actions import (
    BinaryAction,
    Check,
    DistributivityReport,
    action_op,
    action_ops,
    conjugate_translation_action,
    coset_action,
    distributive_pair_ops,
    distributive_pair_sections,
    inverse_conjugation_action,
    is_biequivariant,
    is_distributive,
    is_effective,
    is_transitive,
    kernel,
    left_translation_action,
    section_commutation_check,
    sections_biequivariant_check,
    stabilizer_pair,
    trivial_action,
    validate_action,
)
from .algebra import (
    BinOp,
    FinSet,
    Perm,
    UnaryMap,
    compose_ops,
    enumerate_h2,
    identity_op,
    invert_op,
    is_invertible,
    section,
)
from .classification import ClassificationResult, classify, classify_effective, verify_kernel_stabilizer
from .groups import (
    CosetSpace,
    FiniteGroup,
    SubgroupElems,
    all_subgroups,
    conjugate_subgroup,
    coset_space,
    is_normal,
    make_named_group,
    make_subgroup,
    normal_subgroups,
    quotient_group,
    subgroup_generated,
    validate_group,
)
from .search import (
    DistributiveCatalog,
    build_catalog,
    generate_subgroup_closure,
    is_distributive_subset,
    maximal_distributive_subsets,
)

__version__ = "0.1.0"
