"""Finite-semigroup toolkit for reflexive and Hall relation monoids."""

from .constructions import (
    FiniteGroup,
    GroupAction,
    GroupSubset,
    as_group,
    check_pairs_embedding,
    conjugation_action,
    cyclic_group,
    hall_embedding,
    hall_factorization,
    power_semigroup,
    project_to_hall,
    semidirect_product,
    subset_relation,
    symmetric_group_table,
    validate_action,
)
from .enumeration import (
    CampaignReport,
    EnumerationReport,
    count_hall,
    count_hall_inclusion_exclusion,
    count_reflexive,
    hall_idempotent_census,
    materialize_hall,
    materialize_reflexive,
    verification_campaign,
)
from .relations import (
    Permutation,
    Relation,
    all_relations,
    boolean_permanent,
    compose,
    conjugate,
    contains,
    emit_relmat,
    hall_relations,
    is_hall,
    is_reflexive,
    parse_relmat,
    perm_inverse,
    perm_product,
    permutations_lex,
    reflexive_relations,
    relation_of,
    transpose,
    union,
)
from .semigroups import (
    DivisionWitness,
    FiniteSemigroup,
    GreenSummary,
    HomomorphismCheck,
    adjoin_identity,
    check_homomorphism,
    emit_cayley,
    find_division,
    green_summary,
    idempotent_generated,
    idempotents,
    is_block_group,
    is_j_trivial,
    parse_cayley,
    semigroup_of_relations,
    subsemigroup_closure,
    validate_table,
)

__version__ = "0.1.0"
