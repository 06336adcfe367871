"""
subcensus: exact subgroup counts of small finite groups.

Groups are built as multiplication tables, their subgroup lattices are
enumerated exactly, and the results are used to check closed-form counts,
lower bounds and the classification of groups with few subgroups.
"""

from .abelian import (
    count_abelian,
    count_cyclic,
    count_elementary,
    count_p_component,
    count_rank2,
    gaussian_binomial,
    min_noncyclic_pgroup_count,
)
from .bounds import (
    applicable_bound,
    bound_four_or_more,
    bound_pqr,
    bound_three_prime,
    bound_two_prime,
    candidate_orders,
)
from .catalog import (
    build_entry,
    catalog_entries,
    completeness_check_small_orders,
    nonabelian_class_count,
    sequence_terms,
    verify_catalog,
    verify_entry,
)
from .config import Settings, configure, get_settings
from .errors import CensusError
from .expr import evaluate, parse, render
from .groups import (
    Group,
    SubgroupSet,
    center,
    direct_product,
    element_order,
    from_matrices,
    from_permutations,
    is_abelian,
    make_cyclic,
    metacyclic,
)
from .lattice import (
    all_subgroups,
    count_subgroups,
    generated_subgroup,
    is_coprime_decomposable,
    is_nilpotent,
    is_normal,
    split_coprime_subgroup,
    summarize,
)
from .similarity import abelian_class_count, enumerate_abelian_classes, pinned_components_with_count, render_class
from .smallgroups import enumerate_groups_of_order, isomorphic
from .types import (
    AbelianShape,
    BoundReport,
    CatalogEntry,
    FactoredOrder,
    LatticeSummary,
    SimilarityClass,
    VerificationReport,
)

__version__ = "0.1.0"
