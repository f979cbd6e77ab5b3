"""Even-variable symmetric Boolean functions with maximum algebraic immunity.

Packed GF(2) linear algebra, the two partial orders and cell partitions
behind the structure theory, a brute-force annihilator oracle, and the
constructive catalog of all maximum-immunity functions with classifier,
weight formulas and a verification harness.
"""

from .gf2 import BitMatrix, BitVec, epsilon, kernel_basis, rank, sum_epsilon_over
from .orders import (
    PartitionFamily,
    aset_index_of,
    bset,
    lucas_leq,
    lucas_lt,
    partition,
    prefix_predecessors,
    prime_leq,
    prime_lt,
)
from .symfun import (
    TRUTH_TABLE_LIMIT,
    CapacityError,
    SanfVec,
    SymFn,
    TruthTable,
    degree,
    hamming_weight,
    majority,
    pb_truth_table,
    reverse_complement_input,
    sanf_to_svv,
    svv_to_sanf,
    to_truth_table,
    weight_support,
)
from .ai import (
    AiReport,
    ConditionVerdict,
    ai_exact,
    alternation_constraints,
    check_necessary,
    sym_annihilator_exists,
)
from .enumeration import (
    ENUMERATION_LIMIT,
    MaxAiRecord,
    WeightCatalog,
    build_item1,
    build_item2,
    build_item3,
    classify,
    enumerate_all,
    weight_catalog,
)

__version__ = "0.1.0"
