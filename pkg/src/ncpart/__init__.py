"""Two-colour noncrossing partition categories: calculus, closure, classification."""

from .category import (
    NO,
    NO_UP_TO_BOUND,
    YES,
    Category,
    CategoryError,
    ClosureConfig,
    Membership,
    ProjectiveInfo,
    closure_generate,
    contains,
    enumerate_members,
    full_subpartitions,
    is_equivalent,
    projectives,
    reduce_alternating,
    replay_trace,
)
from .classifier import (
    BlockProfile,
    CategoryClassifier,
    ClassificationReport,
    block_profile,
    classify,
    classify_category,
    classify_orthogonal_easy,
    commutation_witness,
    detect_qk,
)
from .grouplike import (
    GroupLikePresentation,
    grouplike_group,
    is_trivial_onedim,
    minimal_d,
    minimal_n,
    one_dim_class,
    order_of_s,
)
from .linmap import (
    CompositionAudit,
    TpMatrix,
    audit_compositions,
    check_composition,
    mor_dimension,
    tp_matrix,
)
from .partition import (
    XY,
    ColourSet,
    Partition,
    PartitionError,
    compose,
    conjugate,
    format_partition,
    involute,
    parse_partition,
    rotate,
    tensor,
)

__all__ = [
    "NO",
    "NO_UP_TO_BOUND",
    "YES",
    "Category",
    "CategoryError",
    "ClosureConfig",
    "Membership",
    "ProjectiveInfo",
    "closure_generate",
    "contains",
    "enumerate_members",
    "full_subpartitions",
    "is_equivalent",
    "projectives",
    "reduce_alternating",
    "replay_trace",
    "BlockProfile",
    "CategoryClassifier",
    "ClassificationReport",
    "block_profile",
    "classify",
    "classify_category",
    "classify_orthogonal_easy",
    "commutation_witness",
    "detect_qk",
    "GroupLikePresentation",
    "grouplike_group",
    "is_trivial_onedim",
    "minimal_d",
    "minimal_n",
    "one_dim_class",
    "order_of_s",
    "CompositionAudit",
    "TpMatrix",
    "audit_compositions",
    "check_composition",
    "mor_dimension",
    "tp_matrix",
    "XY",
    "ColourSet",
    "Partition",
    "PartitionError",
    "compose",
    "conjugate",
    "format_partition",
    "involute",
    "parse_partition",
    "rotate",
    "tensor",
]
