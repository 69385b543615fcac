"""Extremal union-intersecting set families: bounds, constructions, exact search."""

from unionint.errors import (
    BadExtras,
    DuplicateSet,
    ElementOutOfRange,
    NoEdges,
    NotUniform,
    NOutOfRange,
    ParamOutOfRange,
    PreconditionFailed,
    TooLarge,
    UnionIntError,
)
from unionint.setcore import (
    Family,
    ProblemSpec,
    complement_family,
    compress_to_upset,
    is_upset,
    level,
    make_family,
    self_complementary_core,
)
from unionint.predicates import (
    PosetPattern,
    contains_pattern,
    is_l_intersecting,
    is_st_union_intersecting,
    is_union_l_intersecting,
    sunflower_check,
)
from unionint.bounds import (
    BoundReport,
    ak_bound,
    ak_candidate_size,
    binomial,
    double_hit_bound,
    f_value,
    katona_level_bound,
    level_pair_bound,
    sunflower_threshold,
    union_l_upper_bound,
    uniform_upper_bound,
)
from unionint.constructions import (
    construct_ak_family,
    construct_st_extremal,
    construct_union_l_extremal,
    construct_uniform_star_plus,
)
from unionint.sunflower import Sunflower, extract_sunflower
from unionint.matching import (
    disjointness_matching,
    verify_katona_inequalities,
    verify_level_inequalities,
)
from unionint.search import (
    SearchResult,
    max_family_bruteforce,
    max_family_upset,
    max_uniform_family,
    search,
)

__version__ = "0.1.0"
