"""Bar Code representations of monomial staircases and censuses of
zero-dimensional stable and strongly stable ideals."""

from .barcode import BarCode, bar_list, decode, e_list, encode, is_admissible, render
from .bijections import (
    IdealListing,
    ListedIdeal,
    barcode_from_partition_2vars,
    barcode_from_shifted_pp,
    barcode_from_strict_pp,
    ideal_from_partition_2vars,
    ideal_from_strict_pp,
    list_ideals,
    partition_2vars,
    shifted_pp_from_barcode,
    strict_pp_from_barcode,
)
from .counting import (
    STABLE,
    STRONGLY_STABLE,
    BarListCensus,
    CensusRow,
    ShapeCount,
    a_vector_stable,
    a_vectors_strongly,
    bar_lists_3vars,
    census,
    census_2vars,
    closed_form_shape22,
    count_2vars,
    count_sstable_3vars,
    count_sstable_barlist,
    count_stable_3vars,
    count_stable_barlist,
    max_h_2vars,
)
from .monomials import (
    MonomialIdeal,
    OrderIdeal,
    Term,
    border_set,
    escalier,
    format_term,
    is_order_ideal,
    is_stable,
    is_strongly_stable,
    lex_compare,
    min_var,
    minimal_generators,
    p_operator,
    parse_term,
    term,
)
from .oracle import (
    ConjectureReport,
    EscalierEnumeration,
    conjecture_probe,
    count_by_definition,
    enumerate_order_ideals,
)
from .partitions import (
    IntPartition,
    PlanePartition,
    SolidPartition,
    count_P,
    count_Q,
    enumerate_distinct,
    enumerate_plane_partitions,
    minimal_sum,
    validate,
    validate_solid,
)
from .qpolys import IntPoly, det, gauss_binomial, gf_shifted, gf_strict
from .starset import (
    StarSet,
    is_stable_via_starset,
    is_stably_complete,
    multiplicative_vars,
    pommaret_basis,
    star_set_direct,
    star_set_from_barcode,
)

__version__ = "0.1.0"
