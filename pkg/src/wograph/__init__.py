"""Edge ideals of weighted oriented graphs.

Primary decomposition via strong vertex covers, generalized Alexander
duality, polarization, and Cohen-Macaulayness by classification rules and a
homological oracle.
"""

from .alexander import (
    alexander_dual,
    alexander_dual_via_components,
    dual_edge_intersection,
    dual_vector,
)
from .chordal import (
    dual_is_cm,
    find_peo,
    is_chordal,
    property_star,
    property_star_exists,
    verify_peo,
)
from .cm import (
    CMReport,
    SimplicialComplex,
    classify_construction,
    classify_cycle_cm,
    classify_cycle_unmixed,
    classify_path,
    classify_whisker,
    is_cm_auto,
    is_cm_oracle,
    reduced_homology_ranks,
    stanley_reisner,
    verify_conjecture,
)
from .covers import (
    Heights,
    heights,
    is_cover,
    is_strong,
    is_unmixed,
    is_unmixed_lemma_path,
    minimal_vertex_covers,
    partition,
    strong_covers,
    vertex_covers,
)
from .decomp import (
    Decomposition,
    ass_oracle,
    associated_primes,
    irreducible_component,
    primary_decomposition,
)
from .errors import InputError, TooLarge, WographError
from .graph import (
    SimpleGraph,
    VOGraph,
    add_whiskers,
    classify_vertices,
    complement,
    cycle_order,
    delete_vertices,
    first_construction,
    graph_from_dict,
    graph_from_json,
    graph_to_dict,
    graph_to_json,
    new_graph,
    new_simple_graph,
    second_construction,
    underlying,
)
from .ideal import (
    MonomialIdeal,
    colon,
    contains,
    edge_ideal,
    height,
    ideal_to_strs,
    intersect,
    intersect_all,
    lcm_exponent,
    minimalize,
    monomial_to_str,
)
from .polarize import (
    depolarize,
    depolarize_check,
    g_superscript_d,
    polarize_ideal,
    polarized_ambient,
    polarized_name,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
