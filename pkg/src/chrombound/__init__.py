"""Exact chromatic polynomials of small graphs and upper bounds on their coefficients."""

from .bounds import (
    BoundParams,
    BoundReport,
    EdgeChoice,
    binom,
    bound_report,
    improved_bound,
    improved_bound_alt,
    leading_coefficient,
    lemma1_sides,
    li_tian_bound,
    s_term,
    select_edge,
)
from .chromatic import (
    ChromaticPolynomial,
    brute_force_colorings,
    check_proposition1,
    chromatic_polynomial,
    coefficients_via_broken_circuits,
    evaluate,
    verify_additivity,
)
from .cycles import (
    CycleCensus,
    count_cycles,
    count_cycles_star,
    count_cycles_through_edge,
    cycle_census,
    girth,
    verify_lemma2,
)
from .graph import (
    Graph,
    contract_edge,
    delete_edge,
    generate,
    parse_edge_list,
    parse_generator,
    simplify,
)

__version__ = "0.1.0"
