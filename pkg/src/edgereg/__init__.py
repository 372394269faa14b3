"""Exact Castelnuovo-Mumford regularity of edge ideals of bicyclic graphs.

Closed-form engines (forest / cycle / unicyclic / dumbbell / full bicyclic
characterization) verified against an independent Hochster-formula
homology oracle.
"""

from .graphs import (
    DumbbellShape,
    Graph,
    GraphClass,
    GraphError,
    classify,
    cycle_graph,
    cycle_path_graph,
    decycling_number,
    dumbbell_graph,
    find_dumbbell,
    path_graph,
)
from .ideals import (
    EvenConnection,
    IdealError,
    MonomialIdeal,
    b_sequence,
    banerjee_graph,
    colon_by_monomial,
    edge_ideal,
    even_connections,
    polarize,
    power,
)
from .lozin import LozinSpec, bridge_lozin, lozin_transform
from .matching import (
    MatchingResult,
    induced_matching_number,
    matching_number,
    nu_closed_cycle,
    nu_closed_cycle_path,
    nu_closed_dumbbell,
    nu_closed_path,
    xi3,
)
from .oracle import (
    BettiTable,
    OracleCapError,
    SimplicialComplex,
    betti_table_unpruned,
    graph_regularity_oracle,
    reduced_homology_ranks,
    regularity_oracle,
    regularity_oracle_squarefree,
    subset_pruned_sweep,
)
from .regularity import (
    Bounds,
    RegularityResult,
    bounds,
    compute_regularity,
    reg_bicyclic,
    reg_cycle,
    reg_cycle_power,
    reg_dumbbell_closed,
    reg_dumbbell_power,
    reg_forest,
    reg_unicyclic,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
