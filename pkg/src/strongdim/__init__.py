"""Strong metric dimension of graphs and of corona and join products."""

from .graph import (
    DistanceMatrix,
    Graph,
    GraphFamilySpec,
    all_pairs_distances,
    build_graph,
    cartesian,
    corona,
    generate,
    join,
    profile,
    read_graph,
    write_graph,
)
from .kernels import BACKEND
from .metric import is_strong_resolving_set, mmd_graph, strongly_resolves
from .solvers import (
    WitnessedValue,
    clique_number,
    dims_bruteforce,
    dims_lower_bound_mmd,
    min_vertex_cover,
    twin_free_clique_number,
)

__version__ = "0.1.0"
