"""Toric partial orders: flip classes of acyclic orientations and their structure."""

from .antichains import (
    is_combinatorial_antichain,
    is_geometric_antichain,
    min_antichain_cover,
    min_chain_cover,
    toric_width,
)
from .closure import extreme_points, graphs_between, ordinary_closure, toric_closure, toric_hasse
from .counting import Polynomial2, count_check, tutte
from .cyclic import CyclicWord, cyclic_restriction
from .flips import (
    DirectedCycleClass,
    ToricPoset,
    canonical,
    equivalent,
    flip_class,
    flip_classes,
    flip_sources,
    nu,
)
from .geometry import TorusPoint, alpha, point_for, sample_classes
from .graph import (
    DirectedEdgeSet,
    Graph,
    Orientation,
    enumerate_acyclic,
    is_acyclic,
    orientation_from_order,
)
from .toric import (
    all_toric_chains,
    is_toric_chain,
    is_toric_extension,
    toric_directed_paths,
    toric_total_extensions,
)

__version__ = "0.1.0"
