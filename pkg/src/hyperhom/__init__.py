"""Exact-arithmetic embedded homology, combinatorial topology, and
persistence for hypergraphs."""

from .errors import HyperhomError, InputError, IntegrityError, ParseError, SizeCapError
from .fieldlin import QQ, ZZ, GF, CoefficientSpec
from .homology import (
    HomologyGroup,
    Workspace,
    embedded_homology,
    induced_homology_map,
    presented_homology,
    relative_embedded_homology,
)
from .hypergraph import (
    Hypergraph,
    HypergraphPair,
    VertexMorphism,
    VertexSpace,
    full_simplex,
    set_algebra,
)
from .lattice import (
    Lattice,
    QuotientPresentation,
    SmithDecomposition,
    hermite_normal_form,
    kernel_lattice,
    lattice_meet_join,
    quotient_presentation,
    smith_normal_form,
)
from .persistence import (
    Barcode,
    Filtration,
    barcode,
    build_filtration,
    iterated_filtration,
    persistent_les_check,
    rank_invariant_2d,
    relative_persistence,
    sublevel_filtration,
)
from .sequences import (
    ExactnessReport,
    cell_structure,
    delta_h_proposition_check,
    les_check,
    mayer_vietoris_check,
    naturality_check,
    subadditivity_check,
)
from .topology import (
    PathDistance,
    boundary,
    closed_complement,
    closure,
    complement,
    core,
    enumerate_open,
    interior,
    is_closed,
    is_open,
    neighborhood,
    openness,
    path_distance,
    topology_operator,
)

__version__ = "0.1.0"
