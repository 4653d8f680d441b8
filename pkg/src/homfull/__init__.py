"""Recognition, construction, and brute-force verification for
homomorphically full graphs, oriented graphs, and antisymmetric digraphs."""

from .graphs import (
    AdjacentPair,
    Digraph,
    EvenOrder,
    Graph,
    GraphError,
    KindMismatch,
    OrientedGraph,
    TooLarge,
    TwoDipath,
    as_digraph,
    closure,
    directed_distance,
    identify,
    oriented_identify,
    relabel,
    underlying,
)
from .generate import (
    all_graphs,
    all_oriented_graphs,
    bn_oclique,
    homfull_graph_generator,
    orientations,
    random_dag,
    random_orientation,
    random_oriented_graph,
    regular_tournament,
)
from .isomorphism import (
    CanonicalForm,
    VertexMap,
    are_isomorphic,
    canonical_form,
    check_vertex_map,
    induced_embedding,
    subgraph_embedding,
)
from .recognize import (
    Verdict,
    all_pairs_comparable,
    elementary_pairs,
    forbidden_subgraph_check,
    is_hom_full_antisym,
    is_hom_full_graph,
    is_hom_full_oriented,
    is_oriented_clique,
    is_quasi_transitive,
    neighbourhood_comparable,
)
from .homomorphisms import (
    complete_images,
    hom_exists,
    is_hom_full_by_definition,
    minimum_image,
    oriented_core,
)
from .gadgets import (
    GadgetJ,
    NoGadgetFound,
    NotAcyclic,
    NotCograph,
    NotOclique,
    ReductionInstance,
    dagiso_gadget,
    derive_fig1_fixture,
    derive_gadget_J,
    embed_in_oclique,
    fullorient_gadget,
    has_homfull_orientation,
    has_oclique_orientation,
    homfull_gadget,
    orient_gadget,
    quasi_transitive_orientation,
)

__version__ = "0.1.0"
