from ._core import (
    DominionError,
    Graph,
    approximate,
    audit_graph,
    bound,
    coloring_extraction,
    complete,
    complete_bipartite,
    cycle,
    defined_on,
    families,
    generate,
    hasse_and_classes,
    hypergraph_to_split,
    is_feasible,
    is_split,
    parameters,
    path,
    petersen,
    read_graph,
    set_cover_to_split,
    solve,
    split_witness_to_cover,
    star,
    transform,
    transforms,
)

__all__ = [name for name in dir() if not name.startswith("_")]
