"""Homotopy covers of finite graphs: graphs, walks, covers and deck groups."""

from ._homcover import (
    Error,
    FoldedCover,
    Graph,
    Morphism,
    are_isomorphic,
    build_folded_cover,
    check_cover,
    cyclic_quotient,
    enumerate_covers,
    find_fold,
    fundamental_group,
    generate,
    homotopic_maps,
    homotopic_walks,
    lift_homotopy,
    lift_walk,
    oracle_homotopic,
    paper_g_covering,
    pleat,
    prune_normal_form,
)

__all__ = [
    "Error",
    "FoldedCover",
    "Graph",
    "Morphism",
    "are_isomorphic",
    "build_folded_cover",
    "check_cover",
    "cyclic_quotient",
    "enumerate_covers",
    "find_fold",
    "fundamental_group",
    "generate",
    "homotopic_maps",
    "homotopic_walks",
    "lift_homotopy",
    "lift_walk",
    "oracle_homotopic",
    "paper_g_covering",
    "pleat",
    "prune_normal_form",
]
