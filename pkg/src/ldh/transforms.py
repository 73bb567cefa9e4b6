"""Hypergraph transformations that keep the location-domination number fixed."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import BadK, NotAHypertree
from .hypergraph import Hypergraph, build, members
from .partitions import natural_partition


@dataclass(frozen=True)
class LevelHypergraph:
    hypergraph: Hypergraph
    representatives: tuple[int, ...]  # new id -> original id
    level_map: dict[int, int]  # original id -> original id of its representative
    source: Hypergraph

    def to_original(self, vertices) -> frozenset[int]:
        return frozenset(self.representatives[v] for v in vertices)


def primal_middle(H: Hypergraph) -> Hypergraph:
    """Simple graph joining every two vertices that share an edge.

    A vertex with no neighbor keeps a singleton edge so the vertex set is
    still covered; its open neighborhood stays empty.
    """
    edges = []
    for v in range(H.n):
        nbrs = [u for u in members(H.open_masks[v]) if u > v]
        edges.extend((v, u) for u in nbrs)
        if not H.open_masks[v]:
            edges.append((v,))
    edges.sort()
    return build(H.n, edges, labels=H.labels)


def dual(H: Hypergraph) -> Hypergraph:
    """Swap vertices and edges; vertex ``j`` of the result is edge ``j`` of ``H``."""
    edges = [H.incidence[v] for v in range(H.n)]
    labels = [f"e{j + 1}" for j in range(H.m)]
    return build(H.m, edges, labels=labels)


def k_section(H: Hypergraph, k: int) -> Hypergraph:
    if not isinstance(k, int) or k < 2:
        raise BadK(f"k-section needs k >= 2, got {k!r}")
    edges = []
    for e in H.edges:
        if len(e) <= k:
            edges.append(e)
        else:
            edges.extend(combinations(e, k))
    return build(H.n, edges, labels=H.labels)


def reduce_sperner(H: Hypergraph) -> Hypergraph:
    """Drop repeated edges and edges strictly contained in another edge."""
    ems = H.edge_masks
    keep = [
        e for e, a in zip(H.edges, ems)
        if not any(a != b and a & b == a for b in ems)
    ]
    return build(H.n, keep, labels=H.labels)


def level_hypergraph(H: Hypergraph) -> LevelHypergraph:
    part = natural_partition(H)
    reps = part.representatives
    new_id = {v: i for i, v in enumerate(reps)}
    level_map = {v: min(lv) for lv in part.levels for v in lv}
    edges = [[new_id[v] for v in e if v in new_id] for e in H.edges]
    labels = [H.label(v) for v in reps]
    return LevelHypergraph(build(len(reps), edges, labels=labels), reps, level_map, H)


def is_hypertree(H: Hypergraph) -> bool:
    """Connected and Berge-acyclic: the vertex/edge incidence graph is a tree."""
    incidences = sum(len(e) for e in H.edges)
    return H.is_connected() and incidences == H.n + H.m - 1


def pendant_ld_set(HL: LevelHypergraph) -> frozenset[int]:
    """Vertices of the level hypergraph lying in exactly one edge.

    The hypergraph the levels came from must be a hypertree.
    """
    G = HL.hypergraph
    if not is_hypertree(HL.source):
        raise NotAHypertree("pendant construction requires a hypertree")
    return frozenset(v for v in range(G.n) if len(G.incidence[v]) == 1)
