"""Immutable hypergraph representation, neighborhoods and structural predicates.

Vertices are dense integer ids ``0..n-1``. Each edge is stored as an
ascending tuple of vertex ids; the edge list keeps construction order with
duplicates collapsed to their first occurrence.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Optional

from .errors import BadVertexId, EmptyEdge, NotConnected, NotSperner, UncoveredVertex


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def members(mask: int) -> tuple[int, ...]:
    """Ascending ids of the set bits in ``mask``."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return tuple(out)


@dataclass(frozen=True)
class Hypergraph:
    n: int
    edges: tuple[tuple[int, ...], ...]
    labels: Optional[tuple[str, ...]] = None

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def vertices(self) -> range:
        return range(self.n)

    def label(self, v: int) -> str:
        return self.labels[v] if self.labels else str(v)

    @cached_property
    def edge_masks(self) -> tuple[int, ...]:
        return tuple(mask_of(e) for e in self.edges)

    @cached_property
    def incidence(self) -> tuple[tuple[int, ...], ...]:
        """Per vertex, the ascending indices of the edges containing it."""
        inc: list[list[int]] = [[] for _ in range(self.n)]
        for j, e in enumerate(self.edges):
            for v in e:
                inc[v].append(j)
        return tuple(tuple(x) for x in inc)

    @cached_property
    def closed_masks(self) -> tuple[int, ...]:
        out = [1 << v for v in range(self.n)]
        for em in self.edge_masks:
            for v in members(em):
                out[v] |= em
        return tuple(out)

    @cached_property
    def open_masks(self) -> tuple[int, ...]:
        return tuple(c & ~(1 << v) for v, c in enumerate(self.closed_masks))

    def _check(self, v: int) -> None:
        if not isinstance(v, int) or not 0 <= v < self.n:
            raise BadVertexId(v, self.n)

    def neighborhood(self, v: int, closed: bool = False) -> frozenset[int]:
        self._check(v)
        mask = self.closed_masks[v] if closed else self.open_masks[v]
        return frozenset(members(mask))

    def degree(self, v: int) -> int:
        self._check(v)
        return len(self.incidence[v])

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        seen = 1
        frontier = 1
        while frontier:
            nxt = 0
            for v in members(frontier):
                nxt |= self.closed_masks[v]
            frontier = nxt & ~seen
            seen |= nxt
        return seen == (1 << self.n) - 1

    def is_sperner(self) -> bool:
        ems = self.edge_masks
        for i, a in enumerate(ems):
            for j, b in enumerate(ems):
                if i != j and a & b == a:
                    return False
        return True

    def with_edges(self, edges: Sequence[Iterable[int]]) -> "Hypergraph":
        """Same vertex set and labels, new edge list (validated)."""
        return build(self.n, edges, labels=self.labels)


@dataclass(frozen=True)
class StructureProfile:
    rank: int
    is_uniform: bool
    uniform_k: Optional[int]
    is_linear: bool
    is_sperner: bool
    is_connected: bool
    is_complete: bool
    max_degree: int
    is_regular: bool
    regular_degree: Optional[int]


def build(
    n: int,
    edges: Iterable[Iterable[int]],
    require_sperner: bool = False,
    require_connected: bool = False,
    labels: Optional[Sequence[str]] = None,
) -> Hypergraph:
    """Validate and construct a hypergraph.

    Duplicate edges are dropped silently; every vertex must lie in some edge.
    """
    if not isinstance(n, int) or n < 0:
        raise ValueError(f"vertex count must be a non-negative int, got {n!r}")
    out: list[tuple[int, ...]] = []
    seen: set[tuple[int, ...]] = set()
    covered = 0
    for raw in edges:
        e = tuple(sorted(set(raw)))
        if not e:
            raise EmptyEdge("edge must contain at least one vertex")
        for v in e:
            if not isinstance(v, int) or not 0 <= v < n:
                raise BadVertexId(v, n)
        covered |= mask_of(e)
        if e not in seen:
            seen.add(e)
            out.append(e)
    if covered != (1 << n) - 1:
        missing = next(v for v in range(n) if not covered >> v & 1)
        raise UncoveredVertex(missing)
    if labels is not None:
        labels = tuple(str(x) for x in labels)
        if len(labels) != n:
            raise ValueError(f"expected {n} labels, got {len(labels)}")
    H = Hypergraph(n, tuple(out), labels)
    if require_sperner and not H.is_sperner():
        raise NotSperner("some edge is contained in another edge")
    if require_connected and not H.is_connected():
        raise NotConnected("hypergraph is not connected")
    return H


def neighborhood(H: Hypergraph, v: int, closed: bool = False) -> frozenset[int]:
    return H.neighborhood(v, closed)


def degree(H: Hypergraph, v: int) -> int:
    return H.degree(v)


def classify(H: Hypergraph) -> StructureProfile:
    sizes = {len(e) for e in H.edges}
    rank = max(sizes, default=0)
    ems = H.edge_masks
    linear = all(bin(a & b).count("1") <= 1 for a, b in combinations(ems, 2))
    full = (1 << H.n) - 1
    complete = all(c == full for c in H.closed_masks)
    degrees = {len(x) for x in H.incidence}
    return StructureProfile(
        rank=rank,
        is_uniform=len(sizes) == 1,
        uniform_k=rank if len(sizes) == 1 else None,
        is_linear=linear,
        is_sperner=H.is_sperner(),
        is_connected=H.is_connected(),
        is_complete=complete,
        max_degree=max(degrees, default=0),
        is_regular=len(degrees) == 1,
        regular_degree=next(iter(degrees)) if len(degrees) == 1 else None,
    )
