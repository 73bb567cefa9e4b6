"""Coincident-set partition, closed-twin classes, levels and vertex packings."""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .hypergraph import Hypergraph, members


@dataclass(frozen=True)
class CoincidentCell:
    degree: int
    edge_set: tuple[int, ...]
    members: frozenset[int]


@dataclass(frozen=True)
class CoincidentPartition:
    cells: tuple[CoincidentCell, ...]

    def __len__(self) -> int:
        return len(self.cells)

    def __iter__(self):
        return iter(self.cells)

    def cell_of(self, v: int) -> CoincidentCell:
        for c in self.cells:
            if v in c.members:
                return c
        raise KeyError(v)


@dataclass(frozen=True)
class TwinClasses:
    classes: tuple[frozenset[int], ...]


@dataclass(frozen=True)
class NaturalPartition:
    levels: tuple[frozenset[int], ...]
    representatives: tuple[int, ...]


@dataclass(frozen=True)
class Packing:
    members: frozenset[int]

    @property
    def size(self) -> int:
        return len(self.members)


def coincident_partition(H: Hypergraph) -> CoincidentPartition:
    """Group vertices by their exact set of incident edges.

    Cells are ordered by degree, then lexicographically by edge indices.
    """
    groups: dict[tuple[int, ...], list[int]] = {}
    for v, inc in enumerate(H.incidence):
        groups.setdefault(inc, []).append(v)
    keys = sorted(groups, key=lambda k: (len(k), k))
    return CoincidentPartition(
        tuple(CoincidentCell(len(k), k, frozenset(groups[k])) for k in keys)
    )


def coincident_cell_bound(H: Hypergraph) -> int:
    """Upper bound on the number of nonempty coincident cells."""
    delta = max((len(x) for x in H.incidence), default=0)
    return sum(comb(H.m, d) for d in range(1, delta + 1))


def closed_twin_classes(H: Hypergraph) -> TwinClasses:
    groups: dict[int, list[int]] = {}
    for v, cm in enumerate(H.closed_masks):
        groups.setdefault(cm, []).append(v)
    classes = sorted((frozenset(g) for g in groups.values()), key=min)
    return TwinClasses(tuple(classes))


def natural_partition(H: Hypergraph) -> NaturalPartition:
    groups: dict[tuple[int, ...], list[int]] = {}
    for v, inc in enumerate(H.incidence):
        groups.setdefault(inc, []).append(v)
    levels = sorted((frozenset(g) for g in groups.values()), key=min)
    return NaturalPartition(tuple(levels), tuple(min(lv) for lv in levels))


def is_packing(H: Hypergraph, vertices) -> bool:
    seen = 0
    for v in vertices:
        inc = 0
        for j in H.incidence[v]:
            inc |= 1 << j
        if inc & seen:
            return False
        seen |= inc
    return True


def max_packing(H: Hypergraph) -> Packing:
    """Exact maximum packing; the lexicographically smallest among the maxima.

    Vertices are branched in ascending order, include before exclude, and a
    branch survives only if it can strictly beat the incumbent. With that
    ordering the first maximum found is the lexicographically smallest one.
    """
    n = H.n
    # two vertices conflict iff they share an edge, i.e. they are adjacent
    conflict = H.closed_masks
    best = [0, -1]  # mask, size

    def rec(i: int, chosen: int, size: int, avail: int) -> None:
        if size + bin(avail).count("1") <= best[1]:
            return
        if not avail:
            best[0], best[1] = chosen, size
            return
        v = (avail & -avail).bit_length() - 1
        rest = avail & ~(1 << v)
        rec(v + 1, chosen | 1 << v, size + 1, rest & ~conflict[v])
        rec(v + 1, chosen, size, rest)

    rec(0, 0, 0, (1 << n) - 1)
    return Packing(frozenset(members(best[0])))
