"""Locating-dominating set verification, bounds and the exact solver."""

from __future__ import annotations

import enum
import warnings
from collections.abc import Iterable, Iterator
from dataclasses import dataclass, field
from itertools import combinations, product
from typing import Optional

from .errors import BadVertexId, InstanceTooLarge
from .hypergraph import Hypergraph, classify, mask_of, members
from .partitions import closed_twin_classes, coincident_partition, max_packing

DEFAULT_MAX_N = 24


class Verdict(str, enum.Enum):
    VALID = "valid"
    NOT_DOMINATING = "not_dominating"
    NOT_LOCATING = "not_locating"


@dataclass(frozen=True)
class LDReport:
    verdict: Verdict
    witness: Optional[tuple[int, ...]]
    s_neighborhoods: dict[int, frozenset[int]] = field(compare=False)

    @property
    def valid(self) -> bool:
        return self.verdict is Verdict.VALID


@dataclass(frozen=True)
class BoundsReport:
    lower_coincident: int
    upper_trivial: int
    upper_packing: Optional[int]
    packing_linear: bool
    packing_degree_one_ok: bool
    partite_lower: Optional[int] = None
    partite_parts: Optional[tuple[frozenset[int], ...]] = None

    @property
    def packing_preconditions_met(self) -> bool:
        return self.packing_linear and self.packing_degree_one_ok


@dataclass(frozen=True)
class LambdaCertificate:
    value: int
    set: frozenset[int]
    report: LDReport


def _as_mask(H: Hypergraph, S: Iterable[int]) -> int:
    mask = 0
    for v in S:
        if not isinstance(v, int) or not 0 <= v < H.n:
            raise BadVertexId(v, H.n)
        mask |= 1 << v
    return mask


def verify_ld(H: Hypergraph, S: Iterable[int]) -> LDReport:
    """Check whether ``S`` is locating-dominating in ``H``.

    A coinciding pair of S-neighborhoods is reported before an empty one, so
    a set failing both ways comes back ``not_locating`` with the smallest
    such pair.
    """
    smask = _as_mask(H, S)
    sig: dict[int, int] = {}
    for v in range(H.n):
        if not smask >> v & 1:
            sig[v] = H.open_masks[v] & smask
    nbhds = {v: frozenset(members(s)) for v, s in sig.items()}

    first: dict[int, int] = {}
    pair = None
    for v, s in sig.items():
        u = first.setdefault(s, v)
        if u != v and (pair is None or (u, v) < pair):
            pair = (u, v)
    if pair is not None:
        return LDReport(Verdict.NOT_LOCATING, pair, nbhds)
    for v, s in sig.items():
        if s == 0:
            return LDReport(Verdict.NOT_DOMINATING, (v,), nbhds)
    return LDReport(Verdict.VALID, None, nbhds)


def is_ld(H: Hypergraph, S: Iterable[int]) -> bool:
    return verify_ld(H, S).valid


def recognize_complete_partite(H: Hypergraph) -> Optional[tuple[frozenset[int], ...]]:
    """Return the parts if ``H`` is a complete t-partite r-uniform hypergraph.

    Parts are recovered as the classes of non-adjacency; the edge set must
    then be exactly the r-subsets meeting every part at most once.
    """
    prof = classify(H)
    if not prof.is_uniform or prof.rank < 2:
        return None
    r = prof.rank
    full = (1 << H.n) - 1
    parts: list[frozenset[int]] = []
    seen = 0
    for v in range(H.n):
        if seen >> v & 1:
            continue
        part = full & ~H.open_masks[v]
        for u in members(part):
            if full & ~H.open_masks[u] != part:
                return None
        parts.append(frozenset(members(part)))
        seen |= part
    if len(parts) < r:
        return None
    expected = set()
    for chosen in combinations(parts, r):
        for pick in product(*(sorted(p) for p in chosen)):
            expected.add(mask_of(pick))
    if expected != set(H.edge_masks):
        return None
    return tuple(parts)


def bounds(H: Hypergraph) -> BoundsReport:
    cells = coincident_partition(H)
    lower = sum(len(c.members) - 1 for c in cells)
    prof = classify(H)
    deg_one: dict[int, int] = {j: 0 for j in range(H.m)}
    for c in cells:
        if c.degree == 1:
            deg_one[c.edge_set[0]] = len(c.members)
    deg_one_ok = H.m > 0 and all(x >= 2 for x in deg_one.values())
    upper_packing = None
    if prof.is_linear and deg_one_ok:
        upper_packing = H.n - max_packing(H).size
    parts = recognize_complete_partite(H)
    return BoundsReport(
        lower_coincident=lower,
        upper_trivial=H.n - 1,
        upper_packing=upper_packing,
        packing_linear=prof.is_linear,
        packing_degree_one_ok=deg_one_ok,
        partite_lower=sum(len(p) - 1 for p in parts) if parts else None,
        partite_parts=parts,
    )


def iter_ld_sets(H: Hypergraph, size: int) -> Iterator[frozenset[int]]:
    """Yield every LD set of exactly ``size`` vertices in lexicographic order.

    Depth-first over vertices in ascending order, include before exclude.
    An excluded vertex is checked as soon as every vertex of its closed
    neighborhood has been decided, and no twin class may lose two members.
    """
    n = H.n
    if size < 0 or size > n:
        return
    nbr = H.open_masks
    twin_of = [0] * n
    for idx, cls in enumerate(closed_twin_classes(H).classes):
        for v in cls:
            twin_of[v] = idx
    settle_at: list[list[int]] = [[] for _ in range(n)]
    for u in range(n):
        settle_at[max(u, nbr[u].bit_length() - 1)].append(u)

    out_of_class = [False] * (max(twin_of, default=0) + 1)
    seen: set[int] = set()

    def settle(i: int, chosen: int) -> Optional[list[int]]:
        added = []
        for u in settle_at[i]:
            if chosen >> u & 1:
                continue
            s = nbr[u] & chosen
            if s == 0 or s in seen:
                for a in added:
                    seen.discard(a)
                return None
            seen.add(s)
            added.append(s)
        return added

    def rec(i: int, chosen: int, count: int) -> Iterator[int]:
        if i == n:
            yield chosen
            return
        if count < size:
            with_i = chosen | 1 << i
            added = settle(i, with_i)
            if added is not None:
                yield from rec(i + 1, with_i, count + 1)
                for a in added:
                    seen.discard(a)
        if n - i - 1 >= size - count:
            t = twin_of[i]
            if not out_of_class[t]:
                out_of_class[t] = True
                added = settle(i, chosen)
                if added is not None:
                    yield from rec(i + 1, chosen, count)
                    for a in added:
                        seen.discard(a)
                out_of_class[t] = False

    for mask in rec(0, 0, 0):
        yield frozenset(members(mask))


def lambda_exact(H: Hypergraph, max_n: int = DEFAULT_MAX_N) -> LambdaCertificate:
    """Location-domination number with the lexicographically smallest witness."""
    if H.n > max_n:
        raise InstanceTooLarge(f"n={H.n} exceeds search cap {max_n}")
    if not H.is_connected():
        warnings.warn("lambda_exact on a disconnected hypergraph", RuntimeWarning, stacklevel=2)
    start = H.n - len(coincident_partition(H))
    for k in range(start, H.n + 1):
        found = next(iter_ld_sets(H, k), None)
        if found is not None:
            return LambdaCertificate(k, found, verify_ld(H, found))
    raise AssertionError("the full vertex set is always locating-dominating")


def minimum_ld_sets(H: Hypergraph, max_n: int = DEFAULT_MAX_N) -> list[frozenset[int]]:
    cert = lambda_exact(H, max_n)
    return list(iter_ld_sets(H, cert.value))
