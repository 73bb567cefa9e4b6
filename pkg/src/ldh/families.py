"""Parameterized hypergraph families, closed-form lambda values and explicit LD sets.

Vertex numbering is fixed per family so constructions are reproducible:

* hyperpath / hypercycle: junction vertices first (``E_i & E_{i+1}`` blocks in
  edge order), then each edge's private vertices, ascending, in edge order.
* hyperstar: center vertices first, then each edge's petal vertices.
* complete t-partite: part by part.
* simple path / cycle: natural order along the path.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import ceil
from typing import Optional, Sequence

from .analysis import verify_ld
from .errors import BadFamilyParams, ConstructionPreconditionFailed, NoConstructionAvailable
from .hypergraph import Hypergraph, build
from .partitions import coincident_partition

KINDS = (
    "hyperpath",
    "hypercycle",
    "hyperstar",
    "complete_tpartite",
    "complete",
    "simple_path",
    "simple_cycle",
)

# observed values for 3-uniform linear hyperpaths below the closed form's range
SMALL_3_UNIFORM_PATHS = {2: 2, 3: 3, 4: 4}


@dataclass(frozen=True)
class FamilySpec:
    kind: str
    m: Optional[int] = None
    k: Optional[int] = None
    overlap: int = 1
    center_size: Optional[int] = None
    petal_sizes: Optional[tuple[int, ...]] = None
    r: Optional[int] = None
    part_sizes: Optional[tuple[int, ...]] = None
    n: Optional[int] = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise BadFamilyParams(f"unknown family kind {self.kind!r}")
        if self.petal_sizes is not None:
            object.__setattr__(self, "petal_sizes", tuple(self.petal_sizes))
        if self.part_sizes is not None:
            object.__setattr__(self, "part_sizes", tuple(self.part_sizes))

    def describe(self) -> str:
        keys = ("m", "k", "overlap", "center_size", "petal_sizes", "r", "part_sizes", "n")
        parts = [f"kind={self.kind}"]
        for key in keys:
            val = getattr(self, key)
            if val is None or (key == "overlap" and self.kind not in ("hyperpath", "hypercycle")):
                continue
            if isinstance(val, tuple):
                val = ",".join(map(str, val))
            parts.append(f"{key}={val}")
        return " ".join(parts)


@dataclass(frozen=True)
class OraclePrediction:
    value: Optional[int]
    theorem: Optional[str]
    preconditions_met: bool
    failed_condition: Optional[str] = None


def hyperpath(m: int, k: int, overlap: int = 1) -> FamilySpec:
    return FamilySpec("hyperpath", m=m, k=k, overlap=overlap)


def hypercycle(m: int, k: int, overlap: int = 1) -> FamilySpec:
    return FamilySpec("hypercycle", m=m, k=k, overlap=overlap)


def hyperstar(m: int = None, k: int = None, center_size: int = 1, petal_sizes=None) -> FamilySpec:
    return FamilySpec("hyperstar", m=m, k=k, center_size=center_size, petal_sizes=petal_sizes)


def complete_tpartite(r: int, part_sizes: Sequence[int]) -> FamilySpec:
    return FamilySpec("complete_tpartite", r=r, part_sizes=tuple(part_sizes))


def complete(n: int) -> FamilySpec:
    return FamilySpec("complete", n=n)


def simple_path(n: int) -> FamilySpec:
    return FamilySpec("simple_path", n=n)


def simple_cycle(n: int) -> FamilySpec:
    return FamilySpec("simple_cycle", n=n)


# -- layouts ---------------------------------------------------------------


def _need(cond: bool, msg: str) -> None:
    if not cond:
        raise BadFamilyParams(msg)


def _chain_layout(spec: FamilySpec, cyclic: bool):
    """Junction blocks and private blocks for paths/cycles."""
    m, k, o = spec.m, spec.k, spec.overlap
    _need(isinstance(m, int) and isinstance(k, int), f"{spec.kind} needs integer m and k")
    _need(o >= 1, "overlap must be >= 1")
    if cyclic:
        _need(m >= 3, "hypercycle needs m >= 3")
        _need(k >= 2 * o, "hypercycle needs k >= 2*overlap")
        n_junctions = m
    else:
        _need(m >= 1 and k >= 1, "hyperpath needs m >= 1 and k >= 1")
        if m >= 2:
            _need(k > o, "hyperpath needs k > overlap")
        if m >= 3:
            _need(k >= 2 * o, "hyperpath with m >= 3 needs k >= 2*overlap")
        n_junctions = m - 1
    junctions = [list(range(j * o, (j + 1) * o)) for j in range(n_junctions)]
    nxt = n_junctions * o
    privates = []
    edges = []
    for i in range(m):
        # edge i touches junction i-1 (previous) and junction i (next)
        shared = []
        if cyclic or i > 0:
            shared += junctions[i - 1]
        if cyclic or i < m - 1:
            shared += junctions[i]
        own = list(range(nxt, nxt + k - len(shared)))
        nxt += len(own)
        privates.append(own)
        edges.append(shared + own)
    return junctions, privates, edges, nxt


def _star_petals(spec: FamilySpec) -> tuple[int, tuple[int, ...]]:
    c = spec.center_size if spec.center_size is not None else 1
    _need(c >= 1, "hyperstar center_size must be >= 1")
    if spec.petal_sizes is not None:
        petals = spec.petal_sizes
        _need(spec.m is None or spec.m == len(petals), "m disagrees with petal_sizes")
    else:
        _need(isinstance(spec.m, int) and isinstance(spec.k, int), "hyperstar needs m and k or petal_sizes")
        petals = (spec.k - c,) * spec.m
    _need(len(petals) >= 2, "hyperstar needs at least 2 edges")
    _need(all(p >= 1 for p in petals), "every hyperstar edge needs at least one petal vertex")
    return c, tuple(petals)


def _parts(spec: FamilySpec) -> list[list[int]]:
    sizes, r = spec.part_sizes, spec.r
    _need(bool(sizes) and all(s >= 1 for s in sizes), "part sizes must all be >= 1")
    _need(isinstance(r, int) and 1 <= r <= len(sizes), "need 1 <= r <= number of parts")
    out, nxt = [], 0
    for s in sizes:
        out.append(list(range(nxt, nxt + s)))
        nxt += s
    return out


def generate(spec: FamilySpec) -> Hypergraph:
    kind = spec.kind
    if kind in ("hyperpath", "hypercycle"):
        _, _, edges, n = _chain_layout(spec, kind == "hypercycle")
        return build(n, edges)
    if kind == "hyperstar":
        c, petals = _star_petals(spec)
        center = list(range(c))
        edges, nxt = [], c
        for p in petals:
            edges.append(center + list(range(nxt, nxt + p)))
            nxt += p
        return build(nxt, edges)
    if kind == "complete_tpartite":
        parts = _parts(spec)
        part_of = {v: i for i, p in enumerate(parts) for v in p}
        n = len(part_of)
        edges = [
            e for e in combinations(range(n), spec.r)
            if len({part_of[v] for v in e}) == spec.r
        ]
        return build(n, edges)
    n = spec.n
    if kind == "complete":
        _need(isinstance(n, int) and n >= 1, "complete needs n >= 1")
        return build(n, [range(n)])
    if kind == "simple_path":
        _need(isinstance(n, int) and n >= 2, "simple_path needs n >= 2")
        return build(n, [(i, i + 1) for i in range(n - 1)])
    if kind == "simple_cycle":
        _need(isinstance(n, int) and n >= 3, "simple_cycle needs n >= 3")
        return build(n, [(i, (i + 1) % n) for i in range(n)])
    raise BadFamilyParams(kind)


# -- oracle ----------------------------------------------------------------


def _hit(value: int, theorem: str) -> OraclePrediction:
    return OraclePrediction(value, theorem, True)


def _miss(reason: str) -> OraclePrediction:
    return OraclePrediction(None, None, False, reason)


def _path_oracle(m: int, k: int, o: int) -> OraclePrediction:
    if m == 1:
        if k == 2:
            return _hit(1, "2.30")
        if k >= 2:
            return _hit(k - 1, "2.18")
        return _miss("single vertex")
    if o == 1:
        if k == 2:
            n = m + 1
            return _hit(1 if n == 2 else ceil(2 * n / 5), "2.32")
        if k == 3:
            if m >= 5:
                a, b = divmod(m - 2, 3)
                return _hit(2 * a + b + 2, "2.33")
            return _hit(SMALL_3_UNIFORM_PATHS[m], "2.33-small")
        return _hit(m * (k - 3) + 2, "cor-2.11")
    if k - o >= 2:
        middle = max(k - 2 * o - 1, 0)
        return _hit((m - 1) * (o - 1) + 2 * (k - o - 1) + (m - 2) * middle, "2.14")
    return _miss("end edges need at least two degree-one vertices")


def _cycle_oracle(m: int, k: int, o: int) -> OraclePrediction:
    if o == 1:
        if k == 2:
            return _hit(ceil(2 * m / 5), "2.32")
        if k == 3:
            if m >= 6:
                a, b = divmod(m, 3)
                return _hit(2 * a + b, "2.34")
            return _miss("3-uniform linear hypercycle needs m >= 6")
        return _hit(m * (k - 3), "cor-2.12")
    if k == 2 * o:
        if k >= 4:
            return _hit(m * (k // 2 - 1), "2.13")
        return _miss("equal-split hypercycle needs k >= 4")
    if k - 2 * o >= 2:
        return _hit(m * (o - 1) + m * (k - 2 * o - 1), "2.7")
    return _miss("no closed form for this overlap")


def _star_oracle(spec: FamilySpec) -> OraclePrediction:
    c, petals = _star_petals(spec)
    m = len(petals)
    n = c + sum(petals)
    if all(p == 1 for p in petals):
        if c > 1:
            return _hit(n - 2, "prop-2.15")
        return _miss("hyperstar with unit center and unit petals")
    if c == 1 and len(set(petals)) == 1 and m >= 3:
        k = petals[0] + 1
        return _hit(m * (k - 2), "cor-2.17")
    if all(p >= 2 for p in petals):
        return _hit(sum(p - 1 for p in petals) + c - 1, "prop-2.16")
    return _miss("mixed petal sizes")


def _partite_oracle(spec: FamilySpec) -> OraclePrediction:
    parts = _parts(spec)
    t = len(parts)
    singles = sum(1 for p in parts if len(p) == 1)
    if spec.r < 2 or t < 2:
        return _miss("need r >= 2 and t >= 2")
    if singles > 1:
        return _miss("more than one partite set of cardinality 1")
    if t == 2 and singles == 1:
        return _miss("two parts with one singleton leave a vertex undominated")
    return _hit(sum(len(p) - 1 for p in parts), "2.22")


def predicted_lambda(spec: FamilySpec) -> OraclePrediction:
    """Closed-form lambda for ``spec`` from the first applicable result."""
    try:
        kind = spec.kind
        if kind == "hyperpath":
            _chain_layout(spec, False)
            return _path_oracle(spec.m, spec.k, spec.overlap)
        if kind == "hypercycle":
            _chain_layout(spec, True)
            return _cycle_oracle(spec.m, spec.k, spec.overlap)
        if kind == "hyperstar":
            return _star_oracle(spec)
        if kind == "complete_tpartite":
            return _partite_oracle(spec)
        n = spec.n
        if kind == "complete":
            if n == 2:
                return _hit(1, "2.30")
            if n is not None and n >= 2:
                return _hit(n - 1, "2.18")
            return _miss("complete hypergraph needs n >= 2")
        if kind == "simple_path":
            if n == 2:
                return _hit(1, "2.30")
            if n is not None and n >= 2:
                return _hit(ceil(2 * n / 5), "2.32")
            return _miss("path needs n >= 2")
        if kind == "simple_cycle":
            if n is not None and n >= 3:
                return _hit(ceil(2 * n / 5), "2.32")
            return _miss("cycle needs n >= 3")
    except BadFamilyParams as exc:
        return _miss(str(exc))
    return _miss("unsupported family")


# -- constructions ---------------------------------------------------------


def _p3_path_set(m: int) -> set[int]:
    # junction v_{i,i+1} has id i-1; private ids from the layout
    _, privates, _, _ = _chain_layout(hyperpath(m, 3), False)
    a, b = divmod(m - 2, 3)
    junc = lambda i: i - 1  # noqa: E731
    S = {privates[0][1], privates[m - 1][1]}
    for i in range(a):
        S.add(junc(3 * i + 2))
        S.add(junc(3 * i + 3))
    if b >= 1:
        S.add(junc(m - 1))
    if b == 2:
        S.add(junc(m - 2))
    return S


def _c3_cycle_set(m: int) -> set[int]:
    # junction v_{i,i+1} has id i-1, with v_{m,1} = m-1
    a, b = divmod(m, 3)
    junc = lambda i: i - 1  # noqa: E731
    S = set()
    for i in range(a):
        S.add(junc(3 * i + 1))
        S.add(junc(3 * i + 2))
    if b >= 1:
        S.add(junc(m))
    if b == 2:
        S.add(junc(m - 1))
    return S


def _all_but_one_per_cell(H: Hypergraph) -> set[int]:
    S = set()
    for cell in coincident_partition(H):
        S.update(sorted(cell.members)[1:])
    return S


def _degree_one_rich(H: Hypergraph) -> bool:
    counts = [0] * H.m
    for inc in H.incidence:
        if len(inc) == 1:
            counts[inc[0]] += 1
    return H.m > 0 and all(c >= 2 for c in counts)


def construct_ld_set(spec: FamilySpec) -> frozenset[int]:
    """Explicit LD set for ``spec`` in this module's vertex numbering."""
    H = generate(spec)
    kind = spec.kind
    S: Optional[set[int]] = None
    if kind == "hyperpath" and spec.k == 3 and spec.overlap == 1 and spec.m >= 5:
        S = _p3_path_set(spec.m)
    elif kind == "hypercycle" and spec.k == 3 and spec.overlap == 1 and spec.m >= 6:
        S = _c3_cycle_set(spec.m)
    elif kind == "complete_tpartite":
        parts = _parts(spec)
        singles = [p[0] for p in parts if len(p) == 1]
        if len(singles) > 1:
            raise ConstructionPreconditionFailed(
                "two partite sets of cardinality 1 share every S-neighborhood",
                witness=tuple(singles[:2]),
            )
        S = {v for p in parts for v in p[1:]}
    elif kind == "hyperstar":
        c, petals = _star_petals(spec)
        if all(p == 1 for p in petals) and c > 1:
            S = set(range(H.n)) - {0, c}
        elif all(p >= 2 for p in petals):
            S = _all_but_one_per_cell(H)
    elif kind == "complete" and H.n >= 2:
        S = set(range(1, H.n))
    elif kind == "hyperpath" and spec.m >= 2 and spec.overlap >= 2 and spec.k - spec.overlap >= 2:
        S = _all_but_one_per_cell(H)
    elif kind in ("hyperpath", "hypercycle") and _degree_one_rich(H):
        S = _all_but_one_per_cell(H)
    if S is None:
        raise NoConstructionAvailable(f"no explicit construction for {spec.describe()}")
    report = verify_ld(H, S)
    if not report.valid:
        raise ConstructionPreconditionFailed(
            f"construction is not locating-dominating ({report.verdict.value})",
            witness=report.witness,
        )
    return frozenset(S)


# -- exhaustive small instances --------------------------------------------


def all_connected_sperner(n: int) -> list[Hypergraph]:
    """Every connected Sperner hypergraph on the labelled vertex set ``0..n-1``."""
    _need(1 <= n <= 5, "exhaustive enumeration supports 1 <= n <= 5")
    subsets = list(range(1, 1 << n))
    full = (1 << n) - 1
    out = []

    def rec(idx: int, chosen: list[int], cover: int) -> None:
        if idx == len(subsets):
            if cover == full and chosen:
                H = build(n, [[v for v in range(n) if s >> v & 1] for s in chosen])
                if H.is_connected():
                    out.append(H)
            return
        s = subsets[idx]
        if all(s & c != s and s & c != c for c in chosen):
            chosen.append(s)
            rec(idx + 1, chosen, cover | s)
            chosen.pop()
        rec(idx + 1, chosen, cover)

    rec(0, [], 0)
    return out
