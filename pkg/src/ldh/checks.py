"""Theorem-versus-solver agreement suites behind ``ldh check``.

Each suite walks its parameter ranges, builds the instances, runs the exact
solver and compares against the closed form or structural claim. Suites for
general statements run over every connected Sperner hypergraph of the given
orders (exhaustive enumeration), so their parameter is ``n``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, product
from typing import Callable, Iterable, Iterator

from . import families as fam
from .analysis import DEFAULT_MAX_N, bounds, is_ld, iter_ld_sets, lambda_exact, verify_ld
from .errors import BadFamilyParams, ConstructionPreconditionFailed, RangeTooLarge, UnknownTheorem
from .hypergraph import Hypergraph, build, classify, members
from .partitions import coincident_partition, max_packing
from .transforms import dual, is_hypertree, k_section, level_hypergraph, pendant_ld_set, primal_middle, reduce_sperner

ENUM_MAX_N = 5


@dataclass(frozen=True)
class CaseResult:
    params: str
    passed: bool
    detail: str = ""


@dataclass
class CheckReport:
    theorem: str
    title: str
    cases: list[CaseResult] = field(default_factory=list)

    @property
    def passed(self) -> int:
        return sum(c.passed for c in self.cases)

    @property
    def failed(self) -> int:
        return len(self.cases) - self.passed

    @property
    def ok(self) -> bool:
        return self.failed == 0 and bool(self.cases)

    def lines(self) -> list[str]:
        out = []
        for c in self.cases:
            tag = "PASS" if c.passed else "FAIL"
            line = f"{tag} theorem={self.theorem} {c.params}"
            if c.detail:
                line += f" {c.detail}"
            out.append(line)
        out.append(f"summary theorem={self.theorem} pass={self.passed} fail={self.failed}")
        return out


@dataclass(frozen=True)
class Check:
    theorem: str
    title: str
    defaults: dict
    run: Callable[[dict, int], Iterator[CaseResult]]


# -- helpers ---------------------------------------------------------------


def _solve(H: Hypergraph, max_n: int) -> int:
    if H.n > max_n:
        raise RangeTooLarge(f"instance with n={H.n} exceeds solver cap {max_n}")
    return lambda_exact(H, max_n).value


def _enumerated(params: dict) -> Iterator[tuple[int, list[Hypergraph]]]:
    for n in params["n"]:
        if n > ENUM_MAX_N:
            raise RangeTooLarge(f"exhaustive enumeration supports n <= {ENUM_MAX_N}")
        yield n, fam.all_connected_sperner(n)


def _format_edges(H: Hypergraph) -> str:
    return "edges=" + "|".join(",".join(map(str, e)) for e in H.edges)


def _family_cases(specs: Iterable[fam.FamilySpec], max_n: int, expect_theorem=None):
    for spec in specs:
        try:
            H = fam.generate(spec)
        except BadFamilyParams as exc:
            yield CaseResult(spec.describe(), False, f"bad-params={exc}")
            continue
        pred = fam.predicted_lambda(spec)
        if H.n > max_n:
            raise RangeTooLarge(f"{spec.describe()} has n={H.n} > cap {max_n}")
        got = _solve(H, max_n)
        ok = pred.preconditions_met and pred.value == got
        if expect_theorem and pred.theorem not in expect_theorem:
            ok = False
        yield CaseResult(
            spec.describe(),
            ok,
            f"via={pred.theorem} expected={pred.value} got={got}",
        )


def _over_instances(params, test: Callable[[Hypergraph], bool], select=None):
    """One case per order n; fails with the first offending instance."""
    for n, graphs in _enumerated(params):
        checked = 0
        bad = None
        for H in graphs:
            if select is not None and not select(H):
                continue
            checked += 1
            if not test(H):
                bad = H
                break
        detail = f"instances={checked}"
        if bad is not None:
            detail += " counterexample " + _format_edges(bad)
        yield CaseResult(f"n={n}", bad is None, detail)


def _degree_one_counts(H: Hypergraph) -> list[int]:
    counts = [0] * H.m
    for inc in H.incidence:
        if len(inc) == 1:
            counts[inc[0]] += 1
    return counts


def _is_p2(H: Hypergraph) -> bool:
    return H.n == 2 and H.edges == ((0, 1),)


# -- suites ----------------------------------------------------------------


def _thm_lower(params, max_n):
    def test(H):
        lam = _solve(H, max_n)
        b = bounds(H)
        cells = coincident_partition(H)
        S = lambda_exact(H, max_n).set
        return b.lower_coincident <= lam and all(
            len(S & c.members) >= len(c.members) - 1 for c in cells
        )

    yield from _over_instances(params, test)


def _thm_sharp(params, max_n):
    def sel(H):
        return all(c >= 2 for c in _degree_one_counts(H))

    yield from _over_instances(params, lambda H: _solve(H, max_n) == bounds(H).lower_coincident, sel)


def _thm_upper(params, max_n):
    for n in params["n"]:
        H = fam.generate(fam.complete(n))
        got = _solve(H, max_n)
        yield CaseResult(f"complete n={n}", got == n - 1, f"expected={n - 1} got={got}")


def _thm_packing(params, max_n):
    def sel(H):
        return classify(H).is_linear and all(c >= 2 for c in _degree_one_counts(H))

    def test(H):
        P = max_packing(H).members
        rest = set(range(H.n)) - P
        return _solve(H, max_n) <= H.n - len(P) and is_ld(H, rest)

    yield from _over_instances(params, test, sel)


def _thm_pendant(params, max_n):
    def test(H):
        HL = level_hypergraph(H)
        return is_ld(HL.hypergraph, pendant_ld_set(HL))

    yield from _over_instances(params, test, is_hypertree)


def _thm_primal(params, max_n):
    yield from _over_instances(params, lambda H: _solve(H, max_n) == _solve(primal_middle(H), max_n))


def _thm_dual(params, max_n):
    def test(H):
        D = dual(H)
        return _solve(D, max_n) == _solve(primal_middle(D), max_n)

    yield from _over_instances(params, test)


def _thm_single(params, max_n):
    yield from _over_instances(params, lambda H: (_solve(H, max_n) == 1) == _is_p2(H))


def _inject_subsets(H: Hypergraph) -> Hypergraph:
    extra = [e[:-1] for e in H.edges if len(e) >= 2]
    return build(H.n, list(H.edges) + extra)


def _thm_reduce(params, max_n):
    def test(H):
        G = _inject_subsets(H)
        R = reduce_sperner(G)
        return set(R.edges) == set(H.edges) and _solve(R, max_n) == _solve(G, max_n) == _solve(H, max_n)

    yield from _over_instances(params, test)


def _lem_clique(params, max_n):
    def test(H):
        ems = H.edge_masks
        for size in range(1, H.m + 1):
            for chosen in combinations(range(H.m), size):
                vmask = 0
                for j in chosen:
                    vmask |= ems[j]
                verts = members(vmask)
                if not all(
                    any(ems[j] >> a & 1 and ems[j] >> b & 1 for j in chosen)
                    for a, b in combinations(verts, 2)
                ):
                    continue
                for r in range(len(verts) + 1):
                    for S in combinations(verts, r):
                        if is_ld(H, S) and len(S) < len(verts) - 1:
                            return False
        return True

    yield from _over_instances(params, test)


def _lem_section(params, max_n):
    def test(H):
        rank = max(len(e) for e in H.edges)
        for k in range(2, max(rank, 2) + 1):
            Hk = k_section(H, k)
            for r in range(H.n + 1):
                for S in combinations(range(H.n), r):
                    if is_ld(H, S) != is_ld(Hk, S):
                        return False
        return True

    yield from _over_instances(params, test)


def _parts_specs(params):
    r = params["r"][0]
    for parts in params["parts"]:
        yield fam.complete_tpartite(r, parts)


def _thm_partite(params, max_n):
    for spec in _parts_specs(params):
        H = fam.generate(spec)
        singles = [p for p in spec.part_sizes if p == 1]
        if len(singles) >= 2:
            # the union-minus-representatives set must fail, and be refused
            parts = fam._parts(spec)
            naive = {v for p in parts for v in p[1:]}
            report = verify_ld(H, naive)
            try:
                fam.construct_ld_set(spec)
                refused = False
            except ConstructionPreconditionFailed:
                refused = True
            ok = refused and not report.valid
            yield CaseResult(spec.describe(), ok, f"rejected={str(refused).lower()} witness={_ids(report.witness)}")
            continue
        try:
            S = fam.construct_ld_set(spec)
        except ConstructionPreconditionFailed as exc:
            yield CaseResult(spec.describe(), False, f"construction-failed witness={_ids(exc.witness)}")
            continue
        got = _solve(H, max_n)
        yield CaseResult(spec.describe(), len(S) == got, f"size={len(S)} lambda={got}")


def _lem_partite(params, max_n):
    for spec in _parts_specs(params):
        H = fam.generate(spec)
        parts = [set(p) for p in fam._parts(spec)]
        lam = _solve(H, max_n)
        sets = list(iter_ld_sets(H, lam))
        ok = all(len(S & p) >= len(p) - 1 for S in sets for p in parts)
        yield CaseResult(spec.describe(), ok and bool(sets), f"minimum_sets={len(sets)} lambda={lam}")


def _rmk_partite(params, max_n):
    for spec in _parts_specs(params):
        H = fam.generate(spec)
        singles = {p[0] for p in fam._parts(spec) if len(p) == 1}
        lam = _solve(H, max_n)
        sets = list(iter_ld_sets(H, lam))
        want = max(len(singles) - 1, 0)
        ok = all(len(S & singles) == want for S in sets)
        yield CaseResult(spec.describe(), ok, f"singletons={len(singles)} minimum_sets={len(sets)}")


def _cor_linear(params, max_n):
    specs = []
    for k in params["k"]:
        for m in params["m"]:
            specs.append(fam.hyperpath(m, k))
            if m >= 3:
                specs.append(fam.hypercycle(m, k))
            if m >= 2:
                specs.append(fam.hyperstar(m, k))
    for spec in specs:
        H = fam.generate(spec)
        formula = sum(len(c.members) - 1 for c in coincident_partition(H) if c.degree == 1)
        got = _solve(H, max_n)
        yield CaseResult(spec.describe(), formula == got, f"expected={formula} got={got}")


def _ids(w) -> str:
    return ",".join(map(str, w)) if w else "-"


def _grid(builder, *keys):
    def run(params, max_n):
        def specs():
            for combo in product(*(params[k] for k in keys)):
                yield builder(**dict(zip(keys, combo)))

        yield from _family_cases(specs(), max_n)

    return run


def _paths_and_cycles(params, max_n):
    specs = [fam.simple_path(n) for n in params["n"] if n >= 2]
    specs += [fam.simple_cycle(n) for n in params["n"] if n >= 3]
    yield from _family_cases(specs, max_n)


def _star_unit(params, max_n):
    specs = (
        fam.hyperstar(center_size=c, petal_sizes=(1,) * m)
        for c in params["center"] for m in params["m"]
    )
    yield from _family_cases(specs, max_n)


def _star_wide(params, max_n):
    specs = (
        fam.hyperstar(center_size=c, petal_sizes=(p,) * m)
        for c in params["center"] for m in params["m"] for p in params["k"]
    )
    yield from _family_cases(specs, max_n)


_R = lambda a, b: list(range(a, b + 1))  # noqa: E731

CHECKS: dict[str, Check] = {c.theorem: c for c in [
    Check("2.6", "coincident lower bound and per-cell inequality", {"n": _R(2, 4)}, _thm_lower),
    Check("2.7", "lower bound is exact with two degree-one vertices per edge", {"n": _R(2, 5)}, _thm_sharp),
    Check("2.13", "equal-split hypercycles", {"m": _R(3, 5), "k": [4, 6]},
          _grid(lambda m, k: fam.hypercycle(m, k, k // 2), "m", "k")),
    Check("2.14", "hyperpaths with wide overlaps", {"m": _R(2, 4), "k": _R(4, 6), "overlap": [2]},
          _grid(lambda m, k, overlap: fam.hyperpath(m, k, overlap), "m", "k", "overlap")),
    Check("2.18", "complete hypergraphs need n-1", {"n": _R(2, 8)}, _thm_upper),
    Check("2.22", "complete t-partite construction", {"r": [2], "parts": [(2, 2), (1, 2, 2), (2, 2, 2), (1, 1, 2)]},
          _thm_partite),
    Check("2.24", "packing upper bound", {"n": _R(2, 5)}, _thm_packing),
    Check("2.26", "pendant vertices of level hypergraphs of hypertrees", {"n": _R(2, 5)}, _thm_pendant),
    Check("2.27", "primal graph invariance", {"n": _R(2, 4)}, _thm_primal),
    Check("2.28", "dual versus its middle graph", {"n": _R(2, 4)}, _thm_dual),
    Check("2.30", "lambda one only for P2", {"n": _R(2, 4)}, _thm_single),
    Check("2.31", "Sperner reduction invariance", {"n": _R(2, 4)}, _thm_reduce),
    Check("2.32", "simple paths and cycles", {"n": _R(2, 10)}, _paths_and_cycles),
    Check("2.33", "3-uniform linear hyperpaths", {"m": _R(5, 8)},
          _grid(lambda m: fam.hyperpath(m, 3), "m")),
    Check("2.33-small", "3-uniform linear hyperpaths, m=2..4", {"m": _R(2, 4)},
          _grid(lambda m: fam.hyperpath(m, 3), "m")),
    Check("2.34", "3-uniform linear hypercycles", {"m": _R(6, 8)},
          _grid(lambda m: fam.hypercycle(m, 3), "m")),
    Check("cor-2.10", "uniform linear families: sum over degree-one cells", {"m": _R(2, 3), "k": [4, 5]}, _cor_linear),
    Check("cor-2.11", "k-uniform linear hyperpaths", {"m": _R(2, 4), "k": [4, 5]},
          _grid(lambda m, k: fam.hyperpath(m, k), "m", "k")),
    Check("cor-2.12", "k-uniform linear hypercycles", {"m": _R(3, 4), "k": [4, 5]},
          _grid(lambda m, k: fam.hypercycle(m, k), "m", "k")),
    Check("cor-2.17", "k-uniform linear hyperstars", {"m": _R(3, 4), "k": _R(3, 4)},
          _grid(lambda m, k: fam.hyperstar(m, k), "m", "k")),
    Check("prop-2.15", "hyperstars with unit petals", {"center": _R(2, 3), "m": _R(2, 4)}, _star_unit),
    Check("prop-2.16", "hyperstars with wide petals", {"center": _R(1, 2), "m": _R(2, 3), "k": _R(2, 3)}, _star_wide),
    Check("lem-2.19", "LD sets inside a clique", {"n": _R(2, 4)}, _lem_clique),
    Check("lem-2.20", "k-section preserves LD sets", {"n": _R(2, 4)}, _lem_section),
    Check("lem-2.21", "minimum sets keep all but one per part", {"r": [2], "parts": [(2, 2), (1, 2, 2), (1, 1, 2), (2, 3)]},
          _lem_partite),
    Check("rmk-2.23", "singleton parts in minimum sets", {"r": [2], "parts": [(2, 2), (1, 2, 2), (1, 1, 2), (1, 1, 1, 2)]},
          _rmk_partite),
]}

_PREFIXES = ("thm-", "cor-", "prop-", "lem-", "rmk-")


def resolve(theorem: str) -> Check:
    key = theorem.strip().lower()
    if key in CHECKS:
        return CHECKS[key]
    bare = key
    for p in _PREFIXES:
        if bare.startswith(p):
            bare = bare[len(p):]
    for name, check in CHECKS.items():
        stripped = name
        for p in _PREFIXES:
            if stripped.startswith(p):
                stripped = stripped[len(p):]
        if stripped == bare:
            return check
    raise UnknownTheorem(f"unknown theorem {theorem!r}; known: {', '.join(CHECKS)}")


def check_theorem(theorem: str, overrides: dict = None, max_n: int = DEFAULT_MAX_N) -> CheckReport:
    check = resolve(theorem)
    params = dict(check.defaults)
    for key, val in (overrides or {}).items():
        if val is None:
            continue
        if key not in params:
            raise BadFamilyParams(f"theorem {check.theorem} takes parameters {sorted(params)}, not {key!r}")
        params[key] = list(val)
    report = CheckReport(check.theorem, check.title)
    report.cases.extend(check.run(params, max_n))
    return report
