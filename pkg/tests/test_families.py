import pytest

import oracles
from ldh import construct_ld_set, generate, lambda_exact, predicted_lambda, verify_ld
from ldh.errors import BadFamilyParams, ConstructionPreconditionFailed, NoConstructionAvailable
from ldh.families import (
    SMALL_3_UNIFORM_PATHS,
    FamilySpec,
    all_connected_sperner,
    complete,
    complete_tpartite,
    hypercycle,
    hyperpath,
    hyperstar,
    simple_cycle,
    simple_path,
)


def test_generate_shapes():
    H = generate(hyperpath(3, 4))
    assert (H.n, H.m) == (10, 3)
    assert H.edges == ((0, 2, 3, 4), (0, 1, 5, 6), (1, 7, 8, 9))
    S = generate(hyperstar(3, 3))
    assert S.n == 7 and all(0 in e for e in S.edges)
    K = generate(complete_tpartite(2, (2, 2)))
    assert (K.n, K.m) == (4, 4)
    C = generate(hypercycle(4, 4, overlap=2))
    assert C.n == 8 and all(len(e) == 4 for e in C.edges)
    assert generate(simple_cycle(5)).edges[-1] == (0, 4)


def test_generated_profiles():
    from ldh import classify

    p = classify(generate(hyperpath(5, 3)))
    assert p.is_uniform and p.uniform_k == 3 and p.is_linear and p.is_connected
    assert classify(generate(complete(4))).is_complete


@pytest.mark.parametrize(
    "spec",
    [
        hyperpath(1, 3),
        hyperpath(2, 2, overlap=2),
        hypercycle(2, 4),
        hypercycle(3, 3, overlap=2),
        hyperstar(1, 3),
        complete_tpartite(3, (2, 2)),
        simple_path(1),
        simple_cycle(2),
    ],
)
def test_bad_params(spec):
    if spec.kind == "hyperpath" and spec.m == 1:
        generate(spec)  # a single edge is a valid hyperpath
        return
    with pytest.raises(BadFamilyParams):
        generate(spec)


def test_unknown_kind():
    with pytest.raises(BadFamilyParams):
        FamilySpec("wheel", n=5)


def test_oracle_examples():
    assert predicted_lambda(hyperpath(5, 3)).value == 4
    assert predicted_lambda(hyperpath(5, 3)).theorem == "2.33"
    assert predicted_lambda(hyperpath(3, 4)).value == 5
    assert predicted_lambda(hypercycle(6, 3)).value == 4
    assert predicted_lambda(simple_path(2)).value == 1
    assert predicted_lambda(complete(5)).value == 4
    assert predicted_lambda(complete_tpartite(2, (1, 2, 2))).value == 2
    for m, v in SMALL_3_UNIFORM_PATHS.items():
        assert predicted_lambda(hyperpath(m, 3)).value == v


def test_oracle_misses():
    p = predicted_lambda(complete_tpartite(2, (1, 1, 2)))
    assert not p.preconditions_met and p.value is None and "cardinality 1" in p.failed_condition
    p = predicted_lambda(hypercycle(2, 3))
    assert not p.preconditions_met
    assert not predicted_lambda(hyperstar(center_size=1, petal_sizes=(1, 1))).preconditions_met


SOLVABLE = [
    hyperpath(2, 3), hyperpath(4, 4), hyperpath(3, 5, overlap=2), hyperpath(3, 6, overlap=2),
    hypercycle(3, 5), hypercycle(7, 3), hypercycle(3, 6, overlap=2), hypercycle(4, 4, overlap=2),
    hyperstar(3, 4), hyperstar(center_size=2, petal_sizes=(1, 1, 1)),
    hyperstar(center_size=2, petal_sizes=(2, 3)),
    complete_tpartite(2, (2, 3)), complete_tpartite(3, (2, 2, 2)), complete_tpartite(2, (1, 3, 2)),
    complete(5), simple_path(7), simple_cycle(8),
]


@pytest.mark.parametrize("spec", SOLVABLE, ids=lambda s: s.describe())
def test_oracle_matches_brute_force(spec):
    H = generate(spec)
    p = predicted_lambda(spec)
    assert p.preconditions_met
    assert p.value == oracles.lambda_brute(H.n, H.edges)[0]


@pytest.mark.parametrize(
    "spec",
    [hyperpath(m, 3) for m in range(5, 11)]
    + [hypercycle(m, 3) for m in range(6, 11)]
    + [complete_tpartite(2, (2, 2)), complete_tpartite(2, (1, 2, 2)), complete_tpartite(3, (1, 2, 3))]
    + [hyperstar(center_size=3, petal_sizes=(1, 1)), hyperstar(center_size=1, petal_sizes=(2, 4))]
    + [complete(4), hyperpath(3, 6, overlap=2), hypercycle(3, 5)],
    ids=lambda s: s.describe(),
)
def test_constructions_are_minimum(spec):
    H = generate(spec)
    S = construct_ld_set(spec)
    assert verify_ld(H, S).valid
    assert len(S) == lambda_exact(H).value


def test_p3_construction_layout():
    assert construct_ld_set(hyperpath(5, 3)) == {1, 2, 5, 10}
    assert construct_ld_set(hypercycle(6, 3)) == {0, 1, 3, 4}


def test_two_singleton_parts_rejected():
    with pytest.raises(ConstructionPreconditionFailed) as info:
        construct_ld_set(complete_tpartite(2, (1, 1, 2)))
    assert info.value.witness == (0, 1)


def test_two_part_singleton_rejected_after_verification():
    # one singleton against a single other part: the singleton is left undominated
    with pytest.raises(ConstructionPreconditionFailed):
        construct_ld_set(complete_tpartite(2, (1, 2)))
    assert lambda_exact(generate(complete_tpartite(2, (1, 2)))).value == 2


def test_no_construction():
    with pytest.raises(NoConstructionAvailable):
        construct_ld_set(simple_path(6))


def _count_connected_sperner(n):
    from itertools import combinations

    subsets = [frozenset(c) for r in range(1, n + 1) for c in combinations(range(n), r)]
    total = 0
    for size in range(1, len(subsets) + 1):
        for fam in combinations(subsets, size):
            if any(a < b for a in fam for b in fam):
                continue
            if frozenset().union(*fam) != frozenset(range(n)):
                continue
            comp, grew = set(fam[0]), True
            while grew:
                grew = False
                for e in fam:
                    if e & comp and not e <= comp:
                        comp |= e
                        grew = True
            total += len(comp) == n
    return total


def test_all_connected_sperner_counts():
    for n in (1, 2, 3, 4):
        assert len(all_connected_sperner(n)) == _count_connected_sperner(n)
    assert len(all_connected_sperner(3)) == 5
    for n in (2, 3, 4):
        for H in all_connected_sperner(n):
            assert H.is_connected() and H.is_sperner()
    with pytest.raises(BadFamilyParams):
        all_connected_sperner(6)
