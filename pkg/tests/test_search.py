import random
from itertools import combinations

import numpy as np
import pytest

from binary_gspace import (
    BinOp,
    action_ops,
    build_catalog,
    compose_ops,
    conjugate_translation_action,
    distributive_pair_ops,
    distributive_pair_sections,
    generate_subgroup_closure,
    identity_op,
    invert_op,
    is_distributive,
    is_distributive_subset,
    maximal_distributive_subsets,
)
from binary_gspace.errors import (
    BoundExceededError,
    CarrierMismatchError,
    NotDistributiveError,
    NotInvertibleError,
)
from binary_gspace.fixtures import fixture_actions
from binary_gspace.search import closure_violation, iter_maximal_distributive_subsets

from conftest import naive_distributive

E, F, U, S = range(4)  # lexicographic order of the invertible operations on two points


@pytest.fixture(scope="module")
def cat2(h2_2):
    return build_catalog(h2_2)


@pytest.fixture(scope="module")
def cat3(h2_3):
    return build_catalog(h2_3)


def test_catalog_n2(cat2):
    M = cat2.pair_matrix
    assert M.sum() == 10
    assert M[E].all() and M[:, E].all()
    assert M[F, S] and M[U, S] and M[S, S]
    assert not M[S, F] and not M[F, F]


def test_catalog_singleton():
    cat = build_catalog([identity_op(3)])
    assert cat.pair_matrix.tolist() == [[True]]


def test_catalog_n3_matches_oracle(cat3, h2_3):
    assert cat3.pair_matrix.shape == (216, 216)
    assert cat3.pair_matrix[0, 0]
    rng = random.Random(3)
    for _ in range(400):
        i, j = rng.randrange(216), rng.randrange(216)
        expected = naive_distributive(h2_3[i].to_list(), h2_3[j].to_list())
        assert cat3.distributive(i, j) == expected
        assert bool(distributive_pair_sections(h2_3[i], h2_3[j])) == expected
    assert cat3.pair_matrix.sum() == sum(
        bool(distributive_pair_ops(g, h)) for g in h2_3 for h in h2_3)


def test_catalog_dedupes_and_validates():
    cat = build_catalog([identity_op(2), identity_op(2), BinOp([[1, 0], [1, 0]])])
    assert len(cat) == 2
    with pytest.raises(NotInvertibleError):
        build_catalog([BinOp([[0, 0], [0, 1]])])
    with pytest.raises(CarrierMismatchError):
        build_catalog([identity_op(2), identity_op(3)])


def test_distributive_subset_examples(cat2):
    assert is_distributive_subset(cat2, [E])
    assert is_distributive_subset(cat2, [E, S])
    r = is_distributive_subset(cat2, [F, S])
    assert not r
    # (f, f) precedes (s, f) in lexicographic order; both fail
    assert r.witness == (F, F)
    assert not cat2.distributive(S, F)


def test_closure_examples(cat2, h2_2):
    group = generate_subgroup_closure(cat2, [S])
    assert [op.to_list() for op in group] == [[[0, 1], [0, 1]], [[1, 0], [1, 0]]]
    assert generate_subgroup_closure(cat2, [E]) == [identity_op(2)]
    assert generate_subgroup_closure(h2_2, [h2_2[S]]) == group
    with pytest.raises(NotDistributiveError) as info:
        generate_subgroup_closure(cat2, [F, S])
    assert info.value.witness == (F, F)


def test_closure_cap(cat3):
    # any non-trivial distributive seed already exceeds a cap of one element
    seed = next(s for s in maximal_distributive_subsets(cat3) if len(s) > 1)
    with pytest.raises(BoundExceededError):
        generate_subgroup_closure(cat3, [seed[-1]], cap=1)


def test_every_distributive_seed_n2(cat2):
    for r in range(5):
        for seed in combinations(range(4), r):
            if is_distributive_subset(cat2, seed):
                group = generate_subgroup_closure(cat2, list(seed))
                assert closure_violation(group) is None
                idx = [cat2.lookup(op) for op in group]
                assert is_distributive_subset(cat2, idx)


def test_sampled_seeds_n3(cat3):
    rng = random.Random(11)
    self_dist = [i for i in range(216) if cat3.distributive(i, i)]
    tried = 0
    while tried < 150:
        seed = rng.sample(self_dist, rng.randint(1, 3))
        if not is_distributive_subset(cat3, seed):
            continue
        tried += 1
        group = generate_subgroup_closure(cat3, seed)
        assert closure_violation(group) is None
        assert is_distributive_subset(cat3, [cat3.lookup(op) for op in group])


def test_maximal_subsets_n2(cat2):
    subsets = maximal_distributive_subsets(cat2)
    assert (E, S) in subsets
    for s in subsets:
        assert is_distributive_subset(cat2, s)


def test_maximal_subsets_brute_force_n3(cat3):
    """Compare against maximality checked by brute force over single extensions."""
    found = list(iter_maximal_distributive_subsets(cat3))
    assert found == sorted(found)
    for s in found:
        assert is_distributive_subset(cat3, s)
        for extra in range(216):
            if extra not in s:
                assert not is_distributive_subset(cat3, s + (extra,))
    # every self-distributive element lies in some maximal subset
    covered = {i for s in found for i in s}
    assert covered == {i for i in range(216) if cat3.distributive(i, i)}
    assert maximal_distributive_subsets(cat3, limit=2) == found[:2]


def test_maximal_subsets_singleton():
    assert maximal_distributive_subsets(build_catalog([identity_op(2)])) == [(0,)]


def test_matrix_closure_properties(cat3, h2_3):
    M = cat3.pair_matrix
    inv = np.array([cat3.lookup(invert_op(op)) for op in h2_3])
    for g, h in np.argwhere(M):
        assert M[g, inv[h]] and M[inv[g], h] and M[inv[g], inv[h]]
    rng = random.Random(5)
    rows = rng.sample(range(216), 40)
    for g in rows:
        R = np.flatnonzero(M[g])
        for h in R:
            for k in R:
                assert M[g, cat3.lookup(compose_ops(h2_3[h], h2_3[k]))]


def test_action_images_are_distributive():
    for label, a in fixture_actions():
        cat = build_catalog(action_ops(a))
        assert bool(is_distributive_subset(cat, range(len(cat)))) == bool(is_distributive(a))


def test_catalog_export(cat2):
    d = cat2.to_dict()
    assert d["size"] == 2 and len(d["ops"]) == 4
    assert d["matrix"][F] == [1, 0, 0, 1]


def test_conjugate_translation_image_is_subgroup(S3):
    ops = action_ops(conjugate_translation_action(S3))
    assert closure_violation(list(dict.fromkeys(ops))) is None
