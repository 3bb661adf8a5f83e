from itertools import permutations

import pytest

from binary_gspace import (
    all_subgroups,
    conjugate_subgroup,
    coset_space,
    is_normal,
    make_named_group,
    make_subgroup,
    normal_subgroups,
    quotient_group,
    subgroup_generated,
    validate_group,
)
from binary_gspace.errors import (
    InputError,
    MissingInverseError,
    NoIdentityError,
    NonAssociativeError,
    NotNormalError,
    NotSubgroupError,
    UnknownGroupError,
)
from binary_gspace.groups import normality_witness

from conftest import SMALL_GROUPS, perm_inv, perm_mul, subgroups_by_subset_search

S3_PERMS = sorted(permutations(range(3)))
E, T12, T01, C012, C021, T02 = range(6)  # lexicographic one-line order


def test_s3_ordering_and_table_oracle(S3):
    assert S3.labels == ("012", "021", "102", "120", "201", "210")
    for a, p in enumerate(S3_PERMS):
        for b, q in enumerate(S3_PERMS):
            assert S3_PERMS[S3.cayley[a][b]] == perm_mul(p, q)
        assert S3_PERMS[S3.inverse[a]] == perm_inv(p)
    assert S3.cayley[T01][C012] != S3.cayley[C012][T01]


def test_validate_examples():
    Z2 = validate_group([[0, 1], [1, 0]])
    assert Z2.order == 2 and Z2.identity == 0 and Z2.renumbering is None
    with pytest.raises(MissingInverseError) as info:
        validate_group([[0, 1], [1, 1]])
    assert info.value.witness == 1


def test_validate_s3_built_from_permutations():
    index = {p: i for i, p in enumerate(S3_PERMS)}
    table = [[index[perm_mul(p, q)] for q in S3_PERMS] for p in S3_PERMS]
    G = validate_group(table)
    assert G.cayley == make_named_group("S3").cayley


def test_validate_renumbers_identity():
    # Z3 with identity stored at index 2
    table = [[1, 2, 0], [2, 0, 1], [0, 1, 2]]
    G = validate_group(table)
    assert G.renumbering == (2, 1, 0)
    assert all(G.cayley[0][a] == a == G.cayley[a][0] for a in G.elements)
    p = G.renumbering
    for a in range(3):
        for b in range(3):
            assert G.cayley[p[a]][p[b]] == p[table[a][b]]


def test_validate_errors():
    with pytest.raises(NonAssociativeError) as info:
        validate_group([[0, 1, 2], [1, 0, 0], [2, 0, 0]])
    assert len(info.value.witness) == 3
    with pytest.raises(NoIdentityError):
        validate_group([[1, 1], [1, 1]])
    with pytest.raises(InputError):
        validate_group([[0, 1], [1]])
    with pytest.raises(InputError):
        validate_group([[0, 5], [1, 0]])


@pytest.mark.parametrize("name, order", [
    ("Z1", 1), ("Z4", 4), ("Z_6", 6), ("V4", 4), ("S3", 6), ("S4", 24), ("D4", 8), ("Q8", 8),
])
def test_named_orders(name, order):
    assert make_named_group(name).order == order


def test_named_cyclic_table():
    Z4 = make_named_group("Z4")
    assert Z4.cayley == tuple(tuple((a + b) % 4 for b in range(4)) for a in range(4))


def test_named_unknown():
    with pytest.raises(UnknownGroupError):
        make_named_group("A5")
    with pytest.raises(UnknownGroupError):
        make_named_group("Z0")


def test_nonabelian_named_groups():
    for name in ("S3", "S4", "D4", "Q8"):
        assert not make_named_group(name).is_abelian()
    for name in ("Z6", "V4"):
        assert make_named_group(name).is_abelian()


def test_q8_every_subgroup_normal():
    Q8 = make_named_group("Q8")
    subs = subgroups_by_subset_search(Q8)
    assert len(subs) == 6
    assert all(is_normal(Q8, make_subgroup(Q8, s)) for s in subs)


def test_d4_is_not_q8():
    # D4 has five involutions, Q8 has one
    for name, involutions in (("D4", 5), ("Q8", 1)):
        G = make_named_group(name)
        assert sum(1 for a in G.elements if a and G.cayley[a][a] == 0) == involutions


def test_subgroup_generated_examples(S3):
    Z4 = make_named_group("Z4")
    assert subgroup_generated(Z4, {2}).members == (0, 2)
    assert subgroup_generated(Z4, {1}).members == (0, 1, 2, 3)
    assert subgroup_generated(S3, {T01}).members == (E, T01)
    assert subgroup_generated(S3, {C012}).members == (E, C012, C021)
    assert subgroup_generated(S3, set()).members == (E,)


@pytest.mark.parametrize("name", SMALL_GROUPS)
def test_subgroups_match_subset_search(name):
    G = make_named_group(name)
    brute = subgroups_by_subset_search(G)
    assert sorted(H.members for H in all_subgroups(G)) == sorted(brute)
    for s in brute:
        assert subgroup_generated(G, s).members == s
        assert G.order % len(s) == 0


@pytest.mark.parametrize("name", SMALL_GROUPS)
def test_normality_iff_conjugation_invariant(name):
    G = make_named_group(name)
    for H in all_subgroups(G):
        invariant = all(conjugate_subgroup(G, g, H).members == H.members for g in G.elements)
        assert is_normal(G, H) == invariant


def test_is_normal_examples(S3):
    assert is_normal(S3, make_subgroup(S3, [E]))
    assert is_normal(S3, make_subgroup(S3, [E, C012, C021]))
    H = make_subgroup(S3, [E, T01])
    assert not is_normal(S3, H)
    g, h = normality_witness(S3, H)
    assert S3.conj(g, h) not in H


def test_conjugate_subgroup_examples(S3):
    H = make_subgroup(S3, [E, T01])
    assert conjugate_subgroup(S3, E, H).members == H.members
    assert conjugate_subgroup(S3, C012, H).members == (E, T12)
    A3 = make_subgroup(S3, [E, C012, C021])
    assert all(conjugate_subgroup(S3, g, A3).members == A3.members for g in S3.elements)


def test_make_subgroup_rejects_non_subgroups(S3):
    with pytest.raises(NotSubgroupError):
        make_subgroup(S3, [E, T01, T12])
    with pytest.raises(NotSubgroupError):
        make_subgroup(S3, [T01])
    with pytest.raises(InputError):
        make_subgroup(S3, [7])


def test_coset_space_examples():
    Z4 = make_named_group("Z4")
    assert coset_space(Z4, make_subgroup(Z4, range(4))).size == 1
    assert coset_space(Z4, make_subgroup(Z4, [0])).size == 4
    cs = coset_space(Z4, make_subgroup(Z4, [0, 2]))
    assert cs.cosets == [(0, 2), (1, 3)]
    assert cs.reps == (0, 1)


@pytest.mark.parametrize("name", SMALL_GROUPS)
def test_coset_partition(name):
    G = make_named_group(name)
    for H in all_subgroups(G):
        cs = coset_space(G, H)
        assert cs.coset_of[0] == 0 and cs.reps[0] == 0
        cosets = cs.cosets
        assert sorted(a for c in cosets for a in c) == list(G.elements)
        assert all(len(c) == H.order for c in cosets)
        assert list(cs.reps) == [min(c) for c in cosets]
        for a in G.elements:
            for b in G.elements:
                same = G.cayley[G.inverse[a]][b] in H
                assert (cs.coset_of[a] == cs.coset_of[b]) == same


def test_quotient_examples(S3):
    Z4 = make_named_group("Z4")
    assert quotient_group(Z4, make_subgroup(Z4, [0, 2])).cayley == ((0, 1), (1, 0))
    assert quotient_group(S3, make_subgroup(S3, [E, C012, C021])).cayley == ((0, 1), (1, 0))
    with pytest.raises(NotNormalError):
        quotient_group(S3, make_subgroup(S3, [E, T01]))


def test_normal_subgroup_counts():
    counts = {name: len(normal_subgroups(make_named_group(name)))
              for name in ("S3", "D4", "Q8", "Z6", "Z8", "S4")}
    assert counts == {"S3": 3, "D4": 6, "Q8": 6, "Z6": 4, "Z8": 4, "S4": 4}
