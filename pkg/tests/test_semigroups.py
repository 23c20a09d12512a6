import pytest
from helpers import random_relation_semigroups

from hallkit import (
    Relation,
    adjoin_identity,
    check_homomorphism,
    compose,
    emit_cayley,
    find_division,
    green_summary,
    idempotent_generated,
    idempotents,
    is_block_group,
    is_j_trivial,
    parse_cayley,
    semigroup_of_relations,
    subsemigroup_closure,
    validate_table,
)

Z2 = validate_table(["e", "a"], [[0, 1], [1, 0]])
Z3 = validate_table(["e", "a", "b"], [[0, 1, 2], [1, 2, 0], [2, 0, 1]])
SEMILATTICE = validate_table(["one", "z"], [[0, 1], [1, 1]])
LEFT_ZERO = validate_table(["a", "b"], [[0, 0], [1, 1]])


def ideal_partition(table, kind):
    """Oracle: Green's classes by materializing the generated ideals as sets."""
    k = len(table)
    keys = {}
    for x in range(k):
        right = {x} | {table[x][s] for s in range(k)}
        left = {x} | {table[s][x] for s in range(k)}
        both = right | left | {table[a][table[x][b]] for a in range(k) for b in range(k)}
        keys[x] = frozenset({"r": right, "l": left, "j": both}[kind])
    groups = {}
    for x, key in keys.items():
        groups.setdefault(key, []).append(x)
    return sorted(tuple(sorted(v)) for v in groups.values())


# validate_table

def test_validate_trivial():
    s = validate_table(["e"], [[0]])
    assert s.size == 1 and s.identity == 0


def test_validate_group_table():
    assert Z2.identity == 0
    assert Z2.mul(1, 1) == 0


def test_validate_rejects_nonassociative():
    with pytest.raises(ValueError, match=r"not associative.*x|y"):
        validate_table(["x", "y"], [[1, 0], [0, 0]])


def test_validate_rejects_duplicates_and_bad_entries():
    with pytest.raises(ValueError, match="duplicate"):
        validate_table(["x", "x"], [[0, 0], [0, 0]])
    with pytest.raises(ValueError, match="out of range"):
        validate_table(["x", "y"], [[0, 2], [0, 0]])
    with pytest.raises(ValueError, match="cap"):
        validate_table([str(i) for i in range(4)], [[0] * 4] * 4, max_size=3)


# adjoin_identity

def test_adjoin_identity_keeps_monoids():
    assert adjoin_identity(Z2) is Z2


def test_adjoin_identity_left_zero():
    m = adjoin_identity(LEFT_ZERO)
    assert m.size == 3 and m.identity == 2
    assert m.mul(0, 1) == 0 and m.mul(2, 1) == 1
    assert adjoin_identity(m) is m


# idempotents

def test_idempotents_of_groups():
    assert idempotents(Z2) == [0]
    assert idempotents(Z3) == [0]


def test_idempotents_of_semilattice():
    assert idempotents(SEMILATTICE) == [0, 1]


def test_idempotents_of_hall2(hall2):
    semi, elems = hall2
    # oracle: square all seven elements as relations
    squares = [i for i, r in enumerate(elems) if compose(r, r) == r]
    assert idempotents(semi) == squares
    expected = {
        Relation.identity(2),
        Relation.from_pairs(2, [(1, 1), (2, 2), (1, 2)]),
        Relation.from_pairs(2, [(1, 1), (2, 2), (2, 1)]),
        Relation.full(2),
    }
    assert {elems[i] for i in squares} == expected


# green_summary

def test_green_of_group():
    g = green_summary(Z3)
    assert g.r_classes == g.l_classes == g.j_classes == ((0, 1, 2),)


def test_green_matches_ideal_oracle(refl2, hall2, full2):
    for semi, _ in (refl2, hall2, full2):
        g = green_summary(semi)
        assert list(g.r_classes) == ideal_partition(semi.table, "r")
        assert list(g.l_classes) == ideal_partition(semi.table, "l")
        assert list(g.j_classes) == ideal_partition(semi.table, "j")


def test_green_r2_all_singletons(refl2):
    semi, _ = refl2
    g = green_summary(semi)
    assert len(g.r_classes) == len(g.l_classes) == len(g.j_classes) == 4


def test_green_hall2_j_sizes(hall2):
    semi, elems = hall2
    g = green_summary(semi)
    assert sorted(len(c) for c in g.j_classes) == [1, 2, 4]
    by_size = {len(c): c for c in g.j_classes}
    assert {elems[i] for i in by_size[2]} == {
        Relation.identity(2),
        Relation.from_pairs(2, [(1, 2), (2, 1)]),
    }
    assert elems[by_size[1][0]] == Relation.full(2)


def test_green_classes_refine_j(hall3):
    semi, _ = hall3
    g = green_summary(semi)
    j_of = {x: i for i, c in enumerate(g.j_classes) for x in c}
    for c in g.r_classes + g.l_classes:
        assert len({j_of[x] for x in c}) == 1


def test_green_cap():
    with pytest.raises(ValueError, match="cap"):
        green_summary(Z2, max_j_size=1)


# predicates

def test_j_trivial():
    assert is_j_trivial(validate_table(["e"], [[0]]))
    assert not is_j_trivial(Z2)
    assert is_j_trivial(SEMILATTICE)


def test_r3_is_j_trivial(refl3):
    semi, _ = refl3
    assert semi.size == 64
    assert is_j_trivial(semi)


def test_block_group_of_groups():
    assert is_block_group(Z3) == (True, None)


def test_hall2_is_block_group(hall2):
    assert is_block_group(hall2[0]) == (True, None)


def test_full_relation_monoid_witness(full2):
    semi, elems = full2
    ok, pair = is_block_group(semi)
    assert not ok
    e, f = pair
    assert elems[e] == Relation.from_pairs(2, [(1, 1)])
    assert elems[f] == Relation.from_pairs(2, [(1, 1), (2, 1)])
    # confirm the defining products directly on the relations
    assert compose(elems[e], elems[e]) == elems[e]
    assert compose(elems[f], elems[f]) == elems[f]
    assert compose(elems[e], elems[f]) == elems[e]
    assert compose(elems[f], elems[e]) == elems[f]


# closures

def test_closure_of_identity():
    sub, parent = subsemigroup_closure(Z3, [0])
    assert sub.size == 1 and parent == (0,)


def test_closure_of_swap_in_hall2(hall2):
    semi, elems = hall2
    swap = elems.index(Relation.from_pairs(2, [(1, 2), (2, 1)]))
    sub, parent = subsemigroup_closure(semi, [swap])
    assert {elems[p] for p in parent} == {Relation.identity(2), elems[swap]}


def test_closure_of_hall2_idempotents_is_r2(hall2, refl2):
    semi, elems = hall2
    sub, parent = subsemigroup_closure(semi, idempotents(semi))
    assert sub.size == 4
    assert {elems[p] for p in parent} == set(refl2[1])
    assert is_j_trivial(sub)


def test_closure_requires_generators():
    with pytest.raises(ValueError):
        subsemigroup_closure(Z2, [])


def test_idempotent_generated(hall2, full2):
    assert idempotent_generated(Z3).size == 1
    assert idempotent_generated(hall2[0]).size == 4
    assert not is_j_trivial(idempotent_generated(full2[0]))


# the block-group / idempotent-closure equivalence

def test_equivalence_on_catalog(hall2, hall3, refl2, refl3, full2):
    catalog = [Z2, Z3, SEMILATTICE, LEFT_ZERO,
               hall2[0], hall3[0], refl2[0], refl3[0], full2[0]]
    for semi in catalog:
        assert is_block_group(semi)[0] == is_j_trivial(idempotent_generated(semi))


def test_equivalence_on_random_semigroups():
    for semi in random_relation_semigroups(25):
        assert is_block_group(semi)[0] == is_j_trivial(idempotent_generated(semi))


def test_predicates_invariant_under_adjoined_identity():
    samples = [LEFT_ZERO, SEMILATTICE, Z2] + random_relation_semigroups(10, seed=5)
    for semi in samples:
        monoid = adjoin_identity(semi)
        assert is_j_trivial(semi) == is_j_trivial(monoid)
        assert is_block_group(semi)[0] == is_block_group(monoid)[0]


# homomorphisms

def test_identity_map_is_bijective_homomorphism():
    chk = check_homomorphism(range(Z3.size), Z3, Z3)
    assert chk.is_homomorphism and chk.injective and chk.surjective


def test_constant_map_to_non_idempotent_fails():
    chk = check_homomorphism([1, 1], Z2, Z2)
    assert not chk.is_homomorphism


def test_homomorphism_input_validation():
    with pytest.raises(ValueError):
        check_homomorphism([0], Z2, Z2)
    with pytest.raises(ValueError):
        check_homomorphism([0, 5], Z2, Z2)


# division search

def test_division_onto_trivial():
    trivial = validate_table(["e"], [[0]])
    witness = find_division(trivial, Z3)
    assert witness is not None
    chk = check_homomorphism(witness.mapping, witness.subsemigroup, trivial)
    assert chk.is_homomorphism and chk.surjective


def test_no_division_of_group_by_j_trivial(refl2):
    # exhaustive: every subsemigroup of the 4-element monoid arises from
    # a generating set of size at most 3
    assert find_division(Z2, refl2[0]) is None


def test_semilattice_divides_hall2(hall2):
    witness = find_division(SEMILATTICE, hall2[0])
    assert witness is not None
    chk = check_homomorphism(witness.mapping, witness.subsemigroup, SEMILATTICE)
    assert chk.is_homomorphism and chk.surjective
    again = find_division(SEMILATTICE, hall2[0])
    assert again.generator_indices == witness.generator_indices
    assert again.mapping == witness.mapping


def test_division_bounds():
    big = validate_table([str(i) for i in range(13)],
                         [[0] * 13 for _ in range(13)])
    with pytest.raises(ValueError, match="bound"):
        find_division(Z2, big)


# semigroup_of_relations

def test_relations_semigroup_trivial():
    semi, elems = semigroup_of_relations([Relation.identity(2)])
    assert semi.size == 1 and semi.identity == 0


def test_relations_semigroup_closure_checks():
    swap = Relation.from_pairs(2, [(1, 2), (2, 1)])
    with pytest.raises(ValueError, match="element 1 \\* element 1"):
        semigroup_of_relations([swap])
    with pytest.raises(ValueError, match="duplicate"):
        semigroup_of_relations([swap, swap])
    with pytest.raises(ValueError, match="dimension"):
        semigroup_of_relations([Relation.identity(2), Relation.identity(3)])


def test_relations_semigroup_identity_detected(hall2):
    semi, elems = hall2
    assert semi.size == 7
    assert elems[semi.identity] == Relation.identity(2)


# cayley text format

def test_cayley_roundtrip(hall2):
    for semi in (Z2, SEMILATTICE, LEFT_ZERO, hall2[0]):
        again = parse_cayley(emit_cayley(semi))
        assert again.labels == semi.labels
        assert again.table == semi.table
        assert again.identity == semi.identity


def test_cayley_parse_errors():
    with pytest.raises(ValueError, match="line 2"):
        parse_cayley("e,a\n1\n2,1\n")
    with pytest.raises(ValueError, match="line 3"):
        parse_cayley("e,a\n1,2\n2,x\n")
    with pytest.raises(ValueError, match="not an identity"):
        parse_cayley("e,a\n1,2\n2,1\nidentity=a\n")
    with pytest.raises(ValueError, match="not associative"):
        parse_cayley("x,y\n2,1\n1,1\n")
