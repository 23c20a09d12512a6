"""Finite groups and the constructions that tie them to relation monoids:
power semigroups, the subset-to-relation embedding, the conjugation action
of the symmetric group on reflexive relations, semidirect products, and the
projection of (reflexive relation, permutation) pairs onto Hall relations.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .relations import (
    Permutation,
    Relation,
    compose,
    conjugate,
    is_hall,
    is_reflexive,
    perm_inverse,
    permutations_lex,
    reflexive_relations,
    relation_of,
)
from .semigroups import FiniteSemigroup, semigroup_of_relations, validate_table

MAX_GROUP_ORDER = 64
MAX_POWER_BASE = 16
MAX_SEMIDIRECT_SIZE = 5000
MAX_ACTION_DEGREE = 3


@dataclass(frozen=True, eq=False)
class FiniteGroup:
    """A finite group: a monoid table together with its inverse table."""

    base: FiniteSemigroup
    inverse: tuple[int, ...]

    @property
    def size(self) -> int:
        return self.base.size

    @property
    def identity(self) -> int:
        return self.base.identity

    @property
    def labels(self) -> tuple[str, ...]:
        return self.base.labels

    def mul(self, i: int, j: int) -> int:
        return self.base.table[i][j]


@dataclass(frozen=True)
class GroupSubset:
    """A nonempty subset of a group's elements, stored as a bitmask over indices."""

    group: FiniteGroup
    mask: int

    def __post_init__(self):
        if not 1 <= self.mask < 1 << self.group.size:
            raise ValueError(f"subset mask {self.mask} is empty or out of range")

    def elements(self) -> tuple[int, ...]:
        return tuple(i for i in range(self.group.size) if self.mask >> i & 1)


@dataclass(frozen=True, eq=False)
class GroupAction:
    """An action of a group on a semigroup by automorphisms, stored extensionally.

    maps[g] is the permutation of target indices applied by g; composition is
    on the left: maps[g*h] applies h first, then g.
    """

    group: FiniteGroup
    target: FiniteSemigroup
    maps: tuple[tuple[int, ...], ...]


def as_group(s: FiniteSemigroup) -> FiniteGroup:
    """Check a semigroup is a group (identity plus two-sided inverses)."""
    if s.identity is None:
        raise ValueError("no identity element; not a group")
    e = s.identity
    inverse = []
    for g in range(s.size):
        inv = next((h for h in range(s.size) if s.table[g][h] == e and s.table[h][g] == e), None)
        if inv is None:
            raise ValueError(f"element {s.labels[g]} has no inverse; not a group")
        inverse.append(inv)
    return FiniteGroup(s, tuple(inverse))


def cyclic_group(m: int) -> FiniteGroup:
    """The cyclic group of order m, identity first."""
    if m < 1:
        raise ValueError("order must be at least 1")
    labels = ["e"] + ["a" if k == 1 else f"a{k}" for k in range(1, m)]
    table = tuple(tuple((i + j) % m for j in range(m)) for i in range(m))
    return as_group(validate_table(labels, table))


def symmetric_group_table(n: int) -> FiniteGroup:
    """The symmetric group of degree n; elements are permutations in
    lexicographic image order, multiplied left-to-right like relations."""
    if n < 1:
        raise ValueError("degree must be at least 1")
    size = math.factorial(n)
    if size > MAX_SEMIDIRECT_SIZE:
        raise ValueError(f"symmetric group of degree {n} has {size} elements, over the cap")
    perms = permutations_lex(n)
    index = {p: i for i, p in enumerate(perms)}
    table = tuple(
        tuple(index[Permutation(n, tuple(q.image[i] for i in p.image))] for q in perms)
        for p in perms
    )
    labels = tuple(str(p) for p in perms)
    return as_group(validate_table(labels, table))


def power_semigroup(s: FiniteSemigroup):
    """The semigroup of all nonempty subsets under elementwise products.

    Returns (semigroup, masks) with subsets ordered as ascending bitmasks
    over the base element indices.
    """
    k = s.size
    if k > MAX_POWER_BASE:
        raise ValueError(f"power semigroup capped at base size {MAX_POWER_BASE}, got {k}")
    count = 1 << k
    # translate[a][B] = mask of {a*b : b in B}
    translate = [[0] * count for _ in range(k)]
    for a in range(k):
        row = translate[a]
        for mask in range(1, count):
            low = mask & -mask
            b = low.bit_length() - 1
            row[mask] = row[mask ^ low] | (1 << s.table[a][b])
    masks = tuple(range(1, count))

    def product(x, y):
        out = 0
        m = x
        while m:
            low = m & -m
            out |= translate[low.bit_length() - 1][y]
            m ^= low
        return out

    table = tuple(tuple(product(x, y) - 1 for y in masks) for x in masks)

    def label(mask):
        return "{" + "+".join(s.labels[i] for i in range(k) if mask >> i & 1) + "}"

    semi = validate_table(tuple(label(m) for m in masks), table)
    return semi, masks


def subset_relation(subset: GroupSubset) -> Relation:
    """The relation pairing (g, h) whenever g^{-1} h lies in the subset.

    Contains the right-translation permutation g -> g*a for each subset
    element a, so it always contains a permutation.
    """
    g = subset.group
    n = g.size
    if n > MAX_GROUP_ORDER:
        raise ValueError(f"group order capped at {MAX_GROUP_ORDER}, got {n}")
    rows = []
    for i in range(n):
        inv = g.inverse[i]
        row = 0
        for j in range(n):
            if subset.mask >> g.mul(inv, j) & 1:
                row |= 1 << j
        rows.append(row)
    return Relation(n, tuple(rows))


def hall_embedding(group: FiniteGroup) -> dict[int, Relation]:
    """The subset-to-relation map for every nonempty subset, keyed by mask."""
    return {
        mask: subset_relation(GroupSubset(group, mask))
        for mask in range(1, 1 << group.size)
    }


def check_pairs_embedding(group: FiniteGroup, table: dict[int, Relation]):
    """Verify the subset-to-relation map is one-to-one and respects products.

    Compares the relation product of images against the image of the subset
    product, over every ordered pair of nonempty subsets. Returns
    (injective, multiplicative, pairs_checked).
    """
    masks = sorted(table)
    injective = len(set(table.values())) == len(masks)
    k = group.size

    def mask_product(x, y):
        out = 0
        for a in range(k):
            if x >> a & 1:
                for b in range(k):
                    if y >> b & 1:
                        out |= 1 << group.mul(a, b)
        return out

    multiplicative = True
    pairs = 0
    for x in masks:
        for y in masks:
            pairs += 1
            if compose(table[x], table[y]) != table[mask_product(x, y)]:
                multiplicative = False
    return injective, multiplicative, pairs


def validate_action(action: GroupAction) -> None:
    """Check the automorphism law per group element and left composition."""
    g, m = action.group, action.target
    if len(action.maps) != g.size:
        raise ValueError("action must assign a map to every group element")
    k = m.size
    for gi, amap in enumerate(action.maps):
        if sorted(amap) != list(range(k)):
            raise ValueError(f"map of {g.labels[gi]} is not a permutation of the target")
        for x in range(k):
            for y in range(k):
                if amap[m.table[x][y]] != m.table[amap[x]][amap[y]]:
                    raise ValueError(
                        f"map of {g.labels[gi]} is not an automorphism:"
                        f" breaks at ({m.labels[x]}, {m.labels[y]})"
                    )
    for a in range(g.size):
        for b in range(g.size):
            ab = g.mul(a, b)
            for x in range(k):
                if action.maps[ab][x] != action.maps[a][action.maps[b][x]]:
                    raise ValueError(
                        f"action is not a left action: maps[{g.labels[a]}*{g.labels[b]}]"
                        f" differs from maps[{g.labels[a]}] o maps[{g.labels[b]}]"
                    )


def conjugation_action(n: int) -> GroupAction:
    """The symmetric group acting on the monoid of reflexive relations by
    conjugation; degree is capped because the target is materialized."""
    if not 1 <= n <= MAX_ACTION_DEGREE:
        raise ValueError(f"conjugation action materialized only for degree 1..{MAX_ACTION_DEGREE}")
    rels = list(reflexive_relations(n))
    target, elements = semigroup_of_relations(rels)
    index = {r: i for i, r in enumerate(elements)}
    group = symmetric_group_table(n)
    perms = permutations_lex(n)
    maps = tuple(
        tuple(index[conjugate(p, r)] for r in elements)
        for p in perms
    )
    action = GroupAction(group, target, maps)
    validate_action(action)
    return action


def semidirect_product(m: FiniteSemigroup, g: FiniteGroup, action: GroupAction):
    """Pairs (m, g) with multiplication (m,g)(m',g') = (m * (g m'), g g').

    Returns (semigroup, pairs) with pairs in lexicographic (m, g) index order.
    """
    if action.target is not m or action.group is not g:
        raise ValueError("action does not act on the given operands")
    if m.size * g.size > MAX_SEMIDIRECT_SIZE:
        raise ValueError(f"semidirect product size {m.size * g.size} exceeds the cap")
    validate_action(action)
    pairs = tuple((mi, gi) for mi in range(m.size) for gi in range(g.size))
    index = {p: i for i, p in enumerate(pairs)}
    table = tuple(
        tuple(
            index[(m.table[mi][action.maps[gi][mj]], g.mul(gi, gj))]
            for (mj, gj) in pairs
        )
        for (mi, gi) in pairs
    )
    labels = tuple(f"({m.labels[mi]};{g.labels[gi]})" for (mi, gi) in pairs)
    return validate_table(labels, table), pairs


def project_to_hall(rho: Relation, pi: Permutation) -> Relation:
    """Multiply a reflexive relation by a permutation; the result contains
    that permutation, hence is a Hall relation."""
    if rho.dim != pi.dim:
        raise ValueError(f"dimension mismatch: {rho.dim} vs {pi.dim}")
    if not is_reflexive(rho):
        raise ValueError("first component must be reflexive")
    return compose(rho, relation_of(pi))


def hall_factorization(sigma: Relation) -> tuple[Relation, Permutation]:
    """Split a Hall relation as (reflexive part, permutation).

    Uses the lexicographically smallest contained permutation tau and returns
    (sigma * tau^{-1}, tau); project_to_hall inverts this exactly.
    """
    tau = is_hall(sigma)
    if tau is None:
        raise ValueError("relation contains no permutation")
    rho = compose(sigma, relation_of(perm_inverse(tau)))
    return rho, tau
