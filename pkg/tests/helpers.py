import random

from hallkit import Relation, compose, semigroup_of_relations


def random_relation_semigroups(count, max_order=20, seed=20260808):
    """Closure-generated semigroups of relations, deterministic across runs."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        n = rng.choice((2, 3))
        gens = {
            Relation(n, tuple(rng.randrange(1 << n) for _ in range(n)))
            for _ in range(rng.choice((1, 2)))
        }
        elems = list(gens)
        seen = set(gens)
        i = 0
        while i < len(elems) and len(elems) <= max_order:
            j = 0
            while j < len(elems):
                for c in (compose(elems[i], elems[j]), compose(elems[j], elems[i])):
                    if c not in seen:
                        seen.add(c)
                        elems.append(c)
                j += 1
            i += 1
        if len(elems) <= max_order:
            elems.sort(key=lambda r: r.code)
            out.append(semigroup_of_relations(elems)[0])
    return out
