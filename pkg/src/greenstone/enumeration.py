"""Exhaustive small-order instance generation and seeded random samplers.

Exhaustive streams are canonical: one representative per isomorphism
class, with the canonical form being the lexicographically least table
over all relabelings.  Anti-isomorphism is deliberately NOT quotiented
out, because the downstream conditions are chirally sensitive (a left
minimal condition is not a right one).

Random sampling uses ``random.Random`` (Mersenne Twister); the generator
identity and the seed derivation below are part of the reproducibility
contract.
"""

from __future__ import annotations

import itertools
import random
from typing import Iterator, Optional, Sequence

from .biact import FiniteBiact, product_biact, regular_biact, relative_biact, \
    biact_rees_quotient, subact_closure, validate_biact
from .core import (
    FiniteSemigroup,
    congruence_closure,
    generate_from_transformations,
    opposite,
    quotient,
    scan_triples,
    subset_closure,
    validate_table,
)
from .errors import CapExceeded, SizeLimitExceeded

SEMIGROUP_ORDER_CAP = 4
BIACT_EXHAUSTIVE_SEMIGROUP_CAP = 2
BIACT_EXHAUSTIVE_CARRIER_CAP = 3


def canonical_table(order: int, table: Sequence[Sequence[int]]) -> tuple:
    """Least relabeled table over all permutations of the elements."""
    best = None
    for perm in itertools.permutations(range(order)):
        inv = _inverse_order(perm, order)
        relabeled = tuple(
            tuple(perm[table[a][b]] for b in inv) for a in inv
        )
        if best is None or relabeled < best:
            best = relabeled
    return best


def _inverse_order(perm: Sequence[int], order: int) -> list[int]:
    inv = [0] * order
    for old, new in enumerate(perm):
        inv[new] = old
    return inv


def _associative_tables(n: int) -> Iterator[tuple[tuple[int, ...], ...]]:
    """Backtracking over table cells with incremental associativity pruning."""
    cells = [(a, b) for a in range(n) for b in range(n)]
    table = [[-1] * n for _ in range(n)]

    def consistent() -> bool:
        for x in range(n):
            for y in range(n):
                xy = table[x][y]
                if xy < 0:
                    continue
                for z in range(n):
                    yz = table[y][z]
                    if yz < 0:
                        continue
                    left = table[xy][z]
                    right = table[x][yz]
                    if left >= 0 and right >= 0 and left != right:
                        return False
        return True

    def fill(i: int) -> Iterator[tuple[tuple[int, ...], ...]]:
        if i == len(cells):
            yield tuple(tuple(row) for row in table)
            return
        a, b = cells[i]
        for v in range(n):
            table[a][b] = v
            if consistent():
                yield from fill(i + 1)
        table[a][b] = -1

    yield from fill(0)


def all_semigroups(n: int) -> list[FiniteSemigroup]:
    """All semigroups of order n up to isomorphism, in canonical-table order."""
    if n > SEMIGROUP_ORDER_CAP:
        raise CapExceeded(f"exhaustive enumeration capped at order {SEMIGROUP_ORDER_CAP}")
    if n < 1:
        raise CapExceeded("order must be at least 1")
    seen: set[tuple] = set()
    for table in _associative_tables(n):
        seen.add(canonical_table(n, table))
    return [validate_table(n, [list(row) for row in tbl],
                           provenance={"kind": "table", "census": f"order {n}"})
            for tbl in sorted(seen)]


def brute_force_semigroup_count(n: int) -> int:
    """Independent oracle: filter every table by a full triple scan, then
    count canonical forms.  Only sensible for n <= 3."""
    if n > 3:
        raise CapExceeded("the dumb oracle scans n^(n^2) tables; use n <= 3")
    seen: set[tuple] = set()
    for flat in itertools.product(range(n), repeat=n * n):
        table = [list(flat[i * n:(i + 1) * n]) for i in range(n)]
        if scan_triples(n, table) is None:
            seen.add(canonical_table(n, table))
    return len(seen)


# ---------------------------------------------------------------------------
# exhaustive biacts


def _valid_left_actions(s: FiniteSemigroup, m: int) -> list[tuple[tuple[int, ...], ...]]:
    out = []
    for flat in itertools.product(range(m), repeat=s.order * m):
        act = tuple(tuple(flat[i * m:(i + 1) * m]) for i in range(s.order))
        ok = True
        for s1 in range(s.order):
            for s2 in range(s.order):
                for a in range(m):
                    if act[s1][act[s2][a]] != act[s.table[s1][s2]][a]:
                        ok = False
                        break
                if not ok:
                    break
            if not ok:
                break
        if ok:
            out.append(act)
    return out


def _valid_right_actions(t: FiniteSemigroup, m: int) -> list[tuple[tuple[int, ...], ...]]:
    out = []
    for flat in itertools.product(range(m), repeat=m * t.order):
        act = tuple(tuple(flat[a * t.order:(a + 1) * t.order]) for a in range(m))
        ok = True
        for a in range(m):
            for t1 in range(t.order):
                for t2 in range(t.order):
                    if act[act[a][t1]][t2] != act[a][t.table[t1][t2]]:
                        ok = False
                        break
                if not ok:
                    break
            if not ok:
                break
        if ok:
            out.append(act)
    return out


def _biact_canonical(m: int, left, right) -> tuple:
    best = None
    for perm in itertools.permutations(range(m)):
        inv = _inverse_order(perm, m)
        lt = tuple(tuple(perm[row[a]] for a in inv) for row in left)
        rt = tuple(tuple(perm[right[a][t]] for t in range(len(right[0]))) for a in inv)
        key = (lt, rt)
        if best is None or key < best:
            best = key
    return best


def all_biacts(s: FiniteSemigroup, t: FiniteSemigroup, m: int) -> list[FiniteBiact]:
    """All (S,T)-biacts on an m-element carrier, up to carrier relabeling."""
    if s.order > BIACT_EXHAUSTIVE_SEMIGROUP_CAP or t.order > BIACT_EXHAUSTIVE_SEMIGROUP_CAP:
        raise CapExceeded(
            f"exhaustive biacts capped at semigroup order {BIACT_EXHAUSTIVE_SEMIGROUP_CAP}")
    if m > BIACT_EXHAUSTIVE_CARRIER_CAP:
        raise CapExceeded(
            f"exhaustive biacts capped at carrier size {BIACT_EXHAUSTIVE_CARRIER_CAP}")
    lefts = _valid_left_actions(s, m)
    rights = _valid_right_actions(t, m)
    seen: set[tuple] = set()
    out = []
    for left in lefts:
        for right in rights:
            compatible = all(
                right[left[s1][a]][t1] == left[s1][right[a][t1]]
                for s1 in range(s.order) for a in range(m) for t1 in range(t.order))
            if not compatible:
                continue
            key = _biact_canonical(m, left, right)
            if key in seen:
                continue
            seen.add(key)
            out.append(validate_biact(s, t, left, right,
                                      provenance={"kind": "biact", "census": True}))
    return out


# ---------------------------------------------------------------------------
# seeded random samplers


def random_transformation_semigroup(degree: int, gen_count: int, seed,
                                    cap: int = 100_000) -> FiniteSemigroup:
    if degree > 8:
        raise CapExceeded("random transformation semigroups capped at degree 8")
    rng = random.Random(f"transformation:{degree}:{gen_count}:{seed}")
    gens = [tuple(rng.randrange(degree) for _ in range(degree))
            for _ in range(gen_count)]
    return generate_from_transformations(degree, gens, cap=cap)


def random_subsemigroup(s: FiniteSemigroup, seed) -> frozenset[int]:
    """The closure of a random nonempty subset."""
    rng = random.Random(f"subsemigroup:{seed}")
    size = rng.randrange(1, s.order + 1)
    seedset = rng.sample(range(s.order), size)
    return subset_closure(s.table, seedset)


def _semigroup_pool() -> list[FiniteSemigroup]:
    """A deterministic pool of small semigroups for the samplers: every
    semigroup of order <= 3 plus a few named order-4 instances."""
    pool = []
    for n in (1, 2, 3):
        pool.extend(all_semigroups(n))
    full_t2 = generate_from_transformations(2, [(1, 0), (0, 0)])
    z4 = validate_table(4, [[(i + j) % 4 for j in range(4)] for i in range(4)])
    left_zero4 = validate_table(4, [[i] * 4 for i in range(4)])
    pool.extend([full_t2, z4, left_zero4])
    return pool


_POOL_CACHE: Optional[list[FiniteSemigroup]] = None


def semigroup_pool() -> list[FiniteSemigroup]:
    global _POOL_CACHE
    if _POOL_CACHE is None:
        _POOL_CACHE = _semigroup_pool()
    return _POOL_CACHE


def random_biact(seed, max_semigroup: int = 4, max_carrier: int = 6) -> FiniteBiact:
    """A reproducible valid biact assembled from closure-safe recipes:
    relative and regular biacts, products, congruence and Rees quotients,
    and one-sided transformation actions."""
    rng = random.Random(f"biact:{seed}")
    pool = [s for s in semigroup_pool() if s.order <= max_semigroup]

    def pick_semigroup(limit: int) -> FiniteSemigroup:
        options = [s for s in pool if s.order <= limit]
        return options[rng.randrange(len(options))]

    recipe = rng.randrange(5)
    if recipe == 0:
        s = pick_semigroup(max_carrier)
        members = random_subsemigroup(s, rng.random())
        biact = relative_biact(s, members)
    elif recipe == 1:
        s = pick_semigroup(max_carrier)
        biact = regular_biact(s)
    elif recipe == 2:
        while True:
            s = pick_semigroup(max_semigroup)
            t = pick_semigroup(max_semigroup)
            if s.order * t.order <= max_carrier:
                break
        biact = product_biact(s, t)
    elif recipe == 3:
        # identity left action, a right transformation action on the carrier
        m = rng.randrange(2, max_carrier + 1)
        while True:
            try:
                t = random_transformation_semigroup(m, 1, rng.random(),
                                                    cap=max_semigroup)
            except SizeLimitExceeded:
                continue
            break
        maps = t.provenance["maps"]
        left_sem = pick_semigroup(max_semigroup)
        left = [list(range(m)) for _ in range(left_sem.order)]
        right = [[maps[j][a] for j in range(t.order)] for a in range(m)]
        biact = validate_biact(left_sem, t, left, right,
                               provenance={"kind": "biact", "recipe": "right-transformation"})
    else:
        # dual: a left action by the opposite of a transformation semigroup
        m = rng.randrange(2, max_carrier + 1)
        while True:
            try:
                t = random_transformation_semigroup(m, 1, rng.random(),
                                                    cap=max_semigroup)
            except SizeLimitExceeded:
                continue
            break
        maps = t.provenance["maps"]
        s = opposite(t)
        right_sem = pick_semigroup(max_semigroup)
        left = [[maps[i][a] for a in range(m)] for i in range(s.order)]
        right = [[a] * right_sem.order for a in range(m)]
        biact = validate_biact(s, right_sem, left, right,
                               provenance={"kind": "biact", "recipe": "left-transformation"})

    # optionally quotient, keeping validity by construction
    twist = rng.randrange(3)
    if twist == 1 and biact.size > 1:
        seed_elt = rng.randrange(biact.size)
        sub = subact_closure(biact, [seed_elt])
        if 0 < len(sub.members) < biact.size:
            biact = biact_rees_quotient(biact, sub.members)
    elif twist == 2 and biact.size > 1:
        a = rng.randrange(biact.size)
        b = rng.randrange(biact.size)
        if a != b:
            rho = congruence_closure(biact, [(a, b)])
            if rho.num_blocks > 1:
                biact, _ = quotient(biact, rho)
    return biact


def random_biact_corpus(count: int, master_seed,
                        max_semigroup: int = 4, max_carrier: int = 6) -> list[FiniteBiact]:
    return [random_biact(f"{master_seed}:{i}", max_semigroup, max_carrier)
            for i in range(count)]
