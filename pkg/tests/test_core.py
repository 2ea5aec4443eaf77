import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from greenstone import core
from greenstone.errors import (
    BadEntry,
    DegreeMismatch,
    EmptyGeneratorSet,
    IncompatiblePartition,
    NonAssociative,
    NotAnIdeal,
    NotASubsemigroup,
    RoleViolation,
    SizeLimitExceeded,
)

Z4 = [[(i + j) % 4 for j in range(4)] for i in range(4)]
LEFT_ZERO2 = [[0, 0], [1, 1]]
# rock-paper-scissors: x*x = x, otherwise the winner wins
RPS = [[0, 1, 0], [1, 1, 2], [0, 2, 2]]
MEET2 = [[0, 0], [0, 1]]


def t2():
    return core.generate_from_transformations(2, [(1, 0), (0, 0)])


def t2_ids():
    maps = t2().provenance["maps"]
    return {m: i for i, m in enumerate(maps)}


class TestValidateTable:
    def test_trivial(self):
        s = core.validate_table(1, [[0]])
        assert s.order == 1

    def test_rock_paper_scissors_is_not_associative(self):
        with pytest.raises(NonAssociative) as exc:
            core.validate_table(3, RPS)
        a, b, c = exc.value.triple
        assert RPS[RPS[a][b]][c] != RPS[a][RPS[b][c]]

    def test_left_zero(self):
        s = core.validate_table(2, LEFT_ZERO2)
        assert s.mul(0, 1) == 0 and s.mul(1, 0) == 1

    def test_out_of_range_entry(self):
        with pytest.raises(BadEntry):
            core.validate_table(2, [[0, 2], [1, 0]])

    def test_zero_order_rejected(self):
        with pytest.raises(BadEntry):
            core.validate_table(0, [])

    def test_large_orders_use_the_generator_test(self):
        n = 100
        table = [[(i + j) % n for j in range(n)] for i in range(n)]
        s = core.validate_table(n, table)
        assert s.order == n
        # a corrupted entry must still be caught on the generator path
        table[17][3] = 5
        assert core.scan_triples(n, table) is not None
        with pytest.raises(NonAssociative):
            core.validate_table(n, table)

    def test_light_test_agrees_with_triple_scan(self):
        for table in (Z4, LEFT_ZERO2, MEET2):
            n = len(table)
            assert core.scan_triples(n, table) is None
            assert core.light_test(n, table, core.greedy_generators(n, table)) is None
        assert core.scan_triples(3, RPS) is not None
        gens = core.greedy_generators(3, RPS)
        assert core.light_test(3, RPS, gens) is not None

    @given(st.integers(2, 3), st.data())
    @settings(max_examples=60, deadline=None)
    def test_nonassociative_witness_replays(self, n, data):
        table = [[data.draw(st.integers(0, n - 1)) for _ in range(n)] for _ in range(n)]
        try:
            core.validate_table(n, table)
        except NonAssociative as exc:
            a, b, c = exc.value.triple if hasattr(exc, "value") else exc.triple
            assert table[table[a][b]][c] != table[a][table[b][c]]


class TestTransformations:
    def test_identity_generator(self):
        s = core.generate_from_transformations(2, [(0, 1)])
        assert s.order == 1

    def test_full_transformation_monoid_degree2(self):
        assert t2().order == 4

    def test_degree3_generators_close_to_27(self):
        s = core.generate_from_transformations(
            3, [(1, 2, 0), (1, 0, 2), (0, 0, 2)])
        assert s.order == 27

    def test_closure_matches_saturation_oracle(self):
        # independent oracle: saturate the whole set under pairwise products
        gens = [(1, 2, 0), (1, 0, 2), (0, 0, 2)]
        members = set(tuple(g) for g in gens)
        while True:
            fresh = {core.compose(f, g) for f in members for g in members} - members
            if not fresh:
                break
            members |= fresh
        s = core.generate_from_transformations(3, gens)
        assert set(s.provenance["maps"]) == members

    def test_empty_generators(self):
        with pytest.raises(EmptyGeneratorSet):
            core.generate_from_transformations(2, [])

    def test_degree_mismatch(self):
        with pytest.raises(DegreeMismatch):
            core.generate_from_transformations(2, [(0, 1, 2)])

    def test_cap(self):
        with pytest.raises(SizeLimitExceeded):
            core.generate_from_transformations(2, [(1, 0), (0, 0)], cap=3)


class TestAdjoin:
    def test_identity_on_trivial(self):
        s = core.adjoin(core.validate_table(1, [[0]]), "identity")
        assert s.order == 2
        assert s.identity() == 1

    def test_zero_on_left_zero(self):
        s = core.adjoin(core.validate_table(2, LEFT_ZERO2), "zero")
        assert s.order == 3
        assert all(s.mul(2, x) == 2 and s.mul(x, 2) == 2 for x in range(3))

    def test_fresh_identity_even_when_present(self):
        s = t2()
        bigger = core.adjoin(s, "identity")
        assert bigger.order == 5
        assert bigger.identity() == 4  # the fresh unit, not the old one

    def test_has_identity_predicate(self):
        assert t2().has_identity()
        assert not core.validate_table(2, LEFT_ZERO2).has_identity()


class TestClassifySubset:
    def test_constants_form_an_ideal_of_t2(self):
        ids = t2_ids()
        constants = {ids[(0, 0)], ids[(1, 1)]}
        role = core.classify_subset(t2(), constants, "ideal")
        assert role.members == frozenset(constants)

    def test_z4_subset_violation(self):
        s = core.validate_table(4, Z4)
        with pytest.raises(RoleViolation) as exc:
            core.classify_subset(s, {1, 3}, "subsemigroup")
        a, b, product = exc.value.witness
        assert {a, b} <= {1, 3}
        assert s.mul(a, b) == product and product not in {1, 3}

    def test_whole_set_is_a_bi_ideal(self):
        for table in (Z4, LEFT_ZERO2, MEET2):
            s = core.validate_table(len(table), table)
            core.classify_subset(s, range(s.order), "bi-ideal")

    def test_role_containments(self):
        # every ideal is a one-sided ideal and a bi-ideal, across the census
        from greenstone.enumeration import all_semigroups
        for s in [t2()] + all_semigroups(3):
            for members in itertools.chain.from_iterable(
                    itertools.combinations(range(s.order), r)
                    for r in range(1, s.order + 1)):
                if core.is_role(s, members, "ideal"):
                    for role in ("left-ideal", "right-ideal", "bi-ideal"):
                        assert core.is_role(s, members, role)
                for one_sided in ("left-ideal", "right-ideal"):
                    if core.is_role(s, members, one_sided):
                        assert core.is_role(s, members, "bi-ideal")


class TestCongruence:
    def test_empty_pairs_is_identity(self):
        s = core.validate_table(4, Z4)
        rho = core.congruence_closure(s, [])
        assert rho.num_blocks == 4

    def test_z4_pair_02(self):
        s = core.validate_table(4, Z4)
        rho = core.congruence_closure(s, [(0, 2)])
        assert rho.blocks == (0, 1, 0, 1)

    def test_left_zero_collapses(self):
        s = core.validate_table(2, LEFT_ZERO2)
        rho = core.congruence_closure(s, [(0, 1)])
        assert rho.num_blocks == 1

    def test_incompatible_partition_rejected(self):
        s = core.validate_table(4, Z4)
        with pytest.raises(IncompatiblePartition):
            core.congruence_from_blocks(s, [0, 0, 1, 1])  # {0,1},{2,3} not compatible

    def test_closure_is_the_least_congruence(self):
        # oracle: enumerate every partition of a 3-element carrier, keep the
        # compatible ones, and intersect those containing the seed pair
        from greenstone.enumeration import all_semigroups

        def partitions3():
            return [(0, 0, 0), (0, 0, 1), (0, 1, 0), (0, 1, 1), (0, 1, 2)]

        for s in all_semigroups(3):
            congruences = []
            for blocks in partitions3():
                if core.congruence_violation(s, blocks) is None:
                    congruences.append(blocks)
            for a in range(3):
                for b in range(a + 1, 3):
                    containing = [c for c in congruences if c[a] == c[b]]
                    # meet: x ~ y iff every containing congruence relates them
                    least = tuple(
                        min(j for j in range(3)
                            if all(c[i] == c[j] for c in containing))
                        for i in range(3))
                    least = core._normalize_blocks(least)
                    got = core.congruence_closure(s, [(a, b)]).blocks
                    assert got == least, (s.table, a, b)


class TestQuotient:
    def test_identity_congruence_gives_isomorphic_copy(self):
        s = core.validate_table(4, Z4)
        q, proj = core.quotient(s, core.congruence_closure(s, []))
        assert core.find_isomorphism(s, q) is not None
        assert list(proj) == [0, 1, 2, 3]

    def test_z4_mod_two(self):
        s = core.validate_table(4, Z4)
        q, _ = core.quotient(s, core.congruence_closure(s, [(0, 2)]))
        z2 = core.validate_table(2, [[0, 1], [1, 0]])
        assert core.find_isomorphism(q, z2) is not None

    def test_full_congruence(self):
        s = core.validate_table(4, Z4)
        q, _ = core.quotient(s, core.congruence_closure(s, [(0, 1)]))
        assert q.order == 1

    def test_projection_is_a_homomorphism(self):
        s = t2()
        for pair in itertools.combinations(range(4), 2):
            rho = core.congruence_closure(s, [pair])
            q, proj = core.quotient(s, rho)
            for a in range(4):
                for b in range(4):
                    assert proj[s.mul(a, b)] == q.mul(proj[a], proj[b])


class TestReesQuotient:
    def test_collapse_everything(self):
        s = core.validate_table(4, Z4)
        q = core.rees_quotient(s, range(4))
        assert q.order == 1

    def test_t2_by_constants(self):
        s = t2()
        ids = t2_ids()
        q = core.rees_quotient(s, {ids[(0, 0)], ids[(1, 1)]})
        assert q.order == 3
        swap = q.labels.index("t10")
        ident = q.labels.index("t01")
        assert q.mul(swap, swap) == ident
        zero = q.order - 1
        assert all(q.mul(zero, x) == zero for x in range(3))

    def test_semilattice_by_bottom(self):
        s = core.validate_table(2, MEET2)
        q = core.rees_quotient(s, {0})
        assert q.order == 2
        assert core.find_isomorphism(q, s) is not None

    def test_not_an_ideal(self):
        s = t2()
        ids = t2_ids()
        with pytest.raises(NotAnIdeal):
            core.rees_quotient(s, {ids[(0, 1)]})

    def test_agrees_with_collapse_congruence(self):
        # the quotient by the congruence with classes {a} and I is isomorphic
        s = t2()
        ids = t2_ids()
        ideal = {ids[(0, 0)], ids[(1, 1)]}
        rees = core.rees_quotient(s, ideal)
        blocks = [0 if x in ideal else x + 1 for x in range(s.order)]
        rho = core.congruence_from_blocks(s, blocks)
        collapsed, _ = core.quotient(s, rho)
        assert core.find_isomorphism(rees, collapsed) is not None

    def test_agrees_with_collapse_congruence_across_census(self):
        from greenstone.enumeration import all_semigroups
        from greenstone.verify import ideals_of
        for n in (1, 2, 3):
            for s in all_semigroups(n):
                for ideal in ideals_of(s):
                    rees = core.rees_quotient(s, ideal)
                    blocks = [0 if x in ideal else x + 1 for x in range(s.order)]
                    rho = core.congruence_from_blocks(s, blocks)
                    collapsed, _ = core.quotient(s, rho)
                    assert core.find_isomorphism(rees, collapsed) is not None


class TestZeroDirectUnion:
    def test_trivial_parts(self):
        triv = core.validate_table(1, [[0]])
        u = core.zero_direct_union(triv, triv)
        assert u.order == 3

    def test_left_zero_with_right_zero(self):
        lz = core.validate_table(2, LEFT_ZERO2)
        rz = core.validate_table(2, [[0, 1], [0, 1]])
        u = core.zero_direct_union(lz, rz)
        assert u.order == 5
        assert core.scan_triples(u.order, u.table) is None

    def test_j_class_count_is_additive_plus_zero(self):
        from greenstone.green import green_structure
        z2 = core.validate_table(2, [[0, 1], [1, 0]])
        lz = core.validate_table(2, LEFT_ZERO2)
        u = core.zero_direct_union(z2, lz)
        total = (green_structure(z2).num_classes("J")
                 + green_structure(lz).num_classes("J") + 1)
        assert green_structure(u).num_classes("J") == total


class TestSubsemigroupAndMisc:
    def test_subsemigroup_reindexes(self):
        s = t2()
        ids = t2_ids()
        sub, carrier = core.subsemigroup(s, {ids[(0, 1)], ids[(1, 0)]})
        assert sub.order == 2
        assert set(carrier) == {ids[(0, 1)], ids[(1, 0)]}

    def test_subsemigroup_rejects_open_subset(self):
        s = core.validate_table(4, Z4)
        with pytest.raises(NotASubsemigroup):
            core.subsemigroup(s, {1})

    def test_opposite_of_left_zero_is_right_zero(self):
        s = core.validate_table(2, LEFT_ZERO2)
        op = core.opposite(s)
        assert op.mul(0, 1) == 1

    def test_find_isomorphism_distinguishes_groups(self):
        z4 = core.validate_table(4, Z4)
        klein = core.validate_table(4, [[0, 1, 2, 3], [1, 0, 3, 2],
                                        [2, 3, 0, 1], [3, 2, 1, 0]])
        assert core.find_isomorphism(z4, klein) is None
        sigma = [2, 0, 3, 1]
        inv = [sigma.index(x) for x in range(4)]
        shuffled = core.validate_table(
            4, [[sigma[Z4[inv[x]][inv[y]]] for y in range(4)] for x in range(4)])
        assert core.find_isomorphism(z4, shuffled) is not None
