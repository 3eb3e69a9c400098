"""Seed mutation, the exchange relation and seed enumeration."""

import random

import pytest

from qmut import (
    Budget,
    LaurentPolynomial,
    VertexOutOfRangeError,
    enumerate_seeds,
    exchange_binomial,
    initial_seed,
    mutate_seed,
    mutate_seed_sequence,
    mutate_sequence,
    seed_key,
    validate,
)

from conftest import (
    cycle_quiver_acyclic,
    d_quiver,
    kronecker,
    path_quiver,
    random_skew,
)


class TestInitialSeed:
    def test_a2(self):
        q = validate([[0, 1], [-1, 0]])
        s = initial_seed(q)
        assert [v.to_text() for v in s.cluster] == ["x0", "x1"]
        assert s.matrix.rows == q.rows

    def test_single_vertex(self):
        s = initial_seed(validate([[0]]))
        assert [v.to_text() for v in s.cluster] == ["x0"]

    def test_a3(self):
        s = initial_seed(path_quiver(3))
        assert [v.to_text() for v in s.cluster] == ["x0", "x1", "x2"]


class TestMutateSeed:
    def test_a2_exchange(self):
        s = initial_seed(validate([[0, 1], [-1, 0]]))
        s1, (removed, added) = mutate_seed(s, 0)
        assert removed.to_text() == "x0"
        assert added.to_text() == "x0^-1 + x0^-1 x1"
        assert s1.matrix.rows == ((0, -1), (1, 0))

    def test_involution(self):
        rng = random.Random(61)
        for _ in range(40):
            q = random_skew(rng, rng.randint(1, 4), 2)
            s = initial_seed(q)
            # wander a little first
            for _ in range(rng.randint(0, 3)):
                s, _ = mutate_seed(s, rng.randrange(q.n))
            k = rng.randrange(q.n)
            s2, _ = mutate_seed(s, k)
            s3, _ = mutate_seed(s2, k)
            assert s3 == s

    def test_pentagon_periodicity(self):
        s = initial_seed(validate([[0, 1], [-1, 0]]))
        cur = s
        states = []
        for k in [0, 1, 0, 1, 0]:
            cur, _ = mutate_seed(cur, k)
            states.append(cur)
        # after five alternating steps the unordered cluster returns
        assert {v.key() for v in cur.cluster} == {v.key() for v in s.cluster}
        assert seed_key(cur) == seed_key(s)
        # and not earlier
        for st in states[:-1]:
            assert {v.key() for v in st.cluster} != {v.key() for v in s.cluster}

    def test_exchange_pair_identity(self):
        rng = random.Random(62)
        for _ in range(30):
            q = random_skew(rng, rng.randint(2, 4), 2)
            s = initial_seed(q)
            for _ in range(4):
                k = rng.randrange(q.n)
                binomial = exchange_binomial(s, k)
                s2, (old, new) = mutate_seed(s, k)
                assert old * new == binomial
                s = s2

    def test_matrix_projection(self):
        rng = random.Random(63)
        for _ in range(30):
            q = random_skew(rng, rng.randint(1, 4), 2)
            seq = [rng.randrange(q.n) for _ in range(rng.randint(0, 6))]
            s = mutate_seed_sequence(initial_seed(q), seq)
            assert s.matrix.rows == mutate_sequence(q, seq).rows

    def test_out_of_range(self):
        s = initial_seed(validate([[0]]))
        with pytest.raises(VertexOutOfRangeError):
            mutate_seed(s, 1)


class TestLaurentProperty:
    def test_denominators_are_monomials_on_walks(self):
        rng = random.Random(64)
        starts = [path_quiver(3), path_quiver(4), d_quiver(4),
                  cycle_quiver_acyclic(3), cycle_quiver_acyclic(4), kronecker(2)]
        for _ in range(40):
            q = starts[rng.randrange(len(starts))]
            s = initial_seed(q)
            for _ in range(10):
                s, (_, added) = mutate_seed(s, rng.randrange(q.n))
                # Laurent form with positive coefficients
                assert all(c > 0 for c in added.terms.values())


class TestEnumerateSeeds:
    def test_a2_census(self):
        rep = enumerate_seeds(validate([[0, 1], [-1, 0]]))
        assert rep.complete
        assert rep.seed_count == 5
        assert rep.cluster_count == 5
        assert rep.variable_count == 5

    def test_a3_census(self):
        rep = enumerate_seeds(path_quiver(3))
        assert rep.complete
        assert (rep.seed_count, rep.cluster_count, rep.variable_count) == (14, 14, 9)

    def test_wild_rank2_budget(self):
        rep = enumerate_seeds(kronecker(3), Budget(max_quivers=10))
        assert rep.status == "budget_exhausted"
        assert rep.exhausted == "max_quivers"

    def test_workers_agree(self):
        r1 = enumerate_seeds(path_quiver(3), workers=1)
        r4 = enumerate_seeds(path_quiver(3), workers=4)
        assert r1.seed_count == r4.seed_count
        assert [seed_key(s) for s in r1.seeds] == [seed_key(s) for s in r4.seeds]

    def test_dynkin_terminates(self):
        for q in [path_quiver(2), path_quiver(3), d_quiver(4)]:
            assert enumerate_seeds(q).complete
