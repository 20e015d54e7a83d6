import itertools
import random
import unittest
from toric.markov.grobner import (
    GrobnerBasis, buchberger, canonical_set, ideal_membership, reduce, reduce_gb,
    s_binomial, saturate_full, saturate_variable,
)
from toric.markov.monomials import Binomial, binomial_from_vector
from toric.markov.orders import degrevlex_lowest
from toric.markov.semigroup import lattice_kernel, validate_model

X, Y, Z = (1, 0, 0), (0, 1, 0), (0, 0, 1)


def same_ideal(first, second, weights):
    "Compare two binomial sets through their reduced bases under one order"
    order = degrevlex_lowest(1, weights)
    return canonical_set(reduce_gb(buchberger(first, order))) == \
        canonical_set(reduce_gb(buchberger(second, order)))


class TestReduction(unittest.TestCase):

    def test_reduce_to_zero(self):
        basis = [(X, Y), (Z, Y)]
        assert reduce(Binomial(X, Z), basis) is None

    def test_reduce_by_empty_basis(self):
        binomial = Binomial(X, Z)
        assert reduce(binomial, []) == binomial

    def test_reduce_numerical(self):
        assert reduce(Binomial((3, 0), (0, 2)), [((3, 0), (0, 2))]) is None
        assert reduce(Binomial((4, 0), (1, 2)), [((3, 0), (0, 2))]) is None

    def test_s_binomial(self):
        f = ((2, 0, 0), (0, 1, 0))
        g = ((1, 1, 0), (0, 0, 1))
        assert s_binomial(f, g) == Binomial((1, 0, 1), (0, 2, 0))
        assert s_binomial(f, f) is None

    def test_coprime_leads_reduce_to_zero(self):
        f = ((3, 0, 0, 0), (0, 0, 0, 1))
        g = ((0, 2, 0, 0), (0, 0, 1, 0))
        assert reduce(s_binomial(f, g), [f, g]) is None


class TestBuchberger(unittest.TestCase):

    def test_reduced_basis(self):
        order = degrevlex_lowest(1, (1, 1, 1))
        basis = reduce_gb(buchberger([Binomial(X, Y), Binomial(X, Z)], order))
        assert basis.reduced
        assert basis.pairs() == [(Z, X), (Y, X)]
        assert canonical_set(basis) == frozenset([Binomial(X, Y), Binomial(X, Z)])

    def test_reduce_gb_drops_redundant_elements(self):
        order = degrevlex_lowest(1, (1, 1, 1))
        basis = GrobnerBasis([(Y, X), (Z, X), (Y, Z)], order)
        assert reduce_gb(basis).pairs() == [(Z, X), (Y, X)]

    def test_depends_on_lowest_variable(self):
        gens = [Binomial(X, Y), Binomial(X, Z)]
        expected = {
            1: {Binomial(X, Y), Binomial(X, Z)},
            2: {Binomial(X, Y), Binomial(Y, Z)},
            3: {Binomial(X, Z), Binomial(Y, Z)},
        }
        for i, elements in expected.items():
            order = degrevlex_lowest(i, (1, 1, 1))
            assert canonical_set(reduce_gb(buchberger(gens, order))) == elements

    def test_generator_order_does_not_matter(self):
        model = validate_model([[1, 1, 1, 1], [0, 1, 2, 3]])
        gens = [binomial_from_vector(v, model) for v in lattice_kernel(model)]
        gens = saturate_full(gens, model.grading)
        order = degrevlex_lowest(2, model.grading)
        expected = canonical_set(reduce_gb(buchberger(gens, order)))
        for permutation in itertools.permutations(gens):
            assert canonical_set(reduce_gb(buchberger(list(permutation), order))) == expected

    def test_chain_criterion_gives_same_basis(self):
        model = validate_model([[1, 1, 1, 1], [0, 1, 2, 3]])
        gens = [binomial_from_vector(v, model) for v in lattice_kernel(model)]
        gens = saturate_full(gens, model.grading)
        for i in range(1, 5):
            order = degrevlex_lowest(i, model.grading)
            plain = reduce_gb(buchberger(gens, order))
            chained = reduce_gb(buchberger(gens, order, chain_criterion=True))
            assert plain.pairs() == chained.pairs()


class TestSaturation(unittest.TestCase):

    def test_saturate_variable(self):
        gens = [Binomial((1, 1, 0), (1, 0, 1))]
        assert saturate_variable(gens, 1, (1, 1, 1)) == [Binomial(Y, Z)]

    def test_twisted_cubic(self):
        model = validate_model([[1, 1, 1, 1], [0, 1, 2, 3]])
        lattice_gens = [binomial_from_vector(v, model) for v in lattice_kernel(model)]
        missing = Binomial((1, 0, 0, 1), (0, 1, 1, 0))
        order = degrevlex_lowest(1, model.grading)
        lattice_basis = reduce_gb(buchberger(lattice_gens, order))
        assert not ideal_membership(missing, lattice_basis)
        toric = saturate_full(lattice_gens, model.grading)
        assert ideal_membership(missing, reduce_gb(buchberger(toric, order)))

    def test_saturated_ideal_is_unchanged(self):
        numerical = [Binomial((3, 0), (0, 2))]
        assert saturate_full(numerical, (2, 3)) == numerical
        ones = [Binomial(X, Y), Binomial(Y, Z)]
        assert same_ideal(saturate_full(ones, (1, 1, 1)), ones, (1, 1, 1))

    def test_saturation_is_idempotent(self):
        model = validate_model([[1, 1, 1, 1], [0, 1, 2, 3]])
        gens = [binomial_from_vector(v, model) for v in lattice_kernel(model)]
        once = saturate_full(gens, model.grading)
        twice = saturate_full(once, model.grading)
        assert same_ideal(once, twice, model.grading.weights)


class TestMembership(unittest.TestCase):

    def test_membership_matches_degrees(self):
        # X^u - X^v lies in the toric ideal exactly when A.u = A.v
        model = validate_model([[1, 1, 1, 1], [0, 1, 2, 3]])
        gens = [binomial_from_vector(v, model) for v in lattice_kernel(model)]
        order = degrevlex_lowest(1, model.grading)
        basis = reduce_gb(buchberger(saturate_full(gens, model.grading), order))
        monomials = [u for u in itertools.product(range(3), repeat=4) if sum(u) <= 3]
        rng = random.Random(13)
        for _ in range(1000):
            u, v = rng.choice(monomials), rng.choice(monomials)
            if u == v:
                continue
            if model.grading.weigh(u) != model.grading.weigh(v):
                continue
            assert ideal_membership(Binomial(u, v), basis) == (model.apply(u) == model.apply(v))
