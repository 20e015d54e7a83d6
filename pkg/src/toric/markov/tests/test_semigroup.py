import random
import sympy
import unittest
from toric.markov import schemas
from toric.markov.exceptions import LengthMismatch
from toric.markov.semigroup import (
    degree_leq, degree_of, echelon_rows, in_semigroup, iter_factorizations,
    lattice_kernel, lawrence_lift, validate_model,
)


class TestModelMatrix(unittest.TestCase):

    def test_shape_and_grading(self):
        model = validate_model([[1, 1, 1]], name='ones')
        assert model.d == 1
        assert model.r == 3
        assert model.grading.weights == (1, 1, 1)
        assert model.title_or_name == 'ones'

    def test_grading_is_column_sums(self):
        model = validate_model([[1, 1, 1, 1], [0, 1, 2, 3]])
        assert model.grading.weights == (1, 2, 3, 4)
        assert model.grading.weigh((1, 0, 0, 1)) == 5

    def test_invalid_matrices(self):
        with self.assertRaises(schemas.EmptyMatrix):
            validate_model([])
        with self.assertRaises(schemas.RaggedMatrix):
            validate_model([[1, 2], [1]])
        with self.assertRaises(schemas.NegativeEntry):
            validate_model([[1, -1]])
        with self.assertRaises(schemas.ZeroColumn):
            validate_model([[1, 0], [0, 0]])

    def test_equal_models_hash_alike(self):
        assert validate_model([[2, 3]], name='a') == validate_model([[2, 3]], name='b')
        assert len({validate_model([[2, 3]]), validate_model([[2, 3]])}) == 1


class TestDegreeMap(unittest.TestCase):

    def test_degree_of(self):
        model = validate_model([[1, 1], [0, 2]])
        assert degree_of(model, (2, 1)) == (3, 2)
        with self.assertRaises(LengthMismatch):
            degree_of(model, (1, 1, 1))

    def test_morphism(self):
        rng = random.Random(7)
        model = validate_model([[1, 2, 0, 3], [2, 0, 1, 1]])
        for _ in range(50):
            u = tuple(rng.randint(0, 4) for _ in range(4))
            v = tuple(rng.randint(0, 4) for _ in range(4))
            uv = tuple(a + b for a, b in zip(u, v))
            assert degree_of(model, uv) == tuple(
                a + b for a, b in zip(degree_of(model, u), degree_of(model, v))
            )

    def test_grading_is_compatible(self):
        model = validate_model([[1, 1, 1, 1], [0, 1, 2, 3]])
        rng = random.Random(11)
        for _ in range(50):
            u = tuple(rng.randint(0, 3) for _ in range(4))
            assert model.grading.weigh(u) == sum(degree_of(model, u))


class TestKernelLattice(unittest.TestCase):

    def test_numerical_semigroup(self):
        model = validate_model([[2, 3]])
        assert lattice_kernel(model).vectors == [(3, -2)]

    def test_identity_has_trivial_kernel(self):
        model = validate_model([[1, 0], [0, 1]])
        assert lattice_kernel(model).rank == 0

    def test_twisted_cubic(self):
        model = validate_model([[1, 1, 1, 1], [0, 1, 2, 3]])
        kernel = lattice_kernel(model)
        assert kernel.rank == 2
        for vector in kernel:
            assert model.apply(vector) == (0, 0)
        # Hermite normal forms of the same lattice coincide
        expected, _ = echelon_rows([(1, -2, 1, 0), (0, 1, -2, 1)], 4)
        assert [tuple(row) for row in expected] == kernel.vectors

    def test_kernel_rank(self):
        rng = random.Random(3)
        for _ in range(20):
            entries = [[rng.randint(0, 3) for _ in range(5)] for _ in range(3)]
            for col in range(5):
                if all(row[col] == 0 for row in entries):
                    entries[0][col] = 1
            model = validate_model(entries)
            kernel = lattice_kernel(model)
            assert kernel.rank == model.r - model.to_sympy().rank()
            for vector in kernel:
                assert not any(model.apply(vector))

    def test_echelon_rows(self):
        rows, rank = echelon_rows([[2, 4], [3, 5]], 2)
        assert rank == 2
        assert rows == [[1, 1], [0, 2]]

    def test_echelon_rows_extended_gcd_chain(self):
        # each pair of entries shares a factor, so every step needs Bezout coefficients
        rows, rank = echelon_rows([[6], [10], [15]], 1)
        assert rank == 1
        assert rows == [[1], [0], [0]]

    def test_kernel_needs_elimination(self):
        model = validate_model([[6, 10, 15]])
        kernel = lattice_kernel(model)
        assert kernel.rank == 2
        for vector in kernel:
            assert model.apply(vector) == (0,)
        # a basis of the whole kernel, not a sublattice, has cross product +-A
        first, second = (sympy.Matrix(vector) for vector in kernel)
        assert list(first.cross(second)) in ([6, 10, 15], [-6, -10, -15])


class TestLawrenceLift(unittest.TestCase):

    def test_one_column(self):
        lifted = lawrence_lift(validate_model([[1]]))
        assert lifted.entries == ((1, 0), (1, 1))

    def test_shape(self):
        lifted = lawrence_lift(validate_model([[1, 2]], name='line'))
        assert lifted.entries == ((1, 2, 0, 0), (1, 0, 1, 0), (0, 1, 0, 1))
        assert lifted.name == 'line-lawrence'


class TestSemigroup(unittest.TestCase):

    def test_membership(self):
        model = validate_model([[2, 3]])
        assert not in_semigroup(model, (1,))
        assert in_semigroup(model, (0,))
        assert in_semigroup(model, (5,))
        assert in_semigroup(model, (7,))

    def test_factorizations(self):
        model = validate_model([[2, 3]])
        assert sorted(iter_factorizations(model, (12,))) == [(0, 4), (3, 2), (6, 0)]
        assert list(iter_factorizations(model, (-1,))) == []

    def test_degree_leq(self):
        model = validate_model([[2, 3]])
        assert not degree_leq(model, (0,), (1,))
        assert degree_leq(model, (6,), (6,))
        assert degree_leq(model, (2,), (5,))
        assert not degree_leq(model, (5,), (2,))
        ones = validate_model([[1, 1, 1]])
        assert degree_leq(ones, (1,), (2,))
