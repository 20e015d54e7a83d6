import itertools
import random
import unittest
from toric.markov.exceptions import EmptySet, FiberTooLarge, NotAFace
from toric.markov.fibers import (
    Fiber, build_nabla, connected_components, enumerate_fiber, is_face,
    isolated_vertices, triple_condition,
)
from toric.markov.semigroup import validate_model


def brute_force_fiber(model, a):
    bound = max(a) if a else 0
    return sorted(
        u for u in itertools.product(range(bound + 1), repeat=model.r)
        if model.apply(u) == tuple(a)
    )


class TestEnumerateFiber(unittest.TestCase):

    def test_small_fibers(self):
        ones = validate_model([[1, 1, 1]])
        assert enumerate_fiber(ones, (1,)).monomials == [(0, 0, 1), (0, 1, 0), (1, 0, 0)]
        assert enumerate_fiber(ones, (0,)).monomials == [(0, 0, 0)]
        numerical = validate_model([[2, 3]])
        assert enumerate_fiber(numerical, (6,)).monomials == [(0, 2), (3, 0)]
        assert enumerate_fiber(numerical, (1,)).monomials == []

    def test_order_under_weighted_grading(self):
        model = validate_model([[3, 1, 1]])
        assert enumerate_fiber(model, (3,)).monomials == [
            (0, 0, 3), (0, 1, 2), (0, 2, 1), (0, 3, 0), (1, 0, 0),
        ]

    def test_cap(self):
        ones = validate_model([[1, 1, 1]])
        assert len(enumerate_fiber(ones, (3,), cap=10)) == 10
        with self.assertRaises(FiberTooLarge):
            enumerate_fiber(ones, (3,), cap=5)

    def test_matches_brute_force(self):
        rng = random.Random(17)
        for _ in range(15):
            entries = [[rng.randint(0, 2) for _ in range(4)] for _ in range(2)]
            for col in range(4):
                if all(row[col] == 0 for row in entries):
                    entries[1][col] = 1
            model = validate_model(entries)
            u = tuple(rng.randint(0, 2) for _ in range(4))
            a = model.apply(u)
            fiber = enumerate_fiber(model, a)
            assert sorted(fiber.monomials) == brute_force_fiber(model, a)
            assert u in fiber


class TestNablaComplex(unittest.TestCase):

    def test_path(self):
        # x1*x2, x2*x3, x3*x4 in graded lex order: x3*x4, x2*x3, x1*x2
        fiber = Fiber((2,), [(1, 1, 0, 0), (0, 1, 1, 0), (0, 0, 1, 1)])
        nabla = build_nabla(fiber)
        assert nabla.monomials == [(0, 0, 1, 1), (0, 1, 1, 0), (1, 1, 0, 0)]
        assert nabla.edges() == [(0, 1), (1, 2)]
        assert nabla.component_count == 1
        assert isolated_vertices(nabla) == []

    def test_two_coprime_monomials(self):
        fiber = enumerate_fiber(validate_model([[2, 3]]), (6,))
        nabla = build_nabla(fiber)
        assert nabla.edges() == []
        assert connected_components(nabla) == [[(0, 2)], [(3, 0)]]
        assert isolated_vertices(nabla) == [(0, 2), (3, 0)]

    def test_components_partition_the_fiber(self):
        model = validate_model([[1, 1, 1, 1], [0, 1, 2, 3]])
        fiber = enumerate_fiber(model, (4, 6))
        components = connected_components(build_nabla(fiber))
        flattened = sorted(u for component in components for u in component)
        assert flattened == sorted(fiber.monomials)

    def test_faces(self):
        triangle = [(1, 1, 0), (0, 1, 1), (1, 0, 1)]
        assert not is_face(triangle)
        assert is_face([(1, 1, 0), (0, 1, 1)])
        assert is_face([(0, 0, 1)])
        with self.assertRaises(EmptySet):
            is_face([])


class TestTripleCondition(unittest.TestCase):

    def test_edge_with_free_gcd(self):
        fiber = [(1, 1, 0, 0), (0, 1, 1, 0), (0, 0, 1, 1)]
        assert triple_condition((1, 1, 0, 0), (0, 1, 1, 0), fiber)

    def test_gcd_divides_third_monomial(self):
        fiber = [(1, 1, 0), (0, 1, 1), (0, 2, 0)]
        assert not triple_condition((1, 1, 0), (0, 1, 1), fiber)

    def test_not_an_edge(self):
        with self.assertRaises(NotAFace):
            triple_condition((1, 0), (0, 1), [(1, 0), (0, 1)])
        with self.assertRaises(NotAFace):
            triple_condition((1, 1), (1, 1), [(1, 1)])
