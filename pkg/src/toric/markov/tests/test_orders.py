import itertools
import random
import unittest
from toric.markov.exceptions import IndexOutOfRange, InvalidOrderMatrix, LengthMismatch
from toric.markov.orders import (
    EQUAL, GREATER, LESS, OrderMatrix, compare, degrevlex_lowest, is_term_order,
)


class TestDegrevlexLowest(unittest.TestCase):

    def test_rows(self):
        order = degrevlex_lowest(1, (1, 1, 1))
        assert order.rows == ((1, 1, 1), (-1, 0, 0), (0, 0, -1))
        assert order.lowest_var == 1
        order = degrevlex_lowest(2, (3, 5))
        assert order.rows == ((3, 5), (0, -1))
        order = degrevlex_lowest(3, (1, 1, 1, 1))
        assert order.rows == ((1, 1, 1, 1), (0, 0, -1, 0), (0, 0, 0, -1), (0, -1, 0, 0))

    def test_index_out_of_range(self):
        with self.assertRaises(IndexOutOfRange):
            degrevlex_lowest(0, (1, 1, 1))
        with self.assertRaises(IndexOutOfRange):
            degrevlex_lowest(4, (1, 1, 1))

    def test_compare(self):
        order = degrevlex_lowest(1, (1, 1, 1))
        assert compare((0, 1, 0), (1, 0, 0), order) == GREATER
        assert compare((2, 0, 0), (0, 1, 1), order) == LESS
        assert compare((1, 1, 0), (1, 1, 0), order) == EQUAL
        with self.assertRaises(LengthMismatch):
            compare((1, 0), (1, 0, 0), order)

    def test_lowest_variable(self):
        # any monomial divisible by x_i is smaller than one of the same degree that is not
        weights = (1, 1, 1, 1)
        for i in range(1, 5):
            order = degrevlex_lowest(i, weights)
            for u in itertools.product(range(3), repeat=4):
                if sum(u) != 2:
                    continue
                for v in itertools.product(range(3), repeat=4):
                    if sum(v) != 2 or u == v:
                        continue
                    if u[i - 1] > 0 and v[i - 1] == 0:
                        assert compare(u, v, order) == LESS

    def test_term_order_axioms(self):
        rng = random.Random(5)
        weights = (1, 2, 3, 4)
        order = degrevlex_lowest(2, weights)

        def monomial():
            return tuple(rng.randint(0, 3) for _ in range(4))

        for _ in range(200):
            u, v, w = monomial(), monomial(), monomial()
            uw = tuple(a + b for a, b in zip(u, w))
            vw = tuple(a + b for a, b in zip(v, w))
            assert compare(uw, vw, order) == compare(u, v, order)
            if compare(u, v, order) == GREATER and compare(v, w, order) == GREATER:
                assert compare(u, w, order) == GREATER
            if u != (0, 0, 0, 0):
                assert compare(u, (0, 0, 0, 0), order) == GREATER


class TestOrderMatrix(unittest.TestCase):

    def test_is_term_order(self):
        assert is_term_order(OrderMatrix([(1, 0), (0, 1)]))
        assert not is_term_order(OrderMatrix([(-1, 0), (0, 1)], check=False))
        assert not is_term_order(OrderMatrix([(1, 1)], check=False))

    def test_invalid_order(self):
        with self.assertRaises(InvalidOrderMatrix):
            OrderMatrix([(1, 1)])
        with self.assertRaises(InvalidOrderMatrix):
            OrderMatrix([(1, 1), (1, 1)])

    def test_every_lowest_order_is_a_term_order(self):
        for i in range(1, 6):
            assert is_term_order(degrevlex_lowest(i, (2, 1, 3, 1, 1)))
