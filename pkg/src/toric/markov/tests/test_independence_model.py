"""
The 2 x 4 x 2 table model with two margins fixed, shipped as the
paper-example builtin.
"""

import unittest
from toric.markov import vocabulary
from toric.markov.fibers import build_nabla, enumerate_fiber, is_face, triple_condition
from toric.markov.formatter import emit
from toric.markov.indispensable import (
    BinomialSet, all_orders_reduced_gb_check, indispensable_binomials,
    indispensable_monomials, indispensable_monomials_at, lattice_certificate, markov_basis,
    minimal_degrees, uniqueness_verdict,
)
from toric.markov.monomials import gcd_monomials, render_monomial
from toric.markov.registry import load_builtin_model
from toric.markov.semigroup import echelon_rows, lattice_kernel
from toric.markov.tests.test_cli import run_main

EXPECTED = (
    "x1*x11 - x3*x9\n"
    "x2*x12 - x4*x10\n"
    "x5*x15 - x7*x13\n"
    "x6*x16 - x8*x14\n"
)

INDISPENSABLE_MONOMIALS = [
    "x1*x11", "x2*x12", "x3*x9", "x4*x10", "x5*x15", "x6*x16", "x7*x13", "x8*x14",
]

# Every monomial of degree A.1 is made of four blocks of four exponents,
# BLOCKS[i] + BLOCKS[j] + BLOCKS[MIRROR[i]] + BLOCKS[MIRROR[j]].
BLOCKS = {
    1: (1, 1, 1, 1),
    2: (0, 1, 2, 1),
    3: (1, 0, 1, 2),
    4: (2, 1, 0, 1),
    5: (1, 2, 1, 0),
    6: (0, 0, 2, 2),
    7: (2, 0, 0, 2),
    8: (2, 2, 0, 0),
    9: (0, 2, 2, 0),
}
MIRROR = {1: 1, 2: 4, 3: 5, 4: 2, 5: 3, 6: 8, 7: 9, 8: 6, 9: 7}

# edges of the block complex up to rotating the four exponents
EDGE_ORBITS = [(1, 2), (1, 6), (2, 3), (2, 4), (2, 6), (2, 7), (2, 8), (2, 9), (6, 7)]
SEPARATED_EDGES = [(1, 2), (2, 6), (2, 9)]


def assemble(i, j):
    return BLOCKS[i] + BLOCKS[j] + BLOCKS[MIRROR[i]] + BLOCKS[MIRROR[j]]

def permute(u, permutation):
    "Exponent vector with variable i moved to position permutation[i]"
    result = [0] * len(u)
    for idx, exp in enumerate(u):
        result[permutation[idx]] = exp
    return tuple(result)


class TestIndependenceModel(unittest.TestCase):

    @classmethod
    def setUpClass(cls):
        cls.model = load_builtin_model('paper-example')

    def test_shape(self):
        assert self.model.d == 16
        assert self.model.r == 16
        assert self.model.grading.weights == tuple([2] * 16)

    def test_indispensable_binomials(self):
        binomials = indispensable_binomials(self.model, 'both')
        assert emit(BinomialSet(binomials)) == EXPECTED

    def test_markov_basis_is_unique(self):
        assert emit(markov_basis(self.model)) == EXPECTED
        verdict = uniqueness_verdict(self.model)
        assert verdict.verdict == vocabulary.UNIQUE
        assert all(report.indispensable for report in minimal_degrees(self.model))

    def test_indispensable_monomials(self):
        monomials = set(indispensable_monomials(self.model))
        assert len(monomials) == 8
        assert sorted(render_monomial(u) for u in monomials) == sorted(INDISPENSABLE_MONOMIALS)
        for binomial in indispensable_binomials(self.model, 'nabla'):
            assert binomial.plus in monomials
            assert binomial.minus in monomials

    def test_reduced_for_every_lowest_variable(self):
        binomials = indispensable_binomials(self.model, 'nabla')
        assert all_orders_reduced_gb_check(binomials, self.model)

    def test_kernel_lattice(self):
        kernel = lattice_kernel(self.model)
        assert kernel.rank == 4
        binomials = indispensable_binomials(self.model, 'nabla')
        expected, rank = echelon_rows([binomial.vector for binomial in binomials], 16)
        assert rank == 4
        assert [tuple(row) for row in expected] == kernel.vectors

    def test_lattice_certificate(self):
        certificate = lattice_certificate(self.model)
        assert certificate.applies
        assert emit(BinomialSet(certificate.binomials)) == EXPECTED

    def test_command_line(self):
        code, out, _ = run_main(['indispensable', '--model', 'paper-example', '--method', 'both'])
        assert code == 0
        assert out == EXPECTED
        code, out, _ = run_main(['verdict', '--model', 'paper-example'])
        assert out == "UNIQUE\n"


class TestAllOnesFiber(unittest.TestCase):

    @classmethod
    def setUpClass(cls):
        cls.model = load_builtin_model('paper-example')
        cls.degree = cls.model.apply(tuple([1] * 16))
        cls.fiber = enumerate_fiber(cls.model, cls.degree)

    def test_size(self):
        assert self.degree == tuple([2] * 16)
        assert len(self.fiber) == 81

    def test_symmetries(self):
        # swapping the levels of the first or of the last factor of the table
        # permutes the rows of the matrix and fixes the degree
        first = [(idx + 8) % 16 for idx in range(16)]
        last = [idx ^ 1 for idx in range(16)]
        nabla = build_nabla(self.fiber)
        monomials = self.fiber.monomials
        edges = set(
            frozenset([monomials[i], monomials[j]]) for i, j in nabla.edges()
        )
        for permutation in (first, last):
            assert set(permute(u, permutation) for u in monomials) == set(monomials)
            permuted = set(
                frozenset(permute(u, permutation) for u in edge) for edge in edges
            )
            assert permuted == edges
        assert nabla.component_count == 1

    def test_block_structure(self):
        assembled = set(assemble(i, j) for i in BLOCKS for j in BLOCKS)
        assert len(assembled) == 81
        assert assembled == set(self.fiber.monomials)

    def test_mirror_swaps_halves(self):
        halves = [(idx + 8) % 16 for idx in range(16)]
        for i in BLOCKS:
            for j in BLOCKS:
                assert permute(assemble(i, j), halves) == assemble(MIRROR[i], MIRROR[j])

    def test_gcd_of_two_blocks(self):
        assert gcd_monomials([BLOCKS[2], BLOCKS[3]]) == (0, 0, 1, 1)
        u, v = assemble(1, 2), assemble(1, 3)
        assert u in self.fiber and v in self.fiber
        assert is_face([u, v])
        common = gcd_monomials([u, v])
        assert render_monomial((0,) * 4 + common[4:8] + (0,) * 8) == "x7*x8"

    def test_triple_condition_on_block_edges(self):
        blocks = list(BLOCKS.values())
        for i, k in EDGE_ORBITS:
            separated = (i, k) in SEPARATED_EDGES
            assert is_face([BLOCKS[i], BLOCKS[k]])
            assert triple_condition(BLOCKS[i], BLOCKS[k], blocks) == separated
            # the same pair of blocks in the first position of two fiber monomials
            assert triple_condition(assemble(i, 1), assemble(k, 1), self.fiber) == separated

    def test_indispensable_monomials_at_all_ones(self):
        monomials = indispensable_monomials_at(self.model, self.degree)
        assert sorted(render_monomial(u) for u in monomials) == sorted(INDISPENSABLE_MONOMIALS)
