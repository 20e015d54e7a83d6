"""
Fibers of the degree map and their gcd complexes.

The complex of a fiber has a face for every set of monomials with a nontrivial
gcd. Only its 1-skeleton is stored; higher faces are answered by gcd queries.
"""

from itertools import combinations
from toric.markov import schemas
from toric.markov.base import get_logger
from toric.markov.exceptions import EmptySet, FiberTooLarge, NotAFace
from toric.markov.monomials import divides, gcd_monomials, is_one, monomial_key, support
from toric.markov.semigroup import check_length, iter_factorizations
from zope.interface import implementer
from zope.schema.fieldproperty import FieldProperty
import networkx as nx


logger = get_logger()

DEFAULT_FIBER_CAP = 1000000


@implementer(schemas.IFiber)
class Fiber():
    degree = FieldProperty(schemas.IFiber['degree'])
    monomials = FieldProperty(schemas.IFiber['monomials'])

    def __init__(self, degree, monomials):
        self.degree = tuple(int(value) for value in degree)
        # all monomials of a fiber weigh the same, graded lex reduces to lex
        self.monomials = sorted(set(tuple(u) for u in monomials), key=monomial_key)

    @property
    def size(self):
        return len(self.monomials)

    def __len__(self):
        return len(self.monomials)

    def __iter__(self):
        return iter(self.monomials)

    def __contains__(self, u):
        return tuple(u) in set(self.monomials)

    def __repr__(self):
        return "<Fiber {} size {}>".format(list(self.degree), len(self.monomials))


@implementer(schemas.INablaComplex)
class NablaComplex():
    fiber = FieldProperty(schemas.INablaComplex['fiber'])

    def __init__(self, fiber, graph):
        self.fiber = fiber
        self.graph = graph

    @property
    def monomials(self):
        return self.fiber.monomials

    def edges(self):
        "Edges as sorted pairs of fiber indices"
        return sorted(tuple(sorted(edge)) for edge in self.graph.edges())

    def components(self):
        "Components as sorted lists of fiber indices, ordered by smallest index"
        return sorted(sorted(component) for component in nx.connected_components(self.graph))

    @property
    def component_count(self):
        return nx.number_connected_components(self.graph)


def enumerate_fiber(model, a, cap=DEFAULT_FIBER_CAP):
    """
    All monomials of A-degree a, in graded lex order.
    Raises FiberTooLarge once more than cap monomials are found.
    """
    check_length(a, model.d)
    monomials = []
    for u in iter_factorizations(model, a):
        monomials.append(u)
        if cap is not None and len(monomials) > cap:
            raise FiberTooLarge(
                "Fiber of degree {} has more than {} monomials".format(list(a), cap)
            )
    fiber = Fiber(a, monomials)
    logger.debug("Fiber of degree %s has %d monomials", list(fiber.degree), fiber.size)
    return fiber

def build_nabla(fiber):
    "1-skeleton of the gcd complex: an edge whenever two supports meet"
    graph = nx.Graph()
    graph.add_nodes_from(range(len(fiber.monomials)))
    by_variable = {}
    for idx, u in enumerate(fiber.monomials):
        for var in support(u):
            by_variable.setdefault(var, []).append(idx)
    for indices in by_variable.values():
        graph.add_edges_from(combinations(indices, 2))
    return NablaComplex(fiber, graph)

def is_face(monomials):
    "True if the monomials have a nontrivial gcd"
    monomials = list(monomials)
    if len(monomials) == 0:
        raise EmptySet("A face needs at least one monomial")
    return not is_one(gcd_monomials(monomials))

def connected_components(nabla):
    "Partition of the fiber into the vertex sets of the components"
    monomials = nabla.fiber.monomials
    return [[monomials[idx] for idx in component] for component in nabla.components()]

def isolated_vertices(nabla):
    "Monomials coprime to every other monomial of the fiber"
    monomials = nabla.fiber.monomials
    return [monomials[idx] for idx in sorted(nx.isolates(nabla.graph))]

def triple_condition(u, v, fiber):
    """
    True if no third monomial w of the fiber is divisible by gcd(u, v), i.e.
    gcd(u, v, w) differs from gcd(u, v) for every 2-face {u, v, w}.
    """
    u, v = tuple(u), tuple(v)
    common = gcd_monomials([u, v])
    if u == v or is_one(common):
        raise NotAFace("{} and {} do not span an edge".format(list(u), list(v)))
    monomials = getattr(fiber, 'monomials', fiber)
    for w in monomials:
        w = tuple(w)
        if w == u or w == v:
            continue
        if divides(common, w):
            return False
    return True
