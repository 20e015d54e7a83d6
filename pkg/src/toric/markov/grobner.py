"""
Buchberger's algorithm for ideals generated by pure difference binomials.

Reducing a binomial by binomials always yields a binomial or zero, so the
working representation is a (lead, trail) pair of exponent tuples and zero
is None.
"""

from toric.markov import schemas
from toric.markov.base import get_logger
from toric.markov.monomials import (
    Binomial, divides, is_one, lcm_monomials, sorted_binomials,
)
from toric.markov.orders import degrevlex_lowest
from zope.interface import implementer
from zope.schema.fieldproperty import FieldProperty
import heapq


logger = get_logger()


@implementer(schemas.IOrientedBinomial)
class OrientedBinomial():
    lead = FieldProperty(schemas.IOrientedBinomial['lead'])
    trail = FieldProperty(schemas.IOrientedBinomial['trail'])

    def __init__(self, lead, trail):
        self.lead = tuple(lead)
        self.trail = tuple(trail)

    def as_binomial(self):
        return Binomial(self.lead, self.trail)

    def __eq__(self, other):
        if not isinstance(other, OrientedBinomial):
            return NotImplemented
        return self.lead == other.lead and self.trail == other.trail

    def __hash__(self):
        return hash((self.lead, self.trail))

    def __repr__(self):
        return "<OrientedBinomial {}>".format(self.as_binomial())


@implementer(schemas.IGrobnerBasis)
class GrobnerBasis():
    elements = FieldProperty(schemas.IGrobnerBasis['elements'])
    order = FieldProperty(schemas.IGrobnerBasis['order'])
    reduced = FieldProperty(schemas.IGrobnerBasis['reduced'])

    def __init__(self, pairs, order, reduced=False):
        self.elements = [OrientedBinomial(lead, trail) for lead, trail in pairs]
        self.order = order
        self.reduced = reduced

    def pairs(self):
        return [(element.lead, element.trail) for element in self.elements]

    def binomials(self):
        "Elements in canonical orientation and canonical order"
        return sorted_binomials(element.as_binomial() for element in self.elements)

    def leads(self):
        return [element.lead for element in self.elements]

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)


def as_pair(f):
    "Exponent pair of a Binomial, OrientedBinomial or (u, v) tuple"
    if hasattr(f, 'plus'):
        return f.plus, f.minus
    if hasattr(f, 'lead'):
        return f.lead, f.trail
    u, v = f
    return tuple(u), tuple(v)

def basis_pairs(basis):
    if isinstance(basis, GrobnerBasis):
        return basis.pairs()
    return [as_pair(f) for f in basis]

def orient(u, v, order):
    "(lead, trail) of X^u - X^v, or None when u = v"
    if u == v:
        return None
    if order.key(u) > order.key(v):
        return u, v
    return v, u

def normal_form(m, pairs):
    "Rewrite X^m by m -> m - lead + trail until no lead divides it"
    m = tuple(m)
    changed = True
    while changed:
        changed = False
        for lead, trail in pairs:
            if divides(lead, m):
                m = tuple(e - l + t for e, l, t in zip(m, lead, trail))
                changed = True
                break
    return m

def reduce(f, basis):
    """
    Normal form of a binomial with respect to a set of oriented binomials.
    Returns a Binomial, or None if it reduces to zero.
    """
    u, v = as_pair(f)
    pairs = basis_pairs(basis)
    u, v = normal_form(u, pairs), normal_form(v, pairs)
    if u == v:
        return None
    return Binomial(u, v, degree=getattr(f, 'degree', None))

def spair(f, g):
    "S-binomial of two (lead, trail) pairs as an unoriented pair, None if zero"
    common = lcm_monomials([f[0], g[0]])
    first = tuple(c - l + t for c, l, t in zip(common, f[0], f[1]))
    second = tuple(c - l + t for c, l, t in zip(common, g[0], g[1]))
    if first == second:
        return None
    return first, second

def s_binomial(f, g):
    """
    lcm/lead_f * f - lcm/lead_g * g of two oriented binomials, or None when the
    two trails lift to the same monomial.
    """
    result = spair(as_pair(f), as_pair(g))
    if result is None:
        return None
    return Binomial(*result)

def _reduce_pair(u, v, pairs, order):
    u, v = normal_form(u, pairs), normal_form(v, pairs)
    return orient(u, v, order)

def buchberger(gens, order, chain_criterion=False):
    """
    Groebner basis of the ideal generated by gens.

    S-pairs are processed in increasing first-row weight of the lcm of their
    leads, ties by pair index. Pairs with coprime leads are skipped.
    """
    weights = order.rows[0]
    basis = []
    for f in gens:
        u, v = as_pair(f)
        element = _reduce_pair(u, v, basis, order)
        if element is not None:
            basis.append(element)

    queue = []
    pending = set()

    def push(i, j):
        common = lcm_monomials([basis[i][0], basis[j][0]])
        weight = sum(w * e for w, e in zip(weights, common))
        heapq.heappush(queue, (weight, i, j))
        pending.add((i, j))

    for j in range(len(basis)):
        for i in range(j):
            push(i, j)

    reductions = 0
    skipped = 0
    while queue:
        _, i, j = heapq.heappop(queue)
        pending.discard((i, j))
        lead_i, lead_j = basis[i][0], basis[j][0]
        if is_one(tuple(min(a, b) for a, b in zip(lead_i, lead_j))):
            skipped += 1
            continue
        if chain_criterion:
            common = lcm_monomials([lead_i, lead_j])
            if any(
                k != i and k != j
                and divides(basis[k][0], common)
                and (min(i, k), max(i, k)) not in pending
                and (min(j, k), max(j, k)) not in pending
                for k in range(len(basis))
            ):
                skipped += 1
                continue
        spoly = spair(basis[i], basis[j])
        reductions += 1
        if spoly is None:
            continue
        element = _reduce_pair(spoly[0], spoly[1], basis, order)
        if element is None:
            continue
        basis.append(element)
        new = len(basis) - 1
        for k in range(new):
            push(k, new)

    logger.debug(
        "Buchberger: %d elements, %d S-pairs reduced, %d skipped by criteria",
        len(basis), reductions, skipped
    )
    return GrobnerBasis(basis, order, reduced=False)

def reduce_gb(basis):
    """
    The unique reduced Groebner basis: keep the minimal leads, bring every trail
    to normal form and sort by lead in increasing order.
    """
    order = basis.order
    pairs = sorted(set(basis_pairs(basis)), key=lambda pair: (order.key(pair[0]), order.key(pair[1])))
    kept = []
    for lead, trail in pairs:
        if any(divides(other, lead) for other, _ in kept):
            continue
        kept.append((lead, trail))
    reduced = [(lead, normal_form(trail, kept)) for lead, trail in kept]
    reduced.sort(key=lambda pair: order.key(pair[0]))
    return GrobnerBasis(reduced, order, reduced=True)

def ideal_membership(f, basis):
    "True if f reduces to zero modulo a Groebner basis"
    return reduce(f, basis) is None

def divide_common_power(lead, trail, i):
    "Divide both terms by the largest common power of X_i"
    power = min(lead[i - 1], trail[i - 1])
    if power == 0:
        return lead, trail
    lead = lead[:i - 1] + (lead[i - 1] - power,) + lead[i:]
    trail = trail[:i - 1] + (trail[i - 1] - power,) + trail[i:]
    return lead, trail

def saturate_variable(gens, i, weights, chain_criterion=False):
    """
    Generators of (I : X_i^oo): the reduced basis under the reverse lexicographic
    order with X_i lowest, with each element divided by its common power of X_i.
    """
    order = degrevlex_lowest(i, weights)
    reduced = reduce_gb(buchberger(gens, order, chain_criterion=chain_criterion))
    result = []
    for lead, trail in reduced.pairs():
        lead, trail = divide_common_power(lead, trail, i)
        if lead != trail:
            result.append(Binomial(lead, trail))
    result = sorted_binomials(result)
    logger.debug("Saturation by x%d gives %d generators", i, len(result))
    return result

def saturate_full(kernel_gens, weights, chain_criterion=False):
    """
    Generators of (I : (X_1 ... X_r)^oo) by saturating in X_1, ..., X_r in turn.
    """
    weights = tuple(getattr(weights, 'weights', weights))
    gens = sorted_binomials(Binomial(*as_pair(f)) for f in kernel_gens)
    for i in range(1, len(weights) + 1):
        if len(gens) == 0:
            break
        gens = saturate_variable(gens, i, weights, chain_criterion=chain_criterion)
    return gens

def canonical_set(basis):
    "Sign-insensitive set of the elements of a basis"
    return frozenset(Binomial(lead, trail) for lead, trail in basis_pairs(basis))