"""
Minimal degrees, Markov bases, indispensable binomials and monomials.

Indispensable binomials are found two ways: from the gcd complexes of the
minimal degrees, and as the common elements of the reduced Groebner bases for
the r reverse lexicographic orders with a designated lowest variable.
"""

from concurrent.futures import ProcessPoolExecutor
from functools import lru_cache, partial
from toric.markov import schemas, vocabulary
from toric.markov.base import get_logger, validate_object
from toric.markov.exceptions import EmptyFiber, GenerationCheckFailed, MethodDisagreement
from toric.markov.fibers import (
    DEFAULT_FIBER_CAP, build_nabla, connected_components, enumerate_fiber,
    isolated_vertices, triple_condition,
)
from toric.markov.grobner import (
    GrobnerBasis, buchberger, canonical_set, ideal_membership, reduce_gb, saturate_full,
)
from toric.markov.monomials import (
    Binomial, binomial_from_vector, divide_binomial_by_gcd, divides, gcd_monomials,
    is_one, monomial_quotient, sorted_binomials, sorted_monomials,
)
from toric.markov.orders import degrevlex_lowest
from toric.markov.semigroup import degree_sum, lattice_kernel, lawrence_lift
from zope.interface import implementer
from zope.schema.fieldproperty import FieldProperty


logger = get_logger()


@implementer(schemas.IDegreeReport)
class DegreeReport():
    degree = FieldProperty(schemas.IDegreeReport['degree'])
    fiber_size = FieldProperty(schemas.IDegreeReport['fiber_size'])
    component_count = FieldProperty(schemas.IDegreeReport['component_count'])
    generator_count = FieldProperty(schemas.IDegreeReport['generator_count'])
    isolated_count = FieldProperty(schemas.IDegreeReport['isolated_count'])
    minimal = FieldProperty(schemas.IDegreeReport['minimal'])
    indispensable = FieldProperty(schemas.IDegreeReport['indispensable'])
    quasi_indispensable = FieldProperty(schemas.IDegreeReport['quasi_indispensable'])

    def __init__(self, degree, components, isolated):
        "components and isolated are lists of monomials from the gcd complex"
        self.degree = tuple(degree)
        self.components = components
        self.isolated = isolated
        self.fiber_size = sum(len(component) for component in components)
        self.component_count = len(components)
        self.generator_count = max(len(components) - 1, 0)
        self.isolated_count = len(isolated)
        self.minimal = self.component_count >= 2
        self.indispensable = self.fiber_size == 2 and self.component_count == 2
        self.quasi_indispensable = self.fiber_size >= 2 and self.isolated_count > 0

    def __repr__(self):
        return "<DegreeReport {} size {} components {}>".format(
            list(self.degree), self.fiber_size, self.component_count
        )


@implementer(schemas.IMarkovBasis)
class MarkovBasis():
    binomials = FieldProperty(schemas.IMarkovBasis['binomials'])
    degrees = FieldProperty(schemas.IMarkovBasis['degrees'])

    def __init__(self, binomials):
        self.binomials = sorted_binomials(binomials)
        self.degrees = [binomial.degree for binomial in self.binomials]

    def __len__(self):
        return len(self.binomials)

    def __iter__(self):
        return iter(self.binomials)


@implementer(schemas.IBinomialSet)
class BinomialSet():
    binomials = FieldProperty(schemas.IBinomialSet['binomials'])

    def __init__(self, binomials):
        self.binomials = sorted_binomials(binomials)

    def __len__(self):
        return len(self.binomials)

    def __iter__(self):
        return iter(self.binomials)


@implementer(schemas.IMonomialSet)
class MonomialSet():
    monomials = FieldProperty(schemas.IMonomialSet['monomials'])

    def __init__(self, monomials, grading=None):
        self.monomials = sorted_monomials((tuple(u) for u in monomials), grading)

    def __len__(self):
        return len(self.monomials)

    def __iter__(self):
        return iter(self.monomials)


@implementer(schemas.IDegreeReports)
class DegreeReports():
    reports = FieldProperty(schemas.IDegreeReports['reports'])

    def __init__(self, reports):
        self.reports = list(reports)

    def __len__(self):
        return len(self.reports)

    def __iter__(self):
        return iter(self.reports)


@implementer(schemas.IVerdict)
class Verdict():
    verdict = FieldProperty(schemas.IVerdict['verdict'])
    witness = FieldProperty(schemas.IVerdict['witness'])

    def __init__(self, verdict, witness=None):
        self.verdict = verdict
        if witness is not None:
            self.witness = tuple(witness)

    @property
    def is_unique(self):
        return self.verdict == vocabulary.UNIQUE

    def __repr__(self):
        return f"<Verdict {self.verdict}>"


@implementer(schemas.ICertificate)
class Certificate():
    applies = FieldProperty(schemas.ICertificate['applies'])
    binomials = FieldProperty(schemas.ICertificate['binomials'])

    def __init__(self, applies, binomials):
        self.applies = applies
        self.binomials = sorted_binomials(binomials)


@implementer(schemas.IIndispensabilityReport)
class IndispensabilityReport():
    degrees = FieldProperty(schemas.IIndispensabilityReport['degrees'])
    markov = FieldProperty(schemas.IIndispensabilityReport['markov'])
    indispensable = FieldProperty(schemas.IIndispensabilityReport['indispensable'])
    monomials = FieldProperty(schemas.IIndispensabilityReport['monomials'])
    verdict = FieldProperty(schemas.IIndispensabilityReport['verdict'])

    def __init__(self, degrees, markov, indispensable, monomials, verdict):
        self.degrees = degrees
        self.markov = markov
        self.indispensable = indispensable
        self.monomials = monomials
        self.verdict = verdict


def map_jobs(func, items, jobs=1):
    "map() over a process pool when jobs > 1, results in input order"
    items = list(items)
    if jobs <= 1 or len(items) <= 1:
        return [func(item) for item in items]
    with ProcessPoolExecutor(max_workers=jobs) as executor:
        return list(executor.map(func, items))


# Toric ideal

@lru_cache(maxsize=32)
def toric_ideal_basis(model, chain_criterion=False):
    """
    Reduced Groebner basis of the toric ideal under the order with X_1 lowest.

    The binomials of a kernel lattice basis generate an ideal whose saturation by
    the product of all variables is the toric ideal.
    """
    order = degrevlex_lowest(1, model.grading)
    kernel = lattice_kernel(model)
    if len(kernel) == 0:
        return GrobnerBasis([], order, reduced=True)
    gens = [binomial_from_vector(vector, model) for vector in kernel]
    gens = saturate_full(gens, model.grading, chain_criterion=chain_criterion)
    basis = reduce_gb(buchberger(gens, order, chain_criterion=chain_criterion))
    for lead, trail in basis.pairs():
        if model.apply(lead) != model.apply(trail):
            raise GenerationCheckFailed(
                "Basis element {} is not homogeneous".format(Binomial(lead, trail))
            )
    logger.info("Toric ideal of %s: reduced basis with %d elements", model.title_or_name, len(basis))
    return basis

def toric_binomials(model, chain_criterion=False):
    "Elements of the toric ideal basis as Binomials carrying their degree"
    basis = toric_ideal_basis(model, chain_criterion)
    return sorted_binomials(
        Binomial(lead, trail, degree=model.apply(lead), grading=model.grading)
        for lead, trail in basis.pairs()
    )

def candidate_degrees(model, chain_criterion=False):
    """
    Degrees of the elements of one reduced Groebner basis.

    A graded generating set has an element in every degree where minimal
    generators are needed, so this is a superset of the minimal degrees.
    """
    basis = toric_ideal_basis(model, chain_criterion)
    degrees = set(model.apply(lead) for lead in basis.leads())
    # the weighted degree of X^u is the sum of the entries of A.u
    return sorted(degrees, key=lambda a: (sum(a), a))


# Gcd complexes

def degree_report(model, a, cap=DEFAULT_FIBER_CAP):
    "Classify one degree from the components of its gcd complex"
    fiber = enumerate_fiber(model, a, cap=cap)
    nabla = build_nabla(fiber)
    report = DegreeReport(a, connected_components(nabla), isolated_vertices(nabla))
    schemas.IDegreeReport.validateInvariants(report)
    logger.debug(
        "Degree %s: %d monomials, %d components, %d isolated",
        list(report.degree), report.fiber_size, report.component_count, report.isolated_count
    )
    return report

@lru_cache(maxsize=32)
def classified_degrees(model, cap=DEFAULT_FIBER_CAP, jobs=1, chain_criterion=False):
    degrees = candidate_degrees(model, chain_criterion)
    return tuple(map_jobs(partial(degree_report, model, cap=cap), degrees, jobs))

def minimal_degrees(model, cap=DEFAULT_FIBER_CAP, jobs=1, chain_criterion=False):
    "Reports of the candidate degrees whose gcd complex is disconnected"
    return [
        report for report in classified_degrees(model, cap, jobs, chain_criterion)
        if report.minimal
    ]

def quasi_indispensable_degrees(model, cap=DEFAULT_FIBER_CAP, jobs=1, chain_criterion=False):
    "Minimal degrees with an isolated vertex in a fiber of at least two monomials"
    return [
        report for report in minimal_degrees(model, cap, jobs, chain_criterion)
        if report.quasi_indispensable
    ]

def indispensable_degrees(model, cap=DEFAULT_FIBER_CAP, jobs=1, chain_criterion=False):
    return [
        report for report in minimal_degrees(model, cap, jobs, chain_criterion)
        if report.indispensable
    ]

def dominating_degree(model, cap=DEFAULT_FIBER_CAP, jobs=1, chain_criterion=False):
    "Sum of the minimal degrees, above every one of them in the semigroup order"
    reports = minimal_degrees(model, cap, jobs, chain_criterion)
    if len(reports) == 0:
        return tuple([0] * model.d)
    return degree_sum(report.degree for report in reports)


# Markov bases

def star_binomials(report):
    "Join the smallest monomial of each component to the smallest monomial overall"
    root = report.components[0][0]
    return [
        Binomial(component[0], root, degree=report.degree)
        for component in report.components[1:]
    ]

def generates_same_ideal(binomials, model, chain_criterion=False):
    "Mutual membership of a binomial set and the toric ideal basis"
    toric = toric_ideal_basis(model, chain_criterion)
    if not all(ideal_membership(binomial, toric) for binomial in binomials):
        return False
    order = toric.order
    basis = reduce_gb(buchberger(binomials, order, chain_criterion=chain_criterion))
    return all(ideal_membership(pair, basis) for pair in toric.pairs())

def markov_basis(model, cap=DEFAULT_FIBER_CAP, jobs=1, chain_criterion=False):
    """
    A minimal binomial generating set: one star per minimal degree.
    Raises GenerationCheckFailed if it does not generate the toric ideal.
    """
    reports = minimal_degrees(model, cap, jobs, chain_criterion)
    binomials = []
    for report in reports:
        star = star_binomials(report)
        if len(star) != report.generator_count:
            raise GenerationCheckFailed(
                "Degree {} has {} generators, expected {}".format(
                    list(report.degree), len(star), report.generator_count
                )
            )
        binomials.extend(star)
    if not generates_same_ideal(binomials, model, chain_criterion):
        raise GenerationCheckFailed(
            "Markov basis of {} does not generate the toric ideal".format(model.title_or_name)
        )
    basis = MarkovBasis(binomials)
    logger.info("Markov basis of %s has %d elements", model.title_or_name, len(basis))
    return basis


# Indispensable binomials

def indispensable_binomials_combinatorial(model, cap=DEFAULT_FIBER_CAP, jobs=1, chain_criterion=False):
    "Binomials of the minimal degrees whose fiber is two coprime monomials"
    binomials = []
    for report in minimal_degrees(model, cap, jobs, chain_criterion):
        if report.indispensable:
            binomials.extend(star_binomials(report))
    return sorted_binomials(binomials)

def reduced_basis_set(gens, weights, chain_criterion, i):
    "Canonical element set of the reduced basis under the order with X_i lowest"
    order = degrevlex_lowest(i, weights)
    return canonical_set(reduce_gb(buchberger(gens, order, chain_criterion=chain_criterion)))

def lowest_variable_basis_sets(gens, model, jobs=1, chain_criterion=False):
    "One reduced basis element set for every choice of lowest variable, in index order"
    func = partial(reduced_basis_set, list(gens), model.grading.weights, chain_criterion)
    return map_jobs(func, range(1, model.r + 1), jobs)

def indispensable_binomials_grobner(model, jobs=1, chain_criterion=False):
    "Binomials that lie in all r reduced Groebner bases up to sign"
    gens = toric_binomials(model, chain_criterion)
    if len(gens) == 0:
        return []
    common = None
    for element_set in lowest_variable_basis_sets(gens, model, jobs, chain_criterion):
        common = element_set if common is None else common & element_set
    return sorted_binomials(
        Binomial(
            binomial.plus, binomial.minus, degree=model.apply(binomial.plus), grading=model.grading
        )
        for binomial in common
    )

def indispensable_binomials(model, method='both', cap=DEFAULT_FIBER_CAP, jobs=1, chain_criterion=False):
    """
    Indispensable binomials by the chosen method. With 'both' the two results
    must agree or MethodDisagreement is raised.
    """
    if method == 'nabla':
        return indispensable_binomials_combinatorial(model, cap, jobs, chain_criterion)
    if method == 'grobner':
        return indispensable_binomials_grobner(model, jobs, chain_criterion)
    combinatorial = indispensable_binomials_combinatorial(model, cap, jobs, chain_criterion)
    grobner = indispensable_binomials_grobner(model, jobs, chain_criterion)
    if set(combinatorial) != set(grobner):
        raise MethodDisagreement(
            "gcd complexes give {} but Groebner bases give {}".format(
                [str(b) for b in combinatorial], [str(b) for b in grobner]
            )
        )
    return combinatorial

def indispensable_below(model, a, cap=DEFAULT_FIBER_CAP):
    """
    Indispensable binomials of every degree below a, read off the edges of the
    gcd complex of a whose gcd divides no third monomial, plus the binomial of
    a itself when its fiber is two coprime monomials.
    """
    fiber = enumerate_fiber(model, a, cap=cap)
    if len(fiber) == 0:
        raise EmptyFiber("Degree {} is not in the semigroup".format(list(a)))
    nabla = build_nabla(fiber)
    monomials = fiber.monomials
    found = set()
    for i, j in nabla.edges():
        u, v = monomials[i], monomials[j]
        if triple_condition(u, v, fiber):
            found.add(divide_binomial_by_gcd(Binomial(u, v), model))
    if len(monomials) == 2 and is_one(gcd_monomials(monomials)):
        found.add(Binomial(monomials[0], monomials[1], degree=fiber.degree, grading=model.grading))
    return sorted_binomials(found)


# Indispensable monomials

def indispensable_monomials(model, cap=DEFAULT_FIBER_CAP, jobs=1, chain_criterion=False):
    "Isolated vertices of the gcd complexes of the minimal degrees"
    monomials = []
    for report in minimal_degrees(model, cap, jobs, chain_criterion):
        monomials.extend(report.isolated)
    return sorted_monomials(monomials, model.grading)

def maximal_by_division(monomials):
    "Elements not strictly divisible by another element"
    monomials = set(monomials)
    return [
        g for g in monomials
        if not any(h != g and divides(g, h) for h in monomials)
    ]

def indispensable_monomials_at(model, a, cap=DEFAULT_FIBER_CAP):
    """
    X^u / gcd(X^u, X^v) for every u in the fiber of a and every gcd(X^u, X^v),
    v != u, that is maximal for division.
    """
    fiber = enumerate_fiber(model, a, cap=cap)
    if len(fiber) == 0:
        raise EmptyFiber("Degree {} is not in the semigroup".format(list(a)))
    found = set()
    for u in fiber.monomials:
        gcds = [gcd_monomials([u, v]) for v in fiber.monomials if v != u]
        for common in maximal_by_division(gcds):
            found.add(monomial_quotient(u, common))
    return sorted_monomials(found, model.grading)


# Verdicts

def uniqueness_verdict(model, cap=DEFAULT_FIBER_CAP, jobs=1, chain_criterion=False):
    """
    UNIQUE when the Markov basis is the set of indispensable binomials, otherwise
    NOT_UNIQUE with a minimal degree that is not indispensable.
    """
    markov = markov_basis(model, cap, jobs, chain_criterion)
    indispensable = indispensable_binomials_combinatorial(model, cap, jobs, chain_criterion)
    if set(markov.binomials) == set(indispensable):
        return Verdict(vocabulary.UNIQUE)
    witness = next(
        report.degree for report in minimal_degrees(model, cap, jobs, chain_criterion)
        if not report.indispensable
    )
    return Verdict(vocabulary.NOT_UNIQUE, witness)

def lawrence_uniqueness(model, cap=DEFAULT_FIBER_CAP, jobs=1, chain_criterion=False):
    "Verdict for the Lawrence lifting, which always has a unique Markov basis"
    return uniqueness_verdict(lawrence_lift(model), cap, jobs, chain_criterion)

def all_orders_reduced_gb_check(gens, model, jobs=1, chain_criterion=False):
    """
    True if gens is, up to sign, the reduced Groebner basis of the ideal it
    generates for every order with a designated lowest variable.
    """
    gens = sorted_binomials(Binomial(b.plus, b.minus) for b in gens)
    if len(gens) == 0:
        return True
    expected = frozenset(gens)
    return all(
        element_set == expected
        for element_set in lowest_variable_basis_sets(gens, model, jobs, chain_criterion)
    )

def lattice_certificate(model, vectors=None, jobs=1, chain_criterion=False):
    """
    When the binomials of a kernel lattice basis are a reduced Groebner basis for
    every lowest-variable order, they generate the toric ideal and are exactly
    its indispensable binomials.
    """
    if vectors is None:
        vectors = lattice_kernel(model).vectors
    binomials = [binomial_from_vector(vector, model) for vector in vectors]
    applies = all_orders_reduced_gb_check(binomials, model, jobs, chain_criterion)
    return Certificate(applies, binomials)


def analyze(model, method='both', cap=DEFAULT_FIBER_CAP, jobs=1, chain_criterion=False):
    "Degree reports, Markov basis, indispensables and the verdict in one pass"
    reports = minimal_degrees(model, cap, jobs, chain_criterion)
    markov = markov_basis(model, cap, jobs, chain_criterion)
    indispensable = indispensable_binomials(model, method, cap, jobs, chain_criterion)
    monomials = indispensable_monomials(model, cap, jobs, chain_criterion)
    verdict = uniqueness_verdict(model, cap, jobs, chain_criterion)
    return validate_object(IndispensabilityReport(
        DegreeReports(reports),
        markov,
        BinomialSet(indispensable),
        MonomialSet(monomials, model.grading),
        verdict,
    ))
