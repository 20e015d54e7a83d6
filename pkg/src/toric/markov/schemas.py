from zope.interface import Interface, Attribute, invariant, Invalid
from toric.markov import vocabulary
import zope.schema


# Constraints

class EmptyMatrix(zope.schema.ValidationError):
    __doc__ = 'Model matrix must have at least one row and one column.'

class RaggedMatrix(zope.schema.ValidationError):
    __doc__ = 'Every row of the model matrix must have the same number of entries.'

class NegativeEntry(zope.schema.ValidationError):
    __doc__ = 'Model matrix entries must be nonnegative integers.'

class ZeroColumn(zope.schema.ValidationError):
    __doc__ = 'Model matrix must not have a zero column.'

def isValidModelEntries(value):
    "Validate the rows of a model matrix"
    if len(value) == 0 or len(value[0]) == 0:
        raise EmptyMatrix
    width = len(value[0])
    for row_idx, row in enumerate(value):
        if len(row) != width:
            raise RaggedMatrix(f'Row {row_idx + 1} has {len(row)} entries, expected {width}.')
        for col_idx, entry in enumerate(row):
            if entry < 0:
                raise NegativeEntry(f'Entry ({row_idx + 1}, {col_idx + 1}) is {entry}.')
    for col_idx in range(width):
        if all(row[col_idx] == 0 for row in value):
            raise ZeroColumn(f'Column {col_idx + 1} is zero.')
    return True

class InvalidExponentVector(zope.schema.ValidationError):
    __doc__ = 'Exponent vectors must have nonnegative entries.'

def isExponentVector(value):
    for entry in value:
        if entry < 0:
            raise InvalidExponentVector
    return True

class InvalidGradingWeights(zope.schema.ValidationError):
    __doc__ = 'Grading weights must be strictly positive.'

def isPositiveWeights(value):
    if len(value) == 0 or min(value) <= 0:
        raise InvalidGradingWeights
    return True

class InvalidKroneckerFactor(zope.schema.ValidationError):
    __doc__ = "Kronecker factor must be one of 'ones-row(k)' or 'identity(k)' with k >= 1."

def isKroneckerFactor(value):
    kind, size = value
    if kind not in vocabulary.kronecker_factor_kinds or size < 1:
        raise InvalidKroneckerFactor
    return True


def integer_vector(title, constraint=None, required=True):
    "Field for a tuple of arbitrary-precision integers"
    return zope.schema.Tuple(
        title=title,
        value_type=zope.schema.Int(title="Entry"),
        constraint=constraint,
        required=required,
    )


class IModelMatrix(Interface):
    """
A nonnegative integer d x r matrix whose columns generate the semigroup.
"""
    entries = zope.schema.Tuple(
        title="Rows of the matrix",
        value_type=zope.schema.Tuple(
            title="Row",
            value_type=zope.schema.Int(title="Entry"),
        ),
        constraint=isValidModelEntries,
        required=True,
    )
    name = zope.schema.TextLine(
        title="Name",
        default="",
        required=False,
    )
    title = zope.schema.TextLine(
        title="Title",
        default="",
        required=False,
    )
    d = Attribute("Number of rows (degree dimension)")
    r = Attribute("Number of columns (number of variables)")
    grading = Attribute("The GradingVector of column sums")

class IGradingVector(Interface):
    "Positive weights (d_1, ..., d_r) compatible with the A-grading."
    weights = integer_vector("Weights", constraint=isPositiveWeights)

class ILatticeBasis(Interface):
    "Basis of the integer kernel of the model matrix."
    vectors = zope.schema.List(
        title="Basis vectors",
        value_type=integer_vector("Kernel vector"),
        required=True,
    )

class IBinomial(Interface):
    """
A pure difference binomial X^plus - X^minus stored in canonical orientation.
"""
    plus = integer_vector("Exponents of the positive term", constraint=isExponentVector)
    minus = integer_vector("Exponents of the negative term", constraint=isExponentVector)
    degree = integer_vector("A-degree of both terms", required=False)

    @invariant
    def distinct_terms(obj):
        if obj.plus == obj.minus:
            raise Invalid("The two terms of a binomial must differ.")
        if len(obj.plus) != len(obj.minus):
            raise Invalid("Both terms of a binomial must have the same number of variables.")

class IOrientedBinomial(Interface):
    "Binomial oriented by a term order: lead is the greater term."
    lead = integer_vector("Initial monomial", constraint=isExponentVector)
    trail = integer_vector("Trailing monomial", constraint=isExponentVector)

class IOrderMatrix(Interface):
    "Integer matrix defining a term order."
    rows = zope.schema.Tuple(
        title="Rows",
        value_type=integer_vector("Row"),
        required=True,
    )
    lowest_var = zope.schema.Int(
        title="Designated lowest variable (1-based)",
        min=1,
        required=False,
    )

class IGrobnerBasis(Interface):
    "Groebner basis of a binomial ideal with respect to an order matrix."
    elements = zope.schema.List(
        title="Oriented binomials",
        value_type=zope.schema.Object(schema=IOrientedBinomial),
        required=True,
    )
    order = zope.schema.Object(
        title="Term order",
        schema=IOrderMatrix,
        required=True,
    )
    reduced = zope.schema.Bool(
        title="Reduced",
        default=False,
        required=False,
    )

class IFiber(Interface):
    "The monomials of one A-degree."
    degree = integer_vector("A-degree")
    monomials = zope.schema.List(
        title="Monomials in canonical graded-lex order",
        value_type=integer_vector("Exponent vector", constraint=isExponentVector),
        required=True,
    )

class INablaComplex(Interface):
    "The gcd complex of a fiber, stored as its 1-skeleton."
    fiber = zope.schema.Object(
        title="Fiber",
        schema=IFiber,
        required=True,
    )
    graph = Attribute("networkx.Graph on fiber indices, edge iff the two monomials share a variable")

class IDegreeReport(Interface):
    "Classification of one A-degree."
    degree = integer_vector("A-degree")
    fiber_size = zope.schema.Int(title="Number of monomials", min=0)
    component_count = zope.schema.Int(title="Connected components of the complex", min=0)
    generator_count = zope.schema.Int(title="Minimal generators in this degree", min=0)
    isolated_count = zope.schema.Int(title="Isolated vertices", min=0)
    minimal = zope.schema.Bool(title="Minimal degree", default=False)
    indispensable = zope.schema.Bool(title="Indispensable degree", default=False)
    quasi_indispensable = zope.schema.Bool(title="Quasi-indispensable degree", default=False)

    @invariant
    def classification(obj):
        if obj.indispensable and not obj.minimal:
            raise Invalid("An indispensable degree must be minimal.")
        if obj.quasi_indispensable and not obj.minimal:
            raise Invalid("A quasi-indispensable degree must be minimal.")
        if obj.indispensable != (obj.fiber_size == 2 and obj.component_count == 2):
            raise Invalid("A degree is indispensable exactly when its complex is two isolated points.")

class IMarkovBasis(Interface):
    "A minimal binomial generating set of the toric ideal."
    binomials = zope.schema.List(
        title="Binomials",
        value_type=zope.schema.Object(schema=IBinomial),
        required=True,
    )
    degrees = zope.schema.List(
        title="Multiset of A-degrees",
        value_type=integer_vector("A-degree"),
        required=True,
    )

class IBinomialSet(Interface):
    "A canonical set of binomials, e.g. the indispensable binomials."
    binomials = zope.schema.List(
        title="Binomials",
        value_type=zope.schema.Object(schema=IBinomial),
        required=True,
    )

class IMonomialSet(Interface):
    "A canonical set of monomials, e.g. the indispensable monomials."
    monomials = zope.schema.List(
        title="Monomials",
        value_type=integer_vector("Exponent vector", constraint=isExponentVector),
        required=True,
    )

class IDegreeReports(Interface):
    "The classified minimal degrees of a model."
    reports = zope.schema.List(
        title="Degree reports",
        value_type=zope.schema.Object(schema=IDegreeReport),
        required=True,
    )

class IVerdict(Interface):
    "Whether the toric ideal has a unique minimal binomial generating set."
    verdict = zope.schema.Choice(
        title="Verdict",
        vocabulary=vocabulary.verdicts,
        required=True,
    )
    witness = integer_vector("A minimal degree that is not indispensable", required=False)

class ICertificate(Interface):
    "Outcome of the lattice-basis Groebner criterion."
    applies = zope.schema.Bool(title="Kernel binomials are reduced for every lowest-variable order")
    binomials = zope.schema.List(
        title="Kernel basis binomials",
        value_type=zope.schema.Object(schema=IBinomial),
        required=True,
    )

class IIndispensabilityReport(Interface):
    "Everything the pipeline knows about one model."
    degrees = zope.schema.Object(title="Minimal degrees", schema=IDegreeReports)
    markov = zope.schema.Object(title="Markov basis", schema=IMarkovBasis)
    indispensable = zope.schema.Object(title="Indispensable binomials", schema=IBinomialSet)
    monomials = zope.schema.Object(title="Indispensable monomials", schema=IMonomialSet)
    verdict = zope.schema.Object(title="Verdict", schema=IVerdict)

class IKroneckerSpec(Interface):
    """
Stack of Kronecker products of all-ones rows and identity matrices.
"""
    name = zope.schema.TextLine(
        title="Name",
        default="",
        required=False,
    )
    title = zope.schema.TextLine(
        title="Title",
        default="",
        required=False,
    )
    stack = zope.schema.List(
        title="Stack rows, each a list of (kind, size) factors",
        value_type=zope.schema.List(
            title="Kronecker product",
            value_type=zope.schema.Tuple(
                title="Factor",
                constraint=isKroneckerFactor,
            ),
            min_length=1,
        ),
        min_length=1,
        required=True,
    )

class IRunConfig(Interface):
    "Configuration of one command-line invocation."
    command = zope.schema.Choice(
        title="Command",
        vocabulary=vocabulary.commands,
        required=True,
    )
    input_path = zope.schema.TextLine(
        title="Matrix file",
        required=False,
    )
    kron_path = zope.schema.TextLine(
        title="Kronecker model description file",
        required=False,
    )
    model_name = zope.schema.TextLine(
        title="Builtin model name",
        required=False,
    )
    method = zope.schema.Choice(
        title="Indispensability method",
        vocabulary=vocabulary.methods,
        default='both',
        required=False,
    )
    degree = zope.schema.TextLine(
        title="Degree: whitespace separated integers, or 'auto'",
        required=False,
    )
    lowest = zope.schema.Int(
        title="Lowest variable of the degree reverse lexicographic order",
        min=1,
        default=1,
        required=False,
    )
    order_matrix_path = zope.schema.TextLine(
        title="Explicit order matrix file",
        required=False,
    )
    fiber_cap = zope.schema.Int(
        title="Maximum number of monomials in a fiber",
        min=1,
        default=1000000,
        required=False,
    )
    output_format = zope.schema.Choice(
        title="Output format",
        vocabulary=vocabulary.output_formats,
        default='text',
        required=False,
    )
    jobs = zope.schema.Int(
        title="Worker processes",
        min=1,
        default=1,
        required=False,
    )
    chain_criterion = zope.schema.Bool(
        title="Apply the chain criterion in Buchberger's algorithm",
        default=False,
        required=False,
    )
    log_level = zope.schema.Choice(
        title="Log level",
        vocabulary=vocabulary.log_levels,
        default='WARNING',
        required=False,
    )

    @invariant
    def one_model_source(obj):
        if obj.command not in vocabulary.model_commands:
            return
        sources = [src for src in (obj.input_path, obj.kron_path, obj.model_name) if src]
        if len(sources) != 1:
            raise Invalid("Exactly one of a matrix file, --kron or --model must be given.")

    @invariant
    def kron_source(obj):
        if obj.command == 'kron' and not obj.kron_path and not obj.model_name:
            raise Invalid("The kron command needs --kron or --model.")

    @invariant
    def degree_given(obj):
        if obj.command in vocabulary.degree_commands and not obj.degree:
            raise Invalid(f"The {obj.command} command needs --degree.")
