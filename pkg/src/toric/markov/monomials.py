"""
Monomials and pure difference binomials.

Exponent vectors are plain tuples of Python ints. A Binomial is always stored in
canonical orientation, so two binomials that differ only by sign compare equal.
"""

from toric.markov import schemas
from toric.markov.exceptions import EmptySet, LengthMismatch, NotInKernel, ZeroVector
from zope.interface import implementer
from zope.schema.fieldproperty import FieldProperty


def as_exponents(values):
    "Return a tuple of ints"
    return tuple(int(value) for value in values)

def gcd_monomials(monomials):
    "Componentwise minimum of a nonempty collection of exponent vectors"
    monomials = list(monomials)
    if len(monomials) == 0:
        raise EmptySet("gcd of an empty set of monomials")
    check_lengths(monomials)
    return tuple(min(column) for column in zip(*monomials))

def lcm_monomials(monomials):
    "Componentwise maximum of a nonempty collection of exponent vectors"
    monomials = list(monomials)
    if len(monomials) == 0:
        raise EmptySet("lcm of an empty set of monomials")
    check_lengths(monomials)
    return tuple(max(column) for column in zip(*monomials))

def check_lengths(monomials):
    length = len(monomials[0])
    for monomial in monomials[1:]:
        if len(monomial) != length:
            raise LengthMismatch(f"Expected {length} exponents, got {len(monomial)}")

def divides(u, v):
    "True if X^u divides X^v"
    return all(a <= b for a, b in zip(u, v))

def monomial_quotient(v, u):
    "X^v / X^u, u must divide v"
    return tuple(b - a for a, b in zip(u, v))

def is_one(u):
    return not any(u)

def support(u):
    "1-based indices of the variables that occur in X^u"
    return frozenset(idx + 1 for idx, exp in enumerate(u) if exp != 0)

def monomial_key(u, grading=None):
    """
    Graded lexicographic key: weighted degree under the grading, then exponents.
    Without a grading only the exponents count.
    """
    weight = grading.weigh(u) if grading is not None else 0
    return (weight, tuple(u))


@implementer(schemas.IBinomial)
class Binomial():
    """
    X^plus - X^minus with plus the greater term in graded lex order under the
    grading of the model.

    Both terms of an A-homogeneous binomial have the same weighted degree, so for
    those the lexicographic tie-break decides and the result is the same with or
    without a grading.
    """
    plus = FieldProperty(schemas.IBinomial['plus'])
    minus = FieldProperty(schemas.IBinomial['minus'])
    degree = FieldProperty(schemas.IBinomial['degree'])

    def __init__(self, first, second, degree=None, grading=None):
        first = as_exponents(first)
        second = as_exponents(second)
        if len(first) != len(second):
            raise LengthMismatch(f"Terms have {len(first)} and {len(second)} variables")
        if first == second:
            raise ZeroVector("Both terms are X^{}".format(list(first)))
        if monomial_key(first, grading) < monomial_key(second, grading):
            first, second = second, first
        self.plus = first
        self.minus = second
        if degree is not None:
            self.degree = as_exponents(degree)

    @property
    def vector(self):
        "Exponent vector plus - minus"
        return tuple(a - b for a, b in zip(self.plus, self.minus))

    @property
    def is_primitive(self):
        "True when the two terms are coprime"
        return is_one(gcd_monomials([self.plus, self.minus]))

    def __eq__(self, other):
        if not isinstance(other, Binomial):
            return NotImplemented
        return self.plus == other.plus and self.minus == other.minus

    def __hash__(self):
        return hash((self.plus, self.minus))

    def __repr__(self):
        return "<Binomial {}>".format(render_binomial(self))

    def __str__(self):
        return render_binomial(self)


def binomial_sort_key(binomial):
    """
    Canonical sort order for collections of binomials: weighted degree, which is
    the sum of the A-degree when one is carried, then exponents descending.
    """
    if binomial.degree is not None:
        weight = sum(binomial.degree)
    else:
        weight = sum(binomial.plus)
    return (
        weight,
        tuple(-exp for exp in binomial.plus),
        tuple(-exp for exp in binomial.minus),
    )

def sorted_binomials(binomials):
    return sorted(set(binomials), key=binomial_sort_key)

def sorted_monomials(monomials, grading=None):
    return sorted(set(monomials), key=lambda u: monomial_key(u, grading))

def binomial_from_vector(w, model):
    """
    Binomial X^{w+} - X^{w-} of a nonzero kernel vector w of the model matrix.
    """
    w = as_exponents(w)
    if len(w) != model.r:
        raise LengthMismatch(f"Expected {model.r} entries, got {len(w)}")
    if not any(w):
        raise ZeroVector("The zero vector has no binomial")
    image = model.apply(w)
    if any(image):
        raise NotInKernel("A.w = {} is not zero".format(list(image)))
    plus = tuple(max(entry, 0) for entry in w)
    minus = tuple(max(-entry, 0) for entry in w)
    return Binomial(plus, minus, degree=model.apply(plus), grading=model.grading)

def divide_binomial_by_gcd(binomial, model=None):
    """
    gcd(X^plus, X^minus)^-1 (X^plus - X^minus).
    The degree drops by the degree of the gcd when a model is given.
    """
    common = gcd_monomials([binomial.plus, binomial.minus])
    if is_one(common):
        return binomial
    plus = monomial_quotient(binomial.plus, common)
    minus = monomial_quotient(binomial.minus, common)
    if model is None:
        return Binomial(plus, minus)
    return Binomial(plus, minus, degree=model.apply(plus), grading=model.grading)

def lift_binomial(binomial, r=None):
    """
    Lawrence image X^u Y^v - X^v Y^u of X^u - X^v in twice the variables.
    """
    u, v = binomial.plus, binomial.minus
    if r is not None and len(u) != r:
        raise LengthMismatch(f"Expected {r} exponents, got {len(u)}")
    return Binomial(u + v, v + u)


# Rendering

def render_monomial(u, prefix='x'):
    """
    Render an exponent vector as "x3^2*x7" with 1-based indices,
    the empty product is "1".
    """
    factors = []
    for idx, exp in enumerate(u):
        if exp == 0:
            continue
        if exp == 1:
            factors.append(f"{prefix}{idx + 1}")
        else:
            factors.append(f"{prefix}{idx + 1}^{exp}")
    if len(factors) == 0:
        return "1"
    return "*".join(factors)

def render_binomial(binomial, prefix='x'):
    return "{} - {}".format(
        render_monomial(binomial.plus, prefix),
        render_monomial(binomial.minus, prefix),
    )
