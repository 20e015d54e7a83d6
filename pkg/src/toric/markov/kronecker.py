"""
Model matrices written as stacked Kronecker products of all-ones rows
and identity matrices.
"""

from toric.markov import schemas
from toric.markov.base import Named, get_logger
from toric.markov.exceptions import InvalidModelFile, ShapeMismatch
from toric.markov.semigroup import validate_model
from zope.interface import implementer
from zope.schema.fieldproperty import FieldProperty
import re
import sympy


logger = get_logger()

FACTOR_PATTERN = re.compile(r'^\s*([a-z-]+)\s*\(\s*(\d+)\s*\)\s*$')


@implementer(schemas.IKroneckerSpec)
class KroneckerSpec(Named):
    stack = FieldProperty(schemas.IKroneckerSpec['stack'])

    def __init__(self, stack, name="", title=""):
        self.name = name
        self.title = title
        self.stack = [[tuple(factor) for factor in product] for product in stack]

    def __repr__(self):
        return "<KroneckerSpec {}>".format(self.title_or_name)


def parse_factor(text):
    "'ones-row(2)' -> ('ones-row', 2)"
    match = FACTOR_PATTERN.match(str(text))
    if match is None:
        raise InvalidModelFile(
            f"Kronecker factor '{text}' is not of the form ones-row(k) or identity(k)"
        )
    return match.group(1), int(match.group(2))

def format_factor(factor):
    kind, size = factor
    return f"{kind}({size})"

def factor_matrix(factor):
    kind, size = factor
    if kind == 'ones-row':
        return sympy.ones(1, size)
    return sympy.eye(size)

def product_columns(product):
    columns = 1
    for kind, size in product:
        columns *= size
    return columns

def build_kronecker(spec):
    """
    Stack the Kronecker products of the description into one model matrix.
    Raises ShapeMismatch if the products have different column counts.
    """
    widths = [product_columns(product) for product in spec.stack]
    if len(set(widths)) != 1:
        raise ShapeMismatch(
            "Kronecker products {} have column counts {}".format(
                [" x ".join(format_factor(factor) for factor in product) for product in spec.stack],
                widths,
            )
        )
    rows = []
    for product in spec.stack:
        explicit = sympy.kronecker_product(*[factor_matrix(factor) for factor in product])
        if not hasattr(explicit, 'tolist'):
            explicit = explicit.as_explicit()
        rows.extend([int(entry) for entry in row] for row in explicit.tolist())
    model = validate_model(rows, name=spec.name, title=spec.title)
    logger.debug("Built %d x %d model from %d Kronecker products", model.d, model.r, len(spec.stack))
    return model
