"""
Term orders given by integer matrices.

u > v when the first nonzero entry of rows.(u - v) is positive.
"""

from enum import IntEnum
from toric.markov import schemas
from toric.markov.exceptions import IndexOutOfRange, InvalidOrderMatrix, LengthMismatch
from zope.interface import implementer
from zope.schema.fieldproperty import FieldProperty
import sympy


class Comparison(IntEnum):
    LESS = -1
    EQUAL = 0
    GREATER = 1

LESS = Comparison.LESS
EQUAL = Comparison.EQUAL
GREATER = Comparison.GREATER


@implementer(schemas.IOrderMatrix)
class OrderMatrix():
    rows = FieldProperty(schemas.IOrderMatrix['rows'])
    lowest_var = FieldProperty(schemas.IOrderMatrix['lowest_var'])

    def __init__(self, rows, lowest_var=None, check=True):
        self.rows = tuple(tuple(int(entry) for entry in row) for row in rows)
        if lowest_var is not None:
            self.lowest_var = int(lowest_var)
        if check and not is_term_order(self):
            raise InvalidOrderMatrix(
                "Rows {} do not define a term order".format([list(row) for row in self.rows])
            )

    @property
    def r(self):
        return len(self.rows[0])

    def key(self, u):
        "Sort key: larger keys are larger monomials"
        return tuple(sum(entry * exp for entry, exp in zip(row, u)) for row in self.rows)

    def __eq__(self, other):
        if not isinstance(other, OrderMatrix):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        if self.lowest_var is not None:
            return f"<OrderMatrix lowest x{self.lowest_var}>"
        return "<OrderMatrix {}>".format([list(row) for row in self.rows])


def degrevlex_lowest(i, weights):
    """
    Weighted degree reverse lexicographic order with X_i the lowest variable.

    Rows are the weights, then -e_i, then -e_r, -e_{r-1}, ... skipping e_i.
    """
    weights = tuple(getattr(weights, 'weights', weights))
    r = len(weights)
    if i < 1 or i > r:
        raise IndexOutOfRange(f"Variable index {i} is not in 1..{r}")

    def negated_unit(idx):
        row = [0] * r
        row[idx - 1] = -1
        return tuple(row)

    rows = [weights]
    if r > 1:
        rows.append(negated_unit(i))
    for idx in range(r, 0, -1):
        if len(rows) == r:
            break
        if idx != i:
            rows.append(negated_unit(idx))
    return OrderMatrix(rows, lowest_var=i)

def compare(u, v, order):
    "LESS, EQUAL or GREATER as X^u compares to X^v"
    if len(u) != len(v) or len(u) != order.r:
        raise LengthMismatch(f"Cannot compare vectors of lengths {len(u)} and {len(v)} in {order.r} variables")
    for row in order.rows:
        value = sum(entry * (a - b) for entry, a, b in zip(row, u, v))
        if value > 0:
            return GREATER
        if value < 0:
            return LESS
    return EQUAL

def is_term_order(order):
    """
    True if the rows have full column rank and every unit vector is
    greater than the zero vector.
    """
    rows = order.rows
    if len(rows) == 0 or len(rows[0]) == 0:
        return False
    r = len(rows[0])
    if any(len(row) != r for row in rows):
        return False
    if sympy.Matrix(rows).rank() != r:
        return False
    for col in range(r):
        first = next((row[col] for row in rows if row[col] != 0), 0)
        if first <= 0:
            return False
    return True
