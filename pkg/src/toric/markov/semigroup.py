"""
The model matrix A, its degree map u -> A.u, the integer kernel lattice
and the Lawrence lifting.
"""

from toric.markov import schemas
from toric.markov.base import Named, get_logger
from toric.markov.exceptions import LengthMismatch
from zope.interface import implementer
from zope.schema.fieldproperty import FieldProperty
import sympy

try:
    from sympy.core.intfunc import igcdex
except ImportError:
    # sympy before 1.13
    from sympy.core.numbers import igcdex


logger = get_logger()

def as_matrix_entries(raw_matrix):
    "Normalize a grid of integer-like values into a tuple of int tuples"
    return tuple(tuple(int(entry) for entry in row) for row in raw_matrix)


@implementer(schemas.IGradingVector)
class GradingVector():
    weights = FieldProperty(schemas.IGradingVector['weights'])

    def __init__(self, weights):
        self.weights = tuple(int(weight) for weight in weights)

    def weigh(self, u):
        "Weighted total degree of an exponent vector"
        return sum(weight * exp for weight, exp in zip(self.weights, u))

    def __repr__(self):
        return "<GradingVector {}>".format(list(self.weights))


@implementer(schemas.IModelMatrix)
class ModelMatrix(Named):
    """
    Nonnegative integer matrix with nonzero columns. Instances are immutable
    and hash by their entries so derived results can be cached per model.
    """
    entries = FieldProperty(schemas.IModelMatrix['entries'])

    def __init__(self, entries, name="", title=""):
        self.entries = as_matrix_entries(entries)
        self.name = name
        self.title = title
        self._grading = GradingVector(
            [sum(row[idx] for row in self.entries) for idx in range(self.r)]
        )

    @property
    def d(self):
        return len(self.entries)

    @property
    def r(self):
        return len(self.entries[0])

    @property
    def grading(self):
        "Column sums, a positive grading compatible with the A-grading"
        return self._grading

    @property
    def columns(self):
        return tuple(zip(*self.entries))

    def apply(self, u):
        "A.u for any integer vector u, no length check"
        return tuple(sum(entry * exp for entry, exp in zip(row, u)) for row in self.entries)

    def to_sympy(self):
        return sympy.Matrix(self.entries)

    def __eq__(self, other):
        if not isinstance(other, ModelMatrix):
            return NotImplemented
        return self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self):
        return "<ModelMatrix {}x{} {}>".format(self.d, self.r, self.title_or_name)


@implementer(schemas.ILatticeBasis)
class LatticeBasis():
    vectors = FieldProperty(schemas.ILatticeBasis['vectors'])

    def __init__(self, vectors):
        self.vectors = [tuple(int(entry) for entry in vector) for vector in vectors]

    @property
    def rank(self):
        return len(self.vectors)

    def __len__(self):
        return len(self.vectors)

    def __iter__(self):
        return iter(self.vectors)


def validate_model(raw_matrix, name="", title=""):
    """
    Build a ModelMatrix from a grid of integers.

    Raises the EmptyMatrix, RaggedMatrix, NegativeEntry or ZeroColumn validation
    errors of the entries field.
    """
    model = ModelMatrix(raw_matrix, name=name, title=title)
    logger.debug("Validated %d x %d model matrix %s", model.d, model.r, model.title_or_name)
    return model

def check_length(vector, length):
    if len(vector) != length:
        raise LengthMismatch(f"Expected {length} entries, got {len(vector)}")

def degree_of(model, u):
    "The A-degree A.u of the monomial X^u"
    check_length(u, model.r)
    return model.apply(u)

def degree_sum(degrees):
    "Componentwise sum of a nonempty collection of degrees"
    degrees = list(degrees)
    return tuple(sum(column) for column in zip(*degrees))


# Integer row reduction

def echelon_rows(rows, ncols):
    """
    Unimodular row reduction of the first ncols columns to Hermite normal form.

    Pivots are positive and entries above a pivot are reduced into [0, pivot).
    Returns the transformed rows and the rank of the leading block.
    """
    rows = [list(row) for row in rows]
    pivot_row = 0
    for col in range(ncols):
        if pivot_row == len(rows):
            break
        nonzero = [idx for idx in range(pivot_row, len(rows)) if rows[idx][col] != 0]
        if len(nonzero) == 0:
            continue
        first = nonzero[0]
        rows[pivot_row], rows[first] = rows[first], rows[pivot_row]
        pivot = rows[pivot_row]
        for idx in range(pivot_row + 1, len(rows)):
            other = rows[idx]
            if other[col] == 0:
                continue
            a, b = pivot[col], other[col]
            x, y, g = (int(value) for value in igcdex(a, b))
            new_pivot = [x * p + y * o for p, o in zip(pivot, other)]
            rows[idx] = [(-b // g) * p + (a // g) * o for p, o in zip(pivot, other)]
            pivot = new_pivot
        if pivot[col] < 0:
            pivot = [-entry for entry in pivot]
        rows[pivot_row] = pivot
        for idx in range(pivot_row):
            factor = rows[idx][col] // pivot[col]
            if factor != 0:
                rows[idx] = [entry - factor * p for entry, p in zip(rows[idx], pivot)]
        pivot_row += 1
    return rows, pivot_row

def lattice_kernel(model):
    """
    Basis of ker_Z(A) in Hermite normal form.

    Row reduces [A^T | I]; the identity part of the rows whose A^T part vanishes
    spans the kernel, since the row operations are unimodular.
    """
    r, d = model.r, model.d
    augmented = []
    for idx, column in enumerate(model.columns):
        unit = [0] * r
        unit[idx] = 1
        augmented.append(list(column) + unit)
    reduced, rank = echelon_rows(augmented, d)
    kernel = [row[d:] for row in reduced[rank:]]
    kernel, _ = echelon_rows(kernel, r)
    basis = LatticeBasis(kernel)
    logger.debug("Kernel lattice of %s has rank %d", model.title_or_name, basis.rank)
    return basis

def lawrence_lift(model):
    """
    The (d + r) x 2r matrix with columns (a_i, e_i) and (0, e_i).
    """
    d, r = model.d, model.r
    entries = [list(row) + [0] * r for row in model.entries]
    for idx in range(r):
        unit = [0] * r
        unit[idx] = 1
        entries.append(unit + unit)
    name = f"{model.name}-lawrence" if model.name else "lawrence"
    return ModelMatrix(entries, name=name, title=f"Lawrence lifting of {model.title_or_name}".strip())


# Semigroup membership

def iter_factorizations(model, a):
    """
    Yield every u in N^r with A.u = a, depth first over the variables in index order.

    Each variable is bounded by min_j floor(res_j / A_ji) and a branch is cut as
    soon as its residual has a positive row no remaining column can reach.
    """
    a = tuple(int(value) for value in a)
    check_length(a, model.d)
    if any(value < 0 for value in a):
        return
    r, d = model.r, model.d
    columns = model.columns
    reach = [set() for _ in range(r + 1)]
    for idx in range(r - 1, -1, -1):
        reach[idx] = reach[idx + 1] | {row for row in range(d) if columns[idx][row] > 0}

    exponents = [0] * r

    def descend(idx, residual):
        if any(residual[row] > 0 and row not in reach[idx] for row in range(d)):
            return
        if idx == r:
            yield tuple(exponents)
            return
        column = columns[idx]
        bound = min(residual[row] // column[row] for row in range(d) if column[row] > 0)
        for exp in range(bound, -1, -1):
            exponents[idx] = exp
            yield from descend(idx + 1, [res - exp * entry for res, entry in zip(residual, column)])
        exponents[idx] = 0

    yield from descend(0, list(a))

def in_semigroup(model, a):
    "True if a = A.u for some u in N^r"
    for _ in iter_factorizations(model, a):
        return True
    return False

def degree_leq(model, b, a):
    "b <=_A a iff a - b is an element of the semigroup"
    check_length(b, model.d)
    check_length(a, model.d)
    difference = tuple(x - y for x, y in zip(a, b))
    if any(value < 0 for value in difference):
        return False
    return in_semigroup(model, difference)
