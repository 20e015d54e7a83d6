"""
Reads matrix files, Kronecker model descriptions and run configuration files.

Matrix files start with a "d r" header line followed by d lines of r
whitespace separated nonnegative integers.
"""

from pathlib import Path
from toric.markov import schemas
from toric.markov.base import get_logger
from toric.markov.config import RunConfig, run_config_fields
from toric.markov.exceptions import (
    InvalidConfigFile, InvalidDegree, InvalidModelFile, LengthMismatch,
)
from toric.markov.kronecker import KroneckerSpec, build_kronecker, parse_factor
from toric.markov.orders import OrderMatrix
from toric.markov.semigroup import validate_model
from toric.markov.yaml import ModelYAML
import ruamel.yaml
import zope.interface.exceptions
import zope.schema
import zope.schema.interfaces


logger = get_logger()

KRONECKER_FIELDS = ['name', 'title', 'stack']


def read_yaml_file(path, error_class=InvalidConfigFile):
    "Parse a YAML file into plain data"
    path = Path(path)
    if not path.is_file():
        raise error_class("File does not exist at filesystem path {}".format(path))
    yaml = ModelYAML()
    with open(path, 'r') as stream:
        try:
            data = yaml.load(stream)
        except ruamel.yaml.YAMLError as exc:
            raise error_class("""Error in file at {}

YAML load error:

{}
""".format(path, exc))
    if data is None:
        data = {}
    if not isinstance(data, dict):
        raise error_class(f"Error in file at {path}\nExpected a mapping at the top level.")
    return data

def read_text_file(path):
    path = Path(path)
    if not path.is_file():
        raise InvalidModelFile("File does not exist at filesystem path {}".format(path))
    return path.read_text()


# Integer grids

def content_lines(text):
    "(line number, text) of the non-blank lines, '#' starts a comment"
    for number, line in enumerate(text.splitlines(), start=1):
        line = line.split('#', 1)[0]
        if line.strip():
            yield number, line

def parse_int_row(line, number, source):
    values = []
    column = 0
    for token in line.split():
        column = line.index(token, column) + 1
        try:
            values.append(int(token))
        except ValueError:
            raise InvalidModelFile(
                f"{source}: line {number}, column {column}: '{token}' is not an integer"
            )
        column += len(token) - 1
    return values

def parse_grid(text, source='<string>'):
    """
    Parse a "rows cols" header and the rows that follow it.
    Returns the rows as lists of ints.
    """
    lines = list(content_lines(text))
    if len(lines) == 0:
        raise InvalidModelFile(f"{source}: missing 'rows cols' header line")
    number, header = lines[0]
    shape = parse_int_row(header, number, source)
    if len(shape) != 2 or min(shape) < 1:
        raise InvalidModelFile(
            f"{source}: line {number}, column 1: header must be two positive integers 'rows cols'"
        )
    nrows, ncols = shape
    body = lines[1:]
    if len(body) != nrows:
        last = body[-1][0] if body else number
        raise InvalidModelFile(
            f"{source}: line {last}: expected {nrows} rows, found {len(body)}"
        )
    rows = []
    for number, line in body:
        row = parse_int_row(line, number, source)
        if len(row) != ncols:
            raise InvalidModelFile(
                f"{source}: line {number}, column 1: expected {ncols} entries, found {len(row)}"
            )
        rows.append(row)
    return rows

def parse_matrix_text(text, source='<string>', name=""):
    "Model matrix from the text of a matrix file"
    rows = parse_grid(text, source)
    return validate_model(rows, name=name)

def parse_matrix(path):
    """
    Model matrix from a matrix file. Raises InvalidModelFile for syntax errors
    and the entries validation errors for invalid matrices.
    """
    path = Path(path)
    return parse_matrix_text(read_text_file(path), source=str(path), name=path.stem)

def parse_order_matrix(path, r, lowest_var=None):
    "Explicit order matrix from a file in the matrix file format"
    rows = parse_grid(read_text_file(path), source=str(path))
    if len(rows[0]) != r:
        raise LengthMismatch(f"{path}: order matrix has {len(rows[0])} columns, the model has {r}")
    return OrderMatrix(rows, lowest_var=lowest_var)

def parse_degree(text, d):
    "Degree from a whitespace or comma separated list of d nonnegative integers"
    if isinstance(text, (list, tuple)):
        tokens = [str(value) for value in text]
    else:
        tokens = str(text).replace(',', ' ').split()
    try:
        degree = tuple(int(token) for token in tokens)
    except ValueError:
        raise InvalidDegree(f"'{text}' is not a list of integers")
    if len(degree) != d:
        raise LengthMismatch(f"Degree '{text}' has {len(degree)} entries, expected {d}")
    if any(value < 0 for value in degree):
        raise InvalidDegree(f"Degree '{text}' has a negative entry")
    return degree


# Schema errors

def raise_invalid_schema_error(obj, name, value, read_file_path, exc, error_class):
    "Raise error_class with details about a failed field or invariant"
    if name is None:
        raise error_class("""Error in file at {}

Invalid config for type '{}':
{}
""".format(read_file_path, obj.__class__.__name__, exc))
    raise error_class("""Error in file at {}

Invalid config for field '{}' for type '{}'.
Value supplied: {}
Reason: {}
""".format(read_file_path, name, obj.__class__.__name__, value, exc.__doc__))

def check_unused_fields(config, allowed, obj_name, read_file_path, error_class):
    for key in config.keys():
        if key not in allowed:
            raise error_class("""Error in config file at: {}
Unneeded field: {}.{}

Verify that '{}' is spelled correctly and has the correct indentation.
""".format(read_file_path, obj_name, key, key))


# Kronecker model descriptions

def load_kronecker_spec(path):
    "KroneckerSpec from a YAML model description"
    config = read_yaml_file(path, InvalidModelFile)
    return kronecker_spec_from_config(config, str(path))

def kronecker_spec_from_config(config, read_file_path='<config>'):
    check_unused_fields(config, KRONECKER_FIELDS, 'KroneckerSpec', read_file_path, InvalidModelFile)
    stack = config.get('stack', None)
    if not isinstance(stack, list) or len(stack) == 0:
        raise InvalidModelFile(f"Error in file at {read_file_path}\n'stack' must be a nonempty list.")
    parsed = []
    for product in stack:
        if not isinstance(product, list):
            product = [product]
        parsed.append([parse_factor(factor) for factor in product])
    spec = KroneckerSpec.__new__(KroneckerSpec)
    for name, value in (
        ('name', str(config.get('name', '') or '')),
        ('title', str(config.get('title', '') or '')),
        ('stack', parsed),
    ):
        try:
            setattr(spec, name, value)
        except zope.schema.interfaces.ValidationError as exc:
            raise_invalid_schema_error(spec, name, value, read_file_path, exc, InvalidModelFile)
    return spec

def load_kronecker_model(path):
    return build_kronecker(load_kronecker_spec(path))


# Run configuration

def cast_to_schema(fieldname, value):
    """
    YAML reads 'degree: 2 2' as text but 'degree: [2, 2]' as a list and
    'input_path: 404' as an int; text fields always get text.
    """
    field = schemas.IRunConfig[fieldname]
    if isinstance(field, (zope.schema.TextLine, zope.schema.Text)):
        if isinstance(value, (list, tuple)):
            return " ".join(str(item) for item in value)
        if not isinstance(value, str):
            return str(value)
    return value

def load_run_config(command, config_path=None, **overrides):
    """
    RunConfig from an optional YAML file, with overrides taking precedence.
    Raises InvalidConfigFile naming the offending key or field.
    """
    settings = {}
    read_file_path = '<command line>'
    if config_path is not None:
        read_file_path = str(config_path)
        file_settings = read_yaml_file(config_path, InvalidConfigFile)
        check_unused_fields(file_settings, run_config_fields(), 'RunConfig', read_file_path, InvalidConfigFile)
        settings.update(file_settings)
    for name, value in overrides.items():
        if value is not None:
            settings[name] = value
    if command is None:
        command = settings.get('command', None)
    settings.pop('command', None)

    config = RunConfig.__new__(RunConfig)
    for name, value in [('command', command)] + list(settings.items()):
        if value is None:
            continue
        value = cast_to_schema(name, value)
        try:
            setattr(config, name, value)
        except zope.schema.interfaces.ValidationError as exc:
            raise_invalid_schema_error(config, name, value, read_file_path, exc, InvalidConfigFile)
    if config.command is None:
        raise InvalidConfigFile(f"Error in {read_file_path}\nNo command given.")
    try:
        schemas.IRunConfig.validateInvariants(config)
    except zope.interface.exceptions.Invalid as exc:
        raise_invalid_schema_error(config, None, None, read_file_path, exc, InvalidConfigFile)
    logger.debug("Run configuration: %s", {name: getattr(config, name) for name in run_config_fields()})
    return config
