from toric.markov.loader import load_kronecker_model, parse_matrix, parse_matrix_text
from toric.markov.registry import load_builtin_model


def load_model(input_path=None, kron_path=None, model_name=None):
    """
    Reads a model matrix from exactly one source: a matrix file,
    a Kronecker model description or the name of a builtin model.
    """
    if input_path is not None:
        return parse_matrix(input_path)
    if kron_path is not None:
        return load_kronecker_model(kron_path)
    return load_builtin_model(model_name)
