"""
Builtin models, shipped as Kronecker model descriptions in the package data.
"""

from importlib import resources
from toric.markov.exceptions import UnknownModel
from toric.markov.loader import load_kronecker_model


# name: description file in toric/markov/data
BUILTIN_MODELS = {
    'paper-example': 'paper-example.yaml',
}

def builtin_model_path(name):
    if name not in BUILTIN_MODELS:
        raise UnknownModel(
            "No builtin model named '{}', choose one of: {}".format(name, ", ".join(sorted(BUILTIN_MODELS)))
        )
    return resources.files('toric.markov') / 'data' / BUILTIN_MODELS[name]

def load_builtin_model(name):
    "ModelMatrix of a builtin model"
    with resources.as_file(builtin_model_path(name)) as path:
        return load_kronecker_model(path)
