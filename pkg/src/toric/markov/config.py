from toric.markov import schemas
from zope.interface import implementer
from zope.schema.fieldproperty import FieldProperty
import zope.schema


@implementer(schemas.IRunConfig)
class RunConfig():
    """
    Settings of one command-line invocation. Unset fields keep the schema default.
    """
    command = FieldProperty(schemas.IRunConfig['command'])
    input_path = FieldProperty(schemas.IRunConfig['input_path'])
    kron_path = FieldProperty(schemas.IRunConfig['kron_path'])
    model_name = FieldProperty(schemas.IRunConfig['model_name'])
    method = FieldProperty(schemas.IRunConfig['method'])
    degree = FieldProperty(schemas.IRunConfig['degree'])
    lowest = FieldProperty(schemas.IRunConfig['lowest'])
    order_matrix_path = FieldProperty(schemas.IRunConfig['order_matrix_path'])
    fiber_cap = FieldProperty(schemas.IRunConfig['fiber_cap'])
    output_format = FieldProperty(schemas.IRunConfig['output_format'])
    jobs = FieldProperty(schemas.IRunConfig['jobs'])
    chain_criterion = FieldProperty(schemas.IRunConfig['chain_criterion'])
    log_level = FieldProperty(schemas.IRunConfig['log_level'])

    def __init__(self, command, **settings):
        self.command = command
        for name, value in settings.items():
            if value is not None:
                setattr(self, name, value)

    @property
    def auto_degree(self):
        return self.degree is not None and self.degree.strip() == 'auto'

    def __repr__(self):
        return f"<RunConfig {self.command}>"


def run_config_fields():
    "Names of the settings a run configuration file may contain"
    return list(zope.schema.getFieldNames(schemas.IRunConfig))
