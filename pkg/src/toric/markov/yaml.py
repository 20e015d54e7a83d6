import ruamel.yaml
from ruamel.yaml.compat import StringIO


class ModelYAML(ruamel.yaml.YAML):
    """
    YAML loader and dumper for model descriptions, run configurations
    and command output.
    """

    def __init__(self, **kw):
        kw.setdefault('typ', 'safe')
        kw.setdefault('pure', True)
        super().__init__(**kw)
        self.default_flow_style = None
        self.representer.add_representer(tuple, represent_tuple)

    def dump(self, data, stream=None, **kw):
        dumps = False
        if stream is None:
            dumps = True
            stream = StringIO()
        ruamel.yaml.YAML.dump(self, data, stream, **kw)
        if dumps:
            return stream.getvalue()

def represent_tuple(representer, data):
    return representer.represent_list(list(data))
