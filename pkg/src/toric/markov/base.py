from toric.markov.exceptions import InvalidModelObject
from zope.schema.fieldproperty import FieldProperty
import logging
import zope.interface
import zope.interface.exceptions
import zope.schema
import zope.schema.interfaces


def get_logger():
    return logging.getLogger("toric.markov")

def interface_seen(seen, iface):
    """Return True if interface already is seen.
    """
    for seen_iface in seen:
        if seen_iface.extends(iface):
            return True
    return False

def most_specialized_interfaces(context):
    """Get interfaces for an object without any duplicates.

    Interfaces in a declaration for an object may already have been seen
    because it is also inherited by another interface.
    """
    declaration = zope.interface.providedBy(context)
    seen = []
    for iface in declaration.flattened():
        if interface_seen(seen, iface):
            continue
        seen.append(iface)
    return seen

def validate_object(obj):
    """
    Check the invariants and every field of each schema an object provides.
    Raises InvalidModelObject describing the first problem found.
    """
    for interface in most_specialized_interfaces(obj):
        try:
            interface.validateInvariants(obj)
        except zope.interface.exceptions.Invalid as exc:
            raise InvalidModelObject(
                "Invalid {}: {}".format(obj.__class__.__name__, exc)
            )
        fields = zope.schema.getFields(interface)
        for name, field in fields.items():
            value = getattr(obj, name, None)
            try:
                if not field.readonly:
                    field.validate(value)
            except zope.schema.interfaces.ValidationError as exc:
                raise InvalidModelObject(
                    "Invalid field '{}' for type '{}'.\nReason: {}\nValue supplied: {}".format(
                        name, obj.__class__.__name__, exc.__doc__, value
                    )
                )
    return obj


class Named():
    """
    An item which has a name and an optional title.
    """
    name = FieldProperty(zope.schema.TextLine(__name__='name', default="", required=False))
    title = FieldProperty(zope.schema.TextLine(__name__='title', default="", required=False))

    @property
    def title_or_name(self):
        if self.title:
            return self.title
        return self.name
