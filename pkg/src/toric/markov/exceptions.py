class InputError(Exception):
    title = "Invalid input"

class ResourceLimitExceeded(Exception):
    title = "Resource limit exceeded"

class ConsistencyError(Exception):
    title = "Internal consistency check failed"

class InvalidModelFile(InputError):
    title = "Invalid model matrix file"

class InvalidConfigFile(InputError):
    title = "Invalid run configuration file"

class InvalidModelObject(InputError):
    title = "Invalid Model Object"

class UnknownModel(InputError):
    title = "No builtin model with that name"

class LengthMismatch(InputError):
    title = "Vector length does not match the number of variables"

class IndexOutOfRange(InputError):
    title = "Variable index is out of range"

class ZeroVector(InputError):
    title = "Zero vector does not define a binomial"

class NotInKernel(InputError):
    title = "Vector is not in the kernel of the model matrix"

class EmptySet(InputError):
    title = "Operation needs a nonempty set of monomials"

class NotAFace(InputError):
    title = "Monomial pair is not a face of the complex"

class InvalidDegree(InputError):
    title = "Degree must be a list of d nonnegative integers"

class EmptyFiber(InputError):
    title = "Degree does not belong to the semigroup"

class ShapeMismatch(InputError):
    title = "Kronecker products in a stack have different column counts"

class InvalidOrderMatrix(InputError):
    title = "Order matrix does not define a term order"

class FiberTooLarge(ResourceLimitExceeded):
    title = "Fiber exceeds the configured monomial cap"

class GenerationCheckFailed(ConsistencyError):
    title = "Markov basis does not generate the toric ideal"

class MethodDisagreement(ConsistencyError):
    title = "Combinatorial and Groebner characterizations disagree"
