import builtins as exc
class Base(Exception):
    """Root exception type in idealim"""
    def __init__(self, *args):
        return super(Base,self).__init__(*args)

    def name(self):
        module = self.__module__
        name = type(self).__name__
        return '.'.join((module,name))

    def __repr__(self):
        return self.__str__()

### errors raised while answering a request about some object
class RequestError(Base):
    def __init__(self, object, method, message='', **kwds):
        super(RequestError,self).__init__(message)
        self.object,self.message = object,message
        self.method = method
        self.details = kwds
    def objectname(self):
        res = getattr(self.object, 'type', None) or getattr(self.object, 'kind', None)
        if isinstance(res, str):
            return res
        return self.object.__name__ if isinstance(self.object, type) else type(self.object).__name__
    def methodname(self):
        return str(self.method)
    def __str__(self):
        if self.message:
            return ' : '.join((self.methodname(), self.objectname(), self.message))
        return ' : '.join((self.methodname(), self.objectname()))

class StructuralError(RequestError, exc.ValueError):
    """Set or block structure is malformed or nested too deeply"""
class InputError(RequestError, exc.ValueError):
    """Argument is outside of the domain of the operation"""
class ArithmeticError(RequestError, exc.OverflowError):
    """Result does not fit in the configured integer width"""
class DegenerateIdeal(RequestError, exc.ValueError):
    """Ideal descriptor violates its invariants or is not constructive"""
class NoWitness(RequestError, exc.LookupError):
    """No block witness is known for the ideal"""
class NotRepresentable(RequestError, exc.NotImplementedError):
    """Result is not expressible in the symbolic algebra"""

class PreconditionError(RequestError, exc.AssertionError):
    """Precondition of the operation could not be verified"""

class Indeterminate(RequestError):
    """An ideal verdict needed by the computation is Unknown"""
    def __init__(self, object, method, message='', bracket=None, partial=None, **kwds):
        super(Indeterminate,self).__init__(object, method, message, **kwds)
        self.bracket,self.partial = bracket,partial
    def __str__(self):
        res = super(Indeterminate,self).__str__()
        if self.bracket is None:
            return res
        lo,hi = self.bracket
        return '{:s} : bracket [{!s}, {!s}]'.format(res, lo, hi)

### errors that happen while reading a descriptor
class SerializationError(Base, exc.ValueError):
    """Descriptor could not be decoded"""
    def __init__(self, object, message='', **kwds):
        super(SerializationError,self).__init__(message)
        self.object,self.message = object,message
    def __str__(self):
        return ' : '.join(('{!r}'.format(self.object)[:80], self.message))
