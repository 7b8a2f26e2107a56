import os,sys,six,logging
from fractions import Fraction
__all__ = 'defaults,verdict,finiteness'.split(',')

class field:
    """Descriptors validating the values stored in a configuration"""
    revision = 0    # counts assignments to checked fields
    class descriptor(object):
        def __init__(self):
            self.__value__ = {}
        def __set__(self, instance, value):
            self.__value__[instance] = value
        def __get__(self, instance, type=None):
            return self.__value__.get(instance)
        def __delete__(self, instance):
            raise AttributeError

    class checked(descriptor):
        accepts = object
        def __set__(self, instance, value):
            if isinstance(value, bool) and bool not in self.accepts:
                raise ValueError('{!r} is a boolean, expected {!r}'.format(value, self.accepts))
            if not isinstance(value, self.accepts):
                raise ValueError('{!r} is not an instance of {!r}'.format(value, self.accepts))
            field.revision += 1
            return field.descriptor.__set__(self, instance, value)

    class fixed(descriptor):
        value = None
        def __set__(self, instance, value):
            raise AttributeError('{!s} is a constant'.format(self.__doc__ or 'field'))
        def __get__(self, instance, type=None):
            return self.value

    @classmethod
    def type(cls, name, accepts, doc=''):
        accepts = tuple(accepts) if isinstance(accepts, (tuple, list)) else (accepts,)
        return builtins_type(name, (cls.checked,), {'accepts': accepts, '__doc__': doc})()
    @classmethod
    def constant(cls, name, value, doc=''):
        return builtins_type(name, (cls.fixed,), {'value': value, '__doc__': doc})()
    @classmethod
    def option(cls, name, doc=''):
        '''A unique constant whose serialized name is ``label``'''
        return builtins_type(name, (object,), {'__doc__': doc, 'label': name})

builtins_type = type

def _summary(doc):
    return doc.strip().split('\n')[0] if doc else None

def _columns(rows):
    if not rows:
        return []
    width = max(len(k) for k, _, _ in rows), max(len(v) for _, v, _ in rows)
    return [('{:{}} = {:{}} # {}' if doc else '{:{}} = {:{}}').format(k, width[0], v, width[1], doc).rstrip() for k, v, doc in rows]

def namespace(cls):
    '''Freeze the options of ``cls`` into an iterable, read-only object'''
    options = dict((k, v) for k, v in cls.__dict__.items() if isinstance(v, builtins_type) and not k.startswith('_'))
    for k, v in options.items():
        v.__name__ = '{:s}.{:s}'.format(cls.__name__, k)

    def __repr__(self):
        rows = [(k, v.label, _summary(v.__doc__)) for k, v in sorted(options.items())]
        return '{{{:s}}}\n'.format(cls.__name__) + '\n'.join(_columns(rows)) + '\n'
    def __iter__(self):
        return (options[k] for k in sorted(options))
    def __setattr__(self, name, value):
        raise AttributeError('Namespace {!r} is read-only and can not assign {!r}'.format(cls.__name__, name))

    attrs = {'__doc__': cls.__doc__, '__repr__': __repr__, '__iter__': __iter__, '__setattr__': __setattr__}
    attrs.update((k, property(fget=lambda self, v=v: v)) for k, v in options.items())
    return builtins_type(cls.__name__, (object,), attrs)()

def configuration(cls):
    '''Turn ``cls`` and its nested classes into a tree of typed settings'''
    fields = dict((k, v) for k, v in cls.__dict__.items() if isinstance(v, field.descriptor))
    sections = dict((k, configuration(v)) for k, v in cls.__dict__.items() if isinstance(v, builtins_type) and not k.startswith('_'))

    def __repr__(self):
        rows = [(k, repr(getattr(self, k)), _summary(v.__doc__)) for k, v in sorted(fields.items())]
        res = ['[{:s}]{:s}'.format(cls.__name__, ' # ' + _summary(cls.__doc__) if cls.__doc__ else '')] + _columns(rows)
        res.extend('[{:s}.{:s}] ...'.format(cls.__name__, k) for k in sorted(sections))
        return '\n'.join(res) + '\n'
    def __setattr__(self, name, value):
        if name not in fields:
            raise AttributeError('Configuration {!r} has no field named {!r}'.format(cls.__name__, name))
        object.__setattr__(self, name, value)

    attrs = dict(fields, __doc__=cls.__doc__, __repr__=__repr__, __setattr__=__setattr__)
    attrs.update((k, property(fget=lambda self, v=v: v)) for k, v in sections.items())
    return builtins_type(cls.__name__, (object,), attrs)()

### constants that can be used as options
@namespace
class verdict:
    '''Three-valued answers to an ideal membership question'''
    In = field.option('In', 'The set is a member of the ideal')
    NotIn = field.option('NotIn', 'The set is positive with respect to the ideal')
    Unknown = field.option('Unknown', 'No structural rule decides the question')

@namespace
class finiteness:
    '''Finiteness verdicts of the structural analyzer'''
    Finite = field.option('Finite', 'The set has finitely many elements')
    Infinite = field.option('Infinite', 'The set has infinitely many elements')
    Unknown = field.option('Unknown', 'Finiteness could not be decided')

### new-config
@configuration
class defaults:
    log = field.type('default-logger', logging.Filterer, 'Default place to log progress')

    class memoize:
        size = field.type('size', six.integer_types, 'Largest number of results kept by each memoized function')

    class natset:
        '''Limits of the set algebra and its analyzer'''
        max_depth = field.type('max_depth', six.integer_types, 'Maximum nesting of block unions through their index sets')
        max_period = field.type('max_period', six.integer_types, 'Largest period considered by the exact periodic analysis')
        max_integer = field.type('max_integer', six.integer_types, 'Largest natural produced by the pairing function')
        budget = field.type('budget', six.integer_types, 'Recursion budget of the structural analyzer')
        horizon = field.type('horizon', six.integer_types, 'Largest prefix scanned when locating elements by position')

    class ideals:
        factor = field.type('factor', Fraction, 'Growth factor of the default block witness')

    class sequences:
        grades = field.type('grades', six.integer_types, 'Number of leading grades whose verdicts are checked one by one')
        precision = field.type('precision', six.integer_types, 'Decimal digits written to the CSV export')

    class cluster:
        '''Thresholds of the prefix oracle'''
        minimum = field.type('minimum', six.integer_types, 'Witness count a grid point must exceed under Fin')
        density = field.type('density', Fraction, 'Relative witness density required under the density ideals')
        resolution = field.type('resolution', Fraction, 'Resolution used when comparing cluster sets by distance')

    class construct:
        depth = field.type('depth', six.integer_types, 'Default truncation depth of scheme-built targets')
        sample = field.type('sample', six.integer_types, 'Prefix length used to check nesting and disjointness of scheme nodes')
        growth = field.type('growth', Fraction, 'Growth factor of the fine witness used for prescribed cluster sets')

    class cli:
        max_prefix = field.type('max_prefix', six.integer_types, 'Largest prefix length accepted from the command line')
        environment = field.constant('environment', 'IDEALIM_MAX_PREFIX', 'Environment variable overriding max_prefix')
        indent = field.type('indent', six.integer_types, 'Indentation of emitted JSON documents')

    class verify:
        seed = field.type('seed', six.integer_types, 'Seed of the randomized verification suites')

### defaults
# logging
defaults.log = log = logging.getLogger('idealim')
log.setLevel(logging.root.level)
log.propagate = 1
res = logging.StreamHandler(None)
res.setFormatter(logging.Formatter("[%(created).3f] <%(process)x.%(thread)x> [%(levelname)s:%(name)s] %(message)s", None))
log.addHandler(res)
del(res,log)

# memoized results
defaults.memoize.size = 2**16

# set algebra
defaults.natset.max_depth = 4
defaults.natset.max_period = 10**4
defaults.natset.max_integer = sys.maxsize
defaults.natset.budget = 24
defaults.natset.horizon = 10**7

# ideals
defaults.ideals.factor = Fraction(2)

# sequences
defaults.sequences.grades = 4
defaults.sequences.precision = 12

# prefix oracle
defaults.cluster.minimum = 3
defaults.cluster.density = Fraction(1, 1000)
defaults.cluster.resolution = Fraction(1, 1000)

# constructions
defaults.construct.depth = 8
defaults.construct.sample = 2**12
defaults.construct.growth = Fraction(2**15 + 1, 2**15)

# command line
def _environment(name, default):
    '''Positive integer from the environment variable ``name``, or ``default`` when it is unset or malformed'''
    text = os.environ.get(name)
    if text is None:
        return default
    try:
        res = int(text)
    except ValueError:
        res = 0
    if res < 1:
        defaults.log.warning('config : {:s} : ignoring {!r}, using {:d}'.format(name, text, default))
        return default
    return res

defaults.cli.max_prefix = _environment(defaults.cli.environment, 10**7)
defaults.cli.indent = 2

# verification
defaults.verify.seed = 0x1dea1

if __name__ == '__main__':
    class Result(Exception): pass
    class Success(Result): pass
    class Failure(Result): pass

    TestCaseList = []
    def TestCase(fn):
        def harness(**kwds):
            name = fn.__name__
            try:
                res = fn(**kwds)
                raise Failure
            except Success as e:
                print('%s: %r'% (name,e))
                return True
            except Failure as e:
                print('%s: %r'% (name,e))
            except Exception as e:
                print('%s: %r : %r'% (name,Failure(), e))
            return False
        TestCaseList.append(harness)
        return fn

if __name__ == '__main__':
    @TestCase
    def config_type_field_rejects():
        try:
            defaults.natset.max_depth = 'four'
        except ValueError:
            raise Success

    @TestCase
    def config_type_field_assigns():
        res = defaults.natset.max_depth
        defaults.natset.max_depth = 6
        try:
            if defaults.natset.max_depth == 6:
                raise Success
        finally:
            defaults.natset.max_depth = res

    @TestCase
    def config_unknown_field():
        try:
            defaults.natset.maximum = 1
        except AttributeError:
            raise Success

    @TestCase
    def config_constant_field():
        try:
            defaults.cli.environment = 'OTHER'
        except AttributeError:
            if defaults.cli.environment == 'IDEALIM_MAX_PREFIX':
                raise Success

    @TestCase
    def config_namespace_readonly():
        try:
            verdict.In = None
        except AttributeError:
            if verdict.In.label == 'In' and verdict.In is not verdict.NotIn:
                raise Success

    @TestCase
    def config_namespace_iterates():
        if [item.label for item in finiteness] == ['Finite', 'Infinite', 'Unknown']:
            raise Success

    @TestCase
    def config_assignment_revision():
        res, value = field.revision, defaults.cluster.minimum
        defaults.cluster.minimum = value
        if field.revision == res + 1:
            raise Success

    @TestCase
    def config_environment_malformed():
        name = 'IDEALIM_TEST_PREFIX'
        try:
            os.environ[name] = 'ten million'
            malformed = _environment(name, 100)
            os.environ[name] = '-5'
            negative = _environment(name, 100)
            os.environ[name] = '5000'
            if malformed == negative == 100 and _environment(name, 100) == 5000:
                raise Success
        finally:
            del os.environ[name]

    @TestCase
    def config_environment_unset():
        if _environment('IDEALIM_TEST_UNSET', 7) == 7:
            raise Success

    @TestCase
    def config_repr():
        res = repr(defaults.cluster)
        if 'minimum' in res and 'resolution' in res:
            raise Success

if __name__ == '__main__':
    results = []
    for t in TestCaseList:
        results.append( t() )
    sys.exit(0 if all(results) else 1)
