import sys,itertools,math,functools,inspect,collections
from fractions import Fraction
from . import config,error

## exact rationals
def rational(value):
    """Convert ``value`` (an integer, a Fraction, or a "p/q" or decimal string) into a Fraction"""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise error.SerializationError(value, 'booleans are not rationals')
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError):
            pass
    raise error.SerializationError(value, 'expected a rational written as "p/q"')

def natural(value):
    """Validate that ``value`` is a natural number"""
    if isinstance(value, bool) or not isinstance(value, int) or value < 0:
        raise error.SerializationError(value, 'expected a natural number')
    return value

def fraction(value):
    '''Serialize a rational as "p/q"'''
    value = Fraction(value)
    return '{:d}/{:d}'.format(value.numerator, value.denominator)

def decimal(value, precision):
    """Render a rational as a decimal string rounded half-away to ``precision`` digits"""
    value = Fraction(value)
    sign,value = ('-' if value < 0 else ''), abs(value)
    scaled = value * 10**precision
    res = math.floor(scaled + Fraction(1, 2))
    integer,fractional = divmod(res, 10**precision)
    if res == 0:
        sign = ''
    if precision == 0:
        return '{:s}{:d}'.format(sign, integer)
    return '{:s}{:d}.{:0{:d}d}'.format(sign, integer, fractional, precision)

def ceiling(value):
    return -((-value.numerator) // value.denominator) if isinstance(value, Fraction) else math.ceil(value)

def lcm(*values):
    res = 1
    for n in values:
        res = res * n // math.gcd(res, n)
    return res

## enumeration of the rationals in [0,1]
class enumeration(object):
    """Bijective enumeration of the rationals in the unit interval.

    Positions 0 and 1 hold 0 and 1. The rest follow the Stern-Brocot tree
    between them breadth first: level k (k >= 1) occupies the positions
    2**(k-1)+1 ... 2**k from left to right, and the path of 0 (left) and 1
    (right) turns leading to a node is the offset of its position in its level.
    """
    def __getitem__(self, index):
        if index < 0:
            raise error.InputError(self, 'enumeration.__getitem__', 'position {:d} is negative'.format(index))
        if index < 2:
            return Fraction(index)
        level = (index - 1).bit_length()
        path = format(index - 2**(level - 1) - 1, 'b').zfill(level - 1) if level > 1 else ''
        (a, b), (c, d) = (0, 1), (1, 1)
        for turn in path:
            if turn == '0':
                c, d = a + c, b + d
            else:
                a, b = a + c, b + d
            continue
        return Fraction(a + c, b + d)

    def index(self, value):
        '''Position of the rational ``value`` in the enumeration'''
        value = rational(value)
        if not 0 <= value <= 1:
            raise error.InputError(value, 'enumeration.index', 'only the rationals of [0, 1] are enumerated')
        if value in (0, 1):
            return int(value)
        (a, b), (c, d), path, level = (0, 1), (1, 1), 0, 0
        while True:
            node = Fraction(a + c, b + d)
            if node == value:
                return 2**level + 1 + path
            if value < node:
                c, d = a + c, b + d
            else:
                a, b = a + c, b + d
            path, level = 2 * path + (value > node), level + 1

    def __iter__(self):
        return (self[index] for index in itertools.count())

units = enumeration()

def corput(n):
    '''The n-th point of the base 2 van der Corput sequence, the binary digits of n mirrored behind the point'''
    digits = format(n, 'b')
    return Fraction(int(digits[::-1], 2), 2**len(digits)) if n else Fraction(0)

def corput_index(value):
    '''Position of the dyadic rational ``value`` of [0, 1) in the van der Corput sequence, or None'''
    value = rational(value)
    if not 0 <= value < 1 or value.denominator & (value.denominator - 1):
        return None
    if value == 0:
        return 0
    width = value.denominator.bit_length() - 1
    return int(format(value.numerator, 'b').zfill(width)[::-1], 2)

## registries of tagged descriptors
class definition(object):
    """Registry of the descriptor classes of one family, keyed by their JSON tag.

    A family subclasses this with its own `cache = {}` and decorates each
    member with `@family.define`; `attribute` names the tag field (default
    'type'). `fromjson` dispatches a JSON object to the member it names.
    """
    cache = None
    attribute = 'type'

    @classmethod
    def add(cls, type, object):
        assert isinstance(cls.cache, dict), '{!r} needs its own cache'.format(cls)
        cls.cache[type] = object

    @classmethod
    def lookup(cls, type):
        return cls.cache[type]

    @classmethod
    def contains(cls, type):
        return type in cls.cache

    @classmethod
    def define(cls, definition):
        cls.add(getattr(definition, cls.attribute), definition)
        return definition

    @classmethod
    def fromjson(cls, object):
        """Decode the JSON ``object`` by dispatching on its tag"""
        if not isinstance(object, dict):
            raise error.SerializationError(object, 'expected an object with a "{:s}" tag'.format(cls.attribute))
        tag = object.get(cls.attribute)
        if not isinstance(tag, str) or not cls.contains(tag):
            raise error.SerializationError(object, 'unknown {:s} {!r}'.format(cls.attribute, tag))
        try:
            return cls.lookup(tag).fromjson(object)
        except (KeyError, TypeError, AttributeError, IndexError) as e:
            raise error.SerializationError(object, 'malformed {:s} : {!s}'.format(tag, e)) from e

## memoization
def memoize(*kargs):
    '''Cache the results of a function keyed by the named arguments, or all of them.

    The cache is emptied whenever a configuration field is assigned, and keeps
    at most ``Config.memoize.size`` results, dropping the least recently used.
    '''
    def prepare_callable(fn, kargs=kargs):
        cache, state = collections.OrderedDict(), {'revision': config.field.revision}
        signature = inspect.signature(fn)
        names = tuple(kargs) or tuple(signature.parameters)
        def key(*args, **kwds):
            res = signature.bind(*args, **kwds)
            res.apply_defaults()
            return tuple(res.arguments.get(name) for name in names)

        @functools.wraps(fn)
        def callee(*args, **kwds):
            if state['revision'] != config.field.revision:
                cache.clear()
                state['revision'] = config.field.revision
            res = key(*args, **kwds)
            try:
                cache.move_to_end(res)
                return cache[res]
            except KeyError:
                pass
            value = fn(*args, **kwds)
            cache[res] = value
            while len(cache) > config.defaults.memoize.size:
                cache.popitem(last=False)
            return value

        callee.memoize_cache = lambda: cache
        callee.memoize_clear = cache.clear
        callee.callable = fn
        return callee
    return prepare_callable(kargs[0], ()) if len(kargs) == 1 and callable(kargs[0]) else prepare_callable

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
    import idealim.utils as utils
    from idealim import error, config

    @TestCase
    def rational_parse():
        if utils.rational('3/2') == Fraction(3, 2) and utils.rational(-1) == -1 and utils.rational('0.25') == Fraction(1, 4):
            raise Success

    @TestCase
    def rational_reject():
        try:
            utils.rational('three')
        except error.SerializationError:
            raise Success

    @TestCase
    def fraction_format():
        if utils.fraction(1) == '1/1' and utils.fraction(Fraction(-2, 6)) == '-1/3':
            raise Success

    @TestCase
    def decimal_format():
        if utils.decimal(Fraction(1, 3), 4) == '0.3333' and utils.decimal(Fraction(-2, 3), 2) == '-0.67' and utils.decimal(Fraction(1, 1000), 2) == '0.00':
            raise Success

    @TestCase
    def ceiling_fraction():
        if utils.ceiling(Fraction(5, 2)) == 3 and utils.ceiling(Fraction(-5, 2)) == -2 and utils.ceiling(Fraction(4)) == 4:
            raise Success

    @TestCase
    def enumeration_start():
        res = utils.enumeration()
        expected = [0, 1, Fraction(1,2), Fraction(1,3), Fraction(2,3), Fraction(1,4), Fraction(2,5), Fraction(3,5), Fraction(3,4)]
        if [res[i] for i in range(9)] == expected:
            raise Success

    @TestCase
    def enumeration_no_repetition():
        res = utils.enumeration()
        values = [res[i] for i in range(10**4)]
        if len(set(values)) == len(values) and all(0 <= v <= 1 for v in values):
            raise Success

    @TestCase
    def enumeration_index():
        res = utils.enumeration()
        if all(res.index(res[i]) == i for i in range(2000)) and res.index(Fraction(1, 1000)) == 2**998 + 1:
            raise Success

    @TestCase
    def enumeration_level_ends():
        res = utils.enumeration()
        if all(res[2**(k-1) + 1] == Fraction(1, k + 1) and res[2**k] == Fraction(k, k + 1) for k in range(1, 12)):
            raise Success

    @TestCase
    def corput_points():
        values = [utils.corput(n) for n in range(8)]
        if values == [0, Fraction(1,2), Fraction(1,4), Fraction(3,4), Fraction(1,8), Fraction(5,8), Fraction(3,8), Fraction(7,8)]:
            raise Success

    @TestCase
    def corput_inverse():
        if all(utils.corput_index(utils.corput(n)) == n for n in range(4096)) and utils.corput_index(Fraction(1, 3)) is None and utils.corput_index(1) is None:
            raise Success

    @TestCase
    def corput_window_spread():
        values = sorted(utils.corput(n) for n in range(20000, 28000))
        gaps = [b - a for a, b in zip([Fraction(0)] + values, values + [Fraction(1)])]
        if max(gaps) <= Fraction(1, 2**11):
            raise Success

    @TestCase
    def memoize_caches():
        calls = []
        @utils.memoize
        def square(n):
            calls.append(n)
            return n*n
        square(3), square(3), square(4)
        if calls == [3, 4] and len(square.memoize_cache()) == 2:
            square.memoize_clear()
            if not square.memoize_cache():
                raise Success

    @TestCase
    def memoize_named():
        calls = []
        @utils.memoize('a')
        def first(a, b):
            calls.append((a, b))
            return a
        first(1, 2), first(1, 3)
        if calls == [(1, 2)]:
            raise Success

    @TestCase
    def memoize_config_change():
        calls = []
        @utils.memoize
        def square(n):
            calls.append(n)
            return n*n
        square(5)
        config.defaults.cluster.minimum = config.defaults.cluster.minimum
        square(5), square(5)
        if calls == [5, 5]:
            raise Success

    @TestCase
    def memoize_bounded():
        @utils.memoize
        def square(n):
            return n*n
        res = config.defaults.memoize.size
        config.defaults.memoize.size = 4
        try:
            [square(n) for n in range(10)]
            square(7)
            if list(square.memoize_cache()) == [(6,), (8,), (9,), (7,)]:
                raise Success
        finally:
            config.defaults.memoize.size = res

if __name__ == '__main__':
    results = []
    for t in TestCaseList:
        results.append( t() )
    sys.exit(0 if all(results) else 1)
