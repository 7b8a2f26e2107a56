"""Symbolic subsets of the natural numbers.

A natset is an immutable tree of variants (finite, cofinite, arith, blocks,
union, intersection, complement, branch, subsequence, grid, poly). Every
variant has decidable membership and an ascending prefix enumeration. The
structural analyzer answers finiteness, upper/lower density and convergence of
the reciprocal sum conservatively: anything it claims is true for the symbolic
set, and Unknown is always an acceptable answer.

Block structures describe the endpoints n0 < n1 < ... of the blocks
[n_i, n_{i+1}) that partition [n0, oo). Indices are 0-based internally and
serialized with an "offset" of 1 to name the first block.
"""
import sys,math,bisect,heapq,itertools,functools,threading
from fractions import Fraction
from . import config,error,utils
Config = config.defaults
Log = Config.log.getChild('natset')

__all__ = 'type,structure,member,prefix,rank,select,elements,analyze,simplify,pair_encode,pair_decode,binary_string_code,binary_string_decode,fromjson'.split(',')

### coding bijections
def pair_encode(k, l):
    '''Cantor pairing of ``k`` and ``l``'''
    if k < 0 or l < 0:
        raise error.InputError((k, l), 'pair_encode', 'coordinates must be naturals')
    w = k + l
    res = w * (w + 1) // 2 + l
    if res > Config.natset.max_integer:
        raise error.ArithmeticError((k, l), 'pair_encode', 'code {:d} exceeds the integer width {:d}'.format(res, Config.natset.max_integer))
    return res

def pair_decode(n):
    '''Inverse of the Cantor pairing'''
    if n < 0:
        raise error.InputError(n, 'pair_decode', 'code must be a natural')
    w = (math.isqrt(8*n + 1) - 1) // 2
    l = n - w * (w + 1) // 2
    return w - l, l

def binary_string_code(s):
    '''Shortlex position of the 0-1 string ``s`` (the empty string is 0)'''
    if any(ch not in '01' for ch in s):
        raise error.InputError(s, 'binary_string_code', 'expected a string of 0 and 1')
    return 2**len(s) - 1 + (int(s, 2) if s else 0)

def binary_string_decode(n):
    '''Inverse of binary_string_code'''
    if n < 0:
        raise error.InputError(n, 'binary_string_decode', 'code must be a natural')
    length = (n + 1).bit_length() - 1
    value = n + 1 - 2**length
    return format(value, '0{:d}b'.format(length)) if length else ''

def _offset(object):
    res = object.get('offset', structure.offset)
    if res != structure.offset:
        raise error.SerializationError(object, 'block offset must be {:d}'.format(structure.offset))
    return res

def _increasing(values, object):
    if any(a >= b for a, b in zip(values, values[1:])):
        raise error.SerializationError(object, 'elements must strictly increase')
    return values

### block structures
class structures(utils.definition):
    cache = {}
    attribute = 'kind'

# endpoint caches only ever grow, so concurrent readers see a consistent prefix
_lock = threading.RLock()

class structure(object):
    """Strictly increasing block endpoints n0 < n1 < ... where every endpoint
    is max(previous + 1, ceil(candidate)) and n0 >= 1.
    """
    kind = None
    offset = 1

    def __init__(self):
        self._endpoints = []

    def candidate(self, index, previous):
        raise NotImplementedError

    def _extend(self, count):
        res = self._endpoints
        with _lock:
            while len(res) < count:
                if res:
                    value = max(res[-1] + 1, utils.ceiling(self.candidate(len(res), res[-1])))
                else:
                    value = max(1, utils.ceiling(self.candidate(0, None)))
                res.append(value)
            return res

    def endpoint(self, index):
        return self._extend(index + 1)[index]

    @property
    def first(self):
        return self.endpoint(0)

    def bounds(self, index):
        '''Return the block ``index`` as the half-open pair (start, stop)'''
        return self.endpoint(index), self.endpoint(index + 1)

    def block(self, n):
        '''Return the index of the block containing ``n`` or None below the first block'''
        if n < self.first:
            return None
        res = self._endpoints
        while res[-1] <= n:
            res = self._extend(2 * len(res))
        return bisect.bisect_right(res, n) - 1

    def count(self, N):
        '''Number of blocks that start below ``N``'''
        return 0 if N <= self.first else self.block(N - 1) + 1

    @property
    def depth(self):
        return 0

    def key(self):
        raise NotImplementedError
    def __eq__(self, other):
        return isinstance(other, structure) and self.key() == other.key()
    def __ne__(self, other):
        return not self.__eq__(other)
    def __hash__(self):
        return hash(self.key())
    def __repr__(self):
        return 'structure.{:s}{!r}'.format(self.kind, self.key()[1:])

@structures.define
class explicit(structure):
    """The listed endpoints followed by unit steps"""
    kind = 'explicit'
    def __init__(self, points):
        super(explicit,self).__init__()
        points = tuple(points)
        if not points or points[0] < 1 or any(a >= b for a, b in zip(points, points[1:])):
            raise error.StructuralError(self, 'explicit', 'endpoints must be nonempty, start at 1 or later and strictly increase')
        self.points = points
    def candidate(self, index, previous):
        return self.points[index] if index < len(self.points) else previous + 1
    def key(self):
        return (self.kind, self.points)
    def json(self):
        return {'kind': self.kind, 'points': list(self.points), 'offset': self.offset}
    @classmethod
    def fromjson(cls, object):
        _offset(object)
        return cls([utils.natural(n) for n in object['points']])

@structures.define
class geometric(structure):
    """Endpoints n_{i+1} = max(n_i + 1, ceil(factor * n_i)) starting at n1"""
    kind = 'geometric'
    def __init__(self, n1, factor):
        super(geometric,self).__init__()
        self.n1,self.factor = n1, utils.rational(factor)
        if not isinstance(n1, int) or n1 < 1 or self.factor <= 1:
            raise error.StructuralError(self, 'geometric', 'requires n1 >= 1 and factor > 1')
    def candidate(self, index, previous):
        return self.n1 if previous is None else self.factor * previous
    @property
    def share(self):
        '''Smallest fraction of [0, n_{i+1}) that the block i covers'''
        return 1 - 1 / self.factor
    def key(self):
        return (self.kind, self.n1, self.factor)
    def json(self):
        return {'kind': self.kind, 'n1': self.n1, 'factor': utils.fraction(self.factor), 'offset': self.offset}
    @classmethod
    def fromjson(cls, object):
        _offset(object)
        return cls(utils.natural(object['n1']), utils.rational(object['factor']))

@structures.define
class polynomial(structure):
    """Endpoints following a polynomial with natural coefficients"""
    kind = 'polynomial'
    def __init__(self, coeffs):
        super(polynomial,self).__init__()
        self.coeffs = tuple(coeffs)
        if len(self.coeffs) < 2 or any(not isinstance(c, int) or c < 0 for c in self.coeffs) or self.coeffs[-1] == 0:
            raise error.StructuralError(self, 'polynomial', 'requires natural coefficients of degree at least 1')
    @property
    def degree(self):
        return len(self.coeffs) - 1
    def candidate(self, index, previous):
        return sum(c * index**k for k, c in enumerate(self.coeffs))
    def key(self):
        return (self.kind, self.coeffs)
    def json(self):
        return {'kind': self.kind, 'coeffs': list(self.coeffs), 'offset': self.offset}
    @classmethod
    def fromjson(cls, object):
        _offset(object)
        return cls([utils.natural(c) for c in object['coeffs']])

@structures.define
class coarsening(structure):
    """Endpoints n_{j_0} < n_{j_1} < ... of ``base`` selected by the elements of ``indices``"""
    kind = 'coarsening'
    def __init__(self, base, indices):
        super(coarsening,self).__init__()
        if not isinstance(base, structure) or not isinstance(indices, type):
            raise error.StructuralError(self, 'coarsening', 'requires a block structure and a natset')
        self.base,self.indices = base,indices
        if analyze(indices).finite:
            raise error.StructuralError(self, 'coarsening', 'the selected endpoints must be infinite')
    def _extend(self, count):
        res = self._endpoints
        with _lock:
            while len(res) < count:
                res.append(self.base.endpoint(select(self.indices, len(res))))
            return res
    @property
    def depth(self):
        return max(self.base.depth, self.indices.depth)
    def key(self):
        return (self.kind, self.base.key(), self.indices.key())
    def json(self):
        return {'kind': self.kind, 'base': self.base.json(), 'indices': self.indices.json(), 'offset': self.offset}
    @classmethod
    def fromjson(cls, object):
        _offset(object)
        return cls(structures.fromjson(object['base']), sets.fromjson(object['indices']))

### sets
class sets(utils.definition):
    cache = {}

class type(object):
    """A symbolic subset of the naturals"""
    type = None

    def fields(self):
        '''Hashable description of the variant fields'''
        raise NotImplementedError
    def children(self):
        return ()

    def key(self):
        try:
            return self.__key
        except AttributeError:
            pass
        self.__key = res = (self.type,) + tuple(item.key() if isinstance(item, (type, structure)) else item for item in self.fields())
        return res
    def __eq__(self, other):
        return isinstance(other, type) and self.key() == other.key()
    def __ne__(self, other):
        return not self.__eq__(other)
    def __hash__(self):
        try:
            return self.__hash
        except AttributeError:
            pass
        self.__hash = res = hash(self.key())
        return res
    def __repr__(self):
        return 'natset.{:s}({:s})'.format(self.type, ', '.join(map(repr, self.fields())))

    @property
    def depth(self):
        '''Nesting of block unions through their index sets'''
        return max([item.depth for item in self.children()] or [0])

    def member(self, n):
        raise NotImplementedError
    def iterate(self, N):
        '''Yield the elements below ``N`` in ascending order'''
        raise NotImplementedError
    def rank(self, n):
        '''Number of elements below ``n``'''
        return sum(1 for _ in self.iterate(n))
    def select(self, index):
        '''The element at position ``index`` of the ascending enumeration'''
        res = next(itertools.islice(elements(self), index, None), None)
        if res is None:
            raise error.InputError(self, 'select', 'no element at position {:d} below {:d}'.format(index, Config.natset.horizon))
        return res
    def json(self):
        raise NotImplementedError

@sets.define
class finite(type):
    type = 'finite'
    def __init__(self, elements=()):
        res = sorted(set(elements))
        if any(not isinstance(n, int) or n < 0 for n in res):
            raise error.InputError(self, 'finite', 'elements must be naturals')
        self.elements = tuple(res)
    def fields(self):
        return self.elements
    def member(self, n):
        index = bisect.bisect_left(self.elements, n)
        return index < len(self.elements) and self.elements[index] == n
    def iterate(self, N):
        return iter(self.elements[:bisect.bisect_left(self.elements, N)])
    def rank(self, n):
        return bisect.bisect_left(self.elements, n)
    def select(self, index):
        if index >= len(self.elements):
            raise error.InputError(self, 'select', 'position {:d} is past the last of {:d} elements'.format(index, len(self.elements)))
        return self.elements[index]
    def json(self):
        return {'type': self.type, 'elements': list(self.elements)}
    @classmethod
    def fromjson(cls, object):
        return cls(_increasing([utils.natural(n) for n in object['elements']], object))

@sets.define
class cofinite(type):
    type = 'cofinite'
    def __init__(self, excluded=()):
        res = sorted(set(excluded))
        if any(not isinstance(n, int) or n < 0 for n in res):
            raise error.InputError(self, 'cofinite', 'excluded elements must be naturals')
        self.excluded = tuple(res)
    def fields(self):
        return self.excluded
    def member(self, n):
        index = bisect.bisect_left(self.excluded, n)
        return not (index < len(self.excluded) and self.excluded[index] == n)
    def iterate(self, N):
        skip = set(self.excluded)
        return (n for n in range(N) if n not in skip)
    def rank(self, n):
        return n - bisect.bisect_left(self.excluded, n)
    def select(self, index):
        res = index
        for n in self.excluded:
            if n > res:
                break
            res += 1
        return res
    def json(self):
        return {'type': self.type, 'excluded': list(self.excluded)}
    @classmethod
    def fromjson(cls, object):
        return cls(_increasing([utils.natural(n) for n in object['excluded']], object))

@sets.define
class arith(type):
    type = 'arith'
    def __init__(self, first, step):
        if not isinstance(first, int) or not isinstance(step, int) or first < 0 or step < 1:
            raise error.StructuralError(self, 'arith', 'requires a natural first element and a step of at least 1')
        self.first,self.step = first,step
    def fields(self):
        return self.first, self.step
    def member(self, n):
        return n >= self.first and (n - self.first) % self.step == 0
    def iterate(self, N):
        return iter(range(self.first, N, self.step))
    def rank(self, n):
        return 0 if n <= self.first else (n - self.first + self.step - 1) // self.step
    def select(self, index):
        return self.first + index * self.step
    def json(self):
        return {'type': self.type, 'first': self.first, 'step': self.step}
    @classmethod
    def fromjson(cls, object):
        return cls(utils.natural(object['first']), utils.natural(object['step']))

@sets.define
class blocks(type):
    """Union of the blocks of ``rule`` whose index belongs to ``indices``"""
    type = 'blocks'
    def __init__(self, rule, indices):
        if not isinstance(rule, structure) or not isinstance(indices, type):
            raise error.StructuralError(self, 'blocks', 'requires a block structure and a natset of indices')
        self.rule,self.indices = rule,indices
    def fields(self):
        return self.rule, self.indices
    def children(self):
        return (self.indices,)
    @property
    def depth(self):
        return 1 + max(self.indices.depth, self.rule.depth)
    def member(self, n):
        index = self.rule.block(n)
        return index is not None and self.indices.member(index)
    def iterate(self, N):
        for index in self.indices.iterate(self.rule.count(N)):
            start, stop = self.rule.bounds(index)
            for n in range(start, min(stop, N)):
                yield n
            continue
        return
    def rank(self, n):
        res = 0
        for index in self.indices.iterate(self.rule.count(n)):
            start, stop = self.rule.bounds(index)
            res += min(stop, n) - start
        return res
    def json(self):
        return {'type': self.type, 'rule': self.rule.json(), 'indices': self.indices.json()}
    @classmethod
    def fromjson(cls, object):
        return cls(structures.fromjson(object['rule']), sets.fromjson(object['indices']))

class _binary(type):
    def __init__(self, left, right):
        if not isinstance(left, type) or not isinstance(right, type):
            raise error.StructuralError(self, self.type, 'operands must be natsets')
        self.left,self.right = left,right
    def fields(self):
        return self.left, self.right
    def children(self):
        return self.left, self.right
    def json(self):
        return {'type': self.type, 'left': self.left.json(), 'right': self.right.json()}
    @classmethod
    def fromjson(cls, object):
        return cls(sets.fromjson(object['left']), sets.fromjson(object['right']))

@sets.define
class union(_binary):
    type = 'union'
    def member(self, n):
        return self.left.member(n) or self.right.member(n)
    def iterate(self, N):
        last = None
        for n in heapq.merge(self.left.iterate(N), self.right.iterate(N)):
            if n != last:
                yield n
            last = n
        return

@sets.define
class intersection(_binary):
    type = 'intersection'
    def member(self, n):
        return self.left.member(n) and self.right.member(n)
    def iterate(self, N):
        return (n for n in self.left.iterate(N) if self.right.member(n))

@sets.define
class complement(type):
    type = 'complement'
    def __init__(self, inner):
        if not isinstance(inner, type):
            raise error.StructuralError(self, 'complement', 'operand must be a natset')
        self.inner = inner
    def fields(self):
        return (self.inner,)
    def children(self):
        return (self.inner,)
    def member(self, n):
        return not self.inner.member(n)
    def iterate(self, N):
        skip = self.inner.iterate(N)
        following = next(skip, N)
        for n in range(N):
            if n == following:
                following = next(skip, N)
                continue
            yield n
        return
    def json(self):
        return {'type': self.type, 'inner': self.inner.json()}
    @classmethod
    def fromjson(cls, object):
        return cls(sets.fromjson(object['inner']))

@sets.define
class branch(type):
    """Codes of the prefixes of the infinite 0-1 sequence bits, 1, 0, 0, ..."""
    type = 'branch'
    def __init__(self, bits):
        if not isinstance(bits, str) or any(ch not in '01' for ch in bits):
            raise error.InputError(self, 'branch', 'expected a string of 0 and 1')
        self.bits = bits
    def fields(self):
        return (self.bits,)
    def code(self, length):
        '''Code of the prefix of the given length'''
        res = self.bits + '1'
        res = res[:length] if length <= len(res) else res + '0' * (length - len(res))
        return binary_string_code(res)
    def member(self, n):
        return self.code(len(binary_string_decode(n))) == n
    def iterate(self, N):
        for length in itertools.count():
            res = self.code(length)
            if res >= N:
                return
            yield res
        return
    def rank(self, n):
        return sum(1 for _ in self.iterate(n))
    def select(self, index):
        return self.code(index)
    def json(self):
        return {'type': self.type, 'bits': self.bits}
    @classmethod
    def fromjson(cls, object):
        return cls(object['bits'])

@sets.define
class subsequence(type):
    """Elements of ``inner`` whose position in ``inner`` belongs to ``positions``"""
    type = 'subsequence'
    def __init__(self, inner, positions):
        if not isinstance(inner, type) or not isinstance(positions, type):
            raise error.StructuralError(self, 'subsequence', 'operands must be natsets')
        self.inner,self.positions = inner,positions
    def fields(self):
        return self.inner, self.positions
    def children(self):
        return self.inner, self.positions
    def member(self, n):
        return self.inner.member(n) and self.positions.member(self.inner.rank(n))
    def iterate(self, N):
        for index, n in enumerate(self.inner.iterate(N)):
            if self.positions.member(index):
                yield n
            continue
        return
    def select(self, index):
        return self.inner.select(self.positions.select(index))
    def json(self):
        return {'type': self.type, 'inner': self.inner.json(), 'positions': self.positions.json()}
    @classmethod
    def fromjson(cls, object):
        return cls(sets.fromjson(object['inner']), sets.fromjson(object['positions']))

@sets.define
class grid(type):
    """Codes whose Cantor pair (k, l) has k in ``columns`` and l in ``rows``"""
    type = 'grid'
    def __init__(self, columns, rows=None):
        rows = cofinite() if rows is None else rows
        if not isinstance(columns, type) or not isinstance(rows, type):
            raise error.StructuralError(self, 'grid', 'operands must be natsets')
        self.columns,self.rows = columns,rows
    def fields(self):
        return self.columns, self.rows
    def children(self):
        return self.columns, self.rows
    def member(self, n):
        k, l = pair_decode(n)
        return self.columns.member(k) and self.rows.member(l)
    def iterate(self, N):
        n = 0
        for w in itertools.count():
            for l in range(w + 1):
                if n >= N:
                    return
                if self.columns.member(w - l) and self.rows.member(l):
                    yield n
                n += 1
            continue
        return
    def json(self):
        return {'type': self.type, 'columns': self.columns.json(), 'rows': self.rows.json()}
    @classmethod
    def fromjson(cls, object):
        return cls(sets.fromjson(object['columns']), sets.fromjson(object['rows']))

@sets.define
class poly(type):
    """Values p(0) < p(1) < ... of a polynomial with natural coefficients"""
    type = 'poly'
    def __init__(self, coeffs):
        self.coeffs = tuple(coeffs)
        if len(self.coeffs) < 2 or any(not isinstance(c, int) or c < 0 for c in self.coeffs) or self.coeffs[-1] == 0:
            raise error.StructuralError(self, 'poly', 'requires natural coefficients of degree at least 1')
    @property
    def degree(self):
        return len(self.coeffs) - 1
    def fields(self):
        return self.coeffs
    def value(self, index):
        return sum(c * index**k for k, c in enumerate(self.coeffs))
    def rank(self, n):
        lo, hi = 0, max(n, 1)
        while lo < hi:
            mid = (lo + hi) // 2
            if self.value(mid) < n:
                lo = mid + 1
            else:
                hi = mid
            continue
        return lo
    def member(self, n):
        return self.value(self.rank(n)) == n
    def iterate(self, N):
        for index in itertools.count():
            res = self.value(index)
            if res >= N:
                return
            yield res
        return
    def select(self, index):
        return self.value(index)
    def json(self):
        return {'type': self.type, 'coeffs': list(self.coeffs)}
    @classmethod
    def fromjson(cls, object):
        return cls([utils.natural(c) for c in object['coeffs']])

def everything():
    return cofinite()
def nothing():
    return finite()

### operations
def _check(S, method):
    if not isinstance(S, type):
        raise error.InputError(S, method, 'expected a natset')
    if S.depth > Config.natset.max_depth:
        raise error.StructuralError(S, method, 'block unions are nested {:d} deep which exceeds the limit of {:d}'.format(S.depth, Config.natset.max_depth))
    return S

def member(S, n):
    '''Return whether ``n`` belongs to ``S``'''
    if not isinstance(n, int) or n < 0:
        raise error.InputError(S, 'member', '{!r} is not a natural'.format(n))
    return _check(S, 'member').member(n)

def prefix(S, N):
    '''Return the sorted list of the elements of ``S`` below ``N``'''
    return list(_check(S, 'prefix').iterate(N))

def rank(S, n):
    return _check(S, 'rank').rank(n)

def select(S, index):
    if index < 0:
        raise error.InputError(S, 'select', 'position {:d} is negative'.format(index))
    return _check(S, 'select').select(index)

def elements(S):
    '''Yield the elements of ``S`` in ascending order, up to the configured horizon'''
    N, last = 64, -1
    while True:
        for n in S.iterate(N):
            if n > last:
                last = n
                yield n
            continue
        if N >= Config.natset.horizon:
            return
        N = min(2 * N, Config.natset.horizon)
    return

def fromjson(object):
    '''Decode a natset from its JSON object'''
    return sets.fromjson(object)

### normal forms
def _empty(S):
    return isinstance(S, finite) and not S.elements
def _everything(S):
    return isinstance(S, cofinite) and not S.excluded
def _shift(S):
    '''Return a if S is the tail {a, a+1, ...}'''
    if isinstance(S, cofinite) and S.excluded == tuple(range(len(S.excluded))):
        return len(S.excluded)
    return None

def _progression(A, B):
    period = utils.lcm(A.step, B.step)
    if period > Config.natset.max_period:
        return intersection(A, B)
    start = max(A.first, B.first)
    for n in range(start, start + period):
        if A.member(n) and B.member(n):
            return simplify(arith(n, period))
        continue
    return finite()

def _values(P, A):
    '''Intersect the values of ``P`` with ``A`` through the residues of p(i) modulo the step'''
    residues = [r for r in range(A.step) if P.value(r) % A.step == A.first % A.step]
    if not residues:
        return finite()
    if P.value(0) < A.first:
        return intersection(P, A)
    return _restrict(P, functools.reduce(_unite, [simplify(arith(r, A.step)) for r in residues]))

def _lift(rule, indices):
    if _everything(indices):
        return cofinite(range(rule.first))
    return finite() if _empty(indices) else blocks(rule, indices)

def _negate(X):
    if isinstance(X, complement):
        return X.inner
    if isinstance(X, finite):
        return cofinite(X.elements)
    if isinstance(X, cofinite):
        return finite(X.excluded)
    if isinstance(X, union):
        return _intersect(_negate(X.left), _negate(X.right))
    if isinstance(X, intersection):
        return _unite(_negate(X.left), _negate(X.right))
    if isinstance(X, blocks):
        return _unite(finite(range(X.rule.first)), _lift(X.rule, _negate(X.indices)))
    return complement(X)

def _unite(A, B):
    if _empty(A):
        return B
    if _empty(B) or A == B:
        return A
    if _everything(A) or _everything(B):
        return cofinite()
    if isinstance(A, finite) and isinstance(B, finite):
        return finite(A.elements + B.elements)
    if isinstance(A, cofinite) and isinstance(B, cofinite):
        return cofinite(set(A.excluded).intersection(B.excluded))
    for X, Y in ((A, B), (B, A)):
        if isinstance(X, finite) and isinstance(Y, cofinite):
            return cofinite(set(Y.excluded).difference(X.elements))
        continue
    if isinstance(A, blocks) and isinstance(B, blocks) and A.rule == B.rule:
        return _lift(A.rule, _unite(A.indices, B.indices))
    return union(A, B)

def _intersect(A, B):
    if _empty(A) or _empty(B):
        return finite()
    if _everything(A):
        return B
    if _everything(B) or A == B or B in _supersets(A):
        return A
    if A in _supersets(B):
        return B
    for X, Y in ((A, B), (B, A)):
        if isinstance(X, complement) and X.inner in _supersets(Y):
            return finite()
        continue
    if isinstance(A, finite):
        return finite(n for n in A.elements if B.member(n))
    if isinstance(B, finite):
        return finite(n for n in B.elements if A.member(n))
    if isinstance(A, cofinite) and isinstance(B, cofinite):
        return cofinite(A.excluded + B.excluded)
    for X, Y in ((A, B), (B, A)):
        if isinstance(X, cofinite) and not any(Y.member(n) for n in X.excluded):
            return Y
        continue
    if isinstance(A, arith) and isinstance(B, arith):
        return _progression(A, B)
    for X, Y in ((A, B), (B, A)):
        if isinstance(X, poly) and isinstance(Y, arith) and Y.step <= Config.natset.max_period:
            return _values(X, Y)
        continue
    if isinstance(A, blocks) and isinstance(B, blocks):
        if A.rule == B.rule:
            return _lift(A.rule, _intersect(A.indices, B.indices))
        for X, Y in ((A, B), (B, A)):
            if isinstance(X.rule, coarsening) and X.rule.base == Y.rule and simplify(X.rule.indices) == Y.indices:
                return _lift(Y.rule, _restrict(Y.indices, X.indices))
            continue
    if isinstance(A, subsequence) and isinstance(B, subsequence) and A.inner == B.inner:
        return _restrict(A.inner, _intersect(A.positions, B.positions))
    if isinstance(A, grid) and isinstance(B, grid):
        columns, rows = _intersect(A.columns, B.columns), _intersect(A.rows, B.rows)
        return finite() if _empty(columns) or _empty(rows) else grid(columns, rows)
    if isinstance(A, branch) and isinstance(B, branch):
        common = itertools.takewhile(lambda length: A.code(length) == B.code(length), itertools.count())
        return finite(A.code(length) for length in common)
    return intersection(A, B)

def _restrict(J, P):
    if _everything(P):
        return J
    if _empty(J) or _empty(P):
        return finite()
    if _everything(J):
        return P
    start = _shift(J)
    if start is not None and isinstance(P, arith):
        return simplify(arith(start + P.first, P.step))
    if isinstance(J, arith) and isinstance(P, arith):
        return simplify(arith(J.first + P.first * J.step, J.step * P.step))
    if isinstance(J, subsequence):
        return _restrict(J.inner, _restrict(J.positions, P))
    if isinstance(J, finite):
        return finite(J.elements[index] for index in P.iterate(len(J.elements)))
    if isinstance(P, finite) and isinstance(J, (arith, cofinite, branch, poly)):
        return finite(J.select(index) for index in P.elements)
    return subsequence(J, P)

@utils.memoize
def simplify(S):
    '''Rewrite ``S`` into an equal set in the normal form used by the analyzer'''
    if isinstance(S, arith):
        return cofinite(range(S.first)) if S.step == 1 else S
    if isinstance(S, poly) and S.degree == 1:
        return simplify(arith(S.coeffs[0], S.coeffs[1]))
    if isinstance(S, complement):
        return _negate(simplify(S.inner))
    if isinstance(S, union):
        return _unite(simplify(S.left), simplify(S.right))
    if isinstance(S, intersection):
        return _intersect(simplify(S.left), simplify(S.right))
    if isinstance(S, blocks):
        return _lift(S.rule, simplify(S.indices))
    if isinstance(S, subsequence):
        return _restrict(simplify(S.inner), simplify(S.positions))
    if isinstance(S, grid):
        columns, rows = simplify(S.columns), simplify(S.rows)
        return finite() if _empty(columns) or _empty(rows) else grid(columns, rows)
    return S

### structural analysis
class density(object):
    '''Bounds on the upper asymptotic density'''
    def __init__(self, lo, hi):
        self.lo,self.hi = Fraction(lo),Fraction(hi)
    @property
    def kind(self):
        if self.lo == self.hi:
            return 'exact'
        return 'unknown' if (self.lo, self.hi) == (0, 1) else 'bounds'
    @property
    def exact(self):
        return self.lo if self.lo == self.hi else None
    def __eq__(self, other):
        return isinstance(other, density) and (self.lo, self.hi) == (other.lo, other.hi)
    def __hash__(self):
        return hash((self.lo, self.hi))
    def json(self):
        if self.kind == 'exact':
            return {'kind': 'exact', 'value': utils.fraction(self.lo)}
        if self.kind == 'unknown':
            return {'kind': 'unknown'}
        return {'kind': 'bounds', 'lo': utils.fraction(self.lo), 'hi': utils.fraction(self.hi)}
    def __repr__(self):
        if self.kind == 'exact':
            return 'Exact({!s})'.format(self.lo)
        return 'Unknown' if self.kind == 'unknown' else 'Bounds({!s}, {!s})'.format(self.lo, self.hi)

class report(object):
    """Facts about a set: finiteness, bounds on the upper and lower density,
    and whether the reciprocal sum of its elements converges.
    """
    def __init__(self, finite=None, upper=(0, 1), lower=(0, 1), convergent=None, reason=''):
        (ulo, uhi), (llo, lhi) = map(Fraction, upper), map(Fraction, lower)
        if finite:
            ulo = uhi = llo = lhi = Fraction(0)
            convergent = True
        lhi, ulo = min(lhi, uhi), max(ulo, llo)
        if ulo > 0:
            finite, convergent = False, False
        if convergent is False:
            finite = False
        self.finite,self.convergent = finite,convergent
        self.upper,self.lower = (ulo, uhi),(llo, lhi)
        self.reason = reason

    @property
    def finiteness(self):
        if self.finite is None:
            return config.finiteness.Unknown
        return config.finiteness.Finite if self.finite else config.finiteness.Infinite
    @property
    def density(self):
        return density(*self.upper)
    @property
    def reciprocal(self):
        if self.convergent is None:
            return 'unknown'
        return 'converges' if self.convergent else 'diverges'

    def meet(self, other):
        '''Combine the facts of two sound reports about the same set'''
        finite = self.finite if other.finite is None else other.finite
        convergent = self.convergent if other.convergent is None else other.convergent
        if None not in (self.finite, other.finite) and self.finite != other.finite:
            Log.warning('report.meet : {:s} : conflicting finiteness against {:s}'.format(self.reason, other.reason))
            finite = self.finite
        upper = max(self.upper[0], other.upper[0]), min(self.upper[1], other.upper[1])
        lower = max(self.lower[0], other.lower[0]), min(self.lower[1], other.lower[1])
        if upper[0] > upper[1] or lower[0] > lower[1]:
            Log.warning('report.meet : {:s} : conflicting density against {:s}'.format(self.reason, other.reason))
            return self
        return report(finite, upper, lower, convergent, '; '.join(filter(None, (self.reason, other.reason))))

    def json(self):
        return {
            'finiteness': self.finiteness.label,
            'density': self.density.json(),
            'lower': [utils.fraction(self.lower[0]), utils.fraction(self.lower[1])],
            'reciprocal': self.reciprocal,
        }
    def __repr__(self):
        return '<natset.report {:s} density={!r} lower=[{!s}, {!s}] reciprocal={:s}>'.format(self.finiteness.label, self.density, self.lower[0], self.lower[1], self.reciprocal)

def _conjuncts(S):
    if isinstance(S, intersection):
        return _conjuncts(S.left) + _conjuncts(S.right)
    return [S]

def _conjoin(items):
    return functools.reduce(intersection, items)

def _supersets(S):
    res = [S]
    if isinstance(S, subsequence):
        res.extend(_supersets(S.inner))
    return res

@utils.memoize
def _periodic(S):
    '''Return (start, period, residues) when ``S`` is eventually periodic'''
    if isinstance(S, finite):
        return (S.elements[-1] + 1 if S.elements else 0), 1, frozenset()
    if isinstance(S, cofinite):
        return (S.excluded[-1] + 1 if S.excluded else 0), 1, frozenset([0])
    if isinstance(S, arith):
        return S.first, S.step, frozenset([S.first % S.step])
    if isinstance(S, (union, intersection, complement)):
        res = [_periodic(item) for item in S.children()]
        if any(item is None for item in res):
            return None
        start = max(item[0] for item in res)
        period = utils.lcm(*(item[1] for item in res))
        if period > Config.natset.max_period:
            return None
        residues = frozenset(r for r in range(period) if S.member(start + (r - start) % period))
        return start, period, residues
    return None

def _union_report(A, B, reason):
    finite = True if A.finite and B.finite else (False if False in (A.finite, B.finite) else None)
    convergent = True if A.convergent and B.convergent else (False if False in (A.convergent, B.convergent) else None)
    upper = max(A.upper[0], B.upper[0]), min(1, A.upper[1] + B.upper[1])
    lower = max(A.lower[0], B.lower[0]), min(1, A.lower[1] + B.upper[1], A.upper[1] + B.lower[1])
    return report(finite, upper, lower, convergent, reason)

def _analyze_union(S, budget):
    return _union_report(_analyze(S.left, budget), _analyze(S.right, budget), 'union')

def _analyze_complement(S, budget):
    res = _analyze(S.inner, budget)
    upper = 1 - res.lower[1], 1 - res.lower[0]
    lower = 1 - res.upper[1], 1 - res.upper[0]
    finite = False if res.finite or res.lower[1] < 1 else None
    convergent = False if res.convergent else None
    return report(finite, upper, lower, convergent, 'complement')

def _analyze_blocks(S, budget):
    rule, res = S.rule, _analyze(S.indices, budget)
    if res.finite:
        return report(True, reason='finitely many blocks')
    if isinstance(rule, explicit):
        return report(res.finite, res.upper, res.lower, res.convergent, 'blocks shifted from their indices')
    if isinstance(rule, geometric):
        if res.finite is False:
            return report(False, (rule.share, 1), (0, 1), False, 'infinitely many blocks of growth {!s}'.format(rule.factor))
        return report(reason='blocks over an undecided index set')
    if isinstance(rule, polynomial):
        upper = 0, min(1, rule.degree * res.upper[1])
        lower = 0, min(1, rule.degree * res.lower[1])
        return report(res.finite, upper, lower, res.convergent, 'polynomial blocks of degree {:d}'.format(rule.degree))
    return report(res.finite, reason='coarsened blocks')

def _analyze_subsequence(S, budget):
    inner, positions = _analyze(S.inner, budget), _analyze(S.positions, budget)
    if inner.finite or positions.finite:
        return report(True, reason='subsequence of a finite set')
    finite = False if inner.finite is False and positions.finite is False else None
    if inner.upper[0] == inner.upper[1] == inner.lower[0] == inner.lower[1]:
        d = inner.upper[0]
        upper = d * positions.upper[0], d * positions.upper[1]
        lower = d * positions.lower[0], d * positions.lower[1]
    else:
        upper, lower = (0, inner.upper[1]), (0, inner.lower[1])
    return report(finite, upper, lower, True if inner.convergent else None, 'subsequence')

def _nonempty(S, res):
    return res.finite is False or (isinstance(S, finite) and bool(S.elements))

def _analyze_grid(S, budget):
    columns, rows = _analyze(S.columns, budget), _analyze(S.rows, budget)
    if columns.finite and rows.finite:
        return report(True, reason='finitely many cells')
    nonempty = _nonempty(S.columns, columns) and _nonempty(S.rows, rows)
    if columns.finite or rows.finite:
        return report(False if nonempty else None, (0, 0), (0, 0), True, 'finitely many columns or rows')
    upper = 0, min(columns.upper[1], rows.upper[1])
    lower = max(0, columns.lower[0] + rows.lower[0] - 1), min(columns.lower[1], rows.lower[1])
    return report(False if nonempty else None, upper, lower, None, 'cells of infinitely many columns and rows')

def _analyze_sparse(S, budget):
    return report(False, (0, 0), (0, 0), True, 'geometrically sparse' if isinstance(S, branch) else 'polynomial values')

def _analyze_intersection(S, budget):
    items = _conjuncts(S)
    reports = [_analyze(item, budget) for item in items]
    if any(res.finite for res in reports):
        return report(True, reason='a conjunct is finite')

    # pairs of structural supersets that rewrite into a finite set
    for a, b in itertools.combinations(items, 2):
        for x, y in itertools.product(_supersets(a), _supersets(b)):
            res = _intersect(x, y)
            if not isinstance(res, intersection) and _analyze(res, budget).finite:
                return report(True, reason='{:s} and {:s} meet finitely'.format(x.type, y.type))
            continue
        continue

    # intersections distribute over a union conjunct
    for index, item in enumerate(items):
        if isinstance(item, union):
            rest = items[:index] + items[index+1:]
            left, right = (_analyze(simplify(_conjoin(rest + [part])), budget) for part in (item.left, item.right))
            return _union_report(left, right, 'distributed over a union')
        continue

    # generic bounds from the conjuncts
    count = len(reports)
    lower = sum(res.lower[0] for res in reports) - (count - 1)
    upper = max(res.upper[0] + sum(other.lower[0] for other in reports if other is not res) - (count - 1) for res in reports)
    res = report(None, (max(0, upper), min(res.upper[1] for res in reports)), (max(0, lower), min(res.lower[1] for res in reports)), True if any(res.convergent for res in reports) else None, 'intersection')

    # removing sets that meet the positive part thinly
    positives = [item for item in items if not isinstance(item, complement)]
    negatives = [item.inner for item in items if isinstance(item, complement)]
    if not (positives and negatives):
        return res
    base = simplify(_conjoin(positives))
    whole = _analyze(base, budget)
    removed = [_analyze(simplify(intersection(base, item)), budget) for item in negatives]
    finite = whole.finite if all(item.finite for item in removed) else (True if whole.finite else None)
    if all(item.upper[1] == 0 for item in removed):
        upper, lower = whole.upper, whole.lower
    else:
        cut = min(1, sum(item.upper[1] for item in removed))
        upper, lower = (max(0, whole.upper[0] - cut), whole.upper[1]), (max(0, whole.lower[0] - cut), whole.lower[1])
    if whole.convergent:
        convergent = True
    elif whole.convergent is False and all(item.convergent for item in removed):
        convergent = False
    else:
        convergent = None
    return res.meet(report(finite, upper, lower, convergent, 'removal of thin sets'))

_rules = {
    union: _analyze_union,
    intersection: _analyze_intersection,
    complement: _analyze_complement,
    blocks: _analyze_blocks,
    subsequence: _analyze_subsequence,
    grid: _analyze_grid,
    branch: _analyze_sparse,
    poly: _analyze_sparse,
}

@utils.memoize
def _analyze(S, budget):
    if budget <= 0:
        Log.debug('analyze : {:s} : recursion budget exhausted'.format(S.type))
        return report(reason='budget exhausted')
    res = _periodic(S)
    if res is not None:
        start, period, residues = res
        d = Fraction(len(residues), period)
        return report(not residues, (d, d), (d, d), not residues, 'eventually periodic with period {:d}'.format(period))
    rule = _rules.get(S.__class__)
    if rule is None:
        return report(reason='no rule for {:s}'.format(S.type))
    return rule(S, budget - 1)

def analyze(S):
    '''Return a conservative structure report for ``S``'''
    return _analyze(simplify(_check(S, 'analyze')), Config.natset.budget)

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
    import random
    import idealim.natset as natset
    from idealim import config, error

    doubling = natset.geometric(1, 2)

    ### structures
    @TestCase
    def structure_geometric_endpoints():
        if [doubling.endpoint(i) for i in range(6)] == [1, 2, 4, 8, 16, 32]:
            raise Success

    @TestCase
    def structure_geometric_rounding():
        res = natset.geometric(1, Fraction(3, 2))
        if [res.endpoint(i) for i in range(6)] == [1, 2, 3, 5, 8, 12]:
            raise Success

    @TestCase
    def structure_polynomial_endpoints():
        res = natset.polynomial([0, 0, 1])
        if [res.endpoint(i) for i in range(5)] == [1, 2, 4, 9, 16]:
            raise Success

    @TestCase
    def structure_explicit_unit_steps():
        res = natset.explicit([3, 10])
        if [res.endpoint(i) for i in range(4)] == [3, 10, 11, 12]:
            raise Success

    @TestCase
    def structure_block_lookup():
        if doubling.block(0) is None and doubling.block(1) == 0 and doubling.block(5) == 2 and doubling.block(1023) == 9 and doubling.block(1024) == 10:
            raise Success

    @TestCase
    def structure_coarsening_endpoints():
        res = natset.coarsening(doubling, natset.arith(1, 2))
        if [res.endpoint(i) for i in range(4)] == [2, 8, 32, 128]:
            raise Success

    @TestCase
    def structure_rejects_factor():
        try:
            natset.geometric(1, 1)
        except error.StructuralError:
            raise Success

    @TestCase
    def structure_json_offset():
        res = doubling.json()
        if res == {'kind': 'geometric', 'n1': 1, 'factor': '2/1', 'offset': 1} and natset.structures.fromjson(res) == doubling:
            raise Success

    ### membership
    @TestCase
    def member_odd():
        if natset.member(natset.arith(1, 2), 7):
            raise Success

    @TestCase
    def member_complement_point():
        if not natset.member(natset.complement(natset.finite([3])), 3):
            raise Success

    @TestCase
    def member_blocks_even_index():
        if natset.member(natset.blocks(doubling, natset.arith(0, 2)), 5):
            raise Success

    @TestCase
    def member_depth_limit():
        res = natset.cofinite()
        for _ in range(config.defaults.natset.max_depth + 1):
            res = natset.blocks(doubling, res)
        try:
            natset.member(res, 5)
        except error.StructuralError:
            raise Success

    @TestCase
    def member_rejects_negative():
        try:
            natset.member(natset.cofinite(), -1)
        except error.InputError:
            raise Success

    ### prefix
    @TestCase
    def prefix_finite():
        if natset.prefix(natset.finite([2, 5]), 4) == [2]:
            raise Success

    @TestCase
    def prefix_arith():
        if natset.prefix(natset.arith(0, 3), 10) == [0, 3, 6, 9]:
            raise Success

    @TestCase
    def prefix_intersection():
        if natset.prefix(natset.intersection(natset.arith(0, 2), natset.arith(0, 3)), 13) == [0, 6, 12]:
            raise Success

    ### brute force semantics
    def semantic(S, n):
        if isinstance(S, natset.finite):
            return n in S.elements
        if isinstance(S, natset.cofinite):
            return n not in S.excluded
        if isinstance(S, natset.arith):
            return n >= S.first and (n - S.first) % S.step == 0
        if isinstance(S, natset.blocks):
            ends = [S.rule.n1]
            while ends[-1] <= n:
                ends.append(max(ends[-1] + 1, -(-(S.rule.factor * ends[-1]).numerator // (S.rule.factor * ends[-1]).denominator)))
            index = [i for i in range(len(ends) - 1) if ends[i] <= n < ends[i+1]]
            return bool(index) and semantic(S.indices, index[0])
        if isinstance(S, natset.union):
            return semantic(S.left, n) or semantic(S.right, n)
        if isinstance(S, natset.intersection):
            return semantic(S.left, n) and semantic(S.right, n)
        if isinstance(S, natset.complement):
            return not semantic(S.inner, n)
        if isinstance(S, natset.branch):
            text = natset.binary_string_decode(n)
            extended = S.bits + '1' + '0' * (len(text) + 1)
            return extended[:len(text)] == text
        raise NotImplementedError(S)

    def randomset(rng, depth=2):
        choice = rng.randrange(7 if depth > 0 else 4)
        if choice == 0:
            return natset.finite(rng.sample(range(60), rng.randrange(6)))
        if choice == 1:
            return natset.cofinite(rng.sample(range(60), rng.randrange(6)))
        if choice == 2:
            return natset.arith(rng.randrange(10), rng.randrange(1, 7))
        if choice == 3:
            return natset.branch(''.join(rng.choice('01') for _ in range(rng.randrange(1, 5))))
        if choice == 4:
            return natset.blocks(natset.geometric(rng.randrange(1, 4), Fraction(rng.randrange(3, 7), 2)), randomset(rng, depth - 1))
        if choice == 5:
            return rng.choice([natset.union, natset.intersection])(randomset(rng, depth - 1), randomset(rng, depth - 1))
        return natset.complement(randomset(rng, depth - 1))

    @TestCase
    def member_matches_semantics():
        rng = random.Random(7)
        for _ in range(40):
            S = randomset(rng)
            for n in rng.sample(range(10**4), 50):
                if natset.member(S, n) != semantic(S, n):
                    raise Failure(S, n)
                continue
            continue
        raise Success

    @TestCase
    def prefix_matches_member():
        rng = random.Random(11)
        for _ in range(40):
            S, N = randomset(rng), rng.randrange(1, 600)
            if natset.prefix(S, N) != [n for n in range(N) if natset.member(S, n)]:
                raise Failure(S, N)
            continue
        raise Success

    @TestCase
    def member_de_morgan():
        rng = random.Random(13)
        for _ in range(40):
            A, B = randomset(rng), randomset(rng)
            left = natset.complement(natset.union(A, B))
            right = natset.intersection(natset.complement(A), natset.complement(B))
            if any(natset.member(left, n) != natset.member(right, n) for n in rng.sample(range(10**4), 40)):
                raise Failure(A, B)
            continue
        raise Success

    @TestCase
    def rank_and_select():
        sets = [natset.arith(3, 4), natset.branch('01'), natset.poly([1, 0, 2]), natset.cofinite([0, 4, 5]), natset.blocks(doubling, natset.arith(1, 3)), natset.subsequence(natset.arith(0, 3), natset.arith(1, 2))]
        for S in sets:
            res = natset.prefix(S, 3000)
            if any(natset.select(S, i) != n for i, n in enumerate(res[:20])):
                raise Failure(S)
            if any(natset.rank(S, n) != i for i, n in enumerate(res[:20])):
                raise Failure(S)
            continue
        raise Success

    ### coding bijections
    @TestCase
    def pair_origin():
        if natset.pair_encode(0, 0) == 0:
            raise Success

    @TestCase
    def pair_round_trip():
        if natset.pair_decode(natset.pair_encode(7, 11)) == (7, 11):
            raise Success

    @TestCase
    def pair_first_codes_distinct():
        if len(set(natset.pair_decode(n) for n in range(6))) == 6:
            raise Success

    @TestCase
    def pair_overflow():
        try:
            natset.pair_encode(config.defaults.natset.max_integer, 1)
        except error.ArithmeticError:
            raise Success

    @TestCase
    def binary_code_empty():
        if natset.binary_string_code('') == 0:
            raise Success

    @TestCase
    def binary_code_round_trip():
        if natset.binary_string_decode(natset.binary_string_code('011')) == '011':
            raise Success

    @TestCase
    def binary_code_short_strings():
        strings = ['', '0', '1', '00', '01', '10', '11']
        if sorted(natset.binary_string_code(s) for s in strings) == list(range(7)):
            raise Success

    ### branches
    @TestCase
    def branch_common_prefixes():
        res = natset.simplify(natset.intersection(natset.branch('010'), natset.branch('011')))
        codes = [natset.binary_string_code(s) for s in ('', '0', '01')]
        if isinstance(res, natset.finite) and list(res.elements) == codes:
            raise Success

    @TestCase
    def branch_is_injective():
        if natset.branch('0') != natset.branch('01') and natset.prefix(natset.branch('0'), 200) != natset.prefix(natset.branch('01'), 200):
            raise Success

    ### normal forms
    @TestCase
    def simplify_nested_progressions():
        res = natset.simplify(natset.subsequence(natset.subsequence(natset.arith(0, 2), natset.arith(1, 2)), natset.arith(0, 2)))
        if res == natset.arith(2, 8):
            raise Success

    @TestCase
    def simplify_follows_max_period():
        S = natset.intersection(natset.arith(0, 4), natset.arith(2, 6))
        res = config.defaults.natset.max_period
        config.defaults.natset.max_period = 5
        try:
            bounded = natset.simplify(S)
        finally:
            config.defaults.natset.max_period = res
        if isinstance(bounded, natset.intersection) and natset.simplify(S) == natset.arith(8, 12):
            raise Success

    @TestCase
    def simplify_complement_of_blocks():
        S = natset.blocks(doubling, natset.arith(0, 2))
        res = natset.simplify(natset.complement(S))
        if all(natset.member(res, n) != natset.member(S, n) for n in range(2000)):
            raise Success

    @TestCase
    def simplify_coarsened_blocks():
        J, K = natset.arith(1, 2), natset.arith(0, 3)
        coarse = natset.coarsening(doubling, J)
        res = natset.simplify(natset.intersection(natset.blocks(coarse, K), natset.blocks(doubling, J)))
        expected = natset.blocks(doubling, natset.arith(1, 6))
        if res == expected and natset.prefix(res, 5000) == natset.prefix(natset.intersection(natset.blocks(coarse, K), natset.blocks(doubling, J)), 5000):
            raise Success

    @TestCase
    def simplify_complement_of_superset():
        S = natset.subsequence(natset.branch('01'), natset.arith(0, 2))
        res = natset.simplify(natset.intersection(natset.complement(natset.branch('01')), S))
        if res == natset.finite():
            raise Success

    ### analysis
    @TestCase
    def analyze_evens():
        res = natset.analyze(natset.arith(0, 2))
        if res.finiteness is config.finiteness.Infinite and res.density.exact == Fraction(1, 2):
            raise Success

    @TestCase
    def analyze_finite():
        res = natset.analyze(natset.finite([1, 2, 3]))
        if res.finiteness is config.finiteness.Finite and res.density.exact == 0:
            raise Success

    @TestCase
    def analyze_doubling_blocks():
        res = natset.analyze(natset.blocks(doubling, natset.arith(0, 2)))
        if res.finiteness is config.finiteness.Infinite and res.density.kind == 'bounds' and res.density.hi == 1:
            raise Success

    @TestCase
    def analyze_removal_of_thin_sets():
        S = natset.intersection(natset.branch('0'), natset.complement(natset.branch('1')))
        res = natset.analyze(S)
        if res.finiteness is config.finiteness.Infinite and res.density.exact == 0 and res.reciprocal == 'converges':
            raise Success

    @TestCase
    def analyze_squares_converge():
        res = natset.analyze(natset.poly([0, 0, 1]))
        if res.finiteness is config.finiteness.Infinite and res.reciprocal == 'converges':
            raise Success

    @TestCase
    def analyze_grid_column():
        res = natset.analyze(natset.grid(natset.finite([2])))
        if res.finiteness is config.finiteness.Infinite and res.density.exact == 0 and res.reciprocal == 'converges':
            raise Success

    @TestCase
    def analyze_agrees_with_prefix():
        sets = [natset.intersection(natset.arith(1, 3), natset.complement(natset.arith(0, 2))), natset.union(natset.finite([3, 8]), natset.arith(5, 7)), natset.complement(natset.cofinite([1, 9])), natset.intersection(natset.arith(0, 4), natset.arith(2, 4))]
        N = 10**6
        for S in sets:
            res = natset.analyze(S)
            count = len(natset.prefix(S, N))
            if res.finite and count != len(natset.prefix(S, 10**3)):
                raise Failure(S)
            d = res.density.exact
            if d is not None and abs(Fraction(count, N) - d) > Fraction(10, 1000):
                raise Failure(S)
            continue
        raise Success

    @TestCase
    def analyze_unknown_is_allowed():
        res = natset.analyze(natset.subsequence(natset.blocks(natset.coarsening(doubling, natset.arith(0, 3)), natset.arith(0, 2)), natset.branch('1')))
        if res.finiteness in (config.finiteness.Finite, config.finiteness.Infinite, config.finiteness.Unknown):
            raise Success

    ### serialization
    @TestCase
    def json_tagged_objects():
        S = natset.blocks(doubling, natset.union(natset.arith(1, 2), natset.finite([0])))
        res = S.json()
        if res['type'] == 'blocks' and res['rule']['kind'] == 'geometric' and res['indices']['left'] == {'type': 'arith', 'first': 1, 'step': 2} and natset.fromjson(res) == S:
            raise Success

    @TestCase
    def json_rejects_unsorted():
        try:
            natset.fromjson({'type': 'finite', 'elements': [3, 1]})
        except error.SerializationError:
            raise Success

if __name__ == '__main__':
    results = []
    for t in TestCaseList:
        results.append( t() )
    sys.exit(0 if all(results) else 1)
