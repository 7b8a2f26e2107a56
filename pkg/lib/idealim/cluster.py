"""Cluster sets of bounded sequences along an ideal.

Compact subsets of the reals are described by tagged descriptors (points,
interval, ternary_cantor, scaled_union, union_of). The exact cluster set of a
sequence is assembled from the components of its pieces and brought into a
canonical form so two descriptions of the same set compare equal. The prefix
oracle approximates the same set from the values x(n) for n in [N/2, N).
"""
import sys,math,bisect,json,functools
from fractions import Fraction
from . import config,error,utils,natset,ideals,sequences
Config = config.defaults
Log = Config.log.getChild('cluster')

__all__ = 'type,points,interval,ternary_cantor,scaled_union,union_of,canonical,net,hausdorff_distance,cluster_points_exact,cluster_points_prefix,cantor_like_check,invariance_check,agreement,outcome,report,fromjson'.split(',')

class descriptors(utils.definition):
    cache = {}

class type(object):
    """A compact subset of the reals"""
    type = None
    def json(self):
        raise NotImplementedError
    def bounds(self):
        '''Smallest closed interval holding the set, or None when empty'''
        raise NotImplementedError
    def net(self, epsilon):
        '''Finite list of points at Hausdorff distance at most ``epsilon`` from the set'''
        raise NotImplementedError

    def key(self):
        return json.dumps(self.json(), sort_keys=True)
    def __eq__(self, other):
        return isinstance(other, type) and self.key() == other.key()
    def __ne__(self, other):
        return not self.__eq__(other)
    def __hash__(self):
        return hash(self.key())
    def __repr__(self):
        return 'cluster.{:s}({:s})'.format(self.type, self.key())

@descriptors.define
class points(type):
    type = 'points'
    def __init__(self, values=()):
        self.values = tuple(sorted(set(map(utils.rational, values))))
    @property
    def empty(self):
        return not self.values
    def bounds(self):
        return (self.values[0], self.values[-1]) if self.values else None
    def net(self, epsilon):
        return list(self.values)
    def json(self):
        return {'type': self.type, 'values': [utils.fraction(v) for v in self.values]}
    @classmethod
    def fromjson(cls, object):
        return cls(object['values'])

@descriptors.define
class interval(type):
    type = 'interval'
    def __init__(self, a, b):
        self.a,self.b = utils.rational(a),utils.rational(b)
        if self.a > self.b:
            raise error.InputError(self, 'interval', 'endpoints {!s} > {!s}'.format(self.a, self.b))
    def bounds(self):
        return self.a, self.b
    def net(self, epsilon):
        count = math.floor((self.b - self.a) / epsilon)
        return [self.a + j * epsilon for j in range(count + 1)] + [self.b]
    def json(self):
        return {'type': self.type, 'a': utils.fraction(self.a), 'b': utils.fraction(self.b)}
    @classmethod
    def fromjson(cls, object):
        return cls(object['a'], object['b'])

@descriptors.define
class ternary_cantor(type):
    """The middle-thirds Cantor set affinely mapped onto [a, b]"""
    type = 'ternary_cantor'
    def __init__(self, a, b):
        self.a,self.b = utils.rational(a),utils.rational(b)
        if self.a > self.b:
            raise error.InputError(self, 'ternary_cantor', 'endpoints {!s} > {!s}'.format(self.a, self.b))
    def bounds(self):
        return self.a, self.b
    def intervals(self, depth):
        '''Left endpoints of the 2**depth intervals of the given construction depth'''
        res = [Fraction(0)]
        for d in range(1, depth + 1):
            step = Fraction(2, 3**d)
            res = [item for left in res for item in (left, left + step)]
        width = self.b - self.a
        return [self.a + width * left for left in res]
    def net(self, epsilon):
        width, depth = self.b - self.a, 0
        while width / 3**depth > epsilon:
            depth += 1
        length = width / 3**depth
        return [item for left in self.intervals(depth) for item in (left, left + length)]
    def json(self):
        return {'type': self.type, 'a': utils.fraction(self.a), 'b': utils.fraction(self.b)}
    @classmethod
    def fromjson(cls, object):
        return cls(object['a'], object['b'])

@descriptors.define
class scaled_union(type):
    """{center + scale * ratio**i * p : p in base, i >= 0}, together with center when include_zero"""
    type = 'scaled_union'
    def __init__(self, base, scale, ratio, center=0, include_zero=True):
        if not isinstance(base, type):
            raise error.InputError(self, 'scaled_union', 'base must be a compact set descriptor')
        self.base,self.scale,self.ratio = base,utils.rational(scale),utils.rational(ratio)
        self.center,self.include_zero = utils.rational(center),bool(include_zero)
        if not 0 < self.ratio < 1:
            raise error.InputError(self, 'scaled_union', 'ratio {!s} must lie strictly between 0 and 1'.format(self.ratio))
    def bounds(self):
        res = self.base.bounds()
        if res is None:
            return (self.center, self.center) if self.include_zero else None
        lo, hi = (self.scale * p for p in res)
        return self.center + min(0, lo, hi), self.center + max(0, lo, hi)
    def net(self, epsilon):
        res, bounds = [self.center], self.base.bounds()
        if bounds is None:
            return res
        extent, i = abs(self.scale) * max(map(abs, bounds)), 0
        while extent * self.ratio**i > epsilon:
            factor = self.scale * self.ratio**i
            res.extend(self.center + factor * p for p in self.base.net(epsilon / abs(factor)))
            i += 1
        return res
    def json(self):
        return {'type': self.type, 'base': self.base.json(), 'scale': utils.fraction(self.scale), 'ratio': utils.fraction(self.ratio), 'center': utils.fraction(self.center), 'include_zero': self.include_zero}
    @classmethod
    def fromjson(cls, object):
        return cls(descriptors.fromjson(object['base']), object['scale'], object['ratio'], object.get('center', '0/1'), object.get('include_zero', True))

@descriptors.define
class union_of(type):
    type = 'union_of'
    def __init__(self, parts):
        self.parts = tuple(parts)
        if not all(isinstance(item, type) for item in self.parts):
            raise error.InputError(self, 'union_of', 'parts must be compact set descriptors')
    def bounds(self):
        res = [item.bounds() for item in self.parts]
        res = [item for item in res if item is not None]
        return (min(lo for lo, _ in res), max(hi for _, hi in res)) if res else None
    def net(self, epsilon):
        return [p for item in self.parts for p in item.net(epsilon)]
    def json(self):
        return {'type': self.type, 'parts': [item.json() for item in self.parts]}
    @classmethod
    def fromjson(cls, object):
        return cls([descriptors.fromjson(item) for item in object['parts']])

def fromjson(object):
    return descriptors.fromjson(object)

### canonical forms
def _orbit(p, q, ratio):
    '''Whether q = p * ratio**m for some m >= 0'''
    if p == 0 or q == 0 or (p > 0) != (q > 0):
        return p == q
    while abs(p) > abs(q):
        p *= ratio
    return p == q

def _reduce(values, ratio):
    values = set(values)
    return [p for p in sorted(values) if not any(q != p and _orbit(q, p, ratio) for q in values)]

def _scaled(D):
    base = canonical(D.base)
    if D.scale == 0 or (isinstance(base, points) and not any(base.values)):
        return points([D.center]) if D.include_zero or (isinstance(base, points) and base.values) else points()
    if isinstance(base, points):
        values = [D.scale * p for p in base.values if p != 0]
        include = D.include_zero or len(values) < len(base.values)
        return scaled_union(points(_reduce(values, D.ratio)), 1, D.ratio, D.center, include)
    if isinstance(base, interval):
        lo, hi = sorted((D.scale * base.a, D.scale * base.b))
        if lo <= 0 <= hi:
            return interval(D.center + lo, D.center + hi)
        if lo > 0 and D.ratio * hi >= lo:
            return interval(D.center, D.center + hi)
        if hi < 0 and D.ratio * lo <= hi:
            return interval(D.center + lo, D.center)
        return scaled_union(interval(lo, hi), 1, D.ratio, D.center, D.include_zero)
    return scaled_union(base, D.scale, D.ratio, D.center, D.include_zero)

def _flatten(parts):
    for item in parts:
        item = canonical(item)
        if isinstance(item, union_of):
            for part in item.parts:
                yield part
        else:
            yield item
        continue
    return

def _within(bounds, intervals):
    return bounds is None or any(a <= bounds[0] and bounds[1] <= b for a, b in intervals)

def _merge(parts):
    values, spans, orbits, centers, others = set(), [], {}, set(), []
    for item in _flatten(parts):
        if isinstance(item, points):
            values.update(item.values)
        elif isinstance(item, interval):
            spans.append((item.a, item.b))
        elif isinstance(item, scaled_union) and isinstance(item.base, points) and item.scale == 1:
            orbits.setdefault((item.ratio, item.center), set()).update(item.base.values)
            if item.include_zero:
                centers.add((item.ratio, item.center))
        else:
            others.append(item)
        continue

    # points on an orbit are absorbed, points one step above an orbit extend it
    for (ratio, center), base in orbits.items():
        changed = True
        while changed:
            changed = False
            for v in sorted(values):
                d = v - center
                if d == 0 or any(_orbit(p, d, ratio) for p in base):
                    values.discard(v)
                    changed = True
                    if d == 0:
                        centers.add((ratio, center))
                elif d * ratio in base:
                    values.discard(v)
                    base.add(d)
                    changed = True
                continue
            continue
        base.intersection_update(_reduce(base, ratio))

    # overlapping intervals merge, and whatever lies inside one is dropped
    intervals = []
    for a, b in sorted(spans):
        if intervals and a <= intervals[-1][1]:
            intervals[-1] = intervals[-1][0], max(b, intervals[-1][1])
        else:
            intervals.append((a, b))
        continue
    res = [interval(a, b) for a, b in intervals]
    values = [v for v in values if not _within((v, v), intervals)]
    res += [points(values)] if values else []
    for (ratio, center), base in sorted(orbits.items()):
        item = scaled_union(points(base), 1, ratio, center, (ratio, center) in centers)
        if not _within(item.bounds(), intervals):
            res.append(item)
        continue
    res += [item for item in others if not _within(item.bounds(), intervals)]
    if not res:
        return points()
    return res[0] if len(res) == 1 else union_of(sorted(res, key=lambda item: item.key()))

def canonical(D):
    '''Rewrite ``D`` into the normal form shared by every description of the same set'''
    if isinstance(D, (interval, ternary_cantor)) and D.a == D.b:
        return points([D.a])
    if isinstance(D, scaled_union):
        return _scaled(D)
    if isinstance(D, union_of):
        return _merge(D.parts)
    return D

### distances
def net(D, epsilon):
    '''Sorted epsilon-net of a descriptor, or of a collection of rationals'''
    epsilon = utils.rational(epsilon)
    if epsilon <= 0:
        raise error.InputError(D, 'net', 'epsilon must be positive')
    res = D.net(epsilon) if isinstance(D, type) else list(map(utils.rational, D))
    return sorted(set(res))

def _directed(A, B):
    res = Fraction(0)
    for a in A:
        index = bisect.bisect_left(B, a)
        nearest = min(abs(a - B[i]) for i in (index - 1, index) if 0 <= i < len(B))
        res = max(res, nearest)
    return res

def hausdorff_distance(A, B, epsilon):
    '''Hausdorff distance between the epsilon-nets of ``A`` and ``B``'''
    A, B = net(A, epsilon), net(B, epsilon)
    if not A or not B:
        if A or B:
            raise error.InputError((A, B), 'hausdorff_distance', 'distance to the empty set is undefined')
        return Fraction(0)
    return max(_directed(A, B), _directed(B, A))

### exact cluster sets
def _descriptor(item):
    if item.kind == 'points':
        return points(item.values)
    if item.kind == 'interval':
        return interval(item.lo, item.hi)
    lo, hi = item.span
    base = points([lo]) if lo == hi else interval(lo, hi)
    return scaled_union(base, item.scale * item.ratio**item.first, item.ratio, item.center)

def cluster_points_exact(x, I):
    '''Return the canonical I-cluster set of ``x``'''
    try:
        res = sequences.clusters(x, I)
    except error.Indeterminate as e:
        partial = canonical(union_of(map(_descriptor, e.partial or [])))
        Log.info('cluster_points_exact : {:s} : undecided, partial result {!r}'.format(x.type, partial))
        raise error.Indeterminate(x, 'cluster_points_exact', e.message, bracket=e.bracket, partial=partial)
    return canonical(union_of(map(_descriptor, res)))

### prefix oracle
def _criteria(I, N, epsilon):
    '''Pairs (restriction set, predicate on the witness count) describing positivity for ``I``'''
    if isinstance(I, ideals.fin):
        return [(None, lambda count: count > Config.cluster.minimum)]
    if isinstance(I, ideals.base):
        least = epsilon * Config.cluster.density * N
        return [(None, lambda count: count >= least)]
    if isinstance(I, ideals.restriction):
        return [(I.to if S is None else natset.intersection(S, I.to), predicate) for S, predicate in _criteria(I.base, N, epsilon)]
    if isinstance(I, ideals.direct_sum):
        res = []
        for half, part in ((I.on_a, I.partition), (I.on_b, natset.complement(I.partition))):
            res.extend((part if S is None else natset.intersection(S, part), predicate) for S, predicate in _criteria(half, N, epsilon))
        return res
    raise error.InputError(I, 'cluster_points_prefix', 'no prefix criterion for this ideal')

def cluster_points_prefix(x, I, N, epsilon):
    '''Grid points of epsilon*Z within the bound of ``x`` that are witnessed often enough in [N/2, N)'''
    epsilon = utils.rational(epsilon)
    if not isinstance(N, int) or N < 1000:
        raise error.InputError(x, 'cluster_points_prefix', 'prefix length {!r} must be at least 1000'.format(N))
    if epsilon <= 0:
        raise error.InputError(x, 'cluster_points_prefix', 'epsilon {!s} must be positive'.format(epsilon))
    Log.info('cluster_points_prefix : {:s} : N={:d} epsilon={!s}'.format(x.type, N, epsilon))
    bound = x.bound
    grid = [j * epsilon for j in range(math.ceil(-bound / epsilon), math.floor(bound / epsilon) + 1)]
    res = set()
    for S, predicate in _criteria(I, N, epsilon):
        values = sorted(x.eval(n) for n in range(N // 2, N) if S is None or natset.member(S, n))
        for t in grid:
            count = bisect.bisect_left(values, t + epsilon) - bisect.bisect_right(values, t - epsilon)
            if predicate(count):
                res.add(t)
            continue
        continue
    return sorted(res)

### checks
class outcome(object):
    '''Result of a check: passed, and the reason it failed'''
    def __init__(self, passed, reason='', **detail):
        self.passed,self.reason,self.detail = bool(passed),reason,detail
    def __bool__(self):
        return self.passed
    def json(self):
        res = {'passed': self.passed, 'reason': self.reason}
        res.update((k, utils.fraction(v) if isinstance(v, Fraction) else v) for k, v in self.detail.items())
        return res
    def __repr__(self):
        return '<cluster.outcome {:s}{:s}>'.format('pass' if self.passed else 'fail', ' : ' + self.reason if self.reason else '')

def cantor_like_check(D, epsilon):
    '''Check that the epsilon-net of ``D`` has neither isolated points nor long connected runs'''
    epsilon = utils.rational(epsilon)
    items = net(D, epsilon)
    for i, p in enumerate(items):
        neighbours = [items[j] for j in (i - 1, i + 1) if 0 <= j < len(items)]
        if not any(abs(p - q) <= 3 * epsilon for q in neighbours):
            return outcome(False, 'isolated points', point=p)
        continue
    start = 0
    for i in range(1, len(items) + 1):
        if i == len(items) or items[i] - items[i - 1] > epsilon:
            if items[i - 1] - items[start] >= 10 * epsilon:
                return outcome(False, 'connected span', lo=items[start], hi=items[i - 1])
            start = i
        continue
    return outcome(True)

def invariance_check(x, y, I):
    '''Check that ``x`` and x - y share their I-cluster set when y converges to 0 along I'''
    try:
        norm = sequences.quotient_norm(y, I)
    except error.Indeterminate as e:
        raise error.PreconditionError(y, 'invariance_check', 'the quotient norm is undecided : {:s}'.format(e.message)) from e
    if norm != 0:
        raise error.PreconditionError(y, 'invariance_check', 'quotient norm {!s} is not zero'.format(norm))
    A = cluster_points_exact(x, I)
    B = cluster_points_exact(sequences.combo([(1, x), (-1, y)]), I)
    if A == B:
        return outcome(True)
    distance = hausdorff_distance(A, B, Config.cluster.resolution)
    return outcome(distance == 0, '' if distance == 0 else 'cluster sets differ', distance=distance)

def agreement(x, I, N, epsilon):
    '''Check that the prefix oracle lies within 2*epsilon of the exact cluster set'''
    epsilon = utils.rational(epsilon)
    exact = cluster_points_exact(x, I)
    approx = cluster_points_prefix(x, I, N, epsilon)
    if not approx:
        return outcome(False, 'the oracle found no cluster points', N=N)
    distance = hausdorff_distance(exact, approx, epsilon)
    return outcome(distance <= 2 * epsilon, '' if distance <= 2 * epsilon else 'oracle and exact cluster sets disagree', distance=distance)

class report(object):
    '''Exact cluster set when it can be computed, and the prefix approximation when requested'''
    def __init__(self, x, I, N=None, epsilon=None):
        self.exact,self.approx,self.reason,self.undecided = None,None,'',False
        try:
            self.exact = cluster_points_exact(x, I)
        except (error.Indeterminate, error.NotRepresentable) as e:
            Log.info('report : {:s} : no exact cluster set : {!s}'.format(x.type, e))
            self.reason,self.undecided = str(e),isinstance(e, error.Indeterminate)
        if N is not None:
            epsilon = utils.rational(epsilon)
            self.approx = {'epsilon': epsilon, 'prefix': N, 'points': cluster_points_prefix(x, I, N, epsilon)}
        methods = [name for name, item in (('exact', self.exact), ('prefix', self.approx)) if item is not None]
        self.method = '+'.join(methods) or 'none'

    def json(self):
        res = {'exact': None if self.exact is None else self.exact.json(), 'method': self.method}
        if self.approx is not None:
            res['approx'] = {'epsilon': utils.fraction(self.approx['epsilon']), 'prefix': self.approx['prefix'], 'points': [utils.fraction(t) for t in self.approx['points']]}
        if self.reason:
            res['reason'] = self.reason
        return res

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
    import idealim.cluster as cluster, idealim.sequences as sequences, idealim.natset as natset, idealim.ideals as ideals
    from idealim import error
    from fractions import Fraction

    Fin, DensityZero, Summable = ideals.fin(), ideals.density_zero(), ideals.summable()
    W = natset.geometric(1, 2)
    third = Fraction(1, 3)

    def family(bits):
        return sequences.steps(W, sequences.columns(natset.branch(bits), 1, third), 0)

    z = sequences.steps(natset.geometric(1, Fraction(2**15 + 1, 2**15)), sequences.dense(-1, 1), 0)

    ### canonical forms
    @TestCase
    def canonical_degenerate_interval():
        if cluster.canonical(cluster.interval(2, 2)) == cluster.points([2]):
            raise Success

    @TestCase
    def canonical_touching_copies():
        D = cluster.scaled_union(cluster.interval(third, 1), 1, third)
        if cluster.canonical(D) == cluster.interval(0, 1):
            raise Success

    @TestCase
    def canonical_separated_copies():
        D = cluster.scaled_union(cluster.interval(Fraction(1, 2), 1), 1, Fraction(1, 4))
        if cluster.canonical(D) == D:
            raise Success

    @TestCase
    def canonical_scale_into_base():
        D = cluster.scaled_union(cluster.points([1]), -2, third)
        if cluster.canonical(D) == cluster.scaled_union(cluster.points([-2]), 1, third):
            raise Success

    @TestCase
    def canonical_absorbs_orbit_points():
        D = cluster.union_of([cluster.points([0, Fraction(1, 9), 3]), cluster.scaled_union(cluster.points([1]), 1, third)])
        expected = cluster.scaled_union(cluster.points([3]), 1, third)
        if cluster.canonical(D) == expected:
            raise Success

    @TestCase
    def canonical_merges_orbits():
        D = cluster.union_of([cluster.scaled_union(cluster.points([1]), 2, third), cluster.scaled_union(cluster.points([-1, Fraction(2, 3)]), 1, third)])
        expected = cluster.scaled_union(cluster.points([-1, 2]), 1, third)
        if cluster.canonical(D) == expected:
            raise Success

    @TestCase
    def canonical_interval_swallows():
        D = cluster.union_of([cluster.interval(0, 1), cluster.points([Fraction(1, 2), 2]), cluster.interval(Fraction(1, 2), Fraction(3, 2)), cluster.scaled_union(cluster.points([1]), 1, third)])
        expected = cluster.union_of([cluster.interval(0, Fraction(3, 2)), cluster.points([2])])
        if cluster.canonical(D) == expected:
            raise Success

    @TestCase
    def canonical_center_from_base():
        D = cluster.scaled_union(cluster.points([0, 1]), 1, Fraction(1, 2), include_zero=False)
        E = cluster.scaled_union(cluster.points([1]), 1, Fraction(1, 2), include_zero=False)
        if cluster.canonical(D) != cluster.canonical(E) and cluster.canonical(D) == cluster.scaled_union(cluster.points([1]), 1, Fraction(1, 2), 0, True):
            raise Success

    @TestCase
    def descriptor_json():
        D = cluster.union_of([cluster.ternary_cantor(0, 1), cluster.scaled_union(cluster.points([1]), 1, third)])
        res = D.json()
        if res['parts'][1]['base'] == {'type': 'points', 'values': ['1/1']} and cluster.fromjson(res) == D:
            raise Success

    ### distances
    @TestCase
    def hausdorff_points():
        if cluster.hausdorff_distance(cluster.points([0, 1]), cluster.points([0]), Fraction(1, 10)) == 1:
            raise Success

    @TestCase
    def hausdorff_interval_net():
        res = cluster.hausdorff_distance(cluster.interval(0, 1), [Fraction(j, 10) for j in range(11)], Fraction(1, 100))
        if res <= Fraction(1, 20):
            raise Success

    @TestCase
    def hausdorff_interval_endpoints():
        res = cluster.hausdorff_distance(cluster.interval(0, 1), cluster.points([0, 1]), Fraction(1, 4))
        if Fraction(1, 4) <= res <= Fraction(1, 2):
            raise Success

    @TestCase
    def hausdorff_cantor_gap():
        epsilon = Fraction(1, 100)
        res = cluster.hausdorff_distance(cluster.ternary_cantor(0, 1), cluster.interval(0, 1), epsilon)
        if res >= Fraction(1, 6) - 2 * epsilon:
            raise Success

    @TestCase
    def net_scaled_union():
        D = cluster.scaled_union(cluster.points([1]), 1, third)
        if cluster.net(D, Fraction(1, 10)) == [0, Fraction(1, 9), third, 1]:
            raise Success

    @TestCase
    def cantor_net_size():
        if len(cluster.net(cluster.ternary_cantor(0, 1), Fraction(1, 3**6))) == 128:
            raise Success

    @TestCase
    def cantor_like_cantor():
        if cluster.cantor_like_check(cluster.ternary_cantor(0, 1), Fraction(1, 3**6)):
            raise Success

    @TestCase
    def cantor_like_interval():
        res = cluster.cantor_like_check(cluster.interval(0, 1), Fraction(1, 100))
        if not res and res.reason == 'connected span':
            raise Success

    @TestCase
    def cantor_like_isolated():
        res = cluster.cantor_like_check(cluster.points([0, 1]), Fraction(1, 100))
        if not res and res.reason == 'isolated points':
            raise Success

    ### exact cluster sets
    @TestCase
    def exact_indicator():
        if cluster.cluster_points_exact(sequences.indicator(natset.arith(0, 2)), Fin) == cluster.points([0, 1]):
            raise Success

    @TestCase
    def exact_family():
        expected = cluster.scaled_union(cluster.points([1]), 1, third)
        if all(cluster.cluster_points_exact(family('0110'), I) == expected for I in (Fin, DensityZero, Summable)):
            raise Success

    @TestCase
    def exact_dense():
        if cluster.cluster_points_exact(z, Fin) == cluster.interval(-1, 1):
            raise Success

    @TestCase
    def exact_combination():
        coefficients = [2, Fraction(-1, 2), 5]
        x = sequences.combo([(a, family(bits)) for a, bits in zip(coefficients, ['00', '01', '10'])])
        expected = cluster.scaled_union(cluster.points(coefficients), 1, third)
        if cluster.cluster_points_exact(x, DensityZero) == expected:
            raise Success

    @TestCase
    def exact_undecided_partial():
        x = sequences.indicator(natset.intersection(natset.branch('1'), natset.arith(1, 2)))
        try:
            cluster.cluster_points_exact(x, Fin)
        except error.Indeterminate as e:
            if e.partial == cluster.points([0]):
                raise Success

    @TestCase
    def exact_paired_unsupported():
        try:
            cluster.cluster_points_exact(sequences.paired(sequences.constant(1), z), Fin)
        except error.NotRepresentable:
            raise Success

    ### prefix oracle
    @TestCase
    def prefix_indicator():
        res = cluster.cluster_points_prefix(sequences.indicator(natset.arith(0, 2)), Fin, 1000, Fraction(1, 10))
        if res == [0, 1]:
            raise Success

    @TestCase
    def prefix_requires_length():
        try:
            cluster.cluster_points_prefix(sequences.constant(0), Fin, 999, Fraction(1, 10))
        except error.InputError:
            raise Success

    @TestCase
    def prefix_dense_agrees():
        res = cluster.hausdorff_distance(cluster.interval(-1, 1), cluster.cluster_points_prefix(z, Fin, 10**5, Fraction(1, 100)), Fraction(1, 100))
        if res <= Fraction(1, 25):
            raise Success

    @TestCase
    def prefix_restriction():
        I = ideals.restriction(Fin, natset.arith(0, 2))
        x = sequences.indicator(natset.arith(1, 2))
        if cluster.cluster_points_prefix(x, I, 2000, Fraction(1, 10)) == [0]:
            raise Success

    ### checks
    @TestCase
    def invariance_vanishing():
        y = sequences.steps(W, sequences.geometric(1, Fraction(1, 2)), 0)
        if cluster.invariance_check(family('01'), y, Fin):
            raise Success

    @TestCase
    def invariance_density_zero():
        y = sequences.indicator(natset.poly([0, 0, 1]))
        if cluster.invariance_check(sequences.indicator(natset.arith(0, 3)), y, DensityZero):
            raise Success

    @TestCase
    def invariance_precondition():
        try:
            cluster.invariance_check(family('01'), sequences.constant(1), Fin)
        except error.PreconditionError:
            raise Success

    @TestCase
    def report_fallback():
        res = cluster.report(sequences.paired(sequences.constant(1), z), Fin, 2000, Fraction(1, 10))
        if res.exact is None and res.method == 'prefix' and res.json()['approx']['prefix'] == 2000:
            raise Success

if __name__ == '__main__':
    results = []
    for t in TestCaseList:
        results.append( t() )
    sys.exit(0 if all(results) else 1)
