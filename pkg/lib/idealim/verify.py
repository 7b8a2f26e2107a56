"""Verification suites run against the three chain ideals.

Each suite is a function producing a ``suite`` of checks. A check records the
property it exercises, whether it passed, some detail for a report and the
command line that reproduces it. Checks whose questions the analyzer could
not decide are marked indeterminate instead of failed.
"""
import sys,json,random,itertools,functools
from fractions import Fraction
from . import config,error,utils,natset,ideals,sequences,cluster,construct
Config = config.defaults
Log = Config.log.getChild('verify')

__all__ = 'suite,suites,run,chain,shortname,periodic_samples'.split(',')

NotIn,In = config.verdict.NotIn,config.verdict.In

def chain():
    return [ideals.fin(), ideals.summable(), ideals.density_zero()]

_short = {'fin': 'fin', 'summable': 'summable', 'density_zero': 'density'}
def shortname(I):
    '''The command-line spelling of ``I``'''
    if I.type in _short:
        return _short[I.type]
    return "'{:s}'".format(json.dumps(I.json(), sort_keys=True))

class suite(object):
    """Checks collected under a suite name"""
    def __init__(self, name):
        self.name,self.checks = name,[]

    def check(self, name, invariant, reproduce, callable):
        '''Run ``callable`` returning (passed, detail) and record the result'''
        res = {'name': name, 'invariant': invariant, 'reproduce': reproduce}
        try:
            passed, detail = callable()
        except error.Indeterminate as e:
            Log.info('check : {:s} : undecided : {:s}'.format(name, e.message))
            passed, detail = False, {'reason': e.message}
            res['indeterminate'] = True
        except error.Base as e:
            Log.warning('check : {:s} : {!s}'.format(name, e))
            passed, detail = False, {'reason': str(e)}
        res['passed'], res['detail'] = bool(passed), _encode(detail)
        if not passed:
            Log.info('check : {:s} : failed : {!r}'.format(name, res['detail']))
        self.checks.append(res)
        return res['passed']

    @property
    def passed(self):
        return sum(1 for item in self.checks if item['passed'])
    @property
    def failed(self):
        return len(self.checks) - self.passed
    @property
    def indeterminate(self):
        return sum(1 for item in self.checks if item.get('indeterminate'))

    def json(self):
        return {'suite': self.name, 'checks': self.checks, 'passed': self.passed, 'failed': self.failed}

    def __repr__(self):
        return '<verify.suite {:s} passed={:d} failed={:d}>'.format(self.name, self.passed, self.failed)

def _encode(value):
    if isinstance(value, Fraction):
        return utils.fraction(value)
    if isinstance(value, dict):
        return dict((k, _encode(v)) for k, v in value.items())
    if isinstance(value, (list, tuple)):
        return [_encode(item) for item in value]
    if isinstance(value, cluster.type):
        return value.json()
    return value

class suites(utils.definition):
    cache = {}
    attribute = 'name'

def define(name):
    def decorator(fn):
        fn.name = name
        return suites.define(fn)
    return decorator

def _command(name, I, *args):
    return ' '.join(['idealim verify --suite', name, '--ideal', shortname(I)] + list(args))

def _options(seeds=None, depth=None):
    '''Command line arguments reproducing the seeds and the depth a suite was given'''
    res = [] if seeds is None else ['--seeds', ','.join(item.bits for item in seeds)]
    return res if depth is None else res + ['--depth', str(depth)]

def _prefix(N):
    return min(N, Config.cli.max_prefix)

### suites
@define('c0family')
def c0family(items, seeds=None, depth=None, **options):
    res = suite('c0family')
    codes = seeds or construct.seeds(8, 3 if depth is None else depth)
    reproduce = _options(seeds, depth)
    for I in items:
        family = construct.c0_family(I, codes)
        for (a, x), (b, y) in itertools.combinations(zip(codes, family), 2):
            def norm(x=x, y=y):
                value = sequences.quotient_norm(sequences.combo([(1, x), (-1, y)]), I)
                return value == 1, {'norm': value}
            res.check('norm {:s}-{:s} {:s}'.format(a.bits, b.bits, I.type), 'the quotient norm of x_a - x_b is 1', _command(res.name, I, *reproduce), norm)
        continue
    return res

@define('combination')
def combination(items, seeds=None, **options):
    res, codes = suite('combination'), seeds or construct.seeds(4, 3)
    rng = random.Random(Config.verify.seed)
    vectors = []
    while len(vectors) < 20:
        coefficients = [Fraction(rng.randint(-9, 9), rng.randint(1, 4)) for _ in codes]
        if all(coefficients):
            vectors.append(coefficients)
        continue
    for I in items:
        family = construct.c0_family(I, codes)
        for index, coefficients in enumerate(vectors):
            def equal(coefficients=coefficients, family=family):
                x = sequences.combo(list(zip(coefficients, family)))
                expected = cluster.canonical(cluster.scaled_union(cluster.points(coefficients), 1, Fraction(1, 3)))
                exact = cluster.cluster_points_exact(x, I)
                return exact == expected, {'coefficients': coefficients, 'exact': exact}
            res.check('vector {:d} {:s}'.format(index, I.type), 'the cluster set of a combination is the scaled union of its coefficients', _command(res.name, I, *_options(seeds)), equal)
        continue
    return res

@define('interval')
def interval(items, **options):
    res, N, epsilon = suite('interval'), _prefix(10**5), Fraction(1, 100)
    target = cluster.interval(-1, 1)
    for I in items:
        z = construct.z_sequence(I)
        def exact(z=z):
            value = cluster.cluster_points_exact(z, I)
            return value == target, {'exact': value}
        def oracle(z=z):
            distance = cluster.hausdorff_distance(target, cluster.cluster_points_prefix(z, I, N, epsilon), epsilon)
            return distance <= Fraction(1, 25), {'distance': distance, 'prefix': N}
        res.check('exact {:s}'.format(I.type), 'the rational enumeration clusters on [-1, 1]', _command(res.name, I), exact)
        res.check('oracle {:s}'.format(I.type), 'the prefix oracle lies within 1/25 of [-1, 1]', _command(res.name, I, '--prefix', str(N)), oracle)
    return res

@define('embedding')
def embedding(items, **options):
    res, N, epsilon = suite('embedding'), _prefix(10**5), Fraction(1, 25)
    evens = sequences.combo([(1, sequences.indicator(natset.arith(0, 2))), (Fraction(1, 2), sequences.constant(1))])
    for I in items:
        for label, x in (('constant', sequences.constant(1)), ('evens', evens)):
            F = construct.interval_embedding(x, I)
            def dense(x=x, F=F):
                norm = sequences.quotient_norm(x, I)
                found = cluster.cluster_points_prefix(F, I, N, epsilon)
                if not found:
                    return False, {'norm': norm, 'reason': 'no cluster points below the prefix'}
                distance = cluster._directed(cluster.net(cluster.interval(-norm, norm), epsilon), found)
                return distance <= epsilon, {'norm': norm, 'distance': distance}
            def supremum(x=x, F=F):
                norm, value = sequences.quotient_norm(x, I), sequences.prefix_sup(F, N)
                return abs(value - norm) <= Fraction(1, 100), {'norm': norm, 'prefix_sup': value}
            res.check('dense {:s} {:s}'.format(label, I.type), 'the cluster set of F(x) fills [-|x|, |x|]', _command(res.name, I), dense)
            res.check('sup {:s} {:s}'.format(label, I.type), 'the prefix supremum of F(x) approaches |x|', _command(res.name, I), supremum)
        continue
    return res

@define('almostdisjoint')
def almostdisjoint(items, seeds=None, depth=None, **options):
    res, codes = suite('almostdisjoint'), seeds or construct.seeds(20, 5)
    depth = 6 if depth is None else depth
    pairs = list(zip(codes[0::2], codes[1::2]))
    for I in items:
        for a, b in pairs:
            def disjoint(a=a, b=b):
                A, B = construct.i_ad_set(I, a), construct.i_ad_set(I, b)
                verdicts = [_verdict(I, S) for S in (natset.intersection(A, B), A, B)]
                plain = natset.analyze(natset.intersection(construct.ad_set(a), construct.ad_set(b))).finite
                return verdicts == [In, NotIn, NotIn] and plain is True, {'verdicts': [item.label for item in verdicts]}
            res.check('pair {:s}-{:s} {:s}'.format(a.bits, b.bits, I.type), 'seeds give positive sets with a null intersection', _command(res.name, I, *_options(seeds)), disjoint)
        def scheme(I=I):
            item = construct.cantor_scheme(I, depth=depth)
            return len(item) == 2**(depth + 1) - 1 and all(check['passed'] for check in item.checks), {'nodes': len(item), 'checks': len(item.checks)}
        res.check('scheme {:s}'.format(I.type), 'a scheme of depth {:d} has {:d} positive nested nodes'.format(depth, 2**(depth + 1) - 1), _command(res.name, I, '--depth', str(depth)), scheme)
    return res

def _verdict(I, S):
    return ideals.contains(I, S).verdict

def _null(I):
    '''Sequences converging to 0 along ``I``, paired with the sequences they may perturb'''
    W = ideals.bp_witness(I)
    res = [
        sequences.steps(W, sequences.geometric(1, Fraction(1, 2)), 0),
        sequences.steps(W, sequences.harmonic(-1), 0),
        sequences.indicator(natset.finite([0, 3, 7])),
    ]
    return res

@define('invariance')
def invariance(items, **options):
    res = suite('invariance')
    rng = random.Random(Config.verify.seed)
    for I in items:
        family = construct.c0_family(I, ['0110', '1', '01', '10'])
        xs = [
            family[0], family[1],
            sequences.combo([(2, family[2]), (-1, family[3])]),
            sequences.indicator(natset.arith(0, 3)),
            construct.z_sequence(I),
            construct.with_cluster_set(I, cluster.points([-1, Fraction(1, 2)])),
            construct.with_cluster_set(I, cluster.scaled_union(cluster.points([1]), 1, Fraction(1, 2))),
        ]
        pairs = list(itertools.product(range(len(xs)), _null(I)))
        if not isinstance(I, ideals.fin):
            pairs.append((3, sequences.indicator(natset.poly([0, 0, 1]))))
        for index, (i, y) in enumerate(rng.sample(pairs, 20)):
            def same(x=xs[i], y=y):
                outcome = cluster.invariance_check(x, y, I)
                return outcome.passed, outcome.json()
            res.check('pair {:d} {:s}'.format(index, I.type), 'x and x - y share their cluster set when y is null', _command(res.name, I), same)
        continue
    return res

@define('cantor')
def cantor(items, depth=None, **options):
    res, depth = suite('cantor'), 6 if depth is None else depth
    target = cluster.ternary_cantor(0, 1)
    for I in items:
        x = construct.with_cluster_set(I, target, depth=depth)
        def close(x=x):
            exact = cluster.cluster_points_exact(x, I)
            distance = cluster.hausdorff_distance(target, exact, Fraction(1, 1000))
            bound = Fraction(1, 3**depth) + Fraction(2, 1000)
            return distance <= bound, {'distance': distance, 'bound': bound}
        def shape(x=x):
            outcome = cluster.cantor_like_check(cluster.cluster_points_exact(x, I), Fraction(1, 3**depth))
            return outcome.passed, outcome.json()
        res.check('distance {:s}'.format(I.type), 'the truncated Cantor construction lies within 3**-{:d} of the Cantor set'.format(depth), _command(res.name, I, '--depth', str(depth)), close)
        res.check('shape {:s}'.format(I.type), 'the truncated Cantor cluster set has no isolated points at scale 3**-{:d}'.format(depth), _command(res.name, I, '--depth', str(depth)), shape)
    return res

def _image(c, D):
    '''The compact set ``D`` multiplied by the rational ``c``'''
    if isinstance(D, cluster.points):
        return cluster.points(c * p for p in D.values)
    if isinstance(D, cluster.interval):
        lo, hi = sorted((c * D.a, c * D.b))
        return cluster.interval(lo, hi)
    raise error.NotRepresentable(D, 'prescribed', 'no image of a {:s} under scaling'.format(D.type))

@define('prescribed')
def prescribed(items, seeds=None, depth=None, **options):
    res, codes = suite('prescribed'), seeds or construct.seeds(4, 3)
    targets = [cluster.points([-1, Fraction(1, 2)]), cluster.interval(0, 2)]
    rng = random.Random(Config.verify.seed)
    vectors = []
    while len(vectors) < 5:
        coefficients = [Fraction(rng.randint(-9, 9), rng.randint(1, 4)) for _ in codes]
        if all(coefficients):
            vectors.append(coefficients)
        continue
    reproduce = _options(seeds, depth)
    for I in items:
        for P in targets:
            family, largest = construct.family_with_cluster_set(I, codes, P, depth), max(abs(p) for p in P.bounds())
            for (a, x), (b, y) in itertools.combinations(zip(codes, family), 2):
                def norm(x=x, y=y, largest=largest):
                    value = sequences.quotient_norm(sequences.combo([(1, x), (-1, y)]), I)
                    return value == largest, {'norm': value, 'expected': largest}
                res.check('norm {:s}-{:s} {:s} {:s}'.format(a.bits, b.bits, P.type, I.type), 'the quotient norm of x_a - x_b is the largest modulus of the target', _command(res.name, I, *reproduce), norm)
            for index, coefficients in enumerate(vectors):
                def equal(coefficients=coefficients, family=family, P=P):
                    x = sequences.combo(list(zip(coefficients, family)))
                    expected = cluster.canonical(cluster.union_of([_image(c, P) for c in coefficients] + [cluster.points([0])]))
                    exact = cluster.cluster_points_exact(x, I)
                    return exact == expected, {'coefficients': coefficients, 'exact': exact, 'expected': expected}
                res.check('vector {:d} {:s} {:s}'.format(index, P.type, I.type), 'the cluster set of a combination is the union of the scaled targets and 0', _command(res.name, I, *reproduce), equal)
            continue
        continue
    return res

def periodic_samples(rng, count=200, period=40):
    '''Unions of residues modulo ``period``, at least one of them in the upper half'''
    for _ in range(count):
        chosen = rng.sample(range(period), rng.randrange(1, period // 2 + 1))
        if max(chosen) < period // 2:
            chosen[0] = rng.randrange(period // 2, period)
        yield functools.reduce(natset.union, [natset.arith(r, period) for r in sorted(set(chosen))])
    return

def _witnessed(I):
    '''``I`` with a restriction and a direct sum built from it'''
    evens = natset.arith(0, 2)
    res = [I, ideals.restrict(I, natset.blocks(ideals.bp_witness(I), evens))]
    if isinstance(I, ideals.base):
        res.append(ideals.direct_sum(ideals.fin(), I, evens))
    return res

@define('witness')
def witness(items, **options):
    res = suite('witness')
    for I in items:
        for J in _witnessed(I):
            rng = random.Random(Config.verify.seed)
            W = ideals.bp_witness(J)
            def positive(J=J, W=W, rng=rng):
                undecided = []
                for S in periodic_samples(rng):
                    verdict = _verdict(J, natset.blocks(W, S))
                    if verdict is not NotIn:
                        undecided.append({'indices': S.json(), 'verdict': verdict.label})
                    continue
                return not undecided, {'samples': 200, 'rejected': undecided[:4]}
            res.check('blocks {:s}'.format(J.type), 'every union of infinitely many witness blocks is positive', _command(res.name, J), positive)
        continue
    return res

@define('oracle')
def oracle(items, **options):
    res, N, epsilon = suite('oracle'), _prefix(10**5), Fraction(1, 50)
    targets = [
        cluster.points([0, Fraction(1, 2), 1]),
        cluster.interval(-1, 1),
        cluster.scaled_union(cluster.points([1]), 1, Fraction(1, 2)),
        cluster.ternary_cantor(0, 1),
    ]
    for I in items:
        for target in targets:
            x = construct.with_cluster_set(I, target, depth=4)
            def agree(x=x):
                outcome = cluster.agreement(x, I, N, epsilon)
                return outcome.passed, outcome.json()
            res.check('agreement {:s} {:s}'.format(target.type, I.type), 'the prefix oracle agrees with the exact cluster set within 2 epsilon', _command(res.name, I, '--prefix', str(N), '--epsilon', utils.fraction(epsilon)), agree)
        continue
    return res

order = 'c0family,combination,interval,embedding,almostdisjoint,invariance,cantor,prescribed,witness,oracle'.split(',')

def run(name='all', items=None, seeds=None, depth=None):
    '''Run the suite ``name`` (or every suite) for each ideal of ``items``, passing on the seeds and the depth'''
    items = chain() if items is None else list(items)
    names = order if name == 'all' else [name]
    res = []
    for item in names:
        try:
            fn = suites.lookup(item)
        except KeyError:
            raise error.InputError(item, 'run', 'no verification suite named {!r}'.format(item))
        Log.info('run : {:s} : {:d} ideals'.format(item, len(items)))
        res.append(fn(items, seeds=seeds, depth=depth))
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
    import idealim.verify as verify, idealim.ideals as ideals, idealim.natset as natset, idealim.construct as construct
    from idealim import error
    import random

    Fin = ideals.fin()

    @TestCase
    def suite_counts():
        res = verify.suite('demo')
        res.check('yes', 'holds', 'idealim', lambda: (True, {}))
        res.check('no', 'fails', 'idealim', lambda: (False, {'value': 1}))
        if (res.passed, res.failed) == (1, 1) and res.json()['checks'][1]['detail'] == {'value': 1}:
            raise Success

    @TestCase
    def suite_marks_indeterminate():
        def undecided():
            raise error.Indeterminate(None, 'demo', 'undecided')
        res = verify.suite('demo')
        res.check('maybe', 'holds', 'idealim', undecided)
        if res.failed == 1 and res.indeterminate == 1:
            raise Success

    @TestCase
    def suite_records_errors():
        def broken():
            raise error.InputError(None, 'demo', 'bad input')
        res = verify.suite('demo')
        res.check('broken', 'holds', 'idealim', broken)
        if res.failed == 1 and not res.indeterminate and 'bad input' in res.checks[0]['detail']['reason']:
            raise Success

    @TestCase
    def samples_reach_upper_half():
        rng = random.Random(1)
        for S in verify.periodic_samples(rng, 50):
            if not any(S.member(n) for n in range(20, 40)):
                raise Failure(S)
            continue
        raise Success

    @TestCase
    def shortname_base():
        if verify.shortname(ideals.density_zero()) == 'density' and verify.shortname(Fin) == 'fin':
            raise Success

    @TestCase
    def run_rejects_unknown():
        try:
            verify.run('nonesuch', [Fin])
        except error.InputError:
            raise Success

    @TestCase
    def c0family_fin():
        res, = verify.run('c0family', [Fin])
        if len(res.checks) == 28 and res.failed == 0:
            raise Success(res)

    @TestCase
    def c0family_seeds_depth():
        res, = verify.run('c0family', [Fin], seeds=construct.seeds(8, 5), depth=5)
        if len(res.checks) == 28 and res.failed == 0 and res.checks[0]['reproduce'].endswith('--depth 5'):
            raise Success(res)

    @TestCase
    def prescribed_fin():
        res, = verify.run('prescribed', [Fin])
        if len(res.checks) == 22 and res.failed == 0:
            raise Success(res)

    @TestCase
    def prescribed_density_zero():
        res, = verify.run('prescribed', [ideals.density_zero()], seeds=construct.seeds(3, 4))
        if len(res.checks) == 16 and res.failed == 0:
            raise Success(res)

    @TestCase
    def combination_fin():
        res, = verify.run('combination', [Fin])
        if len(res.checks) == 20 and res.failed == 0:
            raise Success(res)

    @TestCase
    def almostdisjoint_chain():
        res, = verify.run('almostdisjoint')
        if len(res.checks) == 33 and res.failed == 0:
            raise Success(res)

    @TestCase
    def invariance_chain():
        res, = verify.run('invariance')
        if len(res.checks) == 60 and res.failed == 0:
            raise Success(res)

    @TestCase
    def cantor_fin():
        res, = verify.run('cantor', [Fin])
        if res.failed == 0:
            raise Success(res)

    @TestCase
    def witness_chain():
        res, = verify.run('witness')
        if len(res.checks) == 9 and res.failed == 0:
            raise Success(res)

    @TestCase
    def interval_fin():
        res, = verify.run('interval', [Fin])
        if res.failed == 0:
            raise Success(res)

    @TestCase
    def report_shape():
        res, = verify.run('c0family', [Fin])
        check = res.json()['checks'][0]
        if set(check) >= {'name', 'invariant', 'passed', 'detail', 'reproduce'} and check['reproduce'].startswith('idealim verify --suite c0family'):
            raise Success

if __name__ == '__main__':
    import logging
    logging.root.setLevel(logging.INFO)

    results = []
    for t in TestCaseList:
        results.append( t() )
    sys.exit(0 if all(results) else 1)
