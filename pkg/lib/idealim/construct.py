"""Constructions built on the block witness of an ideal.

Everything here returns symbolic objects from the other modules: natsets for
the (I-)almost disjoint families and the Cantor schemes, sequences for the
c0 family, the prescribed cluster sets and the interval embedding.
"""
import sys,math,random,itertools
from fractions import Fraction
from . import config,error,utils,natset,ideals,sequences,cluster
Config = config.defaults
Log = Config.log.getChild('construct')

__all__ = 'seed,scheme,surjection,ad_set,i_ad_set,cantor_scheme,c0_family,with_cluster_set,family_with_cluster_set,interval_embedding,rational_enumeration,seeds,truncation_error,manifest'.split(',')

class seed(object):
    '''Finite 0-1 string indexing a member of an almost disjoint family'''
    type = 'seed'
    def __init__(self, bits):
        if isinstance(bits, seed):
            bits = bits.bits
        if not isinstance(bits, str) or not bits or any(ch not in '01' for ch in bits):
            raise error.InputError(self, 'seed', 'expected a non-empty string of 0 and 1 : {!r}'.format(bits))
        self.bits = bits
    def __eq__(self, other):
        return isinstance(other, seed) and self.bits == other.bits
    def __hash__(self):
        return hash(self.bits)
    def __repr__(self):
        return 'construct.seed({!r})'.format(self.bits)
    def json(self):
        return {'type': self.type, 'bits': self.bits}
    @classmethod
    def fromjson(cls, object):
        if not isinstance(object, dict) or object.get('type') != cls.type:
            raise error.SerializationError(object, 'expected a seed object')
        return cls(object['bits'])

def seeds(count, length):
    '''``count`` distinct seeds of the given length, chosen by the verification seed'''
    if length < 1 or count > 2**length:
        raise error.InputError((count, length), 'seeds', 'there are only {:d} seeds of length {:d}'.format(2**max(length, 0), length))
    rng = random.Random(Config.verify.seed)
    return [seed(format(n, '0{:d}b'.format(length))) for n in sorted(rng.sample(range(2**length), count))]

### almost disjoint families
def ad_set(s):
    '''Codes of the prefixes of the seed, the empty prefix included'''
    bits = seed(s).bits
    return natset.finite(natset.binary_string_code(bits[:length]) for length in range(len(bits) + 1))

def i_ad_set(I, s):
    '''Blocks of the witness of ``I`` indexed by the branch through the seed'''
    return natset.blocks(ideals.bp_witness(I), natset.branch(seed(s).bits))

### cantor schemes
def _indices(depth, root=None):
    '''Index sets of a scheme: the children of J are the even and odd positions of J'''
    res = {'': natset.cofinite() if root is None else root}
    for length in range(depth):
        for bits in [item for item in res if len(item) == length]:
            for ch in '01':
                res[bits + ch] = natset.simplify(natset.subsequence(res[bits], natset.arith(int(ch), 2)))
            continue
        continue
    return res

class scheme(object):
    """Nodes of a Cantor scheme of positive sets keyed by 0-1 strings"""
    type = 'scheme'
    def __init__(self, depth, nodes, witness=None):
        self.depth,self.nodes,self.witness = depth,dict(nodes),witness
        self.checks = []
    def leaves(self):
        return sorted(bits for bits in self.nodes if len(bits) == self.depth)
    def children(self, bits):
        return [self.nodes[bits + ch] for ch in '01' if bits + ch in self.nodes]
    def __len__(self):
        return len(self.nodes)
    def __repr__(self):
        return '<construct.scheme depth={:d} nodes={:d}>'.format(self.depth, len(self.nodes))
    def json(self):
        return {
            'type': self.type,
            'depth': self.depth,
            'witness': None if self.witness is None else self.witness.json(),
            'nodes': dict((bits, S.json()) for bits, S in sorted(self.nodes.items())),
        }
    @classmethod
    def fromjson(cls, object):
        if not isinstance(object, dict) or object.get('type') != cls.type:
            raise error.SerializationError(object, 'expected a scheme object')
        witness = object.get('witness')
        nodes = dict((bits, natset.fromjson(S)) for bits, S in object['nodes'].items())
        return cls(utils.natural(object['depth']), nodes, None if witness is None else natset.structures.fromjson(witness))

    def verify(self, I):
        '''Check positivity of every node, nesting of children and disjointness of siblings'''
        sample = Config.construct.sample
        for bits, S in sorted(self.nodes.items()):
            res = ideals.contains(I, S).verdict
            self.checks.append({'name': 'positive {:s}'.format(bits or 'root'), 'passed': res is config.verdict.NotIn})
            if res is not config.verdict.NotIn:
                raise error.PreconditionError(self, 'verify', 'node {!r} is {:s} for the ideal'.format(bits, res.label))
            if len(bits) == self.depth:
                continue
            left, right = self.children(bits)
            for child in (left, right):
                nested = all(S.member(n) for n in natset.prefix(child, sample))
                self.checks.append({'name': 'nested under {:s}'.format(bits or 'root'), 'passed': nested})
                if not nested:
                    raise error.PreconditionError(self, 'verify', 'a child of {!r} leaves its parent below {:d}'.format(bits, sample))
                continue
            meet = natset.simplify(natset.intersection(left, right))
            disjoint = natset._empty(meet) or not set(natset.prefix(left, sample)).intersection(natset.prefix(right, sample))
            self.checks.append({'name': 'disjoint below {:s}'.format(bits or 'root'), 'passed': disjoint})
            if not disjoint:
                raise error.PreconditionError(self, 'verify', 'the children of {!r} meet'.format(bits))
            continue
        return self

def cantor_scheme(I, X=None, depth=None, factor=None):
    '''Build and verify a scheme of I-positive sets of the given depth rooted at ``X``'''
    depth = Config.construct.depth if depth is None else depth
    if depth < 0:
        raise error.InputError(X, 'cantor_scheme', 'depth {:d} is negative'.format(depth))
    X = natset.cofinite() if X is None else natset.simplify(X)
    if natset._everything(X):
        W = ideals.bp_witness(I, factor)
        lift, root = (lambda J: natset.simplify(natset.blocks(W, J))), natset.cofinite()
    elif isinstance(X, natset.blocks) and ideals.certified(I, X.rule):
        W = X.rule
        lift, root = (lambda J: natset.simplify(natset.blocks(W, J))), X.indices
    else:
        W = None
        lift, root = (lambda J: natset.simplify(natset.subsequence(X, J))), natset.cofinite()
    nodes = dict((bits, lift(J)) for bits, J in _indices(depth, root).items())
    Log.info('cantor_scheme : {!r} : {:d} nodes of depth {:d}'.format(I, len(nodes), depth))
    return scheme(depth, nodes, W).verify(I)

class surjection(object):
    """Continuous map from the 0-1 branches onto a compact target, read on finite prefixes"""
    type = 'surjection'
    def __init__(self, target):
        target = cluster.canonical(target)
        if not isinstance(target, (cluster.points, cluster.interval, cluster.ternary_cantor)):
            raise error.NotRepresentable(target, 'surjection', 'no branch map onto a {:s}'.format(target.type))
        if isinstance(target, cluster.points) and not target.values:
            raise error.InputError(target, 'surjection', 'the target is empty')
        self.target = target

    @property
    def width(self):
        return max(0, (len(self.target.values) - 1).bit_length()) if isinstance(self.target, cluster.points) else None

    def branch_value(self, bits):
        '''Point of the target addressed by the finite prefix ``bits``'''
        T = self.target
        if isinstance(T, cluster.points):
            k = self.width
            index = int(bits[:k].ljust(k, '0'), 2) if k else 0
            return T.values[min(index, len(T.values) - 1)]
        base = 3 if isinstance(T, cluster.ternary_cantor) else 2
        digit = 2 if base == 3 else 1
        res = sum((Fraction(digit * int(ch), base**(i + 1)) for i, ch in enumerate(bits)), Fraction(0))
        return T.a + (T.b - T.a) * res

    def modulus(self, depth):
        '''Largest distance between a branch and the value of its prefix of the given length'''
        T = self.target
        if isinstance(T, cluster.points):
            return Fraction(0) if depth >= self.width else T.values[-1] - T.values[0]
        base = 3 if isinstance(T, cluster.ternary_cantor) else 2
        return (T.b - T.a) / base**depth

    def json(self):
        return {'type': self.type, 'target': self.target.json()}

### sequences
def _distinct(items, method):
    items = [seed(item) for item in items]
    if len(set(items)) != len(items):
        raise error.InputError(items, method, 'seeds must be distinct')
    return items

def c0_family(I, items):
    '''x_a = the values 3**-k on the k-th column of the branch through each seed, one per seed'''
    items = _distinct(items, 'c0_family')
    W = ideals.bp_witness(I)
    return [sequences.steps(W, sequences.columns(natset.branch(item.bits), 1, Fraction(1, 3)), 0) for item in items]

def _rule(target, depth):
    '''Value rule whose block classes realize ``target``'''
    if isinstance(target, cluster.points):
        return sequences.cyclic(target.values)
    if isinstance(target, cluster.interval):
        return sequences.dense(target.a, target.b)
    if isinstance(target, cluster.ternary_cantor):
        leaves, values = surjection(target), [None] * 2**depth
        for bits, J in _indices(depth).items():
            if len(bits) == depth:
                values[natset.select(J, 0)] = leaves.branch_value(bits)
            continue
        return sequences.cyclic(values)
    if isinstance(target, cluster.scaled_union):
        return sequences.scaled(target.scale, target.ratio, target.center, _rule(target.base, depth))
    if isinstance(target, cluster.union_of):
        return sequences.interleave([_rule(item, depth) for item in target.parts])
    raise error.NotRepresentable(target, 'with_cluster_set', 'no construction for this compact set')

def with_cluster_set(I, target, depth=None):
    '''A sequence whose I-cluster set is ``target`` (truncated at ``depth`` for Cantor sets)'''
    if not isinstance(target, cluster.type):
        raise error.InputError(target, 'with_cluster_set', 'expected a compact set descriptor')
    depth = Config.construct.depth if depth is None else depth
    target = cluster.canonical(target)
    if isinstance(target, cluster.points) and not target.values:
        raise error.InputError(target, 'with_cluster_set', 'the target is empty')
    W = ideals.bp_witness(I, Config.construct.growth)
    if target == cluster.points([0, 1]):
        return sequences.indicator(natset.blocks(W, natset.arith(1, 2)))
    rule = _rule(target, depth)
    return sequences.steps(W, rule, rule.value(0))

def family_with_cluster_set(I, items, target, depth=None):
    '''One sequence per seed, following the rule of ``target`` on the blocks of its I-almost disjoint set and 0 elsewhere'''
    items = _distinct(items, 'family_with_cluster_set')
    if not isinstance(target, cluster.type):
        raise error.InputError(target, 'family_with_cluster_set', 'expected a compact set descriptor')
    depth = Config.construct.depth if depth is None else depth
    target = cluster.canonical(target)
    if isinstance(target, cluster.points) and not target.values:
        raise error.InputError(target, 'family_with_cluster_set', 'the target is empty')
    W, rule = ideals.bp_witness(I), _rule(target, depth)
    Log.debug('family_with_cluster_set : {!r} : {:d} seeds onto {!r}'.format(I, len(items), target))
    return [sequences.steps(W, sequences.supported(natset.branch(item.bits), rule), 0) for item in items]

def truncation_error(target, depth=None):
    '''Hausdorff error of the construction of ``target`` at the given depth'''
    depth = Config.construct.depth if depth is None else depth
    target = cluster.canonical(target)
    if isinstance(target, cluster.ternary_cantor):
        return surjection(target).modulus(depth)
    if isinstance(target, cluster.scaled_union):
        return abs(target.scale) * truncation_error(target.base, depth)
    if isinstance(target, cluster.union_of):
        return max(truncation_error(item, depth) for item in target.parts)
    return Fraction(0)

def z_sequence(I):
    '''The rational enumeration of [-1, 1] spread over the classes of the fine witness'''
    return sequences.steps(ideals.bp_witness(I, Config.construct.growth), sequences.dense(-1, 1), 0)

def interval_embedding(x, I):
    '''n -> x(k) * z(l) for the pair (k, l) coded by n'''
    if not isinstance(x, sequences.type):
        raise error.InputError(x, 'interval_embedding', 'expected a sequence')
    return sequences.paired(x, z_sequence(I))

def rational_enumeration(a, b):
    '''Yield every rational of [a, b] exactly once, starting with a and b'''
    a, b = utils.rational(a), utils.rational(b)
    if a >= b:
        raise error.InputError((a, b), 'rational_enumeration', 'requires a < b')
    return (a + (b - a) * u for u in utils.units)

def manifest(construction, I, objects, **params):
    '''JSON document describing a construction and its results'''
    try:
        witness = ideals.bp_witness(I).json()
    except error.NoWitness:
        witness = None
    fields = dict((k, utils.fraction(v) if isinstance(v, Fraction) else v) for k, v in params.items())
    return {
        'construction': construction,
        'ideal': I.json(),
        'witness': witness,
        'params': fields,
        'objects': [item.json() for item in objects],
    }

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
    import idealim.construct as construct, idealim.cluster as cluster, idealim.sequences as sequences, idealim.natset as natset, idealim.ideals as ideals
    from idealim import config, error
    from fractions import Fraction

    Fin, DensityZero, Summable = ideals.fin(), ideals.density_zero(), ideals.summable()
    chain = [Fin, Summable, DensityZero]
    NotIn, In = config.verdict.NotIn, config.verdict.In

    ### seeds and almost disjoint sets
    @TestCase
    def seed_rejects_empty():
        try:
            construct.seed('')
        except error.InputError:
            raise Success

    @TestCase
    def seeds_distinct():
        res = construct.seeds(8, 3)
        if len(set(res)) == 8 and all(len(item.bits) == 3 for item in res) and res == construct.seeds(8, 3):
            raise Success

    @TestCase
    def ad_set_prefix_codes():
        if construct.ad_set('01') == natset.finite([0, 1, 4]):
            raise Success

    @TestCase
    def ad_sets_meet_finitely():
        res = natset.simplify(natset.intersection(construct.ad_set('0110'), construct.ad_set('0101')))
        if res == natset.finite([0, 1, 4]):
            raise Success

    @TestCase
    def i_ad_sets_almost_disjoint():
        for I in chain:
            A, B = construct.i_ad_set(I, '0110'), construct.i_ad_set(I, '0111')
            if ideals.contains(I, natset.intersection(A, B)).verdict is not In:
                raise Failure(I)
            if ideals.contains(I, A).verdict is not NotIn or ideals.contains(I, B).verdict is not NotIn:
                raise Failure(I)
            continue
        raise Success

    ### schemes
    @TestCase
    def scheme_node_count():
        res = construct.cantor_scheme(Fin, depth=6)
        if len(res) == 127 and len(res.leaves()) == 64 and all(item['passed'] for item in res.checks):
            raise Success

    @TestCase
    def scheme_leaves_disjoint():
        res = construct.cantor_scheme(DensityZero, depth=3)
        leaves = [set(natset.prefix(res.nodes[bits], 2000)) for bits in res.leaves()]
        if all(not (a & b) for a, b in itertools.combinations(leaves, 2)):
            raise Success

    @TestCase
    def scheme_under_restriction():
        W = natset.geometric(1, 2)
        I = ideals.restriction(Summable, natset.blocks(W, natset.arith(0, 2)))
        res = construct.cantor_scheme(I, depth=3)
        if len(res) == 15 and isinstance(res.witness, natset.coarsening):
            raise Success

    @TestCase
    def scheme_rejects_null_root():
        try:
            construct.cantor_scheme(DensityZero, natset.poly([0, 0, 1]), depth=2)
        except error.PreconditionError:
            raise Success

    @TestCase
    def scheme_json():
        res = construct.cantor_scheme(Fin, depth=2)
        document = res.json()
        if sorted(document['nodes']) == ['', '0', '00', '01', '1', '10', '11'] and construct.scheme.fromjson(document).nodes == res.nodes:
            raise Success

    ### surjections
    @TestCase
    def surjection_cantor():
        S = construct.surjection(cluster.ternary_cantor(0, 1))
        if S.branch_value('1') == Fraction(2, 3) and S.branch_value('01') == Fraction(2, 9) and S.modulus(2) == Fraction(1, 9):
            raise Success

    @TestCase
    def surjection_points():
        S = construct.surjection(cluster.points([0, Fraction(1, 2), 1]))
        if [S.branch_value(bits) for bits in ('00', '01', '10', '11')] == [0, Fraction(1, 2), 1, 1] and S.modulus(2) == 0 and S.modulus(1) == 1:
            raise Success

    ### sequences
    @TestCase
    def family_shape():
        x, y = construct.c0_family(Fin, ['01', '10'])
        if x.json()['rule']['support'] == {'type': 'branch', 'bits': '01'} and sequences.quotient_norm(sequences.combo([(1, x), (-1, y)]), Fin) == 1:
            raise Success

    @TestCase
    def family_rejects_duplicates():
        try:
            construct.c0_family(Fin, ['01', '01'])
        except error.InputError:
            raise Success

    @TestCase
    def family_prescribed_cluster_set():
        P = cluster.points([-1, Fraction(1, 2)])
        x, y = construct.family_with_cluster_set(Fin, ['01', '10'], P)
        if cluster.cluster_points_exact(x, Fin) == cluster.points([-1, 0, Fraction(1, 2)]) and sequences.quotient_norm(sequences.combo([(1, x), (-1, y)]), Fin) == 1:
            raise Success

    @TestCase
    def family_prescribed_combination():
        x, y = construct.family_with_cluster_set(DensityZero, ['0110', '0111'], cluster.points([-1, Fraction(1, 2)]))
        res = cluster.cluster_points_exact(sequences.combo([(2, x), (-1, y)]), DensityZero)
        if res == cluster.points([-2, Fraction(-1, 2), 0, 1]):
            raise Success

    @TestCase
    def family_prescribed_on_ad_sets():
        x, = construct.family_with_cluster_set(Summable, ['011'], cluster.interval(0, 2))
        A = construct.i_ad_set(Summable, '011')
        outside = [n for n in range(1, 5000) if not natset.member(A, n)]
        if all(x.eval(n) == 0 for n in outside) and cluster.cluster_points_exact(x, Summable) == cluster.interval(0, 2):
            raise Success

    @TestCase
    def target_indicator():
        x = construct.with_cluster_set(Fin, cluster.points([0, 1]))
        if isinstance(x, sequences.indicator) and cluster.cluster_points_exact(x, Fin) == cluster.points([0, 1]):
            raise Success

    @TestCase
    def target_points():
        target = cluster.points([0, Fraction(1, 2), 1])
        if all(cluster.cluster_points_exact(construct.with_cluster_set(I, target), I) == target for I in chain):
            raise Success

    @TestCase
    def target_interval():
        x = construct.with_cluster_set(Summable, cluster.interval(-1, 1))
        if cluster.cluster_points_exact(x, Summable) == cluster.interval(-1, 1):
            raise Success

    @TestCase
    def target_scaled_union():
        target = cluster.scaled_union(cluster.points([1]), 1, Fraction(1, 2))
        x = construct.with_cluster_set(DensityZero, target)
        if cluster.cluster_points_exact(x, DensityZero) == cluster.canonical(target):
            raise Success

    @TestCase
    def target_union():
        target = cluster.union_of([cluster.points([2]), cluster.interval(0, 1)])
        x = construct.with_cluster_set(Fin, target)
        if cluster.cluster_points_exact(x, Fin) == cluster.canonical(target):
            raise Success

    @TestCase
    def target_cantor_truncation():
        target = cluster.ternary_cantor(0, 1)
        res = cluster.cluster_points_exact(construct.with_cluster_set(Fin, target, depth=4), Fin)
        if len(res.values) == 16 and cluster.hausdorff_distance(target, res, Fraction(1, 1000)) <= construct.truncation_error(target, 4):
            raise Success

    @TestCase
    def target_empty():
        try:
            construct.with_cluster_set(Fin, cluster.points())
        except error.InputError:
            raise Success

    @TestCase
    def embedding_shape():
        x = construct.interval_embedding(sequences.constant(1), Fin)
        if isinstance(x, sequences.paired) and x.z.json()['rule'] == {'kind': 'dense', 'a': '-1/1', 'b': '1/1'}:
            raise Success

    @TestCase
    def enumeration_prefix():
        res = list(itertools.islice(construct.rational_enumeration(0, 1), 9))
        expected = [0, 1, Fraction(1, 2), Fraction(1, 3), Fraction(2, 3), Fraction(1, 4), Fraction(2, 5), Fraction(3, 5), Fraction(3, 4)]
        if res == expected:
            raise Success

    @TestCase
    def enumeration_distinct():
        res = list(itertools.islice(construct.rational_enumeration(-1, 1), 500))
        if res[:2] == [-1, 1] and len(set(res)) == 500 and all(-1 <= q <= 1 for q in res):
            raise Success

    @TestCase
    def manifest_document():
        res = construct.manifest('family', Fin, construct.c0_family(Fin, ['0', '1']), seeds='0,1')
        if res['construction'] == 'family' and res['ideal'] == {'type': 'fin'} and res['witness']['kind'] == 'geometric' and len(res['objects']) == 2:
            raise Success

if __name__ == '__main__':
    results = []
    for t in TestCaseList:
        results.append( t() )
    sys.exit(0 if all(results) else 1)
