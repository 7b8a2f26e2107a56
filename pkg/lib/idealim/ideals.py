"""Ideals on the naturals and their three-valued membership oracle.

The base ideals are fin (finite sets), density_zero (sets of upper density 0)
and summable (sets whose reciprocal sum converges). They form a chain
fin < summable < density_zero. New ideals are made from them by restriction
to a set X, I|X = {S : S & X in I}, and by the direct sum over a partition
(A, ~A), {S : S & A in I_a and S & ~A in I_b}.

Every verdict is sound: In and NotIn are only answered when a structural rule
proves them, otherwise the answer is Unknown.
"""
import sys,itertools
from fractions import Fraction
from . import config,error,utils,natset
Config = config.defaults
Log = Config.log.getChild('ideals')

__all__ = 'ideal,decision,contains,dual_member,bp_witness,restrict,certified,fromjson'.split(',')

In,NotIn,Unknown = config.verdict.In,config.verdict.NotIn,config.verdict.Unknown

class decision(object):
    '''A verdict together with the rules that produced it'''
    def __init__(self, verdict, evidence=()):
        self.verdict,self.evidence = verdict,list(evidence)
    def __eq__(self, other):
        return isinstance(other, decision) and self.verdict is other.verdict
    def __ne__(self, other):
        return not self.__eq__(other)
    def __hash__(self):
        return hash(self.verdict.label)
    def because(self, reason):
        return decision(self.verdict, [reason] + self.evidence)
    def json(self):
        return {'verdict': self.verdict.label, 'evidence': list(self.evidence)}
    def __repr__(self):
        return '<ideals.decision {:s}{:s}>'.format(self.verdict.label, ' : ' + '; '.join(self.evidence) if self.evidence else '')

def _unknown(reason):
    return decision(Unknown, [reason])

class descriptors(utils.definition):
    cache = {}

class ideal(object):
    """An ideal on the naturals"""
    type = None

    def fields(self):
        return ()
    def key(self):
        return (self.type,) + tuple(item.key() if hasattr(item, 'key') else item for item in self.fields())
    def __eq__(self, other):
        return isinstance(other, ideal) and self.key() == other.key()
    def __ne__(self, other):
        return not self.__eq__(other)
    def __hash__(self):
        return hash(self.key())
    def __repr__(self):
        return 'ideals.{:s}({:s})'.format(self.type, ', '.join(map(repr, self.fields())))

    def decide(self, S, report, budget):
        '''Apply the rules particular to this ideal'''
        return _unknown('{:s} : no rule'.format(self.type))
    def contains(self, S):
        return contains(self, S)
    def json(self):
        return {'type': self.type}
    @classmethod
    def fromjson(cls, object):
        return cls()

class base(ideal):
    """One of the chain ideals decided directly from a structure report"""
    rank = None
    def decide(self, S, report, budget):
        res = self.verdict(report)
        if res is Unknown:
            return _unknown('{:s} : analyzer undecided ({:s})'.format(self.type, report.reason))
        return decision(res, ['{:s} : {:s}'.format(self.type, report.reason)])

@descriptors.define
class fin(base):
    type, rank = 'fin', 0
    def verdict(self, report):
        if report.finite is None:
            return Unknown
        return In if report.finite else NotIn

@descriptors.define
class summable(base):
    type, rank = 'summable', 1
    def verdict(self, report):
        if report.convergent is None:
            return Unknown
        return In if report.convergent else NotIn

@descriptors.define
class density_zero(base):
    type, rank = 'density_zero', 2
    def verdict(self, report):
        if report.upper[1] == 0:
            return In
        return NotIn if report.upper[0] > 0 else Unknown

@descriptors.define
class restriction(ideal):
    """The sets whose intersection with ``to`` belongs to ``base``"""
    type = 'restriction'
    def __init__(self, base, to):
        if not isinstance(base, ideal) or not isinstance(to, natset.type):
            raise error.DegenerateIdeal(self, 'restriction', 'requires an ideal and a natset')
        self.base,self.to = base,to
        res = contains(base, to)
        if res.verdict is In:
            raise error.DegenerateIdeal(self, 'restriction', 'the restricting set belongs to {!r} so every set would be a member'.format(base))
        if res.verdict is Unknown:
            Log.info('restriction : {:s} : properness is not proven for the restricting set'.format(base.type))
    def fields(self):
        return self.base, self.to
    def decide(self, S, report, budget):
        res = _contains(self.base, natset.simplify(natset.intersection(S, self.to)), budget)
        return res.because('restriction : decided on the intersection with the restricting set')
    def json(self):
        return {'type': self.type, 'base': self.base.json(), 'to': self.to.json()}
    @classmethod
    def fromjson(cls, object):
        return cls(fromjson(object['base']), natset.fromjson(object['to']))

@descriptors.define
class direct_sum(ideal):
    """Sets meeting ``partition`` in ``on_a`` and its complement in ``on_b``"""
    type = 'direct_sum'
    def __init__(self, on_a, on_b, partition):
        if not isinstance(on_a, ideal) or not isinstance(on_b, ideal) or not isinstance(partition, natset.type):
            raise error.DegenerateIdeal(self, 'direct_sum', 'requires two ideals and a natset')
        self.on_a,self.on_b,self.partition = on_a,on_b,partition
        self.other = natset.simplify(natset.complement(partition))
        for item in (partition, self.other):
            if natset.analyze(item).finite is not False:
                raise error.DegenerateIdeal(self, 'direct_sum', 'both parts of the partition must be proven infinite')
            continue
        if contains(on_a, partition).verdict is In and contains(on_b, self.other).verdict is In:
            raise error.DegenerateIdeal(self, 'direct_sum', 'both halves of the partition are members so every set would be a member')
    def fields(self):
        return self.on_a, self.on_b, self.partition
    @property
    def join(self):
        '''The larger of the two chain ideals, or None when a half is not a chain ideal'''
        if isinstance(self.on_a, base) and isinstance(self.on_b, base):
            return max((self.on_a, self.on_b), key=lambda item: item.rank)
        return None
    def decide(self, S, report, budget):
        a = _contains(self.on_a, natset.simplify(natset.intersection(S, self.partition)), budget)
        b = _contains(self.on_b, natset.simplify(natset.intersection(S, self.other)), budget)
        if a.verdict is In and b.verdict is In:
            return decision(In, ['direct_sum : both halves are members'] + a.evidence + b.evidence)
        for res in (a, b):
            if res.verdict is NotIn:
                return res.because('direct_sum : a half is positive')
            continue
        if self.join is not None:
            res = _contains(self.join, S, budget)
            if res.verdict is NotIn:
                return res.because('direct_sum : positive for the join {:s}'.format(self.join.type))
        return _unknown('direct_sum : halves undecided')
    def json(self):
        return {'type': self.type, 'on_a': self.on_a.json(), 'on_b': self.on_b.json(), 'partition': self.partition.json()}
    @classmethod
    def fromjson(cls, object):
        return cls(fromjson(object['on_a']), fromjson(object['on_b']), natset.fromjson(object['partition']))

def fromjson(object):
    '''Decode an ideal descriptor, refusing the non-constructive maximal ideals'''
    if isinstance(object, dict) and object.get('type') == 'maximal':
        raise error.DegenerateIdeal(object, 'fromjson', 'maximal ideals have no constructive membership oracle')
    return descriptors.fromjson(object)

### membership
def _generic(I, S, budget):
    '''Rules that hold in every ideal'''
    if isinstance(S, natset.union):
        a, b = _contains(I, S.left, budget), _contains(I, S.right, budget)
        if a.verdict is In and b.verdict is In:
            return decision(In, ['union : both sides are members'])
        for res in (a, b):
            if res.verdict is NotIn:
                return res.because('union : a side is positive')
            continue

    elif isinstance(S, natset.intersection):
        items = natset._conjuncts(S)
        for item in items:
            res = _contains(I, item, budget)
            if res.verdict is In:
                return res.because('intersection : a conjunct is a member')
            continue
        for index, item in enumerate(items):
            rest = natset._conjoin(items[:index] + items[index+1:])
            if _contains(I, rest, budget).verdict is NotIn and _contains(I, natset.simplify(natset.complement(item)), budget).verdict is In:
                return decision(NotIn, ['intersection : the other conjuncts are positive and this one is co-member'])
            if isinstance(item, natset.union):
                parts = [_contains(I, natset.simplify(natset.intersection(rest, part)), budget) for part in (item.left, item.right)]
                if all(res.verdict is In for res in parts):
                    return decision(In, ['intersection : both distributed parts are members'])
            continue

    elif isinstance(S, natset.complement):
        if _contains(I, S.inner, budget).verdict is In:
            return decision(NotIn, ['complement : the complemented set is a member'])

    elif isinstance(S, natset.subsequence):
        res = _contains(I, S.inner, budget)
        if res.verdict is In:
            return res.because('subsequence : the enclosing set is a member')

    return _unknown('{:s} : no generic rule'.format(S.type))

@utils.memoize
def _contains(I, S, budget):
    if budget <= 0:
        Log.debug('contains : {:s} : recursion budget exhausted'.format(I.type))
        return _unknown('budget exhausted')
    report = natset.analyze(S)
    if report.finite:
        return decision(In, ['finite set'])
    res = I.decide(S, report, budget - 1)
    if res.verdict is not Unknown:
        return res
    generic = _generic(I, S, budget - 1)
    return res if generic.verdict is Unknown else generic

@utils.memoize
def contains(I, S):
    '''Return the three-valued decision whether ``S`` belongs to the ideal ``I``'''
    if not isinstance(I, ideal):
        raise error.InputError(I, 'contains', 'expected an ideal descriptor')
    natset._check(S, 'contains')
    res = _contains(I, natset.simplify(S), Config.natset.budget)
    if res.verdict is Unknown:
        Log.debug('contains : {:s} : undecided for {:s}'.format(I.type, S.type))
    return res

def dual_member(I, S):
    '''Decide whether ``S`` belongs to the filter dual to ``I``'''
    return contains(I, natset.complement(S))

def restrict(I, X):
    return restriction(I, X)

### witnesses
def certified(I, W):
    '''Return whether every union of infinitely many blocks of ``W`` is known to be positive'''
    if isinstance(W, natset.coarsening):
        if certified(I, W.base):
            return True
    if isinstance(I, base):
        if isinstance(I, fin):
            return True
        return isinstance(W, natset.geometric) or (isinstance(W, natset.coarsening) and certified(I, W.base))
    if isinstance(I, restriction):
        X = natset.simplify(I.to)
        if isinstance(W, natset.coarsening) and isinstance(X, natset.blocks) and X.rule == W.base and X.indices == natset.simplify(W.indices):
            return certified(I.base, W.base)
        return contains(I.base, natset.complement(I.to)).verdict is In and certified(I.base, W)
    if isinstance(I, direct_sum):
        return I.join is not None and certified(I.join, W)
    return False

def bp_witness(I, factor=None):
    '''Return a block structure whose infinite block unions are all positive for ``I``'''
    factor = Config.ideals.factor if factor is None else utils.rational(factor)
    if isinstance(I, base) or (isinstance(I, direct_sum) and I.join is not None):
        return natset.geometric(1, factor)
    if isinstance(I, restriction):
        X = natset.simplify(I.to)
        if isinstance(X, natset.blocks) and certified(I.base, X.rule):
            return natset.coarsening(X.rule, X.indices)
        if contains(I.base, natset.complement(I.to)).verdict is In:
            return bp_witness(I.base, factor)
    raise error.NoWitness(I, 'bp_witness', 'no block witness is known')

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
    import random,functools
    import idealim.ideals as ideals, idealim.natset as natset
    from idealim import config, error
    In,NotIn,Unknown = config.verdict.In,config.verdict.NotIn,config.verdict.Unknown

    Fin, DensityZero, Summable = ideals.fin(), ideals.density_zero(), ideals.summable()
    chain = [Fin, Summable, DensityZero]
    evens, odds = natset.arith(0, 2), natset.arith(1, 2)
    doubling = natset.geometric(1, 2)

    @TestCase
    def contains_finite():
        if ideals.contains(Fin, natset.finite([1, 2, 3])).verdict is In:
            raise Success

    @TestCase
    def contains_evens_density():
        if ideals.contains(DensityZero, evens).verdict is NotIn:
            raise Success

    @TestCase
    def contains_squares_summable():
        if ideals.contains(Summable, natset.poly([0, 0, 1])).verdict is In:
            raise Success

    @TestCase
    def contains_squares_not_finite():
        if ideals.contains(Fin, natset.poly([0, 0, 1])).verdict is NotIn and ideals.contains(DensityZero, natset.poly([0, 0, 1])).verdict is In:
            raise Success

    @TestCase
    def contains_has_evidence():
        res = ideals.contains(DensityZero, evens)
        if res.evidence and res.json()['verdict'] == 'NotIn':
            raise Success

    @TestCase
    def dual_cofinite():
        if ideals.dual_member(Fin, natset.cofinite([5])).verdict is In:
            raise Success

    @TestCase
    def dual_evens_density():
        if ideals.dual_member(DensityZero, evens).verdict is NotIn:
            raise Success

    @TestCase
    def dual_evens_finite():
        if ideals.dual_member(Fin, evens).verdict is NotIn:
            raise Success

    @TestCase
    def restrict_finite_member():
        if ideals.restrict(Fin, evens).contains(natset.finite([0, 2])).verdict is In:
            raise Success

    @TestCase
    def restrict_density_positive():
        if ideals.restrict(DensityZero, evens).contains(natset.arith(0, 4)).verdict is NotIn:
            raise Success

    @TestCase
    def restrict_odds_invisible():
        if ideals.restrict(DensityZero, evens).contains(odds).verdict is In:
            raise Success

    @TestCase
    def restrict_rejects_member():
        try:
            ideals.restrict(Fin, natset.finite([1, 2]))
        except error.DegenerateIdeal:
            raise Success

    @TestCase
    def direct_sum_halves():
        I = ideals.direct_sum(Fin, DensityZero, evens)
        a = I.contains(natset.union(natset.poly([1, 0, 4]), natset.finite([0, 2])))
        b = I.contains(natset.arith(0, 4))
        c = I.contains(natset.poly([1, 0, 4]))
        if a.verdict is In and b.verdict is NotIn and c.verdict is In:
            raise Success

    @TestCase
    def direct_sum_rejects_finite_partition():
        try:
            ideals.direct_sum(Fin, DensityZero, natset.finite([1]))
        except error.DegenerateIdeal:
            raise Success

    @TestCase
    def maximal_refused():
        try:
            ideals.fromjson({'type': 'maximal'})
        except error.DegenerateIdeal:
            raise Success

    @TestCase
    def json_restriction():
        I = ideals.restrict(DensityZero, evens)
        res = I.json()
        if res == {'type': 'restriction', 'base': {'type': 'density_zero'}, 'to': {'type': 'arith', 'first': 0, 'step': 2}} and ideals.fromjson(res) == I:
            raise Success

    def randomset(rng):
        choice = rng.randrange(6)
        if choice == 0:
            return natset.finite(rng.sample(range(50), rng.randrange(5)))
        if choice == 1:
            return natset.arith(rng.randrange(6), rng.randrange(1, 6))
        if choice == 2:
            return natset.branch(format(rng.randrange(1, 16), 'b'))
        if choice == 3:
            return natset.poly([rng.randrange(3), rng.randrange(3), 1])
        if choice == 4:
            return natset.blocks(doubling, natset.arith(rng.randrange(3), rng.randrange(1, 4)))
        return natset.cofinite(rng.sample(range(50), rng.randrange(5)))

    @TestCase
    def axioms_on_resolved_cases():
        rng = random.Random(3)
        for _ in range(60):
            A, B = randomset(rng), randomset(rng)
            for I in chain:
                a, b = I.contains(A).verdict, I.contains(B).verdict
                if a is In and b is In and I.contains(natset.union(A, B)).verdict is NotIn:
                    raise Failure(I, A, B)
                if a is In and I.contains(natset.intersection(A, B)).verdict is NotIn:
                    raise Failure(I, A, B)
                if a is In and I.contains(natset.complement(A)).verdict is In:
                    raise Failure(I, A)
                continue
            continue
        if all(I.contains(natset.cofinite()).verdict is NotIn for I in chain):
            raise Success

    @TestCase
    def chain_inclusion():
        rng = random.Random(5)
        for _ in range(80):
            S = rng.choice([randomset(rng), natset.intersection(randomset(rng), natset.complement(randomset(rng)))])
            verdicts = [I.contains(S).verdict for I in chain]
            for smaller, larger in itertools.combinations(verdicts, 2):
                if smaller is In and larger is NotIn:
                    raise Failure(S)
                continue
            continue
        raise Success

    ### witnesses
    def samples(rng, count=200):
        for _ in range(count):
            m = rng.randrange(1, 21)
            chosen = rng.sample(range(40), m)
            if max(chosen) < 20:
                chosen[0] = rng.randrange(20, 40)
            yield functools.reduce(natset.union, [natset.arith(i, 40) for i in sorted(set(chosen))])

    @TestCase
    def witness_blocks_are_positive():
        rng = random.Random(config.defaults.verify.seed)
        for I in chain:
            W = ideals.bp_witness(I)
            for J in samples(rng):
                if I.contains(natset.blocks(W, J)).verdict is not NotIn:
                    raise Failure(I, J)
                continue
            continue
        raise Success

    @TestCase
    def witness_restriction_coarsens():
        X = natset.blocks(doubling, odds)
        I = ideals.restrict(DensityZero, X)
        W = ideals.bp_witness(I)
        if W == natset.coarsening(doubling, odds) and I.contains(natset.blocks(W, natset.arith(0, 3))).verdict is NotIn:
            raise Success

    @TestCase
    def witness_restriction_to_comember():
        I = ideals.restrict(Fin, natset.cofinite([0, 1]))
        if ideals.bp_witness(I, 3) == natset.geometric(1, 3):
            raise Success

    @TestCase
    def witness_missing():
        I = ideals.restrict(DensityZero, natset.union(evens, natset.branch('0')))
        try:
            ideals.bp_witness(I)
        except error.NoWitness:
            raise Success

    @TestCase
    def certified_polynomial_only_fin():
        W = natset.polynomial([0, 0, 1])
        if ideals.certified(Fin, W) and not ideals.certified(DensityZero, W) and ideals.certified(Summable, doubling):
            raise Success

if __name__ == '__main__':
    results = []
    for t in TestCaseList:
        results.append( t() )
    sys.exit(0 if all(results) else 1)
