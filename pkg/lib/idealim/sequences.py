"""Bounded rational sequences described symbolically.

A sequence is a tree of descriptors (constant, indicator, steps, combo,
paired, abs) evaluated exactly with fractions. Every sequence except a paired
product decomposes into finitely many pieces, each one a natset domain with a
simple description of the values taken on it:

    constant    the value ``shift`` on the whole domain
    graded      shift + scale * ratio**k * p on grade k, where p is a single
                value or ranges densely over the interval ``span``
    vanishing   finite grades whose values tend to ``shift``
    dense       values dense in the interval ``range`` on infinite classes
    residue     a finite domain whose values are not tracked

The ideal limits, superlevel sets and cluster sets are computed from the
pieces and the ideal verdicts on their domains and grade sets.
"""
import sys,itertools,functools
from fractions import Fraction
from . import config,error,utils,natset,ideals
Config = config.defaults
Log = Config.log.getChild('sequences')

__all__ = 'type,rule,piece,component,evaluate,superlevel,query,pieces,i_limsup,i_liminf,quotient_norm,trace,prefix_sup,csv,fromjson'.split(',')

In,NotIn,Unknown = config.verdict.In,config.verdict.NotIn,config.verdict.Unknown

def _sign(value):
    return (value > 0) - (value < 0)

def _krange(kmin, kmax):
    return natset.cofinite(range(kmin)) if kmax is None else natset.finite(range(kmin, kmax + 1))

### cluster components
class component(object):
    """A closed piece of a cluster set

    points      the finite set ``values``
    interval    [lo, hi]
    scaled      {center + scale * ratio**k * p : p in span, k >= first} and center
    """
    def __init__(self, kind, **fields):
        self.kind = kind
        self.__dict__.update(fields)

    @classmethod
    def points(cls, values):
        return cls('points', values=frozenset(map(Fraction, values)))
    @classmethod
    def interval(cls, lo, hi):
        return cls('interval', lo=Fraction(lo), hi=Fraction(hi))
    @classmethod
    def scaled(cls, center, scale, ratio, span, first):
        return cls('scaled', center=center, scale=scale, ratio=ratio, span=tuple(span), first=first)

    @property
    def supremum(self):
        if self.kind == 'points':
            return max(self.values)
        if self.kind == 'interval':
            return self.hi
        factor = self.scale * self.ratio**self.first
        return self.center + max(0, factor * self.span[0], factor * self.span[1])

    def __repr__(self):
        fields = ', '.join('{:s}={!s}'.format(k, v) for k, v in sorted(self.__dict__.items()) if k != 'kind')
        return '<sequences.component {:s} {:s}>'.format(self.kind, fields)

### pieces
class piece(object):
    """Values of a sequence on the natset ``domain``"""
    fields = 'scale,ratio,span,formula,sign,grades,kmin,kmax,uniform,witness,cuts,perturbed,key,range'.split(',')

    def __init__(self, kind, domain, shift, **attributes):
        self.kind,self.domain,self.shift = kind,domain,Fraction(shift)
        self.scale,self.ratio = Fraction(attributes.pop('scale', 0)),Fraction(attributes.pop('ratio', 0))
        self.span = tuple(map(Fraction, attributes.pop('span', (1, 1))))
        self.formula = attributes.pop('formula', None)
        self.sign = attributes.pop('sign', None)
        self.grades = attributes.pop('grades', None)
        self.kmin,self.kmax = attributes.pop('kmin', 0),attributes.pop('kmax', None)
        self.uniform,self.witness = attributes.pop('uniform', False),attributes.pop('witness', None)
        self.cuts = tuple(attributes.pop('cuts', ()))
        self.perturbed,self.key = attributes.pop('perturbed', False),attributes.pop('key', None)
        self.range = tuple(map(Fraction, attributes.pop('range', (shift, shift))))
        if attributes:
            raise error.InputError(self, 'piece', 'unknown attributes {:s}'.format(', '.join(sorted(attributes))))
        if self.sign is None:
            self.sign = _sign(self.scale * self.span[0]) if self.span[0] == self.span[1] else None

    def copy(self, **changes):
        attributes = dict((name, getattr(self, name)) for name in self.fields)
        attributes.update(changes)
        kind, domain, shift = (attributes.pop(name, getattr(self, name)) for name in ('kind', 'domain', 'shift'))
        return piece(kind, domain, shift, **attributes)

    def __repr__(self):
        return '<sequences.piece {:s} shift={!s} domain={!r}>'.format(self.kind, self.shift, self.domain)

    @property
    def pointwise(self):
        return self.span[0] == self.span[1]

    def offset(self, k):
        if self.formula is not None:
            return self.formula(k)
        return self.scale * self.ratio**k * self.span[0]

    def bracket(self, k):
        '''Smallest interval holding the values on grade ``k``'''
        if self.pointwise:
            res = self.shift + self.offset(k)
            return res, res
        lo, hi = (self.scale * self.ratio**k * p for p in self.span)
        return self.shift + min(lo, hi), self.shift + max(lo, hi)

    def extent(self):
        '''Closed interval holding every value of the piece'''
        if self.kind in ('constant', 'residue'):
            return self.shift, self.shift
        if self.kind == 'dense':
            return self.range
        first = self.bracket(self.kmin)
        if self.kmax is None:
            return min(first[0], self.shift), max(first[1], self.shift)
        last = self.bracket(self.kmax)
        return min(first[0], last[0]), max(first[1], last[1])

    def graded(self, K):
        '''Points of the domain whose grade belongs to the natset ``K``'''
        K = natset.simplify(natset.intersection(K, _krange(self.kmin, self.kmax)))
        return natset.simplify(natset.intersection(self.grades(K), self.domain))

    ## arithmetic
    def scaled(self, coefficient):
        coefficient = Fraction(coefficient)
        if self.kind == 'residue':
            return self
        if coefficient == 0:
            return piece('constant', self.domain, 0)
        if self.kind == 'dense':
            lo, hi = (coefficient * p for p in self.range)
            return self.copy(shift=coefficient * self.shift, range=(min(lo, hi), max(lo, hi)))
        formula = self.formula
        if formula is not None:
            formula = lambda k, formula=formula: coefficient * formula(k)
        sign = None if self.sign is None else self.sign * _sign(coefficient)
        return self.copy(shift=coefficient * self.shift, scale=coefficient * self.scale, formula=formula, sign=sign)

    def shifted(self, amount):
        if self.kind == 'dense':
            lo, hi = self.range
            return self.copy(shift=self.shift + amount, range=(lo + amount, hi + amount))
        return self.copy(shift=self.shift + amount)

    def absolute(self):
        '''Return the pieces of |x| on this domain'''
        if self.kind == 'residue':
            return [self]
        if self.kind == 'constant':
            return [self.copy(shift=abs(self.shift))]
        if self.kind == 'dense':
            lo, hi = self.range
            bottom = 0 if lo < 0 < hi else min(abs(lo), abs(hi))
            return [self.copy(shift=abs(self.shift), range=(bottom, max(abs(lo), abs(hi))))]
        lo, hi = self.extent()
        if lo >= 0:
            return [self]
        if hi <= 0:
            return [self.scaled(-1)]
        if not self.pointwise:
            raise error.NotRepresentable(self, 'absolute', 'a dense grade changes sign')

        # split the grades where the values cross zero
        value = lambda k: self.shift + self.offset(k)
        start, k = _sign(value(self.kmin)), self.kmin
        while (self.kmax is None or k <= self.kmax) and _sign(value(k)) == start:
            k += 1
        head = self.copy(kmax=k - 1, domain=self.graded(_krange(self.kmin, k - 1)))
        tail = self.copy(kmin=k, domain=self.graded(_krange(k, self.kmax)))
        return [part for item in (head, tail) for part in item.absolute()]

    def restricted(self, domain, other):
        '''Restrict the piece to ``domain``, remembering what the other piece cut away'''
        cut = natset.simplify(natset.intersection(self.domain, natset.complement(other.domain)))
        return self.copy(domain=domain, cuts=self.cuts + (cut,))

    ## ideal limits
    def certified(self, I):
        '''Whether every grade (or class) of the piece is known to be positive for ``I``'''
        if not self.uniform or self.witness is None or not ideals.certified(I, self.witness):
            return False
        return all(ideals.contains(I, cut).verdict is In for cut in self.cuts)

    def _verdict(self, I, S, partial):
        res = ideals.contains(I, S).verdict
        if res is Unknown:
            raise error.Indeterminate(self, 'cluster', 'membership of a {:s} piece is undecided'.format(self.kind), bracket=self.extent(), partial=partial)
        return res

    def cluster(self, I):
        '''Return the I-cluster set of the piece as a list of components'''
        if self.kind == 'residue':
            return []
        if self.kind == 'constant':
            return [component.points([self.shift])] if self._verdict(I, self.domain, []) is NotIn else []
        if self.kind == 'dense' or not self.pointwise:
            if self.certified(I):
                if self.kind == 'dense':
                    return [component.interval(*self.range)]
                if self.kmax is None:
                    return [component.scaled(self.shift, self.scale, self.ratio, self.span, self.kmin)]
                return [component.interval(*self.bracket(k)) for k in range(self.kmin, self.kmax + 1)]
            if self._verdict(I, self.domain, []) is In:
                return []
            raise error.Indeterminate(self, 'cluster', 'the classes of a dense piece are not known to be positive', bracket=self.extent(), partial=[])
        if self.kind == 'vanishing':
            return [component.points([self.shift])] if self._verdict(I, self.domain, []) is NotIn else []

        # graded: the leading grades one by one, then the rest structurally
        if self.certified(I):
            if self.kmax is None:
                return [component.scaled(self.shift, self.scale, self.ratio, self.span, self.kmin)]
            return [component.points([self.shift + self.offset(k) for k in range(self.kmin, self.kmax + 1)])]
        res, stop = [], self.kmin + Config.sequences.grades
        for k in range(self.kmin, stop if self.kmax is None else min(stop, self.kmax + 1)):
            if self._verdict(I, self.graded(natset.finite([k])), res) is NotIn:
                res.append(component.points([self.shift + self.offset(k)]))
            continue
        if self.kmax is not None and self.kmax < stop:
            return res
        if self._verdict(I, self.graded(natset.cofinite(range(stop))), res) is In:
            return res
        raise error.Indeterminate(self, 'cluster', 'grades from {:d} on are positive but not individually decided'.format(stop), bracket=self.extent(), partial=res)

    def supremum(self):
        return self.extent()[1]

    ## superlevel sets
    def above(self, t):
        '''Return the points of the domain where the value exceeds ``t``'''
        if self.kind == 'constant':
            return self.domain if self.shift > t else natset.finite()
        if self.kind == 'residue' or self.perturbed:
            raise error.NotRepresentable(self, 'superlevel', 'values of a {:s} piece are not tracked exactly'.format('perturbed' if self.perturbed else self.kind))
        lo, hi = self.extent()
        if hi <= t:
            return natset.finite()
        if lo > t:
            return self.domain
        if self.kind == 'dense' or not self.pointwise or self.sign is None:
            raise error.NotRepresentable(self, 'superlevel', 'threshold {!s} lies inside a dense range'.format(t))
        if self.sign == 0:
            return self.domain if self.shift > t else natset.finite()
        value = lambda k: self.shift + self.offset(k)
        if self.sign > 0:
            if t < self.shift:
                return self.domain
            ks, k = [], self.kmin
            while (self.kmax is None or k <= self.kmax) and value(k) > t:
                ks.append(k)
                k += 1
            return self.graded(natset.finite(ks))
        if t >= self.shift:
            return natset.finite()
        k = self.kmin
        while (self.kmax is None or k <= self.kmax) and value(k) <= t:
            k += 1
        return self.graded(natset.cofinite(range(k)))

    def json(self):
        res = {'kind': self.kind, 'domain': self.domain.json(), 'shift': utils.fraction(self.shift)}
        if self.kind in ('graded', 'vanishing') and self.formula is None:
            res.update(scale=utils.fraction(self.scale), ratio=utils.fraction(self.ratio), span=[utils.fraction(p) for p in self.span])
        if self.kind in ('graded', 'vanishing'):
            res.update(kmin=self.kmin, kmax=self.kmax)
        if self.kind == 'dense':
            res.update(range=[utils.fraction(p) for p in self.range])
        if self.perturbed:
            res.update(perturbed=True)
        return res

def _explicit(domain, x):
    '''Constant pieces for the finite ``domain`` grouped by their value under ``x``'''
    res = {}
    for n in domain.elements:
        res.setdefault(x.eval(n), []).append(n)
    return [piece('constant', natset.finite(points), value) for value, points in sorted(res.items())]

def _combine(p, q, partial):
    '''Pieces of the sum of p and q on the intersection of their domains'''
    domain = natset.simplify(natset.intersection(p.domain, q.domain))
    if natset._empty(domain):
        return []
    if isinstance(domain, natset.finite):
        return _explicit(domain, partial)
    if natset.analyze(domain).finite or 'residue' in (p.kind, q.kind):
        return [piece('residue', domain, 0)]
    if q.kind == 'constant':
        return [p.restricted(domain, q).shifted(q.shift)]
    if p.kind == 'constant':
        return [q.restricted(domain, p).shifted(p.shift)]
    for a, b in ((p, q), (q, p)):
        if b.kind == 'vanishing':
            if a.kind == 'vanishing':
                return [piece('vanishing', domain, a.shift + b.shift, perturbed=True, sign=None, grades=lambda K: natset.finite())]
            return [a.restricted(domain, b).shifted(b.shift).copy(perturbed=True)]
        continue
    if p.kind == q.kind == 'graded' and p.pointwise and q.pointwise and p.key is not None and p.key == q.key and (p.kmin, p.kmax) == (q.kmin, q.kmax):
        scale = p.scale * p.span[0] + q.scale * q.span[0]
        return [p.restricted(domain, q).copy(shift=p.shift + q.shift, scale=scale, span=(1, 1), sign=_sign(scale))]
    raise error.NotRepresentable(partial, 'pieces', 'a {:s} piece overlaps a {:s} piece on an infinite set'.format(p.kind, q.kind))

### value rules of a step sequence, total over block indices
class rules(utils.definition):
    cache = {}
    attribute = 'kind'

def _ratio(object, ratio, method):
    ratio = utils.rational(ratio)
    if not 0 < ratio < 1:
        raise error.InputError(object, method, 'ratio {!s} must lie strictly between 0 and 1'.format(ratio))
    return ratio

class rule(object):
    kind = None
    def value(self, index):
        raise NotImplementedError
    @property
    def bound(self):
        raise NotImplementedError
    def pieces(self):
        '''Pieces over the block indices'''
        raise NotImplementedError
    def __repr__(self):
        return 'sequences.rule({!r})'.format(self.json())

def _constants(values):
    '''Constant pieces from (value, natset) pairs, merged by value'''
    res = {}
    for value, domain in values:
        res[value] = natset.simplify(natset.union(res[value], domain)) if value in res else domain
    return [piece('constant', domain, value) for value, domain in sorted(res.items())]

@rules.define
class table(rule):
    kind = 'table'
    def __init__(self, values, default=0):
        self.values,self.default = tuple(map(utils.rational, values)),utils.rational(default)
    def value(self, index):
        return self.values[index] if index < len(self.values) else self.default
    @property
    def bound(self):
        return max(map(abs, self.values + (self.default,)))
    def pieces(self):
        res = [(value, natset.finite([i])) for i, value in enumerate(self.values)]
        return _constants(res + [(self.default, natset.cofinite(range(len(self.values))))])
    def json(self):
        return {'kind': self.kind, 'values': [utils.fraction(v) for v in self.values], 'default': utils.fraction(self.default)}
    @classmethod
    def fromjson(cls, object):
        return cls(object['values'], object.get('default', '0/1'))

@rules.define
class cyclic(rule):
    kind = 'cyclic'
    def __init__(self, values):
        self.values = tuple(map(utils.rational, values))
        if not self.values:
            raise error.InputError(self, 'cyclic', 'requires at least one value')
    def value(self, index):
        return self.values[index % len(self.values)]
    @property
    def bound(self):
        return max(map(abs, self.values))
    def pieces(self):
        return _constants((value, natset.simplify(natset.arith(r, len(self.values)))) for r, value in enumerate(self.values))
    def json(self):
        return {'kind': self.kind, 'values': [utils.fraction(v) for v in self.values]}
    @classmethod
    def fromjson(cls, object):
        return cls(object['values'])

@rules.define
class geometric(rule):
    """scale * ratio**i on block i"""
    kind = 'geometric'
    def __init__(self, scale, ratio):
        self.scale,self.ratio = utils.rational(scale),_ratio(self, ratio, 'geometric')
    def value(self, index):
        return self.scale * self.ratio**index
    @property
    def bound(self):
        return abs(self.scale)
    def pieces(self):
        return [piece('vanishing', natset.cofinite(), 0, scale=self.scale, ratio=self.ratio, grades=lambda K: K)]
    def json(self):
        return {'kind': self.kind, 'scale': utils.fraction(self.scale), 'ratio': utils.fraction(self.ratio)}
    @classmethod
    def fromjson(cls, object):
        return cls(object['scale'], object['ratio'])

@rules.define
class harmonic(rule):
    """scale / (i + 1) on block i"""
    kind = 'harmonic'
    def __init__(self, scale):
        self.scale = utils.rational(scale)
    def value(self, index):
        return self.scale / (index + 1)
    @property
    def bound(self):
        return abs(self.scale)
    def pieces(self):
        scale = self.scale
        return [piece('vanishing', natset.cofinite(), 0, formula=lambda k: scale / (k + 1), sign=_sign(scale), grades=lambda K: K)]
    def json(self):
        return {'kind': self.kind, 'scale': utils.fraction(self.scale)}
    @classmethod
    def fromjson(cls, object):
        return cls(object['scale'])

@rules.define
class columns(rule):
    """scale * ratio**k on the j-th element of ``support`` where j codes (k, l), 0 elsewhere"""
    kind = 'columns'
    def __init__(self, support, scale, ratio):
        if not isinstance(support, natset.type):
            raise error.InputError(self, 'columns', 'support must be a natset')
        self.support,self.scale,self.ratio = support,utils.rational(scale),_ratio(self, ratio, 'columns')
    def value(self, index):
        if not self.support.member(index):
            return Fraction(0)
        k, _ = natset.pair_decode(self.support.rank(index))
        return self.scale * self.ratio**k
    @property
    def bound(self):
        return abs(self.scale)
    def pieces(self):
        support = self.support
        infinite = natset.analyze(support).finite is False
        res = [piece('graded', support, 0, scale=self.scale, ratio=self.ratio, grades=lambda K: natset.subsequence(support, natset.grid(K)), uniform=infinite, key=('columns', support.key(), self.ratio))]
        return [piece('constant', natset.complement(support), 0)] + res
    def json(self):
        return {'kind': self.kind, 'support': self.support.json(), 'scale': utils.fraction(self.scale), 'ratio': utils.fraction(self.ratio)}
    @classmethod
    def fromjson(cls, object):
        return cls(natset.fromjson(object['support']), object['scale'], object['ratio'])

def classes(C):
    '''Block indices whose dense class belongs to the natset ``C``'''
    even = natset.subsequence(natset.arith(0, 2), natset.grid(C))
    C = natset.simplify(C)
    if isinstance(C, (natset.finite, natset.cofinite)):
        listed = C.elements if isinstance(C, natset.finite) else C.excluded
        found = [utils.corput_index(utils.units[index]) for index in listed]
        found = [c for c in found if c is not None]
        odd = natset.finite(found) if isinstance(C, natset.finite) else natset.cofinite(found)
        return natset.union(even, natset.subsequence(natset.arith(1, 2), odd))
    raise error.NotRepresentable(C, 'classes', 'only finite and cofinite classes are located on the odd blocks')

def classof(index):
    '''Position in the rational enumeration of the value a dense rule puts on block ``index``'''
    if index % 2 == 0:
        return natset.pair_decode(index // 2)[0]
    return utils.units.index(utils.corput((index - 1) // 2))

@rules.define
class dense(rule):
    """The rationals of [a, b] on the block indices.

    Block 2m holds the rational at position k of the enumeration, where k is
    the column of m under the pairing, so every rational fills infinitely
    many blocks. Block 2c+1 holds the c-th van der Corput point, which spreads
    the values of any run of blocks evenly over [a, b].
    """
    kind = 'dense'
    def __init__(self, a, b):
        self.a,self.b = utils.rational(a),utils.rational(b)
        if self.a > self.b:
            raise error.InputError(self, 'dense', 'requires a <= b')
    def value(self, index):
        if index % 2 == 0:
            unit = utils.units[natset.pair_decode(index // 2)[0]]
        else:
            unit = utils.corput((index - 1) // 2)
        return self.a + (self.b - self.a) * unit
    @property
    def bound(self):
        return max(abs(self.a), abs(self.b))
    def pieces(self):
        return [piece('dense', natset.cofinite(), 0, range=(self.a, self.b), grades=classes, uniform=True)]
    def json(self):
        return {'kind': self.kind, 'a': utils.fraction(self.a), 'b': utils.fraction(self.b)}
    @classmethod
    def fromjson(cls, object):
        return cls(object['a'], object['b'])

@rules.define
class scaled(rule):
    """center + scale * ratio**k * base(l) on the block coded by (k, l)"""
    kind = 'scaled'
    def __init__(self, scale, ratio, center, base):
        if not isinstance(base, rule):
            raise error.InputError(self, 'scaled', 'base must be a value rule')
        self.scale,self.ratio,self.center = utils.rational(scale),_ratio(self, ratio, 'scaled'),utils.rational(center)
        self.base = base
    def value(self, index):
        k, l = natset.pair_decode(index)
        return self.center + self.scale * self.ratio**k * self.base.value(l)
    @property
    def bound(self):
        return abs(self.center) + abs(self.scale) * self.base.bound
    def pieces(self):
        res = []
        for item in self.base.pieces():
            domain = item.domain
            grades = lambda K, domain=domain: natset.grid(K, domain)
            if item.kind == 'constant' and item.shift * self.scale == 0:
                res.append(piece('constant', natset.grid(natset.cofinite(), domain), self.center))
            elif item.kind == 'constant':
                infinite = natset.analyze(domain).finite is False
                res.append(piece('graded', natset.grid(natset.cofinite(), domain), self.center, scale=self.scale, ratio=self.ratio, span=(item.shift, item.shift), grades=grades, uniform=infinite, key=('scaled', domain.key(), self.ratio)))
            elif item.kind == 'dense':
                res.append(piece('graded', natset.grid(natset.cofinite(), domain), self.center, scale=self.scale, ratio=self.ratio, span=item.range, grades=grades, uniform=item.uniform))
            else:
                raise error.NotRepresentable(self, 'pieces', 'a {:s} base can not be scaled'.format(item.kind))
            continue
        return res
    def json(self):
        return {'kind': self.kind, 'scale': utils.fraction(self.scale), 'ratio': utils.fraction(self.ratio), 'center': utils.fraction(self.center), 'base': self.base.json()}
    @classmethod
    def fromjson(cls, object):
        return cls(object['scale'], object['ratio'], object['center'], rules.fromjson(object['base']))

@rules.define
class interleave(rule):
    """Block i follows rules[i mod m] at the index i // m"""
    kind = 'interleave'
    def __init__(self, items):
        self.items = tuple(items)
        if not self.items or not all(isinstance(item, rule) for item in self.items):
            raise error.InputError(self, 'interleave', 'requires at least one value rule')
    def value(self, index):
        count = len(self.items)
        return self.items[index % count].value(index // count)
    @property
    def bound(self):
        return max(item.bound for item in self.items)
    def pieces(self):
        res, count = [], len(self.items)
        for j, item in enumerate(self.items):
            positions = natset.arith(j, count)
            for part in item.pieces():
                grades = part.grades
                if grades is not None:
                    grades = lambda K, grades=grades, positions=positions: natset.subsequence(positions, grades(K))
                res.append(part.copy(domain=natset.subsequence(positions, part.domain), grades=grades, cuts=[natset.subsequence(positions, cut) for cut in part.cuts]))
            continue
        return res
    def json(self):
        return {'kind': self.kind, 'rules': [item.json() for item in self.items]}
    @classmethod
    def fromjson(cls, object):
        return cls([rules.fromjson(item) for item in object['rules']])

@rules.define
class supported(rule):
    """base(j) on the j-th element of ``support``, 0 elsewhere"""
    kind = 'supported'
    def __init__(self, support, base):
        if not isinstance(support, natset.type) or not isinstance(base, rule):
            raise error.InputError(self, 'supported', 'requires a natset and a value rule')
        self.support,self.base = support,base
    def value(self, index):
        if not self.support.member(index):
            return Fraction(0)
        return self.base.value(self.support.rank(index))
    @property
    def bound(self):
        return self.base.bound
    def pieces(self):
        support, res = self.support, [piece('constant', natset.complement(self.support), 0)]
        for part in self.base.pieces():
            grades = part.grades
            if grades is not None:
                grades = lambda K, grades=grades: natset.subsequence(support, grades(K))
            key = None if part.key is None else ('supported', support.key(), part.key)
            res.append(part.copy(domain=natset.subsequence(support, part.domain), grades=grades, key=key, cuts=[natset.subsequence(support, cut) for cut in part.cuts]))
        return res
    def json(self):
        return {'kind': self.kind, 'support': self.support.json(), 'base': self.base.json()}
    @classmethod
    def fromjson(cls, object):
        return cls(natset.fromjson(object['support']), rules.fromjson(object['base']))

### sequences
class sequences(utils.definition):
    cache = {}

class type(object):
    """A bounded sequence of rationals"""
    type = None
    def eval(self, n):
        raise NotImplementedError
    @property
    def bound(self):
        raise NotImplementedError
    def decompose(self):
        raise NotImplementedError
    def json(self):
        raise NotImplementedError
    def __repr__(self):
        return 'sequences.{:s}({!r})'.format(self.type, self.json())

@sequences.define
class constant(type):
    type = 'constant'
    def __init__(self, value):
        self.value = utils.rational(value)
    def eval(self, n):
        return self.value
    @property
    def bound(self):
        return abs(self.value)
    def decompose(self):
        return [piece('constant', natset.cofinite(), self.value)]
    def json(self):
        return {'type': self.type, 'value': utils.fraction(self.value)}
    @classmethod
    def fromjson(cls, object):
        return cls(object['value'])

@sequences.define
class indicator(type):
    type = 'indicator'
    def __init__(self, set):
        if not isinstance(set, natset.type):
            raise error.InputError(self, 'indicator', 'expected a natset')
        self.set = set
    def eval(self, n):
        return Fraction(1 if natset.member(self.set, n) else 0)
    @property
    def bound(self):
        return Fraction(1)
    def decompose(self):
        return [piece('constant', self.set, 1), piece('constant', natset.complement(self.set), 0)]
    def json(self):
        return {'type': self.type, 'set': self.set.json()}
    @classmethod
    def fromjson(cls, object):
        return cls(natset.fromjson(object['set']))

@sequences.define
class steps(type):
    """The value rule(i) on block i of ``blocks``, and ``otherwise`` before the first block"""
    type = 'steps'
    def __init__(self, blocks, rule, otherwise=0):
        if not isinstance(blocks, natset.structure) or not isinstance(rule, globals()['rule']):
            raise error.InputError(self, 'steps', 'requires a block structure and a value rule')
        self.blocks,self.rule,self.otherwise = blocks,rule,utils.rational(otherwise)
    def eval(self, n):
        index = self.blocks.block(n)
        return self.otherwise if index is None else self.rule.value(index)
    @property
    def bound(self):
        return max(abs(self.otherwise), self.rule.bound)
    def decompose(self):
        W, res = self.blocks, [piece('constant', natset.finite(range(self.blocks.first)), self.otherwise)]
        for item in self.rule.pieces():
            grades = item.grades
            if grades is not None:
                grades = lambda K, grades=grades: natset.blocks(W, grades(K))
            res.append(item.copy(domain=natset.blocks(W, item.domain), grades=grades, witness=W, cuts=[natset.blocks(W, cut) for cut in item.cuts]))
        return res
    def json(self):
        return {'type': self.type, 'blocks': self.blocks.json(), 'rule': self.rule.json(), 'else': utils.fraction(self.otherwise)}
    @classmethod
    def fromjson(cls, object):
        return cls(natset.structures.fromjson(object['blocks']), rules.fromjson(object['rule']), object.get('else', '0/1'))

@sequences.define
class combo(type):
    """Finite linear combination of (coefficient, sequence) terms"""
    type = 'combo'
    def __init__(self, terms):
        self.terms = tuple((utils.rational(a), x) for a, x in terms)
        if not self.terms or not all(isinstance(x, type) for _, x in self.terms):
            raise error.InputError(self, 'combo', 'requires at least one term')
    def eval(self, n):
        return sum((a * x.eval(n) for a, x in self.terms), Fraction(0))
    @property
    def bound(self):
        return sum((abs(a) * x.bound for a, x in self.terms), Fraction(0))
    def decompose(self):
        res = None
        for count, (a, x) in enumerate(self.terms, 1):
            items = [item.scaled(a) for item in x.decompose()]
            if res is None:
                res = items
                continue
            partial = combo(self.terms[:count])
            res = [part for p in res for q in items for part in _combine(p, q, partial)]
        return res
    def json(self):
        return {'type': self.type, 'terms': [{'coefficient': utils.fraction(a), 'seq': x.json()} for a, x in self.terms]}
    @classmethod
    def fromjson(cls, object):
        return cls([(item['coefficient'], fromjson(item['seq'])) for item in object['terms']])

@sequences.define
class paired(type):
    """n -> x(k) * z(l) where n codes the pair (k, l)"""
    type = 'paired'
    def __init__(self, x, z):
        if not isinstance(x, type) or not isinstance(z, type):
            raise error.InputError(self, 'paired', 'requires two sequences')
        self.x,self.z = x,z
    def eval(self, n):
        k, l = natset.pair_decode(n)
        return self.x.eval(k) * self.z.eval(l)
    @property
    def bound(self):
        return self.x.bound * self.z.bound
    def decompose(self):
        raise error.NotRepresentable(self, 'pieces', 'paired products have no piece decomposition')
    def json(self):
        return {'type': self.type, 'x': self.x.json(), 'z': self.z.json()}
    @classmethod
    def fromjson(cls, object):
        return cls(fromjson(object['x']), fromjson(object['z']))

@sequences.define
class absolute(type):
    type = 'abs'
    def __init__(self, inner):
        if not isinstance(inner, type):
            raise error.InputError(self, 'abs', 'expected a sequence')
        self.inner = inner
    def eval(self, n):
        return abs(self.inner.eval(n))
    @property
    def bound(self):
        return self.inner.bound
    def decompose(self):
        return [part for item in self.inner.decompose() for part in item.absolute()]
    def json(self):
        return {'type': self.type, 'inner': self.inner.json()}
    @classmethod
    def fromjson(cls, object):
        return cls(fromjson(object['inner']))

def fromjson(object):
    return sequences.fromjson(object)

### operations
def evaluate(x, n):
    '''Return the exact value of ``x`` at ``n``'''
    if not isinstance(n, int) or n < 0:
        raise error.InputError(x, 'evaluate', '{!r} is not a natural'.format(n))
    return x.eval(n)

def pieces(x, I=None):
    '''Decompose ``x`` into pieces, dropping empty domains and members of ``I``'''
    res = []
    for item in x.decompose():
        domain = natset.simplify(item.domain)
        if natset._empty(domain):
            continue
        if I is not None and ideals.contains(I, domain).verdict is In:
            continue
        res.append(item.copy(domain=domain))
    return res

def superlevel(x, t, direction='above'):
    '''Return the natset of n with x(n) > t (above) or x(n) < t (below)'''
    t = utils.rational(t)
    if direction == 'below':
        return superlevel(combo([(-1, x)]), -t, 'above')
    if direction != 'above':
        raise error.InputError(x, 'superlevel', 'unknown direction {!r}'.format(direction))
    res = natset.finite()
    for item in pieces(x):
        res = natset.simplify(natset.union(res, item.above(t)))
    return res

class query(object):
    '''A superlevel question together with its answer'''
    def __init__(self, x, threshold, direction='above'):
        self.threshold,self.direction = utils.rational(threshold),direction
        self.result = superlevel(x, self.threshold, direction)
    def json(self):
        return {'threshold': utils.fraction(self.threshold), 'direction': self.direction, 'result': self.result.json()}

def clusters(x, I):
    '''Return the cluster components of every piece, raising Indeterminate with the decided part'''
    res, pending = [], []
    for item in pieces(x, I):
        try:
            res.extend(item.cluster(I))
        except error.Indeterminate as e:
            res.extend(e.partial or [])
            pending.append(e)
        continue
    if pending:
        raise error.Indeterminate(x, 'clusters', '{:d} pieces are undecided'.format(len(pending)), bracket=(min(e.bracket[0] for e in pending), max(e.bracket[1] for e in pending)), partial=res)
    return res

def i_limsup(x, I):
    '''The I-limit superior of ``x``'''
    try:
        res = clusters(x, I)
    except error.Indeterminate as e:
        best = max([item.supremum for item in e.partial] or [-x.bound])
        if e.partial and e.bracket[1] <= best:
            return best
        Log.info('i_limsup : {:s} : undecided between {!s} and {!s}'.format(I.type, best, max(best, e.bracket[1])))
        raise error.Indeterminate(x, 'i_limsup', 'verdicts needed for the limit superior are Unknown', bracket=(best, max(best, e.bracket[1])), partial=best)
    if not res:
        raise error.Indeterminate(x, 'i_limsup', 'every piece was found to be a member of {!r}'.format(I), bracket=(-x.bound, x.bound))
    return max(item.supremum for item in res)

def i_liminf(x, I):
    '''The I-limit inferior of ``x``'''
    try:
        return -i_limsup(combo([(-1, x)]), I)
    except error.Indeterminate as e:
        lo, hi = e.bracket
        raise error.Indeterminate(x, 'i_liminf', e.message, bracket=(-hi, -lo), partial=None if e.partial is None else -e.partial)

def quotient_norm(x, I):
    '''The norm of ``x`` in the quotient by the sequences converging to 0 along I'''
    return i_limsup(absolute(x), I)

def trace(x, I):
    '''The pieces of |x| with the membership decisions that keep or drop them'''
    res = []
    for item in absolute(x).decompose():
        domain = natset.simplify(item.domain)
        if natset._empty(domain):
            continue
        decided, (lo, hi) = ideals.contains(I, domain), item.extent()
        res.append({'kind': item.kind, 'values': [utils.fraction(lo), utils.fraction(hi)], 'domain': domain.json(), 'decision': decided.json(), 'kept': decided.verdict is not In})
    return res

def prefix_sup(x, N):
    '''Largest |x(n)| for n below ``N``'''
    return max((abs(x.eval(n)) for n in range(N)), default=Fraction(0))

def csv(x, N, precision=None):
    '''Rows (n, decimal, "p/q") of the first ``N`` values'''
    precision = Config.sequences.precision if precision is None else precision
    res = []
    for n in range(N):
        value = x.eval(n)
        res.append((n, utils.decimal(value, precision), utils.fraction(value)))
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
    import idealim.sequences as sequences, idealim.natset as natset, idealim.ideals as ideals
    from idealim import config, error
    from fractions import Fraction

    Fin, DensityZero, Summable = ideals.fin(), ideals.density_zero(), ideals.summable()
    chain = [Fin, Summable, DensityZero]
    W = natset.geometric(1, 2)
    evens = natset.arith(0, 2)

    def family(bits):
        return sequences.steps(W, sequences.columns(natset.branch(bits), 1, Fraction(1, 3)), 0)

    z = sequences.steps(natset.geometric(1, Fraction(2**15 + 1, 2**15)), sequences.dense(-1, 1), 0)

    ### evaluation
    @TestCase
    def eval_constant():
        if sequences.evaluate(sequences.constant(Fraction(3, 2)), 10) == Fraction(3, 2):
            raise Success

    @TestCase
    def eval_indicator():
        if sequences.evaluate(sequences.indicator(evens), 7) == 0:
            raise Success

    @TestCase
    def eval_paired_constant():
        x = sequences.paired(sequences.constant(1), z)
        if all(x.eval(n) == z.eval(natset.pair_decode(n)[1]) for n in range(200)):
            raise Success

    @TestCase
    def eval_within_bound():
        items = [family('01'), z, sequences.combo([(2, family('0')), (-1, sequences.indicator(evens))]), sequences.steps(W, sequences.interleave([sequences.cyclic([0, 1]), sequences.harmonic(3)]), -1)]
        if all(abs(x.eval(n)) <= x.bound for x in items for n in range(500)):
            raise Success

    @TestCase
    def eval_family_columns():
        x = family('0')
        support = natset.prefix(natset.branch('0'), 64)
        values = [x.eval(W.endpoint(i)) for i in support]
        expected = [Fraction(1, 3)**natset.pair_decode(j)[0] for j in range(len(support))]
        if values == expected and x.eval(W.endpoint(2)) == 0:
            raise Success

    @TestCase
    def eval_dense_classes():
        rule = sequences.dense(0, 1)
        values = [rule.value(index) for index in (0, 1, 3, 5, 7)]
        if values == [0, 0, Fraction(1, 2), Fraction(1, 4), Fraction(3, 4)] and sequences.classof(3) == 2 and sequences.classof(6) == natset.pair_decode(3)[0]:
            raise Success

    @TestCase
    def dense_classes_located():
        S = sequences.classes(natset.finite([2]))
        rule = sequences.dense(0, 1)
        if all(natset.member(S, index) == (sequences.classof(index) == 2) for index in range(400)) and all(rule.value(index) == Fraction(1, 2) for index in natset.prefix(S, 400)):
            raise Success

    @TestCase
    def dense_classes_cofinite():
        S = sequences.classes(natset.cofinite([0, 2]))
        if all(natset.member(S, index) == (sequences.classof(index) not in (0, 2)) for index in range(400)):
            raise Success

    ### superlevel sets
    @TestCase
    def superlevel_indicator():
        if sequences.superlevel(sequences.indicator(evens), Fraction(1, 2), 'above') == evens:
            raise Success

    @TestCase
    def superlevel_constant():
        if sequences.superlevel(sequences.constant(0), 1, 'above') == natset.finite():
            raise Success

    @TestCase
    def superlevel_geometric_blocks():
        x = sequences.steps(W, sequences.geometric(1, Fraction(1, 3)), 0)
        res = sequences.superlevel(x, Fraction(1, 10), 'above')
        if res == natset.blocks(W, natset.finite([0, 1, 2])):
            raise Success

    @TestCase
    def superlevel_below_matches_values():
        x = sequences.steps(W, sequences.cyclic([Fraction(1, 4), Fraction(3, 4), 0]), 1)
        res = sequences.superlevel(x, Fraction(1, 2), 'below')
        if all(natset.member(res, n) == (x.eval(n) < Fraction(1, 2)) for n in range(3000)):
            raise Success

    @TestCase
    def superlevel_paired_unsupported():
        try:
            sequences.superlevel(sequences.paired(sequences.constant(1), z), 0)
        except error.NotRepresentable:
            raise Success

    @TestCase
    def superlevel_dense_inside():
        try:
            sequences.superlevel(z, 0)
        except error.NotRepresentable:
            raise Success

    ### ideal limits
    @TestCase
    def limsup_indicator():
        x = sequences.indicator(evens)
        if sequences.i_limsup(x, Fin) == 1 and sequences.i_liminf(x, Fin) == 0:
            raise Success

    @TestCase
    def limsup_constant():
        if all(sequences.i_limsup(sequences.constant(Fraction(-5, 7)), I) == Fraction(-5, 7) for I in chain):
            raise Success

    @TestCase
    def limsup_vanishing():
        x = sequences.steps(W, sequences.geometric(1, Fraction(1, 3)), 0)
        if sequences.i_limsup(x, DensityZero) == 0 and sequences.i_limsup(x, Fin) == 0:
            raise Success

    @TestCase
    def limsup_dense():
        if sequences.i_limsup(z, Fin) == 1 and sequences.i_liminf(z, Summable) == -1:
            raise Success

    @TestCase
    def limsup_family():
        x = family('011')
        if sequences.i_limsup(x, Fin) == 1 and sequences.i_liminf(x, DensityZero) == 0:
            raise Success

    @TestCase
    def limsup_undecided_bracket():
        x = sequences.indicator(natset.intersection(natset.branch('1'), natset.arith(1, 2)))
        try:
            sequences.i_limsup(x, Fin)
        except error.Indeterminate as e:
            if e.bracket == (0, 1):
                raise Success

    @TestCase
    def norm_constant():
        if sequences.quotient_norm(sequences.constant(-2), Fin) == 2:
            raise Success

    @TestCase
    def norm_family_difference():
        a, b = family('0110'), family('0111')
        x = sequences.combo([(1, a), (-1, b)])
        if all(sequences.quotient_norm(x, I) == 1 for I in chain):
            raise Success

    @TestCase
    def norm_density_zero_indicator():
        x = sequences.indicator(natset.poly([0, 0, 1]))
        if sequences.quotient_norm(x, DensityZero) == 0 and sequences.quotient_norm(x, Fin) == 1:
            raise Success

    @TestCase
    def norm_sign_change():
        x = sequences.combo([(1, sequences.steps(W, sequences.geometric(1, Fraction(1, 2)), 0)), (1, sequences.constant(Fraction(-1, 4)))])
        if sequences.quotient_norm(x, Fin) == Fraction(1, 4) and sequences.i_limsup(x, Fin) == Fraction(-1, 4):
            raise Success

    @TestCase
    def norm_interleave():
        x = sequences.steps(W, sequences.interleave([sequences.cyclic([2, -3]), sequences.harmonic(5)]), 0)
        if sequences.quotient_norm(x, Summable) == 3 and sequences.i_limsup(x, Summable) == 2:
            raise Success

    @TestCase
    def norm_triangle():
        a, b, c = family('0110'), family('0111'), family('10')
        xs = [a, b, c, sequences.constant(Fraction(1, 2)), sequences.combo([(1, a), (-2, c)])]
        for I in chain:
            norms = [sequences.quotient_norm(x, I) for x in xs]
            for (i, x), (j, y) in itertools.combinations(enumerate(xs), 2):
                if sequences.quotient_norm(sequences.combo([(1, x), (1, y)]), I) > norms[i] + norms[j]:
                    raise Failure(i, j, I)
                continue
            continue
        raise Success

    @TestCase
    def norm_homogeneous():
        x = sequences.combo([(1, family('0110')), (-2, family('10'))])
        for I in chain:
            norm = sequences.quotient_norm(x, I)
            if any(sequences.quotient_norm(sequences.combo([(a, x)]), I) != abs(a) * norm for a in (-3, Fraction(1, 2), 0)):
                raise Failure(I)
            continue
        raise Success

    @TestCase
    def norm_largest_cluster_point():
        import idealim.cluster as cluster
        xs = [family('0110'), sequences.constant(Fraction(-1, 2)), sequences.combo([(1, family('0110')), (-2, family('10'))]), z]
        for I in chain:
            for x in xs:
                lo, hi = cluster.cluster_points_exact(x, I).bounds()
                if sequences.quotient_norm(x, I) != max(abs(lo), abs(hi)):
                    raise Failure(x, I)
                continue
            continue
        raise Success

    ### supported rules
    @TestCase
    def supported_values():
        support = natset.branch('01')
        rule = sequences.supported(support, sequences.cyclic([1, 2]))
        listed = natset.prefix(support, 200)
        if [rule.value(index) for index in listed] == [1 + j % 2 for j in range(len(listed))] and all(rule.value(index) == 0 for index in range(200) if index not in listed):
            raise Success

    @TestCase
    def supported_norm():
        rule = sequences.supported(natset.branch('1'), sequences.cyclic([Fraction(1, 2), -3]))
        x = sequences.steps(W, rule, 0)
        if all(sequences.quotient_norm(x, I) == 3 and sequences.i_liminf(x, I) == -3 for I in chain):
            raise Success

    @TestCase
    def supported_json():
        x = sequences.steps(W, sequences.supported(natset.branch('10'), sequences.dense(0, 1)), 0)
        res = x.json()
        if res['rule']['kind'] == 'supported' and res['rule']['base'] == {'kind': 'dense', 'a': '0/1', 'b': '1/1'} and sequences.fromjson(res).eval(300) == x.eval(300):
            raise Success

    ### traces
    @TestCase
    def trace_constant():
        res = sequences.trace(sequences.constant(Fraction(3, 2)), Fin)
        if [(item['kind'], item['values'], item['kept'], item['decision']['verdict']) for item in res] == [('constant', ['3/2', '3/2'], True, 'NotIn')]:
            raise Success

    @TestCase
    def trace_drops_null_domain():
        res = sequences.trace(sequences.indicator(natset.finite([1, 2])), Fin)
        kept = dict((item['values'][0], item['kept']) for item in res)
        if kept == {'1/1': False, '0/1': True} and all(item['decision']['evidence'] for item in res):
            raise Success

    ### export
    @TestCase
    def prefix_sup_paired():
        x = sequences.paired(sequences.constant(1), z)
        if sequences.prefix_sup(x, 1000) == 1:
            raise Success

    @TestCase
    def csv_rows():
        rows = sequences.csv(sequences.constant(Fraction(1, 3)), 2, 4)
        if rows == [(0, '0.3333', '1/3'), (1, '0.3333', '1/3')]:
            raise Success

    @TestCase
    def json_steps():
        x = family('01')
        res = x.json()
        if res['type'] == 'steps' and res['rule']['kind'] == 'columns' and res['else'] == '0/1' and sequences.fromjson(res).eval(40) == x.eval(40):
            raise Success

if __name__ == '__main__':
    results = []
    for t in TestCaseList:
        results.append( t() )
    sys.exit(0 if all(results) else 1)
