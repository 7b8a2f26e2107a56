"""Command line interface.

    idealim construct {family,adsets,scheme,target,embedding} [options]
    idealim cluster --seq NOTATION [--prefix N --epsilon E]
    idealim norm --seq NOTATION
    idealim verify [--suite NAME]

Sequences and compact sets are given either as JSON documents or in a short
form such as ``family:0110``, ``indicator:arith(0,2)`` or
``scaled:1,1/3(points:1)``.
"""
import sys,json,csv,logging,argparse
from fractions import Fraction
import pyparsing as pp
from . import config,error,utils,natset,ideals,sequences,cluster,construct,verify
Config = config.defaults
Log = Config.log.getChild('cli')

__all__ = 'NotationGrammar,descriptor,sequence,ideal,main'.split(',')

### short notation
def _evaluate(item, kwds):
    if isinstance(item, pp.ParseResults):
        return [_evaluate(res, kwds) for res in item]
    return item.eval(**kwds) if hasattr(item, 'eval') else item

class NotationGrammar:
    pp.ParserElement.enablePackrat()

    ## character sets
    cBits = '01'
    cNatsets = 'arith finite cofinite poly branch'

    ## token types
    tInteger = pp.Word(pp.nums)
    tSign = pp.oneOf('+ -')
    tSlash = pp.Literal('/')
    tColon, tComma, tSemicolon = pp.Literal(':'), pp.Literal(','), pp.Literal(';')
    tBegin, tEnd = pp.Literal('('), pp.Literal(')')
    tBits = pp.Word(cBits)

    # compact sets
    tPoints, tInterval, tCantor = pp.Keyword('points'), pp.Keyword('interval'), pp.Keyword('cantor')
    tScaled, tUnion = pp.Keyword('scaled'), pp.Keyword('union')

    # sequences
    tConstant, tIndicator, tFamily = pp.Keyword('constant'), pp.Keyword('indicator'), pp.Keyword('family')
    tTarget, tZ = pp.Keyword('target'), pp.Keyword('z')
    tNatset = pp.MatchFirst([pp.Keyword(name) for name in cNatsets.split()])

    ## Grammar
    kDescriptor = pp.Forward()

    kBegin, kEnd = pp.Suppress(tBegin), pp.Suppress(tEnd)
    kColon, kComma = pp.Suppress(tColon), pp.Suppress(tComma)
    kRational = pp.Combine(pp.Optional(tSign) + tInteger + pp.Optional(tSlash + tInteger))
    kRational.setName('kRational')
    kRationals = pp.Group(pp.delimitedList(kRational))

    kNatset = pp.Group(tNatset + kBegin + pp.Group(pp.Optional(pp.delimitedList(tInteger))) + kEnd)
    kNatset.setName('kNatset')

    kPoints = pp.Group(pp.Suppress(tPoints) + kColon + kRationals)
    kInterval = pp.Group(pp.Suppress(tInterval) + kColon + kRational + kComma + kRational)
    kCantor = pp.Group(pp.Suppress(tCantor) + kColon + kRational + kComma + kRational)
    kScaled = pp.Group(pp.Suppress(tScaled) + kColon + kRational + kComma + kRational + kBegin + kDescriptor + kEnd)
    kUnion = pp.Group(pp.Suppress(tUnion) + kBegin + pp.delimitedList(kDescriptor, delim=';') + kEnd)
    kDescriptor << (kScaled | kUnion | kPoints | kInterval | kCantor)
    kDescriptor.setName('kDescriptor')

    kConstant = pp.Group(pp.Suppress(tConstant) + kColon + kRational)
    kIndicator = pp.Group(pp.Suppress(tIndicator) + kColon + kNatset)
    kFamily = pp.Group(pp.Suppress(tFamily) + kColon + tBits)
    kTarget = pp.Group(pp.Suppress(tTarget) + kColon + kDescriptor)
    kZ = pp.Group(tZ)
    kSequence = kConstant | kIndicator | kFamily | kTarget | kZ
    kSequence.setName('kSequence')

    ## grammar reductions
    class rational(object):
        def __init__(self, tokens):
            self.value, = tokens
        def __repr__(self):
            return self.value
        def eval(self, **kwds):
            try:
                return Fraction(self.value)
            except ZeroDivisionError:
                raise error.SerializationError(self.value, 'the denominator is zero')
    kRational.setParseAction(rational)

    def reduction(build):
        class tokens(object):
            def __init__(self, tokens):
                self.value = tokens[0]
            def __repr__(self):
                return '{:s}({:s})'.format(self.build.__name__, ','.join(map(repr, self.value)))
            def eval(self, **kwds):
                return self.build(*_evaluate(self.value, kwds), **kwds)
        tokens.build = staticmethod(build)
        return tokens

    def natset(name, arguments, **kwds):
        if name == 'branch':
            if len(arguments) != 1 or any(ch not in '01' for ch in arguments[0]):
                raise error.InputError(arguments, 'natset', 'branch takes one 0-1 string')
            return natset.branch(arguments[0])
        values = [int(item) for item in arguments]
        if name == 'finite':
            return natset.finite(values)
        if name == 'cofinite':
            return natset.cofinite(values)
        if name == 'poly':
            return natset.poly(values)
        if len(values) != 2:
            raise error.InputError(arguments, 'natset', 'arith takes a first element and a step')
        return natset.arith(*values)
    kNatset.setParseAction(reduction(natset))

    def points(values, **kwds):
        return cluster.points(values)
    def interval(a, b, **kwds):
        return cluster.interval(a, b)
    def cantor(a, b, **kwds):
        return cluster.ternary_cantor(a, b)
    def scaled(scale, ratio, base, **kwds):
        return cluster.scaled_union(base, scale, ratio)
    def union(*parts, **kwds):
        return cluster.union_of(parts)
    kPoints.setParseAction(reduction(points))
    kInterval.setParseAction(reduction(interval))
    kCantor.setParseAction(reduction(cantor))
    kScaled.setParseAction(reduction(scaled))
    kUnion.setParseAction(reduction(union))

    def constant(value, **kwds):
        return sequences.constant(value)
    def indicator(S, **kwds):
        return sequences.indicator(S)
    def family(bits, **kwds):
        return construct.c0_family(kwds['ideal'], [bits])[0]
    def target(D, **kwds):
        return construct.with_cluster_set(kwds['ideal'], D, kwds.get('depth'))
    def z(*tokens, **kwds):
        return construct.z_sequence(kwds['ideal'])
    kConstant.setParseAction(reduction(constant))
    kIndicator.setParseAction(reduction(indicator))
    kFamily.setParseAction(reduction(family))
    kTarget.setParseAction(reduction(target))
    kZ.setParseAction(reduction(z))

    kDescriptorInput = kDescriptor + pp.StringEnd()
    kSequenceInput = kSequence + pp.StringEnd()

def _parse(element, text, **kwds):
    try:
        res, = element.parseString(text.strip())
    except pp.ParseBaseException as e:
        raise error.SerializationError(text, 'malformed notation at column {:d} : {:s}'.format(e.col, e.msg))
    return res.eval(**kwds)

def _document(text, decode):
    try:
        res = json.loads(text)
    except ValueError as e:
        raise error.SerializationError(text, 'invalid JSON : {!s}'.format(e))
    try:
        return decode(res)
    except (KeyError, TypeError) as e:
        raise error.SerializationError(res, 'missing or malformed field {!s}'.format(e))

def descriptor(text):
    '''Compact set from a JSON document or the short notation'''
    if text.lstrip().startswith('{'):
        return _document(text, cluster.fromjson)
    return _parse(NotationGrammar.kDescriptorInput, text)

def sequence(text, I, depth=None):
    '''Sequence from a JSON document or the short notation, built over the witness of ``I``'''
    if text.lstrip().startswith('{'):
        return _document(text, sequences.fromjson)
    return _parse(NotationGrammar.kSequenceInput, text, ideal=I, depth=depth)

_ideals = {'fin': ideals.fin, 'density': ideals.density_zero, 'summable': ideals.summable}
def ideal(text):
    '''Ideal named fin, density or summable, or given as a JSON descriptor'''
    if text.lstrip().startswith('{'):
        return _document(text, ideals.fromjson)
    if text not in _ideals:
        raise error.InputError(text, 'ideal', 'expected fin, density, summable or a JSON descriptor')
    return _ideals[text]()

### commands
class commands(utils.definition):
    cache = {}
    attribute = 'name'

def _prefix(N):
    if N < 1:
        raise error.InputError(N, 'prefix', 'the prefix length must be positive')
    if N > Config.cli.max_prefix:
        raise error.InputError(N, 'prefix', 'prefix {:d} exceeds the limit {:d} set by {:s}'.format(N, Config.cli.max_prefix, Config.cli.environment))
    return N

def _epsilon(text):
    res = utils.rational(text)
    if res <= 0:
        raise error.InputError(text, 'epsilon', 'epsilon must be positive')
    return res

def _seeds(args):
    '''Seeds named by --seeds: a count of seeds of length --depth, or comma separated 0-1 strings'''
    text = (args.seeds or '').strip()
    if not text:
        return None
    if text.isdigit():
        count = int(text)
        if count < 1:
            raise error.InputError(text, 'seeds', 'the seed count must be positive')
        return construct.seeds(count, max(3, (count - 1).bit_length()) if args.depth is None else args.depth)
    return [construct.seed(item.strip()) for item in text.split(',') if item.strip()]

def _subject(args, I):
    if args.seq is not None:
        return sequence(args.seq, I, args.depth)
    if args.target is not None:
        return construct.with_cluster_set(I, descriptor(args.target), args.depth)
    raise error.InputError(args, 'subject', 'one of --seq or --target is required')

class command(object):
    """Subcommand: ``arguments`` declares its options and ``command`` returns (document, status, rows)"""
    name = None
    @classmethod
    def arguments(cls, parser):
        pass
    @staticmethod
    def command(args):
        raise NotImplementedError

@commands.define
class construct_command(command):
    """build a construction and write its JSON manifest"""
    name = 'construct'
    kinds = 'family,adsets,scheme,target,embedding'.split(',')

    @classmethod
    def arguments(cls, parser):
        parser.add_argument('kind', choices=cls.kinds, help='construction to build')
        parser.add_argument('--emit-prefix', type=int, default=None, dest='emit_prefix', help='also write the first N values of every constructed sequence')

    @staticmethod
    def command(args):
        I = ideal(args.ideal or 'fin')
        codes = _seeds(args) or construct.seeds(4, 3)
        params = {}
        if args.kind == 'family':
            objects, params['seeds'] = construct.c0_family(I, codes), [item.bits for item in codes]
        elif args.kind == 'adsets':
            objects, params['seeds'] = [construct.i_ad_set(I, item) for item in codes], [item.bits for item in codes]
        elif args.kind == 'scheme':
            item = construct.cantor_scheme(I, depth=args.depth)
            objects, params['checks'] = [item], len(item.checks)
        elif args.kind == 'target':
            if args.target is None:
                raise error.InputError(args, 'construct', 'a target construction needs --target')
            D = descriptor(args.target)
            objects = [construct.with_cluster_set(I, D, args.depth)]
            params.update(target=D.json(), depth=args.depth, error=construct.truncation_error(D, args.depth))
        else:
            if args.seq is None:
                raise error.InputError(args, 'construct', 'an embedding needs --seq')
            objects = [construct.interval_embedding(sequence(args.seq, I, args.depth), I)]
        res, rows = construct.manifest(args.kind, I, objects, **params), None
        if args.emit_prefix is not None:
            N, items = _prefix(args.emit_prefix), [item for item in objects if isinstance(item, sequences.type)]
            res['prefix'] = [[utils.fraction(item.eval(n)) for n in range(N)] for item in items]
            rows = [('object', 'n', 'decimal', 'fraction')]
            rows.extend((index,) + row for index, item in enumerate(items) for row in sequences.csv(item, N))
        return res, 0, rows

@commands.define
class cluster_command(command):
    """compute the I-cluster set of a sequence"""
    name = 'cluster'

    @staticmethod
    def command(args):
        I = ideal(args.ideal or 'fin')
        x = _subject(args, I)
        N = None if args.prefix is None else _prefix(args.prefix)
        epsilon = _epsilon(args.epsilon or '1/100')
        res = cluster.report(x, I, N, epsilon)
        if args.strict and res.undecided:
            raise error.Indeterminate(x, 'cluster', res.reason)
        rows = None
        if res.approx is not None:
            rows = [('point', 'decimal')] + [(utils.fraction(t), utils.decimal(t, Config.sequences.precision)) for t in res.approx['points']]
        return {'ideal': I.json(), 'sequence': x.json(), 'cluster': res.json()}, 0, rows

def _decided(fn, strict):
    try:
        return {'value': utils.fraction(fn())}
    except error.Indeterminate as e:
        if strict:
            raise
        res = {'value': None, 'reason': e.message}
        if e.bracket is not None:
            res['bracket'] = [utils.fraction(item) for item in e.bracket]
        return res

@commands.define
class norm_command(command):
    """compute the quotient norm and the I-limits of a sequence"""
    name = 'norm'

    @staticmethod
    def command(args):
        I = ideal(args.ideal or 'fin')
        x = _subject(args, I)
        res = {'ideal': I.json(), 'sequence': x.json()}
        for key, fn in (('norm', sequences.quotient_norm), ('limsup', sequences.i_limsup), ('liminf', sequences.i_liminf)):
            res[key] = _decided(lambda fn=fn: fn(x, I), args.strict)
        res['quotient_norm'], res['trace'] = res['norm']['value'], sequences.trace(x, I)
        return res, 0, None

@commands.define
class verify_command(command):
    """run the verification suites"""
    name = 'verify'

    @classmethod
    def arguments(cls, parser):
        parser.add_argument('--suite', default='all', choices=verify.order + ['all'], help='suite to run')

    @staticmethod
    def command(args):
        items = None if args.ideal is None else [ideal(args.ideal)]
        results = verify.run(args.suite, items, seeds=_seeds(args), depth=args.depth)
        passed, failed = sum(item.passed for item in results), sum(item.failed for item in results)
        res = {'suites': [item.json() for item in results], 'passed': passed, 'failed': failed}
        if args.strict and any(item.indeterminate for item in results):
            return res, 3, None
        return res, 1 if failed else 0, None

class argparser(argparse.ArgumentParser):
    """Argument parser reporting its failures as input errors"""
    def error(self, message):
        raise error.InputError(self.prog, 'arguments', message)

def parser():
    common = argparser(add_help=False)
    common.add_argument('--ideal', default=None, help='fin, density, summable or a JSON ideal descriptor')
    common.add_argument('--seq', default=None, help='sequence as the short notation or JSON')
    common.add_argument('--target', default=None, help='compact set as the short notation or JSON')
    common.add_argument('--seeds', default=None, help='seed count, or comma separated 0-1 seeds of the families and the almost disjoint sets')
    common.add_argument('--depth', type=int, default=None, help='truncation depth of scheme-built constructions')
    common.add_argument('--prefix', type=int, default=None, help='prefix length N of the prefix oracle')
    common.add_argument('--epsilon', default=None, help='grid resolution of the prefix oracle, as p/q')
    common.add_argument('--out', default=None, help='write the result to this file instead of stdout')
    common.add_argument('--format', choices=('json', 'csv'), default='json', help='output format')
    common.add_argument('--strict', action='store_true', default=False, help='exit with status 3 when a verdict is undecided')
    common.add_argument('-v', action='count', dest='verbose', default=0, help='log progress, twice for debugging')

    res = argparser(prog='idealim', description='ideal convergence of rational sequences')
    subparsers = res.add_subparsers(dest='command', parser_class=argparser)
    subparsers.required = True
    for name in ('construct', 'cluster', 'norm', 'verify'):
        definition = commands.lookup(name)
        item = subparsers.add_parser(name, parents=[common], help=definition.__doc__, description=definition.__doc__)
        definition.arguments(item)
    return res

def _emit(document, rows, args):
    if args.format == 'csv' and rows is None:
        raise error.InputError(args.format, 'emit', 'this command has no CSV output')
    stream = open(args.out, 'w', newline='') if args.out else sys.stdout
    try:
        if args.format == 'csv':
            csv.writer(stream).writerows(rows)
        else:
            stream.write(json.dumps(document, indent=Config.cli.indent, sort_keys=True) + '\n')
    finally:
        if args.out:
            stream.close()
    return

def _fail(e):
    sys.stderr.write(json.dumps({'error': e.__class__.__name__, 'message': str(e)}) + '\n')

def main(argv=None):
    '''Run the command line ``argv`` and return the exit status'''
    try:
        args = parser().parse_args(argv)
    except error.InputError as e:
        Log.info('main : arguments : {!s}'.format(e))
        _fail(e)
        return 2
    Config.log.setLevel({0: logging.WARNING, 1: logging.INFO}.get(args.verbose, logging.DEBUG))
    try:
        document, status, rows = commands.lookup(args.command).command(args)
        _emit(document, rows, args)
    except error.Indeterminate as e:
        Log.info('main : {:s} : undecided : {!s}'.format(args.command, e))
        _fail(e)
        return 3
    except (error.Base, IOError) as e:
        Log.info('main : {:s} : {!s}'.format(args.command, e))
        _fail(e)
        return 2
    return status

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
    import idealim.cli as cli, idealim.cluster as cluster, idealim.sequences as sequences, idealim.natset as natset, idealim.ideals as ideals, idealim.construct as construct, idealim.utils as utils
    from idealim import error, config
    from fractions import Fraction
    import io, json, contextlib, idealim

    Fin = ideals.fin()

    def run(*argv):
        out, err = io.StringIO(), io.StringIO()
        with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
            status = cli.main(list(argv))
        return status, out.getvalue(), err.getvalue()

    ### short notation
    @TestCase
    def notation_interval():
        if cli.descriptor('interval:-1,1') == cluster.interval(-1, 1):
            raise Success

    @TestCase
    def notation_points():
        if cli.descriptor('points:0,1/2') == cluster.points([0, Fraction(1, 2)]):
            raise Success

    @TestCase
    def notation_cantor():
        if cli.descriptor('cantor:0,1') == cluster.ternary_cantor(0, 1):
            raise Success

    @TestCase
    def notation_scaled():
        res = cli.descriptor('scaled:1,1/3(points:1)')
        if res == cluster.scaled_union(cluster.points([1]), 1, Fraction(1, 3)):
            raise Success

    @TestCase
    def notation_union():
        res = cli.descriptor('union(points:5;interval:0,1)')
        if isinstance(res, cluster.union_of) and len(res.parts) == 2:
            raise Success

    @TestCase
    def notation_json_descriptor():
        if cli.descriptor(json.dumps(cluster.interval(0, 1).json())) == cluster.interval(0, 1):
            raise Success

    @TestCase
    def notation_constant():
        x = cli.sequence('constant:3/2', Fin)
        if isinstance(x, sequences.constant) and x.eval(7) == Fraction(3, 2):
            raise Success

    @TestCase
    def notation_indicator():
        x = cli.sequence('indicator:arith(0,2)', Fin)
        if [x.eval(n) for n in range(4)] == [1, 0, 1, 0]:
            raise Success

    @TestCase
    def notation_indicator_branch():
        x = cli.sequence('indicator:branch(0110)', Fin)
        if isinstance(x.set, natset.branch):
            raise Success

    @TestCase
    def notation_family():
        x = cli.sequence('family:0110', Fin)
        if isinstance(x, sequences.steps) and x.blocks == ideals.bp_witness(Fin):
            raise Success

    @TestCase
    def notation_z():
        if isinstance(cli.sequence('z', Fin), sequences.steps):
            raise Success

    @TestCase
    def notation_malformed():
        try:
            cli.sequence('constant:', Fin)
        except error.SerializationError:
            raise Success

    @TestCase
    def notation_trailing():
        try:
            cli.descriptor('interval:0,1 junk')
        except error.SerializationError:
            raise Success

    @TestCase
    def ideal_names():
        if [cli.ideal(name).type for name in ('fin', 'density', 'summable')] == ['fin', 'density_zero', 'summable']:
            raise Success

    @TestCase
    def ideal_maximal_refused():
        try:
            cli.ideal('{"type": "maximal"}')
        except error.DegenerateIdeal:
            raise Success

    ### commands
    @TestCase
    def main_norm():
        status, out, _ = run('norm', '--seq', 'indicator:arith(0,2)', '--ideal', 'density')
        res = json.loads(out)
        if status == 0 and res['norm']['value'] == '1/1' and res['liminf']['value'] == '0/1':
            raise Success

    @TestCase
    def main_norm_constant():
        status, out, _ = run('norm', '--ideal', 'fin', '--seq', 'constant:3/2')
        res = json.loads(out)
        if status == 0 and res['quotient_norm'] == '3/2' and [item['decision']['verdict'] for item in res['trace']] == ['NotIn'] and res['trace'][0]['decision']['evidence']:
            raise Success

    @TestCase
    def main_norm_trace_drops():
        status, out, _ = run('norm', '--ideal', 'fin', '--seq', 'indicator:finite(1,2)')
        res = json.loads(out)
        kept = sorted((item['values'][0], item['kept']) for item in res['trace'])
        if status == 0 and res['quotient_norm'] == '0/1' and kept == [('0/1', True), ('1/1', False)]:
            raise Success

    @TestCase
    def main_verify_seed_count():
        status, out, _ = run('verify', '--suite', 'c0family', '--ideal', 'density', '--seeds', '8', '--depth', '5')
        res = json.loads(out)
        if status == 0 and res['failed'] == 0 and res['passed'] == 28:
            raise Success

    @TestCase
    def main_seed_list():
        status, out, _ = run('construct', 'adsets', '--seeds', '011,', '--ideal', 'summable')
        res = json.loads(out)
        if status == 0 and res['params']['seeds'] == ['011']:
            raise Success

    @TestCase
    def main_argument_error():
        status, out, err = run('verify', '--suite', 'nonesuch')
        if status == 2 and not out and json.loads(err)['error'] == 'InputError':
            raise Success

    @TestCase
    def main_unknown_option():
        status, _, err = run('norm', '--seq', 'z', '--frobnicate')
        if status == 2 and 'frobnicate' in json.loads(err)['message']:
            raise Success

    @TestCase
    def main_construct_interval_prefix():
        status, out, _ = run('construct', 'target', '--ideal', 'density', '--target', 'interval:-1,1', '--emit-prefix', '100000')
        res = json.loads(out)
        x = construct.with_cluster_set(ideals.density_zero(), cluster.interval(-1, 1))
        values = res['prefix'][0]
        if status == 0 and len(values) == 100000 and all(values[n] == utils.fraction(x.eval(n)) for n in range(0, 100000, 997)):
            raise Success

    @TestCase
    def main_cluster():
        status, out, _ = run('cluster', '--seq', 'family:0110')
        res = json.loads(out)
        if status == 0 and res['cluster']['method'] == 'exact':
            raise Success

    @TestCase
    def main_cluster_strict():
        x = sequences.indicator(natset.intersection(natset.branch('1'), natset.arith(1, 2)))
        lenient, out, _ = run('cluster', '--seq', json.dumps(x.json()))
        strict, _, err = run('cluster', '--seq', json.dumps(x.json()), '--strict')
        if (lenient, strict) == (0, 3) and json.loads(out)['cluster']['exact'] is None and json.loads(err)['error'] == 'Indeterminate':
            raise Success

    @TestCase
    def main_validation_error():
        status, _, err = run('norm', '--seq', 'constant:1/0')
        if status == 2 and 'error' in json.loads(err):
            raise Success

    @TestCase
    def main_prefix_limit():
        limit = config.defaults.cli.max_prefix
        idealim.setmaxprefix(5000)
        try:
            status, _, err = run('cluster', '--seq', 'z', '--prefix', '5001')
        finally:
            idealim.setmaxprefix(limit)
        if status == 2 and json.loads(err)['error'] == 'InputError':
            raise Success

    @TestCase
    def main_construct_family():
        status, out, _ = run('construct', 'family', '--seeds', '01,10', '--emit-prefix', '8')
        res = json.loads(out)
        if status == 0 and res['construction'] == 'family' and len(res['objects']) == 2 and len(res['prefix'][0]) == 8:
            raise Success

    @TestCase
    def main_construct_target():
        status, out, _ = run('construct', 'target', '--target', 'cantor:0,1', '--depth', '3')
        res = json.loads(out)
        if status == 0 and res['params']['error'] == '1/27':
            raise Success

    @TestCase
    def main_construct_csv():
        status, out, _ = run('construct', 'family', '--seeds', '1', '--emit-prefix', '4', '--format', 'csv')
        lines = out.strip().splitlines()
        if status == 0 and lines[0].startswith('object,n') and len(lines) == 5:
            raise Success

    @TestCase
    def main_csv_unavailable():
        status, _, _ = run('norm', '--seq', 'z', '--format', 'csv')
        if status == 2:
            raise Success

    @TestCase
    def main_verify_suite():
        status, out, _ = run('verify', '--suite', 'c0family', '--ideal', 'fin')
        res = json.loads(out)
        if status == 0 and res['failed'] == 0 and res['suites'][0]['suite'] == 'c0family':
            raise Success

if __name__ == '__main__':
    import logging
    logging.root.setLevel(logging.INFO)

    results = []
    for t in TestCaseList:
        results.append( t() )
    sys.exit(0 if all(results) else 1)
