"""
Command line interface: ``ramsey-turan <command> [options]``.

Graphs are read as graph6 lines from ``--input`` (standard input by default), vertex sets are written as
``0,3,5-7``. Exit status is 0 on success, 1 for invalid input or arguments and 2 when an audit fails.
"""
import argparse
import logging
import sys
from fractions import Fraction

from tri_declarative import (
    Refinable,
    RefinableObject,
    dispatch,
)
from tri_struct import Struct

from ramsey_turan import conf
from ramsey_turan.base import (
    RamseyTuranException,
    members,
    popcount,
)
from ramsey_turan.constructions import (
    BlowupWeights,
    andrasfai,
    balanced_blowup,
    blow_up,
    extremal_blowup,
    is_blowup_of,
    twin_contraction,
)
from ramsey_turan.formulas import (
    density_point,
    density_table,
    formula_point,
    formula_table,
)
from ramsey_turan.graph import (
    check_vertex_set,
    degree_profile,
    find_triangle,
    is_triangle_free,
    to_dot,
)
from ramsey_turan.graph6 import (
    decode_graph6,
    format_graph6,
    read_graph6_lines,
)
from ramsey_turan.properties import run_property_suites
from ramsey_turan.reports import (
    to_csv,
    to_json,
)
from ramsey_turan.search import (
    SearchProblem,
    ex_search,
    verify_table,
)
from ramsey_turan.solvers import (
    independence_number,
    max_bipartite_matching,
    maximum_independent_set,
)
from ramsey_turan.trace import (
    SEARCH,
    set_trace,
)
from ramsey_turan.transforms import (
    enforce_pair_structure,
    enforce_triple_structure,
    grow_disjoint_pair,
    isolate_unmatched,
    sym,
    zykov_symmetrise,
)
from ramsey_turan.validation import (
    AuditReport,
    choose_q,
    extremal_family_audit,
    joined_pair_audit,
    minimal_andrasfai_template,
    prop32_audit,
    three_sets_audit,
)
from ramsey_turan.vertex_sets import (
    parse_vertex_set,
    parse_weights,
)

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_AUDIT_FAILED = 2

FORMATS = ['json', 'csv', 'graph6', 'dot']

_FORMATS_BY_COMMAND = {
    'construct': ['graph6', 'dot', 'json'],
    'formulas': ['json', 'csv'],
    'search': ['json', 'csv', 'graph6'],
    'verify': ['json', 'csv'],
    'transform': ['graph6', 'dot', 'json'],
    'inspect': ['json', 'csv'],
}


class CliException(RamseyTuranException):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise CliException(message)


class RunConfig(RefinableObject):
    """
    Everything one invocation needs besides the command specific options.
    """

    command = Refinable()
    target = Refinable()
    format = Refinable()
    input = Refinable()
    output = Refinable()
    workers = Refinable()
    seed = Refinable()
    trace = Refinable()
    stats = Refinable()
    options = Refinable()

    @dispatch(
        target=None,
        format=None,
        input='-',
        output=None,
        workers=conf.DEFAULT_WORKERS,
        seed=conf.DEFAULT_SEED,
        trace=None,
        stats=False,
        options=None,
    )
    def __init__(self, **kwargs):
        super().__init__(**kwargs)
        if self.options is None:
            self.options = Struct()
        if self.format is None:
            self.format = _FORMATS_BY_COMMAND[self.command][0]
        if self.format not in _FORMATS_BY_COMMAND[self.command]:
            raise CliException(f'format {self.format} is not supported by {self.command}')

    @classmethod
    def from_arguments(cls, arguments):
        arguments = dict(vars(arguments))
        settings = {key: arguments.pop(key, None) for key in ['command', 'target', 'format', 'input', 'output', 'workers', 'seed', 'trace', 'stats']}
        return cls(
            options=Struct(arguments),
            **{key: value for key, value in settings.items() if value is not None},
        )


def _common_arguments():
    common = _Parser(add_help=False)
    common.add_argument('--format', choices=FORMATS)
    common.add_argument('--output', help='write to this file instead of standard output')
    common.add_argument('--input', help='read graph6 from this file, - for standard input')
    common.add_argument('--trace', choices=['all', 'progress'], help='log search progress to standard error')
    common.add_argument('--stats', action='store_true', help='include timings and node counts')
    common.add_argument('--workers', type=int)
    common.add_argument('--seed', type=int)
    return common


def _search_arguments(parser):
    parser.add_argument('--witnesses', action='store_true', help='collect every extremal graph')
    parser.add_argument('--node-limit', type=int, default=conf.DEFAULT_NODE_LIMIT)
    parser.add_argument('--split-depth', type=int)


def create_parser():
    common = _common_arguments()
    parser = _Parser(prog='ramsey-turan', description='Triangle-free graphs with bounded independence number.')
    commands = parser.add_subparsers(dest='command', required=True, parser_class=_Parser)

    construct = commands.add_parser('construct', parents=[common], help='Andrásfai graphs and their blow-ups')
    construct.add_argument('target', choices=['andrasfai', 'blowup', 'extremal', 'balanced'])
    construct.add_argument('--k', type=int)
    construct.add_argument('--m', type=int)
    construct.add_argument('--n', type=int)
    construct.add_argument('--s', type=int)
    construct.add_argument('--weights')
    construct.add_argument('--template', help='template graph as a graph6 string')

    formulas = commands.add_parser('formulas', parents=[common], help='closed-form values')
    formulas.add_argument('--n', type=int)
    formulas.add_argument('--s', type=int)
    formulas.add_argument('--n-min', type=int, default=1)
    formulas.add_argument('--n-max', type=int)
    formulas.add_argument('--alpha', help='density p/q')
    formulas.add_argument('--denominator', type=int)

    search = commands.add_parser('search', parents=[common], help='exhaustive computation of ex(n, s)')
    search.add_argument('--n', type=int)
    search.add_argument('--s', type=int)
    search.add_argument('--n-max', type=int, help='search every (n, s) up to this order and compare with the formulas')
    _search_arguments(search)

    verify = commands.add_parser('verify', parents=[common], help='audits and property suites')
    verify.add_argument('target', choices=['audit', 'properties', 'table'])
    verify.add_argument('--kind', choices=['prop32', 'family', 'joined-pair', 'three-sets'], default='prop32')
    verify.add_argument('--a')
    verify.add_argument('--b')
    verify.add_argument('--c')
    verify.add_argument('--q')
    verify.add_argument('--s', type=int)
    verify.add_argument('--instances', type=int, default=1000)
    verify.add_argument('--max-order', type=int, default=10)
    verify.add_argument('--n-max', type=int)
    _search_arguments(verify)

    transform = commands.add_parser('transform', parents=[common], help='symmetrisation and its pipelines')
    transform.add_argument('--op', choices=['sym', 'isolate', 'zykov', 'pair', 'triple', 'grow-pair'], required=True)
    transform.add_argument('--a')
    transform.add_argument('--b')
    transform.add_argument('--c')
    transform.add_argument('--u', type=int)
    transform.add_argument('--v', type=int)
    transform.add_argument('--s', type=int)

    commands.add_parser('inspect', parents=[common], help='invariants of graph6 input')
    return parser


def _require(options, *names):
    for name in names:
        if options.get(name) is None:
            raise CliException(f'--{name.replace("_", "-")} is required')


def _vertex_set(g, text, name):
    return check_vertex_set(g, parse_vertex_set(text), name=name)


def _read_graphs(config, stdin):
    if config.input == '-':
        data = stdin.buffer.read() if hasattr(stdin, 'buffer') else stdin.read()
    else:
        try:
            with open(config.input, 'rb') as f:
                data = f.read()
        except OSError as e:
            raise CliException(f'can not read {config.input}: {e.strerror}') from e
    graphs = read_graph6_lines(data)
    if not graphs:
        raise CliException('no graph on input')
    return graphs


def _graph_output(config, g, details):
    if config.format == 'graph6':
        return format_graph6(g) + '\n'
    if config.format == 'dot':
        return to_dot(g)
    return Struct(graph6=format_graph6(g), order=g.order, edges=g.edge_count, **details)


def _construct(config, stdin):
    options = config.options
    target = config.target
    if target == 'andrasfai':
        _require(options, 'k')
        return _graph_output(config, andrasfai(options.k), dict(k=options.k))
    if target == 'balanced':
        _require(options, 'k', 'm')
        return _graph_output(config, balanced_blowup(options.k, options.m), dict(k=options.k, m=options.m))
    if target == 'extremal':
        _require(options, 'n', 's')
        g, k, weights = extremal_blowup(options.n, options.s)
        return _graph_output(config, g, dict(k=k, weights=weights))
    assert target == 'blowup'
    _require(options, 'weights')
    if options.template is not None:
        template = decode_graph6(options.template)
    else:
        _require(options, 'k')
        template = andrasfai(options.k)
    weights = parse_weights(options.weights)
    return _graph_output(config, blow_up(BlowupWeights(template, weights)), dict(weights=weights))


def _formulas(config, stdin):
    options = config.options
    if options.alpha is not None:
        try:
            alpha = Fraction(options.alpha)
        except (ValueError, ZeroDivisionError) as e:
            raise CliException(f'invalid density {options.alpha!r}') from e
        return density_point(alpha)
    if options.denominator is not None:
        return density_table(options.denominator)
    if options.n_max is not None:
        return formula_table(options.n_max, n_min=options.n_min)
    _require(options, 'n', 's')
    return formula_point(options.n, options.s)


def _search_kwargs(config):
    return dict(
        witnesses=config.options.witnesses,
        workers=config.workers,
        node_limit=config.options.node_limit,
        split_depth=config.options.split_depth,
    )


def _search(config, stdin):
    options = config.options
    if options.n_max is not None:
        return verify_table(options.n_max, **_search_kwargs(config))
    _require(options, 'n', 's')
    report = ex_search(SearchProblem(n=options.n, s=options.s, **_search_kwargs(config)))
    if config.format == 'graph6':
        return ''.join(code + '\n' for code in report.witnesses)
    return report


def _audit(config, stdin):
    options = config.options
    graphs = _read_graphs(config, stdin)
    if options.kind == 'family':
        n = graphs[0].order
        s = options.s if options.s is not None else max(independence_number(g) for g in graphs)
        return extremal_family_audit(graphs, n, s)

    reports = []
    for g in graphs:
        if options.kind == 'prop32':
            a = _vertex_set(g, options.a, 'a') if options.a is not None else maximum_independent_set(g)
            q = _vertex_set(g, options.q, 'q') if options.q is not None else choose_q(g, a)
            reports.append(prop32_audit(g, a, q))
        elif options.kind == 'joined-pair':
            _require(options, 'a', 'b')
            reports.append(joined_pair_audit(g, _vertex_set(g, options.a, 'a'), _vertex_set(g, options.b, 'b')))
        else:
            _require(options, 'a', 'b', 'c')
            reports.append(three_sets_audit(g, *[_vertex_set(g, getattr(options, x), x) for x in 'abc']))
    return reports[0] if len(reports) == 1 else AuditReport.merge(reports, subject=options.kind)


def _verify(config, stdin):
    options = config.options
    if config.target == 'table':
        _require(options, 'n_max')
        return verify_table(options.n_max, **_search_kwargs(config))
    if config.target == 'properties':
        reports = run_property_suites(seed=config.seed, instances=options.instances, max_order=options.max_order)
        return AuditReport.merge(reports, subject='properties')
    return _audit(config, stdin)


def _stage_list(stages):
    return [Struct(s) for s in stages]


def _transform(config, stdin):
    options = config.options
    g = _read_graphs(config, stdin)[0]
    op = options.op
    details = {}
    if op == 'sym':
        _require(options, 'a', 'b')
        result = sym(g, _vertex_set(g, options.a, 'a'), _vertex_set(g, options.b, 'b'))
    elif op == 'zykov':
        _require(options, 'u', 'v')
        result = zykov_symmetrise(g, options.u, options.v)
    elif op == 'isolate':
        a = _vertex_set(g, options.a, 'a') if options.a is not None else maximum_independent_set(g)
        matching = max_bipartite_matching(g, g.all_vertices & ~a, a)
        result = isolate_unmatched(g, a, matching)
        details = dict(a=members(a), matching=[list(p) for p in matching.pairs])
    elif op == 'pair':
        s = options.s if options.s is not None else independence_number(g)
        structure = enforce_pair_structure(g, s)
        result = structure.graph
        details = dict(
            a=members(structure.a),
            b=members(structure.b),
            a_prime=members(structure.a_prime),
            b_prime=members(structure.b_prime),
            valid=structure.is_valid,
            stages=_stage_list(structure.stages),
        )
    elif op == 'triple':
        _require(options, 'a', 'b', 'c')
        structure = enforce_triple_structure(g, *[_vertex_set(g, getattr(options, x), x) for x in 'abc'])
        result = structure.graph
        details = dict(
            a_prime=members(structure.a_prime),
            b_prime=members(structure.b_prime),
            c_prime=members(structure.c_prime),
            valid=structure.is_valid,
            stages=_stage_list(structure.stages),
        )
    else:
        assert op == 'grow-pair'
        step = grow_disjoint_pair(g, options.s)
        result = step.graph
        details = dict(case=step.case, x=members(step.x), y=members(step.y), stages=_stage_list(step.stages))
    return _graph_output(config, result, details)


def inspect_graph(g):
    degrees, max_degree = degree_profile(g)
    independent = maximum_independent_set(g)
    contracted, classes = twin_contraction(g)
    k = minimal_andrasfai_template(g)
    return Struct(
        graph6=format_graph6(g),
        order=g.order,
        edges=g.edge_count,
        triangle_free=is_triangle_free(g),
        triangle=find_triangle(g),
        alpha=popcount(independent),
        independent_set=members(independent),
        degrees=degrees,
        max_degree=max_degree,
        twin_classes=[list(c) for c in classes],
        contracted=format_graph6(contracted),
        andrasfai_k=k,
        blowup_weights=is_blowup_of(g, andrasfai(k)) if k is not None else None,
    )


def _inspect(config, stdin):
    return [inspect_graph(g) for g in _read_graphs(config, stdin)]


_COMMANDS = {
    'construct': _construct,
    'formulas': _formulas,
    'search': _search,
    'verify': _verify,
    'transform': _transform,
    'inspect': _inspect,
}


def _render(config, result):
    if isinstance(result, str):
        return result
    if isinstance(result, AuditReport):
        result = result.as_struct()
    if config.format == 'csv':
        if isinstance(result, dict) and 'checks' in result:
            rows = result.checks
        elif isinstance(result, dict) and 'rows' in result:
            rows = result.rows
        else:
            rows = result if isinstance(result, list) else [result]
        return to_csv(rows, stats=config.stats)
    return to_json(result, stats=config.stats)


def _passed(result):
    if isinstance(result, AuditReport):
        return result.passed
    if isinstance(result, dict) and 'passed' in result:
        return result.passed
    return True


def _configure_logging(config):
    if config.trace is None:
        return
    set_trace(config.trace)
    logging.basicConfig(level=SEARCH, format='%(levelname)s %(message)s', stream=sys.stderr)


def run(argv, stdin=None, stdout=None, stderr=None):
    stdin = sys.stdin if stdin is None else stdin
    stdout = sys.stdout if stdout is None else stdout
    stderr = sys.stderr if stderr is None else stderr
    try:
        config = RunConfig.from_arguments(create_parser().parse_args(argv))
        _configure_logging(config)
        result = _COMMANDS[config.command](config, stdin)
        text = _render(config, result)
        if config.output is None:
            stdout.write(text)
        else:
            with open(config.output, 'w', encoding='utf-8') as f:
                f.write(text)
    except RamseyTuranException as e:
        stderr.write(f'error: {e}\n')
        return EXIT_ERROR
    except OSError as e:
        stderr.write(f'error: {e}\n')
        return EXIT_ERROR
    except SystemExit as e:
        return e.code or EXIT_OK
    return EXIT_OK if _passed(result) else EXIT_AUDIT_FAILED


def main():
    sys.exit(run(sys.argv[1:]))
