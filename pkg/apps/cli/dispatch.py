"""
The msrlab command line

Exit status 0 means the checked property holds, 1 that it is violated (the
report says where), 2 a usage or input-format error.
"""
import json
import logging
import sys

import numpy as np
from django.core.management.base import CommandError, CommandParser, OutputWrapper
from rest_framework import serializers

from ..bounds.exceptions import BoundViolated
from ..bounds.helpers import bound_report, consistency_assert
from ..bounds.models import CODE, SYSTEM
from ..bounds.serializers import BoundReportSerializer
from ..certificates.builders import (
    build_gamma, build_identity_family, build_lambda, build_R, build_T, build_upsilon,
    check_corollary1, greedy_pairing, log_partition, remaining_sets, sum_dim_check,
)
from ..certificates.exceptions import CounterexampleFound
from ..certificates.serializers import CorollarySerializer, FamilySerializer, SumDimensionSerializer
from ..codes.encoding import encode, random_fill, verify_mds
from ..codes.serializers import CodeFileSerializer, DataFileSerializer, MdsReportSerializer
from ..core.exceptions import MsrlabError
from ..core.utils import parse_index_list, parse_pairs, parse_partition
from ..ffalg.fields import field_make
from ..ffalg.matrices import as_lists
from ..reduction.conditions import RELAXED, check_sc
from ..reduction.exceptions import ConditionsFailed
from ..reduction.serializers import ConditionReportSerializer, SystemFileSerializer
from ..reduction.theta import theta_reduce
from ..repair.engine import bandwidth_of, execute_repair, naive_bandwidth, verify_scheme
from ..repair.exceptions import InconsistentNodeData, SchemeInvalid
from ..repair.serializers import SchemeFileSerializer, SchemeReportSerializer, TranscriptSerializer
from ..search.exceptions import BudgetExhausted, NoSchemeExists, WitnessRejected
from ..search.maxk import search_max_k
from ..search.models import SearchConfig
from ..search.schemes import search_scheme
from ..search.serializers import SchemeSearchSerializer, SearchResultSerializer
from .reports import (
    emit_report, format_basis, format_family, format_vector, format_violations, write_document,
)


logger = logging.getLogger(__name__)

FAMILIES = ('t', 'upsilon', 'r', 'lambda', 'gamma', 'identity', 'sum')

# Raised when the inputs are well formed but the property under test fails
VIOLATIONS = (
    BoundViolated, BudgetExhausted, ConditionsFailed, CounterexampleFound, InconsistentNodeData,
    NoSchemeExists, SchemeInvalid, WitnessRejected,
)


class UsageParser(CommandParser):

    def error(self, message):
        raise CommandError(f'{self.prog}: {message}', returncode=2)


def load_document(path, serializer_class, context=None):
    with open(path) as handle:
        document = json.load(handle)
    serializer = serializer_class(data=document, context=context or {})
    serializer.is_valid(raise_exception=True)
    return serializer.save()


def _load_code_and_scheme(options):
    code = load_document(options.code, CodeFileSerializer)
    scheme = load_document(options.scheme, SchemeFileSerializer, {'code': code})
    return code, scheme


def verify_mds_command(options, out):
    code = load_document(options.code, CodeFileSerializer)
    report = verify_mds(code)
    lines = [f'MDS: {report.succeeded}/{report.checked} subsets invertible']
    lines += [f'  failing: nodes {list(nodes)}' for nodes in report.failing]
    if report.passed and not report.invertible_encoding:
        lines.append('warning: some encoding matrix is singular')
    emit_report(out, lines, MdsReportSerializer(report).data, options.json)
    return 0 if report.passed else 1


def verify_repair_command(options, out):
    code, scheme = _load_code_and_scheme(options)
    nodes = [options.fail] if options.fail else scheme.failed_nodes()

    lines, reports = [], []
    for failed in nodes:
        report = verify_scheme(code, scheme, failed)
        reports.append({'failed': failed, 'passed': report.passed, 'violations': report.violations})
        if report:
            lines.append(f'node {failed}: repairable')
        else:
            lines.append(f'node {failed}: {len(report.violations)} violation(s)')
            lines += format_violations(report.violations)

    passed = sum(1 for report in reports if report['passed'])
    lines.append(f'{passed}/{len(reports)} nodes repairable')
    payload = {
        'schema': 1,
        'reports': SchemeReportSerializer(reports, many=True).data,
    }
    emit_report(out, lines, payload, options.json)
    return 0 if passed == len(reports) else 1


def repair_command(options, out):
    code, scheme = _load_code_and_scheme(options)
    if options.data:
        data = load_document(options.data, DataFileSerializer, {'code': code})
    else:
        data = random_fill(code, np.random.default_rng(options.seed))

    nodes = encode(code, data)
    survivors = {j: nodes[j - 1] for j in range(1, code.n + 1) if j != options.fail}
    transcript = execute_repair(code, scheme, options.fail, survivors)
    exact = np.array_equal(transcript.recovered, data.vector(options.fail))

    lines = [f'node {options.fail} repaired from {len(transcript.helpers)} helpers']
    lines += [
        f'  node {j} sent {format_vector(transcript.transmissions[j])}' for j in transcript.helpers
    ]
    lines.append(f'recovered {format_vector(transcript.recovered)} ({"exact" if exact else "MISMATCH"})')
    lines.append(
        f'bandwidth: {transcript.symbols} symbols '
        f'(optimal {bandwidth_of(code.params)}, naive {naive_bandwidth(code.params)})'
    )
    payload = {
        **TranscriptSerializer(transcript).data,
        'exact': exact,
        'optimal': str(bandwidth_of(code.params)),
        'naive': naive_bandwidth(code.params),
    }
    emit_report(out, lines, payload, options.json)
    return 0 if exact else 1


def search_scheme_command(options, out):
    code = load_document(options.code, CodeFileSerializer)
    nodes = [options.fail] if options.fail else None
    result = search_scheme(
        code, nodes=nodes, budget=options.budget, randomized=options.samples is not None,
        seed=options.seed, samples=options.samples,
    )

    lines = []
    for failed, found in sorted(result.solutions.items()):
        lines.append(f'node {failed}: {len(found)} solution(s)')
        lines += ['  ' + ', '.join(format_basis(s.basis) for s in choice) for choice in found]
    mode = 'exhaustive' if result.exhaustive else 'sampled'
    lines.append(f'scheme found ({mode}, {result.expansions} expansions)')

    if options.out:
        write_document(options.out, SchemeFileSerializer(result.scheme).data)
        lines.append(f'scheme written to {options.out}')
    emit_report(out, lines, SchemeSearchSerializer(result).data, options.json)
    return 0


def _field_from_options(options):
    reduction = _parsed(parse_index_list, options.reduction, '--reduction') if options.reduction else None
    return field_make(options.p, options.m, reduction)


def search_maxk_command(options, out):
    config = SearchConfig(
        ell=options.ell, r=options.r, field=_field_from_options(options), seed=options.seed,
        budget=options.budget, symmetry_fix=not options.no_symmetry, samples=options.samples,
    )
    result = search_max_k(config)

    verdict = 'lower bound' if result.lower_bound else 'exhaustive'
    lines = [
        f'kmax = {result.kmax} over {config.field} at ell={config.ell}, r={config.r} ({verdict})',
        f'{result.branches} branches, {result.expansions} expansions',
    ]
    if result.witness is not None:
        witness = result.witness
        for label, phi, subspace in zip(witness.labels, witness.phis, witness.subspaces):
            lines.append(f'  pair {label}: S = {format_basis(subspace.basis)}, Phi = {as_lists(phi)}')
        if options.out:
            write_document(options.out, SystemFileSerializer(witness).data)
            lines.append(f'witness written to {options.out}')
    emit_report(out, lines, SearchResultSerializer(result).data, options.json)
    return 0


def reduce_theta_command(options, out):
    code, scheme = _load_code_and_scheme(options)
    anchor = options.anchor or code.k
    system = theta_reduce(code, scheme, anchor)
    report = check_sc(system)
    family = build_identity_family(system)

    lines = [f'{system.size} pairs anchored at node {anchor}']
    for label, phi, subspace in zip(system.labels, system.phis, system.subspaces):
        lines.append(f'  Theta_{label} = {as_lists(phi)}, S_{label} = {format_basis(subspace.basis)}')
    lines.append(f'check_sc: {"passed" if report else "failed"}')
    lines.append(f'identity family: {format_family(family)}')

    if options.out:
        write_document(options.out, SystemFileSerializer(system).data)
        lines.append(f'system written to {options.out}')
    payload = {
        'schema': 1,
        'system': SystemFileSerializer(system).data,
        'conditions': ConditionReportSerializer(
            {'mode': RELAXED, 'passed': report.passed, 'violations': report.violations}
        ).data,
        'identity': FamilySerializer(family).data,
    }
    emit_report(out, lines, payload, options.json)
    return 0 if report and family.rank == family.size else 1


def _parsed(parse, value, flag):
    try:
        return parse(value)
    except ValueError:
        raise CommandError(f'msrlab: malformed {flag} value {value!r}', returncode=2)


def _blocks(options, system, default):
    partition = _parsed(parse_partition, options.partition, '--partition')
    return partition if partition else default(system)


def certify_command(options, out):
    system = load_document(options.system, SystemFileSerializer)
    pairs = _parsed(parse_pairs, options.pairs, '--pairs') if options.pairs else greedy_pairing(system)
    kind = options.family

    if kind == 'sum':
        blocks = _parsed(parse_partition, options.partition, '--partition')
        labels = [label for block in blocks for label in block]
        report = sum_dim_check(system, labels or system.labels)
        lines = [
            f'sum over {list(report.indices)}: dim {report.dim}, bound {report.bound}, '
            f'{"ok" if report.ok else "below bound"}'
        ]
        emit_report(out, lines, SumDimensionSerializer(report).data, options.json)
        return 0 if report.ok else 1

    corollary = None
    if kind == 't':
        blocks = _blocks(options, system, lambda s: list(remaining_sets(s, [])))
        if len(blocks) != 2:
            raise CommandError('msrlab: the t family takes --partition odd;even', returncode=2)
        odd_set, even_set = blocks
        family = build_T(system, odd_set, even_set)
        corollary = check_corollary1(system, family)
    elif kind == 'upsilon':
        family = build_upsilon(system, pairs)
    elif kind == 'r':
        family = build_R(system, pairs, build_T(system, *remaining_sets(system, pairs)))
    elif kind == 'lambda':
        family = build_lambda(system, _blocks(options, system, log_partition))
    elif kind == 'gamma':
        family = build_gamma(system, _blocks(options, system, log_partition))
    else:
        family = build_identity_family(system)

    lines = [f'{kind}: {format_family(family)}', f'claimed size {family.claim}']
    payload = FamilySerializer(family).data
    passed = family.rank == family.size
    if corollary is not None:
        state = 'holds' if corollary else 'fails'
        lines.append(f'corollary: {state}{" (vacuous)" if corollary.vacuous else ""}')
        payload = {**payload, 'corollary': CorollarySerializer(corollary).data}
        passed = bool(corollary)
    emit_report(out, lines, payload, options.json)
    return 0 if passed else 1


def bounds_command(options, out):
    report = bound_report(options.ell, options.r, options.n)
    names = ('quadratic', 'linear_r2', 'linear_r2_intro', 'logsq', 'known_achievable', 'delta', 'bandwidth')
    lines = [f'ell={report.ell}, r={report.r}']
    lines += [f'{name}: {getattr(report, name)}' for name in names if getattr(report, name) is not None]
    if options.kmax is not None:
        consistency_assert(options.kmax, report, counts=options.counts)
        lines.append(f'k={options.kmax} ({options.counts} count) is within every bound')
    emit_report(out, lines, BoundReportSerializer(report).data, options.json)
    return 0


def create_parser():
    parser = UsageParser(prog='msrlab', description='Finite-field experiments on MSR array codes')
    subparsers = parser.add_subparsers(dest='command', required=True)

    def command(name, handler, help_text):
        sub = subparsers.add_parser(name, help=help_text)
        sub.set_defaults(handler=handler)
        sub.add_argument('--json', action='store_true', help='emit the JSON report')
        return sub

    sub = command('verify-mds', verify_mds_command, 'check every k-subset of nodes')
    sub.add_argument('code')

    sub = command('verify-repair', verify_repair_command, 'check a repair scheme')
    sub.add_argument('code')
    sub.add_argument('scheme')
    sub.add_argument('--fail', type=int)

    sub = command('repair', repair_command, 'run a repair on encoded data')
    sub.add_argument('code')
    sub.add_argument('scheme')
    sub.add_argument('--fail', type=int, required=True)
    sub.add_argument('--data')
    sub.add_argument('--seed', type=int, default=0)

    sub = command('search-scheme', search_scheme_command, 'search repair subspaces for a code')
    sub.add_argument('code')
    sub.add_argument('--fail', type=int)
    sub.add_argument('--budget', type=int)
    sub.add_argument('--samples', type=int)
    sub.add_argument('--seed', type=int, default=0)
    sub.add_argument('--out')

    sub = command('search-maxk', search_maxk_command, 'largest system over a small field')
    sub.add_argument('--ell', type=int, required=True)
    sub.add_argument('--r', type=int, required=True)
    sub.add_argument('--p', type=int, required=True)
    sub.add_argument('--m', type=int, default=1)
    sub.add_argument('--reduction', help='ascending coefficients, e.g. 1,1,1')
    sub.add_argument('--budget', type=int)
    sub.add_argument('--samples', type=int)
    sub.add_argument('--seed', type=int, default=0)
    sub.add_argument('--no-symmetry', action='store_true')
    sub.add_argument('--out')

    sub = command('reduce-theta', reduce_theta_command, 'Theta system of a two-parity code')
    sub.add_argument('code')
    sub.add_argument('scheme')
    sub.add_argument('--anchor', type=int)
    sub.add_argument('--out')

    sub = command('certify', certify_command, 'build an independence family')
    sub.add_argument('system')
    sub.add_argument('--family', choices=FAMILIES, required=True)
    sub.add_argument('--pairs', help='complementary pairs, e.g. 1:2,3:4')
    sub.add_argument('--partition', help='index blocks, e.g. 1,2;3,4')

    sub = command('bounds', bounds_command, 'closed-form bounds')
    sub.add_argument('--ell', type=int, required=True)
    sub.add_argument('--r', type=int, required=True)
    sub.add_argument('--n', type=int)
    sub.add_argument('--kmax', type=int)
    sub.add_argument('--counts', choices=(SYSTEM, CODE), default=SYSTEM,
                     help='whether --kmax is a system size or a code k')
    return parser


def _report_failure(exc, out, err, as_json):
    if as_json:
        emit_report(out, [], {
            'schema': 1,
            'error': type(exc).__name__,
            'message': exc.message,
            'payload': exc.payload,
        }, as_json=True)
    err.write(f'{type(exc).__name__}: {exc.message}')


def cli_dispatch(argv, stdout=None, stderr=None):
    """Run one msrlab subcommand and return its exit status
    """
    out = OutputWrapper(stdout or sys.stdout)
    err = OutputWrapper(stderr or sys.stderr)
    as_json = '--json' in argv

    try:
        options = create_parser().parse_args(list(argv))
        logger.debug('msrlab %s', options.command)
        return options.handler(options, out)
    except CommandError as exc:
        err.write(str(exc))
        return exc.returncode
    except SystemExit as exc:
        return exc.code or 0
    except serializers.ValidationError as exc:
        err.write(f'invalid input: {exc.detail}')
        return 2
    except (OSError, json.JSONDecodeError) as exc:
        err.write(f'cannot read input: {exc}')
        return 2
    except VIOLATIONS as exc:
        _report_failure(exc, out, err, as_json)
        return 1
    except MsrlabError as exc:
        err.write(f'{type(exc).__name__}: {exc.message}')
        return 2
