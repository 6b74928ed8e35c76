import argparse
import asyncio
import json
import sys
from typing import Any, Dict, List, Optional, Sequence, Tuple

from loguru import logger

from rigidity_lab.config import DEFAULT_SETTINGS
from rigidity_lab.errors import RigidityLabError
from rigidity_lab.formats import (dump_graph, dump_model, dump_report, load_bipartite_graph, load_graph, load_model,
                                  load_report)
from rigidity_lab.generators import gnm, gnnp, gnp, process_hitting_time, random_regular, random_regular_pairing
from rigidity_lab.graphs import Graph
from rigidity_lab.partitions import (bipartite_strong_partition, common_neighbour_partition,
                                     complete_bipartite_partition, convert_to_rigid_partition, dirac_partition,
                                     strong_partition_type_ii, strong_partition_via_sparse_connector,
                                     verify_rigid_partition)
from rigidity_lab.properties import (is_connector, is_expander, is_jumbled_exact, is_sparse,
                                     jumbled_certificate_regular)
from rigidity_lab.rigidity import quantitative_bound_check, randomized_rigidity_test, rigidity_profile
from rigidity_lab.rigidity_lab import RigidityLab
from rigidity_lab.schemas import (CdsFamily, ConstructionOutcome, ExperimentReport, PropertyVerdict, RigidPartition,
                                  RigidityProfile, RigidityVerdict, StrongPartition, VerdictMode)
from rigidity_lab.templates import (BOUND_TEXT_TEMPLATE, CONSTRUCTION_TEXT_TEMPLATE, HYPEROCTAHEDRAL_ROW_TEMPLATE,
                                    KEY_VALUE_ROW_TEMPLATE, PROFILE_ROW_TEMPLATE, PROFILE_TEXT_TEMPLATE,
                                    PROPERTY_TEXT_TEMPLATE, REPORT_TEXT_TEMPLATE, VERDICT_TEXT_TEMPLATE,
                                    VERIFICATION_TEXT_TEMPLATE)
from rigidity_lab.workflow import EXPERIMENT_BUILDERS

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_USAGE = 2

CONSTRUCT_METHODS = ('sparse-connector', 'type-ii', 'bipartite', 'complete-bipartite', 'common-neighbour', 'dirac')
PARAMETER_ALIASES = {'dim': 'd'}


class UsageError(Exception):
    pass


def _read(path: str) -> str:
    if path == '-':
        return sys.stdin.read()
    with open(path) as f:
        return f.read()


def _emit(text: str) -> None:
    sys.stdout.write(text if text.endswith('\n') else text + '\n')


def _key_values(values: Dict[str, Any]) -> str:
    return '\n'.join(KEY_VALUE_ROW_TEMPLATE.format(key=k, value=v) for k, v in sorted(values.items()))


def _add_common(parser: argparse.ArgumentParser, needs_input: bool = True) -> None:
    if needs_input:
        parser.add_argument('--input', required=True, help="Graph text file, '-' for stdin")
    parser.add_argument('--seed', type=int, default=0)
    parser.add_argument('--format', choices=('json', 'text'), default='json')


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog='rigidity-lab', description='Graph rigidity through rigid partitions')
    noise = parser.add_mutually_exclusive_group()
    noise.add_argument('--verbose', action='store_true', help='Debug diagnostics on stderr')
    noise.add_argument('--quiet', action='store_true', help='Warnings and errors only')
    groups = parser.add_subparsers(dest='group', required=True)

    rigidity = groups.add_parser('rigidity').add_subparsers(dest='action', required=True)
    test = rigidity.add_parser('test', help='Randomized d-rigidity certificate')
    _add_common(test)
    test.add_argument('--dim', type=int, required=True)
    test.add_argument('--trials', type=int, default=DEFAULT_SETTINGS.rigidity_trials)
    number = rigidity.add_parser('number', help='Rigidity number by upward scan')
    _add_common(number)
    number.add_argument('--trials', type=int, default=DEFAULT_SETTINGS.rigidity_trials)
    number.add_argument('--max-dim', type=int, default=None)

    partition = groups.add_parser('partition').add_subparsers(dest='action', required=True)
    verify = partition.add_parser('verify', help='Verify a rigid partition JSON file')
    _add_common(verify)
    verify.add_argument('--partition', required=True)
    convert = partition.add_parser('convert', help='Strong partition or CDS family to rigid partition')
    _add_common(convert)
    convert.add_argument('--source', required=True)
    construct = partition.add_parser('construct', help='Randomized or deterministic partition constructions')
    _add_common(construct, needs_input=False)
    construct.add_argument('--input', default=None)
    construct.add_argument('--method', choices=CONSTRUCT_METHODS, required=True)
    construct.add_argument('--dim', type=int, default=None)
    construct.add_argument('--max-retries', type=int, default=DEFAULT_SETTINGS.max_retries)
    construct.add_argument('--m', type=int, default=None, help='|A| of K_{m,n}')
    construct.add_argument('--n', type=int, default=None, help='|B| of K_{m,n}')

    bound = groups.add_parser('bound').add_subparsers(dest='action', required=True)
    check = bound.add_parser('check', help='Quantitative stiffness bound of a rigid partition')
    _add_common(check)
    check.add_argument('--partition', required=True)
    check.add_argument('--tol', type=float, default=DEFAULT_SETTINGS.bound_tol)

    prop = groups.add_parser('property').add_subparsers(dest='action', required=True)
    for name, args in (('sparse', (('--x', float), ('--y', float))), ('connector', (('--k', int), )),
                       ('expander', (('--r', float), ))):
        sub = prop.add_parser(name)
        _add_common(sub)
        for flag, kind in args:
            sub.add_argument(flag, type=kind, required=True)
        sub.add_argument('--mode', choices=('exact', 'search'), default=None)
    jumbled = prop.add_parser('jumbled', help='Exact check for n <= 12 or the spectral certificate of a regular graph')
    _add_common(jumbled)
    jumbled.add_argument('--p', type=float, default=None)
    jumbled.add_argument('--beta', type=float, default=None)

    gen = groups.add_parser('gen').add_subparsers(dest='action', required=True)
    for name in ('gnp', 'gnnp', 'gnm', 'regular', 'process'):
        sub = gen.add_parser(name)
        _add_common(sub, needs_input=False)
        sub.add_argument('--n', type=int, required=True)
    gen.choices['gnp'].add_argument('--p', type=float, required=True)
    gen.choices['gnnp'].add_argument('--p', type=float, required=True)
    gen.choices['gnm'].add_argument('--m', type=int, required=True)
    gen.choices['regular'].add_argument('--k', type=int, required=True)
    gen.choices['regular'].add_argument('--pairing', action='store_true', help='Pairing sampler instead of rejection')
    gen.choices['process'].add_argument('--dim', type=int, required=True)

    experiment = groups.add_parser(
        'experiment',
        help='Scripted experiments; extra --key value pairs override parameters',
        allow_abbrev=False,
    )
    experiment.add_argument('action', choices=sorted(EXPERIMENT_BUILDERS))
    experiment.add_argument('--format', choices=('json', 'text'), default='json')
    experiment.add_argument('--output-dir', default=None, help='Also save the report under DIR/<uuid>/')
    return parser


def _overrides(tokens: Sequence[str]) -> Dict[str, Any]:
    """``--max-n 16 --dims 2,3`` to {'max_n': 16, 'dims': '2,3'}"""
    if len(tokens) % 2:
        raise UsageError(f"Parameter overrides come in '--key value' pairs, got {list(tokens)}")
    overrides: Dict[str, Any] = {}
    for flag, raw in zip(tokens[0::2], tokens[1::2]):
        if not flag.startswith('--'):
            raise UsageError(f"Expected --key, got {flag!r}")
        key = flag[2:].replace('-', '_')
        try:
            value = json.loads(raw)
        except json.JSONDecodeError:
            value = raw
        overrides[PARAMETER_ALIASES.get(key, key)] = value
    return overrides


def _mode(raw: Optional[str]) -> Optional[VerdictMode]:
    return {None: None, 'exact': VerdictMode.EXACT, 'search': VerdictMode.RANDOM_SEARCH}[raw]


def _load_partition(path: str) -> RigidPartition:
    rp = load_model(_read(path), RigidPartition)
    if rp is None:
        raise UsageError(f"{path} is not a rigid partition")
    return rp


def _render_verdict(verdict: RigidityVerdict) -> str:
    return VERDICT_TEXT_TEMPLATE.format(kind=verdict.kind.value, **verdict.model_dump(exclude={'kind'}))


def _render_profile(profile: RigidityProfile) -> str:
    rows = '\n'.join(
        PROFILE_ROW_TEMPLATE.format(kind=v.kind.value, **v.model_dump(exclude={'kind'})) for v in profile.verdicts)
    return PROFILE_TEXT_TEMPLATE.format(rigidity_number=profile.rigidity_number,
                                        rows=rows,
                                        non_monotone=profile.non_monotone or 'none')


def _render_property(verdict: PropertyVerdict) -> str:
    return PROPERTY_TEXT_TEMPLATE.format(property=verdict.property,
                                         kind=verdict.kind.value,
                                         mode=verdict.mode.value,
                                         witness=verdict.witness,
                                         search_budget=verdict.search_budget)


def _render_construction(outcome: ConstructionOutcome) -> str:
    return CONSTRUCTION_TEXT_TEMPLATE.format(success=outcome.success,
                                             attempts=outcome.attempts,
                                             min_cross_degree=outcome.min_cross_degree,
                                             target=outcome.target,
                                             parts=outcome.parts,
                                             reason=outcome.reason or '')


def render_report(report: ExperimentReport) -> str:
    text = REPORT_TEXT_TEMPLATE.format(experiment=report.experiment,
                                       schema_version=report.schema_version,
                                       artifact_version=report.artifact_version,
                                       master_seed=report.master_seed,
                                       parameters=_key_values(report.parameters),
                                       aggregate=_key_values(report.aggregate),
                                       trial_count=len(report.trials),
                                       wall_clock=report.wall_clock)
    if report.experiment == 'hyperoctahedral':
        text += '\n'.join(HYPEROCTAHEDRAL_ROW_TEMPLATE.format(**t.values) for t in report.trials) + '\n'
    return text


def _rigidity(args: argparse.Namespace) -> Tuple[str, str, int]:
    g = load_graph(_read(args.input))
    if args.action == 'test':
        verdict = randomized_rigidity_test(g, args.dim, trials=args.trials, seed=args.seed)
        return dump_model(verdict), _render_verdict(verdict), EXIT_OK if verdict.certified else EXIT_NEGATIVE
    profile = rigidity_profile(g, max_dim=args.max_dim, trials=args.trials, seed=args.seed)
    return dump_model(profile), _render_profile(profile), EXIT_OK


def _construct(args: argparse.Namespace) -> Tuple[str, str, int]:
    if args.method == 'complete-bipartite':
        if args.m is None or args.n is None or args.dim is None:
            raise UsageError('complete-bipartite needs --m, --n and --dim')
        sp = complete_bipartite_partition(args.m, args.n, args.dim)
        return dump_model(sp), dump_model(sp), EXIT_OK
    if args.input is None:
        raise UsageError(f"{args.method} needs --input")
    text = _read(args.input)
    if args.method == 'dirac':
        d, outcome = dirac_partition(load_graph(text), seed=args.seed, max_retries=args.max_retries)
        logger.info(f"Dirac construction at d = {d}")
    elif args.dim is None:
        raise UsageError(f"{args.method} needs --dim")
    elif args.method == 'bipartite':
        outcome = bipartite_strong_partition(load_bipartite_graph(text), args.dim, seed=args.seed,
                                             max_retries=args.max_retries)
    else:
        construct = {
            'sparse-connector': strong_partition_via_sparse_connector,
            'type-ii': strong_partition_type_ii,
            'common-neighbour': common_neighbour_partition,
        }[args.method]
        outcome = construct(load_graph(text), args.dim, seed=args.seed, max_retries=args.max_retries)
    return dump_model(outcome), _render_construction(outcome), EXIT_OK if outcome.success else EXIT_NEGATIVE


def _partition(args: argparse.Namespace) -> Tuple[str, str, int]:
    if args.action == 'construct':
        return _construct(args)
    g = load_graph(_read(args.input))
    if args.action == 'verify':
        result = verify_rigid_partition(g, _load_partition(args.partition))
        text = VERIFICATION_TEXT_TEMPLATE.format(verdict='Accepted' if result.accepted else 'Rejected',
                                                 detail=result.reason or '',
                                                 oracle_checked=result.oracle_checked,
                                                 oracle_divergences=result.oracle_divergences)
        return dump_model(result), text, EXIT_OK if result.accepted else EXIT_NEGATIVE
    raw = _read(args.source)
    is_cds = '"sets"' in raw or "'sets'" in raw
    source = load_model(raw, CdsFamily if is_cds else StrongPartition)
    if source is None:
        raise UsageError(f"{args.source} is neither a CDS family nor a strong partition")
    rp = convert_to_rigid_partition(g, source)
    return dump_model(rp), dump_model(rp), EXIT_OK


def _bound(args: argparse.Namespace) -> Tuple[str, str, int]:
    g = load_graph(_read(args.input))
    rp = _load_partition(args.partition)
    result = verify_rigid_partition(g, rp)
    if not result.accepted:
        logger.error(f"Partition rejected: {result.reason}")
        return dump_model(result), f"Rejected\n{result.reason}\n", EXIT_NEGATIVE
    report = quantitative_bound_check(g, rp, result.hierarchy, tol=args.tol)
    text = BOUND_TEXT_TEMPLATE.format(**report.model_dump())
    return dump_model(report), text, EXIT_OK if report.holds else EXIT_NEGATIVE


def _property(args: argparse.Namespace) -> Tuple[str, str, int]:
    g = load_graph(_read(args.input))
    if args.action == 'jumbled':
        if args.p is None or args.beta is None:
            density, lam = jumbled_certificate_regular(g)
            payload = json.dumps({'p': density, 'beta': lam}, indent=2, sort_keys=True)
            return payload, f"({density:.6g}, {lam:.6g})-jumbled\n", EXIT_OK
        verdict = is_jumbled_exact(g, args.p, args.beta)
    elif args.action == 'sparse':
        verdict = is_sparse(g, args.x, args.y, mode=_mode(args.mode), seed=args.seed)
    elif args.action == 'connector':
        verdict = is_connector(g, args.k, mode=_mode(args.mode), seed=args.seed)
    else:
        verdict = is_expander(g, args.r, mode=_mode(args.mode), seed=args.seed)
    return dump_model(verdict), _render_property(verdict), EXIT_NEGATIVE if verdict.violated else EXIT_OK


def _gen(args: argparse.Namespace) -> Tuple[str, str, int]:
    if args.action == 'process':
        snapshot = process_hitting_time(args.n, args.dim, args.seed)
        text = dump_graph(Graph(snapshot.n, snapshot.edges))
        return dump_model(snapshot), text, EXIT_OK
    if args.action == 'gnp':
        g = gnp(args.n, args.p, args.seed)
    elif args.action == 'gnnp':
        g = gnnp(args.n, args.p, args.seed)
    elif args.action == 'gnm':
        g = gnm(args.n, args.m, args.seed)
    elif args.pairing:
        g = random_regular_pairing(args.n, args.k, args.seed).graph
    else:
        g = random_regular(args.n, args.k, args.seed).graph
    return dump_graph(g), dump_graph(g), EXIT_OK


def _experiment(args: argparse.Namespace, extra: List[str]) -> Tuple[str, str, int]:
    lab = RigidityLab(log_to_file=args.output_dir is not None)
    overrides = _overrides(extra)
    if args.output_dir is not None:
        path = asyncio.run(lab.run(args.action, overrides, args.output_dir))
        with open(path) as f:
            report = load_report(f.read())
    else:
        report = asyncio.run(lab.report(args.action, overrides))
    return dump_report(report), render_report(report), EXIT_OK


def _configure_logging(args: argparse.Namespace) -> None:
    level = 'DEBUG' if args.verbose else 'WARNING' if args.quiet else 'INFO'
    logger.remove()
    logger.add(sys.stderr, level=level)


def run_command(argv: Optional[Sequence[str]] = None) -> int:
    """Parse argv, run the subcommand and print its result on stdout

    Returns:
        int: 0 when a verdict was computed, 1 when a demanded boolean came out negative, 2 on usage errors.
    """
    parser = build_parser()
    try:
        args, extra = parser.parse_known_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK
    _configure_logging(args)
    if extra and args.group != 'experiment':
        logger.error(f"Unrecognised arguments: {' '.join(extra)}")
        return EXIT_USAGE
    handlers = {'rigidity': _rigidity, 'partition': _partition, 'bound': _bound, 'property': _property, 'gen': _gen}
    try:
        if args.group == 'experiment':
            payload, text, code = _experiment(args, extra)
        else:
            payload, text, code = handlers[args.group](args)
    except (UsageError, RigidityLabError, ValueError, OSError) as e:
        logger.error(f"{type(e).__name__}: {e}")
        return EXIT_USAGE
    _emit(text if args.format == 'text' else payload)
    return code


def main() -> None:
    sys.exit(run_command())
