from __future__ import annotations

import logging
import sys
from argparse import ArgumentTypeError
from collections.abc import Iterable
from pathlib import Path
from typing import TYPE_CHECKING

from pyk.cli.pyk import parse_toml_args

from . import VERSION
from .casefile import read_case_file
from .cli import _create_argument_parser, generate_options, get_argument_type_setter, get_option_string_destination
from .criteria import classify
from .cubic import np_brute, np_gcd
from .modarith import is_prime
from .qseries import build_series, residue_distribution
from .quadform import Constraint, FormSpec, find_representation, satisfies
from .recurrence import named_spec, spec_from, term_exact, term_mod
from .registry import find_case, registry
from .report import render_reports
from .utils import console, ternrec_toml_file_contents, write_to_file
from .verifier import discover_exceptions, sweep

if TYPE_CHECKING:
    from argparse import Namespace
    from typing import Final

    from .options import (
        DiscoverOptions,
        InitOptions,
        NpfOptions,
        RegistryOptions,
        RepOptions,
        SeriesOptions,
        SweepOptions,
        TermOptions,
        VersionOptions,
    )
    from .verifier import TheoremCase

_LOGGER: Final = logging.getLogger(__name__)
_LOG_FORMAT: Final = '%(levelname)s %(asctime)s %(name)s - %(message)s'


def main() -> None:
    sys.exit(run(sys.argv[1:]))


def run(argv: list[str]) -> int:
    """Run one ternrec command: 0 on success, 1 when a sweep fails, 2 on a usage error."""
    parser = _create_argument_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as err:
        return err.code if isinstance(err.code, int) else 2

    args.config_file = _config_file_path(args)
    args.config_profile = getattr(args, 'config_profile', None) or 'default'
    try:
        toml_args = parse_toml_args(args, get_option_string_destination, get_argument_type_setter)
    except (ValueError, ArgumentTypeError) as err:
        print(f'ternrec: error: {args.config_file}: {err}', file=sys.stderr)
        return 2
    logging.basicConfig(level=_loglevel(args, toml_args), format=_LOG_FORMAT)

    stripped_args = toml_args | {
        key: val for (key, val) in vars(args).items() if val is not None and not (isinstance(val, Iterable) and not val)
    }
    options = generate_options(stripped_args)

    executor_name = 'exec_' + args.command.lower().replace('-', '_')
    if executor_name not in globals():
        raise AssertionError(f'Unimplemented command: {args.command}')

    execute = globals()[executor_name]
    try:
        return execute(options) or 0
    except ValueError as err:
        print(f'ternrec {args.command}: error: {err}', file=sys.stderr)
        return 2


# Command implementation


def exec_version(options: VersionOptions) -> None:
    print(f'ternrec version: {VERSION}')


def _cases(case_file: Path | None, series_limit: int | None = None) -> list[TheoremCase]:
    cases = registry() if series_limit is None else registry(series_limit)
    if case_file is not None:
        extra = read_case_file(case_file)
        known = {case.id for case in cases}
        clashes = sorted(case.id for case in extra if case.id in known)
        if clashes:
            raise ValueError(f'Case ids already in the registry: {", ".join(clashes)}')
        cases += extra
    return cases


def exec_sweep(options: SweepOptions) -> int:
    cases = _cases(options.case_file, options.series_limit)
    selected = cases if options.case == 'all' else [find_case(options.case, cases)]

    reports = []
    for case in selected:
        report = sweep(case, options.bound, options.jobs)
        if report.passed:
            console.print(f':white_heavy_check_mark: [bold green]PASS[/bold green] {case.id} below {options.bound}')
        else:
            console.print(
                f':cross_mark: [bold red]FAIL[/bold red] {case.id} below {options.bound}: '
                f'{len(report.mismatches)} mismatches, first {report.mismatches[0]}, '
                f'{len(case.unrecorded(report.mismatches))} not among its observed exceptions'
            )
        reports.append(report)

    print(render_reports(reports, options.format))
    return 0 if all(report.passed for report in reports) else 1


def exec_discover(options: DiscoverOptions) -> None:
    case = find_case(options.case, _cases(options.case_file, options.series_limit))
    primes = discover_exceptions(case, options.bound, options.jobs, include_inadmissible=options.inadmissible)
    print(','.join(str(p) for p in primes))


def exec_npf(options: NpfOptions) -> None:
    criterion = options.criterion
    if criterion is not None:
        count = classify(options.poly, options.prime, criterion).value
    elif options.method == 'brute':
        count = np_brute(options.poly, options.prime)
    else:
        count = np_gcd(options.poly, options.prime)
    print(int(count))


def exec_rep(options: RepOptions) -> None:
    spec = FormSpec(options.n, options.m, options.constraint)
    rep = find_representation(spec, options.prime)
    if rep is None:
        print('none')
        return
    flags = ' '.join(
        f'{constraint.value}={str(satisfies(rep, constraint)).lower()}'
        for constraint in (Constraint.X_NONZERO, Constraint.PARITY_EVEN_SUM)
    )
    print(f'{rep.x} {rep.y} {flags}')


def exec_series(options: SeriesOptions) -> None:
    series = build_series(options.which, options.limit, options.mod)
    if options.histogram:
        primes = (n for n in range(2, options.limit + 1) if is_prime(n))
        distribution = residue_distribution(series, primes)
        lines = ['residue,count'] + [f'{residue},{count}' for residue, count in sorted(distribution.items())]
    else:
        lines = [f'{n},{coefficient}' for n, coefficient in series.rows()]

    content = '\n'.join(lines) + '\n'
    if options.out is not None:
        write_to_file(options.out, content)
        console.print(f'Wrote {len(lines)} rows to {options.out}')
    else:
        sys.stdout.write(content)


def exec_term(options: TermOptions) -> None:
    if options.seq is not None:
        spec = named_spec(options.seq)
    elif options.poly is not None:
        spec = spec_from(options.kind, options.poly)
    else:
        raise ValueError('One of --seq or --poly is required')

    if options.exact:
        print(term_exact(spec, options.index))
    elif options.mod is not None:
        print(term_mod(spec, options.index, options.mod))
    else:
        raise ValueError('Pass --mod <m> or --exact')


def exec_registry(options: RegistryOptions) -> None:
    for case in _cases(options.case_file):
        if not options.details:
            print(case.id)
            continue
        print(f'{case.id}: {case.cubic} (disc {case.cubic.disc})')
        for predicate in case.predicates:
            print(f'    {predicate.kind.value}: {predicate.describe()}')
        print(f'    exceptions: {", ".join(str(p) for p in sorted(case.exceptions))}')
        if case.observed_exceptions:
            print(f'    observed exceptions: {", ".join(str(p) for p in sorted(case.observed_exceptions))}')
        print(f'    source: {case.source}')


def exec_init(options: InitOptions) -> None:
    config_file = options.project_root / 'ternrec.toml'
    if config_file.exists() and not options.force:
        raise ValueError(f'{config_file} already exists; pass --force to overwrite it')
    write_to_file(config_file, ternrec_toml_file_contents())
    console.print(f':white_heavy_check_mark: [bold]Wrote[/bold] {config_file}')


# Helpers
def _loglevel(args: Namespace, toml_args: dict) -> int:
    def is_attr_used(attr_name: str) -> bool | None:
        return getattr(args, attr_name, None) or toml_args.get(attr_name)

    if is_attr_used('debug'):
        return logging.DEBUG

    if is_attr_used('verbose'):
        return logging.INFO

    return logging.WARNING


def _config_file_path(args: Namespace) -> Path:
    return Path('ternrec.toml') if not getattr(args, 'config_file', None) else args.config_file


if __name__ == '__main__':
    main()
