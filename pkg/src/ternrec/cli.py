from __future__ import annotations

from argparse import ArgumentParser
from functools import cached_property
from pathlib import Path
from typing import TYPE_CHECKING, Any

from pyk.cli.args import KCLIArgs
from pyk.cli.utils import dir_path, file_path

from .modarith import MODULUS_CEILING
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
from .qseries import LIMIT_CEILING, SeriesKind
from .quadform import Constraint
from .recurrence import INDEX_CEILING, NAMED_SPECS, SequenceKind
from .report import OutputFormat
from .utils import bounded_int, cubic_arg, prime_int
from .verifier import BOUND_CEILING

if TYPE_CHECKING:
    from collections.abc import Callable

    from pyk.cli.args import LoggingOptions


_OPTION_CLASSES: dict[str, type[LoggingOptions]] = {
    'sweep': SweepOptions,
    'discover': DiscoverOptions,
    'npf': NpfOptions,
    'rep': RepOptions,
    'series': SeriesOptions,
    'term': TermOptions,
    'registry': RegistryOptions,
    'init': InitOptions,
    'version': VersionOptions,
}


def generate_options(args: dict[str, Any]) -> LoggingOptions:
    command = args['command']
    try:
        options_class = _OPTION_CLASSES[command]
    except KeyError as err:
        raise ValueError(f'Unrecognized command: {command}') from err
    return options_class(args)


def get_option_string_destination(command: str, option_string: str) -> str:
    option_string_destinations = _OPTION_CLASSES[command].from_option_string()
    return option_string_destinations.get(option_string, option_string.replace('-', '_'))


def get_argument_type_setter(command: str, option_string: str) -> Callable[[str], Any]:
    option_types = _OPTION_CLASSES[command].get_argument_type()
    return option_types.get(option_string, (lambda x: x))


class ConfigArgs:
    @cached_property
    def config_args(self) -> ArgumentParser:
        args = ArgumentParser(add_help=False)
        args.add_argument(
            '--config-file',
            dest='config_file',
            type=file_path,
            default=None,
            help='Path to ternrec config file.',
        )
        args.add_argument(
            '--config-profile',
            dest='config_profile',
            default='default',
            help='Config profile to be used.',
        )
        return args


class TernrecCLIArgs(KCLIArgs):
    @cached_property
    def case_args(self) -> ArgumentParser:
        args = ArgumentParser(add_help=False)
        args.add_argument(
            '--bound',
            dest='bound',
            type=bounded_int(2, BOUND_CEILING),
            help='Check every prime below this bound.',
        )
        args.add_argument(
            '--jobs',
            dest='jobs',
            type=bounded_int(1, 1024),
            help='Number of worker processes (default: number of CPUs).',
        )
        args.add_argument(
            '--case-file',
            dest='case_file',
            type=file_path,
            help='JSON Lines file with additional cases.',
        )
        args.add_argument(
            '--series-limit',
            dest='series_limit',
            type=bounded_int(0, LIMIT_CEILING),
            help='Truncation order of q-series used by series predicates.',
        )
        return args

    @cached_property
    def prime_arg(self) -> ArgumentParser:
        args = ArgumentParser(add_help=False)
        args.add_argument('--prime', dest='prime', type=prime_int, required=True, help='The prime p.')
        return args


def _create_argument_parser() -> ArgumentParser:
    ternrec_cli_args = TernrecCLIArgs()
    config_args = ConfigArgs()
    parser = ArgumentParser(prog='ternrec')

    command_parser = parser.add_subparsers(dest='command', required=True)

    command_parser.add_parser('version', help='Print out version of ternrec.')

    sweep = command_parser.add_parser(
        'sweep',
        help='Check registry cases over all primes below a bound.',
        parents=[ternrec_cli_args.logging_args, ternrec_cli_args.case_args, config_args.config_args],
    )
    sweep.add_argument('--case', dest='case', type=str, help="Case id, or 'all' (default).")
    sweep.add_argument(
        '--format',
        dest='format',
        type=OutputFormat,
        choices=list(OutputFormat),
        help='Report format: json (default) or csv.',
    )

    discover = command_parser.add_parser(
        'discover',
        help='List the primes below a bound where a case fails or p divides the discriminant.',
        parents=[ternrec_cli_args.logging_args, ternrec_cli_args.case_args, config_args.config_args],
    )
    discover.add_argument('--case', dest='case', type=str, required=True, help='Case id.')
    discover.add_argument(
        '--inadmissible',
        dest='inadmissible',
        default=None,
        action='store_true',
        help="Also list primes excluded by the case's criterion.",
    )

    npf = command_parser.add_parser(
        'npf',
        help='Count the roots of a cubic modulo a prime.',
        parents=[ternrec_cli_args.logging_args, ternrec_cli_args.prime_arg, config_args.config_args],
    )
    npf.add_argument('--poly', dest='poly', type=cubic_arg, required=True, help='Coefficients a1,a2,a3.')
    npf.add_argument(
        '--method',
        dest='method',
        choices=['brute', 'gcd', 'sun', 'u', 'capu'],
        help='Counting method (default: gcd).',
    )

    rep = command_parser.add_parser(
        'rep',
        help='Represent m*p as X^2 + nY^2.',
        parents=[ternrec_cli_args.logging_args, ternrec_cli_args.prime_arg, config_args.config_args],
    )
    rep.add_argument('--n', dest='n', type=bounded_int(1, 10**9), required=True, help='Form coefficient n.')
    rep.add_argument('--m', dest='m', type=int, choices=[1, 4], help='Multiplier m (default: 1).')
    rep.add_argument(
        '--constraint',
        dest='constraint',
        type=Constraint,
        choices=list(Constraint),
        help='Side condition on (X, Y).',
    )

    series = command_parser.add_parser(
        'series',
        help='Print truncated q-series coefficients modulo m as CSV.',
        parents=[ternrec_cli_args.logging_args, config_args.config_args],
    )
    series.add_argument('--which', dest='which', type=SeriesKind, choices=list(SeriesKind), required=True)
    series.add_argument('--mod', dest='mod', type=bounded_int(2, (1 << 31) - 1), required=True, help='Modulus m.')
    series.add_argument('--limit', dest='limit', type=bounded_int(0, LIMIT_CEILING), help='Truncation order N.')
    series.add_argument('--out', dest='out', type=Path, help='Write CSV to this file instead of standard output.')
    series.add_argument(
        '--histogram',
        dest='histogram',
        default=None,
        action='store_true',
        help='Print the distribution of coefficients at primes instead of every coefficient.',
    )

    term = command_parser.add_parser(
        'term',
        help='Compute one term of a ternary recurrence.',
        parents=[ternrec_cli_args.logging_args, config_args.config_args],
    )
    source = term.add_mutually_exclusive_group(required=True)
    source.add_argument('--seq', dest='seq', choices=sorted(NAMED_SPECS), help='Named sequence.')
    source.add_argument('--poly', dest='poly', type=cubic_arg, help='Coefficients a1,a2,a3.')
    term.add_argument(
        '--kind',
        dest='kind',
        type=SequenceKind,
        choices=list(SequenceKind),
        help='Sequence attached to --poly (default: cap_u).',
    )
    term.add_argument('--index', dest='index', type=bounded_int(0, INDEX_CEILING - 1), required=True)
    term.add_argument('--mod', dest='mod', type=bounded_int(2, MODULUS_CEILING - 1), help='Reduce modulo this.')
    term.add_argument(
        '--exact',
        dest='exact',
        default=None,
        action='store_true',
        help='Print the exact integer term (index at most 64).',
    )

    registry = command_parser.add_parser(
        'registry',
        help='List the built-in cases.',
        parents=[ternrec_cli_args.logging_args, config_args.config_args],
    )
    registry.add_argument(
        '--details',
        dest='details',
        default=None,
        action='store_true',
        help='Print cubic, predicates and exceptional primes for each case.',
    )
    registry.add_argument('--case-file', dest='case_file', type=file_path, help='JSON Lines file with more cases.')

    init = command_parser.add_parser(
        'init',
        help='Write a default ternrec.toml.',
        parents=[ternrec_cli_args.logging_args],
    )
    init.add_argument(
        '--project-root',
        dest='project_root',
        type=dir_path,
        help='Directory to write ternrec.toml into. If missing, the current directory is used.',
    )
    init.add_argument(
        '--force',
        dest='force',
        default=None,
        action='store_true',
        help='Overwrite an existing ternrec.toml.',
    )

    return parser
