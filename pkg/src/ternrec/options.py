from __future__ import annotations

from pathlib import Path
from typing import TYPE_CHECKING, Any

from pyk.cli.args import LoggingOptions, Options
from pyk.cli.utils import file_path

from .criteria import Method
from .modarith import MODULUS_CEILING
from .qseries import LIMIT_CEILING, SeriesKind
from .quadform import Constraint
from .recurrence import INDEX_CEILING, SequenceKind
from .registry import DEFAULT_SERIES_LIMIT
from .report import OutputFormat
from .utils import bounded_int, cubic_arg, default_jobs, prime_int
from .verifier import BOUND_CEILING

if TYPE_CHECKING:
    from collections.abc import Callable

    from .cubic import Cubic


class ConfigOptions(Options):
    config_file: Path | None
    config_profile: str

    @staticmethod
    def default() -> dict[str, Any]:
        return {
            'config_file': None,
            'config_profile': 'default',
        }

    @staticmethod
    def from_option_string() -> dict[str, str]:
        return {
            'config-file': 'config_file',
            'config-profile': 'config_profile',
        }

    @staticmethod
    def get_argument_type() -> dict[str, Callable]:
        return {
            'config-file': file_path,
        }


class JobsOptions(Options):
    jobs: int

    @staticmethod
    def default() -> dict[str, Any]:
        return {
            'jobs': default_jobs(),
        }

    @staticmethod
    def get_argument_type() -> dict[str, Callable]:
        return {
            'jobs': bounded_int(1, 1024),
        }


class SweepOptions(LoggingOptions, JobsOptions, ConfigOptions):
    case: str
    bound: int
    format: OutputFormat
    case_file: Path | None
    series_limit: int

    @staticmethod
    def default() -> dict[str, Any]:
        return {
            'case': 'all',
            'bound': 10**5,
            'format': OutputFormat.JSON,
            'case_file': None,
            'series_limit': DEFAULT_SERIES_LIMIT,
        }

    @staticmethod
    def from_option_string() -> dict[str, str]:
        return (
            LoggingOptions.from_option_string()
            | ConfigOptions.from_option_string()
            | {
                'case-file': 'case_file',
                'series-limit': 'series_limit',
            }
        )

    @staticmethod
    def get_argument_type() -> dict[str, Callable]:
        return (
            LoggingOptions.get_argument_type()
            | ConfigOptions.get_argument_type()
            | JobsOptions.get_argument_type()
            | {
                'bound': bounded_int(2, BOUND_CEILING),
                'format': OutputFormat,
                'case-file': file_path,
                'series-limit': bounded_int(0, LIMIT_CEILING),
            }
        )


class DiscoverOptions(LoggingOptions, JobsOptions, ConfigOptions):
    case: str
    bound: int
    inadmissible: bool
    case_file: Path | None
    series_limit: int

    @staticmethod
    def default() -> dict[str, Any]:
        return {
            'bound': 10**4,
            'inadmissible': False,
            'case_file': None,
            'series_limit': DEFAULT_SERIES_LIMIT,
        }

    @staticmethod
    def from_option_string() -> dict[str, str]:
        return SweepOptions.from_option_string()

    @staticmethod
    def get_argument_type() -> dict[str, Callable]:
        return SweepOptions.get_argument_type()


class NpfOptions(LoggingOptions, ConfigOptions):
    poly: Cubic
    prime: int
    method: str

    @staticmethod
    def default() -> dict[str, Any]:
        return {
            'method': 'gcd',
        }

    @staticmethod
    def from_option_string() -> dict[str, str]:
        return LoggingOptions.from_option_string() | ConfigOptions.from_option_string()

    @staticmethod
    def get_argument_type() -> dict[str, Callable]:
        return (
            LoggingOptions.get_argument_type()
            | ConfigOptions.get_argument_type()
            | {
                'poly': cubic_arg,
                'prime': prime_int,
            }
        )

    @property
    def criterion(self) -> Method | None:
        if self.method in ('brute', 'gcd'):
            return None
        return Method(self.method)


class RepOptions(LoggingOptions, ConfigOptions):
    n: int
    m: int
    prime: int
    constraint: Constraint

    @staticmethod
    def default() -> dict[str, Any]:
        return {
            'm': 1,
            'constraint': Constraint.NONE,
        }

    @staticmethod
    def from_option_string() -> dict[str, str]:
        return LoggingOptions.from_option_string() | ConfigOptions.from_option_string()

    @staticmethod
    def get_argument_type() -> dict[str, Callable]:
        return (
            LoggingOptions.get_argument_type()
            | ConfigOptions.get_argument_type()
            | {
                'n': bounded_int(1, 10**9),
                'm': int,
                'prime': prime_int,
                'constraint': Constraint,
            }
        )


class SeriesOptions(LoggingOptions, ConfigOptions):
    which: SeriesKind
    mod: int
    limit: int
    out: Path | None
    histogram: bool

    @staticmethod
    def default() -> dict[str, Any]:
        return {
            'limit': DEFAULT_SERIES_LIMIT,
            'out': None,
            'histogram': False,
        }

    @staticmethod
    def from_option_string() -> dict[str, str]:
        return LoggingOptions.from_option_string() | ConfigOptions.from_option_string()

    @staticmethod
    def get_argument_type() -> dict[str, Callable]:
        return (
            LoggingOptions.get_argument_type()
            | ConfigOptions.get_argument_type()
            | {
                'which': SeriesKind,
                'mod': bounded_int(2, (1 << 31) - 1),
                'limit': bounded_int(0, LIMIT_CEILING),
                'out': Path,
            }
        )


class TermOptions(LoggingOptions, ConfigOptions):
    seq: str | None
    poly: Cubic | None
    kind: SequenceKind
    index: int
    mod: int | None
    exact: bool

    @staticmethod
    def default() -> dict[str, Any]:
        return {
            'seq': None,
            'poly': None,
            'kind': SequenceKind.CAP_U,
            'mod': None,
            'exact': False,
        }

    @staticmethod
    def from_option_string() -> dict[str, str]:
        return LoggingOptions.from_option_string() | ConfigOptions.from_option_string()

    @staticmethod
    def get_argument_type() -> dict[str, Callable]:
        return (
            LoggingOptions.get_argument_type()
            | ConfigOptions.get_argument_type()
            | {
                'poly': cubic_arg,
                'kind': SequenceKind,
                'index': bounded_int(0, INDEX_CEILING - 1),
                'mod': bounded_int(2, MODULUS_CEILING - 1),
            }
        )


class RegistryOptions(LoggingOptions, ConfigOptions):
    details: bool
    case_file: Path | None

    @staticmethod
    def default() -> dict[str, Any]:
        return {
            'details': False,
            'case_file': None,
        }

    @staticmethod
    def from_option_string() -> dict[str, str]:
        return LoggingOptions.from_option_string() | ConfigOptions.from_option_string() | {'case-file': 'case_file'}

    @staticmethod
    def get_argument_type() -> dict[str, Callable]:
        return LoggingOptions.get_argument_type() | ConfigOptions.get_argument_type() | {'case-file': file_path}


class InitOptions(LoggingOptions):
    project_root: Path
    force: bool

    @staticmethod
    def default() -> dict[str, Any]:
        return {
            'project_root': Path.cwd(),
            'force': False,
        }

    @staticmethod
    def from_option_string() -> dict[str, str]:
        return LoggingOptions.from_option_string() | {'project-root': 'project_root'}

    @staticmethod
    def get_argument_type() -> dict[str, Callable]:
        return LoggingOptions.get_argument_type() | {
            'project-root': Path,
        }


class VersionOptions(LoggingOptions):
    @staticmethod
    def from_option_string() -> dict[str, str]:
        return LoggingOptions.from_option_string()

    @staticmethod
    def get_argument_type() -> dict[str, Callable]:
        return LoggingOptions.get_argument_type()
