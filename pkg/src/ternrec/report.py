from __future__ import annotations

import csv
import io
import json
from enum import Enum
from typing import TYPE_CHECKING

from .verifier import FlaggedPrime, SweepReport

if TYPE_CHECKING:
    from collections.abc import Iterable
    from typing import Final

CSV_FIELDS: Final = ('case', 'bound', 'primes_checked', 'mismatches', 'flagged_exceptions', 'verdict')


class OutputFormat(Enum):
    JSON = 'json'
    CSV = 'csv'


def report_to_json(report: SweepReport) -> str:
    return json.dumps(report.to_dict())


def report_from_json(text: str) -> SweepReport:
    return SweepReport.from_dict(json.loads(text))


def _flagged_to_text(flagged: FlaggedPrime) -> str:
    return f'{flagged.p}:{int(flagged.left)}:{int(flagged.right)}'


def _flagged_from_text(text: str) -> FlaggedPrime:
    p, left, right = text.split(':')
    return FlaggedPrime(int(p), left == '1', right == '1')


def reports_to_csv(reports: Iterable[SweepReport]) -> str:
    """One row per report; list fields are ';'-joined, flagged primes written as p:left:right."""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator='\n')
    writer.writerow(CSV_FIELDS)
    for report in reports:
        writer.writerow(
            (
                report.case,
                report.bound,
                report.primes_checked,
                ';'.join(str(p) for p in report.mismatches),
                ';'.join(_flagged_to_text(flagged) for flagged in report.flagged_exceptions),
                report.verdict,
            )
        )
    return buffer.getvalue()


def reports_from_csv(text: str) -> list[SweepReport]:
    reports = []
    for row in csv.DictReader(io.StringIO(text)):
        reports.append(
            SweepReport.from_dict(
                {
                    'case': row['case'],
                    'bound': int(row['bound']),
                    'primes_checked': int(row['primes_checked']),
                    'mismatches': [int(p) for p in row['mismatches'].split(';') if p],
                    'flagged_exceptions': [
                        _flagged_from_text(text)._asdict() for text in row['flagged_exceptions'].split(';') if text
                    ],
                    'verdict': row['verdict'],
                }
            )
        )
    return reports


def render_reports(reports: Iterable[SweepReport], output_format: OutputFormat) -> str:
    match output_format:
        case OutputFormat.JSON:
            return '\n'.join(report_to_json(report) for report in reports)
        case OutputFormat.CSV:
            return reports_to_csv(reports).rstrip('\n')
    raise ValueError(f'Unknown output format: {output_format}')
