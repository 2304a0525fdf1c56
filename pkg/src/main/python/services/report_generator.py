"""Report generator implementation."""
import csv
import io
import json
import logging
from typing import Any, Dict, List

from ..interfaces.harness_interfaces import ReportGeneratorInterface
from ..models.domain_models import Report


def _flatten(record: Dict[str, Any], prefix: str = "") -> Dict[str, Any]:
    """Nested dicts become dotted columns; lists are kept as compact JSON."""
    flat: Dict[str, Any] = {}
    for key, value in record.items():
        name = f"{prefix}{key}"
        if isinstance(value, dict):
            flat.update(_flatten(value, f"{name}."))
        elif isinstance(value, list):
            flat[name] = json.dumps(value, separators=(",", ":"))
        elif value is None:
            flat[name] = ""
        else:
            flat[name] = value
    return flat


class JSONLinesReportGenerator(ReportGeneratorInterface):
    """JSON Lines implementation of report generator.

    One object per record with sorted keys, then the summary record.
    """

    def __init__(self):
        """Initialize the JSON Lines report generator."""
        self.logger = logging.getLogger(__name__)

    def render(self, report: Report) -> str:
        lines = [json.dumps(record, sort_keys=True, separators=(",", ":")) for record in report.to_dicts()]
        return "\n".join(lines) + "\n"

    def generate_report(self, report: Report, output_path: str) -> str:
        """
        Generate a JSON Lines report.

        Args:
            report: The harness report
            output_path: Path to save the report

        Returns:
            The path written, with a ``.jsonl`` extension
        """
        self.logger.info(f"Generating JSON Lines report for {report.mode} to {output_path}")

        if not output_path.lower().endswith('.jsonl'):
            output_path += '.jsonl'

        try:
            with open(output_path, 'w', newline='') as jsonfile:
                jsonfile.write(self.render(report))
            self.logger.info(f"JSON Lines report successfully generated at {output_path}")
        except Exception as e:
            self.logger.error(f"Error generating JSON Lines report: {e}")
            raise
        return output_path


class CSVReportGenerator(ReportGeneratorInterface):
    """CSV implementation of report generator."""

    def __init__(self):
        """Initialize the CSV report generator."""
        self.logger = logging.getLogger(__name__)

    def render(self, report: Report) -> str:
        rows = [_flatten(r.to_dict()) for r in report.records]
        columns: List[str] = sorted({column for row in rows for column in row})

        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        if rows:
            writer.writerow(columns)
            for row in rows:
                writer.writerow([row.get(column, "") for column in columns])
            writer.writerow([])

        # Summary as key/value rows
        writer.writerow(["summary", "value"])
        for key, value in sorted(_flatten(report.summary_record()).items()):
            writer.writerow([key, value])
        return buffer.getvalue()

    def generate_report(self, report: Report, output_path: str) -> str:
        """
        Generate a CSV report.

        Args:
            report: The harness report
            output_path: Path to save the report

        Returns:
            The path written, with a ``.csv`` extension
        """
        self.logger.info(f"Generating CSV report for {report.mode} to {output_path}")

        if not output_path.lower().endswith('.csv'):
            output_path += '.csv'

        try:
            with open(output_path, 'w', newline='') as csvfile:
                csvfile.write(self.render(report))
            self.logger.info(f"CSV report successfully generated at {output_path}")
        except Exception as e:
            self.logger.error(f"Error generating CSV report: {e}")
            raise
        return output_path
