"""Interfaces for graph sources and report generators."""
from abc import ABC, abstractmethod
from typing import List

from ..models.domain_models import NamedGraph, Report


class GraphSourceInterface(ABC):
    """Interface for anything that turns a CLI input token into graphs."""

    @abstractmethod
    def supports(self, token: str) -> bool:
        """
        Check whether this source understands the token.

        Args:
            token: Input token from the command line

        Returns:
            True if ``load`` can handle it
        """
        pass

    @abstractmethod
    def load(self, token: str) -> List[NamedGraph]:
        """
        Load the graphs named by the token.

        Args:
            token: Input token from the command line

        Returns:
            Graphs in input order
        """
        pass


class ReportGeneratorInterface(ABC):
    """Interface for harness report generation."""

    @abstractmethod
    def generate_report(self, report: Report, output_path: str) -> str:
        """
        Write a harness report.

        Args:
            report: The report to serialise
            output_path: Path to save the report

        Returns:
            The path actually written
        """
        pass
