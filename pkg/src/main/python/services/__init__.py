"""Services package init."""

from .bounds import BoundsCalculator
from .characterization import CharacterizationCalculator
from .cover_solver import BranchAndBoundCoverSolver
from .domination import DominationCalculator

__all__ = [
    'BoundsCalculator',
    'CharacterizationCalculator',
    'BranchAndBoundCoverSolver',
    'DominationCalculator',
]
