"""
Services du laboratoire holeforge.
"""

from .graph6_service import Graph6Service
from .generator_service import GeneratorService
from .isomorphism_service import IsomorphismService
from .enumeration_service import EnumerationService
from .invariant_service import InvariantService
from .hole_service import HoleService
from .levelling_service import LevellingService
from .perfection_service import PerfectionService
from .corpus_service import CorpusService
from .class_lab_service import ClassLabService
from .analysis_service import AnalysisService
from .sweep_service import SweepService

__all__ = [
    'Graph6Service',
    'GeneratorService',
    'IsomorphismService',
    'EnumerationService',
    'InvariantService',
    'HoleService',
    'LevellingService',
    'PerfectionService',
    'CorpusService',
    'ClassLabService',
    'AnalysisService',
    'SweepService'
]
