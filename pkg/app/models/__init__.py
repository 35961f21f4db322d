"""
Modèles de domaine et journal des campagnes.
"""

from .graph import Coloring, Embedding, Graph
from .sweep_models import SweepRecord, db

__all__ = ['Graph', 'Embedding', 'Coloring', 'SweepRecord', 'db']
