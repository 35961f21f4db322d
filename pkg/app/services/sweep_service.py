"""
Exécution des campagnes (parallélisme ordonné) et journal SQLAlchemy.
"""

from concurrent.futures import ProcessPoolExecutor
from typing import Any, Dict, Iterable, Iterator, List, Optional
import json
import logging
from app.models.graph import Graph
from app.models.sweep_models import SweepRecord, db
from app.services.analysis_service import AnalysisService, run_command
from app.services.graph6_service import Graph6Service
from config.settings import DEFAULT_LIMITS, Limits

logger = logging.getLogger(__name__)


class SweepService:
    """Service de campagne : une ligne par graphe, dans l'ordre d'entrée."""

    def __init__(self, limits: Limits = DEFAULT_LIMITS):
        self.limits = limits
        self.analysis = AnalysisService(limits)

    def run(self, command: str, graphs: Iterable[Graph], jobs: int = 1,
            options: Optional[Dict[str, Any]] = None) -> Iterator[Dict[str, Any]]:
        """
        Applique une commande à chaque graphe.

        Args:
            command: Nom de la commande
            graphs: Flux de graphes
            jobs: Nombre de processus (1 = séquentiel)
            options: Options de la commande

        Returns:
            Lignes de résultat ordonnées comme l'entrée
        """
        options = options or {}
        if jobs <= 1:
            for g in graphs:
                yield self.analysis.run(command, g, **options)
            return
        tasks = ((command, Graph6Service.write_graph6(g), self.limits, options) for g in graphs)
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            # map conserve l'ordre des entrées quel que soit l'ordre de fin
            yield from pool.map(run_command, tasks)

    def record(self, row: Dict[str, Any], seed: Optional[int] = None) -> SweepRecord:
        """Enregistre une ligne de résultat dans le journal."""
        entry = SweepRecord(
            command=row['command'],
            canonical_code=row.get('canonical_code'),
            graph6=row['graph6'],
            payload=json.dumps(row, sort_keys=True),
            seed=self.limits.seed if seed is None else seed,
            verdict=row.get('verdict'),
        )
        db.session.add(entry)
        db.session.commit()
        logger.debug(f"Ligne {entry.id} enregistrée ({entry.command}, {entry.graph6})")
        return entry

    @staticmethod
    def list_records(command: Optional[str] = None, limit: int = 100) -> List[SweepRecord]:
        query = SweepRecord.query
        if command:
            query = query.filter_by(command=command)
        return query.order_by(SweepRecord.id.desc()).limit(limit).all()
