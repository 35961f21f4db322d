"""
Corpus de graphes reproductibles (graine fixe => corpus identique).
"""

from typing import Iterator, List, Optional
import logging
import numpy as np
from app.models.graph import Graph, substitute
from app.services.enumeration_service import EnumerationService, GraphPredicate
from app.services.generator_service import GeneratorService
from app.services.hole_service import HoleService
from app.utils.bits import bit, iter_bits
from app.utils.exceptions import ValidationError
from config.settings import DEFAULT_LIMITS, Limits

logger = logging.getLogger(__name__)

CORPUS_KINDS = ('random_chordal', 'random_long_hole_free', 'substitution_closure', 'exhaustive')


class CorpusService:
    """Service de génération des corpus de test et de campagne."""

    def __init__(self, limits: Limits = DEFAULT_LIMITS, holes: HoleService = None,
                 enumeration: EnumerationService = None):
        self.limits = limits
        self.holes = holes or HoleService(limits)
        self.enumeration = enumeration or EnumerationService(limits)

    def _rng(self, seed: Optional[int]) -> np.random.Generator:
        return np.random.default_rng(self.limits.seed if seed is None else seed)

    def random_chordal(self, count: int, n_min: int = 1, n_max: int = 12,
                       density: float = 0.5, seed: Optional[int] = None) -> Iterator[Graph]:
        """
        Graphes cordaux aléatoires : chaque nouveau sommet est relié à une clique
        des sommets précédents (l'ordre inverse d'ajout est simplicial).
        """
        if n_min < 1 or n_max < n_min:
            raise ValidationError(f"Tailles invalides [{n_min}, {n_max}]")
        rng = self._rng(seed)
        for _ in range(count):
            n = int(rng.integers(n_min, n_max + 1))
            masks = [0] * n
            for v in range(1, n):
                clique = 0
                if rng.random() < 0.9:
                    u = int(rng.integers(0, v))
                    clique = bit(u)
                    common = masks[u]
                    for w in iter_bits(common):
                        if common >> w & 1 and rng.random() < density:
                            clique |= bit(w)
                            common &= masks[w]
                for u in iter_bits(clique):
                    masks[u] |= bit(v)
                masks[v] = clique
            yield Graph.trusted(n, masks)

    def random_long_hole_free(self, count: int, n: int = 8, p: float = 0.7,
                              seed: Optional[int] = None, max_attempts: int = 10_000) -> Iterator[Graph]:
        """G(n, p) par rejet : seuls les tirages sans trou de longueur >= 5 sont gardés."""
        rng = self._rng(seed)
        produced = attempts = 0
        while produced < count:
            if attempts >= max_attempts:
                logger.warning(f"Rejet abandonné après {attempts} tirages ({produced}/{count} graphes)")
                return
            attempts += 1
            draws = rng.random((n, n)) < p
            edges = [(u, v) for u in range(n) for v in range(u + 1, n) if draws[u, v]]
            g = Graph.from_edges(n, edges)
            if self.holes.find_long_hole(g) is None:
                produced += 1
                yield g

    def substitution_closure(self, count: int, max_vertices: int = 60,
                             seed: Optional[int] = None) -> Iterator[Graph]:
        """
        Substitutions itérées sur les graphes de départ {K_1, K_2, antitrou à 7 sommets}.

        Chaque graphe produit s'obtient en substituant aux sommets d'une base tirée
        dans le pool des graphes tirés dans le pool, tant que le total reste
        sous ``max_vertices`` ; le résultat rejoint le pool.
        """
        rng = self._rng(seed)
        pool: List[Graph] = [GeneratorService.complete(1), GeneratorService.complete(2),
                             GeneratorService.antihole(7)]
        for _ in range(count):
            base = pool[int(rng.integers(0, len(pool)))]
            parts = []
            total = 0
            for v in range(base.n):
                budget = max_vertices - total - (base.n - v - 1)
                fitting = [h for h in pool if h.n <= budget]
                part = fitting[int(rng.integers(0, len(fitting)))]
                parts.append(part)
                total += part.n
            g = substitute(base, parts)
            if g.n < max_vertices:
                pool.append(g)
            yield g

    def exhaustive(self, n: int, filter: Optional[GraphPredicate] = None,
                   prune: Optional[GraphPredicate] = None) -> Iterator[Graph]:
        return self.enumeration.enumerate_graphs(n, filter, prune)

    def generate(self, kind: str, count: int = 10, n: int = 8, seed: Optional[int] = None,
                 max_vertices: int = 60) -> Iterator[Graph]:
        """
        Point d'entrée unique des corpus.

        Raises:
            ValidationError: Type de corpus inconnu
        """
        if kind == 'random_chordal':
            return self.random_chordal(count, 1, n, seed=seed)
        if kind == 'random_long_hole_free':
            return self.random_long_hole_free(count, n, seed=seed)
        if kind == 'substitution_closure':
            return self.substitution_closure(count, max_vertices, seed=seed)
        if kind == 'exhaustive':
            return self.exhaustive(n)
        raise ValidationError(f"Type de corpus inconnu: {kind}. Types: {', '.join(CORPUS_KINDS)}")
