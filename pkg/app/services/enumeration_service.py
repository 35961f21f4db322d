"""
Génération exhaustive sans isomorphes par augmentation canonique.

Un enfant s'obtient en ajoutant au parent un sommet n adjacent à un sous-ensemble
S des sommets existants. Il n'est accepté que si le nouveau sommet est dans
l'orbite canonique (clé invariante bon marché puis code enraciné maximal), et
les enfants d'un même parent sont dédoublonnés par ce code enraciné.
"""

from concurrent.futures import ProcessPoolExecutor
from itertools import combinations
from typing import Callable, Iterator, List, Optional, Tuple
import logging
from app.models.graph import Graph
from app.utils.bits import bit, iter_bits, popcount
from app.utils.exceptions import CapExceededError, ValidationError
from app.services.isomorphism_service import IsomorphismService
from config.settings import DEFAULT_LIMITS, Limits

logger = logging.getLogger(__name__)

GraphPredicate = Callable[[Graph], bool]


def _cheap_key(masks, v: int) -> Tuple[int, Tuple[int, ...]]:
    return popcount(masks[v]), tuple(sorted(popcount(masks[u]) for u in iter_bits(masks[v])))


def _children(parent: Graph, isomorphism: IsomorphismService,
              prune: Optional[GraphPredicate]) -> List[Graph]:
    m = parent.n
    new = bit(m)
    accepted = {}
    for subset in range(1 << m):
        masks = [mask | new if subset >> v & 1 else mask for v, mask in enumerate(parent.masks)]
        masks.append(subset)
        key = _cheap_key(masks, m)
        candidates = [u for u in range(m) if _cheap_key(masks, u) >= key]
        if any(_cheap_key(masks, u) > key for u in candidates):
            continue
        child = Graph.trusted(m + 1, masks)
        code = isomorphism.rooted_code(child, m)
        if any(isomorphism.rooted_code(child, u) > code for u in candidates):
            continue
        if code in accepted:
            continue
        if prune is not None and not prune(child):
            continue
        accepted[code] = child
    return list(accepted.values())


def _extend_shard(args) -> List[Graph]:
    parents, limits, prune, final = args
    isomorphism = IsomorphismService(limits)
    out = []
    for parent in parents:
        for child in _children(parent, isomorphism, prune):
            if final is None or final(child):
                out.append(child)
    return out


class EnumerationService:
    """Service d'énumération exhaustive à isomorphisme près."""

    def __init__(self, limits: Limits = DEFAULT_LIMITS, isomorphism: IsomorphismService = None):
        self.limits = limits
        self.isomorphism = isomorphism or IsomorphismService(limits)

    def enumerate_graphs(self, n: int, filter: Optional[GraphPredicate] = None,
                         prune: Optional[GraphPredicate] = None, jobs: int = 1) -> Iterator[Graph]:
        """
        Un représentant par classe d'isomorphisme de graphes à n sommets.

        Args:
            n: Nombre de sommets
            filter: Prédicat appliqué au dernier niveau seulement
            prune: Prédicat héréditaire appliqué à chaque niveau
            jobs: Nombre de processus pour le dernier niveau (parents répartis)

        Returns:
            Flux déterministe de graphes

        Raises:
            CapExceededError: n au-delà de la limite d'énumération
        """
        if n < 0:
            raise ValidationError("n doit être positif ou nul")
        if n > self.limits.enumeration_cap:
            raise CapExceededError(
                f"Énumération limitée à {self.limits.enumeration_cap} sommets (n={n})")

        if n <= 1:
            g = Graph.empty(n)
            if (prune is None or prune(g)) and (filter is None or filter(g)):
                yield g
            return

        level = [Graph.empty(1)]
        if prune is not None:
            level = [g for g in level if prune(g)]
        for size in range(2, n):
            level = _extend_shard((level, self.limits, prune, None))
            logger.debug(f"Niveau {size}: {len(level)} graphes")

        if jobs > 1 and len(level) > 1:
            # Tranches contiguës : la concaténation reproduit l'ordre séquentiel
            chunk = -(-len(level) // jobs)
            shards = [level[i:i + chunk] for i in range(0, len(level), chunk)]
            with ProcessPoolExecutor(max_workers=jobs) as pool:
                for graphs in pool.map(_extend_shard, [(s, self.limits, prune, filter) for s in shards]):
                    yield from graphs
        else:
            for parent in level:
                for child in _children(parent, self.isomorphism, prune):
                    if filter is None or filter(child):
                        yield child

    def count_graphs(self, n: int, filter: Optional[GraphPredicate] = None,
                     prune: Optional[GraphPredicate] = None) -> int:
        return sum(1 for _ in self.enumerate_graphs(n, filter, prune))

    def enumerate_labeled(self, n: int, filter: Optional[GraphPredicate] = None) -> List[Graph]:
        """
        Oracle par force brute : parcourt les 2^(n(n-1)/2) graphes étiquetés et
        garde le premier de chaque classe d'isomorphisme (petits n seulement).
        """
        if n > 6:
            raise CapExceededError(f"Oracle étiqueté limité à 6 sommets (n={n})")
        pairs = list(combinations(range(n), 2))
        seen = {}
        for selection in range(1 << len(pairs)):
            g = Graph.from_edges(n, [pairs[i] for i in iter_bits(selection)])
            if filter is not None and not filter(g):
                continue
            code = self.isomorphism.canonical_code(g)
            if code not in seen:
                seen[code] = g
        return list(seen.values())
