"""
Codes canoniques et recherche de plongements induits.

Le code canonique est obtenu par individualisation-raffinement : on raffine
une partition ordonnée des sommets jusqu'à stabilité, puis on individualise
tour à tour les sommets de la première cellule non triviale. Chaque feuille
fournit un ordre total des sommets ; le code retenu est la matrice
d'adjacence (ordre graph6) maximale sur toutes les feuilles.
"""

from typing import List, Optional, Sequence, Tuple
import logging
from app.models.graph import Embedding, Graph
from app.utils.bits import bit, iter_bits, lowest, popcount
from app.utils.exceptions import CapExceededError
from config.settings import DEFAULT_LIMITS, Limits

logger = logging.getLogger(__name__)


def _refine(masks: Sequence[int], cells: List[int]) -> List[int]:
    """Raffine jusqu'à obtenir une partition équitable (ordre des cellules invariant)."""
    while True:
        refined = []
        for cell in cells:
            if cell & (cell - 1) == 0:
                refined.append(cell)
                continue
            groups = {}
            for v in iter_bits(cell):
                signature = tuple(popcount(masks[v] & other) for other in cells)
                groups[signature] = groups.get(signature, 0) | bit(v)
            for signature in sorted(groups):
                refined.append(groups[signature])
        if len(refined) == len(cells):
            return refined
        cells = refined


def _leaf_code(masks: Sequence[int], order: Sequence[int]) -> int:
    value = 0
    for j in range(1, len(order)):
        column = masks[order[j]]
        for i in range(j):
            value = (value << 1) | (column >> order[i] & 1)
    return value


def _are_twins(masks: Sequence[int], u: int, v: int) -> bool:
    return masks[u] & ~bit(v) == masks[v] & ~bit(u)


def _search(masks: Sequence[int], cells: List[int]) -> int:
    cells = _refine(masks, cells)
    for index, cell in enumerate(cells):
        if cell & (cell - 1):
            break
    else:
        return _leaf_code(masks, [lowest(c) for c in cells])

    best = -1
    tried: List[int] = []
    for v in iter_bits(cell):
        # La transposition de deux jumeaux est un automorphisme qui fixe la partition
        if any(_are_twins(masks, u, v) for u in tried):
            continue
        tried.append(v)
        branch = cells[:index] + [bit(v), cell & ~bit(v)] + cells[index + 1:]
        best = max(best, _search(masks, branch))
    return best


def _encode(n: int, value: int) -> bytes:
    pairs = n * (n - 1) // 2
    return n.to_bytes(2, 'big') + value.to_bytes((pairs + 7) // 8, 'big')


class IsomorphismService:
    """Service de codes canoniques et de plongements induits."""

    def __init__(self, limits: Limits = DEFAULT_LIMITS):
        self.limits = limits

    def _check_cap(self, g: Graph):
        if g.n > self.limits.canonical_cap:
            raise CapExceededError(
                f"Code canonique limité à {self.limits.canonical_cap} sommets (n={g.n})")

    def canonical_code(self, g: Graph) -> bytes:
        """
        Code canonique : égal pour deux graphes ssi ils sont isomorphes.

        Raises:
            CapExceededError: Graphe au-delà de la limite configurée
        """
        self._check_cap(g)
        if g.n <= 1:
            return _encode(g.n, 0)
        return _encode(g.n, _search(g.masks, [g.full_mask]))

    def rooted_code(self, g: Graph, root: int) -> bytes:
        """Code canonique du graphe enraciné (g, root) : égal ssi même orbite."""
        self._check_cap(g)
        rest = g.full_mask & ~bit(root)
        cells = [bit(root), rest] if rest else [bit(root)]
        return _encode(g.n, _search(g.masks, cells))

    def are_isomorphic(self, g: Graph, h: Graph) -> bool:
        if g.n != h.n or g.edge_count() != h.edge_count():
            return False
        if sorted(g.degrees()) != sorted(h.degrees()):
            return False
        return self.canonical_code(g) == self.canonical_code(h)

    def canonical_form(self, g: Graph) -> Graph:
        """Représentant canonique : le graphe dont l'encodage est le code canonique."""
        code = self.canonical_code(g)
        n = int.from_bytes(code[:2], 'big')
        value = int.from_bytes(code[2:], 'big')
        masks = [0] * n
        k = n * (n - 1) // 2 - 1
        for j in range(1, n):
            for i in range(j):
                if value >> k & 1:
                    masks[i] |= bit(j)
                    masks[j] |= bit(i)
                k -= 1
        return Graph.trusted(n, masks)

    def find_embedding(self, h: Graph, g: Graph) -> Optional[Embedding]:
        """
        Cherche un plongement induit de h dans g.

        Les sommets du motif sont placés dans l'ordre 0..k-1 et les images
        essayées par ordre croissant : le premier plongement trouvé est le plus
        petit dans l'ordre lexicographique des images.

        Args:
            h: Motif
            g: Hôte

        Returns:
            Plongement induit, ou None s'il n'en existe pas
        """
        k = h.n
        if k > g.n:
            return None
        if k == 0:
            return Embedding(())

        host_deg = g.degrees()
        pattern_deg = h.degrees()
        domains = []
        for i in range(k):
            co_degree = k - 1 - pattern_deg[i]
            allowed = 0
            for w in range(g.n):
                if host_deg[w] >= pattern_deg[i] and g.n - 1 - host_deg[w] >= co_degree:
                    allowed |= bit(w)
            if not allowed:
                return None
            domains.append(allowed)

        images: List[int] = [0] * k

        def extend(i: int, doms: Tuple[int, ...]) -> bool:
            if i == k:
                return True
            for w in iter_bits(doms[i]):
                images[i] = w
                narrowed = list(doms)
                feasible = True
                for j in range(i + 1, k):
                    if h.masks[i] >> j & 1:
                        narrowed[j] = doms[j] & g.masks[w]
                    else:
                        narrowed[j] = doms[j] & ~g.masks[w] & ~bit(w)
                    if not narrowed[j]:
                        feasible = False
                        break
                if feasible and extend(i + 1, tuple(narrowed)):
                    return True
            return False

        if extend(0, tuple(domains)):
            return Embedding(images)
        return None

    def is_induced_subgraph(self, h: Graph, g: Graph) -> Optional[Embedding]:
        return self.find_embedding(h, g)
