"""
Invariants exacts : nombre de clique, nombre chromatique, stabilité, couverture
par cliques, et utilitaires de coloration.
"""

from typing import List, Optional, Sequence, Tuple
import logging
from app.models.graph import Coloring, Graph, VertexSet
from app.models.reports import InvariantReport
from app.utils.bits import bit, iter_bits, lowest, popcount, to_list
from app.utils.deadline import Deadline
from app.utils.exceptions import CapExceededError, SolverTimeoutError, ValidationError
from config.settings import DEFAULT_LIMITS, Limits

logger = logging.getLogger(__name__)


def _color_sort(masks: Sequence[int], candidates: int) -> Tuple[List[int], List[int]]:
    """Classes de couleurs gloutonnes : ordre des sommets et borne de clique associée."""
    order, bounds = [], []
    uncolored = candidates
    color = 0
    while uncolored:
        color += 1
        available = uncolored
        while available:
            v = lowest(available)
            available &= ~bit(v) & ~masks[v]
            uncolored &= ~bit(v)
            order.append(v)
            bounds.append(color)
    return order, bounds


def max_clique_mask(masks: Sequence[int], within: int, deadline: Optional[Deadline] = None) -> int:
    """Clique maximum (bitset) du sous-graphe induit par ``within`` (séparation-évaluation)."""
    deadline = deadline or Deadline.unlimited()
    best = [0, 0]

    def expand(current: int, size: int, candidates: int):
        deadline.tick()
        order, bounds = _color_sort(masks, candidates)
        for idx in range(len(order) - 1, -1, -1):
            if size + bounds[idx] <= best[0]:
                return
            v = order[idx]
            chosen = current | bit(v)
            narrowed = candidates & masks[v]
            if narrowed:
                expand(chosen, size + 1, narrowed)
            elif size + 1 > best[0]:
                best[0], best[1] = size + 1, chosen
            candidates &= ~bit(v)

    if within:
        expand(0, 0, within)
    return best[1]


def maximal_cliques(masks: Sequence[int], within: int) -> List[int]:
    """Toutes les cliques maximales (Bron-Kerbosch avec pivot), en bitsets."""
    found = []

    def bron_kerbosch(r: int, p: int, x: int):
        if not p and not x:
            found.append(r)
            return
        pivot = max(iter_bits(p | x), key=lambda u: popcount(p & masks[u]))
        for v in iter_bits(p & ~masks[pivot]):
            bron_kerbosch(r | bit(v), p & masks[v], x & masks[v])
            p &= ~bit(v)
            x |= bit(v)

    if within:
        bron_kerbosch(0, within, 0)
    return found


class InvariantService:
    """Service de calcul exact des invariants classiques."""

    def __init__(self, limits: Limits = DEFAULT_LIMITS):
        self.limits = limits

    def _deadline(self, deadline: Optional[Deadline]) -> Deadline:
        return deadline or Deadline(self.limits.timeout)

    def _check_cap(self, g: Graph):
        if g.n > self.limits.vertex_cap:
            raise CapExceededError(
                f"Solveur exact limité à {self.limits.vertex_cap} sommets (n={g.n})")

    # Cliques et stables

    def clique_number(self, g: Graph, within: Optional[int] = None,
                      deadline: Optional[Deadline] = None) -> Tuple[int, VertexSet]:
        """
        Nombre de clique exact avec une clique témoin.

        Args:
            g: Graphe
            within: Restreint la recherche à un sous-ensemble (bitset)
            deadline: Délai partagé avec l'appelant

        Returns:
            (omega, clique témoin)
        """
        mask = g.full_mask if within is None else within
        clique = max_clique_mask(g.masks, mask, deadline)
        return popcount(clique), tuple(to_list(clique))

    def maximum_cliques(self, g: Graph) -> List[int]:
        """Toutes les cliques de taille maximum (bitsets)."""
        cliques = maximal_cliques(g.masks, g.full_mask)
        if not cliques:
            return []
        size = max(popcount(c) for c in cliques)
        return [c for c in cliques if popcount(c) == size]

    def stability_number(self, g: Graph, deadline: Optional[Deadline] = None) -> Tuple[int, VertexSet]:
        return self.clique_number(g.complement(), deadline=deadline)

    # Colorations

    @staticmethod
    def is_proper(g: Graph, c: Coloring) -> bool:
        """Vérifie qu'une coloration est propre (et de la bonne longueur)."""
        if len(c.colors) != g.n:
            return False
        return all(c.colors[u] != c.colors[v] for u, v in g.edges())

    @staticmethod
    def greedy_coloring(g: Graph, order: Sequence[int]) -> Coloring:
        """
        Coloration gloutonne : chaque sommet reçoit la plus petite couleur absente
        de ses voisins déjà colorés.

        Raises:
            ValidationError: L'ordre n'est pas une permutation des sommets
        """
        order = list(order)
        if sorted(order) != list(range(g.n)):
            raise ValidationError("L'ordre de coloration doit être une permutation des sommets")
        colors = [-1] * g.n
        for v in order:
            used = 0
            for u in iter_bits(g.masks[v]):
                if colors[u] >= 0:
                    used |= bit(colors[u])
            colors[v] = lowest(~used)
        return Coloring(colors)

    @staticmethod
    def dsatur_coloring(g: Graph) -> Coloring:
        """Heuristique DSATUR (borne supérieure de chi)."""
        colors = [-1] * g.n
        forbidden = [0] * g.n
        uncolored = g.full_mask
        while uncolored:
            v = max(iter_bits(uncolored),
                    key=lambda u: (popcount(forbidden[u]), popcount(g.masks[u] & uncolored), -u))
            c = lowest(~forbidden[v])
            colors[v] = c
            uncolored &= ~bit(v)
            for u in iter_bits(g.masks[v]):
                forbidden[u] |= bit(c)
        return Coloring(colors)

    def k_coloring(self, g: Graph, k: int, seed_clique: Sequence[int] = (),
                   deadline: Optional[Deadline] = None) -> Optional[Coloring]:
        """
        Cherche une k-coloration (DSATUR exact avec retour arrière).

        La clique de départ reçoit les couleurs 0..|clique|-1 et une couleur
        nouvelle n'est ouverte que dans l'ordre croissant.

        Returns:
            Une k-coloration, ou None s'il n'en existe pas
        """
        deadline = self._deadline(deadline)
        n = g.n
        if n == 0:
            return Coloring([], 0)
        if len(seed_clique) > k:
            return None
        colors = [-1] * n
        forbidden = [0] * n
        uncolored = g.full_mask
        for c, v in enumerate(seed_clique):
            colors[v] = c
            uncolored &= ~bit(v)
            for u in iter_bits(g.masks[v]):
                forbidden[u] |= bit(c)
        palette = (1 << k) - 1

        def solve(remaining: int, used: int) -> bool:
            if not remaining:
                return True
            deadline.tick()
            v = max(iter_bits(remaining),
                    key=lambda u: (popcount(forbidden[u]), popcount(g.masks[u] & remaining), -u))
            limit = min(k, used + 1)
            available = ~forbidden[v] & palette & ((1 << limit) - 1)
            rest = remaining & ~bit(v)
            for c in iter_bits(available):
                touched = [u for u in iter_bits(g.masks[v] & rest) if not forbidden[u] >> c & 1]
                for u in touched:
                    forbidden[u] |= bit(c)
                colors[v] = c
                if solve(rest, max(used, c + 1)):
                    return True
                for u in touched:
                    forbidden[u] &= ~bit(c)
                colors[v] = -1
            return False

        if solve(uncolored, len(seed_clique)):
            return Coloring(colors, k)
        return None

    def chromatic_bounds(self, g: Graph, deadline: Optional[Deadline] = None) -> Tuple[int, int]:
        """Bornes (max(omega, ceil(n/alpha)), DSATUR) sur le nombre chromatique."""
        if g.n == 0:
            return 0, 0
        omega, _ = self.clique_number(g, deadline=deadline)
        alpha, _ = self.stability_number(g, deadline=deadline)
        lower = max(omega, -(-g.n // alpha))
        return lower, self.dsatur_coloring(g).palette_size

    def chromatic_number(self, g: Graph, deadline: Optional[Deadline] = None) -> Tuple[int, Coloring]:
        """
        Nombre chromatique exact avec une coloration témoin.

        On part de la borne inférieure max(omega, ceil(n/alpha)) et on teste les
        k croissants jusqu'à la borne DSATUR.

        Raises:
            CapExceededError: Graphe au-delà de la limite de sommets
            SolverTimeoutError: Délai dépassé (distinct de l'infaisabilité)
        """
        self._check_cap(g)
        if g.n == 0:
            return 0, Coloring([], 0)
        deadline = self._deadline(deadline)
        omega, clique = self.clique_number(g, deadline=deadline)
        alpha, _ = self.stability_number(g, deadline=deadline)
        lower = max(omega, -(-g.n // alpha))
        best = self.dsatur_coloring(g)
        logger.debug(f"chi: n={g.n}, bornes [{lower}, {best.palette_size}]")
        for k in range(lower, best.palette_size):
            coloring = self.k_coloring(g, k, clique, deadline)
            if coloring is not None:
                return k, coloring
        return best.palette_size, best

    def clique_cover_number(self, g: Graph, deadline: Optional[Deadline] = None) -> Tuple[int, Coloring]:
        """Couverture par cliques : coloration du complémentaire (classes = cliques de g)."""
        return self.chromatic_number(g.complement(), deadline)

    def report(self, g: Graph) -> InvariantReport:
        """
        Rapport complet (n, m, omega, chi, alpha, theta) ; un délai dépassé sur
        chi ou theta laisse la valeur à None et conserve les bornes.
        """
        self._check_cap(g)
        omega, clique = self.clique_number(g)
        alpha, stable = self.stability_number(g)
        lower, upper = self.chromatic_bounds(g)
        chi = theta = coloring = None
        timed_out = False
        try:
            chi, coloring = self.chromatic_number(g)
            theta, _ = self.clique_cover_number(g)
        except SolverTimeoutError as e:
            logger.warning(f"Invariants incomplets: {e}")
            timed_out = True
        return InvariantReport(
            n=g.n, m=g.edge_count(), omega=omega, chi=chi, alpha=alpha, theta=theta,
            clique=clique, stable_set=stable, coloring=coloring,
            chi_lower=lower, chi_upper=upper, timed_out=timed_out,
        )
