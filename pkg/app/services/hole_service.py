"""
Analyse des cycles induits : énumération, trous longs, cordalité, parité,
sommets bisimpliciaux et perfection.
"""

from typing import Dict, Iterator, List, Optional, Tuple
import logging
from app.models.graph import Coloring, Graph, components
from app.models.reports import (ChordalityResult, ClassFlags, Cycle, Flag, HoleReport,
                                PerfectnessResult)
from app.services.invariant_service import InvariantService
from app.utils.bits import bit, iter_bits, lowest
from app.utils.deadline import Deadline
from app.utils.exceptions import CapExceededError, NoBisimplicialVertexError, ValidationError
from config.settings import DEFAULT_LIMITS, Limits

logger = logging.getLogger(__name__)

ACYCLIC = 'acyclic'
ALL_EVEN = 'all_even'
ALL_ODD = 'all_odd'
MIXED = 'mixed'


def iter_induced_cycles(g: Graph, min_len: int = 3, max_len: Optional[int] = None,
                        deadline: Optional[Deadline] = None) -> Iterator[Cycle]:
    """
    Parcours en profondeur des chemins induits ; chaque cycle induit est produit
    une seule fois, sous forme canonique (plus petit sommet en tête, puis le
    plus petit de ses deux voisins).
    """
    deadline = deadline or Deadline.unlimited()
    max_len = g.n if max_len is None else min(max_len, g.n)
    masks = g.masks

    def extend(path: List[int], blocked: int, allowed: int, start_nbrs: int) -> Iterator[Cycle]:
        deadline.tick()
        last = path[-1]
        for v in iter_bits(masks[last] & allowed & ~blocked):
            if start_nbrs >> v & 1:
                length = len(path) + 1
                if length >= min_len and path[1] < v:
                    yield tuple(path) + (v,)
            elif len(path) + 1 < max_len:
                path.append(v)
                yield from extend(path, blocked | masks[last] | bit(v), allowed, start_nbrs)
                path.pop()

    for s in range(g.n):
        allowed = g.full_mask & ~((bit(s) << 1) - 1)
        start_nbrs = masks[s] & allowed
        for p1 in iter_bits(start_nbrs):
            yield from extend([s, p1], bit(s) | bit(p1), allowed, start_nbrs & ~bit(p1))


def _shortest_path(g: Graph, sources: int, targets: int, within: int) -> List[int]:
    """Plus court chemin (dans ``within``) d'un sommet de ``sources`` à un sommet de ``targets``."""
    parent: Dict[int, int] = {v: -1 for v in iter_bits(sources)}
    frontier = sources
    seen = sources
    while frontier:
        hit = frontier & targets
        if hit:
            v = lowest(hit)
            path = []
            while v != -1:
                path.append(v)
                v = parent[v]
            return path[::-1]
        nxt = 0
        for v in iter_bits(frontier):
            for u in iter_bits(g.masks[v] & within & ~seen & ~nxt):
                parent[u] = v
                nxt |= bit(u)
        seen |= nxt
        frontier = nxt
    return []


def _is_bipartite_within(masks, within: int, complemented: bool = False) -> bool:
    side = {}
    for start in iter_bits(within):
        if start in side:
            continue
        side[start] = 0
        stack = [start]
        while stack:
            v = stack.pop()
            nbrs = (within & ~masks[v] & ~bit(v)) if complemented else (masks[v] & within)
            for u in iter_bits(nbrs):
                if u not in side:
                    side[u] = 1 - side[v]
                    stack.append(u)
                elif side[u] == side[v]:
                    return False
    return True


class HoleService:
    """Service d'analyse des trous et des classes héréditaires associées."""

    def __init__(self, limits: Limits = DEFAULT_LIMITS, invariants: InvariantService = None):
        self.limits = limits
        self.invariants = invariants or InvariantService(limits)

    def enumerate_induced_cycles(self, g: Graph, min_len: int = 3,
                                 max_len: Optional[int] = None) -> HoleReport:
        """
        Énumère les cycles induits de longueur comprise entre min_len et max_len.

        Args:
            g: Graphe
            min_len: Longueur minimale (>= 3)
            max_len: Longueur maximale (défaut : n)

        Returns:
            HoleReport (drapeau ``truncated`` si la borne de comptage est atteinte)
        """
        max_len = g.n if max_len is None else max_len
        if min_len < 3 or max_len < min_len:
            raise ValidationError(f"Intervalle de longueurs invalide [{min_len}, {max_len}]")
        report = HoleReport()
        for cycle in iter_induced_cycles(g, min_len, max_len, Deadline(self.limits.timeout)):
            if len(report.cycles) >= self.limits.cycle_cap:
                report.truncated = True
                logger.warning(f"Énumération tronquée à {self.limits.cycle_cap} cycles")
                break
            report.cycles.append(cycle)
        return report

    def find_long_hole(self, g: Graph) -> Optional[Cycle]:
        """
        Cherche un trou de longueur au moins 5 sans tout énumérer.

        Pour chaque arête bc, un tel trou passe par a-b-c-d avec a dans N(b)\\N[c],
        d dans N(c)\\N[b], a et d non adjacents, reliés par un chemin évitant
        N[b] et N[c] ; le plus court de ces chemins referme un trou induit.

        Returns:
            Le trou (séquence cyclique), ou None
        """
        for b, c in g.edges():
            for witness in (self._hole_through(g, b, c), self._hole_through(g, c, b)):
                if witness is not None:
                    return witness
        return None

    def _hole_through(self, g: Graph, b: int, c: int) -> Optional[Cycle]:
        closed_b = g.masks[b] | bit(b)
        closed_c = g.masks[c] | bit(c)
        side_a = g.masks[b] & ~closed_c
        side_d = g.masks[c] & ~closed_b
        if not side_a or not side_d:
            return None
        rest = g.full_mask & ~(closed_b | closed_c)
        for comp in components(g, rest):
            for a in iter_bits(side_a):
                if not g.masks[a] & comp:
                    continue
                for d in iter_bits(side_d & ~g.masks[a]):
                    if not g.masks[d] & comp:
                        continue
                    path = _shortest_path(g, g.masks[a] & comp, g.masks[d] & comp, comp)
                    return (a, b, c, d) + tuple(reversed(path))
        return None

    def has_long_hole(self, g: Graph) -> Optional[Cycle]:
        return self.find_long_hole(g)

    def find_hole(self, g: Graph) -> Optional[Cycle]:
        """Cherche un trou (longueur >= 4) via un P3 induit a-b-c refermé hors de N[b]."""
        for b in range(g.n):
            nbrs = g.masks[b]
            rest = g.full_mask & ~(nbrs | bit(b))
            if not rest:
                continue
            for comp in components(g, rest):
                for a in iter_bits(nbrs):
                    if not g.masks[a] & comp:
                        continue
                    for c in iter_bits(nbrs & ~g.masks[a] & ~((bit(a) << 1) - 1)):
                        if not g.masks[c] & comp:
                            continue
                        path = _shortest_path(g, g.masks[c] & comp, g.masks[a] & comp, comp)
                        return (a, b, c) + tuple(path)
        return None

    def find_odd_hole(self, g: Graph) -> Optional[Cycle]:
        """Premier trou impair de longueur au moins 5 (ordre canonique du parcours)."""
        if self.find_long_hole(g) is None:
            return None
        for cycle in iter_induced_cycles(g, 5, None, Deadline(self.limits.timeout)):
            if len(cycle) % 2:
                return cycle
        return None

    @staticmethod
    def is_induced_cycle(g: Graph, cycle: Cycle) -> bool:
        k = len(cycle)
        if k < 3 or len(set(cycle)) != k:
            return False
        for i in range(k):
            for j in range(i + 1, k):
                consecutive = j == i + 1 or (i == 0 and j == k - 1)
                if g.has_edge(cycle[i], cycle[j]) != consecutive:
                    return False
        return True

    # Classes

    def is_chordal(self, g: Graph) -> ChordalityResult:
        """
        Reconnaissance par recherche de cardinalité maximum (MCS).

        Returns:
            ChordalityResult avec un ordre d'élimination simplicial, ou un trou témoin
        """
        weight = [0] * g.n
        unnumbered = g.full_mask
        visit = []
        while unnumbered:
            v = max(iter_bits(unnumbered), key=lambda u: (weight[u], -u))
            visit.append(v)
            unnumbered &= ~bit(v)
            for u in iter_bits(g.masks[v] & unnumbered):
                weight[u] += 1
        order = visit[::-1]
        position = {v: i for i, v in enumerate(order)}
        for v in order:
            later = 0
            for u in iter_bits(g.masks[v]):
                if position[u] > position[v]:
                    later |= bit(u)
            for u in iter_bits(later):
                if later & ~bit(u) & ~g.masks[u]:
                    witness = self.find_hole(g)
                    return ChordalityResult(False, None, witness)
        return ChordalityResult(True, order, None)

    @staticmethod
    def is_bipartite(g: Graph) -> bool:
        return _is_bipartite_within(g.masks, g.full_mask)

    def is_chordal_bipartite(self, g: Graph) -> bool:
        """Biparti et tout cycle induit est un carré (pas de trou de longueur >= 6)."""
        return self.is_bipartite(g) and self.find_long_hole(g) is None

    def is_weakly_chordal(self, g: Graph) -> bool:
        return self.find_long_hole(g) is None and self.find_long_hole(g.complement()) is None

    def parity_class(self, g: Graph) -> str:
        """Étiquette de parité des cycles induits : acyclic, all_even, all_odd ou mixed."""
        seen_even = seen_odd = False
        for cycle in iter_induced_cycles(g, 3, None, Deadline(self.limits.timeout)):
            if len(cycle) % 2:
                seen_odd = True
            else:
                seen_even = True
            if seen_even and seen_odd:
                return MIXED
        if seen_even:
            return ALL_EVEN
        if seen_odd:
            return ALL_ODD
        return ACYCLIC

    def find_bisimplicial(self, g: Graph, within: Optional[int] = None) -> Optional[int]:
        """
        Premier sommet dont le voisinage est réunion de deux cliques, c'est-à-dire
        dont le complémentaire du voisinage est biparti.
        """
        mask = g.full_mask if within is None else within
        for v in iter_bits(mask):
            if _is_bipartite_within(g.masks, g.masks[v] & mask, complemented=True):
                return v
        return None

    def bisimplicial_elimination_coloring(self, g: Graph) -> Coloring:
        """
        Retire successivement un sommet bisimplicial puis colore glouton dans
        l'ordre inverse des retraits (au plus 2*omega - 1 couleurs).

        Raises:
            NoBisimplicialVertexError: Sous-graphe restant sans sommet bisimplicial
        """
        remaining = g.full_mask
        removal = []
        while remaining:
            v = self.find_bisimplicial(g, remaining)
            if v is None:
                stuck = tuple(iter_bits(remaining))
                logger.error(f"Élimination bloquée sur {stuck}")
                raise NoBisimplicialVertexError(
                    "Aucun sommet bisimplicial : le graphe n'est pas sans trou pair", stuck)
            removal.append(v)
            remaining &= ~bit(v)
        return self.invariants.greedy_coloring(g, removal[::-1])

    def is_perfect(self, g: Graph) -> PerfectnessResult:
        """
        Perfection : ni trou impair (longueur >= 5) ni antitrou impair.

        Raises:
            CapExceededError: Graphe au-delà de la limite configurée
        """
        if g.n > self.limits.perfect_cap:
            raise CapExceededError(
                f"Test de perfection limité à {self.limits.perfect_cap} sommets (n={g.n})")
        if g.n < 5:
            return PerfectnessResult(True)
        hole = self.find_odd_hole(g)
        if hole is not None:
            return PerfectnessResult(False, hole, 'odd_hole')
        antihole = self.find_odd_hole(g.complement())
        if antihole is not None:
            return PerfectnessResult(False, antihole, 'odd_antihole')
        return PerfectnessResult(True)

    def find_claw(self, g: Graph) -> Optional[Tuple[int, int, int, int]]:
        """Griffe induite (centre, puis trois feuilles deux à deux non adjacentes)."""
        for v in range(g.n):
            nbrs = g.masks[v]
            for a in iter_bits(nbrs):
                for b in iter_bits(nbrs & ~g.masks[a] & ~((bit(a) << 1) - 1)):
                    rest = nbrs & ~g.masks[a] & ~g.masks[b] & ~((bit(b) << 1) - 1)
                    if rest:
                        return v, a, b, lowest(rest)
        return None

    def _first_cycle(self, g: Graph, min_len: int, max_len: Optional[int] = None,
                     parity: Optional[int] = None) -> Optional[Cycle]:
        for cycle in iter_induced_cycles(g, min_len, max_len, Deadline(self.limits.timeout)):
            if parity is None or len(cycle) % 2 == parity:
                return cycle
        return None

    def classify(self, g: Graph) -> ClassFlags:
        """Drapeaux d'appartenance à chaque classe héréditaire étudiée, avec témoins."""
        chordality = self.is_chordal(g)
        long_hole = self.find_long_hole(g)
        complement = g.complement()
        long_antihole = self.find_long_hole(complement)
        bipartite = self.is_bipartite(g)
        parity = self.parity_class(g)

        if not bipartite:
            chordal_bipartite = Flag(False, self._first_cycle(g, 3, None, 1), 'odd_cycle')
        elif long_hole is not None:
            chordal_bipartite = Flag(False, long_hole, 'hole')
        else:
            chordal_bipartite = Flag(True)

        if long_hole is not None:
            weakly = Flag(False, long_hole, 'hole')
        elif long_antihole is not None:
            weakly = Flag(False, long_antihole, 'antihole')
        else:
            weakly = Flag(True)

        same_parity = Flag(True) if parity != MIXED else Flag(False, self._first_cycle(g, 3, None, 0), 'even_cycle')
        even_hole = self._first_cycle(g, 4, None, 0)
        odd_hole = self.find_odd_hole(g)
        perfect = self.is_perfect(g) if g.n <= self.limits.perfect_cap else None
        long_six = self._first_cycle(g, 6)
        triangle_or_square = self._first_cycle(g, 3, 4)
        claw = self.find_claw(g)

        return ClassFlags(
            chordal=Flag(chordality.chordal, chordality.witness, None if chordality else 'hole'),
            chordal_bipartite=chordal_bipartite,
            long_hole_free=Flag(long_hole is None, long_hole, 'hole' if long_hole else None),
            weakly_chordal=weakly,
            same_parity=same_parity,
            parity=parity,
            even_hole_free=Flag(even_hole is None, even_hole, 'hole' if even_hole else None),
            odd_hole_free=Flag(odd_hole is None, odd_hole, 'hole' if odd_hole else None),
            perfect=Flag(perfect.perfect, perfect.witness, perfect.kind) if perfect is not None
            else Flag(False, None, 'not_computed'),
            claw_free=Flag(claw is None, claw, 'claw' if claw else None),
            holes_at_most_five=Flag(long_six is None, long_six, 'hole' if long_six else None),
            pentagon_only=Flag(long_six is None and triangle_or_square is None,
                               long_six or triangle_or_square,
                               'cycle' if (long_six or triangle_or_square) else None),
        )
