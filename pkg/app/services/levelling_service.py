"""
Coloration constructive des graphes sans trou de longueur au moins 5.

Pour une composante de nombre de clique w, avec n = N(w-1) :
  - on calcule les niveaux L_0..L_m depuis le plus petit sommet ;
  - les niveaux pairs utilisent la palette [0, 2n²), les impairs [2n², 4n²) ;
  - L_0 reçoit une couleur, L_1 est coloré récursivement (< n couleurs) ;
  - pour k >= 2, chaque composante c de L_k est traitée après élagage des
    niveaux 0..k-1 : x, y, A et B donnent une coloration auxiliaire de
    L_{k-1} en 2n couleurs, et c est découpée en classes A_i selon la plus
    petite couleur auxiliaire de ses voisins ; chaque A_i est colorée
    récursivement dans sa propre sous-palette de taille n.
"""

from typing import Dict, List, Optional, Tuple, Union
import logging
from app.models.graph import Coloring, Graph, component_of, components
from app.models.reports import ColoringReport, Levelling, LevellingStats, PrunedLevelling
from app.services.hole_service import HoleService
from app.services.invariant_service import InvariantService
from app.utils.bits import bit, iter_bits, lowest
from app.utils.deadline import Deadline
from app.utils.exceptions import (DisconnectedGraphError, InvariantViolationError,
                                  LongHoleDetectedError, SolverTimeoutError, ValidationError)
from config.settings import DEFAULT_LIMITS, Limits

logger = logging.getLogger(__name__)

# Au-delà, palette_bound renvoie un marqueur de saturation
PALETTE_SATURATION_OMEGA = 12


def palette_size(omega: int) -> int:
    """N(1) = 1, N(w) = 4 N(w-1)² (entier exact, sans saturation)."""
    if omega < 1:
        raise ValidationError(f"omega doit être >= 1 (reçu {omega})")
    value = 1
    for _ in range(omega - 1):
        value = 4 * value * value
    return value


def palette_bound(omega: int) -> Union[int, float]:
    """
    Borne N(omega) = 2^(2^omega) / 4 sur le nombre de couleurs utilisées.

    Returns:
        Entier exact, ou ``float('inf')`` au-delà de PALETTE_SATURATION_OMEGA
    """
    if omega < 1:
        raise ValidationError(f"omega doit être >= 1 (reçu {omega})")
    if omega > PALETTE_SATURATION_OMEGA:
        return float('inf')
    value = palette_size(omega)
    if omega <= 5:
        assert value == 2 ** (2 ** omega) // 4
    return value


class _LevellingRun:
    """État d'une coloration : graphe, mode confiance et compteurs."""

    def __init__(self, service: 'LevellingService', g: Graph, trust: bool):
        self.service = service
        self.g = g
        self.trust = trust
        self.stats = LevellingStats()
        self.deadline = Deadline(service.limits.timeout)

    def violation(self, message: str):
        hole = self.service.holes.find_long_hole(self.g)
        if hole is not None:
            logger.warning(f"{message} ; trou long trouvé: {hole}")
            raise LongHoleDetectedError(
                f"{message} : le graphe contient un trou de longueur {len(hole)}",
                hole, under_trust=self.trust)
        logger.error(f"Invariant violé sans trou long: {message}")
        raise InvariantViolationError(message)

    def omega(self, mask: int) -> int:
        w, _ = self.service.invariants.clique_number(self.g, within=mask, deadline=self.deadline)
        return w

    def color_set(self, mask: int, bound: Optional[int] = None) -> Dict[int, int]:
        """Colore G[mask] avec moins de N(omega(mask)) couleurs."""
        self.stats.calls += 1
        if not mask:
            return {}
        w = self.omega(mask)
        if bound is not None and w > bound:
            self.violation(f"Clique de taille {w} dans un ensemble borné par {bound}")
        if w <= 1:
            return {v: 0 for v in iter_bits(mask)}
        colors: Dict[int, int] = {}
        for comp in components(self.g, mask):
            colors.update(self.color_component(comp))
        return colors

    def color_component(self, comp: int) -> Dict[int, int]:
        g = self.g
        w = self.omega(comp)
        if w <= 1:
            return {v: 0 for v in iter_bits(comp)}
        self.stats.levelled_components += 1
        n = palette_size(w - 1)
        span = 2 * n * n
        levelling = self.service.build_levelling(g, lowest(comp), comp)
        colors: Dict[int, int] = {}
        for k, level in enumerate(levelling.levels):
            base = 0 if k % 2 == 0 else span
            if k == 0:
                local = {levelling.root: 0}
            elif k == 1:
                local = self.color_set(level, w - 1)
            else:
                local = {}
                for c in components(g, level):
                    pruned = self.service.prune_for_component(g, levelling, k, c)
                    local.update(self.color_level_component(pruned, w, n))
            used = max(local.values()) + 1
            parity = 'even' if k % 2 == 0 else 'odd'
            self.stats.max_level_span[parity] = max(self.stats.max_level_span[parity], used)
            if used > span:
                self.stats.palette_overruns += 1
                self.violation(f"Niveau {k} : {used} couleurs pour une palette de {span}")
            for v, color in local.items():
                colors[v] = base + color
        return colors

    def color_level_component(self, pruned: PrunedLevelling, w: int, n: int) -> Dict[int, int]:
        g = self.g
        k = pruned.k
        grand = pruned.remaining[k - 2]
        parents = pruned.remaining[k - 1]
        x = lowest(grand)
        exclusive = [z for z in iter_bits(g.masks[x] & parents) if g.masks[z] & grand == bit(x)]
        if not exclusive:
            raise InvariantViolationError(f"Aucun enfant exclusif pour le sommet {x} au niveau {k - 2}")
        y = exclusive[0]
        side_a = g.masks[y] & parents
        side_b = parents & ~side_a & ~bit(y)
        if side_b & ~g.masks[x]:
            self.violation(f"B n'est pas inclus dans N({x}) au niveau {k - 1}")

        scratch: Dict[int, int] = {}
        for v, c in self.color_set(side_a, w - 1).items():
            scratch[v] = c
        for v, c in self.color_set(side_b | bit(y), w - 1).items():
            scratch[v] = n + c

        groups: Dict[int, int] = {}
        for v in iter_bits(pruned.component):
            nbrs = g.masks[v] & parents
            if not nbrs:
                raise InvariantViolationError(f"Le sommet {v} n'a plus de parent après élagage")
            i = min(scratch[u] for u in iter_bits(nbrs))
            groups[i] = groups.get(i, 0) | bit(v)

        result: Dict[int, int] = {}
        for i in sorted(groups):
            for v, c in self.color_set(groups[i], w - 1).items():
                result[v] = i * n + c
        return result


class LevellingService:
    """Service de coloration par niveaux des graphes sans trou long."""

    def __init__(self, limits: Limits = DEFAULT_LIMITS, invariants: InvariantService = None,
                 holes: HoleService = None):
        self.limits = limits
        self.invariants = invariants or InvariantService(limits)
        self.holes = holes or HoleService(limits, self.invariants)

    @staticmethod
    def palette_bound(omega: int) -> Union[int, float]:
        return palette_bound(omega)

    def build_levelling(self, g: Graph, root: int, within: Optional[int] = None) -> Levelling:
        """
        Couches de distance L_0..L_m depuis ``root``.

        Raises:
            DisconnectedGraphError: Le graphe (ou ``within``) n'est pas connexe
        """
        mask = g.full_mask if within is None else within
        if not 0 <= root < g.n or not mask >> root & 1:
            raise ValidationError(f"Racine {root} invalide")
        if component_of(g, root, mask) != mask:
            raise DisconnectedGraphError("Le niveau exige un graphe connexe")
        levels = [bit(root)]
        seen = bit(root)
        while True:
            nxt = 0
            for v in iter_bits(levels[-1]):
                nxt |= g.masks[v]
            nxt &= mask & ~seen
            if not nxt:
                return Levelling(root, levels)
            levels.append(nxt)
            seen |= nxt

    def prune_for_component(self, g: Graph, levelling: Levelling, k: int, component: int) -> PrunedLevelling:
        """
        Supprime un à un (plus petit indice d'abord) les sommets des niveaux
        0..k-1 sans enfant exclusif, jusqu'au point fixe ; les enfants du niveau
        k-1 sont restreints à la composante.
        """
        if k < 2 or k >= len(levelling.levels):
            raise ValidationError(f"Niveau {k} invalide pour l'élagage")
        remaining = list(levelling.levels[:k])
        level_of = {v: j for j in range(k) for v in iter_bits(remaining[j])}
        removed: List[int] = []

        def has_exclusive_child(u: int) -> bool:
            j = level_of[u]
            targets = remaining[j + 1] if j + 1 < k else component
            return any(g.masks[z] & remaining[j] == bit(u) for z in iter_bits(g.masks[u] & targets))

        while True:
            alive = 0
            for level in remaining:
                alive |= level
            victim = next((u for u in iter_bits(alive) if not has_exclusive_child(u)), None)
            if victim is None:
                break
            remaining[level_of[victim]] &= ~bit(victim)
            removed.append(victim)

        for j in range(1, k + 1):
            current = remaining[j] if j < k else component
            for v in iter_bits(current):
                if not g.masks[v] & remaining[j - 1]:
                    raise InvariantViolationError(f"Le sommet {v} a perdu tous ses parents")
        return PrunedLevelling(levelling, k, component, remaining, removed)

    def color_with_stats(self, g: Graph, trust: bool = False) -> Tuple[Coloring, LevellingStats]:
        if not trust:
            hole = self.holes.find_long_hole(g)
            if hole is not None:
                raise LongHoleDetectedError(
                    f"Le graphe contient un trou de longueur {len(hole)}", hole, under_trust=False)
        run = _LevellingRun(self, g, trust)
        raw = run.color_set(g.full_mask)
        coloring = Coloring.compact([raw[v] for v in range(g.n)])
        if not self.invariants.is_proper(g, coloring):
            run.violation("Coloration impropre")
        logger.debug(f"Coloration par niveaux: {coloring.palette_size} couleurs, {run.stats.calls} appels")
        return coloring, run.stats

    def color_long_hole_free(self, g: Graph, trust: bool = False) -> Coloring:
        """
        Colore un graphe sans trou de longueur >= 5 avec au plus N(omega) couleurs.

        Args:
            g: Graphe
            trust: Ne pas vérifier l'absence de trou long au préalable

        Returns:
            Coloration propre (couleurs renumérotées)

        Raises:
            LongHoleDetectedError: Trou long détecté (précondition, ou pendant le calcul en mode confiance)
            InvariantViolationError: Assertion interne violée sans trou long
        """
        coloring, _ = self.color_with_stats(g, trust)
        return coloring

    def coloring_report(self, g: Graph, trust: bool = False, exact: bool = True) -> ColoringReport:
        coloring, stats = self.color_with_stats(g, trust)
        omega, _ = self.invariants.clique_number(g)
        chi = None
        if exact and g.n <= self.limits.vertex_cap:
            try:
                chi, _ = self.invariants.chromatic_number(g)
            except SolverTimeoutError as e:
                logger.warning(f"chi exact indisponible: {e}")
        return ColoringReport(
            colors_used=coloring.colors_used(),
            palette_bound=palette_bound(omega) if omega >= 1 else 0,
            omega=omega,
            chi_exact=chi,
            coloring=coloring,
            stats=stats,
        )
