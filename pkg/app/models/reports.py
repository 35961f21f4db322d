"""
Rapports produits par les services (sérialisables via ``to_dict``).
"""

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple
from app.models.graph import Coloring, VertexSet
from app.utils.bits import popcount, to_list

Cycle = Tuple[int, ...]


def _coloring_dict(coloring: Optional[Coloring]) -> Optional[Dict[str, Any]]:
    if coloring is None:
        return None
    return {'palette_size': coloring.palette_size, 'colors': list(coloring.colors)}


@dataclass
class InvariantReport:
    n: int
    m: int
    omega: int
    chi: Optional[int]
    alpha: int
    theta: Optional[int]
    clique: VertexSet = ()
    stable_set: VertexSet = ()
    coloring: Optional[Coloring] = None
    chi_lower: int = 0
    chi_upper: int = 0
    timed_out: bool = False

    def to_dict(self) -> Dict[str, Any]:
        return {
            'n': self.n,
            'm': self.m,
            'omega': self.omega,
            'chi': self.chi,
            'alpha': self.alpha,
            'theta': self.theta,
            'clique': list(self.clique),
            'stable_set': list(self.stable_set),
            'coloring': _coloring_dict(self.coloring),
            'chi_lower': self.chi_lower,
            'chi_upper': self.chi_upper,
            'timed_out': self.timed_out,
        }


@dataclass
class HoleReport:
    """Cycles induits trouvés, chacun sous forme canonique."""
    cycles: List[Cycle] = field(default_factory=list)
    truncated: bool = False

    @property
    def lengths(self) -> List[int]:
        return [len(c) for c in self.cycles]

    def to_dict(self) -> Dict[str, Any]:
        return {
            'cycles': [list(c) for c in self.cycles],
            'lengths': self.lengths,
            'truncated': self.truncated,
        }


@dataclass
class Flag:
    """Appartenance à une classe, avec un témoin éventuel de non-appartenance."""
    value: bool
    witness: Optional[Cycle] = None
    kind: Optional[str] = None

    def __bool__(self) -> bool:
        return self.value

    def to_dict(self) -> Dict[str, Any]:
        return {
            'value': self.value,
            'witness': list(self.witness) if self.witness is not None else None,
            'kind': self.kind,
        }


@dataclass
class ChordalityResult:
    chordal: bool
    elimination_order: Optional[List[int]] = None
    witness: Optional[Cycle] = None

    def __bool__(self) -> bool:
        return self.chordal


@dataclass
class PerfectnessResult:
    perfect: bool
    witness: Optional[Cycle] = None
    kind: Optional[str] = None  # 'odd_hole' ou 'odd_antihole'

    def __bool__(self) -> bool:
        return self.perfect


@dataclass
class ClassFlags:
    chordal: Flag
    chordal_bipartite: Flag
    long_hole_free: Flag
    weakly_chordal: Flag
    same_parity: Flag
    parity: str
    even_hole_free: Flag
    odd_hole_free: Flag
    perfect: Flag
    claw_free: Flag
    holes_at_most_five: Flag
    pentagon_only: Flag

    def to_dict(self) -> Dict[str, Any]:
        out = {}
        for name in ('chordal', 'chordal_bipartite', 'long_hole_free', 'weakly_chordal',
                     'same_parity', 'even_hole_free', 'odd_hole_free', 'perfect',
                     'claw_free', 'holes_at_most_five', 'pentagon_only'):
            out[name] = getattr(self, name).to_dict()
        out['parity'] = self.parity
        return out


@dataclass
class Levelling:
    root: int
    levels: List[int]  # bitsets L_0..L_m

    def level_sets(self) -> List[VertexSet]:
        return [tuple(to_list(level)) for level in self.levels]

    def sizes(self) -> List[int]:
        return [popcount(level) for level in self.levels]


@dataclass
class PrunedLevelling:
    """Niveaux 0..k-1 restants après élagage, plus la composante choisie de L_k."""
    levelling: Levelling
    k: int
    component: int
    remaining: List[int]
    removed: List[int] = field(default_factory=list)


@dataclass
class LevellingStats:
    """Compteurs d'instrumentation de la coloration par niveaux."""
    calls: int = 0
    levelled_components: int = 0
    max_level_span: Dict[str, int] = field(default_factory=lambda: {'even': 0, 'odd': 0})
    palette_overruns: int = 0

    def to_dict(self) -> Dict[str, Any]:
        return {
            'calls': self.calls,
            'levelled_components': self.levelled_components,
            'max_level_span': {k: str(v) for k, v in self.max_level_span.items()},
            'palette_overruns': self.palette_overruns,
        }


@dataclass
class ColoringReport:
    colors_used: int
    palette_bound: Any
    omega: int
    chi_exact: Optional[int]
    coloring: Coloring
    stats: Optional[LevellingStats] = None

    def to_dict(self) -> Dict[str, Any]:
        bound = self.palette_bound
        return {
            'colors_used': self.colors_used,
            'palette_bound': bound if isinstance(bound, int) else str(bound),
            'omega': self.omega,
            'chi_exact': self.chi_exact,
            'coloring': _coloring_dict(self.coloring),
            'stats': self.stats.to_dict() if self.stats else None,
        }


@dataclass
class PerfectPartition:
    classes: List[VertexSet]

    def __len__(self) -> int:
        return len(self.classes)

    def to_dict(self) -> Dict[str, Any]:
        return {'classes': [list(c) for c in self.classes]}


@dataclass
class NiceReport:
    is_nice: bool
    witness: Optional[VertexSet] = None
    witness_chi: Optional[int] = None
    witness_omega: Optional[int] = None
    subgraphs_checked: int = 0
    reason: str = ''

    def to_dict(self) -> Dict[str, Any]:
        return {
            'is_nice': self.is_nice,
            'witness': list(self.witness) if self.witness is not None else None,
            'witness_chi': self.witness_chi,
            'witness_omega': self.witness_omega,
            'subgraphs_checked': self.subgraphs_checked,
            'reason': self.reason,
        }


@dataclass
class LineCompleteReport:
    n: int
    chi: int
    omega: int
    expected_chi: int
    expected_omega: int

    @property
    def matches(self) -> bool:
        return self.chi == self.expected_chi and self.omega == self.expected_omega

    def to_dict(self) -> Dict[str, Any]:
        return {
            'n': self.n,
            'chi': self.chi,
            'omega': self.omega,
            'expected_chi': self.expected_chi,
            'expected_omega': self.expected_omega,
            'matches': self.matches,
        }


@dataclass
class SlackReport:
    slack: int
    witness: VertexSet = ()
    alpha: int = 0
    omega: int = 0

    def to_dict(self) -> Dict[str, Any]:
        return {'slack': self.slack, 'witness': list(self.witness),
                'alpha': self.alpha, 'omega': self.omega}


@dataclass
class OddHolePacking:
    count: int
    holes: List[Cycle] = field(default_factory=list)

    def to_dict(self) -> Dict[str, Any]:
        return {'count': self.count, 'holes': [list(h) for h in self.holes]}


@dataclass
class AntichainReport:
    is_antichain: bool
    offending_pair: Optional[Tuple[int, int]] = None

    def to_dict(self) -> Dict[str, Any]:
        return {
            'is_antichain': self.is_antichain,
            'offending_pair': list(self.offending_pair) if self.offending_pair else None,
        }


@dataclass
class ForbiddenSequenceRealization:
    requested: Dict[int, int]
    selected: Dict[int, List[Any]]
    feasible: Dict[int, bool]

    def forbidden(self) -> List[Any]:
        return [g for n in sorted(self.selected) for g in self.selected[n]]

    def to_dict(self, encode=None) -> Dict[str, Any]:
        encode = encode or (lambda g: repr(g))
        return {
            'requested': {str(n): c for n, c in sorted(self.requested.items())},
            'selected': {str(n): [encode(g) for g in gs] for n, gs in sorted(self.selected.items())},
            'feasible': {str(n): ok for n, ok in sorted(self.feasible.items())},
        }


@dataclass
class EHReport:
    n: int
    alpha: int
    omega: int
    exponent: float

    def to_dict(self) -> Dict[str, Any]:
        return {'n': self.n, 'alpha': self.alpha, 'omega': self.omega,
                'exponent': round(self.exponent, 6)}


@dataclass
class BipartitionReport:
    applicable: bool
    holds: Optional[bool]
    side_a: VertexSet = ()
    side_b: VertexSet = ()
    maximum_cliques: int = 0

    def to_dict(self) -> Dict[str, Any]:
        return {
            'applicable': self.applicable,
            'holds': self.holds,
            'side_a': list(self.side_a),
            'side_b': list(self.side_b),
            'maximum_cliques': self.maximum_cliques,
        }


@dataclass
class ChiOmegaReport:
    omega: int
    chi: int
    omega_squared: int

    @property
    def holds(self) -> bool:
        return self.chi <= self.omega_squared

    def to_dict(self) -> Dict[str, Any]:
        return {'omega': self.omega, 'chi': self.chi,
                'omega_squared': self.omega_squared, 'holds': self.holds}


@dataclass
class FnSearchReport:
    omega: int
    best_chi: int = 0
    witness: Optional[str] = None
    source: Optional[str] = None
    examined: int = 0
    unknown: int = 0

    def to_dict(self) -> Dict[str, Any]:
        return {
            'omega': self.omega,
            'best_chi': self.best_chi,
            'witness': self.witness,
            'source': self.source,
            'examined': self.examined,
            'unknown': self.unknown,
        }


@dataclass
class PlanarSweepReport:
    checked: int = 0
    skipped_nonplanar: int = 0
    not_nice: List[str] = field(default_factory=list)
    chi_p_above_two: List[str] = field(default_factory=list)

    def to_dict(self) -> Dict[str, Any]:
        return {
            'checked': self.checked,
            'skipped_nonplanar': self.skipped_nonplanar,
            'not_nice': self.not_nice,
            'chi_p_above_two': self.chi_p_above_two,
        }
