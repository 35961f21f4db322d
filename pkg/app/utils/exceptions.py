class HoleforgeError(Exception):
    """Exception de base du projet."""
    pass

class ValidationError(HoleforgeError):
    """Exception pour les erreurs de validation des entrées."""
    pass

class GraphFormatError(ValidationError):
    """Exception pour une ligne graph6 ou une liste d'arêtes mal formée."""

    def __init__(self, message: str, offset: int = 0):
        super().__init__(f"{message} (octet {offset})")
        self.offset = offset

class DisconnectedGraphError(ValidationError):
    """Exception levée quand une opération exige un graphe connexe."""
    pass

class TriangleFoundError(ValidationError):
    """Exception levée quand un graphe sans triangle est attendu."""
    pass

class CapExceededError(HoleforgeError):
    """Exception pour une instance au-delà des bornes configurées."""
    pass

class SolverTimeoutError(HoleforgeError):
    """Exception pour un solveur exact interrompu par le délai maximal."""
    pass

class InvariantViolationError(HoleforgeError):
    """Exception pour un invariant interne violé (bogue ou hypothèse fausse)."""
    pass

class LongHoleDetectedError(HoleforgeError):
    """Exception levée quand un trou de longueur au moins 5 est détecté."""

    def __init__(self, message: str, witness=None, under_trust: bool = False):
        super().__init__(message)
        self.witness = tuple(witness) if witness is not None else None
        self.under_trust = under_trust

class NoBisimplicialVertexError(HoleforgeError):
    """Exception levée quand l'élimination bisimpliciale reste bloquée."""

    def __init__(self, message: str, stuck_vertices=()):
        super().__init__(message)
        self.stuck_vertices = tuple(stuck_vertices)
