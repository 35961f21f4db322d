from typing import Any, Dict, Optional
from app.models.graph import Graph
from app.services.graph6_service import Graph6Service
from app.utils.exceptions import ValidationError

OUTPUT_FORMATS = ('json', 'tsv', 'human')


class GraphPayloadValidator:
    """Validateur des graphes reçus par l'API ou la ligne de commande."""

    def __init__(self, max_vertices: int = 64, max_length: int = 64 * 1024):
        """
        Initialise le validateur.

        Args:
            max_vertices: Nombre maximal de sommets accepté
            max_length: Taille maximale du texte reçu
        """
        self.max_vertices = max_vertices
        self.max_length = max_length

    def validate_text(self, text: Optional[str]) -> Graph:
        """
        Valide un graphe texte (graph6 ou liste d'arêtes).

        Raises:
            ValidationError: Texte absent, trop long, illisible ou graphe trop grand
        """
        if text is None or not str(text).strip():
            raise ValidationError("Aucun graphe fourni")
        if len(text) > self.max_length:
            raise ValidationError(f"Texte trop long ({len(text)} caractères, maximum {self.max_length})")
        g = Graph6Service.parse_any(text)
        if g.n > self.max_vertices:
            raise ValidationError(f"Graphe trop grand: {g.n} sommets (maximum {self.max_vertices})")
        return g

    def validate_json(self, data: Any) -> Graph:
        """Valide un corps JSON de la forme {"graph6": "..."} ou {"edges": "..."}."""
        if not isinstance(data, dict):
            raise ValidationError("Corps JSON attendu")
        text = data.get('graph6') or data.get('edges')
        if not isinstance(text, str):
            raise ValidationError("Champ 'graph6' (chaîne) requis")
        return self.validate_text(text)


def validate_counts(values: str) -> Dict[int, int]:
    """
    Analyse une suite « f_1,f_2,... » (entiers positifs ou nuls).

    Returns:
        Dictionnaire n -> f_n
    """
    try:
        counts = [int(v) for v in values.split(',') if v.strip()]
    except ValueError:
        raise ValidationError(f"Suite d'entiers attendue: {values!r}")
    if any(c < 0 for c in counts):
        raise ValidationError("Les effectifs doivent être positifs ou nuls")
    return {i + 1: c for i, c in enumerate(counts)}
