import time
from typing import Optional
from app.utils.exceptions import SolverTimeoutError


class Deadline:
    """
    Délai coopératif pour les recherches exponentielles.

    Les solveurs appellent ``tick()`` à chaque nœud de recherche ; l'horloge
    n'est consultée qu'une fois toutes les ``stride`` invocations.
    """

    def __init__(self, seconds: Optional[float], stride: int = 256):
        self.seconds = seconds
        self.stride = stride
        self._expires = None if seconds is None else time.monotonic() + seconds
        self._count = 0

    @classmethod
    def unlimited(cls) -> 'Deadline':
        return cls(None)

    def tick(self):
        """Lève SolverTimeoutError si le délai est dépassé."""
        if self._expires is None:
            return
        self._count += 1
        if self._count % self.stride == 0 and time.monotonic() > self._expires:
            raise SolverTimeoutError(f"Délai de {self.seconds:g} s dépassé")

    def check(self):
        """Vérifie immédiatement le délai."""
        if self._expires is not None and time.monotonic() > self._expires:
            raise SolverTimeoutError(f"Délai de {self.seconds:g} s dépassé")
