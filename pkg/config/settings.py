import os
from dataclasses import dataclass, replace
from typing import Optional
from dotenv import load_dotenv

load_dotenv()


def _env_int(name: str, default: int) -> int:
    return int(os.environ.get(name, default))


def _env_timeout(name: str, default: float) -> Optional[float]:
    value = float(os.environ.get(name, default))
    return value if value > 0 else None


class Config:
    """Configuration de base pour l'application."""
    SECRET_KEY = os.environ.get('SECRET_KEY') or 'dev-secret-key-change-in-production'

    # Base de données (journal des campagnes de recherche)
    SQLALCHEMY_DATABASE_URI = os.environ.get('DATABASE_URL') or 'sqlite:///instance/holeforge.db'
    SQLALCHEMY_TRACK_MODIFICATIONS = False

    # Limites des solveurs exacts
    VERTEX_CAP = _env_int('HOLEFORGE_VCAP', 64)
    TIMEOUT = _env_timeout('HOLEFORGE_TIMEOUT', 60.0)
    ENUMERATION_CAP = _env_int('HOLEFORGE_ENUM_CAP', 9)
    NICE_CAP = _env_int('HOLEFORGE_NICE_CAP', 11)
    SLACK_CAP = _env_int('HOLEFORGE_SLACK_CAP', 14)
    PERFECT_CAP = _env_int('HOLEFORGE_PERFECT_CAP', 40)
    CANONICAL_CAP = _env_int('HOLEFORGE_CANON_CAP', 16)
    LINE_COMPLETE_CAP = _env_int('HOLEFORGE_LINE_CAP', 7)
    CYCLE_CAP = _env_int('HOLEFORGE_CYCLE_CAP', 1_000_000)

    # Reproductibilité
    SEED = _env_int('HOLEFORGE_SEED', 0)

    @staticmethod
    def init_app(app):
        """Initialise l'application avec la configuration."""
        os.makedirs('instance', exist_ok=True)


class DevelopmentConfig(Config):
    """Configuration pour le développement."""
    DEBUG = True
    FLASK_ENV = 'development'


class ProductionConfig(Config):
    """Configuration pour la production."""
    DEBUG = False
    FLASK_ENV = 'production'


class TestingConfig(Config):
    """Configuration pour les tests."""
    TESTING = True
    SQLALCHEMY_DATABASE_URI = 'sqlite:///:memory:'
    TIMEOUT = 30.0
    SEED = 0


config = {
    'development': DevelopmentConfig,
    'production': ProductionConfig,
    'testing': TestingConfig,
    'default': DevelopmentConfig
}


@dataclass(frozen=True)
class Limits:
    """
    Bornes de calcul injectées dans les services.

    Les calculs de ce projet sont exponentiels : chaque borne limite la
    taille des instances acceptées par une famille d'opérations.
    """
    vertex_cap: int = 64
    timeout: Optional[float] = 60.0
    enumeration_cap: int = 9
    nice_cap: int = 11
    slack_cap: int = 14
    perfect_cap: int = 40
    canonical_cap: int = 16
    line_complete_cap: int = 7
    cycle_cap: int = 1_000_000
    seed: int = 0

    def __post_init__(self):
        for name in ('vertex_cap', 'enumeration_cap', 'nice_cap', 'slack_cap', 'perfect_cap',
                     'canonical_cap', 'line_complete_cap', 'cycle_cap'):
            if getattr(self, name) <= 0:
                raise ValueError(f"La borne {name} doit être strictement positive")
        if self.timeout is not None and self.timeout <= 0:
            raise ValueError("Le délai maximal doit être strictement positif")

    @classmethod
    def from_config(cls, cfg=Config) -> 'Limits':
        """
        Construit les bornes à partir d'une classe (ou d'un dict) de configuration.

        Args:
            cfg: Classe de configuration ou mapping Flask ``app.config``

        Returns:
            Instance Limits
        """
        def read(key):
            return cfg[key] if isinstance(cfg, dict) else getattr(cfg, key)

        return cls(
            vertex_cap=read('VERTEX_CAP'),
            timeout=read('TIMEOUT'),
            enumeration_cap=read('ENUMERATION_CAP'),
            nice_cap=read('NICE_CAP'),
            slack_cap=read('SLACK_CAP'),
            perfect_cap=read('PERFECT_CAP'),
            canonical_cap=read('CANONICAL_CAP'),
            line_complete_cap=read('LINE_COMPLETE_CAP'),
            cycle_cap=read('CYCLE_CAP'),
            seed=read('SEED'),
        )

    def replace(self, **changes) -> 'Limits':
        """Retourne une copie avec certaines bornes modifiées."""
        return replace(self, **changes)


DEFAULT_LIMITS = Limits()
