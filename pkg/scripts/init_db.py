#!/usr/bin/env python3
"""
Script pour réinitialiser le journal des campagnes de recherche.
"""

import os
import sys

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from app import create_app
from app.models.sweep_models import db


def init_database():
    """Supprime puis recrée la table sweep_records."""
    print("🗄️ Initialisation du journal des campagnes...")

    os.makedirs('instance', exist_ok=True)

    try:
        app = create_app(os.environ.get('FLASK_ENV', 'development'))
        with app.app_context():
            db.drop_all()
            db.create_all()
            print("✅ Journal créé avec succès")
            print(f"📁 Base: {app.config['SQLALCHEMY_DATABASE_URI']}")

    except Exception as e:
        print(f"❌ Erreur: {e}")
        print("\n💡 Vérifiez DATABASE_URL et les droits d'écriture sur 'instance'")
        return False

    return True


if __name__ == "__main__":
    success = init_database()
    if success:
        print("\n🚀 Campagnes enregistrables avec: python holeforge.py search --record ...")
    else:
        sys.exit(1)
