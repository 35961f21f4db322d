from datetime import datetime
import json
from flask_sqlalchemy import SQLAlchemy

db = SQLAlchemy()


class SweepRecord(db.Model):
    """Ligne du journal des campagnes : un graphe examiné et son verdict."""
    __tablename__ = 'sweep_records'

    id = db.Column(db.Integer, primary_key=True)
    command = db.Column(db.String(32), nullable=False, index=True)
    canonical_code = db.Column(db.String(128), nullable=True, index=True)
    graph6 = db.Column(db.Text, nullable=False)
    payload = db.Column(db.Text, nullable=False)
    seed = db.Column(db.Integer, nullable=True)
    verdict = db.Column(db.String(32), nullable=True)
    created_at = db.Column(db.DateTime, default=datetime.utcnow)

    def to_dict(self):
        return {
            'id': self.id,
            'command': self.command,
            'canonical_code': self.canonical_code,
            'graph6': self.graph6,
            'payload': json.loads(self.payload),
            'seed': self.seed,
            'verdict': self.verdict,
            'created_at': self.created_at.isoformat() if self.created_at else None
        }
