#!/usr/bin/env python3
"""
Point d'entrée de la ligne de commande holeforge.
"""

import sys
from app.cli import main

if __name__ == '__main__':
    sys.exit(main())
