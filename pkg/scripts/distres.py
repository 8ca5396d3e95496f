"""
distres CLI wrapper

Usage:
  python scripts/distres.py catalog list
  python scripts/distres.py residual --in graph.g6 --root 0
"""
import sys
from pathlib import Path

# Add parent directory to path
sys.path.insert(0, str(Path(__file__).parent.parent))

from app.cli import main


if __name__ == "__main__":
    sys.exit(main())
