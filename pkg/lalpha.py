# lalpha.py
"""
Command-line entry point.

    python lalpha.py construct --family pineapple --p 5 --q 3 --out pine.el
    python lalpha.py spectrum --graph pine.el --alpha 0.3
    python lalpha.py sweep --graph k5 --steps 101 --out k5.csv
    python lalpha.py charpoly --graph p3 --alpha 0
    python lalpha.py verify --suite default
"""

import sys

from src.cli.commands import main


if __name__ == "__main__":
    sys.exit(main())
