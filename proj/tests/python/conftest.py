"""Make the in-tree package and the CMake-built extension importable.

When the wheel is installed (pip install .), the installed package wins and
none of this is needed.  When running pytest straight from a source checkout,
put python/ (pure-Python package) and build/ (compiled _sparsepd extension)
on sys.path.
"""

import sys
from pathlib import Path

_root = Path(__file__).resolve().parents[2]
for candidate in (_root / "python", _root / "build"):
    if candidate.is_dir() and str(candidate) not in sys.path:
        sys.path.insert(0, str(candidate))
