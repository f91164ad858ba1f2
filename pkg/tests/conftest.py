import subprocess
import sys
from pathlib import Path

import pytest

DATA = Path(__file__).parent / "data"


def run_cli(*args, cwd=None):
    """Run the command line in a fresh interpreter; returns (exit code, stdout, stderr)."""
    proc = subprocess.run([sys.executable, "-m", "oddcolor.cli", *map(str, args)],
                          capture_output=True, cwd=cwd)
    return proc.returncode, proc.stdout, proc.stderr


@pytest.fixture
def data():
    return DATA
