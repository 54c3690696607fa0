"""
The command line
================

The same pipeline is available as ``dbvp``; from a shell:

    dbvp check demos/problems/logistic_like.json
    dbvp solve demos/problems/logistic_like.json --out u.csv
    dbvp verify demos/problems/logistic_like.json u.csv

Exit codes: 0 granted or verified, 1 a hypothesis or verification failed,
2 the solver did not converge, 3 bad input.  This script runs the three
steps in-process.
"""

import tempfile
from pathlib import Path

from dbvp.cli import main

spec = Path(__file__).parent / "problems" / "logistic_like.json"
with tempfile.TemporaryDirectory() as d:
    out = Path(d) / "u.csv"
    print("check  ->", main(["check", str(spec)]))
    print("solve  ->", main(["solve", str(spec), "--out", str(out)]))
    print(out.read_text())
    print("verify ->", main(["verify", str(spec), str(out)]))
