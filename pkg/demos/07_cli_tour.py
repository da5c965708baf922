"""Driving the command line interface programmatically.

Every library capability is also exposed through the `ternring` console
script (equivalently `python -m ternring.cli`).  Output is deterministic
for a fixed seed, `--json` switches to machine-readable payloads, and
exit codes distinguish success (0), domain errors (1), and usage errors
(2).  This demo shells through the same entry point the script uses.
"""

from ternring.cli import main

DEMOS = [
    ["factor", "--n", "10", "--sign", "neg"],
    ["code", "build", "--n", "3", "--sign", "neg",
     "--f1", "x+1", "--f2", "x^2+2x+1", "--f3", "x+1"],
    ["code", "dual", "--n", "10", "--sign", "neg",
     "--f1", "x^2+1", "--f2", "x^4+x^3+2x+1", "--f3", "x^4+2x^3+x+1"],
    ["constacyclic", "classify", "--lambda", "1+v^2"],
    ["skew", "count", "--n", "3"],
    ["skew", "divisors", "--s", "2", "--lambda", "1"],
    ["quantum", "params", "--n", "6", "--sign", "pos",
     "--f1", "x^2+2", "--f2", "x^2+2", "--f3", "2x^2+1"],
    ["quantum", "verify-paper"],
    ["--json", "skew", "gcld", "--s", "2", "--lambda", "1", "x+1", "x^2+2"],
    ["selftest", "paper"],
]

for argv in DEMOS:
    print(f"\n$ ternring {' '.join(argv)}")
    status = main(list(argv))
    print(f"[exit {status}]")
