"""Machine-readable sweep tables, as the library and the CLI produce them.

The same rows are available from Python (`run_sweep`) and from the
command line (`pumpslab sweep ...`); CSV and JSON-lines encodings carry
identical 12-significant-digit values and are byte-stable across runs.
"""
import sys

from pumpslab import SweepRequest, compare_oracle, run_sweep
from pumpslab.presets import reference_scenario
from pumpslab.sweep import ORACLE_COLUMNS, SWEEP_COLUMNS, write_rows

request = SweepRequest(
    scenario=reference_scenario(),
    band=(0.35, 0.65),
    samples=5,
    kinds=("pdc", "puc"),
)

rows = run_sweep(request)
print("# sweep rows (CSV)")
write_rows(rows, SWEEP_COLUMNS, sys.stdout, "csv")

print()
print("# the same rows as JSON lines")
write_rows(rows[:2], SWEEP_COLUMNS, sys.stdout, "jsonl")

print()
print("# oracle comparison rows (closed forms vs brute force)")
oracle_req = SweepRequest(
    scenario=reference_scenario(g=1e-5, l=3000.0),
    band=(0.45, 0.55),
    samples=2,
)
oracle_rows, breached = compare_oracle(oracle_req)
write_rows(oracle_rows, ORACLE_COLUMNS, sys.stdout, "csv")
print()
print(f"# any tolerance breach: {breached}")
print()
print("# equivalent command lines:")
print("#   pumpslab sweep --theta-d-deg 10 --mu2 1.51 "
      "--band 0.35 0.65 --samples 5 --kind both")
print("#   pumpslab compare-oracle --theta-d-deg 10 --mu2 1.51 "
      "--g 1e-5 --l 3000 --band 0.45 0.55 --samples 2")
