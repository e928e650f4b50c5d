"""Characteristic-value branches of the fractional Mathieu equation vs q.

Runs the q-sweep batch job directly through the library job runner and
prints the a/b branches.  At q = 0 the a and b branches above the ground
state are degenerate in pairs; increasing q splits them.
"""

from fraclap.config import build_job_config
from fraclap.jobs import run_q_sweep

cfg = build_job_config(
    {
        "mode": "q-sweep",
        "potential": "mathieu(0)",
        "alpha": "1.5",
        "N": "30",
        "q_min": "0",
        "q_max": "10",
        "q_steps": "6",
    }
)
table = run_q_sweep(cfg)

print("fractional Mathieu equation, alpha = 3/2, N = 30")
print(" ".join(f"{c:>10}" for c in table.columns))
for row in table.rows:
    print(" ".join(f"{v:10.5f}" for v in row))
if "warnings" in table.metadata:
    print("warnings:", table.metadata["warnings"])
