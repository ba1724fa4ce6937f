"""
Is the image of the fuzzy order map a sublattice?
=================================================

For each catalog group we ask whether Im(O) is closed under gcd and lcm.
This is evidence gathering only.
"""

from fuzzylagrange.lab import build_catalog, open_problem_study
from fuzzylagrange.reports import format_table

rows = [r.to_json() for r in open_problem_study(build_catalog(24))]
print(format_table([r for r in rows if not r["indicator_injective"]][:12]))

closed = sum(r["gcd_closed"] and r["lcm_closed"] for r in rows)
print(f"{closed} of {len(rows)} groups have Im(O) closed under gcd and lcm")
