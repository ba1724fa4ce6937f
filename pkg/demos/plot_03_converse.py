"""
When does the converse of fuzzy Lagrange hold?
==============================================

A group satisfies the converse when every divisor of |G| is the fuzzy order
of some fuzzy subgroup.  Over the catalog this happens exactly for the
cyclic groups.
"""

from fuzzylagrange.lab import analyze_group, build_catalog, clt_vs_cflt_comparison, verify_main_theorem
from fuzzylagrange.notation import build_group

for text in ["Z12", "Z2xZ2", "S3", "Q8", "A4"]:
    rep = analyze_group(build_group(text))
    print(f"{text:6s} Im(O) {rep.image_of_O}  missing {rep.missing_divisors}  "
          f"converse {rep.cflt}  classical converse {rep.clt}")

catalog = build_catalog(60)
report = verify_main_theorem(catalog)
print(len(report.rows), "catalog groups; converse holds exactly for the cyclic ones")

comp = clt_vs_cflt_comparison(catalog)
print("classical converse only:", comp.clt_not_cflt[:8], "...")
print("fuzzy converse only:", comp.cflt_not_clt)
