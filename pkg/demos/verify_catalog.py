"""
Verifying the fixed point data of the known actions
====================================================

Each catalog entry is the fixed point data of a semi-free Hamiltonian
circle action on a closed symplectic 8-manifold with b2 = 1. Running the
full rule chain on each prints every check it has to survive.
"""

from semifree8 import catalog, verification_report, match_fp_class

entries = catalog()

# run every check the package knows about on every entry
for name, data in entries.items():
    report = verification_report(data)
    print("== %s (class %s) ==" % (name, match_fp_class(data)))
    for line in report.lines():
        print("  " + line)
    print("  overall: %s" % ("PASS" if report.ok else "FAIL"))
    print()

# the localization sum is the sharpest single test: a sum of integer
# contributions, one per component, that must cancel exactly
from semifree8 import abbv_terms, abbv_sum

data = entries["x8-six-points"]
print("contributions for x8-six-points:",
      [str(t) for t in abbv_terms(data)], "sum", abbv_sum(data))
