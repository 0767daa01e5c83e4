"""
Push-forward density profiles and exact volumes
===============================================

Near certain extremes the density of the moment map push-forward has a
closed polynomial form. Gluing the pieces from both ends gives exact
volumes, a positivity test, and (as a byproduct) a continuity diagnostic
at the walls.
"""

from semifree8 import enumerate_case
from semifree8.dh import dh_near_cp2, dh_profile, positivity_check, total_volume

# the ruled-neighborhood density next to a plane with c1 coefficient -1
# and c2 = k2, as a polynomial in the distance from the extreme level
for k2 in (1, 4, 7, 8):
    print("c2 = %d: density %s" % (k2, dh_near_cp2(k2).fmt("x")))
print()

# k2 = 7 stays positive on the whole interval, k2 = 8 does not; that is
# the mechanism bounding b4 by 14 across the (4,4) shape
fam = [f for f in enumerate_case((4, 4)).families if f.key == "4,4/negative"][0]
for n2, split in ((6, None), (6, (3, 5)), (12, (7, 7))):
    data = fam.instantiate(n2, split=split)
    profile = dh_profile(data)
    print("b4 = %d, split %s:" % (2 + n2, split or "balanced"))
    for piece in profile.pieces:
        print("  on (%s, %s): %s" % (piece.lo, piece.hi, piece.poly.fmt("L")))
    for warning in profile.warnings:
        print("  " + warning.line())
    print("  positivity:", "PASS" if positivity_check(profile).ok else "FAIL")
    print("  volume:", total_volume(data))
    print()

# the same machinery on the isolated-minimum family of the (0,4) shape
fam = [f for f in enumerate_case((0, 4)).families if f.key == "0,4/no-surface"][0]
data = fam.instantiate(3)
profile = dh_profile(data)
for piece in profile.pieces:
    print("on (%s, %s): %s" % (piece.lo, piece.hi, piece.poly.fmt("L")))
print("volume:", total_volume(data))
