"""Push-forward densities of the moment map and exact volume bookkeeping.

The density at a regular level c is the integral over the reduced space of
the cube of the reduced symplectic class; it is a piecewise cubic in c.
Two situations pin the density exactly near an extremum:

* above an isolated minimum the reduced space is CP^3 with class x*h,
  giving x^3 (and after crossing a single interior index-2 point the
  blow-up adds -(x-2)^3), where x is the distance above the minimum;
* above a 4-dim extremum whose rank-2 normal bundle has total class
  1 - h + k2*h^2 the reduced space is the projectivized bundle and the
  density is 12x + 6x^2 + (1 - k2)*x^3 on the first two units.

Both formulas are implemented twice: a stored closed form and an
independent route through an exact reduced-space ring. Volumes are
normalized so that the total moment-interval volume equals the integral
of the fourth power of the symplectic class (a factor of 4 per unit of
density, coming from the binomial normalization of the quartic).

Positivity of the density on open regular intervals is decided exactly
with Sturm sequences; a zero at a wall is fine, a zero inside is not.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .localization import FourDimExtremalNormal
from .model import (
    CheckItem,
    ComponentType,
    ConstraintReport,
    dim_pair,
    interior_components,
    max_component,
    min_component,
    reverse_action,
)
from .polynomial import Poly, positive_on_open
from .rings import ring_projectivized

_RULE_POS = "push-forward density is positive on open regular intervals"
_RULE_SEAM = "push-forward density is continuous across interior walls of isolated points"
_RULE_KBND = "density positivity bounds the middle Betti number"


# ----------------------------------------------------------------------
# the two local density formulas, each with an independent oracle
# ----------------------------------------------------------------------

def dh_near_cp2(k2):
    """Density 12x + 6x^2 + (1-k2)x^3 above a 4-dim extremum with total
    normal class 1 - h + k2*h^2; x is the distance from the extremum,
    valid for 0 < x < 2 when no other fixed level intervenes."""
    return Poly([0, 12, 6, 1 - k2])


def dh_from_ring(k2):
    """Same density computed from scratch: integrate the cube of the
    reduced class 2*eta + x*xi over the projectivized-bundle ring."""
    ring = ring_projectivized(k2)
    w = 2 * ring.gen(0) + Poly.x() * ring.gen(1)
    out = (w ** 3).integrate()
    return out if isinstance(out, Poly) else Poly([out])


def dh_isolated_min():
    """Density x^3 above an isolated minimum, x the distance from it."""
    return Poly([0, 0, 0, 1])


def dh_after_lam1_point():
    """Density on (2, 4) above an isolated minimum once the single
    index-2 point at distance 2 is crossed: x^3 - (x-2)^3."""
    x = Poly.x()
    return x ** 3 - (x - 2) ** 3


def half_volume_cp2(k2):
    """Volume of the half-interval bounded by a 4-dim extremum with
    k' = -1 and c2 = k2: four times the density integral, equals
    176 - 16*k2."""
    return 4 * dh_near_cp2(k2).integrate(0, 2)


def half_volume_isolated_pair():
    """Volume of the half-interval containing an isolated extremum and a
    single adjacent index-2 point: 240."""
    return 4 * (dh_isolated_min().integrate(0, 2) + dh_after_lam1_point().integrate(2, 4))


# ----------------------------------------------------------------------
# density profiles assembled from fixed point data
# ----------------------------------------------------------------------

@dataclass(frozen=True)
class DHPiece:
    lo: Fraction
    hi: Fraction
    poly: Poly        # in the moment level variable
    label: str


@dataclass(frozen=True)
class DHProfile:
    pieces: tuple
    warnings: tuple   # WARN-level CheckItems about seams

    def known_intervals(self):
        return tuple((p.lo, p.hi) for p in self.pieces)


def _min_side_pieces(data):
    lo = min_component(data)
    levels = sorted({c.level for c in data})
    out = []
    if lo is None or len(levels) < 2:
        return out
    base = Fraction(lo.level)
    nxt = Fraction(levels[1])
    if lo.type is ComponentType.POINT:
        out.append(DHPiece(base, nxt,
                           dh_isolated_min().compose_linear(1, -base),
                           "cubic above the isolated minimum"))
        wall = [c for c in data if c.level == levels[1]]
        if (len(wall) == 1 and wall[0].type is ComponentType.POINT
                and wall[0].lam == 1 and nxt - base == 2 and len(levels) >= 3):
            out.append(DHPiece(nxt, Fraction(levels[2]),
                               dh_after_lam1_point().compose_linear(1, -base),
                               "blow-up past the single index-2 point"))
    elif (lo.type is ComponentType.CP2
          and isinstance(lo.normal, FourDimExtremalNormal)
          and lo.normal.c1 == -1):
        out.append(DHPiece(base, nxt,
                           dh_near_cp2(lo.normal.c2).compose_linear(1, -base),
                           "ruled density above the extremal plane"))
    return out


def _mirror(piece):
    return DHPiece(-piece.hi, -piece.lo, piece.poly.compose_linear(-1, 0),
                   piece.label + " (from above)")


def _resolve(pieces):
    pieces = sorted(pieces, key=lambda p: (p.lo, p.hi))
    out = []
    warns = []
    for pc in pieces:
        if not out or pc.lo >= out[-1].hi:
            out.append(pc)
            continue
        prev = out[-1]
        if pc.poly == prev.poly:
            out[-1] = DHPiece(prev.lo, max(prev.hi, pc.hi), prev.poly, prev.label)
            continue
        seam = (max(prev.lo, pc.lo) + min(prev.hi, pc.hi)) / 2
        warns.append(CheckItem(
            "dh-seam", _RULE_SEAM, "WARN",
            "the two extremal formulas disagree on a shared wall-free interval; "
            "truncating both at level %s" % seam))
        out[-1] = DHPiece(prev.lo, seam, prev.poly, prev.label)
        out.append(DHPiece(seam, pc.hi, pc.poly, pc.label))
    for a, b in zip(out, out[1:]):
        if a.hi == b.lo:
            va, vb = a.poly(a.hi), b.poly(b.lo)
            if va != vb:
                warns.append(CheckItem(
                    "dh-seam", _RULE_SEAM, "WARN",
                    "density value jumps at level %s: %s from below vs %s from above"
                    % (a.hi, va, vb)))
    return tuple(out), tuple(warns)


def dh_profile(data):
    """All density pieces the two local formulas pin down, with seam
    diagnostics. Configurations the formulas do not cover simply get
    fewer (possibly zero) pieces; nothing is extrapolated."""
    below = _min_side_pieces(data)
    above = [_mirror(p) for p in _min_side_pieces(reverse_action(data))]
    pieces, warns = _resolve(list(below) + above)
    return DHProfile(pieces, warns)


def positivity_check(profile):
    """PASS iff every known density piece is positive on its open interval."""
    rep = ConstraintReport()
    if not profile.pieces:
        rep.append(CheckItem("dh-positivity", _RULE_POS, "INFO",
                             "no density piece is pinned for this configuration"))
        return rep
    for pc in profile.pieces:
        ok, detail = positive_on_open(pc.poly, pc.lo, pc.hi)
        rep.append(CheckItem("dh-positivity", _RULE_POS,
                             "PASS" if ok else "FAIL",
                             "%s on (%s, %s): %s" % (pc.poly.fmt("L"), pc.lo, pc.hi, detail)))
    for w in profile.warnings:
        rep.append(w)
    return rep


# ----------------------------------------------------------------------
# total volumes, only for the two patterns computable by halves
# ----------------------------------------------------------------------

def total_volume(data):
    """Integral of the fourth power of the symplectic class, when the
    configuration is one of the two patterns whose halves are both
    pinned; otherwise None (not computable by halves)."""
    try:
        (d1, d2), rev = dim_pair(data)
    except ValueError:
        return None
    if rev:
        data = reverse_action(data)
    lo, hi = min_component(data), max_component(data)
    inner = interior_components(data)
    if (d1, d2) == (4, 4):
        if not all(c.type is ComponentType.POINT and c.lam == 2 for c in inner):
            return None
        for c in (lo, hi):
            if not (isinstance(c.normal, FourDimExtremalNormal) and c.normal.c1 == -1):
                return None
        return half_volume_cp2(lo.normal.c2) + half_volume_cp2(hi.normal.c2)
    if (d1, d2) == (0, 4):
        lam1 = [c for c in inner if c.lam == 1]
        lam2 = [c for c in inner if c.lam == 2]
        if len(lam1) + len(lam2) != len(inner) or len(lam1) != 1:
            return None
        if any(c.type is not ComponentType.POINT for c in lam1 + lam2):
            return None
        if not (isinstance(hi.normal, FourDimExtremalNormal) and hi.normal.c1 == -1):
            return None
        return half_volume_isolated_pair() + half_volume_cp2(hi.normal.c2)
    return None


def b4_bound_check(b4, shape, split=None):
    """Does density positivity permit this middle Betti number?

    For the (0,4) pattern the plane-side coefficient equals b4 and must
    stay <= 7; for (4,4) the two coefficients split b4 and each must stay
    <= 7, so b4 <= 14. Other shapes carry no density constraint.
    """
    shape = tuple(sorted(int(v) for v in shape))
    if shape == (0, 4):
        ok = b4 <= 7
        return CheckItem("dh-k-bound", _RULE_KBND, "PASS" if ok else "FAIL",
                         "plane coefficient k2 = b4 = %d %s 7" % (b4, "<=" if ok else ">"))
    if shape == (4, 4):
        if split is not None:
            kmin, kmax = split
            if kmin + kmax != b4:
                return CheckItem("dh-k-bound", _RULE_KBND, "FAIL",
                                 "split %s does not sum to b4 = %d" % ((kmin, kmax), b4))
            ok = kmin <= 7 and kmax <= 7
            return CheckItem("dh-k-bound", _RULE_KBND, "PASS" if ok else "FAIL",
                             "split %s with both parts %s 7" % ((kmin, kmax), "<=" if ok else "not <="))
        ok = b4 <= 14
        return CheckItem("dh-k-bound", _RULE_KBND, "PASS" if ok else "FAIL",
                         "a split of %d into two parts <= 7 %s" % (b4, "exists" if ok else "cannot exist"))
    return CheckItem("dh-k-bound", _RULE_KBND, "PASS",
                     "no density constraint applies to shape %s" % (shape,))
