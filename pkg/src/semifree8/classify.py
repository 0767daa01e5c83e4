"""The case analysis: which fixed point data can occur, and on which Fanos.

Everything here is driven by a small set of named rules. Structural rules
(Betti budgets, localization sum, signature) live in the other modules;
this one adds the sphere-area rules, the Fano-index rules, and two
exclusion rules for interior components, then runs the per-shape
enumeration: for each admissible pair of extremal dimensions, exhaustively
sweep the parameter boxes, apply the rules, and coalesce the survivors
into parameterized families. The sweeps pre-filter candidates with the
same integer closed forms the rule objects use and every surviving family
is re-certified on instantiated data through the full rule chain.

The final consumers are at the bottom: the table of Fano families with
large symmetry potential, the volume filter that picks out the realizable
ones, the catalog of known actions, and the fixed-point-data matcher.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field
from itertools import product

from .dh import b4_bound_check, dh_profile, positivity_check, total_volume
from .localization import (
    FourDimExtremalNormal,
    abbv_sum,
    abbv_terms,
)
from .model import (
    CheckItem,
    ComponentType,
    ConstraintReport,
    FixedPointData,
    area_realizable,
    betti_vector,
    cp2_extremal,
    cp3_extremal,
    dim_pair,
    fourdim_interior,
    fp_equivalent,
    interior_components,
    kirwan_betti,
    max_component,
    min_component,
    omega_coefficients,
    point_component,
    reverse_action,
    signature_check,
    surface_component,
    validate,
)


class ClassifyError(ValueError):
    """Raised for inputs outside the scope of the case analysis."""


# rule statements, shared by the check items below
R_ABBV = "localization contributions over the fixed set sum to zero"
R_A1 = ("with a four-dimensional maximum, an empty gap above level 0 and a "
        "Morse-index-4 point force a sphere of area 2 in the maximum")
R_A2 = ("with a four-dimensional maximum, an empty gap below level 0 and a "
        "Morse-index-4 point force a sphere of area |min level| in the minimum")
R_B = ("if every interior component is a Morse-index-4 point, the minimum "
       "carries a sphere of area equal to the moment interval length")
R_C = ("with no interior components and a maximum of dimension at most four, "
       "both extremes carry spheres of area equal to the moment interval length")
R_D = ("a Morse-index-2 surface with nothing below it but an isolated minimum "
       "satisfies 3*a1 = 2 + a1 + a2 + a3 in its normal degrees")
R_I1 = ("isolated extremes with a unique interior four-dimensional component "
        "force Fano index at least 4")
R_I2 = ("a lone Morse-index-2 surface between an isolated minimum and level 0 "
        "forces an odd Fano index")
R_I3 = ("a lone Morse-index-2 point between an isolated minimum and level 0 "
        "caps the Fano index at 2")
R_CONS = "the Fano index computed at either extremum is the same"
R_T31 = ("isolated points with two negative weights require an extremal "
         "component of dimension four")
R_HALVES = ("between isolated extremes at depth four, each normal line bundle "
            "of an interior four-dimensional component is half its tangent class")
R_B2 = "degree-2 classes localize to the fixed components"
R_B6 = "degree-6 classes localize to the fixed components"
R_SIG = "signature equals the self-intersection of the fixed set"
R_MONO = "the symplectic class restricts positively to components"
R_IDX_RANGE = "the case analysis only realizes Fano indices 2 through 5"
R_VOL = "the moment-interval volume must equal the integral of c1^4"
R_GENUS = "degree and genus are linked: c1^4 = 32*(genus - 1) for index-2 families"
R_AUTOS = "a circle action generates a positive-dimensional symmetry group"
R_TABLE = "the classification needs the full table of index >= 2 families"


# ----------------------------------------------------------------------
# Fano index from the extremes
# ----------------------------------------------------------------------

def index_candidates(data):
    """(source, value) pairs for the Fano index read off the extremes."""
    out = []
    lo, hi = min_component(data), max_component(data)
    for comp, label in ((lo, "minimum"), (hi, "maximum")):
        if comp is None or comp.type is ComponentType.P1XP1:
            continue
        if comp.complex_dim >= 1:
            out.append((label, abs(omega_coefficients(comp)[0])))
    if lo is not None and hi is not None and lo.complex_dim == hi.complex_dim == 0:
        four = [c for c in interior_components(data) if c.complex_dim == 2]
        if len(four) == 1:
            out.append(("interior four-dimensional component", 4))
    return out


def index_from_extremal(data):
    """The Fano index of the ambient manifold, or an error when no rule
    pins it (or two extremes disagree, which no realizable data does)."""
    cands = index_candidates(data)
    if not cands:
        raise ClassifyError("no Fano-index rule applies to this configuration")
    values = {v for _, v in cands}
    if len(values) > 1:
        raise ClassifyError("extremes disagree about the Fano index: %s" % (cands,))
    return values.pop()


# ----------------------------------------------------------------------
# sphere-area rules
# ----------------------------------------------------------------------

def _area_item(check_id, rule, comp, area, where):
    ok = area_realizable(comp, area)
    coeffs = omega_coefficients(comp)
    if coeffs is None:
        detail = "no sphere of positive area maps into an isolated %s" % where
    else:
        detail = "area %d vs symplectic restriction %s on the %s" % (area, coeffs, where)
    return CheckItem(check_id, rule, "PASS" if ok else "FAIL", detail)


def sphere_constraints(data):
    """All sphere-area rules whose hypotheses the data satisfies.

    Rules are stated for the orientation with the smaller extreme at the
    bottom, so the action is reversed first when needed.
    """
    rep = ConstraintReport()
    try:
        (_, _), rev = dim_pair(data)
    except ValueError:
        return rep
    if rev:
        data = reverse_action(data)
    lo, hi = min_component(data), max_component(data)
    d1, d2 = 2 * lo.complex_dim, 2 * hi.complex_dim
    inner = interior_components(data)
    lam2 = [c for c in inner if c.type is ComponentType.POINT and c.lam == 2]

    def gap_empty(a, b):
        return not any(a < c.level < b for c in data)

    fired = False
    if d2 == 4 and lam2 and gap_empty(0, hi.level):
        fired = True
        rep.append(_area_item("sphere-area-max", R_A1, hi, 2, "maximum"))
    if d2 == 4 and lam2 and gap_empty(lo.level, 0):
        fired = True
        rep.append(_area_item("sphere-area-min", R_A2, lo, -lo.level, "minimum"))
    if d2 == 4 and inner and all(c.type is ComponentType.POINT and c.lam == 2 for c in inner):
        fired = True
        rep.append(_area_item("sphere-span-min", R_B, lo, hi.level - lo.level, "minimum"))
    if d2 <= 4 and not inner:
        fired = True
        span = hi.level - lo.level
        rep.append(_area_item("sphere-span-extremes", R_C, lo, span, "minimum"))
        rep.append(_area_item("sphere-span-extremes", R_C, hi, span, "maximum"))
    if d1 == 0:
        for c in inner:
            if (c.type is ComponentType.CP1 and c.lam == 1
                    and gap_empty(lo.level, c.level)):
                fired = True
                a1 = c.normal.degrees_with_weight(-1)[0]
                rest = sum(c.normal.degrees_with_weight(1))
                ok = 3 * a1 == 2 + a1 + rest
                rep.append(CheckItem(
                    "surface-degree-relation", R_D, "PASS" if ok else "FAIL",
                    "3*%d vs 2 + %d + %d (surface alone below level 0 reading)"
                    % (a1, a1, rest)))
    if not fired:
        rep.append(CheckItem("sphere-rules", "sphere-area rules", "INFO",
                             "no sphere rule applies to this configuration"))
    return rep


# ----------------------------------------------------------------------
# Fano-index rules
# ----------------------------------------------------------------------

def sphere_index_rules(data):
    rep = ConstraintReport()
    try:
        (_, _), rev = dim_pair(data)
    except ValueError:
        return rep
    if rev:
        data = reverse_action(data)
    lo, hi = min_component(data), max_component(data)
    inner = interior_components(data)
    cands = index_candidates(data)
    iota = None
    if cands:
        values = sorted({v for _, v in cands})
        if len(cands) >= 2:
            rep.append(CheckItem(
                "index-consistency", R_CONS,
                "PASS" if len(values) == 1 else "FAIL",
                "candidates %s" % (cands,)))
        if len(values) == 1:
            iota = values[0]
            rep.append(CheckItem("fano-index", "Fano index read off the extremes",
                                 "INFO", "index %d from the %s" % (iota, cands[0][0])))
    else:
        rep.append(CheckItem("fano-index", "Fano index read off the extremes",
                             "INFO", "no index rule applies"))

    if (lo.complex_dim == hi.complex_dim == 0
            and len([c for c in inner if c.complex_dim == 2]) == 1):
        ok = iota is not None and iota >= 4
        rep.append(CheckItem("index-lower-oo", R_I1, "PASS" if ok else "FAIL",
                             "index %s" % iota))

    between = [c for c in data if lo.level < c.level < 0]
    if lo.type is ComponentType.POINT and len(between) == 1:
        b = between[0]
        if b.type is ComponentType.CP1 and b.lam == 1 and iota is not None:
            rep.append(CheckItem("index-parity-surface", R_I2,
                                 "PASS" if iota % 2 == 1 else "FAIL",
                                 "index %d" % iota))
        if b.type is ComponentType.POINT and b.lam == 1 and iota is not None:
            rep.append(CheckItem("index-cap-point", R_I3,
                                 "PASS" if iota <= 2 else "FAIL",
                                 "index %d" % iota))
    return rep


def _lambda2_exclusion(data):
    """Interior two-negative-weight points need a 4-dim extreme."""
    lo, hi = min_component(data), max_component(data)
    lam2 = [c for c in interior_components(data)
            if c.type is ComponentType.POINT and c.lam == 2]
    if not lam2:
        return None
    has4 = any(c is not None and c.complex_dim == 2 for c in (lo, hi))
    return CheckItem("lambda2-needs-4dim-extremal", R_T31,
                     "PASS" if has4 else "FAIL",
                     "%d such points, 4-dim extreme %s" % (len(lam2), "present" if has4 else "absent"))


def _bundle_halves(data):
    """The (0,0) pin: interior 4-dim bundles are halves of the tangent class."""
    lo, hi = min_component(data), max_component(data)
    if lo is None or hi is None or lo.complex_dim or hi.complex_dim:
        return None
    for c in interior_components(data):
        if c.complex_dim != 2:
            continue
        half, rem = [], 0
        for t in c.type.tangent_c1:
            half.append(t // 2)
            rem |= t % 2
        ok = (not rem and tuple(c.normal.minus) == tuple(half)
              and tuple(c.normal.plus) == tuple(half))
        detail = ("tangent class %s halves to %s, bundles %s and %s"
                  % (c.type.tangent_c1, tuple(half), c.normal.minus, c.normal.plus))
        if rem:
            detail = "tangent class %s is not divisible by two" % (c.type.tangent_c1,)
        return CheckItem("interior-bundle-halves", R_HALVES,
                         "PASS" if ok else "FAIL", detail)
    return None


# ----------------------------------------------------------------------
# the full verification chain on one dataset
# ----------------------------------------------------------------------

def verification_report(data):
    """Everything this package can check about one dataset, in one report."""
    rep = validate(data)
    rep.append(CheckItem("betti-vector", "Betti numbers by localization", "INFO",
                         "b = %s" % (betti_vector(data),)))
    total = abbv_sum(data)
    rep.append(CheckItem("abbv-vanishing", R_ABBV,
                         "PASS" if total == 0 else "FAIL",
                         "contributions %s sum to %s"
                         % ([str(t) for t in abbv_terms(data)], total)))
    rep.append(signature_check(data))
    item = _lambda2_exclusion(data)
    if item is not None:
        rep.append(item)
    item = _bundle_halves(data)
    if item is not None:
        rep.append(item)
    rep.extend(sphere_constraints(data))
    rep.extend(sphere_index_rules(data))
    rep.extend(positivity_check(dh_profile(data)))
    vol = total_volume(data)
    rep.append(CheckItem("total-volume", "moment-interval volume by halves", "INFO",
                         "c1^4 = %s" % vol if vol is not None
                         else "not computable by halves"))
    return rep


# ----------------------------------------------------------------------
# admissible extremal dimension pairs
# ----------------------------------------------------------------------

@dataclass(frozen=True)
class ShapeAssessment:
    shape: tuple
    admissible: bool
    trace: tuple


def _assess_shape(d1, d2):
    items = []
    b2_floor = (1 if d1 >= 2 else 0) + (1 if d2 == 6 else 0)
    if b2_floor >= 2:
        items.append(CheckItem(
            "betti-budget-b2", R_B2, "FAIL",
            "a positive-dimensional minimum and a six-dimensional maximum each "
            "contribute a degree-2 class, so b2 >= %d" % b2_floor))
        return ShapeAssessment((d1, d2), False, tuple(items))
    if (d1, d2) in ((0, 2), (2, 2)):
        # some component of dimension >= 4 must exist (the fixed-set
        # self-intersection equals b4 >= 1); with extremes this small it
        # can only be interior with one negative weight, and then both
        # remaining budgets overflow
        b6 = 1 + 1   # maximum's top class localizes in degree 6, plus the
                     # middle class of the interior 4-dim component
        items.append(CheckItem(
            "b4-positive", "the middle Betti number is positive", "INFO",
            "forces a component of dimension at least four (self-intersection "
            "argument), necessarily interior with one negative weight"))
        items.append(CheckItem(
            "betti-budget-b6", R_B6, "FAIL",
            "with such a component b6 >= %d" % b6))
        return ShapeAssessment((d1, d2), False, tuple(items))
    items.append(CheckItem("betti-budget-b2", R_B2, "PASS",
                           "budgets admit interior solutions"))
    return ShapeAssessment((d1, d2), True, tuple(items))


def admissible_dim_pairs():
    """Assessment of all ten extremal dimension pairs."""
    out = {}
    for d1 in (0, 2, 4, 6):
        for d2 in (0, 2, 4, 6):
            if d1 <= d2:
                out[(d1, d2)] = _assess_shape(d1, d2)
    return out


ADMISSIBLE_SHAPES = ((0, 0), (0, 4), (0, 6), (2, 4), (4, 4))


# ----------------------------------------------------------------------
# enumeration output types
# ----------------------------------------------------------------------

@dataclass(frozen=True)
class Family:
    key: str
    shape: tuple
    summary: str
    iota: int
    b4_base: int                 # b4 = b4_base + n2
    n2_min: int
    n2_max: int
    fixed: tuple                 # ((name, value), ...)
    free: tuple                  # human-readable leftover freedom
    report: ConstraintReport = field(compare=False, repr=False)
    builder: object = field(compare=False, repr=False)

    def b4(self, n2=None):
        return self.b4_base + (self.n2_min if n2 is None else n2)

    def instantiate(self, n2=None, **choices):
        n2 = self.n2_min if n2 is None else n2
        if not self.n2_min <= n2 <= self.n2_max:
            raise ClassifyError("n2 = %d outside [%d, %d] for family %s"
                                % (n2, self.n2_min, self.n2_max, self.key))
        return self.builder(n2, **choices)


@dataclass(frozen=True)
class Rejection:
    candidate: str
    rule_id: str
    rule: str
    detail: str


@dataclass(frozen=True)
class EnumerationResult:
    shape: tuple
    b4_max: int
    families: tuple
    rejections: tuple


class _Tally:
    """Aggregates sweep rejections per rule with a representative witness."""

    def __init__(self, candidate):
        self.candidate = candidate
        self.bins = {}

    def add(self, rule_id, rule, example):
        if rule_id not in self.bins:
            self.bins[rule_id] = [rule, example, 0]
        self.bins[rule_id][2] += 1

    def rows(self):
        return [Rejection(self.candidate, rid, rule,
                          "%s; %d parameter choices rejected" % (ex, n))
                for rid, (rule, ex, n) in self.bins.items()]


def _certify(family, n2_values=None):
    """Re-run the full rule chain on instantiated members of a family."""
    n2_values = range(family.n2_min, family.n2_max + 1) if n2_values is None else n2_values
    for n2 in n2_values:
        rep = verification_report(family.instantiate(n2))
        if not rep.ok:
            raise ClassifyError("family %s fails its own certification at n2=%d:\n%s"
                                % (family.key, n2, "\n".join(l for l in rep.lines()
                                                             if l.startswith("FAIL"))))


# ----------------------------------------------------------------------
# interior skeletons from the Betti budgets
# ----------------------------------------------------------------------

_MENU = (
    ("Morse-index-2 point", ComponentType.POINT, 1),
    ("Morse-index-6 point", ComponentType.POINT, 3),
    ("Morse-index-2 sphere", ComponentType.CP1, 1),
    ("Morse-index-4 sphere", ComponentType.CP1, 2),
    ("interior plane", ComponentType.CP2, 1),
    ("interior quadric surface", ComponentType.P1XP1, 1),
)


def _menu_level(ctype, lam):
    return 2 * lam - (4 - ctype.complex_dim)


def _betti_contrib(ctype, lam, i):
    j = i // 2 - lam
    return ctype.betti[j] if 0 <= j < len(ctype.betti) else 0


def _interior_skeletons(lo, hi):
    """Interior multisets over the menu meeting the b2 = b6 = 1 budgets.

    Morse-index-4 points contribute to neither budget and stay symbolic.
    """
    base2 = kirwan_betti(FixedPointData((lo, hi)), 2)
    base6 = kirwan_betti(FixedPointData((lo, hi)), 6)
    need = (1 - base2, 1 - base6)
    menu = [(label, t, lam) for label, t, lam in _MENU
            if lo.level < _menu_level(t, lam) < hi.level]
    out = []
    for counts in product((0, 1), repeat=len(menu)):
        got2 = sum(n * _betti_contrib(t, lam, 2) for n, (_, t, lam) in zip(counts, menu))
        got6 = sum(n * _betti_contrib(t, lam, 6) for n, (_, t, lam) in zip(counts, menu))
        if (got2, got6) == need:
            out.append(tuple(item for n, item in zip(counts, menu) if n))
    return out


def _skeleton_label(shape, skel):
    inside = ", ".join(label for label, _, _ in skel) or "no budget-visible interior"
    return "shape %s with %s (plus Morse-index-4 points)" % (shape, inside)


# ----------------------------------------------------------------------
# per-shape enumeration
# ----------------------------------------------------------------------

def _family_report(notes):
    rep = ConstraintReport()
    for check_id, rule, detail in notes:
        rep.append(CheckItem(check_id, rule, "INFO", detail))
    return rep


def _enum_00(b4_max, box):
    lo = point_component((1, 1, 1, 1))
    hi = point_component((-1, -1, -1, -1))
    families, rejections = [], []
    for skel in _interior_skeletons(lo, hi):
        label = _skeleton_label((0, 0), skel)
        kinds = tuple(t for _, t, _ in skel)
        # no 4-dim extreme anywhere in this shape
        rejections.append(Rejection(
            label, "lambda2-needs-4dim-extremal", R_T31,
            "both extremes are points, so no Morse-index-4 points occur"))
        if ComponentType.CP2 in kinds:
            rejections.append(Rejection(
                label, "interior-bundle-halves", R_HALVES,
                "the plane's tangent class 3 is odd, no half-integral bundles"))
            continue
        if ComponentType.P1XP1 not in kinds:
            # no 4-dim component at all: self-intersection 0 can never
            # match the positive middle Betti number, degrees be what they may
            b4 = sum(_betti_contrib(t, lam, 4) for _, t, lam in skel)
            rid = "b4-positive" if b4 == 0 else "signature-self-intersection"
            rule = ("the middle Betti number is positive" if b4 == 0 else R_SIG)
            rejections.append(Rejection(
                label, rid, rule,
                "b4 = %d with fixed-set self-intersection 0, for every degree choice" % b4))
            continue
        # interior quadric surface: the halves rule pins both bundles to
        # (1,1); everything else about the candidate is then determined
        def build(n2, **choices):
            if n2 or choices:
                raise ClassifyError("this family has no free parameters")
            return FixedPointData((
                point_component((1, 1, 1, 1)),
                fourdim_interior(ComponentType.P1XP1, (1, 1), (1, 1)),
                point_component((-1, -1, -1, -1)),
            ))
        fam = Family(
            key="0,0", shape=(0, 0),
            summary=("isolated extremes with an interior quadric surface at "
                     "level 0 carrying two bundles of bidegree (1,1)"),
            iota=4, b4_base=2, n2_min=0, n2_max=0,
            fixed=(("bundle bidegrees", (1, 1)),),
            free=(),
            report=_family_report((
                ("interior-bundle-halves", R_HALVES,
                 "tangent class (2, 2) halves to (1, 1) for both bundles"),
                ("abbv-vanishing", R_ABBV, "1 + (-2) + 1 = 0"),
                ("index-lower-oo", R_I1, "Fano index 4"),
            )),
            builder=build)
        rejections.append(Rejection(
            label, "interior-bundle-halves", R_HALVES,
            "every bundle pair other than (1,1), (1,1) violates the halving"))
        _certify(fam)
        families.append(fam)
    return families, rejections


def _enum_06(b4_max, box):
    lo = point_component((1, 1, 1, 1))
    hi_probe = cp3_extremal(-1, 0)
    families, rejections = [], []
    skels = _interior_skeletons(lo, hi_probe)
    assert skels == [()], "unexpected interior budget solutions for (0,6)"
    label = _skeleton_label((0, 6), ())
    rejections.append(Rejection(
        label, "lambda2-needs-4dim-extremal", R_T31,
        "extremes have dimensions 0 and 6; without this rule the localization "
        "sum 1 + n2 - m^3 = 0 would even admit m = 2 with 7 interior points"))
    t = _Tally(label)
    survivors = []
    for m in range(-box, box + 1):
        if 4 + m < 1:
            t.add("monotone-positive", R_MONO, "e.g. m = %d makes 4 + m <= 0" % m)
            continue
        if 1 - m ** 3 != 0:
            t.add("abbv-vanishing", R_ABBV, "e.g. m = %d gives 1 - m^3 = %d" % (m, 1 - m ** 3))
            continue
        survivors.append(m)
    rejections.extend(t.rows())
    assert survivors == [1]

    def build(n2, **choices):
        if n2 or choices:
            raise ClassifyError("this family has no free parameters")
        return FixedPointData((point_component((1, 1, 1, 1)), cp3_extremal(-1, 1)))

    fam = Family(
        key="0,6", shape=(0, 6),
        summary=("an isolated minimum and a six-dimensional maximum whose "
                 "normal line bundle has first Chern coefficient 1"),
        iota=5, b4_base=1, n2_min=0, n2_max=0,
        fixed=(("six-dim normal c1", 1),),
        free=(),
        report=_family_report((
            ("abbv-vanishing", R_ABBV, "1 - 1^3 = 0"),
            ("fano-index", "Fano index read off the extremes", "index |4 + 1| = 5"),
        )),
        builder=build)
    _certify(fam)
    families.append(fam)
    return families, rejections


def _enum_24(b4_max, box):
    families, rejections = [], []
    label = _skeleton_label((2, 4), ())
    t = _Tally(label)
    survivors = set()
    for n2 in range(0, b4_max):
        b4 = 1 + n2
        c2 = b4          # signature pins c2 of the maximum
        for kp in range(-box, box + 1):
            for s in range(-36, 37):
                if -s + n2 + kp * kp - c2 != 0:
                    t.add("abbv-vanishing", R_ABBV,
                          "e.g. degrees summing to %d with k' = %d, n2 = %d" % (s, kp, n2))
                    continue
                if 2 + s < 1 or 3 + kp < 1:
                    t.add("monotone-positive", R_MONO,
                          "e.g. s = %d, k' = %d" % (s, kp))
                    continue
                if n2 > 0:
                    if 2 % (3 + kp):
                        t.add("sphere-area-max", R_A1,
                              "e.g. k' = %d: 3 + k' does not divide 2" % kp)
                        continue
                    if 3 % (2 + s):
                        t.add("sphere-area-min", R_A2,
                              "e.g. s = %d: 2 + s does not divide the depth 3" % s)
                        continue
                    if 5 % (2 + s):
                        t.add("sphere-span-min", R_B,
                              "e.g. s = %d: 2 + s does not divide the span 5" % s)
                        continue
                else:
                    if 5 % (2 + s):
                        t.add("sphere-span-extremes", R_C,
                              "e.g. s = %d: 2 + s does not divide the span 5" % s)
                        continue
                    if 5 % (3 + kp):
                        t.add("sphere-span-extremes", R_C,
                              "e.g. k' = %d: 3 + k' does not divide the span 5" % kp)
                        continue
                if abs(2 + s) != abs(3 + kp):
                    t.add("index-consistency", R_CONS,
                          "e.g. s = %d, k' = %d give indices %d vs %d"
                          % (s, kp, abs(2 + s), abs(3 + kp)))
                    continue
                survivors.add((kp, s, n2))
    rejections.extend(t.rows())
    assert survivors == {(2, 3, 0)}

    def build(n2, degrees=(1, 1, 1)):
        if n2:
            raise ClassifyError("no interior points in this family")
        if sum(degrees) != 3 or len(degrees) != 3:
            raise ClassifyError("minimum degrees must be three integers summing to 3")
        return FixedPointData((
            surface_component(tuple((d, 1) for d in degrees)),
            cp2_extremal(-1, 2, 1),
        ))

    fam = Family(
        key="2,4", shape=(2, 4),
        summary=("a minimal sphere with normal degrees summing to 3 and a "
                 "four-dimensional maximum with c1 coefficient 2, c2 = 1"),
        iota=5, b4_base=1, n2_min=0, n2_max=0,
        fixed=(("max c1", 2), ("max c2", 1), ("min degree sum", 3)),
        free=("split of the degree sum 3 into three summands (default 1,1,1)",),
        report=_family_report((
            ("abbv-vanishing", R_ABBV, "-3 + (4 - 1) = 0"),
            ("sphere-span-extremes", R_C, "span 5 realized at both extremes"),
            ("index-consistency", R_CONS, "|2 + 3| = |3 + 2| = 5"),
        )),
        builder=build)
    _certify(fam)
    families.append(fam)
    return families, rejections


def _enum_04(b4_max, box):
    lo = point_component((1, 1, 1, 1))
    hi_probe = cp2_extremal(-1, 0, 0)
    families, rejections = [], []
    for skel in _interior_skeletons(lo, hi_probe):
        kinds = tuple(t for _, t, _ in skel)
        label = _skeleton_label((0, 4), skel)
        if kinds == (ComponentType.POINT,):
            t = _Tally(label)
            top_n2 = -1
            for n2 in range(0, b4_max):
                b4 = 1 + n2
                c2 = b4
                for kp in range(-box, box + 1):
                    if 1 - 1 + n2 + kp * kp - c2 != 0:
                        t.add("abbv-vanishing", R_ABBV,
                              "e.g. k' = %d gives k'^2 - 1 = %d" % (kp, kp * kp - 1))
                        continue
                    if abs(3 + kp) > 2:
                        t.add("index-cap-point", R_I3,
                              "e.g. k' = %d gives index %d > 2" % (kp, abs(3 + kp)))
                        continue
                    if n2 > 0 and 2 % (3 + kp):
                        t.add("sphere-area-max", R_A1,
                              "e.g. k' = %d: 3 + k' does not divide 2" % kp)
                        continue
                    if c2 > 7:
                        t.add("dh-k-bound",
                              "density positivity bounds the middle Betti number",
                              "c2 = b4 = %d exceeds 7" % c2)
                        continue
                    top_n2 = max(top_n2, n2)
            rejections.extend(t.rows())
            assert top_n2 == min(6, b4_max - 1)

            def build(n2, **choices):
                if choices:
                    raise ClassifyError("no free choices in this family")
                pts = tuple(point_component((-1, -1, 1, 1)) for _ in range(n2))
                return FixedPointData((
                    point_component((1, 1, 1, 1)),
                    point_component((-1, 1, 1, 1)),
                    *pts,
                    cp2_extremal(-1, -1, 1 + n2),
                ))

            fam = Family(
                key="0,4/no-surface", shape=(0, 4),
                summary=("an isolated minimum, one Morse-index-2 point, n2 "
                         "Morse-index-4 points and a four-dimensional maximum "
                         "with c1 coefficient -1, c2 = b4 = 1 + n2"),
                iota=2, b4_base=1, n2_min=0, n2_max=top_n2,
                fixed=(("max c1", -1),),
                free=(),
                report=_family_report((
                    ("abbv-vanishing", R_ABBV, "1 - 1 + n2 + (1 - (1 + n2)) = 0"),
                    ("index-cap-point", R_I3, "forces c1 = -1, index 2"),
                    ("dh-k-bound",
                     "density positivity bounds the middle Betti number",
                     "c2 = b4 <= 7, so n2 <= 6"),
                    ("dh-seam",
                     "push-forward density is continuous across interior walls "
                     "of isolated points",
                     "the two local density formulas disagree at level 0 for "
                     "every member (56 vs 56 - 8*b4); reported as WARN on "
                     "verification, the family is admissible data only"),
                )),
                builder=build)
            _certify(fam)
            families.append(fam)
        elif kinds == (ComponentType.CP1,):
            t = _Tally(label)
            survivors = set()
            for n2 in range(0, b4_max - 1):
                c2 = 2 + n2
                for kp in range(-box, box + 1):
                    for a1 in range(-12, 13):
                        for tail in range(-24, 25):
                            if kp * kp - c2 + (-a1 + tail) + n2 + 1 != 0:
                                t.add("abbv-vanishing", R_ABBV,
                                      "e.g. k' = %d, a1 = %d, a2 + a3 = %d" % (kp, a1, tail))
                                continue
                            if tail != 2 * a1 - 2:
                                t.add("surface-degree-relation", R_D,
                                      "e.g. a1 = %d needs a2 + a3 = %d, got %d"
                                      % (a1, 2 * a1 - 2, tail))
                                continue
                            if 2 + a1 + tail < 1 or 3 + kp < 1:
                                t.add("monotone-positive", R_MONO,
                                      "e.g. a1 = %d, k' = %d" % (a1, kp))
                                continue
                            if abs(3 + kp) % 2 == 0:
                                t.add("index-parity-surface", R_I2,
                                      "e.g. k' = %d gives even index %d" % (kp, abs(3 + kp)))
                                continue
                            if n2 > 0 and 2 % (3 + kp):
                                t.add("sphere-area-max", R_A1,
                                      "e.g. k' = %d: 3 + k' does not divide 2" % kp)
                                continue
                            survivors.add((kp, a1, tail, n2))
            rejections.extend(t.rows())
            assert survivors == {(0, 3, 4, 0)}

            def build(n2, tail=(2, 2)):
                if n2:
                    raise ClassifyError("no interior points in this family")
                if len(tail) != 2 or sum(tail) != 4:
                    raise ClassifyError("positive-weight degrees must sum to 4")
                return FixedPointData((
                    point_component((1, 1, 1, 1)),
                    surface_component(((3, -1), (tail[0], 1), (tail[1], 1))),
                    cp2_extremal(-1, 0, 2),
                ))

            fam = Family(
                key="0,4/with-surface", shape=(0, 4),
                summary=("an isolated minimum, a Morse-index-2 sphere with "
                         "degrees (3 | a2 + a3 = 4) and a four-dimensional "
                         "maximum with c1 coefficient 0, c2 = 2"),
                iota=3, b4_base=2, n2_min=0, n2_max=0,
                fixed=(("max c1", 0), ("max c2", 2), ("surface a1", 3)),
                free=("split of a2 + a3 = 4 (default 2,2)",),
                report=_family_report((
                    ("surface-degree-relation", R_D, "3*3 = 2 + 3 + 4"),
                    ("index-parity-surface", R_I2, "index |3 + 0| = 3 is odd"),
                    ("abbv-vanishing", R_ABBV, "1 + 1 + (0 - 2) = 0"),
                )),
                builder=build)
            _certify(fam)
            families.append(fam)
        else:
            rejections.append(Rejection(
                _skeleton_label((0, 4), skel), "betti-budget-b2", R_B2,
                "unexpected budget solution"))
    return families, rejections


def _enum_44(b4_max, box):
    families, rejections = [], []
    label = _skeleton_label((4, 4), ())
    t = _Tally(label)
    neg_top_n2 = -1
    pos_ok = False
    for n2 in range(0, max(0, b4_max - 2) + 1):
        for k1 in range(-box, box + 1):
            for k2 in range(-box, box + 1):
                # signature pins c2(min) + c2(max) = 2 + n2, so the
                # localization sum reduces to k1^2 + k2^2 = 2
                if k1 * k1 + k2 * k2 != 2:
                    t.add("abbv-vanishing", R_ABBV,
                          "e.g. k' = (%d, %d): squares sum to %d, not 2"
                          % (k1, k2, k1 * k1 + k2 * k2))
                    continue
                if abs(3 + k1) != abs(3 + k2):
                    t.add("index-consistency", R_CONS,
                          "k' = (%d, %d) give indices %d vs %d"
                          % (k1, k2, abs(3 + k1), abs(3 + k2)))
                    continue
                if n2 > 0 and (2 % (3 + k2) or 2 % (3 + k1)):
                    t.add("sphere-area-max", R_A1,
                          "k' = %d at an extreme does not divide the area 2" % k1)
                    continue
                if k1 == -1:
                    if n2 > 12:
                        t.add("dh-k-bound",
                              "density positivity bounds the middle Betti number",
                              "b4 = %d needs a c2 split with a part > 7" % (2 + n2))
                        continue
                    neg_top_n2 = max(neg_top_n2, n2)
                else:
                    pos_ok = True
    rejections.extend(t.rows())
    assert pos_ok and neg_top_n2 == min(12, max(0, b4_max - 2))

    def build_neg(n2, split=None):
        b4 = 2 + n2
        if split is None:
            split = ((b4 + 1) // 2, b4 // 2)
        if sum(split) != b4:
            raise ClassifyError("c2 split must sum to b4 = %d" % b4)
        pts = tuple(point_component((-1, -1, 1, 1)) for _ in range(n2))
        return FixedPointData((
            cp2_extremal(1, -1, split[0]),
            *pts,
            cp2_extremal(-1, -1, split[1]),
        ))

    fam_neg = Family(
        key="4,4/negative", shape=(4, 4),
        summary=("two four-dimensional extremes with c1 coefficient -1, n2 "
                 "Morse-index-4 points, c2 values splitting b4 = 2 + n2"),
        iota=2, b4_base=2, n2_min=0, n2_max=neg_top_n2,
        fixed=(("both c1", -1),),
        free=("c2 split of b4 into two parts, each at most 7 (default balanced)",),
        report=_family_report((
            ("abbv-vanishing", R_ABBV, "(1 - c2min) + n2 + (1 - c2max) = 0"),
            ("sphere-area-max", R_A1, "for n2 > 0 both c1 must be -1"),
            ("dh-k-bound",
             "density positivity bounds the middle Betti number",
             "each c2 <= 7, so b4 <= 14"),
        )),
        builder=build_neg)
    _certify(fam_neg)
    families.append(fam_neg)

    def build_pos(n2, split=(1, 1)):
        if n2:
            raise ClassifyError("interior points force c1 = -1, not +1")
        if sum(split) != 2:
            raise ClassifyError("c2 split must sum to b4 = 2")
        return FixedPointData((
            cp2_extremal(1, 1, split[0]),
            cp2_extremal(-1, 1, split[1]),
        ))

    fam_pos = Family(
        key="4,4/positive", shape=(4, 4),
        summary=("two four-dimensional extremes with c1 coefficient +1 and "
                 "no interior points, c2 values splitting b4 = 2"),
        iota=4, b4_base=2, n2_min=0, n2_max=0,
        fixed=(("both c1", 1),),
        free=("c2 split of 2 into two parts, bounded only by the search box "
              "(default 1,1)",),
        report=_family_report((
            ("abbv-vanishing", R_ABBV, "(1 - c2min) + (1 - c2max) = 0"),
            ("sphere-span-extremes", R_C, "span 4 realized at both extremes"),
            ("index-consistency", R_CONS, "|3 + 1| = 4 at both extremes"),
        )),
        builder=build_pos)
    _certify(fam_pos)
    families.append(fam_pos)
    return families, rejections


_ENUMERATORS = {
    (0, 0): _enum_00,
    (0, 4): _enum_04,
    (0, 6): _enum_06,
    (2, 4): _enum_24,
    (4, 4): _enum_44,
}


def enumerate_case(shape, b4_max=14):
    """All admissible families for one extremal dimension pair.

    The search boxes scale with b4_max (Chern coefficients up to
    b4_max + 2 in absolute value, surface degrees up to 12, interior
    point counts up to b4_max); the constraint chains pin every family
    parameter well inside them.
    """
    shape = tuple(sorted(int(v) for v in shape))
    if shape not in {s for s in admissible_dim_pairs()}:
        raise ClassifyError("not a pair of extremal dimensions: %s" % (shape,))
    assessment = admissible_dim_pairs()[shape]
    if not assessment.admissible:
        raise ClassifyError(
            "shape %s is not admissible (admissible: %s): %s"
            % (shape, ", ".join(str(s) for s in ADMISSIBLE_SHAPES), "; ".join(
                it.line() for it in assessment.trace if it.verdict == "FAIL")))
    if b4_max < 2:
        raise ClassifyError("b4_max must be at least 2")
    box = b4_max + 2
    families, rejections = _ENUMERATORS[shape](b4_max, box)
    return EnumerationResult(shape, b4_max, tuple(families), tuple(rejections))


def enumerate_all(b4_max=14):
    """Enumeration results for the five admissible shapes, in order."""
    return {shape: enumerate_case(shape, b4_max) for shape in ADMISSIBLE_SHAPES}


# ----------------------------------------------------------------------
# the catalog of known actions
# ----------------------------------------------------------------------

def catalog():
    """Fixed point data of the known actions, keyed by structure."""
    return {
        "p4-isolated-min": FixedPointData((
            point_component((1, 1, 1, 1)),
            cp3_extremal(-1, 1),
        )),
        "p4-sphere-min": FixedPointData((
            surface_component(((1, 1), (1, 1), (1, 1))),
            cp2_extremal(-1, 2, 1),
        )),
        "q4-interior-quadric": FixedPointData((
            point_component((1, 1, 1, 1)),
            fourdim_interior(ComponentType.P1XP1, (1, 1), (1, 1)),
            point_component((-1, -1, -1, -1)),
        )),
        "q4-two-planes": FixedPointData((
            cp2_extremal(1, 1, 1),
            cp2_extremal(-1, 1, 1),
        )),
        "w5-surface-and-plane": FixedPointData((
            point_component((1, 1, 1, 1)),
            surface_component(((3, -1), (2, 1), (2, 1))),
            cp2_extremal(-1, 0, 2),
        )),
        "x8-six-points": FixedPointData((
            cp2_extremal(1, -1, 4),
            *[point_component((-1, -1, 1, 1)) for _ in range(6)],
            cp2_extremal(-1, -1, 4),
        )),
    }


_CASE_OF = {
    "p4-isolated-min": "a",
    "p4-sphere-min": "a",
    "q4-interior-quadric": "b",
    "q4-two-planes": "b",
    "w5-surface-and-plane": "c",
    "x8-six-points": "d",
}


def _is_x8_family(data):
    """The case-d family modulo its undetermined c2 split."""
    try:
        (d1, d2), rev = dim_pair(data)
    except ValueError:
        return False
    if (d1, d2) != (4, 4):
        return False
    lo, hi = min_component(data), max_component(data)
    inner = interior_components(data)
    if len(inner) != 6 or any(c.type is not ComponentType.POINT or c.lam != 2
                              for c in inner):
        return False
    for c in (lo, hi):
        if not (isinstance(c.normal, FourDimExtremalNormal) and c.normal.c1 == -1):
            return False
    return lo.normal.c2 + hi.normal.c2 == 8


def match_fp_class(data, entries=None):
    """Which catalog class the data belongs to: 'a' through 'd', or
    'unclassified'. Reversing the action is allowed; the case-d entry is
    matched modulo its undetermined c2 split."""
    entries = catalog() if entries is None else entries
    for candidate in (data, reverse_action(data)):
        for name, entry in entries.items():
            if fp_equivalent(candidate, entry):
                return _CASE_OF.get(name, name)
    if _is_x8_family(data):
        return "d"
    return "unclassified"


# ----------------------------------------------------------------------
# Fano families with index at least 2 and their volume filter
# ----------------------------------------------------------------------

@dataclass(frozen=True)
class FanoFamilyRecord:
    name: str
    fano_index: int
    b4: int
    c1_fourth: int
    genus: int = 0              # 0 means: not a genus-indexed family
    finite_automorphisms: bool = False


def default_fano_table():
    """The eight deformation families of Fano 4-folds with index >= 2 and
    second Betti number one."""
    return (
        FanoFamilyRecord("P4", 5, 1, 625),
        FanoFamilyRecord("Q4", 4, 2, 512),
        FanoFamilyRecord("Q1Q2", 3, 8, 324, finite_automorphisms=True),
        FanoFamilyRecord("W5", 3, 2, 405),
        FanoFamilyRecord("X7m", 2, 12, 192, genus=7),
        FanoFamilyRecord("X8m", 2, 8, 224, genus=8),
        FanoFamilyRecord("X9m", 2, 4, 256, genus=9),
        FanoFamilyRecord("V18", 2, 2, 288, genus=10),
    )


REQUIRED_FAMILY_NAMES = tuple(r.name for r in default_fano_table())


def fano_table_hash(records=None):
    records = default_fano_table() if records is None else records
    doc = [{
        "name": r.name, "fano_index": r.fano_index, "b4": r.b4,
        "c1_fourth": r.c1_fourth, "genus": r.genus,
        "finite_automorphisms": r.finite_automorphisms,
    } for r in sorted(records, key=lambda r: r.name)]
    blob = json.dumps(doc, sort_keys=True, separators=(",", ":")).encode()
    return hashlib.sha256(blob).hexdigest()


_INDEX_WITNESS = {
    3: ("the (0,4) shape with an interior Morse-index-2 sphere", 2),
    4: ("the (0,0) shape and the positive (4,4) branch", 2),
    5: ("the (0,6) and (2,4) shapes", 1),
}


@dataclass(frozen=True)
class FanoClassification:
    survivors: tuple
    traces: tuple        # ((name, (CheckItem, ...)), ...)
    table_hash: str


def classify_fano(records=None):
    """Filter the Fano table down to the families that can carry an
    effective semi-free circle action with isolated-or-small fixed sets.

    Index-2 families must additionally match one of the two computable
    moment-interval volumes; a positive-dimensional symmetry group is
    required throughout.
    """
    records = default_fano_table() if records is None else tuple(records)
    names = {r.name for r in records}
    missing = [n for n in REQUIRED_FAMILY_NAMES if n not in names]
    if missing:
        raise ClassifyError("incomplete family table, missing: %s" % ", ".join(missing))
    survivors = []
    traces = []
    for rec in sorted(records, key=lambda r: (-r.fano_index, r.name)):
        items = []
        alive = True
        if rec.fano_index == 2 and rec.genus:
            expect = 32 * (rec.genus - 1)
            if expect != rec.c1_fourth:
                items.append(CheckItem(
                    "degree-genus", R_GENUS, "WARN",
                    "genus %d predicts c1^4 = %d, record says %d"
                    % (rec.genus, expect, rec.c1_fourth)))
            else:
                items.append(CheckItem(
                    "degree-genus", R_GENUS, "PASS",
                    "32*(%d - 1) = %d" % (rec.genus, rec.c1_fourth)))
        if rec.fano_index not in (2, 3, 4, 5):
            items.append(CheckItem(
                "index-range", R_IDX_RANGE, "FAIL",
                "index %d is outside 2..5" % rec.fano_index))
            alive = False
        if alive and rec.finite_automorphisms:
            items.append(CheckItem(
                "finite-automorphisms", R_AUTOS, "FAIL",
                "the family has no positive-dimensional automorphisms"))
            alive = False
        if alive and rec.fano_index == 2:
            vol_a = 416 - 16 * rec.b4
            vol_b = 352 - 16 * rec.b4
            hit_a = rec.c1_fourth == vol_a and rec.b4 <= 7
            hit_b = rec.c1_fourth == vol_b and rec.b4 <= 14
            note = ""
            if rec.b4 > 7:
                note = " (isolated-minimum pattern needs b4 <= 7, here %d)" % rec.b4
            if hit_a or hit_b:
                items.append(CheckItem(
                    "volume-match", R_VOL, "PASS",
                    "volume %d matches the %s pattern%s"
                    % (rec.c1_fourth,
                       "two-plane" if hit_b else "isolated-minimum", note)))
            else:
                items.append(CheckItem(
                    "volume-match", R_VOL, "FAIL",
                    "candidate volumes %d and %d, target %d%s"
                    % (vol_a, vol_b, rec.c1_fourth, note)))
                alive = False
            items.append(CheckItem(
                "index-parity-surface", R_I2, "INFO",
                "the odd-index surface pattern is excluded for index 2"))
        if alive and rec.fano_index >= 3:
            witness, b4_there = _INDEX_WITNESS[rec.fano_index]
            items.append(CheckItem(
                "index-range", R_IDX_RANGE, "PASS",
                "index %d realized by %s" % (rec.fano_index, witness)))
            if rec.b4 != b4_there:
                items.append(CheckItem(
                    "index-range", R_IDX_RANGE, "WARN",
                    "that pattern pins b4 = %d, record has b4 = %d"
                    % (b4_there, rec.b4)))
        if alive:
            survivors.append(rec.name)
        traces.append((rec.name, tuple(items)))
    return FanoClassification(tuple(survivors), tuple(traces),
                              fano_table_hash(records))
