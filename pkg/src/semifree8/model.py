"""Fixed-point data of a semi-free Hamiltonian circle action on an 8-manifold.

A dataset is a finite list of fixed components. Each carries its type (one
of five allowed manifolds), the four weights of the circle representation
on the normal-plus-tangent directions (weights live in {-1, 0, +1}, zeros
are tangential), and exact Chern data for the normal bundle. The moment
map value of a component is minus the weight sum, so levels are determined
by the combinatorics and never stored.

This module knows nothing about the case analysis; it provides the shared
vocabulary (components, Betti numbers via localization of homology,
structural validation, the self-intersection/signature test, action
reversal and fixed-point-data equivalence).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction

from .localization import (
    FourDimExtremalNormal,
    FourDimSplitNormal,
    PointNormal,
    SixDimNormal,
    SurfaceNormal,
    _split_classes,
)


class ComponentType(Enum):
    POINT = "point"
    CP1 = "cp1"
    CP2 = "cp2"
    P1XP1 = "p1xp1"
    CP3 = "cp3"

    @property
    def complex_dim(self):
        return {"point": 0, "cp1": 1, "cp2": 2, "p1xp1": 2, "cp3": 3}[self.value]

    @property
    def betti(self):
        """Even Betti numbers (b0, b2, ..) up to the top degree."""
        return {
            "point": (1,),
            "cp1": (1, 1),
            "cp2": (1, 1, 1),
            "p1xp1": (1, 2, 1),
            "cp3": (1, 1, 1, 1),
        }[self.value]

    @property
    def tangent_c1(self):
        """First Chern class of the component in its generator basis."""
        return {
            "point": (),
            "cp1": (2,),
            "cp2": (3,),
            "p1xp1": (2, 2),
            "cp3": (4,),
        }[self.value]


@dataclass(frozen=True)
class FixedComponent:
    type: ComponentType
    weights: tuple
    normal: object

    def __post_init__(self):
        ws = tuple(sorted(int(w) for w in self.weights))
        if len(ws) != 4:
            raise ValueError("a component of an 8-manifold carries exactly 4 weights")
        object.__setattr__(self, "weights", ws)

    @property
    def lam(self):
        """Number of negative weights, i.e. half the Morse index."""
        return sum(1 for w in self.weights if w < 0)

    @property
    def level(self):
        """Moment map value, normalized to minus the weight sum."""
        return -sum(self.weights)

    @property
    def complex_dim(self):
        return self.type.complex_dim

    def sort_key(self):
        return (self.level, self.type.value, self.weights, repr(self.normal))


@dataclass(frozen=True)
class FixedPointData:
    components: tuple

    def __post_init__(self):
        comps = tuple(sorted(self.components, key=lambda c: c.sort_key()))
        object.__setattr__(self, "components", comps)

    def __iter__(self):
        return iter(self.components)

    def __len__(self):
        return len(self.components)


# ----------------------------------------------------------------------
# component constructors used all over the classifier and the catalog
# ----------------------------------------------------------------------

def point_component(weights):
    return FixedComponent(ComponentType.POINT, tuple(weights), PointNormal())

def surface_component(summands):
    summands = tuple((int(a), int(w)) for a, w in summands)
    weights = (0,) + tuple(w for _, w in summands)
    return FixedComponent(ComponentType.CP1, weights, SurfaceNormal(summands))

def cp2_extremal(sign, c1, c2):
    return FixedComponent(ComponentType.CP2, (0, 0, sign, sign),
                          FourDimExtremalNormal(int(c1), int(c2)))

def fourdim_interior(ctype, minus, plus):
    return FixedComponent(ctype, (0, 0, -1, 1), FourDimSplitNormal(tuple(minus), tuple(plus)))

def cp3_extremal(sign, c1):
    return FixedComponent(ComponentType.CP3, (0, 0, 0, sign), SixDimNormal(int(c1)))


# ----------------------------------------------------------------------
# check bookkeeping
# ----------------------------------------------------------------------

@dataclass(frozen=True)
class CheckItem:
    id: str
    rule: str
    verdict: str   # PASS / FAIL / WARN / INFO
    detail: str = ""

    def line(self):
        tail = " (%s)" % self.detail if self.detail else ""
        return "%s %s: %s%s" % (self.verdict, self.id, self.rule, tail)


class ConstraintReport:
    """An ordered list of check items with an overall verdict."""

    def __init__(self, items=()):
        self.items = list(items)

    def append(self, item):
        self.items.append(item)

    def extend(self, items):
        for it in items:
            self.append(it if isinstance(it, CheckItem) else CheckItem(*it))

    @property
    def ok(self):
        return all(it.verdict != "FAIL" for it in self.items)

    @property
    def failures(self):
        return [it for it in self.items if it.verdict == "FAIL"]

    def lines(self):
        return [it.line() for it in self.items]

    def __iter__(self):
        return iter(self.items)

    def __repr__(self):
        return "<report %s, %d checks>" % ("PASS" if self.ok else "FAIL", len(self.items))


def _item(id, rule, good, detail_pass, detail_fail):
    return CheckItem(id, rule, "PASS" if good else "FAIL",
                     detail_pass if good else detail_fail)


# ----------------------------------------------------------------------
# Betti numbers by localization of homology
# ----------------------------------------------------------------------

def kirwan_betti(data, i):
    """b_i of the ambient manifold: each component F adds b_{i-2*lam}(F)."""
    if i % 2:
        return 0
    total = 0
    for c in data:
        j = i // 2 - c.lam
        if 0 <= j < len(c.type.betti):
            total += c.type.betti[j]
    return total


def betti_vector(data):
    return tuple(kirwan_betti(data, i) for i in (0, 2, 4, 6, 8))


def min_component(data):
    mins = [c for c in data if c.lam == 0]
    return mins[0] if len(mins) == 1 else None


def max_component(data):
    maxs = [c for c in data if c.lam == 4 - c.complex_dim]
    return maxs[0] if len(maxs) == 1 else None


def interior_components(data):
    lo, hi = min_component(data), max_component(data)
    return tuple(c for c in data if c is not lo and c is not hi)


def dim_pair(data):
    """Real dimensions (d1, d2) of (minimum, maximum), sorted, plus a flag
    saying whether the action had to be reversed to sort them."""
    lo, hi = min_component(data), max_component(data)
    if lo is None or hi is None:
        raise ValueError("need a unique minimum and a unique maximum")
    d1, d2 = 2 * lo.complex_dim, 2 * hi.complex_dim
    if d1 <= d2:
        return (d1, d2), False
    return (d2, d1), True


# ----------------------------------------------------------------------
# symplectic form restrictions (the manifold is monotone: [w] = c1)
# ----------------------------------------------------------------------

def omega_coefficients(comp):
    """[w] restricted to the component, in its generator basis, or None
    for a point. Tangent part plus normal first Chern classes."""
    t = comp.type
    n = comp.normal
    if t is ComponentType.POINT:
        return None
    if t is ComponentType.CP1:
        return (2 + n.degree_sum,)
    if t is ComponentType.CP2 and isinstance(n, FourDimExtremalNormal):
        return (3 + n.c1,)
    if t is ComponentType.CP2 and isinstance(n, FourDimSplitNormal):
        return (3 + n.minus[0] + n.plus[0],)
    if t is ComponentType.P1XP1:
        return (2 + n.minus[0] + n.plus[0], 2 + n.minus[1] + n.plus[1])
    if t is ComponentType.CP3:
        return (4 + n.c1,)
    raise ValueError("no symplectic restriction for %r" % (comp,))


def area_realizable(comp, area):
    """Can a sphere of the given symplectic area map into the component?"""
    if area <= 0:
        return False
    coeffs = omega_coefficients(comp)
    if coeffs is None:
        return False
    if len(coeffs) == 1:
        return coeffs[0] > 0 and area % coeffs[0] == 0
    e1, e2 = coeffs
    for i in range(0, area // max(e1, 1) + 2):
        rem = area - i * e1
        if rem == 0 and i > 0:
            return True
        if rem > 0 and e2 > 0 and rem % e2 == 0:
            return True
        if rem < 0:
            break
    return False


# ----------------------------------------------------------------------
# structural validation
# ----------------------------------------------------------------------

def _normal_matches(comp):
    t, n, ws = comp.type, comp.normal, comp.weights
    nonzero = tuple(w for w in ws if w)
    if t is ComponentType.POINT:
        return isinstance(n, PointNormal), "isolated point carries no Chern data"
    if t is ComponentType.CP1:
        if not isinstance(n, SurfaceNormal):
            return False, "fixed sphere needs a rank-3 split normal bundle"
        got = tuple(sorted(w for _, w in n.summands))
        want = tuple(sorted(nonzero))
        return got == want, "summand weights %s vs nonzero weights %s" % (got, want)
    if t is ComponentType.CP2:
        if isinstance(n, FourDimExtremalNormal):
            return len(set(nonzero)) == 1, "equal-weight rank-2 bundle on an extremal plane"
        if isinstance(n, FourDimSplitNormal):
            return sorted(nonzero) == [-1, 1] and len(n.minus) == 1, \
                "interior plane needs weights -1,+1 and scalar c1 data"
        return False, "plane needs rank-2 normal data"
    if t is ComponentType.P1XP1:
        return (isinstance(n, FourDimSplitNormal) and len(n.minus) == 2
                and sorted(nonzero) == [-1, 1]), \
            "interior quadric surface needs weights -1,+1 and bidegree c1 data"
    if t is ComponentType.CP3:
        return isinstance(n, SixDimNormal) and len(nonzero) == 1, \
            "six-dimensional component needs a line normal bundle"
    return False, "unknown component type"


def validate(data):
    """Structural checks every dataset must pass before any classification."""
    rep = ConstraintReport()
    all_w = [w for c in data for w in c.weights]
    rep.append(_item(
        "semi-free", "every weight lies in {-1, 0, +1}",
        all(w in (-1, 0, 1) for w in all_w),
        "%d weights checked" % len(all_w),
        "offending weights %s" % sorted({w for w in all_w if w not in (-1, 0, 1)})))

    ok = all(sum(1 for w in c.weights if w == 0) == c.complex_dim for c in data)
    rep.append(_item(
        "weight-zeros", "zero weights span the tangent directions",
        ok, "zero count matches dim_C on all components",
        "some component has zero count != dim_C"))

    bad = [c for c in data if not _normal_matches(c)[0]]
    rep.append(_item(
        "normal-variant", "normal bundle data matches the component species",
        not bad,
        "all %d normal bundles well-typed" % len(data),
        "; ".join("%s: %s" % (c.type.value, _normal_matches(c)[1]) for c in bad)))

    n_min = sum(1 for c in data if c.lam == 0)
    rep.append(_item(
        "unique-minimum", "exactly one component has no negative weight",
        n_min == 1, "one minimum", "%d candidate minima" % n_min))

    b8 = kirwan_betti(data, 8)
    rep.append(_item(
        "unique-maximum", "the top Betti number localizes to 1",
        b8 == 1, "b8 = 1", "b8 = %d" % b8))

    lo, hi = min_component(data), max_component(data)
    if lo is not None and hi is not None and lo is not hi:
        inner = interior_components(data)
        ok = all(lo.level < c.level < hi.level for c in inner) and lo.level < hi.level
        rep.append(_item(
            "level-order", "moment map levels are strictly ordered",
            ok, "levels %s" % sorted(c.level for c in data),
            "levels %s violate min < interior < max" % sorted(c.level for c in data)))
    else:
        rep.append(CheckItem("level-order", "moment map levels are strictly ordered",
                             "FAIL", "no unique extrema to order against"))

    b2 = kirwan_betti(data, 2)
    rep.append(_item(
        "kirwan-b2", "the second Betti number localizes to 1",
        b2 == 1, "b2 = 1", "b2 = %d" % b2))

    bv = betti_vector(data)
    rep.append(_item(
        "poincare", "Betti numbers are symmetric",
        bv == bv[::-1], "b = %s" % (bv,), "b = %s is not palindromic" % (bv,)))

    rep.append(_item(
        "b4-positive", "the middle Betti number is positive",
        bv[2] >= 1, "b4 = %d" % bv[2], "b4 = %d" % bv[2]))

    bad = []
    for c in data:
        try:
            coeffs = omega_coefficients(c)
        except ValueError:
            continue  # the normal-variant check has already flagged this one
        if coeffs is not None and any(e < 1 for e in coeffs):
            bad.append((c.type.value, coeffs))
    rep.append(_item(
        "monotone-positive", "the symplectic class restricts positively to components",
        not bad, "restrictions positive on all components",
        "nonpositive restriction on %s" % bad))
    return rep


# ----------------------------------------------------------------------
# signature via self-intersection of the fixed set
# ----------------------------------------------------------------------

def self_intersection(data):
    """Sum over 4-dim components of the integral of c2 of the normal bundle."""
    total = Fraction(0)
    for c in data:
        if c.complex_dim != 2:
            continue
        n = c.normal
        if isinstance(n, FourDimExtremalNormal):
            total += n.c2
        else:
            u, v = _split_classes(n)
            total += (u * v).integrate()
    return total


def signature_check(data):
    """Middle Betti number equals the fixed-set self-intersection.

    Only meaningful when every component has dimension at most four; a
    six-dimensional component takes the dataset outside the scope of the
    self-intersection argument and the check reports PASS with a note.
    """
    rule = "signature equals the self-intersection of the fixed set"
    if any(c.complex_dim == 3 for c in data):
        return CheckItem("signature-self-intersection", rule, "PASS",
                         "six-dimensional component present, argument not applicable")
    si = self_intersection(data)
    b4 = kirwan_betti(data, 4)
    if si == b4:
        return CheckItem("signature-self-intersection", rule, "PASS",
                         "self-intersection %s = b4" % si)
    return CheckItem("signature-self-intersection", rule, "FAIL",
                     "self-intersection %s but b4 = %d" % (si, b4))


# ----------------------------------------------------------------------
# action reversal and equivalence of fixed point data
# ----------------------------------------------------------------------

def _reverse_normal(normal):
    if isinstance(normal, SurfaceNormal):
        return SurfaceNormal(tuple((a, -w) for a, w in normal.summands))
    if isinstance(normal, FourDimSplitNormal):
        return FourDimSplitNormal(normal.plus, normal.minus)
    return normal


def reverse_action(data):
    """The same manifold with the circle running backwards."""
    return FixedPointData(tuple(
        FixedComponent(c.type, tuple(-w for w in c.weights), _reverse_normal(c.normal))
        for c in data))


def _fingerprint(comp):
    n = comp.normal
    if isinstance(n, PointNormal):
        tail = ("pt",)
    elif isinstance(n, SurfaceNormal):
        tail = ("surf", n.summands)
    elif isinstance(n, FourDimExtremalNormal):
        tail = ("ext", n.c1, n.c2)
    elif isinstance(n, SixDimNormal):
        tail = ("six", n.c1)
    else:
        if len(n.minus) == 2:
            plain = (n.minus, n.plus)
            swapped = ((n.minus[1], n.minus[0]), (n.plus[1], n.plus[0]))
            tail = ("split",) + min(plain, swapped)
        else:
            tail = ("split", n.minus, n.plus)
    return (comp.type.value, comp.weights) + tail


def fp_equivalent(a, b):
    """Same fixed point data: component-wise match of type, weights and
    normal Chern data, allowing the factor swap on quadric surfaces."""
    fa = sorted(_fingerprint(c) for c in a)
    fb = sorted(_fingerprint(c) for c in b)
    return fa == fb
