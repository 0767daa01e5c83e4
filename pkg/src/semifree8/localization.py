"""Fixed-component contributions to the equivariant localization sum.

For a semi-free circle action on a closed 8-manifold the integral of 1
localizes to the fixed components, and each component F contributes the
integral over F of the inverse equivariant Euler class of its normal
bundle. Summed over all components this is zero. With weights in
{-1, 0, +1} every contribution is an integer multiple of t^-4, so the
vanishing is a statement about plain integers and this module computes
them two independent ways:

* closed forms, one per normal-bundle variant (the functions named
  ``contribution_*``), and
* a series oracle that builds the equivariant Euler class exactly as a
  Laurent polynomial with coefficients in the component's cohomology
  ring and inverts it. The inversion is exact, not truncated: after
  factoring out the leading unit the remainder is nilpotent, so the
  geometric series terminates after at most dim_C(F) + 1 terms.

The two routes are kept separate on purpose and tested against each
other; neither is ever defined in terms of the other.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .rings import RingClass, ring_cpn, ring_p1xp1, ring_point


# ----------------------------------------------------------------------
# normal bundle data, one variant per fixed-component species
# ----------------------------------------------------------------------

@dataclass(frozen=True)
class PointNormal:
    """Normal bundle of an isolated fixed point: the weights say it all."""

    kind = "point"


@dataclass(frozen=True)
class SurfaceNormal:
    """Rank-3 split normal bundle of a fixed 2-sphere.

    ``summands`` holds (degree, weight) pairs, weight -1 entries first.
    """

    summands: tuple

    kind = "surface"

    def __post_init__(self):
        pairs = tuple(sorted((int(a), int(w)) for a, w in self.summands))
        pairs = tuple(sorted(pairs, key=lambda p: (p[1], p[0])))
        if len(pairs) != 3:
            raise ValueError("a fixed surface has a rank-3 normal bundle")
        if any(w not in (-1, 1) for _, w in pairs):
            raise ValueError("normal weights of a surface must be -1 or +1")
        object.__setattr__(self, "summands", pairs)

    @property
    def degree_sum(self):
        return sum(a for a, _ in self.summands)

    def degrees_with_weight(self, w):
        return tuple(a for a, wt in self.summands if wt == w)


@dataclass(frozen=True)
class FourDimExtremalNormal:
    """Rank-2 normal bundle of an extremal 4-dim component, both weights equal.

    c1 is the coefficient of the component's positive degree-2 generator,
    c2 the integral of the second Chern class.
    """

    c1: int
    c2: int

    kind = "fourdim_extremal"


@dataclass(frozen=True)
class FourDimSplitNormal:
    """L(-1) + L(+1) normal bundle of an interior 4-dim component.

    ``minus`` and ``plus`` are the first Chern classes of the two line
    bundles in the component's generator basis: one integer on CP^2, a
    bidegree pair on P1xP1.
    """

    minus: tuple
    plus: tuple

    kind = "fourdim_split"

    def __post_init__(self):
        object.__setattr__(self, "minus", tuple(int(v) for v in self.minus))
        object.__setattr__(self, "plus", tuple(int(v) for v in self.plus))
        if len(self.minus) != len(self.plus) or len(self.minus) not in (1, 2):
            raise ValueError("split normal bundle needs two c1 vectors of length 1 or 2")


@dataclass(frozen=True)
class SixDimNormal:
    """Line normal bundle of a 6-dim extremal component, c1 = c1 * generator."""

    c1: int

    kind = "sixdim"


def _lam(weights):
    return sum(1 for w in weights if w < 0)


# ----------------------------------------------------------------------
# closed forms
# ----------------------------------------------------------------------

def contribution_isolated(lam):
    """(-1)^lam: the sign of the product of the four nonzero weights."""
    return Fraction((-1) ** lam)


def contribution_surface(lam, normal):
    """Closed form for a fixed surface: -(-1)^lam (sum_pos a - sum_neg a)."""
    neg = normal.degrees_with_weight(-1)
    if len(neg) != lam:
        raise ValueError("surface normal data does not match lam = %d" % lam)
    inner = sum(normal.degrees_with_weight(1)) - sum(neg)
    return Fraction(-((-1) ** lam) * inner)


def contribution_fourdim_extremal(normal):
    """c1^2 - c2; the sign of the two equal weights drops out."""
    return Fraction(normal.c1 ** 2 - normal.c2)


def contribution_fourdim_split(normal):
    """-(u^2 - u v + v^2) integrated over the component, u = c1(L-), v = c1(L+)."""
    u, v = _split_classes(normal)
    return -(u * u - u * v + v * v).integrate()


def contribution_sixdim(normal):
    """-c1^3; again independent of the weight sign."""
    return Fraction(-normal.c1 ** 3)


def contribution(weights, normal):
    """Closed-form localization contribution of one component."""
    lam = _lam(weights)
    if isinstance(normal, PointNormal):
        return contribution_isolated(lam)
    if isinstance(normal, SurfaceNormal):
        return contribution_surface(lam, normal)
    if isinstance(normal, FourDimExtremalNormal):
        return contribution_fourdim_extremal(normal)
    if isinstance(normal, FourDimSplitNormal):
        return contribution_fourdim_split(normal)
    if isinstance(normal, SixDimNormal):
        return contribution_sixdim(normal)
    raise TypeError("unknown normal bundle data: %r" % (normal,))


# ----------------------------------------------------------------------
# Laurent series over a component ring, and the oracle
# ----------------------------------------------------------------------

class LaurentSeries:
    """Finite Laurent polynomial in the equivariant parameter t.

    Coefficients live in a fixed component ring. Only what the oracle
    needs: multiplication, inversion of units, coefficient extraction.
    """

    def __init__(self, ring, terms):
        self.ring = ring
        self.terms = {k: v for k, v in terms.items() if v}

    @classmethod
    def monomial(cls, ring, power, coeff):
        return cls(ring, {power: coeff if isinstance(coeff, RingClass) else ring.scalar(coeff)})

    def coefficient(self, k):
        return self.terms.get(k, self.ring.zero())

    def __mul__(self, other):
        if not isinstance(other, LaurentSeries):
            return LaurentSeries(self.ring, {k: v * other for k, v in self.terms.items()})
        out = {}
        for k1, v1 in self.terms.items():
            for k2, v2 in other.terms.items():
                k = k1 + k2
                cur = out.get(k)
                out[k] = v1 * v2 if cur is None else cur + v1 * v2
        return LaurentSeries(self.ring, out)

    __rmul__ = __mul__

    def __add__(self, other):
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, self.ring.zero()) + v
        return LaurentSeries(self.ring, out)

    def __sub__(self, other):
        return self + (other * Fraction(-1))

    def inverse(self):
        """Exact inverse of a unit series s*t^r*(1 - nilpotent)."""
        if not self.terms:
            raise ZeroDivisionError("cannot invert the zero series")
        r = max(self.terms)
        lead = self.terms[r]
        s = lead.graded_piece(0)
        if lead != s or s not in (self.ring.one(), -self.ring.one()):
            raise ValueError("leading coefficient must be +-1 for inversion")
        sgn = Fraction(1) if s == self.ring.one() else Fraction(-1)
        # n = 1 - sgn * t^-r * self has strictly positive ring degree,
        # hence is nilpotent and the geometric series below is exact
        unit = LaurentSeries.monomial(self.ring, -r, sgn) * self
        n = LaurentSeries.monomial(self.ring, 0, 1) - unit
        acc = LaurentSeries.monomial(self.ring, 0, 1)
        powr = LaurentSeries.monomial(self.ring, 0, 1)
        for _ in range(self.ring.top):
            powr = powr * n
            acc = acc + powr
        return LaurentSeries.monomial(self.ring, -r, sgn) * acc


def _split_classes(normal):
    if len(normal.minus) == 1:
        ring = ring_cpn(2)
        u = normal.minus[0] * ring.gen(0)
        v = normal.plus[0] * ring.gen(0)
    else:
        ring = ring_p1xp1()
        x, y = ring.gen(0), ring.gen(1)
        u = normal.minus[0] * x + normal.minus[1] * y
        v = normal.plus[0] * x + normal.plus[1] * y
    return u, v


def equivariant_euler_fourdim(normal, sign):
    """Equivariant Euler class t^2 + sign*c1*h*t + c2*h^2 on CP^2.

    ``sign`` is the common sign of the two nonzero weights.
    """
    if sign not in (-1, 1):
        raise ValueError("sign must be -1 or +1")
    ring = ring_cpn(2)
    h = ring.gen(0)
    return LaurentSeries(ring, {
        2: ring.one(),
        1: sign * normal.c1 * h,
        0: normal.c2 * (h * h),
    })


def equivariant_euler(weights, normal):
    """The equivariant Euler class of the normal bundle, built exactly."""
    nonzero = [w for w in weights if w]
    if isinstance(normal, PointNormal):
        ring = ring_point()
        out = LaurentSeries.monomial(ring, 0, 1)
        for w in nonzero:
            out = out * LaurentSeries.monomial(ring, 1, w)
        return out
    if isinstance(normal, SurfaceNormal):
        ring = ring_cpn(1)
        u = ring.gen(0)
        out = LaurentSeries.monomial(ring, 0, 1)
        for a, w in normal.summands:
            out = out * LaurentSeries(ring, {1: ring.scalar(w), 0: a * u})
        return out
    if isinstance(normal, FourDimExtremalNormal):
        signs = set(nonzero)
        if len(signs) != 1:
            raise ValueError("extremal 4-dim component needs two equal weights")
        return equivariant_euler_fourdim(normal, signs.pop())
    if isinstance(normal, FourDimSplitNormal):
        u, v = _split_classes(normal)
        ring = u.ring
        down = LaurentSeries(ring, {1: -ring.one(), 0: u})
        up = LaurentSeries(ring, {1: ring.one(), 0: v})
        return down * up
    if isinstance(normal, SixDimNormal):
        ring = ring_cpn(3)
        (w,) = nonzero
        return LaurentSeries(ring, {1: ring.scalar(w), 0: normal.c1 * ring.gen(0)})
    raise TypeError("unknown normal bundle data: %r" % (normal,))


def contribution_series_oracle(weights, normal):
    """Independent route: invert the equivariant Euler class, take t^-4.

    Must agree with :func:`contribution` everywhere. Kept free of any
    reference to the closed forms.
    """
    e = equivariant_euler(weights, normal)
    inv = e.inverse()
    return inv.coefficient(-4).integrate()


# ----------------------------------------------------------------------
# the localization sum
# ----------------------------------------------------------------------

def abbv_terms(components):
    """Closed-form contribution of each component, in input order."""
    return tuple(contribution(c.weights, c.normal) for c in components)


def abbv_sum(components):
    """Sum of all localization contributions; zero for realizable data."""
    return sum(abbv_terms(components), Fraction(0))
