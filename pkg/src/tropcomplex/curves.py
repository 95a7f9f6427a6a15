"""Curves on the 1-skeleton, germ spaces, balancing, and intersections.

A curve is an integer multiplicity per edge.  Balancing is tested against a
finite basis of the linear-germ space at each support vertex.  The
divisor-curve product restricts local defining germs of the divisor to the
curve and sums outgoing slopes; its degree is a linear-equivalence
invariant.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .delta import LinkElement
from .errors import (DiscontinuousInput, IndexMismatch, NotBalanced,
                     NotQCartierNearCurve, UnsupportedDimension)
from .linalg import kernel_basis
from .structure import TropicalStructure
from .divisors import Divisor, local_cartier_test


@dataclass(frozen=True)
class Curve:
    multiplicities: tuple  # sorted (edge index, multiplicity), mult != 0

    @staticmethod
    def on_edges(coeffs):
        items = tuple(sorted((int(e), int(m)) for e, m in dict(coeffs).items()
                             if int(m) != 0))
        return Curve(items)

    def mult(self, e):
        for idx, m in self.multiplicities:
            if idx == e:
                return m
        return 0

    def support_vertices(self, X):
        out = set()
        for e, _ in self.multiplicities:
            out.add(X.faces[1][e][0])
            out.add(X.faces[1][e][1])
        return sorted(out)

    def is_effective(self):
        return all(m > 0 for _, m in self.multiplicities)


@dataclass(frozen=True)
class GermSpace:
    vertex: int
    coords: tuple  # link(v)_0 elements; coordinate 0 is the vertex itself
    basis: tuple  # rational vectors of length 1 + len(coords)


def _edge_coord_from(X, v, coface, slot_v, slot_w):
    """Germ coordinate at v for the vertex at slot_w of a coface containing
    v at slot_v: the edge face through both slots, as a link element of v."""
    lo, hi = min(slot_v, slot_w), max(slot_v, slot_w)
    edge = X.face_at(coface, (lo, hi))
    pos = 0 if slot_v < slot_w else 1
    return LinkElement((0, v), edge, (pos,))


def germ_space(T: TropicalStructure, v):
    """Exact rational basis of all linear germs at vertex v.

    Coordinates: value at v, then one value per 0-dimensional link element
    (the opposite vertex of each edge incidence).  One relation per ridge
    incidence at v: the opposite-vertex sum equals the alpha-weighted vertex
    sum of the ridge.
    """
    X = T.complex
    coords = X.link0((0, v))
    index = {t: i + 1 for i, t in enumerate(coords)}
    ncols = 1 + len(coords)
    rows = []
    if X.n == 1:
        row = [Fraction(0)] * ncols
        row[0] = Fraction(-T.alpha_at(v, 0))
        for t in coords:
            row[index[t]] += 1
        rows.append(row)
    elif X.n >= 2:
        link = X.link((0, v))
        ridge_incidences = link[X.n - 2] if len(link) >= X.n - 1 else ()
        for rho in ridge_incidences:
            ridge = rho.coface
            (slot_v,) = rho.slots
            row = [Fraction(0)] * ncols
            for t in X.link0(ridge):
                slot_in_facet = t.slots[slot_v]
                opp = X.opp_slot(t)
                row[index[_edge_coord_from(X, v, t.coface, slot_in_facet, opp)]] += 1
            for slot in range(X.n):
                a = T.alpha_at(ridge[1], slot)
                if slot == slot_v:
                    row[0] -= a
                else:
                    row[index[_edge_coord_from(X, v, ridge, slot_v, slot)]] -= a
            rows.append(row)
    basis = kernel_basis(rows, ncols) if rows else kernel_basis([], ncols)
    return GermSpace(v, coords, tuple(basis))


@dataclass(frozen=True)
class BalanceResult:
    balanced: bool
    certificate: tuple | None  # (vertex, germ vector) violating the condition


def is_balanced(T: TropicalStructure, C: Curve):
    """Balanced iff for each support vertex v and each basis germ, the
    multiplicity-weighted sum of slope differences vanishes."""
    X = T.complex
    for v in C.support_vertices(X):
        space = germ_space(T, v)
        for germ in space.basis:
            total = Fraction(0)
            for i, t in enumerate(space.coords):
                m = C.mult(t.coface[1])
                if m:
                    total += m * (germ[i + 1] - germ[0])
            if total != 0:
                return BalanceResult(False, (v, germ))
    return BalanceResult(True, None)


# ---------------------------------------------------------------------------
# PL functions on curves and their divisors


@dataclass(frozen=True)
class BreakpointFunction:
    """Per supported edge: ((position, value), ...) with rational positions
    strictly increasing from 0 to 1 in the lattice-length metric."""

    pieces: tuple  # sorted (edge index, ((pos, val), ...)) pairs

    @staticmethod
    def on_edges(data):
        out = []
        for e, pts in sorted(dict(data).items()):
            pts = tuple((Fraction(p), Fraction(val)) for p, val in pts)
            out.append((int(e), pts))
        return BreakpointFunction(tuple(out))

    def edge_data(self, e):
        for idx, pts in self.pieces:
            if idx == e:
                return pts
        return None


@dataclass(frozen=True)
class PointSum:
    """Formal rational sum of vertices and interior edge points."""

    entries: tuple  # (("v", i) | ("e", i, pos), coeff), sorted, coeff != 0

    @property
    def degree(self):
        return sum(c for _, c in self.entries)

    @staticmethod
    def of(mapping):
        def key(loc):
            return (0, loc[1], Fraction(0)) if loc[0] == "v" else (1, loc[1], loc[2])

        items = tuple(
            (loc, c) for loc, c in sorted(mapping.items(), key=lambda kv: key(kv[0]))
            if c != 0
        )
        return PointSum(items)


def _validate_breakpoints(X, C: Curve, f: BreakpointFunction):
    vertex_values = {}
    for e, _ in C.multiplicities:
        pts = f.edge_data(e)
        if pts is None:
            raise DiscontinuousInput("no values on edge %d" % e)
        if len(pts) < 2 or pts[0][0] != 0 or pts[-1][0] != 1:
            raise DiscontinuousInput("edge %d must span [0, 1]" % e)
        for (p1, _), (p2, _) in zip(pts, pts[1:]):
            if p2 <= p1:
                raise DiscontinuousInput("edge %d has unordered breakpoints" % e)
        # slot 0 sits at position 0, slot 1 at position 1
        for v, val in ((X.faces[1][e][1], pts[0][1]),
                       (X.faces[1][e][0], pts[-1][1])):
            if v in vertex_values and vertex_values[v] != val:
                raise DiscontinuousInput(
                    "conflicting values at vertex %d" % v
                )
            vertex_values.setdefault(v, val)
    return vertex_values


def restrict_divisor(T: TropicalStructure, C: Curve, f: BreakpointFunction):
    """Divisor of a PL function on the support of C: at each point, the sum
    of outgoing slopes weighted by edge multiplicity."""
    X = T.complex
    _validate_breakpoints(X, C, f)
    coeffs = {}
    for e, m in C.multiplicities:
        pts = f.edge_data(e)
        v0 = X.faces[1][e][1]  # position 0
        v1 = X.faces[1][e][0]  # position 1
        slopes = [
            (val2 - val1) / (p2 - p1)
            for (p1, val1), (p2, val2) in zip(pts, pts[1:])
        ]
        loc0 = ("v", v0)
        coeffs[loc0] = coeffs.get(loc0, Fraction(0)) + m * slopes[0]
        loc1 = ("v", v1)
        coeffs[loc1] = coeffs.get(loc1, Fraction(0)) - m * slopes[-1]
        for i in range(1, len(pts) - 1):
            loc = ("e", e, pts[i][0])
            jump = m * (slopes[i] - slopes[i - 1])
            coeffs[loc] = coeffs.get(loc, Fraction(0)) + jump
    return PointSum.of(coeffs)


# ---------------------------------------------------------------------------
# Divisor-curve intersection


@dataclass(frozen=True)
class IntersectResult:
    point_sum: PointSum
    degree: Fraction


def intersect_degree(T: TropicalStructure, D: Divisor, C: Curve,
                     germ_shifts=None):
    """Intersection product of a ridge-supported divisor with a balanced
    curve, assembled from local defining germs.

    Implemented for n in {1, 2}: the covering by stars of (n-2)-simplices
    and facet interiors reaches every curve vertex only in those dimensions.
    germ_shifts optionally adds a kernel germ at chosen vertices; the result
    is germ-choice independent, which tests exercise through this hook.
    """
    X = T.complex
    if D.facet_pieces:
        raise IndexMismatch("intersection needs a ridge-supported divisor")
    if X.n not in (1, 2):
        raise UnsupportedDimension(
            "intersection products are implemented for n = 1 and n = 2"
        )
    balance = is_balanced(T, C)
    if not balance.balanced:
        raise NotBalanced("curve unbalanced at vertex %d" % balance.certificate[0])
    coeffs = {}
    for v in C.support_vertices(X):
        if X.n == 1:
            deg = X.degree((0, v))
            c = D.coeff(v)
            slope = Fraction(c, deg) if deg else Fraction(0)
            total = Fraction(0)
            for t in X.link0((0, v)):
                m = C.mult(t.coface[1])
                if m:
                    total += m * slope
        else:
            verdict = local_cartier_test(T, D, (0, v))
            if verdict.status == "neither":
                raise NotQCartierNearCurve(
                    "divisor not Q-Cartier at vertex %d" % v
                )
            slopes = list(verdict.germ.slopes)
            if germ_shifts and v in germ_shifts:
                shift = germ_shifts[v]
                if len(shift) != len(slopes):
                    raise IndexMismatch("germ shift length at vertex %d" % v)
                slopes = [a + Fraction(b) for a, b in zip(slopes, shift)]
            total = Fraction(0)
            for i, t in enumerate(verdict.germ.elements):
                m = C.mult(t.coface[1])
                if m:
                    total += m * slopes[i]
        if total:
            coeffs[("v", v)] = total
    ps = PointSum.of(coeffs)
    return IntersectResult(ps, ps.degree)
