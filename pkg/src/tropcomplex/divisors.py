"""Divisors of representable PL functions and their local/global tests.

The representable classes are: global simplexwise-linear vertex functions,
single-facet two-piece functions max{lambda . x - c, 0}, and local germs at
(n-2)-simplices vanishing on the base.  Divisors are ridge-supported integer
sums plus optional facet pieces.  All verdicts are exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import DegenerateCut, IndexMismatch, WrongDimension
from .linalg import (invariant_factors, rref, smith_normal_form, solve,
                     solve_integral)
from .structure import TropicalStructure, local_matrix


@dataclass(frozen=True)
class FacetPiece:
    facet: int
    normal: tuple  # primitive integral, simplex coordinates
    offset: Fraction
    multiplicity: int


@dataclass(frozen=True)
class Divisor:
    ridge_part: tuple  # sorted (ridge index, coefficient) pairs, coeff != 0
    facet_pieces: tuple = ()

    @staticmethod
    def on_ridges(coeffs):
        items = tuple(sorted((int(r), int(c)) for r, c in dict(coeffs).items()
                             if int(c) != 0))
        return Divisor(items)

    def coeff(self, r):
        for idx, c in self.ridge_part:
            if idx == r:
                return c
        return 0

    def __add__(self, other):
        out = dict(self.ridge_part)
        for r, c in other.ridge_part:
            out[r] = out.get(r, 0) + c
        return Divisor(
            tuple(sorted((r, c) for r, c in out.items() if c != 0)),
            self.facet_pieces + other.facet_pieces,
        )

    def __neg__(self):
        return Divisor(
            tuple((r, -c) for r, c in self.ridge_part),
            tuple(FacetPiece(p.facet, p.normal, p.offset, -p.multiplicity)
                  for p in self.facet_pieces),
        )

    def __sub__(self, other):
        return self + (-other)


@dataclass(frozen=True)
class TwoPieceFunction:
    """max{normal . x - offset, 0} on one facet, in simplex coordinates
    (vertex slot 0 at the origin, slot i at e_i)."""

    facet: int
    normal: tuple
    offset: Fraction


@dataclass(frozen=True)
class LocalGerm:
    base: tuple  # the (n-2)-simplex
    elements: tuple  # 0-dimensional link elements, enumeration order
    slopes: tuple  # one rational per element; the germ vanishes on the base


def chip_matrix(T: TropicalStructure):
    """Integer matrix L with (L phi)[r] = divisor coefficient of phi at r."""
    X = T.complex
    if X.n == 0:
        return []
    rdim = X.n - 1
    rows = []
    for r in range(X.counts[rdim]):
        row = [0] * X.counts[0]
        for t in X.link0((rdim, r)):
            row[X.opp_vertex(t)] += 1
        for slot in range(rdim + 1):
            row[X.vertex_at((rdim, r), slot)] -= T.alpha_at(r, slot)
        rows.append(row)
    return rows


def div_vertex_function(T: TropicalStructure, phi):
    """Divisor of a global simplexwise-linear function given by vertex values."""
    X = T.complex
    if len(phi) != X.counts[0]:
        raise IndexMismatch(
            "expected %d vertex values, got %d" % (X.counts[0], len(phi))
        )
    coeffs = {}
    for r, row in enumerate(chip_matrix(T)):
        c = sum(a * b for a, b in zip(row, phi))
        if c:
            coeffs[r] = c
    return Divisor.on_ridges(coeffs)


def ridge_multiplicity(T: TropicalStructure, r, base_values, opp_values):
    """Divisor coefficient at one ridge of a function linear on each simplex
    of the neighborhood of r.

    base_values: one rational per vertex slot of the ridge's parametrizing
    simplex; opp_values: one per 0-dimensional link element, in enumeration
    order.
    """
    X = T.complex
    rdim = X.n - 1
    ridge = (rdim, r)
    elems = X.link0(ridge)
    if len(base_values) != rdim + 1:
        raise IndexMismatch(
            "expected %d base values, got %d" % (rdim + 1, len(base_values))
        )
    if len(opp_values) != len(elems):
        raise IndexMismatch(
            "expected %d opposite values, got %d" % (len(elems), len(opp_values))
        )
    total = sum(Fraction(v) for v in opp_values)
    for slot in range(rdim + 1):
        total -= T.alpha_at(r, slot) * Fraction(base_values[slot])
    return total


def div_two_piece(T: TropicalStructure, f: TwoPieceFunction):
    """Divisor of max{normal . x - offset, 0} on a single facet.

    The cut must meet the closed facet in dimension n-1: either vertex
    values on both strict sides of the cut plane, or at least n vertices on
    it.  The recorded piece has a primitive normal; the extracted gcd is the
    multiplicity (lattice distance between the two slopes).
    """
    X = T.complex
    n = X.n
    if f.facet >= X.counts[n] or len(f.normal) != n:
        raise IndexMismatch("facet %d / normal length %d" % (f.facet, len(f.normal)))
    lam = tuple(int(x) for x in f.normal)
    c = Fraction(f.offset)
    if all(x == 0 for x in lam):
        raise DegenerateCut("zero normal")
    values = [Fraction(0)] + [Fraction(x) for x in lam]  # vertex values of lam . x
    below = sum(1 for v in values if v < c)
    above = sum(1 for v in values if v > c)
    on = sum(1 for v in values if v == c)
    if not ((below > 0 and above > 0) or on >= n):
        raise DegenerateCut(
            "cut misses the facet: %d below, %d on, %d above" % (below, on, above)
        )
    g = 0
    for x in lam:
        g = gcd(g, abs(x))
    piece = FacetPiece(f.facet, tuple(x // g for x in lam), c / g, g)
    return Divisor((), (piece,))


# ---------------------------------------------------------------------------
# Local Cartier tests


@dataclass(frozen=True)
class CartierVerdict:
    status: str  # "cartier" | "qcartier" | "neither"
    germ: LocalGerm | None


def local_cartier_test(T: TropicalStructure, D: Divisor, q):
    """Solve M_q x = [D]_q for a germ vanishing on q.

    A rational solution makes D Q-Cartier at q; an integral one (decided via
    Smith normal form over the whole solution set) makes it Cartier within
    the scoped function class.
    """
    m = local_matrix(T, q)
    rhs = [D.coeff(t.coface[1]) for t in m.elements]
    rational = solve([list(row) for row in m.matrix], rhs)
    if rational is None:
        return CartierVerdict("neither", None)
    integral = solve_integral([list(row) for row in m.matrix], rhs)
    if integral is not None:
        slopes = tuple(Fraction(x) for x in integral)
        return CartierVerdict("cartier", LocalGerm(q, m.elements, slopes))
    return CartierVerdict("qcartier", LocalGerm(q, m.elements, tuple(rational)))


def weil_test(T: TropicalStructure, D: Divisor, jobs=None):
    """Q-Cartier at every (n-2)-simplex; vacuously true for n <= 1."""
    X = T.complex
    if X.n < 2:
        return True, ()
    qs = list(range(X.counts[X.n - 2]))

    def work(qi):
        return qi, local_cartier_test(T, D, (X.n - 2, qi)).status

    if jobs and jobs > 1:
        from concurrent.futures import ThreadPoolExecutor

        with ThreadPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(work, qs))
    else:
        results = [work(qi) for qi in qs]
    failures = tuple(qi for qi, status in sorted(results) if status == "neither")
    return not failures, failures


# ---------------------------------------------------------------------------
# Class group and linear-equivalence witnesses


@dataclass(frozen=True)
class ClassGroupPresentation:
    free_rank: int
    invariant_factors: tuple  # factors > 1 only
    matrix: tuple  # the chip-firing matrix, ridges x vertices
    snf: tuple  # (S, U, V) with U . matrix . V = S

    def class_residues(self, coeffs):
        """Coordinates of a ridge-supported divisor class: (torsion residues,
        free components) in the Smith basis."""
        s, u, _ = self.snf
        m = len(s)
        n = len(s[0]) if s else 0
        rankl = sum(1 for i in range(min(m, n)) if s[i][i] != 0)
        y = [sum(u[i][k] * coeffs[k] for k in range(m)) for i in range(m)]
        torsion = tuple(y[i] % s[i][i] for i in range(rankl) if s[i][i] > 1)
        free = tuple(y[i] for i in range(rankl, m))
        return torsion, free


def class_group(T: TropicalStructure):
    """Smith presentation of Z^ridges modulo divisors of vertex functions."""
    X = T.complex
    l = chip_matrix(T)
    nr = len(l)
    if nr == 0:
        return ClassGroupPresentation(0, (), (), ((), (), ()))
    s, u, v = smith_normal_form(l)
    factors = invariant_factors(l)
    free_rank = nr - len(factors)
    return ClassGroupPresentation(
        free_rank,
        tuple(f for f in factors if f > 1),
        tuple(tuple(row) for row in l),
        (tuple(tuple(r) for r in s), tuple(tuple(r) for r in u),
         tuple(tuple(r) for r in v)),
    )


@dataclass(frozen=True)
class WitnessResult:
    phi: tuple | None  # integer vertex values, minimum 0
    certificate: dict | None  # set when no witness exists


def lin_equiv_witness(T: TropicalStructure, D: Divisor, Dp: Divisor):
    """Integral phi with div(phi) = D - D', or a non-existence certificate.

    The witness is normalized to have minimum value 0.  The certificate
    gives the class of D - D' in Smith coordinates: kind "torsion" when the
    difference is a nonzero torsion class, "non-membership" otherwise.
    """
    X = T.complex
    diff = D - Dp
    if diff.facet_pieces:
        raise IndexMismatch("witness queries need ridge-supported divisors")
    l = chip_matrix(T)
    b = [0] * len(l)
    for r, c in diff.ridge_part:
        b[r] = c
    phi = solve_integral(l, b)
    if phi is not None:
        lo = min(phi)
        return WitnessResult(tuple(x - lo for x in phi), None)
    rational = solve([[Fraction(x) for x in row] for row in l],
                     [Fraction(x) for x in b])
    pres = class_group(T)
    torsion, free = pres.class_residues(b)
    kind = "torsion" if rational is not None else "non-membership"
    return WitnessResult(None, {
        "kind": kind,
        "torsion_residues": list(torsion),
        "free_residues": list(free),
    })
