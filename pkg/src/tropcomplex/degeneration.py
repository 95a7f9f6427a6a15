"""Structure constants from intersection numbers on a degeneration.

Strict data lists deg(C_v . C_r) for components C_v against one-dimensional
strata C_r; non-strict data lists self-intersections of curves indexed by
codimension-two strata together with their link positions.  Both modes
recover alpha and cross-check the redundancies in the input.  Named divisors
and curves specialize to the dual complex, and claimed intersection numbers
are verified against the computed ones.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .delta import DeltaComplex
from .errors import InconsistentData, PreconditionFailed, UnknownName
from .structure import TropicalStructure, check_weak
from .divisors import Divisor, weil_test, local_cartier_test
from .curves import Curve, is_balanced, intersect_degree


@dataclass(frozen=True)
class DegenerationData:
    mode: str  # "strict" | "nonstrict"
    vertex_ridge_degrees: dict  # (vertex, ridge) -> int
    self_intersections: dict  # (codim2 cell, link position) -> int
    divisors: dict  # name -> {ridge: int}
    curves: dict  # name -> {edge: int}
    claimed: dict  # (divisor name, curve name) -> Fraction


def load_degeneration(data):
    mode = data.get("mode", "strict")
    if mode not in ("strict", "nonstrict"):
        raise InconsistentData("unknown mode %r" % (mode,))
    vr = {}
    for v, r, deg in data.get("vertex_ridge_degrees", []):
        vr[(int(v), int(r))] = int(deg)
    si = {}
    for q, t, c2 in data.get("self_intersections", []):
        si[(int(q), int(t))] = int(c2)
    divisors = {}
    for name, entries in data.get("divisors", {}).items():
        divisors[name] = {int(r): int(c) for r, c in entries}
    curves = {}
    for name, entries in data.get("curves", {}).items():
        curves[name] = {int(e): int(m) for e, m in entries}
    claimed = {}
    for dname, cname, num, den in data.get("claimed", []):
        claimed[(dname, cname)] = Fraction(int(num), int(den))
    return DegenerationData(mode, vr, si, divisors, curves, claimed)


def _derived_degrees(T: TropicalStructure, ridge):
    """deg(C_v . C_r) for every vertex v, from alpha and the link of r."""
    X = T.complex
    n = X.n
    degs = {}
    verts = X.vertices_of((n - 1, ridge))
    for slot, v in enumerate(verts):
        degs[v] = degs.get(v, 0) - T.alpha_at(ridge, slot)
    for t in X.link0((n - 1, ridge)):
        v = X.opp_vertex(t)
        degs[v] = degs.get(v, 0) + 1
    return degs


def build_structure_from_degeneration(X: DeltaComplex, data: DegenerationData):
    n = X.n
    if n < 1:
        raise InconsistentData("complex has no ridges")
    if data.mode == "strict":
        if not X.is_regular():
            raise InconsistentData(
                "strict data needs pairwise-distinct vertices on every simplex"
            )
        alpha = {}
        for r in range(X.counts[n - 1]):
            verts = X.vertices_of((n - 1, r))
            for slot, v in enumerate(verts):
                if (v, r) not in data.vertex_ridge_degrees:
                    raise InconsistentData(
                        "missing deg(C_%d . C_%d)" % (v, r), ridge=r
                    )
                alpha[(r, slot)] = -data.vertex_ridge_degrees[(v, r)]
        T = TropicalStructure(X, alpha)
        for r in range(X.counts[n - 1]):
            degs = _derived_degrees(T, r)
            on_ridge = set(X.vertices_of((n - 1, r)))
            for v in range(X.counts[0]):
                given = data.vertex_ridge_degrees.get((v, r), 0)
                if v in on_ridge:
                    continue
                if given != degs.get(v, 0):
                    raise InconsistentData(
                        "deg(C_%d . C_%d) = %d does not match the %d "
                        "transverse intersections"
                        % (v, r, given, degs.get(v, 0)), ridge=r
                    )
            total = sum(
                data.vertex_ridge_degrees.get((v, r), 0)
                for v in range(X.counts[0])
            )
            if total != 0:
                raise InconsistentData(
                    "degrees against C_%d sum to %d, not 0" % (r, total),
                    ridge=r,
                )
        return T
    # non-strict: self-intersections of curves in codimension-two strata
    if n < 2:
        raise InconsistentData(
            "non-strict data needs codimension-two cells; none exist in "
            "dimension %d" % n
        )
    alpha = {}
    for qi in range(X.counts[n - 2]):
        q = (n - 2, qi)
        elements = X.link0(q)
        index = {t: i for i, t in enumerate(elements)}
        loops = [0] * len(elements)
        link = X.link(q)
        for f in (link[1] if len(link) > 1 else ()):
            a = index[X.link_face(f, 0)]
            b = index[X.link_face(f, 1)]
            if a == b:
                loops[a] += 1
        for ti, t in enumerate(elements):
            if (qi, ti) not in data.self_intersections:
                raise InconsistentData(
                    "missing self-intersection at stratum %d position %d"
                    % (qi, ti)
                )
            c2 = data.self_intersections[(qi, ti)]
            ridge = t.coface[1]
            slot = X.opp_slot(t)
            value = -c2 + 2 * loops[ti]
            if (ridge, slot) in alpha and alpha[(ridge, slot)] != value:
                raise InconsistentData(
                    "self-intersections disagree on alpha(%d, %d)"
                    % (ridge, slot), ridge=ridge
                )
            alpha[(ridge, slot)] = value
    for r in range(X.counts[n - 1]):
        for slot in range(n):
            if (r, slot) not in alpha:
                raise InconsistentData(
                    "no self-intersection determines alpha(%d, %d)"
                    % (r, slot), ridge=r
                )
    T = TropicalStructure(X, alpha)
    weak = check_weak(X, alpha)
    if not weak.passed:
        r = weak.violations[0][0]
        raise InconsistentData(
            "degrees against C_%d do not sum to 0" % r, ridge=r
        )
    for (v, r), given in data.vertex_ridge_degrees.items():
        degs = _derived_degrees(T, r)
        if given != degs.get(v, 0):
            raise InconsistentData(
                "deg(C_%d . C_%d) = %d is inconsistent with the "
                "self-intersection data (expected %d)"
                % (v, r, given, degs.get(v, 0)), ridge=r
            )
    return T


# ---------------------------------------------------------------------------
# Specialization


@dataclass(frozen=True)
class SpecializeResult:
    kind: str  # "divisor" | "curve"
    divisor: Divisor | None
    curve: Curve | None
    verdict: str  # divisor: weil pass/fail; curve: balanced yes/warning


def specialize(T: TropicalStructure, data: DegenerationData, name):
    if name in data.divisors:
        D = Divisor.on_ridges(dict(data.divisors[name]))
        passed, _ = weil_test(T, D)
        return SpecializeResult("divisor", D, None,
                                "pass" if passed else "fail")
    if name in data.curves:
        C = Curve.on_edges(dict(data.curves[name]))
        result = is_balanced(T, C)
        return SpecializeResult("curve", None, C,
                                "balanced" if result.balanced else "warning")
    raise UnknownName("no divisor or curve named %r" % (name,))


@dataclass(frozen=True)
class VerifyResult:
    divisor: str
    curve: str
    computed: Fraction
    claimed: Fraction
    match: bool


def verify_theorem(T: TropicalStructure, data: DegenerationData, dname, cname):
    """Compare the computed intersection degree with the claimed one.

    Preconditions: the specialized divisor passes the summable test, is
    Q-Cartier near the curve, and the curve is balanced.
    """
    if dname not in data.divisors:
        raise UnknownName("no divisor named %r" % (dname,))
    if cname not in data.curves:
        raise UnknownName("no curve named %r" % (cname,))
    if (dname, cname) not in data.claimed:
        raise UnknownName(
            "no claimed intersection number for (%r, %r)" % (dname, cname)
        )
    D = Divisor.on_ridges(dict(data.divisors[dname]))
    C = Curve.on_edges(dict(data.curves[cname]))
    passed, failures = weil_test(T, D)
    if not passed:
        raise PreconditionFailed(
            "weil", "divisor %r fails the summable test" % (dname,)
        )
    balance = is_balanced(T, C)
    if not balance.balanced:
        raise PreconditionFailed(
            "unbalanced", "curve %r is not balanced" % (cname,)
        )
    if T.complex.n >= 2:
        for v in C.support_vertices(T.complex):
            verdict = local_cartier_test(T, D, (0, v))
            if verdict.status == "neither":
                raise PreconditionFailed(
                    "not-q-cartier",
                    "divisor %r is not Q-Cartier at vertex %d" % (dname, v),
                )
    computed = intersect_degree(T, D, C).degree
    claimed = data.claimed[(dname, cname)]
    return VerifyResult(dname, cname, computed, claimed, computed == claimed)
