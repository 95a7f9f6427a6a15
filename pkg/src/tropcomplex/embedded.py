"""Embedded unimodular subdivisions in R^N and their abstract imports.

Vertices live in Z^{N+1} at height 1, ray generators at height 0.  Bounded
cells are unimodular simplices closed under faces; unbounded cells are
simplicial vertex-set/ray-set pairs.  Sheet data duplicates bounded cells
into an abstract DeltaComplex; structure constants come from the weight-1
balancing relation.  A lattice-distance weight oracle cross-validates
push-forwards of divisors of PL functions; it deliberately shares no code
with the link/chip-firing machinery.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .delta import DeltaComplex
from .errors import (InconsistentSheets, IndexMismatch, NoSolution,
                     NonUnimodular, NotConstantOnUnbounded,
                     SimplicialIdentityViolation)
from .linalg import feasible_strict, invariant_factors, primitive_integer, solve
from .structure import TropicalStructure
from .divisors import Divisor, div_vertex_function


@dataclass(frozen=True)
class UnboundedCell:
    vertices: tuple  # sorted vertex indices
    rays: tuple  # sorted primitive integer vectors in Z^N

    @property
    def dim(self):
        return len(self.vertices) + len(self.rays) - 1


@dataclass(frozen=True)
class BalancingSolution:
    ridge: int
    coefficients: tuple  # integers c_i over the ridge's vertices
    d: int  # sheet-weighted count of adjacent bounded facets


class EmbeddedComplex:
    def __init__(self, N, vertices, bounded, unbounded, sheet_counts=None,
                 sheet_maps=None):
        self.N = N
        self.vertices = tuple(tuple(int(x) for x in v) for v in vertices)
        self.bounded = tuple(
            tuple(tuple(sorted(int(i) for i in cell)) for cell in level)
            for level in bounded
        )
        self.unbounded = tuple(unbounded)
        self.sheet_counts = dict(sheet_counts or {})
        self.sheet_maps = dict(sheet_maps or {})
        self._validate()

    # -- validation ----------------------------------------------------------

    def _validate(self):
        for v in self.vertices:
            if len(v) != self.N + 1 or v[-1] != 1:
                raise IndexMismatch(
                    "vertices must lie in Z^%d at height 1" % (self.N + 1)
                )
        for k, level in enumerate(self.bounded):
            for cell in level:
                if len(cell) != k + 1 or len(set(cell)) != k + 1:
                    raise IndexMismatch("bounded %d-cell needs %d distinct vertices"
                                        % (k, k + 1))
                if not self._unimodular([self.vertices[i] for i in cell]):
                    raise NonUnimodular("bounded cell %s" % (cell,))
                if k > 0:
                    for drop in range(k + 1):
                        face = cell[:drop] + cell[drop + 1:]
                        if face not in self.bounded[k - 1]:
                            raise IndexMismatch(
                                "missing face %s of bounded cell %s"
                                % (face, cell)
                            )
        seen = set()
        for cell in self.unbounded:
            if not cell.rays or not cell.vertices:
                raise IndexMismatch("unbounded cells need vertices and rays")
            for r in cell.rays:
                if len(r) != self.N or all(x == 0 for x in r):
                    raise IndexMismatch("bad ray %s" % (r,))
                g = 0
                for x in r:
                    g = gcd(g, abs(x))
                if g != 1:
                    raise IndexMismatch("ray %s not primitive" % (r,))
            vecs = [self.vertices[i] for i in cell.vertices]
            vecs += [tuple(r) + (0,) for r in cell.rays]
            if not self._unimodular(vecs):
                raise NonUnimodular("unbounded cell %s" % (cell,))
            key = (cell.vertices, cell.rays)
            if key in seen:
                raise IndexMismatch("duplicate unbounded cell %s" % (cell,))
            seen.add(key)
            # face closure: drop one ray, or one vertex when several remain
            for i in range(len(cell.rays)):
                rest = cell.rays[:i] + cell.rays[i + 1:]
                if rest:
                    if self._find_unbounded(cell.vertices, rest) is None:
                        raise IndexMismatch(
                            "missing unbounded face of %s" % (cell,)
                        )
                else:
                    k = len(cell.vertices) - 1
                    if cell.vertices not in self.bounded[k]:
                        raise IndexMismatch(
                            "missing bounded face %s" % (cell.vertices,)
                        )
            if len(cell.vertices) > 1:
                for i in range(len(cell.vertices)):
                    rest = cell.vertices[:i] + cell.vertices[i + 1:]
                    if self._find_unbounded(rest, cell.rays) is None:
                        raise IndexMismatch(
                            "missing unbounded face of %s" % (cell,)
                        )
        for (k, idx), count in self.sheet_counts.items():
            if count < 1:
                raise InconsistentSheets("sheet counts must be positive")
            if k >= len(self.bounded) or idx >= len(self.bounded[k]):
                raise InconsistentSheets("sheet count for missing cell")

    @staticmethod
    def _unimodular(vectors):
        facs = invariant_factors([list(v) for v in vectors])
        return len(facs) == len(vectors) and all(f == 1 for f in facs)

    # -- queries -------------------------------------------------------------

    @property
    def n(self):
        dims = [k for k, level in enumerate(self.bounded) if level]
        for cell in self.unbounded:
            dims.append(cell.dim)
        return max(dims)

    def bounded_dim(self):
        return max(k for k, level in enumerate(self.bounded) if level)

    def sheets(self, k, idx):
        return self.sheet_counts.get((k, idx), 1)

    def sheet_map(self, k, idx, slot):
        default = tuple(0 for _ in range(self.sheets(k, idx)))
        return self.sheet_maps.get((k, idx, slot), default)

    def _find_unbounded(self, verts, rays):
        verts = tuple(sorted(verts))
        rays = tuple(sorted(rays))
        for i, cell in enumerate(self.unbounded):
            if cell.vertices == verts and cell.rays == rays:
                return i
        return None

    def vertex_vector(self, i):
        return self.vertices[i]

    def ray_vector(self, r):
        return tuple(r) + (0,)


def load_embedded(data):
    N = int(data["N"])
    bounded = [
        [tuple(int(i) for i in cell) for cell in level]
        for level in data.get("bounded_cells", [])
    ]
    unbounded = []
    for cell in data.get("unbounded_cells", []):
        unbounded.append(UnboundedCell(
            tuple(sorted(int(i) for i in cell["vertices"])),
            tuple(sorted(tuple(int(x) for x in r) for r in cell.get("rays", []))),
        ))
    sheets = data.get("sheets", {})
    counts = {}
    for k, idx, count in sheets.get("counts", []):
        counts[(int(k), int(idx))] = int(count)
    maps = {}
    for k, idx, slot, images in sheets.get("face_sheet_maps", []):
        maps[(int(k), int(idx), int(slot))] = tuple(int(x) for x in images)
    return EmbeddedComplex(N, data["vertices"], bounded, unbounded, counts, maps)


# ---------------------------------------------------------------------------
# Sheet duplication


def duplicate_sheets(E: EmbeddedComplex):
    """Abstract complex with one simplex per (bounded cell, sheet).

    Returns (DeltaComplex, pi) where pi[k][i] is the bounded-cell index of
    the i-th k-simplex.
    """
    nb = E.bounded_dim()
    simplices = {}
    pi = []
    for k in range(nb + 1):
        level = []
        for idx, _ in enumerate(E.bounded[k]):
            for sheet in range(E.sheets(k, idx)):
                simplices[(k, idx, sheet)] = len(level)
                level.append((idx, sheet))
        pi.append([idx for idx, _ in level])
    counts = [len([1 for idx, _ in enumerate(E.bounded[k])
                   for _ in range(E.sheets(k, idx))]) for k in range(nb + 1)]
    faces = {}
    for k in range(1, nb + 1):
        rows = []
        for idx, cell in enumerate(E.bounded[k]):
            for sheet in range(E.sheets(k, idx)):
                row = []
                for slot in range(k + 1):
                    face_cell = cell[:slot] + cell[slot + 1:]
                    fidx = E.bounded[k - 1].index(face_cell)
                    images = E.sheet_map(k, idx, slot)
                    if len(images) != E.sheets(k, idx):
                        raise InconsistentSheets(
                            "sheet map of cell (%d,%d) slot %d has length %d"
                            % (k, idx, slot, len(images))
                        )
                    fsheet = images[sheet]
                    if not 0 <= fsheet < E.sheets(k - 1, fidx):
                        raise InconsistentSheets(
                            "cell (%d,%d) slot %d sends sheet %d to missing "
                            "sheet %d of its face" % (k, idx, slot, sheet, fsheet)
                        )
                    row.append(simplices[(k - 1, fidx, fsheet)])
                rows.append(row)
        faces[k] = rows
    try:
        X = DeltaComplex(nb, counts, faces)
    except SimplicialIdentityViolation as exc:
        raise InconsistentSheets(
            "sheet maps do not commute with face relations: %s" % exc
        ) from exc
    return X, pi


# ---------------------------------------------------------------------------
# Structure constants from balancing


def alpha_from_balancing(E: EmbeddedComplex, ridge_index):
    """Solve the weight-1 balancing relation at a bounded (n-1)-cell.

    phi(w_1) + ... + phi(w_d) + u_1 + ... + u_m = sum c_i phi(v_i), where the
    w_i run over extra vertices of adjacent bounded facets counted with
    sheets and the u_j over rays of adjacent unbounded facets.
    """
    n = E.n
    if n - 1 >= len(E.bounded) or ridge_index >= len(E.bounded[n - 1]):
        raise IndexMismatch("no bounded (n-1)-cell with index %d" % ridge_index)
    ridge = E.bounded[n - 1][ridge_index]
    if not E._unimodular([E.vertices[i] for i in ridge]):
        raise NonUnimodular("ridge cone %s" % (ridge,))
    rhs = [0] * (E.N + 1)
    d = 0
    if n < len(E.bounded):
        for fidx, cell in enumerate(E.bounded[n]):
            if set(ridge) <= set(cell):
                (extra,) = set(cell) - set(ridge)
                mult = E.sheets(n, fidx)
                d += mult
                vec = E.vertex_vector(extra)
                rhs = [a + mult * b for a, b in zip(rhs, vec)]
    for cell in E.unbounded:
        if cell.dim == n and set(ridge) <= set(cell.vertices):
            for r in cell.rays:
                vec = E.ray_vector(r)
                rhs = [a + b for a, b in zip(rhs, vec)]
    rows = [[Fraction(E.vertices[v][j]) for v in ridge] for j in range(E.N + 1)]
    sol = solve(rows, [Fraction(x) for x in rhs])
    if sol is None:
        raise NoSolution("balancing relation inconsistent at ridge %s" % (ridge,))
    if any(x.denominator != 1 for x in sol):
        raise NoSolution("balancing coefficients not integral at ridge %s"
                         % (ridge,))
    coeffs = tuple(int(x) for x in sol)
    assert sum(coeffs) == d
    return BalancingSolution(ridge_index, coeffs, d)


def derive_structure(E: EmbeddedComplex):
    """Duplicated complex with alpha from balancing on every ridge.

    Each sheet of a ridge cell receives the same coefficients, indexed by
    the cell's vertex order.
    """
    n = E.n
    if E.bounded_dim() != n:
        raise NoSolution("no bounded cells of top dimension %d" % n)
    X, pi = duplicate_sheets(E)
    solutions = {}
    alpha = {}
    if n >= 1:
        for ridge_index in range(len(E.bounded[n - 1])):
            solutions[ridge_index] = alpha_from_balancing(E, ridge_index)
        for dup_idx, cell_idx in enumerate(pi[n - 1]):
            sol = solutions[cell_idx]
            for slot, c in enumerate(sol.coefficients):
                alpha[(dup_idx, slot)] = c
    return X, pi, TropicalStructure(X, alpha), solutions


# ---------------------------------------------------------------------------
# Robustness


@dataclass(frozen=True)
class RobustResult:
    robust: bool
    certificate: tuple | None  # primitive integer functional, or None
    maximal_unbounded_cell: int | None  # index into E.unbounded, or None


def robustness_check(E: EmbeddedComplex, k, idx):
    """Strict-feasibility test at a bounded k-cell.

    Robust iff some rational functional vanishes on the cell's direction
    space and is strictly positive on every ray of the unbounded (k+1)-cells
    containing it, decided by exact Fourier-Motzkin elimination.
    """
    cell = E.bounded[k][idx]
    base = E.vertices[cell[0]][:-1]
    dirs = [tuple(a - b for a, b in zip(E.vertices[v][:-1], base))
            for v in cell[1:]]
    rays = []
    adjacent = []
    for ci, u in enumerate(E.unbounded):
        if set(cell) <= set(u.vertices):
            adjacent.append(ci)
            if u.dim == k + 1:
                rays.extend(u.rays)
    if rays:
        y = feasible_strict(dirs, rays, E.N)
        robust = y is not None
        cert = primitive_integer(y) if robust else None
    else:
        robust = True
        cert = tuple(0 for _ in range(E.N))
    maximal = None
    cells_k1 = [ci for ci in adjacent if E.unbounded[ci].dim == k + 1]
    best = None
    for ci in adjacent:
        u = E.unbounded[ci]
        ok = all(
            set(E.unbounded[a].vertices) <= set(u.vertices)
            and set(E.unbounded[a].rays) <= set(u.rays)
            for a in cells_k1
        )
        if ok:
            cand = (u.dim, -ci)
            if best is None or cand > best:
                best = cand
                maximal = ci
    if robust and rays:
        for r in rays:
            assert sum(a * b for a, b in zip(cert, r)) > 0
        for v in dirs:
            assert sum(a * b for a, b in zip(cert, v)) == 0
    return RobustResult(robust, cert, maximal)


# ---------------------------------------------------------------------------
# Push-forward and the weight oracle


@dataclass(frozen=True)
class PushResult:
    pushed: dict  # bounded ridge-cell index -> integer
    oracle: dict | None  # same keys, from the lattice-distance computation
    verdict: str | None  # "pass" | "fail" when f was supplied


def _ridge_environment(E: EmbeddedComplex, ridge):
    """Adjacent facets of a bounded ridge: ('b', extra vertex, sheets) and
    ('u', ray, 1) entries."""
    n = E.bounded_dim()
    out = []
    for fidx, cell in enumerate(E.bounded[n]):
        if set(ridge) <= set(cell):
            (extra,) = set(cell) - set(ridge)
            out.append(("b", extra, E.sheets(n, fidx)))
    for cell in E.unbounded:
        if cell.dim == n and set(ridge) <= set(cell.vertices):
            for r in cell.rays:
                out.append(("u", r, 1))
    return out


def embedded_weights(E: EmbeddedComplex, f):
    """Divisor weights of a simplexwise-linear f with zero slope along rays,
    computed per bounded ridge by lattice distances between facet slopes.

    The slope difference across the ridge is evaluated at the unit point of
    each adjacent facet (the extra vertex, or base + ray) after subtracting
    an affine gauge h matching f on the ridge and on the first facet.
    """
    n = E.bounded_dim()
    weights = {}
    for ridx, ridge in enumerate(E.bounded[n - 1]):
        env = _ridge_environment(E, ridge)
        rows = [list(E.vertex_vector(v)) for v in ridge]
        rhs = [Fraction(f[v]) for v in ridge]
        kind, data, _ = env[0]
        if kind == "b":
            rows.append(list(E.vertex_vector(data)))
            rhs.append(Fraction(f[data]))
        else:
            rows.append(list(E.ray_vector(data)))
            rhs.append(Fraction(0))
        h = solve([[Fraction(x) for x in row] for row in rows], rhs)
        assert h is not None
        total = Fraction(0)
        for kind, data, mult in env:
            if kind == "b":
                vec = E.vertex_vector(data)
                total += mult * (Fraction(f[data])
                                 - sum(a * b for a, b in zip(h, vec)))
            else:
                vec = E.ray_vector(data)
                total += mult * (-sum(a * b for a, b in zip(h, vec)))
        assert total.denominator == 1
        weights[ridx] = int(total)
    return weights


def push_forward_and_compare(E: EmbeddedComplex, D: Divisor = None, f=None,
                             f_ray_slopes=None):
    """Push multiplicities along the duplication map; with f supplied,
    compare the push-forward of div(f o pi) against the weight oracle."""
    if f_ray_slopes:
        for ray, slope in dict(f_ray_slopes).items():
            if slope != 0:
                raise NotConstantOnUnbounded(
                    "nonzero slope along ray %s" % (ray,)
                )
    n = E.bounded_dim()
    n_ridges = len(E.bounded[n - 1]) if n >= 1 else 0
    if f is not None:
        if len(f) != len(E.vertices):
            raise IndexMismatch(
                "expected %d vertex values, got %d" % (len(E.vertices), len(f))
            )
        X, pi, T, _ = derive_structure(E)
        fpi = [int(f[E.bounded[0][cell][0]]) for cell in pi[0]]
        dv = div_vertex_function(T, fpi)
        pushed = {r: 0 for r in range(n_ridges)}
        for dup_idx, cell_idx in enumerate(pi[n - 1]):
            pushed[cell_idx] += dv.coeff(dup_idx)
        oracle = embedded_weights(E, [int(x) for x in f])
        verdict = "pass" if pushed == oracle else "fail"
        return PushResult(pushed, oracle, verdict)
    if D is None:
        raise IndexMismatch("need a divisor or a vertex function")
    X, pi = duplicate_sheets(E)
    pushed = {r: 0 for r in range(n_ridges)}
    for dup_idx, cell_idx in enumerate(pi[n - 1]):
        pushed[cell_idx] += D.coeff(dup_idx)
    return PushResult(pushed, None, None)
