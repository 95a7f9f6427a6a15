"""Structure constants alpha(v, r) and the tropical-complex condition.

alpha assigns an integer to every (ridge, vertex slot) pair.  The weak
constraint demands the slot sum equal deg(r) at every ridge.  The complex is
tropical when every local intersection matrix has exactly one positive
eigenvalue, decided by exact inertia computation.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from .delta import DeltaComplex
from .errors import MissingAlpha, WrongDimension
from .linalg import inertia


@dataclass(frozen=True)
class Inertia:
    positive: int
    negative: int
    zero: int

    def as_tuple(self):
        return (self.positive, self.negative, self.zero)


@dataclass(frozen=True)
class WeakReport:
    passed: bool
    violations: tuple  # (ridge index, slot sum, degree)
    isolated_ridges: tuple  # ridges lying in no facet


@dataclass(frozen=True)
class TropicalStructure:
    complex: DeltaComplex
    alpha: dict = field(compare=False)

    def alpha_at(self, ridge_index, slot):
        key = (ridge_index, slot)
        if key not in self.alpha:
            raise MissingAlpha("no alpha for ridge %d slot %d" % key)
        return self.alpha[key]

    def ridge_dim(self):
        return self.complex.n - 1


def fill_alpha(X: DeltaComplex, alpha=None):
    """Normalize an alpha map; for n = 1 a missing map is forced to deg(v)."""
    if X.n == 0:
        return {}
    if alpha is None:
        if X.n != 1:
            raise MissingAlpha("alpha required for n = %d" % X.n)
        return {(v, 0): X.degree((0, v)) for v in range(X.counts[0])}
    return {(int(r), int(s)): int(v) for (r, s), v in dict(alpha).items()}


def make_structure(X: DeltaComplex, alpha=None):
    return TropicalStructure(X, fill_alpha(X, alpha))


def check_weak(X: DeltaComplex, alpha):
    """Weak constraint report: per ridge, slot sum of alpha vs deg(r)."""
    alpha = fill_alpha(X, alpha)
    if X.n == 0:
        return WeakReport(True, (), ())
    rdim = X.n - 1
    violations = []
    isolated = []
    for r in range(X.counts[rdim]):
        total = 0
        for slot in range(rdim + 1):
            key = (r, slot)
            if key not in alpha:
                raise MissingAlpha("no alpha for ridge %d slot %d" % key)
            total += alpha[key]
        deg = X.degree((rdim, r))
        if deg == 0:
            isolated.append(r)
        if total != deg:
            violations.append((r, total, deg))
    return WeakReport(not violations, tuple(violations), tuple(isolated))


@dataclass(frozen=True)
class LocalIntersectionMatrix:
    base: tuple  # the (n-2)-simplex
    elements: tuple  # 0-dimensional link elements, enumeration order
    matrix: tuple  # tuple of tuples, symmetric integers


def local_matrix(T: TropicalStructure, q):
    """Local intersection matrix at an (n-2)-simplex q.

    Off-diagonal (t,u): number of edges between t and u in link(q).
    Diagonal (t,t): -alpha(opp(t), r(t)) + 2 * (loops at t).
    """
    X = T.complex
    if X.n < 2 or q[0] != X.n - 2:
        raise WrongDimension(
            "local matrix needs an (n-2)-simplex, got dimension %d with n=%d"
            % (q[0], X.n)
        )
    elems = X.link0(q)
    index = {t: i for i, t in enumerate(elems)}
    size = len(elems)
    m = [[0] * size for _ in range(size)]
    link = X.link(q)
    edges = link[1] if len(link) > 1 else ()
    for f in edges:
        a = index[X.link_face(f, 0)]
        b = index[X.link_face(f, 1)]
        if a == b:
            m[a][a] += 2
        else:
            m[a][b] += 1
            m[b][a] += 1
    for t, i in index.items():
        ridge = t.coface
        m[i][i] -= T.alpha_at(ridge[1], X.opp_slot(t))
    return LocalIntersectionMatrix(q, elems, tuple(tuple(row) for row in m))


@dataclass(frozen=True)
class ClassifyResult:
    verdict: str  # "tropical" or "weak-only"
    inertias: tuple  # (q index, Inertia) pairs
    weak: WeakReport


def classify(T: TropicalStructure, jobs=None):
    """Tropical iff every local matrix has exactly one positive eigenvalue.

    For n <= 1 there are no (n-2)-simplices and the verdict is tropical
    vacuously.  Per-q work is independent; jobs > 1 runs it on a thread
    pool, results are merged by q index either way.
    """
    X = T.complex
    weak = check_weak(X, T.alpha)
    if not weak.passed:
        return ClassifyResult("weak-only", (), weak)
    if X.n < 2:
        return ClassifyResult("tropical", (), weak)
    qs = list(range(X.counts[X.n - 2]))

    def work(qi):
        m = local_matrix(T, (X.n - 2, qi))
        return qi, Inertia(*inertia(m.matrix))

    if jobs and jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(work, qs))
    else:
        results = [work(qi) for qi in qs]
    results.sort(key=lambda p: p[0])
    ok = all(ine.positive == 1 for _, ine in results)
    return ClassifyResult("tropical" if ok else "weak-only", tuple(results), weak)
