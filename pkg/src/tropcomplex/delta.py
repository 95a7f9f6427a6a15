"""Finite Delta-complexes: face tables, parametrizing simplices, links.

A complex is stored as per-dimension simplex counts plus the face table
faces[k][i] = (d_0 s, ..., d_k s) for every k-simplex s = (k, i).  Faces of a
simplex may coincide (non-regular gluing), so links count incidences with
multiplicity.  A link element of s is a coface together with the strictly
increasing slot tuple of the coface's parametrizing simplex that maps onto s.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import Disconnected, DimensionExceeded, SimplicialIdentityViolation

Simplex = tuple  # (dimension, index)


@dataclass(frozen=True)
class LinkElement:
    base: Simplex
    coface: Simplex
    slots: tuple  # strictly increasing slots of the coface hitting base

    @property
    def dim(self):
        return self.coface[0] - self.base[0] - 1

    def complement(self):
        return tuple(
            i for i in range(self.coface[0] + 1) if i not in self.slots
        )


class DeltaComplex:
    """Immutable after construction; links are computed eagerly and cached."""

    def __init__(self, n, counts, faces):
        self.n = n
        self.counts = tuple(counts)
        # faces[k][i] is a tuple of (k-1)-simplex indices, k >= 1
        self.faces = tuple(tuple(tuple(f) for f in faces.get(k, ()))
                           for k in range(n + 1))
        self._validate()
        self._links = {}
        self._build_links()

    # -- construction helpers ------------------------------------------------

    def _validate(self):
        if len(self.counts) != self.n + 1:
            raise DimensionExceeded(
                "expected %d per-dimension counts, got %d"
                % (self.n + 1, len(self.counts))
            )
        if self.counts[0] < 1:
            raise Disconnected("complex has no vertices")
        for k in range(1, self.n + 1):
            if len(self.faces[k]) != self.counts[k]:
                raise DimensionExceeded(
                    "dimension %d: %d simplices but %d face rows"
                    % (k, self.counts[k], len(self.faces[k]))
                )
            for i, row in enumerate(self.faces[k]):
                if len(row) != k + 1:
                    raise DimensionExceeded(
                        "simplex (%d,%d) needs %d faces" % (k, i, k + 1)
                    )
                for t in row:
                    if not 0 <= t < self.counts[k - 1]:
                        raise DimensionExceeded(
                            "simplex (%d,%d) has face index %d out of range"
                            % (k, i, t)
                        )
        # simplicial identity d_i d_j = d_{j-1} d_i for i < j
        for k in range(2, self.n + 1):
            for i_s in range(self.counts[k]):
                s = (k, i_s)
                for j in range(1, k + 1):
                    for i in range(j):
                        left = self.face(self.face(s, j), i)
                        right = self.face(self.face(s, i), j - 1)
                        if left != right:
                            raise SimplicialIdentityViolation(s, i, j)
        # connectedness by union-find over simplex/face incidences
        parent = {}

        def find(x):
            while parent.setdefault(x, x) != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        def union(x, y):
            parent[find(x)] = find(y)

        for k in range(self.n + 1):
            for i in range(self.counts[k]):
                find((k, i))
        for k in range(1, self.n + 1):
            for i in range(self.counts[k]):
                for t in self.faces[k][i]:
                    union((k, i), (k - 1, t))
        roots = {find((k, i))
                 for k in range(self.n + 1) for i in range(self.counts[k])}
        if len(roots) > 1:
            raise Disconnected("complex has %d components" % len(roots))

    def _build_links(self):
        for k in range(self.n + 1):
            for i in range(self.counts[k]):
                self._links[(k, i)] = tuple(
                    [] for _ in range(self.n - k)
                )
        for k in range(self.n + 1):
            for i in range(self.counts[k]):
                s = (k, i)
                for m in range(k + 1, self.n + 1):
                    for j in range(self.counts[m]):
                        for slots in combinations(range(m + 1), k + 1):
                            if self.face_at((m, j), slots) == s:
                                self._links[s][m - k - 1].append(
                                    LinkElement(s, (m, j), slots)
                                )
        self._links = {
            s: tuple(tuple(lst) for lst in per_dim)
            for s, per_dim in self._links.items()
        }

    # -- queries -------------------------------------------------------------

    def simplices(self, k):
        return [(k, i) for i in range(self.counts[k])]

    def face(self, s, i):
        k, idx = s
        return (k - 1, self.faces[k][idx][i])

    def face_at(self, s, slots):
        """The face of s spanned by the given parametrizing-simplex slots.

        Slots must be strictly increasing.  The complement is removed one
        slot at a time from the top, so the standard d_i composition rules
        apply directly.
        """
        cur = s
        keep = list(slots)
        drop = [i for i in range(s[0] + 1) if i not in keep]
        for i in reversed(drop):
            cur = self.face(cur, i)
        return cur

    def vertex_at(self, s, slot):
        return self.face_at(s, (slot,))[1]

    def vertices_of(self, s):
        return tuple(self.vertex_at(s, i) for i in range(s[0] + 1))

    def link(self, s):
        """Link elements of s grouped by link dimension (0-based tuple)."""
        return self._links[s]

    def link0(self, s):
        per_dim = self._links[s]
        return per_dim[0] if per_dim else ()

    def link_face(self, t, i):
        """The i-th face of a positive-dimensional link element."""
        comp = t.complement()
        drop = comp[i]
        new_slots = tuple(x if x < drop else x - 1 for x in t.slots)
        return LinkElement(t.base, self.face(t.coface, drop), new_slots)

    def opp_slot(self, t):
        """Vertex slot of the coface outside the identified face.

        Only defined for 0-dimensional link elements.
        """
        (slot,) = t.complement()
        return slot

    def opp_vertex(self, t):
        return self.vertex_at(t.coface, self.opp_slot(t))

    def degree(self, r):
        return len(self.link0(r))

    def is_regular(self):
        for k in range(1, self.n + 1):
            for i in range(self.counts[k]):
                vs = self.vertices_of((k, i))
                if len(set(vs)) != len(vs):
                    return False
        return True

    # -- serialization -------------------------------------------------------

    def to_json(self):
        entries = []
        for k in range(1, self.n + 1):
            for i in range(self.counts[k]):
                for slot, t in enumerate(self.faces[k][i]):
                    entries.append([k, i, slot, t])
        return {
            "format": "tcx-1",
            "n": self.n,
            "simplices": list(self.counts),
            "faces": entries,
        }

    def __eq__(self, other):
        return (
            isinstance(other, DeltaComplex)
            and self.n == other.n
            and self.counts == other.counts
            and self.faces == other.faces
        )

    def __hash__(self):
        return hash((self.n, self.counts, self.faces))


def build_complex(data):
    """Build and validate a DeltaComplex from its textual description.

    Expects keys "n", "simplices" (per-dimension counts) and "faces"
    (entries [dimension, index, slot, target]).
    """
    n = int(data["n"])
    if n < 0:
        raise DimensionExceeded("n must be nonnegative")
    counts = [int(c) for c in data["simplices"]]
    if len(counts) != n + 1:
        raise DimensionExceeded(
            "expected %d per-dimension counts, got %d" % (n + 1, len(counts))
        )
    faces = {k: [[None] * (k + 1) for _ in range(counts[k])]
             for k in range(1, n + 1)}
    for entry in data.get("faces", []):
        k, i, slot, target = (int(x) for x in entry)
        if not 1 <= k <= n:
            raise DimensionExceeded("face entry at dimension %d" % k)
        if not 0 <= i < counts[k]:
            raise DimensionExceeded("face entry for missing simplex (%d,%d)" % (k, i))
        if not 0 <= slot <= k:
            raise DimensionExceeded("face slot %d out of range" % slot)
        faces[k][i][slot] = target
    for k in range(1, n + 1):
        for i in range(counts[k]):
            if any(t is None for t in faces[k][i]):
                raise DimensionExceeded("missing face entries for (%d,%d)" % (k, i))
    return DeltaComplex(n, counts, faces)


def link_of(X: DeltaComplex, s):
    """Link elements of a simplex grouped by dimension."""
    return X.link(tuple(s))
