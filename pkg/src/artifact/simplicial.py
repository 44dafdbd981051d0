"""Truncated simplicial and bisimplicial sets given by explicit tables."""
from __future__ import annotations

import itertools
from functools import lru_cache

from .kernel import (ArtifactError, ValidationReport, decode_id, encode_id, make_category,
                     sort_key, sorted_ids)


# ---------------------------------------------------------------------------
# ordinal maps, written as tuples of values

@lru_cache(maxsize=None)
def monotone_maps(m, n):
    """All monotone maps [m] -> [n]."""
    return tuple(t for t in itertools.combinations_with_replacement(range(n + 1), m + 1))


def coface(m, i):
    """The injection [m-1] -> [m] missing i."""
    return tuple(k if k < i else k + 1 for k in range(m))


def codegeneracy(m, i):
    """The surjection [m+1] -> [m] hitting i twice."""
    return tuple(k if k <= i else k - 1 for k in range(m + 2))


def compose_maps(psi, phi):
    """psi . phi (apply phi first)."""
    return tuple(psi[k] for k in phi)


def identity_map(m):
    return tuple(range(m + 1))


def _sorted_unique(xs):
    out = sorted_ids(set(xs))
    if len(out) != len(xs):
        raise ArtifactError("duplicate simplices")
    return out


# ---------------------------------------------------------------------------
# simplicial sets

class TruncatedSSet:
    """Simplices in dimensions 0..d with face and degeneracy tables.

    ``faces[m][k]`` lists the indices of d_0 x, ..., d_m x for the k-th
    m-simplex x (m >= 1) and ``degens[m][k]`` those of s_0 x, ..., s_m x
    (m < d).  Simplices in each dimension are kept in identifier order.
    """

    def __init__(self, d, simplices, faces, degens):
        self.d = d
        self.simplices = [list(s) for s in simplices]
        self.index = [{x: k for k, x in enumerate(s)} for s in self.simplices]
        self.faces = faces
        self.degens = degens
        self.degenerate = [[False] * len(s) for s in self.simplices]
        for m in range(d):
            for row in degens[m]:
                for k in row:
                    self.degenerate[m + 1][k] = True

    @classmethod
    def from_action(cls, d, simplices, act):
        """Tables from ``act(x, theta)``, the pullback of x along theta."""
        sims = [_sorted_unique(list(s)) for s in simplices]
        index = [{x: k for k, x in enumerate(s)} for s in sims]

        def look(m, x):
            try:
                return index[m][x]
            except KeyError:
                raise ArtifactError(f"simplex set not closed in dimension {m}: {x!r}") from None

        faces = [None]
        for m in range(1, d + 1):
            faces.append([tuple(look(m - 1, act(x, coface(m, i))) for i in range(m + 1))
                          for x in sims[m]])
        degens = []
        for m in range(d):
            degens.append([tuple(look(m + 1, act(x, codegeneracy(m, i))) for i in range(m + 1))
                           for x in sims[m]])
        return cls(d, sims, faces, degens)

    def __repr__(self):
        return f"TruncatedSSet(d={self.d}, counts={self.counts()})"

    def __eq__(self, other):
        if not isinstance(other, TruncatedSSet):
            return NotImplemented
        return (self.d == other.d and self.simplices == other.simplices
                and self.faces == other.faces and self.degens == other.degens)

    __hash__ = None

    def counts(self):
        return tuple(len(s) for s in self.simplices)

    def nondegenerate(self, m):
        return [k for k, flag in enumerate(self.degenerate[m]) if not flag]

    def nondegenerate_counts(self):
        return tuple(len(self.nondegenerate(m)) for m in range(self.d + 1))

    def face(self, m, i, k):
        return self.faces[m][k][i]

    def degen(self, m, i, k):
        return self.degens[m][k][i]

    def pullback(self, theta, m, k):
        """Index of theta^*(x) for the k-th m-simplex x, theta: [n] -> [m]."""
        n = len(theta) - 1
        image = set(theta)
        missing = [j for j in range(m + 1) if j not in image]
        if missing:
            j = missing[-1]
            rest = tuple(t if t < j else t - 1 for t in theta)
            return self.pullback(rest, m - 1, self.face(m, j, k))
        for i in range(n):
            if theta[i] == theta[i + 1]:
                rest = theta[:i + 1] + theta[i + 2:]
                return self.degen(n - 1, i, self.pullback(rest, m, k))
        return k

    def truncate(self, d):
        if d > self.d:
            raise ArtifactError("cannot raise the truncation degree")
        return TruncatedSSet(d, self.simplices[:d + 1], self.faces[:d + 1], self.degens[:d])

    def relabel(self, fn):
        """The same simplicial set with every simplex x renamed fn(x)."""
        new = [[fn(x) for x in s] for s in self.simplices]
        perm = []
        sims = []
        for s in new:
            order = sorted(range(len(s)), key=lambda k: sort_key(s[k]))
            if len(set(s)) != len(s):
                raise ArtifactError("relabelling is not injective")
            sims.append([s[k] for k in order])
            perm.append({old: pos for pos, old in enumerate(order)})
        faces = [None]
        for m in range(1, self.d + 1):
            faces.append([tuple(perm[m - 1][j] for j in self.faces[m][old])
                          for old in sorted(perm[m], key=perm[m].get)])
        degens = []
        for m in range(self.d):
            degens.append([tuple(perm[m + 1][j] for j in self.degens[m][old])
                           for old in sorted(perm[m], key=perm[m].get)])
        return TruncatedSSet(self.d, sims, faces, degens)

    def to_json(self):
        return {
            "dims": self.d,
            "simplices": [[encode_id(x) for x in s] for s in self.simplices],
            "faces": [None] + [[list(r) for r in self.faces[m]] for m in range(1, self.d + 1)],
            "degeneracies": [[list(r) for r in self.degens[m]] for m in range(self.d)],
        }

    @classmethod
    def from_json(cls, data):
        d = data["dims"]
        sims = [[decode_id(x) for x in s] for s in data["simplices"]]
        faces = [None] + [[tuple(r) for r in data["faces"][m]] for m in range(1, d + 1)]
        degens = [[tuple(r) for r in data["degeneracies"][m]] for m in range(d)]
        return cls(d, sims, faces, degens)


def check_simplicial_identities(X) -> ValidationReport:
    rep = ValidationReport()
    d = X.d
    for m in range(2, d + 1):
        for k in range(len(X.simplices[m])):
            for j in range(m + 1):
                for i in range(j):
                    if X.face(m - 1, i, X.face(m, j, k)) != X.face(m - 1, j - 1, X.face(m, i, k)):
                        rep.add("FaceIdentity", m, k, i, j)
    for m in range(d - 1):
        for k in range(len(X.simplices[m])):
            for j in range(m + 1):
                for i in range(j + 1):
                    if X.degen(m + 1, i, X.degen(m, j, k)) != X.degen(m + 1, j + 1, X.degen(m, i, k)):
                        rep.add("DegeneracyIdentity", m, k, i, j)
    for m in range(d):
        for k in range(len(X.simplices[m])):
            for j in range(m + 1):
                s = X.degen(m, j, k)
                for i in range(m + 2):
                    lhs = X.face(m + 1, i, s)
                    if i in (j, j + 1):
                        ok = lhs == k
                    elif m == 0:
                        ok = True
                    elif i < j:
                        ok = lhs == X.degen(m - 1, j - 1, X.face(m, i, k))
                    else:
                        ok = lhs == X.degen(m - 1, j, X.face(m, i - 1, k))
                    if not ok:
                        rep.add("MixedIdentity", m, k, i, j)
    return rep


def pi0_sset(X):
    """Number of path components (vertices glued along 1-simplices)."""
    parent = list(range(len(X.simplices[0])))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    if X.d >= 1:
        for row in X.faces[1]:
            a, b = find(row[0]), find(row[1])
            if a != b:
                parent[a] = b
    return len({find(a) for a in range(len(parent))})


def components_sset(X):
    """Component label (a vertex index) for each vertex."""
    parent = list(range(len(X.simplices[0])))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    if X.d >= 1:
        for row in X.faces[1]:
            a, b = find(row[0]), find(row[1])
            if a != b:
                parent[max(a, b)] = min(a, b)
    return [find(a) for a in range(len(parent))]


def disjoint_union(X, Y):
    """Simplices ``(0, x)`` and ``(1, y)``, each keeping its own operators."""
    d = min(X.d, Y.d)
    sims = [[(0, x) for x in X.simplices[m]] + [(1, y) for y in Y.simplices[m]]
            for m in range(d + 1)]
    off = [len(X.simplices[m]) for m in range(d + 1)]
    faces = [None] + [X.faces[m] + [tuple(j + off[m - 1] for j in r) for r in Y.faces[m]]
                      for m in range(1, d + 1)]
    degens = [X.degens[m] + [tuple(j + off[m + 1] for j in r) for r in Y.degens[m]]
              for m in range(d)]
    return TruncatedSSet(d, sims, faces, degens)


def category_of_simplices(X):
    """Objects ``(m, x)``; morphisms ``(theta, (m, x), (n, y))`` with theta^* y = x."""
    objects = [(m, x) for m in range(X.d + 1) for x in X.simplices[m]]
    arrows = {}
    incoming = {}
    for n in range(X.d + 1):
        for k, y in enumerate(X.simplices[n]):
            tgt = (n, y)
            for m in range(X.d + 1):
                for theta in monotone_maps(m, n):
                    src = (m, X.simplices[m][X.pullback(theta, n, k)])
                    f = (theta, src, tgt)
                    arrows[f] = (src, tgt)
                    incoming.setdefault(tgt, []).append(f)
    comp = {}
    for g, (mid, tgt) in arrows.items():
        for f in incoming.get(mid, ()):
            comp[(g, f)] = (compose_maps(g[0], f[0]), f[1], tgt)
    ids = {(m, x): (identity_map(m), (m, x), (m, x)) for (m, x) in objects}
    return make_category(objects, arrows, comp, ids)


# ---------------------------------------------------------------------------
# bisimplicial sets

class TruncatedBiSSet:
    """Sets ``sets[m][n]`` for m, n <= d with two families of operators.

    The first index is the horizontal direction.  ``hfaces[m][n][k]`` holds
    indices into ``sets[m-1][n]``; ``vfaces[m][n][k]`` into ``sets[m][n-1]``;
    degeneracies likewise.
    """

    def __init__(self, d, sets, hfaces, vfaces, hdegens, vdegens):
        self.d = d
        self.sets = sets
        self.hfaces = hfaces
        self.vfaces = vfaces
        self.hdegens = hdegens
        self.vdegens = vdegens

    @classmethod
    def from_action(cls, d, sets, act_h, act_v):
        sets = [[_sorted_unique(list(sets[m][n])) for n in range(d + 1)] for m in range(d + 1)]
        index = [[{x: k for k, x in enumerate(sets[m][n])} for n in range(d + 1)]
                 for m in range(d + 1)]
        hf = [[None] * (d + 1) for _ in range(d + 1)]
        vf = [[None] * (d + 1) for _ in range(d + 1)]
        hs = [[None] * (d + 1) for _ in range(d + 1)]
        vs = [[None] * (d + 1) for _ in range(d + 1)]
        for m in range(d + 1):
            for n in range(d + 1):
                xs = sets[m][n]
                if m >= 1:
                    hf[m][n] = [tuple(index[m - 1][n][act_h(x, coface(m, i))] for i in range(m + 1))
                                for x in xs]
                if n >= 1:
                    vf[m][n] = [tuple(index[m][n - 1][act_v(x, coface(n, i))] for i in range(n + 1))
                                for x in xs]
                if m < d:
                    hs[m][n] = [tuple(index[m + 1][n][act_h(x, codegeneracy(m, i))]
                                      for i in range(m + 1)) for x in xs]
                if n < d:
                    vs[m][n] = [tuple(index[m][n + 1][act_v(x, codegeneracy(n, i))]
                                      for i in range(n + 1)) for x in xs]
        return cls(d, sets, hf, vf, hs, vs)

    def counts(self):
        return [[len(self.sets[m][n]) for n in range(self.d + 1)] for m in range(self.d + 1)]

    def row(self, n):
        """The horizontal simplicial set at vertical level n."""
        return TruncatedSSet(self.d, [self.sets[m][n] for m in range(self.d + 1)],
                             [None] + [self.hfaces[m][n] for m in range(1, self.d + 1)],
                             [self.hdegens[m][n] for m in range(self.d)])

    def column(self, m):
        """The vertical simplicial set at horizontal level m."""
        return TruncatedSSet(self.d, self.sets[m],
                             [None] + [self.vfaces[m][n] for n in range(1, self.d + 1)],
                             [self.vdegens[m][n] for n in range(self.d)])


def check_bisimplicial_identities(X) -> ValidationReport:
    rep = ValidationReport()
    for n in range(X.d + 1):
        rep.extend(check_simplicial_identities(X.row(n)), ("row", n))
    for m in range(X.d + 1):
        rep.extend(check_simplicial_identities(X.column(m)), ("column", m))
    # horizontal and vertical operators commute
    d = X.d
    for m in range(d + 1):
        for n in range(d + 1):
            for k in range(len(X.sets[m][n])):
                hops = []
                if m >= 1:
                    hops += [("f", i, X.hfaces[m][n][k][i], m - 1) for i in range(m + 1)]
                if m < d:
                    hops += [("s", i, X.hdegens[m][n][k][i], m + 1) for i in range(m + 1)]
                vops = []
                if n >= 1:
                    vops += [("f", j, X.vfaces[m][n][k][j], n - 1) for j in range(n + 1)]
                if n < d:
                    vops += [("s", j, X.vdegens[m][n][k][j], n + 1) for j in range(n + 1)]
                for hk, i, hx, m2 in hops:
                    for vk, j, vx, n2 in vops:
                        a = (X.vfaces if vk == "f" else X.vdegens)[m2][n][hx][j]
                        b = (X.hfaces if hk == "f" else X.hdegens)[m][n2][vx][i]
                        if a != b:
                            rep.add("DirectionsDoNotCommute", m, n, k, hk, i, vk, j)
    return rep


def diagonal(X):
    """The simplicial set n -> X_{n,n}."""
    d = X.d
    sims = [X.sets[n][n] for n in range(d + 1)]
    faces = [None]
    for n in range(1, d + 1):
        faces.append([tuple(X.hfaces[n][n - 1][X.vfaces[n][n][k][i]][i] for i in range(n + 1))
                      for k in range(len(sims[n]))])
    degens = []
    for n in range(d):
        degens.append([tuple(X.hdegens[n][n + 1][X.vdegens[n][n][k][i]][i] for i in range(n + 1))
                       for k in range(len(sims[n]))])
    return TruncatedSSet(d, sims, faces, degens)


def constant_bisset(Y, direction="horizontal"):
    """Y repeated in one direction, constant in the other."""
    d = Y.d
    if direction == "horizontal":
        sets = [[Y.simplices[m] for _ in range(d + 1)] for m in range(d + 1)]
        return TruncatedBiSSet(
            d, sets,
            [[Y.faces[m] if m else None for _ in range(d + 1)] for m in range(d + 1)],
            [[None] + [[(k,) * (n + 1) for k in range(len(Y.simplices[m]))]
                       for n in range(1, d + 1)] for m in range(d + 1)],
            [[Y.degens[m] if m < d else None for _ in range(d + 1)] for m in range(d + 1)],
            [[[(k,) * (n + 1) for k in range(len(Y.simplices[m]))] if n < d else None
              for n in range(d + 1)] for m in range(d + 1)])
    sets = [[Y.simplices[n] for n in range(d + 1)] for _ in range(d + 1)]
    return TruncatedBiSSet(
        d, sets,
        [[None] * (d + 1)] + [[[(k,) * (m + 1) for k in range(len(Y.simplices[n]))]
                               for n in range(d + 1)] for m in range(1, d + 1)],
        [[Y.faces[n] if n else None for n in range(d + 1)] for _ in range(d + 1)],
        [[[(k,) * (m + 1) for k in range(len(Y.simplices[n]))] for n in range(d + 1)]
         if m < d else [None] * (d + 1) for m in range(d + 1)],
        [[Y.degens[n] if n < d else None for n in range(d + 1)] for _ in range(d + 1)])
