"""Nerves of 2-categories, comparison functors and the weak-equivalence probe."""
from __future__ import annotations

import itertools
import os
from dataclasses import dataclass
from functools import lru_cache
from typing import NamedTuple

from .comma import has_object_admitting_final, slice as slice_2cat
from .homology import DegreeOutOfRange, homology
from .kernel import (ArtifactError, BudgetExceeded, TwoCat, make_category, ordinal,
                     sorted_ids)
from .morphisms import (LaxFunctor, Transformation, compose_functors, constant_functor,
                        enumerate_lax_functors, identity_functor, strict_functor,
                        strict_transformation)
from .simplicial import (TruncatedBiSSet, TruncatedSSet, category_of_simplices,
                         codegeneracy, components_sset, compose_maps, coface, identity_map,
                         monotone_maps)

CAP_ENV = "ARTIFACT_ENUM_CAP"
DEFAULT_CAP = 200_000
NERVE_VARIANTS = ("lax", "lax_nor")
SUP_VARIANTS = ("sup1", "sup_lax", "sup_lax_nor", "sup_cat_lax_nor", "sup_hom")


class NoWitness(ArtifactError):
    pass


def enumeration_cap(cap=None):
    if cap is not None:
        return cap
    return int(os.environ.get(CAP_ENV, DEFAULT_CAP))


# ---------------------------------------------------------------------------
# simplices of lax nerves

@lru_cache(maxsize=None)
def _pairs(m):
    pairs = [(j, i) for j in range(m + 1) for i in range(j + 1)]
    return pairs, {p: k for k, p in enumerate(pairs)}


@lru_cache(maxsize=None)
def _triples(m):
    trip = [(k, j, i) for k in range(m + 1) for j in range(k + 1) for i in range(j + 1)]
    return trip, {t: n for n, t in enumerate(trip)}


class Simplex(NamedTuple):
    """A lax functor [m] -> A as flat tables.

    ``ones`` is indexed by pairs (j, i) with i <= j, ``comps`` by triples
    (k, j, i) holding x_{k,j,i}: x_{k,j} x_{j,i} => x_{k,i}, and ``units``
    by vertices.
    """
    obs: tuple
    ones: tuple
    comps: tuple
    units: tuple

    @property
    def dim(self):
        return len(self.obs) - 1

    def ob(self, i):
        return self.obs[i]

    def one(self, j, i):
        return self.ones[_pairs(self.dim)[1][(j, i)]]

    def comp(self, k, j, i):
        return self.comps[_triples(self.dim)[1][(k, j, i)]]

    def unit(self, i):
        return self.units[i]

    def spine(self):
        return tuple(self.one(i + 1, i) for i in range(self.dim))


def simplex_from_functor(u, m):
    pairs, _ = _pairs(m)
    trip, _ = _triples(m)
    return Simplex(tuple(u.ob[i] for i in range(m + 1)),
                   tuple(u.one[(i, j)] for (j, i) in pairs),
                   tuple(u.comp[((j, k), (i, j))] for (k, j, i) in trip),
                   tuple(u.unit[i] for i in range(m + 1)))


def simplex_functor(x, A):
    """The lax functor [m] -> A encoded by x."""
    m = x.dim
    P = ordinal(m)
    one = {(i, j): x.one(j, i) for (j, i) in _pairs(m)[0]}
    return LaxFunctor(P, A, {i: x.ob(i) for i in range(m + 1)}, one,
                      {f: A.id2[one[f]] for f in one},
                      {((j, k), (i, j)): x.comp(k, j, i) for (k, j, i) in _triples(m)[0]},
                      {i: x.unit(i) for i in range(m + 1)})


def reindex(x, theta):
    """theta^* x for a monotone theta: [n] -> [dim x]."""
    n = len(theta) - 1
    return Simplex(tuple(x.obs[t] for t in theta),
                   tuple(x.one(theta[j], theta[i]) for (j, i) in _pairs(n)[0]),
                   tuple(x.comp(theta[k], theta[j], theta[i]) for (k, j, i) in _triples(n)[0]),
                   tuple(x.units[t] for t in theta))


def face(x, i):
    return reindex(x, coface(x.dim, i))


def degeneracy(x, i):
    return reindex(x, codegeneracy(x.dim, i))


def lax_simplices(A, m, normalized=True, cap=None):
    """All (normalized) lax functors [m] -> A as simplices, memoized on A."""
    key = ("lax_simplices", m, normalized)
    if key in A._cache:
        return A._cache[key]
    cap = enumeration_cap(cap)
    out = []
    for u in enumerate_lax_functors(ordinal(m), A, normalized=normalized, limit=cap + 1):
        out.append(simplex_from_functor(u, m))
    if len(out) > cap:
        raise BudgetExceeded(f"more than {cap} simplices in dimension {m}")
    out = sorted_ids(out)
    A._cache[key] = out
    return out


def is_simplex(A, x, normalized=True):
    return x in set(lax_simplices(A, x.dim, normalized))


def simplex_image(u, x):
    """The composite u . x of a (normalized) lax functor with a simplex."""
    B = u.target
    m = x.dim
    return Simplex(tuple(u.ob[a] for a in x.obs),
                   tuple(u.one[f] for f in x.ones),
                   tuple(B.v(u.two[x.comp(k, j, i)], u.comp[(x.one(k, j), x.one(j, i))])
                         for (k, j, i) in _triples(m)[0]),
                   tuple(B.v(u.two[x.unit(i)], u.unit[x.ob(i)]) for i in range(m + 1)))


def nerve(A, variant="lax_nor", d=4, cap=None):
    """The lax (or normalized lax) nerve of A truncated at d."""
    if variant not in NERVE_VARIANTS:
        raise ValueError(f"unknown nerve variant {variant!r}")
    if not 0 <= d <= 6:
        raise ValueError("truncation degree must lie in 0..6")
    normalized = variant == "lax_nor"
    sims = [lax_simplices(A, m, normalized, cap) for m in range(d + 1)]
    return TruncatedSSet.from_action(d, sims, reindex)


def spine_label(x):
    """Classical-nerve name (objects, consecutive 1-cells) of a simplex."""
    return (x.obs, x.spine())


# ---------------------------------------------------------------------------
# classical nerves

def _chain_composite(C, obs, arrows, a, b):
    if a == b:
        return C.id1[obs[a]]
    out = arrows[a]
    for t in range(a + 1, b):
        out = C.c1(arrows[t], out)
    return out


def _classical_act(C):
    def act(x, theta):
        obs, arrows = x
        return (tuple(obs[t] for t in theta),
                tuple(_chain_composite(C, obs, arrows, theta[k - 1], theta[k])
                      for k in range(1, len(theta))))
    return act


def classical_chains(C, m, cap=None):
    """Composable strings of m arrows as ``(objects, arrows)``."""
    cap = enumeration_cap(cap)
    level = [((a,), ()) for a in C.objects]
    for _ in range(m):
        nxt = []
        for obs, arrows in level:
            for f in C.out1(obs[-1]):
                nxt.append((obs + (C.tgt1(f),), arrows + (f,)))
                if len(nxt) > cap:
                    raise BudgetExceeded(f"more than {cap} simplices in dimension {m}")
        level = nxt
    return level


def classical_nerve(C, d=4, cap=None):
    """The nerve of a 1-category (a 2-category with only identity 2-cells)."""
    if not C.is_category:
        raise ArtifactError("classical nerve needs a 1-category")
    sims = [classical_chains(C, m, cap) for m in range(d + 1)]
    return TruncatedSSet.from_action(d, sims, _classical_act(C))


# ---------------------------------------------------------------------------
# strict nerve: bisimplicial

def _column_identity(A, a, n):
    f = A.id1[a]
    return ((f,) * (n + 1), (A.id2[f],) * n)


def _column_hcomp(A, later, earlier):
    return (tuple(A.c1(g, f) for g, f in zip(later[0], earlier[0])),
            tuple(A.h(b, a) for b, a in zip(later[1], earlier[1])))


def _column_pull(A, col, theta):
    gs, alphas = col
    new_gs = tuple(gs[t] for t in theta)
    new_alphas = []
    for k in range(1, len(theta)):
        a, b = theta[k - 1], theta[k]
        if a == b:
            new_alphas.append(A.id2[gs[a]])
        else:
            out = alphas[a]
            for t in range(a + 1, b):
                out = A.v(alphas[t], out)
            new_alphas.append(out)
    return (new_gs, tuple(new_alphas))


def hom_chains(A, a, b, n):
    """n-simplices of the nerve of Hom(a, b): (1-cells g_0..g_n, 2-cells)."""
    level = [((f,), ()) for f in A.hom(a, b)]
    for _ in range(n):
        level = [(gs + (A.tgt2(x),), xs + (x,)) for gs, xs in level for x in A.out2(gs[-1])]
    return level


def level_category(A, m):
    """Strict functors [m] -> A with transformations relative to objects."""
    objs = []
    arrows = {}
    for obs in itertools.product(A.objects, repeat=m + 1):
        homs = [A.hom(obs[i], obs[i + 1]) for i in range(m)]
        for fs in itertools.product(*homs):
            objs.append((obs, fs))
        cells = [A.two_cells_between(obs[i], obs[i + 1]) for i in range(m)]
        for xs in itertools.product(*cells):
            src = (obs, tuple(A.src2(x) for x in xs))
            tgt = (obs, tuple(A.tgt2(x) for x in xs))
            arrows[(obs, xs)] = (src, tgt)
    comp = {}
    for (obs, ys), (mid, tgt) in arrows.items():
        for (obs2, xs), (src, mid2) in arrows.items():
            if mid2 == mid:
                comp[((obs, ys), (obs2, xs))] = (obs, tuple(A.v(y, x) for y, x in zip(ys, xs)))
    ids = {(obs, fs): (obs, tuple(A.id2[f] for f in fs)) for (obs, fs) in objs}
    return make_category(objs, arrows, comp, ids)


def nerve_strict(A, d=3, cap=None):
    """Bisimplicial set: level m horizontal, classical nerve of it vertical.

    An (m, n) element is ``(objects, columns)`` with one column, an
    n-simplex of the nerve of Hom(a_i, a_{i+1}), per consecutive pair.
    """
    cap = enumeration_cap(cap)
    sets = [[None] * (d + 1) for _ in range(d + 1)]
    for m in range(d + 1):
        for n in range(d + 1):
            out = []
            for obs in itertools.product(A.objects, repeat=m + 1):
                cols = [hom_chains(A, obs[i], obs[i + 1], n) for i in range(m)]
                for cs in itertools.product(*cols):
                    out.append((obs, cs))
                    if len(out) > cap:
                        raise BudgetExceeded(f"more than {cap} elements at ({m}, {n})")
            sets[m][n] = out

    def act_v(x, theta):
        obs, cols = x
        return (obs, tuple(_column_pull(A, c, theta) for c in cols))

    # level 0 elements carry no column, so each element is tagged with its
    # vertical dimension
    tagged = [[[(n, x) for x in sets[m][n]] for n in range(d + 1)] for m in range(d + 1)]

    def tag_h(t, theta):
        n, x = t
        return (n, act_h_n(x, theta, n))

    def act_h_n(x, theta, n):
        obs, cols = x
        new_cols = []
        for k in range(1, len(theta)):
            a, b = theta[k - 1], theta[k]
            if a == b:
                new_cols.append(_column_identity(A, obs[a], n))
            else:
                out = cols[a]
                for t in range(a + 1, b):
                    out = _column_hcomp(A, cols[t], out)
                new_cols.append(out)
        return (tuple(obs[t] for t in theta), tuple(new_cols))

    def tag_v(t, theta):
        n, x = t
        return (len(theta) - 1, act_v(x, theta))

    return TruncatedBiSSet.from_action(d, tagged, tag_h, tag_v)


def strict_label(t):
    """Classical-nerve name of a diagonal element of a 1-category's strict nerve."""
    n, (obs, cols) = t
    return (obs, tuple(c[0][0] for c in cols))


# ---------------------------------------------------------------------------
# comparison functors to A

def _sup_strict_1(A, d):
    X = classical_nerve(A, d)
    C = category_of_simplices(X)
    ob = {o: o[1][0][o[0]] for o in C.objects}
    one = {}
    for f, ((m, x), (n, y)) in C.one_cells.items():
        one[f] = _chain_composite(A, y[0], y[1], f[0][m], n)
    return strict_functor(C, A, ob, one, {f: A.id2[one[f]] for f in C.two_cells})


def _sup_simplices(A, d, normalized):
    X = nerve(A, "lax_nor" if normalized else "lax", d)
    C = category_of_simplices(X)
    ob = {(m, x): x.ob(m) for (m, x) in C.objects}
    one = {f: f[2][1].one(f[2][0], f[0][f[1][0]]) for f in C.ones}
    two = {f: A.id2[one[f]] for f in C.ones}
    comp = {}
    for (g, f) in C.comp1:
        psi, phi = g[0], f[0]
        m, n = f[1][0], f[2][0]
        p, z = g[2]
        comp[(g, f)] = z.comp(p, psi[n], psi[phi[m]])
    unit = {(m, x): x.unit(m) for (m, x) in C.objects}
    return LaxFunctor(C, A, ob, one, two, comp, unit, "lax")


def _relative_transformations(A, x, y, theta):
    """Families alpha_{j,i}: x_{j,i} => y_{theta j, theta i} that form a lax
    transformation x => theta^* y relative to objects."""
    m = x.dim
    if any(x.ob(i) != y.ob(theta[i]) for i in range(m + 1)):
        return []
    pairs = _pairs(m)[0]
    free = [(j, i) for (j, i) in pairs if i < j]
    choices = [A.cells2(x.one(j, i), y.one(theta[j], theta[i])) for (j, i) in free]
    out = []
    for pick in itertools.product(*choices):
        alpha = dict(zip(free, pick))
        for i in range(m + 1):
            alpha[(i, i)] = A.id2[x.one(i, i)]
        ok = True
        for (k, j, i) in _triples(m)[0]:
            lhs = A.v(alpha[(k, i)], x.comp(k, j, i))
            rhs = A.v(y.comp(theta[k], theta[j], theta[i]), A.h(alpha[(k, j)], alpha[(j, i)]))
            if lhs != rhs:
                ok = False
                break
        if ok:
            out.append(tuple(alpha[p] for p in pairs))
    return out


def _alpha(alpha, j, i, m):
    return alpha[_pairs(m)[1][(j, i)]]


def integral_category(A, d, strict=False):
    """Objects ``(m, x)``; morphisms ``(theta, alpha, (m, x), (n, y))``.

    x ranges over normalized lax (or strict) functors [m] -> A and alpha over
    lax transformations x => theta^* y relative to objects.
    """
    sims = []
    for m in range(d + 1):
        level = lax_simplices(A, m, True)
        if strict:
            level = [x for x in level if all(A.is_id2(c) for c in x.comps)]
        sims.append(level)
    objects = [(m, x) for m in range(d + 1) for x in sims[m]]
    arrows = {}
    by_src = {}
    for (m, x) in objects:
        for (n, y) in objects:
            for theta in monotone_maps(m, n):
                for alpha in _relative_transformations(A, x, y, theta):
                    f = (theta, alpha, (m, x), (n, y))
                    arrows[f] = ((m, x), (n, y))
                    by_src.setdefault((m, x), []).append(f)
    comp = {}
    for f, (src, mid) in arrows.items():
        m = src[0]
        for g in by_src.get(mid, ()):
            psi, beta = g[0], g[1]
            theta, alpha = f[0], f[1]
            n = mid[0]
            gamma = tuple(A.v(_alpha(beta, theta[j], theta[i], n), a)
                          for (j, i), a in zip(_pairs(m)[0], alpha))
            comp[(g, f)] = (compose_maps(psi, theta), gamma, src, g[3])
    ids = {(m, x): (identity_map(m), tuple(A.id2[f] for f in x.ones), (m, x), (m, x))
           for (m, x) in objects}
    return make_category(objects, arrows, comp, ids)


def _sup_integral(A, d, strict):
    C = integral_category(A, d, strict)
    ob = {(m, x): x.ob(m) for (m, x) in C.objects}
    one = {f: f[3][1].one(f[3][0], f[0][f[2][0]]) for f in C.ones}
    two = {f: A.id2[one[f]] for f in C.ones}
    comp = {}
    for (g, f) in C.comp1:
        theta = f[0]
        m, n = f[2][0], f[3][0]
        psi, beta = g[0], g[1]
        p, z = g[3]
        comp[(g, f)] = A.v(z.comp(p, psi[n], psi[theta[m]]),
                           A.wl(z.one(p, psi[n]), _alpha(beta, n, theta[m], n)))
    unit = {o: A.id2[A.id1[ob[o]]] for o in C.objects}
    return LaxFunctor(C, A, ob, one, two, comp, unit, "lax")


def sup(A, variant="sup_lax_nor", d=2):
    """The comparison functor from a category of simplices to A."""
    if variant == "sup1":
        return _sup_strict_1(A, d)
    if variant == "sup_lax":
        return _sup_simplices(A, d, False)
    if variant == "sup_lax_nor":
        return _sup_simplices(A, d, True)
    if variant == "sup_cat_lax_nor":
        return _sup_integral(A, d, False)
    if variant == "sup_hom":
        return _sup_integral(A, d, True)
    raise ValueError(f"unknown comparison variant {variant!r}")


def simplices_inclusion(A, d, source=None, target=None):
    """Category of simplices of the normalized nerve into the integral category."""
    C = source or category_of_simplices(nerve(A, "lax_nor", d))
    T = target or integral_category(A, d)
    one = {f: (f[0], tuple(A.id2[g] for g in f[1][1].ones), f[1], f[2]) for f in C.ones}
    return strict_functor(C, T, {o: o for o in C.objects}, one, {f: T.id2[one[f]] for f in C.ones})


def sup_compatibility(A, d=2):
    """Whether the normalized comparison factors through the integral one."""
    nor = _sup_simplices(A, d, True)
    big = _sup_integral(A, d, False)
    incl = simplices_inclusion(A, d, nor.source, big.source)
    comp = compose_functors(big, incl)
    return (comp.ob == nor.ob and comp.one == nor.one and comp.two == nor.two
            and comp.comp == nor.comp and comp.unit == nor.unit)


def simplices_functor(u, C, D):
    """The functor between categories of simplices induced by a strict u."""
    ob = {(m, x): (m, simplex_image(u, x)) for (m, x) in C.objects}
    one = {f: (f[0], ob[f[1]], ob[f[2]]) for f in C.ones}
    return strict_functor(C, D, ob, one, {f: D.id2[one[f]] for f in C.ones})


# ---------------------------------------------------------------------------
# decalage

def final_witness(A):
    w = has_object_admitting_final(A)
    if w is None:
        raise NoWitness("no object admits final objects in every hom")
    return w


def decalage_simplex(A, w, x):
    """x followed by the witness object, joined by the chosen final 1-cells."""
    m = x.dim
    z = w.z
    n = m + 1

    def one(j, i):
        if j <= m:
            return x.one(j, i)
        if i <= m:
            return w.finals[x.ob(i)]
        return A.id1[z]

    def comp(k, j, i):
        if k <= m:
            return x.comp(k, j, i)
        if j == k or i == j:
            return A.id2[one(k, i)]
        return w.cells[A.c1(w.finals[x.ob(j)], x.one(j, i))]

    return Simplex(x.obs + (z,),
                   tuple(one(j, i) for (j, i) in _pairs(n)[0]),
                   tuple(comp(k, j, i) for (k, j, i) in _triples(n)[0]),
                   tuple(A.id2[A.id1[o]] for o in x.obs + (z,)))


@dataclass
class Decalage:
    source: TwoCat
    target: TwoCat
    functor: LaxFunctor
    inclusion: LaxFunctor
    constant: LaxFunctor
    iota: Transformation
    omega: Transformation
    witness: object


def decalage(A, d=3, witness=None):
    """The shift functor D on simplices of dimension < d and its two
    transformations from the inclusion and from the constant functor."""
    w = witness or final_witness(A)
    X = nerve(A, "lax_nor", d)
    T = category_of_simplices(X)
    S = category_of_simplices(X.truncate(d - 1))
    ob = {(m, x): (m + 1, decalage_simplex(A, w, x)) for (m, x) in S.objects}
    one = {f: (f[0] + (f[2][0] + 1,), ob[f[1]], ob[f[2]]) for f in S.ones}
    D = strict_functor(S, T, ob, one, {f: T.id2[one[f]] for f in S.ones})
    incl = strict_functor(S, T, {o: o for o in S.objects}, {f: f for f in S.ones},
                          {f: f for f in S.ones})
    z0 = (0, Simplex((w.z,), (A.id1[w.z],), (A.id2[A.id1[w.z]],), (A.id2[A.id1[w.z]],)))
    Z = constant_functor(S, T, z0)
    iota = strict_transformation(incl, D, {(m, x): (identity_map(m) + (), (m, x), ob[(m, x)])
                                           for (m, x) in S.objects})
    omega = strict_transformation(Z, D, {(m, x): ((m + 1,), z0, ob[(m, x)])
                                         for (m, x) in S.objects})
    return Decalage(S, T, D, incl, Z, iota, omega, w)


def contracting_transformation(A, witness=None):
    """Lax transformation from the identity to the constant functor at z."""
    w = witness or final_witness(A)
    one = {}
    for f, (a, a1) in A.one_cells.items():
        one[f] = w.cells[A.c1(w.finals[a1], f)]
    return Transformation("lax", identity_functor(A), constant_functor(A, A, w.z),
                          dict(w.finals), one)


# ---------------------------------------------------------------------------
# slice over a simplex

@dataclass
class SimplexSlice:
    slice: TwoCat
    colax_slice: TwoCat
    R: LaxFunctor
    I: LaxFunctor
    sigma: Transformation


def _assemble(A, top, pieces):
    """A normalized simplex of dimension ``top`` from callables on indices."""
    obs_fn, one_fn, comp_fn = pieces
    return Simplex(tuple(obs_fn(i) for i in range(top + 1)),
                   tuple(one_fn(j, i) for (j, i) in _pairs(top)[0]),
                   tuple(comp_fn(k, j, i) for (k, j, i) in _triples(top)[0]),
                   tuple(A.id2[A.id1[obs_fn(i)]] for i in range(top + 1)))


def _extend(B, m, base, lower, vertex, edge, cells):
    """(m+2)-simplex y with d_0 y = base, d_1 y = lower, y_{1,0} = edge and
    y_{k,1,0} = cells[k] (k >= 2)."""
    top = m + 2

    def obs_fn(i):
        return vertex if i == 0 else base.ob(i - 1)

    def one_fn(j, i):
        if i >= 1:
            return base.one(j - 1, i - 1)
        if j == 0:
            return B.id1[vertex]
        if j == 1:
            return edge
        return lower.one(j - 1, 0)

    def comp_fn(k, j, i):
        if i >= 1:
            return base.comp(k - 1, j - 1, i - 1)
        if j == k or i == j:
            return B.id2[one_fn(k, i)]
        if j == 1:
            return cells[k]
        return lower.comp(k - 1, j - 1, 0)

    return _assemble(B, top, (obs_fn, one_fn, comp_fn))


def simplex_slice_2cat(u, b):
    """The 2-category of simplices under b whose first vertex lies in u's image.

    Objects ``(a, x)``, 1-cells ``(f, y)``, 2-cells ``(alpha, F, F')``.
    """
    if not u.is_strict:
        raise ArtifactError("slice over a simplex needs a strict functor")
    A, B = u.source, u.target
    m = b.dim
    objs = []
    for x in lax_simplices(B, m + 1):
        if face(x, 0) != b:
            continue
        for a in A.objects:
            if u.ob[a] == x.ob(0):
                objs.append((a, x))
    by_pair = {}
    for y in lax_simplices(B, m + 2):
        lower, upper = face(y, 1), face(y, 0)
        if face(upper, 0) != b:
            continue
        by_pair.setdefault((y.one(1, 0), lower, upper), []).append(y)
    ones = {}
    for f, (a, a1) in A.one_cells.items():
        for (a0, x) in objs:
            if a0 != a:
                continue
            for (a2, x1) in objs:
                if a2 != a1:
                    continue
                for y in by_pair.get((u.one[f], x, x1), ()):
                    ones[(f, y)] = ((a, x), (a1, x1))

    def compose(G, F):
        (f1, y1), (f, y) = G, F
        x = ones[F][0][1]
        x2 = ones[G][1][1]
        cells = {k: B.v(y.comp(k, 1, 0), B.wr(y1.comp(k, 1, 0), u.one[f]))
                 for k in range(2, m + 3)}
        return (A.c1(f1, f), _extend(B, m, x2, x, x.ob(0), u.one[A.c1(f1, f)], cells))

    comp1 = {}
    for G, (mid, tgt) in ones.items():
        for F, (src, mid2) in ones.items():
            if mid2 == mid:
                H = compose(G, F)
                if H not in ones:
                    raise ArtifactError("composite simplex is not a lax functor")
                comp1[(G, F)] = H
    id1 = {(a, x): (A.id1[a], degeneracy(x, 0)) for (a, x) in objs}

    def cell_ok(alpha, F, F1):
        y, y1 = F[1], F1[1]
        ua = u.two[alpha]
        return all(B.v(y1.comp(i + 2, 1, 0), B.wl(y.one(i + 2, 1), ua)) == y.comp(i + 2, 1, 0)
                   for i in range(m + 1))

    twos = {}
    for F, bd in ones.items():
        for F1, bd1 in ones.items():
            if bd1 != bd:
                continue
            for alpha in A.cells2(F[0], F1[0]):
                if cell_ok(alpha, F, F1):
                    twos[(alpha, F, F1)] = (F, F1)
    vcomp = {((b2, G, H), (a2, F, G2)): (A.v(b2, a2), F, H)
             for (b2, G, H) in twos for (a2, F, G2) in twos if G2 == G}
    hcomp = {}
    for (b2, G, G1) in twos:
        for (a2, F, F1) in twos:
            if (G, F) in comp1:
                hcomp[((b2, G, G1), (a2, F, F1))] = (A.h(b2, a2), comp1[(G, F)], comp1[(G1, F1)])
    id2 = {F: (A.id2[F[0]], F, F) for F in ones}
    return TwoCat(objs, ones, twos, comp1, vcomp, hcomp, id1, id2)


def slice_over_simplex(u, b):
    """The slice over b with its retraction R, section I and sigma: 1 => IR."""
    A, B = u.source, u.target
    m = b.dim
    S = simplex_slice_2cat(u, b)
    T = slice_2cat(u, b.ob(0), "colax_over")
    # R
    t_objs = {o: o for o in T.objects}
    R_ob = {(a, x): (a, x.one(1, 0)) for (a, x) in S.objects}
    for o in R_ob.values():
        if o not in t_objs:
            raise ArtifactError(f"unexpected colax slice object {o!r}")
    t_ones = {}
    for F, (s, t) in T.one_cells.items():
        t_ones[(s, t, F[0], F[1])] = F
    R_one = {}
    for (f, y), (s, t) in S.one_cells.items():
        R_one[(f, y)] = t_ones[(R_ob[s], R_ob[t], f, y.comp(2, 1, 0))]
    t_twos = {}
    for X, (F, G) in T.two_cells.items():
        t_twos[(F, G, X[0])] = X
    R_two = {X: t_twos[(R_one[X[1]], R_one[X[2]], X[0])] for X in S.two_cells}
    R = strict_functor(S, T, R_ob, R_one, R_two)

    # I
    def lift(a, p):
        def obs_fn(i):
            return u.ob[a] if i == 0 else b.ob(i - 1)

        def one_fn(j, i):
            if i >= 1:
                return b.one(j - 1, i - 1)
            if j == 0:
                return B.id1[u.ob[a]]
            return B.c1(b.one(j - 1, 0), p)

        def comp_fn(k, j, i):
            if i >= 1:
                return b.comp(k - 1, j - 1, i - 1)
            if j == k or i == j:
                return B.id2[one_fn(k, i)]
            return B.wr(b.comp(k - 1, j - 1, 0), p)

        return (a, _assemble(B, m + 1, (obs_fn, one_fn, comp_fn)))

    I_ob = {o: lift(*o) for o in T.objects}
    I_one = {}
    for F, (s, t) in T.one_cells.items():
        f, alpha = F[0], F[1]
        lower, upper = I_ob[s][1], I_ob[t][1]
        cells = {k: B.wl(b.one(k - 2, 0), alpha) for k in range(2, m + 3)}
        y = _extend(B, m, upper, lower, u.ob[s[0]], u.one[f], cells)
        if (f, y) not in S.one_cells:
            raise ArtifactError("section does not land in the slice")
        I_one[F] = (f, y)
    I_two = {X: (X[0], I_one[F], I_one[G]) for X, (F, G) in T.two_cells.items()}
    I = strict_functor(T, S, I_ob, I_one, I_two)

    IR = compose_functors(I, R)
    comps = {}
    for (a, x) in S.objects:
        target = IR.ob[(a, x)][1]
        cells = {k: x.comp(k - 1, 1, 0) for k in range(2, m + 3)}
        comps[(a, x)] = (A.id1[a], _extend(B, m, target, x, u.ob[a], B.id1[u.ob[a]], cells))
    sigma = strict_transformation(identity_functor(S), IR, comps)
    return SimplexSlice(S, T, R, I, sigma)


# ---------------------------------------------------------------------------
# weak-equivalence probe

@dataclass
class ProbeResult:
    verdict: str
    degree: object
    detail: str
    source_homology: object = None
    target_homology: object = None

    def to_json(self):
        out = {"verdict": self.verdict, "degree": self.degree, "detail": self.detail}
        if self.source_homology is not None:
            out["source"] = self.source_homology.to_json()
            out["target"] = self.target_homology.to_json()
        return out


def pi0_map(u, X, Y):
    """Component-level map induced by u; returns (is_bijective, detail)."""
    cx, cy = components_sset(X), components_sset(Y)
    xi, yi = X.index[0], Y.index[0]

    def vertex(A, a):
        return Simplex((a,), (A.id1[a],), (A.id2[A.id1[a]],), (A.id2[A.id1[a]],))

    image = {}
    for a in u.source.objects:
        ca = cx[xi[vertex(u.source, a)]]
        cb = cy[yi[vertex(u.target, u.ob[a])]]
        if image.setdefault(ca, cb) != cb:
            return False, "map on components is not well defined"
    if len(set(image.values())) != len(image):
        return False, "two components have the same image"
    if len(set(image.values())) != len(set(cy)):
        return False, "some component is missed"
    return True, "components match"


def we_probe(u, d=4, k_max=2, variant="lax_nor", cap=None):
    """Necessary conditions for u to be a weak equivalence, on truncated nerves."""
    if k_max > d - 1:
        raise DegreeOutOfRange(f"degree {k_max} needs truncation at least {k_max + 1}")
    try:
        X = nerve(u.source, variant, d, cap)
        Y = nerve(u.target, variant, d, cap)
    except BudgetExceeded as e:
        return ProbeResult("inconclusive", None, str(e))
    ok, why = pi0_map(u, X, Y)
    if not ok:
        return ProbeResult("refuted", 0, why)
    hx, hy = homology(X, k_max), homology(Y, k_max)
    for k in range(k_max + 1):
        if hx.group(k) != hy.group(k):
            return ProbeResult("refuted", k,
                               f"H_{k}: {hx.describe(k)} vs {hy.describe(k)}", hx, hy)
    return ProbeResult("consistent", None, f"components and H_0..H_{k_max} agree", hx, hy)
