"""Strictification of lax functors through chains of composable 1-cells.

The strict 2-category of chains over A is infinite, so it is never built
as a table.  ``Tilde(A)`` exposes the same accessors as ``TwoCat``
(``c1``, ``v``, ``h``, ``i1``, ``i2``, boundaries) and computes cells on
demand; every check below runs on cells up to a chain-length bound.
"""
from __future__ import annotations

import itertools
from collections import namedtuple

from .kernel import (ArtifactError, BudgetExceeded, NotComposable, TwoCat, ValidationReport,
                     dual)
from .morphisms import (compose_functors, dual_functor, enumerate_lax_functors,
                        lax_view)


class EnumerationBudgetExceeded(BudgetExceeded):
    pass


Chain = namedtuple("Chain", "source target cells")
Chain.__doc__ = "Composable 1-cells ``cells`` (application order) from source to target."

TildeCell = namedtuple("TildeCell", "source target phi alphas")
TildeCell.__doc__ = """2-cell between chains.

``phi`` is an interval map [n] -> [m] (tuple of images) with n, m the lengths
of target and source; ``alphas[i-1]`` goes from the source segment between
positions phi(i-1), phi(i) to the i-th cell of the target.
"""


def interval_maps(n, m):
    """Monotone maps [n] -> [m] with 0 -> 0 and n -> m."""
    if n == 0:
        return [(0,)] if m == 0 else []
    return [(0,) + mid + (m,)
            for mid in itertools.combinations_with_replacement(range(m + 1), n - 1)]


def is_interval_map(phi, n, m):
    return (len(phi) == n + 1 and phi[0] == 0 and phi[-1] == m
            and all(a <= b for a, b in zip(phi, phi[1:])))


def tensor_maps(psi, phi):
    """[n] + [n'] -> [m] + [m'] placing phi first and psi after it."""
    m = phi[-1]
    return tuple(phi) + tuple(m + p for p in psi[1:])


class _CellOps:
    """Derived operations shared by every 2-category-like object."""

    def c1s(self, *fs):
        out = fs[-1]
        for g in reversed(fs[:-1]):
            out = self.c1(g, out)
        return out

    def vs(self, *xs):
        out = xs[-1]
        for b in reversed(xs[:-1]):
            out = self.v(b, out)
        return out

    def hs(self, *xs):
        out = xs[-1]
        for b in reversed(xs[:-1]):
            out = self.h(b, out)
        return out

    def wl(self, g, x):
        return self.h(self.i2(g), x)

    def wr(self, x, f):
        return self.h(x, self.i2(f))


class Tilde(_CellOps):
    """The strict 2-category of chains over a (possibly cellwise) 2-category."""

    def __init__(self, base):
        self.base = base

    def __repr__(self):
        return f"Tilde({self.base!r})"

    def __eq__(self, other):
        return isinstance(other, Tilde) and self.base == other.base

    def __hash__(self):
        return hash(("Tilde", id(self.base)))

    @property
    def objects(self):
        return self.base.objects

    # boundaries
    def src1(self, x):
        return x.source

    def tgt1(self, x):
        return x.target

    def src2(self, c):
        return c.source

    def tgt2(self, c):
        return c.target

    # chain helpers
    def chain(self, cells, obj=None):
        cells = tuple(cells)
        A = self.base
        if not cells:
            if obj is None:
                raise ArtifactError("an empty chain needs an object")
            return Chain(obj, obj, ())
        for f, g in zip(cells, cells[1:]):
            if A.tgt1(f) != A.src1(g):
                raise NotComposable(f"{g!r} after {f!r}")
        return Chain(A.src1(cells[0]), A.tgt1(cells[-1]), cells)

    def position(self, x, i):
        """Object at position i of a chain."""
        return x.source if i == 0 else self.base.tgt1(x.cells[i - 1])

    def segment(self, x, j, i):
        """Composite of the cells between positions i <= j."""
        if i == j:
            return self.base.i1(self.position(x, i))
        return self.base.c1s(*reversed(x.cells[i:j]))

    # identities and composition
    def i1(self, a):
        return Chain(a, a, ())

    def i2(self, x):
        A = self.base
        return TildeCell(x, x, tuple(range(len(x.cells) + 1)),
                         tuple(A.i2(f) for f in x.cells))

    def c1(self, y, x):
        if x.target != y.source:
            raise NotComposable(f"chains {y!r} . {x!r}")
        return Chain(x.source, y.target, x.cells + y.cells)

    def v(self, y, x):
        """y after x, vertically."""
        if x.target != y.source:
            raise NotComposable("tilde 2-cells not vertically composable")
        A = self.base
        mid = x.target
        alphas = []
        for i in range(1, len(y.phi)):
            lo, hi = y.phi[i - 1], y.phi[i]
            if lo == hi:
                inner = A.i2(A.i1(self.position(mid, hi)))
            else:
                inner = A.hs(*reversed(x.alphas[lo:hi]))
            alphas.append(A.v(y.alphas[i - 1], inner))
        phi = tuple(x.phi[j] for j in y.phi)
        return TildeCell(x.source, y.target, phi, tuple(alphas))

    def h(self, y, x):
        """y after x, horizontally."""
        if x.target.target != y.target.source:
            raise NotComposable("tilde 2-cells not horizontally composable")
        return TildeCell(self.c1(y.source, x.source), self.c1(y.target, x.target),
                         tensor_maps(y.phi, x.phi), x.alphas + y.alphas)

    # enumeration
    def cells2(self, x, y):
        """All tilde 2-cells from chain x to chain y."""
        A = self.base
        if x.source != y.source or x.target != y.target:
            return []
        n, m = len(y.cells), len(x.cells)
        out = []
        for phi in interval_maps(n, m):
            if any(self.position(x, phi[i]) != self.position(y, i) for i in range(n + 1)):
                continue
            choices = [A.cells2(self.segment(x, phi[i], phi[i - 1]), y.cells[i - 1])
                       for i in range(1, n + 1)]
            for alphas in itertools.product(*choices):
                out.append(TildeCell(x, y, phi, tuple(alphas)))
        return out

    def is_cell(self, c) -> bool:
        A = self.base
        x, y = c.source, c.target
        n, m = len(y.cells), len(x.cells)
        if x.source != y.source or x.target != y.target or not is_interval_map(c.phi, n, m):
            return False
        if len(c.alphas) != n:
            return False
        for i in range(1, n + 1):
            if self.position(x, c.phi[i]) != self.position(y, i):
                return False
            want = (self.segment(x, c.phi[i], c.phi[i - 1]), y.cells[i - 1])
            if (A.src2(c.alphas[i - 1]), A.tgt2(c.alphas[i - 1])) != want:
                return False
        return True


def chains(A, L, source=None, target=None):
    """Chains of length <= L over a finite TwoCat, in a deterministic order."""
    out = []
    layer = [Chain(a, a, ()) for a in A.objects]
    for _ in range(L + 1):
        out.extend(layer)
        nxt = []
        for x in layer:
            for f in A.out1(x.target):
                nxt.append(Chain(x.source, A.tgt1(f), x.cells + (f,)))
        layer = nxt
    return [x for x in out if (source is None or x.source == source)
            and (target is None or x.target == target)]


def tilde_cells(A, L):
    """All tilde 2-cells between chains of length <= L."""
    T = Tilde(A)
    by_ends = {}
    for x in chains(A, L):
        by_ends.setdefault((x.source, x.target), []).append(x)
    out = []
    for group in by_ends.values():
        for x in group:
            for y in group:
                out.extend(T.cells2(x, y))
    return out


def tilde_compose_1(y, x):
    """Concatenation: x first, then y."""
    if x.target != y.source:
        raise NotComposable(f"chains {y!r} . {x!r}")
    return Chain(x.source, y.target, x.cells + y.cells)


def tilde_compose_v(A, y, x):
    return Tilde(A).v(y, x)


def tilde_compose_h(A, y, x):
    return Tilde(A).h(y, x)


tilde_compose_2 = tilde_compose_v


# ---------------------------------------------------------------------------
# cellwise functors

class CellFunctor:
    """Lax functor given by callables; used where a side is a Tilde."""

    def __init__(self, source, target, ob, one, two, comp, unit):
        self.source = source
        self.target = target
        self.ob = ob
        self.one = one
        self.two = two
        self.comp = comp
        self.unit = unit

    def __repr__(self):
        return f"CellFunctor({self.source!r} -> {self.target!r})"


def cellwise(u):
    """View a LaxFunctor (lax direction) as a CellFunctor."""
    if isinstance(u, CellFunctor):
        return u
    w = lax_view(u) if u.direction == "colax" else u
    return CellFunctor(w.source, w.target, w.ob.__getitem__, w.one.__getitem__,
                       w.two.__getitem__, lambda g, f: w.comp[(g, f)], w.unit.__getitem__)


def strict_cell_functor(source, target, ob, one, two):
    """Strict CellFunctor: structural cells are identities."""
    return CellFunctor(source, target, ob, one, two,
                       lambda g, f: target.i2(target.c1(one(g), one(f))),
                       lambda a: target.i2(target.i1(ob(a))))


def identity_cell_functor(A):
    return strict_cell_functor(A, A, lambda a: a, lambda f: f, lambda x: x)


def compose_cell(w, u):
    """w after u; w lax, u lax."""
    W = w.target

    def comp(g, f):
        return W.v(w.two(u.comp(g, f)), w.comp(u.one(g), u.one(f)))

    def unit(a):
        return W.v(w.two(u.unit(a)), w.unit(u.ob(a)))

    return CellFunctor(u.source, W, lambda a: w.ob(u.ob(a)), lambda f: w.one(u.one(f)),
                       lambda x: w.two(u.two(x)), comp, unit)


def structural_chain(u, cells, obj):
    """u(x_m)...u(x_1) => u(x_m...x_1), nested from the left."""
    A, B = u.source, u.target
    if not cells:
        return u.unit(obj)
    cell = B.i2(u.one(cells[0]))
    acc = cells[0]
    for g in cells[1:]:
        cell = B.v(u.comp(g, acc), B.h(B.i2(u.one(g)), cell))
        acc = A.c1(g, acc)
    return cell


def tilde_functor(u):
    """The strict functor Ãu between chain 2-categories."""
    u = cellwise(u)
    TA, TB = Tilde(u.source), Tilde(u.target)
    B = u.target

    def one(x):
        return Chain(u.ob(x.source), u.ob(x.target), tuple(u.one(f) for f in x.cells))

    def two(c):
        x = c.source
        alphas = []
        for i in range(1, len(c.phi)):
            lo, hi = c.phi[i - 1], c.phi[i]
            s = structural_chain(u, x.cells[lo:hi], TA.position(x, lo))
            alphas.append(B.v(u.two(c.alphas[i - 1]), s))
        return TildeCell(one(c.source), one(c.target), c.phi, tuple(alphas))

    return strict_cell_functor(TA, TB, u.ob, one, two)


def eta(A):
    """The canonical lax functor A -> ÃA, f -> ([1], f)."""
    T = Tilde(A)

    def one(f):
        return Chain(A.src1(f), A.tgt1(f), (f,))

    def two(x):
        return TildeCell(one(A.src2(x)), one(A.tgt2(x)), (0, 1), (x,))

    def comp(g, f):
        gf = A.c1(g, f)
        return TildeCell(T.c1(one(g), one(f)), one(gf), (0, 2), (A.i2(gf),))

    def unit(a):
        e = A.i1(a)
        return TildeCell(Chain(a, a, ()), one(e), (0, 0), (A.i2(e),))

    return CellFunctor(A, T, lambda a: a, one, two, comp, unit)


def epsilon(A):
    """The strict evaluation ÃA -> A composing chains."""
    T = Tilde(A)

    def one(x):
        return T.segment(x, len(x.cells), 0)

    def two(c):
        if not c.alphas:
            return A.i2(A.i1(c.source.source))
        return A.hs(*reversed(c.alphas))

    return strict_cell_functor(T, A, lambda a: a, one, two)


def bar(u):
    """ū = ε_B Ãu, the strict functor out of ÃA induced by a lax u."""
    u = cellwise(u)
    return compose_cell(epsilon(u.target), tilde_functor(u))


# ---------------------------------------------------------------------------
# comparisons on truncated cells

def _cells_upto(A, L):
    if isinstance(A, Tilde):
        raise ArtifactError("enumeration needs a finite base")
    return chains(A, L), tilde_cells(A, L)


def agree_on_cells(w1, w2, xs, cs):
    """Compare two functors out of a chain 2-category on given cells."""
    for x in xs:
        if w1.one(x) != w2.one(x):
            return False
    for c in cs:
        if w1.two(c) != w2.two(c):
            return False
    return True


def agree_as_lax(w1, w2, A):
    """Compare two lax functors out of a finite TwoCat on every table."""
    if any(w1.ob(a) != w2.ob(a) or w1.unit(a) != w2.unit(a) for a in A.objects):
        return False
    if any(w1.one(f) != w2.one(f) for f in A.one_cells):
        return False
    if any(w1.two(x) != w2.two(x) for x in A.two_cells):
        return False
    return all(w1.comp(g, f) == w2.comp(g, f) for (g, f) in A.comp1)


def partial_axiom_check(A, L) -> ValidationReport:
    """Every 2-category axiom instance among cells of length <= L."""
    rep = ValidationReport()
    T = Tilde(A)
    xs, cs = _cells_upto(A, L)
    for c in cs:
        if not T.is_cell(c):
            rep.add("BoundaryViolation", c)
    by_src = {}
    for c in cs:
        by_src.setdefault(c.source, []).append(c)
    for c in cs:
        if T.v(c, T.i2(c.source)) != c or T.v(T.i2(c.target), c) != c:
            rep.add("UnitViolation", "vcomp", c)
        a, b = c.source.source, c.source.target
        if T.h(c, T.i2(T.i1(a))) != c or T.h(T.i2(T.i1(b)), c) != c:
            rep.add("UnitViolation", "hcomp", c)
        for d in by_src.get(c.target, ()):
            dc = T.v(d, c)
            if not T.is_cell(dc):
                rep.add("BoundaryViolation", "vcomp", d, c)
            for e in by_src.get(d.target, ()):
                if T.v(e, dc) != T.v(T.v(e, d), c):
                    rep.add("AssociativityViolation", "vcomp", e, d, c)
    by_obj = {}
    for c in cs:
        by_obj.setdefault(c.source.source, []).append(c)
    for x in xs:
        for y in (y for y in xs if y.source == x.target and len(x.cells) + len(y.cells) <= L):
            if T.h(T.i2(y), T.i2(x)) != T.i2(T.c1(y, x)):
                rep.add("IdentityCompositeViolation", y, x)
    pairs = []
    for c in cs:
        for d in by_obj.get(c.source.target, ()):
            if len(c.source.cells) + len(d.source.cells) <= L \
                    and len(c.target.cells) + len(d.target.cells) <= L:
                pairs.append((d, c))
                if not T.is_cell(T.h(d, c)):
                    rep.add("BoundaryViolation", "hcomp", d, c)
    for (d, c) in pairs:
        for e in by_obj.get(d.source.target, ()):
            if len(c.source.cells) + len(d.source.cells) + len(e.source.cells) <= L \
                    and len(c.target.cells) + len(d.target.cells) + len(e.target.cells) <= L:
                if T.h(e, T.h(d, c)) != T.h(T.h(e, d), c):
                    rep.add("AssociativityViolation", "hcomp", e, d, c)
    pair_set = {}
    for (d, c) in pairs:
        pair_set.setdefault((c.source, d.source), []).append((d, c))
    for (d, c) in pairs:
        for c2 in by_src.get(c.target, ()):
            for d2 in by_src.get(d.target, ()):
                if len(c2.target.cells) + len(d2.target.cells) > L:
                    continue
                lhs = T.h(T.v(d2, d), T.v(c2, c))
                rhs = T.v(T.h(d2, c2), T.h(d, c))
                if lhs != rhs:
                    rep.add("InterchangeViolation", d2, d, c2, c)
    return rep


def triangle_identities(A, L) -> dict:
    """Both triangle identities on cells of length <= L."""
    xs, cs = _cells_upto(A, L)
    T = Tilde(A)
    left = compose_cell(epsilon(T), tilde_functor(eta(A)))
    first = agree_on_cells(left, identity_cell_functor(T), xs, cs)
    second = agree_as_lax(compose_cell(epsilon(A), eta(A)), identity_cell_functor(A), A)
    return {"counit_after_tilde_unit": first, "counit_after_unit": second}


def counit_unit_identity(A) -> bool:
    """ε_A η_A = 1_A on every table of A."""
    return agree_as_lax(compose_cell(epsilon(A), eta(A)), identity_cell_functor(A), A)


def eta_naturality(u, L) -> bool:
    """Ãu η_A = η_B u as lax functors A -> ÃB."""
    u = cellwise(u)
    return agree_as_lax(compose_cell(tilde_functor(u), eta(u.source)),
                        compose_cell(eta(u.target), u), u.source)


def tilde_functoriality(v, u, L) -> bool:
    """Ã(vu) = Ãv Ãu on cells of length <= L."""
    vu = compose_functors(v, u)
    xs, cs = _cells_upto(u.source, L)
    return agree_on_cells(tilde_functor(vu),
                          compose_cell(tilde_functor(v), tilde_functor(u)), xs, cs)


def bar_restricts(u) -> bool:
    """ū η_A = u on every table."""
    u = cellwise(u)
    return agree_as_lax(compose_cell(bar(u), eta(u.source)), u, u.source)


# ---------------------------------------------------------------------------
# uniqueness and the bijection

def _extension_constraints(A, B, u, L):
    """Variables and constraints for strict w: ÃA -> B with w η = u."""
    u = cellwise(u)
    T = Tilde(A)
    E = eta(A)
    xs, cs = _cells_upto(A, L)
    cset = set(cs)
    cons = []
    for x in xs:
        if not x.cells:
            cons.append(((x,), lambda w, x=x: w[x] == B.i1(u.ob(x.source))))
        elif len(x.cells) == 1:
            cons.append(((x,), lambda w, x=x: w[x] == u.one(x.cells[0])))
        else:
            head = Chain(x.source, A.tgt1(x.cells[-2]), x.cells[:-1])
            last = Chain(A.src1(x.cells[-1]), x.target, x.cells[-1:])
            cons.append(((x, head, last), lambda w, x=x, h=head, l=last:
                         w[x] == B.c1(w[l], w[h])))
    for c in cs:
        cons.append(((c, c.source, c.target), lambda w, c=c:
                     B.src2(w[c]) == w[c.source] and B.tgt2(w[c]) == w[c.target]))
    for x in xs:
        cons.append(((T.i2(x), x), lambda w, x=x: w[T.i2(x)] == B.i2(w[x])))
    for f in A.one_cells:
        for x in A.out2(f):
            c = E.two(x)
            if c in cset:
                cons.append(((c,), lambda w, c=c, x=x: w[c] == u.two(x)))
    for (g, f) in A.comp1:
        c = E.comp(g, f)
        cons.append(((c,), lambda w, c=c, g=g, f=f: w[c] == u.comp(g, f)))
    for a in A.objects:
        c = E.unit(a)
        cons.append(((c,), lambda w, c=c, a=a: w[c] == u.unit(a)))
    by_src = {}
    for c in cs:
        by_src.setdefault(c.source, []).append(c)
    for c in cs:
        for d in by_src.get(c.target, ()):
            dc = T.v(d, c)
            cons.append(((dc, d, c), lambda w, dc=dc, d=d, c=c: w[dc] == B.v(w[d], w[c])))
    for c in cs:
        for d in cs:
            if d.source.source == c.source.target:
                dc = T.h(d, c)
                if dc in cset:
                    cons.append(((dc, d, c), lambda w, dc=dc, d=d, c=c:
                                 w[dc] == B.h(w[d], w[c])))
    return xs, cs, cons


def count_strict_extensions(A, B, u, L, stop=2):
    """Number of strict w on cells <= L with w η = u (capped at ``stop``)."""
    u = cellwise(u)
    xs, cs, cons = _extension_constraints(A, B, u, L)
    order = list(xs) + sorted(cs, key=lambda c: (len(c.source.cells) + len(c.target.cells)))
    pos = {v: i for i, v in enumerate(order)}
    attached = [[] for _ in order]
    for vars_, fn in cons:
        attached[max(pos[v] for v in vars_)].append(fn)

    def domain(v):
        if isinstance(v, Chain):
            return B.hom(u.ob(v.source), u.ob(v.target))
        return B.cells2(w[v.source], w[v.target])

    w = {}
    found = [0]

    def go(i):
        if found[0] >= stop:
            return
        if i == len(order):
            found[0] += 1
            return
        v = order[i]
        for val in domain(v):
            w[v] = val
            if all(fn(w) for fn in attached[i]):
                go(i + 1)
            del w[v]

    import sys
    sys.setrecursionlimit(max(sys.getrecursionlimit(), 10 * len(order) + 1000))
    go(0)
    return found[0]


def is_strict_extension(A, B, u, values, L) -> bool:
    """Whether a table of values on cells <= L is strict and restricts to u."""
    _, _, cons = _extension_constraints(A, B, u, L)
    try:
        return all(fn(values) for _, fn in cons)
    except (KeyError, NotComposable):
        return False


def bar_values(u, L):
    """ū on every chain and tilde 2-cell of length <= L."""
    u = cellwise(u)
    b = bar(u)
    xs, cs = _cells_upto(u.source, L)
    out = {x: b.one(x) for x in xs}
    out.update({c: b.two(c) for c in cs})
    return out


def strictification_bijection_check(A, B, L=2, budget=100000):
    """u -> ū on lax functors A -> B: injectivity and round-trip through η."""
    us = []
    for u in enumerate_lax_functors(A, B):
        us.append(u)
        if len(us) > budget:
            raise EnumerationBudgetExceeded(f"more than {budget} lax functors")
    xs, cs = _cells_upto(A, L)
    keys = list(xs) + list(cs)
    images = set()
    round_trip = True
    for u in us:
        vals = bar_values(u, L)
        images.add(tuple(vals[k] for k in keys))
        if not bar_restricts(u):
            round_trip = False
    return {"lax_functors": len(us), "strict_images": len(images),
            "injective": len(images) == len(us), "round_trip": round_trip,
            "ok": len(images) == len(us) and round_trip}


# ---------------------------------------------------------------------------
# transformations

class CellTransformation:
    """Transformation between functors out of a chain 2-category."""

    def __init__(self, kind, source, target, obj, one):
        self.kind = kind
        self.source = source
        self.target = target
        self.obj = obj
        self.one = one


def bar_transformation(s):
    """σ̄ between ū and v̄ for a lax or colax transformation σ: u => v."""
    if s.kind not in ("lax", "colax", "strict"):
        raise ArtifactError(f"unknown kind {s.kind!r}")
    u, v = cellwise(s.source), cellwise(s.target)
    B = u.target
    ub, vb = bar(u), bar(v)
    kind = "lax" if s.kind == "strict" else s.kind
    memo = {}

    def one(x):
        if x in memo:
            return memo[x]
        if not x.cells:
            out = B.i2(s.obj[x.source])
        else:
            f = x.cells[-1]
            rest = Chain(x.source, u.source.src1(f), x.cells[:-1])
            inner = one(rest)
            if kind == "lax":
                out = B.v(B.wl(v.one(f), inner), B.wr(s.one[f], ub.one(rest)))
            else:
                out = B.v(B.wr(s.one[f], ub.one(rest)), B.wl(v.one(f), inner))
        memo[x] = out
        return out

    return CellTransformation(kind, ub, vb, lambda a: s.obj[a], one)


def validate_bar_transformation(t, A, L) -> ValidationReport:
    """Unit, composition and naturality of σ̄ on cells of length <= L."""
    rep = ValidationReport()
    B = t.source.target
    T = Tilde(A)
    ub, vb = t.source, t.target
    xs, cs = _cells_upto(A, L)
    for a in A.objects:
        if t.one(T.i1(a)) != B.i2(t.obj(a)):
            rep.add("NaturalityViolation", "unit", a)
    for x in xs:
        try:
            want = (B.c1(t.obj(x.target), ub.one(x)), B.c1(vb.one(x), t.obj(x.source)))
        except NotComposable:
            rep.add("BoundaryMismatch", x)
            continue
        if t.kind == "colax":
            want = want[::-1]
        if (B.src2(t.one(x)), B.tgt2(t.one(x))) != want:
            rep.add("BoundaryMismatch", x)
    if not rep.ok:
        return rep
    for x in xs:
        for y in xs:
            if y.source != x.target or len(x.cells) + len(y.cells) > L:
                continue
            a = B.wl(vb.one(y), t.one(x))
            b = B.wr(t.one(y), ub.one(x))
            want = B.v(a, b) if t.kind == "lax" else B.v(b, a)
            if t.one(T.c1(y, x)) != want:
                rep.add("NaturalityViolation", "composition", y, x)
    for c in cs:
        a0, a1 = c.source.source, c.source.target
        left = B.wr(vb.two(c), t.obj(a0))
        right = B.wl(t.obj(a1), ub.two(c))
        if t.kind == "lax":
            ok = B.v(left, t.one(c.source)) == B.v(t.one(c.target), right)
        else:
            ok = B.v(t.one(c.target), left) == B.v(right, t.one(c.source))
        if not ok:
            rep.add("NaturalityViolation", "two-cell", c)
    return rep


# ---------------------------------------------------------------------------
# duality

class OpView(_CellOps):
    """1-cell dual of a 2-category-like object."""

    def __init__(self, base):
        self.base = base

    @property
    def objects(self):
        return self.base.objects

    def src1(self, f):
        return self.base.tgt1(f)

    def tgt1(self, f):
        return self.base.src1(f)

    def src2(self, x):
        return self.base.src2(x)

    def tgt2(self, x):
        return self.base.tgt2(x)

    def i1(self, a):
        return self.base.i1(a)

    def i2(self, f):
        return self.base.i2(f)

    def c1(self, g, f):
        return self.base.c1(f, g)

    def v(self, y, x):
        return self.base.v(y, x)

    def h(self, y, x):
        return self.base.h(x, y)


def reverse_chain(x):
    return Chain(x.target, x.source, tuple(reversed(x.cells)))


def reverse_cell(c):
    m, n = len(c.source.cells), len(c.target.cells)
    phi = tuple(m - c.phi[n - i] for i in range(n + 1))
    return TildeCell(reverse_chain(c.source), reverse_chain(c.target), phi,
                     tuple(reversed(c.alphas)))


def tilde_op_iso(A):
    """j_A: (ÃA)^op -> Ã(A^op), reversing chains."""
    return strict_cell_functor(OpView(Tilde(A)), Tilde(dual(A, "op")), lambda a: a,
                               reverse_chain, reverse_cell)


def op_cell_functor(u):
    """u^op for a lax CellFunctor: comp keys swap, everything else is kept."""
    return CellFunctor(OpView(u.source) if isinstance(u.source, Tilde) else _dual_op(u.source),
                       OpView(u.target) if isinstance(u.target, Tilde) else _dual_op(u.target),
                       u.ob, u.one, u.two, lambda g, f: u.comp(f, g), u.unit)


def _dual_op(A):
    return dual(A, "op") if isinstance(A, TwoCat) else OpView(A)


def tilde_op_checks(A, L, u=None) -> dict:
    """Compatibility of j_A with η, ε and (optionally) the bar of u."""
    Aop = dual(A, "op")
    j = tilde_op_iso(A)
    out = {}
    out["eta"] = agree_as_lax(compose_cell(j, op_cell_functor(eta(A))), eta(Aop), Aop)
    xs, cs = _cells_upto(A, L)
    out["epsilon"] = agree_on_cells(compose_cell(epsilon(Aop), j), epsilon(A), xs, cs)
    if u is not None:
        out["bar"] = agree_on_cells(compose_cell(bar(dual_functor(u, "op")), j), bar(u), xs, cs)
    return out
