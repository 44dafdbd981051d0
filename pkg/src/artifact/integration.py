"""Grothendieck integration of 2-category valued diagrams, and cylinders."""
from __future__ import annotations

from .comma import LaxColaxAdjunction, NotStrict, fiber_J, slice
from .kernel import (ArtifactError, TwoCat, ValidationReport, check_isomorphism, dual,
                     dual_mul, make_category, validate)
from .morphisms import (Transformation, compose_functors, dual_functor,
                        dual_transformation, identity_functor, identity_transformation,
                        strict_functor, strict_transformation, validate_functor, validate_transformation)


class DiagramInvalid(ArtifactError):
    pass


class VariantUnsupported(ArtifactError):
    pass


class BaseMismatch(ArtifactError):
    pass


VARIANCES = ("cov", "op", "co", "coop")


def _norm(k):
    return "cov" if k in ("id", "cov") else k


def _strict(u):
    """Strict functors are tagged lax throughout this module."""
    return u if u.direction == "lax" else u.replace(direction="lax")


class Diagram:
    """A strict 2-functor from ``dual(base, variance)`` to 2-categories.

    ``one_val[f]`` is a strict functor and ``two_val[γ]`` a strict
    transformation; both follow the orientation of f and γ in the dualized base.
    """

    def __init__(self, base, variance, ob_val, one_val, two_val):
        self.base = base
        self.variance = _norm(variance)
        self.ob_val = dict(ob_val)
        self.one_val = dict(one_val)
        self.two_val = dict(two_val)

    def __repr__(self):
        return f"Diagram({self.variance}, {self.base!r})"

    @property
    def source(self):
        return dual(self.base, self.variance)


DiagramData = Diagram


def validate_diagram(F) -> ValidationReport:
    rep = ValidationReport()
    D = F.source
    for a in D.objects:
        if a not in F.ob_val:
            rep.add("MissingAssignment", "ob_val", a)
        elif not validate(F.ob_val[a]).ok:
            rep.add("InvalidValue", a)
    if not rep.ok:
        return rep
    for f, (a, a1) in D.one_cells.items():
        u = F.one_val.get(f)
        if u is None:
            rep.add("MissingAssignment", "one_val", f)
            continue
        if u.source != F.ob_val[a] or u.target != F.ob_val[a1]:
            rep.add("BoundaryMismatch", "one_val", f)
        elif not u.is_strict or not validate_functor(u).ok:
            rep.add("NotStrictFunctor", f)
    if not rep.ok:
        return rep
    for a, f in D.id1.items():
        if _strict(F.one_val[f]) != identity_functor(F.ob_val[a]):
            rep.add("IdentityViolation", a)
    for (g, f), h in D.comp1.items():
        if _strict(F.one_val[h]) != compose_functors(_strict(F.one_val[g]), _strict(F.one_val[f])):
            rep.add("CompositionViolation", g, f)
    for x, (f, g) in D.two_cells.items():
        s = F.two_val.get(x)
        if s is None:
            rep.add("MissingAssignment", "two_val", x)
            continue
        if s.source.ob != F.one_val[f].ob or s.target.ob != F.one_val[g].ob \
                or s.source.one != F.one_val[f].one or s.target.one != F.one_val[g].one:
            rep.add("BoundaryMismatch", "two_val", x)
        elif not s.is_strict or not validate_transformation(
                _strict_trans(s, F.one_val[f], F.one_val[g])).ok:
            rep.add("NotStrictTransformation", x)
    if not rep.ok:
        return rep
    for f, x in D.id2.items():
        if not all(F.two_val[x].obj[y] == F.ob_val[D.one_cells[f][1]].id1[F.one_val[f].ob[y]]
                   for y in F.ob_val[D.one_cells[f][0]].objects):
            rep.add("IdentityViolation", "two_val", f)
    for (y, x), z in D.vcomp.items():
        a, a1 = D.one_cells[D.two_cells[x][0]]
        C = F.ob_val[a1]
        for p in F.ob_val[a].objects:
            if F.two_val[z].obj[p] != C.comp1[(F.two_val[y].obj[p], F.two_val[x].obj[p])]:
                rep.add("VerticalCompositionViolation", y, x)
                break
    for (y, x), z in D.hcomp.items():
        f, g = D.two_cells[x]
        f1 = D.two_cells[y][0]
        a = D.one_cells[f][0]
        a2 = D.one_cells[f1][1]
        C = F.ob_val[a2]
        sy, sx = F.two_val[y], F.two_val[x]
        for p in F.ob_val[a].objects:
            want = C.comp1[(sy.obj[F.one_val[g].ob[p]], F.one_val[f1].one[sx.obj[p]])]
            if F.two_val[z].obj[p] != want:
                rep.add("HorizontalCompositionViolation", y, x)
                break
    return rep


def _strict_trans(s, u, v):
    return Transformation("strict", _strict(u), _strict(v), s.obj, s.one)


# ---------------------------------------------------------------------------
# basic diagrams

def constant_diagram(A, B, variance="cov"):
    I = identity_functor(B)
    T = identity_transformation(I)
    return Diagram(A, variance, {a: B for a in A.objects}, {f: I for f in A.one_cells},
                   {x: T for x in A.two_cells})


def hom_category(A, c, a) -> TwoCat:
    """Hom(c, a) as a 2-category with identity 2-cells only."""
    objs = A.hom(c, a)
    arrows = {x: A.two_cells[x] for f in objs for x in A.out2(f)}
    comp = {(y, x): z for (y, x), z in A.vcomp.items() if x in arrows}
    return make_category(objs, arrows, comp, {f: A.id2[f] for f in objs})


def representable_diagram(A, c):
    """The covariant diagram a -> Hom(c, a), acting by composition."""
    vals = {a: hom_category(A, c, a) for a in A.objects}
    one = {}
    for f, (a, a1) in A.one_cells.items():
        S, T = vals[a], vals[a1]
        one[f] = strict_functor(S, T, {h: A.comp1[(f, h)] for h in S.objects},
                                {x: A.wl(f, x) for x in S.one_cells},
                                {x: A.wl(f, x) for x in S.two_cells})
    two = {}
    for x, (f, g) in A.two_cells.items():
        a = A.one_cells[f][0]
        two[x] = strict_transformation(one[f], one[g], {h: A.wr(x, h) for h in vals[a].objects})
    return Diagram(A, "cov", vals, one, two)


def dualize_values(F, vd):
    """Apply a duality to every value; 2-cells reverse when vd is op or coop."""
    vd = _norm(vd)
    if vd == "cov":
        return F
    reverse = vd in ("op", "coop")
    k = dual_mul(F.variance, "co") if reverse else F.variance
    return Diagram(F.base, k, {a: dual(X, vd) for a, X in F.ob_val.items()},
                   {f: _strict(dual_functor(u, vd)) for f, u in F.one_val.items()},
                   {x: dual_transformation(s, vd) for x, s in F.two_val.items()})


def rebase(F, j):
    """The same diagram seen over ``dual(base, j)``."""
    return Diagram(dual(F.base, j), dual_mul(F.variance, j), F.ob_val, F.one_val, F.two_val)


# ---------------------------------------------------------------------------
# integration

def _integrate_core(D, F):
    """Integral of a covariant diagram on the 2-category D.

    Objects ``(a, x)``; 1-cells ``(f, x, r)`` with r: F(f)(x) -> x';
    2-cells ``(γ, x, φ, s)`` with φ: r => s F(γ)_x.
    """
    objects = [(a, x) for a in D.objects for x in F.ob_val[a].objects]
    one_cells = {}
    out1 = {}
    for f, (a, a1) in D.one_cells.items():
        u = F.one_val[f]
        C = F.ob_val[a1]
        for x in F.ob_val[a].objects:
            for r in C.out1(u.ob[x]):
                cell = (f, x, r)
                one_cells[cell] = ((a, x), (a1, C.one_cells[r][1]))
                out1.setdefault((a, x), []).append(cell)
    two_cells = {}
    out2 = {}
    for (f, x, r), (O, O1) in one_cells.items():
        a1 = O1[0]
        C = F.ob_val[a1]
        for g_ in D.out2(f):
            g = D.two_cells[g_][1]
            comp_x = F.two_val[g_].obj[x]
            for s in C.hom(F.one_val[g].ob[x], O1[1]):
                tgt = C.comp1[(s, comp_x)]
                for ph in C.cells2(r, tgt):
                    X = (g_, x, ph, s)
                    two_cells[X] = ((f, x, r), (g, x, s))
                    out2.setdefault((f, x, r), []).append(X)
    comp1 = {}
    for F0, (O, O1) in one_cells.items():
        f, x, r = F0
        for F1 in out1.get(O1, ()):
            f1, x1, r1 = F1
            C = F.ob_val[D.one_cells[f1][1]]
            comp1[(F1, F0)] = (D.comp1[(f1, f)], x, C.comp1[(r1, F.one_val[f1].one[r])])
    id1 = {(a, x): (D.id1[a], x, F.ob_val[a].id1[x]) for (a, x) in objects}
    id2 = {}
    for (f, x, r) in one_cells:
        C = F.ob_val[D.one_cells[f][1]]
        id2[(f, x, r)] = (D.id2[f], x, C.id2[r], r)
    vcomp = {}
    for X, (F0, G0) in two_cells.items():
        g_, x, ph, s = X
        C = F.ob_val[D.one_cells[F0[0]][1]]
        for Y in out2.get(G0, ()):
            d_, _, ps, t = Y
            new = C.vcomp[(C.hcomp[(ps, C.id2[F.two_val[g_].obj[x]])], ph)]
            vcomp[(Y, X)] = (D.vcomp[(d_, g_)], x, new, t)
    hcomp = {}
    for X, (F0, G0) in two_cells.items():
        g_, x, ph, s = X
        O1 = one_cells[F0][1]
        for F1 in out1.get(O1, ()):
            f1 = F1[0]
            C = F.ob_val[D.one_cells[f1][1]]
            u1 = F.one_val[f1]
            for Y in out2.get(F1, ()):
                g1_, _, ph1, s1 = Y
                G1 = two_cells[Y][1]
                new = C.hcomp[(ph1, u1.two[ph])]
                hcomp[(Y, X)] = (D.hcomp[(g1_, g_)], x, new, comp1[(G1, G0)][2])
    T = TwoCat(objects, one_cells, two_cells, comp1, vcomp, hcomp, id1, id2)
    P = strict_functor(T, D, {o: o[0] for o in objects}, {c: c[0] for c in one_cells},
                       {c: c[0] for c in two_cells})
    return T, P


_DEFAULT_INNER = {"cov": "cov", "op": "coop", "co": "co", "coop": "op"}


def integrate(F, inner=None, check=False):
    """Integral of a diagram and its strict projection onto the base.

    The result is ``dual(∫ G, j)`` where G applies the duality ``inner`` to
    every value and j is fixed by the variance of F and by ``inner``.  The
    default ``inner`` gives the standard variant for each variance.
    """
    if check:
        rep = validate_diagram(F)
        if not rep.ok:
            raise DiagramInvalid(rep.summary())
    inner = _norm(inner or _DEFAULT_INNER[F.variance])
    G = dualize_values(F, inner)
    j = G.variance
    T, P = _integrate_core(G.source, G)
    if j == "cov":
        return T, P
    return dual(T, j), _strict(dual_functor(P, j)).replace(target=F.base)


def integral_parameters(variance, inner=None):
    """The outer duality j of the integral for a variance and value duality."""
    inner = _norm(inner or _DEFAULT_INNER[_norm(variance)])
    reverse = inner in ("op", "coop")
    return _norm(dual_mul(_norm(variance), "co") if reverse else _norm(variance)), inner


def constant_product_iso(A, B, T):
    """Explicit maps from the integral of the constant diagram to A x B."""
    ob = {o: o for o in T.objects}
    one = {c: (c[0], c[2]) for c in T.one_cells}
    two = {c: (c[0], c[2]) for c in T.two_cells}
    return ob, one, two


def fiber_iso(F, T, P, a):
    """Maps from F(a) to the fiber of a covariant integral over a."""
    X = F.ob_val[a]
    D = F.source
    ob = {x: (a, x) for x in X.objects}
    one = {r: (D.id1[a], x, r) for r in X.one_cells for x in [X.one_cells[r][0]]}
    two = {}
    for ph, (r, s) in X.two_cells.items():
        two[ph] = (D.id2[D.id1[a]], X.one_cells[r][0], ph, s)
    return ob, one, two


# ---------------------------------------------------------------------------
# functoriality in strict transformations

class DiagramMap:
    """A strict transformation between diagrams on the same base: a -> σ_a."""

    def __init__(self, source, target, comp):
        self.source = source
        self.target = target
        self.comp = dict(comp)


def validate_diagram_map(m) -> ValidationReport:
    rep = ValidationReport()
    F, G = m.source, m.target
    D = F.source
    if F.base != G.base or F.variance != G.variance:
        rep.add("BaseMismatch")
        return rep
    for f, (a, a1) in D.one_cells.items():
        lhs = compose_functors(_strict(m.comp[a1]), _strict(F.one_val[f]))
        rhs = compose_functors(_strict(G.one_val[f]), _strict(m.comp[a]))
        if lhs.ob != rhs.ob or lhs.one != rhs.one or lhs.two != rhs.two:
            rep.add("NaturalityViolation", f)
    for x, (f, g) in D.two_cells.items():
        a = D.one_cells[f][0]
        s1, s2 = m.comp[D.one_cells[f][1]], m.comp[a]
        for y in F.ob_val[a].objects:
            if s1.one[F.two_val[x].obj[y]] != G.two_val[x].obj[s2.ob[y]]:
                rep.add("NaturalityViolation", x, y)
                break
    return rep


def integrate_transformation(m):
    """The strict functor between covariant integrals induced by a diagram map."""
    F, G = m.source, m.target
    if F.base != G.base or F.variance != G.variance:
        raise BaseMismatch("diagram map needs diagrams on the same base")
    if F.variance != "cov":
        raise VariantUnsupported("functoriality is implemented for covariant integrals")
    S, PS = integrate(F)
    T, PT = integrate(G)
    D = F.source
    sg = m.comp
    ob = {(a, x): (a, sg[a].ob[x]) for (a, x) in S.objects}
    one = {}
    for (f, x, r) in S.one_cells:
        a, a1 = D.one_cells[f]
        one[(f, x, r)] = (f, sg[a].ob[x], sg[a1].one[r])
    two = {}
    for (g, x, ph, s) in S.two_cells:
        a, a1 = D.one_cells[D.two_cells[g][0]]
        two[(g, x, ph, s)] = (g, sg[a].ob[x], sg[a1].two[ph], sg[a1].one[s])
    return strict_functor(S, T, ob, one, two)


# ---------------------------------------------------------------------------
# J and K

_JK_SLICE = {"cov": "lax_over", "op": "lax_under", "co": "colax_over", "coop": "colax_under"}


def jk_slice_variant(variance):
    """Which slice of the projection J_a lands in, for a diagram variance."""
    return _JK_SLICE[integral_parameters(variance)[0]]


def _jk_core(D, G, a):
    T, P = _integrate_core(D, G)
    J = fiber_J(P, a, "lax_over")
    S = J.target
    Fb = J.source
    X = G.ob_val[a]

    def Fp(p):
        return G.one_val[p]

    ob = {}
    for (O, p) in S.objects:
        a1, x1 = O
        ob[(O, p)] = (a, Fp(p).ob[x1])
    one = {}
    for cell in S.one_cells:
        (f, x1, r), sg, p1 = cell
        src = S.one_cells[cell][0]
        p = src[1]
        y = Fp(p).ob[x1]
        R = X.comp1[(Fp(p1).one[r], G.two_val[sg].obj[x1])]
        one[cell] = (D.id1[a], y, R)
    two = {}
    for cell in S.two_cells:
        (g, x1, ph, s), sg, sg1, p1 = cell
        F0 = S.two_cells[cell][0]
        p = S.one_cells[F0][0][1]
        y = Fp(p).ob[x1]
        Phi = X.hcomp[(Fp(p1).two[ph], X.id2[G.two_val[sg].obj[x1]])]
        Sx = X.comp1[(Fp(p1).one[s], G.two_val[sg1].obj[x1])]
        two[cell] = (D.id2[D.id1[a]], y, Phi, Sx)
    K = strict_functor(S, Fb, ob, one, two)
    return J, K, T, P


def jk_pair(F, a):
    """The inclusion J_a of the fiber into a slice and its retraction K_a.

    Supported for the four standard variants (default value duality);
    the non-covariant ones are duals of the covariant construction.
    """
    j, inner = integral_parameters(F.variance)
    G = dualize_values(F, inner)
    J, K, T, P = _jk_core(G.source, G, a)
    if j == "cov":
        return J, K
    return _strict(dual_functor(J, j)), _strict(dual_functor(K, j))


def jk_unit_transformation(F, a):
    """The colax transformation 1 => J_a K_a on the slice (covariant F)."""
    if F.variance != "cov":
        raise VariantUnsupported("unit transformation built for covariant diagrams")
    J, K = jk_pair(F, a)
    S = J.target
    JK = compose_functors(J, K)
    X = F.ob_val[a]
    D = F.source
    obj = {}
    for (O, p) in S.objects:
        a1, x1 = O
        y = F.one_val[p].ob[x1]
        obj[(O, p)] = ((p, x1, X.id1[y]), D.id2[p], D.id1[a])
    one = {}
    for cell, (src, tgt) in S.one_cells.items():
        (f, x1, r), sg, p1 = cell
        top = S.comp1[(JK.one[cell], obj[src])]
        bot = S.comp1[(obj[tgt], cell)]
        cands = [Y for Y in S.cells2(top, bot) if Y[0][0] == sg and X.is_id2(Y[0][2])]
        if len(cands) != 1:
            raise ArtifactError("unit component not found in the slice")
        one[cell] = cands[0]
    I = identity_functor(S)
    return Transformation("colax", I, JK, obj, one)


def jk_adjunction(F, a):
    """Lax-colax adjunction data for (K_a, J_a) of a covariant diagram."""
    J, K = jk_pair(F, a)
    eta = jk_unit_transformation(F, a)
    S, Fb = J.target, J.source
    return LaxColaxAdjunction(
        u=K, v=J.replace(direction="colax"),
        p=dict(Fb.id1), p_one={g: Fb.id2[g] for g in Fb.one_cells},
        q=eta.obj, q_one=eta.one,
        sigma={o: Fb.id2[Fb.id1[K.ob[o]]] for o in S.objects},
        tau={b: S.id2[S.id1[J.ob[b]]] for b in Fb.objects})


# ---------------------------------------------------------------------------
# slice diagrams

def _slice_diagram_cov(A):
    """b -> slice(1_A, b, lax_over), acting by postcomposition."""
    I = identity_functor(A)
    vals = {b: slice(I, b, "lax_over") for b in A.objects}
    one = {}
    for f, (b, b1) in A.one_cells.items():
        S, T = vals[b], vals[b1]
        one[f] = strict_functor(
            S, T, {(x, p): (x, A.comp1[(f, p)]) for (x, p) in S.objects},
            {(h, al, p1): (h, A.wl(f, al), A.comp1[(f, p1)]) for (h, al, p1) in S.one_cells},
            {(be, al, al1, p1): (be, A.wl(f, al), A.wl(f, al1), A.comp1[(f, p1)])
             for (be, al, al1, p1) in S.two_cells})
    two = {}
    for g, (f, f1) in A.two_cells.items():
        b, b1 = A.one_cells[f]
        T = vals[b1]
        obj = {(x, p): (A.id1[x], A.wr(g, p), A.comp1[(f1, p)]) for (x, p) in vals[b].objects}
        one_ = {}
        for cell, (src, tgt) in vals[b].one_cells.items():
            one_[cell] = T.id2[T.comp1[(obj[tgt], one[f].one[cell])]]
        two[g] = Transformation("strict", one[f], one[f1], obj, one_)
    return Diagram(A, "cov", vals, one, two)


_SLICE_VARIANCE = {"lax_over": "cov", "lax_under": "coop", "colax_over": "co",
                   "colax_under": "op"}
_SLICE_DUAL = {"lax_over": "cov", "lax_under": "op", "colax_over": "co", "colax_under": "coop"}


def slice_diagram(A, variant="lax_over"):
    """b -> slice(1_A, b, variant) as a diagram on A."""
    k = _SLICE_DUAL[variant]
    F0 = _slice_diagram_cov(dual(A, k))
    if k == "cov":
        return F0
    G = dualize_values(F0, k)
    return Diagram(A, _SLICE_VARIANCE[variant], G.ob_val, G.one_val, G.two_val)


# ---------------------------------------------------------------------------
# cylinders

def _cylinder(A, kind):
    objects = list(A.ones)
    one_cells, out1 = {}, {}
    for k in A.ones:
        b, a = A.one_cells[k]
        for k1 in A.ones:
            b1, a1 = A.one_cells[k1]
            fs = A.hom(b1, b) if kind == 1 else A.hom(b, b1)
            for f in fs:
                for g in A.hom(a, a1):
                    if kind == 1:
                        src, tgt = k1, A.c1s(g, k, f)
                    else:
                        src, tgt = A.comp1[(k1, f)], A.comp1[(g, k)]
                    for al in A.cells2(src, tgt):
                        cell = (f, g, al, k, k1)
                        one_cells[cell] = (k, k1)
                        out1.setdefault(k, []).append(cell)
    two_cells, out2 = {}, {}
    for cell in one_cells:
        f, g, al, k, k1 = cell
        phis = A.out2(f) if kind == 1 else A.in2(f)
        for ph in phis:
            f1 = A.two_cells[ph][1] if kind == 1 else A.two_cells[ph][0]
            for ga in A.out2(g):
                g1 = A.two_cells[ga][1]
                if kind == 1:
                    al1 = A.vcomp[(A.hs(ga, A.id2[k], ph), al)]
                else:
                    al1 = A.vs(A.wr(ga, k), al, A.wl(k1, ph))
                X = (ph, ga, al, al1, k, k1)
                two_cells[X] = (cell, (f1, g1, al1, k, k1))
                out2.setdefault(cell, []).append(X)
    comp1 = {}
    for cell, (k, k1) in one_cells.items():
        f, g, al, _, _ = cell
        for c2 in out1.get(k1, ()):
            f1, g1, al1, _, k2 = c2
            if kind == 1:
                new = A.vcomp[(A.hs(A.id2[g1], al, A.id2[f1]), al1)]
                comp1[(c2, cell)] = (A.comp1[(f, f1)], A.comp1[(g1, g)], new, k, k2)
            else:
                new = A.vcomp[(A.wl(g1, al), A.wr(al1, f))]
                comp1[(c2, cell)] = (A.comp1[(f1, f)], A.comp1[(g1, g)], new, k, k2)
    id1 = {}
    for k in objects:
        b, a = A.one_cells[k]
        id1[k] = (A.id1[b], A.id1[a], A.id2[k], k, k)
    id2 = {c: (A.id2[c[0]], A.id2[c[1]], c[2], c[2], c[3], c[4]) for c in one_cells}
    vcomp = {}
    for X, (c, d) in two_cells.items():
        for Y in out2.get(d, ()):
            ph = A.vcomp[(Y[0], X[0])] if kind == 1 else A.vcomp[(X[0], Y[0])]
            vcomp[(Y, X)] = (ph, A.vcomp[(Y[1], X[1])], X[2], Y[3], X[4], X[5])
    hcomp = {}
    for X, (c, d) in two_cells.items():
        k1 = one_cells[c][1]
        for c2 in out1.get(k1, ()):
            for Y in out2.get(c2, ()):
                d2 = two_cells[Y][1]
                ph = A.hcomp[(X[0], Y[0])] if kind == 1 else A.hcomp[(Y[0], X[0])]
                hcomp[(Y, X)] = (ph, A.hcomp[(Y[1], X[1])], comp1[(c2, c)][2],
                                 comp1[(d2, d)][2], X[4], Y[5])
    S = TwoCat(objects, one_cells, two_cells, comp1, vcomp, hcomp, id1, id2)
    base_s = dual(A, "op" if kind == 1 else "co")
    s = strict_functor(S, base_s, {k: A.one_cells[k][0] for k in objects},
                       {c: c[0] for c in one_cells}, {X: X[0] for X in two_cells})
    t = strict_functor(S, A, {k: A.one_cells[k][1] for k in objects},
                       {c: c[1] for c in one_cells}, {X: X[1] for X in two_cells})
    return S, s, t


def cylinder_S1(A):
    """S_1(A): objects are 1-cells k: b -> a, 1-cells (f, g, α: k' => g k f)."""
    return _cylinder(A, 1)


def cylinder_S2(A):
    """S_2(A): 1-cells (f, g, α: k' f => g k) between 1-cells k and k'."""
    return _cylinder(A, 2)


def cylinder_functor(u, kind=1):
    """S_i(u) for a strict functor u."""
    if not u.is_strict:
        raise NotStrict("cylinders are functorial in strict functors")
    S, _, _ = _cylinder(u.source, kind)
    T, _, _ = _cylinder(u.target, kind)
    one = {c: (u.one[c[0]], u.one[c[1]], u.two[c[2]], u.one[c[3]], u.one[c[4]])
           for c in S.one_cells}
    two = {X: (u.two[X[0]], u.two[X[1]], u.two[X[2]], u.two[X[3]], u.one[X[4]], u.one[X[5]])
           for X in S.two_cells}
    return strict_functor(S, T, {k: u.one[k] for k in S.objects}, one, two)


def _match_iso(S, T, ob, one_pred, two_pred):
    """Complete an object map into cell maps by unique matching."""
    one = {}
    for c, (k, k1) in S.one_cells.items():
        cands = [d for d in T.hom(ob[k], ob[k1]) if one_pred(c, d)]
        if len(cands) != 1:
            return None
        one[c] = cands[0]
    two = {}
    for X, (c, d) in S.two_cells.items():
        cands = [Y for Y in T.cells2(one[c], one[d]) if two_pred(X, Y)]
        if len(cands) != 1:
            return None
        two[X] = cands[0]
    return ob, one, two


def cylinder_presentations(A, kind=1):
    """Both integral presentations of S_i(A) with the comparison maps.

    Returns a list of (integral, maps, is_isomorphism) triples.
    """
    S, _, _ = _cylinder(A, kind)
    out = []
    if kind == 1:
        F1 = rebase(slice_diagram(A, "lax_under"), "op")
        T1, _ = integrate(F1)
        F2 = dualize_values(slice_diagram(A, "lax_over"), "op")
        T2, _ = integrate(F2)
    else:
        F1 = rebase(dualize_values(slice_diagram(A, "lax_under"), "op"), "coop")
        T1, _ = integrate(F1)
        T1 = dual(T1, "op")
        F2 = dualize_values(slice_diagram(A, "colax_over"), "co")
        T2, _ = integrate(F2)
    src = {k: A.one_cells[k] for k in S.objects}
    # first presentation: over the source object b, fiber component (a, k)
    ob1 = {k: (src[k][0], (src[k][1], k)) for k in S.objects}
    maps1 = _match_iso(S, T1, ob1,
                       lambda c, d: d[0] == c[0] and d[2][0] == c[1] and d[2][1] == c[2],
                       lambda X, Y: Y[0] == X[0] and Y[2][0] == X[1])
    # second presentation: over the target object a, fiber component (b, k)
    ob2 = {k: (src[k][1], (src[k][0], k)) for k in S.objects}
    maps2 = _match_iso(S, T2, ob2,
                       lambda c, d: d[0] == c[1] and d[2][0] == c[0] and d[2][1] == c[2],
                       lambda X, Y: Y[0] == X[1] and Y[2][0] == X[0])
    for T, maps in ((T1, maps1), (T2, maps2)):
        ok = maps is not None and check_isomorphism(S, T, *maps)
        out.append((T, maps, ok))
    return out


def cylinder_of_morphism(u):
    """S(u) for a strict u: A -> B, with projections to B^op and A.

    Objects ``(b, a, k)`` with k: b -> u(a); 1-cells ``(f, g, α, k, k')`` with
    α: u(g) k f => k'; 2-cells ``(φ, γ, α, α', k, k')``.
    """
    if not u.is_strict:
        raise NotStrict("S(u) needs a strict functor")
    A, B = u.source, u.target
    objects = [(b, a, k) for a in A.objects for b in B.objects for k in B.hom(b, u.ob[a])]
    one_cells, out1 = {}, {}
    for O in objects:
        b, a, k = O
        for O1 in objects:
            b1, a1, k1 = O1
            for f in B.hom(b1, b):
                for g in A.hom(a, a1):
                    for al in B.cells2(B.c1s(u.one[g], k, f), k1):
                        cell = (f, g, al, k, k1)
                        one_cells[cell] = (O, O1)
                        out1.setdefault(O, []).append(cell)
    two_cells, out2 = {}, {}
    for cell, (O, O1) in one_cells.items():
        f, g, al, k, k1 = cell
        for ph in B.out2(f):
            f1 = B.two_cells[ph][1]
            for ga in A.out2(g):
                g1 = A.two_cells[ga][1]
                whisk = B.hs(u.two[ga], B.id2[k], ph)
                for al1 in B.cells2(B.c1s(u.one[g1], k, f1), k1):
                    if B.vcomp[(al1, whisk)] == al:
                        X = (ph, ga, al, al1, k, k1)
                        two_cells[X] = (cell, (f1, g1, al1, k, k1))
                        out2.setdefault(cell, []).append(X)
    comp1 = {}
    for cell, (O, O1) in one_cells.items():
        f, g, al, k, k1 = cell
        for c2 in out1.get(O1, ()):
            f1, g1, al1, _, k2 = c2
            new = B.vcomp[(al1, B.hs(B.id2[u.one[g1]], al, B.id2[f1]))]
            comp1[(c2, cell)] = (B.comp1[(f, f1)], A.comp1[(g1, g)], new, k, k2)
    id1 = {(b, a, k): (B.id1[b], A.id1[a], B.id2[k], k, k) for (b, a, k) in objects}
    id2 = {c: (B.id2[c[0]], A.id2[c[1]], c[2], c[2], c[3], c[4]) for c in one_cells}
    vcomp = {}
    for X, (c, d) in two_cells.items():
        for Y in out2.get(d, ()):
            vcomp[(Y, X)] = (B.vcomp[(Y[0], X[0])], A.vcomp[(Y[1], X[1])], X[2], Y[3], X[4], X[5])
    hcomp = {}
    for X, (c, d) in two_cells.items():
        O1 = one_cells[c][1]
        for c2 in out1.get(O1, ()):
            for Y in out2.get(c2, ()):
                d2 = two_cells[Y][1]
                hcomp[(Y, X)] = (B.hcomp[(X[0], Y[0])], A.hcomp[(Y[1], X[1])],
                                 comp1[(c2, c)][2], comp1[(d2, d)][2], X[4], Y[5])
    S = TwoCat(objects, one_cells, two_cells, comp1, vcomp, hcomp, id1, id2)
    s = strict_functor(S, dual(B, "op"), {o: o[0] for o in objects},
                       {c: c[0] for c in one_cells}, {X: X[0] for X in two_cells})
    t = strict_functor(S, A, {o: o[1] for o in objects},
                       {c: c[1] for c in one_cells}, {X: X[1] for X in two_cells})
    return S, s, t


def cylinder_of_square(u, u1, v, w):
    """S(v, w): S(u) -> S(u1) for a strictly commuting square u1 v = w u."""
    for x in (u, u1, v, w):
        if not x.is_strict:
            raise NotStrict("S(v, w) needs strict functors")
    S, _, _ = cylinder_of_morphism(u)
    T, _, _ = cylinder_of_morphism(u1)
    ob = {(b, a, k): (w.ob[b], v.ob[a], w.one[k]) for (b, a, k) in S.objects}
    one = {c: (w.one[c[0]], v.one[c[1]], w.two[c[2]], w.one[c[3]], w.one[c[4]])
           for c in S.one_cells}
    two = {X: (w.two[X[0]], v.two[X[1]], w.two[X[2]], w.two[X[3]], w.one[X[4]], w.one[X[5]])
           for X in S.two_cells}
    return strict_functor(S, T, ob, one, two)
