"""Comma and slice 2-categories, fibers, and the witness detectors."""
from __future__ import annotations

from dataclasses import dataclass, field

from .kernel import ArtifactError, TwoCat, ValidationReport, dual, relabel, sub_2cat
from .morphisms import (DirectionMismatch, LaxFunctor, as_direction, dual_functor,
                        dual_transformation, identity_functor, point_functor,
                        strict_functor)

VARIANTS = ("lax_over", "lax_under", "colax_over", "colax_under")

# duality relating each slice variant to lax_over, and the direction it needs
_VARIANT_DUAL = {"lax_over": "id", "lax_under": "op", "colax_over": "co", "colax_under": "coop"}
_VARIANT_DIRECTION = {"lax_over": "lax", "lax_under": "lax",
                      "colax_over": "colax", "colax_under": "colax"}


class TargetMismatch(ArtifactError):
    pass


class NotStrict(ArtifactError):
    pass


def _need(u, direction):
    if u.direction != direction:
        if u.is_strict:
            return as_direction(u, direction)
        raise DirectionMismatch(f"expected a {direction} functor")
    return u


# ---------------------------------------------------------------------------
# comma

def comma(u, v):
    """The comma 2-category [u, v] of a lax u: A -> C and a colax v: B -> C.

    Objects are ``(a, b, r)``; 1-cells ``(f, g, α, r, r')`` with
    α: v(g) r => r' u(f); 2-cells ``(φ, ψ, α, α', r, r')``.
    """
    u = _need(u, "lax")
    v = _need(v, "colax")
    if u.target != v.target:
        raise TargetMismatch("comma needs functors with a common target")
    A, B, C = u.source, v.source, u.target
    objects = [(a, b, r) for a in A.objects for b in B.objects
               for r in C.hom(u.ob[a], v.ob[b])]
    by_ab = {}
    for o in objects:
        by_ab.setdefault(o[:2], []).append(o[2])

    one_cells = {}
    out_of = {}
    for f in A.ones:
        a, a1 = A.one_cells[f]
        uf = u.one[f]
        for g in B.ones:
            b, b1 = B.one_cells[g]
            vg = v.one[g]
            for r in by_ab.get((a, b), ()):
                src = C.comp1[(vg, r)]
                for r1 in by_ab.get((a1, b1), ()):
                    for al in C.cells2(src, C.comp1[(r1, uf)]):
                        F = (f, g, al, r, r1)
                        one_cells[F] = ((a, b, r), (a1, b1, r1))
                        out_of.setdefault((a, b, r), []).append(F)

    two_cells = {}
    out2 = {}
    for F, (O, O1) in one_cells.items():
        f, g, al, r, r1 = F
        for ph in A.out2(f):
            f1 = A.two_cells[ph][1]
            lhs = C.vcomp[(C.hcomp[(C.id2[r1], u.two[ph])], al)]
            for ps in B.out2(g):
                g1 = B.two_cells[ps][1]
                vps_r = C.hcomp[(v.two[ps], C.id2[r])]
                for al1 in C.cells2(C.comp1[(v.one[g1], r)], C.comp1[(r1, u.one[f1])]):
                    if lhs == C.vcomp[(al1, vps_r)]:
                        X = (ph, ps, al, al1, r, r1)
                        two_cells[X] = (F, (f1, g1, al1, r, r1))
                        out2.setdefault(F, []).append(X)

    def alpha_comp(F1, F):
        f, g, al, r, r1 = F
        f1, g1, al1, _, r2 = F1
        return C.vs(C.hcomp[(C.id2[r2], u.comp[(f1, f)])],
                    C.hcomp[(al1, C.id2[u.one[f]])],
                    C.hcomp[(C.id2[v.one[g1]], al)],
                    C.hcomp[(v.comp[(g1, g)], C.id2[r])])

    comp1 = {}
    for F, (O, O1) in one_cells.items():
        for F1 in out_of.get(O1, ()):
            comp1[(F1, F)] = (A.comp1[(F1[0], F[0])], B.comp1[(F1[1], F[1])],
                              alpha_comp(F1, F), F[3], F1[4])
    id1 = {}
    for (a, b, r) in objects:
        al = C.vcomp[(C.hcomp[(C.id2[r], u.unit[a])], C.hcomp[(v.unit[b], C.id2[r])])]
        id1[(a, b, r)] = (A.id1[a], B.id1[b], al, r, r)
    id2 = {F: (A.id2[F[0]], B.id2[F[1]], F[2], F[2], F[3], F[4]) for F in one_cells}
    vcomp = {}
    for X, (F, G) in two_cells.items():
        for Y in out2.get(G, ()):
            vcomp[(Y, X)] = (A.vcomp[(Y[0], X[0])], B.vcomp[(Y[1], X[1])], X[2], Y[3], X[4], X[5])
    hcomp = {}
    for X, (F, G) in two_cells.items():
        O1 = one_cells[F][1]
        for F1 in out_of.get(O1, ()):
            for Y in out2.get(F1, ()):
                G1 = two_cells[Y][1]
                hcomp[(Y, X)] = (A.hcomp[(Y[0], X[0])], B.hcomp[(Y[1], X[1])],
                                 comp1[(F1, F)][2], comp1[(G1, G)][2], X[4], Y[5])
    return TwoCat(objects, one_cells, two_cells, comp1, vcomp, hcomp, id1, id2)


# ---------------------------------------------------------------------------
# slices

def _lax_over(u, b):
    P = point_functor(u.target, b, "colax")
    K = comma(u, P)
    return relabel(K, lambda o: (o[0], o[2]), lambda F: (F[0], F[2], F[4]),
                   lambda X: (X[0], X[2], X[3], X[5]))


def slice(u, b, variant="lax_over"):
    """One of the four slice 2-categories of u at b.

    Objects are pairs ``(a, p)``, 1-cells ``(f, α, p')`` and 2-cells
    ``(β, α, α', p')``; the variants other than lax_over are duals of a
    lax_over slice of a dual functor, so they share this identifier shape.
    """
    if variant not in VARIANTS:
        raise ValueError(f"unknown slice variant {variant!r}")
    u = _need(u, _VARIANT_DIRECTION[variant])
    if b not in u.target.id1:
        raise ArtifactError(f"{b!r} is not an object of the target")
    k = _VARIANT_DUAL[variant]
    if k == "id":
        return _lax_over(u, b)
    return dual(_lax_over(dual_functor(u, k), b), k)


# ---------------------------------------------------------------------------
# induced morphisms

def induced_comma_morphism(s, v):
    """The strict functor [u', v] -> [u, v] induced by a colax σ: u => u'."""
    if s.kind not in ("colax", "strict"):
        raise DirectionMismatch("induced comma morphism needs a colax transformation")
    u, u1 = s.source, s.target
    S = comma(u1, v)
    T = comma(u, v)
    C = u.target
    sg = s.obj

    def ob(o):
        a, b, r = o
        return (a, b, C.comp1[(r, sg[a])])

    def al_new(f, al, r1):
        a = u.source.one_cells[f][0]
        return C.vcomp[(C.hcomp[(C.id2[r1], s.one[f])], C.hcomp[(al, C.id2[sg[a]])])]

    def one(F):
        f, g, al, r, r1 = F
        a, a1 = u.source.one_cells[f]
        return (f, g, al_new(f, al, r1), C.comp1[(r, sg[a])], C.comp1[(r1, sg[a1])])

    def two(X):
        ph, ps, al, al1, r, r1 = X
        f, f1 = u.source.two_cells[ph]
        a, a1 = u.source.one_cells[f]
        return (ph, ps, al_new(f, al, r1), al_new(f1, al1, r1),
                C.comp1[(r, sg[a])], C.comp1[(r1, sg[a1])])

    return strict_functor(S, T, {o: ob(o) for o in S.objects},
                          {F: one(F) for F in S.one_cells},
                          {X: two(X) for X in S.two_cells})


def _induced_lax_over(u, v, w, s, c):
    u = _need(u, "lax")
    v = _need(v, "lax")
    w = _need(w, "lax")
    if s.kind not in ("colax", "strict"):
        raise DirectionMismatch("lax_over induced morphism needs a colax transformation")
    S = slice(w, c, "lax_over")
    T = slice(v, c, "lax_over")
    A, C = w.source, w.target
    sg = s.obj

    def al_new(f, al, p1):
        a = A.one_cells[f][0]
        return C.vcomp[(C.hcomp[(C.id2[p1], s.one[f])], C.hcomp[(al, C.id2[sg[a]])])]

    ob = {(a, p): (u.ob[a], C.comp1[(p, sg[a])]) for (a, p) in S.objects}
    one = {}
    for F in S.one_cells:
        f, al, p1 = F
        a1 = A.one_cells[f][1]
        one[F] = (u.one[f], al_new(f, al, p1), C.comp1[(p1, sg[a1])])
    two = {}
    for X in S.two_cells:
        be, al, al1, p1 = X
        f, f1 = A.two_cells[be]
        a1 = A.one_cells[f][1]
        two[X] = (u.two[be], al_new(f, al, p1), al_new(f1, al1, p1), C.comp1[(p1, sg[a1])])
    comp = {}
    for (F1, F), G in S.comp1.items():
        top = T.comp1[(one[F1], one[F])]
        X = (u.comp[(F1[0], F[0])], top[1], one[G][1], one[G][2])
        if X not in T.two_cells:
            raise ArtifactError("structural cell is not a 2-cell of the target slice")
        comp[(F1, F)] = X
    unit = {}
    for O in S.objects:
        top = T.id1[ob[O]]
        img = one[S.id1[O]]
        X = (u.unit[O[0]], top[1], img[1], img[2])
        if X not in T.two_cells:
            raise ArtifactError("unit cell is not a 2-cell of the target slice")
        unit[O] = X
    return LaxFunctor(S, T, ob, one, two, comp, unit, "lax")


def induced_slice_morphism(u, v, w, s, c, variant="lax_over"):
    """The functor between slices over c induced by a triangle v u ≈ w.

    lax_over needs a colax σ: vu => w and lax functors; colax_over a lax
    σ: vu => w and colax functors; lax_under a lax σ: w => vu; colax_under a
    colax σ: w => vu.  The last three are computed by duality.
    """
    if variant not in VARIANTS:
        raise ValueError(f"unknown slice variant {variant!r}")
    k = _VARIANT_DUAL[variant]
    d = _VARIANT_DIRECTION[variant]
    u, v, w = _need(u, d), _need(v, d), _need(w, d)
    if k == "id":
        return _induced_lax_over(u, v, w, s, c)
    F = _induced_lax_over(dual_functor(u, k), dual_functor(v, k), dual_functor(w, k),
                          dual_transformation(s, k), c)
    return dual_functor(F, k)


# ---------------------------------------------------------------------------
# fibers

def fiber(u, b):
    """Sub-2-category of cells sent to b, 1_b and 1_{1_b} by a strict u."""
    if not u.is_strict:
        raise NotStrict("fibers are defined for strict functors")
    A, B = u.source, u.target
    ib = B.id1[b]
    iib = B.id2[ib]
    obs = [a for a in A.objects if u.ob[a] == b]
    ones = [f for f in A.ones if u.one[f] == ib]
    twos = [x for x in A.twos if u.two[x] == iib]
    return sub_2cat(A, obs, ones, twos)


def fiber_J(u, b, variant):
    """The inclusion of the fiber into a slice: a -> (a, 1_b)."""
    if not u.is_strict:
        raise NotStrict("fiber inclusions are defined for strict functors")
    B = u.target
    F = fiber(u, b)
    S = slice(u, b, variant)
    ib = B.id1[b]
    iib = B.id2[ib]
    return strict_functor(F, S, {a: (a, ib) for a in F.objects},
                          {f: (f, iib, ib) for f in F.one_cells},
                          {x: (x, iib, iib, ib) for x in F.two_cells})


# ---------------------------------------------------------------------------
# final objects and preadjoints

@dataclass
class FinalWitness:
    """An object z with chosen final objects p_a of each Hom(a, z).

    ``cells[f]`` is the unique 2-cell f => p_a for f in Hom(a, z).
    """
    z: object
    finals: dict
    cells: dict = field(default_factory=dict)


def hom_final(A, a, z):
    """The first final object of Hom(a, z) in identifier order, or None."""
    hom = A.hom(a, z)
    for t in hom:
        if all(len(A.cells2(f, t)) == 1 for f in hom):
            return t
    return None


def has_object_admitting_final(A):
    for z in A.objects:
        finals = {}
        for a in A.objects:
            t = hom_final(A, a, z)
            if t is None:
                break
            finals[a] = t
        else:
            cells = {}
            for a, t in finals.items():
                for f in A.hom(a, z):
                    cells[f] = A.cells2(f, t)[0]
            return FinalWitness(z, finals, cells)
    return None


def has_object_admitting_initial(A):
    """Object z such that every Hom(a, z) has an initial object."""
    return has_object_admitting_final(dual(A, "co"))


def op_admits_final(A):
    """Object z such that every Hom(z, a) has a final object."""
    return has_object_admitting_final(dual(A, "op"))


def op_admits_initial(A):
    return has_object_admitting_final(dual(A, "coop"))


_DETECTORS = {
    ("left", "colax"): ("colax_over", has_object_admitting_final),
    ("left", "lax"): ("lax_over", has_object_admitting_initial),
    ("right", "colax"): ("colax_under", op_admits_final),
    ("right", "lax"): ("lax_under", op_admits_initial),
}


@dataclass
class Verdict:
    ok: bool
    witnesses: dict

    def __bool__(self):
        return self.ok


def is_preadjoint(u, side, flavor, stop_early=False):
    """Check the slice condition for every object of the target."""
    variant, detect = _DETECTORS[(side, flavor)]
    u = _need(u, flavor)
    wit = {}
    ok = True
    for b in u.target.objects:
        wit[b] = detect(slice(u, b, variant))
        if wit[b] is None:
            ok = False
            if stop_early:
                break
    return Verdict(ok, wit)


PREFIBRATION_KINDS = {
    "pre": ("colax_under", "left", "lax"),
    "preop": ("colax_over", "right", "lax"),
    "preco": ("lax_under", "left", "colax"),
    "precoop": ("lax_over", "right", "colax"),
}


def is_prefibration(u, kind="pre", stop_early=False):
    """Whether every fiber inclusion J_b is the required preadjoint.

    ``kind`` is one of pre, preop, preco, precoop.
    """
    if not u.is_strict:
        raise NotStrict("prefibrations are defined for strict functors")
    variant, side, flavor = PREFIBRATION_KINDS[kind]
    wit = {}
    ok = True
    for b in u.target.objects:
        J = fiber_J(u, b, variant)
        v = is_preadjoint(J, side, flavor, stop_early)
        wit[b] = v
        if not v.ok:
            ok = False
            if stop_early:
                break
    return Verdict(ok, wit)


# ---------------------------------------------------------------------------
# lax-colax adjunctions

@dataclass
class LaxColaxAdjunction:
    """Data of a lax-colax adjunction between lax u: A -> B and colax v: B -> A."""
    u: LaxFunctor
    v: LaxFunctor
    p: dict
    p_one: dict
    q: dict
    q_one: dict
    sigma: dict
    tau: dict


def validate_lax_colax_adjunction(d: LaxColaxAdjunction) -> ValidationReport:
    rep = ValidationReport()
    u = _need(d.u, "lax")
    v = _need(d.v, "colax")
    A, B = u.source, u.target
    if v.source != B or v.target != A:
        rep.add("TargetMismatch")
        return rep
    p, pg, q, qf, sg, tau = d.p, d.p_one, d.q, d.q_one, d.sigma, d.tau

    def uv(x):
        return u.one[v.one[x]]

    try:
        for b in B.objects:
            if B.one_cells[p[b]] != (u.ob[v.ob[b]], b):
                rep.add("BoundaryMismatch", "p", b)
            if A.two_cells[tau[b]] != (A.comp1[(v.one[p[b]], q[v.ob[b]])], A.id1[v.ob[b]]):
                rep.add("BoundaryMismatch", "tau", b)
        for a in A.objects:
            if A.one_cells[q[a]] != (a, v.ob[u.ob[a]]):
                rep.add("BoundaryMismatch", "q", a)
        if not rep.ok:
            return rep
        for a in A.objects:
            if B.two_cells[sg[a]] != (B.id1[u.ob[a]], B.comp1[(p[u.ob[a]], u.one[q[a]])]):
                rep.add("BoundaryMismatch", "sigma", a)
        for g, (b, b1) in B.one_cells.items():
            if B.two_cells[pg[g]] != (B.comp1[(g, p[b])], B.comp1[(p[b1], uv(g))]):
                rep.add("BoundaryMismatch", "p_one", g)
        for f, (a, a1) in A.one_cells.items():
            want = (A.comp1[(v.one[u.one[f]], q[a])], A.comp1[(q[a1], f)])
            if A.two_cells[qf[f]] != want:
                rep.add("BoundaryMismatch", "q_one", f)
    except KeyError as e:
        rep.add("MissingAssignment", e.args[0])
    if not rep.ok:
        return rep

    wlB, wrB, wlA, wrA = B.wl, B.wr, A.wl, A.wr
    # 1
    for be, (g, g1) in B.two_cells.items():
        b, b1 = B.one_cells[g]
        lhs = B.v(wlB(p[b1], u.two[v.two[be]]), pg[g])
        rhs = B.v(pg[g1], wrB(be, p[b]))
        if lhs != rhs:
            rep.add("ALCViolation(1)", be)
    # 2
    for (g1, g), gg in B.comp1.items():
        b = B.one_cells[g][0]
        b2 = B.one_cells[g1][1]
        lhs = B.vs(wlB(p[b2], u.comp[(v.one[g1], v.one[g])]), wrB(pg[g1], uv(g)),
                   wlB(g1, pg[g]))
        rhs = B.v(wlB(p[b2], u.two[v.comp[(g1, g)]]), pg[gg])
        if lhs != rhs:
            rep.add("ALCViolation(2)", g1, g)
    # 3
    for b in B.objects:
        lhs = B.v(wlB(p[b], u.two[v.unit[b]]), pg[B.id1[b]])
        rhs = wlB(p[b], u.unit[v.ob[b]])
        if lhs != rhs:
            rep.add("ALCViolation(3)", b)
    # 4
    for al, (f, f1) in A.two_cells.items():
        a, a1 = A.one_cells[f]
        lhs = A.v(qf[f1], wrA(v.two[u.two[al]], q[a]))
        rhs = A.v(wlA(q[a1], al), qf[f])
        if lhs != rhs:
            rep.add("ALCViolation(4)", al)
    # 5
    for (f1, f), ff in A.comp1.items():
        a = A.one_cells[f][0]
        lhs = A.vs(wrA(qf[f1], f), wlA(v.one[u.one[f1]], qf[f]),
                   wrA(v.comp[(u.one[f1], u.one[f])], q[a]))
        rhs = A.v(qf[ff], wrA(v.two[u.comp[(f1, f)]], q[a]))
        if lhs != rhs:
            rep.add("ALCViolation(5)", f1, f)
    # 6
    for a in A.objects:
        lhs = A.v(qf[A.id1[a]], wrA(v.two[u.unit[a]], q[a]))
        rhs = wrA(v.unit[u.ob[a]], q[a])
        if lhs != rhs:
            rep.add("ALCViolation(6)", a)
    # 7
    for f, (a, a1) in A.one_cells.items():
        pa1 = p[u.ob[a1]]
        vuf = v.one[u.one[f]]
        lhs = B.vs(wlB(pa1, u.two[qf[f]]), wlB(pa1, u.comp[(vuf, q[a])]),
                   wrB(pg[u.one[f]], u.one[q[a]]), wlB(u.one[f], sg[a]))
        rhs = B.v(wlB(pa1, u.comp[(q[a1], f)]), wrB(sg[a1], u.one[f]))
        if lhs != rhs:
            rep.add("ALCViolation(7)", f)
    # 8
    for g, (b, b1) in B.one_cells.items():
        qvb = q[v.ob[b]]
        lhs = A.vs(wrA(tau[b1], v.one[g]), wlA(v.one[p[b1]], qf[v.one[g]]),
                   wrA(v.comp[(p[b1], uv(g))], qvb), wrA(v.two[pg[g]], qvb))
        rhs = A.v(wlA(v.one[g], tau[b]), wrA(v.comp[(g, p[b])], qvb))
        if lhs != rhs:
            rep.add("ALCViolation(8)", g)
    # 9
    for b in B.objects:
        qvb = q[v.ob[b]]
        lhs = B.vs(wlB(p[b], u.two[tau[b]]), wlB(p[b], u.comp[(v.one[p[b]], qvb)]),
                   wrB(pg[p[b]], u.one[qvb]), wlB(p[b], sg[v.ob[b]]))
        rhs = wlB(p[b], u.unit[v.ob[b]])
        if lhs != rhs:
            rep.add("ALCViolation(9)", b)
    # 10
    for a in A.objects:
        pua = p[u.ob[a]]
        lhs = A.vs(wrA(tau[u.ob[a]], q[a]), wlA(v.one[pua], qf[q[a]]),
                   wrA(v.comp[(pua, u.one[q[a]])], q[a]), wrA(v.two[sg[a]], q[a]))
        rhs = wrA(v.unit[u.ob[a]], q[a])
        if lhs != rhs:
            rep.add("ALCViolation(10)", a)
    return rep


def identity_adjunction(A):
    u = identity_functor(A, "lax")
    v = identity_functor(A, "colax")
    return LaxColaxAdjunction(u, v, dict(A.id1), {g: A.id2[g] for g in A.one_cells},
                              dict(A.id1), {f: A.id2[f] for f in A.one_cells},
                              {a: A.id2[A.id1[a]] for a in A.objects},
                              {a: A.id2[A.id1[a]] for a in A.objects})
