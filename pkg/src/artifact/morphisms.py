"""Lax and colax functors, transformations and modifications."""
from __future__ import annotations

import random as _random

from .kernel import (ArtifactError, NotComposable, ValidationError, ValidationReport, dual,
                     ordinal, point, product, sort_key)


class DirectionMismatch(ArtifactError):
    pass


class KindUnsupported(ArtifactError):
    pass


class LaxFunctor:
    """A lax (or colax) functor given by explicit tables.

    For ``direction == "lax"`` the structural cells are
    ``comp[(g, f)]: u(g)u(f) => u(gf)`` and ``unit[a]: 1 => u(1_a)``;
    colax functors store the same tables with reversed 2-cells.
    """

    def __init__(self, source, target, ob, one, two, comp, unit, direction="lax"):
        if direction not in ("lax", "colax"):
            raise ValueError(f"unknown direction {direction!r}")
        self.source = source
        self.target = target
        self.ob = dict(ob)
        self.one = dict(one)
        self.two = dict(two)
        self.comp = dict(comp)
        self.unit = dict(unit)
        self.direction = direction

    def __eq__(self, other):
        if not isinstance(other, LaxFunctor):
            return NotImplemented
        return (self.direction == other.direction and self.ob == other.ob
                and self.one == other.one and self.two == other.two
                and self.comp == other.comp and self.unit == other.unit
                and self.source == other.source and self.target == other.target)

    __hash__ = None

    def __repr__(self):
        return f"LaxFunctor({self.direction}, {self.source!r} -> {self.target!r})"

    def replace(self, **kw):
        d = dict(source=self.source, target=self.target, ob=self.ob, one=self.one,
                 two=self.two, comp=self.comp, unit=self.unit, direction=self.direction)
        d.update(kw)
        return LaxFunctor(**d)

    @property
    def is_strict(self):
        B = self.target
        return (all(B.is_id2(x) for x in self.comp.values())
                and all(B.is_id2(x) for x in self.unit.values()))

    @property
    def is_normalized(self):
        A, B = self.source, self.target
        if not all(B.is_id2(x) for x in self.unit.values()):
            return False
        for (g, f), x in self.comp.items():
            if (g in A.id1.values() or f in A.id1.values()) and not B.is_id2(x):
                return False
        return True

    @property
    def is_pseudo(self):
        return all(_invertible(self.target, x)
                   for x in list(self.comp.values()) + list(self.unit.values()))

    def chain_image(self, chain):
        """u(x_n)...u(x_1) for a chain listed in application order."""
        B = self.target
        out = self.one[chain[0]]
        for f in chain[1:]:
            out = B.c1(self.one[f], out)
        return out


Functor = LaxFunctor


def _invertible(B, x):
    s, t = B.two_cells[x]
    return any(B.vcomp[(y, x)] == B.id2[s] and B.vcomp[(x, y)] == B.id2[t]
               for y in B.cells2(t, s))


# ---------------------------------------------------------------------------
# basic functors

def strict_functor(A, B, ob, one, two, direction="lax"):
    """Functor whose structural cells are identities (no check performed)."""
    comp = {(g, f): B.id2[B.c1(one[g], one[f])] for (g, f) in A.comp1}
    unit = {a: B.id2[B.id1[ob[a]]] for a in A.objects}
    return LaxFunctor(A, B, ob, one, two, comp, unit, direction)


def identity_functor(A, direction="lax"):
    return strict_functor(A, A, {a: a for a in A.objects}, {f: f for f in A.one_cells},
                          {x: x for x in A.two_cells}, direction)


def constant_functor(A, B, b, direction="lax"):
    f = B.id1[b]
    return strict_functor(A, B, {a: b for a in A.objects}, {g: f for g in A.one_cells},
                          {x: B.id2[f] for x in A.two_cells}, direction)


def point_functor(B, b, direction="lax"):
    """The object b as a functor from the point."""
    return constant_functor(point(), B, b, direction).replace(source=point())


def projection(A, B, i, direction="lax"):
    """Projection of product(A, B) onto its i-th factor."""
    P = product(A, B)
    C = (A, B)[i]
    return strict_functor(P, C, {a: a[i] for a in P.objects}, {f: f[i] for f in P.one_cells},
                          {x: x[i] for x in P.two_cells}, direction)


def as_direction(u, direction):
    """A strict functor viewed with the requested direction tag."""
    if u.direction == direction:
        return u
    if not u.is_strict:
        raise DirectionMismatch("only strict functors change direction freely")
    return u.replace(direction=direction)


# ---------------------------------------------------------------------------
# validation

def _co_view(u):
    return LaxFunctor(dual(u.source, "co"), dual(u.target, "co"), u.ob, u.one, u.two,
                      u.comp, u.unit, "lax" if u.direction == "colax" else "colax")


def lax_view(u):
    """A lax functor with the same tables: u itself or its co-dual."""
    return u if u.direction == "lax" else _co_view(u)


def validate_functor(u) -> ValidationReport:
    return _validate_lax(lax_view(u))


def _validate_lax(u) -> ValidationReport:
    A, B = u.source, u.target
    rep = ValidationReport()
    for a in A.objects:
        if a not in u.ob:
            rep.add("MissingAssignment", "ob", a)
        elif u.ob[a] not in B.id1:
            rep.add("BoundaryMismatch", "ob", a)
    for f in A.ones:
        if f not in u.one:
            rep.add("MissingAssignment", "one", f)
    for x in A.twos:
        if x not in u.two:
            rep.add("MissingAssignment", "two", x)
    for k in A.comp1:
        if k not in u.comp:
            rep.add("MissingAssignment", "comp", *k)
    for a in A.objects:
        if a not in u.unit:
            rep.add("MissingAssignment", "unit", a)
    if not rep.ok:
        return rep
    for f, (s, t) in A.one_cells.items():
        if B.one_cells.get(u.one[f]) != (u.ob[s], u.ob[t]):
            rep.add("BoundaryMismatch", "one", f)
    for x, (s, t) in A.two_cells.items():
        if B.two_cells.get(u.two[x]) != (u.one[s], u.one[t]):
            rep.add("BoundaryMismatch", "two", x)
    if not rep.ok:
        return rep
    for (g, f), gf in A.comp1.items():
        want = (B.comp1[(u.one[g], u.one[f])], u.one[gf])
        if B.two_cells.get(u.comp[(g, f)]) != want:
            rep.add("BoundaryMismatch", "comp", g, f)
    for a in A.objects:
        if B.two_cells.get(u.unit[a]) != (B.id1[u.ob[a]], u.one[A.id1[a]]):
            rep.add("BoundaryMismatch", "unit", a)
    if not rep.ok:
        return rep

    for f, x in A.id2.items():
        if u.two[x] != B.id2[u.one[f]]:
            rep.add("IdentityViolation", f)
    for (y, x), z in A.vcomp.items():
        if u.two[z] != B.vcomp[(u.two[y], u.two[x])]:
            rep.add("VerticalCompositionViolation", y, x)
    # naturality of the composition cells
    for (y, x), z in A.hcomp.items():
        f, f1 = A.two_cells[x]
        g, g1 = A.two_cells[y]
        lhs = B.vcomp[(u.two[z], u.comp[(g, f)])]
        rhs = B.vcomp[(u.comp[(g1, f1)], B.hcomp[(u.two[y], u.two[x])])]
        if lhs != rhs:
            rep.add("NaturalityViolation", y, x)
    # cocycle
    for (f1, f), f1f in A.comp1.items():
        for f2 in A.out1(A.one_cells[f1][1]):
            f2f1 = A.comp1[(f2, f1)]
            lhs = B.vcomp[(u.comp[(f2f1, f)], B.hcomp[(u.comp[(f2, f1)], B.id2[u.one[f]])])]
            rhs = B.vcomp[(u.comp[(f2, f1f)], B.hcomp[(B.id2[u.one[f2]], u.comp[(f1, f)])])]
            if lhs != rhs:
                rep.add("CocycleViolation", f2, f1, f)
    # units
    for f, (a, b) in A.one_cells.items():
        uf = u.one[f]
        right = B.vcomp[(u.comp[(f, A.id1[a])], B.hcomp[(B.id2[uf], u.unit[a])])]
        left = B.vcomp[(u.comp[(A.id1[b], f)], B.hcomp[(u.unit[b], B.id2[uf])])]
        if right != B.id2[uf] or left != B.id2[uf]:
            rep.add("UnitViolation", f)
    return rep


def require_valid_functor(u):
    rep = validate_functor(u)
    if not rep.ok:
        raise ValidationError(rep, "functor")
    return u


# ---------------------------------------------------------------------------
# composition and duality

def compose_functors(v, u):
    """The composite vu (apply u first)."""
    if u.direction != v.direction:
        raise DirectionMismatch("composite needs functors of the same direction")
    if u.target != v.source:
        raise ArtifactError("target of u differs from source of v")
    if u.direction == "colax":
        return _co_view(compose_functors(_co_view(v), _co_view(u)))
    A, C = u.source, v.target
    ob = {a: v.ob[u.ob[a]] for a in A.objects}
    one = {f: v.one[u.one[f]] for f in A.one_cells}
    two = {x: v.two[u.two[x]] for x in A.two_cells}
    comp = {(g, f): C.vcomp[(v.two[c], v.comp[(u.one[g], u.one[f])])]
            for (g, f), c in u.comp.items()}
    unit = {a: C.vcomp[(v.two[c], v.unit[u.ob[a]])] for a, c in u.unit.items()}
    return LaxFunctor(A, C, ob, one, two, comp, unit, "lax")


def dual_functor(u, kind):
    if kind in ("id", "cov"):
        return u
    if kind == "op":
        return LaxFunctor(dual(u.source, "op"), dual(u.target, "op"), u.ob, u.one, u.two,
                          {(f, g): c for (g, f), c in u.comp.items()}, u.unit, u.direction)
    if kind == "co":
        return _co_view(u)
    if kind == "coop":
        return dual_functor(dual_functor(u, "op"), "co")
    raise ValueError(f"unknown duality {kind!r}")


# ---------------------------------------------------------------------------
# transformations

class Transformation:
    """Components ``obj[a]`` (1-cells) and ``one[f]`` (2-cells) of σ: u => v.

    Lax kind: ``one[f]: σ_{a'} u(f) => v(f) σ_a``; colax kind reverses it.
    Strict transformations have identity ``one[f]`` and kind "strict".
    """

    def __init__(self, kind, source, target, obj, one):
        if kind not in ("lax", "colax", "strict"):
            raise ValueError(f"unknown kind {kind!r}")
        self.kind = kind
        self.source = source
        self.target = target
        self.obj = dict(obj)
        self.one = dict(one)

    def __eq__(self, other):
        if not isinstance(other, Transformation):
            return NotImplemented
        return (self.kind == other.kind and self.obj == other.obj and self.one == other.one
                and self.source == other.source and self.target == other.target)

    __hash__ = None

    def __repr__(self):
        return f"Transformation({self.kind}, {len(self.obj)} components)"

    def replace(self, **kw):
        d = dict(kind=self.kind, source=self.source, target=self.target, obj=self.obj,
                 one=self.one)
        d.update(kw)
        return Transformation(**d)

    @property
    def is_strict(self):
        B = self.source.target
        return all(B.is_id2(x) for x in self.one.values())

    @property
    def relative_to_objects(self):
        B = self.source.target
        return all(B.id1.get(self.source.ob[a]) == f for a, f in self.obj.items())


def _flip(kind):
    return {"lax": "colax", "colax": "lax", "strict": "strict"}[kind]


def identity_transformation(u):
    B = u.target
    A = u.source
    return Transformation("strict", u, u, {a: B.id1[u.ob[a]] for a in A.objects},
                          {f: B.id2[u.one[f]] for f in A.one_cells})


def strict_transformation(u, v, obj):
    B = u.target
    one = {}
    for f, (a, a1) in u.source.one_cells.items():
        one[f] = B.id2[B.comp1[(obj[a1], u.one[f])]]
    return Transformation("strict", u, v, obj, one)


def dual_transformation(s, kind):
    """Dual of σ: op flips kind and direction, co flips kind, coop flips direction."""
    if kind in ("id", "cov"):
        return s
    if kind == "op":
        return Transformation(_flip(s.kind), dual_functor(s.target, "op"),
                              dual_functor(s.source, "op"), s.obj, s.one)
    if kind == "co":
        return Transformation(_flip(s.kind), dual_functor(s.source, "co"),
                              dual_functor(s.target, "co"), s.obj, s.one)
    if kind == "coop":
        return dual_transformation(dual_transformation(s, "op"), "co")
    raise ValueError(f"unknown duality {kind!r}")


def _lax_transformation_view(s):
    """Same data as a lax or strict transformation between lax functors."""
    if s.source.direction == "colax":
        s = dual_transformation(s, "co")
    if s.kind == "colax":
        s = dual_transformation(s, "op")
    return s


def validate_transformation(s) -> ValidationReport:
    rep = ValidationReport()
    u, v = s.source, s.target
    if u.direction != v.direction:
        rep.add("DirectionMismatch", u.direction, v.direction)
        return rep
    if u.source != v.source or u.target != v.target:
        rep.add("NotParallel")
        return rep
    s = _lax_transformation_view(s)
    u, v = s.source, s.target
    A, B = u.source, u.target
    for a in A.objects:
        if a not in s.obj:
            rep.add("MissingAssignment", "obj", a)
        elif B.one_cells.get(s.obj[a]) != (u.ob[a], v.ob[a]):
            rep.add("BoundaryMismatch", "obj", a)
    for f in A.ones:
        if f not in s.one:
            rep.add("MissingAssignment", "one", f)
    if not rep.ok:
        return rep
    for f, (a, a1) in A.one_cells.items():
        want = (B.comp1[(s.obj[a1], u.one[f])], B.comp1[(v.one[f], s.obj[a])])
        if B.two_cells.get(s.one[f]) != want:
            rep.add("BoundaryMismatch", "one", f)
    if not rep.ok:
        return rep
    for x, (f, g) in A.two_cells.items():
        a, a1 = A.one_cells[f]
        lhs = B.vcomp[(s.one[g], B.wl(s.obj[a1], u.two[x]))]
        rhs = B.vcomp[(B.wr(v.two[x], s.obj[a]), s.one[f])]
        if lhs != rhs:
            rep.add("NaturalityViolation", "two-cell", x)
    for (f1, f), f1f in A.comp1.items():
        a = A.one_cells[f][0]
        a2 = A.one_cells[f1][1]
        lhs = B.vs(B.wr(v.comp[(f1, f)], s.obj[a]), B.wl(v.one[f1], s.one[f]),
                   B.wr(s.one[f1], u.one[f]))
        rhs = B.vcomp[(s.one[f1f], B.wl(s.obj[a2], u.comp[(f1, f)]))]
        if lhs != rhs:
            rep.add("NaturalityViolation", "composition", f1, f)
    for a in A.objects:
        lhs = B.wr(v.unit[a], s.obj[a])
        rhs = B.vcomp[(s.one[A.id1[a]], B.wl(s.obj[a], u.unit[a]))]
        if lhs != rhs:
            rep.add("NaturalityViolation", "unit", a)
    if s.kind == "strict":
        for f, x in s.one.items():
            if not B.is_id2(x):
                rep.add("NotStrict", f)
    return rep


def compose_transformations_v(t, s):
    """Vertical composite t . s of strict transformations u => v => w."""
    if s.kind != "strict" or t.kind != "strict" or not (s.is_strict and t.is_strict):
        raise KindUnsupported("vertical composition is defined for strict transformations")
    u, w = s.source, t.target
    B = u.target
    obj = {a: B.comp1[(t.obj[a], s.obj[a])] for a in u.source.objects}
    return strict_transformation(u, w, obj)


def compose_transformations_h(s2, s):
    """Horizontal composite of s: u => v (A -> B) and s2: u' => v' (B -> C)."""
    if s.kind != "strict" or s2.kind != "strict" or not (s.is_strict and s2.is_strict):
        raise KindUnsupported("horizontal composition is defined for strict transformations")
    u, v = s.source, s.target
    u2, v2 = s2.source, s2.target
    C = u2.target
    obj = {a: C.comp1[(s2.obj[v.ob[a]], u2.one[s.obj[a]])] for a in u.source.objects}
    return strict_transformation(compose_functors(u2, u), compose_functors(v2, v), obj)


# ---------------------------------------------------------------------------
# modifications

class Modification:
    def __init__(self, source, target, comp):
        self.source = source
        self.target = target
        self.comp = dict(comp)

    def __repr__(self):
        return f"Modification({len(self.comp)} components)"


def validate_modification(m) -> ValidationReport:
    rep = ValidationReport()
    s, t = m.source, m.target
    if s.source.direction != t.source.direction or s.kind != t.kind:
        rep.add("KindMismatch")
        return rep
    comp = m.comp
    if s.source.direction == "colax":
        s, t = dual_transformation(t, "co"), dual_transformation(s, "co")
    if s.kind == "colax":
        s, t = dual_transformation(s, "op"), dual_transformation(t, "op")
    u, v = s.source, s.target
    A, B = u.source, u.target
    for a in A.objects:
        if B.two_cells.get(comp.get(a)) != (s.obj[a], t.obj[a]):
            rep.add("BoundaryMismatch", a)
    if not rep.ok:
        return rep
    for f, (a, a1) in A.one_cells.items():
        lhs = B.vcomp[(t.one[f], B.wr(comp[a1], u.one[f]))]
        rhs = B.vcomp[(B.wl(v.one[f], comp[a]), s.one[f])]
        if lhs != rhs:
            rep.add("ModificationViolation", f)
    return rep


def identity_modification(s):
    B = s.source.target
    return Modification(s, s, {a: B.id2[f] for a, f in s.obj.items()})


# ---------------------------------------------------------------------------
# homotopies and chains

def homotopy_from_transformation(s):
    """Lax functor h on product(ordinal(1), A) restricting to u and v."""
    u, v = s.source, s.target
    if u.direction != "lax" or v.direction != "lax":
        raise DirectionMismatch("homotopy needs lax source and target functors")
    colax = s.kind == "colax"
    A, B = u.source, u.target
    P = product(ordinal(1), A)
    S = s.obj
    ob, one, two, comp, unit = {}, {}, {}, {}, {}
    for a in A.objects:
        ob[(0, a)] = u.ob[a]
        ob[(1, a)] = v.ob[a]
        unit[(0, a)] = u.unit[a]
        unit[(1, a)] = v.unit[a]
    for f, (a, a1) in A.one_cells.items():
        one[((0, 0), f)] = u.one[f]
        one[((1, 1), f)] = v.one[f]
        one[((0, 1), f)] = (B.c1(S[a1], u.one[f]) if colax else B.c1(v.one[f], S[a]))
    for x, (f, g) in A.two_cells.items():
        a, a1 = A.one_cells[f]
        two[((0, 0), x)] = u.two[x]
        two[((1, 1), x)] = v.two[x]
        two[((0, 1), x)] = (B.wl(S[a1], u.two[x]) if colax else B.wr(v.two[x], S[a]))
    for (f1, f) in A.comp1:
        a = A.one_cells[f][0]
        a2 = A.one_cells[f1][1]
        comp[((0, 0), f1), ((0, 0), f)] = u.comp[(f1, f)]
        comp[((1, 1), f1), ((1, 1), f)] = v.comp[(f1, f)]
        if colax:
            comp[((1, 1), f1), ((0, 1), f)] = B.v(B.wl(S[a2], u.comp[(f1, f)]),
                                                  B.wr(s.one[f1], u.one[f]))
            comp[((0, 1), f1), ((0, 0), f)] = B.wl(S[a2], u.comp[(f1, f)])
        else:
            comp[((1, 1), f1), ((0, 1), f)] = B.wr(v.comp[(f1, f)], S[a])
            comp[((0, 1), f1), ((0, 0), f)] = B.v(B.wr(v.comp[(f1, f)], S[a]),
                                                  B.wl(v.one[f1], s.one[f]))
    return LaxFunctor(P, B, ob, one, two, comp, unit, "lax")


def structural_cell_chain(u, chain, obj=None):
    """The left-nested structural cell u(x_n)...u(x_1) => u(x_n...x_1).

    ``chain`` lists composable 1-cells in application order; an empty chain
    needs ``obj`` and yields the unit cell there.
    """
    w = lax_view(u)
    A, B = w.source, w.target
    if not chain:
        if obj is None:
            raise ArtifactError("empty chain needs an object")
        return w.unit[obj]
    for f, g in zip(chain, chain[1:]):
        if A.one_cells[f][1] != A.one_cells[g][0]:
            raise NotComposable(f"{g!r} after {f!r}")
    cell = B.id2[w.one[chain[0]]]
    acc = chain[0]
    for g in chain[1:]:
        cell = B.vcomp[(w.comp[(g, acc)], B.hcomp[(B.id2[w.one[g]], cell)])]
        acc = A.comp1[(g, acc)]
    return cell


def structural_cell_chain_right(u, chain):
    """Right-nested variant: u_{x_n...x_2, x_1} . (u_{x_n..x_2} o u(x_1))."""
    w = lax_view(u)
    A, B = w.source, w.target
    if len(chain) == 1:
        return B.id2[w.one[chain[0]]]
    rest = chain[1:]
    inner = structural_cell_chain_right(u, rest)
    top = rest[0]
    for g in rest[1:]:
        top = A.comp1[(g, top)]
    return B.vcomp[(w.comp[(top, chain[0])], B.hcomp[(inner, B.id2[w.one[chain[0]]])])]


# ---------------------------------------------------------------------------
# exhaustive enumeration

def enumerate_lax_functors(A, B, normalized=False, strict=False, limit=None, rng=None,
                           direction="lax"):
    """Yield every lax (or colax) functor A -> B, by constrained backtracking.

    ``rng`` shuffles candidate orders, so the first yielded functor is random.
    ``limit`` caps the number of functors produced.
    """
    if direction == "colax":
        for w in enumerate_lax_functors(dual(A, "co"), dual(B, "co"), normalized, strict,
                                        limit, rng):
            yield _co_view(w)
        return
    ids1 = set(A.id1.values())
    variables = [("o", a) for a in A.objects]
    # identities first so that normalized cases propagate quickly
    variables += [("1", f) for f in sorted(A.ones, key=lambda f: (f not in ids1, sort_key(f)))]
    variables += [("u", a) for a in A.objects]
    variables += [("c",) + k for k in sorted(A.comp1, key=sort_key)]
    variables += [("2", x) for x in A.twos]
    pos = {var: i for i, var in enumerate(variables)}
    checks = [[] for _ in variables]

    def attach(vars_, fn):
        checks[max(pos[v] for v in vars_)].append(fn)

    env = {}
    # 2-cell functoriality
    for f, x in A.id2.items():
        attach([("2", x), ("1", f)], lambda f=f, x=x: env[("2", x)] == B.id2[env[("1", f)]])
    for (y, x), z in A.vcomp.items():
        attach([("2", y), ("2", x), ("2", z)],
               lambda y=y, x=x, z=z: env[("2", z)] == B.vcomp[(env[("2", y)], env[("2", x)])])
    for (y, x), z in A.hcomp.items():
        f, f1 = A.two_cells[x]
        g, g1 = A.two_cells[y]
        vs = [("2", y), ("2", x), ("2", z), ("c", g, f), ("c", g1, f1)]

        def nat(y=y, x=x, z=z, f=f, f1=f1, g=g, g1=g1):
            lhs = B.vcomp[(env[("2", z)], env[("c", g, f)])]
            rhs = B.vcomp[(env[("c", g1, f1)], B.hcomp[(env[("2", y)], env[("2", x)])])]
            return lhs == rhs
        attach(vs, nat)
    for (f1, f), f1f in A.comp1.items():
        for f2 in A.out1(A.one_cells[f1][1]):
            f2f1 = A.comp1[(f2, f1)]
            vs = [("c", f2f1, f), ("c", f2, f1), ("c", f2, f1f), ("c", f1, f),
                  ("1", f), ("1", f2)]

            def coc(f=f, f1=f1, f2=f2, f2f1=f2f1, f1f=f1f):
                lhs = B.vcomp[(env[("c", f2f1, f)],
                               B.hcomp[(env[("c", f2, f1)], B.id2[env[("1", f)]])])]
                rhs = B.vcomp[(env[("c", f2, f1f)],
                               B.hcomp[(B.id2[env[("1", f2)]], env[("c", f1, f)])])]
                return lhs == rhs
            attach(vs, coc)
    for f, (a, b) in A.one_cells.items():
        vs = [("c", f, A.id1[a]), ("c", A.id1[b], f), ("u", a), ("u", b), ("1", f)]

        def unitc(f=f, a=a, b=b):
            uf = env[("1", f)]
            r = B.vcomp[(env[("c", f, A.id1[a])], B.hcomp[(B.id2[uf], env[("u", a)])])]
            l_ = B.vcomp[(env[("c", A.id1[b], f)], B.hcomp[(env[("u", b)], B.id2[uf])])]
            return r == B.id2[uf] and l_ == B.id2[uf]
        attach(vs, unitc)

    def domain(var):
        kind = var[0]
        if kind == "o":
            return list(B.objects)
        if kind == "1":
            s, t = A.one_cells[var[1]]
            if (normalized or strict) and var[1] == A.id1[s]:
                return [B.id1[env[("o", s)]]]
            return list(B.hom(env[("o", s)], env[("o", t)]))
        if kind == "u":
            a = var[1]
            src, tgt = B.id1[env[("o", a)]], env[("1", A.id1[a])]
            if normalized or strict:
                return [B.id2[src]] if src == tgt else []
            return list(B.cells2(src, tgt))
        if kind == "c":
            g, f = var[1], var[2]
            src = B.comp1[(env[("1", g)], env[("1", f)])]
            tgt = env[("1", A.comp1[(g, f)])]
            if strict or (normalized and (g in ids1 or f in ids1)):
                return [B.id2[src]] if src == tgt else []
            return list(B.cells2(src, tgt))
        s, t = A.two_cells[var[1]]
        return list(B.cells2(env[("1", s)], env[("1", t)]))

    count = 0
    n = len(variables)
    stack = [None] * (n + 1)

    def build():
        ob = {a: env[("o", a)] for a in A.objects}
        one = {f: env[("1", f)] for f in A.one_cells}
        two = {x: env[("2", x)] for x in A.two_cells}
        comp = {k: env[("c",) + k] for k in A.comp1}
        unit = {a: env[("u", a)] for a in A.objects}
        return LaxFunctor(A, B, ob, one, two, comp, unit, "lax")

    if n == 0:
        yield LaxFunctor(A, B, {}, {}, {}, {}, {}, "lax")
        return
    i = 0
    dom = domain(variables[0])
    if rng is not None:
        rng.shuffle(dom)
    stack[0] = iter(dom)
    while i >= 0:
        var = variables[i]
        advanced = False
        for val in stack[i]:
            env[var] = val
            if all(fn() for fn in checks[i]):
                advanced = True
                break
        if not advanced:
            env.pop(var, None)
            i -= 1
            continue
        if i == n - 1:
            yield build()
            count += 1
            if limit is not None and count >= limit:
                return
            continue
        i += 1
        dom = domain(variables[i])
        if rng is not None:
            rng.shuffle(dom)
        stack[i] = iter(dom)


def random_lax_functor(A, B, rng=None, normalized=False, strict=False, direction="lax"):
    """A random functor (first solution under shuffled search), or None."""
    rng = rng or _random.Random(0)
    for u in enumerate_lax_functors(A, B, normalized, strict, 1, rng, direction):
        return u
    return None
