"""Finite strict 2-categories stored as explicit composition tables."""
from __future__ import annotations

import itertools
import re
import sys
from collections import defaultdict
from dataclasses import dataclass, field
from functools import cached_property


class ArtifactError(Exception):
    """Base class for errors raised by this package."""


class MissingTableEntry(ArtifactError):
    pass


class NotComposable(ArtifactError):
    pass


class QuotientIllDefined(ArtifactError):
    pass


class BudgetExceeded(ArtifactError):
    pass


class ValidationError(ArtifactError):
    """Raised by `require_valid` helpers; carries the failing report."""

    def __init__(self, report, what="structure"):
        self.report = report
        head = ", ".join(f"{t}{c}" for t, c in report.violations[:5])
        super().__init__(f"invalid {what}: {head}")


# ---------------------------------------------------------------------------
# identifiers

_PLAIN = re.compile(r"[^\s(),#]+$")
_INT = re.compile(r"-?(0|[1-9][0-9]*)$")


def encode_id(x) -> str:
    """Canonical text form of a cell identifier (str, int or nested tuple)."""
    if isinstance(x, bool):
        raise TypeError("booleans are not valid identifiers")
    if isinstance(x, int):
        return str(x)
    if isinstance(x, str):
        if not _PLAIN.match(x) or _INT.match(x):
            raise ValueError(f"identifier {x!r} cannot be written as a token")
        return x
    if isinstance(x, tuple):
        return "(" + ",".join(encode_id(y) for y in x) + ")"
    raise TypeError(f"unsupported identifier type {type(x).__name__}")


def decode_id(s: str):
    """Inverse of `encode_id`."""
    pos = 0

    def parse():
        nonlocal pos
        if s[pos] == "(":
            pos += 1
            items = []
            if s[pos] == ")":
                pos += 1
                return ()
            while True:
                items.append(parse())
                if s[pos] == ",":
                    pos += 1
                elif s[pos] == ")":
                    pos += 1
                    return tuple(items)
                else:
                    raise ValueError(f"bad identifier {s!r}")
        start = pos
        while pos < len(s) and s[pos] not in "(),":
            pos += 1
        tok = s[start:pos]
        if not _PLAIN.match(tok):
            raise ValueError(f"bad identifier {s!r}")
        return int(tok) if _INT.match(tok) else tok

    try:
        value = parse()
    except IndexError:
        raise ValueError(f"bad identifier {s!r}") from None
    if pos != len(s):
        raise ValueError(f"bad identifier {s!r}")
    return value


def sort_key(x):
    """Total order on mixed identifiers used for every deterministic choice."""
    if isinstance(x, int):
        return (0, x)
    if isinstance(x, str):
        return (1, x)
    if isinstance(x, tuple):
        return (2, tuple(sort_key(y) for y in x))
    if isinstance(x, frozenset):
        return (3, tuple(sorted(sort_key(y) for y in x)))
    if x is None:
        return (-1,)
    return (4, repr(x))


def sorted_ids(xs):
    return sorted(xs, key=sort_key)


# ---------------------------------------------------------------------------
# presentations

class TwoCat:
    """A finite strict 2-category.

    ``one_cells`` maps a 1-cell to ``(src, tgt)`` objects, ``two_cells`` maps
    a 2-cell to ``(src, tgt)`` 1-cells.  Composition tables are keyed by
    ``(later, earlier)`` pairs, as in ``g . f``.
    """

    def __init__(self, objects, one_cells, two_cells, comp1, vcomp, hcomp, id1, id2):
        self.objects = tuple(sorted_ids(set(objects)))
        self.one_cells = dict(one_cells)
        self.two_cells = dict(two_cells)
        self.comp1 = dict(comp1)
        self.vcomp = dict(vcomp)
        self.hcomp = dict(hcomp)
        self.id1 = dict(id1)
        self.id2 = dict(id2)

    def __eq__(self, other):
        if not isinstance(other, TwoCat):
            return NotImplemented
        return (set(self.objects) == set(other.objects)
                and self.one_cells == other.one_cells
                and self.two_cells == other.two_cells
                and self.comp1 == other.comp1
                and self.vcomp == other.vcomp
                and self.hcomp == other.hcomp
                and self.id1 == other.id1
                and self.id2 == other.id2)

    __hash__ = None

    def __repr__(self):
        return (f"TwoCat({len(self.objects)} objects, {len(self.one_cells)} 1-cells, "
                f"{len(self.two_cells)} 2-cells)")

    def sizes(self):
        return (len(self.objects), len(self.one_cells), len(self.two_cells))

    # -- indexes ----------------------------------------------------------
    @cached_property
    def ones(self):
        return sorted_ids(self.one_cells)

    @cached_property
    def twos(self):
        return sorted_ids(self.two_cells)

    @cached_property
    def _hom(self):
        idx = defaultdict(list)
        for f in self.ones:
            idx[self.one_cells[f]].append(f)
        return idx

    @cached_property
    def _hom2(self):
        idx = defaultdict(list)
        for a in self.twos:
            idx[self.two_cells[a]].append(a)
        return idx

    @cached_property
    def _out2(self):
        idx = defaultdict(list)
        for a in self.twos:
            idx[self.two_cells[a][0]].append(a)
        return idx

    @cached_property
    def _in2(self):
        idx = defaultdict(list)
        for a in self.twos:
            idx[self.two_cells[a][1]].append(a)
        return idx

    @cached_property
    def _out1(self):
        idx = defaultdict(list)
        for f in self.ones:
            idx[self.one_cells[f][0]].append(f)
        return idx

    @cached_property
    def _in1(self):
        idx = defaultdict(list)
        for f in self.ones:
            idx[self.one_cells[f][1]].append(f)
        return idx

    @cached_property
    def _cache(self):
        return {}

    def hom(self, a, b):
        return self._hom.get((a, b), [])

    def cells2(self, f, g):
        """2-cells f => g."""
        return self._hom2.get((f, g), [])

    def out2(self, f):
        return self._out2.get(f, [])

    def in2(self, f):
        return self._in2.get(f, [])

    def out1(self, a):
        return self._out1.get(a, [])

    def in1(self, a):
        return self._in1.get(a, [])

    def two_cells_between(self, a, b):
        """All 2-cells whose 1-cell boundaries lie in Hom(a, b)."""
        return [x for f in self.hom(a, b) for x in self.out2(f)]

    @cached_property
    def is_category(self):
        return all(self.id2.get(s) == x for x, (s, t) in self.two_cells.items())

    # -- cell access ------------------------------------------------------
    def src1(self, f):
        return self.one_cells[f][0]

    def tgt1(self, f):
        return self.one_cells[f][1]

    def src2(self, x):
        return self.two_cells[x][0]

    def tgt2(self, x):
        return self.two_cells[x][1]

    def i1(self, a):
        return self.id1[a]

    def i2(self, f):
        return self.id2[f]

    def c1(self, g, f):
        try:
            return self.comp1[(g, f)]
        except KeyError:
            raise NotComposable(f"1-cells {g!r} . {f!r} not composable") from None

    def v(self, b, a):
        try:
            return self.vcomp[(b, a)]
        except KeyError:
            raise NotComposable(f"2-cells {b!r} * {a!r} not composable") from None

    def h(self, b, a):
        try:
            return self.hcomp[(b, a)]
        except KeyError:
            raise NotComposable(f"2-cells {b!r} o {a!r} not composable") from None

    def c1s(self, *fs):
        """Composite f_1 . f_2 . ... (math order, last applied first)."""
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
        """Whiskering g o x by a 1-cell on the left."""
        return self.h(self.id2[g], x)

    def wr(self, x, f):
        """Whiskering x o f by a 1-cell on the right."""
        return self.h(x, self.id2[f])

    def is_id2(self, x):
        return self.id2.get(self.two_cells[x][0]) == x


TwoCatPresentation = TwoCat


def make_category(objects, arrows, comp, ids):
    """A 1-category as a 2-category; the identity 2-cell of f is named f."""
    arrows = dict(arrows)
    return TwoCat(objects, arrows, {f: (f, f) for f in arrows}, comp,
                  {(f, f): f for f in arrows},
                  {(g, f): h for (g, f), h in comp.items()},
                  ids, {f: f for f in arrows})


# ---------------------------------------------------------------------------
# validation

@dataclass
class ValidationReport:
    violations: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self):
        return self.ok

    def add(self, tag, *cells):
        self.violations.append((tag, cells))

    def tags(self):
        return {t for t, _ in self.violations}

    def extend(self, other, prefix=None):
        for t, c in other.violations:
            self.violations.append((t, c if prefix is None else (prefix,) + c))
        return self

    def summary(self, limit=20):
        if self.ok:
            return "ok"
        lines = [f"{len(self.violations)} violation(s)"]
        for t, c in self.violations[:limit]:
            lines.append(f"  {t}: {', '.join(map(repr, c))}")
        return "\n".join(lines)


def validate(A: TwoCat) -> ValidationReport:
    """Scan every axiom of a strict 2-category."""
    # hashing small ints is much cheaper than nested tuple ids
    back = {}
    fwd = [{}, {}, {}]
    i = 0
    for k, pool in enumerate((A.objects, A.one_cells, A.two_cells)):
        for x in pool:
            fwd[k][x] = i
            back[i] = x
            i += 1
    try:
        B = relabel(A, fwd[0], fwd[1], fwd[2])
    except KeyError:
        return _validate(A)
    rep = _validate(B)
    rep.violations = [(t, tuple(back[c] if type(c) is int else c for c in cells))
                      for t, cells in rep.violations]
    return rep


def _validate(A: TwoCat) -> ValidationReport:
    rep = ValidationReport()
    obs = set(A.objects)
    for f, (s, t) in A.one_cells.items():
        if s not in obs or t not in obs:
            rep.add("BoundaryViolation", f)
    for x, (s, t) in A.two_cells.items():
        if s not in A.one_cells or t not in A.one_cells:
            rep.add("BoundaryViolation", x)
        elif A.one_cells[s] != A.one_cells[t]:
            rep.add("ParallelismViolation", x)
    if not rep.ok:
        return rep
    for a in A.objects:
        if a not in A.id1:
            rep.add("MissingTableEntry", "id1", a)
        elif A.one_cells.get(A.id1[a]) != (a, a):
            rep.add("BoundaryViolation", "id1", a)
    for f in A.one_cells:
        if f not in A.id2:
            rep.add("MissingTableEntry", "id2", f)
        elif A.two_cells.get(A.id2[f]) != (f, f):
            rep.add("BoundaryViolation", "id2", f)
    for k in set(A.id1) - obs:
        rep.add("ExtraTableEntry", "id1", k)
    for k in set(A.id2) - set(A.one_cells):
        rep.add("ExtraTableEntry", "id2", k)

    expected1 = set()
    for f in A.ones:
        a, b = A.one_cells[f]
        for g in A.out1(b):
            expected1.add((g, f))
            h = A.comp1.get((g, f))
            if h is None:
                rep.add("MissingTableEntry", "comp1", g, f)
            elif A.one_cells.get(h) != (a, A.one_cells[g][1]):
                rep.add("BoundaryViolation", "comp1", g, f)
    for k in set(A.comp1) - expected1:
        rep.add("ExtraTableEntry", "comp1", *k)

    expectedv = set()
    for x in A.twos:
        s, t = A.two_cells[x]
        for y in A.out2(t):
            expectedv.add((y, x))
            z = A.vcomp.get((y, x))
            if z is None:
                rep.add("MissingTableEntry", "vcomp", y, x)
            elif A.two_cells.get(z) != (s, A.two_cells[y][1]):
                rep.add("BoundaryViolation", "vcomp", y, x)
    for k in set(A.vcomp) - expectedv:
        rep.add("ExtraTableEntry", "vcomp", *k)
    if not rep.ok:
        return rep

    expectedh = set()
    for x in A.twos:
        s, t = A.two_cells[x]
        b = A.one_cells[s][1]
        for y in (y for g in A.out1(b) for y in A.out2(g)):
            expectedh.add((y, x))
            z = A.hcomp.get((y, x))
            s2, t2 = A.two_cells[y]
            if z is None:
                rep.add("MissingTableEntry", "hcomp", y, x)
            elif A.two_cells.get(z) != (A.comp1[(s2, s)], A.comp1[(t2, t)]):
                rep.add("BoundaryViolation", "hcomp", y, x)
    for k in set(A.hcomp) - expectedh:
        rep.add("ExtraTableEntry", "hcomp", *k)
    if not rep.ok:
        return rep

    # unit laws
    for f, (a, b) in A.one_cells.items():
        if A.comp1[(f, A.id1[a])] != f or A.comp1[(A.id1[b], f)] != f:
            rep.add("UnitViolation", "comp1", f)
    for x, (s, t) in A.two_cells.items():
        if A.vcomp[(x, A.id2[s])] != x or A.vcomp[(A.id2[t], x)] != x:
            rep.add("UnitViolation", "vcomp", x)
        a, b = A.one_cells[s]
        if A.hcomp[(x, A.id2[A.id1[a]])] != x or A.hcomp[(A.id2[A.id1[b]], x)] != x:
            rep.add("UnitViolation", "hcomp", x)
    for (g, f), gf in A.comp1.items():
        if A.hcomp[(A.id2[g], A.id2[f])] != A.id2[gf]:
            rep.add("IdentityCompositeViolation", g, f)

    # associativity
    for (g, f), gf in A.comp1.items():
        for h in A.out1(A.one_cells[g][1]):
            if A.comp1[(h, gf)] != A.comp1[(A.comp1[(h, g)], f)]:
                rep.add("AssociativityViolation", "comp1", h, g, f)
    for (y, x), yx in A.vcomp.items():
        for z in A.out2(A.two_cells[y][1]):
            if A.vcomp[(z, yx)] != A.vcomp[(A.vcomp[(z, y)], x)]:
                rep.add("AssociativityViolation", "vcomp", z, y, x)
    by_src_obj = defaultdict(list)
    for x in A.twos:
        by_src_obj[A.one_cells[A.two_cells[x][0]][0]].append(x)
    for (y, x), yx in A.hcomp.items():
        c = A.one_cells[A.two_cells[y][0]][1]
        for z in by_src_obj.get(c, ()):
            if A.hcomp[(z, yx)] != A.hcomp[(A.hcomp[(z, y)], x)]:
                rep.add("AssociativityViolation", "hcomp", z, y, x)

    # interchange
    vpairs = defaultdict(list)
    for (y, x) in A.vcomp:
        vpairs[A.one_cells[A.two_cells[x][0]]].append((y, x))
    for (a, b), lower in vpairs.items():
        for c in {A.one_cells[g][1] for g in A.out1(b)}:
            for (y2, x2) in vpairs.get((b, c), ()):
                for (y, x) in lower:
                    lhs = A.hcomp[(A.vcomp[(y2, x2)], A.vcomp[(y, x)])]
                    rhs = A.vcomp[(A.hcomp[(y2, y)], A.hcomp[(x2, x)])]
                    if lhs != rhs:
                        rep.add("InterchangeViolation", y2, x2, y, x)
    return rep


def require_valid(A: TwoCat, what="2-category") -> TwoCat:
    rep = validate(A)
    if not rep.ok:
        raise ValidationError(rep, what)
    return A


# ---------------------------------------------------------------------------
# constructors

def ordinal(n: int) -> TwoCat:
    """The poset {0 < 1 < ... < n}."""
    if n < 0:
        raise ValueError("ordinal needs n >= 0")
    arrows = {(i, j): (i, j) for i in range(n + 1) for j in range(i, n + 1)}
    comp = {((j, k), (i, j)): (i, k)
            for i in range(n + 1) for j in range(i, n + 1) for k in range(j, n + 1)}
    return make_category(range(n + 1), arrows, comp, {i: (i, i) for i in range(n + 1)})


def point() -> TwoCat:
    return ordinal(0)


def empty() -> TwoCat:
    return TwoCat((), {}, {}, {}, {}, {}, {}, {})


def group_2cat(n) -> TwoCat:
    """One object, one 1-cell, 2-cells an abelian group.

    ``n`` is an order (cyclic group) or a tuple of orders (product of cyclic
    groups, elements as tuples).  Both compositions are the group law.
    """
    if isinstance(n, int):
        elems = list(range(n))

        def add(x, y):
            return (x + y) % n
        zero = 0
    else:
        mods = tuple(n)
        elems = list(itertools.product(*(range(m) for m in mods)))

        def add(x, y):
            return tuple((p + q) % m for p, q, m in zip(x, y, mods))
        zero = tuple(0 for _ in mods)
    table = {(x, y): add(x, y) for x in elems for y in elems}
    return TwoCat(["x"], {"id": ("x", "x")}, {g: ("id", "id") for g in elems},
                  {("id", "id"): "id"}, table, dict(table), {"x": "id"}, {"id": zero})


def monoid_category(elements, mult, unit, obj="x") -> TwoCat:
    """One-object 1-category from a finite monoid table."""
    arrows = {m: (obj, obj) for m in elements}
    comp = {(g, f): mult[(g, f)] for g in elements for f in elements}
    return make_category([obj], arrows, comp, {obj: unit})


def poset_category(elements, leq) -> TwoCat:
    """Category of a finite poset; ``leq(a, b)`` decides a <= b."""
    els = list(elements)
    arrows = {(a, b): (a, b) for a in els for b in els if leq(a, b)}
    comp = {((b, c), (a, b)): (a, c) for (a, b) in arrows for (b2, c) in arrows if b2 == b}
    return make_category(els, arrows, comp, {a: (a, a) for a in els})


def dual(A: TwoCat, kind: str) -> TwoCat:
    """The op, co or coop dual.  Cell identifiers are preserved."""
    cache = A._cache
    key = ("dual", kind)
    if key in cache:
        return cache[key]
    if kind == "op":
        D = TwoCat(A.objects, {f: (t, s) for f, (s, t) in A.one_cells.items()},
                   A.two_cells, {(f, g): h for (g, f), h in A.comp1.items()},
                   A.vcomp, {(x, y): z for (y, x), z in A.hcomp.items()}, A.id1, A.id2)
    elif kind == "co":
        D = TwoCat(A.objects, A.one_cells, {x: (t, s) for x, (s, t) in A.two_cells.items()},
                   A.comp1, {(x, y): z for (y, x), z in A.vcomp.items()}, A.hcomp,
                   A.id1, A.id2)
    elif kind == "coop":
        D = dual(dual(A, "op"), "co")
    elif kind in ("id", "cov"):
        D = A
    else:
        raise ValueError(f"unknown duality {kind!r}")
    cache[key] = D
    return D


# dualities form the Klein four-group; 'id' is the neutral element
_DUAL_MUL = {
    ("id", "id"): "id", ("id", "op"): "op", ("id", "co"): "co", ("id", "coop"): "coop",
    ("op", "op"): "id", ("co", "co"): "id", ("coop", "coop"): "id",
    ("op", "co"): "coop", ("co", "op"): "coop",
    ("op", "coop"): "co", ("coop", "op"): "co",
    ("co", "coop"): "op", ("coop", "co"): "op",
}


def dual_mul(j: str, k: str) -> str:
    j = "id" if j == "cov" else j
    k = "id" if k == "cov" else k
    if j == "id":
        return k
    if k == "id":
        return j
    return _DUAL_MUL[(j, k)]


def product(A: TwoCat, B: TwoCat) -> TwoCat:
    ones = {(f, g): ((A.one_cells[f][0], B.one_cells[g][0]), (A.one_cells[f][1], B.one_cells[g][1]))
            for f in A.one_cells for g in B.one_cells}
    twos = {(x, y): ((A.two_cells[x][0], B.two_cells[y][0]), (A.two_cells[x][1], B.two_cells[y][1]))
            for x in A.two_cells for y in B.two_cells}

    def table(ta, tb):
        return {((g1, g2), (f1, f2)): (h1, h2)
                for (g1, f1), h1 in ta.items() for (g2, f2), h2 in tb.items()}
    return TwoCat([(a, b) for a in A.objects for b in B.objects], ones, twos,
                  table(A.comp1, B.comp1), table(A.vcomp, B.vcomp), table(A.hcomp, B.hcomp),
                  {(a, b): (A.id1[a], B.id1[b]) for a in A.objects for b in B.objects},
                  {(f, g): (A.id2[f], B.id2[g]) for f in A.one_cells for g in B.one_cells})


def coproduct(A: TwoCat, B: TwoCat) -> TwoCat:
    def tag(i, d):
        return {(i, k): (i, v) for k, v in d.items()}

    def tagcells(i, d):
        return {(i, k): ((i, s), (i, t)) for k, (s, t) in d.items()}

    def tagtable(i, d):
        return {((i, g), (i, f)): (i, h) for (g, f), h in d.items()}
    out = []
    for attr in ("comp1", "vcomp", "hcomp"):
        t = tagtable(0, getattr(A, attr))
        t.update(tagtable(1, getattr(B, attr)))
        out.append(t)
    ones = tagcells(0, A.one_cells)
    ones.update(tagcells(1, B.one_cells))
    twos = tagcells(0, A.two_cells)
    twos.update(tagcells(1, B.two_cells))
    id1 = tag(0, A.id1)
    id1.update(tag(1, B.id1))
    id2 = tag(0, A.id2)
    id2.update(tag(1, B.id2))
    return TwoCat([(0, a) for a in A.objects] + [(1, b) for b in B.objects],
                  ones, twos, *out, id1, id2)


def relabel(A: TwoCat, ob, one, two) -> TwoCat:
    """Rename cells through three injective maps (dicts or callables)."""
    fo = ob.__getitem__ if isinstance(ob, dict) else ob
    f1 = one.__getitem__ if isinstance(one, dict) else one
    f2 = two.__getitem__ if isinstance(two, dict) else two
    return TwoCat([fo(a) for a in A.objects],
                  {f1(f): (fo(s), fo(t)) for f, (s, t) in A.one_cells.items()},
                  {f2(x): (f1(s), f1(t)) for x, (s, t) in A.two_cells.items()},
                  {(f1(g), f1(f)): f1(h) for (g, f), h in A.comp1.items()},
                  {(f2(y), f2(x)): f2(z) for (y, x), z in A.vcomp.items()},
                  {(f2(y), f2(x)): f2(z) for (y, x), z in A.hcomp.items()},
                  {fo(a): f1(f) for a, f in A.id1.items()},
                  {f1(f): f2(x) for f, x in A.id2.items()})


def stringify(A: TwoCat) -> TwoCat:
    """Relabel every cell by its canonical text form (parses back unchanged)."""
    return relabel(A, encode_id, encode_id, encode_id)


def sub_2cat(A: TwoCat, objects, one_cells, two_cells) -> TwoCat:
    """Restriction of the tables to a sub-2-category given by its cells."""
    obs, ones, twos = set(objects), set(one_cells), set(two_cells)
    return TwoCat(obs, {f: A.one_cells[f] for f in ones},
                  {x: A.two_cells[x] for x in twos},
                  {k: v for k, v in A.comp1.items() if k[0] in ones and k[1] in ones},
                  {k: v for k, v in A.vcomp.items() if k[0] in twos and k[1] in twos},
                  {k: v for k, v in A.hcomp.items() if k[0] in twos and k[1] in twos},
                  {a: A.id1[a] for a in obs}, {f: A.id2[f] for f in ones})


# ---------------------------------------------------------------------------
# truncations and components

def _components(nodes, edges):
    parent = {n: n for n in nodes}

    def find(n):
        while parent[n] != n:
            parent[n] = parent[parent[n]]
            n = parent[n]
        return n
    for s, t in edges:
        rs, rt = find(s), find(t)
        if rs != rt:
            parent[rs] = rt
    groups = defaultdict(list)
    for n in nodes:
        groups[find(n)].append(n)
    return [sorted_ids(g) for g in groups.values()]


def pi0(A: TwoCat):
    """Connected components of objects, as frozensets in a stable order."""
    comps = _components(A.objects, A.one_cells.values())
    return sorted((frozenset(c) for c in comps), key=sort_key)


def tau_b(A: TwoCat) -> TwoCat:
    """Forget non-identity 2-cells."""
    ids = set(A.id2.values())
    return sub_2cat(A, A.objects, A.one_cells, ids)


def tau_i(A: TwoCat) -> TwoCat:
    """Identify 1-cells connected by a zigzag of 2-cells."""
    comps = _components(A.one_cells, A.two_cells.values())
    rep = {}
    for c in comps:
        for f in c:
            rep[f] = c[0]
    classes = {c[0] for c in comps}
    comp = {}
    for (g, f), h in A.comp1.items():
        key = (rep[g], rep[f])
        if comp.setdefault(key, rep[h]) != rep[h]:
            raise QuotientIllDefined(f"composition does not descend at {key!r}")
    return make_category(A.objects, {c: A.one_cells[c] for c in classes}, comp,
                         {a: rep[f] for a, f in A.id1.items()})


# ---------------------------------------------------------------------------
# isomorphisms

@dataclass
class Isomorphism:
    ob: dict
    one: dict
    two: dict


def check_isomorphism(A: TwoCat, B: TwoCat, ob, one, two) -> bool:
    """Whether the given maps form an isomorphism of 2-categories A -> B."""
    try:
        if (len(set(ob.values())) != len(A.objects) or set(ob.values()) != set(B.objects)
                or set(ob) != set(A.objects)):
            return False
        if set(one) != set(A.one_cells) or set(one.values()) != set(B.one_cells) \
                or len(set(one.values())) != len(one):
            return False
        if set(two) != set(A.two_cells) or set(two.values()) != set(B.two_cells) \
                or len(set(two.values())) != len(two):
            return False
        for f, (s, t) in A.one_cells.items():
            if B.one_cells[one[f]] != (ob[s], ob[t]):
                return False
        for x, (s, t) in A.two_cells.items():
            if B.two_cells[two[x]] != (one[s], one[t]):
                return False
        for (g, f), h in A.comp1.items():
            if B.comp1[(one[g], one[f])] != one[h]:
                return False
        for (y, x), z in A.vcomp.items():
            if B.vcomp[(two[y], two[x])] != two[z]:
                return False
        for (y, x), z in A.hcomp.items():
            if B.hcomp[(two[y], two[x])] != two[z]:
                return False
        for a, f in A.id1.items():
            if B.id1[ob[a]] != one[f]:
                return False
        for f, x in A.id2.items():
            if B.id2[one[f]] != two[x]:
                return False
    except KeyError:
        return False
    return True


def _period(A, x):
    if A.two_cells[x][0] != A.two_cells[x][1]:
        return 0
    seen, y, n = set(), x, 0
    while y not in seen:
        seen.add(y)
        y = A.vcomp[(y, x)]
        n += 1
    return n


def find_isomorphism(A: TwoCat, B: TwoCat):
    """Backtracking search for an isomorphism A -> B; None if there is none."""
    if A.sizes() != B.sizes():
        return None

    def osig(C, a):
        return (len(C.hom(a, a)), len(C.out1(a)), len(C.in1(a)),
                sum(len(C.out2(f)) for f in C.hom(a, a)))

    def fsig(C, f):
        s, t = C.one_cells[f]
        return (C.id1[s] == f, s == t, len(C.out2(f)), len(C.in2(f)), len(C.cells2(f, f)))

    def xsig(C, x):
        return (C.is_id2(x), _period(C, x))

    osA = {a: osig(A, a) for a in A.objects}
    osB = {b: osig(B, b) for b in B.objects}
    fsA = {f: fsig(A, f) for f in A.ones}
    fsB = {f: fsig(B, f) for f in B.ones}
    xsA = {x: xsig(A, x) for x in A.twos}
    xsB = {x: xsig(B, x) for x in B.twos}
    if sorted(map(repr, osA.values())) != sorted(map(repr, osB.values())):
        return None
    if sorted(map(repr, fsA.values())) != sorted(map(repr, fsB.values())):
        return None

    # constraints: each entry lists table triples a cell occurs in
    c1_of = defaultdict(list)
    for (g, f), h in A.comp1.items():
        for c in {g, f, h}:
            c1_of[c].append((g, f, h))
    c2_of = defaultdict(list)
    for tab, tb in ((A.vcomp, B.vcomp), (A.hcomp, B.hcomp)):
        for (y, x), z in tab.items():
            for c in {y, x, z}:
                c2_of[c].append((y, x, z, tb))

    ob, one, two = {}, {}, {}
    used_o, used_1, used_2 = set(), set(), set()
    variables = ([("o", a) for a in A.objects] + [("1", f) for f in A.ones]
                 + [("2", x) for x in A.twos])

    def candidates(kind, c):
        if kind == "o":
            return [b for b in B.objects if b not in used_o and osB[b] == osA[c]]
        if kind == "1":
            s, t = A.one_cells[c]
            return [g for g in B.hom(ob[s], ob[t]) if g not in used_1 and fsB[g] == fsA[c]]
        s, t = A.two_cells[c]
        return [y for y in B.cells2(one[s], one[t]) if y not in used_2 and xsB[y] == xsA[c]]

    def consistent(kind, c):
        if kind == "o":
            b = ob[c]
            for a, b2 in ob.items():
                if len(A.hom(c, a)) != len(B.hom(b, b2)) or len(A.hom(a, c)) != len(B.hom(b2, b)):
                    return False
            return True
        if kind == "1":
            s, _ = A.one_cells[c]
            if A.id1[s] == c and B.id1[ob[s]] != one[c]:
                return False
            for g, f, h in c1_of[c]:
                if g in one and f in one and h in one and B.comp1[(one[g], one[f])] != one[h]:
                    return False
            return True
        s, _ = A.two_cells[c]
        if A.id2[s] == c and B.id2[one[s]] != two[c]:
            return False
        for y, x, z, tb in c2_of[c]:
            if y in two and x in two and z in two and tb[(two[y], two[x])] != two[z]:
                return False
        return True

    maps = {"o": (ob, used_o), "1": (one, used_1), "2": (two, used_2)}
    limit = sys.getrecursionlimit()
    sys.setrecursionlimit(max(limit, 4 * len(variables) + 1000))

    def search(i):
        if i == len(variables):
            return True
        kind, c = variables[i]
        m, used = maps[kind]
        for cand in candidates(kind, c):
            m[c] = cand
            used.add(cand)
            if consistent(kind, c) and search(i + 1):
                return True
            del m[c]
            used.discard(cand)
        return False

    try:
        found = search(0)
    finally:
        sys.setrecursionlimit(limit)
    if not found:
        return None
    return Isomorphism(dict(ob), dict(one), dict(two))


def is_isomorphic(A: TwoCat, B: TwoCat) -> bool:
    return find_isomorphism(A, B) is not None
