"""Text formats for 2-categories, functors, transformations, modifications,
diagrams and truncated simplicial sets."""
from __future__ import annotations

import json
import os

from .kernel import ArtifactError, TwoCat, decode_id, encode_id, sorted_ids
from .integration import VARIANCES, Diagram
from .morphisms import LaxFunctor, Modification, Transformation
from .simplicial import TruncatedSSet


class ParseError(ArtifactError):
    def __init__(self, message, line=None, path=None):
        self.message = message
        self.line = line
        self.path = path
        where = ""
        if path:
            where += f"{path}:"
        if line is not None:
            where += f"{line}:"
        super().__init__(f"{where} {message}" if where else message)


def _lines(text):
    for n, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield n, line.split()


def _ident(tok, n):
    try:
        return decode_id(tok)
    except ValueError:
        raise ParseError(f"bad identifier {tok!r}", n) from None


def _header(lines, kind, nargs):
    try:
        n, toks = next(lines)
    except StopIteration:
        raise ParseError(f"empty file, expected '{kind} v1' header") from None
    if len(toks) != 2 + nargs or toks[0] != kind or toks[1] != "v1":
        raise ParseError(f"expected '{kind} v1' header with {nargs} argument(s)", n)
    return toks[2:]


def _put(table, key, value, n, what):
    if key in table:
        raise ParseError(f"duplicate {what} entry for {key!r}", n)
    table[key] = value


# ---------------------------------------------------------------------------
# .2cat

def parse_2cat(text, path=None) -> TwoCat:
    try:
        return _parse_2cat(text)
    except ParseError as e:
        if path and e.path is None:
            raise ParseError(e.message, e.line, path) from None
        raise


def _parse_2cat(text):
    lines = _lines(text)
    _header(lines, "2cat", 0)
    objects, one, two = [], {}, {}
    comp1, vcomp, hcomp, id1, id2 = {}, {}, {}, {}, {}
    autoid = False
    seen_ob = set()
    for n, t in lines:
        key = t[0]
        if key == "ob" and len(t) == 2:
            a = _ident(t[1], n)
            if a in seen_ob:
                raise ParseError(f"duplicate object {a!r}", n)
            seen_ob.add(a)
            objects.append(a)
        elif key == "1cell" and len(t) == 6 and t[2] == ":" and t[4] == "->":
            f, a, b = _ident(t[1], n), _ident(t[3], n), _ident(t[5], n)
            for o in (a, b):
                if o not in seen_ob:
                    raise ParseError(f"unknown object {o!r}", n)
            _put(one, f, (a, b), n, "1cell")
        elif key == "2cell" and len(t) == 6 and t[2] == ":" and t[4] == "=>":
            x, f, g = _ident(t[1], n), _ident(t[3], n), _ident(t[5], n)
            for c in (f, g):
                if c not in one:
                    raise ParseError(f"unknown 1-cell {c!r}", n)
            if one[f] != one[g]:
                raise ParseError(f"2-cell {x!r} between non-parallel 1-cells", n)
            _put(two, x, (f, g), n, "2cell")
        elif key in ("comp1", "vcomp", "hcomp") and len(t) == 6 and t[4] == "=":
            sym = {"comp1": ".", "vcomp": "*", "hcomp": "o"}[key]
            if t[2] != sym:
                raise ParseError(f"expected '{sym}' in {key} line", n)
            g, f, h = _ident(t[1], n), _ident(t[3], n), _ident(t[5], n)
            cells = one if key == "comp1" else two
            for c in (g, f, h):
                if c not in cells:
                    raise ParseError(f"unknown cell {c!r}", n)
            table = {"comp1": comp1, "vcomp": vcomp, "hcomp": hcomp}[key]
            _put(table, (g, f), h, n, key)
        elif key in ("id1", "id2") and len(t) == 4 and t[2] == "=":
            a, f = _ident(t[1], n), _ident(t[3], n)
            dom, cod = (seen_ob, one) if key == "id1" else (one, two)
            if a not in dom or f not in cod:
                raise ParseError(f"unknown cell in {key} line", n)
            _put(id1 if key == "id1" else id2, a, f, n, key)
        elif key == "autoid" and len(t) == 1:
            autoid = True
        else:
            raise ParseError(f"unrecognised line {' '.join(t)!r}", n)
    if autoid:
        _synthesize_identities(objects, one, two, comp1, vcomp, hcomp, id1, id2)
    return TwoCat(objects, one, two, comp1, vcomp, hcomp, id1, id2)


def _fresh(name, taken):
    cand = ("id", name)
    while cand in taken:
        cand = ("id", cand)
    return cand


def _synthesize_identities(objects, one, two, comp1, vcomp, hcomp, id1, id2):
    """Add missing identities and the table entries they force."""
    for a in objects:
        if a not in id1:
            f = _fresh(a, one)
            one[f] = (a, a)
            id1[a] = f
    for f in list(one):
        if f not in id2:
            x = _fresh(f, two)
            two[x] = (f, f)
            id2[f] = x
    for f, (a, b) in one.items():
        comp1.setdefault((f, id1[a]), f)
        comp1.setdefault((id1[b], f), f)
    for x, (f, g) in two.items():
        vcomp.setdefault((x, id2[f]), x)
        vcomp.setdefault((id2[g], x), x)
        a, b = one[f]
        hcomp.setdefault((x, id2[id1[a]]), x)
        hcomp.setdefault((id2[id1[b]], x), x)
    for (g, f), h in list(comp1.items()):
        hcomp.setdefault((id2[g], id2[f]), id2[h])


def write_2cat(A: TwoCat) -> str:
    e = encode_id
    out = ["2cat v1"]
    out += [f"ob {e(a)}" for a in A.objects]
    for f in A.ones:
        a, b = A.one_cells[f]
        out.append(f"1cell {e(f)} : {e(a)} -> {e(b)}")
    for x in A.twos:
        f, g = A.two_cells[x]
        out.append(f"2cell {e(x)} : {e(f)} => {e(g)}")
    for (g, f) in sorted_ids(A.comp1):
        out.append(f"comp1 {e(g)} . {e(f)} = {e(A.comp1[(g, f)])}")
    for (b, a) in sorted_ids(A.vcomp):
        out.append(f"vcomp {e(b)} * {e(a)} = {e(A.vcomp[(b, a)])}")
    for (b, a) in sorted_ids(A.hcomp):
        out.append(f"hcomp {e(b)} o {e(a)} = {e(A.hcomp[(b, a)])}")
    for a in A.objects:
        out.append(f"id1 {e(a)} = {e(A.id1[a])}")
    for f in A.ones:
        out.append(f"id2 {e(f)} = {e(A.id2[f])}")
    return "\n".join(out) + "\n"


# ---------------------------------------------------------------------------
# loading helpers

class Loader:
    """Reads files relative to the referencing file, caching by path."""

    def __init__(self):
        self.cache = {}

    def _read(self, path):
        try:
            with open(path, encoding="utf-8") as fh:
                return fh.read()
        except OSError as e:
            raise ParseError(f"cannot read {path}: {e.strerror}", None, path) from None

    def _resolve(self, ref, base):
        return ref if os.path.isabs(ref) else os.path.normpath(os.path.join(base, ref))

    def load(self, path):
        """Any supported file, chosen by its header."""
        path = os.path.abspath(path)
        if path in self.cache:
            return self.cache[path]
        text = self._read(path)
        head = next(_lines(text), (None, [""]))[1][0]
        base = os.path.dirname(path)
        try:
            if head == "2cat":
                value = parse_2cat(text)
            elif head == "lfun":
                value = self._parse_lfun(text, base)
            elif head == "trans":
                value = self._parse_trans(text, base)
            elif head == "mod":
                value = self._parse_mod(text, base)
            elif head == "diag":
                value = self._parse_diag(text, base)
            elif path.endswith(".json"):
                value = sset_from_json(text)
            else:
                raise ParseError("unknown file kind", 1)
        except ParseError as e:
            if e.path is None:
                raise ParseError(e.message, e.line, path) from None
            raise
        self.cache[path] = value
        return value

    def load_kind(self, path, kind):
        value = self.load(path)
        if not isinstance(value, kind):
            raise ParseError(f"expected a {kind.__name__}", None, path)
        return value

    # -- .lfun ------------------------------------------------------------
    def _parse_lfun(self, text, base):
        lines = _lines(text)
        src, tgt, direction = _header(lines, "lfun", 3)
        if direction not in ("lax", "colax"):
            raise ParseError(f"unknown direction {direction!r}", 1)
        A = self.load_kind(self._resolve(src, base), TwoCat)
        B = self.load_kind(self._resolve(tgt, base), TwoCat)
        ob, one, two, comp, unit = {}, {}, {}, {}, {}
        for n, t in lines:
            if t[0] in ("ob", "1cell", "2cell", "unit") and len(t) == 4 and t[2] == "->":
                table = {"ob": ob, "1cell": one, "2cell": two, "unit": unit}[t[0]]
                _put(table, _ident(t[1], n), _ident(t[3], n), n, t[0])
            elif t[0] == "comp" and len(t) == 5 and t[3] == "->":
                _put(comp, (_ident(t[1], n), _ident(t[2], n)), _ident(t[4], n), n, "comp")
            else:
                raise ParseError(f"unrecognised line {' '.join(t)!r}", n)
        try:
            # structure cells left out are identities
            for (g, f) in A.comp1:
                if (g, f) not in comp:
                    comp[(g, f)] = B.id2[B.comp1[(one[g], one[f])]]
            for a in A.objects:
                if a not in unit:
                    unit[a] = B.id2[B.id1[ob[a]]]
        except KeyError as e:
            raise ParseError(f"incomplete functor, missing {e.args[0]!r}") from None
        return LaxFunctor(A, B, ob, one, two, comp, unit, direction)

    # -- .trans -----------------------------------------------------------
    def _parse_trans(self, text, base):
        lines = _lines(text)
        src, tgt, kind = _header(lines, "trans", 3)
        if kind not in ("lax", "colax", "strict"):
            raise ParseError(f"unknown kind {kind!r}", 1)
        u = self.load_kind(self._resolve(src, base), LaxFunctor)
        v = self.load_kind(self._resolve(tgt, base), LaxFunctor)
        obj, one = {}, {}
        for n, t in lines:
            if t[0] in ("obj", "1cell") and len(t) == 4 and t[2] == "->":
                _put(obj if t[0] == "obj" else one, _ident(t[1], n), _ident(t[3], n), n, t[0])
            else:
                raise ParseError(f"unrecognised line {' '.join(t)!r}", n)
        if kind == "strict":
            B = u.target
            for f, (a, a1) in u.source.one_cells.items():
                if f not in one and a1 in obj:
                    c = B.comp1.get((obj[a1], u.one[f]))
                    if c is not None:
                        one[f] = B.id2[c]
        return Transformation(kind, u, v, obj, one)

    # -- .mod -------------------------------------------------------------
    def _parse_mod(self, text, base):
        lines = _lines(text)
        src, tgt = _header(lines, "mod", 2)
        s = self.load_kind(self._resolve(src, base), Transformation)
        t_ = self.load_kind(self._resolve(tgt, base), Transformation)
        comp = {}
        for n, t in lines:
            if t[0] == "obj" and len(t) == 4 and t[2] == "->":
                _put(comp, _ident(t[1], n), _ident(t[3], n), n, "obj")
            else:
                raise ParseError(f"unrecognised line {' '.join(t)!r}", n)
        return Modification(s, t_, comp)

    # -- .diag ------------------------------------------------------------
    def _parse_diag(self, text, base):
        lines = _lines(text)
        src, variance = _header(lines, "diag", 2)
        if variance not in VARIANCES + ("id",):
            raise ParseError(f"unknown variance {variance!r}", 1)
        A = self.load_kind(self._resolve(src, base), TwoCat)
        obv, onev, twov = {}, {}, {}
        for n, t in lines:
            if t[0] in ("obval", "oneval", "twoval") and len(t) == 4 and t[2] == "=":
                kind = {"obval": TwoCat, "oneval": LaxFunctor, "twoval": Transformation}[t[0]]
                table = {"obval": obv, "oneval": onev, "twoval": twov}[t[0]]
                try:
                    value = self.load_kind(self._resolve(t[3], base), kind)
                except ParseError as e:
                    raise ParseError(f"in {t[3]}: {e}", n) from None
                _put(table, _ident(t[1], n), value, n, t[0])
            else:
                raise ParseError(f"unrecognised line {' '.join(t)!r}", n)
        return Diagram(A, variance, obv, onev, twov)


def load(path):
    return Loader().load(path)


def load_2cat(path) -> TwoCat:
    return Loader().load_kind(path, TwoCat)


def load_functor(path) -> LaxFunctor:
    return Loader().load_kind(path, LaxFunctor)


def parse_lfun(text, source, target, base="."):
    """Parse .lfun text whose header file names are resolved under ``base``;
    ``source``/``target`` override loading when given."""
    loader = Loader()
    lines = list(_lines(text))
    if lines:
        _, toks = lines[0]
        if len(toks) == 5:
            loader.cache[os.path.abspath(os.path.join(base, toks[2]))] = source
            loader.cache[os.path.abspath(os.path.join(base, toks[3]))] = target
    return loader._parse_lfun(text, os.path.abspath(base))


def write_lfun(u, source_ref, target_ref, omit_identities=False) -> str:
    e = encode_id
    A, B = u.source, u.target
    out = [f"lfun v1 {source_ref} {target_ref} {u.direction}"]
    out += [f"ob {e(a)} -> {e(u.ob[a])}" for a in A.objects]
    out += [f"1cell {e(f)} -> {e(u.one[f])}" for f in A.ones]
    out += [f"2cell {e(x)} -> {e(u.two[x])}" for x in A.twos]
    for (g, f) in sorted_ids(A.comp1):
        c = u.comp[(g, f)]
        if not (omit_identities and B.is_id2(c)):
            out.append(f"comp {e(g)} {e(f)} -> {e(c)}")
    for a in A.objects:
        c = u.unit[a]
        if not (omit_identities and B.is_id2(c)):
            out.append(f"unit {e(a)} -> {e(c)}")
    return "\n".join(out) + "\n"


def write_trans(s, source_ref, target_ref) -> str:
    e = encode_id
    A = s.source.source
    out = [f"trans v1 {source_ref} {target_ref} {s.kind}"]
    out += [f"obj {e(a)} -> {e(s.obj[a])}" for a in A.objects]
    out += [f"1cell {e(f)} -> {e(s.one[f])}" for f in A.ones]
    return "\n".join(out) + "\n"


# ---------------------------------------------------------------------------
# sset.json

def sset_to_json(X) -> str:
    return json.dumps(X.to_json(), sort_keys=True)


def sset_from_json(text):
    try:
        return TruncatedSSet.from_json(json.loads(text))
    except (ValueError, KeyError, TypeError) as e:
        raise ParseError(f"bad simplicial set file: {e}") from None
