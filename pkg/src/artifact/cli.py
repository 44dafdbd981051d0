"""Batch command-line front end."""
from __future__ import annotations

import argparse
import json
import random
import sys

from .kernel import ArtifactError, TwoCat, dual, encode_id, product, sorted_ids, validate
from .morphisms import (LaxFunctor, Modification, Transformation, validate_functor,
                        validate_modification, validate_transformation)
from .formats import Loader, ParseError, sset_to_json, write_2cat

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(ArtifactError):
    pass


class Output:
    """Collects a text body and a JSON record; prints one of them."""

    def __init__(self, fmt):
        self.fmt = fmt
        self.lines = []
        self.record = {}
        self.raw = None

    def line(self, text):
        self.lines.append(text)

    def put(self, **kw):
        self.record.update(kw)

    def render(self):
        if self.raw is not None:
            return self.raw
        if self.fmt == "json":
            return json.dumps(self.record, sort_keys=True, indent=1) + "\n"
        return "".join(line + "\n" for line in self.lines)


def _load(path, kind=None):
    loader = Loader()
    value = loader.load(path) if kind is None else loader.load_kind(path, kind)
    return value


def _report(out, rep, what):
    out.put(ok=rep.ok, violations=[[t, [encode_id(c) if _encodable(c) else repr(c) for c in cs]]
                                   for t, cs in rep.violations])
    out.line(f"{what}: {rep.summary()}")
    return EXIT_OK if rep.ok else EXIT_FAIL


def _encodable(c):
    try:
        encode_id(c)
        return True
    except (TypeError, ValueError):
        return False


def _emit_2cat(out, A, what):
    text = write_2cat(A)
    out.put(sizes=list(A.sizes()), presentation=text)
    out.lines.append(text.rstrip("\n"))
    return EXIT_OK


# ---------------------------------------------------------------------------
# subcommands

def cmd_validate(args, out):
    from .integration import Diagram, validate_diagram
    from .simplicial import TruncatedSSet, check_simplicial_identities
    value = _load(args.file)
    if isinstance(value, TwoCat):
        code = _report(out, validate(value), "2-category")
        if args.mutations:
            from .mutations import mutation_detection_rate
            rate = mutation_detection_rate(value, args.mutations, random.Random(args.seed))
            out.put(mutation_detection=rate)
            out.line(f"mutations detected: {rate:.3f}")
        return code
    if isinstance(value, LaxFunctor):
        return _report(out, validate_functor(value), f"{value.direction} functor")
    if isinstance(value, Transformation):
        return _report(out, validate_transformation(value), f"{value.kind} transformation")
    if isinstance(value, Modification):
        return _report(out, validate_modification(value), "modification")
    if isinstance(value, Diagram):
        return _report(out, validate_diagram(value), "diagram")
    if isinstance(value, TruncatedSSet):
        return _report(out, check_simplicial_identities(value), "simplicial set")
    raise UsageError("nothing to validate")


def cmd_dual(args, out):
    return _emit_2cat(out, dual(_load(args.file, TwoCat), args.kind), "dual")


def cmd_product(args, out):
    return _emit_2cat(out, product(_load(args.left, TwoCat), _load(args.right, TwoCat)), "product")


def cmd_comma(args, out):
    from .comma import comma
    return _emit_2cat(out, comma(_load(args.u, LaxFunctor), _load(args.v, LaxFunctor)), "comma")


def _object(value):
    from .kernel import decode_id
    try:
        return decode_id(value)
    except ValueError:
        raise UsageError(f"bad object identifier {value!r}") from None


def cmd_slice(args, out):
    from .comma import slice
    u = _load(args.functor, LaxFunctor)
    return _emit_2cat(out, slice(u, _object(args.object), args.variant), "slice")


def cmd_fiber(args, out):
    from .comma import fiber
    u = _load(args.functor, LaxFunctor)
    return _emit_2cat(out, fiber(u, _object(args.object)), "fiber")


def cmd_integrate(args, out):
    from .integration import Diagram, integrate
    F = _load(args.diagram, Diagram)
    T, _ = integrate(F, inner=args.inner, check=True)
    return _emit_2cat(out, T, "integral")


def cmd_jk(args, out):
    from .integration import Diagram, jk_pair
    F = _load(args.diagram, Diagram)
    J, K = jk_pair(F, _object(args.object))
    code = EXIT_OK
    for name, u in (("J", J), ("K", K)):
        rep = validate_functor(u)
        out.put(**{name: {"ok": rep.ok, "source": list(u.source.sizes()),
                          "target": list(u.target.sizes())}})
        out.line(f"{name}: {u.source.sizes()} -> {u.target.sizes()} {rep.summary()}")
        if not rep.ok:
            code = EXIT_FAIL
    return code


def cmd_alc_check(args, out):
    from .comma import validate_lax_colax_adjunction
    from .integration import Diagram, jk_adjunction
    F = _load(args.diagram, Diagram)
    rep = validate_lax_colax_adjunction(jk_adjunction(F, _object(args.object)))
    return _report(out, rep, "lax-colax adjunction (K, J)")


def cmd_cylinder(args, out):
    from .integration import cylinder_S1, cylinder_S2, cylinder_presentations
    A = _load(args.file, TwoCat)
    S = (cylinder_S1 if args.kind == 1 else cylinder_S2)(A)[0]
    if args.check:
        oks = [ok for _, _, ok in cylinder_presentations(A, args.kind)]
        out.put(presentations=oks, sizes=list(S.sizes()))
        out.line(f"S{args.kind}: {S.sizes()} presentations isomorphic: {oks}")
        return EXIT_OK if all(oks) else EXIT_FAIL
    return _emit_2cat(out, S, "cylinder")


def cmd_strictify(args, out):
    from .benabou import _cells_upto, bar_values
    u = _load(args.functor, LaxFunctor)
    vals = bar_values(u, args.max_chain)
    xs, cs = _cells_upto(u.source, args.max_chain)
    rows = []
    for x in xs:
        rows.append(("chain", repr(tuple(x.cells)) + f" {encode_id(x.source)}->{encode_id(x.target)}",
                     encode_id(vals[x])))
    for c in cs:
        rows.append(("cell", f"{tuple(c.source.cells)!r} => {tuple(c.target.cells)!r} "
                             f"phi={c.phi!r} alphas={c.alphas!r}", encode_id(vals[c])))
    out.put(images=[list(r) for r in rows])
    for kind, cell, img in rows:
        out.line(f"{kind} {cell} -> {img}")
    return EXIT_OK


def cmd_bijection_check(args, out):
    from .benabou import strictification_bijection_check
    r = strictification_bijection_check(_load(args.source, TwoCat), _load(args.target, TwoCat),
                                        args.max_chain)
    out.put(**r)
    out.line(" ".join(f"{k}={v}" for k, v in r.items()))
    return EXIT_OK if r["ok"] else EXIT_FAIL


def _sset(args):
    from .nerve import nerve
    from .simplicial import TruncatedSSet
    value = _load(args.file)
    if isinstance(value, TruncatedSSet):
        return value
    if isinstance(value, TwoCat):
        return nerve(value, args.variant, args.dim, args.cap)
    raise UsageError("expected a .2cat or a simplicial set file")


def cmd_nerve(args, out):
    X = _sset(args)
    out.put(counts=list(X.counts()), nondegenerate=list(X.nondegenerate_counts()),
            sset=json.loads(sset_to_json(X)))
    if args.output:
        # a file target always receives the exchange format
        out.raw = sset_to_json(X) + "\n"
    out.line(f"counts {list(X.counts())}")
    out.line(f"nondegenerate {list(X.nondegenerate_counts())}")
    return EXIT_OK


def cmd_homology(args, out):
    from .homology import homology
    from .simplicial import pi0_sset
    X = _sset(args)
    H = homology(X, args.max_deg)
    out.put(pi0=pi0_sset(X), **H.to_json())
    for k in range(args.max_deg + 1):
        out.line(f"H_{k} = {H.describe(k)}")
    return EXIT_OK


def cmd_simplices(args, out):
    X = _sset(args)
    listing = [[encode_id(x) for x in X.simplices[m]] for m in range(X.d + 1)]
    out.put(simplices=listing, degenerate=X.degenerate)
    for m in range(X.d + 1):
        for x, deg in zip(listing[m], X.degenerate[m]):
            out.line(f"{m} {x}{' degenerate' if deg else ''}")
    return EXIT_OK


def cmd_sup(args, out):
    from .nerve import sup
    u = sup(_load(args.file, TwoCat), args.variant, args.dim)
    rep = validate_functor(u)
    out.put(source=list(u.source.sizes()))
    out.line(f"{args.variant}: category of simplices {u.source.sizes()}")
    return _report(out, rep, "comparison functor")


def cmd_probe(args, out):
    from .nerve import we_probe
    r = we_probe(_load(args.functor, LaxFunctor), args.dim, args.max_deg, cap=args.cap)
    out.put(**r.to_json())
    out.line(f"{r.verdict}: {r.detail}")
    return EXIT_FAIL if r.verdict == "refuted" else EXIT_OK


def cmd_witness(args, out):
    from .comma import (has_object_admitting_final, has_object_admitting_initial,
                        is_preadjoint, is_prefibration)
    value = _load(args.file)
    if isinstance(value, TwoCat):
        find = has_object_admitting_initial if args.check == "initial" else has_object_admitting_final
        w = find(value)
        if w is None:
            out.put(found=False)
            out.line("no witness")
            return EXIT_FAIL
        out.put(found=True, object=encode_id(w.z),
                chosen={encode_id(a): encode_id(p) for a, p in sorted_ids(w.finals.items())})
        out.line(f"object {encode_id(w.z)}")
        for a in sorted_ids(w.finals):
            out.line(f"  {encode_id(a)} -> {encode_id(w.finals[a])}")
        return EXIT_OK
    if isinstance(value, LaxFunctor):
        if args.check == "prefibration":
            v = is_prefibration(value, args.kind)
        else:
            v = is_preadjoint(value, args.side, args.flavor)
        bad = [encode_id(b) for b, w in sorted_ids(v.witnesses.items()) if not w]
        out.put(ok=v.ok, failing=bad)
        out.line(f"{'holds' if v.ok else 'fails'}" + (f" at {', '.join(bad)}" if bad else ""))
        return EXIT_OK if v.ok else EXIT_FAIL
    raise UsageError("expected a .2cat or .lfun file")


# ---------------------------------------------------------------------------

def build_parser():
    p = argparse.ArgumentParser(prog="artifact", description="Finite 2-category workbench.")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("-o", "--output", help="write the result here instead of stdout")
    p.add_argument("--cap", type=int, default=None, help="enumeration cap")
    sub = p.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default=argparse.SUPPRESS)
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS)
    common.add_argument("-o", "--output", default=argparse.SUPPRESS)
    common.add_argument("--cap", type=int, default=argparse.SUPPRESS)

    def add(name, fn, *positional):
        q = sub.add_parser(name, parents=[common])
        for arg in positional:
            q.add_argument(arg)
        q.set_defaults(fn=fn)
        return q

    q = add("validate", cmd_validate, "file")
    q.add_argument("--mutations", type=int, default=0,
                   help="also count how many random single-entry edits are caught")
    q = add("dual", cmd_dual, "file")
    q.add_argument("--kind", choices=("op", "co", "coop"), required=True)
    add("product", cmd_product, "left", "right")
    add("comma", cmd_comma, "u", "v")
    from .comma import VARIANTS, PREFIBRATION_KINDS
    q = add("slice", cmd_slice, "functor")
    q.add_argument("--object", required=True)
    q.add_argument("--variant", choices=VARIANTS, default="lax_over")
    q = add("fiber", cmd_fiber, "functor")
    q.add_argument("--object", required=True)
    q = add("integrate", cmd_integrate, "diagram")
    q.add_argument("--inner", choices=("cov", "op", "co", "coop"), default=None)
    q = add("jk", cmd_jk, "diagram")
    q.add_argument("--object", required=True)
    q = add("alc-check", cmd_alc_check, "diagram")
    q.add_argument("--object", required=True)
    q = add("cylinder", cmd_cylinder, "file")
    q.add_argument("--kind", type=int, choices=(1, 2), default=1)
    q.add_argument("--check", action="store_true", help="compare with both integrals")
    q = add("strictify", cmd_strictify, "functor")
    q.add_argument("--max-chain", type=int, default=2)
    q = add("bijection-check", cmd_bijection_check, "source", "target")
    q.add_argument("--max-chain", type=int, default=2)
    for name, fn in (("nerve", cmd_nerve), ("homology", cmd_homology),
                     ("simplices", cmd_simplices)):
        q = add(name, fn, "file")
        q.add_argument("--variant", choices=("lax", "lax_nor"), default="lax_nor")
        q.add_argument("--dim", type=int, default=4)
        if name == "homology":
            q.add_argument("--max-deg", type=int, default=2)
    q = add("sup", cmd_sup, "file")
    q.add_argument("--variant", choices=("sup1", "sup_lax", "sup_lax_nor", "sup_cat_lax_nor",
                                         "sup_hom"), default="sup_lax_nor")
    q.add_argument("--dim", type=int, default=2)
    q = add("probe", cmd_probe, "functor")
    q.add_argument("--dim", type=int, default=4)
    q.add_argument("--max-deg", type=int, default=2)
    q = add("witness", cmd_witness, "file")
    q.add_argument("--check", choices=("final", "initial", "preadjoint", "prefibration"),
                   default="final")
    q.add_argument("--side", choices=("left", "right"), default="left")
    q.add_argument("--flavor", choices=("lax", "colax"), default="colax")
    q.add_argument("--kind", choices=tuple(PREFIBRATION_KINDS), default="pre")
    return p


def _fail(args_format, code, kind, message):
    if args_format == "json":
        sys.stderr.write(json.dumps({"error": kind, "message": message}, sort_keys=True) + "\n")
    else:
        sys.stderr.write(f"error: {message}\n")
    return code


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    out = Output(args.format)
    from .homology import DegreeOutOfRange
    try:
        code = args.fn(args, out)
    except (ParseError, UsageError, DegreeOutOfRange) as e:
        return _fail(args.format, EXIT_USAGE, type(e).__name__, str(e))
    except ArtifactError as e:
        return _fail(args.format, EXIT_FAIL, type(e).__name__, str(e))
    text = out.render()
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
