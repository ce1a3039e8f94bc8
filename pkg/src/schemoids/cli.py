"""Command-line front end.

Exit codes: 0 on success, 1 when a check fails or an input violates an axiom
(with a witness), 2 when an input cannot be parsed.
"""

from __future__ import annotations

import argparse
import sys

from . import algebra as alg
from . import constructors as cons
from . import io
from .core import (GuardError, SchemoidError, identity_morphism, quotient_category,
                   schemoid_isomorphic_bruteforce, tameness_report)
from .fields import parse_field
from .fincat import CategoryError


class Failure(Exception):
    """A requested check did not pass; carries the machine-readable result."""

    def __init__(self, doc, text):
        super().__init__(text)
        self.doc = doc
        self.text = text


# ---------------------------------------------------------------- helpers


def _read(path):
    if path in (None, "-"):
        return io.loads(sys.stdin.read())
    try:
        with open(path, encoding="utf-8") as fh:
            return io.loads(fh.read())
    except OSError as e:
        raise io.ParseError(f"cannot read {path}: {e.strerror}") from None


def _field(name):
    try:
        return parse_field(name)
    except ValueError as e:
        raise io.ParseError(str(e)) from None


def _schemoid(path):
    return io.schemoid_from_json(_read(path))


def _witness(e) -> dict:
    w = getattr(e, "witness", None)
    doc = {"error": type(e).__name__, "message": str(e)}
    if w is not None:
        doc["witness"] = w
    report = getattr(e, "report", None)
    if report is not None and getattr(report, "tiii_failures", None):
        doc["witness"] = report.tiii_failures[0]
    return doc


def _table(rows, header):
    widths = [max(len(str(r[i])) for r in [header] + rows) for i in range(len(header))]
    lines = ["  ".join(str(c).ljust(w) for c, w in zip(header, widths)).rstrip()]
    lines += ["  ".join(str(c).ljust(w) for c, w in zip(r, widths)).rstrip() for r in rows]
    return "\n".join(lines)


def _algebra_doc(A) -> dict:
    F = A.F
    entries = []
    for (i, j), out in sorted(A.mult.items()):
        for k, c in sorted(out.items()):
            entries.append({"left": A.label(i), "right": A.label(j), "result": A.label(k), "coeff": F.to_json(c)})
    return {
        "format": io.FORMAT,
        "field": F.name,
        "dim": A.dim,
        "basis": [A.label(i) for i in range(A.dim)],
        "unit": None if A.unit is None else [F.to_json(c) for c in A.unit],
        "products": entries,
    }


def _algebra_text(A) -> str:
    F = A.F
    rows = []
    for (i, j), out in sorted(A.mult.items()):
        terms = " + ".join(f"{F.to_json(c)}*{A.label(k)}" if c != F.one else A.label(k)
                           for k, c in sorted(out.items()))
        rows.append([A.label(i), A.label(j), terms])
    head = f"algebra over {F.name}, dimension {A.dim}" + ("" if A.unit is not None else ", no unit")
    return head + "\n" + _table(rows, ["left", "right", "product"])


# ---------------------------------------------------------------- construct


def cmd_construct(args):
    kind = args.kind
    if kind == "discrete":
        S = cons.discrete(io.category_from_json(_read(args.input)))
    elif kind == "as":
        S = cons.from_association_scheme(io.scheme_from_json(_read(args.input)), max_points=args.max_points)
    elif kind == "hamming":
        S = cons.hamming_schemoid(args.n)
    elif kind == "group-case":
        doc = _read(args.input)
        G = io.group_from_json(doc)
        H = args.subgroup if args.subgroup is not None else doc.get("subgroup", [0])
        S = cons.from_association_scheme(cons.group_case(G, H), max_points=args.max_points)
    elif kind == "groupoid":
        doc = _read(args.input)
        if isinstance(doc, dict) and ("table" in doc or "name" in doc):
            S = cons.group_schemoid(io.group_from_json(doc))
        else:
            S = cons.from_groupoid(io.category_from_json(doc))
    elif kind == "nat":
        S = cons.truncated_len(args.n)
    elif kind == "powerset":
        doc = _read(args.input)
        if "sets" in doc:
            S = cons.powerset_difference(io.sets_from_json(doc))
        else:
            S = cons.powerset_difference(cons.full_powerset(io._need(doc, "vertices", int)))
    elif kind == "simplicial":
        S = cons.simplicial_schemoid(io.complex_from_json(_read(args.input)))
    elif kind == "open-sets":
        S = cons.open_set_schemoid(io.space_from_json(_read(args.input)))
    else:  # pragma: no cover - argparse restricts the choices
        raise io.ParseError(f"unknown construction {kind}")
    return io.schemoid_to_json(S), None


# ---------------------------------------------------------------- schemoid commands


def cmd_validate(args):
    doc = _read(args.input)
    if "blocks" not in doc:
        C = io.category_from_json(doc)
        return ({"valid": True, "kind": "category", "objects": C.n_objects, "morphisms": C.n_morphisms},
                f"valid category: {C.n_objects} objects, {C.n_morphisms} morphisms")
    S = io.schemoid_from_json(doc)
    return ({"valid": True, "kind": "schemoid", "objects": S.cat.n_objects,
             "morphisms": S.cat.n_morphisms, "blocks": S.n_blocks},
            f"valid schemoid: {S.cat.n_objects} objects, {S.cat.n_morphisms} morphisms, {S.n_blocks} blocks")


def cmd_constants(args):
    S = _schemoid(args.input)
    rows, out = [], []
    for (s, t, m), c in sorted(S.constants.items()):
        if c == 0 and not args.all:
            continue
        ls, lt, lm = S.block_label(s), S.block_label(t), S.block_label(m)
        out.append({"sigma": ls, "tau": lt, "mu": lm, "value": c})
        rows.append([f"p^{lm}_{ls},{lt}", c])
    return {"format": io.FORMAT, "constants": out}, _table(rows, ["constant", "value"])


def cmd_tame(args):
    S = _schemoid(args.input)
    r = tameness_report(S)
    lbl = S.block_label
    failures = [dict(f, sigma=lbl(f["sigma"]) if f["sigma"] is not None else None,
                     tau=lbl(f["tau"]) if f["tau"] is not None else None) for f in r.tiii_failures]
    doc = {"tame": r.tame, "unital": r.unital, "t_ii": r.tii_holds, "t_iii": r.tiii_holds,
           "reason": r.reason(), "t_iii_failures": failures}
    if r.unital_witness is not None:
        doc["unital_witness"] = lbl(r.unital_witness)
    if r.tii_witness is not None:
        doc["t_ii_witness"] = lbl(r.tii_witness)
    if r.tame:
        return doc, "tame"
    text = f"not tame: {r.reason()}"
    for w in failures:
        text += f"\nwitness blocks: {w['sigma']}, {w['tau']} ({w['problem']})"
    raise Failure(doc, text)


def cmd_quotient(args):
    S = _schemoid(args.input)
    Q, proj = quotient_category(S)
    doc = io.category_to_json(Q)
    doc["projection"] = list(proj)
    return doc, (f"[C]: {Q.n_objects} objects, {Q.n_morphisms} morphisms\n" +
                 _table([[Q.mor_label(f), Q.obj_label(Q.src[f]), Q.obj_label(Q.tgt[f])] for f in Q.morphisms],
                        ["morphism", "source", "target"]))


def cmd_iso(args):
    S, T = _schemoid(args.first), _schemoid(args.second)
    res = schemoid_isomorphic_bruteforce(S, T, max_objects=args.max_objects)
    if not res.found:
        raise Failure({"isomorphic": False, "nodes": res.nodes},
                      f"not isomorphic (exhaustive search, {res.nodes} nodes)")
    u = res.witness
    doc = {"isomorphic": True, "nodes": res.nodes, "obj_map": list(u.obj_map),
           "mor_map": list(u.mor_map), "block_map": list(u.block_map)}
    return doc, f"isomorphic\nobject map: {list(u.obj_map)}\nblock map: {list(u.block_map)}"


# ---------------------------------------------------------------- algebra


def _algebra_of(args):
    F = _field(args.field)
    doc = _read(args.input)
    kind = args.kind
    if kind == "category":
        return alg.category_algebra(io.category_from_json(doc), F)
    S = io.schemoid_from_json(doc)
    if kind == "bose-mesner":
        return alg.bose_mesner(S, F)
    if kind == "quotient":
        return alg.quotient_linear_algebra(S, F)
    return alg.quotient_category_algebra(S, F)


def cmd_algebra(args):
    sub = args.algebra_cmd
    if sub in ("category", "bose-mesner", "quotient"):
        args.kind = sub
        A = _algebra_of(args)
        return _algebra_doc(A), _algebra_text(A)
    if sub == "center":
        A = _algebra_of(args)
        d, basis = alg.center(A)
        return ({"dim": d, "basis": [[A.F.to_json(c) for c in v] for v in basis]},
                f"center dimension {d}")
    if sub == "hh":
        A = _algebra_of(args)
        dims = alg.hochschild_cohomology(A, args.max, max_dim=args.max_dim, max_cochains=args.max_cochains)
        return {"dims": dims, "field": A.F.name}, "HH dims: " + " ".join(map(str, dims))
    if sub == "sr-compare":
        F = _field(args.field)
        K = cons.validate_complex(io.complex_from_json(_read(args.input)))
        SR, BM, a = alg.alpha_K(K, F)
        doc = {"sr_dim": SR.dim, "bm_dim": BM.dim, "alpha_is_isomorphism": a.is_bijective() and not a.violations()}
        ok = doc["alpha_is_isomorphism"]
        text = f"SR dim {SR.dim}, Bose-Mesner dim {BM.dim}, alpha iso: {ok}"
        if args.map is not None:
            m = _read(args.map)
            L = cons.validate_complex(io.complex_from_json(io._need(m, "target", dict)))
            phi = io._ints(io._need(m, "map", list), "map")
            sq = alg.sr_pullbacks(K, L, phi, F)
            doc["square_commutes"] = sq.commutes
            doc["pullback_is_algebra_map"] = sq.P_phi_star_is_algebra_map
            ok = ok and sq.commutes and sq.P_phi_star_is_algebra_map
            text += f"\npullback square commutes: {sq.commutes}"
        if not ok:
            raise Failure(doc, text)
        return doc, text
    raise io.ParseError(f"unknown algebra command {sub}")  # pragma: no cover


# ---------------------------------------------------------------- rep


def _morphism(args):
    if getattr(args, "id", False):
        if args.schemoid is None:
            raise io.ParseError("--id needs --schemoid")
        return identity_morphism(_schemoid(args.schemoid))
    if args.morphism is None:
        raise io.ParseError("give --morphism or --id --schemoid")
    return io.morphism_from_json(_read(args.morphism))


def _rep(path, S, F):
    from .repcat.reps import check_rep
    return check_rep(io.rep_from_json(_read(path), S, F))


def _need_schemoid(args):
    if args.schemoid is None:
        raise io.ParseError("--schemoid is required")
    return _schemoid(args.schemoid)


def cmd_rep(args):
    from .repcat import (adjunction_check, enumerate_functor_reps, hamming_witness, kan_left, kan_right,
                         lc_hom, morita_witness_check, nat_hom, restrict, schemoid_cohomology)
    from .repcat.modules import ext_dims, mitchell, mitchell_algebra
    from .repcat.reps import constant_rep, validate_functor_rep

    F = _field(args.field)
    sub = args.rep_cmd
    if sub == "validate":
        S = _need_schemoid(args)
        M = io.rep_from_json(_read(args.reps[0] if args.reps else None), S, F)
        r = validate_functor_rep(M)
        if not r.ok:
            raise Failure({"valid": False, "errors": r.errors}, "invalid representation: " + r.first())
        return {"valid": True, "dims": list(M.dims)}, f"valid representation, dims {list(M.dims)}"
    if sub == "hom":
        S = _need_schemoid(args)
        if len(args.reps) != 2:
            raise io.ParseError("hom needs two representation files")
        M, N = (_rep(p, S, F) for p in args.reps)
        H = nat_hom(M, N) if args.natural else lc_hom(M, N)
        return {"dim": H.dim, "locally_constant": not args.natural}, f"hom dimension {H.dim}"
    if sub in ("restrict", "ran", "lan"):
        u = _morphism(args)
        S = u.target if sub == "restrict" else u.source
        M = _rep(args.reps[0] if args.reps else None, S, F)
        if sub == "restrict":
            out = restrict(u, M)
        elif sub == "ran":
            out = kan_right(u, M, locally_constant=not args.literal)
        else:
            out = kan_left(u, M, locally_constant=not args.literal)
        doc = io.rep_to_json(out)
        return doc, f"dims {list(out.dims)}"
    if sub == "ext":
        S = _need_schemoid(args)
        if len(args.reps) != 2:
            raise io.ParseError("ext needs two representation files")
        M, N = (_rep(p, S, F) for p in args.reps)
        A = mitchell_algebra(S, F)
        dims = ext_dims(A, mitchell(S, M), mitchell(S, N), args.max)
        return {"dims": dims, "field": F.name}, "Ext dims: " + " ".join(map(str, dims))
    if sub == "cohomology":
        u = _morphism(args)
        M = _rep(args.reps[0], u.source, F) if args.reps else constant_rep(u.source, F, 1)
        dims = schemoid_cohomology(u, M, args.max)
        return {"dims": dims, "field": F.name}, "cohomology dims: " + " ".join(map(str, dims))
    if sub == "adjunction":
        u = _morphism(args)
        bad = []
        n = 0
        for M in enumerate_functor_reps(u.source, F, args.dim_bound, args.max_candidates):
            for N in enumerate_functor_reps(u.target, F, args.dim_bound, args.max_candidates):
                n += 1
                a = adjunction_check(u, M, N, locally_constant=not args.literal)
                if not a.ok:
                    bad.append({"source_dims": list(M.dims), "target_dims": list(N.dims),
                                "right": [a.right_lhs, a.right_rhs], "left": [a.left_lhs, a.left_rhs]})
                    break
            if bad:
                break
        doc = {"pairs": n, "ok": not bad, "failures": bad}
        if bad:
            raise Failure(doc, f"adjunction dimensions differ: {bad[0]}")
        return doc, f"adjunction dimensions agree on {n} pairs"
    if sub == "morita-check":
        if args.hamming is not None:
            u, v = hamming_witness(args.hamming, perturb=args.perturb)
        else:
            if args.u is None or args.v is None:
                raise io.ParseError("give --hamming N or both --u and --v")
            u, v = io.morphism_from_json(_read(args.u)), io.morphism_from_json(_read(args.v))
        r = morita_witness_check(u, v, F, args.dim_bound)
        doc = {"ok": r.ok, "clauses": r.clauses, "witnesses": r.witnesses, "counts": r.counts}
        text = "\n".join(f"{'pass' if ok else 'FAIL'}  {name}" for name, ok in r.clauses.items())
        if not r.ok:
            text += "\nwitness: " + io.dumps(r.witnesses).strip()
            raise Failure(doc, text)
        return doc, text
    if sub == "enumerate":
        S = _need_schemoid(args)
        reps = enumerate_functor_reps(S, F, args.dim_bound, args.max_candidates)
        return ({"count": len(reps), "reps": [io.rep_to_json(M) for M in reps]},
                f"{len(reps)} representations with dimensions <= {args.dim_bound}")
    raise io.ParseError(f"unknown rep command {sub}")  # pragma: no cover


# ---------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(add_help=False)
    top.add_argument("--json", action="store_true", help="machine-readable output")
    top.add_argument("--threads", type=int, default=1,
                     help="accepted for compatibility; computations run in one thread")
    # the same flags after a subcommand, without defaults that would mask the top-level ones
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS)
    common.add_argument("--threads", type=int, default=argparse.SUPPRESS)

    p = argparse.ArgumentParser(prog="schemoid", description="Compute with schemoids.", parents=[top])
    sub = p.add_subparsers(dest="cmd", required=True)

    c = sub.add_parser("construct", parents=[common], help="build a schemoid file")
    csub = c.add_subparsers(dest="kind", required=True)
    for name in ("discrete", "as", "group-case", "groupoid", "powerset", "simplicial", "open-sets"):
        q = csub.add_parser(name, parents=[common])
        q.add_argument("input", nargs="?")
        q.add_argument("--max-points", type=int, default=128)
        if name == "group-case":
            q.add_argument("--subgroup", type=lambda s: [int(x) for x in s.split(",") if x], default=None)
    for name in ("hamming", "nat"):
        q = csub.add_parser(name, parents=[common])
        q.add_argument("n", type=int)
    c.set_defaults(func=cmd_construct, raw_json=True)

    for name, func in (("validate", cmd_validate), ("constants", cmd_constants),
                       ("tame", cmd_tame), ("quotient", cmd_quotient)):
        q = sub.add_parser(name, parents=[common])
        q.add_argument("input", nargs="?")
        if name == "constants":
            q.add_argument("--all", action="store_true", help="also list zero constants")
        q.set_defaults(func=func, raw_json=name == "quotient")

    q = sub.add_parser("iso", parents=[common])
    q.add_argument("first")
    q.add_argument("second")
    q.add_argument("--max-objects", type=int, default=8)
    q.set_defaults(func=cmd_iso)

    a = sub.add_parser("algebra", parents=[common])
    asub = a.add_subparsers(dest="algebra_cmd", required=True)
    for name in ("category", "bose-mesner", "quotient", "sr-compare", "center", "hh"):
        q = asub.add_parser(name, parents=[common])
        q.add_argument("input", nargs="?")
        q.add_argument("--field", default="Q")
        if name in ("center", "hh"):
            q.add_argument("--kind", choices=["category", "bose-mesner", "quotient", "quotient-category"],
                           default="bose-mesner")
        if name == "hh":
            q.add_argument("--max", type=int, default=2)
            q.add_argument("--max-dim", type=int, default=12)
            q.add_argument("--max-cochains", type=int, default=20000)
        if name == "sr-compare":
            q.add_argument("--map", help="file with {\"target\": complex, \"map\": [...]}")
    a.set_defaults(func=cmd_algebra)

    r = sub.add_parser("rep", parents=[common])
    rsub = r.add_subparsers(dest="rep_cmd", required=True)
    for name in ("validate", "hom", "restrict", "ran", "lan", "ext", "cohomology", "adjunction",
                 "morita-check", "enumerate"):
        q = rsub.add_parser(name, parents=[common])
        q.add_argument("reps", nargs="*")
        q.add_argument("--field", default="F2")
        q.add_argument("--schemoid")
        if name in ("restrict", "ran", "lan", "cohomology", "adjunction"):
            q.add_argument("--morphism")
            q.add_argument("--id", action="store_true", help="use the identity of --schemoid")
        if name in ("ran", "lan", "adjunction"):
            q.add_argument("--literal", action="store_true",
                           help="omit the identification of objects with equivalent identities")
        if name == "hom":
            q.add_argument("--natural", action="store_true", help="all natural maps, not only locally constant")
        if name in ("ext", "cohomology"):
            q.add_argument("--max", type=int, default=3)
        if name in ("enumerate", "morita-check", "adjunction"):
            q.add_argument("--dim-bound", type=int, default=1)
            q.add_argument("--max-candidates", type=int, default=10 ** 6)
        if name == "morita-check":
            q.add_argument("--hamming", type=int)
            q.add_argument("--perturb", action="store_true")
            q.add_argument("--u")
            q.add_argument("--v")
    r.set_defaults(func=cmd_rep)
    return p


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        doc, text = args.func(args)
    except Failure as f:
        out.write(io.dumps(f.doc) if args.json else f.text + "\n")
        return 1
    except io.ParseError as e:
        err.write(f"parse error: {e}\n")
        return 2
    except (SchemoidError, CategoryError, GuardError, ValueError) as e:
        doc = _witness(e)
        if args.json:
            out.write(io.dumps(doc))
        else:
            out.write(f"error: {e}\n")
            if "witness" in doc:
                out.write("witness: " + io.dumps(doc["witness"]))
        return 1
    if getattr(args, "raw_json", False) or args.json or text is None:
        out.write(io.dumps(doc))
    else:
        out.write(text + "\n")
    return 0


def main() -> None:
    sys.exit(run())
