"""Command-line interface.

Commands: validate, suspend, cohomology, verify <lemma>, fixtures
list|emit, simplicial build|pair|double.  Exit codes: 0 pass, 1
verification failure, 2 input error.
"""

import argparse
import json
import sys
import time

from .fields import FieldError, field_from_descriptor
from .core import CoreError
from .ainf import (CheckError, check_relations, check_strict_unital,
                   check_homomorphism, cohomology, is_quasi_iso)
from .bimod import (as_trivial_extension, canonical_splitting_morphism,
                    check_bimodule_morphism, is_bimodule_quasi_iso,
                    shift_bimodule, trivial_extension)
from .susp import (double_suspension_model, split_after_suspension, suspend,
                   suspend_morphism)
from .tw import lemma_alg_check
from . import docio, fixtures, simplicial
from .docio import DocumentError

LEMMAS = ("trivial-extension", "phi-sigma", "split", "double-suspension",
          "lemma-alg", "sandwich")


def _parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--field", default="q",
                        help="coefficient field: q or fp:<p>")
    common.add_argument("--seed", type=int, default=0,
                        help="seed for rand fixtures")
    common.add_argument("--json-report", metavar="FILE",
                        help="write the full report as JSON")
    p = argparse.ArgumentParser(
        prog="ainfsusp",
        description="Exact A-infinity suspension toolkit")
    sub = p.add_subparsers(dest="command", required=True)

    def add_source(sp, pair_names=False):
        sp.add_argument("--input", metavar="FILE", help="algebra document")
        sp.add_argument("--fixture", metavar="NAME",
                        help="named fixture (k, dual:<n>, an:<n>, rand:<seed>)")
        if pair_names:
            sp.add_argument("--pair", metavar="NAME",
                            help="simplicial pair (point, delta1, delta2, delta3)")

    sp = sub.add_parser("validate", parents=[common],
                        help="relations, unitality, closure")
    add_source(sp)

    sp = sub.add_parser("suspend", parents=[common],
                        help="suspend an algebra pair")
    add_source(sp)
    sp.add_argument("--times", type=int, default=1)
    sp.add_argument("--out", metavar="FILE")

    sp = sub.add_parser("cohomology", parents=[common],
                        help="graded dimension table")
    add_source(sp)

    sp = sub.add_parser("verify", parents=[common],
                        help="run a lemma verification pipeline")
    sp.add_argument("lemma", choices=LEMMAS)
    add_source(sp, pair_names=True)

    sp = sub.add_parser("fixtures", parents=[common],
                        help="list or emit named fixtures")
    sp.add_argument("action", choices=("list", "emit"))
    sp.add_argument("name", nargs="?")
    sp.add_argument("--out", metavar="FILE")

    sp = sub.add_parser("simplicial", parents=[common],
                        help="simplicial cochain constructions")
    sp.add_argument("action", choices=("build", "pair", "double"))
    sp.add_argument("--input", metavar="FILE", help="complex or pair document")
    sp.add_argument("--named", metavar="NAME",
                    help="built-in pair (point, delta1, delta2, delta3)")
    sp.add_argument("--out", metavar="FILE")
    return p


def _load_pair(args, field):
    if getattr(args, "input", None):
        alg, pair = docio.load_algebra(args.input)
        return alg, pair
    name = getattr(args, "fixture", None)
    if name is None:
        raise DocumentError("need --input or --fixture")
    if name == "rand":
        name = f"rand:{args.seed}"
    pair = fixtures.fixture_by_name(name, field)
    return pair.parent, pair


def _load_simplicial_pair(args):
    name = getattr(args, "pair", None) or getattr(args, "named", None)
    if getattr(args, "input", None):
        with open(args.input) as fh:
            return docio.pair_from_doc(json.load(fh))
    if name:
        if name not in simplicial.NAMED_PAIRS:
            raise DocumentError(f"unknown simplicial pair {name!r}")
        return simplicial.NAMED_PAIRS[name]()
    raise DocumentError("need --input or a named simplicial pair")


def _coh_table(alg):
    table = cohomology(alg)
    return [{"degree": r, "source": i, "target": j, "dim": d}
            for (r, i, j), d in sorted(table.dims.items())]


def _failures(rep, cap=5):
    return [{"arity": n, "inputs": list(key),
             "residual": {k: str(v) for k, v in lc.items()}}
            for n, key, lc in rep.failures[:cap]]


def cmd_validate(args, field):
    alg, pair = _load_pair(args, field)
    details = {}
    rep = check_relations(alg)
    details["relations"] = "pass" if rep.passed else _failures(rep)
    ok = rep.passed
    if alg.units is not None:
        unital = check_strict_unital(alg)
        details["strict_unital"] = bool(unital)
        ok = ok and unital
    if pair is not None:
        details["subalgebra_closure"] = "pass"  # construction would have raised
        sub_rep = check_relations(pair.sub)
        details["subalgebra_relations"] = "pass" if sub_rep.passed else _failures(sub_rep)
        ok = ok and sub_rep.passed
    return ok, details, None


def cmd_suspend(args, field):
    alg, pair = _load_pair(args, field)
    if pair is None:
        raise DocumentError("suspension needs a pair: add a 'subalgebra' list")
    times = args.times
    details = {"times": times}
    if times == 0:
        doc = docio.algebra_to_doc(alg, sorted(pair.sub_ids))
        return True, details, doc
    current = pair
    sus = None
    for _ in range(times):
        sus = suspend(current)
        current = sus.diagonal_pair()
    details["dim"] = len(sus.algebra.space)
    details["tags"] = {t: sum(1 for v in sus.tags.values() if v == t)
                       for t in ("plus", "minus", "shifted")}
    doc = docio.algebra_to_doc(sus.algebra)
    return True, details, doc


def cmd_cohomology(args, field):
    alg, _pair = _load_pair(args, field)
    rep = check_relations(alg, max_arity=1)
    if not rep.passed:
        raise CheckError("differential does not square to zero")
    return True, {"cohomology": _coh_table(alg)}, None


def _verify_trivial_extension(pair):
    P = as_trivial_extension(pair)
    f = pair.field
    sus = suspend(pair, validate=False)
    model = trivial_extension(pair.sub, shift_bimodule(P, -1), p_prefix="p:")
    images = {a: {"+" + a: f.one, "-" + a: f.one} for a in pair.sub.space.ids()}
    images.update({"p:" + x: {"s" + x: f.one} for x in P.space.ids()})
    from .ainf import strict_homomorphism
    incl = strict_homomorphism(model, sus.algebra, images)
    rep = check_homomorphism(incl)
    details = {"inclusion_equations": "pass" if rep.passed else _failures(rep)}
    qi = rep.passed and is_quasi_iso(incl, checked=True)
    details["inclusion_quasi_iso"] = bool(qi)
    dims_model = cohomology(model).dims
    dims_sus = cohomology(sus.algebra).dims
    details["dims_match"] = dims_model == dims_sus
    details["model_cohomology"] = [
        {"degree": r, "source": i, "target": j, "dim": d}
        for (r, i, j), d in sorted(dims_model.items())]
    return rep.passed and qi and dims_model == dims_sus, details


def _verify_phi_sigma(pair):
    phi, t_pair = canonical_splitting_morphism(pair)
    details = {}
    rep = check_bimodule_morphism(phi)
    details["bimodule_equations"] = "pass" if rep.passed else _failures(rep)
    ok = rep.passed
    if ok:
        details["bimodule_quasi_iso"] = is_bimodule_quasi_iso(phi, checked=True)
        ok = ok and details["bimodule_quasi_iso"]
    phis, _s, _t = suspend_morphism(phi, t_pair, pair)
    rep2 = check_homomorphism(phis)
    details["suspended_equations"] = "pass" if rep2.passed else _failures(rep2)
    ok = ok and rep2.passed
    if rep2.passed:
        details["suspended_quasi_iso"] = is_quasi_iso(phis, checked=True)
        ok = ok and details["suspended_quasi_iso"]
    return ok, details


def _verify_split(pair):
    _sus, Q, pi, xi = split_after_suspension(pair)
    details = {}
    rep = check_bimodule_morphism(xi)
    details["splitting_equations"] = "pass" if rep.passed else _failures(rep)
    ok = rep.passed
    from .bimod import compose_strict_bimodule_morphisms, identity_bimodule_morphism
    comp = compose_strict_bimodule_morphisms(pi, xi)
    ident = identity_bimodule_morphism(Q)
    strict_id = comp.linear().entries == ident.linear().entries
    details["projection_splitting_identity"] = strict_id
    ok = ok and strict_id
    details["projection_splitting_quasi_iso"] = is_bimodule_quasi_iso(comp)
    ok = ok and details["projection_splitting_quasi_iso"]
    return ok, details


def _verify_double_suspension(pair):
    rep = double_suspension_model(pair)
    details = {"stages": [{"name": s.name, "passed": s.passed,
                           **({"detail": s.detail} if s.detail else {})}
                          for s in rep.stages],
               "model_cohomology": [
                   {"degree": r, "source": i, "target": j, "dim": d}
                   for (r, i, j), d in sorted(rep.model_dims.items())]}
    return rep.passed, details


def _verify_lemma_alg(pair):
    rep = lemma_alg_check(pair)
    return rep.passed, {"structure_constants": "equal" if rep.passed else rep.detail}


def _verify_sandwich(spair, field):
    smap, _Ws, sus, _ab = simplicial.sandwich_map(spair, field)
    details = {}
    rep = check_homomorphism(smap)
    details["homomorphism"] = "pass" if rep.passed else _failures(rep)
    ok = rep.passed
    if ok:
        details["quasi_iso"] = is_quasi_iso(smap, checked=True)
        ok = ok and details["quasi_iso"]
    details["glued_cohomology"] = _coh_table(smap.source)
    details["suspension_cohomology"] = _coh_table(sus.algebra)
    return ok, details


def cmd_verify(args, field):
    if args.lemma == "sandwich":
        spair = _load_simplicial_pair(args)
        ok, details = _verify_sandwich(spair, field)
        return ok, details, None
    alg, pair = _load_pair(args, field)
    if pair is None:
        raise DocumentError("lemma verification needs a pair")
    fn = {"trivial-extension": _verify_trivial_extension,
          "phi-sigma": _verify_phi_sigma,
          "split": _verify_split,
          "double-suspension": _verify_double_suspension,
          "lemma-alg": _verify_lemma_alg}[args.lemma]
    ok, details = fn(pair)
    return ok, details, None


def cmd_fixtures(args, field):
    if args.action == "list":
        names = sorted(fixtures.FIXTURES) + ["dual:<n>", "an:<n>", "rand:<seed>"]
        return True, {"fixtures": names}, None
    if not args.name:
        raise DocumentError("fixtures emit needs a name")
    name = args.name
    if name == "rand":
        name = f"rand:{args.seed}"
    pair = fixtures.fixture_by_name(name, field)
    doc = docio.algebra_to_doc(pair.parent, sorted(pair.sub_ids))
    return True, {"fixture": name, "dim": len(pair.parent.space)}, doc


def cmd_simplicial(args, field):
    if args.action == "build":
        if args.input:
            with open(args.input) as fh:
                X = docio.complex_from_doc(json.load(fh))
        elif args.named:
            X = simplicial.NAMED_PAIRS[args.named]().complex
        else:
            raise DocumentError("need --input or --named")
        alg = simplicial.cochain_dga(X, field)
        return True, {"dim": len(alg.space)}, docio.algebra_to_doc(alg)
    spair = _load_simplicial_pair(args)
    if args.action == "pair":
        ab_pair, _restr = simplicial.pair_algebra(spair, field)
        doc = docio.algebra_to_doc(ab_pair.parent, sorted(ab_pair.sub_ids))
        return True, {"dim": len(ab_pair.parent.space)}, doc
    Ws = simplicial.glue_double(spair)
    return True, {"simplices": len(Ws)}, docio.complex_to_doc(Ws)


def main(argv=None):
    args = _parser().parse_args(argv)
    t0 = time.monotonic()
    try:
        field = field_from_descriptor(args.field)
        handler = {"validate": cmd_validate, "suspend": cmd_suspend,
                   "cohomology": cmd_cohomology, "verify": cmd_verify,
                   "fixtures": cmd_fixtures, "simplicial": cmd_simplicial}
        ok, details, payload = handler[args.command](args, field)
    except (DocumentError, FieldError, CoreError, CheckError, OSError,
            KeyError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 2
    report = {
        "command": args.command + (f" {args.lemma}" if args.command == "verify" else ""),
        "field": args.field,
        "seed": args.seed,
        "verdict": "pass" if ok else "fail",
        "details": details,
    }
    inputs = {k: getattr(args, k, None)
              for k in ("input", "fixture", "pair", "named", "times")}
    report["inputs_digest"] = docio.canonical_digest(
        {"inputs": inputs, "field": args.field, "seed": args.seed})
    report["timing_ms"] = round(1000 * (time.monotonic() - t0), 2)
    out = getattr(args, "out", None)
    if out and payload is not None:
        docio.save_doc(payload, out)
        report["out"] = out
    if args.json_report:
        docio.save_doc(report, args.json_report)
    print(json.dumps(report, indent=1, sort_keys=True))
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
