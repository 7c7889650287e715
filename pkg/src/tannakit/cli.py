"""Command-line front end.

Subcommands: validate, reconstruct, lift, rho-tilde, nat, coherence,
characters.  Input documents are JSON on stdin, via --input, or a shipped
fixture via --fixture; --json switches to machine output; the exit code
is 0 exactly when every check in the emitted report passes.
"""

import argparse
import json
import sys
from importlib import resources

from .catpres import load_document, validate_duality_data, validate_functor, \
    validate_tensor_data
from .coend import nat_space, natvee, pairing_bijection_report
from .hopf import (CoalgebraData, ComoduleData, UnsupportedCoalgebraError,
                   characters, convolution_group, grouplike_group, grouplikes)
from .linalg import rank
from .moncat import coherence_equal, eval_in_vec, parse_expr
from .report import Check, Report
from .tannaka import (endvee_antipode, endvee_bialgebra, endvee_coalgebra,
                      lift_functor, rho_tilde)


def fixture_names():
    root = resources.files("tannakit") / "fixtures"
    return sorted(p.name[:-5] for p in root.iterdir() if p.name.endswith(".json"))


def load_fixture_text(name: str) -> str:
    path = resources.files("tannakit") / "fixtures" / (name + ".json")
    try:
        return path.read_text()
    except FileNotFoundError:
        raise SystemExit("unknown fixture %r; available: %s"
                         % (name, ", ".join(fixture_names())))


def _read_document(args):
    if args.fixture:
        text = load_fixture_text(args.fixture)
    elif args.input:
        with open(args.input) as fh:
            text = fh.read()
    else:
        text = sys.stdin.read()
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SystemExit("input is not valid JSON: line %d column %d: %s"
                         % (exc.lineno, exc.colno, exc.msg))
    if args.field:
        raw["field"] = _field_flag(args.field)
    return load_document(raw)


def _field_flag(flag: str):
    if flag == "Q":
        return "Q"
    if flag.startswith("Fp:"):
        return {"Fp": int(flag.split(":", 1)[1])}
    raise SystemExit("--field must be Q or Fp:<prime>")


def _emit(payload: dict, report: Report, as_json: bool) -> int:
    payload["checks"] = report.to_json()
    payload["passed"] = report.passed
    if as_json:
        print(json.dumps(payload, indent=2))
    else:
        for key, value in payload.items():
            if key in ("checks", "passed"):
                continue
            print("%s: %s" % (key, json.dumps(value)))
        for c in report.checks:
            tail = "" if c.passed else "  [residue %s]" % c.residue
            print("%s %s%s" % ("PASS" if c.passed else "FAIL", c.name, tail))
        print("result: %s" % ("ok" if report.passed else "FAILED"))
    return 0 if report.passed else 1


def _structure_payload(coalg, big=None, hopf=None):
    if hopf is not None:
        return hopf.to_json()
    if big is not None:
        return big.to_json()
    return coalg.to_json()


def cmd_validate(args):
    doc = _read_document(args)
    report = Report()
    report.extend(validate_functor(doc.category, doc.functor))
    if doc.tensor is not None and report.passed:
        report.extend(validate_tensor_data(doc.category, doc.functor, doc.tensor))
    if doc.duality is not None and report.passed:
        if doc.tensor is None:
            report.add(Check("duality_needs_tensor", False, residue="missing"))
        else:
            report.extend(validate_duality_data(doc.category, doc.functor,
                                                doc.tensor, doc.duality))
    return _emit({"objects": doc.category.objects}, report, args.json)


def cmd_reconstruct(args):
    doc = _read_document(args)
    report = Report()
    report.extend(validate_functor(doc.category, doc.functor))
    if not report.passed:
        return _emit({}, report, args.json)
    P = natvee(doc.category, doc.functor, doc.functor)
    coalg = endvee_coalgebra(P)
    report.extend(coalg.checks())
    payload = {"quotient_dim": P.quotient_dim,
               "relation_rank": P.relation_span.dim}
    big = hopf = None
    if doc.tensor is not None:
        report.extend(validate_tensor_data(doc.category, doc.functor, doc.tensor))
        if report.passed:
            big = endvee_bialgebra(doc.category, doc.functor, doc.tensor, P,
                                   coalgebra=coalg)
            report.extend(big.checks())
    if doc.duality is not None and big is not None:
        report.extend(validate_duality_data(doc.category, doc.functor,
                                            doc.tensor, doc.duality))
        if report.passed:
            hopf = endvee_antipode(doc.category, doc.functor, doc.tensor,
                                   doc.duality, P, bialgebra=big)
            report.extend(hopf.checks())
    payload["structure"] = _structure_payload(coalg, big, hopf)
    if hopf is not None:
        try:
            gls = grouplikes(coalg)
            table, grep = grouplike_group(hopf, gls)
            payload["grouplikes"] = [[coalg.field.format(x) for x in v]
                                     for v in gls]
            payload["grouplike_table"] = table
            report.extend(grep)
            chars = characters(big)
            ctable, crep = convolution_group(chars, hopf)
            payload["characters"] = [chi.to_strings()[0] for chi in chars]
            payload["character_table"] = ctable
            report.extend(crep)
        except UnsupportedCoalgebraError as exc:
            payload["grouplikes"] = "unsupported: %s" % exc
    return _emit(payload, report, args.json)


def cmd_lift(args):
    doc = _read_document(args)
    report = Report()
    report.extend(validate_functor(doc.category, doc.functor))
    if not report.passed:
        return _emit({}, report, args.json)
    P = natvee(doc.category, doc.functor, doc.functor)
    coactions, lift_report = lift_functor(doc.category, doc.functor, P)
    report.extend(lift_report)
    payload = {"quotient_dim": P.quotient_dim,
               "coactions": {obj: com.rho.to_strings()
                             for obj, com in coactions.items()}}
    return _emit(payload, report, args.json)


def cmd_rho_tilde(args):
    doc = _read_document(args)
    report = Report()
    report.extend(validate_functor(doc.category, doc.functor))
    if doc.coalgebra is None or doc.comodules is None:
        report.add(Check("rho_tilde_inputs", False,
                         residue="needs coalgebra and comodules sections"))
        return _emit({}, report, args.json)
    if not report.passed:
        return _emit({}, report, args.json)
    B = CoalgebraData(doc.coalgebra["dim"], doc.coalgebra["delta"],
                      doc.coalgebra["eps"])
    report.extend(B.checks())
    coactions = {obj: ComoduleData(B.dim, doc.functor.dim(obj), rho)
                 for obj, rho in doc.comodules.items()}
    P = natvee(doc.category, doc.functor, doc.functor)
    rt, rep = rho_tilde(B, doc.category, doc.functor, coactions, P=P)
    report.extend(rep)
    r = rank(rt)
    payload = {"endvee_dim": P.quotient_dim, "coalgebra_dim": B.dim,
               "rho_tilde": rt.to_strings(), "rank": r,
               "surjective": r == B.dim,
               "injective": r == P.quotient_dim,
               "bijective": r == B.dim and r == P.quotient_dim}
    return _emit(payload, report, args.json)


def cmd_nat(args):
    doc = _read_document(args)
    report = Report()
    report.extend(validate_functor(doc.category, doc.functor))
    if not report.passed:
        return _emit({}, report, args.json)
    P = natvee(doc.category, doc.functor, doc.functor)
    N = nat_space(doc.category, doc.functor, doc.functor)
    ok = P.quotient_dim == N.dim
    report.add(Check("predual_dimension_identity", ok,
                     residue="0" if ok else "%d vs %d" % (P.quotient_dim, N.dim)))
    report.extend(pairing_bijection_report(P, N))
    payload = {"coend_dim": P.quotient_dim, "nat_dim": N.dim}
    return _emit(payload, report, args.json)


def cmd_coherence(args):
    report = Report()
    e1 = parse_expr(args.expr1)
    e2 = parse_expr(args.expr2)
    if e1.domain != e2.domain or e1.codomain != e2.codomain:
        report.add(Check("boundary_words_match", False, residue="mismatch"))
        return _emit({}, report, args.json)
    equal = coherence_equal(e1, e2)
    report.add(Check("expressions_equal", equal,
                     residue="0" if equal else "distinct permutations"))
    payload = {"expr1": args.expr1.strip(), "expr2": args.expr2.strip(),
               "equal": equal}
    if args.dims:
        dims = {}
        for part in args.dims.split(","):
            atom, d = part.split("=")
            dims[atom.strip()] = int(d)
        m1 = eval_in_vec(e1, dims)
        m2 = eval_in_vec(e2, dims)
        agree = (m1 == m2) == equal
        report.add(Check("matrix_evaluation_agrees", agree,
                         residue="0" if agree else "semantic disagreement"))
        payload["dims"] = dims
    return _emit(payload, report, args.json)


def cmd_characters(args):
    doc = _read_document(args)
    report = Report()
    report.extend(validate_functor(doc.category, doc.functor))
    if doc.tensor is None:
        report.add(Check("characters_need_tensor", False, residue="missing"))
        return _emit({}, report, args.json)
    report.extend(validate_tensor_data(doc.category, doc.functor, doc.tensor))
    if not report.passed:
        return _emit({}, report, args.json)
    P = natvee(doc.category, doc.functor, doc.functor)
    big = endvee_bialgebra(doc.category, doc.functor, doc.tensor, P)
    payload = {"bialgebra_dim": big.dim}
    try:
        chars = characters(big)
        payload["characters"] = [chi.to_strings()[0] for chi in chars]
    except UnsupportedCoalgebraError as exc:
        report.add(Check("character_search", False, residue=str(exc)))
        return _emit(payload, report, args.json)
    if doc.duality is not None:
        report.extend(validate_duality_data(doc.category, doc.functor,
                                            doc.tensor, doc.duality))
        if report.passed:
            hopf = endvee_antipode(doc.category, doc.functor, doc.tensor,
                                   doc.duality, P, bialgebra=big)
            table, crep = convolution_group(chars, hopf)
            payload["character_table"] = table
            report.extend(crep)
    return _emit(payload, report, args.json)


def _add_doc_options(sub):
    sub.add_argument("--input", help="path to a JSON job document")
    sub.add_argument("--fixture", help="name of a shipped fixture")
    sub.add_argument("--field", help="override field: Q or Fp:<prime>")
    sub.add_argument("--json", action="store_true", help="machine output")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="tannakit",
        description="exact Tannaka reconstruction over presented categories")
    subs = parser.add_subparsers(dest="command", required=True)
    for name, fn, doc in [
        ("validate", cmd_validate, "check functor/tensor/duality axioms"),
        ("reconstruct", cmd_reconstruct,
         "compute End^∨(F) with coalgebra/bialgebra/Hopf structure"),
        ("lift", cmd_lift, "lift F to comodules over End^∨(F)"),
        ("rho-tilde", cmd_rho_tilde,
         "reconstruction morphism End^∨(U) → B for given comodules"),
        ("nat", cmd_nat, "Nat(F,F) dimension vs End^∨(F) with pairing checks"),
        ("characters", cmd_characters,
         "characters and convolution group of End^∨(F)"),
    ]:
        sub = subs.add_parser(name, help=doc)
        _add_doc_options(sub)
        sub.set_defaults(fn=fn)
    sub = subs.add_parser("coherence", help="decide equality of symmetry expressions")
    sub.add_argument("expr1")
    sub.add_argument("expr2")
    sub.add_argument("--dims", help="atom dims for the matrix cross-check, e.g. a=2,b=3")
    sub.add_argument("--json", action="store_true")
    sub.set_defaults(fn=cmd_coherence)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.fn(args)


if __name__ == "__main__":
    sys.exit(main())
