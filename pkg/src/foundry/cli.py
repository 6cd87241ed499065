"""Command-line front end.

Subcommands: check, eval, model-check, cc, countermodel. Exit codes: 0 on
success, 1 on a logical failure (reported with one primary span), 2 on usage
or I/O errors. `--report json` emits the run report with stable key order.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import fol
from .errors import FoundryError
from .run import Options, RunReport, build_model, run_script_text
from .surface import script as sc
from .surface.lexer import Cursor, tokenize
from .surface.parsers import FolEnv, parse_fol_formula


def _options(args) -> Options:
    return Options(
        classical=args.classical,
        eta=args.eta,
        cumulative=args.cumulative,
        impredicative_prop=args.impredicative_prop,
        proof_irrelevance=args.proof_irrelevance,
        axioms=tuple(args.axiom or ()),
        fuel=args.fuel,
        trace=args.trace,
    )


def _add_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--classical", action="store_true", help="classical logic mode")
    p.add_argument("--eta", action="store_true", help="enable eta rules")
    p.add_argument("--cumulative", action="store_true", help="cumulative universes (dtt)")
    p.add_argument("--impredicative-prop", action="store_true", dest="impredicative_prop")
    p.add_argument("--proof-irrelevance", action="store_true", dest="proof_irrelevance")
    p.add_argument("--axiom", action="append", help="enable a named axiom (repeatable)")
    p.add_argument("--fuel", type=int, default=10**5)
    p.add_argument("--trace", action="store_true")
    p.add_argument("--report", choices=("text", "json"), default="text")


def _read(path: str) -> str:
    try:
        with open(path, "r", encoding="utf-8") as f:
            return f.read()
    except OSError as e:
        print(f"error: cannot read {path}: {e}", file=sys.stderr)
        raise SystemExit(2)


def _emit(report: RunReport, fmt: str) -> int:
    if fmt == "json":
        print(report.to_json())
    else:
        if report.trace:
            for line in report.trace:
                print(f"trace: {line}")
        print(report.to_text())
    return 0 if report.ok else 1


def _cmd_check(args) -> int:
    text = _read(args.file)
    report = run_script_text(args.calculus, text, _options(args), args.file)
    return _emit(report, args.report)


def _cmd_eval(args) -> int:
    text = _read(args.file)
    report = run_script_text(args.calculus, text, _options(args), args.file)
    code = _emit(report, args.report)
    if code == 0:
        evals = [r for r in report.results if r.command == "Eval"]
        if not evals:
            print("error: no eval command in the file", file=sys.stderr)
            return 2
        print(evals[-1].output)
    return code


def _parse_problem(path: str, text: str):
    """Problem files: sort/fn/const/rel declarations, assume lines, one prove."""
    commands = sc.parse_script(text, path)
    sig = fol.Signature(sorts=frozenset())
    assumptions = []
    goal = None
    models = {}
    for cmd in commands:
        match cmd:
            case sc.DeclareSort(name=name):
                sig = sig.with_sort(fol.Sort(name))
            case sc.DeclareFn(name=name, args=fargs, result=result):
                sig = sig.with_function(name, tuple(fol.Sort(a) for a in fargs), fol.Sort(result))
            case sc.DeclareRel(name=name, args=rargs):
                sig = sig.with_relation(name, tuple(fol.Sort(a) for a in rargs))
            case sc.Assume(body_tokens=body):
                cur = sc.block_cursor(body, path)
                assumptions.append(parse_fol_formula(cur, FolEnv(sig)))
            case sc.Prove(body_tokens=body):
                cur = sc.block_cursor(body, path)
                goal = parse_fol_formula(cur, FolEnv(sig))
            case sc.ModelDef():
                models[cmd.name] = build_model(sig, cmd)
            case _:
                raise FoundryError(
                    f"command {type(cmd).__name__} is not valid in a problem file",
                    tag="usage", span=cmd.span,
                )
    return sig, assumptions, goal, models


def _cmd_cc(args) -> int:
    text = _read(args.file)
    try:
        sig, assumptions, goal, _ = _parse_problem(args.file, text)
        if goal is None:
            print("error: problem file needs a prove line", file=sys.stderr)
            return 2
        eqs = []
        for a in assumptions:
            if not isinstance(a, fol.Eq):
                raise FoundryError("cc assumptions must be equations", tag="non-ground")
            eqs.append((a.lhs, a.rhs))
        if not isinstance(goal, fol.Eq):
            raise FoundryError("cc goal must be an equation", tag="non-ground")
        result = fol.congruence_closure(eqs, (goal.lhs, goal.rhs))
    except FoundryError as e:
        _report_error(args, e)
        return 1
    if args.report == "json":
        doc = {
            "file": args.file,
            "valid": result.valid,
            "classes": sorted(
                sorted(fol.pretty_term(t) for t in group) for group in (result.partition or ())
            ),
        }
        print(json.dumps(doc, sort_keys=True, indent=2))
    else:
        if result.valid:
            print(f"{args.file}: valid")
        else:
            print(f"{args.file}: not-entailed; subterm partition:")
            for group in sorted(
                (sorted(fol.pretty_term(t) for t in group) for group in result.partition),
            ):
                print("  { " + ", ".join(group) + " }")
    return 0 if result.valid else 1


def _cmd_countermodel(args) -> int:
    text = _read(args.file)
    try:
        sig, assumptions, goal, _ = _parse_problem(args.file, text)
        if goal is None:
            print("error: problem file needs a prove line", file=sys.stderr)
            return 2
        model = fol.search_countermodel(sig, assumptions, goal, args.max_size)
    except FoundryError as e:
        _report_error(args, e)
        return 1
    if args.report == "json":
        doc = {"file": args.file, "max_size": args.max_size, "found": model is not None}
        if model is not None:
            doc["model"] = _model_doc(model)
        print(json.dumps(doc, sort_keys=True, indent=2))
        return 0 if model is None else 1
    if model is None:
        print(f"{args.file}: no countermodel with universes up to size {args.max_size}")
        return 0
    print(f"{args.file}: countermodel found")
    _print_model(model)
    return 1


def _model_doc(model: fol.FiniteModel) -> dict:
    return {
        "universes": {s.name: list(map(str, e)) for s, e in model.universes.items()},
        "functions": {
            name: {",".join(map(str, k)): str(v) for k, v in table.items()}
            for name, table in model.functions.items()
        },
        "relations": {
            name: sorted(",".join(map(str, t)) for t in table)
            for name, table in model.relations.items()
        },
    }


def _print_model(model: fol.FiniteModel) -> None:
    for sort, elems in sorted(model.universes.items(), key=lambda kv: kv[0].name):
        print(f"  sort {sort} = {{ " + ", ".join(map(str, elems)) + " }")
    for name in sorted(model.functions):
        entries = ", ".join(
            f"({', '.join(map(str, k))}) -> {v}" for k, v in sorted(model.functions[name].items())
        )
        print(f"  fn {name} = {{ {entries} }}")
    for name in sorted(model.relations):
        entries = ", ".join(f"({', '.join(map(str, k))})" for k in sorted(model.relations[name]))
        print(f"  rel {name} = {{ {entries} }}")


def _cmd_model_check(args) -> int:
    model_text = _read(args.model_file)
    formula_text = _read(args.formula_file)
    try:
        sig, _assumptions, _goal, models = _parse_problem(args.model_file, model_text)
        if len(models) != 1:
            print("error: the model file must contain exactly one model", file=sys.stderr)
            return 2
        model = next(iter(models.values()))
        cur = Cursor(tokenize(formula_text, args.formula_file), args.formula_file)
        formula = parse_fol_formula(cur, FolEnv(sig))
        fol.check_well_formed(sig, formula)
        ok = fol.valid_in(model, formula)
    except FoundryError as e:
        _report_error(args, e)
        return 1
    if args.report == "json":
        doc = {"formula_file": args.formula_file, "model_file": args.model_file, "holds": ok}
        print(json.dumps(doc, sort_keys=True, indent=2))
    else:
        print(f"{args.formula_file}: {'holds' if ok else 'fails'} in {args.model_file}")
    return 0 if ok else 1


def _report_error(args, e: FoundryError) -> None:
    where = f" at {e.span}" if e.span else ""
    print(f"error[{e.tag}]{where}: {e.message}", file=sys.stderr)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="foundry", description=__doc__)
    sub = p.add_subparsers(dest="subcommand", required=True)

    pc = sub.add_parser("check", help="run a proof script")
    pc.add_argument("file")
    pc.add_argument("--calculus", choices=("fol", "stlc", "hol", "dtt"), required=True)
    _add_flags(pc)
    pc.set_defaults(fn=_cmd_check)

    pe = sub.add_parser("eval", help="run a script and print its final eval")
    pe.add_argument("file")
    pe.add_argument("--calculus", choices=("fol", "stlc", "hol", "dtt"), default="stlc")
    _add_flags(pe)
    pe.set_defaults(fn=_cmd_eval)

    pm = sub.add_parser("model-check", help="evaluate a formula in a finite model")
    pm.add_argument("model_file")
    pm.add_argument("formula_file")
    pm.add_argument("--report", choices=("text", "json"), default="text")
    pm.set_defaults(fn=_cmd_model_check)

    pcc = sub.add_parser("cc", help="decide ground equational entailment")
    pcc.add_argument("file")
    pcc.add_argument("--report", choices=("text", "json"), default="text")
    pcc.set_defaults(fn=_cmd_cc)

    pcm = sub.add_parser("countermodel", help="search for a finite countermodel")
    pcm.add_argument("file")
    pcm.add_argument("--max-size", type=int, default=3, dest="max_size")
    pcm.add_argument("--report", choices=("text", "json"), default="text")
    pcm.set_defaults(fn=_cmd_countermodel)
    return p


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 2 if e.code not in (0, None) else 0
    try:
        return args.fn(args)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 2
    except FoundryError as e:
        _report_error(args, e)
        return 1


def main() -> None:
    raise SystemExit(run())


if __name__ == "__main__":
    main()
