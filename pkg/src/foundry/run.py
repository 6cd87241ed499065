"""Script execution: per-calculus runners producing deterministic reports.

The CLI and the test suite both drive scripts through these runners. A report
carries one status per command; apart from the elapsed-time field it is a
pure function of the input.
"""

from __future__ import annotations

import dataclasses
import json
import time
from dataclasses import dataclass, field, replace

from . import dtt, fol, stlc
from .dtt.printer import pretty as pretty_dtt
from .errors import FoundryError, ScriptError
from .hol import kernel as hk
from .hol import derived as hd
from .surface import script as sc
from .surface.lexer import Cursor
from .surface.parsers import (
    FolEnv, parse_dtt_expr, parse_fol_formula, parse_hol_term, parse_hol_type,
    parse_stlc_term, parse_stlc_type,
)
from .surface.printer import pretty_hol, pretty_stlc
from .surface.proofparse import parse_hilbert, parse_nd


@dataclass
class Options:
    classical: bool = False
    eta: bool = False
    cumulative: bool = False
    impredicative_prop: bool = False
    proof_irrelevance: bool = False
    axioms: tuple = ()
    fuel: int = 10**5
    trace: bool = False


@dataclass
class CommandResult:
    index: int
    command: str
    status: str  # ok | error
    name: str = ""
    tag: str = ""
    message: str = ""
    line: int = 0
    col: int = 0
    output: str = ""

    def as_dict(self) -> dict:
        return {
            "col": self.col,
            "command": self.command,
            "index": self.index,
            "line": self.line,
            "message": self.message,
            "name": self.name,
            "output": self.output,
            "status": self.status,
            "tag": self.tag,
        }


@dataclass
class RunReport:
    file: str
    calculus: str
    results: list = field(default_factory=list)
    theorems_certified: int = 0
    elapsed_s: float = 0.0
    trace: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(r.status == "ok" for r in self.results)

    def first_error(self) -> CommandResult | None:
        for r in self.results:
            if r.status != "ok":
                return r
        return None

    def to_json(self) -> str:
        doc = {
            "calculus": self.calculus,
            "commands": [r.as_dict() for r in self.results],
            "elapsed_s": round(self.elapsed_s, 6),
            "file": self.file,
            "ok": self.ok,
            "theorems_certified": self.theorems_certified,
        }
        return json.dumps(doc, sort_keys=True, indent=2)

    def to_text(self) -> str:
        lines = []
        for r in self.results:
            head = f"[{r.index + 1:3}] {r.command}"
            if r.name:
                head += f" {r.name}"
            if r.status == "ok":
                line = f"{head}: ok"
                if r.output:
                    line += f" -- {r.output}"
            else:
                line = f"{head}: error[{r.tag}] at {r.line}:{r.col}: {r.message}"
            lines.append(line)
        lines.append(
            f"{self.file}: {'ok' if self.ok else 'FAILED'}, "
            f"{self.theorems_certified} theorem(s) certified"
        )
        return "\n".join(lines)


class _Runner:
    calculus = "?"

    def __init__(self, options: Options, filename: str = "<script>"):
        self.options = options
        self.filename = filename
        self.report = RunReport(file=filename, calculus=self.calculus)

    def run(self, commands) -> RunReport:
        t0 = time.perf_counter()
        for i, cmd in enumerate(commands):
            kind = type(cmd).__name__
            name = getattr(cmd, "name", "")
            try:
                output = self.execute(cmd)
                self.report.results.append(
                    CommandResult(
                        i, kind, "ok", name=name,
                        line=cmd.span.line, col=cmd.span.col, output=output or "",
                    )
                )
            except FoundryError as e:
                span = e.span or cmd.span
                self.report.results.append(
                    CommandResult(
                        i, kind, "error", name=name, tag=e.tag,
                        message=e.message, line=span.line, col=span.col,
                    )
                )
                break
        self.report.elapsed_s = time.perf_counter() - t0
        return self.report

    def execute(self, cmd) -> str:
        if isinstance(cmd, sc.ExpectError):
            try:
                self.execute(cmd.command)
            except FoundryError as e:
                if e.tag == cmd.tag:
                    return f"expected error: {e.tag}"
                raise ScriptError(
                    f"expected error tag {cmd.tag}, got {e.tag}: {e.message}"
                ) from e
            raise ScriptError(f"expected an error tagged {cmd.tag}, but the command succeeded")
        return self.dispatch(cmd)

    def dispatch(self, cmd) -> str:
        raise ScriptError(f"command {type(cmd).__name__} is not supported in {self.calculus}")

    def trace(self, line: str) -> None:
        if self.options.trace:
            self.report.trace.append(line)


# ---------------------------------------------------------------------------
# FOL


class FolRunner(_Runner):
    calculus = "fol"

    def __init__(self, options: Options, filename: str = "<script>", theory=None):
        super().__init__(options, filename)
        mode = "classical" if options.classical else "intuitionistic"
        self.theory = theory or fol.pure_theory(fol.single_sorted(), mode)
        if theory is None:
            # scripts normally declare their own sorts; start with none
            self.theory = replace(
                self.theory, signature=fol.Signature(sorts=frozenset())
            )
        self.models: dict[str, fol.FiniteModel] = {}
        self.assumptions: list = []
        self.goal = None

    def env(self) -> FolEnv:
        return FolEnv(self.theory.signature)

    def _parse_formula(self, tokens):
        cur = sc.block_cursor(tokens, self.filename)
        a = parse_fol_formula(cur, self.env())
        if not cur.done():
            cur.fail("trailing input in formula")
        return a

    def dispatch(self, cmd) -> str:
        match cmd:
            case sc.DeclareSort(name=name):
                sig = self.theory.signature.with_sort(fol.Sort(name))
                self.theory = replace(self.theory, signature=sig)
            case sc.DeclareFn(name=name, args=args, result=result):
                sig = self.theory.signature.with_function(
                    name, tuple(fol.Sort(a) for a in args), fol.Sort(result)
                )
                self.theory = replace(self.theory, signature=sig)
            case sc.DeclareRel(name=name, args=args):
                sig = self.theory.signature.with_relation(
                    name, tuple(fol.Sort(a) for a in args)
                )
                self.theory = replace(self.theory, signature=sig)
            case sc.DefineRel(name=name, params=params, body_tokens=body):
                pvars = tuple(fol.FVar(p, fol.Sort(s)) for p, s in params)
                cur = sc.block_cursor(body, self.filename)
                env = FolEnv(self.theory.signature, {p: fol.Sort(s) for p, s in params})
                a = parse_fol_formula(cur, env)
                self.theory = fol.extend_by_relation(self.theory, name, a, pvars)
            case sc.AxiomDecl(name=name, body_tokens=body):
                a = self._parse_formula(body)
                self.theory = self.theory.with_axiom(name, a)
            case sc.Assume(body_tokens=body):
                a = self._parse_formula(body)
                self.assumptions.append(a)
                self.theory = self.theory.with_axiom(
                    f"assumption_{len(self.assumptions)}", a
                )
            case sc.Prove(body_tokens=body):
                self.goal = self._parse_formula(body)
            case sc.Check(body_tokens=body, type_tokens=None):
                a = self._parse_formula(body)
                fol.check_well_formed(self.theory.signature, a)
            case sc.ModelDef():
                self.models[cmd.name] = build_model(self.theory.signature, cmd)
            case sc.Theorem(name=name, statement_tokens=stmt, proof_kind=pk, proof_tokens=proof):
                statement = self._parse_formula(stmt)
                cur = sc.block_cursor(proof, self.filename)
                if pk == "nd":
                    d = parse_nd(cur, self.env())
                    cert = fol.check_nd(self.theory, d)
                    if self.options.trace:
                        _trace_nd(self, d)
                elif pk == "hilbert":
                    p = parse_hilbert(cur, self.env())
                    cert = fol.check_hilbert(self.theory, p)
                else:
                    raise ScriptError("fol theorems take nd { ... } or hilbert { ... } proofs")
                if not fol.alpha_equal(cert.conclusion, statement):
                    raise ScriptError(
                        f"proof concludes {fol.pretty_formula(cert.conclusion)}, "
                        f"statement says {fol.pretty_formula(statement)}"
                    )
                for h in cert.hypotheses:
                    if not self.theory.proves_outright(h):
                        raise ScriptError(
                            f"theorem cites a hypothesis outside the theory: "
                            f"{fol.pretty_formula(h)}"
                        )
                self.report.theorems_certified += 1
                return str(cert)
            case _:
                return super().dispatch(cmd)
        return ""


def _trace_nd(runner: FolRunner, d) -> None:
    from .fol.proof import _check

    def walk(node, depth):
        seq = _check(runner.theory, node, "trace")
        runner.trace("  " * depth + f"{seq}   [{type(node).__name__}]")
        for f in dataclasses.fields(node):
            v = getattr(node, f.name)
            if hasattr(v, "__dataclass_fields__") and not isinstance(
                v, (fol.FVar,)
            ) and type(v).__module__.endswith("fol.proof"):
                walk(v, depth + 1)

    walk(d, 0)


def build_model(sig: fol.Signature, cmd: sc.ModelDef) -> fol.FiniteModel:
    universes = {fol.Sort(s): tuple(elems) for s, elems in cmd.universes}
    functions = {
        name: {args: result for args, result in entries}
        for name, entries in cmd.functions
    }
    relations = {name: frozenset(tuples) for name, tuples in cmd.relations}
    model = fol.FiniteModel(universes=universes, functions=functions, relations=relations)
    model.validate(sig)
    return model


# ---------------------------------------------------------------------------
# STLC


class StlcRunner(_Runner):
    calculus = "stlc"

    def __init__(self, options: Options, filename: str = "<script>"):
        super().__init__(options, filename)
        self.consts: dict = {}

    def flags(self) -> stlc.ReductionFlags:
        return stlc.ReductionFlags(beta=True, eta=self.options.eta, iota=True)

    def _term(self, tokens):
        cur = sc.block_cursor(tokens, self.filename)
        t = parse_stlc_term(cur, self.consts)
        if not cur.done():
            cur.fail("trailing input in term")
        return t

    def _type(self, tokens):
        cur = sc.block_cursor(tokens, self.filename)
        t = parse_stlc_type(cur)
        if not cur.done():
            cur.fail("trailing input in type")
        return t

    def dispatch(self, cmd) -> str:
        match cmd:
            case sc.DeclareTyped(name=name, type_tokens=ty):
                self.consts[name] = stlc.Const(name, self._type(ty))
            case sc.Define(name=name, type_tokens=ty, body_tokens=body):
                t = self._term(body)
                got = stlc.infer_type({}, t)
                if ty is not None and self._type(ty) != got:
                    raise ScriptError(
                        f"definition {name} has type {stlc.pretty_type(got)}"
                    )
                self.consts[name] = t
            case sc.TermMacro(name=name, body_tokens=body):
                self.consts[name] = self._term(body)
            case sc.Check(body_tokens=body, type_tokens=ty):
                t = self._term(body)
                got = stlc.infer_type({}, t)
                if ty is not None and self._type(ty) != got:
                    raise ScriptError(f"term has type {stlc.pretty_type(got)}")
                return stlc.pretty_type(got)
            case sc.Eval(body_tokens=body):
                t = self._term(body)
                stlc.infer_type({}, t)
                if self.options.trace:
                    cur = t
                    while True:
                        nxt = stlc.reduce_step(cur, self.flags())
                        if nxt is None:
                            break
                        self.trace(f"{pretty_stlc(cur)} --> {pretty_stlc(nxt)}")
                        cur = nxt
                nf = stlc.normalize(t, self.flags(), fuel=self.options.fuel)
                return pretty_stlc(nf)
            case sc.Theorem(name=name, statement_tokens=stmt, proof_kind="term", proof_tokens=body):
                t = self._term(body)
                want = self._type(stmt)
                got = stlc.infer_type({}, t)
                if got != want:
                    raise ScriptError(
                        f"term has type {stlc.pretty_type(got)}, stated {stlc.pretty_type(want)}"
                    )
                self.report.theorems_certified += 1
                return stlc.pretty_type(got)
            case _:
                return super().dispatch(cmd)
        return ""


# ---------------------------------------------------------------------------
# HOL


class HolRunner(_Runner):
    calculus = "hol"

    def __init__(self, options: Options, filename: str = "<script>", state=None):
        super().__init__(options, filename)
        self.state = state if state is not None else hk.initial_state()
        for ax in options.axioms:
            self.state = self.state.enable_axiom(ax)
        self.thms: dict[str, hk.HolTheorem] = {}
        self.macros: dict[str, hk.HolTerm] = {}
        self.named: list = []  # (name, theorem) in script order

    def _term(self, tokens):
        cur = sc.block_cursor(tokens, self.filename)
        t = parse_hol_term(cur, self.state, self.macros)
        if not cur.done():
            cur.fail("trailing input in term")
        return t

    def dispatch(self, cmd) -> str:
        match cmd:
            case sc.Define(name=name, type_tokens=None, body_tokens=body):
                t = self._term(body)
                self.state, thm = hk.new_definition(self.state, name, t)
                self.named.append((name, thm))
                return repr(thm)
            case sc.TermMacro(name=name, body_tokens=body):
                self.macros[name] = self._term(body)
            case sc.AxiomEnable(name=name):
                self.state = self.state.enable_axiom(name)
            case sc.Thm(name=name, proof_tokens=proof):
                thm = self._rule_expr(sc.block_cursor(proof, self.filename))
                self.thms[name] = thm
                self.named.append((name, thm))
                self.trace(f"{name}: {thm!r}")
                return repr(thm)
            case sc.Theorem(name=name, statement_tokens=stmt, proof_kind="rule-expr", proof_tokens=proof):
                statement = self._term(stmt)
                thm = self._rule_expr(sc.block_cursor(proof, self.filename))
                if thm.hypotheses:
                    raise ScriptError("theorems must have no hypotheses")
                if thm.conclusion != statement:
                    raise ScriptError(
                        f"proof concludes {pretty_hol(thm.conclusion)}, statement "
                        f"says {pretty_hol(statement)}"
                    )
                self.thms[name] = thm
                self.named.append((name, thm))
                self.report.theorems_certified += 1
                return repr(thm)
            case sc.Check(body_tokens=body, type_tokens=ty):
                t = self._term(body)
                got = hk.check_term(self.state, t)
                if ty is not None:
                    cur = sc.block_cursor(ty, self.filename)
                    want = parse_hol_type(cur, self.state)
                    if got != want:
                        raise ScriptError(f"term has type {hk.pretty_type(got)}")
                return hk.pretty_type(got)
            case _:
                return super().dispatch(cmd)
        return ""

    # rule expression evaluation ------------------------------------------

    _PRIMS = {
        "refl", "assume", "trans", "mk_comb", "abs", "beta", "eta", "eq_mp",
        "deduct_antisym",
    }
    _DERIVED = {
        "sym": hd.SYM, "ap_term": hd.AP_TERM, "ap_thm": hd.AP_THM,
        "beta_conv": hd.beta_conv, "truth": hd.TRUTH, "eqt_intro": hd.EQT_INTRO,
        "eqt_elim": hd.EQT_ELIM, "spec": hd.SPEC, "gen": hd.GEN,
        "disch": hd.DISCH, "undisch": hd.UNDISCH, "mp": hd.MP,
        "conj": hd.CONJ, "conjunct1": hd.CONJUNCT1, "conjunct2": hd.CONJUNCT2,
        "disj1": hd.DISJ1, "disj2": hd.DISJ2, "disj_cases": hd.DISJ_CASES,
        "not_intro": hd.NOT_INTRO, "not_elim": hd.NOT_ELIM, "contr": hd.CONTR,
        "exists_intro": hd.EXISTS, "ext": hd.EXT, "unfold": hd.unfold_rule,
        "conv_rule": hd.CONV_RULE,
    }

    def _rule_expr(self, cur: Cursor) -> hk.HolTheorem:
        thm = self._eval_expr(cur)
        if not cur.done():
            cur.fail("trailing input in proof expression")
        return thm

    def _eval_expr(self, cur: Cursor) -> hk.HolTheorem:
        t = cur.expect_kind("ident")
        name = t.value
        args = []
        while True:
            p = cur.peek()
            if p.kind == "symbol" and p.value == "(":
                cur.next()
                args.append(("thm", self._eval_expr(cur)))
                cur.expect(")")
            elif p.kind == "symbol" and p.value == "{":
                toks = sc._collect_braces(cur)
                inner = sc.block_cursor(toks, self.filename)
                args.append(("term", parse_hol_term(inner, self.state, self.macros)))
            elif p.kind == "symbol" and p.value == "[":
                cur.next()
                ty = parse_hol_type(cur, self.state)
                cur.expect("]")
                args.append(("type", ty))
            elif p.kind == "tyvar":
                cur.next()
                args.append(("tyvar", p.value))
            elif p.kind == "ident":
                cur.next()
                args.append(("name", p.value, p.span))
            else:
                break
        return self._apply_rule(name, args, t.span)

    def _thm_arg(self, a):
        if a[0] == "thm":
            return a[1]
        if a[0] == "name":
            if a[1] in self.thms:
                return self.thms[a[1]]
            raise ScriptError(f"unknown theorem {a[1]}", span=a[2])
        raise ScriptError("expected a theorem argument")

    def _term_arg(self, a):
        if a[0] != "term":
            raise ScriptError("expected a {term} argument")
        return a[1]

    def _apply_rule(self, name: str, args, span) -> hk.HolTheorem:
        st = self.state
        try:
            if name == "axiom":
                if len(args) != 1 or args[0][0] != "name":
                    raise ScriptError("axiom takes an axiom name")
                return hk.axiom(st, args[0][1])
            if name == "defthm":
                if len(args) != 1 or args[0][0] != "name":
                    raise ScriptError("defthm takes a constant name")
                return hk.defining_theorem(st, args[0][1])
            if name == "inst_type":
                mapping = {}
                i = 0
                while i + 1 < len(args):
                    if args[i][0] != "tyvar" or args[i + 1][0] != "type":
                        break
                    mapping[args[i][1]] = args[i + 1][1]
                    i += 2
                return hk.inst_type(st, self._thm_arg(args[-1]), mapping)
            if name == "inst_term":
                mapping = {}
                i = 0
                while i + 1 < len(args) - 1:
                    x = self._term_arg(args[i])
                    v = self._term_arg(args[i + 1])
                    if not isinstance(x, hk.FVar):
                        raise ScriptError("inst_term substitutes for variables")
                    mapping[x] = v
                    i += 2
                return hk.inst_term(st, self._thm_arg(args[-1]), mapping)
            if name in self._PRIMS:
                vals = [
                    self._thm_arg(a) if a[0] in ("thm", "name") else self._rule_val(a)
                    for a in args
                ]
                if name == "abs":
                    x = vals[0]
                    if not isinstance(x, hk.FVar):
                        raise ScriptError("abs takes a {variable} first")
                    return hk.ABS(st, x, vals[1])
                return hk.rule(st, name, *vals)
            if name in self._DERIVED:
                fn = self._DERIVED[name]
                vals = []
                for a in args:
                    if a[0] in ("thm",):
                        vals.append(a[1])
                    elif a[0] == "name":
                        if a[1] in self.thms:
                            vals.append(self.thms[a[1]])
                        elif name in ("unfold", "conv_rule"):
                            vals.append(a[1])  # constant names
                        else:
                            raise ScriptError(f"unknown theorem {a[1]}", span=a[2])
                    else:
                        vals.append(a[1])
                return fn(st, *vals)
        except FoundryError:
            raise
        except TypeError as e:
            raise ScriptError(f"bad arguments for {name}: {e}", span=span) from e
        if not args and name in self.thms:
            return self.thms[name]
        raise ScriptError(f"unknown rule or theorem {name}", span=span)

    def _rule_val(self, a):
        if a[0] in ("term", "type"):
            return a[1]
        raise ScriptError("unexpected argument kind")


# ---------------------------------------------------------------------------
# DTT


class DttRunner(_Runner):
    calculus = "dtt"

    def __init__(self, options: Options, filename: str = "<script>"):
        super().__init__(options, filename)
        axioms = frozenset(a for a in options.axioms)
        self.cfg = dtt.KernelConfig(
            eta_for_pi=options.eta,
            cumulativity=options.cumulative,
            impredicative_prop=options.impredicative_prop,
            proof_irrelevance=options.proof_irrelevance,
            axioms=axioms,
        )
        self.ctx = dtt.DttContext()
        self.defs: dict[str, dtt.Expr] = {}

    def _expr(self, tokens):
        cur = sc.block_cursor(tokens, self.filename)
        e = parse_dtt_expr(cur, self.defs)
        if not cur.done():
            cur.fail("trailing input in expression")
        return e

    def dispatch(self, cmd) -> str:
        match cmd:
            case sc.AxiomEnable(name=name):
                self.cfg = replace(self.cfg, axioms=self.cfg.axioms | {name})
            case sc.Define(name=name, type_tokens=ty, body_tokens=body):
                e = self._expr(body)
                if ty is not None:
                    want = self._expr(ty)
                    dtt.check(self.cfg, self.ctx, e, want)
                else:
                    dtt.infer(self.cfg, self.ctx, e)
                self.defs[name] = e
            case sc.TermMacro(name=name, body_tokens=body):
                self.defs[name] = self._expr(body)
            case sc.Check(body_tokens=body, type_tokens=ty):
                e = self._expr(body)
                if ty is not None:
                    want = self._expr(ty)
                    dtt.check(self.cfg, self.ctx, e, want)
                    return pretty_dtt(want)
                return pretty_dtt(dtt.infer(self.cfg, self.ctx, e))
            case sc.Eval(body_tokens=body):
                e = self._expr(body)
                dtt.infer(self.cfg, self.ctx, e)
                if self.options.trace:
                    self.trace(f"eval {pretty_dtt(e)}")
                nf = dtt.normalize(self.cfg, self.ctx, e, fuel=self.options.fuel)
                return pretty_dtt(nf)
            case sc.Theorem(name=name, statement_tokens=stmt, proof_kind="term", proof_tokens=body):
                want = self._expr(stmt)
                e = self._expr(body)
                dtt.check(self.cfg, self.ctx, e, want)
                self.defs[name] = e
                self.report.theorems_certified += 1
                return pretty_dtt(want)
            case _:
                return super().dispatch(cmd)
        return ""


RUNNERS = {"fol": FolRunner, "stlc": StlcRunner, "hol": HolRunner, "dtt": DttRunner}


def run_script_text(calculus: str, text: str, options: Options | None = None, filename: str = "<script>") -> RunReport:
    options = options or Options()
    runner = RUNNERS[calculus](options, filename)
    try:
        commands = sc.parse_script(text, filename)
    except FoundryError as e:
        report = RunReport(file=filename, calculus=calculus)
        span = e.span
        report.results.append(
            CommandResult(
                0, "parse", "error", tag=e.tag, message=e.message,
                line=span.line if span else 0, col=span.col if span else 0,
            )
        )
        return report
    return runner.run(commands)
