"""LCF-style simple type theory kernel, equality-primitive formulation.

Theorems can be minted only by the rule functions in this module: the
HolTheorem constructor is token-guarded and instances are sealed. Everything
else in the package (derived rules, scripts, tests) builds on this surface.

Types are Prop, Ind, the binary `fun` operator, type variables, and user
operators added by type definition. Terms use de Bruijn binders with named
free variables, so alpha-equivalence is structural equality and hypothesis
sets deduplicate up to alpha.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Iterable, Mapping, Union

from ..errors import KernelError
from ..span import hint_field, span_field


# ---------------------------------------------------------------------------
# Types


@dataclass(frozen=True)
class TyVar:
    name: str
    span: object = span_field()


@dataclass(frozen=True)
class TyApp:
    op: str
    args: tuple["HolType", ...] = ()
    span: object = span_field()


HolType = Union[TyVar, TyApp]

PROP = TyApp("Prop")
IND = TyApp("Ind")
ALPHA = TyVar("a")


def fn(dom: HolType, cod: HolType) -> TyApp:
    return TyApp("fun", (dom, cod))


def ty_vars(ty: HolType) -> frozenset[str]:
    match ty:
        case TyVar(name=n):
            return frozenset((n,))
        case TyApp(args=args):
            out: frozenset[str] = frozenset()
            for a in args:
                out |= ty_vars(a)
            return out
    raise TypeError(ty)


def type_subst(ty: HolType, mapping: Mapping[str, HolType]) -> HolType:
    match ty:
        case TyVar(name=n):
            return mapping.get(n, ty)
        case TyApp(op=op, args=args):
            return TyApp(op, tuple(type_subst(a, mapping) for a in args))
    raise TypeError(ty)


def type_match(generic: HolType, concrete: HolType, env: dict[str, HolType] | None = None):
    """First-order matching of a generic type against a concrete one; returns
    the substitution or None."""
    if env is None:
        env = {}
    match generic:
        case TyVar(name=n):
            if n in env:
                return env if env[n] == concrete else None
            env[n] = concrete
            return env
        case TyApp(op=op, args=args):
            if not (isinstance(concrete, TyApp) and concrete.op == op and len(concrete.args) == len(args)):
                return None
            for g, c in zip(args, concrete.args):
                if type_match(g, c, env) is None:
                    return None
            return env
    raise TypeError(generic)


def pretty_type(ty: HolType) -> str:
    match ty:
        case TyVar(name=n):
            return f"'{n}"
        case TyApp(op="fun", args=(d, c)):
            dd = pretty_type(d)
            if isinstance(d, TyApp) and d.op == "fun":
                dd = f"({dd})"
            return f"{dd} -> {pretty_type(c)}"
        case TyApp(op=op, args=()):
            return op
        case TyApp(op=op, args=args):
            return f"{op}[{', '.join(pretty_type(a) for a in args)}]"
    raise TypeError(ty)


# ---------------------------------------------------------------------------
# Terms


@dataclass(frozen=True)
class BVar:
    index: int
    span: object = span_field()


@dataclass(frozen=True)
class FVar:
    name: str
    type: HolType
    span: object = span_field()


@dataclass(frozen=True)
class Const:
    name: str
    type: HolType  # the fully instantiated type of this occurrence
    span: object = span_field()


@dataclass(frozen=True)
class App:
    fn: "HolTerm"
    arg: "HolTerm"
    span: object = span_field()


@dataclass(frozen=True)
class Abs:
    dom: HolType
    body: "HolTerm"
    hint: str | None = hint_field()
    span: object = span_field()


HolTerm = Union[BVar, FVar, Const, App, Abs]

EQ = "="
EPS = "eps"


def type_of(t: HolTerm, stack: tuple[HolType, ...] = ()) -> HolType:
    match t:
        case BVar(index=k):
            if k >= len(stack):
                raise KernelError(f"unbound de Bruijn index {k}")
            return stack[k]
        case FVar(type=ty) | Const(type=ty):
            return ty
        case App(fn=f, arg=a):
            tf = type_of(f, stack)
            if not (isinstance(tf, TyApp) and tf.op == "fun"):
                raise KernelError(f"application of non-function of type {pretty_type(tf)}")
            ta = type_of(a, stack)
            if ta != tf.args[0]:
                raise KernelError(
                    f"ill-typed application: argument {pretty_type(ta)} vs "
                    f"domain {pretty_type(tf.args[0])}"
                )
            return tf.args[1]
        case Abs(dom=d, body=b):
            return fn(d, type_of(b, (d,) + stack))
    raise TypeError(t)


def term_ty_vars(t: HolTerm) -> frozenset[str]:
    match t:
        case BVar():
            return frozenset()
        case FVar(type=ty) | Const(type=ty):
            return ty_vars(ty)
        case App(fn=f, arg=a):
            return term_ty_vars(f) | term_ty_vars(a)
        case Abs(dom=d, body=b):
            return ty_vars(d) | term_ty_vars(b)
    raise TypeError(t)


def term_ty_subst(t: HolTerm, mapping: Mapping[str, HolType]) -> HolTerm:
    match t:
        case BVar():
            return t
        case FVar(name=n, type=ty):
            return FVar(n, type_subst(ty, mapping))
        case Const(name=n, type=ty):
            return Const(n, type_subst(ty, mapping))
        case App(fn=f, arg=a):
            return App(term_ty_subst(f, mapping), term_ty_subst(a, mapping))
        case Abs(dom=d, body=b, hint=h):
            return Abs(type_subst(d, mapping), term_ty_subst(b, mapping), hint=h)
    raise TypeError(t)


def free_vars(t: HolTerm) -> frozenset[FVar]:
    match t:
        case BVar() | Const():
            return frozenset()
        case FVar():
            return frozenset((t,))
        case App(fn=f, arg=a):
            return free_vars(f) | free_vars(a)
        case Abs(body=b):
            return free_vars(b)
    raise TypeError(t)


def subst_fvars(t: HolTerm, mapping: Mapping[FVar, "HolTerm"]) -> HolTerm:
    """Simultaneous substitution for free variables; capture-free because
    bound variables are indices."""
    match t:
        case BVar() | Const():
            return t
        case FVar():
            return mapping.get(t, t)
        case App(fn=f, arg=a):
            return App(subst_fvars(f, mapping), subst_fvars(a, mapping))
        case Abs(dom=d, body=b, hint=h):
            return Abs(d, subst_fvars(b, mapping), hint=h)
    raise TypeError(t)


def open_term(body: HolTerm, value: HolTerm, depth: int = 0) -> HolTerm:
    """Instantiate BVar(depth) with a locally closed term."""
    match body:
        case BVar(index=k):
            return value if k == depth else (BVar(k - 1) if k > depth else body)
        case FVar() | Const():
            return body
        case App(fn=f, arg=a):
            return App(open_term(f, value, depth), open_term(a, value, depth))
        case Abs(dom=d, body=b, hint=h):
            return Abs(d, open_term(b, value, depth + 1), hint=h)
    raise TypeError(body)


def abstract_fvar(t: HolTerm, x: FVar, depth: int = 0) -> HolTerm:
    match t:
        case BVar(index=k):
            return BVar(k + 1) if k >= depth else t
        case FVar():
            return BVar(depth) if t == x else t
        case Const():
            return t
        case App(fn=f, arg=a):
            return App(abstract_fvar(f, x, depth), abstract_fvar(a, x, depth))
        case Abs(dom=d, body=b, hint=h):
            return Abs(d, abstract_fvar(b, x, depth + 1), hint=h)
    raise TypeError(t)


def abs_over(x: FVar, body: HolTerm) -> Abs:
    return Abs(x.type, abstract_fvar(body, x), hint=x.name)


def mk_eq_at(ty: HolType, lhs: HolTerm, rhs: HolTerm) -> HolTerm:
    """Equation former with the instance type given (usable on open terms)."""
    return App(App(Const(EQ, fn(ty, fn(ty, PROP))), lhs), rhs)


def mk_eq(lhs: HolTerm, rhs: HolTerm) -> HolTerm:
    ty = type_of(lhs)
    tr = type_of(rhs)
    if ty != tr:
        raise KernelError(
            f"equation sides have types {pretty_type(ty)} and {pretty_type(tr)}"
        )
    return mk_eq_at(ty, lhs, rhs)


def dest_eq(t: HolTerm):
    match t:
        case App(fn=App(fn=Const(name=n), arg=l), arg=r) if n == EQ:
            return l, r
    return None


def mk_comb(f: HolTerm, a: HolTerm) -> App:
    return App(f, a)


# ---------------------------------------------------------------------------
# Theorems (LCF discipline)


def axiom_name(name: str) -> str:
    """Normalize an axiom name (choice, propext, infinity, with any casing)."""
    key = name.upper().replace("-", "_").replace("PROPEXT", "PROP_EXT")
    if key not in ("INFINITY", "CHOICE", "PROP_EXT"):
        raise KernelError(f"unknown axiom {name}")
    return key


_KERNEL_TOKEN = object()


class HolTheorem:
    """A certified sequent Γ ⊢ A of Prop-typed terms.

    Constructible only through the kernel rules below; instances are sealed.
    """

    __slots__ = ("hypotheses", "conclusion")

    def __init__(self, hypotheses: frozenset, conclusion: HolTerm, *, _token=None):
        if _token is not _KERNEL_TOKEN:
            raise KernelError("theorems can only be produced by kernel rules")
        object.__setattr__(self, "hypotheses", frozenset(hypotheses))
        object.__setattr__(self, "conclusion", conclusion)

    def __setattr__(self, name, value):
        raise AttributeError("theorems are immutable")

    def __delattr__(self, name):
        raise AttributeError("theorems are immutable")

    def __eq__(self, other):
        return (
            isinstance(other, HolTheorem)
            and self.hypotheses == other.hypotheses
            and self.conclusion == other.conclusion
        )

    def __hash__(self):
        return hash((self.hypotheses, self.conclusion))

    def __repr__(self):
        from .printer import pretty_term

        hyps = ", ".join(sorted(pretty_term(h) for h in self.hypotheses))
        return f"{hyps} |- {pretty_term(self.conclusion)}" if hyps else f"|- {pretty_term(self.conclusion)}"


def _thm(hyps, concl) -> HolTheorem:
    return HolTheorem(hyps, concl, _token=_KERNEL_TOKEN)


# ---------------------------------------------------------------------------
# Kernel state


@dataclass(frozen=True)
class ConstDecl:
    name: str
    generic: HolType
    definiens: HolTerm | None = None


@dataclass(frozen=True)
class KernelState:
    """Constant and type-operator tables; append-only, no redefinition."""

    constants: Mapping[str, ConstDecl]
    type_ops: Mapping[str, int]
    enabled_axioms: frozenset[str] = frozenset()
    definition_log: tuple = ()

    def enable_axiom(self, name: str) -> "KernelState":
        return replace(self, enabled_axioms=self.enabled_axioms | {axiom_name(name)})

    def log(self, kind: str, name: str, detail: str = "") -> "KernelState":
        return replace(self, definition_log=self.definition_log + ((kind, name, detail),))


def initial_state() -> KernelState:
    a = TyVar("a")
    return KernelState(
        constants={
            EQ: ConstDecl(EQ, fn(a, fn(a, PROP))),
            EPS: ConstDecl(EPS, fn(fn(a, PROP), a)),
        },
        type_ops={"Prop": 0, "Ind": 0, "fun": 2},
    )


def check_type(state: KernelState, ty: HolType) -> None:
    match ty:
        case TyVar():
            return
        case TyApp(op=op, args=args):
            if op not in state.type_ops:
                raise KernelError(f"unknown type operator {op}")
            if state.type_ops[op] != len(args):
                raise KernelError(
                    f"type operator {op} has arity {state.type_ops[op]}, got {len(args)}"
                )
            for a in args:
                check_type(state, a)
            return
    raise TypeError(ty)


def check_term(state: KernelState, t: HolTerm, stack: tuple[HolType, ...] = ()) -> HolType:
    """Well-formedness against the state: known constants at instances of
    their generic types, known type operators, well-typed applications."""
    match t:
        case BVar(index=k):
            if k >= len(stack):
                raise KernelError(f"unbound de Bruijn index {k}")
            return stack[k]
        case FVar(type=ty):
            check_type(state, ty)
            return ty
        case Const(name=n, type=ty):
            decl = state.constants.get(n)
            if decl is None:
                raise KernelError(f"unknown constant {n}")
            check_type(state, ty)
            if type_match(decl.generic, ty) is None:
                raise KernelError(
                    f"constant {n} used at {pretty_type(ty)}, not an instance of "
                    f"{pretty_type(decl.generic)}"
                )
            return ty
        case App(fn=f, arg=a):
            tf = check_term(state, f, stack)
            if not (isinstance(tf, TyApp) and tf.op == "fun"):
                raise KernelError(f"application of non-function of type {pretty_type(tf)}")
            ta = check_term(state, a, stack)
            if ta != tf.args[0]:
                raise KernelError(
                    f"ill-typed application: argument {pretty_type(ta)} vs "
                    f"domain {pretty_type(tf.args[0])}"
                )
            return tf.args[1]
        case Abs(dom=d, body=b, hint=h):
            check_type(state, d)
            return fn(d, check_term(state, b, (d,) + stack))
    raise TypeError(t)


def _check_prop(state: KernelState, t: HolTerm, what: str) -> None:
    ty = check_term(state, t)
    if ty != PROP:
        raise KernelError(f"{what} must have type Prop, got {pretty_type(ty)}")


# ---------------------------------------------------------------------------
# Primitive rules


def REFL(state: KernelState, t: HolTerm) -> HolTheorem:
    check_term(state, t)
    return _thm(frozenset(), mk_eq(t, t))


def ASSUME(state: KernelState, p: HolTerm) -> HolTheorem:
    _check_prop(state, p, "assumption")
    return _thm(frozenset({p}), p)


def TRANS(state: KernelState, th1: HolTheorem, th2: HolTheorem) -> HolTheorem:
    e1 = dest_eq(th1.conclusion)
    e2 = dest_eq(th2.conclusion)
    if e1 is None or e2 is None:
        raise KernelError("TRANS needs two equations")
    if e1[1] != e2[0]:
        raise KernelError("TRANS: middle terms differ")
    return _thm(th1.hypotheses | th2.hypotheses, mk_eq(e1[0], e2[1]))


def MK_COMB(state: KernelState, th_fn: HolTheorem, th_arg: HolTheorem) -> HolTheorem:
    ef = dest_eq(th_fn.conclusion)
    ea = dest_eq(th_arg.conclusion)
    if ef is None or ea is None:
        raise KernelError("MK_COMB needs two equations")
    s, t = ef
    u, v = ea
    tf = type_of(s)
    if not (isinstance(tf, TyApp) and tf.op == "fun" and tf.args[0] == type_of(u)):
        raise KernelError("MK_COMB: function and argument types do not fit")
    return _thm(th_fn.hypotheses | th_arg.hypotheses, mk_eq(App(s, u), App(t, v)))


def ABS(state: KernelState, x: FVar, th: HolTheorem) -> HolTheorem:
    e = dest_eq(th.conclusion)
    if e is None:
        raise KernelError("ABS needs an equation")
    for h in th.hypotheses:
        if x in free_vars(h):
            raise KernelError(f"ABS: {x.name} is free in a hypothesis")
    s, t = e
    return _thm(th.hypotheses, mk_eq(abs_over(x, s), abs_over(x, t)))


def BETA(state: KernelState, t: HolTerm) -> HolTheorem:
    """⊢ (λx. b) x = b; general instances come from inst_term."""
    check_term(state, t)
    match t:
        case App(fn=Abs(dom=d, body=b), arg=FVar() as x) if x.type == d:
            return _thm(frozenset(), mk_eq(t, open_term(b, x)))
    raise KernelError("BETA expects a redex whose argument is a variable of the bound type")


def ETA(state: KernelState, t: HolTerm) -> HolTheorem:
    check_term(state, t)
    match t:
        case Abs(dom=d, body=App(fn=f, arg=BVar(index=0))) if not _uses_bvar(f, 0):
            return _thm(frozenset(), mk_eq(t, _unshift(f)))
    raise KernelError("ETA expects an abstraction of shape (fun x => f x) with x not free in f")


def _uses_bvar(t: HolTerm, depth: int) -> bool:
    match t:
        case BVar(index=k):
            return k == depth
        case FVar() | Const():
            return False
        case App(fn=f, arg=a):
            return _uses_bvar(f, depth) or _uses_bvar(a, depth)
        case Abs(body=b):
            return _uses_bvar(b, depth + 1)
    raise TypeError(t)


def _unshift(t: HolTerm, depth: int = 0) -> HolTerm:
    match t:
        case BVar(index=k):
            return BVar(k - 1) if k > depth else t
        case FVar() | Const():
            return t
        case App(fn=f, arg=a):
            return App(_unshift(f, depth), _unshift(a, depth))
        case Abs(dom=d, body=b, hint=h):
            return Abs(d, _unshift(b, depth + 1), hint=h)
    raise TypeError(t)


def EQ_MP(state: KernelState, th_eq: HolTheorem, th: HolTheorem) -> HolTheorem:
    e = dest_eq(th_eq.conclusion)
    if e is None:
        raise KernelError("EQ_MP needs an equation as its first argument")
    p, q = e
    if type_of(p) != PROP:
        raise KernelError("EQ_MP needs a Prop equation")
    if p != th.conclusion:
        raise KernelError("EQ_MP: the equation's left side does not match the theorem")
    return _thm(th_eq.hypotheses | th.hypotheses, q)


def DEDUCT_ANTISYM(state: KernelState, th1: HolTheorem, th2: HolTheorem) -> HolTheorem:
    """From Γ ⊢ P and Δ ⊢ Q conclude (Γ−{Q}) ∪ (Δ−{P}) ⊢ P = Q."""
    p, q = th1.conclusion, th2.conclusion
    hyps = (th1.hypotheses - {q}) | (th2.hypotheses - {p})
    return _thm(hyps, mk_eq(p, q))


RULES = {
    "refl": REFL,
    "assume": ASSUME,
    "trans": TRANS,
    "mk_comb": MK_COMB,
    "abs": ABS,
    "beta": BETA,
    "eta": ETA,
    "eq_mp": EQ_MP,
    "deduct_antisym": DEDUCT_ANTISYM,
}


def rule(state: KernelState, name: str, *args) -> HolTheorem:
    key = name.lower()
    if key not in RULES:
        raise KernelError(f"unknown kernel rule {name}")
    return RULES[key](state, *args)


# ---------------------------------------------------------------------------
# Instantiation


def inst_type(state: KernelState, th: HolTheorem, mapping: Mapping[str, HolType]) -> HolTheorem:
    for ty in mapping.values():
        check_type(state, ty)
    return _thm(
        frozenset(term_ty_subst(h, mapping) for h in th.hypotheses),
        term_ty_subst(th.conclusion, mapping),
    )


def inst_term(state: KernelState, th: HolTheorem, mapping: Mapping[FVar, HolTerm]) -> HolTheorem:
    for x, t in mapping.items():
        if not isinstance(x, FVar):
            raise KernelError("inst_term substitutes for free variables only")
        if check_term(state, t) != x.type:
            raise KernelError(
                f"replacement for {x.name} has type {pretty_type(type_of(t))}, "
                f"expected {pretty_type(x.type)}"
            )
    return _thm(
        frozenset(subst_fvars(h, mapping) for h in th.hypotheses),
        subst_fvars(th.conclusion, mapping),
    )


# ---------------------------------------------------------------------------
# Definitions


def new_definition(state: KernelState, name: str, t: HolTerm):
    """Register `name = t` for closed t; returns (state', ⊢ name = t)."""
    if name in state.constants:
        raise KernelError(f"constant {name} is already defined")
    if free_vars(t):
        raise KernelError("definiens must be closed")
    generic = check_term(state, t)
    if not term_ty_vars(t) <= ty_vars(generic):
        raise KernelError(
            "type-variable escape: every type variable of the definiens must "
            "occur in its type"
        )
    decl = ConstDecl(name, generic, definiens=t)
    consts = dict(state.constants)
    consts[name] = decl
    state2 = replace(state, constants=consts).log("definition", name)
    return state2, _thm(frozenset(), mk_eq(Const(name, generic), t))


def defining_theorem(state: KernelState, name: str) -> HolTheorem:
    decl = state.constants.get(name)
    if decl is None or decl.definiens is None:
        raise KernelError(f"{name} has no definition")
    return _thm(frozenset(), mk_eq(Const(name, decl.generic), decl.definiens))


def new_type_definition(state: KernelState, name: str, pred: HolTerm, nonempty: HolTheorem):
    """Carve a new type out of the subset of τ satisfying pred.

    Returns (state', abs const, repr const, ⊢ abs (repr a) = a,
    ⊢ P r = (repr (abs r) = r)).
    """
    if name in state.type_ops:
        raise KernelError(f"type operator {name} is already defined")
    if free_vars(pred):
        raise KernelError("the carving predicate must be closed")
    pt = check_term(state, pred)
    if not (isinstance(pt, TyApp) and pt.op == "fun" and pt.args[1] == PROP):
        raise KernelError("the carving predicate must have type t -> Prop")
    rep_ty = pt.args[0]
    if nonempty.hypotheses:
        raise KernelError("the nonemptiness certificate must have no hypotheses")
    match nonempty.conclusion:
        case App(fn=Const(name="exists"), arg=witness_pred) if witness_pred == pred:
            pass
        case _:
            raise KernelError(
                "the nonemptiness certificate must conclude exists applied to the predicate"
            )
    params = tuple(sorted(ty_vars(rep_ty)))
    new_ty = TyApp(name, tuple(TyVar(p) for p in params))
    abs_name, repr_name = f"abs_{name}", f"repr_{name}"
    if abs_name in state.constants or repr_name in state.constants:
        raise KernelError("abs/repr constant names already taken")
    abs_c = Const(abs_name, fn(rep_ty, new_ty))
    repr_c = Const(repr_name, fn(new_ty, rep_ty))
    tops = dict(state.type_ops)
    tops[name] = len(params)
    consts = dict(state.constants)
    consts[abs_name] = ConstDecl(abs_name, fn(rep_ty, new_ty))
    consts[repr_name] = ConstDecl(repr_name, fn(new_ty, rep_ty))
    state2 = replace(state, constants=consts, type_ops=tops).log("type-definition", name)
    a = FVar("a", new_ty)
    r = FVar("r", rep_ty)
    abs_repr = _thm(frozenset(), mk_eq(App(abs_c, App(repr_c, a)), a))
    repr_abs = _thm(
        frozenset(),
        mk_eq(App(pred, r), mk_eq(App(repr_c, App(abs_c, r)), r)),
    )
    return state2, abs_c, repr_c, abs_repr, repr_abs


# ---------------------------------------------------------------------------
# The standard connectives and the three optional axioms


def _truec() -> HolTerm:
    idp = Abs(PROP, BVar(0), hint="p")
    return mk_eq(idp, idp)


def standard_definitions() -> tuple[tuple[str, HolTerm], ...]:
    """The standard connective bodies in dependency order."""
    a = TyVar("a")
    true_body = _truec()
    truec = Const("true", PROP)
    forall_body = Abs(fn(a, PROP), mk_eq_at(fn(a, PROP), BVar(0), Abs(a, truec, hint="x")), hint="P")

    def mk_forall(dom: HolType, body: HolTerm, hint: str) -> HolTerm:
        c = Const("forall", fn(fn(dom, PROP), PROP))
        return App(c, Abs(dom, body, hint=hint))

    rr = fn(PROP, fn(PROP, PROP))
    and_body = Abs(
        PROP,
        Abs(
            PROP,
            mk_forall(
                rr,
                mk_eq_at(
                    PROP,
                    App(App(BVar(0), BVar(2)), BVar(1)),
                    App(App(BVar(0), truec), truec),
                ),
                "r",
            ),
            hint="q",
        ),
        hint="p",
    )
    andc = Const("and", fn(PROP, fn(PROP, PROP)))
    imp_body = Abs(
        PROP,
        Abs(PROP, mk_eq_at(PROP, App(App(andc, BVar(1)), BVar(0)), BVar(1)), hint="q"),
        hint="p",
    )
    impc = Const("imp", fn(PROP, fn(PROP, PROP)))
    false_body = mk_forall(PROP, BVar(0), "p")
    falsec = Const("false", PROP)
    not_body = Abs(PROP, App(App(impc, BVar(0)), falsec), hint="p")
    or_body = Abs(
        PROP,
        Abs(
            PROP,
            mk_forall(
                PROP,
                App(
                    App(impc, App(App(impc, BVar(2)), BVar(0))),
                    App(App(impc, App(App(impc, BVar(1)), BVar(0))), BVar(0)),
                ),
                "r",
            ),
            hint="q",
        ),
        hint="p",
    )
    exists_body = Abs(
        fn(a, PROP),
        mk_forall(
            PROP,
            App(
                App(
                    impc,
                    mk_forall(a, App(App(impc, App(BVar(2), BVar(0))), BVar(1)), "x"),
                ),
                BVar(0),
            ),
            "q",
        ),
        hint="P",
    )
    return (
        ("true", true_body),
        ("forall", forall_body),
        ("and", and_body),
        ("imp", imp_body),
        ("false", false_body),
        ("not", not_body),
        ("or", or_body),
        ("exists", exists_body),
    )


def define_connectives(state: KernelState):
    """Run the standard definitions; returns (state', {name: defining thm})."""
    thms = {}
    for name, body in standard_definitions():
        state, thm = new_definition(state, name, body)
        thms[name] = thm
    return state, thms


def _require_standard(state: KernelState, names: Iterable[str]) -> None:
    canon = dict(standard_definitions())
    for n in names:
        decl = state.constants.get(n)
        if decl is None or decl.definiens != canon[n]:
            raise KernelError(
                f"axiom-deps: the standard definition of {n} must be in place",
                tag="axiom-deps",
            )


def _c(state: KernelState, name: str, ty: HolType) -> Const:
    return Const(name, ty)


def axiom_statement(state: KernelState, name: str) -> HolTerm:
    name = axiom_name(name)
    a = TyVar("a")

    def fa(dom, body, hint):
        return App(Const("forall", fn(fn(dom, PROP), PROP)), Abs(dom, body, hint=hint))

    def imp(p, q):
        return App(App(Const("imp", fn(PROP, fn(PROP, PROP))), p), q)

    def conj(p, q):
        return App(App(Const("and", fn(PROP, fn(PROP, PROP))), p), q)

    if name == "PROP_EXT":
        _require_standard(state, ("true", "forall", "and", "imp"))
        p, q = BVar(1), BVar(0)
        body = imp(conj(imp(p, q), imp(q, p)), mk_eq_at(PROP, p, q))
        return fa(PROP, fa(PROP, body, "q"), "p")
    if name == "CHOICE":
        _require_standard(state, ("true", "forall", "and", "imp"))
        pv = fn(a, PROP)
        px = App(BVar(1), BVar(0))
        peps = App(BVar(1), App(Const(EPS, fn(pv, a)), BVar(1)))
        return fa(pv, fa(a, imp(px, peps), "x"), "P")
    if name == "INFINITY":
        _require_standard(state, ("true", "forall", "and", "imp", "false", "not", "exists"))
        ii = fn(IND, IND)

        def ex(dom, body, hint):
            return App(Const("exists", fn(fn(dom, PROP), PROP)), Abs(dom, body, hint=hint))

        notc = Const("not", fn(PROP, PROP))
        # exists f. (forall x x'. f x = f x' ==> x = x') and (exists y. forall x. not (f x = y))
        injective = fa(
            IND,
            fa(
                IND,
                imp(
                    mk_eq_at(IND, App(BVar(2), BVar(1)), App(BVar(2), BVar(0))),
                    mk_eq_at(IND, BVar(1), BVar(0)),
                ),
                "x'",
            ),
            "x",
        )
        not_surj = ex(
            IND,
            fa(IND, App(notc, mk_eq_at(IND, App(BVar(2), BVar(0)), BVar(1))), "x"),
            "y",
        )
        return ex(ii, conj(injective, not_surj), "f")
    raise KernelError(f"unknown axiom {name}")


def axiom(state: KernelState, name: str) -> HolTheorem:
    name = axiom_name(name)
    if name not in state.enabled_axioms:
        raise KernelError(f"axiom-disabled: {name} is not enabled", tag="axiom-disabled")
    stmt = axiom_statement(state, name)
    check_term(state, stmt)
    return _thm(frozenset(), stmt)
