"""Sorted first-order syntax: signatures, terms, formulas.

Binders use a locally nameless representation: bound variables are de Bruijn
indices (`BVar`), free variables are named and sorted (`FVar`). Structural
equality of formulas is therefore alpha-equivalence; substitution is
capture-avoiding by construction because an index can never be captured by a
named variable and vice versa.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Iterable, Mapping, Union

from ..errors import SortError
from ..span import hint_field, span_field


@dataclass(frozen=True)
class Sort:
    name: str

    def __str__(self) -> str:
        return self.name


# ---------------------------------------------------------------------------
# Terms


@dataclass(frozen=True)
class BVar:
    index: int
    span: object = span_field()


@dataclass(frozen=True)
class FVar:
    name: str
    sort: Sort
    span: object = span_field()


@dataclass(frozen=True)
class App:
    fn: str
    args: tuple["Term", ...] = ()
    span: object = span_field()


Term = Union[BVar, FVar, App]


def const(name: str) -> App:
    return App(name, ())


# ---------------------------------------------------------------------------
# Formulas


@dataclass(frozen=True)
class Eq:
    lhs: Term
    rhs: Term
    span: object = span_field()


@dataclass(frozen=True)
class Rel:
    name: str
    args: tuple[Term, ...] = ()
    span: object = span_field()


@dataclass(frozen=True)
class Bot:
    span: object = span_field()


@dataclass(frozen=True)
class And:
    left: "Formula"
    right: "Formula"
    span: object = span_field()


@dataclass(frozen=True)
class Or:
    left: "Formula"
    right: "Formula"
    span: object = span_field()


@dataclass(frozen=True)
class Implies:
    left: "Formula"
    right: "Formula"
    span: object = span_field()


@dataclass(frozen=True)
class Forall:
    sort: Sort
    body: "Formula"
    hint: str | None = hint_field()
    span: object = span_field()


@dataclass(frozen=True)
class Exists:
    sort: Sort
    body: "Formula"
    hint: str | None = hint_field()
    span: object = span_field()


Formula = Union[Eq, Rel, Bot, And, Or, Implies, Forall, Exists]


def neg(a: Formula) -> Implies:
    """not-A is the derived form A -> bot."""
    return Implies(a, Bot())


def is_neg(a: Formula) -> bool:
    return isinstance(a, Implies) and isinstance(a.right, Bot)


def iff(a: Formula, b: Formula) -> And:
    return And(Implies(a, b), Implies(b, a))


TRUE = neg(Bot())  # a convenient intuitionistic tautology


# ---------------------------------------------------------------------------
# Binder plumbing


def _open_term(t: Term, k: int, u: Term) -> Term:
    match t:
        case BVar(index=i):
            return u if i == k else t
        case FVar():
            return t
        case App(fn=f, args=args):
            return App(f, tuple(_open_term(a, k, u) for a in args))
    raise TypeError(t)


def _open(a: Formula, k: int, u: Term) -> Formula:
    match a:
        case Eq(lhs=l, rhs=r):
            return Eq(_open_term(l, k, u), _open_term(r, k, u))
        case Rel(name=n, args=args):
            return Rel(n, tuple(_open_term(t, k, u) for t in args))
        case Bot():
            return a
        case And(left=l, right=r):
            return And(_open(l, k, u), _open(r, k, u))
        case Or(left=l, right=r):
            return Or(_open(l, k, u), _open(r, k, u))
        case Implies(left=l, right=r):
            return Implies(_open(l, k, u), _open(r, k, u))
        case Forall(sort=s, body=b, hint=h):
            return Forall(s, _open(b, k + 1, u), hint=h)
        case Exists(sort=s, body=b, hint=h):
            return Exists(s, _open(b, k + 1, u), hint=h)
    raise TypeError(a)


def open_binder(a: Forall | Exists, u: Term) -> Formula:
    """Instantiate the outermost bound variable of a quantified formula."""
    return _open(a.body, 0, u)


def _close_term(t: Term, k: int, x: FVar) -> Term:
    match t:
        case BVar():
            return t
        case FVar(name=n, sort=s):
            return BVar(k) if (n, s) == (x.name, x.sort) else t
        case App(fn=f, args=args):
            return App(f, tuple(_close_term(a, k, x) for a in args))
    raise TypeError(t)


def _close(a: Formula, k: int, x: FVar) -> Formula:
    match a:
        case Eq(lhs=l, rhs=r):
            return Eq(_close_term(l, k, x), _close_term(r, k, x))
        case Rel(name=n, args=args):
            return Rel(n, tuple(_close_term(t, k, x) for t in args))
        case Bot():
            return a
        case And(left=l, right=r):
            return And(_close(l, k, x), _close(r, k, x))
        case Or(left=l, right=r):
            return Or(_close(l, k, x), _close(r, k, x))
        case Implies(left=l, right=r):
            return Implies(_close(l, k, x), _close(r, k, x))
        case Forall(sort=s, body=b, hint=h):
            return Forall(s, _close(b, k + 1, x), hint=h)
        case Exists(sort=s, body=b, hint=h):
            return Exists(s, _close(b, k + 1, x), hint=h)
    raise TypeError(a)


def forall(x: FVar, a: Formula) -> Forall:
    """Bind the free variable x universally."""
    return Forall(x.sort, _close(a, 0, x), hint=x.name)


def exists(x: FVar, a: Formula) -> Exists:
    return Exists(x.sort, _close(a, 0, x), hint=x.name)


def forall_many(xs: Iterable[FVar], a: Formula) -> Formula:
    for x in reversed(list(xs)):
        a = forall(x, a)
    return a


# ---------------------------------------------------------------------------
# Free variables, substitution


def term_free_vars(t: Term) -> frozenset[FVar]:
    match t:
        case BVar():
            return frozenset()
        case FVar():
            return frozenset((t,))
        case App(args=args):
            out: frozenset[FVar] = frozenset()
            for a in args:
                out |= term_free_vars(a)
            return out
    raise TypeError(t)


def free_vars(a: Formula) -> frozenset[FVar]:
    """Exactly the free variables of a formula; sentences yield the empty set."""
    match a:
        case Eq(lhs=l, rhs=r):
            return term_free_vars(l) | term_free_vars(r)
        case Rel(args=args):
            out: frozenset[FVar] = frozenset()
            for t in args:
                out |= term_free_vars(t)
            return out
        case Bot():
            return frozenset()
        case And(left=l, right=r) | Or(left=l, right=r) | Implies(left=l, right=r):
            return free_vars(l) | free_vars(r)
        case Forall(body=b) | Exists(body=b):
            return free_vars(b)
    raise TypeError(a)


def is_sentence(a: Formula) -> bool:
    return not free_vars(a)


def subst_in_term(t: Term, x: FVar, u: Term) -> Term:
    match t:
        case BVar():
            return t
        case FVar(name=n, sort=s):
            return u if (n, s) == (x.name, x.sort) else t
        case App(fn=f, args=args):
            return App(f, tuple(subst_in_term(a, x, u) for a in args))
    raise TypeError(t)


def substitute(a: Formula, x: FVar, t: Term) -> Formula:
    """Capture-avoiding substitution A[t/x].

    Bound variables are indices, so replacing the named variable x by the
    locally closed term t can never capture.
    """
    match a:
        case Eq(lhs=l, rhs=r):
            return Eq(subst_in_term(l, x, t), subst_in_term(r, x, t))
        case Rel(name=n, args=args):
            return Rel(n, tuple(subst_in_term(u, x, t) for u in args))
        case Bot():
            return a
        case And(left=l, right=r):
            return And(substitute(l, x, t), substitute(r, x, t))
        case Or(left=l, right=r):
            return Or(substitute(l, x, t), substitute(r, x, t))
        case Implies(left=l, right=r):
            return Implies(substitute(l, x, t), substitute(r, x, t))
        case Forall(sort=s, body=b, hint=h):
            return Forall(s, substitute(b, x, t), hint=h)
        case Exists(sort=s, body=b, hint=h):
            return Exists(s, substitute(b, x, t), hint=h)
    raise TypeError(a)


def alpha_equal(a: Formula, b: Formula) -> bool:
    """True iff the nameless representations coincide structurally."""
    return a == b


def fresh_name(base: str, taken: Iterable[str]) -> str:
    """Smallest unused name obtained from base by appending prime marks."""
    taken = set(taken)
    name = base
    while name in taken:
        name += "'"
    return name


def fresh_fvar(a: Formula, sort: Sort, base: str = "x") -> FVar:
    taken = {v.name for v in free_vars(a)}
    return FVar(fresh_name(base, taken), sort)


# ---------------------------------------------------------------------------
# Signatures and well-formedness


@dataclass(frozen=True)
class Signature:
    """Sorts plus sorted function and relation profiles.

    A 0-ary function is a constant; a 0-ary relation is a propositional atom.
    """

    sorts: frozenset[Sort]
    functions: Mapping[str, tuple[tuple[Sort, ...], Sort]] = field(default_factory=dict)
    relations: Mapping[str, tuple[Sort, ...]] = field(default_factory=dict)

    def __post_init__(self):
        for name, (args, res) in self.functions.items():
            for s in (*args, res):
                if s not in self.sorts:
                    raise SortError(f"function {name}: unknown sort {s}")
        for name, args in self.relations.items():
            for s in args:
                if s not in self.sorts:
                    raise SortError(f"relation {name}: unknown sort {s}")
        if set(self.functions) & set(self.relations):
            clash = sorted(set(self.functions) & set(self.relations))
            raise SortError(f"symbols declared as both function and relation: {clash}")

    @property
    def only_sort(self) -> Sort | None:
        if len(self.sorts) == 1:
            return next(iter(self.sorts))
        return None

    def with_function(self, name: str, args: tuple[Sort, ...], res: Sort) -> "Signature":
        if name in self.functions or name in self.relations:
            raise SortError(f"symbol {name} already declared")
        fns = dict(self.functions)
        fns[name] = (args, res)
        return replace(self, functions=fns)

    def with_relation(self, name: str, args: tuple[Sort, ...]) -> "Signature":
        if name in self.functions or name in self.relations:
            raise SortError(f"symbol {name} already declared")
        rels = dict(self.relations)
        rels[name] = args
        return replace(self, relations=rels)

    def with_sort(self, sort: Sort) -> "Signature":
        return replace(self, sorts=self.sorts | {sort})


def single_sorted(sort_name: str = "obj") -> Signature:
    """One-sorted logic as the single-sort special case."""
    return Signature(sorts=frozenset({Sort(sort_name)}))


def term_sort(sig: Signature, t: Term, binders: tuple[Sort, ...] = ()) -> Sort:
    """Sort of a term; `binders` is the stack of enclosing binder sorts
    (innermost first)."""
    match t:
        case BVar(index=i):
            if i >= len(binders):
                raise SortError(f"unbound de Bruijn index {i}")
            return binders[i]
        case FVar(sort=s):
            if s not in sig.sorts:
                raise SortError(f"variable {t.name}: unknown sort {s}")
            return s
        case App(fn=f, args=args):
            if f not in sig.functions:
                raise SortError(f"unknown function symbol in {pretty_term(t)}", span=t.span)
            decl_args, res = sig.functions[f]
            if len(args) != len(decl_args):
                raise SortError(
                    f"arity mismatch in {pretty_term(t)}: "
                    f"{f} expects {len(decl_args)} argument(s), got {len(args)}",
                    span=t.span,
                )
            for a, want in zip(args, decl_args):
                got = term_sort(sig, a, binders)
                if got != want:
                    raise SortError(
                        f"sort mismatch in {pretty_term(t)}: "
                        f"argument {pretty_term(a)} has sort {got}, expected {want}",
                        span=t.span,
                    )
            return res
    raise TypeError(t)


def check_well_formed(sig: Signature, a: Formula, binders: tuple[Sort, ...] = ()) -> None:
    """Succeeds iff every symbol resolves with matching arity and sorts."""
    match a:
        case Eq(lhs=l, rhs=r):
            sl = term_sort(sig, l, binders)
            sr = term_sort(sig, r, binders)
            if sl != sr:
                raise SortError(
                    f"equation sides have different sorts: "
                    f"{pretty_term(l)} : {sl} vs {pretty_term(r)} : {sr}",
                    span=a.span,
                )
        case Rel(name=n, args=args):
            if n not in sig.relations:
                raise SortError(f"unknown relation symbol {n}", span=a.span)
            decl = sig.relations[n]
            if len(args) != len(decl):
                raise SortError(
                    f"arity mismatch: {n} expects {len(decl)} argument(s), got {len(args)}",
                    span=a.span,
                )
            for t, want in zip(args, decl):
                got = term_sort(sig, t, binders)
                if got != want:
                    raise SortError(
                        f"sort mismatch in {n}({', '.join(map(pretty_term, args))}): "
                        f"{pretty_term(t)} has sort {got}, expected {want}",
                        span=a.span,
                    )
        case Bot():
            pass
        case And(left=l, right=r) | Or(left=l, right=r) | Implies(left=l, right=r):
            check_well_formed(sig, l, binders)
            check_well_formed(sig, r, binders)
        case Forall(sort=s, body=b) | Exists(sort=s, body=b):
            if s not in sig.sorts:
                raise SortError(f"unknown sort {s} in quantifier", span=a.span)
            check_well_formed(sig, b, (s,) + binders)
        case _:
            raise TypeError(a)


# ---------------------------------------------------------------------------
# Printing (the surface module re-exports these)


def pretty_term(t: Term, names: tuple[str, ...] = ()) -> str:
    match t:
        case BVar(index=i):
            return names[i] if i < len(names) else f"#{i}"
        case FVar(name=n):
            return n
        case App(fn=f, args=()):
            return f
        case App(fn=f, args=args):
            return f"{f}({', '.join(pretty_term(a, names) for a in args)})"
    raise TypeError(t)


def _binder_name(a: Forall | Exists, names: tuple[str, ...], frees: set[str]) -> str:
    base = a.hint or "x"
    return fresh_name(base, set(names) | frees)


def pretty_formula(a: Formula, names: tuple[str, ...] = (), _frees: set[str] | None = None) -> str:
    """Deterministic printer; binder names are hints freshened with primes."""
    if _frees is None:
        _frees = {v.name for v in free_vars(a)}

    def go(a: Formula, names: tuple[str, ...], prec: int) -> str:
        # precedence: 4 atoms, 3 not, 2 and, 1 or, 0 implies/quantifier
        match a:
            case Bot():
                return "false"
            case Eq(lhs=l, rhs=r):
                return f"{pretty_term(l, names)} = {pretty_term(r, names)}"
            case Rel(name=n, args=()):
                return n
            case Rel(name=n, args=args):
                return f"{n}({', '.join(pretty_term(t, names) for t in args)})"
            case Implies(left=l, right=Bot()):
                s = f"~{go(l, names, 3)}"
                return s if prec <= 3 else f"({s})"
            case And(left=l, right=r):
                s = f"{go(l, names, 3)} /\\ {go(r, names, 2)}"
                return s if prec <= 2 else f"({s})"
            case Or(left=l, right=r):
                s = f"{go(l, names, 2)} \\/ {go(r, names, 1)}"
                return s if prec <= 1 else f"({s})"
            case Implies(left=l, right=r):
                s = f"{go(l, names, 1)} -> {go(r, names, 0)}"
                return s if prec <= 0 else f"({s})"
            case Forall(sort=srt, body=b) | Exists(sort=srt, body=b):
                kw = "forall" if isinstance(a, Forall) else "exists"
                n = _binder_name(a, names, _frees)
                s = f"{kw} {n} : {srt}, {go(b, (n,) + names, 0)}"
                return s if prec <= 0 else f"({s})"
        raise TypeError(a)

    return go(a, names, 0)
