"""Dependent type theory expressions: one grammar for terms, types, sorts.

De Bruijn binders (Pi/Lam/Sigma/W bind one variable in their second
component); eliminators carry their motive explicitly, so checking is
syntax-directed. Axioms are inert constants.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from ..span import hint_field, span_field


@dataclass(frozen=True)
class Var:
    index: int
    span: object = span_field()


@dataclass(frozen=True)
class TypeSort:
    level: int
    span: object = span_field()


@dataclass(frozen=True)
class PropSort:
    span: object = span_field()


@dataclass(frozen=True)
class Pi:
    dom: "Expr"
    cod: "Expr"  # under one binder
    hint: str | None = hint_field()
    span: object = span_field()


@dataclass(frozen=True)
class Lam:
    dom: "Expr"
    body: "Expr"
    hint: str | None = hint_field()
    span: object = span_field()


@dataclass(frozen=True)
class App:
    fn: "Expr"
    arg: "Expr"
    span: object = span_field()


@dataclass(frozen=True)
class Sigma:
    dom: "Expr"
    cod: "Expr"  # under one binder
    in_prop: bool = False  # the existential flavor, distinct from the subtype
    hint: str | None = hint_field()
    span: object = span_field()


@dataclass(frozen=True)
class Pair:
    sigma: "Expr"  # the annotated Sigma type
    fst: "Expr"
    snd: "Expr"
    span: object = span_field()


@dataclass(frozen=True)
class SigmaCases:
    motive: "Expr"
    branch: "Expr"
    scrutinee: "Expr"
    span: object = span_field()


@dataclass(frozen=True)
class Id:
    type: "Expr"
    lhs: "Expr"
    rhs: "Expr"
    span: object = span_field()


@dataclass(frozen=True)
class Refl:
    type: "Expr"
    term: "Expr"
    span: object = span_field()


@dataclass(frozen=True)
class IdCases:
    motive: "Expr"     # of type Pi x. Pi y. Pi p : Id ty x y. sort
    refl_case: "Expr"  # of type Pi z. motive z z (refl z)
    lhs: "Expr"
    rhs: "Expr"
    proof: "Expr"
    span: object = span_field()


@dataclass(frozen=True)
class Nat:
    span: object = span_field()


@dataclass(frozen=True)
class Zero:
    span: object = span_field()


@dataclass(frozen=True)
class Succ:
    arg: "Expr"
    span: object = span_field()


@dataclass(frozen=True)
class NatRec:
    motive: "Expr"
    base: "Expr"
    step: "Expr"
    target: "Expr"
    span: object = span_field()


@dataclass(frozen=True)
class Empty:
    span: object = span_field()


@dataclass(frozen=True)
class EmptyCases:
    motive: "Expr"
    target: "Expr"
    span: object = span_field()


@dataclass(frozen=True)
class Unit:
    span: object = span_field()


@dataclass(frozen=True)
class Star:
    span: object = span_field()


@dataclass(frozen=True)
class Bool:
    span: object = span_field()


@dataclass(frozen=True)
class TrueE:
    span: object = span_field()


@dataclass(frozen=True)
class FalseE:
    span: object = span_field()


@dataclass(frozen=True)
class BoolCases:
    motive: "Expr"
    if_true: "Expr"
    if_false: "Expr"
    target: "Expr"
    span: object = span_field()


@dataclass(frozen=True)
class Sum:
    left: "Expr"
    right: "Expr"
    span: object = span_field()


@dataclass(frozen=True)
class Inl:
    sum: "Expr"  # the annotated Sum type
    value: "Expr"
    span: object = span_field()


@dataclass(frozen=True)
class Inr:
    sum: "Expr"
    value: "Expr"
    span: object = span_field()


@dataclass(frozen=True)
class SumCases:
    motive: "Expr"
    on_left: "Expr"
    on_right: "Expr"
    scrutinee: "Expr"
    span: object = span_field()


@dataclass(frozen=True)
class W:
    dom: "Expr"
    cod: "Expr"  # branching family, under one binder
    hint: str | None = hint_field()
    span: object = span_field()


@dataclass(frozen=True)
class Sup:
    wtype: "Expr"  # the annotated W type
    label: "Expr"
    children: "Expr"
    span: object = span_field()


@dataclass(frozen=True)
class WRec:
    motive: "Expr"
    step: "Expr"
    target: "Expr"
    span: object = span_field()


@dataclass(frozen=True)
class Axiom:
    name: str
    span: object = span_field()


Expr = Union[
    Var, TypeSort, PropSort, Pi, Lam, App, Sigma, Pair, SigmaCases,
    Id, Refl, IdCases, Nat, Zero, Succ, NatRec, Empty, EmptyCases,
    Unit, Star, Bool, TrueE, FalseE, BoolCases, Sum, Inl, Inr, SumCases,
    W, Sup, WRec, Axiom,
]

# (field name, binder depth) per constructor; leaves omitted
_SHAPE = {
    Pi: (("dom", 0), ("cod", 1)),
    Lam: (("dom", 0), ("body", 1)),
    App: (("fn", 0), ("arg", 0)),
    Sigma: (("dom", 0), ("cod", 1)),
    Pair: (("sigma", 0), ("fst", 0), ("snd", 0)),
    SigmaCases: (("motive", 0), ("branch", 0), ("scrutinee", 0)),
    Id: (("type", 0), ("lhs", 0), ("rhs", 0)),
    Refl: (("type", 0), ("term", 0)),
    IdCases: (("motive", 0), ("refl_case", 0), ("lhs", 0), ("rhs", 0), ("proof", 0)),
    Succ: (("arg", 0),),
    NatRec: (("motive", 0), ("base", 0), ("step", 0), ("target", 0)),
    EmptyCases: (("motive", 0), ("target", 0)),
    BoolCases: (("motive", 0), ("if_true", 0), ("if_false", 0), ("target", 0)),
    Sum: (("left", 0), ("right", 0)),
    Inl: (("sum", 0), ("value", 0)),
    Inr: (("sum", 0), ("value", 0)),
    SumCases: (("motive", 0), ("on_left", 0), ("on_right", 0), ("scrutinee", 0)),
    W: (("dom", 0), ("cod", 1)),
    Sup: (("wtype", 0), ("label", 0), ("children", 0)),
    WRec: (("motive", 0), ("step", 0), ("target", 0)),
}


def _rebuild(e: Expr, new_fields: dict) -> Expr:
    cls = type(e)
    kwargs = {name: getattr(e, name) for name, _ in _SHAPE[cls]}
    kwargs.update(new_fields)
    if hasattr(e, "hint"):
        kwargs["hint"] = e.hint
    if isinstance(e, Sigma):
        kwargs["in_prop"] = e.in_prop
    if isinstance(e, Axiom):
        kwargs["name"] = e.name
    return cls(**kwargs)


def map_subexprs(e: Expr, f) -> Expr:
    """Rebuild e with f(child, binder_depth_increment) over each subexpression."""
    cls = type(e)
    shape = _SHAPE.get(cls)
    if shape is None:
        return e
    return _rebuild(e, {name: f(getattr(e, name), depth) for name, depth in shape})


def replace_field(e: Expr, name: str, value: Expr) -> Expr:
    return _rebuild(e, {name: value})


def shift(e: Expr, d: int, cutoff: int = 0) -> Expr:
    match e:
        case Var(index=k):
            return Var(k + d) if k >= cutoff else e
        case _:
            return map_subexprs(e, lambda sub, extra: shift(sub, d, cutoff + extra))


def subst(e: Expr, j: int, value: Expr) -> Expr:
    """Substitute Var(j) by value, lowering the indices above j."""
    match e:
        case Var(index=k):
            if k == j:
                return value
            return Var(k - 1) if k > j else e
        case _:
            return map_subexprs(e, lambda sub, extra: subst(sub, j + extra, shift(value, extra)))


def instantiate(binder_body: Expr, value: Expr) -> Expr:
    return subst(binder_body, 0, value)


def numeral(n: int) -> Expr:
    e: Expr = Zero()
    for _ in range(n):
        e = Succ(e)
    return e


def numeral_value(e: Expr) -> int | None:
    n = 0
    while isinstance(e, Succ):
        n += 1
        e = e.arg
    return n if isinstance(e, Zero) else None


def contains_axiom(e: Expr) -> bool:
    if isinstance(e, Axiom):
        return True
    found = [False]

    def probe(sub, _extra):
        if contains_axiom(sub):
            found[0] = True
        return sub

    map_subexprs(e, probe)
    return found[0]


def arrow(dom: Expr, cod: Expr) -> Pi:
    """Non-dependent function type."""
    return Pi(dom, shift(cod, 1))
