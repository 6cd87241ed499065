"""Reduction: beta, eta, iota (recursor/conditional/projection/cases), and
optional surjective pairing, under two deterministic strategies.

Strong normalization of the calculus means the fuel bound is a safety net,
never the expected exit for well-typed terms at desk scale.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import FuelError, TypeCheckError
from .syntax import (
    App, Cases, Cond, FF, Inj0, Inj1, Lam, Pair, Proj0, Proj1, RecNat, Succ,
    Term, TT, Var, Zero, beta_reduce, shift, var_free_in,
)
from .typing import infer_type


@dataclass(frozen=True)
class ReductionFlags:
    beta: bool = True
    eta: bool = False
    iota: bool = True
    surjective_pairing: bool = False


BETA_ONLY = ReductionFlags(beta=True, eta=False, iota=False)
BETA_ETA = ReductionFlags(beta=True, eta=True, iota=True)
DEFAULT_FLAGS = ReductionFlags()

LEFTMOST_OUTERMOST = "leftmost-outermost"
RIGHTMOST_INNERMOST = "rightmost-innermost"


def contract(t: Term, flags: ReductionFlags) -> Term | None:
    """One contraction at the root, or None."""
    match t:
        case App(fn=Lam() as f, arg=a) if flags.beta:
            return beta_reduce(f, a)
        case Lam(body=App(fn=f, arg=Var(index=0))) if flags.eta and not var_free_in(f, 0):
            return shift(f, -1)
        case RecNat(base=f, target=Zero()) if flags.iota:
            return f
        case RecNat(base=f, step=g, target=Succ(arg=n)) if flags.iota:
            return App(App(g, n), RecNat(f, g, n))
        case Cond(if_true=f, target=TT()) if flags.iota:
            return f
        case Cond(if_false=g, target=FF()) if flags.iota:
            return g
        case Proj0(pair=Pair(left=a)) if flags.iota:
            return a
        case Proj1(pair=Pair(right=b)) if flags.iota:
            return b
        case Cases(on_left=f, scrutinee=Inj0(value=a)) if flags.iota:
            return App(f, a)
        case Cases(on_right=g, scrutinee=Inj1(value=b)) if flags.iota:
            return App(g, b)
        case Pair(left=Proj0(pair=p), right=Proj1(pair=q)) if (
            flags.surjective_pairing and p == q
        ):
            return p
    return None


def _children(t: Term) -> list:
    """(getter result, rebuild) pairs, left to right."""
    match t:
        case Lam(dom=d, body=b, hint=h):
            return [(b, lambda nb: Lam(d, nb, hint=h))]
        case App(fn=f, arg=a):
            return [(f, lambda nf: App(nf, a)), (a, lambda na: App(f, na))]
        case Pair(left=l, right=r):
            return [(l, lambda nl: Pair(nl, r)), (r, lambda nr: Pair(l, nr))]
        case Proj0(pair=p):
            return [(p, lambda np: Proj0(np))]
        case Proj1(pair=p):
            return [(p, lambda np: Proj1(np))]
        case Inj0(right=ty, value=v):
            return [(v, lambda nv: Inj0(ty, nv))]
        case Inj1(left=ty, value=v):
            return [(v, lambda nv: Inj1(ty, nv))]
        case Cases(on_left=f, on_right=g, scrutinee=s):
            return [
                (f, lambda nf: Cases(nf, g, s)),
                (g, lambda ng: Cases(f, ng, s)),
                (s, lambda ns: Cases(f, g, ns)),
            ]
        case Succ(arg=a):
            return [(a, lambda na: Succ(na))]
        case RecNat(base=f, step=g, target=n):
            return [
                (f, lambda nf: RecNat(nf, g, n)),
                (g, lambda ng: RecNat(f, ng, n)),
                (n, lambda nn: RecNat(f, g, nn)),
            ]
        case Cond(if_true=f, if_false=g, target=b):
            return [
                (f, lambda nf: Cond(nf, g, b)),
                (g, lambda ng: Cond(f, ng, b)),
                (b, lambda nb: Cond(f, g, nb)),
            ]
        case _:
            return []


def reduce_step(t: Term, flags: ReductionFlags = DEFAULT_FLAGS, strategy: str = LEFTMOST_OUTERMOST) -> Term | None:
    """One contraction at the strategy-selected redex, or None if normal."""
    if strategy == LEFTMOST_OUTERMOST:
        root = contract(t, flags)
        if root is not None:
            return root
        for child, rebuild in _children(t):
            stepped = reduce_step(child, flags, strategy)
            if stepped is not None:
                return rebuild(stepped)
        return None
    if strategy == RIGHTMOST_INNERMOST:
        for child, rebuild in reversed(_children(t)):
            stepped = reduce_step(child, flags, strategy)
            if stepped is not None:
                return rebuild(stepped)
        return contract(t, flags)
    raise ValueError(f"unknown strategy {strategy}")


def normalize(
    t: Term,
    flags: ReductionFlags = DEFAULT_FLAGS,
    strategy: str = LEFTMOST_OUTERMOST,
    fuel: int = 10**5,
) -> Term:
    """Reduce to a term with no enabled redex."""
    for _ in range(fuel):
        nxt = reduce_step(t, flags, strategy)
        if nxt is None:
            return t
        t = nxt
    raise FuelError("normalization fuel exhausted")


def equal_beta_eta(ctx, s: Term, t: Term, flags: ReductionFlags = BETA_ETA, fuel: int = 10**5) -> bool:
    """Provable equality, decided by comparing normal forms up to alpha."""
    ts = infer_type(ctx, s)
    tt = infer_type(ctx, t)
    if ts != tt:
        raise TypeCheckError("equated terms must share one type")
    return normalize(s, flags, fuel=fuel) == normalize(t, flags, fuel=fuel)
