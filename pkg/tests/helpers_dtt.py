"""Random well-typed closed DTT terms of type Nat (canonicity corpus)."""

from __future__ import annotations

import random

from foundry.dtt import (
    App, Bool, BoolCases, FalseE, Inl, Inr, Lam, Nat, NatRec, Pair, Sigma,
    SigmaCases, Sum, SumCases, Succ, TrueE, Var, numeral,
)

NAT = Nat()
NAT_MOTIVE = Lam(NAT, NAT, hint="_")
SIG_NN = Sigma(NAT, NAT)
SUM_NN = Sum(NAT, NAT)


def gen_dtt_nat(rng: random.Random, depth: int = 4, nvars: int = 0):
    """A closed term of type Nat; `nvars` Nat-typed binders are in scope."""
    if depth <= 0:
        if nvars and rng.random() < 0.5:
            return Var(rng.randrange(nvars))
        return numeral(rng.randrange(3))
    k = rng.randrange(8)
    if k == 0:
        return Succ(gen_dtt_nat(rng, depth - 1, nvars))
    if k == 1:
        return App(
            Lam(NAT, gen_dtt_nat(rng, depth - 1, nvars + 1), hint="x"),
            gen_dtt_nat(rng, depth - 1, nvars),
        )
    if k == 2:
        step = Lam(
            NAT,
            Lam(NAT, gen_dtt_nat(rng, depth - 1, nvars + 2), hint="ih"),
            hint="n",
        )
        return NatRec(
            NAT_MOTIVE,
            gen_dtt_nat(rng, depth - 1, nvars),
            step,
            gen_dtt_nat(rng, depth - 1, nvars),
        )
    if k == 3:
        return BoolCases(
            Lam(Bool(), NAT, hint="_"),
            gen_dtt_nat(rng, depth - 1, nvars),
            gen_dtt_nat(rng, depth - 1, nvars),
            rng.choice([TrueE(), FalseE()]),
        )
    if k == 4:
        branch = Lam(
            NAT, Lam(NAT, gen_dtt_nat(rng, depth - 1, nvars + 2), hint="y"), hint="x"
        )
        scrut = Pair(SIG_NN, gen_dtt_nat(rng, depth - 1, nvars), gen_dtt_nat(rng, depth - 1, nvars))
        return SigmaCases(Lam(SIG_NN, NAT, hint="_"), branch, scrut)
    if k == 5:
        on_l = Lam(NAT, gen_dtt_nat(rng, depth - 1, nvars + 1), hint="x")
        on_r = Lam(NAT, gen_dtt_nat(rng, depth - 1, nvars + 1), hint="y")
        inj = rng.choice([Inl, Inr])(SUM_NN, gen_dtt_nat(rng, depth - 1, nvars))
        return SumCases(Lam(SUM_NN, NAT, hint="_"), on_l, on_r, inj)
    if nvars and k == 6:
        return Var(rng.randrange(nvars))
    return numeral(rng.randrange(4))
