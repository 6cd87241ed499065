import pytest

from foundry import fol, stlc
from foundry.errors import TypeCheckError
from foundry.fol import Rel, check_nd, pure_theory
from foundry.stlc import (
    App, Arrow, Base, Cases, Free, Inj0, Inj1, Lam, Pair, Proj0, SumT, Var,
    efq, from_nd, infer_type, to_nd, type_to_formula, VOID,
)

A, B, C = Base("A"), Base("B"), Base("C")


def theory():
    sig = fol.single_sorted("obj")
    for name in ("A", "B", "C"):
        sig = sig.with_relation(name, ())
    return pure_theory(sig, "intuitionistic")


def test_identity_maps_to_implication():
    d = to_nd({}, Lam(A, Var(0)))
    cert = check_nd(theory(), d)
    assert str(cert) == "|- A -> A"


def test_pair_maps_to_conjunction_intro():
    t = Lam(A, Lam(B, Pair(Var(1), Var(0))))
    d = to_nd({}, t)
    cert = check_nd(theory(), d)
    assert fol.alpha_equal(
        cert.conclusion,
        fol.Implies(Rel("A", ()), fol.Implies(Rel("B", ()), fol.And(Rel("A", ()), Rel("B", ())))),
    )


def test_cases_maps_to_disjunction_elim():
    t = Lam(SumT(A, B), Cases(Lam(A, Inj1(A, Var(0))), Lam(B, Inj0(B, Var(0))), Var(0)))
    # wait: swap a sum: A+B -> B+A
    t = Lam(
        SumT(A, B),
        Cases(Lam(A, Inj1(B, Var(0))), Lam(B, Inj0(A, Var(0))), Var(0)),
    )
    assert infer_type({}, t) == Arrow(SumT(A, B), SumT(B, A))
    cert = check_nd(theory(), to_nd({}, t))
    assert not cert.hypotheses


def test_efq_maps_to_ex_falso():
    t = Lam(VOID, App(efq(A), Var(0)))
    cert = check_nd(theory(), to_nd({}, t))
    assert fol.alpha_equal(cert.conclusion, fol.Implies(fol.Bot(), Rel("A", ())))


def test_round_trip_on_fragment():
    examples = [
        Lam(A, Var(0)),
        Lam(A, Lam(B, Pair(Var(1), Var(0)))),
        Lam(Prod := stlc.Prod(A, B), Proj0(Var(0))),
        Lam(SumT(A, B), Cases(Lam(A, Inj1(B, Var(0))), Lam(B, Inj0(A, Var(0))), Var(0))),
    ]
    for t in examples:
        d = to_nd({}, t)
        cert = check_nd(theory(), d)
        term, ctx = from_nd(d)
        assert type_to_formula(infer_type(ctx, term)) == cert.conclusion


def test_free_variables_become_hypotheses():
    t = App(Free("h"), Free("x"))
    ctx = {"h": Arrow(A, B), "x": A}
    cert = check_nd(theory(), to_nd(ctx, t))
    assert cert.hypotheses == frozenset(
        {type_to_formula(Arrow(A, B)), type_to_formula(A)}
    )
    assert cert.conclusion == Rel("B", ())


def test_unsupported_fragment_errors():
    with pytest.raises(TypeCheckError) as e:
        to_nd({}, stlc.Zero())
    assert e.value.tag == "unsupported-fragment"
    with pytest.raises(TypeCheckError) as e2:
        from_nd(fol.EqRefl(fol.FVar("x", fol.Sort("obj"))))
    assert e2.value.tag == "unsupported-fragment"
