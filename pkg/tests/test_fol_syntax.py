import random

import pytest
from hypothesis import given, settings, strategies as st

from foundry import fol
from foundry.errors import SortError
from foundry.fol import (
    App, BVar, Eq, FVar, Rel, Sort, alpha_equal, check_well_formed, exists,
    forall, free_vars, open_binder, pretty_formula, subst_in_term, substitute,
    term_free_vars,
)

from helpers import OBJ, gen_formula, gen_term, nd_signature

X, Y, Z = FVar("x", OBJ), FVar("y", OBJ), FVar("z", OBJ)
GT = "gt"


def _sig():
    sig = fol.single_sorted("obj")
    sig = sig.with_relation(GT, (OBJ, OBJ))
    sig = sig.with_function("plus1", (OBJ,), OBJ)
    return sig


def test_substitute_renames_inner_binder():
    # (exists y. y > x)[x := y+1] leaves y+1 free, the binder untouched
    a = exists(Y, Rel(GT, (Y, X)))
    t = App("plus1", (Y,))
    b = substitute(a, X, t)
    assert free_vars(b) == frozenset({Y})
    opened = open_binder(b, Z)
    assert opened == Rel(GT, (Z, App("plus1", (Y,))))
    # and it is not the capturing reading
    assert not alpha_equal(b, exists(Y, Rel(GT, (Y, App("plus1", (Y,))))))


def test_substitute_identity_and_vacuous():
    a = exists(Y, Rel(GT, (Y, X)))
    assert alpha_equal(substitute(a, X, X), a)
    b = forall(X, Rel(GT, (X, X)))
    assert alpha_equal(substitute(b, X, App("plus1", (Y,))), b)


def test_alpha_equal_examples():
    r = fol.single_sorted("obj").with_relation("R", (OBJ, OBJ))
    a = forall(X, Rel("R", (X, Y)))
    b = forall(Z, Rel("R", (Z, Y)))
    assert alpha_equal(a, b)
    c = forall(Y, Rel("R", (Y, Y)))
    assert not alpha_equal(a, c)
    assert alpha_equal(a, a)


def test_free_vars_examples():
    assert free_vars(forall(X, Rel(GT, (X, Y)))) == frozenset({Y})
    assert free_vars(forall(X, Eq(X, X))) == frozenset()
    assert free_vars(Rel(GT, (X, Y))) == frozenset({X, Y})


def test_check_well_formed_geometry():
    point, line = Sort("Point"), Sort("Line")
    sig = fol.Signature(sorts=frozenset({point, line}))
    sig = sig.with_relation("on", (point, line))
    p, l = FVar("p", point), FVar("l", line)
    check_well_formed(sig, Rel("on", (p, l)))
    with pytest.raises(SortError) as e:
        check_well_formed(sig, Rel("on", (l, p)))
    assert "sort mismatch" in str(e.value)
    with pytest.raises(SortError) as e:
        check_well_formed(sig, Rel("on", (p,)))
    assert "arity" in str(e.value)
    with pytest.raises(SortError):
        check_well_formed(sig, Rel("between", (p, l)))


@settings(max_examples=120, deadline=None)
@given(st.integers(0, 2 ** 30), st.integers(0, 2))
def test_substitution_lemma(seed, depth):
    # A[t/x][s/y] == A[s/y][t[s/y]/x] when x not free in s and x != y
    rng = random.Random(seed)
    a = gen_formula(rng, depth)
    t = gen_term(rng)
    s = rng.choice([Y, Z])  # x never free in these
    lhs = substitute(substitute(a, X, t), Y, s)
    rhs = substitute(substitute(a, Y, s), X, subst_in_term(t, Y, s))
    assert alpha_equal(lhs, rhs)


@settings(max_examples=120, deadline=None)
@given(st.integers(0, 2 ** 30), st.integers(0, 3))
def test_free_vars_of_substitution(seed, depth):
    rng = random.Random(seed)
    a = gen_formula(rng, depth)
    t = App("plus1", (Y,)) if depth % 2 else Y
    if X in free_vars(a):
        want = (free_vars(a) - {X}) | term_free_vars(t)
        assert free_vars(substitute(a, X, t)) == want


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 2 ** 30), st.integers(0, 3))
def test_renaming_preserves_free_vars(seed, depth):
    # quantifying over a fresh variable then reopening never changes frees
    rng = random.Random(seed)
    a = gen_formula(rng, depth)
    w = FVar("w", OBJ)
    assert free_vars(open_binder(forall(w, a), w)) == free_vars(a)


def test_pretty_freshens_clashing_binder():
    a = exists(Y, Rel(GT, (Y, Y)))
    b = substitute(exists(Y, Rel(GT, (Y, X))), X, Y)  # binder must avoid free y
    text = pretty_formula(b)
    assert "y'" in text
