import pytest

from foundry.errors import FuelError, TheoryError
from foundry.fol import ADD, FACT, MUL, Comp, PrimRec, Proj, Succ, Zero, arity, eval_primrec, validate


def test_examples():
    assert eval_primrec(ADD, (2, 3)) == 5
    assert eval_primrec(MUL, (3, 4)) == 12
    assert eval_primrec(Proj(3, 1), (7, 8, 9)) == 8


def test_agrees_with_machine_arithmetic():
    import math

    for x in range(11):
        for y in range(11):
            assert eval_primrec(ADD, (x, y)) == x + y
            assert eval_primrec(MUL, (x, y)) == x * y
        assert eval_primrec(FACT, (x,)) == math.factorial(x)


def test_arity_validation():
    with pytest.raises(TheoryError):
        validate(PrimRec(base=Proj(1, 0), step=Succ()))
    with pytest.raises(TheoryError):
        validate(Comp(Succ(), (), 1))
    with pytest.raises(TheoryError):
        eval_primrec(ADD, (1,))
    with pytest.raises(TheoryError):
        eval_primrec(ADD, (1, -2))
    assert arity(ADD) == 2 and arity(FACT) == 1


def test_fuel_guard():
    with pytest.raises(FuelError):
        eval_primrec(MUL, (80, 80), fuel=50)
