import copy
import dataclasses
import pathlib

import pytest

from foundry.errors import KernelError
from foundry.hol import (
    Const, FVar, HolTheorem, PROP, define_connectives, initial_state, mk_eq,
)
from foundry.run import Options, run_script_text

CORPUS = pathlib.Path(__file__).resolve().parent.parent / "corpus"


def run(name, **kw):
    opts = Options(**kw)
    return run_script_text("hol", (CORPUS / name).read_text(), opts, name)


def test_connectives_script():
    r = run("connectives.hol")
    assert r.ok, r.first_error()
    assert r.theorems_certified == 3
    # what the script defined matches the canonical bodies used by the axioms
    from foundry.hol import standard_definitions
    from foundry.run import HolRunner
    from foundry.surface import script as sc

    runner = HolRunner(Options(), "connectives.hol")
    runner.run(sc.parse_script((CORPUS / "connectives.hol").read_text()))
    canon = dict(standard_definitions())
    for name, body in canon.items():
        assert runner.state.constants[name].definiens == body


def test_ext_rule_script():
    r = run("ext_rule.hol")
    assert r.ok, r.first_error()
    assert r.theorems_certified == 1


def test_diaconescu_certifies_excluded_middle():
    r = run("diaconescu.hol", axioms=("choice", "propext"))
    assert r.ok, r.first_error()
    assert r.theorems_certified == 1
    last = r.results[-1]
    assert last.name == "excluded_middle"
    assert "forall" in last.output and "or P (not P)" in last.output


def test_diaconescu_without_choice_fails_with_dependency_error():
    r = run("diaconescu.hol", axioms=("propext",))
    err = r.first_error()
    assert err is not None
    assert err.tag == "axiom-disabled"
    assert r.theorems_certified == 0


def test_diaconescu_without_propext_fails():
    r = run("diaconescu.hol", axioms=("choice",))
    err = r.first_error()
    assert err is not None and err.tag == "axiom-disabled"


# ---------------------------------------------------------------------------
# LCF discipline: five forging attempts through the public surface


@pytest.fixture()
def a_theorem():
    st = initial_state()
    st, thms = define_connectives(st)
    return thms["true"]


def test_forge_1_direct_constructor():
    with pytest.raises(KernelError):
        HolTheorem(frozenset(), FVar("p", PROP))


def test_forge_2_guessed_token():
    with pytest.raises(KernelError):
        HolTheorem(frozenset(), FVar("p", PROP), _token=object())


def test_forge_3_subclass_bypass():
    class Evil(HolTheorem):
        def __init__(self):
            super().__init__(frozenset(), FVar("p", PROP), _token=None)

    with pytest.raises(KernelError):
        Evil()


def test_forge_4_mutation(a_theorem):
    with pytest.raises(AttributeError):
        a_theorem.conclusion = FVar("p", PROP)
    with pytest.raises(AttributeError):
        del a_theorem.conclusion


def test_forge_5_dataclass_replace_and_copy(a_theorem):
    with pytest.raises(TypeError):
        dataclasses.replace(a_theorem, conclusion=FVar("p", PROP))
    # even plain copying is sealed off (it would go through __setattr__)
    with pytest.raises(AttributeError):
        copy.copy(a_theorem)


def test_run_script_returns_named_theorems():
    from foundry.hol import run_script
    from foundry.errors import ScriptError

    named = run_script(None, (CORPUS / "connectives.hol").read_text())
    names = [n for n, _ in named]
    assert names[:4] == ["true", "forall", "and", "imp"]
    assert names[-1] == "and_commutes_here"
    for _, thm in named:
        assert isinstance(thm, HolTheorem)
    # a failing script aborts with its line number
    st = initial_state()  # choice not enabled
    with pytest.raises(ScriptError) as e:
        run_script(st, (CORPUS / "diaconescu.hol").read_text())
    assert "line" in str(e.value) and e.value.tag == "axiom-disabled"
