import pathlib

from foundry.run import Options, run_script_text

CORPUS = pathlib.Path(__file__).resolve().parent.parent / "corpus"


def run(name, **kw):
    return run_script_text("dtt", (CORPUS / name).read_text(), Options(**kw), name)


def test_add_comm_script():
    r = run("add_comm.dtt")
    assert r.ok, r.first_error()
    assert r.theorems_certified == 1
    assert r.results[-1].name == "add_comm"


def test_girard_script_rejected_with_universe_error():
    r = run("girard.dtt")
    err = r.first_error()
    assert err is not None and err.tag == "universe-error"


def test_funext_stuck_script_keeps_the_axiom_constant():
    r = run("funext_stuck.dtt")
    assert r.ok, r.first_error()
    out = [x.output for x in r.results if x.command == "Eval"][-1]
    assert "axiom funext" in out


def test_nat_arith_script():
    r = run("nat_arith.dtt")
    assert r.ok, r.first_error()
    outs = [x.output for x in r.results if x.command == "Eval"]
    assert outs == ["5", "12"]


def test_fin_script():
    r = run("fin.dtt")
    assert r.ok, r.first_error()


def test_types_library_script():
    r = run("types_library.dtt")
    assert r.ok, r.first_error()
    assert r.theorems_certified == 1


def test_prop_demo_script():
    r = run("prop_demo.dtt", impredicative_prop=True)
    assert r.ok, r.first_error()
    outs = [x.output for x in r.results if x.command == "Eval"]
    assert outs == ["3"]


def test_w_types_script():
    r = run("w_types.dtt")
    assert r.ok, r.first_error()
    outs = [x.output for x in r.results if x.command == "Eval"]
    assert outs == ["2"]
