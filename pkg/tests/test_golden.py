"""Golden outputs: each corpus script has one expected-report file.

Regenerate after an intentional change with:
    FOUNDRY_REGEN_GOLDEN=1 pytest tests/test_golden.py
"""

import os
import pathlib

import pytest

from foundry.run import Options, run_script_text

CORPUS = pathlib.Path(__file__).resolve().parent.parent / "corpus"

MANIFEST = {
    "fol_basics.fol": ("fol", {}),
    "em_negative.fol": ("fol", {}),
    "stlc_basics.stlc": ("stlc", {}),
    "connectives.hol": ("hol", {}),
    "ext_rule.hol": ("hol", {}),
    "diaconescu.hol": ("hol", {"axioms": ("choice", "propext")}),
    "add_comm.dtt": ("dtt", {}),
    "nat_arith.dtt": ("dtt", {}),
    "fin.dtt": ("dtt", {}),
    "types_library.dtt": ("dtt", {}),
    "w_types.dtt": ("dtt", {}),
    "funext_stuck.dtt": ("dtt", {}),
    "prop_demo.dtt": ("dtt", {"impredicative_prop": True}),
    "girard.dtt": ("dtt", {}),
}


def _render(name: str) -> str:
    calculus, kw = MANIFEST[name]
    report = run_script_text(calculus, (CORPUS / name).read_text(), Options(**kw), name)
    return report.to_text() + "\n"


@pytest.mark.parametrize("name", sorted(MANIFEST))
def test_golden(name):
    got = _render(name)
    expected_path = CORPUS / (name + ".expected")
    if os.environ.get("FOUNDRY_REGEN_GOLDEN"):
        expected_path.write_text(got)
        pytest.skip("regenerated")
    assert expected_path.exists(), f"missing golden file {expected_path.name}"
    assert got == expected_path.read_text()
