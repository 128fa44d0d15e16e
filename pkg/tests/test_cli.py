from __future__ import annotations

import json

import pytest
from click.testing import CliRunner
from hypothesis import given, settings
from hypothesis import strategies as st

from twocrossed.cli import main

BACK_MODEL = """\
[map zero_A3_1]
from = A3
to = 1
kind = trivial

[map zero_S3_Z2]
from = S3
to = Z2
kind = trivial

[morphism back]
source = fixD
target = fixC_Z2
mu = zero_A3_1
psi = zero_S3_Z2
phi = zero_1_Z2
"""


def run(*args: str):
    return CliRunner().invoke(main, list(args), catch_exceptions=False)


def run_json(*args: str) -> tuple[int, dict]:
    result = run("--format", "json", *args)
    return result.exit_code, json.loads(result.output)


@pytest.mark.parametrize("name", ["fixA", "fixB", "fixC_Z2", "fixC_S3", "fixD", "q1_fixC_Z2"])
def test_verify_corpus_modules(name):
    result = run("verify", name)
    assert result.exit_code == 0, result.output
    assert "result: pass" in result.output


def test_verify_unknown_module_fails_cleanly():
    result = run("verify", "nosuch")
    assert result.exit_code == 1
    assert "no xmod named 'nosuch'" in result.output


def test_json_report_shape():
    code, data = run_json("--seed", "5", "verify", "fixD")
    assert code == 0
    assert data["passed"] is True
    assert data["seed"] == 5
    assert data["probes"]["mode"] == "exhaustive"
    assert data["checks"][0]["name"] == "axioms"
    assert data["checks"][0]["failures"] == []


@pytest.mark.parametrize("name, expected", [("fixB", "pi1 = 1, pi2 = 1, pi3 = 1"),
                                            ("fixD", "pi1 = 1, pi2 = Z2, pi3 = 1"),
                                            ("fixA", "pi1 = Z2, pi2 = 1, pi3 = 1")])
def test_homotopy_groups(name, expected):
    result = run("pi", name)
    assert result.exit_code == 0
    assert expected in result.output


def test_pathspace_and_q1_commands():
    assert run("pathspace", "fixC_S3").exit_code == 0
    assert run("q1", "fixC_Z2").exit_code == 0


def test_homotopy_check_forward():
    result = run("homotopy", "check", "forward")
    assert result.exit_code == 0, result.output


def test_homotopy_commands_on_lax_cells():
    assert run("--samples", "20", "homotopy", "check", "to_swap").exit_code == 0
    assert run("--samples", "20", "homotopy", "invert", "to_swap").exit_code == 0
    assert run("--samples", "20", "homotopy", "compose", "unit_trivial", "to_swap").exit_code == 0


def test_homotopy_compose_rejects_mismatched_ends():
    result = run("--samples", "10", "homotopy", "compose", "to_swap", "to_swap")
    assert result.exit_code == 1
    assert "does not end where" in result.output


def test_lax_commands():
    for args in (("lax", "check", "to_swap"), ("lax", "target", "to_swap"),
                 ("lax", "compose", "unit_trivial", "to_swap"), ("lax", "invert", "to_swap")):
        result = run(*args)
        assert result.exit_code == 0, (args, result.output)
    assert "psi: 0->123, 1->213" in run("lax", "target", "to_swap").output


def test_lax_compose_needs_matching_endpoints():
    result = run("lax", "compose", "to_swap", "to_swap")
    assert result.exit_code == 1
    assert "not composable" in result.output


def test_twofold_commands():
    for args in (("twofold", "check", "k_unit"), ("twofold", "target", "k_unit"),
                 ("twofold", "compose", "k_unit", "k_unit"),
                 ("twofold", "whisker", "k_unit", "unit_trivial", "--side", "left")):
        result = run(*args)
        assert result.exit_code == 0, (args, result.output)


def test_user_model_extends_corpus(tmp_path):
    path = tmp_path / "back.model"
    path.write_text(BACK_MODEL)
    code, data = run_json("--model", str(path), "lax", "equiv", "c_trivial", "back")
    # fixD has a nontrivial second homotopy group, so no lax inverse exists
    assert code == 1
    assert data["checks"][0]["probe"] == {"source-witness": "found",
                                          "target-witness": "not found within bounds"}


def test_equivalence_direction_is_checked(tmp_path):
    path = tmp_path / "back.model"
    path.write_text(BACK_MODEL)
    result = run("--model", str(path), "lax", "equiv", "c_trivial", "c_swap")
    assert result.exit_code == 1
    assert "does not go from fixD back to fixC_Z2" in result.output


def test_identity_is_equivalence(tmp_path):
    path = tmp_path / "id.model"
    path.write_text("[map id_1]\nfrom = 1\nto = 1\nkind = identity\n\n"
                    "[morphism ident]\nsource = fixC_Z2\ntarget = fixC_Z2\n"
                    "mu = id_1\npsi = id_Z2\nphi = id_Z2\n")
    result = run("--model", str(path), "lax", "equiv", "ident", "ident")
    assert result.exit_code == 0, result.output


def test_model_errors_carry_positions(tmp_path):
    path = tmp_path / "bad.model"
    path.write_text("[map m]\nfrom = A3\nto = Q\nkind = trivial\n")
    result = run("--model", str(path), "verify", "fixD")
    assert result.exit_code == 1
    assert "line 3, column 6: unresolved name 'Q'" in result.output


def test_counterexample_command():
    result = run("counterexample", "--bound", "10")
    assert result.exit_code == 0
    assert "21 candidates" in result.output
    assert "no reverse homotopy exists: True" in result.output


@pytest.mark.parametrize("suite", ["axioms", "kernel", "homotopy-groups", "identities", "counterexample"])
def test_fast_law_suites(suite):
    result = run("laws", suite)
    assert result.exit_code == 0, result.output


def test_unknown_suite_is_usage_error():
    result = run("laws", "nosuch")
    assert result.exit_code == 2


@settings(max_examples=10)
@given(st.integers(0, 10_000))
def test_seed_is_reported(seed):
    code, data = run_json("--seed", str(seed), "verify", "fixC_Z2")
    assert code == 0 and data["seed"] == seed
