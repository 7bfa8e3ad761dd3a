# -*- coding: UTF-8 -*-
# pylint:disable=missing-function-docstring
import json

import pytest

from homhopf.catalog import (catalog_kz2, catalog_names, catalog_section5_forms, catalog_section5_sigma,
                             catalog_section5_smash)
from homhopf.cli import EXIT_ERROR, EXIT_FAIL, EXIT_PASS, main
from homhopf.cobraid import BilinearForm
from homhopf.exactlin import LinMap
from homhopf.smash import TwistMap, hom_tensor_twist
from homhopf.specfile import FormDocument, dump_spec, load_smash, load_spec, twist_document

KS = ["1", "2", "-1", "3/2"]


@pytest.fixture
def workdir(tmp_path):
    for name in ("kz2", "taft_twisted", "section5_action", "section5_smash",
                 "section5_tau", "section5_upsilon", "section5_phi", "section5_psi"):
        assert main(["catalog", name, "--out", str(tmp_path / f"{name}.json")]) == EXIT_PASS
    return tmp_path


def _cobraid(workdir, out):  # pylint:disable=redefined-outer-name
    return main(["cobraid", "--smash", str(workdir / "section5_smash.json"),
                 "--tau", str(workdir / "section5_tau.json"),
                 "--upsilon", str(workdir / "section5_upsilon.json"),
                 "--phi", str(workdir / "section5_phi.json"),
                 "--psi", str(workdir / "section5_psi.json"),
                 "--out", str(workdir / out)])


def test_catalog_list(capsys):
    assert main(["catalog"]) == EXIT_PASS
    assert capsys.readouterr().out.split() == catalog_names()


def test_catalog_to_stdout(capsys):
    assert main(["catalog", "kz2"]) == EXIT_PASS
    doc = json.loads(capsys.readouterr().out)
    assert doc["kind"] == "hom_hopf"
    assert doc["basis"] == ["1", "a"]


def test_unknown_catalog_entry(capsys):
    assert main(["catalog", "sweedler"]) == EXIT_ERROR
    assert "sweedler" in capsys.readouterr().err


@pytest.mark.parametrize("k", KS)
def test_catalog_sweep(tmp_path, k, capsys):
    for name in catalog_names():
        path = tmp_path / f"{name}.json"
        assert main(["catalog", name, f"--k={k}", "--out", str(path)]) == EXIT_PASS
        assert main(["check", str(path)]) == EXIT_PASS, capsys.readouterr().out


def test_check_json(tmp_path, capsys):
    dump_spec(catalog_kz2(), tmp_path / "kz2.json")
    assert main(["check", str(tmp_path / "kz2.json"), "--json"]) == EXIT_PASS
    report = json.loads(capsys.readouterr().out)
    assert report["passed"]
    assert "HA2 associativity" in [c["name"] for c in report["conditions"]]


def test_check_twist_file(tmp_path):
    dump_spec(catalog_kz2(), tmp_path / "kz2.json")
    kz2 = catalog_kz2()
    dump_spec(twist_document(hom_tensor_twist(kz2, kz2), "kz2.json", "kz2.json"), tmp_path / "flip.json")
    assert main(["check", str(tmp_path / "flip.json")]) == EXIT_PASS


def test_forced_smash_fails_checks(tmp_path, capsys):
    kz2 = catalog_kz2()
    dump_spec(kz2, tmp_path / "kz2.json")
    doubled = TwistMap(kz2, kz2, hom_tensor_twist(kz2, kz2).R.scaled(2), name="doubled flip")
    dump_spec(twist_document(doubled, "kz2.json", "kz2.json"), tmp_path / "doubled.json")
    args = ["smash", str(tmp_path / "kz2.json"), str(tmp_path / "kz2.json"), "--twist", str(tmp_path / "doubled.json"),
            "--out", str(tmp_path / "smash.json")]

    assert main(args) == EXIT_FAIL
    assert "C1 unit of B" in capsys.readouterr().out
    assert not (tmp_path / "smash.json").exists()

    assert main(args + ["--force"]) == EXIT_PASS
    capsys.readouterr()
    assert main(["check", str(tmp_path / "smash.json"), "--json"]) == EXIT_FAIL
    report = json.loads(capsys.readouterr().out)
    failed = [c for c in report["conditions"] if not c["passed"]]
    assert "HA2 right unit" in [c["name"] for c in failed]
    assert all(c["witness"] is not None for c in failed)


def test_smash_from_action(workdir):  # pylint:disable=redefined-outer-name
    out = workdir / "built.json"
    assert main(["smash", str(workdir / "taft_twisted.json"), str(workdir / "kz2.json"),
                 "--action", str(workdir / "section5_action.json"), "--out", str(out)]) == EXIT_PASS
    assert load_smash(out) == catalog_section5_smash("2")
    assert json.loads(out.read_text(encoding="utf-8"))["provenance"]["left"] == "taft_twisted.json"
    assert main(["check", str(out)]) == EXIT_PASS


def test_smash_rejects_mismatched_action(workdir, capsys):  # pylint:disable=redefined-outer-name
    assert main(["smash", str(workdir / "kz2.json"), str(workdir / "kz2.json"),
                 "--action", str(workdir / "section5_action.json"), "--out", str(workdir / "x.json")]) == EXIT_ERROR
    assert "[carrier]" in capsys.readouterr().err


def test_cobraid_pipeline(workdir, shared_datadir, capsys):  # pylint:disable=redefined-outer-name
    assert _cobraid(workdir, "sigma.json") == EXIT_PASS
    assert _cobraid(workdir, "sigma_again.json") == EXIT_PASS
    assert (workdir / "sigma.json").read_bytes() == (workdir / "sigma_again.json").read_bytes()
    capsys.readouterr()

    assert main(["table", str(workdir / "sigma.json"), "sigma", "--json"]) == EXIT_PASS
    table = json.loads(capsys.readouterr().out)
    with open(shared_datadir / "sigma_table.json", "r", encoding="utf-8") as f:
        expected = json.load(f)
    assert table == expected

    assert main(["check", str(workdir / "sigma.json")]) == EXIT_PASS


def test_decompose(workdir):  # pylint:disable=redefined-outer-name
    assert _cobraid(workdir, "sigma.json") == EXIT_PASS
    out = workdir / "parts"
    assert main(["decompose", str(workdir / "sigma.json"), "--smash", str(workdir / "section5_smash.json"),
                 "--out", str(out)]) == EXIT_PASS
    forms = catalog_section5_forms("2")
    for role in ("tau", "upsilon", "phi", "psi"):
        doc = load_spec(out / f"{role}.json")
        assert doc.role == role
        assert doc.form == getattr(forms, role)
        assert main(["check", str(out / f"{role}.json")]) == EXIT_PASS


def test_table_text(workdir, capsys):  # pylint:disable=redefined-outer-name
    assert main(["table", str(workdir / "section5_smash.json"), "antipode", "--json"]) == EXIT_PASS
    table = json.loads(capsys.readouterr().out)
    rows = dict(zip(table["index"], table["data"]))
    assert rows["x⊗1"] == ["gx⊗1"]
    assert rows["gx⊗1"] == ["-x⊗1"]

    assert main(["table", str(workdir / "section5_action.json"), "act"]) == EXIT_PASS
    assert "-2 x" in capsys.readouterr().out

    assert main(["table", str(workdir / "kz2.json"), "sigma"]) == EXIT_ERROR


def test_malformed_input(shared_datadir, capsys):
    assert main(["check", str(shared_datadir / "kz2_bad_dim.json")]) == EXIT_ERROR
    assert ":3 [dim]" in capsys.readouterr().err


def test_missing_file(tmp_path, capsys):
    assert main(["check", str(tmp_path / "absent.json")]) == EXIT_ERROR
    assert "Cannot read file" in capsys.readouterr().err


def test_config_file(workdir, shared_datadir, capsys):  # pylint:disable=redefined-outer-name
    config = str(shared_datadir / "homhopf_test.yaml")
    assert main(["check", str(workdir / "kz2.json"), "--config", config]) == EXIT_PASS
    out = capsys.readouterr().out
    assert "witness" not in out
    assert main(["catalog", "taft_twisted", "--config", config]) == EXIT_PASS
    assert "\n    \"alpha\"" in capsys.readouterr().out
    assert main(["check", str(workdir / "kz2.json"), "--config", str(shared_datadir / "homhopf_bad_level.yaml")]) \
        == EXIT_ERROR


def test_twist_over_a_coalgebra(tmp_path, capsys):
    kz2 = catalog_kz2()
    dump_spec(kz2, tmp_path / "kz2.json")
    dump_spec(kz2.coalgebra, tmp_path / "kz2_coalgebra.json")
    dump_spec(twist_document(hom_tensor_twist(kz2, kz2), "kz2_coalgebra.json", "kz2.json"), tmp_path / "twist.json")
    assert main(["check", str(tmp_path / "twist.json")]) == EXIT_ERROR
    err = capsys.readouterr().err
    assert "twist.json" in err
    assert "[left]" in err


def test_forced_smash_with_a_unit_breaking_twist(tmp_path, capsys):
    kz2 = catalog_kz2()
    dump_spec(kz2, tmp_path / "kz2.json")
    counit = TwistMap(kz2, kz2, LinMap([[1, 1, 1, 1], [0, 0, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0]]), name="counit twist")
    dump_spec(twist_document(counit, "kz2.json", "kz2.json"), tmp_path / "counit.json")
    assert main(["check", str(tmp_path / "counit.json"), "--json"]) == EXIT_FAIL
    report = json.loads(capsys.readouterr().out)
    failed = [c["name"] for c in report["conditions"] if not c["passed"]]
    assert "intertwining" not in failed
    assert {name.split()[0] for name in failed if name[0] == "C"} == {"C1"}

    assert main(["smash", str(tmp_path / "kz2.json"), str(tmp_path / "kz2.json"), "--twist",
                 str(tmp_path / "counit.json"), "--out", str(tmp_path / "smash.json"), "--force"]) == EXIT_PASS
    capsys.readouterr()
    assert main(["check", str(tmp_path / "smash.json"), "--json"]) == EXIT_FAIL
    report = json.loads(capsys.readouterr().out)
    failed = {c["name"]: c for c in report["conditions"] if not c["passed"]}
    assert {"HA2 right unit", "HA2 left unit"} & set(failed)
    assert all(c["witness"] is not None for c in failed.values())


def test_forced_decompose(workdir, capsys):  # pylint:disable=redefined-outer-name
    doubled = BilinearForm(catalog_section5_sigma("2").entries * 2, name="doubled")
    dump_spec(FormDocument(doubled, "section5_smash.json", "section5_smash.json", "sigma"), workdir / "doubled.json")
    args = ["decompose", str(workdir / "doubled.json"), "--smash", str(workdir / "section5_smash.json"),
            "--out", str(workdir / "parts")]
    assert main(args) == EXIT_FAIL
    assert "CHA1 right unit" in capsys.readouterr().out
    assert not (workdir / "parts").exists()

    assert main(args + ["--force"]) == EXIT_PASS
    assert load_spec(workdir / "parts" / "upsilon.json").form == BilinearForm([[2, 2], [2, -2]])
