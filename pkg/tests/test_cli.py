import json

import pytest

from incdim import generate_family, write_edge_list
from incdim.cli import main


@pytest.fixture
def p8_file(tmp_path):
    path = tmp_path / "p8.txt"
    write_edge_list(generate_family("path", 8), path)
    return str(path)


@pytest.fixture
def k2_file(tmp_path):
    path = tmp_path / "k2.txt"
    path.write_text("2 1\n0 1\n")
    return str(path)


@pytest.fixture
def figure1_file(tmp_path):
    path = tmp_path / "fig1.txt"
    path.write_text("5 4\n0 1\n1 2\n1 4\n2 3\n")
    return str(path)


def run_json(capsys, argv):
    code = main(["--json"] + argv)
    out = capsys.readouterr().out
    return code, json.loads(out)


def test_dimi_auto(capsys, p8_file):
    code, report = run_json(capsys, ["dimi", p8_file])
    assert code == 0
    assert report["results"]["value"] == 4
    assert report["results"]["method"] == "structural"


def test_dimi_k2(capsys, k2_file):
    code, report = run_json(capsys, ["dimi", k2_file, "--method", "brute"])
    assert code == 0
    assert report["results"]["value"] == 0


def test_dimi_plain_text(capsys, p8_file):
    assert main(["dimi", p8_file]) == 0
    out = capsys.readouterr().out
    assert "value" in out and "4" in out


def test_dimi_formula_method_rejected(capsys, p8_file):
    code = main(["dimi", p8_file, "--method", "formula"])
    assert code == 2
    assert "formula requires a named family" in capsys.readouterr().err


def test_dimi_formula_command(capsys):
    code, report = run_json(capsys, ["dimi-formula", "path", "8"])
    assert code == 0 and report["results"]["value"] == 4


def test_malformed_file(capsys, tmp_path):
    path = tmp_path / "bad.txt"
    path.write_text("3 1\n0 zzz\n")
    code = main(["dimi", str(path)])
    assert code == 2
    assert "line 2" in capsys.readouterr().err


def test_rho(capsys, figure1_file):
    code, report = run_json(capsys, ["rho", figure1_file, "--all"])
    assert code == 0
    assert report["results"]["rho"] == 2
    assert [0, 3] in report["results"]["all_witnesses"]


def test_ecritical(capsys, figure1_file):
    code, report = run_json(capsys, ["ecritical", figure1_file, "0", "1"])
    assert code == 0
    assert report["results"]["size"] == 2


def test_dima_dime(capsys, p8_file):
    code, report = run_json(capsys, ["dima", p8_file])
    assert code == 0 and report["results"]["value"] >= 1
    code, report = run_json(capsys, ["dime", p8_file])
    assert code == 0 and report["results"]["value"] == 1


def test_classify(capsys, tmp_path):
    path = tmp_path / "c7.txt"
    write_edge_list(generate_family("cycle", 7), path)
    code, report = run_json(capsys, ["classify", str(path)])
    assert code == 0
    assert report["results"]["class"] == "CLASS_MINUS_ONE"
    assert report["results"]["dim_I"] == 4


def test_gen(capsys, tmp_path):
    out = tmp_path / "grn.txt"
    code, report = run_json(capsys, ["gen", "grn", "3", "7",
                                     "-o", str(out)])
    assert code == 0
    assert report["results"] == {"n": 7, "m": 7}
    assert out.exists()


def test_gen_invalid_params(capsys, tmp_path):
    code = main(["gen", "grn", "3", "8", "-o", str(tmp_path / "x.txt")])
    assert code == 2


def test_reduce_and_extract(capsys, tmp_path):
    cnf = tmp_path / "f.cnf"
    cnf.write_text("p cnf 3 1\n-1 -2 3 0\n")
    out = tmp_path / "red.txt"
    code, report = run_json(capsys, ["reduce", str(cnf), "-o", str(out)])
    assert code == 0
    assert report["results"]["n"] == 27 and report["results"]["r"] == 20
    labels_file = report["results"]["labels_file"]
    sidecar = json.loads(open(labels_file).read())
    assert sidecar["r"] == 20

    # build the tight basis for the all-true assignment and extract it
    from incdim import (assignment_to_generator, build_reduction, CnfFormula)
    red = build_reduction(CnfFormula(num_vars=3, clauses=((-1, -2, 3),)))
    s = assignment_to_generator(red, {1: True, 2: True, 3: True})
    code, report = run_json(capsys, ["extract", labels_file,
                                     ",".join(map(str, sorted(s)))])
    assert code == 0
    assert report["results"]["satisfies_formula"]
    assert report["results"]["truth_gadget_counts"] == [4, 4, 4]


def test_extract_rejects_loose_set(capsys, tmp_path):
    cnf = tmp_path / "f.cnf"
    cnf.write_text("p cnf 3 1\n1 2 3 0\n")
    out = tmp_path / "red.txt"
    main(["reduce", str(cnf), "-o", str(out)])
    capsys.readouterr()
    code = main(["extract", str(out) + ".labels.json", "0,1,2"])
    assert code == 2
    assert "not a tight basis" in capsys.readouterr().err


def test_verify_exhaustive(capsys):
    code, report = run_json(capsys, ["verify", "exhaustive", "-n", "4"])
    assert code == 0
    assert report["results"]["passed"]


def test_verify_random_deterministic(capsys):
    code1, r1 = run_json(capsys, ["verify", "random", "-n", "7",
                                  "--count", "25", "--seed", "42"])
    code2, r2 = run_json(capsys, ["verify", "random", "-n", "7",
                                  "--count", "25", "--seed", "42"])
    assert code1 == code2 == 0
    r1["results"].pop("wall_time_s")
    r2["results"].pop("wall_time_s")
    assert r1 == r2


def test_verify_random_needs_seed(capsys):
    assert main(["verify", "random", "-n", "7"]) == 2


def test_verify_exhaustive_n7_needs_slow(capsys):
    assert main(["verify", "exhaustive", "-n", "7"]) == 2
