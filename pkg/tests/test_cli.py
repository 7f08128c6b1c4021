"""CLI behavior: output shapes, exit codes, determinism, error paths."""
import json

import pytest

from orbigenus.cli import main
from orbigenus.orbits import TransitiveOrbit
from orbigenus.serialize import dumps, orbit_to_json


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_orbits_json(capsys):
    code, out, err = run(capsys, "orbits", "--h", "2", "--p", "2", "--size", "2")
    assert code == 0 and err == ""
    obj = json.loads(out)
    assert [t["hnf"] for t in obj] == [[[1, 0], [0, 2]], [[1, 1], [0, 2]], [[2, 0], [0, 1]]]
    assert all(t["size"] == "2" for t in obj)


def test_orbits_tsv(capsys):
    code, out, _ = run(capsys, "orbits", "--h", "2", "--p", "2", "--size", "2", "--format", "tsv")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "size\thnf"
    assert lines[1:] == ["2\t1,0|0,2", "2\t1,1|0,2", "2\t2,0|0,1"]


def test_orbits_inadmissible_size(capsys):
    code, out, err = run(capsys, "orbits", "--h", "2", "--p", "2", "--size", "6")
    assert code == 2
    assert "error:" in err


def test_classes_json(capsys):
    code, out, _ = run(capsys, "classes", "--h", "2", "--p", "2", "--l", "4")
    assert code == 0
    obj = json.loads(out)
    assert obj["count"] == 17
    assert obj["total_tuples"] == "88"
    assert len(obj["classes"]) == 17


def test_classes_tsv(capsys):
    code, out, _ = run(capsys, "classes", "--h", "2", "--p", "2", "--l", "4", "--format", "tsv")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "type\tcentralizer_order\tclass_size"
    assert lines[-1] == "total\t17\t88"
    assert len(lines) == 19
    # degree 0 has the single empty class
    _, out, _ = run(capsys, "classes", "--h", "1", "--l", "0", "--format", "tsv")
    assert out.splitlines()[1] == "-\t1\t1"


def test_verify_dmvv(capsys):
    code, out, _ = run(capsys, "verify", "dmvv", "--h", "2", "--p", "2", "--n", "4")
    assert code == 0
    obj = json.loads(out)
    assert obj["equal"] is True
    assert obj["p"] == 2
    assert "first_mismatch" not in obj


def test_verify_dmvv_integer_model(capsys):
    code, out, _ = run(
        capsys, "verify", "dmvv", "--h", "1", "--n", "8", "--model", "integer:3"
    )
    assert code == 0
    obj = json.loads(out)
    assert obj["p"] is None
    assert obj["lhs"][2] == "6"


def test_verify_frobenius(capsys):
    code, out, _ = run(
        capsys,
        "verify", "frobenius", "--h", "2", "--p", "2", "--l", "3",
        "--trials", "4", "--seed", "11",
    )
    assert code == 0
    obj = json.loads(out)
    assert obj["equal"] is True
    assert obj["trials"] == 4  # one (j, k) split with j <= k at l = 3


def test_verify_oracle(capsys):
    code, out, _ = run(capsys, "verify", "oracle", "--h", "2", "--p", "2", "--l", "4")
    assert code == 0
    obj = json.loads(out)
    assert obj == {
        "h": 2,
        "mode": {"p": 2},
        "l": 4,
        "classes": 17,
        "tuples": "88",
        "equal": True,
    }


def test_verify_oracle_guard(capsys):
    code, _, err = run(capsys, "verify", "oracle", "--h", "1", "--l", "7")
    assert code == 2
    assert "guard" in err
    code, out, _ = run(capsys, "verify", "oracle", "--h", "1", "--l", "7", "--guard", "7")
    assert code == 0
    assert json.loads(out)["tuples"] == "5040"


def test_genus_sigma(capsys):
    code, out, _ = run(
        capsys, "genus", "sigma", "--h", "1", "--p", "2", "--n", "4", "--model", "integer:1"
    )
    assert code == 0
    assert json.loads(out) == [{"n": 4, "value": "2/3"}]
    _, out, _ = run(
        capsys,
        "genus", "sigma", "--h", "1", "--p", "2", "--n", "4",
        "--model", "integer:1", "--format", "tsv",
    )
    assert out.splitlines() == ["n\tvalue", "4\t2/3"]


def test_genus_hecke(capsys):
    code, out, _ = run(
        capsys,
        "genus", "hecke", "--h", "1", "--n", "3", "--model", "integer:6", "--format", "tsv",
    )
    assert code == 0
    assert out.splitlines() == ["n\tvalue", "1\t6", "2\t3", "3\t2"]
    # p-power mode lists only admissible degrees
    _, out, _ = run(
        capsys,
        "genus", "hecke", "--h", "1", "--p", "2", "--n", "5",
        "--model", "integer:4", "--format", "tsv",
    )
    assert out.splitlines() == ["n\tvalue", "1\t4", "2\t2", "4\t1"]


def test_genus_lambda(capsys):
    code, out, _ = run(
        capsys, "genus", "lambda", "--h", "1", "--n", "5", "--model", "integer:4"
    )
    assert code == 0
    values = [row["value"] for row in json.loads(out)]
    assert values == ["1", "4", "6", "4", "1", "0"]


def test_genus_todd(capsys):
    code, out, _ = run(capsys, "genus", "todd", "--d", "2", "--n", "5")
    assert code == 0
    obj = json.loads(out)
    assert obj["closed_form"] is True
    assert obj["series"] == ["1", "2", "3", "4", "5", "6"]
    code, out, _ = run(capsys, "genus", "todd", "--d", "2", "--n", "5", "--format", "tsv")
    assert code == 0
    assert out.splitlines()[-1] == "closed_form\ttrue"


def test_genus_symbolic_sigma_json(capsys):
    code, out, _ = run(capsys, "genus", "sigma", "--h", "2", "--p", "2", "--n", "2")
    assert code == 0
    obj = json.loads(out)
    terms = obj[0]["value"]
    assert isinstance(terms, list)
    assert all(t["value"] == "1/2" for t in terms)
    assert len(terms) == 4  # x^2/2 plus three orbit symbols


def test_inner_product(capsys):
    code, out, _ = run(capsys, "inner-product", "--h", "1", "--l", "3")
    assert code == 0 and out.strip() == "1"
    _, out, _ = run(capsys, "inner-product", "--h", "2", "--p", "2", "--l", "2")
    assert out.strip() == "2"
    _, out, _ = run(capsys, "inner-product", "--h", "2", "--p", "3", "--l", "3")
    assert out.strip() == "3/2"


def test_model_spec_errors(capsys, tmp_path):
    code, _, err = run(capsys, "genus", "sigma", "--n", "2", "--model", "bogus")
    assert code == 2 and "model" in err
    code, _, err = run(capsys, "genus", "sigma", "--n", "2", "--model", "integer:x")
    assert code == 2
    code, _, err = run(
        capsys, "genus", "sigma", "--n", "2", "--model", f"table:{tmp_path}/nope.json"
    )
    assert code == 2
    bad = tmp_path / "bad.json"
    bad.write_text("[{]")
    code, _, err = run(capsys, "genus", "sigma", "--n", "2", "--model", f"table:{bad}")
    assert code == 2 and "JSON" in err


def test_table_model_cli(capsys, tmp_path):
    table = tmp_path / "psi.json"
    table.write_text(
        dumps([{"orbit": orbit_to_json(TransitiveOrbit.trivial(1)), "psi": "5"}])
    )
    code, out, _ = run(
        capsys, "genus", "sigma", "--h", "1", "--n", "1", "--model", f"table:{table}"
    )
    assert code == 0
    assert json.loads(out) == [{"n": 1, "value": "5"}]
    # a table missing a needed orbit is a configuration error
    code, _, err = run(
        capsys, "genus", "sigma", "--h", "1", "--n", "2", "--model", f"table:{table}"
    )
    assert code == 2 and "psi value" in err


def test_bad_usage_exits_2():
    with pytest.raises(SystemExit) as exc:
        main(["orbits", "--h", "2"])  # --size is required
    assert exc.value.code == 2
    with pytest.raises(SystemExit):
        main(["no-such-command"])


def test_invalid_mode_prime(capsys):
    code, _, err = run(capsys, "orbits", "--h", "1", "--p", "6", "--size", "6")
    assert code == 2 and "error:" in err


def test_determinism(capsys):
    args = ("classes", "--h", "2", "--p", "3", "--l", "3")
    _, first, _ = run(capsys, *args)
    _, second, _ = run(capsys, *args)
    assert first == second
