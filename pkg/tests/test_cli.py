import json
from importlib import resources

import jsonschema
import pytest

from eccspectra.cli import main
from eccspectra.graphs import canonical_code, parse_edge_list

SCHEMA = json.loads(resources.files("eccspectra").joinpath("report_schema.json").read_text())


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_formula_energy_t3(capsys):
    code, out, _ = run(capsys, "formula", "energy-t3", "--n", "7", "--a", "0", "--b", "3")
    assert code == 0 and out == "13.4164078650\n"


def test_formula_precision(capsys):
    _, out, _ = run(capsys, "formula", "energy-t3", "--n", "7", "--a", "0", "--b", "3", "--precision", "3")
    assert out == "13.416\n"


def test_formula_json(capsys):
    code, out, _ = run(capsys, "formula", "bounds-diam3", "--n", "6")
    d = json.loads(out)
    assert code == 0 and set(d) == {"xi1_max", "xi1_min", "xi2_min", "xi2_max"}


def test_spectrum_p4_complement(capsys):
    code, out, _ = run(capsys, "spectrum", "--family", "path", "--n", "4")
    d = json.loads(out)
    assert code == 0
    assert [round(x, 8) for x in d["values"]] == [4, 1, -1, -4]


def test_spectrum_show_matrix(capsys):
    _, out, _ = run(capsys, "spectrum", "--family", "path", "--n", "3", "--of", "tree", "--show-matrix")
    assert out.startswith("0 1 2\n1 0 1\n2 1 0\n")


def test_energy_pruefer(capsys):
    code, out, _ = run(capsys, "energy", "--family", "pruefer", "--seq", "1,2,3")
    assert code == 0 and float(out) == pytest.approx(4 * (1 + 3**0.5), abs=1e-9)


@pytest.mark.parametrize(
    "argv",
    [
        ["formula", "energy-t3", "--n", "7", "--a", "2", "--b", "3"],
        ["formula", "energy-t3", "--n", "7"],
        ["formula", "path-complement-energy", "--n", "4"],
        ["spectrum", "--family", "star", "--n", "5"],
        ["verify", "--id", "SPEC_SYM", "--n", "4", "--n-max", "11"],
        ["verify", "--n", "4"],
        ["extremal", "--stat", "xi1-complement", "--n", "3"],
    ],
)
def test_usage_errors_exit_2(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2 and "error" in err


def test_argparse_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as e:
        main(["no-such-command"])
    assert e.value.code == 2
    with pytest.raises(SystemExit) as e:
        main(["formula", "energy-t3", "--precision", "0"])
    assert e.value.code == 2


def test_enumerate_round_trip(capsys):
    code, out, _ = run(capsys, "enumerate", "--n", "7")
    records = [r for r in out.split("\n\n") if r.strip()]
    assert code == 0 and len(records) == 11
    for rec in records:
        header, body = rec.split("\n", 1)
        assert canonical_code(parse_edge_list(body, 7)) == header[2:]


def test_enumerate_codes_connected_complement(capsys):
    _, out, _ = run(capsys, "enumerate", "--n", "6", "--connected-complement", "--format", "codes")
    assert len(out.splitlines()) == 5


def test_extremal_csv(capsys):
    _, out, _ = run(capsys, "extremal", "--stat", "energy-complement", "--n", "6", "--csv")
    lines = out.splitlines()
    assert lines[0] == "n,canonical_code,statistic,value,rank"
    assert len(lines) == 6 and lines[-1].endswith(",5")


def test_verify_schema_and_determinism(capsys, tmp_path):
    args = ["verify", "--all", "--n", "4", "--n-max", "7"]
    code1, out1, err = run(capsys, *args)
    code2, out2, _ = run(capsys, *args)
    assert code1 == code2 == 0
    assert out1 == out2
    doc = json.loads(out1)
    jsonschema.validate(doc, SCHEMA)
    assert doc["summary"]["fails"] == []
    assert "SPEC_SYM" in err
    target = tmp_path / "r.json"
    run(capsys, *args, "--out", str(target))
    assert target.read_text() == out1


def test_verify_timings(capsys):
    _, out, _ = run(capsys, "verify", "--id", "SPEC_SYM", "--n", "4", "--n-max", "5", "--timings")
    doc = json.loads(out)
    jsonschema.validate(doc, SCHEMA)
    assert "wall_time" in doc["reports"][0]


def test_table_check(capsys):
    code, out, _ = run(capsys, "table-check")
    doc = json.loads(out)
    assert code == 0 and doc["verdict"] == "informational"
    jsonschema.validate({"summary": {"n_range": [5, 6], "holds": [], "fails": [], "informational": []},
                         "reports": [doc]}, SCHEMA)


def test_edges_from_file(capsys, tmp_path):
    f = tmp_path / "t.txt"
    f.write_text("# chair\n0 1\n1 2\n2 3\n2 4\n")
    code, out, _ = run(capsys, "energy", "--family", "edges", "--edges", str(f))
    assert code == 0 and float(out) == pytest.approx(2 * (21 + 8 * 2**0.5) ** 0.5, abs=1e-9)
