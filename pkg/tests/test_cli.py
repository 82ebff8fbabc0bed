import io
import json
import subprocess
import sys

import pytest

from alexinv.cli import main, run
from corpus import ARRANGEMENTS


def call(argv, stdin=None, monkeypatch=None, capsys=None):
    if stdin is not None:
        monkeypatch.setattr(sys, "stdin", io.StringIO(json.dumps(stdin)))
    code = main(argv)
    out = capsys.readouterr().out
    return code, json.loads(out) if out.strip() else None, out


@pytest.fixture
def cli(monkeypatch, capsys):
    return lambda argv, stdin=None: call(argv, stdin, monkeypatch, capsys)


def test_spectrum(cli):
    code, doc, _ = cli(["spectrum", "--weights", "1/2,1/3"])
    assert code == 0
    assert doc["spectrum"] == [["-1/6", 1], ["1/6", 1]]
    assert doc["schema"] == "alexinv/1"


def test_divisibility(cli):
    code, doc, _ = cli(["divisibility", "--candidate", "t^2-t+1", "--locals", "cusp:6"])
    assert code == 0 and doc["divides"] is True
    assert doc["certificates"]["local"]["cyclotomic"] == {"6": 5}
    code, doc, _ = cli(["divisibility", "--candidate", "t^2+1", "--locals", "cusp:6"])
    assert code == 0 and doc["divides"] is False


def test_lonne_bp_is_b3(cli):
    code, doc, _ = cli(["lonne-bp", "--n", "1", "--d", "3"])
    assert code == 0
    assert doc["presentation"]["generators"] == ["t1", "t2"]
    assert len(doc["presentation"]["relators"]) == 1


def test_lonne_disc(cli):
    code, doc, _ = cli(["lonne-disc", "--n", "1", "--d", "4"])
    assert doc["abelianization"] == {"free_rank": 0, "torsion": [6]}


def test_local_alex_and_catalog(cli):
    code, doc, _ = cli(["local-alex", "--name", "cusp"])
    assert doc["polynomial"]["coeffs"] == [1, -1, 1]
    code, doc, _ = cli(["local-alex", "--weights", "1/2,1/2"])
    assert doc["polynomial"]["text"] == "t - 1" and doc["t_minus_1_exponent"] == 1
    code, doc, _ = cli(["catalog"])
    assert {e["name"] for e in doc["entries"]} >= {"node", "cusp", "tacnode", "smooth"}
    assert all(e["provenance"] for e in doc["entries"])


def test_qadj_and_lct(cli):
    code, doc, _ = cli(["qadj", "--name", "cusp"])
    assert doc["faces"] == [{"a": ["1"], "b": "1/6"}]
    assert len(doc["regions"]) == 2
    code, doc, _ = cli(["lct", "--name", "cusp"])
    assert doc["threshold"] == "5/6"
    res = {"branches": 2, "exceptional": [{"a": [1, 1], "c": 1}],
           "test_germs": [{"label": "1", "e": [0]}]}
    code, doc, _ = cli(["lct"], res)
    assert code == 0 and doc["polytope"]["vertices"] == [["0", "0"], ["0", "1"], ["1", "0"], ["1", "1"]]


def test_arrangement_then_charvar_round_trip(cli):
    lines = {"lines": [[str(x) for x in ln] for ln in ARRANGEMENTS["concurrent3"][0]]}
    code, doc, _ = cli(["arrangement", "--affine"], lines)
    assert code == 0
    code2, doc2, _ = cli(["charvar", "--depth", "2"], doc["presentation"])
    assert code2 == 0
    code3, doc3, _ = cli(["vk", "--affine"], doc["monodromy"])
    assert doc3["presentation"] == doc["presentation"]


def test_depth_and_covers(cli):
    modular = {"generators": ["a", "b"], "relators": [[[0, 2]], [[1, 3]]]}
    code, doc, _ = cli(["depth", "--character", "1/6"], {"presentation": modular})
    assert doc["depth"] == 1
    free2 = {"generators": 2, "relators": []}
    code, doc, _ = cli(["cover-rank"], {"presentation": free2, "orders": [2, 2],
                                       "images": [[1, 0], [0, 1]]})
    assert doc["b1"] == 5
    code, doc, _ = cli(["cover-b1"], {"orders": [6], "meridian_images": [[1]],
                                     "presentation": modular, "generator_images": [[3], [2]]})
    assert doc["b1"] == 2
    table = [[[f"{k}/6"], 1 if k in (1, 5) else 0] for k in range(1, 6)]
    code, doc, _ = cli(["cover-b1"], {"orders": [6], "meridian_images": [[1]], "depths": table})
    assert doc["b1"] == 2


def test_superabundance_and_global(cli):
    pts = [["0", "0", "1"], ["1", "1", "1"], ["1", "-1", "1"], ["4", "2", "1"],
           ["4", "-2", "1"], ["9", "3", "1"]]
    code, doc, _ = cli(["superabundance"], {"degree": 2, "points": pts})
    assert doc["superabundance"] == 1
    code, doc, _ = cli(["global-alex", "--degree", "6", "--faces", "1/6:1"])
    assert doc["polynomial"]["text"] == "t^2 - t + 1"
    code, doc, _ = cli(["building-data", "--degrees", "6", "--order", "6", "--weights", "1"])
    assert doc["line_bundle_degree"] == 1


def test_milnor(cli):
    code, doc, _ = cli(["milnor", "--lines", "9", "--multiplicities", "3,3,3,3"])
    assert doc["base_exponent"] == 8 and doc["bounds"] == {"3": 4}


def test_exit_codes(cli):
    assert cli(["spectrum", "--weights", "1/2,abc"])[0] == 2
    assert cli(["spectrum", "--weights", "2/5,1/3"])[0] == 1
    assert cli(["qadj", "--name", "nonsense"])[0] == 1
    assert cli(["superabundance"], {"degree": 2})[0] == 2
    assert cli(["superabundance"], {"degree": 2, "points": [[1, 1, 1], [2, 2, 2]]})[0] == 1
    assert cli(["global-alex", "--degree", "5", "--faces", "1/6:1"])[0] == 1
    assert run(["no-such-command"]).exit_code == 2


def test_malformed_json(monkeypatch, capsys):
    monkeypatch.setattr(sys, "stdin", io.StringIO("{not json"))
    assert main(["charvar"]) == 2
    doc = json.loads(capsys.readouterr().out)
    assert doc["status"] == "error"


def test_output_file_and_pretty(tmp_path, cli):
    out = tmp_path / "o.json"
    assert cli(["spectrum", "--weights", "1/2,1/3", "--output", str(out), "--pretty"])[0] == 0
    text = out.read_text()
    assert "\n  " in text and json.loads(text)["spectrum"][0] == ["-1/6", 1]


def test_input_file(tmp_path, cli):
    f = tmp_path / "in.json"
    f.write_text(json.dumps({"lines": [["1", "0", "0"], ["0", "1", "0"], ["1", "1", "1"]]}))
    code, doc, _ = cli(["arrangement", "--input", str(f)])
    assert code == 0 and doc["abelianization"]["free_rank"] == 2


def test_byte_identical_output():
    argv = [sys.executable, "-m", "alexinv.cli", "qadj", "--name", "torus_p_q?p=3&q=4"]
    a = subprocess.run(argv, capture_output=True, text=True, check=True).stdout
    b = subprocess.run(argv, capture_output=True, text=True, check=True).stdout
    assert a == b and json.loads(a)["status"] == "ok"


def test_console_script():
    r = subprocess.run(["alexinv", "spectrum", "--weights", "1/2,1/3"],
                       capture_output=True, text=True)
    assert r.returncode == 0
    assert json.loads(r.stdout)["spectrum"] == [["-1/6", 1], ["1/6", 1]]
