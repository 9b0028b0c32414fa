import math

import pytest

from saw_lab.cli import main


def run(capsys, argv):
    code = main(argv)
    return code, capsys.readouterr().out


def test_bounds_stdout(capsys):
    code, out = run(capsys, ["bounds"])
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0].split(",")[0] == "name"
    values = {row.split(",")[0]: float(row.split(",")[1]) for row in lines[1:]}
    assert values["g3_lower"] == pytest.approx(1.5293547996, abs=1e-6)
    assert values["g4_lower"] == pytest.approx(12 ** (1 / 6), abs=1e-12)


def test_bounds_csv_file(tmp_path, capsys):
    path = tmp_path / "b.csv"
    code, _ = run(capsys, ["bounds", "--csv", str(path)])
    assert code == 0
    assert path.read_text().startswith("name,")


def test_bad_family_exits_2(capsys):
    assert main(["count", "--family", "nope", "--steps", "4"]) == 2


def test_missing_steps_exits_2(capsys):
    assert main(["count", "--family", "tree"]) == 2


def test_bad_tv_exits_2(capsys):
    assert main(["tiling", "--type", "7,7"]) == 2


def test_count_deterministic(tmp_path, capsys):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    assert main(["count", "--family", "tree", "--steps", "8",
                 "--csv", str(a)]) == 0
    assert main(["count", "--family", "tree", "--steps", "8",
                 "--threads", "2", "--csv", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()
    row1 = a.read_text().splitlines()[2].split(",")
    assert row1[:2] == ["1", "3"]


def test_estimate_mu_tree(capsys):
    code, out = run(capsys, ["estimate-mu", "--family", "tree",
                             "--steps", "10"])
    assert code == 0
    assert "2" in out


def test_verify_injection(capsys):
    code, out = run(capsys, ["verify-injection", "--family", "hexagonal",
                             "--steps", "8"])
    assert code == 0
    assert "PASS" in out


def test_tiling_l95(capsys):
    code, out = run(capsys, ["tiling", "--type", "7,7,7", "--radius", "7",
                             "--check-l95"])
    assert code == 0


def test_grigorchuk_z_check(capsys):
    code, out = run(capsys, ["grigorchuk", "--z-check"])
    assert code == 0
    phi = (1 + math.sqrt(5)) / 2
    assert format(1.0, ".15g") in out or "1" in out


def test_config_file(tmp_path, capsys):
    cfg = tmp_path / "run.cfg"
    cfg.write_text("[run]\nsteps = 6\n")
    out_csv = tmp_path / "c.csv"
    assert main(["count", "--family", "tree", "--config", str(cfg),
                 "--csv", str(out_csv)]) == 0
    assert out_csv.read_text().splitlines()[1].split(",")[1] == "1"


def test_config_unknown_key(tmp_path, capsys):
    cfg = tmp_path / "run.cfg"
    cfg.write_text("familly = tree\n")
    assert main(["count", "--family", "tree", "--config", str(cfg),
                 "--steps", "4"]) == 2
