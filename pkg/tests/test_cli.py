import json

from veerlab import cli

W25 = "1 2 1 1 2 1 -1 -1 -1 -1 2 -1 2 -1"


def run(capsys, argv):
    code = cli.main(argv)
    captured = capsys.readouterr()
    payload = json.loads(captured.out) if captured.out.strip() else None
    return code, payload, captured.err


def test_invariants_example(capsys):
    code, report, _ = run(capsys, ["invariants", "-n", "3", W25])
    assert code == 0
    assert report["lk"] == 2
    assert report["rot"] == "1/2"
    assert report["phi"] == -4
    assert report["quasipositive"]["value"] == "no"
    assert report["right_veering"]["value"] == "yes"
    assert report["signature"]["agree"]
    assert all(report["identity_checks"].values())


def test_invariants_identity(capsys):
    code, report, _ = run(capsys, ["invariants", "-n", "3", ""])
    assert code == 0
    assert report["lk"] == 0 and report["phi"] == 0 and report["rot"] == "0"
    assert report["signature"] == {"seifert": 0, "meyer": 0, "agree": True}


def test_invariants_parse_error(capsys):
    code, payload, err = run(capsys, ["invariants", "-n", "3", "0"])
    assert code == 1 and payload is None
    assert "0" in err


def test_signature_command(capsys):
    code, report, _ = run(capsys, ["signature", "-n", "3", "1 1 1"])
    assert code == 0
    assert report == {"seifert": -2, "meyer": -2, "agree": True}


def test_maslov_command(capsys):
    code, report, _ = run(capsys, ["maslov", "-n", "3", "1"])
    assert code == 0
    assert report == {"mu": "1/2"}


def test_meyer_command(capsys):
    code, report, _ = run(capsys, ["meyer", "-n", "3", "1", "1"])
    assert code == 0
    assert report == {"meyer": 1}


def test_farey_path_command(capsys):
    code, report, _ = run(capsys, ["farey-path", "-n", "3", W25, "--edges"])
    assert code == 0
    assert report["turns"] == "LLLLRLRL"
    assert report["rademacher_turns"] == -4
    assert report["edges"][0] == ["0", "inf"]
    assert len(report["edges"]) == len(report["turns"]) + 1


def test_farey_path_matrix_input(capsys):
    code, report, _ = run(capsys, ["farey-path", "--matrix", "1 -1; 1 0"])
    assert code == 0
    assert report["turns"] == "R"


def test_qp_cert_command(capsys):
    code, report, _ = run(capsys, ["qp-cert", "-n", "3", W25])
    assert code == 0
    assert report["verdict"]["value"] == "no"
    assert report["verdict"]["certificate"]["W"] == "LLLLRLRL"


def test_sweep_command_deterministic(capsys):
    code, first, _ = run(capsys, ["sweep", "--suite", "theorem-lk", "--count", "200", "--seed", "7"])
    assert code == 0 and first["failures"] == 0
    code, second, _ = run(capsys, ["sweep", "--suite", "theorem-lk", "--count", "200", "--seed", "7"])
    assert second == first


def test_usage_error_exits_one(capsys):
    code, payload, err = run(capsys, ["sweep", "--suite", "nonsense"])
    assert code == 1 and payload is None
    assert "invalid choice" in err


def test_sweep_env_seed(capsys, monkeypatch):
    monkeypatch.setenv("VEERLAB_SEED", "12345")
    code, report, _ = run(capsys, ["sweep", "--suite", "rademacher", "--count", "50", "--seed", "7"])
    assert code == 0
    assert report["seed"] == 12345
