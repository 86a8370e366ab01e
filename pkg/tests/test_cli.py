"""End-to-end command-line runs."""
import json
from fractions import Fraction as F

import pytest

from lambdaprime.cli import main
from lambdaprime.graphs import gen_path, load_graph, save_graph


def test_gen_ring_and_star(tmp_path):
    ring_path = tmp_path / "ring.txt"
    assert main(["gen", "ring", "--k", "3", "--out", str(ring_path)]) == 0
    g = load_graph(ring_path)
    assert g.n == 8 and g.m == 8
    star_path = tmp_path / "star.txt"
    assert main(["gen", "star", "--n", "5", "--out", str(star_path)]) == 0
    g2 = load_graph(star_path)
    assert g2.n == 5 and g2.m == 4


def test_lp_solve_json(tmp_path, capsys):
    gpath = tmp_path / "ring.txt"
    main(["gen", "ring", "--k", "3", "--out", str(gpath)])
    capsys.readouterr()
    rc = main(["lp", "solve", "--graph", str(gpath), "--lambda", "1/8", "--json"])
    assert rc == 0
    d = json.loads(capsys.readouterr().out)
    assert d["value"] == "7/2"
    assert len(d["x"]) == 28


def test_lp_solve_summary_line(tmp_path, capsys):
    gpath = tmp_path / "star.txt"
    main(["gen", "star", "--n", "5", "--out", str(gpath)])
    capsys.readouterr()
    assert main(["lp", "solve", "--graph", str(gpath), "--lambda", "0.3"]) == 0
    out = capsys.readouterr().out
    assert "value=13/5" in out


def test_sweep_then_verify_roundtrip(tmp_path):
    gpath = tmp_path / "ring.txt"
    main(["gen", "ring", "--k", "3", "--out", str(gpath)])
    cover = tmp_path / "cover.json"
    rc = main([
        "sweep", "--graph", str(gpath), "--epsilon", "1",
        "--algo", "geometric", "--out", str(cover),
    ])
    assert rc == 0
    rc = main([
        "verify", "cover", "--cover", str(cover), "--graph", str(gpath),
        "--grid", "40",
    ])
    assert rc == 0


def test_sweep_fe_and_febe(tmp_path):
    gpath = tmp_path / "ring.txt"
    main(["gen", "ring", "--k", "3", "--out", str(gpath)])
    for algo in ("fe", "febe"):
        out = tmp_path / ("%s.json" % algo)
        rc = main([
            "sweep", "--graph", str(gpath), "--epsilon", "1/2",
            "--algo", algo, "--out", str(out),
        ])
        assert rc == 0
        assert main([
            "verify", "cover", "--cover", str(out), "--graph", str(gpath),
            "--grid", "30",
        ]) == 0


def test_sweep_rejects_zero_epsilon(tmp_path):
    gpath = tmp_path / "star.txt"
    main(["gen", "star", "--n", "5", "--out", str(gpath)])
    rc = main([
        "sweep", "--graph", str(gpath), "--epsilon", "0", "--algo", "fe",
        "--out", str(tmp_path / "x.json"),
    ])
    assert rc == 3


def test_sweep_rejects_scaled_objective_for_fe(tmp_path):
    gpath = tmp_path / "star.txt"
    main(["gen", "star", "--n", "5", "--out", str(gpath)])
    rc = main([
        "sweep", "--graph", str(gpath), "--epsilon", "1", "--algo", "febe",
        "--objective", "lamcc", "--out", str(tmp_path / "x.json"),
    ])
    assert rc == 3


def test_round_pipeline(tmp_path):
    gpath = tmp_path / "star.txt"
    main(["gen", "star", "--n", "5", "--out", str(gpath)])
    cover = tmp_path / "cover.json"
    main(["sweep", "--graph", str(gpath), "--epsilon", "1", "--out", str(cover)])
    out = tmp_path / "clusterings.json"
    rc = main(["round", "--cover", str(cover), "--graph", str(gpath),
               "--out", str(out)])
    assert rc == 0
    rows = json.loads(out.read_text())
    assert len(rows) == len(json.loads(cover.read_text())["members"])
    for row in rows:
        assert sorted(set(row["assignment"]))[0] == 0
        assert F(row["score"]) >= F(row["lp_value"])


def test_round_requires_vectors(tmp_path):
    gpath = tmp_path / "star.txt"
    main(["gen", "star", "--n", "5", "--out", str(gpath)])
    cover = tmp_path / "cover.json"
    main(["sweep", "--graph", str(gpath), "--epsilon", "1", "--out", str(cover),
          "--no-vectors"])
    rc = main(["round", "--cover", str(cover), "--graph", str(gpath),
               "--out", str(tmp_path / "c.json")])
    assert rc == 3


def test_verify_cover_detects_tampering(tmp_path):
    gpath = tmp_path / "ring.txt"
    main(["gen", "ring", "--k", "3", "--out", str(gpath)])
    cover = tmp_path / "cover.json"
    main(["sweep", "--graph", str(gpath), "--epsilon", "1", "--out", str(cover)])
    d = json.loads(cover.read_text())
    d["members"] = d["members"][:1]
    cover.write_text(json.dumps(d))
    rc = main(["verify", "cover", "--cover", str(cover), "--graph", str(gpath),
               "--grid", "20"])
    assert rc == 4


def test_curve_exact_outputs(tmp_path):
    gpath = tmp_path / "star.txt"
    main(["gen", "star", "--n", "5", "--out", str(gpath)])
    out = tmp_path / "curve.csv"
    rc = main(["curve", "exact", "--graph", str(gpath), "--out", str(out),
               "--grid", "10"])
    assert rc == 0
    lines = out.read_text().splitlines()
    assert lines[0] == "lambda_lo,lambda_hi,P,N"
    assert len(lines) == 1 + 4  # star n=5: exactly n-1 optimal clusterings
    fam = json.loads((tmp_path / "curve.family.json").read_text())
    assert len(fam) == 4
    assert all(len(a) == 5 for a in fam)
    samples = (tmp_path / "curve.samples.csv").read_text().splitlines()
    assert samples[0] == "lambda,value"
    assert len(samples) >= 12


def test_curve_exact_cap(tmp_path):
    gpath = tmp_path / "big.txt"
    save_graph(gen_path(13), gpath)
    rc = main(["curve", "exact", "--graph", str(gpath),
               "--out", str(tmp_path / "c.csv")])
    assert rc == 3


def test_verify_ring_sandwich():
    assert main(["verify", "ring", "--k", "3", "--grid", "50"]) == 0


def test_bounds_ring(capsys):
    assert main(["bounds", "ring", "--k", "3", "--p", "1.1"]) == 0
    out = capsys.readouterr().out
    assert "B = 1" in out


def test_missing_graph_file(tmp_path):
    rc = main(["lp", "solve", "--graph", str(tmp_path / "nope.txt"),
               "--lambda", "1/8"])
    assert rc == 3


def test_bad_rational_is_parse_error(tmp_path):
    with pytest.raises(SystemExit) as exc:
        main(["sweep", "--graph", "g", "--epsilon", "x/y", "--out", "o"])
    assert exc.value.code == 2


def test_unknown_command_is_parse_error():
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2
