import json

from ttone.cli import run
from ttone.coloring import Coloring
from ttone.graphs import gen_cycle, gen_grid, read_edge_list, write_edge_list


def invoke(argv, capsys, stdin=None, monkeypatch=None):
    if stdin is not None:
        import io
        import sys
        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = run(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_gen_families(tmp_path, capsys):
    code, out, _ = invoke(["gen", "--cycle", "5"], capsys)
    assert code == 0
    assert read_edge_list(out) == gen_cycle(5)
    code, out, _ = invoke(["gen", "--grid", "2", "3"], capsys)
    assert code == 0 and out.splitlines()[0] == "6 7"
    dest = tmp_path / "g.el"
    code, _, _ = invoke(["gen", "--star", "4", "-o", str(dest)], capsys)
    assert code == 0 and dest.read_text().splitlines()[0] == "5 4"
    code, out, _ = invoke(["gen", "--random", "apollonian", "--size", "5",
                           "--seed", "9"], capsys)
    assert code == 0 and read_edge_list(out).n == 8


def test_gen_seed_determinism(capsys):
    a = invoke(["gen", "--random", "subdivided", "--seed", "4"], capsys)
    b = invoke(["gen", "--random", "subdivided", "--seed", "4"], capsys)
    assert a == b


def test_color_cycle_pipeline(capsys, monkeypatch):
    graph_text = write_edge_list(gen_cycle(13))
    code, out, _ = invoke(["color", "--family", "cycle", "--t", "3"],
                          capsys, stdin=graph_text, monkeypatch=monkeypatch)
    assert code == 0
    col = Coloring.from_json(out)
    assert col.t == 3 and len(col.colors_used()) == 9


def test_color_output_byte_identical(capsys, monkeypatch):
    graph_text = write_edge_list(gen_grid(3, 3))
    runs = [invoke(["color", "--family", "grid", "--t", "4"], capsys,
                   stdin=graph_text, monkeypatch=monkeypatch)
            for _ in range(2)]
    assert runs[0] == runs[1] and runs[0][0] == 0


def test_round_trip_all_families(tmp_path, capsys, monkeypatch):
    cases = [
        (["gen", "--path", "9"], "path", [2, 3, 4, 5]),
        (["gen", "--cycle", "11"], "cycle", [2, 3, 4, 5]),
        (["gen", "--grid", "3", "5"], "grid", [2, 3, 4, 5]),
        (["gen", "--fat-triangle", "4"], "fat-triangle", [2]),
        (["gen", "--random", "subdivided", "--seed", "1"], "sparse", [2]),
        (["gen", "--random", "outerplanar", "--size", "10", "--seed", "2"],
         "outerplanar", [2]),
        (["gen", "--random", "apollonian", "--size", "12", "--seed", "3"],
         "planar", [2]),
    ]
    for gen_argv, family, tones in cases:
        gfile = tmp_path / f"{family}.el"
        code, _, _ = invoke(gen_argv + ["-o", str(gfile)], capsys)
        assert code == 0
        for t in tones:
            cfile = tmp_path / f"{family}.{t}.json"
            code, _, err = invoke(
                ["color", "--family", family, "--t", str(t),
                 "--in", str(gfile), "-o", str(cfile)], capsys)
            assert code == 0, (family, t, err)
            code, out, _ = invoke(
                ["verify", "--graph", str(gfile), "--in", str(cfile)], capsys)
            assert code == 0 and json.loads(out) == {"ok": True}, (family, t)


def test_verify_detects_tampering(tmp_path, capsys):
    gfile = tmp_path / "g.el"
    cfile = tmp_path / "c.json"
    invoke(["gen", "--grid", "3", "3", "-o", str(gfile)], capsys)
    invoke(["color", "--family", "grid", "--t", "3", "--in", str(gfile),
            "-o", str(cfile)], capsys)
    col = Coloring.from_json(cfile.read_text())
    col.labels[1] = col.labels[0]   # copy a label onto a neighbor
    cfile.write_text(col.to_json())
    code, out, _ = invoke(["verify", "--graph", str(gfile), "--in", str(cfile)],
                          capsys)
    assert code == 1
    lines = out.strip().splitlines()
    assert lines and all("shared" in ln for ln in lines)


def test_verify_structural_error(tmp_path, capsys):
    gfile = tmp_path / "g.el"
    invoke(["gen", "--path", "2", "-o", str(gfile)], capsys)
    cfile = gfile.with_suffix(".json")
    cfile.write_text(json.dumps(
        {"t": 2, "k": 3, "labels": {"0": [1, 9], "1": [1, 2]}}))
    code, _, err = invoke(["verify", "--graph", str(gfile), "--in", str(cfile)],
                          capsys)
    assert code == 2


def test_tau_verb(tmp_path, capsys):
    gfile = tmp_path / "c4.el"
    invoke(["gen", "--cycle", "4", "-o", str(gfile)], capsys)
    wfile = tmp_path / "w.json"
    code, out, _ = invoke(["tau", "--t", "4", "--in", str(gfile),
                           "--emit-witness", str(wfile)], capsys)
    assert code == 0
    assert json.loads(out)["value"] == 14
    witness = Coloring.from_json(wfile.read_text())
    assert len(witness.colors_used()) == 14


def test_tau_budget_exhaustion(tmp_path, capsys):
    gfile = tmp_path / "c9.el"
    invoke(["gen", "--cycle", "9", "-o", str(gfile)], capsys)
    code, out, _ = invoke(["tau", "--t", "4", "--in", str(gfile),
                           "--max-nodes", "10"], capsys)
    assert code == 3
    assert json.loads(out)["status"] == "timeout"


def test_bounds_verb(tmp_path, capsys):
    gfile = tmp_path / "g.el"
    invoke(["gen", "--grid", "4", "4", "-o", str(gfile)], capsys)
    code, out, _ = invoke(["bounds", "--t", "3", "--in", str(gfile)], capsys)
    assert code == 0
    certs = [json.loads(ln) for ln in out.strip().splitlines()]
    assert {"C4Subgraph", "PathFormula"} <= {c["kind"] for c in certs}
    assert max(c["bound"] for c in certs) == 10


def test_mad_verb(tmp_path, capsys):
    gfile = tmp_path / "g.el"
    invoke(["gen", "--star", "4", "-o", str(gfile)], capsys)
    code, out, _ = invoke(["mad", "--in", str(gfile)], capsys)
    assert code == 0
    payload = json.loads(out)
    assert payload["reduced"] == [8, 5]


def test_class_precondition_exit_code(tmp_path, capsys):
    gfile = tmp_path / "k4.el"
    gfile.write_text("4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n")
    code, _, err = invoke(["color", "--family", "outerplanar", "--t", "2",
                           "--in", str(gfile)], capsys)
    assert code == 4 and "outerplanar" in err


def test_auto_family_dispatch(tmp_path, capsys):
    gfile = tmp_path / "g.el"
    invoke(["gen", "--grid", "3", "4", "-o", str(gfile)], capsys)
    code, out, _ = invoke(["color", "--family", "auto", "--t", "3",
                           "--in", str(gfile)], capsys)
    assert code == 0 and Coloring.from_json(out).k == 10
    k4 = tmp_path / "k4.el"
    k4.write_text("4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n")
    code, out, _ = invoke(["color", "--family", "auto", "--t", "2",
                           "--in", str(k4)], capsys)
    assert code == 0   # dense input falls through to the planar colorer
    code, _, _ = invoke(["color", "--family", "auto", "--t", "4",
                         "--in", str(k4)], capsys)
    assert code == 4   # no construction for tone 4 on this graph


def test_tau_jobs_flag(tmp_path, capsys):
    gfile = tmp_path / "c6.el"
    invoke(["gen", "--cycle", "6", "-o", str(gfile)], capsys)
    one = invoke(["tau", "--t", "3", "--in", str(gfile), "--jobs", "1"], capsys)
    two = invoke(["tau", "--t", "3", "--in", str(gfile), "--jobs", "2"], capsys)
    assert one == two and json.loads(one[1])["value"] == 8


def test_usage_errors(tmp_path, capsys, monkeypatch):
    code, _, _ = invoke(["color", "--family", "nope"], capsys)
    assert code == 2
    code, _, err = invoke(["color", "--family", "cycle", "--t", "3"],
                          capsys, stdin="4 3\n0 1\n1 2\n2 3\n",
                          monkeypatch=monkeypatch)
    assert code == 2 and "not a cycle" in err
    code, _, _ = invoke(["nonsense"], capsys)
    assert code == 2
