import io
import json

from wordrep import Word, cube, graph_from_edges_text, represents
from wordrep.cli import main


def run(capsys, argv, stdin=None, monkeypatch=None):
    if stdin is not None:
        monkeypatch.setattr("sys.stdin", io.StringIO(stdin))
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_gen_cube_edges(capsys):
    code, out, _ = run(capsys, ["gen", "cube", "-k", "3"])
    assert code == 0
    assert graph_from_edges_text(out) == cube(3)
    assert len([ln for ln in out.splitlines() if ln]) == 12


def test_gen_json_format(capsys):
    code, out, _ = run(capsys, ["gen", "complete", "-n", "3", "--format", "json"])
    assert code == 0
    payload = json.loads(out)
    assert payload["nodes"] == ["1", "2", "3"]
    assert len(payload["edges"]) == 3


def test_gen_bad_parameter_exits_2(capsys):
    code, _, err = run(capsys, ["gen", "cycle", "-n", "2"])
    assert code == 2 and "n >= 3" in err


def test_gen_usage_error_exits_2(capsys):
    assert main(["gen", "hexagon", "-n", "6"]) == 2
    capsys.readouterr()


def test_gen_product(capsys, tmp_path):
    a = tmp_path / "a.edges"
    b = tmp_path / "b.edges"
    code, out, _ = run(capsys, ["gen", "complete", "-n", "3"])
    a.write_text(out)
    code, out, _ = run(capsys, ["gen", "complete", "-n", "2"])
    b.write_text(out)
    code, out, _ = run(capsys, ["gen", "product", str(a), str(b)])
    assert code == 0
    g = graph_from_edges_text(out)
    assert len(g.nodes) == 6 and len(g.edges) == 9
    assert "1@1" in g.nodes


def test_construct_cube_and_verify(capsys):
    code, out, _ = run(capsys, ["construct", "cube", "-k", "2", "--verify"])
    assert code == 0
    assert out.strip() == "11 00 01 10 00 11 10 01"
    code, out, _ = run(capsys, ["construct", "cube", "-k", "4", "--verify"])
    assert code == 0
    word = Word(out)
    assert len(word) == 64 and represents(word, cube(4))


def test_construct_complete(capsys):
    code, out, _ = run(capsys, ["construct", "complete", "-n", "3", "-k", "2"])
    assert code == 0 and out.strip() == "1 2 3 1 2 3"


def test_construct_product_k2_from_stdin(capsys, monkeypatch):
    code, out, _ = run(
        capsys, ["construct", "product-k2", "--verify"], stdin="1 2 1 2\n", monkeypatch=monkeypatch
    )
    assert code == 0
    assert out.strip() == "1@1 2@1 1@2 1@1 2@2 2@1 1@2 2@2 1@1 1@2 2@1 2@2"


def test_construct_product_rejects_1_uniform_input(capsys, monkeypatch):
    code, _, err = run(
        capsys, ["construct", "product-k2"], stdin="1 2\n", monkeypatch=monkeypatch
    )
    assert code == 2 and "k > 1" in err


def test_construct_product_kn_round_trip(capsys, monkeypatch, tmp_path):
    code, out, _ = run(
        capsys, ["construct", "product-kn", "-n", "3", "--verify"],
        stdin="1 2 1 2\n", monkeypatch=monkeypatch,
    )
    assert code == 0
    word_file = tmp_path / "w.txt"
    word_file.write_text(out)
    k2 = tmp_path / "k2.edges"
    k2.write_text(run(capsys, ["gen", "complete", "-n", "2"])[1])
    k3 = tmp_path / "k3.edges"
    k3.write_text(run(capsys, ["gen", "complete", "-n", "3"])[1])
    graph_file = tmp_path / "g.edges"
    graph_file.write_text(run(capsys, ["gen", "product", str(k2), str(k3)])[1])
    assert run(capsys, ["check", str(word_file), str(graph_file)])[0] == 0


def test_construct_check_round_trips(capsys, tmp_path):
    # every construct subcommand piped into check against its expected graph
    cases = [
        (["construct", "cube", "-k", "3"], ["gen", "cube", "-k", "3"]),
        (["construct", "prism", "-n", "4"], ["gen", "prism", "-n", "4"]),
        (["construct", "complete", "-n", "4", "-k", "2"], ["gen", "complete", "-n", "4"]),
    ]
    for i, (construct_argv, gen_argv) in enumerate(cases):
        word_file = tmp_path / f"w{i}.txt"
        word_file.write_text(run(capsys, construct_argv)[1])
        graph_file = tmp_path / f"g{i}.edges"
        graph_file.write_text(run(capsys, gen_argv)[1])
        assert run(capsys, ["check", str(word_file), str(graph_file)])[0] == 0


def test_check_exit_codes(capsys, tmp_path):
    word_file = tmp_path / "w.txt"
    word_file.write_text("3 1 4 2 1 3 2 4\n")
    code, out, _ = run(capsys, ["gen", "cycle", "-n", "4"])
    cycle_file = tmp_path / "c4.edges"
    cycle_file.write_text(out)
    code, out, _ = run(capsys, ["gen", "complete", "-n", "4"])
    k4_file = tmp_path / "k4.edges"
    k4_file.write_text(out)

    assert run(capsys, ["check", str(word_file), str(cycle_file)])[0] == 0
    assert run(capsys, ["check", str(word_file), str(k4_file)])[0] == 1

    code, out, _ = run(capsys, ["check", str(word_file), str(k4_file), "--explain"])
    assert code == 1
    assert "{1,3}" in out and "3 1 1 3" in out


def test_check_empty_word_input_exits_2(capsys, monkeypatch, tmp_path):
    graph_file = tmp_path / "g.edges"
    graph_file.write_text("1 2\n")
    code, _, err = run(capsys, ["check", "-", str(graph_file)], stdin="# nothing\n",
                       monkeypatch=monkeypatch)
    assert code == 2 and "no words" in err


def test_check_words_from_comments_and_multiple_lines(capsys, monkeypatch, tmp_path):
    graph_file = tmp_path / "g.edges"
    graph_file.write_text("# the 4-cycle\n1 2\n2 3\n3 4\n1 4\n")
    # the second word is the reversal of the first; reversal preserves the graph
    words = "# two representants of the same graph\n3 1 4 2 1 3 2 4\n4 2 3 1 2 4 1 3\n"
    code, _, _ = run(capsys, ["check", "-", str(graph_file)], stdin=words,
                     monkeypatch=monkeypatch)
    assert code == 0


def test_check_reads_json_graphs(capsys, monkeypatch, tmp_path):
    graph_file = tmp_path / "g.json"
    graph_file.write_text('{"nodes": ["1", "2"], "edges": [["1", "2"]]}\n')
    code, _, _ = run(capsys, ["check", "-", str(graph_file)], stdin="1 2\n",
                     monkeypatch=monkeypatch)
    assert code == 0


def test_repnum_finds_three_prism_number(capsys, tmp_path):
    code, out, _ = run(capsys, ["gen", "prism", "-n", "3"])
    graph_file = tmp_path / "prism.edges"
    graph_file.write_text(out)
    code, out, _ = run(capsys, ["repnum", str(graph_file), "--max-k", "3"])
    assert code == 0
    lines = out.strip().splitlines()
    outcomes = [json.loads(ln) for ln in lines if ln.startswith("{")]
    assert [o["result"] for o in outcomes] == ["exhausted", "exhausted", "witness"]
    assert all(o["millis"] == 0 for o in outcomes)
    assert "representation number: 3" in lines
    witness = Word(outcomes[-1]["word"])
    assert represents(witness, graph_from_edges_text(graph_file.read_text()))


def test_repnum_unknown_above_bound(capsys, tmp_path):
    graph_file = tmp_path / "c4.edges"
    graph_file.write_text("1 2\n2 3\n3 4\n1 4\n")
    code, out, _ = run(capsys, ["repnum", str(graph_file), "--max-k", "1"])
    assert code == 1
    assert "unknown above k = 1" in out


def test_repnum_resource_limit(capsys, tmp_path):
    graph_file = tmp_path / "c4.edges"
    graph_file.write_text("1 2\n2 3\n3 4\n1 4\n")
    code, out, err = run(capsys, ["repnum", str(graph_file), "--max-k", "3", "--budget", "4"])
    assert code == 2
    outcomes = [json.loads(ln) for ln in out.strip().splitlines()]
    assert outcomes[-1]["result"] == "resource-limit"
    assert "budget" in err


def test_repnum_symmetry_flags(capsys, tmp_path):
    graph_file = tmp_path / "c4.edges"
    graph_file.write_text("1 2\n2 3\n3 4\n1 4\n")
    base = run(capsys, ["repnum", str(graph_file), "--max-k", "2"])
    reduced = run(capsys, ["repnum", str(graph_file), "--max-k", "2",
                           "--use-automorphisms", "--use-reversal"])
    assert base[0] == 0 and reduced[0] == 0
    assert "representation number: 2" in base[1]
    assert "representation number: 2" in reduced[1]


def test_repnum_timings_flag(capsys, tmp_path):
    graph_file = tmp_path / "k2.edges"
    graph_file.write_text("1 2\n")
    code, out, _ = run(capsys, ["repnum", str(graph_file), "--max-k", "1", "--timings"])
    assert code == 0
    outcome = json.loads(out.splitlines()[0])
    assert outcome["millis"] >= 0


def test_missing_file_exits_2(capsys):
    code, _, err = run(capsys, ["check", "/nonexistent/w.txt", "/nonexistent/g.edges"])
    assert code == 2


def test_selftest_deterministic(capsys):
    code, out, _ = run(capsys, ["selftest", "--seed", "3", "--trials", "20"])
    assert code == 0
    assert "selftest passed (seed 3)" in out
    code, out2, _ = run(capsys, ["selftest", "--seed", "3", "--trials", "20"])
    assert out2 == out


def test_byte_determinism_of_gen_and_construct(capsys):
    first = run(capsys, ["gen", "cube", "-k", "3", "--format", "json"])[1]
    second = run(capsys, ["gen", "cube", "-k", "3", "--format", "json"])[1]
    assert first == second
    first = run(capsys, ["construct", "prism", "-n", "5"])[1]
    second = run(capsys, ["construct", "prism", "-n", "5"])[1]
    assert first == second
